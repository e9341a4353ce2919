#include "binform/sixj.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace binform {

Int S(std::int64_t k, std::int64_t n) {
  if (k < 2 || n < k)
    throw std::invalid_argument("S: need n >= k >= 2, got k=" + std::to_string(k) + ", n=" + std::to_string(n));
  const std::int64_t lo = std::max(3 * k, k + n);
  const std::int64_t hi = 2 * k + n;
  if (lo > hi) return 0;
  // Walk j upward, updating both binomials by exact ratios.
  Int outer = binom_ext(lo + 1, 3 * k + 1);  // binom(j+1, 3k+1)
  Int inner = binom_ext(k, lo - k - n);      // binom(k, j-k-n)
  Int sum = 0;
  Int term;
  for (std::int64_t j = lo;; ++j) {
    term = inner * inner;
    term *= inner;
    term *= outer;
    if (j % 2 == 0) sum += term;
    else sum -= term;
    if (j == hi) break;
    // binom(j+2, 3k+1) = binom(j+1, 3k+1) (j+2) / (j+1-3k)
    outer *= static_cast<unsigned long>(j + 2);
    mpz_divexact_ui(outer.get_mpz_t(), outer.get_mpz_t(), static_cast<unsigned long>(j + 1 - 3 * k));
    // binom(k, t+1) = binom(k, t) (k-t) / (t+1), t = j-k-n
    const std::int64_t t = j - k - n;
    inner *= static_cast<unsigned long>(k - t);
    mpz_divexact_ui(inner.get_mpz_t(), inner.get_mpz_t(), static_cast<unsigned long>(t + 1));
  }
  return sum;
}

namespace {

// Runs body(i) for i in [0, count) over `jobs` threads with a static
// interleaved schedule.
template <typename Body>
void parallel_for(std::int64_t count, unsigned jobs, Body body) {
  jobs = std::max(1u, jobs);
  if (jobs == 1 || count <= 1) {
    for (std::int64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([=] {
      for (std::int64_t i = w; i < count; i += jobs) body(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace

std::vector<std::pair<std::int64_t, std::int64_t>> scan_zeros(std::int64_t k_max, std::int64_t n_max,
                                                              unsigned jobs) {
  if (k_max < 2) throw std::invalid_argument("scan_zeros: k_max must be >= 2");
  const std::int64_t rows = k_max - 1;
  std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> per_k(rows);
  parallel_for(rows, jobs, [&](std::int64_t idx) {
    const std::int64_t k = idx + 2;
    for (std::int64_t n = k; n <= n_max; ++n)
      if (S(k, n) == 0) per_k[idx].emplace_back(k, n);
  });
  std::vector<std::pair<std::int64_t, std::int64_t>> zeros;
  for (auto& v : per_k) zeros.insert(zeros.end(), v.begin(), v.end());
  return zeros;
}

SignGrid::SignGrid(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("SignGrid: dimensions must be positive");
  cells_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

std::size_t SignGrid::index(int r, int c) const {
  if (r < 1 || r > rows_ || c < 1 || c > cols_) throw std::out_of_range("SignGrid: cell out of range");
  return static_cast<std::size_t>(r - 1) * cols_ + (c - 1);
}

std::vector<std::pair<int, int>> SignGrid::zero_cells() const {
  std::vector<std::pair<int, int>> out;
  for (int r = 1; r <= rows_; ++r)
    for (int c = 1; c <= cols_; ++c)
      if (at(r, c) == 0) out.emplace_back(r, c);
  return out;
}

SignGrid sign_grid(int rows, int cols, unsigned jobs) {
  SignGrid grid(rows, cols);
  parallel_for(rows, jobs, [&](std::int64_t idx) {
    const int r = static_cast<int>(idx) + 1;
    for (int c = 1; c <= cols; ++c) grid.set(r, c, sgn(S(SignGrid::k_of(r, c), SignGrid::n_of(r, c))));
  });
  return grid;
}

void write_ppm(std::ostream& out, const SignGrid& grid) {
  out << "P3\n" << grid.cols() << ' ' << grid.rows() << "\n255\n";
  for (int r = 1; r <= grid.rows(); ++r) {
    for (int c = 1; c <= grid.cols(); ++c) {
      const int s = grid.at(r, c);
      out << (s == 0 ? "255 255 255\n" : s > 0 ? "190 190 190\n" : "60 60 60\n");
    }
  }
}

void write_csv(std::ostream& out, const SignGrid& grid) {
  out << "r,c,k,n,sign\n";
  for (int r = 1; r <= grid.rows(); ++r)
    for (int c = 1; c <= grid.cols(); ++c)
      out << r << ',' << c << ',' << SignGrid::k_of(r, c) << ',' << SignGrid::n_of(r, c) << ','
          << grid.at(r, c) << '\n';
}

}  // namespace binform
