#include "binform/independence.hpp"

#include "binform/combsum.hpp"
#include "binform/invariants.hpp"

#include <thread>

namespace binform {

namespace {

void check_k(int k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be even and >= 2");
}

}  // namespace

RatMatrix jacobian_chain(const RatForm& form, int k, unsigned jobs) {
  check_k(k);
  if (form.degree() != 2 * k) throw std::invalid_argument("jacobian_chain: form must have degree 2k");
  const RatMatrix l = L_matrix(form, k);
  const int dim = k + 1;

  // powers[q] = L^q for q = 0..k
  std::vector<RatMatrix> powers{RatMatrix::identity(dim, Rat(0))};
  for (int q = 1; q <= k; ++q) powers.push_back(mat_mul(powers.back(), l));

  // d[L]_{ji}/df_s is nonzero only for s = j - i + k.
  RatMatrix entry_derivative(dim, dim, Rat(0));  // (j, i) -> T_{j-i+k, i}^{2k,k,k}
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < dim; ++i) entry_derivative(j, i) = t_coeff(j - i + k, i, 2 * k, k, k);

  RatMatrix jac(k, 2 * k + 1, Rat(0));
  auto fill_row = [&](int r) {
    const RatMatrix& pw = powers[r - 1];
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        if (sgn(pw(i, j)) == 0) continue;
        const int s = j - i + k;
        jac(r - 2, s) += pw(i, j) * entry_derivative(j, i);
      }
    }
    for (int s = 0; s <= 2 * k; ++s) jac(r - 2, s) *= r;
  };

  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(k)));
  if (jobs == 1) {
    for (int r = 2; r <= k + 1; ++r) fill_row(r);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (int r = 2 + static_cast<int>(w); r <= k + 1; r += static_cast<int>(jobs)) fill_row(r);
      });
    }
    for (auto& t : workers) t.join();
  }
  return jac;
}

RatMatrix jacobian_closed_at_unstable(int k) {
  check_k(k);
  RatMatrix jac(k, 2 * k + 1, Rat(0));
  const Int central = binom_ext(2 * k, k + 1);
  for (int r = 2; r <= k + 1; ++r) {
    const int s = k - r + 1;
    Int den = binom_ext(2 * k, k + r - 1);
    Int central_pow;
    mpz_pow_ui(central_pow.get_mpz_t(), central.get_mpz_t(), static_cast<unsigned long>(r - 1));
    den *= central_pow;
    const int sign = neg_one_pow(r * (r - 1) / 2);
    jac(r - 2, s) = make_rat(Int(r * sign) * N(k, r), den);
  }
  return jac;
}

Rat minor_Jhat(int k) {
  const RatMatrix jac = jacobian_chain(unstable_form(k), k);
  RatMatrix square(k, k, Rat(0));
  for (int r = 0; r < k; ++r)
    for (int s = 0; s < k; ++s) square(r, s) = jac(r, s);
  return det_exact(square);
}

Rat minor_prefactor(int k) {
  check_k(k);
  // One nonzero entry per row, on the anti-diagonal of the k x k block.
  Rat factor = neg_one_pow(k * (k - 1) / 2);
  const Int central = binom_ext(2 * k, k + 1);
  for (int r = 2; r <= k + 1; ++r) {
    Int den = binom_ext(2 * k, k + r - 1);
    for (int t = 1; t < r; ++t) den *= central;
    factor *= make_rat(Int(r * neg_one_pow(r * (r - 1) / 2)), den);
  }
  return factor;
}

IndependenceReport independence_certificate(int k, bool random_point, std::uint64_t seed,
                                            unsigned jobs) {
  check_k(k);
  IndependenceReport report;
  report.k = k;
  report.expected = static_cast<std::size_t>(k);
  report.witness = unstable_form(k);
  const RatMatrix jac = jacobian_chain(report.witness, k, jobs);
  report.rank = rank_exact(jac);
  RatMatrix square(k, k, Rat(0));
  for (int r = 0; r < k; ++r)
    for (int s = 0; s < k; ++s) square(r, s) = jac(r, s);
  report.minor = det_exact(square);
  for (int r = 2; r <= k + 1; ++r) report.n_values[r] = N(k, r);
  report.pass = report.rank == report.expected;
  if (random_point) {
    Sampler sampler(seed);
    RatForm form = sampler.integer_form(2 * k);
    const std::size_t rank = rank_exact(jacobian_chain(form, k, jobs));
    report.random_point = IndependenceReport::RandomPoint{seed, std::move(form), rank};
  }
  return report;
}

}  // namespace binform
