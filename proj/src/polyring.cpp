#include "binform/polyring.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace binform {

namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : e) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

int degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool term_greater(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return grlex_compare(a.exps, b.exps) > 0;
}

}  // namespace

int grlex_compare(const Exponents& a, const Exponents& b) {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// PolyBuilder ----------------------------------------------------------------

struct PolyBuilder::Impl {
  std::unordered_map<Exponents, Rat, ExponentsHash> acc;
};

PolyBuilder::PolyBuilder(std::size_t arity) : arity_(arity), impl_(std::make_unique<Impl>()) {}
PolyBuilder::~PolyBuilder() = default;
PolyBuilder::PolyBuilder(PolyBuilder&&) noexcept = default;
PolyBuilder& PolyBuilder::operator=(PolyBuilder&&) noexcept = default;

void PolyBuilder::add(const Exponents& exps, const Rat& c) {
  if (exps.size() != arity_) throw std::invalid_argument("PolyBuilder: arity mismatch");
  if (sgn(c) == 0) return;
  auto [it, inserted] = impl_->acc.try_emplace(exps, c);
  if (!inserted) it->second += c;
}

void PolyBuilder::add(const MultiPoly& p, const Rat& scale) {
  if (p.arity() != arity_) throw std::invalid_argument("PolyBuilder: arity mismatch");
  if (sgn(scale) == 0) return;
  for (const auto& t : p.terms()) add(t.exps, t.coeff * scale);
}

MultiPoly PolyBuilder::build() {
  MultiPoly out(arity_);
  out.terms_.reserve(impl_->acc.size());
  for (auto& [exps, c] : impl_->acc) {
    if (sgn(c) != 0) out.terms_.push_back({exps, std::move(c)});
  }
  impl_->acc.clear();
  std::sort(out.terms_.begin(), out.terms_.end(), term_greater);
  return out;
}

// MultiPoly ------------------------------------------------------------------

MultiPoly MultiPoly::constant(std::size_t arity, const Rat& c) {
  MultiPoly p(arity);
  if (sgn(c) != 0) p.terms_.push_back({Exponents(arity, 0), c});
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index, const Rat& c) {
  if (index >= arity) throw std::invalid_argument("MultiPoly::variable: index out of range");
  Exponents e(arity, 0);
  e[index] = 1;
  return monomial(std::move(e), c);
}

MultiPoly MultiPoly::monomial(Exponents exps, const Rat& c) {
  MultiPoly p(exps.size());
  if (sgn(c) != 0) p.terms_.push_back({std::move(exps), c});
  return p;
}

void MultiPoly::check_arity(const MultiPoly& other) const {
  if (arity_ != other.arity_)
    throw std::invalid_argument("MultiPoly: arity mismatch (" + std::to_string(arity_) + " vs " +
                                std::to_string(other.arity_) + ")");
}

int MultiPoly::total_degree() const {
  // Leading term has the largest degree under grlex.
  return terms_.empty() ? -1 : degree_of(terms_.front().exps);
}

bool MultiPoly::is_homogeneous(int deg) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [deg](const Term& t) { return degree_of(t.exps) == deg; });
}

Rat MultiPoly::constant_term() const {
  if (!terms_.empty() && degree_of(terms_.back().exps) == 0) return terms_.back().coeff;
  return 0;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_arity(other);
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    const int cmp = grlex_compare(a->exps, b->exps);
    if (cmp > 0) {
      merged.push_back(std::move(*a++));
    } else if (cmp < 0) {
      merged.push_back(*b++);
    } else {
      Rat c = a->coeff + b->coeff;
      if (sgn(c) != 0) merged.push_back({std::move(a->exps), std::move(c)});
      ++a;
      ++b;
    }
  }
  for (; a != terms_.end(); ++a) merged.push_back(std::move(*a));
  for (; b != other.terms_.end(); ++b) merged.push_back(*b);
  terms_ = std::move(merged);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) { return *this += -other; }

MultiPoly& MultiPoly::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_arity(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly(a.arity());
  // A single-term factor is a shift; grlex is a monomial order, so the
  // product stays sorted.
  if (a.size() == 1 || b.size() == 1) {
    const auto& mono = a.size() == 1 ? a.terms().front() : b.terms().front();
    const auto& poly = a.size() == 1 ? b : a;
    MultiPoly out(a.arity());
    out.terms_.reserve(poly.size());
    for (const auto& t : poly.terms()) {
      Exponents e = t.exps;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(e[i] + mono.exps[i]);
      out.terms_.push_back({std::move(e), t.coeff * mono.coeff});
    }
    return out;
  }
  PolyBuilder builder(a.arity());
  Exponents e(a.arity());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ta.exps[i] + tb.exps[i]);
      builder.add(e, ta.coeff * tb.coeff);
    }
  }
  return builder.build();
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }
MultiPoly poly_scale(const MultiPoly& p, const Rat& c) { return p * c; }

MultiPoly poly_partial(const MultiPoly& p, std::size_t var) {
  if (var >= p.arity()) throw std::invalid_argument("poly_partial: variable index out of range");
  PolyBuilder builder(p.arity());
  for (const auto& t : p.terms()) {
    if (t.exps[var] == 0) continue;
    Exponents e = t.exps;
    const Rat c = t.coeff * static_cast<unsigned long>(e[var]);
    --e[var];
    builder.add(e, c);
  }
  return builder.build();
}

Rat poly_eval(const MultiPoly& p, std::span<const Rat> point) {
  if (point.size() != p.arity()) throw std::invalid_argument("poly_eval: arity mismatch");
  Rat total = 0;
  Rat power;
  for (const auto& t : p.terms()) {
    Rat value = t.coeff;
    for (std::size_t i = 0; i < point.size() && sgn(value) != 0; ++i) {
      if (t.exps[i] == 0) continue;
      mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), t.exps[i]);
      mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), t.exps[i]);
      value *= power;
    }
    total += value;
  }
  return total;
}

std::string to_string(const MultiPoly& p, std::string_view prefix) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rat c = t.coeff;
    if (first) {
      if (sgn(c) < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
      c = abs(c);
    }
    first = false;
    const bool constant = std::all_of(t.exps.begin(), t.exps.end(), [](auto x) { return x == 0; });
    bool need_star = false;
    if (c != 1 || constant) {
      os << to_string(c);
      need_star = true;
    }
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (need_star) os << "*";
      os << prefix << i;
      if (t.exps[i] > 1) os << "^" << t.exps[i];
      need_star = true;
    }
  }
  return os.str();
}

std::string poly_hash(const MultiPoly& p) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : to_string(p)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Exact linear algebra ---------------------------------------------------------

std::vector<Rat> charpoly(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly: matrix is not square");
  const std::size_t n = m.rows();
  // power_traces[j] = tr(M^j)
  std::vector<Rat> power_traces(n + 1);
  RatMatrix power = m;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j > 1) power = mat_mul(power, m);
    power_traces[j] = mat_trace(power);
  }
  // i*e_i = sum_{j=1..i} (-1)^{j-1} e_{i-j} p_j
  std::vector<Rat> e(n + 1);
  e[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    Rat acc = 0;
    for (std::size_t j = 1; j <= i; ++j) {
      Rat term = e[i - j] * power_traces[j];
      if (j % 2 == 0) acc -= term;
      else acc += term;
    }
    e[i] = acc / static_cast<unsigned long>(i);
  }
  // det(lambda - M) = sum_i (-1)^i e_i lambda^{n-i}
  std::vector<Rat> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i) coeffs[n - i] = (i % 2 == 0) ? e[i] : Rat(-e[i]);
  return coeffs;
}

namespace {

struct BareissResult {
  std::size_t rank = 0;
  int swap_sign = 1;
  Int last_pivot = 1;
};

// Scales each row to integers; `scale` receives the product of the row
// multipliers.
std::vector<std::vector<Int>> clear_denominators(const RatMatrix& m, Int& scale) {
  std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
  scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  return a;
}

BareissResult bareiss(std::vector<std::vector<Int>>& a) {
  BareissResult res;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      res.swap_sign = -res.swap_sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace

std::size_t rank_exact(const RatMatrix& m) {
  Int scale;
  auto a = clear_denominators(m, scale);
  return bareiss(a).rank;
}

Rat det_exact(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det_exact: matrix is not square");
  Int scale;
  auto a = clear_denominators(m, scale);
  const auto res = bareiss(a);
  if (res.rank < m.rows()) return 0;
  return make_rat(res.last_pivot * res.swap_sign, scale);
}

RatMatrix rat_matrix(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("rat_matrix: empty");
  RatMatrix m(rows.size(), rows.front().size(), Rat(0));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("rat_matrix: ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

}  // namespace binform
