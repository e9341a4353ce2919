#include "binform/transvect.hpp"

#include "doctest.h"

using namespace binform;

namespace {

RatForm monomial(int order, int i) {
  RatForm f(order, Rat(0));
  f[i] = 1;
  return f;
}

// Oracle: the Omega-process on the product space.  For
// F(x) G(y) written as a bivariate coefficient table, apply
// Omega = d/dx1 d/dy2 - d/dx2 d/dy1 k times, then set y = x.
RatForm omega_oracle(const RatForm& f, const RatForm& g, int k) {
  const int m = f.order(), n = g.order();
  // table[a][b] : coefficient of x2^a y2^b with x1 exponent m-deg..., tracked via orders
  struct Term {
    int ex1, ex2, ey1, ey2;
    Rat c;
  };
  std::vector<Term> terms;
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= n; ++j)
      if (f[i] != 0 && g[j] != 0) terms.push_back({m - i, i, n - j, j, f[i] * g[j]});
  for (int step = 0; step < k; ++step) {
    std::vector<Term> next;
    for (const auto& t : terms) {
      if (t.ex1 > 0 && t.ey2 > 0) next.push_back({t.ex1 - 1, t.ex2, t.ey1, t.ey2 - 1, t.c * t.ex1 * t.ey2});
      if (t.ex2 > 0 && t.ey1 > 0) next.push_back({t.ex1, t.ex2 - 1, t.ey1 - 1, t.ey2, -t.c * t.ex2 * t.ey1});
    }
    terms = std::move(next);
  }
  RatForm out(m + n - 2 * k, Rat(0));
  for (const auto& t : terms) out[t.ex2 + t.ey2] += t.c;
  return out * fact_product({m - k, n - k}, {m, n});
}

}  // namespace

TEST_CASE("transvectants of monomials and simple forms") {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n)
      for (int k = 0; k <= std::min(m, n); ++k) {
        RatForm expect(m + n - 2 * k, Rat(0));
        expect[n - k] = 1;  // x1^(m-k) x2^(n-k)
        CHECK(transvectant(monomial(m, 0), monomial(n, n), k) == expect);
      }
  const RatForm f({1, 0, 0, 0, 1});  // x1^4 + x2^4
  CHECK(transvectant(f, f, 4) == RatForm({Rat(2)}));
  CHECK(transvectant(f, f, 2) == RatForm({0, 0, 2, 0, 0}));
  CHECK_THROWS(transvectant(f, f, 5));
  CHECK_THROWS(transvectant(f, f, -1));
}

TEST_CASE("transvectant agrees with the Omega process") {
  Sampler s(8);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + static_cast<int>(s.integer(0, 7)), n = 1 + static_cast<int>(s.integer(0, 7));
    const RatForm f = s.integer_form(m), g = s.integer_form(n);
    for (int k = 0; k <= std::min(m, n); ++k) CHECK(transvectant(f, g, k) == omega_oracle(f, g, k));
  }
}

TEST_CASE("T coefficients") {
  CHECK(t_coeff(2, 0, 4, 2, 2) == Rat(1, 6));
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) CHECK(t_coeff(0, 0, m, n, 0) == 1);
  CHECK_THROWS_AS(t_coeff(5, 0, 4, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(t_coeff(0, 0, 2, 2, 3), std::out_of_range);
  // Against the transvectant of monomials.
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= std::min(m, n); ++k)
        for (int i = 0; i <= m; ++i)
          for (int j = 0; j <= n; ++j) {
            const RatForm t = transvectant(monomial(m, i), monomial(n, j), k);
            const int e2 = i + j - k;
            for (int q = 0; q <= t.order(); ++q) CHECK(t[q] == (q == e2 ? t_coeff(i, j, m, n, k) : Rat(0)));
          }
}

TEST_CASE("T coefficient special case") {
  for (int k : {2, 4, 6})
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= k; ++j) {
        const int s = i - j + k;
        if (s < 0 || s > 2 * k) continue;
        const Rat expect = fact_product({k, k - i + j, k + i - j}, {2 * k, i, k - i}) * neg_one_pow(j);
        CHECK(t_coeff(s, j, 2 * k, k, k) == expect);
      }
}

TEST_CASE("transvectant symmetry and odd self-transvectants") {
  Sampler s(12);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 1 + static_cast<int>(s.integer(0, 7)), n = 1 + static_cast<int>(s.integer(0, 7));
    const RatForm f = s.integer_form(m), g = s.integer_form(n);
    for (int k = 0; k <= std::min(m, n); ++k)
      CHECK(transvectant(f, g, k) == transvectant(g, f, k) * Rat(neg_one_pow(k)));
  }
  for (int d = 1; d <= 8; ++d) {
    const PolyForm g = generic_form(d);
    for (int k = 1; k <= d; k += 2) CHECK(transvectant(g, g, k).is_zero());
  }
}

TEST_CASE("transvectants are SL2 equivariant") {
  Sampler s(77);
  for (int trial = 0; trial < 10; ++trial) {
    const UniModular g = s.sl2();
    const RatForm f = s.integer_form(4), h = s.integer_form(6);
    for (int k = 0; k <= 4; ++k)
      CHECK(transvectant(mobius_act(g, f), mobius_act(g, h), k) == mobius_act(g, transvectant(f, h, k)));
  }
}
