#include "binform/certificates.hpp"
#include "binform/invariants.hpp"

#include "doctest.h"

using namespace binform;

namespace {

RatForm basis(int n, int j) {
  RatForm g(n, Rat(0));
  g[j] = 1;
  return g;
}

// Oracle: column j of L is the transvectant (F, x1^(n-j) x2^j)_k.
RatMatrix L_oracle(const RatForm& f, int n) {
  const int k = f.order() / 2;
  RatMatrix m(n + 1, n + 1, Rat(0));
  for (int j = 0; j <= n; ++j) {
    const RatForm col = transvectant(f, basis(n, j), k);
    for (int i = 0; i <= n; ++i) m(i, j) = col[i];
  }
  return m;
}

std::vector<Rat> point_of(const RatForm& f) { return f.coeffs(); }

}  // namespace

TEST_CASE("L matrix examples") {
  RatForm x2_4(4, Rat(0));
  x2_4[4] = 1;
  const RatMatrix l = L_matrix(x2_4, 2);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) CHECK(l(i, j) == ((i == 2 && j == 0) ? Rat(1) : Rat(0)));

  const RatMatrix u = L_matrix(unstable_form(2), 2);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) {
      Rat expect = 0;
      if (i == 1 && j == 0) expect = Rat(1, 2);
      if (i == 2 && j == 1) expect = Rat(-1, 4);
      CHECK(u(i, j) == expect);
    }

  const PolyMatrix g = L_matrix(generic_form(4), 2);
  CHECK(g(0, 0) == MultiPoly::variable(5, 2, Rat(1, 6)));

  CHECK_THROWS(L_matrix(RatForm(6, Rat(1)), 3));  // k = 3 is odd
  CHECK_THROWS(L_matrix(RatForm(4, Rat(1)), 1));  // n < k
}

TEST_CASE("L matrix columns are transvectants") {
  Sampler s(41);
  for (int k : {2, 4, 6})
    for (int n = k; n <= k + 4; ++n) {
      const RatForm f = s.integer_form(2 * k);
      CHECK(L_matrix(f, n) == L_oracle(f, n));
    }
}

TEST_CASE("P examples") {
  const RatForm f({1, 0, 0, 0, 1});
  CHECK(P(f, 2, 2) == 2);
  CHECK(P(f, 2, 3) == 0);
  for (int k : {2, 4, 6})
    for (int p = 1; p <= 6; ++p) CHECK(P(unstable_form(k), k, p) == 0);
  CHECK_THROWS(P(f, 2, 0));
}

TEST_CASE("P_{n,1} vanishes") {
  for (int k : {2, 4})
    for (int n = k; n <= k + 3; ++n) CHECK(P(generic_form(2 * k), n, 1).is_zero());
}

TEST_CASE("H examples and Newton consistency") {
  for (int k : {2, 4}) {
    const auto h = H(unstable_form(k), k + 1);
    for (std::size_t i = 0; i + 1 < h.size(); ++i) CHECK(h[i] == 0);
    CHECK(h.back() == 1);
  }
  Sampler s(13);
  for (int trial = 0; trial < 10; ++trial) {
    const RatForm f = s.integer_form(4);
    for (int n = 2; n <= 5; ++n) {
      const auto h = H(f, n);
      REQUIRE(static_cast<int>(h.size()) == n + 2);
      CHECK(h[n + 1] == 1);
      CHECK(h[n] == 0);  // no linear invariant
      CHECK(hilbert_invariant(f, n, 1) == 0);
      // e_p = (-1)^p c_{n+1-p};  p e_p = sum_{j=1}^p (-1)^(j-1) e_{p-j} P_j
      std::vector<Rat> e(n + 2);
      for (int p = 0; p <= n + 1; ++p) e[p] = h[n + 1 - p] * neg_one_pow(p);
      for (int p = 1; p <= n + 1; ++p) {
        Rat rhs = 0;
        for (int j = 1; j <= p; ++j) rhs += e[p - j] * P(f, n, j) * neg_one_pow(j - 1);
        CHECK(e[p] * p == rhs);
        CHECK(hilbert_invariant(f, n, p) == h[n + 1 - p]);
      }
    }
  }
}

TEST_CASE("Shioda invariants") {
  RatForm f(8, Rat(0));
  f[0] = f[8] = 1;
  CHECK(shioda_J(2, f) == 2);
  const PolyForm g = generic_form(8);
  CHECK(shioda_J(2, g) == P(g, 4, 2));
  CHECK(shioda_J(3, g) == P(g, 4, 3));
  CHECK_THROWS(shioda_J(6, g));
  CHECK_THROWS(shioda_J(2, generic_form(4)));
}

TEST_CASE("symbolic identities") {
  for (const auto& id : quartic_identities()) {
    INFO(id.name);
    CHECK(id.holds());
  }
  for (const auto& id : octavic_trace_identities()) {
    INFO(id.name);
    CHECK(id.holds());
  }
}

TEST_CASE("closed form of P_{n,2}") {
  for (int k : {2, 4}) {
    CHECK(p_n2_constant(k, k) == 1);
    const PolyForm g = generic_form(2 * k);
    for (int n = k; n <= k + 4; ++n) CHECK(p_n2_closed(g, n) == P(g, n, 2));
  }
  for (int n = 2; n <= 6; ++n) CHECK(p_n2_closed(unstable_form(2), n) == 0);
}

TEST_CASE("SL2 invariance") {
  Sampler s(55);
  for (int trial = 0; trial < 20; ++trial) {
    const UniModular g = s.sl2();
    const RatForm q = s.integer_form(4);
    const RatForm o = s.integer_form(8);
    for (int p = 2; p <= 4; ++p) {
      CHECK(P(mobius_act(g, q), 3, p) == P(q, 3, p));
      CHECK(P(mobius_act(g, o), 4, p) == P(o, 4, p));
    }
    for (int idx = 2; idx <= 5; ++idx) CHECK(shioda_J(idx, mobius_act(g, o)) == shioda_J(idx, o));
  }
}

TEST_CASE("the 6j zero and the star-triangle proportionality") {
  CHECK(P(generic_form(4), 3, 3).is_zero());
  Sampler s(66);
  for (auto [k, n] : {std::pair{2, 4}, {2, 5}, {4, 5}, {4, 6}})
    for (int trial = 0; trial < 5; ++trial) {
      const RatForm f = s.integer_form(2 * k), g = s.integer_form(2 * k);
      CHECK(P(f, n, 3) * P(g, k, 3) - P(g, n, 3) * P(f, k, 3) == 0);
    }
}

TEST_CASE("symbolic range d = 12, p = 7") {
  const PolyForm g = generic_form(12);
  const MultiPoly p7 = P(g, 6, 7);
  CHECK(p7.is_homogeneous(7));
  Sampler s(3);
  const RatForm f = s.integer_form(12, -3, 3);
  CHECK(poly_eval(p7, point_of(f)) == P(f, 6, 7));
}
