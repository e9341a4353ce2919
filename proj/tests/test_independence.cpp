#include "binform/combsum.hpp"
#include "binform/independence.hpp"
#include "binform/invariants.hpp"

#include "doctest.h"

using namespace binform;

namespace {

// Oracle: symbolic P_{k,r}, formal partial derivatives, then evaluation.
RatMatrix jacobian_symbolic(int k, const RatForm& at) {
  const PolyForm g = generic_form(2 * k);
  RatMatrix jac(k, 2 * k + 1, Rat(0));
  for (int r = 2; r <= k + 1; ++r) {
    const MultiPoly p = P(g, k, r);
    for (int s = 0; s <= 2 * k; ++s) jac(r - 2, s) = poly_eval(poly_partial(p, s), at.coeffs());
  }
  return jac;
}


}  // namespace

TEST_CASE("chain-rule Jacobian agrees with symbolic differentiation") {
  Sampler s(17);
  for (int k : {2, 4})
    for (int trial = 0; trial < 10; ++trial) {
      const RatForm f = s.integer_form(2 * k);
      CHECK(jacobian_chain(f, k) == jacobian_symbolic(k, f));
    }
  CHECK(jacobian_chain(unstable_form(4), 4) == jacobian_symbolic(4, unstable_form(4)));
}

TEST_CASE("Jacobian at the unstable form") {
  const RatMatrix j2 = jacobian_chain(unstable_form(2), 2);
  CHECK(j2(0, 1) == Rat(-1, 2));
  CHECK(j2(1, 0) == Rat(-3, 8));
  for (int k : {2, 4, 6}) {
    const RatMatrix jac = jacobian_chain(unstable_form(k), k);
    CHECK(jac == jacobian_closed_at_unstable(k));
    for (int r = 2; r <= k + 1; ++r)
      for (int s = 0; s <= 2 * k; ++s) {
        const bool on = s == k - r + 1;
        CHECK((jac(r - 2, s) != 0) == on);
        if (s > k - 1) CHECK(jac(r - 2, s) == 0);
      }
    CHECK(jacobian_chain(unstable_form(k), k, 3) == jac);
  }
  CHECK_THROWS(jacobian_chain(unstable_form(2), 4));
  CHECK_THROWS(jacobian_closed_at_unstable(3));
}

TEST_CASE("maximal minor") {
  CHECK(minor_Jhat(2) == Rat(-3, 16));
  for (int k : {2, 4, 6}) {
    Rat prod = 1;
    bool all_nonzero = true;
    for (int r = 2; r <= k + 1; ++r) {
      prod *= N(k, r);
      all_nonzero = all_nonzero && N(k, r) != 0;
    }
    const Rat minor = minor_Jhat(k);
    CHECK(minor == minor_prefactor(k) * prod);
    CHECK(minor_prefactor(k) != 0);
    CHECK((minor != 0) == all_nonzero);
    // Anti-diagonal: sign times the product of the single entries.
    const RatMatrix jac = jacobian_chain(unstable_form(k), k);
    Rat anti = neg_one_pow(k * (k - 1) / 2);
    for (int r = 2; r <= k + 1; ++r) anti *= jac(r - 2, k - r + 1);
    CHECK(minor == anti);
  }
}

TEST_CASE("independence certificates") {
  for (int k : {2, 4, 6}) {
    const auto rep = independence_certificate(k, true, 0);
    CHECK(rep.rank == static_cast<std::size_t>(k));
    CHECK(rep.pass);
    CHECK(rep.witness == unstable_form(k));
    CHECK(rep.n_values.size() == static_cast<std::size_t>(k));
    REQUIRE(rep.random_point.has_value());
    CHECK(rep.random_point->rank == static_cast<std::size_t>(k));
  }
  CHECK(independence_certificate(2).minor == Rat(-3, 16));
  CHECK_THROWS(independence_certificate(3));
}
