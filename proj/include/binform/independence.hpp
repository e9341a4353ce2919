// Jacobian-rank certificate for the algebraic independence of
// P_{k,2}, ..., P_{k,k+1} on forms of degree 2k (k even).
//
// Rows are indexed by r = 2..k+1 (row r-2), columns by the coefficient
// index s = 0..2k.  By the chain rule and cyclicity of the trace
//
//   dP_{k,r}/df_s = r * sum_{i,j} [L^(r-1)]_{ij} d[L]_{ji}/df_s,
//   d[L]_{ji}/df_s = [s = j-i+k] * T_{j-i+k, i}^{2k,k,k},
//
// so only numeric (k+1)-dimensional matrix powers are needed.
#pragma once

#include "binform/forms.hpp"
#include "binform/polyring.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace binform {

/// k x (2k+1) Jacobian of (P_{k,2}, ..., P_{k,k+1}) at the numeric form F of
/// degree 2k.  Rows may be computed on `jobs` threads; the result does not
/// depend on it.
RatMatrix jacobian_chain(const RatForm& form, int k, unsigned jobs = 1);

/// The Jacobian at x1^(k-1) x2^(k+1) in closed form:
///   r (-1)^binom(r,2) [s = k-r+1] / (binom(2k, k+r-1) binom(2k, k+1)^(r-1)) * N(k, r).
RatMatrix jacobian_closed_at_unstable(int k);

/// Determinant of columns 0..k-1 of the Jacobian at the unstable form.
Rat minor_Jhat(int k);

/// The nonzero factor c(k) with minor_Jhat(k) = c(k) * prod_{r=2}^{k+1} N(k, r).
Rat minor_prefactor(int k);

struct IndependenceReport {
  int k = 0;
  std::size_t rank = 0;
  std::size_t expected = 0;
  Rat minor;
  std::map<int, Int> n_values;  // r -> N(k, r)
  RatForm witness{0, Rat(0)};
  bool pass = false;
  struct RandomPoint {
    std::uint64_t seed;
    RatForm form;
    std::size_t rank;
  };
  std::optional<RandomPoint> random_point;
};

/// Rank of the chain-rule Jacobian at the unstable form, plus optionally at a
/// seeded random integer form.  pass iff the unstable-form rank equals k.
IndependenceReport independence_certificate(int k, bool random_point = false,
                                            std::uint64_t seed = 0, unsigned jobs = 1);

}  // namespace binform
