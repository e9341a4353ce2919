// Alternating binomial sums.
//
//   ups_m(a_1..a_m) = sum_k (-1)^k prod_i binom(2a_i, a_i + k)
//   N(k, r)         = sum_{j=0}^{k-r+1} (-1)^(rj) prod_{t=0}^{r-1} binom(k, j+t)
//
// All binomials follow the extended convention, so every function is total.
#pragma once

#include "binform/exactnum.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace binform {

/// Direct summation.  Support: -min(a) <= k <= min(a); empty when any a_i < 0.
/// Throws std::invalid_argument for an empty list.
Int ups_direct(std::span<const std::int64_t> a);

/// Through the two-argument reduction
///   ups_m(a) = sum_l (2a1)!(2a2)! / ((a1+a2)!(2l)!(a1-l)!(a2-l)!) ups_{m-1}(l, a3..am)
/// with ups_1(a) = [a == 0].  Support: 0 <= l <= min(a1, a2).  Memoized on
/// the sorted argument list; the memo is shared and thread-safe.  Lists of
/// length 1 are answered by ups_direct.
Int ups_recursive(std::span<const std::int64_t> a);

/// ups_2 closed form: (2a1)!(2a2)! / ((a1+a2)! a1! a2!).
Int von_szily(std::int64_t a1, std::int64_t a2);

/// ups_3 closed form:
///   (2a1)!(2a2)!(2a3)!(a1+a2+a3)! / ((a1+a2)!(a1+a3)!(a2+a3)! a1! a2! a3!).
Int dixon(std::int64_t a1, std::int64_t a2, std::int64_t a3);

/// Requires k >= 2 and 2 <= r <= k+1.
Int N(std::int64_t k, std::int64_t r);

/// N(2p, 2q+1) rewritten through ups_{2q+1}(p-q, ..., p+q):
///   (-1)^(p+q) (2p)!^(2q+1) / prod_{nu=0}^{2q} (2(p-q+nu))!  *  ups_{2q+1}(p-q, ..., p+q).
/// Requires 1 <= q <= p.
Rat N_via_ups(std::int64_t p, std::int64_t q);

/// The argument list p-q, p-q+1, ..., p+q (2q+1 entries).
std::vector<std::int64_t> N_ups_arguments(std::int64_t p, std::int64_t q);

/// Number of entries currently memoized by ups_recursive.
std::size_t ups_memo_size();

}  // namespace binform
