// Exact integers and rationals, and the extended factorial convention.
//
// n! is the ordinary factorial for n >= 0 and 0 for n < 0; likewise 1/n! is
// 0 for n < 0.  With this convention n!/n! = [n >= 0] and every binomial
// coefficient binom(n, k) vanishes unless 0 <= k <= n, so sums over all of Z
// have finite support.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace binform {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with den > 0.
using Rat = mpq_class;

/// Builds num/den in canonical form.  Throws std::domain_error if den == 0.
Rat make_rat(const Int& num, const Int& den = 1);

/// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rat& q);
std::string to_string(const Int& z);

/// Parses "p", "-p" or "p/q" (whitespace around tokens allowed).
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(std::string_view text);

/// True when q has denominator 1.
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Numerator of an integral rational; throws std::logic_error otherwise.
Int to_integer(const Rat& q);

inline int sign(const Int& z) { return sgn(z); }
inline int sign(const Rat& q) { return sgn(q); }

// Extended factorial convention ------------------------------------------

/// n! for n >= 0, 0 for n < 0.
Int fact_ext(std::int64_t n);

/// 1/n! for n >= 0, 0 for n < 0.
Rat inv_fact_ext(std::int64_t n);

/// n!/(k!(n-k)!) under the convention; zero unless 0 <= k <= n.
Int binom_ext(std::int64_t n, std::int64_t k);

/// prod nums[i]! * prod 1/dens[j]!, each factor taken under the convention.
Rat fact_product(std::span<const std::int64_t> nums, std::span<const std::int64_t> dens);
Rat fact_product(std::initializer_list<std::int64_t> nums,
                 std::initializer_list<std::int64_t> dens);

/// Factorials are memoized up to this bound; larger arguments are computed
/// directly.  Default 100000.  The table grows lazily, so the cap only
/// bounds memory, it does not trigger precomputation.
void set_factorial_cache_cap(std::int64_t cap);
std::int64_t factorial_cache_cap();

/// (-1)^n as an int.
constexpr int neg_one_pow(std::int64_t n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace binform
