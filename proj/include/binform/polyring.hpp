// Sparse multivariate polynomials over Q and dense matrices over Q or Q[f].
#pragma once

#include "binform/exactnum.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace binform {

/// Exponent vector of a monomial; length equals the ring arity.
using Exponents = std::vector<std::uint16_t>;

/// Graded-lexicographic comparison: total degree first, then the first
/// differing exponent (a larger exponent on an earlier variable wins).
/// Returns <0, 0, >0.
int grlex_compare(const Exponents& a, const Exponents& b);

/// Polynomial in a fixed number of variables with rational coefficients.
///
/// Terms are kept in decreasing graded-lex order with no stored zeros, so two
/// polynomials are equal exactly when their term lists are equal.
class MultiPoly {
 public:
  struct Term {
    Exponents exps;
    Rat coeff;
    bool operator==(const Term&) const = default;
  };

  MultiPoly() = default;
  explicit MultiPoly(std::size_t arity) : arity_(arity) {}

  static MultiPoly constant(std::size_t arity, const Rat& c);
  /// c * x_index
  static MultiPoly variable(std::size_t arity, std::size_t index, const Rat& c = 1);
  static MultiPoly monomial(Exponents exps, const Rat& c);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// True when every term has total degree `deg` (vacuously true for 0).
  bool is_homogeneous(int deg) const;
  /// Constant term.
  Rat constant_term() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const Rat& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }

  bool operator==(const MultiPoly& other) const = default;

 private:
  friend class PolyBuilder;
  void check_arity(const MultiPoly& other) const;
  std::size_t arity_ = 0;
  std::vector<Term> terms_;
};

/// Accumulates terms in any order and produces a canonical MultiPoly.
class PolyBuilder {
 public:
  explicit PolyBuilder(std::size_t arity);
  ~PolyBuilder();
  PolyBuilder(const PolyBuilder&) = delete;
  PolyBuilder& operator=(const PolyBuilder&) = delete;
  PolyBuilder(PolyBuilder&&) noexcept;
  PolyBuilder& operator=(PolyBuilder&&) noexcept;

  void add(const Exponents& exps, const Rat& c);
  void add(const MultiPoly& p, const Rat& scale = 1);
  MultiPoly build();

 private:
  struct Impl;
  std::size_t arity_;
  std::unique_ptr<Impl> impl_;
};

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_scale(const MultiPoly& p, const Rat& c);

/// Formal partial derivative with respect to variable `var`.
MultiPoly poly_partial(const MultiPoly& p, std::size_t var);

/// Exact evaluation; throws std::invalid_argument on arity mismatch.
Rat poly_eval(const MultiPoly& p, std::span<const Rat> point);

/// Human-readable form, e.g. "3/2*f0^2*f1 - f2".  Variables are named
/// prefix0, prefix1, ...
std::string to_string(const MultiPoly& p, std::string_view prefix = "f");

/// 64-bit FNV-1a of the canonical string, as 16 hex digits.
std::string poly_hash(const MultiPoly& p);

// Scalar-ring glue so that templates work over Rat and MultiPoly alike.

inline Rat zero_like(const Rat&) { return 0; }
inline Rat one_like(const Rat&) { return 1; }
inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.arity()); }
inline MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(p.arity(), 1); }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

template <typename S>
concept Scalar = requires(S a, const S& b, const Rat& c) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { a * c } -> std::convertible_to<S>;
  { zero_like(b) } -> std::convertible_to<S>;
  { one_like(b) } -> std::convertible_to<S>;
  { is_zero(b) } -> std::convertible_to<bool>;
};

/// Sums many ring elements.  For polynomials this avoids re-merging a growing
/// term list on every addition.
template <Scalar S>
class SumAccumulator {
 public:
  explicit SumAccumulator(const S& like) : sum_(zero_like(like)) {}
  void add(const S& x) { sum_ = sum_ + x; }
  S result() const { return sum_; }

 private:
  S sum_;
};

template <>
class SumAccumulator<MultiPoly> {
 public:
  explicit SumAccumulator(const MultiPoly& like) : builder_(like.arity()) {}
  void add(const MultiPoly& x) { builder_.add(x); }
  MultiPoly result() { return builder_.build(); }

 private:
  PolyBuilder builder_;
};

/// Dense row-major matrix over a scalar ring.  Square matrices are what the
/// operator algebra uses; rank works on any shape.
template <Scalar S>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const S& zero)
      : rows_(rows), cols_(cols), data_(rows * cols, zero_like(zero)) {
    if (rows == 0 || cols == 0) throw std::invalid_argument("Matrix: dimensions must be positive");
  }

  static Matrix identity(std::size_t n, const S& like) {
    Matrix m(n, n, like);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(like);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const S& any() const { return data_.front(); }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<S> data_;
};

template <Scalar S>
Matrix<S> mat_mul(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  Matrix<S> out(a.rows(), b.cols(), a.any());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const S& ail = a(i, l);
      if (is_zero(ail)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (is_zero(b(l, j))) continue;
        out(i, j) = out(i, j) + ail * b(l, j);
      }
    }
  }
  return out;
}

/// M^p by repeated multiplication; M^0 is the identity.
template <Scalar S>
Matrix<S> mat_pow(const Matrix<S>& m, int p) {
  if (!m.is_square()) throw std::invalid_argument("mat_pow: matrix is not square");
  if (p < 0) throw std::invalid_argument("mat_pow: negative exponent");
  if (p == 0) return Matrix<S>::identity(m.rows(), m.any());
  Matrix<S> out = m;
  for (int i = 1; i < p; ++i) out = mat_mul(out, m);
  return out;
}

template <Scalar S>
S mat_trace(const Matrix<S>& m) {
  if (!m.is_square()) throw std::invalid_argument("mat_trace: matrix is not square");
  S t = zero_like(m.any());
  for (std::size_t i = 0; i < m.rows(); ++i) t = t + m(i, i);
  return t;
}

/// tr(A*B) without forming the product.
template <Scalar S>
S trace_of_product(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    throw std::invalid_argument("trace_of_product: dimension mismatch");
  S t = zero_like(a.any());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j)) && !is_zero(b(j, i))) t = t + a(i, j) * b(j, i);
  return t;
}

using RatMatrix = Matrix<Rat>;
using PolyMatrix = Matrix<MultiPoly>;

/// Coefficients c_0..c_n of det(lambda*Id - M), c_n = 1, computed from the
/// power traces by Newton's identities.
std::vector<Rat> charpoly(const RatMatrix& m);

/// Rank by fraction-free (Bareiss) elimination after clearing row denominators.
std::size_t rank_exact(const RatMatrix& m);

/// Determinant by Bareiss elimination.
Rat det_exact(const RatMatrix& m);

/// Matrix built from explicit rows, for tests and small literals.
RatMatrix rat_matrix(const std::vector<std::vector<Rat>>& rows);

}  // namespace binform
