// Binary forms, x-graded covariant carriers and the SL2 action on them.
#pragma once

#include "binform/polyring.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace binform {

/// Homogeneous polynomial sum_i c_i x1^(order-i) x2^i.  Coefficients are the
/// plain monomial coefficients, with no binomial weights.
template <Scalar S>
class XPoly {
 public:
  /// Zero polynomial of the given order; `like` fixes the scalar ring (arity).
  XPoly(int order, const S& like) : coeffs_(checked_size(order), zero_like(like)) {}
  explicit XPoly(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("XPoly: needs at least one coefficient");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  int degree() const { return order(); }
  const std::vector<S>& coeffs() const { return coeffs_; }
  S& operator[](std::size_t i) { return coeffs_[i]; }
  const S& operator[](std::size_t i) const { return coeffs_[i]; }
  const S& any() const { return coeffs_.front(); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!binform::is_zero(c)) return false;
    return true;
  }

  XPoly& operator+=(const XPoly& other) {
    check_order(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + other.coeffs_[i];
    return *this;
  }
  XPoly& operator-=(const XPoly& other) {
    check_order(other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - other.coeffs_[i];
    return *this;
  }
  XPoly& operator*=(const Rat& c) {
    for (auto& x : coeffs_) x = x * c;
    return *this;
  }
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(XPoly a, const Rat& c) { return a *= c; }
  friend XPoly operator*(const Rat& c, XPoly a) { return a *= c; }

  bool operator==(const XPoly&) const = default;

 private:
  static std::size_t checked_size(int order) {
    if (order < 0) throw std::invalid_argument("XPoly: negative order");
    return static_cast<std::size_t>(order) + 1;
  }
  void check_order(const XPoly& other) const {
    if (other.order() != order()) throw std::invalid_argument("XPoly: order mismatch");
  }
  std::vector<S> coeffs_;
};

/// A binary form of degree d is an XPoly of order d.
template <Scalar S>
using BinaryForm = XPoly<S>;

using RatForm = XPoly<Rat>;
using PolyForm = XPoly<MultiPoly>;

/// Product of homogeneous polynomials (coefficient convolution).
template <Scalar S>
XPoly<S> xpoly_mul(const XPoly<S>& a, const XPoly<S>& b) {
  XPoly<S> out(a.order() + b.order(), a.any());
  for (int i = 0; i <= a.order(); ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; j <= b.order(); ++j) {
      if (is_zero(b[j])) continue;
      out[i + j] = out[i + j] + a[i] * b[j];
    }
  }
  return out;
}

/// d/dx1; the order drops by one (a constant differentiates to the zero
/// constant).
template <Scalar S>
XPoly<S> d_dx1(const XPoly<S>& p) {
  const int n = p.order();
  if (n == 0) return XPoly<S>(0, p.any());
  XPoly<S> out(n - 1, p.any());
  for (int i = 0; i < n; ++i) out[i] = p[i] * Rat(n - i);
  return out;
}

template <Scalar S>
XPoly<S> d_dx2(const XPoly<S>& p) {
  const int n = p.order();
  if (n == 0) return XPoly<S>(0, p.any());
  XPoly<S> out(n - 1, p.any());
  for (int i = 1; i <= n; ++i) out[i - 1] = p[i] * Rat(i);
  return out;
}

/// The generic form of degree d: coefficient i is the ring variable f_i of
/// Q[f_0..f_d].  Throws for d < 1.
PolyForm generic_form(int d);

/// x1^(k-1) x2^(k+1), i.e. f_s = [s = k+1]; k must be even and >= 2.
RatForm unstable_form(int k);

/// Substitutes numeric values for the ring variables of each coefficient.
RatForm specialize(const PolyForm& form, std::span<const Rat> point);

/// Same coefficients viewed as constant polynomials of the given arity.
PolyForm lift(const RatForm& form, std::size_t arity);

/// 2x2 rational matrix with determinant exactly 1.
class UniModular {
 public:
  /// Throws std::domain_error unless g11*g22 - g12*g21 == 1.
  UniModular(Rat g11, Rat g12, Rat g21, Rat g22);

  static UniModular identity() { return {1, 0, 0, 1}; }

  const Rat& g11() const { return m_[0]; }
  const Rat& g12() const { return m_[1]; }
  const Rat& g21() const { return m_[2]; }
  const Rat& g22() const { return m_[3]; }

  UniModular inverse() const;
  friend UniModular operator*(const UniModular& a, const UniModular& b);
  bool operator==(const UniModular&) const = default;

 private:
  std::vector<Rat> m_;
};

/// (g.F)(x) = F(g^-1 x).  A left action: g.(h.F) = (gh).F.
template <Scalar S>
XPoly<S> mobius_act(const UniModular& g, const XPoly<S>& form) {
  const UniModular inv = g.inverse();
  const S& like = form.any();
  // g^-1 x = (y1, y2) with y1 = a x1 + b x2, y2 = c x1 + e x2.
  XPoly<S> y1({one_like(like) * inv.g11(), one_like(like) * inv.g12()});
  XPoly<S> y2({one_like(like) * inv.g21(), one_like(like) * inv.g22()});
  const int d = form.order();
  std::vector<XPoly<S>> pow1{XPoly<S>({one_like(like)})};
  std::vector<XPoly<S>> pow2{XPoly<S>({one_like(like)})};
  for (int i = 1; i <= d; ++i) {
    pow1.push_back(xpoly_mul(pow1.back(), y1));
    pow2.push_back(xpoly_mul(pow2.back(), y2));
  }
  XPoly<S> out(d, like);
  for (int i = 0; i <= d; ++i) {
    if (is_zero(form[i])) continue;
    const XPoly<S> basis = xpoly_mul(pow1[d - i], pow2[i]);
    for (int j = 0; j <= d; ++j) out[j] = out[j] + form[i] * basis[j];
  }
  return out;
}

/// Deterministic source of test data: mt19937_64 with a fixed reduction so
/// that a seed gives the same stream on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// L*U with unit triangular factors whose off-diagonal entries lie in
  /// [-9, 9]; det = 1 exactly.
  UniModular sl2();
  /// Form of degree d with integer coefficients in [lo, hi].
  RatForm integer_form(int d, std::int64_t lo = -9, std::int64_t hi = 9);

 private:
  std::mt19937_64 engine_;
};

/// {"d": int, "coeffs": ["p/q", ...]}
RatForm form_from_json(const std::string& text);
std::string form_to_json(const RatForm& form);
RatForm read_form_file(const std::string& path);

}  // namespace binform
