// The operator L_n^F : G -> (F, G)_k on forms of order n, and the invariants
// built from it.
//
// F has degree d = 2k with k even and n >= k.  The basis of the order-n
// space is x1^(n-i) x2^i, i = 0..n; matrix entry (i, j) is the i-th
// coordinate of the image of the j-th basis vector.
//
//   P_{n,p}(F) = tr (L_n^F)^p
//   H(F, n)    = coefficients of det(lambda Id - L_n^F)
#pragma once

#include "binform/transvect.hpp"

namespace binform {

/// k = d/2 for a form of degree d; throws unless d = 2k with k even, k >= 2.
int half_degree(int d);

/// Checks that n >= k; throws std::invalid_argument otherwise.
void check_operator_range(int d, int n);

template <Scalar S>
Matrix<S> L_matrix(const XPoly<S>& form, int n) {
  check_operator_range(form.degree(), n);
  const int k = form.degree() / 2;
  Matrix<S> m(n + 1, n + 1, form.any());
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      // (x1^(2k-s) x2^s, x1^(n-j) x2^j)_k lands on x2-exponent s + j - k.
      const int s = i - j + k;
      if (s < 0 || s > 2 * k || is_zero(form[s])) continue;
      m(i, j) = form[s] * t_coeff(s, j, 2 * k, n, k);
    }
  }
  return m;
}

/// tr (L_n^F)^p for p >= 1.
template <Scalar S>
S P(const XPoly<S>& form, int n, int p) {
  if (p < 1) throw std::invalid_argument("P: p must be >= 1");
  const Matrix<S> l = L_matrix(form, n);
  if (p == 1) return mat_trace(l);
  return trace_of_product(mat_pow(l, p - 1), l);
}

/// Coefficients c_0..c_{n+1} of det(lambda Id - L_n^F), so c_{n+1} = 1.
std::vector<Rat> H(const RatForm& form, int n);

/// The Hilbert invariant of degree p in F: the coefficient of
/// lambda^(n+1-p) in det(lambda Id - L_n^F), for 1 <= p <= n+1.
Rat hilbert_invariant(const RatForm& form, int n, int p);

namespace detail {
template <Scalar S>
S constant_of(const XPoly<S>& x) {
  if (x.order() != 0) throw std::logic_error("expected an invariant (order 0)");
  return x[0];
}
}  // namespace detail

/// The invariants J2..J5 of the octavic:
///   J2 = (F,F)_8, J3 = (F,(F,F)_4)_8, J4 = ((F,F)_6,(F,F)_6)_4,
///   J5 = ((F,(F,F)_6)_4,(F,F)_6)_4.
template <Scalar S>
S shioda_J(int idx, const XPoly<S>& form) {
  if (form.degree() != 8) throw std::invalid_argument("shioda_J: form must have degree 8");
  switch (idx) {
    case 2:
      return detail::constant_of(transvectant(form, form, 8));
    case 3:
      return detail::constant_of(transvectant(form, transvectant(form, form, 4), 8));
    case 4: {
      const auto h6 = transvectant(form, form, 6);
      return detail::constant_of(transvectant(h6, h6, 4));
    }
    case 5: {
      const auto h6 = transvectant(form, form, 6);
      return detail::constant_of(transvectant(transvectant(form, h6, 4), h6, 4));
    }
    default:
      throw std::invalid_argument("shioda_J: index must be 2, 3, 4 or 5");
  }
}

/// (n-k)! (n+k+1)! k!^2 / (n!^2 (2k+1)!)
Rat p_n2_constant(int n, int k);

/// P_{n,2} through its closed form: p_n2_constant(n, k) * (F, F)_{2k}.
template <Scalar S>
S p_n2_closed(const XPoly<S>& form, int n) {
  check_operator_range(form.degree(), n);
  const int k = form.degree() / 2;
  return detail::constant_of(transvectant(form, form, 2 * k)) * p_n2_constant(n, k);
}

}  // namespace binform
