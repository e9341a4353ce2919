// Transvectants of homogeneous polynomials.
//
//   (F,G)_k = (m-k)!(n-k)!/(m! n!) * sum_{l=0}^{k} (-1)^l binom(k,l)
//             d^k F / dx1^(k-l) dx2^l  *  d^k G / dx1^l dx2^(k-l)
//
// for F of order m, G of order n and 0 <= k <= min(m, n).
#pragma once

#include "binform/forms.hpp"

namespace binform {

/// Coefficient T with (x1^(m-i) x2^i, x1^(n-j) x2^j)_k = T x1^(m+n-k-i-j) x2^(i+j-k).
/// Throws std::out_of_range unless 0<=i<=m, 0<=j<=n, 0<=k<=min(m,n).
Rat t_coeff(int i, int j, int m, int n, int k);

namespace detail {

// out[b] = d^k P / dx1^(k-b) dx2^b for b = 0..k.
template <Scalar S>
std::vector<XPoly<S>> kth_partials(const XPoly<S>& p, int k) {
  std::vector<XPoly<S>> out;
  out.reserve(k + 1);
  XPoly<S> along_x2 = p;  // d^b/dx2^b P
  for (int b = 0; b <= k; ++b) {
    XPoly<S> q = along_x2;
    for (int a = 0; a < k - b; ++a) q = d_dx1(q);
    out.push_back(std::move(q));
    if (b < k) along_x2 = d_dx2(along_x2);
  }
  return out;
}

}  // namespace detail

template <Scalar S>
XPoly<S> transvectant(const XPoly<S>& f, const XPoly<S>& g, int k) {
  const int m = f.order();
  const int n = g.order();
  if (k < 0 || k > m || k > n)
    throw std::out_of_range("transvectant: need 0 <= k <= min(m, n), got k=" + std::to_string(k) +
                            " with m=" + std::to_string(m) + ", n=" + std::to_string(n));
  const auto df = detail::kth_partials(f, k);  // df[l]: x1^(k-l) x2^l
  const auto dg = detail::kth_partials(g, k);  // dg[k-l]: x1^l x2^(k-l)
  XPoly<S> sum(m + n - 2 * k, f.any());
  for (int l = 0; l <= k; ++l) {
    const Rat weight = Rat(binom_ext(k, l)) * neg_one_pow(l);
    sum += xpoly_mul(df[l], dg[k - l]) * weight;
  }
  return sum * fact_product({m - k, n - k}, {m, n});
}

}  // namespace binform
