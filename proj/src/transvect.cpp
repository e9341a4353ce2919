#include "binform/transvect.hpp"

#include <algorithm>

namespace binform {

Rat t_coeff(int i, int j, int m, int n, int k) {
  if (k < 0 || k > std::min(m, n) || i < 0 || i > m || j < 0 || j > n)
    throw std::out_of_range("t_coeff: indices out of range");
  const int lo = std::max({0, k - j, k - m + i});
  const int hi = std::min({i, n - j, k});
  Rat sum = 0;
  for (int l = lo; l <= hi; ++l) {
    const Rat term = fact_product({}, {l, k - l, i - l, n - j - l, j - k + l, m - i - k + l});
    if (l % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum * fact_product({m - k, n - k, k, i, m - i, j, n - j}, {m, n});
}

}  // namespace binform
