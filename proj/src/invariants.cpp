#include "binform/invariants.hpp"

namespace binform {

int half_degree(int d) {
  if (d < 4 || d % 4 != 0)
    throw std::invalid_argument("form degree must be 2k with k even and k >= 2, got d=" + std::to_string(d));
  return d / 2;
}

void check_operator_range(int d, int n) {
  const int k = half_degree(d);
  if (n < k)
    throw std::invalid_argument("need n >= k, got n=" + std::to_string(n) + ", k=" + std::to_string(k));
}

std::vector<Rat> H(const RatForm& form, int n) { return charpoly(L_matrix(form, n)); }

Rat hilbert_invariant(const RatForm& form, int n, int p) {
  if (p < 1 || p > n + 1) throw std::invalid_argument("hilbert_invariant: need 1 <= p <= n+1");
  return H(form, n)[n + 1 - p];
}

Rat p_n2_constant(int n, int k) {
  if (n < k) throw std::invalid_argument("p_n2_constant: need n >= k");
  return fact_product({n - k, n + k + 1, k, k}, {n, n, 2 * k + 1});
}

}  // namespace binform
