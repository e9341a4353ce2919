#include "binform/combsum.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>

namespace binform {

namespace {

class UpsMemo {
 public:
  std::optional<Int> find(const std::vector<std::int64_t>& key) {
    std::shared_lock lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void insert(std::vector<std::int64_t> key, const Int& value) {
    std::unique_lock lock(mutex_);
    table_.emplace(std::move(key), value);
  }
  std::size_t size() {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::vector<std::int64_t>, Int> table_;
};

UpsMemo& ups_memo() {
  static UpsMemo memo;
  return memo;
}

Int ups_recursive_sorted(const std::vector<std::int64_t>& a) {
  if (a.front() < 0) return 0;
  if (auto hit = ups_memo().find(a)) return *hit;
  const std::int64_t a1 = a[0];
  const std::int64_t a2 = a[1];
  Rat sum = 0;
  std::vector<std::int64_t> rest(a.begin() + 1, a.end());
  // l ranges over 0..min(a1, a2) = 0..a1 since the list is sorted.
  for (std::int64_t l = 0; l <= a1; ++l) {
    Int inner;
    if (rest.size() == 1) {
      inner = (l == 0) ? 1 : 0;
    } else {
      rest[0] = l;
      std::vector<std::int64_t> key = rest;
      std::sort(key.begin(), key.end());
      inner = ups_recursive_sorted(key);
    }
    if (inner == 0) continue;
    sum += fact_product({2 * a1, 2 * a2}, {a1 + a2, 2 * l, a1 - l, a2 - l}) * inner;
  }
  Int value = to_integer(sum);
  ups_memo().insert(a, value);
  return value;
}

}  // namespace

Int ups_direct(std::span<const std::int64_t> a) {
  if (a.empty()) throw std::invalid_argument("ups: empty argument list");
  const std::int64_t lo = *std::min_element(a.begin(), a.end());
  if (lo < 0) return 0;
  // binom(2a, a+k) != 0 iff -a <= k <= a.
  Int sum = 0;
  Int term;
  for (std::int64_t k = -lo; k <= lo; ++k) {
    term = 1;
    for (auto ai : a) term *= binom_ext(2 * ai, ai + k);
    if (k % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

Int ups_recursive(std::span<const std::int64_t> a) {
  if (a.size() < 2) return ups_direct(a);
  std::vector<std::int64_t> key(a.begin(), a.end());
  std::sort(key.begin(), key.end());
  return ups_recursive_sorted(key);
}

std::size_t ups_memo_size() { return ups_memo().size(); }

Int von_szily(std::int64_t a1, std::int64_t a2) {
  return to_integer(fact_product({2 * a1, 2 * a2}, {a1 + a2, a1, a2}));
}

Int dixon(std::int64_t a1, std::int64_t a2, std::int64_t a3) {
  return to_integer(fact_product({2 * a1, 2 * a2, 2 * a3, a1 + a2 + a3},
                                 {a1 + a2, a1 + a3, a2 + a3, a1, a2, a3}));
}

Int N(std::int64_t k, std::int64_t r) {
  if (k < 2 || r < 2 || r > k + 1)
    throw std::invalid_argument("N: need k >= 2 and 2 <= r <= k+1");
  Int sum = 0;
  Int term;
  for (std::int64_t j = 0; j <= k - r + 1; ++j) {
    term = 1;
    for (std::int64_t t = 0; t < r; ++t) term *= binom_ext(k, j + t);
    if ((r * j) % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

std::vector<std::int64_t> N_ups_arguments(std::int64_t p, std::int64_t q) {
  std::vector<std::int64_t> args;
  for (std::int64_t nu = 0; nu <= 2 * q; ++nu) args.push_back(p - q + nu);
  return args;
}

Rat N_via_ups(std::int64_t p, std::int64_t q) {
  if (q < 1 || q > p) throw std::invalid_argument("N_via_ups: need 1 <= q <= p");
  const auto args = N_ups_arguments(p, q);
  std::vector<std::int64_t> nums(2 * q + 1, 2 * p);
  std::vector<std::int64_t> dens;
  for (auto a : args) dens.push_back(2 * a);
  Rat value = fact_product(nums, dens) * Rat(ups_direct(args));
  if ((p + q) % 2 != 0) value = -value;
  return value;
}

}  // namespace binform
