#include "binform/exactnum.hpp"

#include <atomic>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace binform {

namespace {

std::atomic<std::int64_t> g_cache_cap{100000};

class FactorialTable {
 public:
  Int get(std::int64_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<std::int64_t>(table_.size())) return table_[n];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<std::int64_t>(table_.size()) <= n) {
      const auto next = static_cast<unsigned long>(table_.size());
      table_.push_back(table_.back() * next);
    }
    return table_[n];
  }

 private:
  std::shared_mutex mutex_;
  std::deque<Int> table_{Int(1)};
};

FactorialTable& factorial_table() {
  static FactorialTable table;
  return table;
}

}  // namespace

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Int& z) { return z.get_str(); }

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw std::invalid_argument("parse_rat: empty integer in '" + std::string(text) + "'");
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("parse_rat: bad character in '" + std::string(text) + "'");
    }
    std::string buf(s.front() == '+' ? s.substr(1) : s);
    return Int(buf, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  const Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("parse_rat: zero denominator in '" + std::string(text) + "'");
  return make_rat(parse_int(text.substr(0, slash)), den);
}

Int to_integer(const Rat& q) {
  if (q.get_den() != 1) throw std::logic_error("expected an integer, got " + to_string(q));
  return q.get_num();
}

void set_factorial_cache_cap(std::int64_t cap) { g_cache_cap.store(cap < 0 ? 0 : cap); }

std::int64_t factorial_cache_cap() { return g_cache_cap.load(); }

Int fact_ext(std::int64_t n) {
  if (n < 0) return 0;
  if (n <= g_cache_cap.load()) return factorial_table().get(n);
  Int out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Rat inv_fact_ext(std::int64_t n) {
  if (n < 0) return 0;
  return Rat(Int(1), fact_ext(n));
}

Int binom_ext(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rat fact_product(std::span<const std::int64_t> nums, std::span<const std::int64_t> dens) {
  Int num = 1;
  Int den = 1;
  for (auto a : nums) {
    if (a < 0) return 0;
    num *= fact_ext(a);
  }
  for (auto b : dens) {
    if (b < 0) return 0;
    den *= fact_ext(b);
  }
  return make_rat(num, den);
}

Rat fact_product(std::initializer_list<std::int64_t> nums,
                 std::initializer_list<std::int64_t> dens) {
  return fact_product(std::span<const std::int64_t>(nums.begin(), nums.size()),
                      std::span<const std::int64_t>(dens.begin(), dens.size()));
}

}  // namespace binform
