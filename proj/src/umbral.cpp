#include "binform/umbral.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace binform {

std::size_t BracketMonomial::add_letter(std::string name, int degree) {
  if (degree < 0) throw std::invalid_argument("bracket: negative letter degree");
  for (const auto& l : letters_)
    if (l.name == name) throw std::invalid_argument("bracket: duplicate letter '" + name + "'");
  letters_.push_back({std::move(name), degree});
  x_exponents_.push_back(0);
  return letters_.size() - 1;
}

void BracketMonomial::add_bracket(std::size_t u, std::size_t v, int exponent) {
  if (u >= letters_.size() || v >= letters_.size()) throw std::out_of_range("bracket: letter index");
  if (u == v) throw std::invalid_argument("bracket: (uu) = 0 is not a valid factor");
  if (exponent < 0) throw std::invalid_argument("bracket: negative exponent");
  if (exponent == 0) return;
  if (u > v) {
    std::swap(u, v);
    if (exponent % 2 != 0) coeff_ = -coeff_;
  }
  brackets_[{u, v}] += exponent;
}

void BracketMonomial::add_x(std::size_t u, int exponent) {
  if (u >= letters_.size()) throw std::out_of_range("bracket: letter index");
  if (exponent < 0) throw std::invalid_argument("bracket: negative exponent");
  x_exponents_[u] += exponent;
}

std::size_t BracketMonomial::letter_index(std::string_view name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i].name == name) return i;
  throw std::invalid_argument("bracket: unknown letter '" + std::string(name) + "'");
}

int BracketMonomial::order() const {
  int total = 0;
  for (int w : x_exponents_) total += w;
  return total;
}

int BracketMonomial::valence(std::size_t u) const {
  int total = x_exponents_.at(u);
  for (const auto& [edge, e] : brackets_)
    if (edge.first == u || edge.second == u) total += e;
  return total;
}

void BracketMonomial::check_homogeneous() const {
  if (letters_.empty()) throw std::invalid_argument("bracket: no letters");
  for (std::size_t u = 0; u < letters_.size(); ++u) {
    if (valence(u) != letters_[u].degree)
      throw std::invalid_argument("bracket: letter '" + letters_[u].name + "' appears " +
                                  std::to_string(valence(u)) + " times but has degree " +
                                  std::to_string(letters_[u].degree));
  }
}

BracketMonomial BracketMonomial::swap_letters(std::size_t i, std::size_t j) const {
  if (i >= letters_.size() || j >= letters_.size()) throw std::out_of_range("bracket: letter index");
  auto relabel = [&](std::size_t u) { return u == i ? j : (u == j ? i : u); };
  BracketMonomial out;
  out.letters_ = letters_;
  out.x_exponents_.assign(letters_.size(), 0);
  out.coeff_ = coeff_;
  for (const auto& [edge, e] : brackets_) out.add_bracket(relabel(edge.first), relabel(edge.second), e);
  for (std::size_t u = 0; u < letters_.size(); ++u) out.x_exponents_[relabel(u)] = x_exponents_[u];
  return out;
}

std::string BracketMonomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << ' ';
    first = false;
  };
  if (coeff_ != 1) {
    sep();
    os << binform::to_string(coeff_);
  }
  for (const auto& [edge, e] : brackets_) {
    sep();
    os << '(' << letters_[edge.first].name << ' ' << letters_[edge.second].name << ')';
    if (e != 1) os << '^' << e;
  }
  for (std::size_t u = 0; u < letters_.size(); ++u) {
    if (x_exponents_[u] == 0) continue;
    sep();
    os << letters_[u].name << "_x";
    if (x_exponents_[u] != 1) os << '^' << x_exponents_[u];
  }
  const bool uniform = std::all_of(letters_.begin(), letters_.end(),
                                   [&](const Letter& l) { return l.degree == letters_.front().degree; });
  if (!letters_.empty() && uniform) os << " ; deg=" << letters_.front().degree;
  return os.str();
}

// Parsing ----------------------------------------------------------------------

namespace {

class BracketParser {
 public:
  explicit BracketParser(std::string_view text) : text_(text) {}

  BracketMonomial parse() {
    std::string_view body = text_;
    std::optional<int> degree;
    if (auto semi = text_.find(';'); semi != std::string_view::npos) {
      body = text_.substr(0, semi);
      degree = parse_degree(text_.substr(semi + 1));
    }
    text_ = body;
    pos_ = 0;
    Rat coeff = 1;
    skip_ws();
    if (pos_ < text_.size() && (std::isdigit(uchar(text_[pos_])) || text_[pos_] == '-' || text_[pos_] == '+')) {
      coeff = parse_coefficient();
    }
    struct Factor {
      std::string u, v;  // v empty for an x-factor
      int exponent;
    };
    std::vector<Factor> factors;
    std::vector<std::string> order;
    auto note = [&](const std::string& name) {
      if (std::find(order.begin(), order.end(), name) == order.end()) order.push_back(name);
    };
    while (true) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
        continue;
      }
      if (pos_ >= text_.size()) break;
      if (text_[pos_] == '(') {
        ++pos_;
        auto [u, v] = parse_pair();
        expect(')');
        const int e = parse_exponent();
        note(u);
        note(v);
        factors.push_back({u, v, e});
      } else if (std::isalpha(uchar(text_[pos_]))) {
        std::string u = identifier();
        if (text_.substr(pos_, 2) != "_x") fail("expected '_x' after letter '" + u + "'");
        pos_ += 2;
        const int e = parse_exponent();
        note(u);
        factors.push_back({u, "", e});
      } else {
        fail(std::string("unexpected character '") + text_[pos_] + "'");
      }
    }
    if (order.empty()) fail("no factors");

    BracketMonomial mono;
    for (const auto& name : order) mono.add_letter(name, 0);
    for (const auto& f : factors) {
      if (f.v.empty()) mono.add_x(mono.letter_index(f.u), f.exponent);
      else mono.add_bracket(mono.letter_index(f.u), mono.letter_index(f.v), f.exponent);
    }
    BracketMonomial out;
    for (std::size_t u = 0; u < order.size(); ++u) out.add_letter(order[u], degree.value_or(mono.valence(u)));
    for (const auto& [edge, e] : mono.brackets()) out.add_bracket(edge.first, edge.second, e);
    for (std::size_t u = 0; u < order.size(); ++u) out.add_x(u, mono.x_exponents()[u]);
    out.scale(mono.coeff() * coeff);
    out.check_homogeneous();
    return out;
  }

 private:
  static unsigned char uchar(char c) { return static_cast<unsigned char>(c); }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("bracket parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(uchar(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(uchar(text_[pos_]))) fail("expected a letter name");
    while (pos_ < text_.size() && std::isalnum(uchar(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::pair<std::string, std::string> parse_pair() {
    skip_ws();
    std::string first = identifier();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ')') {
      // "(ab)": two single-character letters written together.
      if (first.size() != 2) fail("cannot split '" + first + "' into two letters");
      return {first.substr(0, 1), first.substr(1, 1)};
    }
    std::string second = identifier();
    return {first, second};
  }

  int parse_exponent() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '^') return 1;
    ++pos_;
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(uchar(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Rat parse_coefficient() {
    const std::size_t start = pos_;
    if (text_[pos_] == '-' || text_[pos_] == '+') ++pos_;
    while (pos_ < text_.size() && (std::isdigit(uchar(text_[pos_])) || text_[pos_] == '/')) ++pos_;
    return parse_rat(text_.substr(start, pos_ - start));
  }

  int parse_degree(std::string_view tail) {
    std::string compact;
    for (char c : tail)
      if (!std::isspace(uchar(c))) compact.push_back(c);
    if (compact.rfind("deg=", 0) != 0 || compact.size() == 4)
      throw std::invalid_argument("bracket parse error: expected '; deg=N'");
    for (std::size_t i = 4; i < compact.size(); ++i)
      if (!std::isdigit(uchar(compact[i]))) throw std::invalid_argument("bracket parse error: bad degree");
    return std::stoi(compact.substr(4));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BracketMonomial parse_bracket(std::string_view text) { return BracketParser(text).parse(); }

BracketMonomial cyclic_bracket(int k, int p) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("cyclic_bracket: k must be even and >= 2");
  if (p < 2) throw std::invalid_argument("cyclic_bracket: p must be >= 2");
  BracketMonomial mono;
  for (int i = 0; i < p; ++i) mono.add_letter("a" + std::to_string(i + 1), 2 * k);
  for (int i = 0; i < p; ++i) mono.add_bracket(i, (i + 1) % p, k);
  return mono;
}

namespace {

BracketMonomial three_letter(int ab, int ac, int bc, int ax, int bx, int cx) {
  BracketMonomial mono;
  mono.add_letter("a", 8);
  mono.add_letter("b", 8);
  mono.add_letter("c", 8);
  mono.add_bracket(0, 1, ab);
  mono.add_bracket(0, 2, ac);
  mono.add_bracket(1, 2, bc);
  mono.add_x(0, ax);
  mono.add_x(1, bx);
  mono.add_x(2, cx);
  mono.check_homogeneous();
  return mono;
}

void check_partition(int l1, int l2, int l3, int total) {
  if (!(l1 >= l2 && l2 >= l3 && l3 >= 0 && l1 + l2 + l3 == total))
    throw std::invalid_argument("expected a partition of " + std::to_string(total));
}

}  // namespace

BracketMonomial octavic_A(int l1, int l2, int l3) {
  check_partition(l1, l2, l3, 4);
  return three_letter(l3 + 2, l2 + 2, l1 + 2, l1, l2, l3);
}

BracketMonomial octavic_B(int l1, int l2, int l3) {
  check_partition(l1, l2, l3, 8);
  return three_letter(l3, l2, l1, l1, l2, l3);
}

namespace detail {

Expansion expand_symbolic(const BracketMonomial& mono) {
  const std::size_t n = mono.letters().size();
  Expansion current;
  current.emplace(std::vector<int>(n + 1, 0), Int(1));
  auto step = [&](auto&& spread, int exponent) {
    Expansion next;
    for (const auto& [key, c] : current) {
      for (int t = 0; t <= exponent; ++t) {
        std::vector<int> k2 = key;
        Int c2 = c * binom_ext(exponent, t);
        spread(k2, c2, t);
        auto [it, inserted] = next.try_emplace(std::move(k2), c2);
        if (!inserted) it->second += c2;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    current = std::move(next);
  };
  for (const auto& [edge, e] : mono.brackets()) {
    const auto [u, v] = edge;
    // (uv)^e = sum_t binom(e,t) (u1 v2)^(e-t) (-u2 v1)^t
    step([&, u = u, v = v](std::vector<int>& key, Int& c, int t) {
      key[u] += t;
      key[v] += e - t;
      if (t % 2 != 0) c = -c;
    }, e);
  }
  for (std::size_t u = 0; u < n; ++u) {
    const int w = mono.x_exponents()[u];
    if (w == 0) continue;
    // u_x^w = sum_s binom(w,s) (u1 x1)^(w-s) (u2 x2)^s
    step([&](std::vector<int>& key, Int&, int s) {
      key[u] += s;
      key[n] += s;
    }, w);
  }
  return current;
}

}  // namespace detail

}  // namespace binform
