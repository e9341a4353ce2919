// Symbolic bracket monomials of the classical symbolic method, and their
// evaluation as honest covariants.
//
// A letter u of degree d stands for a form through u_x^d = F(x).  A bracket
// (uv) = u1 v2 - u2 v1 and u_x = u1 x1 + u2 x2.  Evaluation expands the
// monomial in the symbol variables and then replaces, letter by letter,
// u1^(d-i) u2^i by f_i / binom(d, i).  With this dictionary
// (ab)^k a_x^(m-k) b_x^(n-k) is exactly the transvectant (F, G)_k.
#pragma once

#include "binform/forms.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace binform {

struct Letter {
  std::string name;
  int degree = 0;
  bool operator==(const Letter&) const = default;
};

class BracketMonomial {
 public:
  BracketMonomial() = default;

  /// Appends a letter and returns its index.
  std::size_t add_letter(std::string name, int degree);
  /// Multiplies by (uv)^e.  Brackets are stored with u < v; (vu)^e is folded
  /// in as (-1)^e (uv)^e.
  void add_bracket(std::size_t u, std::size_t v, int exponent);
  /// Multiplies by u_x^w.
  void add_x(std::size_t u, int exponent);
  void scale(const Rat& c) { coeff_ *= c; }

  const std::vector<Letter>& letters() const { return letters_; }
  const std::map<std::pair<std::size_t, std::size_t>, int>& brackets() const { return brackets_; }
  const std::vector<int>& x_exponents() const { return x_exponents_; }
  const Rat& coeff() const { return coeff_; }

  std::size_t letter_index(std::string_view name) const;
  /// Sum over letters of the u_x exponents: the order of the covariant.
  int order() const;
  /// Number of brackets plus x-factors touching letter u.
  int valence(std::size_t u) const;
  /// Throws std::invalid_argument if some letter's valence differs from its degree.
  void check_homogeneous() const;

  /// Relabels letters i and j.  The result denotes the same covariant when
  /// both letters stand for the same form.
  BracketMonomial swap_letters(std::size_t i, std::size_t j) const;

  std::string to_string() const;

 private:
  std::vector<Letter> letters_;
  std::map<std::pair<std::size_t, std::size_t>, int> brackets_;
  std::vector<int> x_exponents_;
  Rat coeff_ = 1;
};

/// Parses e.g. "(a b)^4 (b c)^4 (c d)^4 (d a)^4 ; deg=8" or
/// "(ab)^3 (ac)^3 (bc)^4 a_x^2 b_x c_x ; deg=8".  Whitespace is ignored
/// except as a separator between two identifiers inside a bracket; single
/// character letters may be juxtaposed.  An optional rational coefficient may
/// lead.  Without "; deg=N" each letter's degree is its valence.
BracketMonomial parse_bracket(std::string_view text);

/// p letters of degree 2k in a cycle, consecutive letters joined by (..)^k.
/// k must be even and >= 2, p >= 2.
BracketMonomial cyclic_bracket(int k, int p);

/// A_lambda = (ab)^(l3+2) (ac)^(l2+2) (bc)^(l1+2) a_x^l1 b_x^l2 c_x^l3 for
/// a partition (l1,l2,l3) of 4 (letters of degree 8).
BracketMonomial octavic_A(int l1, int l2, int l3);
/// B_lambda = (ab)^l3 (ac)^l2 (bc)^l1 a_x^l1 b_x^l2 c_x^l3, partition of 8.
BracketMonomial octavic_B(int l1, int l2, int l3);

namespace detail {

/// Expanded symbolic monomial: for each key (u2-exponent per letter, then the
/// x2 exponent) the integer coefficient of the monomial.
using Expansion = std::map<std::vector<int>, Int>;
Expansion expand_symbolic(const BracketMonomial& mono);

}  // namespace detail

/// Evaluates `mono` with letter i bound to forms[i].
template <Scalar S>
XPoly<S> umbral_eval(const BracketMonomial& mono, const std::vector<XPoly<S>>& forms) {
  mono.check_homogeneous();
  const auto& letters = mono.letters();
  if (forms.size() != letters.size())
    throw std::invalid_argument("umbral_eval: need one form per letter");
  for (std::size_t u = 0; u < letters.size(); ++u) {
    if (forms[u].order() != letters[u].degree)
      throw std::invalid_argument("umbral_eval: letter '" + letters[u].name + "' has degree " +
                                  std::to_string(letters[u].degree) + " but its form has degree " +
                                  std::to_string(forms[u].order()));
  }
  // Normalized coefficient f_i / binom(d, i) per letter.
  std::vector<std::vector<S>> normalized(letters.size());
  for (std::size_t u = 0; u < letters.size(); ++u) {
    const int d = letters[u].degree;
    for (int i = 0; i <= d; ++i) normalized[u].push_back(forms[u][i] * Rat(1, binom_ext(d, i)));
  }
  const S& like = forms.front().any();
  std::vector<SumAccumulator<S>> acc;
  for (int i = 0; i <= mono.order(); ++i) acc.emplace_back(like);
  for (const auto& [key, c] : detail::expand_symbolic(mono)) {
    S term = one_like(like) * Rat(mono.coeff() * c);
    for (std::size_t u = 0; u < letters.size() && !is_zero(term); ++u) term = term * normalized[u][key[u]];
    acc[key.back()].add(term);
  }
  XPoly<S> out(mono.order(), like);
  for (int i = 0; i <= mono.order(); ++i) out[i] = acc[i].result();
  return out;
}

/// All letters bound to the same form.
template <Scalar S>
XPoly<S> umbral_eval(const BracketMonomial& mono, const XPoly<S>& form) {
  return umbral_eval(mono, std::vector<XPoly<S>>(mono.letters().size(), form));
}

}  // namespace binform
