#include "binform/certificates.hpp"

#include "binform/invariants.hpp"
#include "binform/umbral.hpp"

#include <cstdio>

namespace binform {

namespace {

PolyForm invariant(const MultiPoly& p) { return PolyForm(std::vector<MultiPoly>{p}); }

}  // namespace

std::string xpoly_hash(const PolyForm& p) {
  std::uint64_t h = 1469598103934665603ULL;
  for (int i = 0; i <= p.order(); ++i) {
    std::string s = to_string(p[i]);
    if (i > 0) s.insert(s.begin(), ';');
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<IdentityCheck> quartic_identities() {
  const PolyForm f = generic_form(4);
  std::vector<IdentityCheck> out;
  out.push_back({"P22 = (F,F)_4", invariant(P(f, 2, 2)), transvectant(f, f, 4)});
  out.push_back({"P23 = (F,(F,F)_2)_4", invariant(P(f, 2, 3)), transvectant(f, transvectant(f, f, 2), 4)});
  return out;
}

std::vector<IdentityCheck> octavic_trace_identities() {
  const PolyForm f = generic_form(8);
  const MultiPoly j2 = shioda_J(2, f);
  const MultiPoly j3 = shioda_J(3, f);
  const MultiPoly j4 = shioda_J(4, f);
  const MultiPoly j5 = shioda_J(5, f);
  std::vector<IdentityCheck> out;
  out.push_back({"P42 = J2", invariant(P(f, 4, 2)), invariant(j2)});
  out.push_back({"P43 = J3", invariant(P(f, 4, 3)), invariant(j3)});
  out.push_back({"P44 = 8/5 J4 + 7/30 J2^2", invariant(P(f, 4, 4)),
                 invariant(j4 * Rat(8, 5) + j2 * j2 * Rat(7, 30))});
  out.push_back({"P45 = 6/5 J5 + 13/30 J2 J3", invariant(P(f, 4, 5)),
                 invariant(j5 * Rat(6, 5) + j2 * j3 * Rat(13, 30))});
  return out;
}

std::vector<IdentityCheck> octavic_bracket_identities() {
  const PolyForm f = generic_form(8);
  auto eval = [&](const BracketMonomial& m) { return umbral_eval(m, f); };
  const PolyForm a4 = eval(octavic_A(4, 0, 0));
  const PolyForm b53 = eval(octavic_B(5, 3, 0));
  const PolyForm b62 = eval(octavic_B(6, 2, 0));
  std::vector<IdentityCheck> out;
  const PolyForm a211 = eval(octavic_A(2, 1, 1));
  out.push_back({"A211 = 0", a211, PolyForm(a211.order(), a211.any())});
  out.push_back({"A31 = 1/2 A4", eval(octavic_A(3, 1, 0)), a4 * Rat(1, 2)});
  out.push_back({"A22 = 1/2 A4", eval(octavic_A(2, 2, 0)), a4 * Rat(1, 2)});
  out.push_back({"A4 = (F,(F,F)_6)_4", a4, transvectant(f, transvectant(f, f, 6), 4)});
  out.push_back({"B332 = -2 B431", eval(octavic_B(3, 3, 2)), eval(octavic_B(4, 3, 1)) * Rat(-2)});
  out.push_back({"B44 = 6/5 B53 - 1/5 B62", eval(octavic_B(4, 4, 0)), b53 * Rat(6, 5) - b62 * Rat(1, 5)});
  return out;
}

}  // namespace binform
