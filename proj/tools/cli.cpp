#include "cli.hpp"

#include "binform/certificates.hpp"
#include "binform/combsum.hpp"
#include "binform/independence.hpp"
#include "binform/invariants.hpp"
#include "binform/sixj.hpp"
#include "binform/umbral.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace binform {

namespace {

using json = nlohmann::json;

struct Globals {
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  unsigned jobs = 1;
};

// Thrown when a report was produced but its verdict is negative.
struct Verdict {
  int status;
};

json form_json(const RatForm& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_string(c));
  return coeffs;
}

json poly_form_json(const PolyForm& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(to_string(c));
  return coeffs;
}

std::string csv_field(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

// One header line with the (sorted) keys, one line with the values; nested
// values are embedded as JSON text.
std::string to_csv(const json& report) {
  std::string head, row;
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it != report.begin()) {
      head += ',';
      row += ',';
    }
    head += csv_field(it.key());
    row += csv_field(it.value());
  }
  return head + '\n' + row + '\n';
}

void emit(const Globals& g, json report, std::ostream& out) {
  report["seed"] = g.seed;
  const std::string text = g.format == "csv" ? to_csv(report) : report.dump(2) + '\n';
  if (g.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(g.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file '" + g.out + "'");
  file << text;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("--args: '" + item + "' is not an integer");
    }
  }
  if (values.empty()) throw std::invalid_argument("--args: expected a comma-separated list of integers");
  return values;
}

// Where a form comes from: a file, the generic form, or a seeded sample.
struct FormSource {
  std::string file;
  bool generic = false;
  bool random = false;

  void add_to(CLI::App* cmd, bool allow_random) {
    cmd->add_option("--form", file, "JSON form file {\"d\": D, \"coeffs\": [\"p/q\", ...]}");
    cmd->add_flag("--generic", generic, "Use the generic form (symbolic coefficients f0..fd)");
    if (allow_random) cmd->add_flag("--random", random, "Use a seeded random integer form");
  }

  std::string kind() const {
    const int chosen = !file.empty() + generic + random;
    if (chosen != 1) throw std::invalid_argument("choose exactly one form source (--form, --generic or --random)");
    return generic ? "generic" : random ? "random" : "file";
  }

  RatForm numeric(int d, std::uint64_t seed) const {
    RatForm f = random ? Sampler(seed).integer_form(d) : read_form_file(file);
    if (f.degree() != d)
      throw std::invalid_argument("form has degree " + std::to_string(f.degree()) + " but --d is " + std::to_string(d));
    return f;
  }
};

json pairs_json(const std::vector<std::pair<std::int64_t, std::int64_t>>& pairs) {
  json list = json::array();
  for (const auto& [a, b] : pairs) list.push_back({a, b});
  return list;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariant-theory computations for binary forms", "binform"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every random choice (echoed in reports)");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", g.out, "Write the report to this file instead of stdout");
  app.add_option("--jobs", g.jobs, "Worker threads for grids, scans and Jacobians")->check(CLI::Range(1u, 1024u));

  std::function<void()> action;

  // combsum
  auto* combsum = app.add_subcommand("combsum", "Alternating binomial sums");
  combsum->require_subcommand(1);
  std::string ups_args, ups_method = "direct";
  auto* ups = combsum->add_subcommand("ups", "ups_m(a1..am)");
  ups->add_option("--args", ups_args, "Comma-separated integers")->required();
  ups->add_option("--method", ups_method)->check(CLI::IsMember({"direct", "recursive", "closed"}));
  ups->callback([&] {
    action = [&] {
      const auto a = parse_int_list(ups_args);
      json report{{"command", "combsum ups"}, {"args", a}, {"method", ups_method}};
      Int value;
      if (ups_method == "direct") {
        value = ups_direct(a);
      } else if (ups_method == "recursive") {
        value = ups_recursive(a);
      } else if (a.size() == 2) {
        value = von_szily(a[0], a[1]);
        report["closed_form"] = "von_szily";
      } else if (a.size() == 3) {
        value = dixon(a[0], a[1], a[2]);
        report["closed_form"] = "dixon";
      } else {
        throw std::invalid_argument("--method closed needs 2 or 3 arguments");
      }
      report["value"] = to_string(value);
      emit(g, report, out);
    };
  });

  std::int64_t nkr_k = 0, nkr_r = 0;
  bool via_ups = false;
  auto* nkr = combsum->add_subcommand("nkr", "N(k, r)");
  nkr->add_option("--k", nkr_k)->required();
  nkr->add_option("--r", nkr_r)->required();
  nkr->add_flag("--via-ups", via_ups, "Evaluate through ups_{2q+1} (k = 2p, r = 2q+1)");
  nkr->callback([&] {
    action = [&] {
      json report{{"command", "combsum nkr"}, {"k", nkr_k}, {"r", nkr_r}};
      if (via_ups) {
        if (nkr_k % 2 != 0 || nkr_r % 2 != 1 || nkr_r < 3 || nkr_r > nkr_k + 1)
          throw std::invalid_argument("--via-ups needs k = 2p and r = 2q+1 with 1 <= q <= p");
        report["method"] = "via_ups";
        report["ups_args"] = N_ups_arguments(nkr_k / 2, (nkr_r - 1) / 2);
        report["N"] = to_string(N_via_ups(nkr_k / 2, (nkr_r - 1) / 2));
      } else {
        report["method"] = "direct";
        report["N"] = to_string(N(nkr_k, nkr_r));
      }
      emit(g, report, out);
    };
  });

  // invariant
  auto* invariant = app.add_subcommand("invariant", "Invariants of a binary form");
  invariant->require_subcommand(1);
  int inv_d = 0, inv_n = 0, inv_p = 0;
  FormSource p_src;
  auto* inv_P = invariant->add_subcommand("P", "P_{n,p}(F) = tr (L_n^F)^p");
  inv_P->add_option("--d", inv_d)->required();
  inv_P->add_option("--n", inv_n)->required();
  inv_P->add_option("--p", inv_p)->required();
  p_src.add_to(inv_P, true);
  inv_P->callback([&] {
    action = [&] {
      const std::string kind = p_src.kind();
      half_degree(inv_d);
      json report{{"command", "invariant P"}, {"d", inv_d}, {"n", inv_n}, {"p", inv_p}, {"source", kind}};
      if (kind == "generic") {
        const MultiPoly v = P(generic_form(inv_d), inv_n, inv_p);
        report["value"] = to_string(v);
        report["hash"] = poly_hash(v);
      } else {
        const RatForm f = p_src.numeric(inv_d, g.seed);
        report["form"] = form_json(f);
        report["value"] = to_string(P(f, inv_n, inv_p));
      }
      emit(g, report, out);
    };
  });

  FormSource h_src;
  auto* inv_H = invariant->add_subcommand("H", "Coefficients of det(lambda - L_n^F)");
  inv_H->add_option("--d", inv_d)->required();
  inv_H->add_option("--n", inv_n)->required();
  inv_H->add_option("--form", h_src.file)->required();
  inv_H->callback([&] {
    action = [&] {
      const RatForm f = h_src.numeric(inv_d, g.seed);
      json coeffs = json::array();
      for (const auto& c : H(f, inv_n)) coeffs.push_back(to_string(c));
      emit(g, json{{"command", "invariant H"}, {"d", inv_d}, {"n", inv_n}, {"form", form_json(f)}, {"H", coeffs}},
           out);
    };
  });

  int shioda_idx = 0;
  FormSource s_src;
  auto* inv_S = invariant->add_subcommand("shioda", "The invariants J2..J5 of an octavic");
  inv_S->add_option("--idx", shioda_idx)->required()->check(CLI::IsMember({2, 3, 4, 5}));
  s_src.add_to(inv_S, false);
  inv_S->callback([&] {
    action = [&] {
      const std::string kind = s_src.kind();
      json report{{"command", "invariant shioda"}, {"idx", shioda_idx}, {"source", kind}};
      if (kind == "generic") {
        const MultiPoly v = shioda_J(shioda_idx, generic_form(8));
        report["value"] = to_string(v);
        report["hash"] = poly_hash(v);
      } else {
        const RatForm f = s_src.numeric(8, g.seed);
        report["form"] = form_json(f);
        report["value"] = to_string(shioda_J(shioda_idx, f));
      }
      emit(g, report, out);
    };
  });

  // independence
  int ind_k = 0;
  bool random_point = false;
  auto* independence = app.add_subcommand("independence", "Jacobian-rank certificate for P_{k,2..k+1}");
  independence->add_option("--k", ind_k)->required();
  independence->add_flag("--random-point", random_point, "Also report the rank at a seeded random form");
  independence->callback([&] {
    action = [&] {
      const auto rep = independence_certificate(ind_k, random_point, g.seed, g.jobs);
      json n_values = json::object();
      for (const auto& [r, v] : rep.n_values) n_values[std::to_string(r)] = to_string(v);
      json report{{"command", "independence"}, {"k", rep.k},      {"rank", rep.rank},
                  {"expected", rep.expected},  {"minor", to_string(rep.minor)},
                  {"N", n_values},             {"witness", form_json(rep.witness)},
                  {"pass", rep.pass}};
      if (rep.random_point)
        report["random_point"] = {{"form", form_json(rep.random_point->form)}, {"rank", rep.random_point->rank}};
      emit(g, report, out);
      if (!rep.pass) throw Verdict{1};
    };
  });

  // octavic
  auto* octavic = app.add_subcommand("octavic", "Symbolic identities for quartics and octavics");
  octavic->require_subcommand(1);
  auto* verify = octavic->add_subcommand("verify", "Check every identity symbolically");
  verify->callback([&] {
    action = [&] {
      json rows = json::array();
      bool all = true;
      for (auto* family : {&quartic_identities, &octavic_trace_identities, &octavic_bracket_identities}) {
        for (const auto& id : (*family)()) {
          all = all && id.holds();
          rows.push_back({{"name", id.name},
                          {"lhs_hash", xpoly_hash(id.lhs)},
                          {"rhs_hash", xpoly_hash(id.rhs)},
                          {"pass", id.holds()}});
        }
      }
      emit(g, json{{"command", "octavic verify"}, {"identities", rows}, {"pass", all}}, out);
      if (!all) throw Verdict{1};
    };
  });

  // sixj
  auto* sixj = app.add_subcommand("sixj", "The 6j vanishing sum S(k, n)");
  sixj->require_subcommand(1);
  std::int64_t sj_k = 0, sj_n = 0, kmax = 0, nmax = 0;
  auto* sj_value = sixj->add_subcommand("value", "S(k, n)");
  sj_value->add_option("--k", sj_k)->required();
  sj_value->add_option("--n", sj_n)->required();
  sj_value->callback([&] {
    action = [&] {
      emit(g, json{{"command", "sixj value"}, {"k", sj_k}, {"n", sj_n}, {"S", to_string(S(sj_k, sj_n))}}, out);
    };
  });

  auto* sj_scan = sixj->add_subcommand("scan", "All zeros of S with k <= kmax, n <= nmax");
  sj_scan->add_option("--kmax", kmax)->required();
  sj_scan->add_option("--nmax", nmax)->required();
  sj_scan->callback([&] {
    action = [&] {
      emit(g,
           json{{"command", "sixj scan"}, {"kmax", kmax}, {"nmax", nmax},
                {"zeros", pairs_json(scan_zeros(kmax, nmax, g.jobs))}},
           out);
    };
  });

  int rows = 201, cols = 201;
  std::string grid_file;
  auto* sj_grid = sixj->add_subcommand("grid", "Sign grid of S as PPM or CSV");
  sj_grid->add_option("--rows", rows)->check(CLI::PositiveNumber);
  sj_grid->add_option("--cols", cols)->check(CLI::PositiveNumber);
  // Takes the grid file; the summary report then goes to stdout.
  sj_grid->add_option("--out", grid_file, "Grid file, *.ppm or *.csv")->required();
  sj_grid->callback([&] {
    action = [&] {
      const auto ends_with = [&](std::string_view suffix) {
        return grid_file.size() >= suffix.size() &&
               grid_file.compare(grid_file.size() - suffix.size(), suffix.size(), suffix) == 0;
      };
      const bool ppm = ends_with(".ppm");
      if (!ppm && !ends_with(".csv")) throw std::invalid_argument("--out must end in .ppm or .csv");
      const SignGrid grid = sign_grid(rows, cols, g.jobs);
      {
        std::ofstream file(grid_file, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open output file '" + grid_file + "'");
        if (ppm) write_ppm(file, grid);
        else write_csv(file, grid);
      }
      json zeros = json::array();
      for (const auto& [r, c] : grid.zero_cells()) zeros.push_back({r, c});
      Globals to_stdout = g;
      to_stdout.out.clear();
      emit(to_stdout,
           json{{"command", "sixj grid"}, {"rows", rows}, {"cols", cols}, {"file", grid_file},
                {"format", ppm ? "ppm" : "csv"}, {"zero_cells", zeros}},
           out);
    };
  });

  // bracket
  auto* bracket = app.add_subcommand("bracket", "Symbolic bracket monomials");
  bracket->require_subcommand(1);
  std::string expr;
  FormSource b_src;
  auto* b_eval = bracket->add_subcommand("eval", "Evaluate a bracket monomial on one form");
  b_eval->add_option("--expr", expr, "e.g. \"(a b)^4 (b c)^4 (c a)^4 ; deg=8\"")->required();
  b_src.add_to(b_eval, false);
  b_eval->callback([&] {
    action = [&] {
      const std::string kind = b_src.kind();
      const BracketMonomial mono = parse_bracket(expr);
      mono.check_homogeneous();
      const int d = mono.letters().front().degree;
      for (const auto& l : mono.letters())
        if (l.degree != d) throw std::invalid_argument("bracket eval binds one form, so all letters need one degree");
      json report{{"command", "bracket eval"}, {"expr", mono.to_string()}, {"order", mono.order()}, {"source", kind}};
      if (kind == "generic") {
        const PolyForm v = umbral_eval(mono, generic_form(d));
        report["coeffs"] = poly_form_json(v);
        report["hash"] = xpoly_hash(v);
      } else {
        const RatForm f = b_src.numeric(d, g.seed);
        report["form"] = form_json(f);
        report["coeffs"] = form_json(umbral_eval(mono, f));
      }
      emit(g, report, out);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  try {
    if (action) action();
    return 0;
  } catch (const Verdict& v) {
    return v.status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace binform
