// Command-line front end: scenario loading, classification queries,
// table regeneration, Aubert queries, unitary-region figures and the
// finite-group oracle runs.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "triality/checks.hpp"
#include "triality/report_io.hpp"
#include "triality/tables.hpp"
#include "triality/unitary.hpp"
#include "triality/weil.hpp"

using namespace triality;
using chars::Domain;
using chars::ScenarioPtr;
using chars::TorusChar;

namespace {

struct CharOptions {
  std::string s1 = "0", s2 = "0";
  std::string scenario_file;
  std::string chi1 = "1", chi2 = "1";
};

void add_char_options(CLI::App* cmd, CharOptions& opts, bool with_lambda = true) {
  if (with_lambda) {
    cmd->add_option("--s1", opts.s1, "s1 as an integer or p/q")->required();
    cmd->add_option("--s2", opts.s2, "s2 as an integer or p/q")->required();
  }
  cmd->add_option("--scenario", opts.scenario_file, "scenario file (atoms, orders, relations)");
  cmd->add_option("--chi1", opts.chi1, "chi1 expression over the scenario atoms (default 1)");
  cmd->add_option("--chi2", opts.chi2, "chi2 expression over the scenario atoms (default 1)");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ScenarioPtr load_scenario(const CharOptions& opts) {
  if (opts.scenario_file.empty()) return chars::trivial_scenario();
  return chars::Scenario::make(chars::parse_scenario_text(slurp(opts.scenario_file)));
}

TorusChar load_char(const ScenarioPtr& sc, const CharOptions& opts) {
  auto s1 = parse_rat(opts.s1), s2 = parse_rat(opts.s2);
  if (!s1 || !s2) throw std::runtime_error("rationals must be written p/q or n (no decimals)");
  return chars::make_torus_char(sc, *s1, *s2, sc->parse(Domain::E, opts.chi1),
                                sc->parse(Domain::F, opts.chi2));
}

const classify::CanonicalCase* find_case(const std::vector<classify::CanonicalCase>& cases,
                                         const std::string& id) {
  for (const auto& c : cases)
    if (c.id == id) return &c;
  return nullptr;
}

int cmd_orbit(const CharOptions& opts) {
  auto sc = load_scenario(opts);
  TorusChar chi = load_char(sc, opts);
  auto orbit = chars::char_orbit(sc, chi);
  std::map<TorusChar, int> mult;
  for (const auto& x : orbit) mult[x]++;
  std::cout << "orbit of " << chars::torus_char_str(sc, chi) << ":\n";
  for (const auto& [x, k] : mult)
    std::cout << "  " << chars::torus_char_str(sc, x) << "  x" << k << "\n";
  auto stab = chars::stabilizer(sc, chi);
  std::cout << "stabilizer order " << stab.size() << ": {";
  for (std::size_t i = 0; i < stab.size(); ++i)
    std::cout << (i ? ", " : "") << (stab[i].word().empty() ? "e" : stab[i].word());
  std::cout << "}\n";
  auto [dom, w] = chars::dominant_char(sc, chi);
  std::cout << "dominant representative " << chars::torus_char_str(sc, dom) << " via w = "
            << (w.word().empty() ? "e" : w.word()) << "\n";
  auto cls = chars::singular_class(sc, dom);
  std::cout << "singular class: " << cls.label << "\n";
  return 0;
}

int cmd_classify(const CharOptions& opts, bool as_json, const std::string& reading) {
  auto sc = load_scenario(opts);
  TorusChar chi = load_char(sc, opts);
  auto mode = reading == "verbatim" ? classify::KeysReading::Verbatim
                                    : classify::KeysReading::Corrected;
  classify::Report rep = classify::classify(sc, chi, mode);
  std::cout << (as_json ? report_io::report_json(rep) : report_io::report_text(rep));
  return 0;
}

int cmd_rank1(const CharOptions& opts) {
  auto sc = load_scenario(opts);
  TorusChar chi = load_char(sc, opts);
  auto [dom, w] = chars::dominant_char(sc, chi);
  auto r = classify::rank1_set(sc, dom);
  std::cout << "normalized: " << chars::torus_char_str(sc, dom) << "\n";
  std::cout << "#R = " << r.size() << "\n";
  for (const auto& e : r.entries)
    std::cout << "  " << rootdata::coroot_name(e.coroot) << "  [" << e.witness << "]\n";
  return 0;
}

int cmd_jacquet(const std::string& case_id) {
  auto cases = classify::canonical_cases(true);
  const auto* cc = find_case(cases, case_id);
  if (!cc) throw std::runtime_error("unknown case " + case_id + " (see --list)");
  groth::Calculus calc(cc->sc);
  std::cout << "case " << cc->id << " at " << chars::torus_char_str(cc->sc, cc->chi) << "\n\n";
  groth::Elt ps = calc.ps_class(cc->chi);
  std::cout << "r_0(I(chi)) = " << calc.to_string(calc.r0(ps)) << "\n\n";
  for (groth::Side s : {groth::Side::Alpha, groth::Side::Beta}) {
    groth::Elt rj = calc.jacquet(s, ps);
    std::cout << "r_" << groth::side_name(s) << "(I(chi)) = " << calc.to_string(rj) << "\n";
    std::cout << "  groupings of r_0 into r_0(I^" << groth::side_name(s) << ") pairs:\n";
    for (const auto& pair : calc.r0_grouping(s, cc->chi))
      std::cout << "    " << calc.to_string(pair) << "\n";
  }
  std::cout << "\nwall standard modules on this orbit:\n";
  for (groth::Side s : {groth::Side::Alpha, groth::Side::Beta}) {
    for (const auto& w : rootdata::Weyl::all()) {
      TorusChar mu = chars::weyl_act(cc->sc, w, cc->chi);
      if (!calc.st_defined(s, mu)) continue;
      groth::Elt sigma = calc.m_elt(calc.st_m(s, mu));
      std::cout << "  r_0(I_" << groth::side_name(s) << "(St" << chars::torus_char_str(cc->sc, mu)
                << ")) = " << calc.to_string(calc.r0(calc.jacquet_of_induced(s, s, sigma)))
                << "\n";
    }
  }
  classify::Report rep = classify::classify(cc->sc, cc->chi);
  std::cout << "\nconstituent Jacquet modules:\n";
  for (const auto& c : rep.constituents) {
    std::cout << "  " << c.label << ": "
              << (c.jacquet_known ? calc.to_string(c.jacquet) : std::string("(not printed)"))
              << "\n";
  }
  return 0;
}

int cmd_aubert(const std::string& case_id) {
  auto cases = classify::canonical_cases(true);
  const auto* cc = find_case(cases, case_id);
  if (!cc) throw std::runtime_error("unknown case " + case_id + " (see --list)");
  groth::Calculus calc(cc->sc);
  classify::Report rep = classify::classify(cc->sc, cc->chi);
  auto db = std::make_shared<classify::Database>();
  std::string id = db->add(calc, rep);
  classify::ScopedDatabase view(db, cc->sc);
  std::cout << "case " << cc->id << "\n";
  for (std::size_t i = 0; i < rep.constituents.size(); ++i) {
    const auto& c = rep.constituents[i];
    if (!c.jacquet_known) {
      std::cout << "  " << c.label << " -> (no Jacquet data)\n";
      continue;
    }
    groth::Elt img = calc.aubert(calc.constituent(id, static_cast<int>(i)), &view);
    std::cout << "  D_G(" << c.label << ") = " << calc.to_string(img);
    if (c.aubert_partner >= 0)
      std::cout << "   [partner: " << rep.constituents[c.aubert_partner].label << "]";
    std::cout << "\n";
  }
  return 0;
}

int cmd_tables(const std::string& which, const std::string& format, bool non_galois) {
  auto emit_one = [&](int i) { std::cout << tables::emit(i, format, !non_galois); };
  if (which == "all") {
    for (int i = 1; i <= 5; ++i) {
      std::cout << (format == "md" ? "### Table " : "# Table ") << i << "\n";
      emit_one(i);
      std::cout << "\n";
    }
    return 0;
  }
  int i = 0;
  try {
    i = std::stoi(which);
  } catch (...) {
    throw CLI::ValidationError("--which must be 1..5 or all");
  }
  if (i < 1 || i > 5) throw CLI::ValidationError("--which must be 1..5 or all");
  emit_one(i);
  return 0;
}

int cmd_region(const CharOptions& opts, const std::string& window, int grid,
               const std::string& out) {
  auto sc = load_scenario(opts);
  chars::CharElt chi1 = sc->parse(Domain::E, opts.chi1);
  chars::CharElt chi2 = sc->parse(Domain::F, opts.chi2);
  std::vector<Rat> w;
  std::stringstream ss(window);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    auto v = parse_rat(tok);
    if (!v) throw std::runtime_error("bad window entry " + tok);
    w.push_back(*v);
  }
  if (w.size() != 4) throw std::runtime_error("--window needs a,b,c,d");
  unitary::Region region = unitary::region_sample(sc, chi1, chi2, w[0], w[1], w[2], w[3], grid);
  std::string text;
  if (out.size() >= 4 && out.substr(out.size() - 4) == ".svg")
    text = unitary::region_svg(sc, region);
  else
    text = unitary::region_csv(sc, region);
  std::ofstream of(out);
  if (!of) throw std::runtime_error("cannot write " + out);
  of << text;
  std::cout << "wrote " << out << " (" << grid << "x" << grid << " nodes, "
            << region.overlays.size() << " reducibility segments, " << region.isolated.size()
            << " isolated points)\n";
  return 0;
}

int cmd_weil(const std::string& check, const std::string& model_name) {
  weil::Model model;
  if (model_name.rfind("builtin:", 0) == 0) {
    model = weil::builtin_model(model_name.substr(8));
  } else {
    model = weil::model_from_text(slurp(model_name));
  }
  weil::CheckReport rep;
  if (check == "prop314") rep = weil::prop314_verify(model);
  else if (check == "lemma315")
    rep = weil::lemma315_check(model);
  else if (check == "thm317")
    rep = weil::thm317_check(model);
  else if (check == "tensor")
    rep = weil::tensor_induction_consistency(model);
  else
    throw CLI::ValidationError("--check must be prop314|lemma315|thm317|tensor");
  for (const auto& l : rep.lines) std::cout << l << "\n";
  for (const auto& f : rep.failures) std::cout << "FAIL: " << f << "\n";
  std::cout << (rep.ok ? "PASS" : "FAIL") << ": " << check << " on " << model.name << "\n";
  return rep.ok ? 0 : 1;
}

int cmd_check(unsigned seed) {
  auto sum = checks::run_all(seed);
  for (const auto& l : sum.lines) std::cout << l << "\n";
  std::cout << sum.passed << " passed, " << sum.failed << " failed\n";
  return sum.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triality: Jacquet-module bookkeeping, Langlands classification and the unitary "
               "dual for the quasi-split adjoint triality form of D4"};
  app.require_subcommand(1);

  CharOptions orbit_opts, classify_opts, rank1_opts, region_opts;
  bool as_json = false;
  std::string reading = "corrected";
  std::string case_id, which = "all", format = "md", window = "0,4,0,6", out = "region.csv";
  bool non_galois = false, list_cases = false;
  int grid = 41;
  unsigned seed = 20240811;
  bool check_all = false;
  std::string weil_check = "prop314", weil_model = "builtin:d8";

  auto* orbit = app.add_subcommand("orbit", "Weyl orbit, stabilizer and dominant representative");
  add_char_options(orbit, orbit_opts);

  auto* cls = app.add_subcommand("classify", "constituents of I(s1,s2,chi1,chi2)");
  add_char_options(cls, classify_opts);
  cls->add_flag("--json", as_json, "machine-readable report");
  cls->add_option("--keys-reading", reading, "corrected|verbatim R-group reading")
      ->check(CLI::IsMember({"corrected", "verbatim"}));

  auto* rank1 = app.add_subcommand("rank1", "rank-1 reducibility set");
  add_char_options(rank1, rank1_opts);

  auto* jac = app.add_subcommand("jacquet", "functor expansions for a worked case");
  jac->add_option("--case", case_id, "case id, e.g. (3,5,1,1)");
  jac->add_flag("--list", list_cases, "list case ids");

  auto* aub = app.add_subcommand("aubert", "Aubert duality on a worked case");
  aub->add_option("--case", case_id, "case id, e.g. (3,5,1,1)");
  aub->add_flag("--list", list_cases, "list case ids");

  auto* tab = app.add_subcommand("tables", "regenerate tables 1..5");
  tab->add_option("--which", which, "1..5 or all");
  tab->add_option("--format", format, "md|csv")->check(CLI::IsMember({"md", "csv"}));
  tab->add_flag("--non-galois", non_galois, "drop the norm-kernel families (Remark 2)");

  auto* reg = app.add_subcommand("region", "unitary-dual region sampling (csv or svg)");
  add_char_options(reg, region_opts, false);
  reg->add_option("--window", window, "a,b,c,d rational window");
  reg->add_option("--grid", grid, "nodes per axis (n >= 2)");
  reg->add_option("--out", out, "output file (.csv or .svg)")->required();

  auto* weil_cmd = app.add_subcommand("weil", "finite-group oracle checks");
  weil_cmd->add_option("--check", weil_check, "prop314|lemma315|thm317|tensor");
  weil_cmd->add_option("--model", weil_model, "builtin:<d8|q8|d10|sl23|f42|d12c13> or a file");

  auto* chk = app.add_subcommand("check", "run the full invariant suite");
  chk->add_flag("--all", check_all, "run everything (default)");
  chk->add_option("--seed", seed, "RNG seed for the randomized suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(orbit)) return cmd_orbit(orbit_opts);
    if (app.got_subcommand(cls)) return cmd_classify(classify_opts, as_json, reading);
    if (app.got_subcommand(rank1)) return cmd_rank1(rank1_opts);
    if (app.got_subcommand(jac) || app.got_subcommand(aub)) {
      if (list_cases) {
        for (const auto& c : classify::canonical_cases(true)) std::cout << c.id << "\n";
        return 0;
      }
      if (case_id.empty()) throw std::runtime_error("--case required (or --list)");
      return app.got_subcommand(jac) ? cmd_jacquet(case_id) : cmd_aubert(case_id);
    }
    if (app.got_subcommand(tab)) return cmd_tables(which, format, non_galois);
    if (app.got_subcommand(reg)) return cmd_region(region_opts, window, grid, out);
    if (app.got_subcommand(weil_cmd)) return cmd_weil(weil_check, weil_model);
    if (app.got_subcommand(chk)) return cmd_check(seed);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
