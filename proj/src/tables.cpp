#include "triality/tables.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "triality/classify.hpp"

namespace triality::tables {

using chars::Domain;
using chars::Scenario;
using chars::ScenarioPtr;
using chars::TorusChar;
using classify::JDatum;
using groth::Calculus;
using groth::MKind;
using groth::Side;
using rootdata::Coroot;

namespace {

std::string fmt_linear_eq(int c1, int c2) {
  // c1*s1 + c2*s2 = 1 rendered without redundant coefficients.
  std::ostringstream os;
  if (c1 != 0) {
    if (c1 == -1) os << "-";
    else if (c1 != 1)
      os << c1;
    os << "s1";
  }
  if (c2 != 0) {
    if (c2 > 0 && c1 != 0) os << "+";
    if (c2 == -1) os << "-";
    else if (c2 != 1)
      os << c2;
    os << "s2";
  }
  os << "=1";
  return os.str();
}

std::string char_condition(Coroot c) {
  switch (c) {
    case Coroot::Alpha: return "chi1^2 = chi2oN";
    case Coroot::Beta: return "chi1|F = chi2^2";
    case Coroot::AlphaBeta: return "chi1 = chi2oN";
    case Coroot::TwoAlphaBeta: return "chi1 = 1";
    case Coroot::ThreeAlphaBeta: return "chi1|F = chi2";
    case Coroot::ThreeAlphaTwoBeta: return "chi2 = 1";
  }
  return "";
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string render(const Table& t, const std::string& format) {
  std::ostringstream os;
  if (format == "csv") {
    auto quote = [](const std::string& s) {
      if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
      std::string out = "\"";
      for (char c : s) {
        if (c == '"') out += "\"\"";
        else
          out += c;
      }
      return out + "\"";
    };
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << quote(t.header[i]);
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << quote(row[i]);
      os << "\n";
    }
    return os.str();
  }
  if (format == "md") {
    auto line = [&](const std::vector<std::string>& cells) {
      std::ostringstream ls;
      ls << "|";
      for (const auto& c : cells) ls << " " << c << " |";
      return ls.str();
    };
    os << line(t.header) << "\n|";
    for (std::size_t i = 0; i < t.header.size(); ++i) os << "---|";
    os << "\n";
    for (const auto& row : t.rows) os << line(row) << "\n";
    return os.str();
  }
  throw std::runtime_error("tables: format must be csv or md");
}

Table table1() {
  Table t;
  t.header = {"coroot", "exponent condition", "character condition"};
  for (Coroot c : rootdata::kCoroots) {
    auto [c1, c2] = rootdata::coroot_form(c);
    t.rows.push_back({rootdata::coroot_name(c), fmt_linear_eq(c1, c2), char_condition(c)});
  }
  return t;
}

// The eight #R > 1 family instances, in table order.
struct FamilyInstance {
  std::string label;
  ScenarioPtr sc;
  TorusChar chi;
};

std::vector<FamilyInstance> table2_instances() {
  auto tr = chars::trivial_scenario();
  auto mk = [](const std::string& text) { return Scenario::make(chars::parse_scenario_text(text)); };
  auto scE = mk("atom chi1 domain E order 3\nrel 1*res(chi1) = 0\n");
  auto scN = mk("galois true\natom chi2 domain F order 3\nrel 1*nm(chi2) = 0\n");
  auto sc2 = mk("atom chi2 domain F order 2\n");
  std::vector<FamilyInstance> out;
  out.push_back({"(1,2,1,1)", tr, chars::unramified(tr, 1, 2)});
  out.push_back({"(2/3,1,chi1,1;chi1|F=1)", scE,
                 chars::make_torus_char(scE, Rat(2, 3), 1, scE->atom("chi1"), scE->one(Domain::F))});
  out.push_back({"(2,3,1,chi2;chi2oN=1)", scN,
                 chars::make_torus_char(scN, 2, 3, scN->one(Domain::E), scN->atom("chi2"))});
  out.push_back({"(3,5,1,1)", tr, chars::unramified(tr, 3, 5)});
  out.push_back({"(1,2,1,chi2;chi2!=1,chi2oN=1)", scN,
                 chars::make_torus_char(scN, 1, 2, scN->one(Domain::E), scN->atom("chi2"))});
  out.push_back({"(1,2,1,chi2;chi2!=1,chi2^2=1)", sc2,
                 chars::make_torus_char(sc2, 1, 2, sc2->one(Domain::E), sc2->atom("chi2"))});
  out.push_back({"(1,2,chi1,chi2;chi1^2=1,chi1=chi2)", sc2,
                 chars::make_torus_char(sc2, 1, 2, sc2->nm(sc2->atom("chi2")), sc2->atom("chi2"))});
  out.push_back({"(1,2,chi1,1;chi1!=1,chi1|F=1)", scE,
                 chars::make_torus_char(scE, 1, 2, scE->atom("chi1"), scE->one(Domain::F))});
  return out;
}

Table table2() {
  Table t;
  t.header = {"#R", "reducible coroots", "relation", "(s1,s2,chi1,chi2)"};
  for (const auto& inst : table2_instances()) {
    auto r = classify::rank1_set(inst.sc, inst.chi);
    std::string coroots;
    for (const auto& e : r.entries) {
      if (!coroots.empty()) coroots += " ";
      coroots += rootdata::coroot_name(e.coroot);
    }
    // The relation column: a simple reflection permuting the set R.
    std::string rel = "-";
    for (const auto& w : {rootdata::Weyl::alpha(), rootdata::Weyl::beta()}) {
      bool permutes = true, moves = false;
      for (const auto& e : r.entries) {
        auto img = w.apply(e.coroot);
        if (img.sign < 0 || !r.contains(img.root)) permutes = false;
        if (!(img.root == e.coroot)) moves = true;
      }
      if (permutes && moves) rel = "w_" + (w == rootdata::Weyl::alpha() ? std::string("a") : std::string("b"));
    }
    t.rows.push_back({std::to_string(r.size()), coroots, rel, inst.label});
  }
  return t;
}

// Affine expression a + b*t rendered against the parameter name.
std::string fmt_affine(const Rat& a, const Rat& b, const std::string& t) {
  std::ostringstream os;
  if (b != 0) {
    if (b == -1) os << "-";
    else if (b != 1)
      os << rat_str(b) << "*";
    os << t;
    if (a > 0) os << "+" << rat_str(a);
    else if (a < 0)
      os << rat_str(a);
  } else {
    os << rat_str(a);
  }
  return os.str();
}

// One generic instance of a rank-1 line, parametrized by t.
struct Table3Row {
  Coroot coroot;
  ScenarioPtr sc;
  std::string param;  // "s1" or "s2"
  TorusChar at(const Rat& t) const {
    Rat s1, s2;
    switch (coroot) {
      case Coroot::Alpha: s1 = t; s2 = 2 * t - 1; break;
      case Coroot::Beta: s1 = (2 * t - 1) / 3; s2 = t; break;
      case Coroot::AlphaBeta: s1 = t; s2 = t + 1; break;
      case Coroot::TwoAlphaBeta: s1 = 1; s2 = t; break;
      case Coroot::ThreeAlphaBeta: s1 = (t + 1) / 3; s2 = t; break;
      case Coroot::ThreeAlphaTwoBeta: s1 = t; s2 = 1; break;
    }
    chars::CharElt a = sc->one(Domain::E), b = sc->one(Domain::F);
    for (const auto& at : sc->spec().atoms) {
      if (at.domain == Domain::E) a = sc->atom(at.name);
      else
        b = sc->atom(at.name);
    }
    return chars::make_torus_char(sc, s1, s2, a, b);
  }
};

std::vector<Table3Row> table3_rows() {
  auto mk = [](const std::string& text) { return Scenario::make(chars::parse_scenario_text(text)); };
  std::vector<Table3Row> rows;
  rows.push_back({Coroot::Alpha,
                  mk("atom chi1 domain E order inf\natom chi2 domain F order inf\n"
                     "rel 2*chi1 -1*nm(chi2) = 0\n"),
                  "s1"});
  rows.push_back({Coroot::Beta,
                  mk("atom chi1 domain E order inf\natom chi2 domain F order inf\n"
                     "rel 1*res(chi1) -2*chi2 = 0\n"),
                  "s2"});
  rows.push_back({Coroot::AlphaBeta,
                  mk("atom chi2 domain F order inf\natom chi1 domain E order inf\n"
                     "rel 1*chi1 -1*nm(chi2) = 0\n"),
                  "s1"});
  rows.push_back({Coroot::TwoAlphaBeta, mk("atom chi2 domain F order inf\n"), "s2"});
  rows.push_back({Coroot::ThreeAlphaBeta,
                  mk("atom chi1 domain E order inf\natom chi2 domain F order inf\n"
                     "rel 1*res(chi1) -1*chi2 = 0\n"),
                  "s2"});
  rows.push_back({Coroot::ThreeAlphaTwoBeta, mk("atom chi1 domain E order inf\n"), "s1"});
  return rows;
}

// The delta-twist standard module and its det-twist partner on the
// orbit of chi, described through the engine.
struct WallData {
  Side side;
  JDatum sub, quot;
};

WallData wall_data(const ScenarioPtr& sc, const TorusChar& chi) {
  Calculus calc(sc);
  for (Side side : {Side::Alpha, Side::Beta}) {
    for (const auto& w : rootdata::Weyl::all()) {
      TorusChar mu = chars::weyl_act(sc, w, chi);
      if (!calc.st_defined(side, mu)) continue;
      WallData out;
      out.side = side;
      out.sub = classify::twist_datum(sc, side, MKind::St, mu);
      out.quot = classify::twist_datum(sc, side, MKind::Triv,
                                       chars::weyl_act(sc, groth::w_simple(side), mu));
      return out;
    }
  }
  throw std::runtime_error("tables: no wall point on the orbit");
}

std::string module_str(const ScenarioPtr& sc, const JDatum& d, const std::string& s_expr) {
  // Standard-module presentation I_gamma(s, sigma x twist) with the
  // symbolic exponent substituted for the sampled one.
  JDatum copy = d;
  std::string text = classify::jdatum_str(sc, copy);
  if (!text.empty() && text[0] == 'J') text = "I" + text.substr(1);
  auto open = text.find('(');
  auto comma = text.find(',', open);
  return text.substr(0, open + 1) + s_expr + text.substr(comma);
}

Table table3() {
  Table t;
  t.header = {"condition", "subrepresentation", "Langlands quotient"};
  for (const auto& row : table3_rows()) {
    Rat t1 = 5, t2 = 8;  // generic samples on the line
    WallData w1 = wall_data(row.sc, row.at(t1));
    WallData w2 = wall_data(row.sc, row.at(t2));
    // Affine interpolation of the twist exponent in the row parameter.
    Rat b = (w2.sub.s - w1.sub.s) / (t2 - t1);
    Rat a = w1.sub.s - b * t1;
    std::string s_expr = fmt_affine(a, b, row.param);
    auto [c1, c2] = rootdata::coroot_form(row.coroot);
    t.rows.push_back({fmt_linear_eq(c1, c2) + " & " + char_condition(row.coroot),
                      module_str(row.sc, w1.sub, s_expr), module_str(row.sc, w1.quot, s_expr)});
  }
  return t;
}

Table table4(bool galois) {
  Table t;
  t.header = {"family", "subrepresentation", "subquotients", "Langlands quotient"};
  std::vector<std::string> order = {"(1,2,chi1,1;chi1|F=1)", "(1,2,1,chi2;chi2^2=1)",
                                    "(1,2,chi1,chi2;chi1^2=1,chi1=chi2)",
                                    "(2,3,1,chi2;chi2oN=1)", "(3,5,1,1)"};
  auto db = classify::build_database(galois);
  for (const auto& fam : order) {
    const classify::Database::Entry* entry = nullptr;
    for (const auto& e : db->entries())
      if (e.report.family == fam) entry = &e;
    if (!entry) continue;  // dropped in non-Galois mode
    const auto& rep = entry->report;
    if (!rep.alias_of.empty()) {
      t.rows.push_back({fam, "= " + rep.alias_of, "", ""});
      continue;
    }
    std::string sub, mids, lq;
    for (const auto& c : rep.constituents) {
      if (c.role == "subrepresentation") sub = c.label;
      else if (c.role == "Langlands quotient")
        lq = c.label;
      else {
        if (!mids.empty()) mids += " ; ";
        mids += c.label;
      }
    }
    t.rows.push_back({fam, sub, mids, lq});
  }
  return t;
}

Table table5(bool galois) {
  Table t;
  t.header = {"family", "subrepresentation", "Langlands quotient"};
  std::vector<std::string> order = {"(1,2,1,chi2;chi2oN=1)", "(2/3,1,chi1,1;chi1|F=1)",
                                    "(2,3,1,1)", "(1,3/2,1,chi2;chi2^2=1)",
                                    "(1/2,1,chi1,1;chi1^2=1)"};
  auto db = classify::build_database(galois);
  for (const auto& fam : order) {
    const classify::Database::Entry* entry = nullptr;
    for (const auto& e : db->entries())
      if (e.report.family == fam) entry = &e;
    if (!entry) continue;
    const auto& rep = entry->report;
    std::string sub, lq;
    for (const auto& c : rep.constituents) {
      if (c.role == "subrepresentation") sub = c.label;
      if (c.role == "Langlands quotient") lq = c.label;
    }
    t.rows.push_back({fam, sub, lq});
  }
  return t;
}

}  // namespace

std::string emit(int which, const std::string& format, bool galois) {
  switch (which) {
    case 1: return render(table1(), format);
    case 2: return render(table2(), format);
    case 3: return render(table3(), format);
    case 4: return render(table4(galois), format);
    case 5: return render(table5(galois), format);
    default: throw std::runtime_error("tables: which must be 1..5");
  }
}

}  // namespace triality::tables
