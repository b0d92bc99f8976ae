#include "triality/charlattice.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace triality::chars {

using intlinalg::Mat;
using intlinalg::Row;

namespace {

Row unit(std::size_t n, std::size_t i) {
  Row r(n, 0);
  r[i] = 1;
  return r;
}

bool mat_equal(const Mat& a, const Mat& b) { return a == b; }

std::string power_str(const std::string& g, const Int& k) {
  if (k == 1) return g;
  std::ostringstream os;
  os << g << "^" << k;
  return os.str();
}

}  // namespace

std::shared_ptr<const Scenario> Scenario::make(const ScenarioSpec& spec) {
  auto sc = std::shared_ptr<Scenario>(new Scenario());
  sc->spec_ = spec;

  std::vector<std::size_t> atoms_e, atoms_f;  // indices into spec.atoms
  for (std::size_t i = 0; i < spec.atoms.size(); ++i) {
    const auto& a = spec.atoms[i];
    if (a.name.empty() || a.name == "1")
      throw std::runtime_error("scenario: bad atom name");
    for (std::size_t j = 0; j < i; ++j)
      if (spec.atoms[j].name == a.name)
        throw std::runtime_error("scenario: duplicate atom " + a.name);
    (a.domain == Domain::E ? atoms_e : atoms_f).push_back(i);
  }
  const std::size_t p = atoms_e.size(), q = atoms_f.size();
  const std::size_t ne = 2 * p + q;  // atoms, nm(F-atoms), nm(res(E-atoms))
  const std::size_t nf = q + p;      // atoms, res(E-atoms)

  sc->gen_names_e_.resize(ne);
  sc->gen_names_f_.resize(nf);
  for (std::size_t i = 0; i < p; ++i) {
    const auto& nm = spec.atoms[atoms_e[i]].name;
    sc->atom_e_[nm] = i;
    sc->gen_names_e_[i] = nm;
    sc->gen_names_e_[p + q + i] = "nm(res(" + nm + "))";
    sc->gen_names_f_[q + i] = "res(" + nm + ")";
  }
  for (std::size_t j = 0; j < q; ++j) {
    const auto& nm = spec.atoms[atoms_f[j]].name;
    sc->atom_f_[nm] = j;
    sc->gen_names_f_[j] = nm;
    sc->gen_names_e_[p + j] = "nm(" + nm + ")";
  }

  // res on the E generators; row i = image of generator i in Z^nf.
  sc->res_.assign(ne, Row(nf, 0));
  for (std::size_t i = 0; i < p; ++i) sc->res_[i][q + i] = 1;
  for (std::size_t j = 0; j < q; ++j) sc->res_[p + j][j] = 3;  // res(nm(b)) = 3b
  for (std::size_t i = 0; i < p; ++i) sc->res_[p + q + i][q + i] = 3;
  // nm on the F generators.
  sc->nm_.assign(nf, Row(ne, 0));
  for (std::size_t j = 0; j < q; ++j) sc->nm_[j][p + j] = 1;
  for (std::size_t i = 0; i < p; ++i) sc->nm_[q + i][p + q + i] = 1;

  Mat rel_e, rel_f;
  for (std::size_t i = 0; i < p; ++i) {
    const auto& a = spec.atoms[atoms_e[i]];
    if (a.order < 0) throw std::runtime_error("scenario: negative order");
    if (a.order > 0) {
      Row r(ne, 0);
      r[i] = a.order;
      rel_e.push_back(r);
    }
  }
  for (std::size_t j = 0; j < q; ++j) {
    const auto& a = spec.atoms[atoms_f[j]];
    if (a.order < 0) throw std::runtime_error("scenario: negative order");
    if (a.order > 0) {
      Row r(nf, 0);
      r[j] = a.order;
      rel_f.push_back(r);
    }
  }
  for (const auto& rel : spec.relations) {
    if (rel.terms.empty()) continue;
    std::optional<Domain> dom;
    Row re(ne, 0), rf(nf, 0);
    for (const auto& t : rel.terms) {
      auto ite = sc->atom_e_.find(t.atom);
      auto itf = sc->atom_f_.find(t.atom);
      Domain target;
      if (t.op == TermOp::Plain) {
        if (ite != sc->atom_e_.end()) {
          target = Domain::E;
          re[ite->second] += t.coef;
        } else if (itf != sc->atom_f_.end()) {
          target = Domain::F;
          rf[itf->second] += t.coef;
        } else {
          throw std::runtime_error("scenario: unknown atom " + t.atom);
        }
      } else if (t.op == TermOp::Res) {
        if (ite == sc->atom_e_.end())
          throw std::runtime_error("scenario: res() needs an E atom: " + t.atom);
        target = Domain::F;
        rf[q + ite->second] += t.coef;
      } else if (t.op == TermOp::Nm) {
        if (itf == sc->atom_f_.end())
          throw std::runtime_error("scenario: nm() needs an F atom: " + t.atom);
        target = Domain::E;
        re[p + itf->second] += t.coef;
      } else {  // NmRes
        if (ite == sc->atom_e_.end())
          throw std::runtime_error("scenario: nm(res()) needs an E atom: " + t.atom);
        target = Domain::E;
        re[p + q + ite->second] += t.coef;
      }
      if (dom && *dom != target)
        throw std::runtime_error("scenario: relation mixes E and F terms");
      dom = target;
    }
    if (*dom == Domain::E)
      rel_e.push_back(re);
    else
      rel_f.push_back(rf);
  }

  // Closure: the maps must descend to the quotients, and in the
  // non-Galois case nm must be injective (norm surjectivity, so a
  // trivial norm pullback forces a trivial character).
  Mat le = intlinalg::hnf(rel_e), lf = intlinalg::hnf(rel_f);
  while (true) {
    Mat lf2 = lf;
    for (const auto& r : le) lf2.push_back(intlinalg::mat_apply(sc->res_, r));
    lf2 = intlinalg::hnf(std::move(lf2));
    Mat le2 = le;
    for (const auto& r : lf2) le2.push_back(intlinalg::mat_apply(sc->nm_, r));
    le2 = intlinalg::hnf(std::move(le2));
    if (!sc->spec_.galois) {
      Mat ker = intlinalg::preimage(sc->nm_, ne, le2);
      for (const auto& r : ker) lf2.push_back(r);
      lf2 = intlinalg::hnf(std::move(lf2));
    }
    if (mat_equal(le2, le) && mat_equal(lf2, lf)) break;
    le = std::move(le2);
    lf = std::move(lf2);
  }
  sc->lat_e_ = std::move(le);
  sc->lat_f_ = std::move(lf);

  // Consistency: each atom must keep its declared order in the closure.
  for (std::size_t i = 0; i < p; ++i) {
    const auto& a = spec.atoms[atoms_e[i]];
    Int got = intlinalg::element_order(sc->lat_e_, unit(ne, i));
    if (got != a.order)
      throw std::runtime_error("scenario: inconsistent hypotheses: atom " + a.name +
                               " has order " + got.str() + ", declared " +
                               (a.order == 0 ? std::string("inf") : a.order.str()));
  }
  for (std::size_t j = 0; j < q; ++j) {
    const auto& a = spec.atoms[atoms_f[j]];
    Int got = intlinalg::element_order(sc->lat_f_, unit(nf, j));
    if (got != a.order)
      throw std::runtime_error("scenario: inconsistent hypotheses: atom " + a.name +
                               " has order " + got.str() + ", declared " +
                               (a.order == 0 ? std::string("inf") : a.order.str()));
  }
  return sc;
}

CharElt Scenario::reduce(CharElt x) const {
  x.v = intlinalg::lattice_reduce(x.domain == Domain::E ? lat_e_ : lat_f_, std::move(x.v));
  return x;
}

CharElt Scenario::one(Domain d) const {
  return CharElt{d, Row(d == Domain::E ? gen_names_e_.size() : gen_names_f_.size(), 0)};
}

CharElt Scenario::atom(const std::string& name) const {
  auto ite = atom_e_.find(name);
  if (ite != atom_e_.end()) return reduce(CharElt{Domain::E, unit(gen_names_e_.size(), ite->second)});
  auto itf = atom_f_.find(name);
  if (itf != atom_f_.end()) return reduce(CharElt{Domain::F, unit(gen_names_f_.size(), itf->second)});
  throw std::runtime_error("unknown atom " + name);
}

CharElt Scenario::res(const CharElt& x) const {
  if (x.domain != Domain::E) throw std::runtime_error("res: E element expected");
  return reduce(CharElt{Domain::F, intlinalg::mat_apply(res_, x.v)});
}

CharElt Scenario::nm(const CharElt& x) const {
  if (x.domain != Domain::F) throw std::runtime_error("nm: F element expected");
  return reduce(CharElt{Domain::E, intlinalg::mat_apply(nm_, x.v)});
}

CharElt Scenario::norm_twist(const CharElt& x) const { return nm(res(x)); }

CharElt Scenario::add(const CharElt& x, const CharElt& y) const {
  if (x.domain != y.domain) throw std::runtime_error("add: domain mismatch");
  CharElt z = x;
  for (std::size_t i = 0; i < z.v.size(); ++i) z.v[i] += y.v[i];
  return reduce(std::move(z));
}

CharElt Scenario::neg(const CharElt& x) const {
  CharElt z = x;
  for (auto& v : z.v) v = -v;
  return reduce(std::move(z));
}

CharElt Scenario::mul(const Int& k, const CharElt& x) const {
  CharElt z = x;
  for (auto& v : z.v) v *= k;
  return reduce(std::move(z));
}

bool Scenario::is_trivial(const CharElt& x) const {
  for (const auto& v : x.v)
    if (v != 0) return false;
  return true;
}

bool Scenario::equal(const CharElt& x, const CharElt& y) const {
  return x.domain == y.domain && x.v == y.v;  // both stored reduced
}

Int Scenario::order(const CharElt& x) const {
  return intlinalg::element_order(x.domain == Domain::E ? lat_e_ : lat_f_, x.v);
}

std::string Scenario::describe(const CharElt& x) const {
  const auto& names = x.domain == Domain::E ? gen_names_e_ : gen_names_f_;
  std::string out;
  for (std::size_t i = 0; i < x.v.size(); ++i) {
    if (x.v[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += power_str(names[i], x.v[i]);
  }
  return out.empty() ? "1" : out;
}

CharElt Scenario::parse(Domain d, const std::string& expr) const {
  // factor ::= '1' | name | 'res(' expr ')' | 'nm(' expr ')' ; each
  // factor may carry '^<int>'; factors are joined by '*'.
  std::size_t pos = 0;
  auto skip_ws = [&] { while (pos < expr.size() && isspace(static_cast<unsigned char>(expr[pos]))) ++pos; };
  std::function<CharElt(Domain)> parse_product = [&](Domain dom) -> CharElt {
    CharElt acc = one(dom);
    bool first = true;
    while (true) {
      skip_ws();
      if (pos >= expr.size() || expr[pos] == ')') {
        if (first) throw std::runtime_error("char expr: empty product");
        return acc;
      }
      if (!first) {
        if (expr[pos] != '*') throw std::runtime_error("char expr: expected '*'");
        ++pos;
        skip_ws();
      }
      CharElt f{dom, {}};
      if (expr.compare(pos, 4, "res(") == 0) {
        pos += 4;
        CharElt inner = parse_product(Domain::E);
        if (pos >= expr.size() || expr[pos] != ')') throw std::runtime_error("char expr: ')' expected");
        ++pos;
        f = res(inner);
      } else if (expr.compare(pos, 3, "nm(") == 0) {
        pos += 3;
        CharElt inner = parse_product(Domain::F);
        if (pos >= expr.size() || expr[pos] != ')') throw std::runtime_error("char expr: ')' expected");
        ++pos;
        f = nm(inner);
      } else {
        std::size_t start = pos;
        while (pos < expr.size() && (isalnum(static_cast<unsigned char>(expr[pos])) || expr[pos] == '_'))
          ++pos;
        std::string name = expr.substr(start, pos - start);
        if (name.empty()) throw std::runtime_error("char expr: name expected");
        f = name == "1" ? one(dom) : atom(name);
      }
      if (f.domain != dom) throw std::runtime_error("char expr: domain mismatch");
      if (pos < expr.size() && expr[pos] == '^') {
        ++pos;
        bool neg_exp = false;
        if (pos < expr.size() && (expr[pos] == '-' || expr[pos] == '+')) neg_exp = expr[pos++] == '-';
        std::size_t start = pos;
        while (pos < expr.size() && isdigit(static_cast<unsigned char>(expr[pos]))) ++pos;
        if (start == pos) throw std::runtime_error("char expr: exponent expected");
        Int k(expr.substr(start, pos - start));
        f = mul(neg_exp ? -k : k, f);
      }
      acc = add(acc, f);
      first = false;
    }
  };
  CharElt out = parse_product(d);
  skip_ws();
  if (pos != expr.size()) throw std::runtime_error("char expr: trailing input");
  return out;
}

ScenarioPtr trivial_scenario() {
  static ScenarioPtr sc = Scenario::make(ScenarioSpec{});
  return sc;
}

ScenarioSpec parse_scenario_text(const std::string& text) {
  ScenarioSpec spec;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("scenario line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "galois") {
      std::string v;
      if (!(ls >> v) || (v != "true" && v != "false")) fail("galois true|false");
      spec.galois = v == "true";
    } else if (kw == "atom") {
      AtomSpec a;
      std::string domkw, dom, orderkw, ord;
      if (!(ls >> a.name >> domkw >> dom >> orderkw >> ord) || domkw != "domain" || orderkw != "order")
        fail("atom <name> domain E|F order <n|inf>");
      if (dom == "E")
        a.domain = Domain::E;
      else if (dom == "F")
        a.domain = Domain::F;
      else
        fail("domain must be E or F");
      a.order = ord == "inf" ? Int(0) : Int(ord);
      spec.atoms.push_back(a);
    } else if (kw == "rel") {
      RelSpec rel;
      std::string tok;
      bool seen_eq = false;
      while (ls >> tok) {
        if (tok == "=") {
          std::string zero;
          if (!(ls >> zero) || zero != "0") fail("relation must end in '= 0'");
          seen_eq = true;
          break;
        }
        auto star = tok.find('*');
        if (star == std::string::npos) fail("term must be <k>*<name-or-call>");
        RelTerm t;
        t.coef = Int(tok.substr(0, star));
        std::string rhs = tok.substr(star + 1);
        if (rhs.rfind("res(", 0) == 0 && rhs.back() == ')') {
          t.op = TermOp::Res;
          t.atom = rhs.substr(4, rhs.size() - 5);
        } else if (rhs.rfind("nm(res(", 0) == 0 && rhs.size() > 9 &&
                   rhs.compare(rhs.size() - 2, 2, "))") == 0) {
          t.op = TermOp::NmRes;
          t.atom = rhs.substr(7, rhs.size() - 9);
        } else if (rhs.rfind("nm(", 0) == 0 && rhs.back() == ')') {
          t.op = TermOp::Nm;
          t.atom = rhs.substr(3, rhs.size() - 4);
        } else {
          t.op = TermOp::Plain;
          t.atom = rhs;
        }
        rel.terms.push_back(t);
      }
      if (!seen_eq) fail("relation must end in '= 0'");
      spec.relations.push_back(rel);
    } else {
      fail("unknown keyword " + kw);
    }
  }
  return spec;
}

// -- torus characters -------------------------------------------------------

TorusChar make_torus_char(const ScenarioPtr& sc, const Rat& s1, const Rat& s2,
                          const CharElt& a, const CharElt& b) {
  if (a.domain != Domain::E || b.domain != Domain::F)
    throw std::runtime_error("make_torus_char: (E,F) pair expected");
  (void)sc;
  return TorusChar{{s1, s2}, a, b};
}

TorusChar unramified(const ScenarioPtr& sc, const Rat& s1, const Rat& s2) {
  return TorusChar{{s1, s2}, sc->one(Domain::E), sc->one(Domain::F)};
}

TorusChar weyl_act(const ScenarioPtr& sc, const rootdata::Weyl& w, const TorusChar& chi) {
  TorusChar out = chi;
  out.lam = w.apply(chi.lam);
  const std::string& word = w.word();
  CharElt a = chi.a, b = chi.b;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it == 'a') {
      a = sc->add(sc->neg(a), sc->nm(b));
    } else {
      b = sc->add(sc->res(a), sc->neg(b));
    }
  }
  out.a = a;
  out.b = b;
  return out;
}

std::vector<rootdata::Weyl> stabilizer(const ScenarioPtr& sc, const TorusChar& chi) {
  std::vector<rootdata::Weyl> out;
  for (const auto& w : rootdata::Weyl::all())
    if (weyl_act(sc, w, chi) == chi) out.push_back(w);
  return out;
}

std::vector<TorusChar> char_orbit(const ScenarioPtr& sc, const TorusChar& chi) {
  std::vector<TorusChar> out;
  for (const auto& w : rootdata::Weyl::all()) out.push_back(weyl_act(sc, w, chi));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<TorusChar, rootdata::Weyl> dominant_char(const ScenarioPtr& sc, const TorusChar& chi) {
  for (const auto& w : rootdata::Weyl::all()) {
    if (rootdata::is_dominant(w.apply(chi.lam))) return {weyl_act(sc, w, chi), w};
  }
  throw std::logic_error("dominant_char");
}

std::string torus_char_str(const ScenarioPtr& sc, const TorusChar& chi) {
  return "(" + rat_str(chi.lam.s1) + "," + rat_str(chi.lam.s2) + "," + sc->describe(chi.a) +
         "," + sc->describe(chi.b) + ")";
}

// -- singular classification ------------------------------------------------

namespace {

std::vector<rootdata::Weyl> minimal_generators(const std::vector<rootdata::Weyl>& stab) {
  // Greedy: add stabilizer elements (shortest first) until they
  // generate the whole subgroup.
  std::vector<rootdata::Weyl> gens;
  auto closure = [](const std::vector<rootdata::Weyl>& g) {
    std::vector<rootdata::Weyl> cl{rootdata::Weyl::identity()};
    for (std::size_t i = 0; i < cl.size(); ++i) {
      for (const auto& y : g) {
        auto z = cl[i] * y;
        if (std::find(cl.begin(), cl.end(), z) == cl.end()) cl.push_back(z);
      }
    }
    return cl;
  };
  for (const auto& w : stab) {
    if (w == rootdata::Weyl::identity()) continue;
    auto cl = closure(gens);
    if (std::find(cl.begin(), cl.end(), w) != cl.end()) continue;
    gens.push_back(w);
    if (closure(gens).size() == stab.size()) break;
  }
  return gens;
}

}  // namespace

SingularClass singular_class(const ScenarioPtr& sc, const TorusChar& chi) {
  if (!rootdata::is_dominant(chi.lam))
    throw std::runtime_error("singular_class: dominant character expected");
  auto stab = stabilizer(sc, chi);
  SingularClass out;
  out.multiplicity = Int(stab.size());
  out.stabilizer_generators = minimal_generators(stab);
  if (stab.size() == 1) {
    out.regular = true;
    out.label = "regular";
    return out;
  }

  const bool lam_zero = chi.lam.s1 == 0 && chi.lam.s2 == 0;
  const bool a1 = sc->is_trivial(chi.a);
  const bool b1 = sc->is_trivial(chi.b);
  const bool a_sq = sc->is_trivial(sc->mul(2, chi.a));
  const bool b_sq = sc->is_trivial(sc->mul(2, chi.b));
  const bool res_a_1 = sc->is_trivial(sc->res(chi.a));
  const CharElt res_a = sc->res(chi.a);

  if (!lam_zero) {
    // Non-unitary singular families live on the two chamber walls.
    using rootdata::Coroot;
    if (rootdata::pairing(chi.lam, Coroot::Alpha) == 0)
      out.label = "(s1,2s1,chi1,chi2;<w_a>;s1>0, chi1^2=chi2oN)";
    else if (rootdata::pairing(chi.lam, Coroot::Beta) == 0)
      out.label = "(s1,3/2*s1,chi1,chi2;<w_b>;s1>0, chi1|F=chi2^2)";
    else
      out.label = "unlisted singular";
    return out;
  }

  switch (stab.size()) {
    case 12:
      out.label = (a1 && b1) ? "(1,1;D_6)" : "unlisted singular (order 12)";
      break;
    case 6:
      out.label = (b1 && res_a_1 && !a1) ? "(chi1,1;S_3)" : "unlisted singular (order 6)";
      break;
    case 4:
      if (b1 && a_sq && !res_a_1)
        out.label = "(chi1,1;<w_a,w_3a2b>)";
      else if (a1 && b_sq && !b1)
        out.label = "(1,chi2;<w_b,w_2ab>)";
      else if (a_sq && !res_a_1 && sc->equal(res_a, chi.b))
        out.label = "(chi1,chi1;<w_3ab,w_ab>)";
      else
        out.label = "unlisted singular (order 4)";
      break;
    case 2: {
      const auto g = out.stabilizer_generators.at(0);
      using rootdata::Coroot;
      using rootdata::Weyl;
      if (g == Weyl::longest())
        out.label = "(chi1,chi2;<w_a w_3a2b>;chi1^2=1, chi2^2=1)";
      else if (g == Weyl::alpha())
        out.label = "(chi1,chi2;<w_a>;chi1^2=chi2oN)";
      else if (g == Weyl::reflection(Coroot::AlphaBeta))
        out.label = "(chi1,chi2;<w_ab>;chi1=chi2oN)";
      else if (g == Weyl::reflection(Coroot::TwoAlphaBeta))
        out.label = "(1,chi2;<w_2ab>)";
      else if (g == Weyl::reflection(Coroot::ThreeAlphaTwoBeta))
        out.label = "(chi1,1;<w_3a2b>)";
      else if (g == Weyl::beta())
        out.label = "(chi1,chi2;<w_b>;chi1=chi2^2)";
      else if (g == Weyl::reflection(Coroot::ThreeAlphaBeta))
        out.label = "(chi1,chi2;<w_3ab>;chi1=chi2)";
      else
        out.label = "unlisted singular (order 2)";
      break;
    }
    default:
      out.label = "unlisted singular (order " + std::to_string(stab.size()) + ")";
  }
  return out;
}

}  // namespace triality::chars
