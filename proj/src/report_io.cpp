#include "triality/report_io.hpp"

#include <sstream>

#include "json.hpp"

namespace triality::report_io {

using classify::Report;
using nlohmann::ordered_json;

namespace {

ordered_json jacquet_json(const classify::Report& rep, const groth::Elt& e) {
  ordered_json arr = ordered_json::array();
  for (const auto& [b, k] : e.c) {
    ordered_json term;
    term["s1"] = rat_str(b.chi.lam.s1);
    term["s2"] = rat_str(b.chi.lam.s2);
    term["chi1"] = rep.sc->describe(b.chi.a);
    term["chi2"] = rep.sc->describe(b.chi.b);
    term["mult"] = k.str();
    arr.push_back(term);
  }
  return arr;
}

}  // namespace

std::string report_text(const Report& rep) {
  std::ostringstream os;
  os << "input:      " << chars::torus_char_str(rep.sc, rep.input) << "\n";
  os << "normalized: " << chars::torus_char_str(rep.sc, rep.normalized) << "  (by w = "
     << (rep.normalizer.word().empty() ? "e" : rep.normalizer.word()) << ")\n";
  os << "singular:   " << rep.singular.label << "  (multiplicity " << rep.singular.multiplicity
     << ")\n";
  os << "R-set:      {";
  for (std::size_t i = 0; i < rep.rset.entries.size(); ++i)
    os << (i ? ", " : "") << rootdata::coroot_name(rep.rset.entries[i].coroot);
  os << "}  (#R = " << rep.rset.size() << ")\n";
  os << "family:     " << rep.family << "\n";
  if (!rep.alias_of.empty()) os << "isomorphic: I(chi) = I(chi') in the family " << rep.alias_of << "\n";
  if (rep.unclassified) {
    os << "verdict:    unclassified (outside the encoded families)\n";
    return os.str();
  }
  os << "length:     " << rep.length << "  (multiplicity <= " << rep.max_mult << ")\n";
  if (!rep.keys_note.empty()) os << "note:       " << rep.keys_note << "\n";
  for (std::size_t i = 0; i < rep.constituents.size(); ++i) {
    const auto& c = rep.constituents[i];
    os << "  [" << i << "] " << c.label << "\n";
    os << "      role: " << c.role;
    if (c.mult != 1) os << "  (multiplicity " << c.mult << ")";
    os << "\n";
    os << "      temperedness: " << classify::temperedness_str(c.temp) << "\n";
    if (c.jacquet_known) {
      os << "      r_0:";
      for (const auto& [b, k] : c.jacquet.c) {
        os << " ";
        if (k != 1) os << k << "*";
        os << chars::torus_char_str(rep.sc, b.chi);
      }
      os << "\n";
    } else {
      os << "      r_0: (split across the R-group not printed)\n";
    }
    if (c.aubert_partner >= 0) os << "      aubert partner: [" << c.aubert_partner << "]\n";
    if (c.reconstructed) os << "      reconstructed: " << c.printed_note << "\n";
  }
  return os.str();
}

std::string report_json(const Report& rep) {
  ordered_json j;
  j["input"] = chars::torus_char_str(rep.sc, rep.input);
  j["normalized"] = chars::torus_char_str(rep.sc, rep.normalized);
  j["normalizer"] = rep.normalizer.word();
  ordered_json sing;
  sing["label"] = rep.singular.label;
  sing["multiplicity"] = rep.singular.multiplicity.str();
  sing["regular"] = rep.singular.regular;
  j["singular"] = sing;
  ordered_json rset = ordered_json::array();
  for (const auto& e : rep.rset.entries) {
    ordered_json re;
    re["coroot"] = rootdata::coroot_name(e.coroot);
    re["witness"] = e.witness;
    rset.push_back(re);
  }
  j["rank1"] = rset;
  j["family"] = rep.family;
  j["alias_of"] = rep.alias_of;
  j["unclassified"] = rep.unclassified;
  j["length"] = rep.length.str();
  j["max_multiplicity"] = rep.max_mult.str();
  j["keys_note"] = rep.keys_note;
  ordered_json cons = ordered_json::array();
  for (const auto& c : rep.constituents) {
    ordered_json cj;
    cj["label"] = c.label;
    cj["role"] = c.role;
    cj["multiplicity"] = c.mult.str();
    cj["temperedness"] = classify::temperedness_str(c.temp);
    cj["jacquet_known"] = c.jacquet_known;
    if (c.jacquet_known) cj["jacquet"] = jacquet_json(rep, c.jacquet);
    cj["aubert_partner"] = c.aubert_partner;
    cj["reconstructed"] = c.reconstructed;
    if (c.reconstructed) cj["printed_note"] = c.printed_note;
    cons.push_back(cj);
  }
  j["constituents"] = cons;
  return j.dump(2) + "\n";
}

std::string json_roundtrip(const std::string& json_text) {
  ordered_json j = ordered_json::parse(json_text);
  return j.dump(2) + "\n";
}

}  // namespace triality::report_io
