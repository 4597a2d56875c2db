// Copyright 2026 The npk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "npk/report.hpp"

#include <sstream>

#include "json_scalar.hpp"

namespace npk {
namespace {

using detail::ojson;
using detail::scalar_json;
using detail::scalar_report_json;

std::string label_of(const std::vector<std::string>& labels, std::size_t i) {
  return i < labels.size() ? labels[i] : "#" + std::to_string(i);
}

struct WitnessSpec {
  const char* key;
  const char* quantity;
  std::size_t args;  // leading basis-index arguments in Defect::at
};

// Defects of a report, in output order, with how to read their witness tuple.
std::vector<std::pair<WitnessSpec, const Defect*>> report_defects(const ClassificationReport& r) {
  std::vector<std::pair<WitnessSpec, const Defect*>> out = {
      {{"jacobi", "jacobi", 3}, &r.jacobi},
      {{"j_squared", "(J^2 + I)", 2}, &r.j_squared},
      {{"compatibility", "(J^T G J - G)", 2}, &r.compatibility},
  };
  if (r.evaluated) {
    out.push_back({{"nk_psi_symmetrized", "psi(a,b,c) + psi(c,b,a)", 3}, &r.nk_symmetrized});
    out.push_back({{"nk_psi_polarized", "psi(x,y,x)", 3}, &r.nk_polarized});
    out.push_back({{"nk_nabla", "(nabla_a J) b + (nabla_b J) a", 2}, &r.nk_nabla});
    out.push_back({{"integrability", "N", 2}, &r.integrability});
    out.push_back({{"omega_closed", "d omega", 3}, &r.omega_closed});
  }
  return out;
}

std::string call_text(const WitnessSpec& spec, const Defect& d,
                      const std::vector<std::string>& labels) {
  std::string key = spec.key;
  if (key == "nk_psi_polarized" && d.at.size() == 3) {
    const std::string x = d.at[0] == d.at[1]
                              ? label_of(labels, d.at[0])
                              : label_of(labels, d.at[0]) + "+" + label_of(labels, d.at[1]);
    return "psi(" + x + ", " + label_of(labels, d.at[2]) + ", " + x + ")";
  }
  if (key == "jacobi" && d.at.size() == 4) {
    return "cyclic sum [[" + label_of(labels, d.at[0]) + ", " + label_of(labels, d.at[1]) +
           "], " + label_of(labels, d.at[2]) + "] component " + label_of(labels, d.at[3]);
  }
  if ((key == "j_squared" || key == "compatibility") && d.at.size() == 2) {
    return std::string(spec.quantity) + "[" + label_of(labels, d.at[0]) + ", " +
           label_of(labels, d.at[1]) + "]";
  }
  if (key == "nk_psi_symmetrized" && d.at.size() == 3) {
    const auto a = label_of(labels, d.at[0]);
    const auto b = label_of(labels, d.at[1]);
    const auto c = label_of(labels, d.at[2]);
    return "psi(" + a + ", " + b + ", " + c + ") + psi(" + c + ", " + b + ", " + a + ")";
  }
  if (key == "nk_nabla" && d.at.size() == 2) {
    const auto a = label_of(labels, d.at[0]);
    const auto b = label_of(labels, d.at[1]);
    return "(nabla_" + a + " J) " + b + " + (nabla_" + b + " J) " + a;
  }
  std::string s = std::string(spec.quantity) + "(";
  for (std::size_t i = 0; i < d.at.size() && i < spec.args; ++i) {
    if (i) s += ", ";
    s += label_of(labels, d.at[i]);
  }
  return s + ")";
}

bool nonzero(const Defect& d, double tol) { return !d.at.empty() && !d.vanishes(tol); }

ojson witness_json(const WitnessSpec& spec, const Defect& d, const std::vector<std::string>& labels) {
  ojson w;
  w["defect"] = spec.key;
  w["at"] = d.at;
  ojson names = ojson::array();
  for (std::size_t i = 0; i < d.at.size() && i < spec.args; ++i) names.push_back(label_of(labels, d.at[i]));
  if (std::string(spec.key) == "jacobi" && d.at.size() == 4) names.push_back(label_of(labels, d.at[3]));
  w["labels"] = std::move(names);
  w["text"] = call_text(spec, d, labels);
  w["value"] = scalar_report_json(d.witness);
  if (d.vector) {
    ojson v = ojson::array();
    for (const auto& c : *d.vector) v.push_back(scalar_json(c));
    w["vector"] = std::move(v);
  }
  return w;
}

ojson defect_json(const Defect& d) { return scalar_report_json(d.value); }

ojson report_json(const ClassificationReport& r) {
  ojson j;
  j["dim"] = r.dim;
  j["field"] = r.field.name();
  j["labels"] = r.labels;
  j["verdict"] = std::string(verdict_slug(r.verdict));
  j["verdict_text"] = std::string(verdict_text(r.verdict));

  ojson h;
  h["ok"] = r.hermitian;
  h["failing_axiom"] = r.failing_axiom.empty() ? ojson(nullptr) : ojson(r.failing_axiom);
  h["jacobi_defect"] = defect_json(r.jacobi);
  h["j_squared_defect"] = defect_json(r.j_squared);
  h["compatibility_defect"] = defect_json(r.compatibility);
  h["signature"] = ojson::array({r.signature.positive, r.signature.negative, r.signature.zero});
  j["hermitian"] = std::move(h);

  if (r.evaluated) {
    j["nk_defect"] = defect_json(r.nk_defect());
    ojson routes;
    routes["psi_symmetrized"] = defect_json(r.nk_symmetrized);
    routes["psi_polarized"] = defect_json(r.nk_polarized);
    routes["nabla"] = defect_json(r.nk_nabla);
    j["nk_defect_routes"] = std::move(routes);
    j["integrability_defect"] = defect_json(r.integrability);
    j["omega_closed_defect"] = defect_json(r.omega_closed);
  } else {
    j["nk_defect"] = nullptr;
    j["nk_defect_routes"] = nullptr;
    j["integrability_defect"] = nullptr;
    j["omega_closed_defect"] = nullptr;
  }
  ojson flags;
  flags["nearly"] = r.nearly;
  flags["integrable"] = r.integrable;
  flags["closed"] = r.closed;
  j["flags"] = std::move(flags);

  ojson witnesses = ojson::array();
  for (const auto& [spec, d] : report_defects(r)) {
    if (nonzero(*d, r.tol)) witnesses.push_back(witness_json(spec, *d, r.labels));
  }
  j["witnesses"] = std::move(witnesses);
  j["consistency_violations"] = r.consistency_violations;
  return j;
}

ojson identities_json(const LiftIdentityReport& r) {
  ojson j;
  j["base_dim"] = r.base_dim;
  j["all_hold"] = r.all_hold();
  ojson checks = ojson::array();
  for (const auto& c : r.checks) {
    ojson e;
    e["name"] = c.name;
    e["statement"] = c.statement;
    e["holds"] = c.holds;
    e["defect"] = defect_json(c.defect);
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace

std::string combination_text(const Vector& v, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const bool negative = v[k].sign() < 0;
    std::string coeff = negative ? (-v[k]).to_string() : v[k].to_string();
    if (coeff.find_first_of(" +-") != std::string::npos) coeff = "(" + coeff + ")";
    if (s.empty()) {
      s += negative ? "-" : "";
    } else {
      s += negative ? " - " : " + ";
    }
    s += (coeff == "1" ? std::string() : coeff + " ") + label_of(labels, k);
  }
  return s.empty() ? "0" : s;
}

std::string format_witness(const Defect& d, const std::string& quantity,
                           const std::vector<std::string>& labels) {
  std::string s = quantity + "(";
  for (std::size_t i = 0; i < d.at.size(); ++i) {
    if (i) s += ", ";
    s += label_of(labels, d.at[i]);
  }
  s += ") = ";
  s += d.vector ? combination_text(*d.vector, labels) : d.witness.to_string();
  return s;
}

std::string report_to_json(const ClassificationReport& r) { return report_json(r).dump(2) + "\n"; }

std::string identities_to_json(const LiftIdentityReport& r) {
  return identities_json(r).dump(2) + "\n";
}

std::string chain_to_json(const ChainReport& c) {
  ojson j;
  j["holds"] = c.holds();
  j["base_strict"] = c.base_strict;
  ojson levels = ojson::array();
  for (const auto& l : c.levels) {
    ojson e;
    e["level"] = l.level;
    e["dim"] = l.dim;
    e["holds"] = l.holds;
    e["verdict"] = std::string(verdict_slug(l.report.verdict));
    e["signature"] = ojson::array(
        {l.report.signature.positive, l.report.signature.negative, l.report.signature.zero});
    e["report"] = report_json(l.report);
    e["identities"] = l.identities ? identities_json(*l.identities) : ojson(nullptr);
    if (l.lifted_witness) {
      ojson w;
      w["at"] = ojson::array({(*l.lifted_witness)[0], (*l.lifted_witness)[1]});
      w["labels"] = ojson::array({label_of(l.report.labels, (*l.lifted_witness)[0]),
                                  label_of(l.report.labels, (*l.lifted_witness)[1])});
      w["matches_parent"] = l.witness_matches;
      if (l.lifted_witness_value) {
        ojson v = ojson::array();
        for (const auto& x : *l.lifted_witness_value) v.push_back(scalar_json(x));
        w["value"] = std::move(v);
      }
      e["lifted_witness"] = std::move(w);
    } else {
      e["lifted_witness"] = nullptr;
    }
    levels.push_back(std::move(e));
  }
  j["levels"] = std::move(levels);
  return j.dump(2) + "\n";
}

std::string report_to_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "dimension " << r.dim << " over " << r.field.name() << "\n";
  os << "verdict: " << verdict_text(r.verdict) << "\n";
  if (!r.failing_axiom.empty()) os << "failing axiom: " << r.failing_axiom << "\n";
  os << "  signature (p, q, z):           (" << r.signature.positive << ", " << r.signature.negative
     << ", " << r.signature.zero << ")\n";
  for (const auto& [spec, d] : report_defects(r)) {
    std::string name = spec.key;
    name += " defect:";
    name.resize(std::max<std::size_t>(name.size() + 1, 33), ' ');
    os << "  " << name << d->value.to_string();
    if (!d->value.is_exact()) os << "  (scale " << d->scale << ")";
    os << "\n";
    if (nonzero(*d, r.tol)) {
      os << "    witness: " << call_text(spec, *d, r.labels) << " = "
         << (d->vector ? combination_text(*d->vector, r.labels) : d->witness.to_string()) << "\n";
    }
  }
  for (const auto& v : r.consistency_violations) os << "  CONSISTENCY VIOLATION: " << v << "\n";
  return os.str();
}

std::string chain_to_text(const ChainReport& c) {
  std::ostringstream os;
  os << "level  dim  signature      verdict                            identities  holds\n";
  for (const auto& l : c.levels) {
    std::ostringstream sig;
    sig << "(" << l.report.signature.positive << "," << l.report.signature.negative << ","
        << l.report.signature.zero << ")";
    std::string verdict(verdict_text(l.report.verdict));
    std::string ids = l.identities ? (l.identities->all_hold() ? "exact" : "FAILED") : "-";
    if (l.identities && !l.report.field.is_exact() && l.identities->all_hold()) ids = "within tol";
    os << std::left;
    os.width(7);
    os << l.level;
    os.width(5);
    os << l.dim;
    os.width(15);
    os << sig.str();
    os << verdict;
    std::size_t width = 0;
    for (unsigned char ch : verdict) width += (ch & 0xC0) != 0x80;
    for (std::size_t pad = width; pad < 35; ++pad) os << ' ';
    os.width(12);
    os << ids;
    os << (l.holds ? "yes" : "NO") << "\n";
    if (l.report.evaluated && !l.report.integrable) {
      os << "       Nijenhuis witness: " << call_text({"integrability", "N", 2}, l.report.integrability,
                                                      l.report.labels)
         << " = " << combination_text(*l.report.integrability.vector, l.report.labels) << "\n";
    }
  }
  os << (c.holds() ? "chain verified\n" : "chain FAILED\n");
  return os.str();
}

}  // namespace npk
