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

#include "npk/document.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json_scalar.hpp"
#include "npk/errors.hpp"

namespace npk {
namespace detail {

ojson scalar_json(const Scalar& s) {
  switch (s.kind()) {
    case FieldKind::rational:
      return s.rational_part().get_str();
    case FieldKind::quadratic:
      return ojson::array({s.rational_part().get_str(), s.surd_part().get_str()});
    default:
      return s.float_value();
  }
}

ojson scalar_report_json(const Scalar& s) {
  ojson j;
  j["exact"] = scalar_json(s);
  j["float"] = s.to_double();
  return j;
}

Rational parse_rational(const std::string& text, const std::string& where) {
  // [-+]?digits(/digits)?
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
  const std::size_t num_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  bool ok = pos > num_start;
  if (ok && pos < text.size()) {
    ok = text[pos] == '/';
    const std::size_t den_start = ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    ok = ok && pos > den_start && pos == text.size();
  }
  if (!ok) throw ParseError(where, "expected a rational \"p/q\", got \"" + text + "\"");
  const std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  if (q.set_str(body, 10) != 0) throw ParseError(where, "invalid rational \"" + text + "\"");
  if (q.get_den() == 0) throw ParseError(where, "zero denominator in \"" + text + "\"");
  q.canonicalize();
  return q;
}

Scalar parse_scalar(const nlohmann::json& j, const Field& field, const std::string& where) {
  if (j.is_string()) return field.from_rational(parse_rational(j.get<std::string>(), where));
  if (j.is_number_integer()) {
    return field.from_rational(Rational(j.dump(), 10));
  }
  if (j.is_number_float()) {
    if (field.kind() != FieldKind::float64) {
      throw ParseError(where, "float literal " + j.dump() + " in an exact field; use \"p/q\"");
    }
    return field.from_double(j.get<double>());
  }
  if (j.is_array()) {
    if (field.kind() != FieldKind::quadratic) {
      throw ParseError(where, "[a, b] surd literal requires a quadratic field");
    }
    if (j.size() != 2 || !j[0].is_string() || !j[1].is_string()) {
      throw ParseError(where, "quadratic scalar must be [\"p/q\", \"r/s\"]");
    }
    return field.from_surd(parse_rational(j[0].get<std::string>(), where + "[0]"),
                           parse_rational(j[1].get<std::string>(), where + "[1]"));
  }
  throw ParseError(where, "expected a scalar, got " + std::string(j.type_name()));
}

}  // namespace detail

namespace {

using nlohmann::json;
using detail::ojson;
using detail::parse_scalar;

std::size_t parse_index(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0 ||
      static_cast<std::size_t>(j.get<long long>()) >= n) {
    throw ParseError(where, "expected an index in [0, " + std::to_string(n) + ")");
  }
  return static_cast<std::size_t>(j.get<long long>());
}

Field parse_field(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "rational") return Field::rational();
    if (s == "float64") return Field::float64();
    throw ParseError("field", "unknown field \"" + s + "\"");
  }
  if (j.is_object() && j.size() == 1 && j.contains("quadratic")) {
    const auto& d = j["quadratic"];
    if (!d.is_number_integer() || !is_square_free(d.get<long long>())) {
      throw ParseError("field.quadratic", "radicand must be a square-free integer >= 2");
    }
    return Field::quadratic(d.get<long long>());
  }
  throw ParseError("field", "expected \"rational\", \"float64\" or {\"quadratic\": d}");
}

Matrix parse_matrix(const json& j, const Field& f, std::size_t n, const std::string& key,
                    bool upper_triangle_ok) {
  if (!j.is_array() || j.size() != n) {
    throw ParseError(key, "expected " + std::to_string(n) + " rows");
  }
  Matrix m = Matrix::zeros(f, n, n);
  std::vector<std::vector<bool>> given(n, std::vector<bool>(n, false));
  for (std::size_t r = 0; r < n; ++r) {
    const std::string rw = key + "[" + std::to_string(r) + "]";
    const auto& row = j[r];
    if (!row.is_array()) throw ParseError(rw, "expected an array");
    const bool ragged = upper_triangle_ok && row.size() == n - r && n - r != n;
    if (row.size() != n && !ragged) {
      throw ParseError(rw, "expected " + std::to_string(n) + " entries" +
                               (upper_triangle_ok ? " (or " + std::to_string(n - r) + " for the upper triangle)"
                                                  : std::string()));
    }
    const std::size_t offset = ragged ? r : 0;
    for (std::size_t t = 0; t < row.size(); ++t) {
      const std::size_t c = offset + t;
      if (row[t].is_null()) {
        if (!upper_triangle_ok || c >= r) {
          throw ParseError(rw + "[" + std::to_string(t) + "]", "missing entry");
        }
        continue;
      }
      m(r, c) = parse_scalar(row[t], f, rw + "[" + std::to_string(t) + "]");
      given[r][c] = true;
    }
  }
  if (upper_triangle_ok) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < r; ++c) {
        if (!given[r][c]) m(r, c) = m(c, r);
      }
    }
  }
  return m;
}

ojson matrix_json(const Matrix& m) {
  ojson rows = ojson::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ojson row = ojson::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(detail::scalar_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ojson field_json(const Field& f) {
  switch (f.kind()) {
    case FieldKind::rational:
      return "rational";
    case FieldKind::quadratic: {
      ojson q;
      q["quadratic"] = f.radicand();
      return q;
    }
    default:
      return "float64";
  }
}

}  // namespace

StructureDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("", "document must be a JSON object");
  for (const auto& [key, _] : root.items()) {
    static const std::set<std::string> known = {"name",    "field",   "dim",     "labels",
                                                "brackets", "metric", "jstruct", "expected"};
    if (!known.count(key)) throw ParseError(key, "unknown key");
  }

  StructureDocument doc;
  if (root.contains("name")) {
    if (!root["name"].is_string()) throw ParseError("name", "expected a string");
    doc.name = root["name"].get<std::string>();
  }
  if (!root.contains("field")) throw ParseError("field", "missing");
  doc.field = parse_field(root["field"]);

  if (!root.contains("dim") || !root["dim"].is_number_integer() || root["dim"].get<long long>() <= 0) {
    throw ParseError("dim", "expected a positive integer");
  }
  const auto n = static_cast<std::size_t>(root["dim"].get<long long>());

  if (root.contains("labels")) {
    const auto& labels = root["labels"];
    if (!labels.is_array() || labels.size() != n) {
      throw ParseError("labels", "expected " + std::to_string(n) + " strings");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!labels[i].is_string()) throw ParseError("labels[" + std::to_string(i) + "]", "expected a string");
      doc.labels.push_back(labels[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) doc.labels.push_back("e" + std::to_string(i + 1));
  }

  doc.constants = StructureConstants(doc.field, n);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<std::vector<std::vector<bool>>> listed(
      n, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)));
  if (root.contains("brackets")) {
    const auto& brackets = root["brackets"];
    if (!brackets.is_array()) throw ParseError("brackets", "expected an array");
    for (std::size_t b = 0; b < brackets.size(); ++b) {
      const std::string where = "brackets[" + std::to_string(b) + "]";
      const auto& entry = brackets[b];
      if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
          !entry.contains("coeffs")) {
        throw ParseError(where, "expected {\"i\", \"j\", \"coeffs\"}");
      }
      const std::size_t i = parse_index(entry["i"], n, where + ".i");
      const std::size_t j = parse_index(entry["j"], n, where + ".j");
      if (!seen.insert({i, j}).second) throw ParseError(where, "duplicate bracket entry");
      const auto& coeffs = entry["coeffs"];
      if (!coeffs.is_object()) throw ParseError(where + ".coeffs", "expected an object");
      for (const auto& [key, value] : coeffs.items()) {
        const std::string cw = where + ".coeffs." + key;
        std::size_t k = 0;
        try {
          std::size_t used = 0;
          const long long parsed = std::stoll(key, &used);
          if (used != key.size() || parsed < 0 || static_cast<std::size_t>(parsed) >= n) throw 0;
          k = static_cast<std::size_t>(parsed);
        } catch (...) {
          throw ParseError(cw, "coefficient key must be an index in [0, " + std::to_string(n) + ")");
        }
        doc.constants(i, j, k) = parse_scalar(value, doc.field, cw);
        listed[i][j][k] = true;
      }
    }
  }
  // Implicit antisymmetric completion.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (i != j && listed[i][j][k] && !listed[j][i][k] && !seen.count({j, i})) {
          doc.constants(j, i, k) = -doc.constants(i, j, k);
        }
      }
    }
  }

  if (root.contains("metric")) doc.metric = parse_matrix(root["metric"], doc.field, n, "metric", true);
  if (root.contains("jstruct")) doc.jstruct = parse_matrix(root["jstruct"], doc.field, n, "jstruct", false);

  if (root.contains("expected")) {
    const auto& e = root["expected"];
    if (!e.is_object()) throw ParseError("expected", "expected an object");
    for (const auto& [key, _] : e.items()) {
      if (key != "verdict" && key != "signature") throw ParseError("expected." + key, "unknown key");
    }
    if (e.contains("verdict")) {
      if (!e["verdict"].is_string()) throw ParseError("expected.verdict", "expected a string");
      doc.expected_verdict = verdict_from_slug(e["verdict"].get<std::string>());
      if (!doc.expected_verdict) throw ParseError("expected.verdict", "unknown verdict");
    }
    if (e.contains("signature")) {
      const auto& s = e["signature"];
      if (!s.is_array() || s.size() != 3 || !s[0].is_number_unsigned() ||
          !s[1].is_number_unsigned() || !s[2].is_number_unsigned()) {
        throw ParseError("expected.signature", "expected [p, q, z]");
      }
      doc.expected_signature = Signature{s[0].get<std::size_t>(), s[1].get<std::size_t>(),
                                         s[2].get<std::size_t>()};
    }
  }
  return doc;
}

StructureDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("", "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string write_document(const StructureDocument& doc) {
  ojson root;
  if (!doc.name.empty()) root["name"] = doc.name;
  root["field"] = field_json(doc.field);
  const std::size_t n = doc.dim();
  root["dim"] = n;
  root["labels"] = doc.labels;
  ojson brackets = ojson::array();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ojson coeffs = ojson::object();
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = doc.constants(i, j, k);
        if (!c.is_zero()) coeffs[std::to_string(k)] = detail::scalar_json(c);
      }
      if (coeffs.empty()) continue;
      ojson entry;
      entry["i"] = i;
      entry["j"] = j;
      entry["coeffs"] = std::move(coeffs);
      brackets.push_back(std::move(entry));
    }
  }
  root["brackets"] = std::move(brackets);
  if (doc.metric) root["metric"] = matrix_json(*doc.metric);
  if (doc.jstruct) root["jstruct"] = matrix_json(*doc.jstruct);
  if (doc.expected_verdict || doc.expected_signature) {
    ojson e;
    if (doc.expected_verdict) e["verdict"] = std::string(verdict_slug(*doc.expected_verdict));
    if (doc.expected_signature) {
      const auto& s = *doc.expected_signature;
      e["signature"] = ojson::array({s.positive, s.negative, s.zero});
    }
    root["expected"] = std::move(e);
  }
  return root.dump(2) + "\n";
}

void save_document(const StructureDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_document(doc);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

StructureDocument to_document(const LieAlgebra& a) {
  StructureDocument doc;
  doc.field = a.field();
  doc.labels = a.labels();
  doc.constants = a.constants();
  return doc;
}

StructureDocument to_document(const PseudoHermitianStructure& s) {
  StructureDocument doc = to_document(s.algebra());
  doc.metric = s.metric().gram();
  doc.jstruct = s.jstruct().matrix();
  return doc;
}

StructureDocument to_document(const CatalogEntry& e) {
  StructureDocument doc = e.structure ? to_document(*e.structure) : to_document(e.algebra);
  doc.name = e.name;
  doc.expected_verdict = e.expected_verdict;
  doc.expected_signature = e.expected_signature;
  return doc;
}

LieAlgebra build_algebra(const StructureDocument& doc) {
  return LieAlgebra(doc.labels, doc.constants);
}

PseudoHermitianStructure build_structure(const StructureDocument& doc, double tol) {
  if (!doc.has_structure()) {
    throw InvariantError("document has no metric/jstruct block");
  }
  return PseudoHermitianStructure(build_algebra(doc), BilinearForm(*doc.metric),
                                  ComplexStructure(*doc.jstruct), tol);
}

std::string scalar_to_json(const Scalar& s) { return detail::scalar_json(s).dump(); }

Scalar scalar_from_json(std::string_view json_text, const Field& field) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text.begin(), json_text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_scalar(j, field, "scalar");
}

}  // namespace npk
