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

#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <ostream>
#include <string>

#include "npk/catalog.hpp"
#include "npk/classifier.hpp"
#include "npk/document.hpp"
#include "npk/errors.hpp"
#include "npk/report.hpp"

namespace npk::cli {
namespace {

void print_defect_line(std::ostream& out, const std::string& name, const Defect& d, double tol,
                       const std::string& witness = {}) {
  const bool ok = d.vanishes(tol);
  out << "  " << name << ": " << (ok ? "ok" : "FAILED") << " (defect " << d.value.to_string() << ")";
  if (!ok && !witness.empty()) out << "\n    witness: " << witness;
  out << "\n";
}

// Returns nullopt (after printing) when the file cannot be read or parsed.
std::optional<StructureDocument> load(const std::string& path, std::ostream& err) {
  try {
    return read_document(path);
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << path << ": " << e.what() << "\n";
  }
  return std::nullopt;
}

int cmd_check(const std::string& path, double tol, std::ostream& out, std::ostream& err) {
  auto doc = load(path, err);
  if (!doc) return kInputError;
  const auto& labels = doc->labels;
  bool ok = true;
  out << "document " << path << ": dimension " << doc->dim() << " over " << doc->field.name() << "\n";

  const auto anti = antisymmetry_defect(doc->constants);
  {
    Defect d = Defect::zero(doc->field);
    std::string w;
    if (anti.witness) {
      const auto [i, j, k] = *anti.witness;
      d.consider(doc->constants(i, j, k) + doc->constants(j, i, k), {i, j, k});
      w = "c(" + labels[i] + ", " + labels[j] + ")[" + labels[k] + "] + c(" + labels[j] + ", " +
          labels[i] + ")[" + labels[k] + "] = " + d.witness.to_string();
    }
    print_defect_line(out, "antisymmetry", d, tol, w);
    ok = ok && d.vanishes(tol);
  }
  if (!ok) {
    out << "check failed\n";
    return kCheckFailed;
  }

  const LieAlgebra algebra = build_algebra(*doc);
  const auto jac = jacobi(algebra);
  {
    Defect d = Defect::zero(doc->field);
    std::string w;
    if (jac.witness) {
      const auto& x = *jac.witness;
      d.consider(x.value, {x.i, x.j, x.l, x.k});
      w = "[[" + labels[x.i] + ", " + labels[x.j] + "], " + labels[x.l] + "] + cyclic, component " +
          labels[x.k] + " = " + x.value.to_string();
    }
    d.scale = std::max(1.0, algebra.constant_scale() * algebra.constant_scale());
    print_defect_line(out, "jacobi", d, tol, w);
    ok = ok && d.vanishes(tol);
  }

  if (doc->metric || doc->jstruct) {
    if (!doc->has_structure()) {
      out << "  structure: FAILED (metric and jstruct must both be present)\n";
      ok = false;
    } else {
      try {
        BilinearForm metric(*doc->metric);
        const Signature sig = signature(metric, tol);
        out << "  signature: (" << sig.positive << ", " << sig.negative << ", " << sig.zero << ")"
            << (sig.nondegenerate() ? "" : " DEGENERATE") << "\n";
        if (doc->expected_signature && !(*doc->expected_signature == sig)) {
          const auto& e = *doc->expected_signature;
          out << "  expected signature (" << e.positive << ", " << e.negative << ", " << e.zero
              << "): FAILED\n";
          ok = false;
        }
        const PseudoHermitianStructure s = build_structure(*doc, tol);
        const auto jsq = check_complex_structure(s);
        print_defect_line(out, "J^2 = -id", jsq, tol,
                          jsq.at.empty() ? "" : format_witness(jsq, "(J^2 + I)", labels));
        const auto comp = check_compatibility(s);
        print_defect_line(out, "compatibility g(J.,J.) = g", comp, tol,
                          comp.at.empty() ? "" : format_witness(comp, "(J^T G J - G)", labels));
        ok = ok && jsq.vanishes(tol) && comp.vanishes(tol);
      } catch (const std::invalid_argument& e) {
        out << "  structure: FAILED (" << e.what() << ")\n";
        ok = false;
      }
    }
  }
  out << (ok ? "check passed\n" : "check failed\n");
  return ok ? kOk : kCheckFailed;
}

int cmd_classify(const std::string& path, bool json, double tol, std::ostream& out,
                 std::ostream& err) {
  auto doc = load(path, err);
  if (!doc) return kInputError;
  if (!doc->has_structure()) {
    err << "error: " << path << ": classify needs both \"metric\" and \"jstruct\"\n";
    return kInputError;
  }
  try {
    const PseudoHermitianStructure s = build_structure(*doc, tol);
    const ClassificationReport report = classify(s, ClassifyOptions{tol});
    if (json) {
      out << report_to_json(report);
    } else {
      out << report_to_text(report);
    }
    bool ok = report.hermitian && report.consistency_violations.empty();
    if (doc->expected_verdict && *doc->expected_verdict != report.verdict) {
      if (!json) out << "expected verdict " << verdict_text(*doc->expected_verdict) << ": MISMATCH\n";
      ok = false;
    }
    return ok ? kOk : kCheckFailed;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return kCheckFailed;
  }
}

int cmd_lift(const std::string& path, std::size_t k, const std::string& out_path, bool verify,
             bool json, std::size_t max_dim, double tol, std::ostream& out, std::ostream& err) {
  auto doc = load(path, err);
  if (!doc) return kInputError;
  if (!doc->has_structure()) {
    err << "error: " << path << ": lift needs both \"metric\" and \"jstruct\"\n";
    return kInputError;
  }
  if (k == 0) {
    err << "error: -k must be at least 1\n";
    return kInputError;
  }
  if ((doc->dim() << k) > max_dim || k >= 32) {
    err << "error: lifting " << k << " times reaches dimension " << (doc->dim() << std::min<std::size_t>(k, 32))
        << ", above the cap of " << max_dim << " (raise with --max-dim)\n";
    return kResourceGuard;
  }
  try {
    const PseudoHermitianStructure base = build_structure(*doc, tol);
    bool ok = true;
    if (verify) {
      const ChainReport chain = verify_theorem(base, k, TheoremOptions{tol, max_dim, true});
      if (json) {
        out << chain_to_json(chain);
      } else {
        out << chain_to_text(chain);
        for (const auto& level : chain.levels) {
          if (!level.identities) continue;
          out << "lift identities, level " << level.level - 1 << " -> " << level.level << ":";
          for (const auto& c : level.identities->checks) {
            out << " " << c.name << (c.holds ? "" : "(FAILED)");
          }
          out << (level.identities->all_hold() ? "  all hold\n" : "  SOME FAILED\n");
        }
      }
      ok = chain.holds();
    }
    const PseudoHermitianStructure lifted = iterate_lift(base, k, tol);
    save_document(to_document(lifted), out_path);
    if (!json) out << "wrote " << out_path << " (dimension " << lifted.dim() << ")\n";
    return ok ? kOk : kCheckFailed;
  } catch (const ResourceGuardError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

void show_entry(const CatalogEntry& e, std::ostream& out) {
  const LieAlgebra& a = e.algebra;
  const auto& labels = a.labels();
  out << "name: " << e.name << "\n";
  out << "description: " << e.description << "\n";
  out << "source: " << e.provenance << "\n";
  out << "field: " << a.field().name() << ", dimension " << a.dim() << "\n";
  out << "basis: ";
  for (std::size_t i = 0; i < labels.size(); ++i) out << (i ? ", " : "") << labels[i];
  out << "\nbrackets:\n";
  bool any = false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      if (a.bracket_terms(i, j).empty()) continue;
      out << "  [" << labels[i] << ", " << labels[j] << "] = "
          << combination_text(a.basis_bracket(i, j), labels) << "\n";
      any = true;
    }
  }
  if (!any) out << "  (abelian)\n";
  if (e.structure) {
    const auto& s = *e.structure;
    out << "complex structure:\n";
    for (std::size_t j = 0; j < s.dim(); ++j) {
      out << "  J " << labels[j] << " = " << combination_text(s.jstruct().matrix().column(j), labels) << "\n";
    }
    out << "metric (nonzero entries, i <= j):\n";
    const Matrix& g = s.metric().gram();
    for (std::size_t i = 0; i < s.dim(); ++i) {
      for (std::size_t j = i; j < s.dim(); ++j) {
        if (!g(i, j).is_zero()) out << "  g(" << labels[i] << ", " << labels[j] << ") = " << g(i, j) << "\n";
      }
    }
  }
  if (e.expected_verdict) out << "expected verdict: " << verdict_text(*e.expected_verdict) << "\n";
  if (e.expected_signature) {
    const auto& s = *e.expected_signature;
    out << "expected signature: (" << s.positive << ", " << s.negative << ", " << s.zero << ")\n";
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Left-invariant nearly pseudo-Kähler structures: check, classify, tangent lifts"};
  app.name("npk");
  app.require_subcommand(1);

  double tol = 1e-9;
  bool json = false;
  std::string file;

  auto* check = app.add_subcommand("check", "Check antisymmetry, Jacobi and Hermitian axioms");
  check->add_option("file", file, "Structure document")->required();
  check->add_option("--tol", tol, "Relative zero tolerance on float64 documents");

  auto* cls = app.add_subcommand("classify", "Classify an almost pseudo-Hermitian structure");
  cls->add_option("file", file, "Structure document")->required();
  cls->add_flag("--json", json, "Emit the JSON report");
  cls->add_option("--tol", tol, "Relative zero tolerance on float64 documents");

  std::size_t k = 1;
  std::string out_path;
  bool verify = false;
  std::size_t max_dim = 64;
  auto* lift = app.add_subcommand("lift", "Iterate the tangent lift k times");
  lift->add_option("file", file, "Structure document")->required();
  lift->add_option("-k", k, "Number of lifts")->required();
  lift->add_option("-o", out_path, "Output document")->required();
  lift->add_flag("--verify", verify, "Verify the structure and lift identities at every level");
  lift->add_flag("--json", json, "With --verify, emit the chain report as JSON");
  lift->add_option("--max-dim", max_dim, "Dimension cap for the final level");
  lift->add_option("--tol", tol, "Relative zero tolerance on float64 documents");

  auto* cat = app.add_subcommand("catalog", "Built-in example structures");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List entries");
  std::string name;
  auto* cat_show = cat->add_subcommand("show", "Describe an entry");
  cat_show->add_option("name", name)->required();
  std::string export_path;
  auto* cat_export = cat->add_subcommand("export", "Write an entry as a structure document");
  cat_export->add_option("name", name)->required();
  cat_export->add_option("file", export_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  if (check->parsed()) return cmd_check(file, tol, out, err);
  if (cls->parsed()) return cmd_classify(file, json, tol, out, err);
  if (lift->parsed()) return cmd_lift(file, k, out_path, verify, json, max_dim, tol, out, err);
  if (cat_list->parsed()) {
    for (const auto& e : catalog()) {
      std::string padded = e.name;
      padded.resize(std::max<std::size_t>(padded.size() + 2, 24), ' ');
      out << padded << "dim " << e.algebra.dim() << "  " << e.description << "\n";
    }
    return kOk;
  }
  try {
    const CatalogEntry entry = catalog_entry(name);
    if (cat_show->parsed()) {
      show_entry(entry, out);
    } else {
      save_document(to_document(entry), export_path);
      out << "wrote " << export_path << "\n";
    }
    return kOk;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace npk::cli
