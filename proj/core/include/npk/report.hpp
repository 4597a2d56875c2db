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

#pragma once

#include <string>
#include <vector>

#include "npk/classifier.hpp"
#include "npk/defect.hpp"

namespace npk {

/// Sparse rendering "8/3 E3 - 2 F1" of a vector in the labelled basis.
std::string combination_text(const Vector& v, const std::vector<std::string>& labels);

/// "N(E1, E2) = 8/3 E3" style rendering of a defect witness.
/// `quantity` names the tensor; tuple entries are mapped through `labels`.
std::string format_witness(const Defect& d, const std::string& quantity,
                           const std::vector<std::string>& labels);

/// Schema-stable JSON for a classification. Exact scalars use the document
/// scalar format under "exact" with a binary64 rendering under "float".
std::string report_to_json(const ClassificationReport& r);
std::string identities_to_json(const LiftIdentityReport& r);
std::string chain_to_json(const ChainReport& c);

/// Multi-line human-readable summaries.
std::string report_to_text(const ClassificationReport& r);
std::string chain_to_text(const ChainReport& c);

}  // namespace npk
