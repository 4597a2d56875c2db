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

#include <json.hpp>
#include <string>

#include "npk/scalar.hpp"

namespace npk::detail {

using ojson = nlohmann::ordered_json;

ojson scalar_json(const Scalar& s);
/// Exact value plus its binary64 rendering.
ojson scalar_report_json(const Scalar& s);
Scalar parse_scalar(const nlohmann::json& j, const Field& field, const std::string& where);
Rational parse_rational(const std::string& text, const std::string& where);

}  // namespace npk::detail
