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

#include <gtest/gtest.h>

#include <json.hpp>

#include "npk/catalog.hpp"
#include "npk/classifier.hpp"
#include "npk/document.hpp"
#include "npk/errors.hpp"

namespace npk {
namespace {

const char* kSl2 = R"({
  "field": "rational",
  "dim": 3,
  "labels": ["X1", "X2", "X3"],
  "brackets": [
    {"i": 0, "j": 1, "coeffs": {"2": "2"}},
    {"i": 0, "j": 2, "coeffs": {"1": 2}},
    {"i": 1, "j": 2, "coeffs": {"0": "-2"}}
  ]
})";

std::string parse_error_where(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.where();
  }
  return "<no error>";
}

TEST(Document, ParsesAlgebra) {
  const StructureDocument d = parse_document(kSl2);
  EXPECT_EQ(d.dim(), 3u);
  EXPECT_FALSE(d.has_structure());
  const LieAlgebra a = build_algebra(d);
  EXPECT_EQ(write_document(to_document(a)), write_document(to_document(sl2r())));
  EXPECT_EQ(a.constant(1, 0, 2), Scalar::rational(-2));
}

TEST(Document, RoundTripIsByteIdentical) {
  for (const auto& e : catalog()) {
    const std::string once = write_document(to_document(e));
    const std::string twice = write_document(parse_document(once));
    EXPECT_EQ(once, twice) << e.name;
  }
}

TEST(Document, RoundTripPreservesStructure) {
  const StructureDocument d = parse_document(write_document(to_document(catalog_entry("paper-sl2xsl2"))));
  EXPECT_EQ(d.name, "paper-sl2xsl2");
  EXPECT_EQ(d.field, Field::quadratic(3));
  ASSERT_TRUE(d.expected_verdict.has_value());
  EXPECT_EQ(*d.expected_verdict, Verdict::strictly_nearly_pseudo_kahler);
  const PseudoHermitianStructure s = build_structure(d);
  const PseudoHermitianStructure p = sl2xsl2_nearly_kahler();
  EXPECT_EQ(s.metric().gram(), p.metric().gram());
  EXPECT_EQ(s.jstruct().matrix(), p.jstruct().matrix());
  EXPECT_EQ(classify(s).verdict, Verdict::strictly_nearly_pseudo_kahler);
}

TEST(Document, KeyOrder) {
  const std::string text = write_document(to_document(abelian_kahler(1)));
  const auto pos = [&](const char* k) { return text.find(std::string("\"") + k + "\""); };
  EXPECT_LT(pos("field"), pos("dim"));
  EXPECT_LT(pos("dim"), pos("labels"));
  EXPECT_LT(pos("labels"), pos("brackets"));
  EXPECT_LT(pos("brackets"), pos("metric"));
  EXPECT_LT(pos("metric"), pos("jstruct"));
  EXPECT_EQ(text.back(), '\n');
}

TEST(Document, UpperTriangleMetric) {
  const StructureDocument d = parse_document(R"({
    "field": "rational", "dim": 2, "labels": ["a", "b"], "brackets": [],
    "metric": [["1", "1/2"], ["-1"]],
    "jstruct": [["0", "-1"], ["1", "0"]]
  })");
  ASSERT_TRUE(d.metric.has_value());
  EXPECT_EQ((*d.metric)(1, 0), Scalar::rational(1, 2));
  EXPECT_EQ((*d.metric)(1, 1), Scalar::rational(-1));
}

TEST(Document, FloatField) {
  const StructureDocument d = parse_document(R"({
    "field": "float64", "dim": 2, "labels": ["a", "b"],
    "brackets": [{"i": 0, "j": 1, "coeffs": {"0": 0.5}}]
  })");
  EXPECT_EQ(d.constants(0, 1, 0), Scalar::real(0.5));
  EXPECT_EQ(d.constants(1, 0, 0), Scalar::real(-0.5));
}

TEST(Document, ErrorsAreAnchored) {
  EXPECT_EQ(parse_error_where("{bad"), "");
  EXPECT_EQ(parse_error_where(R"({"field": "complex", "dim": 1, "labels": ["a"], "brackets": []})"),
            "field");
  EXPECT_EQ(parse_error_where(R"({"field": "rational", "dim": 2, "labels": ["a"], "brackets": []})"),
            "labels");
  EXPECT_EQ(parse_error_where(R"({"field": "rational", "dim": 2, "labels": ["a", "b"],
      "brackets": [{"i": 0, "j": 1, "coeffs": {"5": "1"}}]})"),
            "brackets[0].coeffs.5");
  EXPECT_EQ(parse_error_where(R"({"field": "rational", "dim": 2, "labels": ["a", "b"],
      "brackets": [{"i": 0, "j": 1, "coeffs": {"0": "1/0"}}]})"),
            "brackets[0].coeffs.0");
  EXPECT_EQ(parse_error_where(R"({"field": "rational", "dim": 2, "labels": ["a", "b"],
      "brackets": [{"i": 0, "j": 1, "coeffs": {"0": 0.5}}]})"),
            "brackets[0].coeffs.0");
  EXPECT_EQ(parse_error_where(R"({"field": "rational", "dim": 1, "labels": ["a"], "brackets": [],
      "colour": 1})"),
            "colour");
}

TEST(Document, ExplicitNonAntisymmetricPairRejectedByBuild) {
  const StructureDocument d = parse_document(R"({
    "field": "rational", "dim": 2, "labels": ["a", "b"],
    "brackets": [{"i": 0, "j": 1, "coeffs": {"0": "1"}}, {"i": 1, "j": 0, "coeffs": {"0": "1"}}]
  })");
  EXPECT_THROW(build_algebra(d), InvariantError);
}

TEST(Document, ScalarWireFormat) {
  const Field q3 = Field::quadratic(3);
  EXPECT_EQ(scalar_to_json(Scalar::rational(-3, 4)), "\"-3/4\"");
  EXPECT_EQ(nlohmann::json::parse(scalar_to_json(q3.from_surd(Rational(1, 2), 2))),
            nlohmann::json::parse(R"(["1/2", "2"])"));
  EXPECT_EQ(scalar_from_json(R"(["1/2", "2"])", q3), q3.from_surd(Rational(1, 2), 2));
  EXPECT_EQ(scalar_from_json("\"7\"", Field::rational()), Scalar::rational(7));
  EXPECT_EQ(scalar_from_json("0.25", Field::float64()), Scalar::real(0.25));
}

}  // namespace
}  // namespace npk
