/* Copyright 2026 The pump Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>
#include <string>

#include "pump/analysis.hpp"
#include "pump/config_io.hpp"
#include "pump/errors.hpp"
#include "pump/report.hpp"
#include "test_support.hpp"

namespace pump {
namespace {

using nlohmann::ordered_json;

bool has_warning(const AnalysisReport& r, const std::string& needle) {
  return std::any_of(r.warnings.begin(), r.warnings.end(),
                     [&](const std::string& w) { return w.find(needle) != std::string::npos; });
}

TEST(Analyze, FluxLoopCycle) {
  ModelConfig c = testing::flux_loop_config(1.0, 1);
  c.beta = 10.0;
  const AnalysisReport r = analyze(c);
  EXPECT_EQ(r.instants.size(), 256u);
  EXPECT_NEAR(r.cycle.charge[0], -1.0, 1e-10);
  EXPECT_NEAR(r.cycle.charge[1], 1.0, 1e-10);
  ASSERT_TRUE(r.cycle.winding.has_value());
  EXPECT_EQ(*r.cycle.winding, (std::vector<long long>{-1, 1}));
  EXPECT_TRUE(r.cycle.is_optimal);
  EXPECT_TRUE(r.optimality.is_optimal);
  // integral of D over one period
  EXPECT_NEAR(r.cycle.dissipated_energy[0], kPi, 1e-10);
  EXPECT_NEAR(r.adiabaticity, 2.0 * kPi, 1e-7);
  EXPECT_TRUE(has_warning(r, "adiabaticity"));
  EXPECT_TRUE(has_warning(r, "regime"));
  EXPECT_EQ(r.schema_version, kReportSchemaVersion);
}

TEST(Analyze, SlowCycleHasNoWarnings) {
  ModelConfig c = testing::flux_loop_config(1.0, 1, 64, 100.0);
  const AnalysisReport r = analyze(c);
  EXPECT_TRUE(r.warnings.empty()) << r.warnings.front();
  EXPECT_NEAR(r.adiabaticity, 2.0 * kPi / 100.0, 1e-9);
  EXPECT_FALSE(r.instants[0].entropy_rate.has_value());
}

TEST(Analyze, NonOptimalCycleOmitsWinding) {
  const AnalysisReport r = analyze(testing::perturbed_config(0.2));
  EXPECT_FALSE(r.cycle.is_optimal);
  EXPECT_FALSE(r.cycle.winding.has_value());
  EXPECT_NEAR(r.cycle.charge[0], -std::cyl_bessel_j(0.0, 0.4), 1e-10);
  EXPECT_GT(r.cycle.max_offdiag_ratio, 1e-3);
}

TEST(Analyze, CoarseGridWarnsAboutResolution) {
  const AnalysisReport r = analyze(testing::random_path_config(7, 3, 32));
  EXPECT_TRUE(has_warning(r, "under-resolved"));
  EXPECT_TRUE(has_warning(r, "hermiticity"));
}

TEST(Analyze, UnresolvableGridFails) {
  try {
    analyze(testing::random_path_config(7, 3, 8));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NumericalFailure);
    EXPECT_FALSE(is_config_error(e.kind()));
  }
}

TEST(AnalyzeInstant, MatchesCycleSampleAndRejectsOutOfRange) {
  const ModelConfig c = testing::perturbed_config(0.3);
  const AnalysisReport r = analyze(c);
  const InstantReport at = analyze_instant(c, r.instants[40].t);
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_NEAR(at.current[j], r.instants[40].current[j], 1e-10);
    EXPECT_NEAR(at.dissipation[j], r.instants[40].dissipation[j], 1e-10);
  }
  for (double t : {-0.1, 1.0, 2.5}) {
    try {
      analyze_instant(c, t);
      FAIL() << t;
    } catch (const Error& e) {
      EXPECT_TRUE(is_config_error(e.kind()));
      EXPECT_EQ(e.key(), "t");
    }
  }
}

TEST(Report, JsonLayout) {
  ModelConfig c = testing::flux_loop_config(1.0, 1, 16);
  c.beta = 2.0;
  const ordered_json j = to_json(analyze(c));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"config", "instants", "cycle", "optimality",
                                            "adiabaticity", "warnings", "versions"}));
  EXPECT_EQ(j["versions"]["spec_version"], kReportSchemaVersion);
  const auto& inst = j["instants"][0];
  for (const char* k : {"t", "Qdot", "D", "excess", "residual", "rho", "Sdot", "Ndot", "regime_ok"}) {
    EXPECT_TRUE(inst.contains(k)) << k;
  }
  for (const char* k : {"Q", "winding", "dissipated_energy", "adiabaticity", "is_optimal",
                        "max_offdiag_ratio", "grid"}) {
    EXPECT_TRUE(j["cycle"].contains(k)) << k;
  }
  EXPECT_TRUE(j["optimality"]["decomposition"].is_object());
}

TEST(Report, RoundTripIsExact) {
  for (const auto& nc : testing::builtin_configs()) {
    ModelConfig c = nc.config;
    c.cycle.samples = 64;
    c.beta = 3.0;
    const AnalysisReport r = analyze(c);
    EXPECT_EQ(report_from_json(to_json(r)), r) << nc.label;
    const std::string text = serialize(to_json(r));
    EXPECT_EQ(report_from_json(ordered_json::parse(text)), r) << nc.label;
    EXPECT_EQ(serialize(to_json(report_from_json(ordered_json::parse(text)))), text);
  }
}

TEST(Report, SerializationIsDeterministic) {
  const ModelConfig c = testing::random_path_config(11, 2, 64);
  EXPECT_EQ(serialize(to_json(analyze(c))), serialize(to_json(analyze(c))));
}

TEST(Report, SerializeFormatsNumbers) {
  ordered_json j;
  j["a"] = 1.0;
  j["b"] = 0.1;
  j["c"] = ordered_json::array({1, 2});
  j["d"] = nullptr;
  const std::string s = serialize(j);
  EXPECT_NE(s.find("\"a\": 1.0"), std::string::npos) << s;
  EXPECT_NE(s.find("0.10000000000000001"), std::string::npos) << s;
  EXPECT_NE(s.find("[1, 2]"), std::string::npos) << s;
  EXPECT_NE(s.find("\"d\": null"), std::string::npos) << s;
}

TEST(Report, CsvColumns) {
  ModelConfig c = testing::diagonal_config(64);
  std::string csv = to_csv(analyze(c));
  std::istringstream in(csv);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "t,Qdot_1,Qdot_2,Qdot_3,D_1,D_2,D_3,Sdot_1,Sdot_2,Sdot_3,Ndot_1,Ndot_2,Ndot_3,rho");
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++rows;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 13);
  }
  EXPECT_EQ(rows, 64u);
  // no beta: thermal cells are empty
  EXPECT_NE(csv.find(",,"), std::string::npos);
}

TEST(Report, ModelsListing) {
  const ordered_json j = models_to_json();
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 4u);
  EXPECT_EQ(j[0]["name"], "flux-loop");
}

}  // namespace
}  // namespace pump
