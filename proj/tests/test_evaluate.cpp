// Copyright 2026 The Scalecheck Authors
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

#include <cmath>
#include <filesystem>

#include "doctest.h"
#include "scalecheck/error.hpp"
#include "scalecheck/evaluate.hpp"
#include "scalecheck/fixture.hpp"
#include "support/builders.hpp"

namespace scalecheck {
namespace {

using testing::fresh_dir;
using testing::thrown_kind;

bool confusions_equal(const Confusion& a, const Confusion& b) {
  return a.tp == b.tp && a.fp == b.fp && a.fn == b.fn && a.tn == b.tn;
}

TEST_SUITE("evaluate") {

TEST_CASE("confusion arithmetic") {
  ClassMetrics m = metrics_from_confusion({97, 3, 3, 897});
  CHECK(m.precision == doctest::Approx(0.97));
  CHECK(m.recall == doctest::Approx(0.97));
  CHECK(m.f1 == doctest::Approx(0.97));

  ClassMetrics zero = metrics_from_confusion({0, 0, 0, 10});
  CHECK(zero.precision == 0.0);
  CHECK(zero.recall == 0.0);
  CHECK(zero.f1 == 0.0);

  ClassMetrics skew = metrics_from_confusion({1, 3, 0, 0});
  CHECK(skew.precision == doctest::Approx(0.25));
  CHECK(skew.recall == doctest::Approx(1.0));
  CHECK(skew.f1 == doctest::Approx(0.4));
}

TEST_CASE("labels round trip through their file") {
  std::vector<PageLabel> labels = {
      {"case-000", false, {}},
      {"case-001", true, {"n3", "n7"}},
  };
  auto dir = fresh_dir("evaluate_labels");
  write_labels(labels, dir / "labels.json");
  std::vector<PageLabel> back = load_labels(dir / "labels.json");
  REQUIRE(back.size() == 2);
  CHECK(back[0].name == "case-000");
  CHECK(!back[0].buggy);
  CHECK(back[0].buggy_views.empty());
  CHECK(back[1].buggy);
  CHECK(back[1].buggy_views == std::vector<std::string>{"n3", "n7"});
  CHECK(thrown_kind([&] { load_labels(dir / "absent.json"); }) ==
        ErrorKind::kMissingFile);
  std::filesystem::remove_all(dir);
}

TEST_CASE("a label naming an unknown view is rejected") {
  FixtureSpec spec;
  spec.seed = 31;
  auto make_case = [&](int index) {
    LabeledCase c;
    GeneratedCase g = generate_case(spec, index);
    c.name = g.name;
    c.default_snap = std::move(g.default_snap);
    c.scaled_snap = std::move(g.scaled_snap);
    c.label = g.label;
    c.label.buggy = true;
    c.label.buggy_views = {"no-such-view"};
    return c;
  };
  CHECK(thrown_kind([&] { evaluate_stream(1, make_case, {}, 1); }) ==
        ErrorKind::kLabelMismatch);
}

TEST_CASE("sequential and parallel runs agree") {
  FixtureSpec spec;
  spec.seed = 32;
  spec.cases = 4;
  spec.buggy_cases = 2;
  auto make_case = [&](int index) {
    GeneratedCase g = generate_case(spec, index);
    return LabeledCase{g.name, std::move(g.default_snap),
                       std::move(g.scaled_snap), std::move(g.label)};
  };
  CorpusMetrics seq = evaluate_stream(spec.cases, make_case, {}, 1);
  CorpusMetrics par = evaluate_stream(spec.cases, make_case, {}, 2);
  CHECK(seq.cases == spec.cases);
  CHECK(par.cases == spec.cases);
  CHECK(confusions_equal(seq.page_counts, par.page_counts));
  CHECK(confusions_equal(seq.view_counts, par.view_counts));
  // Page counts partition the corpus.
  CHECK(seq.page_counts.tp + seq.page_counts.fp + seq.page_counts.fn +
            seq.page_counts.tn ==
        spec.cases);
}

TEST_CASE("a written corpus scores like its in-memory twin") {
  FixtureSpec spec;
  spec.seed = 33;
  spec.cases = 3;
  spec.buggy_cases = 1;
  auto dir = fresh_dir("evaluate_corpus");
  write_corpus(spec, dir);

  auto make_case = [&](int index) {
    GeneratedCase g = generate_case(spec, index);
    return LabeledCase{g.name, std::move(g.default_snap),
                       std::move(g.scaled_snap), std::move(g.label)};
  };
  CorpusMetrics mem = evaluate_stream(spec.cases, make_case, {}, 1);
  CorpusMetrics disk = evaluate_corpus(dir, dir / "labels.json", {}, 1);
  CHECK(disk.cases == spec.cases);
  CHECK(confusions_equal(mem.page_counts, disk.page_counts));
  CHECK(confusions_equal(mem.view_counts, disk.view_counts));

  nlohmann::json j = metrics_to_json(disk);
  CHECK(j.contains("page"));
  CHECK(j.contains("view"));
  CHECK(j["page"]["counts"]["tp"] == disk.page_counts.tp);
  CHECK(j["cases"] == spec.cases);
  std::filesystem::remove_all(dir);
}

}  // TEST_SUITE

}  // namespace
}  // namespace scalecheck
