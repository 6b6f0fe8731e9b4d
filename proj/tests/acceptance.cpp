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
//
// Release gate. Each criterion prints exactly one [PASS]/[FAIL] line with
// its measured numbers; any FAIL makes the binary exit nonzero. Thresholds
// are pinned here on purpose: loosening one is a visible diff.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "scalecheck/components.hpp"
#include "scalecheck/error.hpp"
#include "scalecheck/evaluate.hpp"
#include "scalecheck/fixture.hpp"
#include "scalecheck/image.hpp"
#include "scalecheck/match.hpp"
#include "scalecheck/pipeline.hpp"
#include "scalecheck/snapshot_io.hpp"
#include "scalecheck/ssim.hpp"
#include "scalecheck/threshold.hpp"
#include "support/oracles.hpp"

namespace {

using scalecheck::testing::TestRng;
using Clock = std::chrono::steady_clock;

// Pinned acceptance thresholds.
constexpr double kPageBugPrecisionMin = 0.95;
constexpr double kPageBugRecallMin = 0.95;
constexpr double kViewBugPrecisionMin = 0.85;
constexpr double kViewBugRecallMin = 0.90;
constexpr double kCorpusBudgetSec = 300.0;
constexpr double kPairBudgetSec = 70.0;
constexpr int kIdentityRuns = 100;
constexpr int kGuardRuns = 50;
constexpr int kGuardCleanMin = 48;
constexpr double kMatchScoreMin = 1.0 - 1e-6;
constexpr double kSsimSelfTol = 1e-9;
constexpr double kSsimRefTol = 1e-3;
constexpr int kGammaRuns = 30;

struct Gate {
  bool all_ok = true;

  void line(bool ok, const char* name, const std::string& detail) {
    all_ok = all_ok && ok;
    std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", name, detail.c_str());
    std::fflush(stdout);
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Compact page used where the criterion cares about counts, not page size.
scalecheck::FixtureSpec small_spec(std::uint64_t seed) {
  scalecheck::FixtureSpec spec;
  spec.seed = seed;
  spec.screen = {0, 0, 240, 400};
  spec.shape.depth = 2;
  spec.shape.fan_out = 3;
  spec.cases = 1;
  return spec;
}

bool has_text_finding(const scalecheck::Report& r) {
  for (const scalecheck::Finding& f : r.findings) {
    if (f.kind == scalecheck::FindingKind::kTextScaleAnomaly) return true;
  }
  return false;
}

// --------------------------------------------------------------------------
// Labeled synthetic corpus: 60 cases, half clean, half carrying one to three
// defects drawn from all five families, scored at page and view level.
void check_corpus_accuracy(Gate& gate) {
  scalecheck::FixtureSpec spec;
  spec.seed = 42;
  spec.cases = 60;
  spec.buggy_cases = 30;

  std::set<scalecheck::IssueCategory> families;
  for (int i = spec.cases - spec.buggy_cases; i < spec.cases; ++i) {
    for (scalecheck::IssueCategory k :
         scalecheck::generate_case(spec, i).injected_kinds) {
      families.insert(k);
    }
  }

  auto make_case = [&spec](int index) {
    scalecheck::GeneratedCase g = scalecheck::generate_case(spec, index);
    return scalecheck::LabeledCase{g.name, std::move(g.default_snap),
                                   std::move(g.scaled_snap),
                                   std::move(g.label)};
  };
  auto start = Clock::now();
  scalecheck::CorpusMetrics m =
      scalecheck::evaluate_stream(spec.cases, make_case, {}, 0);
  double secs = seconds_since(start);

  bool ok = m.page_bug.precision >= kPageBugPrecisionMin &&
            m.page_bug.recall >= kPageBugRecallMin &&
            m.view_bug.precision >= kViewBugPrecisionMin &&
            m.view_bug.recall >= kViewBugRecallMin && families.size() == 5 &&
            secs <= kCorpusBudgetSec;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "page P=%.3f R=%.3f, view P=%.3f R=%.3f, families=%zu/5, "
                "%.1fs (budget %.0fs)",
                m.page_bug.precision, m.page_bug.recall, m.view_bug.precision,
                m.view_bug.recall, families.size(), secs, kCorpusBudgetSec);
  gate.line(ok, "corpus-accuracy", buf);
}

// --------------------------------------------------------------------------
// One page with at least 100 views analyzes within the per-pair budget.
void check_pair_runtime(Gate& gate) {
  scalecheck::FixtureSpec spec;
  spec.seed = 7001;
  spec.screen = {0, 0, 360, 1200};
  spec.shape.fan_out = 30;
  spec.cases = 1;
  scalecheck::GeneratedCase big = scalecheck::generate_case(spec, 0);
  std::size_t views = scalecheck::preorder(big.default_snap.root).size();

  auto start = Clock::now();
  scalecheck::Report r = scalecheck::analyze(big.default_snap, big.scaled_snap);
  double secs = seconds_since(start);

  bool ok = views >= 100 && secs <= kPairBudgetSec;
  char buf[192];
  std::snprintf(buf, sizeof(buf),
                "%zu views in %.2fs (budget %.0fs, stretch goal 10s%s), "
                "verdict %s",
                views, secs, kPairBudgetSec, secs <= 10.0 ? " met" : " missed",
                r.buggy ? "Buggy" : "Clean");
  gate.line(ok, "pair-runtime", buf);
}

// --------------------------------------------------------------------------
// A page compared against itself must always come back Clean with zero
// findings.
void check_identity(Gate& gate) {
  int clean = 0;
  for (int t = 0; t < kIdentityRuns; ++t) {
    scalecheck::GeneratedCase c =
        scalecheck::generate_case(small_spec(9000 + std::uint64_t(t)), 0);
    scalecheck::Report r = scalecheck::analyze(c.default_snap, c.default_snap);
    if (!r.buggy && r.findings.empty()) ++clean;
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%d/%d self-pairs clean", clean,
                kIdentityRuns);
  gate.line(clean == kIdentityRuns, "identity-pairs", buf);
}

// --------------------------------------------------------------------------
// Faithfully rescaled defect-free pages must stay quiet, allowing at most
// two rounding-induced flags.
void check_faithful_scaling(Gate& gate) {
  int clean = 0;
  for (int t = 0; t < kGuardRuns; ++t) {
    scalecheck::GeneratedCase c =
        scalecheck::generate_case(small_spec(9500 + std::uint64_t(t)), 0);
    scalecheck::Report r = scalecheck::analyze(c.default_snap, c.scaled_snap);
    if (!r.buggy) ++clean;
  }
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%d/%d scaled pairs clean (need >= %d)",
                clean, kGuardRuns, kGuardCleanMin);
  gate.line(clean >= kGuardCleanMin, "faithful-scaling", buf);
}

// --------------------------------------------------------------------------
// Every numeric kernel agrees with an independent reference implementation.
void check_kernel_oracles(Gate& gate) {
  TestRng rng(2026);

  int cc_ok = 0;
  for (int t = 0; t < 200; ++t) {
    int w = 1 + rng.below(64);
    int h = 1 + rng.below(64);
    int density = 10 + rng.below(80);
    scalecheck::BinaryMatrix m(w, h);
    for (std::size_t i = 0; i < m.cells.size(); ++i) {
      m.cells[i] = rng.below(100) < density ? 1 : 0;
    }
    auto got = scalecheck::connected_components(m);
    auto want = scalecheck::testing::flood_components(m);
    bool same = got.size() == want.size();
    for (std::size_t i = 0; same && i < got.size(); ++i) {
      same = got[i].label == int(i) + 1 && got[i].area == want[i].area &&
             got[i].bbox == want[i].bbox;
    }
    cc_ok += same;
  }

  int match_ok = 0;
  for (int t = 0; t < 100; ++t) {
    scalecheck::RgbaImage target(60, 40);
    for (std::size_t i = 0; i < target.pixels.size(); ++i) {
      target.pixels[i] = rng.byte();
    }
    int ox = rng.below(60 - 16 + 1);
    int oy = rng.below(40 - 12 + 1);
    scalecheck::RgbaImage templ =
        scalecheck::crop(target, {ox, oy, 16, 12});
    scalecheck::MatchResult r = scalecheck::template_match(target, templ);
    match_ok += r.best_x == ox && r.best_y == oy &&
                r.best_score >= kMatchScoreMin;
  }

  int ssim_ok = 0;
  for (int t = 0; t < 50; ++t) {
    int w = 11 + rng.below(30);
    int h = 11 + rng.below(30);
    scalecheck::RgbaImage a(w, h), b(w, h);
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
      a.pixels[i] = rng.byte();
      b.pixels[i] = rng.byte();
    }
    bool self = std::fabs(scalecheck::ssim(a, a) - 1.0) <= kSsimSelfTol;
    bool agree = std::fabs(scalecheck::ssim(a, b) -
                           scalecheck::testing::reference_ssim(a, b)) <=
                 kSsimRefTol;
    ssim_ok += self && agree;
  }

  int blend_ok = 0;
  for (int t = 0; t < 100; ++t) {
    scalecheck::RgbaImage dst(1, 1), src(1, 1);
    std::array<double, 4> dv, sv;
    for (int c = 0; c < 4; ++c) {
      dst.pixels[std::size_t(c)] = rng.byte();
      src.pixels[std::size_t(c)] = rng.byte();
      dv[std::size_t(c)] = dst.pixels[std::size_t(c)];
      sv[std::size_t(c)] = src.pixels[std::size_t(c)];
    }
    scalecheck::RgbaImage out = scalecheck::composite_src_over(dst, src, 0, 0);
    std::array<double, 4> want = scalecheck::testing::blend_src_over(dv, sv);
    bool same = true;
    for (int c = 0; c < 4; ++c) {
      same = same && std::fabs(double(out.pixels[std::size_t(c)]) -
                               want[std::size_t(c)]) <= 1.0 + 1e-9;
    }
    blend_ok += same;
  }

  int otsu_ok = 0;
  for (int t = 0; t < 100; ++t) {
    scalecheck::GrayImage img(16, 16);
    if (t < 2) {
      for (auto& p : img.pixels) p = std::uint8_t(t == 0 ? 0 : 200);
    } else {
      for (auto& p : img.pixels) p = rng.byte();
    }
    int want = scalecheck::testing::exhaustive_otsu(img);
    if (want < 0) {
      try {
        scalecheck::otsu_threshold(img);
      } catch (const scalecheck::Error& e) {
        otsu_ok += e.kind() == scalecheck::ErrorKind::kDegenerateImage;
      }
    } else {
      otsu_ok += scalecheck::otsu_threshold(img) == want;
    }
  }

  bool ok = cc_ok == 200 && match_ok == 100 && ssim_ok == 50 &&
            blend_ok == 100 && otsu_ok == 100;
  char buf[192];
  std::snprintf(buf, sizeof(buf),
                "components %d/200, match %d/100, ssim %d/50, blend %d/100, "
                "otsu %d/100",
                cc_ok, match_ok, ssim_ok, blend_ok, otsu_ok);
  gate.line(ok, "kernel-oracles", buf);
}

// --------------------------------------------------------------------------
// Text ink must grow with the square of the size ratio: faithful growth is
// quiet at every tested ratio, frozen glyphs are flagged at every one.
void check_text_area_law(Gate& gate) {
  const double gammas[] = {1.25, 1.5, 2.0};
  int clean_quiet = 0;
  int frozen_flagged = 0;
  int per_side = kGammaRuns * 3;
  for (int gi = 0; gi < 3; ++gi) {
    for (int t = 0; t < kGammaRuns; ++t) {
      std::uint64_t seed = 11000 + std::uint64_t(gi) * 1000 + std::uint64_t(t);
      scalecheck::FixtureSpec spec = small_spec(seed);
      spec.scaled_scale = {"LL", 1.0, gammas[gi]};
      scalecheck::GeneratedCase c = scalecheck::generate_case(spec, 0);
      scalecheck::Report r = scalecheck::analyze(c.default_snap, c.scaled_snap);
      if (!has_text_finding(r)) ++clean_quiet;

      scalecheck::FixtureSpec frozen = spec;
      frozen.buggy_cases = 1;
      frozen.injections = {
          {scalecheck::IssueCategory::kContentCropping, 4, 8, 1, -1}};
      scalecheck::GeneratedCase f = scalecheck::generate_case(frozen, 0);
      scalecheck::Report rf =
          scalecheck::analyze(f.default_snap, f.scaled_snap);
      if (rf.buggy && has_text_finding(rf)) ++frozen_flagged;
    }
  }
  bool ok = clean_quiet == per_side && frozen_flagged == per_side;
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "faithful quiet %d/%d, frozen flagged %d/%d", clean_quiet,
                per_side, frozen_flagged, per_side);
  gate.line(ok, "text-area-law", buf);
}

// --------------------------------------------------------------------------
// Re-running detection on freshly loaded copies of the same snapshots must
// reproduce the canonical report bit for bit.
void check_determinism(Gate& gate) {
  scalecheck::FixtureSpec spec = small_spec(13000);
  spec.buggy_cases = 1;
  auto dir = std::filesystem::temp_directory_path() / "scalecheck_acceptance";
  std::filesystem::remove_all(dir);
  scalecheck::write_corpus(spec, dir);

  auto run = [&dir] {
    scalecheck::Snapshot a =
        scalecheck::load_snapshot(dir / "case-000" / "default");
    scalecheck::Snapshot b =
        scalecheck::load_snapshot(dir / "case-000" / "scaled");
    scalecheck::Report r = scalecheck::analyze(a, b);
    return std::pair<std::string, std::string>(
        scalecheck::report_hash(r), scalecheck::canonical_report_json(r));
  };
  auto first = run();
  auto second = run();
  std::filesystem::remove_all(dir);

  bool ok = first.first == second.first && first.second == second.second;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "hash %s %s hash %s", first.first.c_str(),
                ok ? "==" : "!=", second.first.c_str());
  gate.line(ok, "determinism", buf);
}

}  // namespace

int main() {
  Gate gate;
  try {
    check_corpus_accuracy(gate);
    check_pair_runtime(gate);
    check_identity(gate);
    check_faithful_scaling(gate);
    check_kernel_oracles(gate);
    check_text_area_law(gate);
    check_determinism(gate);
  } catch (const std::exception& e) {
    gate.line(false, "unexpected-error", e.what());
  }
  std::printf("%s\n", gate.all_ok ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED");
  return gate.all_ok ? 0 : 1;
}
