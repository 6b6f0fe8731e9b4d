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

#include "scalecheck/intraview.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "scalecheck/components.hpp"
#include "scalecheck/error.hpp"
#include "scalecheck/ssim.hpp"
#include "scalecheck/threshold.hpp"

namespace scalecheck {

namespace {

// Otsu needs at least two populated bins; a flat image simply has no
// separable foreground.
std::vector<ConnectedComponent> ink_components(const RgbaImage& image) {
  GrayImage gray = to_gray(image);
  try {
    int t = otsu_threshold(gray);
    return connected_components(binarize(gray, t));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kDegenerateImage) return {};
    throw;
  }
}

bool dims_match(const ConnectedComponent& a, const ConnectedComponent& b,
                int slack) {
  return std::abs(a.bbox.w - b.bbox.w) <= slack &&
         std::abs(a.bbox.h - b.bbox.h) <= slack &&
         std::llabs(a.area - b.area) <= slack;
}

// Stable area-descending order, so equal-area components keep their
// discovery order and elimination is deterministic.
std::vector<std::size_t> by_area_desc(const std::vector<ConnectedComponent>& cs) {
  std::vector<std::size_t> order(cs.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&cs](std::size_t l, std::size_t r) {
    return cs[l].area > cs[r].area;
  });
  return order;
}

}  // namespace

std::optional<Finding> check_text_pair(const ViewNode& node_a,
                                       const RgbaImage& image_a,
                                       const ViewNode& node_b,
                                       const RgbaImage& image_b,
                                       const IntraCheckConfig& config) {
  // Ellipsized text is truncated on purpose; its ink area tells us nothing.
  if (node_a.ellipsized || node_b.ellipsized) return std::nullopt;
  if (!node_a.text_size || !node_b.text_size) {
    throw Error(ErrorKind::kMissingTextSize,
                "text view without a text size: " + node_a.uid);
  }
  if (image_a.rect().empty() || image_b.rect().empty()) return std::nullopt;

  std::vector<ConnectedComponent> comps_a = ink_components(image_a);
  std::vector<ConnectedComponent> comps_b = ink_components(image_b);

  // Components that kept their exact size are decorations (icons, bullets,
  // borders) rather than glyphs; pair them off greedily, biggest first, and
  // judge only what is left.
  std::vector<std::size_t> order_a = by_area_desc(comps_a);
  std::vector<std::size_t> order_b = by_area_desc(comps_b);
  std::vector<bool> used_b(comps_b.size(), false);
  std::vector<bool> used_a(comps_a.size(), false);
  int eliminated = 0;
  for (std::size_t ia : order_a) {
    for (std::size_t ib : order_b) {
      if (used_b[ib]) continue;
      if (dims_match(comps_a[ia], comps_b[ib], config.icon_match_slack)) {
        used_a[ia] = true;
        used_b[ib] = true;
        ++eliminated;
        break;
      }
    }
  }

  std::int64_t sum_a = 0;
  std::int64_t sum_b = 0;
  for (std::size_t i = 0; i < comps_a.size(); ++i) {
    if (!used_a[i]) sum_a += comps_a[i].area;
  }
  for (std::size_t i = 0; i < comps_b.size(); ++i) {
    if (!used_b[i]) sum_b += comps_b[i].area;
  }

  if (sum_a == 0 && sum_b == 0) return std::nullopt;

  double gamma = *node_b.text_size / *node_a.text_size;
  double expected = gamma * gamma;

  auto make_finding = [&](nlohmann::json extra) {
    Finding f;
    f.kind = FindingKind::kTextScaleAnomaly;
    f.category = category_for(f.kind, true);
    f.default_uids = {node_a.uid};
    f.scaled_uids = {node_b.uid};
    f.evidence = std::move(extra);
    f.evidence["inkAreaDefault"] = sum_a;
    f.evidence["inkAreaScaled"] = sum_b;
    f.evidence["eliminatedComponents"] = eliminated;
    f.evidence["expectedAreaRatio"] = expected;
    return f;
  };

  if (sum_a == 0 || sum_b == 0) {
    // Ink appeared from nothing or vanished entirely; no ratio can explain
    // that.
    return make_finding({{"reason", "one-sided ink"}});
  }

  double ratio = static_cast<double>(sum_b) / static_cast<double>(sum_a);
  if (ratio < expected * (1.0 - config.area_tolerance) ||
      ratio > expected * (1.0 + config.area_tolerance)) {
    return make_finding({{"reason", "area ratio out of tolerance"},
                         {"actualAreaRatio", ratio}});
  }
  return std::nullopt;
}

std::optional<Finding> check_nontext_pair(const ViewNode& node_a,
                                          const RgbaImage& image_a,
                                          const ViewNode& node_b,
                                          const RgbaImage& image_b,
                                          const IntraCheckConfig& config) {
  if (image_a.rect().empty() || image_b.rect().empty()) return std::nullopt;

  std::vector<ConnectedComponent> comps_a = ink_components(image_a);
  std::vector<ConnectedComponent> comps_b = ink_components(image_b);

  auto make_finding = [&](nlohmann::json evidence) {
    Finding f;
    f.kind = FindingKind::kNonTextAnomaly;
    f.category = category_for(f.kind, false);
    f.default_uids = {node_a.uid};
    f.scaled_uids = {node_b.uid};
    f.evidence = std::move(evidence);
    return f;
  };

  if (comps_a.size() != comps_b.size()) {
    return make_finding({{"reason", "component count changed"},
                         {"componentCountDefault", comps_a.size()},
                         {"componentCountScaled", comps_b.size()}});
  }

  // Same structure; compare appearance on a common raster. The larger
  // rendition is shrunk so no detail is invented, only summarized.
  const RgbaImage* small = &image_a;
  const RgbaImage* large = &image_b;
  if (image_a.rect().area() > image_b.rect().area()) {
    small = &image_b;
    large = &image_a;
  }
  RgbaImage resized = resize_area(*large, small->width, small->height);
  double score = (small == &image_a) ? ssim(*small, resized) : ssim(resized, *small);
  if (score < config.ssim_threshold) {
    return make_finding({{"reason", "structural similarity too low"},
                         {"ssim", score},
                         {"componentCountDefault", comps_a.size()},
                         {"componentCountScaled", comps_b.size()}});
  }
  return std::nullopt;
}

std::optional<Finding> check_pair(const ViewNode& node_a,
                                  const RgbaImage& image_a,
                                  const ViewNode& node_b,
                                  const RgbaImage& image_b,
                                  const IntraCheckConfig& config) {
  if (node_a.has_text() && node_b.has_text()) {
    return check_text_pair(node_a, image_a, node_b, image_b, config);
  }
  if (!node_a.has_text() && !node_b.has_text()) {
    return check_nontext_pair(node_a, image_a, node_b, image_b, config);
  }
  // Text on one side only: the label appeared or vanished across scales,
  // which no area ratio can explain away.
  Finding f;
  f.kind = FindingKind::kTextScaleAnomaly;
  f.category = category_for(f.kind, true);
  f.default_uids = {node_a.uid};
  f.scaled_uids = {node_b.uid};
  f.evidence = {{"reason", "text attribute present on one side only"},
                {"textDefault", node_a.has_text()},
                {"textScaled", node_b.has_text()}};
  return f;
}

}  // namespace scalecheck
