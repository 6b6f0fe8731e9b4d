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

#include "scalecheck/match.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "scalecheck/error.hpp"

namespace scalecheck {

namespace {

// Shared state for the full-map and argmax-only paths. Both evaluate a
// window with the same arithmetic, so their scores agree bit for bit.
struct MatchContext {
  GrayImage tg;
  GrayImage sg;
  int tw, th, sw, sh;
  std::int64_t n;
  double var_t = 0.0;
  std::vector<double> tdev;
  int iw;  // integral image row stride
  std::vector<std::uint64_t> isum;
  std::vector<std::uint64_t> isq;

  MatchContext(const RgbaImage& target, const RgbaImage& templ)
      : tg(to_gray(target)), sg(to_gray(templ)) {
    if (templ.width > target.width || templ.height > target.height) {
      throw Error(ErrorKind::kTemplateTooLarge, "template exceeds target");
    }
    if (templ.empty()) {
      throw Error(ErrorKind::kDegenerateTemplate, "empty template");
    }
    tw = tg.width;
    th = tg.height;
    sw = sg.width;
    sh = sg.height;
    n = std::int64_t(sw) * sh;

    double sum_t = 0;
    for (std::uint8_t v : sg.pixels) sum_t += v;
    double mean_t = sum_t / double(n);

    // Mean-subtracted template; its deviations sum to zero, so the window
    // cross term needs no mean correction.
    tdev.resize(sg.pixels.size());
    for (std::size_t i = 0; i < sg.pixels.size(); ++i) {
      tdev[i] = sg.pixels[i] - mean_t;
      var_t += tdev[i] * tdev[i];
    }
    if (var_t == 0.0) {
      throw Error(ErrorKind::kDegenerateTemplate, "template has zero variance");
    }

    // Integral images give each window's sum and sum of squares exactly.
    iw = tw + 1;
    isum.assign(std::size_t(iw) * (th + 1), 0);
    isq.assign(std::size_t(iw) * (th + 1), 0);
    for (int y = 0; y < th; ++y) {
      std::uint64_t row = 0, row_sq = 0;
      for (int x = 0; x < tw; ++x) {
        std::uint64_t v = tg.at(x, y);
        row += v;
        row_sq += v * v;
        isum[std::size_t(y + 1) * iw + x + 1] =
            isum[std::size_t(y) * iw + x + 1] + row;
        isq[std::size_t(y + 1) * iw + x + 1] =
            isq[std::size_t(y) * iw + x + 1] + row_sq;
      }
    }
  }

  std::uint64_t box(const std::vector<std::uint64_t>& t, int x0, int y0,
                    int x1, int y1) const {
    return t[std::size_t(y1) * iw + x1] - t[std::size_t(y0) * iw + x1] -
           t[std::size_t(y1) * iw + x0] + t[std::size_t(y0) * iw + x0];
  }

  double score_at(int x, int y) const {
    std::uint64_t wsum = box(isum, x, y, x + sw, y + sh);
    std::uint64_t wsq = box(isq, x, y, x + sw, y + sh);
    // n * sum((w - mean_w)^2) = n*sum(w^2) - sum(w)^2, exact in integers.
    std::uint64_t scaled_var = wsq * std::uint64_t(n) - wsum * wsum;
    if (scaled_var == 0) return 0.0;
    double numer = 0.0;
    const double* td = tdev.data();
    for (int yy = 0; yy < sh; ++yy) {
      const std::uint8_t* wp = &tg.pixels[std::size_t(y + yy) * tw + x];
      for (int xx = 0; xx < sw; ++xx) {
        numer += td[std::size_t(yy) * sw + xx] * wp[xx];
      }
    }
    double var_w = static_cast<double>(scaled_var) / double(n);
    double score = numer / std::sqrt(var_t * var_w);
    return std::clamp(score, -1.0, 1.0);
  }
};

}  // namespace

MatchResult template_match(const RgbaImage& target, const RgbaImage& templ) {
  MatchContext ctx(target, templ);
  MatchResult r;
  r.map_width = ctx.tw - ctx.sw + 1;
  r.map_height = ctx.th - ctx.sh + 1;
  r.score_map.assign(std::size_t(r.map_width) * r.map_height, 0.0);
  r.best_score = -2.0;
  for (int y = 0; y < r.map_height; ++y) {
    for (int x = 0; x < r.map_width; ++x) {
      double score = ctx.score_at(x, y);
      r.score_map[std::size_t(y) * r.map_width + x] = score;
      if (score > r.best_score) {
        r.best_score = score;
        r.best_x = x;
        r.best_y = y;
      }
    }
  }
  return r;
}

BestMatch template_match_best(const RgbaImage& target, const RgbaImage& templ,
                              int hint_x, int hint_y) {
  MatchContext ctx(target, templ);
  const int map_w = ctx.tw - ctx.sw + 1;
  const int map_h = ctx.th - ctx.sh + 1;
  const int sw = ctx.sw, sh = ctx.sh;

  // Small maps are cheaper to scan exactly than to bound.
  const std::int64_t full_cost =
      std::int64_t(map_w) * map_h * std::int64_t(sw) * sh;
  const bool use_bound = full_cost > (std::int64_t(1) << 21);

  // Per-strip template stats for the Cauchy-Schwarz bound: for window strip
  // w_k with mean m_k, dot(tdev_k, w_k) = dot(tdev_k, w_k - m_k) + m_k*S_k
  // <= sqrt(aa_k * var(w_k)) + m_k*S_k. Summed over strips this bounds the
  // numerator from above, so a position whose bound stays under the best
  // score seen so far cannot hold the argmax.
  constexpr int kStrip = 8;
  int strips = 0;
  std::vector<double> aa, ss;
  std::vector<int> r0, r1;
  if (use_bound) {
    strips = (sh + kStrip - 1) / kStrip;
    aa.assign(strips, 0.0);
    ss.assign(strips, 0.0);
    r0.resize(strips);
    r1.resize(strips);
    for (int k = 0; k < strips; ++k) {
      r0[k] = k * kStrip;
      r1[k] = std::min(sh, r0[k] + kStrip);
      for (int yy = r0[k]; yy < r1[k]; ++yy) {
        for (int xx = 0; xx < sw; ++xx) {
          double d = ctx.tdev[std::size_t(yy) * sw + xx];
          aa[k] += d * d;
          ss[k] += d;
        }
      }
    }
  }

  // Seeding the floor with the caller's expected position lets a perfect
  // in-place match prune nearly the whole map. Ties at the floor are still
  // evaluated exactly, so the first-win tiebreak is preserved.
  double floor_score = -2.0;
  if (hint_x >= 0 && hint_y >= 0 && hint_x < map_w && hint_y < map_h) {
    floor_score = ctx.score_at(hint_x, hint_y);
  }

  BestMatch best;
  best.score = -2.0;
  const double inv_norm_t = 1.0 / std::sqrt(ctx.var_t);
  for (int y = 0; y < map_h; ++y) {
    for (int x = 0; x < map_w; ++x) {
      std::uint64_t wsum = ctx.box(ctx.isum, x, y, x + sw, y + sh);
      std::uint64_t wsq = ctx.box(ctx.isq, x, y, x + sw, y + sh);
      std::uint64_t scaled_var = wsq * std::uint64_t(ctx.n) - wsum * wsum;
      if (scaled_var == 0) {
        if (0.0 > best.score) best = {x, y, 0.0};
        continue;
      }
      if (use_bound) {
        double prune = std::max(best.score, floor_score) - 1e-9;
        if (prune > -1.0) {
          double bound = 0.0;
          for (int k = 0; k < strips; ++k) {
            std::uint64_t bs = ctx.box(ctx.isum, x, y + r0[k], x + sw, y + r1[k]);
            std::uint64_t bq = ctx.box(ctx.isq, x, y + r0[k], x + sw, y + r1[k]);
            double m = double(r1[k] - r0[k]) * sw;
            double mean = double(bs) / m;
            double var = double(bq) - double(bs) * mean;
            if (var < 0.0) var = 0.0;
            bound += std::sqrt(aa[k] * var) + mean * ss[k];
          }
          double var_w = static_cast<double>(scaled_var) / double(ctx.n);
          double score_bound = bound * inv_norm_t / std::sqrt(var_w);
          if (score_bound < prune) continue;
        }
      }
      double score = ctx.score_at(x, y);
      if (score > best.score) best = {x, y, score};
    }
  }
  return best;
}

}  // namespace scalecheck
