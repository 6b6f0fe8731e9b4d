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

#include "scalecheck/fixture.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "json.hpp"
#include "scalecheck/error.hpp"
#include "scalecheck/image.hpp"
#include "scalecheck/snapshot_io.hpp"

namespace scalecheck {

namespace {

// ---------------------------------------------------------------------------
// Deterministic randomness. mt19937_64 is fully specified by the standard,
// and the raw-draw helpers below avoid std distributions, whose outputs are
// implementation defined.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    gen_.seed(seq);
  }

  // Inclusive range. Modulo bias is irrelevant at fixture scales.
  int range(int lo, int hi) {
    if (hi <= lo) return lo;
    return lo + static_cast<int>(gen_() %
                                 static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool chance(double p) {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 gen_;
};

// Layout constants, in density units.
constexpr int kRootInset = 4;
constexpr int kInset = 4;
constexpr int kGap = 3;

constexpr std::array<std::array<std::uint8_t, 4>, 5> kBgPalette{{
    {235, 238, 242, 255},
    {230, 240, 232, 255},
    {242, 235, 228, 255},
    {236, 232, 242, 255},
    {228, 240, 240, 255},
}};
constexpr std::array<std::array<std::uint8_t, 4>, 4> kInkPalette{{
    {32, 36, 44, 255},
    {52, 40, 36, 255},
    {36, 48, 40, 255},
    {44, 36, 52, 255},
}};

// ---------------------------------------------------------------------------
// Abstract page: geometry in density units, identity in stable codes. The
// code survives injections, so a view keeps the same painted pattern in both
// realizations no matter what happens to its neighbors.
struct AbstractView {
  int code = 0;
  std::string uid;
  std::optional<std::string> mapping_id;
  std::string class_name;
  Rect du;
  bool text = false;
  int h_du = 0;                  // glyph height for text leaves
  std::optional<bool> scroll_hint;
  std::array<std::uint8_t, 4> bg{255, 255, 255, 255};
  std::array<std::uint8_t, 4> ink{0, 0, 0, 255};
  std::vector<AbstractView> children;
};

int edge_px(int v, double s) {
  return static_cast<int>(std::floor(static_cast<double>(v) * s + 1e-9));
}

// Edge-coordinate scaling: both endpoints are floored, so containment and
// disjointness of density-unit rectangles survive into pixels.
Rect scale_rect(const Rect& r, double s) {
  int x0 = edge_px(r.x, s);
  int y0 = edge_px(r.y, s);
  int x1 = edge_px(r.x + r.w, s);
  int y1 = edge_px(r.y + r.h, s);
  return Rect{x0, y0, x1 - x0, y1 - y0};
}

int glyph_px(int h_du, const ScaleSetting& s) {
  return static_cast<int>(
      std::lround(static_cast<double>(h_du) * s.display_scale * s.font_scale));
}

// Four code blocks in two rows, sized in whole multiples of the glyph height
// so ink area scales exactly with its square. The low four bits of the
// view's code pick the block widths, which keeps sibling patterns distinct.
std::vector<Rect> glyph_rects(int code, int h) {
  int g = std::max(1, h / 2);
  int pad = std::max(2, h / 2);
  int b3 = (code >> 3) & 1;
  int b2 = (code >> 2) & 1;
  int b1 = (code >> 1) & 1;
  int b0 = code & 1;
  std::vector<Rect> rects;
  int x = pad;
  rects.push_back({x, pad, h * (1 + b3), h});
  x += h * (1 + b3) + g;
  rects.push_back({x, pad, h * (1 + b2), h});
  x = pad;
  int y = pad + h + g;
  rects.push_back({x, y, h * (1 + b1), h});
  x += h * (1 + b1) + g;
  rects.push_back({x, y, h * (1 + b0), h});
  return rects;
}

bool glyphs_fit(int code, int h, int w_px, int h_px) {
  for (const Rect& r : glyph_rects(code, h)) {
    int pad = std::max(2, h / 2);
    if (r.x + r.w + pad > w_px || r.y + r.h + pad > h_px) return false;
  }
  return true;
}

// Largest glyph height (du) whose pattern fits the slot at both scale
// settings; 0 when even the smallest does not fit.
int pick_text_height(int code, const Rect& slot_du, const ScaleSetting& a,
                     const ScaleSetting& b) {
  int best = 0;
  for (int h_du = 3; h_du <= 6; ++h_du) {
    Rect pa = scale_rect(slot_du, a.display_scale);
    Rect pb = scale_rect(slot_du, b.display_scale);
    if (glyphs_fit(code, glyph_px(h_du, a), pa.w, pa.h) &&
        glyphs_fit(code, glyph_px(h_du, b), pb.w, pb.h)) {
      best = h_du;
    }
  }
  if (best == 0) return 0;
  return 3 + code % (best - 2);  // vary within what fits
}

// Decorative pattern for non-text leaves, in density units with even
// coordinates: a border ring, a marker bar, and up to three code blocks.
// Both realizations scale the same geometry, so the component count is
// scale-invariant. The ring keeps a wide blank margin (6 du) so a few rows
// of sibling intrusion only ever cover flat background.
std::vector<Rect> nontext_ink_du(int code, int w, int h) {
  std::vector<Rect> rects;
  if (w < 26 || h < 26) return rects;
  int a = 6;  // ring inset
  int t = 2;  // ring thickness
  rects.push_back({a, a, w - 2 * a, t});                      // top
  rects.push_back({a, h - a - t, w - 2 * a, t});              // bottom
  rects.push_back({a, a + t, t, h - 2 * a - 2 * t});          // left
  rects.push_back({w - a - t, a + t, t, h - 2 * a - 2 * t});  // right

  int iw = w - 2 * (a + 4);
  int ih = h - 2 * (a + 4);
  if (iw < 10 || ih < 6) return rects;
  int unit = std::max(2, (iw / 20) * 2);
  int hb = std::min(ih - 2, std::max(4, (ih / 2) & ~1));
  int x = a + 4;
  int y = a + 4 + ((ih - hb) / 2 & ~1);
  int limit = x + iw;
  // Marker bar, then three bit-width blocks, dropped right-to-left when the
  // interior is too narrow.
  std::vector<int> widths{2 * unit};
  for (int bit = 2; bit >= 0; --bit) {
    widths.push_back(unit * (1 + ((code >> bit) & 1)));
  }
  for (int wdt : widths) {
    if (x + wdt > limit) break;
    rects.push_back({x, y, wdt, hb});
    x += wdt + 2;
  }
  return rects;
}

// Evenly spaced slots along one axis, separated by kGap.
std::vector<Rect> partition(const Rect& content, int k, bool vertical) {
  std::vector<Rect> slots;
  int len = vertical ? content.h : content.w;
  int slot = (len - kGap * (k - 1)) / k;
  for (int i = 0; i < k; ++i) {
    int start = i * (slot + kGap);
    if (vertical) {
      slots.push_back({content.x, content.y + start, content.w, slot});
    } else {
      slots.push_back({content.x + start, content.y, slot, content.h});
    }
  }
  return slots;
}

Rect inset_rect(const Rect& r, int by) {
  return Rect{r.x + by, r.y + by, std::max(0, r.w - 2 * by),
              std::max(0, r.h - 2 * by)};
}

// ---------------------------------------------------------------------------
// Page builder.
struct Builder {
  const FixtureSpec& spec;
  Rng& rng;
  int next_code = 0;

  int take_code() { return next_code++; }

  AbstractView make_base(const Rect& du, const std::string& class_name) {
    AbstractView v;
    v.code = take_code();
    v.uid = "v" + std::to_string(v.code);
    v.mapping_id = "m" + std::to_string(v.code);
    v.class_name = class_name;
    v.du = du;
    v.bg = kBgPalette[static_cast<std::size_t>(v.code) % kBgPalette.size()];
    v.ink = kInkPalette[static_cast<std::size_t>(v.code) % kInkPalette.size()];
    return v;
  }

  AbstractView make_leaf(const Rect& slot, bool want_text) {
    int code_peek = next_code;  // height choice must see the final code
    if (want_text) {
      int h_du = pick_text_height(code_peek, slot, spec.default_scale,
                                  spec.scaled_scale);
      if (h_du > 0) {
        AbstractView v = make_base(slot, "TextView");
        v.text = true;
        v.h_du = h_du;
        return v;
      }
    }
    if (slot.w >= 14 && slot.h >= 14) {
      return make_base(slot, next_code % 2 == 0 ? "ImageView" : "View");
    }
    return make_base(slot, "View");  // too small for any pattern
  }

  // A plain horizontal strip of leaves: two adjacent text views, one
  // non-text view, and a trailing text view. Every defect family finds a
  // victim here, so any injection plan is satisfiable.
  AbstractView make_guarantee_row(const Rect& slot) {
    AbstractView row = make_base(slot, "LinearLayout");
    std::vector<Rect> slots = partition(inset_rect(slot, kInset), 4, false);
    row.children.push_back(make_leaf(slots[0], true));
    row.children.push_back(make_leaf(slots[1], true));
    row.children.push_back(make_leaf(slots[2], false));
    row.children.push_back(make_leaf(slots[3], true));
    return row;
  }

  AbstractView make_list(const Rect& slot) {
    AbstractView list = make_base(slot, "ListView");
    std::string item_id = "item" + std::to_string(list.code);
    int k = rng.range(2, 4);
    std::vector<Rect> slots = partition(inset_rect(slot, kInset), k, true);
    for (const Rect& s : slots) {
      AbstractView item = make_leaf(s, true);
      // The shared id is only safe when the item carries text: that text is
      // what keeps the repeated keys apart.
      if (item.text) item.mapping_id = item_id;
      list.children.push_back(std::move(item));
    }
    return list;
  }

  AbstractView make_scroller(const Rect& slot) {
    AbstractView scroller = make_base(slot, "ScrollView");
    if (rng.chance(0.5)) scroller.scroll_hint = true;
    Rect content = inset_rect(slot, kInset);
    int k = rng.range(1, 2);
    std::vector<Rect> slots = partition(content, k, true);
    for (int i = 0; i < k; ++i) {
      Rect s = slots[static_cast<std::size_t>(i)];
      if (i == k - 1 && rng.chance(0.5)) {
        // Content that scrolls past the container's bottom edge; the crop
        // exemption must keep this quiet.
        s.h += std::min(rng.range(5, 15), (s.h * 2) / 5);
      }
      scroller.children.push_back(make_leaf(s, rng.chance(0.6)));
    }
    return scroller;
  }

  AbstractView make_container(const Rect& slot, int level) {
    AbstractView box = make_base(
        slot, next_code % 2 == 0 ? "LinearLayout" : "FrameLayout");
    if (box.class_name == "LinearLayout" && rng.chance(0.05)) {
      box.scroll_hint = true;
    }
    Rect content = inset_rect(slot, kInset);
    bool vertical = content.h >= content.w;
    int k = rng.range(2, std::min(spec.shape.fan_out, 5));
    std::vector<Rect> slots = partition(content, k, vertical);
    for (const Rect& s : slots) {
      bool can_nest = level < spec.shape.depth && s.w >= 60 && s.h >= 40;
      if (can_nest && rng.chance(0.35)) {
        children_roll(box, s, level + 1);
      } else {
        box.children.push_back(make_leaf(s, rng.chance(spec.shape.text_ratio)));
      }
    }
    return box;
  }

  void children_roll(AbstractView& parent, const Rect& slot, int level) {
    bool roomy = slot.w >= 60 && slot.h >= 60;
    if (roomy && rng.chance(spec.shape.list_ratio)) {
      parent.children.push_back(make_list(slot));
    } else if (roomy && rng.chance(spec.shape.scrollable_ratio)) {
      parent.children.push_back(make_scroller(slot));
    } else {
      parent.children.push_back(make_container(slot, level));
    }
  }

  AbstractView build() {
    AbstractView root = make_base(spec.screen, "FrameLayout");
    root.bg = {245, 246, 248, 255};
    int extra = std::max(2, spec.shape.fan_out - 2);
    int rows = 3 + extra;
    std::vector<Rect> slots =
        partition(inset_rect(spec.screen, kRootInset), rows, true);
    for (int i = 0; i < rows; ++i) {
      const Rect& slot = slots[static_cast<std::size_t>(i)];
      if (i < 3) {
        root.children.push_back(make_guarantee_row(slot));
      } else {
        children_roll(root, slot, 2);
      }
    }
    return root;
  }
};

// ---------------------------------------------------------------------------
// Realization: pixels for one scale setting.
ResolvedView realize(const AbstractView& a, const ScaleSetting& s) {
  ResolvedView v;
  v.uid = a.uid;
  v.mapping_id = a.mapping_id;
  v.class_name = a.class_name;
  v.bounds = scale_rect(a.du, s.display_scale);
  v.scroll_hint = a.scroll_hint;
  v.bg = a.bg;
  v.ink = a.ink;
  if (a.text) {
    int h = glyph_px(a.h_du, s);
    v.text = "t" + std::to_string(a.code);
    v.text_size = static_cast<double>(h);
    v.ink_rects = glyph_rects(a.code, h);
    for (const Rect& r : v.ink_rects) {
      if (r.x + r.w > v.bounds.w || r.y + r.h > v.bounds.h) {
        throw Error(ErrorKind::kGeometryOverflow,
                    "glyphs for " + v.uid + " do not fit their view");
      }
    }
  } else if (a.children.empty()) {
    for (const Rect& r : nontext_ink_du(a.code, a.du.w, a.du.h)) {
      v.ink_rects.push_back(scale_rect(
          Rect{a.du.x + r.x, a.du.y + r.y, r.w, r.h}, s.display_scale));
    }
    // Back to view-local coordinates.
    for (Rect& r : v.ink_rects) {
      r.x -= v.bounds.x;
      r.y -= v.bounds.y;
    }
  }
  for (const AbstractView& child : a.children) {
    v.children.push_back(realize(child, s));
  }
  return v;
}

// ---------------------------------------------------------------------------
// Injection machinery. All edits touch the scaled tree only.
void translate(ResolvedView& v, int dx, int dy) {
  v.bounds.x += dx;
  v.bounds.y += dy;
  for (ResolvedView& c : v.children) translate(c, dx, dy);
}

void collect_subtree_uids(const ResolvedView& v, std::set<std::string>& out) {
  out.insert(v.uid);
  for (const ResolvedView& c : v.children) collect_subtree_uids(c, out);
}

// Blank space before the first owned content along one axis: background the
// view shows before any ink or child. Template matching stays locked on a
// partially covered view only while the covered strip is this blank margin,
// so overlap injections never intrude deeper.
int lead_margin(const ResolvedView& v, bool vertical) {
  int m = vertical ? v.bounds.h : v.bounds.w;
  for (const Rect& r : v.ink_rects) m = std::min(m, vertical ? r.y : r.x);
  for (const ResolvedView& c : v.children) {
    m = std::min(m, vertical ? c.bounds.y - v.bounds.y
                             : c.bounds.x - v.bounds.x);
  }
  return m;
}

int trail_margin(const ResolvedView& v, bool vertical) {
  int ext = vertical ? v.bounds.h : v.bounds.w;
  int m = ext;
  for (const Rect& r : v.ink_rects) {
    m = std::min(m, ext - (vertical ? r.y + r.h : r.x + r.w));
  }
  for (const ResolvedView& c : v.children) {
    m = std::min(m, ext - (vertical ? c.bounds.bottom() - v.bounds.y
                                    : c.bounds.right() - v.bounds.x));
  }
  return m;
}

const ResolvedView* find_by_uid(const ResolvedView& v, const std::string& uid) {
  if (v.uid == uid) return &v;
  for (const ResolvedView& c : v.children) {
    if (const ResolvedView* hit = find_by_uid(c, uid)) return hit;
  }
  return nullptr;
}

void count_mapping_ids(const ResolvedView& v, std::map<std::string, int>& out) {
  if (v.mapping_id) ++out[*v.mapping_id];
  for (const ResolvedView& c : v.children) count_mapping_ids(c, out);
}

struct Injector {
  ResolvedView& scaled_root;
  const ResolvedView& default_root;
  Rng& rng;
  std::set<std::string> consumed;
  ExemptionConfig exemptions;  // defaults; the corpus is analyzed with these

  bool eligible(const ResolvedView& parent, const ResolvedView& victim) const {
    return !consumed.count(parent.uid) && !consumed.count(victim.uid);
  }

  void consume(const ResolvedView& parent) {
    collect_subtree_uids(parent, consumed);
  }

  // Candidates are (parent, child-index) in pre-order, so target_ordinal
  // selects deterministically.
  template <typename Fn>
  void walk(ResolvedView& v, const Fn& fn) {
    fn(v);
    for (ResolvedView& c : v.children) walk(c, fn);
  }

  static bool adjacent_pair(const ResolvedView& prev, const ResolvedView& next,
                            bool& vertical) {
    if (next.bounds.y >= prev.bounds.bottom()) {
      vertical = true;
      return true;
    }
    if (next.bounds.x >= prev.bounds.right()) {
      vertical = false;
      return true;
    }
    return false;
  }

  ResolvedView* pick(std::vector<ResolvedView*>& candidates, int ordinal,
                     const char* what) {
    if (candidates.empty()) {
      throw Error(ErrorKind::kInjectionInfeasible,
                  std::string("no remaining victim for ") + what);
    }
    if (ordinal >= 0) {
      if (ordinal >= static_cast<int>(candidates.size())) {
        throw Error(ErrorKind::kInjectionInfeasible,
                    std::string("target ordinal out of range for ") + what);
      }
      return candidates[static_cast<std::size_t>(ordinal)];
    }
    return candidates[static_cast<std::size_t>(
        rng.range(0, static_cast<int>(candidates.size()) - 1))];
  }

  // Shifts the later-drawn sibling into the earlier one.
  std::vector<std::string> inject_overlap(const BugInjection& inj, bool both_text) {
    struct Cand {
      ResolvedView* parent;
      std::size_t later;
      bool vertical;
    };
    std::vector<Cand> cands;
    walk(scaled_root, [&](ResolvedView& p) {
      for (std::size_t j = 1; j < p.children.size(); ++j) {
        ResolvedView& prev = p.children[j - 1];
        ResolvedView& next = p.children[j];
        bool vertical = false;
        if (!adjacent_pair(prev, next, vertical)) continue;
        bool pair_text = prev.text.has_value() && next.text.has_value();
        if (pair_text != both_text) continue;
        int main_prev = vertical ? prev.bounds.h : prev.bounds.w;
        int main_next = vertical ? next.bounds.h : next.bounds.w;
        if (std::min(main_prev, main_next) < 8) continue;
        if (std::min(trail_margin(prev, vertical), lead_margin(next, vertical)) <
            2) {
          continue;
        }
        if (!eligible(p, prev) || !eligible(p, next)) continue;
        cands.push_back({&p, j, vertical});
      }
    });
    if (cands.empty()) {
      throw Error(ErrorKind::kInjectionInfeasible,
                  "no remaining sibling pair to overlap");
    }
    std::size_t idx;
    if (inj.target_ordinal >= 0) {
      if (inj.target_ordinal >= static_cast<int>(cands.size())) {
        throw Error(ErrorKind::kInjectionInfeasible,
                    "target ordinal out of range for overlap");
      }
      idx = static_cast<std::size_t>(inj.target_ordinal);
    } else {
      idx = static_cast<std::size_t>(
          rng.range(0, static_cast<int>(cands.size()) - 1));
    }
    Cand c = cands[idx];
    ResolvedView& prev = c.parent->children[c.later - 1];
    ResolvedView& next = c.parent->children[c.later];
    int main_prev = c.vertical ? prev.bounds.h : prev.bounds.w;
    int main_next = c.vertical ? next.bounds.h : next.bounds.w;
    int blank = std::min(trail_margin(prev, c.vertical),
                         lead_margin(next, c.vertical)) -
                1;
    int eff = std::clamp(std::min(inj.overlap_px, blank), 1,
                         std::min(main_prev, main_next) / 4);
    if (c.vertical) {
      int gap = next.bounds.y - prev.bounds.bottom();
      translate(next, 0, -(gap + eff));
    } else {
      int gap = next.bounds.x - prev.bounds.right();
      translate(next, -(gap + eff), 0);
    }
    consume(*c.parent);
    return {prev.uid, next.uid};
  }

  // Pushes a last child past its parent's bottom edge.
  std::vector<std::string> inject_crop(const BugInjection& inj) {
    std::vector<ResolvedView*> parents;
    walk(scaled_root, [&](ResolvedView& p) {
      if (p.children.empty()) return;
      if (exemptions.is_scrollable_class(p.class_name)) return;
      if (p.scroll_hint.value_or(false)) return;
      ResolvedView& last = p.children.back();
      if (!last.children.empty()) return;  // keep the shifted subtree simple
      if (last.bounds.h < 3 * std::max(1, inj.crop_px)) return;
      if (!eligible(p, last)) return;
      parents.push_back(&p);
    });
    ResolvedView* parent = pick(parents, inj.target_ordinal, "crop");
    ResolvedView& child = parent->children.back();
    int eff = std::clamp(inj.crop_px, 1, child.bounds.h / 3);
    int shift = (parent->bounds.bottom() - child.bounds.bottom()) + eff;
    translate(child, 0, shift);
    consume(*parent);
    return {child.uid};
  }

  // Freezes a text view's glyphs at their default-scale size and drops
  // trailing blocks, while the recorded text size keeps claiming the scaled
  // value.
  std::vector<std::string> inject_frozen_text(const BugInjection& inj) {
    std::vector<ResolvedView*> leaves;
    walk(scaled_root, [&](ResolvedView& v) {
      if (!v.text.has_value() || v.ellipsized) return;
      if (consumed.count(v.uid)) return;
      const ResolvedView* def = find_by_uid(default_root, v.uid);
      if (def == nullptr || !def->text_size || !v.text_size) return;
      if (*def->text_size == *v.text_size) return;  // nothing to freeze
      leaves.push_back(&v);
    });
    ResolvedView* victim = pick(leaves, inj.target_ordinal, "frozen text");
    const ResolvedView* def = find_by_uid(default_root, victim->uid);
    int drop = std::clamp(inj.glyph_drop, 1,
                          static_cast<int>(def->ink_rects.size()) - 1);
    victim->ink_rects.assign(def->ink_rects.begin(),
                             def->ink_rects.end() - drop);
    consume(*victim);
    return {victim->uid};
  }

  // Removes a uniquely-keyed leaf from the scaled tree entirely.
  std::vector<std::string> inject_missing(const BugInjection& inj) {
    std::map<std::string, int> id_counts;
    count_mapping_ids(scaled_root, id_counts);
    struct Cand {
      ResolvedView* parent;
      std::size_t index;
    };
    std::vector<Cand> cands;
    walk(scaled_root, [&](ResolvedView& p) {
      if (p.children.size() < 2) return;
      for (std::size_t i = 0; i < p.children.size(); ++i) {
        ResolvedView& c = p.children[i];
        if (!c.children.empty()) continue;
        // Deleting a repeated-id item can change how the survivors key
        // themselves; stick to uniquely-identified leaves.
        if (!c.mapping_id || id_counts[*c.mapping_id] != 1) continue;
        if (!eligible(p, c)) continue;
        cands.push_back({&p, i});
      }
    });
    if (cands.empty()) {
      throw Error(ErrorKind::kInjectionInfeasible,
                  "no remaining leaf to remove");
    }
    std::size_t idx;
    if (inj.target_ordinal >= 0) {
      if (inj.target_ordinal >= static_cast<int>(cands.size())) {
        throw Error(ErrorKind::kInjectionInfeasible,
                    "target ordinal out of range for removal");
      }
      idx = static_cast<std::size_t>(inj.target_ordinal);
    } else {
      idx = static_cast<std::size_t>(
          rng.range(0, static_cast<int>(cands.size()) - 1));
    }
    Cand c = cands[idx];
    std::string uid = c.parent->children[c.index].uid;
    consume(*c.parent);
    c.parent->children.erase(c.parent->children.begin() +
                             static_cast<std::ptrdiff_t>(c.index));
    return {uid};
  }

  std::vector<std::string> apply(const BugInjection& inj) {
    switch (inj.kind) {
      case IssueCategory::kComponentOverlapping:
        return inject_overlap(inj, false);
      case IssueCategory::kContentOverlapping:
        return inject_overlap(inj, true);
      case IssueCategory::kComponentCropping:
        return inject_crop(inj);
      case IssueCategory::kContentCropping:
        return inject_frozen_text(inj);
      case IssueCategory::kComponentMissing:
        return inject_missing(inj);
    }
    throw Error(ErrorKind::kInjectionInfeasible, "unknown injection kind");
  }
};

// ---------------------------------------------------------------------------
// Rendering.
struct Painted {
  RgbaImage image;
  std::vector<std::int32_t> prov;
};

void fill_rect(RgbaImage& image, std::vector<std::int32_t>& prov,
               const Rect& r, const std::array<std::uint8_t, 4>& color,
               std::int32_t owner) {
  Rect clipped = intersect(r, image.rect());
  for (int y = clipped.y; y < clipped.y + clipped.h; ++y) {
    for (int x = clipped.x; x < clipped.x + clipped.w; ++x) {
      image.set_pixel(x, y, color[0], color[1], color[2], color[3]);
      prov[static_cast<std::size_t>(y) * static_cast<std::size_t>(image.width) +
           static_cast<std::size_t>(x)] = owner;
    }
  }
}

Painted paint_view(const ResolvedView& v, int& counter, ViewNode& node,
                   std::map<std::string, RgbaImage>& images,
                   std::map<std::string, std::vector<std::int32_t>>& provenance) {
  int own = counter++;
  if (v.bounds.w <= 0 || v.bounds.h <= 0 || v.bounds.w > 20000 ||
      v.bounds.h > 20000) {
    throw Error(ErrorKind::kGeometryOverflow,
                "unreasonable canvas for " + v.uid);
  }

  Painted out;
  out.image = RgbaImage::filled(v.bounds.w, v.bounds.h, v.bg[0], v.bg[1],
                                v.bg[2], v.bg[3]);
  out.prov.assign(
      static_cast<std::size_t>(v.bounds.w) * static_cast<std::size_t>(v.bounds.h),
      own);
  for (const Rect& r : v.ink_rects) {
    fill_rect(out.image, out.prov, r, v.ink, own);
  }

  node.uid = v.uid;
  node.mapping_id = v.mapping_id;
  node.class_name = v.class_name;
  node.bounds = v.bounds;
  node.z_order = v.z_order;
  node.text = v.text;
  node.text_size = v.text_size;
  node.ellipsized = v.ellipsized;
  node.scroll_hint = v.scroll_hint;
  node.image_ref = v.uid + ".png";
  node.children.resize(v.children.size());

  std::vector<Painted> painted(v.children.size());
  for (std::size_t i = 0; i < v.children.size(); ++i) {
    painted[i] = paint_view(v.children[i], counter, node.children[i], images,
                            provenance);
  }

  // Draw order: z ascending, document order among equals.
  std::vector<std::size_t> order(v.children.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
    return v.children[l].z_order < v.children[r].z_order;
  });

  for (std::size_t oi : order) {
    const ResolvedView& child = v.children[oi];
    Painted& cp = painted[oi];
    Rect in_parent{child.bounds.x - v.bounds.x, child.bounds.y - v.bounds.y,
                   child.bounds.w, child.bounds.h};
    Rect visible = intersect(in_parent, out.image.rect());
    if (visible.empty()) continue;
    Rect src{visible.x - in_parent.x, visible.y - in_parent.y, visible.w,
             visible.h};
    RgbaImage slice = crop(cp.image, src);
    composite_src_over_inplace(out.image, slice, visible.x, visible.y);
    for (int y = 0; y < visible.h; ++y) {
      for (int x = 0; x < visible.w; ++x) {
        std::uint8_t alpha = cp.image.pixel(src.x + x, src.y + y)[3];
        if (alpha == 0) continue;
        std::size_t dst =
            static_cast<std::size_t>(visible.y + y) *
                static_cast<std::size_t>(out.image.width) +
            static_cast<std::size_t>(visible.x + x);
        std::size_t from = static_cast<std::size_t>(src.y + y) *
                               static_cast<std::size_t>(cp.image.width) +
                           static_cast<std::size_t>(src.x + x);
        out.prov[dst] = alpha == 255 ? cp.prov[from] : -2;
      }
    }
  }

  images.emplace(node.image_ref, out.image);
  provenance.emplace(node.image_ref, out.prov);
  return out;
}

}  // namespace

RenderResult render_snapshot(const ResolvedTree& tree) {
  RenderResult result;
  result.snapshot.scale = tree.scale;
  result.snapshot.screen = tree.screen;
  int counter = 0;
  paint_view(tree.root, counter, result.snapshot.root, result.snapshot.images,
             result.provenance);
  validate_snapshot(result.snapshot);
  return result;
}

namespace {

std::string case_name(int index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "case-%03d", index);
  return buf;
}

std::vector<BugInjection> plan_injections(const FixtureSpec& spec,
                                          int case_index, Rng& rng) {
  if (!spec.injections.empty()) return spec.injections;
  static constexpr std::array<IssueCategory, 5> kRotation{
      IssueCategory::kComponentOverlapping, IssueCategory::kContentOverlapping,
      IssueCategory::kComponentCropping, IssueCategory::kContentCropping,
      IssueCategory::kComponentMissing};
  int count = spec.min_injections +
              rng.range(0, std::max(0, spec.max_injections - spec.min_injections));
  std::vector<BugInjection> plan;
  for (int i = 0; i < count; ++i) {
    BugInjection inj;
    inj.kind = kRotation[static_cast<std::size_t>(case_index + i) % 5];
    plan.push_back(inj);
  }
  return plan;
}

}  // namespace

GeneratedCase generate_case(const FixtureSpec& spec, int case_index) {
  Rng rng(spec.seed, static_cast<std::uint64_t>(case_index) * 2 + 1);
  Builder builder{spec, rng};
  AbstractView page = builder.build();

  ResolvedTree def{spec.default_scale,
                   scale_rect(spec.screen, spec.default_scale.display_scale),
                   realize(page, spec.default_scale)};
  ResolvedTree scl{spec.scaled_scale,
                   scale_rect(spec.screen, spec.scaled_scale.display_scale),
                   realize(page, spec.scaled_scale)};

  GeneratedCase out;
  out.name = case_name(case_index);
  out.label.name = out.name;

  bool buggy = case_index >= spec.cases - spec.buggy_cases;
  if (buggy) {
    std::vector<BugInjection> plan = plan_injections(spec, case_index, rng);
    Injector injector{scl.root, def.root, rng, {}, {}};
    std::set<std::string> victims;
    bool seeded = spec.injections.empty();
    for (std::size_t i = 0; i < plan.size(); ++i) {
      if (!seeded) {
        for (const std::string& uid : injector.apply(plan[i])) {
          victims.insert(uid);
        }
        out.injected_kinds.push_back(plan[i].kind);
        continue;
      }
      // A seeded plan may ask for a defect this page cannot host (for
      // example no eligible pair is left); rotate to the next family
      // rather than fail the whole corpus.
      BugInjection inj = plan[i];
      static constexpr std::array<IssueCategory, 5> kRotation{
          IssueCategory::kComponentOverlapping,
          IssueCategory::kContentOverlapping,
          IssueCategory::kComponentCropping, IssueCategory::kContentCropping,
          IssueCategory::kComponentMissing};
      std::size_t start = 0;
      while (start < 5 && kRotation[start] != inj.kind) ++start;
      bool done = false;
      std::string last_error;
      for (std::size_t attempt = 0; attempt < 5 && !done; ++attempt) {
        inj.kind = kRotation[(start + attempt) % 5];
        try {
          for (const std::string& uid : injector.apply(inj)) {
            victims.insert(uid);
          }
          out.injected_kinds.push_back(inj.kind);
          done = true;
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::kInjectionInfeasible) throw;
          last_error = e.what();
        }
      }
      if (!done) {
        // Later injections can exhaust a small page once earlier victims
        // consume their subtrees; one applied bug still makes a valid case.
        if (!victims.empty()) break;
        throw Error(ErrorKind::kInjectionInfeasible,
                    out.name + ": " + last_error);
      }
    }
    out.label.buggy = true;
    out.label.buggy_views.assign(victims.begin(), victims.end());
  }

  out.default_snap = std::move(render_snapshot(def).snapshot);
  out.scaled_snap = std::move(render_snapshot(scl).snapshot);
  return out;
}

void write_corpus(const FixtureSpec& spec, const std::filesystem::path& out_dir) {
  std::vector<PageLabel> labels;
  for (int i = 0; i < spec.cases; ++i) {
    GeneratedCase c = generate_case(spec, i);
    write_snapshot(c.default_snap, out_dir / c.name / "default");
    write_snapshot(c.scaled_snap, out_dir / c.name / "scaled");
    labels.push_back(c.label);
  }
  write_labels(labels, out_dir / "labels.json");
}

namespace {

IssueCategory parse_category(const std::string& s) {
  if (s == "ComponentOverlapping") return IssueCategory::kComponentOverlapping;
  if (s == "ContentOverlapping") return IssueCategory::kContentOverlapping;
  if (s == "ComponentCropping") return IssueCategory::kComponentCropping;
  if (s == "ContentCropping") return IssueCategory::kContentCropping;
  if (s == "ComponentMissing") return IssueCategory::kComponentMissing;
  throw Error(ErrorKind::kSchemaViolation, "unknown defect kind '" + s + "'");
}

ScaleSetting parse_scale(const nlohmann::json& j, const ScaleSetting& fallback) {
  ScaleSetting s = fallback;
  for (const auto& [key, value] : j.items()) {
    if (key == "label") {
      s.label = value.get<std::string>();
    } else if (key == "displayScale") {
      s.display_scale = value.get<double>();
    } else if (key == "fontScale") {
      s.font_scale = value.get<double>();
    } else {
      throw Error(ErrorKind::kSchemaViolation,
                  "unknown scale key '" + key + "'");
    }
  }
  return s;
}

}  // namespace

FixtureSpec load_fixture_spec(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) {
    throw Error(ErrorKind::kMissingFile,
                "fixture spec not found: " + path.string());
  }
  std::ifstream in(path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kSchemaViolation,
                "fixture spec " + path.string() + ": " + e.what());
  }

  FixtureSpec spec;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "seed") {
        spec.seed = value.get<std::uint64_t>();
      } else if (key == "screen") {
        auto v = value.get<std::vector<int>>();
        if (v.size() != 4) {
          throw Error(ErrorKind::kSchemaViolation,
                      "screen expects [x, y, w, h]");
        }
        spec.screen = Rect{v[0], v[1], v[2], v[3]};
      } else if (key == "shape") {
        for (const auto& [sk, sv] : value.items()) {
          if (sk == "depth") {
            spec.shape.depth = sv.get<int>();
          } else if (sk == "fanOut") {
            spec.shape.fan_out = sv.get<int>();
          } else if (sk == "textRatio") {
            spec.shape.text_ratio = sv.get<double>();
          } else if (sk == "scrollableRatio") {
            spec.shape.scrollable_ratio = sv.get<double>();
          } else if (sk == "listRatio") {
            spec.shape.list_ratio = sv.get<double>();
          } else {
            throw Error(ErrorKind::kSchemaViolation,
                        "unknown shape key '" + sk + "'");
          }
        }
      } else if (key == "defaultScale") {
        spec.default_scale = parse_scale(value, spec.default_scale);
      } else if (key == "scaledScale") {
        spec.scaled_scale = parse_scale(value, spec.scaled_scale);
      } else if (key == "cases") {
        spec.cases = value.get<int>();
      } else if (key == "buggyCases") {
        spec.buggy_cases = value.get<int>();
      } else if (key == "minInjections") {
        spec.min_injections = value.get<int>();
      } else if (key == "maxInjections") {
        spec.max_injections = value.get<int>();
      } else if (key == "injections") {
        for (const auto& entry : value) {
          BugInjection inj;
          for (const auto& [ik, iv] : entry.items()) {
            if (ik == "kind") {
              inj.kind = parse_category(iv.get<std::string>());
            } else if (ik == "overlapPx") {
              inj.overlap_px = iv.get<int>();
            } else if (ik == "cropPx") {
              inj.crop_px = iv.get<int>();
            } else if (ik == "glyphDrop") {
              inj.glyph_drop = iv.get<int>();
            } else if (ik == "targetOrdinal") {
              inj.target_ordinal = iv.get<int>();
            } else {
              throw Error(ErrorKind::kSchemaViolation,
                          "unknown injection key '" + ik + "'");
            }
          }
          spec.injections.push_back(inj);
        }
      } else {
        throw Error(ErrorKind::kSchemaViolation,
                    "unknown fixture spec key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kSchemaViolation,
                "fixture spec " + path.string() + ": " + e.what());
  }
  return spec;
}

}  // namespace scalecheck
