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

#include "scalecheck/pairing.hpp"

#include <set>

namespace scalecheck {

namespace {

constexpr char kSep = '\x1f';

std::map<std::string, int> mapping_id_counts(const std::vector<const ViewNode*>& nodes) {
  std::map<std::string, int> counts;
  for (const ViewNode* node : nodes) {
    if (node->mapping_id) ++counts[*node->mapping_id];
  }
  return counts;
}

}  // namespace

std::string PairingKey::serialize() const {
  std::string out = base;
  for (const auto& [id, text] : enhancement) {
    out += kSep;
    out += id;
    out += kSep;
    out += text;
  }
  return out;
}

std::map<std::string, PairingKey> compute_keys(const Snapshot& snapshot) {
  std::vector<const ViewNode*> nodes = preorder(snapshot.root);
  std::map<std::string, int> counts = mapping_id_counts(nodes);

  std::map<std::string, PairingKey> keys;
  for (const ViewNode* node : nodes) {
    if (!node->mapping_id) continue;
    PairingKey key;
    key.base = *node->mapping_id;
    if (counts[key.base] > 1) {
      // Repetitive id: disambiguate with the uniquely-identified text the
      // subtree carries, in pre-order. Uniqueness is judged within this
      // subtree; list items repeat their inner ids once per item, so a
      // tree-wide test would discard exactly the text that tells items
      // apart.
      std::vector<const ViewNode*> sub = preorder(*node);
      std::map<std::string, int> local = mapping_id_counts(sub);
      for (const ViewNode* d : sub) {
        if (!d->mapping_id || !d->text) continue;
        if (local[*d->mapping_id] != 1) continue;
        key.enhancement.emplace_back(*d->mapping_id, *d->text);
      }
    }
    keys.emplace(node->uid, std::move(key));
  }
  return keys;
}

namespace {

struct KeyedTree {
  std::vector<const ViewNode*> nodes;  // pre-order
  std::map<std::string, PairingKey> keys;  // by uid
  std::map<std::string, std::string> owner_by_key;  // serialized key -> first uid
  std::set<std::string> duplicates;  // uids that lost the key to an earlier node
};

KeyedTree key_tree(const Snapshot& snapshot) {
  KeyedTree t;
  t.nodes = preorder(snapshot.root);
  t.keys = compute_keys(snapshot);
  for (const ViewNode* node : t.nodes) {
    auto it = t.keys.find(node->uid);
    if (it == t.keys.end()) continue;
    std::string ser = it->second.serialize();
    auto [pos, inserted] = t.owner_by_key.emplace(ser, node->uid);
    if (!inserted) t.duplicates.insert(node->uid);
  }
  return t;
}

}  // namespace

ViewPairing pair_views(const Snapshot& a, const Snapshot& b) {
  KeyedTree ta = key_tree(a);
  KeyedTree tb = key_tree(b);

  ViewPairing pairing;
  std::set<std::string> paired_b;

  for (const ViewNode* node : ta.nodes) {
    auto key_it = ta.keys.find(node->uid);
    if (key_it == ta.keys.end()) {
      pairing.unmatched_a.push_back(node->uid);
      pairing.reason_a.emplace(node->uid, UnmatchedReason::kNoMappingId);
      continue;
    }
    if (ta.duplicates.count(node->uid)) {
      pairing.unmatched_a.push_back(node->uid);
      pairing.reason_a.emplace(node->uid, UnmatchedReason::kDuplicateKey);
      continue;
    }
    auto peer = tb.owner_by_key.find(key_it->second.serialize());
    if (peer == tb.owner_by_key.end()) {
      pairing.unmatched_a.push_back(node->uid);
      pairing.reason_a.emplace(node->uid, UnmatchedReason::kNoCounterpart);
      continue;
    }
    pairing.pairs.emplace_back(node->uid, peer->second);
    paired_b.insert(peer->second);
  }

  for (const ViewNode* node : tb.nodes) {
    if (paired_b.count(node->uid)) continue;
    pairing.unmatched_b.push_back(node->uid);
    if (!tb.keys.count(node->uid)) {
      pairing.reason_b.emplace(node->uid, UnmatchedReason::kNoMappingId);
    } else if (tb.duplicates.count(node->uid)) {
      pairing.reason_b.emplace(node->uid, UnmatchedReason::kDuplicateKey);
    } else {
      pairing.reason_b.emplace(node->uid, UnmatchedReason::kNoCounterpart);
    }
  }
  return pairing;
}

std::map<std::string, std::string> ViewPairing::a_to_b() const {
  std::map<std::string, std::string> m;
  for (const auto& [ua, ub] : pairs) m.emplace(ua, ub);
  return m;
}

std::map<std::string, std::string> ViewPairing::b_to_a() const {
  std::map<std::string, std::string> m;
  for (const auto& [ua, ub] : pairs) m.emplace(ub, ua);
  return m;
}

}  // namespace scalecheck
