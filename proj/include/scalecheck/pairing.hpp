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

#ifndef SCALECHECK_PAIRING_HPP_
#define SCALECHECK_PAIRING_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "scalecheck/snapshot.hpp"

namespace scalecheck {

// Identity key for matching a view across two snapshots of the same page.
// A unique mapping id stands alone; a repetitive one (think list rows) is
// disambiguated by the (mappingId, text) tokens of uniquely-identified
// text-bearing views in its subtree, collected pre-order.
struct PairingKey {
  std::string base;
  std::vector<std::pair<std::string, std::string>> enhancement;

  // Base and token fields joined with U+001F, which cannot collide with
  // ordinary id or label content.
  std::string serialize() const;
};

enum class UnmatchedReason {
  kNoMappingId,
  kDuplicateKey,
  kNoCounterpart,
};

struct ViewPairing {
  // (uid in A, uid in B), ordered by A's pre-order.
  std::vector<std::pair<std::string, std::string>> pairs;
  // Every uid not in pairs, each in its own tree's pre-order.
  std::vector<std::string> unmatched_a;
  std::vector<std::string> unmatched_b;
  std::map<std::string, UnmatchedReason> reason_a;
  std::map<std::string, UnmatchedReason> reason_b;

  std::map<std::string, std::string> a_to_b() const;
  std::map<std::string, std::string> b_to_a() const;
};

// Keys for every node that carries a mappingId, by uid.
std::map<std::string, PairingKey> compute_keys(const Snapshot& snapshot);

// Matches equal serialized keys across the two snapshots. When several nodes
// in one tree serialize to the same key, the first in pre-order keeps it and
// the rest go unmatched as duplicates.
ViewPairing pair_views(const Snapshot& a, const Snapshot& b);

}  // namespace scalecheck

#endif  // SCALECHECK_PAIRING_HPP_
