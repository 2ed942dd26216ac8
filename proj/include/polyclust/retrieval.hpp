#pragma once
//------------------------------------------------------------------------------
//
//   Copyright 2026 The polyclust Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

// Coordinate-indexing retrieval: documents are admitted by an m-of-n keyword
// rule, or ranked by affinity to a seed document.

#include "polyclust/model.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polyclust {

struct PolymorphousQuery
{
  std::size_t               m{1};
  std::vector<std::string>  labels;
  std::vector<FeatureIndex> features;  // resolved, parallel to labels
};

/// Resolves labels against the corpus feature space. Throws ParameterError
/// naming the first unresolved label, or when m is outside [1, n].
PolymorphousQuery resolve_query(Corpus const &corpus, std::size_t m, std::vector<std::string> labels);

/// Parses "m:label,label,...". Throws ParameterError on malformed text.
std::pair<std::size_t, std::vector<std::string>> parse_rule_text(std::string const &text);

std::size_t query_hits(PolymorphousQuery const &query, ObjectInstance const &object);

bool match(PolymorphousQuery const &query, ObjectInstance const &object);

/// Matching ids ordered by number of query features held (descending), then id.
std::vector<ObjectId> retrieve(Corpus const &corpus, PolymorphousQuery const &query);

struct SeedHit
{
  ObjectId id{0};
  double   affinity{0.0};

  bool operator==(SeedHit const &) const = default;
};

/// Top-k non-seed objects by affinity to the seed, descending, ties by id.
std::vector<SeedHit> retrieve_by_seed(Corpus const &corpus, ObjectId seed, std::size_t k);

}  // namespace polyclust
