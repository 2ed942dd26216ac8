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

// Label-level record of a finished run. Mirrors the text report field for
// field and is what the JSON serializer reads and writes.

#include "polyclust/model.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace polyclust {

struct RuleRecord
{
  std::size_t              m{0};
  std::vector<std::string> features;
  std::vector<std::string> necessary;
  std::vector<std::string> sufficient;
  double                   false_alarm_rate{0.0};

  bool operator==(RuleRecord const &) const = default;
};

struct CategoryRecord
{
  std::vector<std::string>  members;
  std::string               best_member;
  std::optional<RuleRecord> rule;
  double                    cohesion_bits{0.0};

  bool operator==(CategoryRecord const &) const = default;
};

struct TraceRecord
{
  std::string                action;    // "protoseed", "add" or "merge"
  std::size_t                category{0};
  std::vector<std::string>   objects;   // new members for protoseed/add
  std::optional<std::size_t> merged;    // absorbed category index for merge
  double                     cohesion_bits{0.0};

  bool operator==(TraceRecord const &) const = default;
};

struct Report
{
  Parameters                       parameters;
  std::vector<CategoryRecord>      categories;
  std::vector<std::vector<double>> distinctiveness;
  std::vector<std::string>         unclustered;
  std::vector<TraceRecord>         trace;

  bool operator==(Report const &) const = default;
};

}  // namespace polyclust
