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

// Three-state generate-and-test clustering controller.
//
// The controller starts by hunting for a protoseed (the highest-affinity pair
// of unclustered objects). After any success it hunts for single objects to
// add to existing categories. Each impasse escalates: object hunting falls
// back to protoseed hunting, protoseed hunting falls back to merging, and a
// failed merge ends the run. Every accepted hypothesis must leave the whole
// field valid:
//
//   W(c) >= cohesion threshold                  for every category c
//   W(c) - D(c, c') >= distinctiveness threshold for every ordered pair c != c'
//
// Ties are always broken towards the lowest object id / category index.

#include "polyclust/information.hpp"
#include "polyclust/model.hpp"
#include "polyclust/report.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polyclust {

enum class Mode
{
  object_hunting,
  protoseed_hunting,
  prototype_merging,
  done,
};

std::string_view to_string(Mode mode);

struct Action
{
  enum class Kind
  {
    protoseed,
    add_object,
    merge,
  };

  Kind                  kind{Kind::protoseed};
  std::size_t           category{0};  // index receiving the change
  std::vector<ObjectId> objects;      // seeded or added objects
  std::size_t           merged{0};    // absorbed category index (merge only)
  double                cohesion{0.0};

  bool operator==(Action const &) const = default;
};

struct EngineState
{
  Mode                mode{Mode::protoseed_hunting};
  ConceptField        field;
  std::vector<Action> trace;
};

struct FieldValidity
{
  std::vector<double>              cohesion;
  std::vector<std::vector<double>> distinctiveness;  // symmetric, zero diagonal
  bool                             valid{true};

  double margin(std::size_t c, std::size_t other) const
  {
    return cohesion.at(c) - distinctiveness.at(c).at(other);
  }
};

/// Corpus, parameters and the precomputed affinity table shared by every
/// engine operation.
class ClusteringContext
{
public:
  ClusteringContext(Corpus const &corpus, Parameters const &params);

  Corpus const &corpus() const noexcept
  {
    return *corpus_;
  }

  Parameters const &params() const noexcept
  {
    return params_;
  }

  AffinityMatrix const &affinity() const noexcept
  {
    return affinity_;
  }

  /// Builds a category with cached cohesion and best member.
  Category make_category(std::vector<ObjectId> members) const;

private:
  Corpus const  *corpus_;
  Parameters     params_;
  AffinityMatrix affinity_;
};

EngineState initial_state(std::size_t object_count);

FieldValidity field_valid(ConceptField const &field, ClusteringContext const &ctx);
FieldValidity field_valid(ConceptField const &field, Corpus const &corpus, Parameters const &params);

std::optional<Category> protoseed_hunt(EngineState const &state, ClusteringContext const &ctx);

struct Placement
{
  ObjectId    object{0};
  std::size_t category{0};

  bool operator==(Placement const &) const = default;
};

std::optional<Placement> object_hunt(EngineState const &state, ClusteringContext const &ctx);

struct MergePair
{
  std::size_t first{0};
  std::size_t second{0};

  bool operator==(MergePair const &) const = default;
};

std::optional<MergePair> merge_hunt(EngineState const &state, ClusteringContext const &ctx);

/// Executes one state visit: tries the current mode's hypothesis, applies it
/// on success and moves to the next mode. Returns false once done.
bool step(EngineState &state, ClusteringContext const &ctx);

struct RunResult
{
  ConceptField             field;
  FieldValidity            validity;
  std::vector<Action>      trace;
  std::vector<std::string> warnings;
  Report                   report;
  std::string              text;        // report without the trace
  std::string              text_trace;  // report including the trace
};

/// Validates the corpus, clusters it to completion and describes the result.
RunResult run(Corpus const &corpus, Parameters const &params);

}  // namespace polyclust
