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

#include "polyclust/engine.hpp"

#include "polyclust/description.hpp"

#include <algorithm>

namespace polyclust {
namespace {

using MemberLists = std::vector<std::vector<ObjectId>>;

MemberLists member_lists(ConceptField const &field)
{
  MemberLists lists;
  lists.reserve(field.categories.size());
  for (auto const &c : field.categories)
  {
    lists.push_back(c.members);
  }
  return lists;
}

FieldValidity evaluate(MemberLists const &categories, ClusteringContext const &ctx)
{
  auto const    &aff = ctx.affinity();
  auto const    &p   = ctx.params();
  auto const     k   = categories.size();
  FieldValidity  v;
  v.cohesion.resize(k);
  v.distinctiveness.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i)
  {
    v.cohesion[i] = aff.cohesion(categories[i]);
  }
  for (std::size_t i = 0; i < k; ++i)
  {
    for (std::size_t j = i + 1; j < k; ++j)
    {
      double const d          = aff.distinctiveness(categories[i], categories[j]);
      v.distinctiveness[i][j] = d;
      v.distinctiveness[j][i] = d;
    }
  }
  v.valid = true;
  for (std::size_t i = 0; i < k && v.valid; ++i)
  {
    if (!(v.cohesion[i] >= p.cohesion_threshold))
    {
      v.valid = false;
    }
    for (std::size_t j = 0; j < k && v.valid; ++j)
    {
      if (i != j && !(v.margin(i, j) >= p.distinctiveness_threshold))
      {
        v.valid = false;
      }
    }
  }
  return v;
}

void require_mode(EngineState const &state, Mode expected, char const *op)
{
  if (state.mode != expected)
  {
    throw PreconditionError(std::string(op) + " called in mode " + std::string(to_string(state.mode)));
  }
}

void insert_sorted(std::vector<ObjectId> &ids, ObjectId id)
{
  ids.insert(std::upper_bound(ids.begin(), ids.end(), id), id);
}

void erase_id(std::vector<ObjectId> &ids, ObjectId id)
{
  ids.erase(std::remove(ids.begin(), ids.end(), id), ids.end());
}

std::vector<ObjectId> merged_members(std::vector<ObjectId> const &a, std::vector<ObjectId> const &b)
{
  std::vector<ObjectId> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::string_view to_string(Mode mode)
{
  switch (mode)
  {
  case Mode::object_hunting:
    return "object_hunting";
  case Mode::protoseed_hunting:
    return "protoseed_hunting";
  case Mode::prototype_merging:
    return "prototype_merging";
  case Mode::done:
    return "done";
  }
  return "unknown";
}

ClusteringContext::ClusteringContext(Corpus const &corpus, Parameters const &params)
  : corpus_(&corpus)
  , params_(params)
  , affinity_(corpus)
{}

Category ClusteringContext::make_category(std::vector<ObjectId> members) const
{
  std::sort(members.begin(), members.end());
  Category c;
  c.cohesion    = affinity_.cohesion(members);
  c.best_member = best_member(members, affinity_);
  c.members     = std::move(members);
  return c;
}

EngineState initial_state(std::size_t object_count)
{
  EngineState state;
  state.mode = Mode::protoseed_hunting;
  state.field.unclustered.resize(object_count);
  for (ObjectId id = 0; id < object_count; ++id)
  {
    state.field.unclustered[id] = id;
  }
  return state;
}

FieldValidity field_valid(ConceptField const &field, ClusteringContext const &ctx)
{
  return evaluate(member_lists(field), ctx);
}

FieldValidity field_valid(ConceptField const &field, Corpus const &corpus, Parameters const &params)
{
  ClusteringContext const ctx(corpus, params);
  return field_valid(field, ctx);
}

std::optional<Category> protoseed_hunt(EngineState const &state, ClusteringContext const &ctx)
{
  require_mode(state, Mode::protoseed_hunting, "protoseed_hunt");
  auto const &unclustered = state.field.unclustered;
  auto const &aff         = ctx.affinity();

  std::optional<std::pair<ObjectId, ObjectId>> best;
  double                                       best_affinity = 0.0;
  for (std::size_t i = 0; i < unclustered.size(); ++i)
  {
    for (std::size_t j = i + 1; j < unclustered.size(); ++j)
    {
      double const a = aff(unclustered[i], unclustered[j]);
      if (a > best_affinity)
      {
        best_affinity = a;
        best          = std::pair{unclustered[i], unclustered[j]};
      }
    }
  }
  if (!best)
  {
    return std::nullopt;
  }

  auto lists = member_lists(state.field);
  lists.push_back({best->first, best->second});
  if (!evaluate(lists, ctx).valid)
  {
    return std::nullopt;
  }
  return ctx.make_category({best->first, best->second});
}

std::optional<Placement> object_hunt(EngineState const &state, ClusteringContext const &ctx)
{
  require_mode(state, Mode::object_hunting, "object_hunt");
  auto const base = member_lists(state.field);

  std::optional<Placement> best;
  double                   best_cohesion = 0.0;
  for (auto id : state.field.unclustered)
  {
    for (std::size_t c = 0; c < base.size(); ++c)
    {
      auto lists = base;
      insert_sorted(lists[c], id);
      auto const v = evaluate(lists, ctx);
      if (!v.valid)
      {
        continue;
      }
      if (!best || v.cohesion[c] > best_cohesion)
      {
        best_cohesion = v.cohesion[c];
        best          = Placement{id, c};
      }
    }
  }
  return best;
}

std::optional<MergePair> merge_hunt(EngineState const &state, ClusteringContext const &ctx)
{
  require_mode(state, Mode::prototype_merging, "merge_hunt");
  auto const base = member_lists(state.field);

  std::optional<MergePair> best;
  double                   best_cohesion = 0.0;
  for (std::size_t i = 0; i < base.size(); ++i)
  {
    for (std::size_t j = i + 1; j < base.size(); ++j)
    {
      auto lists = base;
      lists[i]   = merged_members(base[i], base[j]);
      lists.erase(lists.begin() + static_cast<std::ptrdiff_t>(j));
      auto const v = evaluate(lists, ctx);
      if (!v.valid)
      {
        continue;
      }
      if (!best || v.cohesion[i] > best_cohesion)
      {
        best_cohesion = v.cohesion[i];
        best          = MergePair{i, j};
      }
    }
  }
  return best;
}

bool step(EngineState &state, ClusteringContext const &ctx)
{
  auto &field = state.field;
  switch (state.mode)
  {
  case Mode::object_hunting:
  {
    auto const placement = field.categories.empty() ? std::nullopt : object_hunt(state, ctx);
    if (!placement)
    {
      state.mode = Mode::protoseed_hunting;
      return true;
    }
    auto members = field.categories[placement->category].members;
    insert_sorted(members, placement->object);
    field.categories[placement->category] = ctx.make_category(std::move(members));
    erase_id(field.unclustered, placement->object);
    state.trace.push_back({Action::Kind::add_object, placement->category, {placement->object}, 0,
                           field.categories[placement->category].cohesion});
    return true;
  }
  case Mode::protoseed_hunting:
  {
    auto seed = protoseed_hunt(state, ctx);
    if (!seed)
    {
      state.mode = Mode::prototype_merging;
      return true;
    }
    for (auto id : seed->members)
    {
      erase_id(field.unclustered, id);
    }
    state.trace.push_back({Action::Kind::protoseed, field.categories.size(), seed->members, 0, seed->cohesion});
    field.categories.push_back(std::move(*seed));
    state.mode = Mode::object_hunting;
    return true;
  }
  case Mode::prototype_merging:
  {
    auto const pair = field.categories.size() < 2 ? std::nullopt : merge_hunt(state, ctx);
    if (!pair)
    {
      state.mode = Mode::done;
      return false;
    }
    auto members = merged_members(field.categories[pair->first].members, field.categories[pair->second].members);
    field.categories[pair->first] = ctx.make_category(std::move(members));
    field.categories.erase(field.categories.begin() + static_cast<std::ptrdiff_t>(pair->second));
    state.trace.push_back(
      {Action::Kind::merge, pair->first, {}, pair->second, field.categories[pair->first].cohesion});
    state.mode = Mode::object_hunting;
    return true;
  }
  case Mode::done:
    return false;
  }
  return false;
}

RunResult run(Corpus const &corpus, Parameters const &params)
{
  params.validate();
  RunResult result;
  result.warnings = validate_corpus(corpus).warnings;

  ClusteringContext const ctx(corpus, params);
  auto                    state = initial_state(corpus.size());
  while (step(state, ctx))
  {
  }

  for (auto &category : state.field.categories)
  {
    category.rule = describe_rule(category, state.field, corpus, params.rule_alpha);
  }

  result.validity   = field_valid(state.field, ctx);
  result.field      = std::move(state.field);
  result.trace      = std::move(state.trace);
  result.report     = build_report(result.field, corpus, result.validity, params, result.trace);
  result.text       = render_text(result.report, false);
  result.text_trace = render_text(result.report, true);
  return result;
}

}  // namespace polyclust
