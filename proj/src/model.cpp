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

#include "polyclust/model.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace polyclust {

FeatureSpace::FeatureSpace(std::vector<Feature> features)
  : features_(std::move(features))
{
  std::set<std::pair<std::string, std::string>> seen;
  std::map<std::string, std::size_t>            value_uses;
  for (auto const &f : features_)
  {
    if (!seen.emplace(f.attribute, f.value).second)
    {
      throw InputError("duplicate feature '" + f.attribute +
                       (f.value.empty() ? "" : "=" + f.value) + "'");
    }
    ++value_uses[f.value.empty() ? f.attribute : f.value];
  }

  labels_.reserve(features_.size());
  for (auto const &f : features_)
  {
    if (f.value.empty())
    {
      labels_.push_back(f.attribute);
    }
    else if (value_uses[f.value] == 1)
    {
      labels_.push_back(f.value);
    }
    else
    {
      labels_.push_back(f.attribute + "=" + f.value);
    }
  }
}

std::optional<FeatureIndex> FeatureSpace::find(std::string_view label) const
{
  for (FeatureIndex f = 0; f < labels_.size(); ++f)
  {
    if (labels_[f] == label)
    {
      return f;
    }
  }
  for (FeatureIndex f = 0; f < features_.size(); ++f)
  {
    auto const &feat = features_[f];
    if (!feat.value.empty() && feat.attribute + "=" + feat.value == label)
    {
      return f;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<FeatureIndex>> FeatureSpace::one_hot_blocks() const
{
  std::vector<std::vector<FeatureIndex>> blocks;
  std::map<std::string, std::size_t>     block_of;
  for (FeatureIndex f = 0; f < features_.size(); ++f)
  {
    if (features_[f].value.empty())
    {
      continue;
    }
    auto [it, inserted] = block_of.emplace(features_[f].attribute, blocks.size());
    if (inserted)
    {
      blocks.emplace_back();
    }
    blocks[it->second].push_back(f);
  }
  return blocks;
}

std::size_t ObjectInstance::count() const noexcept
{
  return static_cast<std::size_t>(std::count_if(bits.begin(), bits.end(), [](auto b) { return b != 0; }));
}

Corpus::Corpus(FeatureSpace space, std::vector<ObjectInstance> objects)
  : space_(std::move(space))
  , objects_(std::move(objects))
{
  for (ObjectId id = 0; id < objects_.size(); ++id)
  {
    objects_[id].id = id;
  }
}

std::optional<ObjectId> Corpus::find(std::string_view label) const
{
  for (auto const &o : objects_)
  {
    if (o.label == label)
    {
      return o.id;
    }
  }
  return std::nullopt;
}

ValidationReport validate_corpus(Corpus const &corpus)
{
  auto const feature_count = corpus.feature_count();
  if (corpus.size() == 0)
  {
    throw InputError("empty corpus: no objects");
  }
  if (feature_count == 0)
  {
    throw InputError("empty feature space: no features");
  }

  std::set<std::string> labels;
  for (auto const &o : corpus.objects())
  {
    if (o.bits.size() != feature_count)
    {
      throw InputError("object '" + o.label + "': bit length " + std::to_string(o.bits.size()) +
                       " does not match feature count " + std::to_string(feature_count));
    }
    if (!labels.insert(o.label).second)
    {
      throw InputError("duplicate label '" + o.label + "'");
    }
    for (auto b : o.bits)
    {
      if (b > 1)
      {
        throw InputError("object '" + o.label + "': indicator values must be 0 or 1");
      }
    }
  }

  // At most one indicator per one-hot block; all-zero encodes a missing value.
  for (auto const &block : corpus.space().one_hot_blocks())
  {
    for (auto const &o : corpus.objects())
    {
      std::size_t set = 0;
      for (auto f : block)
      {
        set += o.bits[f];
      }
      if (set > 1)
      {
        throw InputError("object '" + o.label + "': more than one value set for attribute '" +
                         corpus.space()[block.front()].attribute + "'");
      }
    }
  }

  ValidationReport report;
  for (FeatureIndex f = 0; f < feature_count; ++f)
  {
    auto const first = corpus.objects().front().bits[f];
    bool const constant = std::all_of(corpus.objects().begin(), corpus.objects().end(),
                                      [&](auto const &o) { return o.bits[f] == first; });
    if (constant)
    {
      report.warnings.push_back("feature " + std::to_string(f) + " constant");
    }
  }
  return report;
}

void Parameters::validate() const
{
  auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
  if (!in_unit(cohesion_threshold))
  {
    throw ParameterError("cohesion threshold must lie in [0, 1], got " + std::to_string(cohesion_threshold));
  }
  if (!in_unit(distinctiveness_threshold))
  {
    throw ParameterError("distinctiveness threshold must lie in [0, 1], got " +
                         std::to_string(distinctiveness_threshold));
  }
  if (!(rule_alpha > 0.0 && rule_alpha <= 1.0))
  {
    throw ParameterError("rule alpha must lie in (0, 1], got " + std::to_string(rule_alpha));
  }
}

std::size_t PolymorphousRule::matched(ObjectInstance const &object) const
{
  std::size_t n = 0;
  for (auto f : features)
  {
    n += object.has(f) ? 1 : 0;
  }
  return n;
}

bool Category::contains(ObjectId id) const
{
  return std::binary_search(members.begin(), members.end(), id);
}

std::vector<ObjectId> ConceptField::clustered() const
{
  std::vector<ObjectId> ids;
  for (auto const &c : categories)
  {
    ids.insert(ids.end(), c.members.begin(), c.members.end());
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::optional<std::size_t> ConceptField::category_of(ObjectId id) const
{
  for (std::size_t i = 0; i < categories.size(); ++i)
  {
    if (categories[i].contains(id))
    {
      return i;
    }
  }
  return std::nullopt;
}

void check_partition(ConceptField const &field, std::size_t object_count)
{
  std::vector<int> seen(object_count, 0);
  auto mark = [&](ObjectId id, char const *where) {
    if (id >= object_count)
    {
      throw PreconditionError(std::string("object id ") + std::to_string(id) + " out of range in " + where);
    }
    if (seen[id]++ != 0)
    {
      throw PreconditionError("object id " + std::to_string(id) + " appears more than once");
    }
  };
  for (auto const &c : field.categories)
  {
    if (c.members.size() < 2)
    {
      throw PreconditionError("category with fewer than two members");
    }
    if (!std::is_sorted(c.members.begin(), c.members.end()))
    {
      throw PreconditionError("category members out of order");
    }
    for (auto id : c.members)
    {
      mark(id, "category");
    }
  }
  for (auto id : field.unclustered)
  {
    mark(id, "unclustered set");
  }
  for (ObjectId id = 0; id < object_count; ++id)
  {
    if (seen[id] == 0)
    {
      throw PreconditionError("object id " + std::to_string(id) + " missing from the field");
    }
  }
}

}  // namespace polyclust
