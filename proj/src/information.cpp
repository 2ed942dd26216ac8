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

#include "polyclust/information.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace polyclust {

int PairTable::association_sign() const noexcept
{
  auto const pos = n11 * n00;
  auto const neg = n10 * n01;
  return pos > neg ? 1 : (pos < neg ? -1 : 0);
}

double entropy(std::span<std::size_t const> counts)
{
  std::size_t total = 0;
  for (auto c : counts)
  {
    total += c;
  }
  if (total == 0)
  {
    throw PreconditionError("empty distribution");
  }
  double h = 0.0;
  auto const n = static_cast<double>(total);
  for (auto c : counts)
  {
    if (c == 0)
    {
      continue;
    }
    double const p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h;
}

PairTable object_pair_table(ObjectInstance const &a, ObjectInstance const &b)
{
  if (a.bits.size() != b.bits.size())
  {
    throw PreconditionError("objects '" + a.label + "' and '" + b.label + "' have different lengths");
  }
  PairTable t;
  for (std::size_t f = 0; f < a.bits.size(); ++f)
  {
    bool const x = a.bits[f] != 0;
    bool const y = b.bits[f] != 0;
    if (x && y)
    {
      ++t.n11;
    }
    else if (x)
    {
      ++t.n10;
    }
    else if (y)
    {
      ++t.n01;
    }
    else
    {
      ++t.n00;
    }
  }
  return t;
}

double transmission(PairTable const &t)
{
  if (t.total() == 0)
  {
    throw PreconditionError("empty distribution");
  }
  std::array<std::size_t, 2> const rows{t.n11 + t.n10, t.n01 + t.n00};
  std::array<std::size_t, 2> const cols{t.n11 + t.n01, t.n10 + t.n00};
  // Off-diagonal cells in a fixed order so swapping the objects is exact.
  std::array<std::size_t, 4> const cells{t.n11, std::min(t.n10, t.n01), std::max(t.n10, t.n01), t.n00};
  return std::max(0.0, entropy(rows) + entropy(cols) - entropy(cells));
}

double affinity(ObjectInstance const &a, ObjectInstance const &b)
{
  auto const t = object_pair_table(a, b);
  return t.association_sign() > 0 ? transmission(t) : 0.0;
}

double cohesion(std::span<ObjectInstance const> members)
{
  if (members.size() < 2)
  {
    throw PreconditionError("cohesion needs at least two members");
  }
  double      sum   = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < members.size(); ++i)
  {
    for (std::size_t j = i + 1; j < members.size(); ++j)
    {
      sum += affinity(members[i], members[j]);
      ++pairs;
    }
  }
  return sum / static_cast<double>(pairs);
}

double distinctiveness(std::span<ObjectInstance const> lhs, std::span<ObjectInstance const> rhs)
{
  if (lhs.empty() || rhs.empty())
  {
    throw PreconditionError("distinctiveness needs two non-empty member sets");
  }
  for (auto const &a : lhs)
  {
    for (auto const &b : rhs)
    {
      if (a.id == b.id)
      {
        throw PreconditionError("member sets overlap at object '" + a.label + "'");
      }
    }
  }
  double sum = 0.0;
  for (auto const &a : lhs)
  {
    for (auto const &b : rhs)
    {
      sum += affinity(a, b);
    }
  }
  return sum / static_cast<double>(lhs.size() * rhs.size());
}

AffinityMatrix::AffinityMatrix(Corpus const &corpus)
  : size_(corpus.size())
  , values_(corpus.size() * corpus.size(), 0.0)
{
  auto const &objects = corpus.objects();
  for (std::size_t i = 0; i < size_; ++i)
  {
    for (std::size_t j = i; j < size_; ++j)
    {
      double const a          = affinity(objects[i], objects[j]);
      values_[i * size_ + j]  = a;
      values_[j * size_ + i]  = a;
    }
  }
}

double AffinityMatrix::cohesion(std::span<ObjectId const> members) const
{
  if (members.size() < 2)
  {
    throw PreconditionError("cohesion needs at least two members");
  }
  double      sum   = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < members.size(); ++i)
  {
    for (std::size_t j = i + 1; j < members.size(); ++j)
    {
      sum += (*this)(members[i], members[j]);
      ++pairs;
    }
  }
  return sum / static_cast<double>(pairs);
}

double AffinityMatrix::distinctiveness(std::span<ObjectId const> lhs, std::span<ObjectId const> rhs) const
{
  if (lhs.empty() || rhs.empty())
  {
    throw PreconditionError("distinctiveness needs two non-empty member sets");
  }
  double sum = 0.0;
  for (auto a : lhs)
  {
    for (auto b : rhs)
    {
      if (a == b)
      {
        throw PreconditionError("member sets overlap at object " + std::to_string(a));
      }
      sum += (*this)(a, b);
    }
  }
  return sum / static_cast<double>(lhs.size() * rhs.size());
}

double AffinityMatrix::mean_affinity(ObjectId id, std::span<ObjectId const> members) const
{
  double      sum    = 0.0;
  std::size_t others = 0;
  for (auto m : members)
  {
    if (m == id)
    {
      continue;
    }
    sum += (*this)(id, m);
    ++others;
  }
  return others == 0 ? 0.0 : sum / static_cast<double>(others);
}

std::vector<CategoryValidity> category_validity(ConceptField const &field, Corpus const &corpus, FeatureIndex f)
{
  if (f >= corpus.feature_count())
  {
    throw PreconditionError("feature index " + std::to_string(f) + " out of range");
  }
  std::vector<std::size_t> per_category(field.categories.size(), 0);
  std::size_t              total = 0;
  for (std::size_t c = 0; c < field.categories.size(); ++c)
  {
    for (auto id : field.categories[c].members)
    {
      if (corpus.object(id).has(f))
      {
        ++per_category[c];
        ++total;
      }
    }
  }
  if (total == 0)
  {
    throw PreconditionError("undefined validity: feature '" + corpus.space().label(f) +
                            "' absent from all clustered objects");
  }
  std::vector<CategoryValidity> out;
  out.reserve(per_category.size());
  for (std::size_t c = 0; c < per_category.size(); ++c)
  {
    out.push_back({c, static_cast<double>(per_category[c]) / static_cast<double>(total)});
  }
  return out;
}

}  // namespace polyclust
