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

// Shannon information measures over binary object vectors. All values are in
// bits (log base 2). Reductions over object pairs run in ascending id order so
// results are bit-identical across runs.

#include "polyclust/model.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace polyclust {

/// 2x2 co-occurrence counts. For an object pair the cells count feature
/// positions by (bit in a, bit in b).
struct PairTable
{
  std::size_t n11{0};
  std::size_t n10{0};
  std::size_t n01{0};
  std::size_t n00{0};

  std::size_t total() const noexcept
  {
    return n11 + n10 + n01 + n00;
  }

  /// Sign of n11*n00 - n10*n01; positive means positive association.
  int association_sign() const noexcept;

  bool operator==(PairTable const &) const = default;
};

/// H = -sum p_i log2 p_i with 0 log 0 = 0. Throws PreconditionError on an
/// all-zero distribution.
double entropy(std::span<std::size_t const> counts);

PairTable object_pair_table(ObjectInstance const &a, ObjectInstance const &b);

/// Mutual information of the table: H(rows) + H(cols) - H(cells), clamped at 0.
double transmission(PairTable const &table);

/// Transmission between two objects, zero unless the association is positive.
double affinity(ObjectInstance const &a, ObjectInstance const &b);

/// Mean affinity over unordered member pairs. Requires two or more members.
double cohesion(std::span<ObjectInstance const> members);

/// Mean affinity over all cross pairs. Both sides non-empty and disjoint by id.
double distinctiveness(std::span<ObjectInstance const> lhs, std::span<ObjectInstance const> rhs);

/// Precomputed symmetric affinity table for a corpus.
class AffinityMatrix
{
public:
  explicit AffinityMatrix(Corpus const &corpus);

  double operator()(ObjectId a, ObjectId b) const
  {
    return values_[a * size_ + b];
  }

  std::size_t size() const noexcept
  {
    return size_;
  }

  /// Same statistic as cohesion(), evaluated from the table. `members` must be
  /// ascending.
  double cohesion(std::span<ObjectId const> members) const;

  double distinctiveness(std::span<ObjectId const> lhs, std::span<ObjectId const> rhs) const;

  /// Mean affinity of `id` to the other entries of `members`.
  double mean_affinity(ObjectId id, std::span<ObjectId const> members) const;

private:
  std::size_t         size_{0};
  std::vector<double> values_;
};

struct CategoryValidity
{
  std::size_t category{0};
  double      probability{0.0};

  bool operator==(CategoryValidity const &) const = default;
};

/// P(category | feature) for every category of the field, counted over
/// clustered objects only. Throws PreconditionError if no clustered object
/// has the feature.
std::vector<CategoryValidity> category_validity(ConceptField const &field, Corpus const &corpus, FeatureIndex f);

}  // namespace polyclust
