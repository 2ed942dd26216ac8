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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polyclust {

using ObjectId     = std::size_t;
using FeatureIndex = std::size_t;

//------------------------------------------------------------------------------
// Errors
//------------------------------------------------------------------------------

enum class ErrorKind
{
  input,         // malformed or inconsistent input data
  parameter,     // out-of-range parameter or unresolvable query value
  precondition,  // operation called outside its contract
};

class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, std::string const &what)
    : std::runtime_error(what)
    , kind_(kind)
  {}

  ErrorKind kind() const noexcept
  {
    return kind_;
  }

private:
  ErrorKind kind_;
};

struct InputError : Error
{
  explicit InputError(std::string const &what)
    : Error(ErrorKind::input, what)
  {}
};

struct ParameterError : Error
{
  explicit ParameterError(std::string const &what)
    : Error(ErrorKind::parameter, what)
  {}
};

struct PreconditionError : Error
{
  explicit PreconditionError(std::string const &what)
    : Error(ErrorKind::precondition, what)
  {}
};

//------------------------------------------------------------------------------
// Feature space
//------------------------------------------------------------------------------

/// One binary feature. One-hot expanded attributes carry a value label; plain
/// binary features (keywords, matrix columns) leave `value` empty.
struct Feature
{
  std::string attribute;
  std::string value;

  bool operator==(Feature const &) const = default;
};

/// Ordered, named binary features. Iteration order is input order.
class FeatureSpace
{
public:
  FeatureSpace() = default;
  explicit FeatureSpace(std::vector<Feature> features);

  std::size_t size() const noexcept
  {
    return features_.size();
  }

  Feature const &operator[](FeatureIndex f) const
  {
    return features_.at(f);
  }

  std::vector<Feature> const &features() const noexcept
  {
    return features_;
  }

  /// Human-readable label: the value label when it is unambiguous, the bare
  /// attribute for plain binary features, `attribute=value` otherwise.
  std::string const &label(FeatureIndex f) const
  {
    return labels_.at(f);
  }

  /// Resolves either a display label or an `attribute=value` pair.
  std::optional<FeatureIndex> find(std::string_view label) const;

  /// Feature indices grouped by one-hot block (features sharing an attribute
  /// and carrying a value label). Plain binary features form no block.
  std::vector<std::vector<FeatureIndex>> one_hot_blocks() const;

  bool operator==(FeatureSpace const &other) const
  {
    return features_ == other.features_;
  }

private:
  std::vector<Feature>     features_;
  std::vector<std::string> labels_;
};

//------------------------------------------------------------------------------
// Objects and corpora
//------------------------------------------------------------------------------

struct ObjectInstance
{
  ObjectId                  id{0};
  std::string               label;
  std::vector<std::uint8_t> bits;

  bool has(FeatureIndex f) const
  {
    return bits.at(f) != 0;
  }

  std::size_t count() const noexcept;

  bool operator==(ObjectInstance const &) const = default;
};

class Corpus
{
public:
  Corpus() = default;

  /// Ids are reassigned to dense input order. No further checking happens
  /// here; see validate_corpus.
  Corpus(FeatureSpace space, std::vector<ObjectInstance> objects);

  FeatureSpace const &space() const noexcept
  {
    return space_;
  }

  std::vector<ObjectInstance> const &objects() const noexcept
  {
    return objects_;
  }

  ObjectInstance const &object(ObjectId id) const
  {
    return objects_.at(id);
  }

  std::size_t size() const noexcept
  {
    return objects_.size();
  }

  std::size_t feature_count() const noexcept
  {
    return space_.size();
  }

  std::optional<ObjectId> find(std::string_view label) const;

  bool operator==(Corpus const &other) const
  {
    return space_ == other.space_ && objects_ == other.objects_;
  }

private:
  FeatureSpace                space_;
  std::vector<ObjectInstance> objects_;
};

struct ValidationReport
{
  std::vector<std::string> warnings;
};

/// Checks every corpus invariant. Throws InputError naming the offending
/// object or feature; constant features are only reported as warnings.
ValidationReport validate_corpus(Corpus const &corpus);

//------------------------------------------------------------------------------
// Parameters
//------------------------------------------------------------------------------

struct Parameters
{
  double cohesion_threshold{0.4};         // bits
  double distinctiveness_threshold{0.2};  // bits
  double rule_alpha{0.5};

  /// Throws ParameterError unless both thresholds lie in [0, 1] and alpha in
  /// (0, 1].
  void validate() const;

  bool operator==(Parameters const &) const = default;
};

//------------------------------------------------------------------------------
// Categories and the concept field
//------------------------------------------------------------------------------

/// m-of-n membership rule. Membership means possessing at least `m` of
/// `features`.
struct PolymorphousRule
{
  std::size_t               m{1};
  std::vector<FeatureIndex> features;
  std::vector<FeatureIndex> necessary;
  std::vector<FeatureIndex> sufficient;
  double                    false_alarm_rate{0.0};

  std::size_t n() const noexcept
  {
    return features.size();
  }

  bool polymorphous() const noexcept
  {
    return m < features.size();
  }

  std::size_t matched(ObjectInstance const &object) const;

  bool satisfied_by(ObjectInstance const &object) const
  {
    return matched(object) >= m;
  }

  bool operator==(PolymorphousRule const &) const = default;
};

struct Category
{
  std::vector<ObjectId>           members;  // ascending
  double                          cohesion{0.0};
  ObjectId                        best_member{0};
  std::optional<PolymorphousRule> rule;

  bool contains(ObjectId id) const;

  bool operator==(Category const &) const = default;
};

struct ConceptField
{
  std::vector<Category> categories;
  std::vector<ObjectId> unclustered;  // ascending

  /// Ids of every clustered object, ascending.
  std::vector<ObjectId> clustered() const;

  /// Index of the category holding `id`, if any.
  std::optional<std::size_t> category_of(ObjectId id) const;

  bool operator==(ConceptField const &) const = default;
};

/// Throws PreconditionError unless categories are pairwise disjoint, each has
/// at least two members, and members plus unclustered cover 0..N-1 exactly.
void check_partition(ConceptField const &field, std::size_t object_count);

}  // namespace polyclust
