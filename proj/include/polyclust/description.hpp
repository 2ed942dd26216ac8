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

// Category description: feature frequencies, prototypes, m-of-n rules and the
// rendered field report.

#include "polyclust/engine.hpp"
#include "polyclust/information.hpp"
#include "polyclust/model.hpp"
#include "polyclust/report.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polyclust {

/// p(f | members) for every feature.
std::vector<double> feature_frequencies(std::span<ObjectId const> members, Corpus const &corpus);

/// Member with the highest mean affinity to the other members; lowest id on
/// ties.
ObjectId best_member(std::span<ObjectId const> members, AffinityMatrix const &affinity);
ObjectId best_member(std::span<ObjectId const> members, Corpus const &corpus);

/// Builds the m-of-n rule for `category` within `field`.
///
/// The rule features are those with p(f|c) >= alpha, ordered by descending
/// frequency then index, and m is the smallest number of them any member
/// holds. If some member holds none of them, further present features are
/// appended in the same order until every member holds at least one, so m is
/// always >= 1.
///
/// Throws ParameterError("no rule features") when no feature reaches alpha
/// and PreconditionError when a member possesses no feature at all.
PolymorphousRule polymorphous_rule(Category const &category, ConceptField const &field, Corpus const &corpus,
                                   double alpha);

/// Rule used by a finished run: retries at the category's highest feature
/// frequency when alpha selects nothing, and yields no rule for a category
/// holding a featureless member.
std::optional<PolymorphousRule> describe_rule(Category const &category, ConceptField const &field,
                                              Corpus const &corpus, double alpha);

struct Misclassification
{
  std::size_t false_alarms{0};
  std::size_t misses{0};

  bool operator==(Misclassification const &) const = default;
};

/// Counts clustered non-members of `category` that satisfy the rule and
/// members that fail it.
Misclassification misclassification(PolymorphousRule const &rule, std::size_t category, ConceptField const &field,
                                    Corpus const &corpus);

/// "at least m out of {a, b, c}"
std::string rule_sentence(RuleRecord const &rule);

Report build_report(ConceptField const &field, Corpus const &corpus, FieldValidity const &validity,
                    Parameters const &params, std::span<Action const> trace);

/// Line-oriented rendering of a report. Numbers use 9 significant digits.
std::string render_text(Report const &report, bool with_trace);

struct RenderedReport
{
  Report      record;
  std::string text;
};

RenderedReport render_report(ConceptField const &field, Corpus const &corpus, FieldValidity const &validity,
                             Parameters const &params, std::span<Action const> trace, bool with_trace);

/// 9 significant digits, as used by both the text and JSON reports.
std::string format_bits(double value);

}  // namespace polyclust
