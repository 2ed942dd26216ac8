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

#include "polyclust/description.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace polyclust;
using polyclust::testing::corpus_from_bits;

namespace {

ConceptField field_of(ClusteringContext const &ctx, std::vector<std::vector<ObjectId>> categories)
{
  ConceptField field;
  std::vector<bool> used(ctx.corpus().size(), false);
  for (auto &members : categories)
  {
    for (auto id : members)
    {
      used[id] = true;
    }
    field.categories.push_back(ctx.make_category(std::move(members)));
  }
  for (ObjectId id = 0; id < used.size(); ++id)
  {
    if (!used[id])
    {
      field.unclustered.push_back(id);
    }
  }
  return field;
}

std::vector<std::string> labels(Corpus const &c, std::vector<FeatureIndex> const &features)
{
  std::vector<std::string> out;
  for (auto f : features)
  {
    out.push_back(c.space().label(f));
  }
  return out;
}

Parameters const kParams{0.4, 0.2, 0.5};

}  // namespace

TEST_SUITE("description")
{
  TEST_CASE("feature frequencies")
  {
    auto const c = corpus_from_bits({"1100", "1100", "1010"});
    CHECK(feature_frequencies(std::vector<ObjectId>{0, 1}, c) == std::vector<double>{1, 1, 0, 0});
    CHECK(feature_frequencies(std::vector<ObjectId>{0, 2}, c) == std::vector<double>{1, 0.5, 0.5, 0});
    CHECK_THROWS_AS(feature_frequencies(std::vector<ObjectId>{}, c), PreconditionError);

    auto const shapes  = polyclust::testing::shapes_corpus();
    auto const a    = polyclust::testing::shapes_category_a(shapes);
    auto const freq = feature_frequencies(a, shapes);
    REQUIRE(a.size() == 4);
    for (auto const *name : {"circular", "symmetric", "black"})
    {
      CHECK(freq[*shapes.space().find(name)] == 0.75);
    }
    for (auto const *name : {"square", "asymmetric", "white"})
    {
      CHECK(freq[*shapes.space().find(name)] == 0.25);
    }
  }

  TEST_CASE("best member")
  {
    auto const c = corpus_from_bits({"1100", "1100", "1010"});
    CHECK(best_member(std::vector<ObjectId>{0, 1}, c) == 0);
    // mean affinity: 0 -> 0.5, 1 -> 0.5, 2 -> 0
    CHECK(best_member(std::vector<ObjectId>{0, 1, 2}, c) == 0);
    CHECK(best_member(std::vector<ObjectId>{2, 1}, c) == 1);
    CHECK_THROWS_AS(best_member(std::vector<ObjectId>{0}, c), PreconditionError);
  }

  TEST_CASE("2 of 3 rules on the shapes corpus")
  {
    auto const              shapes = polyclust::testing::shapes_corpus();
    ClusteringContext const ctx(shapes, kParams);
    auto const              a     = polyclust::testing::shapes_category_a(shapes);
    auto const              field = field_of(ctx, {a, polyclust::testing::complement(a, shapes.size())});

    auto const rule_a = polymorphous_rule(field.categories[0], field, shapes, 0.5);
    CHECK(labels(shapes, rule_a.features) == std::vector<std::string>{"circular", "symmetric", "black"});
    CHECK(rule_a.m == 2);
    CHECK(rule_a.polymorphous());
    CHECK(rule_a.necessary.empty());
    CHECK(rule_a.sufficient.empty());
    CHECK(rule_a.false_alarm_rate == 0.0);

    auto const rule_b = polymorphous_rule(field.categories[1], field, shapes, 0.5);
    CHECK(labels(shapes, rule_b.features) == std::vector<std::string>{"white", "asymmetric", "square"});
    CHECK(rule_b.m == 2);

    CHECK(misclassification(rule_a, 0, field, shapes) == Misclassification{0, 0});
    CHECK(misclassification(rule_b, 1, field, shapes) == Misclassification{0, 0});
  }

  TEST_CASE("rules for small categories")
  {
    SUBCASE("identical members make every rule feature necessary")
    {
      auto const              c = corpus_from_bits({"1100", "1100", "0011", "0011"});
      ClusteringContext const ctx(c, kParams);
      auto const              field = field_of(ctx, {{0, 1}, {2, 3}});
      auto const              rule  = polymorphous_rule(field.categories[0], field, c, 0.5);
      CHECK(rule.features == std::vector<FeatureIndex>{0, 1});
      CHECK(rule.m == 2);
      CHECK(rule.necessary == std::vector<FeatureIndex>{0, 1});
      CHECK(rule.sufficient == std::vector<FeatureIndex>{0, 1});
      CHECK_FALSE(rule.polymorphous());
    }
    SUBCASE("pure 2 of 3 polymorphy")
    {
      auto const              c = corpus_from_bits({"110", "101", "011"});
      ClusteringContext const ctx(c, Parameters{0.0, 0.0, 0.5});
      auto const              field = field_of(ctx, {{0, 1, 2}});
      auto const              rule  = polymorphous_rule(field.categories[0], field, c, 0.5);
      CHECK(rule.features == std::vector<FeatureIndex>{0, 1, 2});
      CHECK(rule.m == 2);
      CHECK(rule.necessary.empty());

      CHECK_THROWS_WITH_AS(polymorphous_rule(field.categories[0], field, c, 1.0),
                           doctest::Contains("no rule features"), ParameterError);
      auto const fallback = describe_rule(field.categories[0], field, c, 1.0);
      REQUIRE(fallback.has_value());
      CHECK(fallback->m == 2);
      CHECK(fallback->n() == 3);
    }
    SUBCASE("a member outside the majority features extends the rule")
    {
      auto const              c = corpus_from_bits({"110000", "110000", "110000", "000011"});
      ClusteringContext const ctx(c, Parameters{0.0, 0.0, 0.5});
      auto const              field = field_of(ctx, {{0, 1, 2, 3}});
      auto const              rule  = polymorphous_rule(field.categories[0], field, c, 0.5);
      CHECK(rule.features == std::vector<FeatureIndex>{0, 1, 4});
      CHECK(rule.m == 1);
      for (auto id : field.categories[0].members)
      {
        CHECK(rule.satisfied_by(c.object(id)));
      }
    }
    SUBCASE("a featureless member admits no rule")
    {
      auto const              c = corpus_from_bits({"1100", "1100", "0000"});
      ClusteringContext const ctx(c, Parameters{0.0, 0.0, 0.5});
      auto const              field = field_of(ctx, {{0, 1, 2}});
      CHECK_THROWS_AS(polymorphous_rule(field.categories[0], field, c, 0.5), PreconditionError);
      CHECK_FALSE(describe_rule(field.categories[0], field, c, 0.5).has_value());
    }
  }

  TEST_CASE("misclassification counts")
  {
    auto const              c = corpus_from_bits({"110", "110", "101", "101"});
    ClusteringContext const ctx(c, kParams);
    auto const              field = field_of(ctx, {{0, 1}, {2, 3}});

    PolymorphousRule universal;
    universal.m        = 1;
    universal.features = {0};
    CHECK(misclassification(universal, 0, field, c) == Misclassification{2, 0});

    auto const rule = polymorphous_rule(field.categories[0], field, c, 0.5);
    CHECK(rule.sufficient == std::vector<FeatureIndex>{1});
    PolymorphousRule sufficient_only;
    sufficient_only.m        = 1;
    sufficient_only.features = rule.sufficient;
    CHECK(misclassification(sufficient_only, 0, field, c).false_alarms == 0);
  }

  TEST_CASE("report rendering")
  {
    SUBCASE("shapes field")
    {
      auto const              shapes = polyclust::testing::shapes_corpus();
      ClusteringContext const ctx(shapes, kParams);
      auto const              a     = polyclust::testing::shapes_category_a(shapes);
      auto                    field = field_of(ctx, {a, polyclust::testing::complement(a, shapes.size())});
      for (auto &cat : field.categories)
      {
        cat.rule = describe_rule(cat, field, shapes, 0.5);
      }
      auto const out = render_report(field, shapes, field_valid(field, ctx), kParams, {}, false);
      CHECK(out.text.find("at least 2 out of {circular, symmetric, black}") != std::string::npos);
      CHECK(out.text.find("at least 2 out of {white, asymmetric, square}") != std::string::npos);
      CHECK(out.text.find("best member: circular symmetric black") != std::string::npos);
      CHECK(out.record.categories.size() == 2);
      CHECK(out.text.find("margin vs category 2") != std::string::npos);
    }
    SUBCASE("empty field")
    {
      auto const              c = corpus_from_bits({"10", "01", "11"});
      ClusteringContext const ctx(c, kParams);
      ConceptField            field;
      field.unclustered = {0, 1, 2};
      auto const out    = render_report(field, c, field_valid(field, ctx), kParams, {}, true);
      CHECK(out.text.find("no categories formed; 3 objects unclustered") != std::string::npos);
      CHECK(out.record.unclustered == std::vector<std::string>{"o0", "o1", "o2"});
    }
    SUBCASE("identical members list necessary features")
    {
      auto const r = run(corpus_from_bits({"1100", "1100", "0011"}), kParams);
      CHECK(r.text.find("necessary features: f0, f1") != std::string::npos);
      CHECK(r.text_trace.find("1. protoseed {o0, o1} as category 1") != std::string::npos);
      CHECK(r.text.find("trace:") == std::string::npos);
    }
  }

  TEST_CASE("best member under zero padding")
  {
    // Padding adds 0/0 cells to every pair table, which moves affinities
    // unevenly; the mean-affinity prototype can change.
    auto const                  plain  = corpus_from_bits({"0001", "0010", "0101", "0111"});
    auto const                  padded = corpus_from_bits({"00010", "00100", "01010", "01110"});
    std::vector<ObjectId> const all{0, 1, 2, 3};
    CHECK(best_member(all, plain) == 2);
    CHECK(best_member(all, padded) == 3);

    auto const dup        = corpus_from_bits({"1100", "1100", "1010"});
    auto const dup_padded = corpus_from_bits({"110000", "110000", "101000"});
    CHECK(best_member(std::vector<ObjectId>{0, 1, 2}, dup) == best_member(std::vector<ObjectId>{0, 1, 2}, dup_padded));
  }

  TEST_CASE("property: rule and prototype invariants on finished runs")
  {
    std::mt19937_64                        rng(4242);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial)
    {
      auto const       c = polyclust::testing::random_corpus(rng, 16, 10);
      Parameters const params{0.05 + 0.3 * unit(rng), 0.2 * unit(rng), 0.3 + 0.7 * unit(rng)};
      auto const       r = run(c, params);

      for (std::size_t k = 0; k < r.field.categories.size(); ++k)
      {
        auto const &cat = r.field.categories[k];
        REQUIRE(cat.rule.has_value());
        auto const &rule = *cat.rule;
        CHECK(rule.m >= 1);
        CHECK(rule.m <= rule.n());
        CHECK(misclassification(rule, k, r.field, c).misses == 0);
        for (auto f : rule.necessary)
        {
          CHECK(std::find(rule.features.begin(), rule.features.end(), f) != rule.features.end());
        }
        for (auto f : rule.sufficient)
        {
          for (std::size_t other = 0; other < r.field.categories.size(); ++other)
          {
            if (other == k)
            {
              continue;
            }
            for (auto id : r.field.categories[other].members)
            {
              CHECK_FALSE(c.object(id).has(f));
            }
          }
        }

        // best member survives renaming and reordering the features
        auto const                  f = c.feature_count();
        std::vector<Feature>        renamed;
        for (FeatureIndex k = 0; k < f; ++k)
        {
          renamed.push_back({"renamed-" + c.space()[f - 1 - k].attribute, ""});
        }
        std::vector<ObjectInstance> reversed = c.objects();
        for (auto &o : reversed)
        {
          std::reverse(o.bits.begin(), o.bits.end());
        }
        Corpus const relabeled(FeatureSpace(renamed), reversed);
        CHECK(best_member(cat.members, relabeled) == cat.best_member);
      }
    }
  }
}
