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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion; an optional
// argument selects a single criterion.

#include "polyclust/description.hpp"
#include "polyclust/engine.hpp"
#include "polyclust/information.hpp"
#include "polyclust/io.hpp"
#include "polyclust/retrieval.hpp"

#include "support.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace polyclust;
namespace pt = polyclust::testing;

namespace {

constexpr double kMetricTolerance = 1e-9;  // bits
constexpr int    kGridSteps       = 19;    // 0.05 .. 0.95
constexpr double kGridStep        = 0.05;
constexpr double kAlpha           = 0.5;

double grid_value(int k)
{
  return (k + 1) * kGridStep;
}

struct Outcome
{
  bool                     pass{true};
  std::vector<std::string> notes;

  void require(bool condition, std::string const &what)
  {
    if (!condition)
    {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }

  void note(std::string const &text)
  {
    notes.push_back(text);
  }
};

std::string fmt(double v)
{
  return format_bits(v);
}

//------------------------------------------------------------------------------
// Brute-force oracles
//------------------------------------------------------------------------------

double definitional_entropy(std::vector<double> const &weights)
{
  double total = 0;
  for (double w : weights)
  {
    total += w;
  }
  double h = 0;
  for (double w : weights)
  {
    if (w > 0)
    {
      double const p = w / total;
      h += p * std::log(1.0 / p) / std::log(2.0);
    }
  }
  return h;
}

// I(X;Y) = sum p(x,y) log2 p(x,y) / (p(x) p(y)) over feature positions.
double definitional_transmission(ObjectInstance const &a, ObjectInstance const &b)
{
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double>                 px;
  std::map<int, double>                 py;
  double const                          n = static_cast<double>(a.bits.size());
  for (std::size_t f = 0; f < a.bits.size(); ++f)
  {
    joint[{a.bits[f], b.bits[f]}] += 1.0 / n;
    px[a.bits[f]] += 1.0 / n;
    py[b.bits[f]] += 1.0 / n;
  }
  double mi = 0;
  for (auto const &[xy, p] : joint)
  {
    mi += p * std::log2(p / (px[xy.first] * py[xy.second]));
  }
  return std::max(0.0, mi);
}

//------------------------------------------------------------------------------
// Criteria
//------------------------------------------------------------------------------

Outcome metric_oracles()
{
  Outcome                                     out;
  std::mt19937_64                             rng(20260101);
  std::uniform_int_distribution<std::size_t>  width(1, 16);
  std::bernoulli_distribution                 bit(0.5);
  std::uniform_int_distribution<std::size_t>  count(0, 40);
  double                                      worst = 0;
  for (int pair = 0; pair < 200; ++pair)
  {
    auto const     f = width(rng);
    ObjectInstance a;
    ObjectInstance b;
    for (std::size_t i = 0; i < f; ++i)
    {
      a.bits.push_back(bit(rng) ? 1 : 0);
      b.bits.push_back(bit(rng) ? 1 : 0);
    }
    auto const table = object_pair_table(a, b);
    worst            = std::max(worst, std::abs(transmission(table) - definitional_transmission(a, b)));

    std::vector<std::size_t> counts(1 + pair % 5);
    std::vector<double>      weights;
    for (auto &c : counts)
    {
      c = count(rng);
    }
    counts[0] += 1;
    for (auto c : counts)
    {
      weights.push_back(static_cast<double>(c));
    }
    worst = std::max(worst, std::abs(entropy(counts) - definitional_entropy(weights)));
  }
  out.note("largest deviation " + fmt(worst) + " bits over 200 pairs");
  out.require(worst <= kMetricTolerance, "deviation within 1e-9 bits");
  return out;
}

bool same_partition(ConceptField const &field, std::vector<std::vector<ObjectId>> expected)
{
  std::vector<std::vector<ObjectId>> got;
  for (auto const &c : field.categories)
  {
    got.push_back(c.members);
  }
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  return got == expected;
}

Outcome shapes_recovery()
{
  Outcome    out;
  auto const shapes    = pt::shapes_corpus();
  auto const a      = pt::shapes_category_a(shapes);
  auto const b      = pt::complement(a, shapes.size());
  std::vector<std::vector<ObjectId>> const target{a, b};

  std::map<std::size_t, int> category_counts;
  std::optional<Parameters>  found;
  for (int i = 0; i < kGridSteps && !found; ++i)
  {
    for (int j = 0; j < kGridSteps && !found; ++j)
    {
      Parameters const params{grid_value(i), grid_value(j), kAlpha};
      auto const       r = run(shapes, params);
      ++category_counts[r.field.categories.size()];
      if (r.field.categories.size() != 2 || !same_partition(r.field, target))
      {
        continue;
      }
      bool const rule_a = r.text.find("at least 2 out of {circular, symmetric, black}") != std::string::npos;
      bool const rule_b = r.text.find("at least 2 out of {white, asymmetric, square}") != std::string::npos;
      if (rule_a && rule_b)
      {
        found = params;
      }
    }
  }

  for (auto const &[k, n] : category_counts)
  {
    out.note(std::to_string(n) + " grid points yield " + std::to_string(k) + " categories");
  }
  AffinityMatrix const aff(shapes);
  double const         w_a    = aff.cohesion(a);
  double const         w_b    = aff.cohesion(b);
  double const         d_ab   = aff.distinctiveness(a, b);
  out.note("target field: W(A) " + fmt(w_a) + ", W(B) " + fmt(w_b) + ", D(A,B) " + fmt(d_ab) + " bits");
  out.note("target field needs theta_W <= " + fmt(std::min(w_a, w_b)) + " and theta_D <= " +
           fmt(std::min(w_a, w_b) - d_ab) + "; grid minimum is " + fmt(grid_value(0)));
  if (found)
  {
    out.note("frozen point: theta_W " + fmt(found->cohesion_threshold) + ", theta_D " +
             fmt(found->distinctiveness_threshold));
  }
  out.require(found.has_value(), "a grid point recovers the two 2-of-3 categories with their rules");
  return out;
}

Outcome abstracts_grid()
{
  Outcome    out;
  auto const c  = pt::abstracts_corpus();
  auto const a1 = pt::abstract_id(c, 1);
  auto const a2 = pt::abstract_id(c, 2);
  auto const a4 = pt::abstract_id(c, 4);
  auto const a6 = pt::abstract_id(c, 6);

  auto together = [](ConceptField const &field, ObjectId x, ObjectId y) {
    auto const cx = field.category_of(x);
    return cx.has_value() && cx == field.category_of(y);
  };

  std::map<std::size_t, int> category_counts;
  std::optional<Parameters>  found;
  for (int i = 0; i < kGridSteps && !found; ++i)
  {
    for (int j = 0; j < kGridSteps && !found; ++j)
    {
      Parameters const params{grid_value(i), grid_value(j), kAlpha};
      auto const       r = run(c, params);
      ++category_counts[r.field.categories.size()];
      if (r.field.categories.size() == 3 && together(r.field, a1, a2) && together(r.field, a4, a6))
      {
        found = params;
      }
    }
  }

  for (auto const &[k, n] : category_counts)
  {
    out.note(std::to_string(n) + " grid points yield " + std::to_string(k) + " categories");
  }
  AffinityMatrix const aff(c);
  double               best_pair = 0;
  for (ObjectId x = 0; x < c.size(); ++x)
  {
    for (ObjectId y = x + 1; y < c.size(); ++y)
    {
      best_pair = std::max(best_pair, aff(x, y));
    }
  }
  out.note("affinity(abstract 1, abstract 2) " + fmt(aff(a1, a2)) + " bits, affinity(abstract 4, abstract 6) " +
           fmt(aff(a4, a6)) + " bits");
  out.note("largest pairwise affinity " + fmt(best_pair) + " bits; grid minimum theta_W is " + fmt(grid_value(0)));
  if (found)
  {
    out.note("frozen point: theta_W " + fmt(found->cohesion_threshold) + ", theta_D " +
             fmt(found->distinctiveness_threshold));
  }
  out.require(found.has_value(), "a grid point gives 3 categories with {1,2} and {4,6} co-clustered");
  return out;
}

Outcome end_of_run_guarantees()
{
  Outcome                                    out;
  std::mt19937_64                            rng(777);
  std::uniform_real_distribution<double>     unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick_alpha(1, 10);
  std::size_t                                categories = 0;
  for (int trial = 0; trial < 100; ++trial)
  {
    auto const       c = pt::random_corpus(rng, 20, 12);
    Parameters const params{0.4 * unit(rng), 0.2 * unit(rng), static_cast<double>(pick_alpha(rng)) / 10.0};
    auto const       r     = run(c, params);
    auto const       label = "corpus " + std::to_string(trial) + ": ";
    categories += r.field.categories.size();

    for (std::size_t k = 0; k < r.field.categories.size(); ++k)
    {
      auto const &cat = r.field.categories[k];
      out.require(cat.contains(cat.best_member), label + "best member inside its category");
      out.require(cat.rule.has_value(), label + "category has a rule");
      if (cat.rule)
      {
        out.require(misclassification(*cat.rule, k, r.field, c).misses == 0, label + "rule has no misses");
      }
    }
    auto const validity = field_valid(r.field, c, params);
    for (std::size_t k = 0; k < r.field.categories.size(); ++k)
    {
      out.require(validity.cohesion[k] >= params.cohesion_threshold, label + "cohesion threshold holds");
      for (std::size_t o = 0; o < r.field.categories.size(); ++o)
      {
        if (o != k)
        {
          out.require(validity.margin(k, o) >= params.distinctiveness_threshold, label + "margin holds");
        }
      }
    }
    try
    {
      check_partition(r.field, c.size());
    }
    catch (Error const &e)
    {
      out.require(false, label + "partition: " + e.what());
    }
    out.require(r.trace.size() <= 2 * c.size(), label + "action count within 2N");

    auto const again = run(c, params);
    out.require(again.text_trace == r.text_trace && io::emit_json(again.report) == io::emit_json(r.report),
                label + "repeat run is byte-identical");
  }
  out.note("100 corpora, " + std::to_string(categories) + " categories checked");
  return out;
}

Outcome retrieval_equivalence()
{
  Outcome     out;
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 5; ++n)
  {
    PolymorphousQuery q;
    for (std::size_t i = 0; i < n; ++i)
    {
      q.features.push_back(i);
      q.labels.push_back("f" + std::to_string(i));
    }
    for (q.m = 1; q.m <= n; ++q.m)
    {
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
      {
        ObjectInstance o;
        for (std::size_t i = 0; i < n; ++i)
        {
          o.bits.push_back((bits >> i & 1u) ? 1 : 0);
        }
        // disjunction of conjunctions over every m-subset
        bool dnf = false;
        for (std::uint32_t subset = 0; subset < (1u << n); ++subset)
        {
          if (static_cast<std::size_t>(std::popcount(subset)) == q.m && (subset & bits) == subset)
          {
            dnf = true;
          }
        }
        out.require(match(q, o) == dnf, "m-of-n equals DNF for n=" + std::to_string(n));
        ++cases;
      }
    }
  }
  out.note(std::to_string(cases) + " truth-table rows compared");

  auto const c    = pt::abstracts_corpus();
  auto       hits = retrieve(c, resolve_query(c, 1, {"VISUAL SEARCH"}));
  std::sort(hits.begin(), hits.end());
  std::vector<ObjectId> expected{pt::abstract_id(c, 4), pt::abstract_id(c, 6)};
  std::sort(expected.begin(), expected.end());
  std::string got;
  for (auto id : hits)
  {
    got += (got.empty() ? "" : ", ") + c.object(id).label;
  }
  out.note("1 of {VISUAL SEARCH}: " + got);
  out.require(hits == expected, "query returns exactly abstracts 4 and 6");
  return out;
}

Outcome parser_fidelity()
{
  Outcome    out;
  auto const records = io::parse_refer(io::read_file(pt::data_path("abstracts.ref")));
  out.require(records.size() == 7, "7 records");
  std::vector<std::size_t> counts;
  for (int n = 1; n <= 7; ++n)
  {
    auto const suffix = "abstract " + std::to_string(n);
    auto const it     = std::find_if(records.begin(), records.end(),
                                     [&](io::ReferRecord const &r) { return r.label.ends_with(suffix); });
    counts.push_back(it == records.end() ? 0 : it->keywords.size());
  }
  std::string listed;
  for (auto k : counts)
  {
    listed += (listed.empty() ? "" : ", ") + std::to_string(k);
  }
  out.note("keyword counts for abstracts 1..7: " + listed);
  out.require(counts == std::vector<std::size_t>{7, 2, 8, 5, 4, 6, 5}, "keyword counts (7, 2, 8, 5, 4, 6, 5)");
  return out;
}

struct Criterion
{
  int                      number;
  char const              *name;
  double                   budget_seconds;
  std::function<Outcome()> check;
};

}  // namespace

int main(int argc, char **argv)
{
  std::vector<Criterion> const criteria{
    {1, "metric oracle equivalence", 1.0, metric_oracles},
    {2, "shapes corpus recovery", 1.0, shapes_recovery},
    {3, "abstracts corpus grid search", 5.0, abstracts_grid},
    {4, "end-of-run guarantees", 60.0, end_of_run_guarantees},
    {5, "retrieval equivalence", 1.0, retrieval_equivalence},
    {6, "parser fidelity", 1.0, parser_fidelity},
  };

  int only = 0;
  if (argc > 1)
  {
    only = std::atoi(argv[1]);
    if (only < 1 || only > static_cast<int>(criteria.size()))
    {
      std::fprintf(stderr, "usage: %s [criterion 1-%zu]\n", argv[0], criteria.size());
      return 2;
    }
  }

  int failures = 0;
  for (auto const &c : criteria)
  {
    if (only != 0 && c.number != only)
    {
      continue;
    }
    auto const start = std::chrono::steady_clock::now();
    Outcome    outcome;
    try
    {
      outcome = c.check();
    }
    catch (std::exception const &e)
    {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    double const seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    outcome.require(seconds < c.budget_seconds, "runtime under " + fmt(c.budget_seconds) + " s");

    std::printf("[%s] criterion %d: %s (%.3f s)\n", outcome.pass ? "PASS" : "FAIL", c.number, c.name, seconds);
    std::size_t shown = 0;
    for (auto const &n : outcome.notes)
    {
      if (++shown > 12)
      {
        std::printf("    ... %zu more\n", outcome.notes.size() - 12);
        break;
      }
      std::printf("    %s\n", n.c_str());
    }
    failures += outcome.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
