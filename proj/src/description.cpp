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

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace polyclust {
namespace {

std::vector<std::string> labels_of(std::span<FeatureIndex const> features, Corpus const &corpus)
{
  std::vector<std::string> out;
  out.reserve(features.size());
  for (auto f : features)
  {
    out.push_back(corpus.space().label(f));
  }
  return out;
}

std::vector<std::string> object_labels(std::span<ObjectId const> ids, Corpus const &corpus)
{
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (auto id : ids)
  {
    out.push_back(corpus.object(id).label);
  }
  return out;
}

std::string join(std::vector<std::string> const &items, char const *sep = ", ")
{
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i)
  {
    if (i != 0)
    {
      out += sep;
    }
    out += items[i];
  }
  return out;
}

// Non-members of `category` among the clustered objects of the field.
std::vector<ObjectId> clustered_outsiders(std::size_t category, ConceptField const &field)
{
  std::vector<ObjectId> out;
  for (std::size_t c = 0; c < field.categories.size(); ++c)
  {
    if (c == category)
    {
      continue;
    }
    auto const &m = field.categories[c].members;
    out.insert(out.end(), m.begin(), m.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> index_of(Category const &category, ConceptField const &field)
{
  for (std::size_t c = 0; c < field.categories.size(); ++c)
  {
    if (field.categories[c].members == category.members)
    {
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace

std::string format_bits(double value)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::vector<double> feature_frequencies(std::span<ObjectId const> members, Corpus const &corpus)
{
  if (members.empty())
  {
    throw PreconditionError("feature frequencies of an empty member set");
  }
  std::vector<double> freq(corpus.feature_count(), 0.0);
  for (auto id : members)
  {
    auto const &bits = corpus.object(id).bits;
    for (FeatureIndex f = 0; f < freq.size(); ++f)
    {
      freq[f] += bits[f] != 0 ? 1.0 : 0.0;
    }
  }
  for (auto &p : freq)
  {
    p /= static_cast<double>(members.size());
  }
  return freq;
}

ObjectId best_member(std::span<ObjectId const> members, AffinityMatrix const &affinity)
{
  if (members.size() < 2)
  {
    throw PreconditionError("best member needs at least two members");
  }
  std::vector<ObjectId> sorted(members.begin(), members.end());
  std::sort(sorted.begin(), sorted.end());
  ObjectId best       = sorted.front();
  double   best_score = affinity.mean_affinity(best, sorted);
  for (auto id : sorted)
  {
    double const score = affinity.mean_affinity(id, sorted);
    if (score > best_score)
    {
      best_score = score;
      best       = id;
    }
  }
  return best;
}

ObjectId best_member(std::span<ObjectId const> members, Corpus const &corpus)
{
  return best_member(members, AffinityMatrix(corpus));
}

PolymorphousRule polymorphous_rule(Category const &category, ConceptField const &field, Corpus const &corpus,
                                   double alpha)
{
  auto const &members = category.members;
  if (members.size() < 2)
  {
    throw PreconditionError("rule extraction needs at least two members");
  }
  if (!(alpha > 0.0 && alpha <= 1.0))
  {
    throw ParameterError("rule alpha must lie in (0, 1]");
  }

  auto const freq = feature_frequencies(members, corpus);
  std::vector<FeatureIndex> order(freq.size());
  std::iota(order.begin(), order.end(), FeatureIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return freq[a] > freq[b]; });

  PolymorphousRule rule;
  auto             next = order.begin();
  while (next != order.end() && freq[*next] >= alpha)
  {
    rule.features.push_back(*next++);
  }
  if (rule.features.empty())
  {
    throw ParameterError("no rule features: no feature reaches frequency " + format_bits(alpha));
  }

  auto min_matched = [&] {
    std::size_t m = rule.features.size();
    for (auto id : members)
    {
      m = std::min(m, rule.matched(corpus.object(id)));
    }
    return m;
  };

  rule.m = min_matched();
  while (rule.m == 0 && next != order.end() && freq[*next] > 0.0)
  {
    rule.features.push_back(*next++);
    rule.m = min_matched();
  }
  if (rule.m == 0)
  {
    for (auto id : members)
    {
      if (rule.matched(corpus.object(id)) == 0)
      {
        throw PreconditionError("member '" + corpus.object(id).label + "' possesses no features");
      }
    }
  }

  auto const outsiders = clustered_outsiders(index_of(category, field).value_or(field.categories.size()), field);
  for (FeatureIndex f = 0; f < freq.size(); ++f)
  {
    if (freq[f] == 1.0)
    {
      rule.necessary.push_back(f);
    }
    if (freq[f] > 0.0 &&
        std::none_of(outsiders.begin(), outsiders.end(), [&](auto id) { return corpus.object(id).has(f); }))
    {
      rule.sufficient.push_back(f);
    }
  }

  if (!outsiders.empty())
  {
    auto const hits = std::count_if(outsiders.begin(), outsiders.end(),
                                    [&](auto id) { return rule.satisfied_by(corpus.object(id)); });
    rule.false_alarm_rate = static_cast<double>(hits) / static_cast<double>(outsiders.size());
  }
  return rule;
}

std::optional<PolymorphousRule> describe_rule(Category const &category, ConceptField const &field,
                                              Corpus const &corpus, double alpha)
{
  try
  {
    return polymorphous_rule(category, field, corpus, alpha);
  }
  catch (ParameterError const &)
  {
    auto const freq = feature_frequencies(category.members, corpus);
    double const top = *std::max_element(freq.begin(), freq.end());
    if (top <= 0.0)
    {
      return std::nullopt;
    }
    try
    {
      return polymorphous_rule(category, field, corpus, top);
    }
    catch (PreconditionError const &)
    {
      return std::nullopt;
    }
  }
  catch (PreconditionError const &)
  {
    return std::nullopt;
  }
}

Misclassification misclassification(PolymorphousRule const &rule, std::size_t category, ConceptField const &field,
                                    Corpus const &corpus)
{
  if (category >= field.categories.size())
  {
    throw PreconditionError("category index out of range");
  }
  Misclassification out;
  for (auto id : field.categories[category].members)
  {
    out.misses += rule.satisfied_by(corpus.object(id)) ? 0 : 1;
  }
  for (auto id : clustered_outsiders(category, field))
  {
    out.false_alarms += rule.satisfied_by(corpus.object(id)) ? 1 : 0;
  }
  return out;
}

std::string rule_sentence(RuleRecord const &rule)
{
  return "at least " + std::to_string(rule.m) + " out of {" + join(rule.features) + "}";
}

Report build_report(ConceptField const &field, Corpus const &corpus, FieldValidity const &validity,
                    Parameters const &params, std::span<Action const> trace)
{
  Report report;
  report.parameters      = params;
  report.distinctiveness = validity.distinctiveness;
  report.unclustered     = object_labels(field.unclustered, corpus);

  for (auto const &c : field.categories)
  {
    CategoryRecord rec;
    rec.members       = object_labels(c.members, corpus);
    rec.best_member   = corpus.object(c.best_member).label;
    rec.cohesion_bits = c.cohesion;
    if (c.rule)
    {
      RuleRecord r;
      r.m                = c.rule->m;
      r.features         = labels_of(c.rule->features, corpus);
      r.necessary        = labels_of(c.rule->necessary, corpus);
      r.sufficient       = labels_of(c.rule->sufficient, corpus);
      r.false_alarm_rate = c.rule->false_alarm_rate;
      rec.rule           = std::move(r);
    }
    report.categories.push_back(std::move(rec));
  }

  for (auto const &a : trace)
  {
    TraceRecord t;
    t.category      = a.category;
    t.cohesion_bits = a.cohesion;
    switch (a.kind)
    {
    case Action::Kind::protoseed:
      t.action = "protoseed";
      break;
    case Action::Kind::add_object:
      t.action = "add";
      break;
    case Action::Kind::merge:
      t.action = "merge";
      t.merged = a.merged;
      break;
    }
    t.objects = object_labels(a.objects, corpus);
    report.trace.push_back(std::move(t));
  }
  return report;
}

std::string render_text(Report const &report, bool with_trace)
{
  std::ostringstream out;
  auto const        &p = report.parameters;
  out << "parameters: cohesion " << format_bits(p.cohesion_threshold) << ", distinctiveness "
      << format_bits(p.distinctiveness_threshold) << ", alpha " << format_bits(p.rule_alpha) << '\n';

  if (report.categories.empty())
  {
    out << "no categories formed; " << report.unclustered.size() << " objects unclustered\n";
  }
  else
  {
    out << "categories: " << report.categories.size() << '\n';
  }

  for (std::size_t c = 0; c < report.categories.size(); ++c)
  {
    auto const &cat = report.categories[c];
    out << "category " << c + 1 << " (" << cat.members.size() << " members): " << join(cat.members) << '\n';
    out << "  best member: " << cat.best_member << '\n';
    if (cat.rule)
    {
      out << "  rule: " << rule_sentence(*cat.rule) << '\n';
      if (!cat.rule->necessary.empty())
      {
        out << "  necessary features: " << join(cat.rule->necessary) << '\n';
      }
      if (!cat.rule->sufficient.empty())
      {
        out << "  sufficient features: " << join(cat.rule->sufficient) << '\n';
      }
      out << "  false alarm rate: " << format_bits(cat.rule->false_alarm_rate) << '\n';
    }
    else
    {
      out << "  rule: none (a member possesses no features)\n";
    }
    out << "  cohesion: " << format_bits(cat.cohesion_bits) << " bits\n";
    for (std::size_t o = 0; o < report.categories.size(); ++o)
    {
      if (o == c)
      {
        continue;
      }
      double const margin = cat.cohesion_bits - report.distinctiveness.at(c).at(o);
      out << "  margin vs category " << o + 1 << ": " << format_bits(margin) << " bits\n";
    }
  }

  out << "unclustered (" << report.unclustered.size()
      << "): " << (report.unclustered.empty() ? std::string("none") : join(report.unclustered)) << '\n';

  if (with_trace)
  {
    out << "trace:\n";
    for (std::size_t i = 0; i < report.trace.size(); ++i)
    {
      auto const &t = report.trace[i];
      out << "  " << i + 1 << ". ";
      if (t.action == "protoseed")
      {
        out << "protoseed {" << join(t.objects) << "} as category " << t.category + 1;
      }
      else if (t.action == "add")
      {
        out << "add " << join(t.objects) << " to category " << t.category + 1;
      }
      else
      {
        out << "merge category " << t.merged.value_or(0) + 1 << " into category " << t.category + 1;
      }
      out << " (cohesion " << format_bits(t.cohesion_bits) << " bits)\n";
    }
  }
  return out.str();
}

RenderedReport render_report(ConceptField const &field, Corpus const &corpus, FieldValidity const &validity,
                             Parameters const &params, std::span<Action const> trace, bool with_trace)
{
  RenderedReport out;
  out.record = build_report(field, corpus, validity, params, trace);
  out.text   = render_text(out.record, with_trace);
  return out;
}

}  // namespace polyclust
