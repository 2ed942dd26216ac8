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

#include "polyclust/retrieval.hpp"

#include "polyclust/information.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace polyclust {
namespace {

std::string trim(std::string_view s)
{
  auto const b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos)
  {
    return {};
  }
  auto const e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

PolymorphousQuery resolve_query(Corpus const &corpus, std::size_t m, std::vector<std::string> labels)
{
  PolymorphousQuery q;
  std::set<FeatureIndex> seen;
  for (auto &label : labels)
  {
    auto const f = corpus.space().find(label);
    if (!f)
    {
      throw ParameterError("unknown feature label '" + label + "'");
    }
    if (!seen.insert(*f).second)
    {
      throw ParameterError("feature label '" + label + "' repeated in query");
    }
    q.features.push_back(*f);
  }
  if (m < 1 || m > labels.size())
  {
    throw ParameterError("rule needs 1 <= m <= n, got m=" + std::to_string(m) +
                         " n=" + std::to_string(labels.size()));
  }
  q.m      = m;
  q.labels = std::move(labels);
  return q;
}

std::pair<std::size_t, std::vector<std::string>> parse_rule_text(std::string const &text)
{
  auto const colon = text.find(':');
  if (colon == std::string::npos)
  {
    throw ParameterError("rule must look like m:label,label,... (got '" + text + "')");
  }
  auto const  head = trim(std::string_view(text).substr(0, colon));
  std::size_t m    = 0;
  auto const [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), m);
  if (ec != std::errc() || ptr != head.data() + head.size() || head.empty())
  {
    throw ParameterError("rule count '" + head + "' is not a non-negative integer");
  }

  std::vector<std::string> labels;
  std::string_view         rest = std::string_view(text).substr(colon + 1);
  while (true)
  {
    auto const comma = rest.find(',');
    auto const item  = trim(rest.substr(0, comma));
    if (item.empty())
    {
      throw ParameterError("empty label in rule '" + text + "'");
    }
    labels.push_back(item);
    if (comma == std::string_view::npos)
    {
      break;
    }
    rest = rest.substr(comma + 1);
  }
  return {m, std::move(labels)};
}

std::size_t query_hits(PolymorphousQuery const &query, ObjectInstance const &object)
{
  std::size_t hits = 0;
  for (auto f : query.features)
  {
    if (f >= object.bits.size())
    {
      throw PreconditionError("query feature out of range for object '" + object.label + "'");
    }
    hits += object.bits[f] != 0 ? 1 : 0;
  }
  return hits;
}

bool match(PolymorphousQuery const &query, ObjectInstance const &object)
{
  return query_hits(query, object) >= query.m;
}

std::vector<ObjectId> retrieve(Corpus const &corpus, PolymorphousQuery const &query)
{
  std::vector<std::pair<std::size_t, ObjectId>> scored;
  for (auto const &o : corpus.objects())
  {
    auto const hits = query_hits(query, o);
    if (hits >= query.m)
    {
      scored.emplace_back(hits, o.id);
    }
  }
  std::stable_sort(scored.begin(), scored.end(), [](auto const &a, auto const &b) { return a.first > b.first; });
  std::vector<ObjectId> ids;
  ids.reserve(scored.size());
  for (auto const &[hits, id] : scored)
  {
    ids.push_back(id);
  }
  return ids;
}

std::vector<SeedHit> retrieve_by_seed(Corpus const &corpus, ObjectId seed, std::size_t k)
{
  if (seed >= corpus.size())
  {
    throw ParameterError("seed id " + std::to_string(seed) + " not in corpus");
  }
  if (k < 1)
  {
    throw ParameterError("k must be at least 1");
  }
  auto const          &s = corpus.object(seed);
  std::vector<SeedHit> hits;
  for (auto const &o : corpus.objects())
  {
    if (o.id != seed)
    {
      hits.push_back({o.id, affinity(s, o)});
    }
  }
  std::stable_sort(hits.begin(), hits.end(), [](auto const &a, auto const &b) { return a.affinity > b.affinity; });
  if (hits.size() > k)
  {
    hits.resize(k);
  }
  return hits;
}

}  // namespace polyclust
