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

#include "polyclust/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace polyclust::io {
namespace {

std::string lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> title_words(std::string const &title)
{
  std::vector<std::string> words;
  std::string              word;
  for (unsigned char c : title)
  {
    if (std::isalnum(c))
    {
      word += static_cast<char>(std::tolower(c));
    }
    else if (!word.empty())
    {
      words.push_back(std::move(word));
      word.clear();
    }
  }
  if (!word.empty())
  {
    words.push_back(std::move(word));
  }
  return words;
}

// Keeps features held by some but not all objects.
Encoded finish(std::vector<Feature> features, std::vector<ObjectInstance> objects, EncodeOptions const &options)
{
  Encoded out;
  if (options.drop_uninformative && !objects.empty())
  {
    std::vector<Feature> kept_features;
    std::vector<std::size_t> kept;
    for (std::size_t f = 0; f < features.size(); ++f)
    {
      std::size_t holders = 0;
      for (auto const &o : objects)
      {
        holders += o.bits[f];
      }
      auto const name = features[f].value.empty() ? features[f].attribute
                                                  : features[f].attribute + "=" + features[f].value;
      if (holders == objects.size())
      {
        out.notices.push_back("dropped feature '" + name + "': present in all objects");
      }
      else if (holders == 0)
      {
        out.notices.push_back("dropped feature '" + name + "': present in no object");
      }
      else
      {
        kept.push_back(f);
        kept_features.push_back(std::move(features[f]));
      }
    }
    for (auto &o : objects)
    {
      std::vector<std::uint8_t> bits;
      bits.reserve(kept.size());
      for (auto f : kept)
      {
        bits.push_back(o.bits[f]);
      }
      o.bits = std::move(bits);
    }
    features = std::move(kept_features);
  }
  if (features.empty())
  {
    throw InputError("no informative features after encoding");
  }
  out.corpus = Corpus(FeatureSpace(std::move(features)), std::move(objects));
  return out;
}

}  // namespace

Encoded one_hot_encode(Table const &table, EncodeOptions const &options)
{
  if (table.rows.empty())
  {
    throw InputError("empty corpus: table has no rows");
  }
  std::vector<Feature>                                   features;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (auto const &row : table.rows)
  {
    for (std::size_t a = 0; a < table.attributes.size(); ++a)
    {
      if (row[a].empty())
      {
        continue;
      }
      auto const key = std::pair{table.attributes[a], row[a]};
      if (index.emplace(key, features.size()).second)
      {
        features.push_back({key.first, key.second});
      }
    }
  }

  std::vector<ObjectInstance> objects;
  for (std::size_t r = 0; r < table.rows.size(); ++r)
  {
    ObjectInstance o;
    o.label = table.labels.at(r);
    o.bits.assign(features.size(), 0);
    for (std::size_t a = 0; a < table.attributes.size(); ++a)
    {
      auto const &value = table.rows[r][a];
      if (!value.empty())
      {
        o.bits[index.at({table.attributes[a], value})] = 1;
      }
    }
    objects.push_back(std::move(o));
  }
  return finish(std::move(features), std::move(objects), options);
}

Encoded one_hot_encode(std::vector<ReferRecord> const &records, EncodeOptions const &options)
{
  if (records.empty())
  {
    throw InputError("empty corpus: no records");
  }
  std::set<std::string> keyword_set;
  for (auto const &r : records)
  {
    for (auto const &k : r.keywords)
    {
      keyword_set.insert(lower(k));
    }
  }

  std::vector<Feature>                          features;
  std::map<std::string, std::size_t>            index;
  std::vector<std::vector<std::size_t>>         held(records.size());
  auto add = [&](std::size_t r, std::string const &name) {
    auto [it, inserted] = index.emplace(name, features.size());
    if (inserted)
    {
      features.push_back({name, ""});
    }
    held[r].push_back(it->second);
  };

  for (std::size_t r = 0; r < records.size(); ++r)
  {
    for (auto const &k : records[r].keywords)
    {
      add(r, k);
    }
    if (options.with_title_tokens)
    {
      for (auto const &w : title_words(records[r].title))
      {
        if (keyword_set.count(w) == 0)
        {
          add(r, w);
        }
      }
    }
  }

  std::vector<ObjectInstance> objects;
  for (std::size_t r = 0; r < records.size(); ++r)
  {
    ObjectInstance o;
    o.label = records[r].label;
    o.bits.assign(features.size(), 0);
    for (auto f : held[r])
    {
      o.bits[f] = 1;
    }
    objects.push_back(std::move(o));
  }
  return finish(std::move(features), std::move(objects), options);
}

Table decode_table(Corpus const &corpus, std::vector<std::string> const &attributes)
{
  Table table;
  table.attributes = attributes;
  std::map<std::string, std::size_t> column;
  for (std::size_t a = 0; a < attributes.size(); ++a)
  {
    column.emplace(attributes[a], a);
  }
  for (auto const &f : corpus.space().features())
  {
    if (column.count(f.attribute) == 0 || f.value.empty())
    {
      throw PreconditionError("feature '" + f.attribute + "' is not part of a one-hot block of the table");
    }
  }
  for (auto const &o : corpus.objects())
  {
    std::vector<std::string> row(attributes.size());
    for (FeatureIndex f = 0; f < corpus.feature_count(); ++f)
    {
      if (o.has(f))
      {
        auto const &feat        = corpus.space()[f];
        row[column[feat.attribute]] = feat.value;
      }
    }
    table.labels.push_back(o.label);
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace polyclust::io
