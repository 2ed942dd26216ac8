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

// Shared helpers for the unit and acceptance suites.

#include "polyclust/io.hpp"
#include "polyclust/model.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#ifndef POLYCLUST_DATA_DIR
#  error "POLYCLUST_DATA_DIR must be defined"
#endif

namespace polyclust::testing {

inline std::string data_path(std::string_view name)
{
  return std::string(POLYCLUST_DATA_DIR) + "/" + std::string(name);
}

inline ObjectInstance object_from_bits(std::string_view bits, std::string label = {})
{
  ObjectInstance o;
  o.label = label.empty() ? std::string(bits) : std::move(label);
  for (char c : bits)
  {
    o.bits.push_back(c == '1' ? 1 : 0);
  }
  return o;
}

/// Corpus of plain binary features f0..f{F-1}; labels are "o<id>".
inline Corpus corpus_from_bits(std::vector<std::string> const &rows)
{
  std::vector<Feature> features;
  for (std::size_t f = 0; f < (rows.empty() ? 0 : rows.front().size()); ++f)
  {
    features.push_back({"f" + std::to_string(f), ""});
  }
  std::vector<ObjectInstance> objects;
  for (std::size_t i = 0; i < rows.size(); ++i)
  {
    objects.push_back(object_from_bits(rows[i], "o" + std::to_string(i)));
  }
  return Corpus(FeatureSpace(std::move(features)), std::move(objects));
}

inline std::vector<ObjectInstance> instances(Corpus const &corpus, std::vector<ObjectId> const &ids)
{
  std::vector<ObjectInstance> out;
  for (auto id : ids)
  {
    out.push_back(corpus.object(id));
  }
  return out;
}

inline Corpus shapes_corpus()
{
  return io::load_corpus(io::read_file(data_path("shapes.csv")), io::InputFormat::csv).corpus;
}

inline Corpus abstracts_corpus(bool title_tokens = false)
{
  io::EncodeOptions options;
  options.with_title_tokens = title_tokens;
  return io::load_corpus(io::read_file(data_path("abstracts.ref")), io::InputFormat::refer, options).corpus;
}

/// Id of the abstract whose label ends in "abstract <n>".
inline ObjectId abstract_id(Corpus const &corpus, int n)
{
  auto const suffix = "abstract " + std::to_string(n);
  for (auto const &o : corpus.objects())
  {
    if (o.label.size() >= suffix.size() && o.label.compare(o.label.size() - suffix.size(), suffix.size(), suffix) == 0)
    {
      return o.id;
    }
  }
  throw std::runtime_error("no " + suffix);
}

/// Members of the "at least 2 of {circular, symmetric, black}" category.
inline std::vector<ObjectId> shapes_category_a(Corpus const &corpus)
{
  auto const circ = *corpus.space().find("circular");
  auto const sym  = *corpus.space().find("symmetric");
  auto const blk  = *corpus.space().find("black");
  std::vector<ObjectId> ids;
  for (auto const &o : corpus.objects())
  {
    if (o.bits[circ] + o.bits[sym] + o.bits[blk] >= 2)
    {
      ids.push_back(o.id);
    }
  }
  return ids;
}

inline std::vector<ObjectId> complement(std::vector<ObjectId> const &ids, std::size_t n)
{
  std::vector<ObjectId> out;
  for (ObjectId id = 0; id < n; ++id)
  {
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
    {
      out.push_back(id);
    }
  }
  return out;
}

/// Random binary corpus; every object holds at least one feature.
inline Corpus random_corpus(std::mt19937_64 &rng, std::size_t max_objects, std::size_t max_features)
{
  std::uniform_int_distribution<std::size_t> n_dist(1, max_objects);
  std::uniform_int_distribution<std::size_t> f_dist(2, max_features);
  std::uniform_real_distribution<double>     density(0.15, 0.6);
  auto const                                 n = n_dist(rng);
  auto const                                 f = f_dist(rng);
  double const                               p = density(rng);
  std::bernoulli_distribution                bit(p);
  std::uniform_int_distribution<std::size_t> pick(0, f - 1);

  // A few prototypes with noisy copies give the engine real structure to find.
  std::vector<std::vector<std::uint8_t>> prototypes(1 + n / 4);
  for (auto &proto : prototypes)
  {
    for (std::size_t j = 0; j < f; ++j)
    {
      proto.push_back(bit(rng) ? 1 : 0);
    }
  }
  std::uniform_int_distribution<std::size_t> which(0, prototypes.size() - 1);
  std::bernoulli_distribution                flip(0.15);

  std::vector<std::string> rows;
  for (std::size_t i = 0; i < n; ++i)
  {
    auto const &proto = prototypes[which(rng)];
    std::string row;
    for (std::size_t j = 0; j < f; ++j)
    {
      bool v = proto[j] != 0;
      if (flip(rng))
      {
        v = !v;
      }
      row += v ? '1' : '0';
    }
    if (row.find('1') == std::string::npos)
    {
      row[pick(rng)] = '1';
    }
    rows.push_back(row);
  }
  return corpus_from_bits(rows);
}

}  // namespace polyclust::testing
