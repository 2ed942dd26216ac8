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

#include "polyclust/polyclust.h"

#include "polyclust/description.hpp"
#include "polyclust/engine.hpp"
#include "polyclust/information.hpp"
#include "polyclust/io.hpp"
#include "polyclust/retrieval.hpp"

#include <memory>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

struct pc_corpus
{
  polyclust::Corpus        corpus;
  std::vector<std::string> notices;
  std::string              info;
};

struct pc_result
{
  polyclust::RunResult run;
  std::string          json;
};

struct pc_hits
{
  std::vector<std::size_t> objects;
  std::vector<double>      scores;
};

namespace {

thread_local std::string last_error;

template <typename Fn>
pc_status guarded(Fn &&fn)
{
  try
  {
    last_error.clear();
    fn();
    return PC_OK;
  }
  catch (polyclust::Error const &e)
  {
    last_error = e.what();
    switch (e.kind())
    {
    case polyclust::ErrorKind::input:
      return PC_ERROR_INPUT;
    case polyclust::ErrorKind::parameter:
      return PC_ERROR_PARAMETER;
    case polyclust::ErrorKind::precondition:
      return PC_ERROR_INTERNAL;
    }
    return PC_ERROR_INTERNAL;
  }
  catch (std::exception const &e)
  {
    last_error = e.what();
    return PC_ERROR_INTERNAL;
  }
  catch (...)
  {
    last_error = "unknown error";
    return PC_ERROR_INTERNAL;
  }
}

void require(bool condition, char const *what)
{
  if (!condition)
  {
    throw polyclust::ParameterError(what);
  }
}

polyclust::io::InputFormat to_format(pc_format format)
{
  switch (format)
  {
  case PC_FORMAT_CSV:
    return polyclust::io::InputFormat::csv;
  case PC_FORMAT_REFER:
    return polyclust::io::InputFormat::refer;
  case PC_FORMAT_MATRIX:
    return polyclust::io::InputFormat::matrix;
  }
  throw polyclust::ParameterError("unknown input format");
}

std::string info_text(polyclust::Corpus const &corpus)
{
  std::ostringstream out;
  out << "objects: " << corpus.size() << ", features: " << corpus.feature_count() << '\n';
  out << "entropy (bits):\n";
  for (auto const &o : corpus.objects())
  {
    std::size_t const ones = o.count();
    std::size_t const counts[2]{ones, o.bits.size() - ones};
    out << "  " << o.id << ' ' << o.label << ": " << polyclust::format_bits(polyclust::entropy(counts)) << '\n';
  }
  polyclust::AffinityMatrix const aff(corpus);
  out << "affinity (bits):\n";
  for (std::size_t i = 0; i < corpus.size(); ++i)
  {
    out << "  " << i << ':';
    for (std::size_t j = 0; j < corpus.size(); ++j)
    {
      out << ' ' << polyclust::format_bits(aff(i, j));
    }
    out << '\n';
  }
  return out.str();
}

pc_corpus *make_corpus(std::string_view text, pc_format format, unsigned flags)
{
  polyclust::io::EncodeOptions options;
  options.with_title_tokens  = (flags & PC_LOAD_TITLE_TOKENS) != 0;
  options.drop_uninformative = (flags & PC_LOAD_KEEP_UNINFORMATIVE) == 0;
  auto encoded               = polyclust::io::load_corpus(text, to_format(format), options);
  auto warnings              = polyclust::validate_corpus(encoded.corpus).warnings;

  auto handle = std::make_unique<pc_corpus>(std::move(encoded.corpus), std::move(encoded.notices), std::string{});
  handle->notices.insert(handle->notices.end(), warnings.begin(), warnings.end());
  handle->info = info_text(handle->corpus);
  return handle.release();
}

}  // namespace

extern "C" {

pc_params pc_params_default(void)
{
  polyclust::Parameters const p;
  return {p.cohesion_threshold, p.distinctiveness_threshold, p.rule_alpha};
}

const char *pc_last_error(void)
{
  return last_error.c_str();
}

const char *pc_version(void)
{
  return "0.1.0";
}

pc_status pc_corpus_from_file(const char *path, pc_format format, unsigned flags, pc_corpus **out)
{
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = make_corpus(polyclust::io::read_file(path), format, flags);
  });
}

pc_status pc_corpus_from_text(const char *text, size_t length, pc_format format, unsigned flags, pc_corpus **out)
{
  return guarded([&] {
    require((text != nullptr || length == 0) && out != nullptr, "null argument");
    *out = make_corpus(std::string_view(text == nullptr ? "" : text, length), format, flags);
  });
}

void pc_corpus_free(pc_corpus *corpus)
{
  delete corpus;
}

size_t pc_corpus_object_count(const pc_corpus *corpus)
{
  return corpus == nullptr ? 0 : corpus->corpus.size();
}

size_t pc_corpus_feature_count(const pc_corpus *corpus)
{
  return corpus == nullptr ? 0 : corpus->corpus.feature_count();
}

const char *pc_corpus_object_label(const pc_corpus *corpus, size_t object)
{
  if (corpus == nullptr || object >= corpus->corpus.size())
  {
    return nullptr;
  }
  return corpus->corpus.object(object).label.c_str();
}

const char *pc_corpus_feature_label(const pc_corpus *corpus, size_t feature)
{
  if (corpus == nullptr || feature >= corpus->corpus.feature_count())
  {
    return nullptr;
  }
  return corpus->corpus.space().label(feature).c_str();
}

int pc_corpus_has_feature(const pc_corpus *corpus, size_t object, size_t feature)
{
  if (corpus == nullptr || object >= corpus->corpus.size() || feature >= corpus->corpus.feature_count())
  {
    return 0;
  }
  return corpus->corpus.object(object).has(feature) ? 1 : 0;
}

size_t pc_corpus_notice_count(const pc_corpus *corpus)
{
  return corpus == nullptr ? 0 : corpus->notices.size();
}

const char *pc_corpus_notice(const pc_corpus *corpus, size_t index)
{
  if (corpus == nullptr || index >= corpus->notices.size())
  {
    return nullptr;
  }
  return corpus->notices[index].c_str();
}

const char *pc_corpus_info(const pc_corpus *corpus)
{
  if (corpus == nullptr)
  {
    return nullptr;
  }
  return corpus->info.c_str();
}

pc_status pc_affinity(const pc_corpus *corpus, size_t a, size_t b, double *out)
{
  return guarded([&] {
    require(corpus != nullptr && out != nullptr, "null argument");
    require(a < corpus->corpus.size() && b < corpus->corpus.size(), "object id out of range");
    *out = polyclust::affinity(corpus->corpus.object(a), corpus->corpus.object(b));
  });
}

pc_status pc_cluster(const pc_corpus *corpus, const pc_params *params, pc_result **out)
{
  return guarded([&] {
    require(corpus != nullptr && out != nullptr, "null argument");
    auto const p = params != nullptr ? *params : pc_params_default();
    polyclust::Parameters const parameters{p.cohesion, p.distinctiveness, p.alpha};
    auto run    = polyclust::run(corpus->corpus, parameters);
    auto json   = polyclust::io::emit_json(run.report);
    *out        = new pc_result{std::move(run), std::move(json)};
  });
}

void pc_result_free(pc_result *result)
{
  delete result;
}

const char *pc_result_text(const pc_result *result, int with_trace)
{
  if (result == nullptr)
  {
    return nullptr;
  }
  return with_trace != 0 ? result->run.text_trace.c_str() : result->run.text.c_str();
}

const char *pc_result_json(const pc_result *result)
{
  return result == nullptr ? nullptr : result->json.c_str();
}

size_t pc_result_category_count(const pc_result *result)
{
  return result == nullptr ? 0 : result->run.field.categories.size();
}

size_t pc_result_category_size(const pc_result *result, size_t category)
{
  if (result == nullptr || category >= result->run.field.categories.size())
  {
    return 0;
  }
  return result->run.field.categories[category].members.size();
}

size_t pc_result_category_member(const pc_result *result, size_t category, size_t index)
{
  if (result == nullptr || category >= result->run.field.categories.size())
  {
    return static_cast<size_t>(-1);
  }
  auto const &members = result->run.field.categories[category].members;
  return index < members.size() ? members[index] : static_cast<size_t>(-1);
}

size_t pc_result_category_best_member(const pc_result *result, size_t category)
{
  if (result == nullptr || category >= result->run.field.categories.size())
  {
    return static_cast<size_t>(-1);
  }
  return result->run.field.categories[category].best_member;
}

double pc_result_category_cohesion(const pc_result *result, size_t category)
{
  if (result == nullptr || category >= result->run.field.categories.size())
  {
    return 0.0;
  }
  return result->run.field.categories[category].cohesion;
}

size_t pc_result_rule_m(const pc_result *result, size_t category)
{
  if (result == nullptr || category >= result->run.field.categories.size())
  {
    return 0;
  }
  auto const &rule = result->run.field.categories[category].rule;
  return rule ? rule->m : 0;
}

size_t pc_result_rule_n(const pc_result *result, size_t category)
{
  if (result == nullptr || category >= result->run.field.categories.size())
  {
    return 0;
  }
  auto const &rule = result->run.field.categories[category].rule;
  return rule ? rule->n() : 0;
}

size_t pc_result_unclustered_count(const pc_result *result)
{
  return result == nullptr ? 0 : result->run.field.unclustered.size();
}

size_t pc_result_unclustered(const pc_result *result, size_t index)
{
  if (result == nullptr || index >= result->run.field.unclustered.size())
  {
    return static_cast<size_t>(-1);
  }
  return result->run.field.unclustered[index];
}

size_t pc_result_action_count(const pc_result *result)
{
  return result == nullptr ? 0 : result->run.trace.size();
}

pc_status pc_query_rule(const pc_corpus *corpus, size_t m, const char *const *labels, size_t n, pc_hits **out)
{
  return guarded([&] {
    require(corpus != nullptr && out != nullptr && (labels != nullptr || n == 0), "null argument");
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i)
    {
      require(labels[i] != nullptr, "null label");
      names.emplace_back(labels[i]);
    }
    auto const query = polyclust::resolve_query(corpus->corpus, m, std::move(names));
    auto       hits  = std::make_unique<pc_hits>();
    for (auto id : polyclust::retrieve(corpus->corpus, query))
    {
      hits->objects.push_back(id);
      hits->scores.push_back(static_cast<double>(polyclust::query_hits(query, corpus->corpus.object(id))));
    }
    *out = hits.release();
  });
}

pc_status pc_query_rule_text(const pc_corpus *corpus, const char *rule, pc_hits **out)
{
  pc_status status = PC_OK;
  std::vector<std::string> names;
  std::size_t              m = 0;
  status                     = guarded([&] {
    require(rule != nullptr, "null argument");
    std::tie(m, names) = polyclust::parse_rule_text(rule);
  });
  if (status != PC_OK)
  {
    return status;
  }
  std::vector<char const *> ptrs;
  for (auto const &n : names)
  {
    ptrs.push_back(n.c_str());
  }
  return pc_query_rule(corpus, m, ptrs.data(), ptrs.size(), out);
}

pc_status pc_query_seed(const pc_corpus *corpus, const char *seed_label, size_t k, pc_hits **out)
{
  return guarded([&] {
    require(corpus != nullptr && seed_label != nullptr && out != nullptr, "null argument");
    auto const seed = corpus->corpus.find(seed_label);
    if (!seed)
    {
      throw polyclust::ParameterError(std::string("unknown object label '") + seed_label + "'");
    }
    auto hits = std::make_unique<pc_hits>();
    for (auto const &h : polyclust::retrieve_by_seed(corpus->corpus, *seed, k))
    {
      hits->objects.push_back(h.id);
      hits->scores.push_back(h.affinity);
    }
    *out = hits.release();
  });
}

size_t pc_hits_count(const pc_hits *hits)
{
  return hits == nullptr ? 0 : hits->objects.size();
}

size_t pc_hits_object(const pc_hits *hits, size_t index)
{
  if (hits == nullptr || index >= hits->objects.size())
  {
    return static_cast<size_t>(-1);
  }
  return hits->objects[index];
}

double pc_hits_score(const pc_hits *hits, size_t index)
{
  if (hits == nullptr || index >= hits->scores.size())
  {
    return 0.0;
  }
  return hits->scores[index];
}

void pc_hits_free(pc_hits *hits)
{
  delete hits;
}

}  // extern "C"
