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

// polyclust command line front end. Uses only the C interface.

#include "polyclust/polyclust.h"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace {

constexpr int kExitInput     = 1;
constexpr int kExitParameter = 2;

struct CorpusDeleter
{
  void operator()(pc_corpus *c) const
  {
    pc_corpus_free(c);
  }
};
struct ResultDeleter
{
  void operator()(pc_result *r) const
  {
    pc_result_free(r);
  }
};
struct HitsDeleter
{
  void operator()(pc_hits *h) const
  {
    pc_hits_free(h);
  }
};

using CorpusPtr = std::unique_ptr<pc_corpus, CorpusDeleter>;
using ResultPtr = std::unique_ptr<pc_result, ResultDeleter>;
using HitsPtr   = std::unique_ptr<pc_hits, HitsDeleter>;

int exit_code(pc_status status)
{
  return status == PC_ERROR_PARAMETER ? kExitParameter : kExitInput;
}

int fail(pc_status status)
{
  std::cerr << "error: " << pc_last_error() << '\n';
  return exit_code(status);
}

struct InputOptions
{
  std::string path;
  std::string format;
  bool        title_tokens{false};
};

void add_input_options(CLI::App *cmd, InputOptions &opts)
{
  cmd->add_option("--input", opts.path, "Input file")->required();
  cmd->add_option("--format", opts.format, "Input format (default: from file extension)")
    ->check(CLI::IsMember({"csv", "refer", "matrix"}));
  cmd->add_flag("--with-title-tokens", opts.title_tokens, "refer: add lower-cased title words as features");
}

std::optional<pc_format> resolve_format(InputOptions const &opts)
{
  static std::map<std::string, pc_format> const names{
    {"csv", PC_FORMAT_CSV}, {"refer", PC_FORMAT_REFER}, {"matrix", PC_FORMAT_MATRIX}};
  if (!opts.format.empty())
  {
    return names.at(opts.format);
  }
  auto const ext = std::filesystem::path(opts.path).extension().string();
  if (ext == ".csv")
  {
    return PC_FORMAT_CSV;
  }
  if (ext == ".ref" || ext == ".refer")
  {
    return PC_FORMAT_REFER;
  }
  if (ext == ".matrix" || ext == ".mat")
  {
    return PC_FORMAT_MATRIX;
  }
  return std::nullopt;
}

// Loads the corpus or returns the exit code to use.
std::variant<CorpusPtr, int> load(InputOptions const &opts)
{
  auto const format = resolve_format(opts);
  if (!format)
  {
    std::cerr << "error: cannot infer input format of '" << opts.path << "'; pass --format\n";
    return kExitParameter;
  }
  pc_corpus *raw    = nullptr;
  auto const status = pc_corpus_from_file(opts.path.c_str(), *format, opts.title_tokens ? PC_LOAD_TITLE_TOKENS : 0u,
                                          &raw);
  if (status != PC_OK)
  {
    return fail(status);
  }
  CorpusPtr corpus(raw);
  for (size_t i = 0; i < pc_corpus_notice_count(corpus.get()); ++i)
  {
    std::cerr << "note: " << pc_corpus_notice(corpus.get(), i) << '\n';
  }
  return corpus;
}

}  // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Polymorphous conceptual clustering and m-of-n retrieval"};
  app.require_subcommand(1);

  auto const defaults = pc_params_default();

  // cluster
  InputOptions cluster_in;
  pc_params    params = defaults;
  std::string  output = "text";
  bool         trace  = false;
  auto        *cluster = app.add_subcommand("cluster", "Form polymorphous categories");
  add_input_options(cluster, cluster_in);
  cluster->add_option("--cohesion", params.cohesion, "Cohesion threshold in bits")
    ->check(CLI::Range(0.0, 1.0))
    ->capture_default_str();
  cluster->add_option("--distinctiveness", params.distinctiveness, "Distinctiveness margin in bits")
    ->check(CLI::Range(0.0, 1.0))
    ->capture_default_str();
  cluster->add_option("--alpha", params.alpha, "Rule feature frequency cutoff")
    ->check(CLI::Validator(
      [](std::string &v) {
        double const a = std::stod(v);
        return a > 0.0 && a <= 1.0 ? std::string() : std::string("alpha must lie in (0, 1]");
      },
      "(0,1]"))
    ->capture_default_str();
  cluster->add_option("--output", output, "Report format")->check(CLI::IsMember({"text", "json"}));
  cluster->add_flag("--trace", trace, "Include the accepted-action trace in the text report");

  // query
  InputOptions query_in;
  std::string  rule;
  std::string  seed;
  std::size_t  top   = 5;
  auto        *query = app.add_subcommand("query", "Retrieve objects by m-of-n rule or by seed object");
  add_input_options(query, query_in);
  auto *rule_opt = query->add_option("--rule", rule, "m:label,label,...");
  auto *seed_opt = query->add_option("--seed", seed, "Seed object label");
  query->add_option("--top", top, "Number of seed neighbours")->check(CLI::PositiveNumber)->capture_default_str();
  rule_opt->excludes(seed_opt);

  // info
  InputOptions info_in;
  auto        *info = app.add_subcommand("info", "Dump object entropies and the affinity table");
  add_input_options(info, info_in);

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::ParseError const &e)
  {
    app.exit(e);
    return kExitParameter;
  }

  if (*cluster)
  {
    auto loaded = load(cluster_in);
    if (auto *code = std::get_if<int>(&loaded))
    {
      return *code;
    }
    auto      &corpus = std::get<CorpusPtr>(loaded);
    pc_result *raw    = nullptr;
    if (auto const status = pc_cluster(corpus.get(), &params, &raw); status != PC_OK)
    {
      return fail(status);
    }
    ResultPtr result(raw);
    std::cout << (output == "json" ? pc_result_json(result.get()) : pc_result_text(result.get(), trace ? 1 : 0));
    return 0;
  }

  if (*query)
  {
    if (rule_opt->count() == 0 && seed_opt->count() == 0)
    {
      std::cerr << "error: query needs --rule or --seed\n" << query->help();
      return kExitParameter;
    }
    auto loaded = load(query_in);
    if (auto *code = std::get_if<int>(&loaded))
    {
      return *code;
    }
    auto    &corpus = std::get<CorpusPtr>(loaded);
    pc_hits *raw    = nullptr;
    auto const status = rule_opt->count() != 0 ? pc_query_rule_text(corpus.get(), rule.c_str(), &raw)
                                               : pc_query_seed(corpus.get(), seed.c_str(), top, &raw);
    if (status != PC_OK)
    {
      return fail(status);
    }
    HitsPtr hits(raw);
    for (size_t i = 0; i < pc_hits_count(hits.get()); ++i)
    {
      char score[32];
      std::snprintf(score, sizeof score, "%.9g", pc_hits_score(hits.get(), i));
      std::cout << pc_corpus_object_label(corpus.get(), pc_hits_object(hits.get(), i)) << '\t' << score << '\n';
    }
    return 0;
  }

  auto loaded = load(info_in);
  if (auto *code = std::get_if<int>(&loaded))
  {
    return *code;
  }
  std::cout << pc_corpus_info(std::get<CorpusPtr>(loaded).get());
  return 0;
}
