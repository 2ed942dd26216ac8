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
#include "polyclust/io.hpp"

#include <json.hpp>

#include <string>

namespace polyclust::io {
namespace {

using json = nlohmann::ordered_json;

// Rounds to 9 significant digits so the shortest round-trip form printed by
// the serializer never carries more.
double rounded(double v)
{
  return std::stod(format_bits(v));
}

template <typename T>
T get(json const &j, char const *key)
{
  if (!j.contains(key))
  {
    throw InputError(std::string("report JSON: missing key '") + key + "'");
  }
  return j.at(key).get<T>();
}

}  // namespace

std::string emit_json(Report const &report)
{
  json root;
  root["parameters"] = {
    {"cohesion", rounded(report.parameters.cohesion_threshold)},
    {"distinctiveness", rounded(report.parameters.distinctiveness_threshold)},
    {"alpha", rounded(report.parameters.rule_alpha)},
  };

  root["categories"] = json::array();
  for (auto const &c : report.categories)
  {
    json cat;
    cat["members"]     = c.members;
    cat["best_member"] = c.best_member;
    if (c.rule)
    {
      cat["rule"] = {
        {"m", c.rule->m},
        {"features", c.rule->features},
        {"necessary", c.rule->necessary},
        {"sufficient", c.rule->sufficient},
        {"false_alarm_rate", rounded(c.rule->false_alarm_rate)},
      };
    }
    else
    {
      cat["rule"] = nullptr;
    }
    cat["cohesion_bits"] = rounded(c.cohesion_bits);
    root["categories"].push_back(std::move(cat));
  }

  root["distinctiveness"] = json::array();
  for (auto const &row : report.distinctiveness)
  {
    json r = json::array();
    for (double d : row)
    {
      r.push_back(rounded(d));
    }
    root["distinctiveness"].push_back(std::move(r));
  }

  root["unclustered"] = report.unclustered;

  root["trace"] = json::array();
  for (auto const &t : report.trace)
  {
    json entry;
    entry["action"]   = t.action;
    entry["category"] = t.category;
    if (t.merged)
    {
      entry["merged"] = *t.merged;
    }
    else
    {
      entry["objects"] = t.objects;
    }
    entry["cohesion_bits"] = rounded(t.cohesion_bits);
    root["trace"].push_back(std::move(entry));
  }
  return root.dump(2) + "\n";
}

Report parse_report_json(std::string_view text)
{
  json root;
  try
  {
    root = json::parse(text);
  }
  catch (json::parse_error const &e)
  {
    throw InputError(std::string("report JSON: ") + e.what());
  }

  try
  {
    Report      report;
    auto const &p                       = root.at("parameters");
    report.parameters.cohesion_threshold        = get<double>(p, "cohesion");
    report.parameters.distinctiveness_threshold = get<double>(p, "distinctiveness");
    report.parameters.rule_alpha                = get<double>(p, "alpha");

    for (auto const &c : root.at("categories"))
    {
      CategoryRecord cat;
      cat.members       = get<std::vector<std::string>>(c, "members");
      cat.best_member   = get<std::string>(c, "best_member");
      cat.cohesion_bits = get<double>(c, "cohesion_bits");
      if (auto const &r = c.at("rule"); !r.is_null())
      {
        RuleRecord rule;
        rule.m                = get<std::size_t>(r, "m");
        rule.features         = get<std::vector<std::string>>(r, "features");
        rule.necessary        = get<std::vector<std::string>>(r, "necessary");
        rule.sufficient       = get<std::vector<std::string>>(r, "sufficient");
        rule.false_alarm_rate = get<double>(r, "false_alarm_rate");
        cat.rule              = std::move(rule);
      }
      report.categories.push_back(std::move(cat));
    }

    report.distinctiveness = get<std::vector<std::vector<double>>>(root, "distinctiveness");
    report.unclustered     = get<std::vector<std::string>>(root, "unclustered");

    for (auto const &t : root.at("trace"))
    {
      TraceRecord entry;
      entry.action        = get<std::string>(t, "action");
      entry.category      = get<std::size_t>(t, "category");
      entry.cohesion_bits = get<double>(t, "cohesion_bits");
      if (t.contains("merged"))
      {
        entry.merged = t.at("merged").get<std::size_t>();
      }
      if (t.contains("objects"))
      {
        entry.objects = t.at("objects").get<std::vector<std::string>>();
      }
      report.trace.push_back(std::move(entry));
    }
    return report;
  }
  catch (json::exception const &e)
  {
    throw InputError(std::string("report JSON: ") + e.what());
  }
}

}  // namespace polyclust::io
