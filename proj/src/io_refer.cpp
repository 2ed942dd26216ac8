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
#include <optional>

namespace polyclust::io {
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

struct PendingRecord
{
  ReferRecord              record;
  std::string              comment;
  std::vector<std::string> lines;
};

// Field tag for a "%X value" line, or ' ' for a "% comment" line.
char field_tag(std::string const &line)
{
  if (line.size() < 2 || line[0] != '%')
  {
    return '\0';
  }
  return std::isspace(static_cast<unsigned char>(line[1])) ? ' ' : line[1];
}

ReferRecord finish(PendingRecord &&pending, std::size_t ordinal)
{
  auto &rec = pending.record;
  // Non-% lines continue the previous field (wrapped titles).
  std::string *last = nullptr;
  for (auto const &line : pending.lines)
  {
    char const tag = field_tag(line);
    std::string const body = tag == '\0' ? trim(line) : trim(std::string_view(line).substr(2));
    switch (tag)
    {
    case ' ':
      pending.comment = body;
      last            = &pending.comment;
      break;
    case 'A':
      rec.authors.push_back(body);
      last = &rec.authors.back();
      break;
    case 'T':
      rec.title = body;
      last      = &rec.title;
      break;
    case '#':
    {
      auto const colon = body.find(": ");
      if (colon == std::string::npos)
      {
        rec.codes.emplace_back();
        rec.keywords.push_back(body);
      }
      else
      {
        rec.codes.push_back(trim(std::string_view(body).substr(0, colon)));
        rec.keywords.push_back(trim(std::string_view(body).substr(colon + 2)));
      }
      last = nullptr;
      break;
    }
    case '\0':
      if (last != nullptr && !body.empty())
      {
        *last += " " + body;
      }
      break;
    default:
      last = nullptr;  // %J, %V and other fields are not used
      break;
    }
  }

  if (!pending.comment.empty())
  {
    auto const dash = pending.comment.rfind(" - ");
    rec.label       = dash == std::string::npos ? pending.comment : trim(pending.comment.substr(dash + 3));
  }
  else if (!rec.title.empty())
  {
    rec.label = rec.title;
  }
  else
  {
    rec.label = "record " + std::to_string(ordinal);
  }

  if (rec.keywords.empty())
  {
    throw InputError("record '" + rec.label + "' (line " + std::to_string(rec.line) + ") has no %# keyword line");
  }
  return std::move(rec);
}

}  // namespace

std::vector<ReferRecord> parse_refer(std::string_view text)
{
  std::vector<ReferRecord>     records;
  std::optional<PendingRecord> pending;
  std::size_t                  number = 0;

  auto flush = [&] {
    if (pending)
    {
      records.push_back(finish(std::move(*pending), records.size() + 1));
      pending.reset();
    }
  };

  while (true)
  {
    auto const nl   = text.find('\n');
    auto const raw  = text.substr(0, nl);
    auto const line = trim(raw);
    ++number;
    if (line.empty())
    {
      flush();
    }
    else
    {
      if (!pending)
      {
        pending.emplace();
        pending->record.line = number;
      }
      pending->lines.push_back(line);
    }
    if (nl == std::string_view::npos)
    {
      break;
    }
    text.remove_prefix(nl + 1);
  }
  flush();

  if (records.empty())
  {
    throw InputError("empty corpus: no refer records");
  }
  return records;
}

}  // namespace polyclust::io
