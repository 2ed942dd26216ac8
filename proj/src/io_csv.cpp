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
#include <fstream>
#include <sstream>

namespace polyclust::io {
namespace {

struct Line
{
  std::size_t      number;
  std::string_view text;
};

std::vector<Line> split_lines(std::string_view text)
{
  std::vector<Line> lines;
  std::size_t       number = 1;
  while (!text.empty())
  {
    auto const nl   = text.find('\n');
    auto       line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r')
    {
      line.remove_suffix(1);
    }
    lines.push_back({number++, line});
    if (nl == std::string_view::npos)
    {
      break;
    }
    text.remove_prefix(nl + 1);
  }
  return lines;
}

bool blank(std::string_view s)
{
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

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

std::vector<std::string> split_cells(Line const &line)
{
  std::vector<std::string> cells;
  std::string              cell;
  bool                     quoted  = false;
  bool                     was_quoted = false;
  auto const              &s       = line.text;
  for (std::size_t i = 0; i < s.size(); ++i)
  {
    char const c = s[i];
    if (quoted)
    {
      if (c == '"' && i + 1 < s.size() && s[i + 1] == '"')
      {
        cell += '"';
        ++i;
      }
      else if (c == '"')
      {
        quoted = false;
      }
      else
      {
        cell += c;
      }
    }
    else if (c == '"')
    {
      quoted     = true;
      was_quoted = true;
    }
    else if (c == ',')
    {
      cells.push_back(was_quoted ? cell : trim(cell));
      cell.clear();
      was_quoted = false;
    }
    else
    {
      cell += c;
    }
  }
  if (quoted)
  {
    throw InputError("line " + std::to_string(line.number) + ": unterminated quoted cell");
  }
  cells.push_back(was_quoted ? cell : trim(cell));
  return cells;
}

std::string lower(std::string s)
{
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

}  // namespace

Table parse_csv(std::string_view text)
{
  std::vector<Line> lines;
  for (auto const &l : split_lines(text))
  {
    if (!blank(l.text))
    {
      lines.push_back(l);
    }
  }
  if (lines.empty())
  {
    throw InputError("empty input: no header row");
  }

  auto const header = split_cells(lines.front());
  std::optional<std::size_t> label_column;
  Table                      table;
  for (std::size_t i = 0; i < header.size(); ++i)
  {
    if (header[i].empty())
    {
      throw InputError("line " + std::to_string(lines.front().number) + ": empty header cell in column " +
                       std::to_string(i + 1));
    }
    if (!label_column && lower(header[i]) == "label")
    {
      label_column = i;
      continue;
    }
    table.attributes.push_back(header[i]);
  }
  if (table.attributes.empty())
  {
    throw InputError("line " + std::to_string(lines.front().number) + ": empty header (no attribute columns)");
  }

  for (std::size_t r = 1; r < lines.size(); ++r)
  {
    auto cells = split_cells(lines[r]);
    if (cells.size() != header.size())
    {
      throw InputError("line " + std::to_string(lines[r].number) + ": ragged row, expected " +
                       std::to_string(header.size()) + " fields, got " + std::to_string(cells.size()));
    }
    std::vector<std::string> row;
    row.reserve(table.attributes.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
    {
      if (label_column && i == *label_column)
      {
        table.labels.push_back(cells[i]);
      }
      else
      {
        row.push_back(std::move(cells[i]));
      }
    }
    if (!label_column)
    {
      table.labels.push_back("object " + std::to_string(r));
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

Corpus parse_matrix(std::string_view text)
{
  std::vector<Line> lines;
  for (auto const &l : split_lines(text))
  {
    if (!blank(l.text) && trim(l.text).front() != '#')
    {
      lines.push_back(l);
    }
  }
  if (lines.empty())
  {
    throw InputError("empty corpus: no matrix rows");
  }

  auto is_bit = [](std::string const &s) { return s == "0" || s == "1"; };

  auto              first = split_cells(lines.front());
  std::size_t const width = first.size();
  if (width < 2)
  {
    throw InputError("line " + std::to_string(lines.front().number) + ": expected label,b1,b2,...");
  }
  bool const has_header = std::any_of(first.begin() + 1, first.end(), [&](auto const &c) { return !is_bit(c); });

  std::vector<Feature> features;
  for (std::size_t i = 1; i < width; ++i)
  {
    features.push_back({has_header ? first[i] : "f" + std::to_string(i - 1), ""});
  }

  std::vector<ObjectInstance> objects;
  for (std::size_t r = has_header ? 1 : 0; r < lines.size(); ++r)
  {
    auto cells = split_cells(lines[r]);
    if (cells.size() != width)
    {
      throw InputError("line " + std::to_string(lines[r].number) + ": ragged row, expected " +
                       std::to_string(width) + " fields, got " + std::to_string(cells.size()));
    }
    ObjectInstance o;
    o.label = cells[0];
    for (std::size_t i = 1; i < width; ++i)
    {
      if (!is_bit(cells[i]))
      {
        throw InputError("line " + std::to_string(lines[r].number) + ": value '" + cells[i] +
                         "' is not 0 or 1");
      }
      o.bits.push_back(cells[i] == "1" ? 1 : 0);
    }
    objects.push_back(std::move(o));
  }
  if (objects.empty())
  {
    throw InputError("empty corpus: header without rows");
  }
  return Corpus(FeatureSpace(std::move(features)), std::move(objects));
}

std::string read_file(std::filesystem::path const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw InputError("cannot open '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Encoded load_corpus(std::string_view text, InputFormat format, EncodeOptions const &options)
{
  switch (format)
  {
  case InputFormat::csv:
    return one_hot_encode(parse_csv(text), options);
  case InputFormat::refer:
    return one_hot_encode(parse_refer(text), options);
  case InputFormat::matrix:
    return Encoded{parse_matrix(text), {}};
  }
  throw InputError("unknown input format");
}

}  // namespace polyclust::io
