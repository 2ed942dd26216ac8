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

// Input parsing, one-hot encoding and report serialization.

#include "polyclust/model.hpp"
#include "polyclust/report.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace polyclust::io {

/// Multi-valued attribute table. Empty cells are missing values.
struct Table
{
  std::vector<std::string>              attributes;
  std::vector<std::string>              labels;  // one per row
  std::vector<std::vector<std::string>> rows;    // rows[i].size() == attributes.size()

  bool operator==(Table const &) const = default;
};

/// Comma-separated text with a header row. A header cell named `label`
/// (any case) marks the object label column; otherwise rows are labelled
/// "object 1", "object 2", ... Double quotes may wrap cells.
Table parse_csv(std::string_view text);

struct ReferRecord
{
  std::string              label;
  std::string              title;
  std::vector<std::string> authors;
  std::vector<std::string> keywords;  // text after "code: " on each %# line
  std::vector<std::string> codes;
  std::size_t              line{0};   // first line of the record, 1-based

  bool operator==(ReferRecord const &) const = default;
};

/// Blank-line separated refer-style records (%A, %T, %J, %V, %# fields plus a
/// "% ..." comment line). The label is the comment text after its last " - ",
/// or the whole comment, or the title.
std::vector<ReferRecord> parse_refer(std::string_view text);

/// Rows of `label,b1,b2,...`. The first row is a header of feature names if
/// any of its non-label cells is not 0/1.
Corpus parse_matrix(std::string_view text);

struct EncodeOptions
{
  bool drop_uninformative{true};  // drop features held by all or no objects
  bool with_title_tokens{false};  // refer only
};

struct Encoded
{
  Corpus                   corpus;
  std::vector<std::string> notices;
};

/// One feature per observed (attribute, value), in first-appearance order.
Encoded one_hot_encode(Table const &table, EncodeOptions const &options = {});

/// One feature per distinct keyword (and optionally per lower-cased title word
/// not already a keyword), in first-appearance order.
Encoded one_hot_encode(std::vector<ReferRecord> const &records, EncodeOptions const &options = {});

/// Inverse of the table encoding: rebuilds values from the one-hot blocks.
Table decode_table(Corpus const &corpus, std::vector<std::string> const &attributes);

enum class InputFormat
{
  csv,
  refer,
  matrix,
};

Encoded load_corpus(std::string_view text, InputFormat format, EncodeOptions const &options = {});

std::string read_file(std::filesystem::path const &path);

/// Stable JSON rendering: fixed key order, floats at 9 significant digits.
std::string emit_json(Report const &report);

Report parse_report_json(std::string_view text);

}  // namespace polyclust::io
