// Copyright 2026 The symnash Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symnash/game_io.h"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

namespace symnash {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

bool IsSpace(char ch) {
  return std::isspace(static_cast<unsigned char>(ch)) != 0;
}

std::vector<Token> Tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsSpace(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !IsSpace(line[i])) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::vector<Line> ContentLines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text.remove_prefix(end == std::string_view::npos ? text.size() : end + 1);
    auto tokens = Tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

std::size_t ParseCount(const Line& line, const Token& token) {
  std::size_t value = 0;
  if (token.text.empty() || token.text.size() > 4) {
    throw ParseError(line.number, token.column,
                     "bad dimension '" + std::string(token.text) + "'");
  }
  for (char ch : token.text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError(line.number, token.column,
                       "bad dimension '" + std::string(token.text) + "'");
    }
    value = value * 10 + static_cast<std::size_t>(ch - '0');
  }
  if (value == 0) {
    throw ParseError(line.number, token.column, "dimension must be positive");
  }
  return value;
}

Rational ParseEntry(const Line& line, const Token& token) {
  auto value = Rational::TryParse(token.text);
  if (!value) {
    throw ParseError(line.number, token.column,
                     "not a rational: '" + std::string(token.text) + "'");
  }
  return *std::move(value);
}

RationalMatrix ParseRows(const std::vector<Line>& lines, std::size_t& cursor,
                         std::size_t rows, std::size_t cols,
                         const char* name) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (cursor >= lines.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  std::string(name) + " has " + std::to_string(r) +
                      " rows, expected " + std::to_string(rows));
    }
    const Line& line = lines[cursor++];
    if (line.tokens.size() != cols) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "line " + std::to_string(line.number) + ": row of " +
                      name + " has " + std::to_string(line.tokens.size()) +
                      " entries, expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      m(r, c) = ParseEntry(line, line.tokens[c]);
    }
  }
  return m;
}

void AppendRows(std::string& out, const RationalMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += FormatVector(m.Row(r));
    out += '\n';
  }
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& what)
    : Error(ErrorCode::kParseError, "line " + std::to_string(line) +
                                        ", column " + std::to_string(column) +
                                        ": " + what),
      line_(line),
      column_(column) {}

BimatrixGame GameFile::ToBimatrix() const {
  if (kind == GameKind::kSymmetric) return SymmetricGame(a).AsBimatrix();
  return BimatrixGame(a, b);
}

GameFile ParseGame(std::string_view text) {
  const std::vector<Line> lines = ContentLines(text);
  if (lines.empty()) throw ParseError(1, 1, "empty game file");

  const Line& header = lines[0];
  if (header.tokens.size() != 1) {
    throw ParseError(header.number, header.tokens[1].column,
                     "unexpected token after game kind");
  }
  GameFile file;
  const std::string_view kind = header.tokens[0].text;
  if (kind == "bimatrix") {
    file.kind = GameKind::kBimatrix;
  } else if (kind == "symmetric") {
    file.kind = GameKind::kSymmetric;
  } else {
    throw ParseError(header.number, header.tokens[0].column,
                     "expected 'bimatrix' or 'symmetric', got '" +
                         std::string(kind) + "'");
  }

  if (lines.size() < 2) {
    throw ParseError(header.number + 1, 1, "missing dimension line");
  }
  const Line& dims = lines[1];
  const std::size_t expected = file.kind == GameKind::kBimatrix ? 2 : 1;
  if (dims.tokens.size() != expected) {
    throw ParseError(dims.number, dims.tokens.front().column,
                     "expected " + std::to_string(expected) +
                         " dimension(s)");
  }
  const std::size_t rows = ParseCount(dims, dims.tokens[0]);
  const std::size_t cols =
      expected == 2 ? ParseCount(dims, dims.tokens[1]) : rows;

  std::size_t cursor = 2;
  file.a = ParseRows(lines, cursor, rows, cols, "A");
  if (file.kind == GameKind::kBimatrix) {
    file.b = ParseRows(lines, cursor, rows, cols, "B");
  }
  if (cursor < lines.size()) {
    throw ParseError(lines[cursor].number, lines[cursor].tokens[0].column,
                     "trailing content after the last matrix row");
  }
  return file;
}

std::string SerializeGame(const GameFile& file) {
  std::string out;
  if (file.kind == GameKind::kSymmetric) {
    out += "symmetric\n" + std::to_string(file.a.rows()) + "\n";
    AppendRows(out, file.a);
  } else {
    out += "bimatrix\n" + std::to_string(file.a.rows()) + " " +
           std::to_string(file.a.cols()) + "\n";
    AppendRows(out, file.a);
    AppendRows(out, file.b);
  }
  return out;
}

Vector ParseWeights(std::string_view text) {
  std::string normalized(text);
  for (char& ch : normalized) {
    if (ch == ',') ch = ' ';
  }
  Vector out;
  for (const Token& token : Tokenize(normalized)) {
    auto value = Rational::TryParse(token.text);
    if (!value) {
      throw ParseError(1, token.column,
                       "not a rational: '" + std::string(token.text) + "'");
    }
    out.push_back(*std::move(value));
  }
  if (out.empty()) throw ParseError(1, 1, "empty weight list");
  return out;
}

}  // namespace symnash
