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

#ifndef SYMNASH_GAME_IO_H_
#define SYMNASH_GAME_IO_H_

#include <cstddef>
#include <string>
#include <string_view>

#include "symnash/errors.h"
#include "symnash/game.h"
#include "symnash/matrix.h"

namespace symnash {

enum class GameKind { kBimatrix, kSymmetric };

// Plain-text game file:
//   line 1: "bimatrix" | "symmetric"
//   line 2: "m n" | "n"
//   then the rows of A, then (bimatrix only) the rows of B.
// Entries are whitespace-separated rationals ("p", "-p", "p/q", "0.25").
// Blank lines and lines starting with '#' are ignored.
struct GameFile {
  GameKind kind = GameKind::kSymmetric;
  RationalMatrix a;
  RationalMatrix b;  // empty for symmetric files

  // The game the file describes; (A, A^T) for symmetric files.
  BimatrixGame ToBimatrix() const;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

GameFile ParseGame(std::string_view text);
std::string SerializeGame(const GameFile& file);

// Weight list such as "1/2 1/2" or "1/2,1/2".
Vector ParseWeights(std::string_view text);

}  // namespace symnash

#endif  // SYMNASH_GAME_IO_H_
