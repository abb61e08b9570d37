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

#include "symnash/cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "symnash/enumerate.h"
#include "symnash/errors.h"
#include "symnash/game.h"
#include "symnash/game_io.h"
#include "symnash/imitation.h"
#include "symnash/rank1.h"
#include "symnash/reduction.h"
#include "symnash/verify.h"

namespace symnash {
namespace {

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotAnEquilibrium:
      return kExitFalse;
    case ErrorCode::kInternalInvariantViolation:
    case ErrorCode::kFixedPointNotFound:
    case ErrorCode::kNotFullSupport:
    case ErrorCode::kPrimaryNotOptimal:
      return kExitInternal;
    default:
      return kExitInput;
  }
}

GameFile LoadGame(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kParseError, "cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseGame(buffer.str());
}

MixedStrategy ParseStrategy(const std::string& text) {
  return MixedStrategy(ParseWeights(text));
}

// "Wx;Wy".
Profile ParseProfile(const std::string& text) {
  const auto split = text.find(';');
  if (split == std::string::npos) {
    throw Error(ErrorCode::kParseError,
                "expected \"x weights;y weights\", got '" + text + "'");
  }
  return Profile{ParseStrategy(text.substr(0, split)),
                 ParseStrategy(text.substr(split + 1))};
}

std::string Format(const MixedStrategy& s) { return FormatVector(s.weights()); }

std::string FormatProfile(const Profile& p) {
  return "x: " + Format(p.x) + " | y: " + Format(p.y);
}

const char* Bool(bool b) { return b ? "true" : "false"; }

Rational ParseCap(const std::string& text) {
  const Rational cap = Rational::Parse(text);
  if (cap.sign() <= 0) {
    throw Error(ErrorCode::kPreconditionViolated, "cap must be positive");
  }
  return cap;
}

RationalMatrix SquareMatrix(const GameFile& file) {
  if (file.kind == GameKind::kSymmetric) return file.a;
  if (!file.a.is_square() || file.b != file.a.Transpose()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected a symmetric game (B = A^T)");
  }
  return file.a;
}

struct Options {
  std::string file;
  std::string out_file;
  std::string x;
  std::string y;
  std::string ne1;
  std::string ne2;
  std::string diag;
  std::string cap = "1/10";
  bool symmetric_only = false;
  bool details = false;
};

int SolveRank1(const Options& o, std::ostream& out) {
  const RationalMatrix a = SquareMatrix(LoadGame(o.file));
  const Rank1Solution solution = SolveSymmetricRank1(a);
  out << "x: " << Format(solution.x) << "\n";
  if (o.details) {
    out << "lambda: " << solution.fixed_point << "\n";
    out << "iterations: " << solution.iterations << "\n";
    out << "reconstructed: " << Bool(solution.reconstructed) << "\n";
  }
  return kExitOk;
}

int Enumerate(const Options& o, std::ostream& out) {
  const GameFile file = LoadGame(o.file);
  if (o.symmetric_only) {
    const auto result = EnumerateSymmetricNe(SquareMatrix(file));
    for (const auto& x : result.equilibria) out << "x: " << Format(x) << "\n";
    out << "count: " << result.equilibria.size() << "\n";
    out << "degenerate: " << Bool(result.degenerate) << "\n";
    return kExitOk;
  }
  const auto result = EnumerateNe(file.ToBimatrix());
  for (const auto& p : result.equilibria) out << FormatProfile(p) << "\n";
  out << "count: " << result.equilibria.size() << "\n";
  out << "degenerate: " << Bool(result.degenerate) << "\n";
  return kExitOk;
}

int Verify(const Options& o, std::ostream& out) {
  const GameFile file = LoadGame(o.file);
  const MixedStrategy x = ParseStrategy(o.x);
  NeCertificate cert;
  if (o.y.empty()) {
    cert = IsSymmetricNe(SquareMatrix(file), x);
  } else {
    cert = IsNash(file.ToBimatrix(), x, ParseStrategy(o.y));
  }
  out << "holds: " << Bool(cert.holds) << "\n";
  out << "pi1: " << cert.pi1 << "\n";
  out << "pi2: " << cert.pi2 << "\n";
  if (cert.violation) {
    out << "violation: player " << cert.violation->player << " strategy "
        << cert.violation->strategy + 1 << " (plays "
        << cert.violation->played + 1 << ")\n";
  }
  return cert.holds ? kExitOk : kExitFalse;
}

int ReduceBuild(const Options& o, std::ostream& out) {
  const GameFile file = LoadGame(o.file);
  const ReductionBundle bundle =
      BuildComposite(file.ToBimatrix(), ParseCap(o.cap));
  const std::string text =
      SerializeGame(GameFile{GameKind::kSymmetric, bundle.g, {}});
  if (o.out_file == "-") {
    out << text;
    return kExitOk;
  }
  std::ofstream sink(o.out_file, std::ios::binary);
  if (!sink || !(sink << text)) {
    throw Error(ErrorCode::kParseError, "cannot write '" + o.out_file + "'");
  }
  out << "composite: " << bundle.g.rows() << "x" << bundle.g.cols()
      << " (m=" << bundle.m << ", n=" << bundle.n << ", cap=" << bundle.cap
      << ")\n";
  return kExitOk;
}

int ReduceForward(const Options& o, std::ostream& out) {
  const ReductionBundle bundle =
      BuildComposite(LoadGame(o.file).ToBimatrix(), ParseCap(o.cap));
  const auto [ne1, ne2] =
      ForwardMap(bundle, ParseStrategy(o.x), ParseStrategy(o.y));
  int index = 1;
  for (const Profile* ne : {&ne1, &ne2}) {
    // Strategies are invariant under the payoff normalization; payoffs are
    // reported against the original matrices.
    const Rational p1 = bundle.transform_a.Invert(
        Payoff(bundle.source.a(), ne->x.weights(), ne->y.weights()));
    const Rational p2 = bundle.transform_b.Invert(
        Payoff(bundle.source.b(), ne->x.weights(), ne->y.weights()));
    out << "ne" << index << ": " << FormatProfile(*ne) << "\n";
    out << "payoffs" << index << ": " << p1 << " " << p2 << "\n";
    ++index;
  }
  out << "distinct: " << Bool(ne1 != ne2) << "\n";
  return kExitOk;
}

int ReduceBackward(const Options& o, std::ostream& out) {
  const ReductionBundle bundle =
      BuildComposite(LoadGame(o.file).ToBimatrix(), ParseCap(o.cap));
  const Profile image =
      BackwardMap(bundle, ParseProfile(o.ne1), ParseProfile(o.ne2));
  out << "x: " << Format(image.x) << "\n";
  out << "y: " << Format(image.y) << "\n";
  out << "symmetric: " << Bool(image.x == image.y) << "\n";
  return kExitOk;
}

int CountNonsymmetric(const Options& o, std::ostream& out) {
  const CountingReport report =
      CheckCountingCorrespondence(LoadGame(o.file).ToBimatrix(),
                                  ParseCap(o.cap));
  out << "k=" << report.k << " nonsym=" << report.nonsymmetric
      << " holds=" << Bool(report.holds) << "\n";
  if (o.details) {
    for (const auto& entry : report.table) {
      out << "pair " << entry.first + 1 << " " << entry.second + 1 << " -> "
          << FormatProfile(entry.composite) << "\n";
    }
  }
  return report.holds ? kExitOk : kExitFalse;
}

int ImitationLift(const Options& o, std::ostream& out) {
  const RationalMatrix a = LoadGame(o.file).a;
  const MixedStrategy y =
      LiftToSymmetric(a, ParseStrategy(o.x), ParseStrategy(o.y));
  out << "y: " << Format(y) << "\n";
  return kExitOk;
}

int ImitationRescale(const Options& o, std::ostream& out) {
  const MixedStrategy x = RescaleForDiagonal(
      ParseStrategy(o.x), PositiveDiagonal(ParseWeights(o.diag)));
  out << "x: " << Format(x) << "\n";
  return kExitOk;
}

int ImitationWitness(const Options& o, std::ostream& out) {
  const RationalMatrix a = LoadGame(o.file).a;
  const MixedStrategy x = WitnessForDiagonal(
      a, ParseStrategy(o.y), PositiveDiagonal(ParseWeights(o.diag)));
  out << "x: " << Format(x) << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Exact symmetric equilibria and the symmetric-game reduction",
               "symnash"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;

  const auto add = [&](const std::string& name, const std::string& help,
                       auto handler) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, handler] { action = handler; });
    return sub;
  };

  auto* solve = add("solve-rank1", "symmetric equilibrium of a rank-1 game",
                    SolveRank1);
  solve->add_option("FILE", o.file)->required();
  solve->add_flag("--details", o.details, "print lambda and search stats");

  auto* enumerate = add("enumerate", "all equilibria by support enumeration",
                        Enumerate);
  enumerate->add_option("FILE", o.file)->required();
  enumerate->add_flag("--symmetric-only", o.symmetric_only);

  auto* verify = add("verify", "check equilibrium conditions", Verify);
  verify->add_option("FILE", o.file)->required();
  verify->add_option("--x", o.x)->required();
  verify->add_option("--y", o.y, "omit for a symmetric check (x, x)");

  auto* build = add("reduce-build", "write the composite symmetric game",
                    ReduceBuild);
  build->add_option("FILE", o.file)->required();
  build->add_option("--cap", o.cap);
  build->add_option("-o", o.out_file, "output path, '-' for stdout")
      ->required();

  auto* forward = add("reduce-forward",
                      "composite equilibrium to two source equilibria",
                      ReduceForward);
  forward->add_option("FILE", o.file)->required();
  forward->add_option("--cap", o.cap);
  forward->add_option("--x", o.x)->required();
  forward->add_option("--y", o.y)->required();

  auto* backward = add("reduce-backward",
                       "two source equilibria to a composite equilibrium",
                       ReduceBackward);
  backward->add_option("FILE", o.file)->required();
  backward->add_option("--cap", o.cap);
  backward->add_option("--ne1", o.ne1, "\"x weights;y weights\"")->required();
  backward->add_option("--ne2", o.ne2, "\"x weights;y weights\"")->required();

  auto* count = add("count-nonsymmetric",
                    "check the pairs-to-non-symmetric-equilibria count",
                    CountNonsymmetric);
  count->add_option("FILE", o.file)->required();
  count->add_option("--cap", o.cap);
  count->add_flag("--details", o.details, "print the correspondence table");

  auto* lift = add("imitation-lift", "(x, y) of (A, I) to symmetric y",
                   ImitationLift);
  lift->add_option("FILE", o.file)->required();
  lift->add_option("--x", o.x)->required();
  lift->add_option("--y", o.y)->required();

  auto* rescale = add("imitation-rescale", "rescale x for a diagonal matrix",
                      ImitationRescale);
  rescale->add_option("--x", o.x)->required();
  rescale->add_option("--diag", o.diag)->required();

  auto* witness = add("imitation-witness",
                      "row strategy pairing symmetric y in (A, D)",
                      ImitationWitness);
  witness->add_option("FILE", o.file)->required();
  witness->add_option("--y", o.y)->required();
  witness->add_option("--diag", o.diag)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    return action(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
}

}  // namespace symnash
