// Copyright 2026 The tcompact Authors. All Rights Reserved.
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

// tcompact: encoders, decoders and checkers for compact sets named by
// sequences over {0,1,B}.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tcompact/acceptance.hpp"
#include "tcompact/cantor_compacts.hpp"
#include "tcompact/compact_codec.hpp"
#include "tcompact/error.hpp"
#include "tcompact/svg.hpp"
#include "tcompact/text_io.hpp"

namespace {

using namespace tcompact;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kConfig = 2;
constexpr int kBudget = 3;

struct RunConfig {
  std::string space = "gray-unit";
  std::size_t depth = 6;
  std::size_t level = 1;
  std::size_t stages = 4;
  std::size_t budget = 32;
  std::size_t bound = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string in;
  std::string out;
  std::string trace;
  std::string points;
  std::string eps = "1/64";
  int only = 0;
};

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PropertyViolation:
      return kViolation;
    case ErrorKind::BudgetExhausted:
    case ErrorKind::LayerExhausted:
    case ErrorKind::NotStabilized:
      return kBudget;
    default:
      return kConfig;
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_file(cfg.out, text);
  }
}

std::string input(const RunConfig& cfg) {
  if (cfg.in.empty() || cfg.in == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  return read_file(cfg.in);
}

Backend backend(const RunConfig& cfg) { return Backend(parse_space(cfg.space)); }

int cmd_subbase_check(const RunConfig& cfg) {
  const Backend b = backend(cfg);
  const PropernessReport rep = properness_check(b, cfg.depth);
  for (const auto& line : rep.witnesses) std::cout << line << "\n";
  std::cout << "words checked: " << rep.words_checked << "\n";
  if (!rep.ok) {
    std::cout << "not proper at " << (rep.counterexample ? rep.counterexample->str(true) : "disjointness") << ": "
              << rep.detail << "\n";
    return kViolation;
  }
  std::cout << "proper up to length " << cfg.depth << "\n";
  return kOk;
}

int cmd_khat(const RunConfig& cfg) {
  const Backend b = backend(cfg);
  std::size_t bound = cfg.bound;
  if (bound == 0) bound = build_levels(b, cfg.level, cfg.budget, 0).g(cfg.level) + 3;
  std::string text;
  for (const auto& e : khat_level(b, cfg.level, bound)) text += e.str(true) + "\n";
  emit(cfg, text);
  return kOk;
}

int cmd_codes(const RunConfig& cfg) {
  const CodeSystem cs = build_code_system(backend(cfg), cfg.level, cfg.budget);
  emit(cfg, format_levels(cs) + format_codes(cs));
  return kOk;
}

int cmd_encode(const RunConfig& cfg) {
  const Backend b = backend(cfg);
  const std::string text = input(cfg);
  if (b.kind() == SpaceKind::Cantor && (text.find("points:") != std::string::npos || text.find("tree:") != std::string::npos)) {
    const ClosedCantorSpec a = parse_cantor_spec(text);
    const NameApprox name = s_cantor(a, cfg.depth);
    emit(cfg, format_name(name));
    std::cout << "bottoms: " << bot_count_in_window(name, settled_window(cfg.depth)) << "\n";
    return kOk;
  }
  const SymSet a = parse_sym_set(b, text);
  const CodeSystem cs = build_code_system(b, cfg.stages, cfg.budget);
  const Encoding enc = s_general(cs, a, cfg.stages);
  emit(cfg, format_name(enc.name));
  if (!cfg.trace.empty()) write_file(cfg.trace, format_trace(enc.trace));
  std::cout << "bottoms: " << bottom_count(enc) << "\n";
  return kOk;
}

int cmd_decode(const RunConfig& cfg) {
  const Backend b = backend(cfg);
  const NameApprox name = parse_name(input(cfg));
  if (b.kind() == SpaceKind::Cantor && cfg.stages == 0) {
    std::string text;
    for (const auto& w : t_cantor(name, cfg.depth)) text += w.str(true) + "\n";
    emit(cfg, text);
    return kOk;
  }
  const CodeSystem cs = build_code_system(b, cfg.stages, cfg.budget);
  emit(cfg, sym_str(t_general(cs, name, cfg.stages)) + "\n");
  return kOk;
}

int cmd_roundtrip(const RunConfig& cfg) {
  const Backend b = backend(cfg);
  const SymSet a = parse_sym_set(b, input(cfg));
  const CodeSystem cs = build_code_system(b, cfg.stages, cfg.budget);
  const RoundtripReport rep = roundtrip_check(cs, a, parse_rat(cfg.eps), cfg.stages);
  for (const auto& line : rep.lines) std::cout << line << "\n";
  if (!rep.contained) {
    std::cout << "decode misses part of the input\n";
    return kViolation;
  }
  if (!rep.fattened_at) {
    std::cout << "decode not within " << cfg.eps << " by stage " << cfg.stages << "\n";
    return kViolation;
  }
  std::cout << "stage bound: " << *rep.fattened_at << "\n";
  return kOk;
}

int cmd_prune(const RunConfig& cfg) {
  const NameApprox name = prune(parse_tree(input(cfg)));
  emit(cfg, format_name(name));
  return kOk;
}

int cmd_unprune(const RunConfig& cfg) {
  const NameApprox name = parse_name(input(cfg));
  const Bits flat = name_encode(name, prune_inverse_min_length(cfg.depth));
  emit(cfg, format_tree(prune_inverse(flat, cfg.depth)));
  return kOk;
}

int cmd_match(const RunConfig& cfg) {
  const Backend b = backend(cfg);
  const std::string text = input(cfg);
  bool ok;
  if (b.kind() == SpaceKind::Cantor && (text.find("points:") != std::string::npos || text.find("tree:") != std::string::npos)) {
    ok = matching_check(parse_cantor_spec(text), cfg.depth);
  } else {
    const SymSet a = parse_sym_set(b, text);
    const CodeSystem cs = build_code_system(b, cfg.depth, cfg.budget);
    ok = match_general_check(cs, a, parse_points(b, cfg.points), cfg.depth);
  }
  std::cout << "match: " << (ok ? "true" : "false") << "\n";
  return ok ? kOk : kViolation;
}

int cmd_viz(const RunConfig& cfg) {
  emit(cfg, svg_tiling(backend(cfg), cfg.level));
  return kOk;
}

int cmd_selftest(const RunConfig& cfg) {
  bool all = true;
  auto report = [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    all = all && r.pass;
  };
  if (cfg.only != 0) {
    report(run_criterion(cfg.only, cfg.seed));
  } else {
    run_acceptance(cfg.seed, report);
  }
  return all ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Names of compact sets over {0,1,B}: encode, decode, check"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto space = [&](CLI::App* sub) {
    sub->add_option("--space", cfg.space, "cantor, gray-unit or gray-square")
        ->check(CLI::IsMember({"cantor", "gray-unit", "gray-square"}))
        ->capture_default_str();
  };
  auto io = [&](CLI::App* sub) {
    sub->add_option("--in", cfg.in, "input file (default stdin)");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
  };
  auto budget = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget, "search budget for k_d")->check(CLI::PositiveNumber)->capture_default_str();
  };

  int status = kOk;
  auto bind = [&](CLI::App* sub, int (*fn)(const RunConfig&)) { sub->callback([&, fn] { status = fn(cfg); }); };

  auto* subbase = app.add_subcommand("subbase", "subbase diagnostics");
  subbase->require_subcommand(1);
  auto* check = subbase->add_subcommand("check", "properness report");
  space(check);
  check->add_option("--depth", cfg.depth, "maximal word length")->capture_default_str();
  bind(check, cmd_subbase_check);

  auto* khat = app.add_subcommand("khat", "words of one level with a nonempty barred set");
  space(khat);
  io(khat);
  budget(khat);
  khat->add_option("--level", cfg.level)->capture_default_str();
  khat->add_option("--bound", cfg.bound, "maximal word length (default g(level)+3)");
  bind(khat, cmd_khat);

  auto* codes = app.add_subcommand("codes", "g, H, f and r tables");
  space(codes);
  io(codes);
  budget(codes);
  codes->add_option("--level", cfg.level, "number of layers")->capture_default_str();
  bind(codes, cmd_codes);

  auto* encode = app.add_subcommand("encode", "set to name");
  space(encode);
  io(encode);
  budget(encode);
  encode->add_option("--depth", cfg.depth, "tree depth (cantor point lists and trees)")->capture_default_str();
  encode->add_option("--stages", cfg.stages, "refinement stages (symbolic sets)")->capture_default_str();
  encode->add_option("--trace", cfg.trace, "write the stage trace here");
  bind(encode, cmd_encode);

  auto* decode = app.add_subcommand("decode", "name to set");
  space(decode);
  io(decode);
  budget(decode);
  decode->add_option("--depth", cfg.depth, "path length for cantor names read as trees")->capture_default_str();
  decode->add_option("--stages", cfg.stages, "layer of the decode; 0 reads cantor names as trees")
      ->capture_default_str();
  bind(decode, cmd_decode);

  auto* roundtrip = app.add_subcommand("roundtrip", "containment and fattening report");
  space(roundtrip);
  io(roundtrip);
  budget(roundtrip);
  roundtrip->add_option("--stages", cfg.stages, "stage bound")->capture_default_str();
  roundtrip->add_option("--eps", cfg.eps, "fattening radius")->capture_default_str();
  bind(roundtrip, cmd_roundtrip);

  auto* prune_cmd = app.add_subcommand("prune", "tree to name");
  io(prune_cmd);
  bind(prune_cmd, cmd_prune);

  auto* unprune = app.add_subcommand("unprune", "name to tree");
  io(unprune);
  unprune->add_option("--depth", cfg.depth)->capture_default_str();
  bind(unprune, cmd_unprune);

  auto* match = app.add_subcommand("match", "matching checker");
  space(match);
  io(match);
  budget(match);
  match->add_option("--depth", cfg.depth, "walk depth")->capture_default_str();
  match->add_option("--points", cfg.points, "test points, whitespace separated");
  bind(match, cmd_match);

  auto* viz = app.add_subcommand("viz", "SVG of the S_ex tiling");
  space(viz);
  io(viz);
  viz->add_option("--level", cfg.level)->capture_default_str();
  bind(viz, cmd_viz);

  auto* selftest = app.add_subcommand("selftest", "acceptance suite");
  selftest->add_option("--seed", cfg.seed)->capture_default_str();
  selftest->add_option("--only", cfg.only, "run one criterion")->check(CLI::Range(1, kCriterionCount));
  bind(selftest, cmd_selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfig;
  }
  return status;
}
