// Copyright 2026 The fimon Authors. All Rights Reserved.
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

// fimon: word problems, order queries and Schützenberger graphs for
// presentations of inverse and F-inverse monoids.
//
// Exit codes: 0 Equal/GreaterEq, 1 NotEqual/NotGreaterEq, 2 Unknown,
// 3 usage or load error.

#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fimon/fimon.hpp"

namespace {

  constexpr int exit_usage = 3;

  std::string read_file(std::string const& path) {
    if (path == "-") {
      return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) {
      throw fimon::error("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_file(std::filesystem::path const& path, std::string const& text) {
    std::ofstream out(path);
    if (!out) {
      throw fimon::error("cannot write " + path.string());
    }
    out << text;
  }

  // out.dot → out.3.dot
  std::filesystem::path round_path(std::filesystem::path const& path, size_t i) {
    auto name = path.stem().string() + "." + std::to_string(i)
                + path.extension().string();
    return path.parent_path() / name;
  }

  char const* status_name(fimon::Expansion const& e) {
    return e.stabilized() ? "stabilized" : "budget-exhausted";
  }

  struct Options {
    std::string presentation;
    std::string lhs;
    std::string rhs;
    size_t      budget_rounds   = 64;
    size_t      budget_vertices = 10000;
    std::string dot;
    bool        rounds = false;
  };

  void add_budget(CLI::App* cmd, Options& opt) {
    cmd->add_option("--budget-rounds", opt.budget_rounds, "expansion rounds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option(
           "--budget-vertices", opt.budget_vertices, "vertices per graph")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  }

  void caveat(fimon::Presentation const& p) {
    if (p.mode == fimon::Mode::e_unitary && !p.builtin) {
      std::cout << "NOTE: inv presentation; the verdict assumes the presented "
                   "monoid is E-unitary\n";
    }
  }

  int run_verdict(fimon::Verdict const& v) {
    std::cout << v.to_string() << '\n';
    return v.exit_code();
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word problems for inverse and F-inverse monoid presentations"};
  app.require_subcommand(1);
  Options opt;

  auto* eval = app.add_subcommand("eval", "print the element (Δ, g) of a label");
  eval->add_option("presentation", opt.presentation, "presentation file or -")
      ->required();
  eval->add_option("label", opt.lhs)->required();
  add_budget(eval, opt);

  auto* eq = app.add_subcommand("eq", "decide u = v");
  eq->add_option("presentation", opt.presentation)->required();
  eq->add_option("u", opt.lhs)->required();
  eq->add_option("v", opt.rhs)->required();
  add_budget(eq, opt);

  auto* geq = app.add_subcommand("geq", "decide u >= w in the natural order");
  geq->add_option("presentation", opt.presentation)->required();
  geq->add_option("u", opt.lhs)->required();
  geq->add_option("w", opt.rhs)->required();
  add_budget(geq, opt);

  auto* graph = app.add_subcommand("graph", "export the Schützenberger graph as DOT");
  graph->add_option("presentation", opt.presentation)->required();
  graph->add_option("label", opt.lhs)->required();
  graph->add_option("--dot", opt.dot, "output path (default stdout)");
  graph->add_flag("--rounds", opt.rounds, "one DOT per expansion round");
  add_budget(graph, opt);

  auto* trace = app.add_subcommand("trace", "print the expansion round by round");
  trace->add_option("presentation", opt.presentation)->required();
  trace->add_option("label", opt.lhs)->required();
  trace->add_option("--dot", opt.dot, "also write one DOT per round");
  add_budget(trace, opt);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    auto const p = fimon::parse_presentation(read_file(opt.presentation));
    fimon::ClosureBudget const budget{opt.budget_rounds, opt.budget_vertices};
    auto const S = p.monoid(budget);
    auto const& G = S.group();

    if (*eq) {
      caveat(p);
      return run_verdict(
          fimon::check_equal(S, p.parse_label(opt.lhs), p.parse_label(opt.rhs)));
    }
    if (*geq) {
      caveat(p);
      return run_verdict(
          fimon::check_geq(S, p.parse_label(opt.lhs), p.parse_label(opt.rhs)));
    }

    auto const label = p.parse_label(opt.lhs);
    if (*eval) {
      auto const a = S.eval(label);
      std::cout << "ANCHOR=\"" << G.to_string(a.anchor()) << "\" STATUS="
                << (a.stabilized() ? "stabilized" : "budget-exhausted")
                << " ROUNDS=" << a.closed().rounds_used
                << " VERTICES=" << a.graph().number_of_vertices()
                << " EDGES=" << a.graph().number_of_edges() << '\n';
      for (auto const& v : a.graph().vertices()) {
        std::cout << "  vertex " << G.to_string(v) << '\n';
      }
      for (auto const& e : a.graph().edges()) {
        std::cout << "  edge " << G.to_string(e.source) << " -"
                  << G.alphabet().name(e.generator) << "-> "
                  << G.to_string(a.graph().target(e)) << '\n';
      }
      return a.stabilized() ? 0 : 2;
    }

    fimon::Expansion e(
        fimon::span_journey(S.group_ptr(), G.identity(), label), S.closure(), budget);
    std::set<fimon::GroupElem> const marks{G.identity(), G.eval(label)};
    std::vector<std::string>         dots;
    auto snapshot = [&] {
      dots.push_back(fimon::to_dot(
          e.graph(), marks, "round" + std::to_string(e.rounds())));
      if (*trace) {
        std::cout << "ROUND=" << e.rounds()
                  << " VERTICES=" << e.graph().number_of_vertices()
                  << " EDGES=" << e.graph().number_of_edges() << '\n';
      }
    };
    snapshot();
    while (!e.finished()) {
      if (e.step()) {
        snapshot();
      }
    }
    if (*trace) {
      std::cout << "STATUS=" << status_name(e) << " ROUNDS=" << e.rounds()
                << " VERTICES=" << e.graph().number_of_vertices() << '\n';
    } else {
      std::cerr << "STATUS=" << status_name(e) << " ROUNDS=" << e.rounds()
                << " VERTICES=" << e.graph().number_of_vertices() << '\n';
    }
    bool const per_round = *trace || opt.rounds;
    if (!per_round) {
      dots = {dots.back()};
    }
    if (opt.dot.empty()) {
      if (*graph) {
        for (auto const& d : dots) {
          std::cout << d;
        }
      }
    } else if (per_round) {
      for (size_t i = 0; i < dots.size(); ++i) {
        write_file(round_path(opt.dot, i), dots[i]);
      }
    } else {
      write_file(opt.dot, dots.back());
    }
    return e.stabilized() ? 0 : 2;
  } catch (std::exception const& ex) {
    std::cerr << "error: " << ex.what() << '\n';
    return exit_usage;
  }
}
