// Copyright 2026 The qfa Authors
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

#include "qfa/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <functional>
#include <map>
#include <optional>

#include "CLI11.hpp"
#include "qfa/equivalence.hpp"
#include "qfa/formats.hpp"
#include "qfa/transforms.hpp"

namespace qfa {

namespace {

struct Edge {
  std::string_view from;
  std::string_view to;
  std::function<Machine(const Machine&, std::span<const std::string>)> apply;
};

template <class T>
const T& as(const Machine& m) {
  return std::get<T>(m);
}

const std::vector<Edge>& edges() {
  using Acc = std::span<const std::string>;
  static const std::vector<Edge> table = {
      {"dfa", "mo1g", [](const Machine& m, Acc) -> Machine { return dfa_to_mo1g(as<Dfa>(m)); }},
      {"dfa", "qfac", [](const Machine& m, Acc) -> Machine { return dfa_to_qfac_certainty(as<Dfa>(m)); }},
      {"dfa", "qcfa", [](const Machine& m, Acc) -> Machine { return dfa_to_qcfa_certainty(as<Dfa>(m)); }},
      {"cl1qfa", "mo1g", [](const Machine& m, Acc) -> Machine { return cl1qfa_to_mo1g(as<Cl1Qfa>(m)); }},
      {"cl1qfa", "qcfa", [](const Machine& m, Acc) -> Machine { return cl1qfa_to_qcfa(as<Cl1Qfa>(m)); }},
      {"qfac", "mo1g", [](const Machine& m, Acc) -> Machine { return qfac_to_mo1g(as<Qfac1>(m)); }},
      {"qcfa", "mo1g", [](const Machine& m, Acc) -> Machine { return qcfa_to_mo1g(as<Qcfa1>(m)); }},
      {"ancilla", "mo1g", [](const Machine& m, Acc) -> Machine { return ancilla_to_mo1g(as<AncillaQfa>(m)); }},
      {"mo1g", "ancilla", [](const Machine& m, Acc) -> Machine { return mo1g_to_ancilla(as<Mo1gQfa>(m)); }},
      {"qsm", "ancilla", [](const Machine& m, Acc acc) -> Machine { return qsm_to_ancilla(as<Qsm>(m), acc); }},
  };
  return table;
}

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12f", std::clamp(p, 0.0, 1.0));
  return buf;
}

void emit(const Machine& m, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << serialize_machine(m);
  } else {
    save_machine(out_path, m);
  }
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    out.push_back(text.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<std::string> conversion_path(std::string_view from,
                                         std::string_view to) {
  // Breadth-first with path counting.
  std::map<std::string_view, std::size_t> dist{{from, 0}};
  std::map<std::string_view, std::size_t> ways{{from, 1}};
  std::map<std::string_view, std::string_view> parent;
  std::deque<std::string_view> queue{from};
  while (!queue.empty()) {
    auto kind = queue.front();
    queue.pop_front();
    for (const auto& e : edges()) {
      if (e.from != kind) continue;
      auto it = dist.find(e.to);
      if (it == dist.end()) {
        dist[e.to] = dist[kind] + 1;
        ways[e.to] = ways[kind];
        parent[e.to] = kind;
        queue.push_back(e.to);
      } else if (it->second == dist[kind] + 1) {
        ways[e.to] += ways[kind];
      }
    }
  }
  if (!dist.contains(to)) {
    throw TransformError("no conversion from " + std::string(from) + " to " +
                         std::string(to));
  }
  if (ways[to] > 1) {
    throw TransformError("conversion from " + std::string(from) + " to " +
                         std::string(to) + " is ambiguous");
  }
  std::vector<std::string> path{std::string(to)};
  for (auto k = to; k != from; k = parent[k]) path.emplace_back(parent[k]);
  std::reverse(path.begin(), path.end());
  return path;
}

Machine convert_machine(const Machine& m, std::string_view to,
                        std::span<const std::string> accepting) {
  auto path = conversion_path(kind_name(m), to);
  Machine current = m;
  for (std::size_t i = 1; i < path.size(); ++i) {
    for (const auto& e : edges()) {
      if (e.from == path[i - 1] && e.to == path[i]) {
        current = e.apply(current, accepting);
        break;
      }
    }
  }
  return current;
}

int run_cli(std::span<const std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Quantum finite automata: validate, evaluate, convert and compare machines.", "qfa"};
  app.require_subcommand(1);

  std::string file, file2, input, output, symbols = "single", to, out_path,
      accepting, method = "bounded", as_kind;
  std::optional<std::size_t> max_len;

  auto* validate = app.add_subcommand("validate", "Report every violated invariant");
  validate->add_option("file", file, "Machine document")->required();

  auto* eval = app.add_subcommand("eval", "Acceptance probability of an input");
  eval->add_option("file", file, "Machine document")->required();
  eval->add_option("--input", input, "Input string")->required();
  eval->add_option("--output", output, "Output string (QSM only)");
  eval->add_option("--symbols", symbols, "Symbol syntax of strings")
      ->check(CLI::IsMember({"single", "csv"}));

  auto* convert = app.add_subcommand("convert", "Convert to another model");
  convert->add_option("file", file, "Machine document")->required();
  convert->add_option("--to", to, "Target kind")
      ->required()
      ->check(CLI::IsMember({"dfa", "mo1g", "cl1qfa", "qfac", "qcfa", "ancilla", "qsm"}));
  convert->add_option("--out", out_path, "Write here instead of stdout");
  convert->add_option("--accepting", accepting,
                      "Comma-separated accepting states for a QSM source");

  auto* equiv = app.add_subcommand("equiv", "Decide equivalence of two machines");
  equiv->add_option("file1", file, "First machine")->required();
  equiv->add_option("file2", file2, "Second machine")->required();
  equiv->add_option("--method", method, "Decision method")
      ->check(CLI::IsMember({"bounded", "algebraic"}));
  equiv->add_option("--max-len", max_len, "Longest string to check (bounded)");

  auto* recognize = app.add_subcommand("recognize", "Certainty construction for a DFA");
  recognize->add_option("file", file, "DFA document")->required();
  recognize->add_option("--as", as_kind, "Target kind")
      ->required()
      ->check(CLI::IsMember({"qfac", "qcfa", "mo1g"}));
  recognize->add_option("--out", out_path, "Write here instead of stdout");

  auto* bound = app.add_subcommand("bound", "Length bound deciding equivalence of a pair");
  bound->add_option("file1", file, "First machine")->required();
  bound->add_option("file2", file2, "Second machine")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitError;
  }

  try {
    if (validate->parsed()) {
      auto found = validate_machine(load_machine(file, false));
      for (const auto& v : found) out << v.to_string() << "\n";
      if (!found.empty()) return kExitError;
      out << "valid\n";
      return kExitOk;
    }
    if (eval->parsed()) {
      const Machine m = load_machine(file);
      const bool csv = symbols == "csv";
      const Word x = parse_word(input, csv);
      double p;
      if (const auto* q = std::get_if<Qsm>(&m)) {
        if (eval->count("--output") == 0) {
          err << "error: a QSM needs --output\n";
          return kExitError;
        }
        p = qsm_output_prob(*q, x, parse_word(output, csv));
      } else {
        if (eval->count("--output") != 0) {
          err << "error: --output applies to QSM documents only\n";
          return kExitError;
        }
        p = accept_prob(m, x);
      }
      out << format_probability(p) << "\n";
      return kExitOk;
    }
    if (convert->parsed()) {
      const auto acc = split_csv(accepting);
      emit(convert_machine(load_machine(file), to, acc), out_path, out);
      return kExitOk;
    }
    if (equiv->parsed()) {
      const Machine a = load_machine(file);
      const Machine b = load_machine(file2);
      const auto m = method == "algebraic" ? EquivMethod::algebraic : EquivMethod::bounded;
      auto verdict = equiv_any(a, b, m, max_len);
      out << verdict.summary() << "\n";
      return verdict.equivalent ? kExitOk : kExitNotEquivalent;
    }
    if (recognize->parsed()) {
      const Machine m = load_machine(file);
      const auto* dfa = std::get_if<Dfa>(&m);
      if (!dfa) {
        err << "error: recognize needs a dfa document, got " << kind_name(m) << "\n";
        return kExitError;
      }
      Machine result = as_kind == "qfac"   ? Machine(dfa_to_qfac_certainty(*dfa))
                       : as_kind == "qcfa" ? Machine(dfa_to_qcfa_certainty(*dfa))
                                           : Machine(dfa_to_mo1g(*dfa));
      emit(result, out_path, out);
      return kExitOk;
    }
    if (bound->parsed()) {
      out << equiv_bound(load_machine(file), load_machine(file2)) << "\n";
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  err << app.help();
  return kExitError;
}

}  // namespace qfa
