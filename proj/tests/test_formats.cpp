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


#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "qfa/formats.hpp"
#include "qfa/random.hpp"
#include "qfa/transforms.hpp"

using namespace qfa;
using namespace qfa::testing;

namespace {

std::string read_file(const std::string& name) {
  std::ifstream in(kDataDir + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ParseError parse_error_of(const std::string& text) {
  try {
    parse_machine(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", "");
}

const char* kFixtures[] = {"dfa_even.json", "had_cl.json", "had_cl_converted.json",
                           "coin_qcfa.json"};

}  // namespace

TEST_CASE("fixture documents") {
  Machine even = load_machine(kDataDir + "/dfa_even.json");
  REQUIRE(std::holds_alternative<Dfa>(even));
  CHECK(std::get<Dfa>(even).num_states() == 2);
  CHECK(std::get<Dfa>(even) == dfa_even());

  Machine had = load_machine(kDataDir + "/had_cl.json");
  REQUIRE(std::holds_alternative<Cl1Qfa>(had));
  CHECK(isometry_residual(std::get<Cl1Qfa>(had).unitary(0)) < kTol);
  CHECK(std::abs(accept_prob(had, w("aa")) - 0.5) < 1e-12);

  Machine coin = load_machine(kDataDir + "/coin_qcfa.json");
  CHECK(std::abs(accept_prob(coin, w("a")) - 0.5) < 1e-12);
}

TEST_CASE("semantic errors name the field") {
  auto e = parse_error_of(read_file("nontotal.json"));
  CHECK(e.path() == "delta");
  CHECK(e.line() == 0);
  CHECK(std::string(e.what()).find("(s2, b)") != std::string::npos);

  auto unknown = parse_error_of(R"({"kind": "dfa", "version": 1, "states": ["s"], "alphabet": ["a"],
    "initial": "s", "accepting": [], "delta": {"s|a": "s"}, "colour": "red"})");
  CHECK(unknown.path() == "colour");

  auto label = parse_error_of(R"({"kind": "dfa", "version": 1, "states": ["s"], "alphabet": ["a"],
    "initial": "t", "accepting": [], "delta": {"s|a": "s"}})");
  CHECK(label.path() == "initial");
  CHECK(std::string(label.what()).find("unknown state 't'") != std::string::npos);

  auto version = parse_error_of(R"({"kind": "dfa", "version": 2})");
  CHECK(version.path() == "version");
  auto missing = parse_error_of(R"({"kind": "dfa"})");
  CHECK(missing.path() == "version");
  auto kind = parse_error_of(R"({"kind": "nfa", "version": 1})");
  CHECK(kind.path() == "kind");

  auto shape = parse_error_of(R"({"kind": "mo1g", "version": 1, "states": ["p", "q"],
    "alphabet": ["a"], "initial": "p", "operations": {"a": [[[[1, 0]]]]}, "accepting": []})");
  CHECK(shape.path() == "operations.a[0]");

  auto scalar = parse_error_of(R"({"kind": "mo1g", "version": 1, "states": ["p"],
    "alphabet": ["a"], "initial": "p", "operations": {"a": [[[[1, 0, 0]]]]}, "accepting": []})");
  CHECK(scalar.path() == "operations.a[0][0][0]");
}

TEST_CASE("syntax errors carry line and column") {
  auto e = parse_error_of("{\n  \"kind\": \"dfa\",\n  \"version\": 1,,\n}");
  CHECK(e.line() == 3);
  CHECK(e.column() == 16);
  CHECK(std::string(e.what()).rfind("line 3, column 16: ", 0) == 0);
  CHECK_THROWS_AS(parse_machine("[1e999]"), ParseError);
}

TEST_CASE("invalid machines parse only without validation") {
  const std::string text = read_file("broken.json");
  CHECK_THROWS_AS(parse_machine(text), ValidationError);
  Machine m = parse_machine_unchecked(text);
  CHECK(validate_machine(m).size() == 3);
}

TEST_CASE("accepting set shorthand for MO-1gQFA") {
  Machine m = parse_machine(R"({"kind": "mo1g", "version": 1, "states": ["p", "q"],
    "alphabet": ["a"], "initial": "p",
    "operations": {"a": [[[[0, 0], [1, 0]], [[1, 0], [0, 0]]]]}, "accepting": ["q"]})");
  CHECK(accept_prob(m, w("a")) == 1.0);
  auto again = parse_machine(serialize_machine(m));
  CHECK(std::get<Mo1gQfa>(again) == std::get<Mo1gQfa>(m));
  CHECK_THROWS_AS(parse_machine(R"({"kind": "mo1g", "version": 1, "states": ["p"],
    "alphabet": ["a"], "initial": "p", "operations": {"a": [[[[1, 0]]]]}})"),
                  ParseError);
}

TEST_CASE("round trip on fixtures") {
  for (const char* name : kFixtures) {
    INFO(name);
    Machine m = load_machine(kDataDir + "/" + name);
    const std::string text = serialize_machine(m);
    CHECK(parse_machine(text) == m);
    CHECK(serialize_machine(parse_machine(text)) == text);
    CHECK(serialize_machine(m) == text);
  }
}

TEST_CASE("round trip on random machines of every kind") {
  gen::Rng rng(71);
  for (const char* kind : {"dfa", "mo1g", "cl1qfa", "qfac", "qcfa", "ancilla", "qsm"}) {
    for (int trial = 0; trial < 20; ++trial) {
      Machine m = gen::machine(rng, kind);
      const std::string text = serialize_machine(m);
      Machine back = parse_machine(text);
      CHECK(back == m);
      CHECK(serialize_machine(back) == text);
    }
  }
}

TEST_CASE("serialized conversions reparse and validate") {
  Machine image = dfa_to_mo1g(dfa_even());
  CHECK(parse_machine(serialize_machine(image)) == image);
  gen::Rng rng(72);
  for (const char* kind : {"dfa", "cl1qfa", "qfac", "qcfa", "ancilla"}) {
    Machine m = to_mo1g(gen::machine(rng, kind));
    CHECK_NOTHROW(parse_machine(serialize_machine(m)));
  }
  Machine q = cl1qfa_to_qcfa(had_cl());
  CHECK(parse_machine(serialize_machine(q)) == q);
}

TEST_CASE("canonical layout") {
  const std::string text = serialize_machine(Machine(dfa_even()));
  CHECK(text ==
        "{\n"
        "  \"accepting\": [\"s1\"],\n"
        "  \"alphabet\": [\"a\"],\n"
        "  \"delta\": {\n"
        "    \"s1|a\": \"s2\",\n"
        "    \"s2|a\": \"s1\"\n"
        "  },\n"
        "  \"initial\": \"s1\",\n"
        "  \"kind\": \"dfa\",\n"
        "  \"states\": [\"s1\", \"s2\"],\n"
        "  \"version\": 1\n"
        "}\n");
  const std::string had = serialize_machine(Machine(had_cl()));
  CHECK(had.find("[[0.70710678118654746, 0], [0.70710678118654746, 0]]") != std::string::npos);
}
