// Copyright 2026 The Dressian Authors.
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


// Command-line front end. It talks to the library only through the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "dressian/dressian.h"

namespace {

using Json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kFormatError = 2;

struct Failure {
  int code;
};

int exit_code(dr_status s) {
  return s == DR_ERR_PARSE ? kFormatError : kMathFailure;
}

[[noreturn]] void die(dr_status s) {
  std::cerr << "error: " << dr_status_name(s);
  if (*dr_last_error() != '\0') std::cerr << ": " << dr_last_error();
  std::cerr << "\n";
  throw Failure{exit_code(s)};
}

void check(dr_status s) {
  if (s != DR_OK) die(s);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Failure{kFormatError};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Takes ownership of a string returned by the library.
std::string take(char* text) {
  std::string out(text);
  dr_string_free(text);
  return out;
}

struct WeightDeleter {
  void operator()(dr_weight* w) const { dr_weight_free(w); }
};
struct ArrangementDeleter {
  void operator()(dr_arrangement* a) const { dr_arrangement_free(a); }
};
using WeightPtr = std::unique_ptr<dr_weight, WeightDeleter>;
using ArrangementPtr = std::unique_ptr<dr_arrangement, ArrangementDeleter>;

WeightPtr load_weight(const std::string& path) {
  dr_weight* w = nullptr;
  check(dr_weight_from_json(read_file(path).c_str(), &w));
  return WeightPtr(w);
}

ArrangementPtr load_arrangement(const std::string& path) {
  dr_arrangement* a = nullptr;
  check(dr_arrangement_from_json(read_file(path).c_str(), &a));
  return ArrangementPtr(a);
}

std::string subset_list(const Json& subsets) {
  std::string out = "{";
  bool first = true;
  for (const auto& s : subsets) {
    if (!first) out += ", ";
    first = false;
    for (const auto& x : s) out += std::to_string(x.get<int>());
  }
  return out + "}";
}

int cmd_check(const std::string& path, bool json) {
  auto w = load_weight(path);
  char* out = nullptr;
  check(dr_check(w.get(), &out));
  const Json report = Json::parse(take(out));
  if (json) {
    std::cout << report.dump(2) << "\n";
  } else if (report["member"].get<bool>()) {
    std::cout << "in Dressian\n"
              << "relations: " << report["relations"] << "\n"
              << "signature: " << report["signature"].get<std::string>() << "\n";
  } else {
    std::cout << "not in Dressian\n"
              << "relations: " << report["relations"] << "\n"
              << "failing relation: " << report["failing"]["relation"].get<std::string>()
              << " with term values";
    for (const auto& v : report["failing"]["values"]) std::cout << " " << v.get<std::string>();
    std::cout << "\n";
  }
  return report["member"].get<bool>() ? kOk : kMathFailure;
}

int cmd_subdivide(const std::string& path, bool certify) {
  auto w = load_weight(path);
  char* out = nullptr;
  check(dr_subdivide(w.get(), certify ? 1 : 0, &out));
  const Json doc = Json::parse(take(out));
  std::cout << doc.dump(2) << "\n";
  if (certify && !doc["all_matroidal"].get<bool>()) return kMathFailure;
  return kOk;
}

int cmd_arrange(const std::string& path) {
  auto w = load_weight(path);
  char* out = nullptr;
  check(dr_arrange(w.get(), &out));
  std::cout << take(out) << "\n";
  return kOk;
}

int cmd_pi(const std::string& path) {
  auto a = load_arrangement(path);
  char* out = nullptr;
  check(dr_pi(a.get(), &out));
  std::cout << take(out) << "\n";
  return kOk;
}

int cmd_metrize(const std::string& path) {
  auto a = load_arrangement(path);
  char* out = nullptr;
  const dr_status s = dr_metrize(a.get(), &out);
  if (s == DR_ERR_INFEASIBLE) {
    std::cout << "infeasible\n";
    return kMathFailure;
  }
  check(s);
  std::cout << take(out) << "\n";
  return kOk;
}

int cmd_adjacent(const std::string& path) {
  auto w = load_weight(path);
  char* out = nullptr;
  check(dr_adjacent(w.get(), &out));
  std::cout << take(out) << "\n";
  return kOk;
}

int cmd_compare(const std::string& a_path, const std::string& b_path, bool json) {
  auto a = load_arrangement(a_path);
  auto b = load_arrangement(b_path);
  char* out = nullptr;
  check(dr_compare(a.get(), b.get(), &out));
  const Json diff = Json::parse(take(out));
  if (json) {
    std::cout << diff.dump(2) << "\n";
  } else {
    const auto relation = diff["relation"].get<std::string>();
    std::cout << relation;
    if (relation != "identical") {
      std::cout << "(D=" << (diff["differing"].empty() ? "{}" : "");
      bool first = true;
      for (const auto& index : diff["differing"]) {
        std::cout << (first ? "" : ", ") << "{";
        first = false;
        bool f2 = true;
        for (const auto& x : index) {
          std::cout << (f2 ? "" : ",") << x.get<int>();
          f2 = false;
        }
        std::cout << "}";
      }
      std::cout << ")";
    }
    std::cout << "\n";
  }
  return kOk;
}

int cmd_cherries(const std::string& path) {
  auto a = load_arrangement(path);
  char* out = nullptr;
  check(dr_cherries(a.get(), &out));
  std::cout << subset_list(Json::parse(take(out))) << "\n";
  return kOk;
}

int cmd_ingest(const std::string& path) {
  char* out = nullptr;
  int all = 0;
  check(dr_ingest_fan(read_file(path).c_str(), &out, &all));
  std::cout << take(out) << "\n";
  return all ? kOk : kMathFailure;
}

int cmd_verify(unsigned long long seed, bool details) {
  char* out = nullptr;
  int all = 0;
  check(dr_verify_fixtures(seed, &out, &all));
  const Json report = Json::parse(take(out));
  for (const auto& c : report["criteria"]) {
    std::cout << c["summary"].get<std::string>() << "\n";
    if (details) {
      for (const auto& d : c["details"]) std::cout << "    " << d.get<std::string>() << "\n";
    }
  }
  return all ? kOk : kMathFailure;
}

int cmd_fixture(const std::string& name, bool list) {
  char* out = nullptr;
  if (list || name.empty()) {
    check(dr_fixture_names(&out));
    for (const auto& n : Json::parse(take(out))) std::cout << n.get<std::string>() << "\n";
    return kOk;
  }
  check(dr_fixture_json(name.c_str(), &out));
  std::cout << take(out) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dressians, matroid subdivisions and tree arrangements"};
  app.require_subcommand(1);

  std::string file, file_b, name;
  bool json = false, certify = false, list = false, details = false;
  unsigned long long seed = 20260419ULL;

  auto* check_cmd = app.add_subcommand("check", "Dressian membership and cone signature");
  check_cmd->add_option("weight", file, "weight document")->required();
  check_cmd->add_flag("--json", json, "print the full report as JSON");

  auto* subdivide = app.add_subcommand("subdivide", "maximal cells of the regular subdivision");
  subdivide->add_option("weight", file, "weight document")->required();
  subdivide->add_flag("--certify-matroidal", certify, "check basis exchange on every cell");

  auto* arrange = app.add_subcommand("arrange", "tree arrangement of a Dressian point");
  arrange->add_option("weight", file, "weight document")->required();

  auto* pi = app.add_subcommand("pi", "weight of a compatible metric arrangement");
  pi->add_option("arrangement", file, "arrangement document")->required();

  auto* metrize = app.add_subcommand("metrize", "edge lengths for an abstract arrangement");
  metrize->add_option("arrangement", file, "arrangement document")->required();

  auto* adjacent = app.add_subcommand("adjacent", "maximal cones across each facet");
  adjacent->add_option("weight", file, "weight document")->required();

  auto* compare = app.add_subcommand("compare", "generalized Whitehead comparison");
  compare->add_option("first", file, "arrangement document")->required();
  compare->add_option("second", file_b, "arrangement document")->required();
  compare->add_flag("--json", json, "print the result as JSON");

  auto* cherries = app.add_subcommand("cherries", "cherries of an arrangement");
  cherries->add_option("arrangement", file, "arrangement document")->required();

  auto* ingest = app.add_subcommand("ingest-fan", "interior points and arrangements of fan cones");
  ingest->add_option("fan", file, "fan document")->required();

  auto* verify = app.add_subcommand("verify-fixtures", "run the acceptance criteria");
  verify->add_option("--seed", seed, "seed for the property suites");
  verify->add_flag("--details", details, "print the evidence behind each verdict");

  auto* fixture = app.add_subcommand("fixture", "print a bundled reference document");
  fixture->add_option("name", name, "fixture name");
  fixture->add_flag("--list", list, "list the fixture names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kFormatError;
  }

  try {
    if (*check_cmd) return cmd_check(file, json);
    if (*subdivide) return cmd_subdivide(file, certify);
    if (*arrange) return cmd_arrange(file);
    if (*pi) return cmd_pi(file);
    if (*metrize) return cmd_metrize(file);
    if (*adjacent) return cmd_adjacent(file);
    if (*compare) return cmd_compare(file, file_b, json);
    if (*cherries) return cmd_cherries(file);
    if (*ingest) return cmd_ingest(file);
    if (*verify) return cmd_verify(seed, details);
    if (*fixture) return cmd_fixture(name, list);
  } catch (const Failure& f) {
    return f.code;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: unexpected library output: " << e.what() << "\n";
    return kMathFailure;
  }
  return kOk;
}
