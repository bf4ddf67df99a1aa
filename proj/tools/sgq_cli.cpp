// Copyright 2026 the sgq developers
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

// Command-line front end.  Deliberately a thin client of the C API in
// <sgq.h>: every computation happens behind the shared-library boundary,
// this file only parses flags, reads files and maps statuses to exit codes.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sgq.h"

namespace {

struct StringFree {
  void operator()(char* s) const { sgq_string_free(s); }
};
using CStr = std::unique_ptr<char, StringFree>;

struct SemigroupFree {
  void operator()(sgq_semigroup* s) const { sgq_semigroup_free(s); }
};
struct TablesFree {
  void operator()(sgq_table_set* t) const { sgq_table_set_free(t); }
};
struct QuiverFree {
  void operator()(sgq_quiver* q) const { sgq_quiver_free(q); }
};
using Semigroup = std::unique_ptr<sgq_semigroup, SemigroupFree>;
using Tables = std::unique_ptr<sgq_table_set, TablesFree>;
using Quiver = std::unique_ptr<sgq_quiver, QuiverFree>;

int fail(sgq_status st, char* error) {
  CStr msg(error);
  std::cerr << "error: " << (msg ? msg.get() : "unknown") << "\n";
  return static_cast<int>(st);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open file '" << path << "'\n";
    std::exit(1);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// --char-table entries for quiver/cartan are "INDEX=FILE"; a bare FILE is
// only meaningful for commands with a single relevant group.
bool split_keyed(const std::string& arg, int* key, std::string* path) {
  auto eq = arg.find('=');
  if (eq == std::string::npos) return false;
  try {
    size_t used = 0;
    int k = std::stoi(arg.substr(0, eq), &used);
    if (used != eq) return false;
    *key = k;
  } catch (...) {
    return false;
  }
  *path = arg.substr(eq + 1);
  return true;
}

int load_keyed_tables(const std::vector<std::string>& args,
                      const sgq_semigroup* s, Tables* out) {
  sgq_table_set* raw = nullptr;
  sgq_status st = sgq_table_set_new(&raw);
  if (st != SGQ_OK) return fail(st, nullptr);
  out->reset(raw);
  for (const auto& a : args) {
    int key = -1;
    std::string path;
    if (!split_keyed(a, &key, &path)) {
      std::cerr << "error: --char-table expects INDEX=FILE, got '" << a << "'\n";
      return 1;
    }
    std::string text = slurp(path);
    char* err = nullptr;
    st = sgq_table_set_add(out->get(), s, key, text.c_str(), &err);
    if (st != SGQ_OK) return fail(st, err);
  }
  return 0;
}

int render_quiver(const sgq_quiver* q, const std::string& format) {
  char* text = nullptr;
  char* err = nullptr;
  sgq_status st = sgq_quiver_render(q, format.c_str(), &text, &err);
  if (st != SGQ_OK) return fail(st, err);
  CStr holder(text);
  std::cout << holder.get();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"invariants of finite regular semigroup algebras"};
  app.require_subcommand(1);
  app.fallthrough();  // allow global flags after the subcommand
  long cap = 0;
  app.add_option("--cap", cap, "element cap for generator enumeration");

  std::string input, format = "text", generators, groupTable, mode = "both";
  std::vector<std::string> charTables;
  bool oracle = false;
  int n = 0;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", input, "semigroup JSON file")->required();
  };

  CLI::App* cAnalyze = app.add_subcommand("analyze", "Green structure, ideals, poset");
  add_input(cAnalyze);
  cAnalyze->add_option("--format", format, "text|json");

  CLI::App* cDirected = app.add_subcommand("directed", "sandwich-matrix left invertibility");
  add_input(cDirected);
  cDirected->add_option("--format", format, "text|json");

  CLI::App* cQuiver = app.add_subcommand("quiver", "quiver of an RRBG monoid algebra");
  add_input(cQuiver);
  cQuiver->add_option("--char-table", charTables, "INDEX=FILE, repeatable");
  cQuiver->add_option("--format", format, "dot|json|text");
  cQuiver->add_flag("--oracle", oracle, "cross-check abelian pairs");

  CLI::App* cCartan = app.add_subcommand("cartan", "Cartan matrix (closed form)");
  add_input(cCartan);
  cCartan->add_option("--char-table", charTables, "INDEX=FILE, repeatable");
  cCartan->add_option("--format", format, "json|text");
  cCartan->add_flag("--oracle", oracle, "check against the multiplicity formula");

  CLI::App* cNico = app.add_subcommand("nico", "sigma values and the global dimension bound");
  add_input(cNico);
  cNico->add_option("--format", format, "text|json");

  CLI::App* cHsiao = app.add_subcommand("hsiao", "quiver of the ordered G-partition monoid");
  cHsiao->add_option("--n", n, "number of points")->required();
  cHsiao->add_option("--group-table", groupTable, "group multiplication table JSON");
  cHsiao->add_option("--char-table", charTables, "character table of the group");
  cHsiao->add_option("--mode", mode, "closed|general|both");
  cHsiao->add_option("--format", format, "dot|json|text");
  cHsiao->add_flag("--oracle", oracle, "cross-check abelian pairs");

  CLI::App* cGbar = app.add_subcommand("gbar", "quiver of a permutation group with constants");
  cGbar->add_option("--generators", generators, "generator JSON file")->required();
  cGbar->add_option("--char-table", charTables, "character table of the group");
  cGbar->add_flag("--oracle", oracle, "also run the general algorithm and compare");
  cGbar->add_option("--format", format, "dot|json|text");

  CLI::App* cClassify = app.add_subcommand("classify", "representation type by permutation rank");
  cClassify->add_option("--generators", generators, "generator JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;  // flag/usage problems are input errors
  }

  sgq_status st = SGQ_OK;
  char* err = nullptr;

  auto parse_input = [&](Semigroup* out) {
    std::string text = slurp(input);
    sgq_semigroup* raw = nullptr;
    st = sgq_semigroup_parse(text.c_str(), cap, &raw, &err);
    if (st != SGQ_OK) return fail(st, err);
    out->reset(raw);
    return 0;
  };

  if (app.got_subcommand(cAnalyze) || app.got_subcommand(cNico)) {
    Semigroup s;
    if (int rc = parse_input(&s)) return rc;
    char* text = nullptr;
    st = app.got_subcommand(cAnalyze)
             ? sgq_analyze_report(s.get(), format == "json", &text, &err)
             : sgq_nico_report(s.get(), format == "json", &text, &err);
    if (st != SGQ_OK) return fail(st, err);
    CStr holder(text);
    std::cout << holder.get();
    return 0;
  }

  if (app.got_subcommand(cDirected)) {
    Semigroup s;
    if (int rc = parse_input(&s)) return rc;
    char* text = nullptr;
    int directed = 0;
    st = sgq_directed_report(s.get(), format == "json", &directed, &text, &err);
    if (st != SGQ_OK) return fail(st, err);
    CStr holder(text);
    std::cout << holder.get();
    return 0;  // "not directed" is a finding, not an error
  }

  if (app.got_subcommand(cQuiver)) {
    Semigroup s;
    if (int rc = parse_input(&s)) return rc;
    Tables t;
    if (int rc = load_keyed_tables(charTables, s.get(), &t)) return rc;
    sgq_quiver* raw = nullptr;
    st = sgq_quiver_compute(s.get(), t.get(), oracle, &raw, &err);
    if (st != SGQ_OK) return fail(st, err);
    Quiver q(raw);
    if (oracle) std::cerr << "oracle agrees\n";
    return render_quiver(q.get(), format);
  }

  if (app.got_subcommand(cCartan)) {
    Semigroup s;
    if (int rc = parse_input(&s)) return rc;
    Tables t;
    if (int rc = load_keyed_tables(charTables, s.get(), &t)) return rc;
    char* text = nullptr;
    st = sgq_cartan_report(s.get(), t.get(), oracle, format == "json", &text, &err);
    if (st != SGQ_OK) return fail(st, err);
    CStr holder(text);
    std::cout << holder.get();
    return 0;
  }

  if (app.got_subcommand(cHsiao)) {
    std::string groupJson, tableJson;
    const char* groupPtr = nullptr;
    const char* tablePtr = nullptr;
    if (!groupTable.empty()) {
      groupJson = slurp(groupTable);
      groupPtr = groupJson.c_str();
    }
    if (!charTables.empty()) {
      tableJson = slurp(charTables.front());
      tablePtr = tableJson.c_str();
    }
    Quiver closed, general;
    if (mode == "closed" || mode == "both") {
      sgq_quiver* raw = nullptr;
      st = sgq_hsiao_quiver_closed(n, groupPtr, tablePtr, &raw, &err);
      if (st != SGQ_OK) return fail(st, err);
      closed.reset(raw);
    }
    if (mode == "general" || mode == "both") {
      sgq_semigroup* sraw = nullptr;
      sgq_table_set* traw = nullptr;
      st = sgq_hsiao_build(n, groupPtr, tablePtr, cap, &sraw, &traw, &err);
      if (st != SGQ_OK) return fail(st, err);
      Semigroup s(sraw);
      Tables t(traw);
      sgq_quiver* raw = nullptr;
      st = sgq_quiver_compute(s.get(), t.get(), oracle, &raw, &err);
      if (st != SGQ_OK) return fail(st, err);
      general.reset(raw);
      if (oracle) std::cerr << "oracle agrees\n";
    }
    if (mode == "both") {
      int equal = 0;
      st = sgq_quiver_equal(closed.get(), general.get(), &equal);
      if (st != SGQ_OK) return fail(st, err);
      if (!equal) {
        std::cerr << "error: closed-form and general quivers disagree\n";
        return 3;
      }
      std::cerr << "closed form agrees with the general algorithm\n";
    }
    if (mode != "closed" && mode != "general" && mode != "both") {
      std::cerr << "error: --mode must be closed|general|both\n";
      return 1;
    }
    return render_quiver(closed ? closed.get() : general.get(), format);
  }

  if (app.got_subcommand(cGbar)) {
    std::string gens = slurp(generators);
    std::string tableJson;
    const char* tablePtr = nullptr;
    if (!charTables.empty()) {
      tableJson = slurp(charTables.front());
      tablePtr = tableJson.c_str();
    }
    sgq_quiver* raw = nullptr;
    st = sgq_gbar_quiver_closed(gens.c_str(), tablePtr, cap, &raw, &err);
    if (st != SGQ_OK) return fail(st, err);
    Quiver closed(raw);
    if (oracle) {
      sgq_semigroup* sraw = nullptr;
      sgq_table_set* traw = nullptr;
      st = sgq_gbar_build(gens.c_str(), tablePtr, cap, &sraw, &traw, &err);
      if (st != SGQ_OK) return fail(st, err);
      Semigroup s(sraw);
      Tables t(traw);
      sgq_quiver* graw = nullptr;
      st = sgq_quiver_compute(s.get(), t.get(), 1, &graw, &err);
      if (st != SGQ_OK) return fail(st, err);
      Quiver general(graw);
      int equal = 0;
      sgq_quiver_equal(closed.get(), general.get(), &equal);
      if (!equal) {
        std::cerr << "error: closed-form and general quivers disagree\n";
        return 3;
      }
      std::cerr << "oracle agrees\n";
    }
    return render_quiver(closed.get(), format);
  }

  if (app.got_subcommand(cClassify)) {
    std::string gens = slurp(generators);
    char* text = nullptr;
    st = sgq_classify_report(gens.c_str(), cap, &text, &err);
    if (st != SGQ_OK) return fail(st, err);
    CStr holder(text);
    std::cout << holder.get();
    return 0;
  }

  return 0;
}
