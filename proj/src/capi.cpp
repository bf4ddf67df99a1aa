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

#include "sgq.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <sstream>

#include "sgq/io.hpp"

struct sgq_semigroup {
  sgq::Analysis A;
  // Populated by the guided builders so quiver computation can reuse
  // construction-aware tables and labels.
  std::optional<sgq::HsiaoSemigroup> hsiao;
};

struct sgq_table_set {
  sgq::TableMap tables;
  bool bare_display = false;  // set by builders with self-describing labels
};

struct sgq_quiver {
  sgq::QuiverGraph q;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** error, const std::string& msg) {
  if (error) *error = dup_string(msg);
}

template <typename F>
sgq_status guarded(char** error, F&& f) {
  try {
    f();
    return SGQ_OK;
  } catch (const sgq::InputError& e) {
    set_error(error, e.what());
    return SGQ_ERROR_INPUT;
  } catch (const sgq::PreconditionError& e) {
    set_error(error, e.what());
    return SGQ_ERROR_PRECONDITION;
  } catch (const sgq::InternalError& e) {
    set_error(error, e.what());
    return SGQ_ERROR_INTERNAL;
  } catch (const std::exception& e) {
    set_error(error, std::string("unexpected error: ") + e.what());
    return SGQ_ERROR_INPUT;
  }
}

size_t effective_cap(long element_cap) {
  return element_cap > 0 ? static_cast<size_t>(element_cap)
                         : sgq::kDefaultElementCap;
}

// The base group of the labelled-partition constructions: an explicit
// semigroup file, or the trivial group when none is given.
sgq::FiniteSemigroup base_group_from_json(const char* group_json, size_t cap) {
  if (group_json == nullptr) {
    sgq::FiniteSemigroup triv;
    triv.order = 1;
    triv.table = {0};
    triv.identity = 0;
    return triv;
  }
  sgq::FiniteSemigroup G = sgq::parse_semigroup_json(group_json, cap);
  if (!sgq::passes_group_axioms(G))
    throw sgq::InputError("the supplied group file is not a group");
  return G;
}

sgq::Subsemigroup whole_as_subsemigroup(const sgq::FiniteSemigroup& G) {
  sgq::Subsemigroup sub;
  sub.sg = G;
  sub.ambient.resize(G.order);
  sub.local.resize(G.order);
  for (int i = 0; i < G.order; ++i) sub.ambient[i] = sub.local[i] = i;
  return sub;
}

sgq::CharacterTable base_table(const sgq::FiniteSemigroup& G,
                               const char* group_table_json) {
  sgq::Subsemigroup sub = whole_as_subsemigroup(G);
  if (group_table_json) return sgq::parse_character_table_json(group_table_json, sub);
  return sgq::builtin_table_for(sub);
}

}  // namespace

extern "C" {

void sgq_string_free(char* s) { std::free(s); }
void sgq_semigroup_free(sgq_semigroup* s) { delete s; }
void sgq_table_set_free(sgq_table_set* t) { delete t; }
void sgq_quiver_free(sgq_quiver* q) { delete q; }

sgq_status sgq_semigroup_parse(const char* json_text, long element_cap,
                               sgq_semigroup** out, char** error) {
  return guarded(error, [&] {
    if (!json_text || !out) throw sgq::InputError("null argument");
    auto S = sgq::parse_semigroup_json(json_text, effective_cap(element_cap));
    *out = new sgq_semigroup{sgq::analyze(std::move(S)), std::nullopt};
  });
}

sgq_status sgq_semigroup_opposite(const sgq_semigroup* s, sgq_semigroup** out,
                                  char** error) {
  return guarded(error, [&] {
    if (!s || !out) throw sgq::InputError("null argument");
    *out = new sgq_semigroup{sgq::analyze(sgq::opposite(s->A.S)), std::nullopt};
  });
}

sgq_status sgq_hsiao_build(int n, const char* group_json,
                           const char* group_table_json, long element_cap,
                           sgq_semigroup** out, sgq_table_set** out_tables,
                           char** error) {
  return guarded(error, [&] {
    if (!out || !out_tables) throw sgq::InputError("null argument");
    size_t cap = effective_cap(element_cap);
    sgq::FiniteSemigroup G = base_group_from_json(group_json, cap);
    sgq::CharacterTable TG = base_table(G, group_table_json);
    sgq::HsiaoSemigroup H = sgq::hsiao_semigroup(n, G, cap);
    auto holder = std::make_unique<sgq_semigroup>();
    holder->A = sgq::analyze(sgq::opposite(H.sg));
    auto tables = std::make_unique<sgq_table_set>();
    tables->tables = sgq::hsiao_tables(H, holder->A, TG);
    tables->bare_display = true;
    holder->hsiao = std::move(H);
    *out = holder.release();
    *out_tables = tables.release();
  });
}

sgq_status sgq_gbar_build(const char* generators_json,
                          const char* char_table_json, long element_cap,
                          sgq_semigroup** out, sgq_table_set** out_tables,
                          char** error) {
  return guarded(error, [&] {
    if (!generators_json || !out || !out_tables)
      throw sgq::InputError("null argument");
    int degree = 0;
    auto gens = sgq::parse_generators_json(generators_json, &degree);
    auto S = sgq::perm_group_with_constants(degree, gens,
                                            effective_cap(element_cap));
    auto holder = std::make_unique<sgq_semigroup>();
    holder->A = sgq::analyze(std::move(S));
    auto tables = std::make_unique<sgq_table_set>();
    if (char_table_json) {
      int top = holder->A.green.jClassOf[*holder->A.S.identity];
      tables->tables.emplace(
          top, sgq::parse_character_table_json(
                   char_table_json, holder->A.jrec[top].maxSubgroup));
    }
    tables->tables = sgq::resolve_tables(holder->A, tables->tables);
    *out = holder.release();
    *out_tables = tables.release();
  });
}

long sgq_semigroup_order(const sgq_semigroup* s) {
  return s ? s->A.S.order : 0;
}

sgq_status sgq_analyze_report(const sgq_semigroup* s, int as_json, char** out,
                              char** error) {
  return guarded(error, [&] {
    if (!s || !out) throw sgq::InputError("null argument");
    *out = dup_string(sgq::analyze_report(s->A, as_json != 0));
  });
}

sgq_status sgq_directed_report(const sgq_semigroup* s, int as_json,
                               int* out_directed, char** out, char** error) {
  return guarded(error, [&] {
    if (!s || !out) throw sgq::InputError("null argument");
    auto rep = sgq::directedness(s->A);
    if (out_directed) *out_directed = rep.directed ? 1 : 0;
    *out = dup_string(sgq::directed_report(s->A, rep, as_json != 0));
  });
}

sgq_status sgq_nico_report(const sgq_semigroup* s, int as_json, char** out,
                           char** error) {
  return guarded(error, [&] {
    if (!s || !out) throw sgq::InputError("null argument");
    auto nd = sgq::nico_bound(s->A);
    *out = dup_string(sgq::nico_report(s->A, nd, as_json != 0));
  });
}

sgq_status sgq_cartan_report(const sgq_semigroup* s, const sgq_table_set* tables,
                             int run_oracle, int as_json, char** out,
                             char** error) {
  return guarded(error, [&] {
    if (!s || !out) throw sgq::InputError("null argument");
    sgq::TableMap user = tables ? tables->tables : sgq::TableMap{};
    auto resolved = sgq::resolve_tables(s->A, user);
    auto cr = sgq::cartan_matrix(s->A, resolved, run_oracle != 0);
    *out = dup_string(sgq::cartan_report(s->A, cr, as_json != 0));
  });
}

sgq_status sgq_classify_report(const char* generators_json, long element_cap,
                               char** out, char** error) {
  return guarded(error, [&] {
    if (!generators_json || !out) throw sgq::InputError("null argument");
    int degree = 0;
    auto gens = sgq::parse_generators_json(generators_json, &degree);
    size_t cap = effective_cap(element_cap);
    int rank = sgq::permutation_rank(degree, gens, cap);
    sgq::RepType t = sgq::representation_type(degree, gens, cap);
    std::ostringstream os;
    os << "rank: " << rank << "\n"
       << "representation type: " << sgq::rep_type_name(t) << "\n";
    *out = dup_string(os.str());
  });
}

sgq_status sgq_table_set_new(sgq_table_set** out) {
  return guarded(nullptr, [&] {
    if (!out) throw sgq::InputError("null argument");
    *out = new sgq_table_set{};
  });
}

sgq_status sgq_table_set_add(sgq_table_set* t, const sgq_semigroup* s,
                             int jclass, const char* table_json, char** error) {
  return guarded(error, [&] {
    if (!t || !s || !table_json) throw sgq::InputError("null argument");
    if (jclass < 0 || jclass >= s->A.green.nJ())
      throw sgq::InputError("J-class index out of range");
    if (!s->A.jrec[jclass].regular)
      throw sgq::InputError("J-class " + std::to_string(jclass) +
                            " is not regular");
    t->tables.insert_or_assign(
        jclass, sgq::parse_character_table_json(
                    table_json, s->A.jrec[jclass].maxSubgroup));
  });
}

sgq_status sgq_quiver_compute(const sgq_semigroup* s, const sgq_table_set* tables,
                              int run_oracle, sgq_quiver** out, char** error) {
  return guarded(error, [&] {
    if (!s || !out) throw sgq::InputError("null argument");
    sgq::TableMap user = tables ? tables->tables : sgq::TableMap{};
    auto resolved = sgq::resolve_tables(s->A, user);
    sgq::QuiverOptions opt;
    opt.run_oracle = run_oracle != 0;
    opt.bare_display = tables && tables->bare_display;
    *out = new sgq_quiver{sgq::full_quiver(s->A, resolved, opt)};
  });
}

sgq_status sgq_hsiao_quiver_closed(int n, const char* group_json,
                                   const char* group_table_json,
                                   sgq_quiver** out, char** error) {
  return guarded(error, [&] {
    if (!out) throw sgq::InputError("null argument");
    sgq::FiniteSemigroup G = base_group_from_json(group_json, sgq::kDefaultElementCap);
    sgq::CharacterTable TG = base_table(G, group_table_json);
    *out = new sgq_quiver{sgq::hsiao_quiver_closed_form(n, TG)};
  });
}

sgq_status sgq_gbar_quiver_closed(const char* generators_json,
                                  const char* char_table_json, long element_cap,
                                  sgq_quiver** out, char** error) {
  return guarded(error, [&] {
    if (!generators_json || !out) throw sgq::InputError("null argument");
    sgq_semigroup* s = nullptr;
    sgq_table_set* t = nullptr;
    char* err = nullptr;
    sgq_status st = sgq_gbar_build(generators_json, char_table_json, element_cap,
                                   &s, &t, &err);
    if (st != SGQ_OK) {
      std::string msg = err ? err : "gbar construction failed";
      sgq_string_free(err);
      if (st == SGQ_ERROR_PRECONDITION) throw sgq::PreconditionError(msg);
      if (st == SGQ_ERROR_INTERNAL) throw sgq::InternalError(msg);
      throw sgq::InputError(msg);
    }
    std::unique_ptr<sgq_semigroup> sp(s);
    std::unique_ptr<sgq_table_set> tp(t);
    *out = new sgq_quiver{sgq::gbar_quiver(sp->A, tp->tables)};
  });
}

sgq_status sgq_quiver_equal(const sgq_quiver* a, const sgq_quiver* b,
                            int* out_equal) {
  return guarded(nullptr, [&] {
    if (!a || !b || !out_equal) throw sgq::InputError("null argument");
    *out_equal = sgq::quiver_equal(a->q, b->q) ? 1 : 0;
  });
}

long sgq_quiver_vertex_count(const sgq_quiver* q) {
  return q ? static_cast<long>(q->q.vertices.size()) : 0;
}

long sgq_quiver_arrow_count(const sgq_quiver* q) {
  return q ? q->q.total_arrows() : 0;
}

sgq_status sgq_quiver_render(const sgq_quiver* q, const char* format, char** out,
                             char** error) {
  return guarded(error, [&] {
    if (!q || !format || !out) throw sgq::InputError("null argument");
    std::string f = format;
    if (f == "json")
      *out = dup_string(sgq::quiver_to_json(q->q));
    else if (f == "dot")
      *out = dup_string(sgq::quiver_to_dot(q->q));
    else if (f == "text")
      *out = dup_string(sgq::quiver_to_text(q->q));
    else
      throw sgq::InputError("unknown format '" + f + "' (json|dot|text)");
  });
}

}  // extern "C"
