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

#include "sgq/io.hpp"

#include <sstream>

#include "json.hpp"

namespace sgq {

namespace {

using ordered_json = nlohmann::ordered_json;

nlohmann::json parse_or_throw(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON input");
  return j;
}

}  // namespace

FiniteSemigroup parse_semigroup_json(const std::string& text, size_t element_cap) {
  nlohmann::json j = parse_or_throw(text);
  if (!j.is_object()) throw InputError("semigroup file must be a JSON object");

  if (j.contains("generators")) {
    const auto& g = j["generators"];
    if (!g.is_object() || !g.contains("degree") || !g.contains("maps"))
      throw InputError("field 'generators' needs 'degree' and 'maps'");
    int degree = g["degree"].get<int>();
    std::vector<std::vector<int>> maps;
    for (const auto& m : g["maps"]) maps.push_back(m.get<std::vector<int>>());
    bool adjoin = j.value("adjoin_identity", false);
    return enumerate_from_generators(degree, maps, adjoin, element_cap);
  }

  if (!j.contains("order") || !j.contains("table"))
    throw InputError("semigroup file needs 'order' and 'table' (or 'generators')");
  int order = j["order"].get<int>();
  std::vector<int> table;
  for (const auto& row : j["table"]) {
    auto r = row.get<std::vector<int>>();
    if (r.size() != static_cast<size_t>(order))
      throw InputError("field 'table' has a row of wrong length");
    table.insert(table.end(), r.begin(), r.end());
  }
  std::optional<int> identity;
  if (j.contains("identity") && !j["identity"].is_null())
    identity = j["identity"].get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels") && !j["labels"].is_null())
    labels = j["labels"].get<std::vector<std::string>>();
  return make_semigroup(order, std::move(table), identity, std::move(labels));
}

std::vector<std::vector<int>> parse_generators_json(const std::string& text,
                                                    int* degree) {
  nlohmann::json j = parse_or_throw(text);
  if (!j.is_object() || !j.contains("degree") || !j.contains("maps"))
    throw InputError("generator file needs 'degree' and 'maps'");
  *degree = j["degree"].get<int>();
  std::vector<std::vector<int>> maps;
  for (const auto& m : j["maps"]) maps.push_back(m.get<std::vector<int>>());
  return maps;
}

CharacterTable parse_character_table_json(const std::string& text,
                                          const Subsemigroup& G) {
  nlohmann::json j = parse_or_throw(text);
  for (const char* key : {"group_order", "conductor", "classes", "irreducibles"})
    if (!j.contains(key))
      throw InputError(std::string("character table file needs field '") + key + "'");
  if (j["group_order"].get<int>() != G.sg.order)
    throw InputError("field 'group_order' does not match the group (" +
                     std::to_string(G.sg.order) + " elements)");
  unsigned conductor = j["conductor"].get<unsigned>();
  if (conductor == 0) throw InputError("field 'conductor' must be positive");

  ConjugacyClasses internal = conjugacy_classes(G.sg);
  CharacterTable T;
  T.group = G;
  T.conductor = conductor;

  std::vector<bool> used(internal.classes.size(), false);
  for (const auto& c : j["classes"]) {
    int rep = c.at("rep").get<int>();
    long size = c.at("size").get<long>();
    if (rep < 0 || rep >= G.sg.order)
      throw InputError("class representative out of range");
    int ic = internal.classOf[rep];
    if (used[ic]) throw InputError("two file classes name the same conjugacy class");
    used[ic] = true;
    if (static_cast<long>(internal.classes[ic].size()) != size)
      throw InputError("class of element " + std::to_string(rep) +
                       " has size " + std::to_string(internal.classes[ic].size()) +
                       ", file says " + std::to_string(size));
    T.classes.classes.push_back(internal.classes[ic]);
    T.classes.representatives.push_back(internal.classes[ic].front());
  }
  for (bool u : used)
    if (!u) throw InputError("file omits a conjugacy class");
  T.classes.classOf.assign(G.sg.order, -1);
  for (size_t c = 0; c < T.classes.classes.size(); ++c)
    for (int m : T.classes.classes[c]) T.classes.classOf[m] = static_cast<int>(c);
  T.classes.inverseClass.resize(T.classes.classes.size());
  for (size_t c = 0; c < T.classes.classes.size(); ++c)
    T.classes.inverseClass[c] =
        T.classes.classOf[inverse_in_group(G.sg, T.classes.representatives[c])];

  for (const auto& irr : j["irreducibles"]) {
    T.labels.push_back(irr.at("label").get<std::string>());
    std::vector<Cyclotomic> row;
    for (const auto& val : irr.at("values")) {
      Cyclotomic v(0);
      for (const auto& triple : val) {
        if (!triple.is_array() || triple.size() != 3)
          throw InputError("cyclotomic value must be a list of [exp, num, den] triples");
        long e = triple[0].get<long>();
        long num = triple[1].get<long>();
        long den = triple[2].get<long>();
        if (den <= 0) throw InputError("cyclotomic denominator must be positive");
        v += Cyclotomic::zeta(conductor, e) * Cyclotomic(Rational(num, den));
      }
      row.push_back(v);
    }
    if (row.size() != T.classes.classes.size())
      throw InputError("irreducible '" + T.labels.back() +
                       "' has the wrong number of values");
    T.values.push_back(std::move(row));
  }
  if (T.values.size() != T.classes.classes.size())
    throw InputError("character table is not square");
  try {
    validate_table(T);
  } catch (const InternalError& e) {
    throw InputError(std::string("character table rejected: ") + e.what());
  }
  return T;
}

std::string quiver_to_json(const QuiverGraph& q) {
  ordered_json out;
  out["vertices"] = ordered_json::array();
  for (const auto& v : q.vertices) {
    ordered_json jv;
    jv["id"] = v.id;
    jv["jclass"] = v.jclass;
    jv["irr"] = v.irr;
    jv["display"] = v.display;
    out["vertices"].push_back(std::move(jv));
  }
  out["arrows"] = ordered_json::array();
  for (const auto& a : q.arrows) {
    ordered_json ja;
    ja["from"] = a.from;
    ja["to"] = a.to;
    ja["mult"] = a.mult;
    out["arrows"].push_back(std::move(ja));
  }
  return out.dump(2) + "\n";
}

std::string quiver_to_dot(const QuiverGraph& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (const auto& v : q.vertices)
    os << "  v" << v.id << " [label=\"" << v.display << "\"];\n";
  for (const auto& a : q.arrows) {
    os << "  v" << a.from << " -> v" << a.to;
    if (a.mult > 1) os << " [label=\"" << a.mult << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string quiver_to_text(const QuiverGraph& q) {
  std::ostringstream os;
  os << "vertices: " << q.vertices.size() << "\n";
  for (const auto& v : q.vertices)
    os << "  " << v.id << ": " << v.display << "\n";
  os << "arrows: " << q.arrows.size() << " (total multiplicity "
     << q.total_arrows() << ")\n";
  for (const auto& a : q.arrows) {
    os << "  " << q.vertices[a.from].display << " -> "
       << q.vertices[a.to].display;
    if (a.mult > 1) os << "  x" << a.mult;
    os << "\n";
  }
  return os.str();
}

namespace {

std::string principal_order_line(const Analysis& A) {
  std::ostringstream os;
  for (size_t i = 0; i < A.green.principalOrder.size(); ++i) {
    if (i) os << " ";
    os << "J" << A.green.principalOrder[i];
  }
  return os.str();
}

}  // namespace

std::string analyze_report(const Analysis& A, bool as_json) {
  auto cov = covers(A.poset);
  if (as_json) {
    ordered_json out;
    out["order"] = A.S.order;
    if (A.S.identity)
      out["identity"] = *A.S.identity;
    else
      out["identity"] = nullptr;
    out["regular"] = A.regular;
    out["rrbg"] = A.rrbg;
    out["jclasses"] = ordered_json::array();
    for (int j = 0; j < A.green.nJ(); ++j) {
      const auto& rec = A.jrec[j];
      ordered_json jj;
      jj["id"] = j;
      jj["size"] = rec.elements.size();
      jj["idempotents"] = rec.idempotents.size();
      jj["regular"] = rec.regular;
      if (rec.regular) {
        jj["chosen_idempotent"] = rec.e;
        jj["group_order"] = rec.maxSubgroup.sg.order;
        jj["l_classes"] = rec.lTransversal.size();
        jj["r_classes"] = rec.rTransversal.size();
      }
      out["jclasses"].push_back(std::move(jj));
    }
    out["principal_order"] = A.green.principalOrder;
    out["covers"] = ordered_json::array();
    for (auto [x, y] : cov) out["covers"].push_back({x, y});
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "order: " << A.S.order << "\n";
  os << "identity: "
     << (A.S.identity ? std::to_string(*A.S.identity) : std::string("none"))
     << "\n";
  os << "regular: " << (A.regular ? "yes" : "no");
  if (!A.regular) os << " (element " << A.S.label_of(A.nonRegularWitness) << ")";
  os << "\n";
  os << "rrbg: " << (A.rrbg ? "yes" : "no") << "\n";
  os << "J-classes: " << A.green.nJ() << "\n";
  for (int j = 0; j < A.green.nJ(); ++j) {
    const auto& rec = A.jrec[j];
    os << "  J" << j << ": size " << rec.elements.size() << ", idempotents "
       << rec.idempotents.size();
    if (rec.regular)
      os << ", e=" << rec.e << ", |G|=" << rec.maxSubgroup.sg.order
         << ", L-classes " << rec.lTransversal.size() << ", R-classes "
         << rec.rTransversal.size();
    else
      os << ", non-regular";
    os << "\n";
  }
  os << "principal order: " << principal_order_line(A) << "\n";
  os << "poset covers:";
  if (cov.empty()) os << " none";
  for (auto [x, y] : cov) os << " J" << x << "<J" << y;
  os << "\n";
  return os.str();
}

std::string directed_report(const Analysis& /*A*/, const DirectednessReport& rep,
                            bool as_json) {
  if (as_json) {
    ordered_json out;
    out["directed"] = rep.directed;
    out["jclasses"] = ordered_json::array();
    for (const auto& [j, inv] : rep.perClass) {
      ordered_json jj;
      jj["id"] = j;
      jj["rank"] = inv.rank;
      jj["full_column_rank"] = inv.needed;
      jj["left_invertible"] = inv.invertible;
      out["jclasses"].push_back(std::move(jj));
    }
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  for (const auto& [j, inv] : rep.perClass)
    os << "J" << j << ": expansion rank " << inv.rank << "/" << inv.needed
       << ", left invertible: " << (inv.invertible ? "yes" : "no") << "\n";
  os << "directed: " << (rep.directed ? "yes" : "not directed") << "\n";
  return os.str();
}

std::string nico_report(const Analysis& A, const NicoData& nd, bool as_json) {
  if (as_json) {
    ordered_json out;
    out["sigma"] = nd.sigma;
    out["bound"] = nd.bound;
    out["principal_order"] = A.green.principalOrder;
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  for (int j = 0; j < A.green.nJ(); ++j)
    os << "J" << j << ": sigma " << nd.sigma[j] << "\n";
  os << "principal order: " << principal_order_line(A) << "\n";
  os << "global dimension bound: " << nd.bound << "\n";
  return os.str();
}

std::string cartan_report(const Analysis& A, const CartanResult& cr,
                          bool as_json) {
  if (as_json) {
    ordered_json out;
    out["vertices"] = ordered_json::array();
    for (size_t i = 0; i < cr.vertices.size(); ++i) {
      ordered_json v;
      v["id"] = i;
      v["jclass"] = cr.vertices[i].first;
      v["irr"] = cr.vertexLabels[i].substr(cr.vertexLabels[i].find(':') + 1);
      v["display"] = cr.vertexLabels[i];
      out["vertices"].push_back(std::move(v));
    }
    out["matrix"] = cr.matrix;
    if (cr.oracleChecked) out["oracle"] = "agrees";
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "simple modules (principal order):\n";
  for (size_t i = 0; i < cr.vertexLabels.size(); ++i)
    os << "  " << i << ": " << cr.vertexLabels[i] << "\n";
  os << "principal order: " << principal_order_line(A) << "\n";
  os << "cartan matrix:\n";
  for (const auto& row : cr.matrix) {
    os << " ";
    for (long v : row) os << " " << v;
    os << "\n";
  }
  if (cr.oracleChecked) os << "oracle: agrees\n";
  return os.str();
}

}  // namespace sgq
