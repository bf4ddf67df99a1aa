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

#include "sgq/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace sgq {

int ReducedPair::hIndexOf(int s2elem) const {
  for (size_t k = 0; k < hElems.size(); ++k)
    if (hElems[k] == s2elem) return static_cast<int>(k);
  return -1;
}

long QuiverGraph::total_arrows() const {
  long t = 0;
  for (const auto& a : arrows) t += a.mult;
  return t;
}

ReducedPair reduce_pair(const Analysis& A, int jLower, int jUpper) {
  if (!A.S.is_monoid() || !A.rrbg)
    throw PreconditionError("pair reduction applies to RRBG monoids");
  if (jLower == jUpper || !A.green.jLt(jLower, jUpper))
    throw PreconditionError("pair reduction needs strictly comparable J-classes");
  if (!A.jrec[jLower].regular || !A.jrec[jUpper].regular)
    throw PreconditionError("pair reduction needs regular J-classes");

  int ei = A.jrec[jLower].e;
  int el = A.jrec[jUpper].e;
  int fParent = A.S.mul(ei, el);

  // Local monoid at e_l, then cut away everything not above the image of
  // J_i.  Both are RRBG monoids again.
  Subsemigroup loc = local_monoid(A.S, el);
  Analysis Aloc = analyze(loc.sg);
  int fLoc = loc.to_local(fParent);
  if (fLoc < 0) throw InternalError("f = e_i e_l missing from the local monoid");
  Subsemigroup cut = remove_jnotup(Aloc, Aloc.green.jClassOf[fLoc]);

  ReducedPair rp;
  rp.jLower = jLower;
  rp.jUpper = jUpper;
  rp.S2 = cut.sg;
  rp.toParent.resize(rp.S2.order);
  for (int i = 0; i < rp.S2.order; ++i)
    rp.toParent[i] = loc.to_parent(cut.to_parent(i));
  rp.identity2 = *rp.S2.identity;
  rp.f = cut.to_local(fLoc);
  if (rp.f < 0) throw InternalError("f lost in the ideal cut");

  Analysis A2 = analyze(rp.S2);
  int unitClass = A2.green.jClassOf[rp.identity2];
  int minClass = A2.green.jClassOf[rp.f];
  if (unitClass == minClass)
    throw InternalError("reduction collapsed the unit group onto the minimal ideal");
  for (int j = 0; j < A2.green.nJ(); ++j) {
    if (!A2.green.jLe(minClass, j))
      throw InternalError("minimal ideal of the reduction is not minimal");
    if (!A2.green.jLe(j, unitClass))
      throw InternalError("unit group of the reduction is not the top");
  }
  rp.unitElems = A2.green.jClasses[unitClass];
  rp.minIdeal = A2.green.jClasses[minClass];

  // Verify the unit group downstairs is G_{e_l} upstairs, elementwise.
  {
    std::set<int> upstairs(A.jrec[jUpper].maxSubgroup.ambient.begin(),
                           A.jrec[jUpper].maxSubgroup.ambient.end());
    for (int u : rp.unitElems)
      if (!upstairs.count(rp.toParent[u]))
        throw InternalError("unit group transport is not the identity on G_l");
    if (rp.unitElems.size() != upstairs.size())
      throw InternalError("unit group transport misses elements");
  }

  // H = maximal subgroup at f inside S2; transport g -> f g f from G_{e_i}.
  Subsemigroup H2 = maximal_subgroup(rp.S2, rp.f);
  rp.hElems = H2.ambient;
  const Subsemigroup& Gi = A.jrec[jLower].maxSubgroup;
  if (static_cast<int>(rp.hElems.size()) != Gi.sg.order)
    throw InternalError("transport target has the wrong order");
  rp.hToOrig.assign(rp.hElems.size(), -1);
  std::map<int, int> s2_of_parent;
  for (int i = 0; i < rp.S2.order; ++i) s2_of_parent[rp.toParent[i]] = i;
  std::vector<int> image_of(Gi.sg.order, -1);
  for (int gl = 0; gl < Gi.sg.order; ++gl) {
    int g = Gi.to_parent(gl);
    int t = A.S.mul(A.S.mul(fParent, g), fParent);
    auto it = s2_of_parent.find(t);
    if (it == s2_of_parent.end())
      throw InternalError("transport image escapes the reduction");
    int hIdx = rp.hIndexOf(it->second);
    if (hIdx < 0) throw InternalError("transport image is not in H");
    if (rp.hToOrig[hIdx] != -1)
      throw InternalError("transport g -> f g f is not injective");
    rp.hToOrig[hIdx] = g;
    image_of[gl] = it->second;
  }
  for (int a = 0; a < Gi.sg.order; ++a)
    for (int b = 0; b < Gi.sg.order; ++b) {
      int ab = Gi.sg.mul(a, b);
      if (rp.S2.mul(image_of[a], image_of[b]) != image_of[ab])
        throw InternalError("transport g -> f g f is not multiplicative");
    }
  return rp;
}

ApproxStructure smile_and_approx(const ReducedPair& rp) {
  const FiniteSemigroup& S2 = rp.S2;
  int nJ = static_cast<int>(rp.minIdeal.size());
  std::vector<int> posInJ(S2.order, -1);
  for (int i = 0; i < nJ; ++i) posInJ[rp.minIdeal[i]] = i;
  std::vector<bool> isUnit(S2.order, false);
  for (int u : rp.unitElems) isUnit[u] = true;

  ApproxStructure ap;

  // Union-find over positions in the minimal ideal.
  std::vector<int> parent(nJ);
  for (int i = 0; i < nJ; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  // Witnesses: idempotents of I \ J (w may always be taken idempotent).
  std::vector<int> witnesses;
  for (int w = 0; w < S2.order; ++w)
    if (!isUnit[w] && posInJ[w] < 0 && S2.mul(w, w) == w) witnesses.push_back(w);

  for (int w : witnesses) {
    // Group Fix(w) by the value x*f; pairs within one bucket are smile-related.
    std::map<int, std::vector<int>> buckets;
    for (int i = 0; i < nJ; ++i) {
      int x = rp.minIdeal[i];
      if (S2.mul(x, w) == x) buckets[S2.mul(x, rp.f)].push_back(i);
    }
    for (const auto& [xe, members] : buckets) {
      for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b) {
          ap.smilePairs.emplace_back(rp.minIdeal[members[a]],
                                     rp.minIdeal[members[b]]);
          unite(members[a], members[b]);
        }
    }
  }

  // Classes in order of their smallest member.
  ap.classOf.assign(nJ, -1);
  for (int i = 0; i < nJ; ++i) {
    int r = find(i);
    if (ap.classOf[r] < 0) {
      ap.classOf[r] = static_cast<int>(ap.classes.size());
      ap.classes.push_back({});
    }
    ap.classOf[i] = ap.classOf[r];
    ap.classes[ap.classOf[i]].push_back(rp.minIdeal[i]);
  }

  // eps([x]) = x f must be constant on classes, distinct H elements must lie
  // in distinct classes, and both actions must descend to X.
  ap.epsilonTarget.assign(ap.classes.size(), -1);
  for (size_t c = 0; c < ap.classes.size(); ++c) {
    for (int x : ap.classes[c]) {
      int h = rp.hIndexOf(S2.mul(x, rp.f));
      if (h < 0) throw InternalError("x*f left the maximal subgroup H");
      if (ap.epsilonTarget[c] < 0)
        ap.epsilonTarget[c] = h;
      else if (ap.epsilonTarget[c] != h)
        throw InternalError("x*f is not constant on an equivalence class");
    }
  }
  {
    std::vector<bool> seen(ap.classes.size(), false);
    for (int h : rp.hElems) {
      int c = ap.classOf[posInJ[h]];
      if (seen[c])
        throw InternalError("distinct elements of H were identified");
      seen[c] = true;
    }
  }

  ap.hAction.assign(rp.hElems.size(), std::vector<int>(ap.classes.size(), -1));
  for (size_t k = 0; k < rp.hElems.size(); ++k)
    for (size_t c = 0; c < ap.classes.size(); ++c) {
      int target = -1;
      for (int x : ap.classes[c]) {
        int t = ap.classOf[posInJ[S2.mul(rp.hElems[k], x)]];
        if (target < 0)
          target = t;
        else if (target != t)
          throw InternalError("left H-action is not well defined on X");
      }
      ap.hAction[k][c] = target;
    }
  ap.gAction.assign(ap.classes.size(), std::vector<int>(rp.unitElems.size(), -1));
  for (size_t c = 0; c < ap.classes.size(); ++c)
    for (size_t k = 0; k < rp.unitElems.size(); ++k) {
      int target = -1;
      for (int x : ap.classes[c]) {
        int t = ap.classOf[posInJ[S2.mul(x, rp.unitElems[k])]];
        if (target < 0)
          target = t;
        else if (target != t)
          throw InternalError("right G-action is not well defined on X");
      }
      ap.gAction[c][k] = target;
    }
  return ap;
}

std::vector<std::vector<long>> m_character(const ReducedPair& rp,
                                           const ApproxStructure& ap) {
  const FiniteSemigroup& S2 = rp.S2;
  size_t nh = rp.hElems.size(), ng = rp.unitElems.size();
  std::vector<std::vector<long>> tr(nh, std::vector<long>(ng, 0));
  for (size_t hi = 0; hi < nh; ++hi)
    for (size_t gi = 0; gi < ng; ++gi) {
      long fixedX = 0;
      for (size_t c = 0; c < ap.classes.size(); ++c)
        if (ap.gAction[ap.hAction[hi][c]][gi] == static_cast<int>(c)) ++fixedX;
      // kH with the right G-action through psi(g) = g f.
      int psi = S2.mul(rp.unitElems[gi], rp.f);
      long fixedH = 0;
      for (int y : rp.hElems)
        if (S2.mul(S2.mul(rp.hElems[hi], y), psi) == y) ++fixedH;
      tr[hi][gi] = fixedX - fixedH;
    }
  return tr;
}

namespace {

std::vector<int> group_inverses(const FiniteSemigroup& S2,
                                const std::vector<int>& elems, int identity) {
  std::vector<int> inv(elems.size(), -1);
  for (size_t a = 0; a < elems.size(); ++a)
    for (size_t b = 0; b < elems.size(); ++b)
      if (S2.mul(elems[a], elems[b]) == identity &&
          S2.mul(elems[b], elems[a]) == identity) {
        inv[a] = static_cast<int>(b);
        break;
      }
  for (int i : inv)
    if (i < 0) throw InternalError("group element without inverse");
  return inv;
}

}  // namespace

std::vector<std::vector<long>> arrows_between(const ReducedPair& rp,
                                              const ApproxStructure& ap,
                                              const CharacterTable& tableLower,
                                              const CharacterTable& tableUpper,
                                              bool alt_convention) {
  auto tr = m_character(rp, ap);
  size_t nh = rp.hElems.size(), ng = rp.unitElems.size();
  auto invH = group_inverses(rp.S2, rp.hElems, rp.f);
  auto invG = group_inverses(rp.S2, rp.unitElems, rp.identity2);

  int nu = tableLower.nirr(), nv = tableUpper.nirr();
  std::vector<std::vector<long>> out(nu, std::vector<long>(nv, 0));
  long hOrder = static_cast<long>(nh), gOrder = static_cast<long>(ng);
  for (int u = 0; u < nu; ++u) {
    // theta_U(g) = (1/|H|) sum_h chi_U(h) tr_M(h^{-1}, g).
    std::vector<Cyclotomic> theta(ng, Cyclotomic(0));
    for (size_t gi = 0; gi < ng; ++gi) {
      Cyclotomic sum(0);
      for (size_t hi = 0; hi < nh; ++hi) {
        long t = alt_convention ? tr[hi][gi] : tr[invH[hi]][gi];
        if (t == 0) continue;
        sum += tableLower.value_ambient(u, rp.hToOrig[hi]) * Cyclotomic(t);
      }
      theta[gi] = sum * Cyclotomic(Rational(1, hOrder));
    }
    for (int v = 0; v < nv; ++v) {
      Cyclotomic ip(0);
      for (size_t gi = 0; gi < ng; ++gi)
        ip += theta[gi] *
              tableUpper.value_ambient(v, rp.toParent[rp.unitElems[invG[gi]]]);
      ip = ip * Cyclotomic(Rational(1, gOrder));
      if (!ip.is_integer())
        throw InternalError("arrow multiplicity " + ip.str() +
                            " is not an integer");
      long m = to_long(ip.rational_value());
      if (m < 0) throw InternalError("negative arrow multiplicity");
      out[u][v] = m;
    }
  }

  // Mass check: sum dim U dim V mult(U, V) = dim M = |X| - |H|.
  long mass = 0;
  for (int u = 0; u < nu; ++u)
    for (int v = 0; v < nv; ++v)
      mass += tableLower.degree(u) * tableUpper.degree(v) * out[u][v];
  long dimM = static_cast<long>(ap.classes.size()) - static_cast<long>(nh);
  if (mass != dimM)
    throw InternalError("arrow mass " + std::to_string(mass) +
                        " does not match dim M = " + std::to_string(dimM));
  return out;
}

long ext_oracle_explicit(const ReducedPair& rp, const ApproxStructure& ap,
                         const CharacterTable& tableLower, int u,
                         const CharacterTable& tableUpper, int v) {
  if (tableLower.degree(u) != 1 || tableUpper.degree(v) != 1)
    throw PreconditionError("explicit Ext oracle needs one-dimensional characters");
  size_t nx = ap.classes.size();
  size_t nh = rp.hElems.size(), ng = rp.unitElems.size();

  // eps: kX -> kH as a matrix, M = its nullspace.
  ExactMatrix eps(nh, nx);
  for (size_t c = 0; c < nx; ++c)
    eps.at(ap.epsilonTarget[c], c) = Cyclotomic(1);
  auto mBasis = eps.nullspace();  // vectors in kX
  size_t dimM = mBasis.size();
  if (dimM != nx - nh)
    throw InternalError("explicit oracle: dim M mismatch");
  if (dimM == 0) return 0;

  auto apply_class_perm = [&](const std::vector<int>& perm,
                              const std::vector<Cyclotomic>& vec) {
    std::vector<Cyclotomic> out(nx, Cyclotomic(0));
    for (size_t c = 0; c < nx; ++c) out[perm[c]] += vec[c];
    return out;
  };

  // D = span{ chi_U(h) m - h m : m in basis(M), h in H } inside M.
  // Columns: [D vectors | M basis]; the M-basis columns that add pivots on
  // top of D form a complement basis of the quotient.
  std::vector<std::vector<Cyclotomic>> dVecs;
  for (size_t hi = 0; hi < nh; ++hi) {
    std::vector<int> perm(nx);
    for (size_t c = 0; c < nx; ++c) perm[c] = ap.hAction[hi][c];
    Cyclotomic chiU = tableLower.value_ambient(u, rp.hToOrig[hi]);
    for (const auto& m : mBasis) {
      auto hm = apply_class_perm(perm, m);
      std::vector<Cyclotomic> d(nx);
      bool nonzero = false;
      for (size_t c = 0; c < nx; ++c) {
        d[c] = chiU * m[c] - hm[c];
        nonzero = nonzero || !d[c].is_zero();
      }
      if (nonzero) dVecs.push_back(std::move(d));
    }
  }

  ExactMatrix span(nx, dVecs.size() + dimM);
  for (size_t j = 0; j < dVecs.size(); ++j)
    for (size_t c = 0; c < nx; ++c) span.at(c, j) = dVecs[j][c];
  for (size_t j = 0; j < dimM; ++j)
    for (size_t c = 0; c < nx; ++c) span.at(c, dVecs.size() + j) = mBasis[j][c];

  // Row reduce to find pivot columns (re-using rank machinery via a local
  // elimination on the transpose is avoided: replicate pivoting here).
  std::vector<std::vector<Cyclotomic>> rows(nx);
  for (size_t r = 0; r < nx; ++r) {
    rows[r].resize(dVecs.size() + dimM);
    for (size_t c = 0; c < rows[r].size(); ++c) rows[r][c] = span.at(r, c);
  }
  std::vector<size_t> pivotCols;
  {
    size_t pr = 0;
    for (size_t c = 0; c < dVecs.size() + dimM && pr < nx; ++c) {
      size_t sel = pr;
      while (sel < nx && rows[sel][c].is_zero()) ++sel;
      if (sel == nx) continue;
      std::swap(rows[pr], rows[sel]);
      Cyclotomic inv = rows[pr][c].inverse();
      for (size_t k = c; k < rows[pr].size(); ++k) rows[pr][k] = rows[pr][k] * inv;
      for (size_t r = 0; r < nx; ++r) {
        if (r == pr || rows[r][c].is_zero()) continue;
        Cyclotomic f = rows[r][c];
        for (size_t k = c; k < rows[r].size(); ++k) rows[r][k] -= f * rows[pr][k];
      }
      pivotCols.push_back(c);
      ++pr;
    }
  }
  std::vector<size_t> qCols;  // columns of M-basis vectors completing D
  std::vector<size_t> dCols;
  for (size_t c : pivotCols)
    (c < dVecs.size() ? dCols : qCols).push_back(c);
  size_t dimQ = qCols.size();
  if (dimQ == 0) return 0;

  // Express a vector of kX in the pivot basis; return the Q-coordinates.
  auto quotient_coords = [&](const std::vector<Cyclotomic>& vec) {
    ExactMatrix sys(nx, pivotCols.size());
    for (size_t j = 0; j < pivotCols.size(); ++j)
      for (size_t c = 0; c < nx; ++c) sys.at(c, j) = span.at(c, pivotCols[j]);
    auto sol = sys.solve(vec);
    if (!sol) throw InternalError("explicit oracle: vector outside D + Q");
    std::vector<Cyclotomic> q(dimQ);
    size_t qi = 0;
    for (size_t j = 0; j < pivotCols.size(); ++j)
      if (pivotCols[j] >= dVecs.size()) q[qi++] = (*sol)[j];
    return q;
  };

  // G acts on the quotient; assemble the V-isotypic projector.
  auto invG = group_inverses(rp.S2, rp.unitElems, rp.identity2);
  ExactMatrix proj(dimQ, dimQ);
  for (size_t gi = 0; gi < ng; ++gi) {
    std::vector<int> perm(nx);
    for (size_t c = 0; c < nx; ++c) perm[c] = ap.gAction[c][gi];
    Cyclotomic chiVinv =
        tableUpper.value_ambient(v, rp.toParent[rp.unitElems[invG[gi]]]);
    // Action matrix columns: images of the Q-basis vectors.
    for (size_t j = 0; j < dimQ; ++j) {
      size_t mcol = qCols[j] - dVecs.size();
      auto img = apply_class_perm(perm, mBasis[mcol]);
      auto coords = quotient_coords(img);
      for (size_t r = 0; r < dimQ; ++r)
        proj.at(r, j) += chiVinv * coords[r];
    }
  }
  proj = proj.scaled(Cyclotomic(Rational(1, static_cast<long>(ng))));
  return static_cast<long>(proj.rank());
}

QuiverGraph full_quiver(const Analysis& A, const TableMap& tables,
                        const QuiverOptions& opt) {
  if (!A.S.is_monoid())
    throw PreconditionError("quiver computation requires a monoid");
  if (!A.regular)
    throw PreconditionError("quiver computation requires a regular semigroup; element " +
                            A.S.label_of(A.nonRegularWitness) +
                            " has no weak inverse");
  if (!A.rrbg)
    throw PreconditionError(
        "quiver computation requires a right regular band of groups");

  QuiverGraph q;
  std::map<std::pair<int, int>, int> vertexId;  // (jclass, irr) -> id
  for (int pos = 0; pos < A.green.nJ(); ++pos) {
    int j = A.green.principalOrder[pos];
    const CharacterTable& T = tables.at(j);
    for (int i = 0; i < T.nirr(); ++i) {
      QuiverVertex v;
      v.id = static_cast<int>(q.vertices.size());
      v.jclass = j;
      v.irr = T.labels[i];
      v.display = opt.bare_display ? T.labels[i]
                                   : "J" + std::to_string(j) + ":" + T.labels[i];
      vertexId[{j, i}] = v.id;
      q.vertices.push_back(std::move(v));
    }
  }

  for (int jl = 0; jl < A.green.nJ(); ++jl)
    for (int ju = 0; ju < A.green.nJ(); ++ju) {
      if (!A.green.jLt(jl, ju)) continue;
      ReducedPair rp = reduce_pair(A, jl, ju);
      ApproxStructure ap = smile_and_approx(rp);
      const CharacterTable& TL = tables.at(jl);
      const CharacterTable& TU = tables.at(ju);
      auto mat = arrows_between(rp, ap, TL, TU);
      if (opt.run_oracle && TL.all_linear() && TU.all_linear()) {
        for (int u = 0; u < TL.nirr(); ++u)
          for (int v = 0; v < TU.nirr(); ++v) {
            long o = ext_oracle_explicit(rp, ap, TL, u, TU, v);
            if (o != mat[u][v])
              throw InternalError(
                  "Ext oracle disagrees at (" + TL.labels[u] + " -> " +
                  TU.labels[v] + ") for J" + std::to_string(jl) + " -> J" +
                  std::to_string(ju) + ": " + std::to_string(o) + " vs " +
                  std::to_string(mat[u][v]));
          }
      }
      for (int u = 0; u < TL.nirr(); ++u)
        for (int v = 0; v < TU.nirr(); ++v)
          if (mat[u][v] > 0)
            q.arrows.push_back(
                {vertexId.at({jl, u}), vertexId.at({ju, v}), mat[u][v]});
    }
  return q;
}

bool quiver_equal(const QuiverGraph& a, const QuiverGraph& b) {
  std::set<std::string> va, vb;
  for (const auto& v : a.vertices) va.insert(v.display);
  for (const auto& v : b.vertices) vb.insert(v.display);
  if (va != vb || va.size() != a.vertices.size() || vb.size() != b.vertices.size())
    return false;
  std::map<std::pair<std::string, std::string>, long> ea, eb;
  for (const auto& e : a.arrows)
    ea[{a.vertices[e.from].display, a.vertices[e.to].display}] += e.mult;
  for (const auto& e : b.arrows)
    eb[{b.vertices[e.from].display, b.vertices[e.to].display}] += e.mult;
  return ea == eb;
}

}  // namespace sgq
