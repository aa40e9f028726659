// Copyright 2026 The wirecat authors
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

#include "wirecat/karoubi.hpp"

#include <algorithm>
#include <string>

#include "wirecat/errors.hpp"

namespace wirecat {

int KaroubiEnvelope::object_index(int idempotent) const {
  auto it = std::lower_bound(objects.begin(), objects.end(), idempotent);
  if (it == objects.end() || *it != idempotent) {
    return -1;
  }
  return static_cast<int>(it - objects.begin());
}

int KaroubiEnvelope::triple_index(const KaroubiTriple& t) const {
  auto it = index_.find({t.e, t.x, t.f});
  return it == index_.end() ? -1 : it->second;
}

KaroubiEnvelope karoubi_envelope(const FiniteSemigroup& s, int max_arrows) {
  KaroubiEnvelope env;
  env.source = s;
  env.objects = idempotents(s);

  for (int e : env.objects) {
    for (int x = 0; x < s.n; ++x) {
      for (int f : env.objects) {
        if (s.at(e, x, f) != x) {
          continue;
        }
        if (static_cast<int>(env.triples.size()) >= max_arrows) {
          throw SizeBoundError("karoubi envelope exceeds arrow bound " +
                               std::to_string(max_arrows));
        }
        // e*x*f == x with e, f idempotent forces e*x == x and x*f == x.
        if (s.at(e, x) != x || s.at(x, f) != x) {
          throw ValidationError("triple absorption failed");
        }
        env.index_[{e, x, f}] = static_cast<int>(env.triples.size());
        env.triples.push_back({e, x, f});
      }
    }
  }

  int m = static_cast<int>(env.objects.size());
  int k = static_cast<int>(env.triples.size());
  FiniteCategory cat;
  cat.num_objects = m;
  cat.arrows.resize(k);
  for (int i = 0; i < k; ++i) {
    cat.arrows[i] = Arrow{env.object_index(env.triples[i].e),
                          env.object_index(env.triples[i].f)};
  }
  cat.identity.resize(m);
  for (int i = 0; i < m; ++i) {
    int e = env.objects[i];
    cat.identity[i] = env.triple_index({e, e, e});
  }
  cat.comp.assign(k, std::vector<int>(k, -1));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (env.triples[i].f != env.triples[j].e) {
        continue;
      }
      KaroubiTriple composite{env.triples[i].e,
                              s.at(env.triples[i].x, env.triples[j].x),
                              env.triples[j].f};
      cat.comp[i][j] = env.triple_index(composite);
    }
  }

  WiredCategory wired;
  wired.base = std::move(cat);
  wired.wire.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      int e = env.objects[i], f = env.objects[j];
      wired.wire[i][j] = env.triple_index({e, s.at(e, f), f});
    }
  }
  env.wired = validate_wired(std::move(wired));
  return env;
}

CounitReport counit(const KaroubiEnvelope& env) {
  CounitReport report;
  report.sk = wired_to_semigroup(env.wired);
  int k = report.sk.sgr.n;
  report.map.resize(k);
  for (int i = 0; i < k; ++i) {
    report.map[i] = env.triples[i].x;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (report.map[report.sk.sgr.at(i, j)] !=
          env.source.at(report.map[i], report.map[j])) {
        throw NotHomomorphismError(i, j);
      }
    }
  }
  std::vector<bool> hit(env.source.n, false);
  for (int v : report.map) {
    hit[v] = true;
  }
  report.surjective = std::all_of(hit.begin(), hit.end(),
                                  [](bool b) { return b; });
  return report;
}

UnitResult unit(const WiredCategory& c, int max_arrows) {
  UnitResult result;
  result.sc = wired_to_semigroup(c, max_arrows);
  result.env = karoubi_envelope(result.sc.sgr, max_arrows);
  int m = c.base.num_objects;
  int k = c.base.num_arrows();
  result.functor.obj_map.resize(m);
  for (int a = 0; a < m; ++a) {
    result.functor.obj_map[a] = result.env.object_index(c.base.identity[a]);
  }
  result.functor.arr_map.resize(k);
  for (int phi = 0; phi < k; ++phi) {
    int ia = c.base.identity[c.base.dom(phi)];
    int ib = c.base.identity[c.base.cod(phi)];
    result.functor.arr_map[phi] = result.env.triple_index({ia, phi, ib});
  }
  validate_wired_functor(c, result.env.wired, result.functor);
  return result;
}

std::vector<std::vector<int>> enumerate_homomorphisms(
    const FiniteSemigroup& a, const FiniteSemigroup& s) {
  std::vector<std::vector<int>> homs;
  std::vector<int> h(a.n, 0);
  while (true) {
    bool ok = true;
    for (int x = 0; x < a.n && ok; ++x) {
      for (int y = 0; y < a.n && ok; ++y) {
        ok = h[a.at(x, y)] == s.at(h[x], h[y]);
      }
    }
    if (ok) {
      homs.push_back(h);
    }
    int pos = a.n - 1;
    while (pos >= 0 && h[pos] == s.n - 1) {
      h[pos--] = 0;
    }
    if (pos < 0) {
      break;
    }
    ++h[pos];
  }
  return homs;
}

namespace {

bool is_wired_functor(const WiredCategory& c, const WiredCategory& d,
                      const WiredFunctor& f) {
  try {
    validate_wired_functor(c, d, f);
    return true;
  } catch (const ValidationError&) {
    return false;
  }
}

}  // namespace

std::vector<WiredFunctor> enumerate_wired_functors(const WiredCategory& c,
                                                   const WiredCategory& d) {
  std::vector<WiredFunctor> found;
  int m = c.base.num_objects;
  int k = c.base.num_arrows();
  if (m > 0 && d.base.num_objects == 0) {
    return found;  // nowhere to send objects
  }
  std::vector<int> obj(m, 0);
  while (true) {
    // Candidate images per arrow, pruned by endpoints; identities and wires
    // are forced by the laws.
    std::vector<std::vector<int>> candidates(k);
    bool feasible = true;
    for (int phi = 0; phi < k && feasible; ++phi) {
      int u = obj[c.base.dom(phi)];
      int v = obj[c.base.cod(phi)];
      bool forced_wire = false;
      for (int a = 0; a < m && !forced_wire; ++a) {
        for (int b = 0; b < m && !forced_wire; ++b) {
          if (c.wire_at(a, b) == phi) {
            candidates[phi] = {d.wire_at(obj[a], obj[b])};
            forced_wire = true;
          }
        }
      }
      if (forced_wire) {
        continue;
      }
      for (int im = 0; im < d.base.num_arrows(); ++im) {
        if (d.base.dom(im) == u && d.base.cod(im) == v) {
          candidates[phi].push_back(im);
        }
      }
      feasible = !candidates[phi].empty();
    }
    if (feasible) {
      std::vector<int> pick(k, 0);
      while (true) {
        WiredFunctor f;
        f.obj_map = obj;
        f.arr_map.resize(k);
        for (int phi = 0; phi < k; ++phi) {
          f.arr_map[phi] = candidates[phi][pick[phi]];
        }
        if (is_wired_functor(c, d, f)) {
          found.push_back(std::move(f));
        }
        int pos = k - 1;
        while (pos >= 0 &&
               pick[pos] == static_cast<int>(candidates[pos].size()) - 1) {
          pick[pos--] = 0;
        }
        if (pos < 0) {
          break;
        }
        ++pick[pos];
      }
    }
    int pos = m - 1;
    while (pos >= 0 && obj[pos] == d.base.num_objects - 1) {
      obj[pos--] = 0;
    }
    if (pos < 0) {
      break;
    }
    ++obj[pos];
  }
  return found;
}

WiredFunctor karoubi_on_hom(const std::vector<int>& h,
                            const KaroubiEnvelope& from,
                            const KaroubiEnvelope& to) {
  WiredFunctor f;
  f.obj_map.resize(from.objects.size());
  for (size_t i = 0; i < from.objects.size(); ++i) {
    f.obj_map[i] = to.object_index(h[from.objects[i]]);
  }
  f.arr_map.resize(from.triples.size());
  for (size_t i = 0; i < from.triples.size(); ++i) {
    const KaroubiTriple& t = from.triples[i];
    f.arr_map[i] = to.triple_index({h[t.e], h[t.x], h[t.f]});
  }
  validate_wired_functor(from.wired, to.wired, f);
  return f;
}

BijectionReport adjunction_bijection_check(const WiredCategory& c,
                                           const FiniteSemigroup& s,
                                           int max_c_arrows, int max_s_order) {
  if (c.base.num_arrows() > max_c_arrows || s.n > max_s_order) {
    throw SizeBoundError("bijection enumeration bound exceeded");
  }
  KaroubiEnvelope env = karoubi_envelope(s);
  WiredSemigroup sc = wired_to_semigroup(c);

  std::vector<WiredFunctor> functors = enumerate_wired_functors(c, env.wired);
  std::vector<std::vector<int>> homs = enumerate_homomorphisms(sc.sgr, s);

  BijectionReport report;
  report.num_functors = static_cast<int>(functors.size());
  report.num_homs = static_cast<int>(homs.size());
  report.forward_well_defined = true;
  report.backward_well_defined = true;
  report.mutually_inverse = true;

  auto find_hom = [&homs](const std::vector<int>& h) {
    return std::find(homs.begin(), homs.end(), h) != homs.end();
  };
  auto same_functor = [](const WiredFunctor& a, const WiredFunctor& b) {
    return a.obj_map == b.obj_map && a.arr_map == b.arr_map;
  };

  // F  |->  h_F = middle o F, then back to a functor; must return F.
  for (const WiredFunctor& f : functors) {
    std::vector<int> h(c.base.num_arrows());
    for (int phi = 0; phi < c.base.num_arrows(); ++phi) {
      h[phi] = env.triples[f.arr_map[phi]].x;
    }
    if (!find_hom(h)) {
      report.forward_well_defined = false;
      continue;
    }
    WiredFunctor back;
    back.obj_map.resize(c.base.num_objects);
    back.arr_map.resize(c.base.num_arrows());
    bool assembled = true;
    for (int a = 0; a < c.base.num_objects; ++a) {
      back.obj_map[a] = env.object_index(h[c.base.identity[a]]);
      assembled = assembled && back.obj_map[a] != -1;
    }
    for (int phi = 0; phi < c.base.num_arrows() && assembled; ++phi) {
      int ea = h[c.base.identity[c.base.dom(phi)]];
      int eb = h[c.base.identity[c.base.cod(phi)]];
      back.arr_map[phi] = env.triple_index({ea, h[phi], eb});
      assembled = assembled && back.arr_map[phi] != -1;
    }
    if (!assembled || !same_functor(f, back)) {
      report.mutually_inverse = false;
    }
  }

  // h  |->  functor by triple assembly, then back via middle; must return h.
  for (const std::vector<int>& h : homs) {
    WiredFunctor f;
    f.obj_map.resize(c.base.num_objects);
    f.arr_map.resize(c.base.num_arrows());
    bool assembled = true;
    for (int a = 0; a < c.base.num_objects; ++a) {
      f.obj_map[a] = env.object_index(h[c.base.identity[a]]);
      assembled = assembled && f.obj_map[a] != -1;
    }
    for (int phi = 0; phi < c.base.num_arrows() && assembled; ++phi) {
      int ea = h[c.base.identity[c.base.dom(phi)]];
      int eb = h[c.base.identity[c.base.cod(phi)]];
      f.arr_map[phi] = env.triple_index({ea, h[phi], eb});
      assembled = assembled && f.arr_map[phi] != -1;
    }
    if (!assembled || !is_wired_functor(c, env.wired, f)) {
      report.backward_well_defined = false;
      continue;
    }
    bool present = false;
    for (const WiredFunctor& g : functors) {
      present = present || same_functor(f, g);
    }
    if (!present) {
      report.backward_well_defined = false;
      continue;
    }
    std::vector<int> back(c.base.num_arrows());
    for (int phi = 0; phi < c.base.num_arrows(); ++phi) {
      back[phi] = env.triples[f.arr_map[phi]].x;
    }
    if (back != h) {
      report.mutually_inverse = false;
    }
  }
  return report;
}

bool triangle_left(const WiredCategory& c, int max_arrows) {
  UnitResult u = unit(c, max_arrows);
  std::vector<int> lifted = s_on_functor(c, u.env.wired, u.functor);
  for (int phi = 0; phi < c.base.num_arrows(); ++phi) {
    if (u.env.triples[lifted[phi]].x != phi) {
      return false;
    }
  }
  return true;
}

bool triangle_right(const FiniteSemigroup& s, int max_arrows) {
  KaroubiEnvelope env = karoubi_envelope(s, max_arrows);
  CounitReport cou = counit(env);
  UnitResult u = unit(env.wired, max_arrows);
  WiredFunctor k_of_counit = karoubi_on_hom(cou.map, u.env, env);
  for (int a = 0; a < env.wired.base.num_objects; ++a) {
    if (k_of_counit.obj_map[u.functor.obj_map[a]] != a) {
      return false;
    }
  }
  for (int t = 0; t < env.wired.base.num_arrows(); ++t) {
    if (k_of_counit.arr_map[u.functor.arr_map[t]] != t) {
      return false;
    }
  }
  return true;
}

namespace {

bool valid_triple(const FiniteSemigroup& s, const KaroubiTriple& t) {
  return s.at(t.e, t.e) == t.e && s.at(t.f, t.f) == t.f &&
         s.at(t.e, t.x, t.f) == t.x;
}

KaroubiTriple compose_triples(const FiniteSemigroup& s, const KaroubiTriple& a,
                              const KaroubiTriple& b) {
  return {a.e, s.at(a.x, b.x), b.f};
}

}  // namespace

RegularFactorization regular_factorization(const FiniteSemigroup& s,
                                           const KaroubiTriple& t, int y) {
  if (s.at(t.x, y, t.x) != t.x) {
    throw NotPseudoinverseError(t.x, y);
  }
  if (!valid_triple(s, t)) {
    throw ValidationError("input is not a Karoubi triple");
  }
  int yx = s.at(y, t.x);
  RegularFactorization fact;
  fact.epi = {t.e, t.x, yx};
  fact.mono = {yx, yx, t.f};
  fact.epi_left_inverse = {yx, s.at(s.at(yx, y), t.e), t.e};
  fact.mono_right_inverse = {t.f, s.at(t.f, yx), yx};

  for (const KaroubiTriple* part :
       {&fact.epi, &fact.mono, &fact.epi_left_inverse,
        &fact.mono_right_inverse}) {
    if (!valid_triple(s, *part)) {
      throw ValidationError("factorization produced an invalid triple");
    }
  }
  KaroubiTriple identity_yx{yx, yx, yx};
  if (!(compose_triples(s, fact.epi, fact.mono) == t) ||
      !(compose_triples(s, fact.epi_left_inverse, fact.epi) == identity_yx) ||
      !(compose_triples(s, fact.mono, fact.mono_right_inverse) ==
        identity_yx)) {
    throw ValidationError("factorization equations failed");
  }
  return fact;
}

RegularityTheoremReport theorem_regular_iff_factorization(
    const FiniteSemigroup& s, int max_arrows) {
  RegularityTheoremReport report;
  report.regular = is_regular(s).regular;
  report.enough_idempotents = has_enough_idempotents(s).enough;
  KaroubiEnvelope env = karoubi_envelope(s, max_arrows);
  report.all_arrows_factor = true;
  for (int phi = 0; phi < env.wired.base.num_arrows(); ++phi) {
    if (!factorize_split(env.wired.base, phi)) {
      report.all_arrows_factor = false;
      report.failing_arrow = phi;
      break;
    }
  }
  return report;
}

SplitFactRegularReport splitfact_regular_check(const WiredCategory& c,
                                               int max_arrows) {
  SplitFactRegularReport report;
  WiredSemigroup sc = wired_to_semigroup(c, max_arrows);
  report.regular = is_regular(sc.sgr).regular;
  report.hypothesis = true;
  report.witnesses_ok = true;
  for (int phi = 0; phi < c.base.num_arrows(); ++phi) {
    std::optional<SplitFactorization> fact = factorize_split(c.base, phi);
    if (!fact) {
      report.hypothesis = false;
      report.witnesses_ok = false;
      break;
    }
    int y = c.base.compose(fact->mono_right_inverse, fact->epi_left_inverse);
    if (sc.sgr.at(phi, y, phi) != phi) {
      report.witnesses_ok = false;
    }
  }
  return report;
}

}  // namespace wirecat
