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

#include "wirecat/wired.hpp"

#include <json.hpp>

#include "wirecat/errors.hpp"

namespace wirecat {

WiredCategory validate_wired(WiredCategory raw) {
  raw.base = validate_category(std::move(raw.base));
  int m = raw.base.num_objects;
  if (static_cast<int>(raw.wire.size()) != m) {
    throw ValidationError("wire grid must have one row per object");
  }
  for (int a = 0; a < m; ++a) {
    if (static_cast<int>(raw.wire[a].size()) != m) {
      throw ValidationError("wire grid row has wrong length");
    }
    for (int b = 0; b < m; ++b) {
      int w = raw.wire[a][b];
      if (w < 0 || w >= raw.base.num_arrows() || raw.base.dom(w) != a ||
          raw.base.cod(w) != b) {
        throw WireEndpointsError(a, b);
      }
    }
    if (raw.wire[a][a] != raw.base.identity[a]) {
      throw WireDiagonalError(a);
    }
  }
  return raw;
}

WiredCategory indiscrete_wired(int m) {
  if (m < 1) {
    throw ValidationError("indiscrete category needs at least one object");
  }
  FiniteCategory c;
  c.num_objects = m;
  c.arrows.resize(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      c.arrows[a * m + b] = Arrow{a, b};
    }
  }
  c.identity.resize(m);
  for (int a = 0; a < m; ++a) {
    c.identity[a] = a * m + a;
  }
  int k = m * m;
  c.comp.assign(k, std::vector<int>(k, -1));
  for (int f = 0; f < k; ++f) {
    for (int g = 0; g < k; ++g) {
      if (c.composable(f, g)) {
        c.comp[f][g] = c.dom(f) * m + c.cod(g);
      }
    }
  }
  WiredCategory w;
  w.base = std::move(c);
  w.wire.assign(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      w.wire[a][b] = a * m + b;
    }
  }
  return validate_wired(std::move(w));
}

WiredCategory one_object_wired(const FiniteSemigroup& monoid) {
  WiredCategory w;
  w.base = one_object_category(monoid);
  w.wire = {{w.base.identity[0]}};
  return validate_wired(std::move(w));
}

WiredSemigroup wired_to_semigroup(const WiredCategory& c, int max_arrows) {
  int k = c.base.num_arrows();
  if (k > max_arrows) {
    throw SizeBoundError("arrow bound: " + std::to_string(k) +
                         " arrows exceed " + std::to_string(max_arrows));
  }
  if (k == 0) {
    throw SizeBoundError("cannot build a semigroup on an empty arrow set");
  }
  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int f = 0; f < k; ++f) {
    for (int g = 0; g < k; ++g) {
      int w = c.wire_at(c.base.cod(f), c.base.dom(g));
      table[static_cast<size_t>(f) * k + g] =
          c.base.compose(c.base.compose(f, w), g);
    }
  }
  WiredSemigroup result;
  result.sgr = validate_semigroup(k, std::move(table));
  return result;
}

void validate_wired_functor(const WiredCategory& c, const WiredCategory& d,
                            const WiredFunctor& f) {
  int m = c.base.num_objects;
  int k = c.base.num_arrows();
  if (static_cast<int>(f.obj_map.size()) != m ||
      static_cast<int>(f.arr_map.size()) != k) {
    throw ValidationError("functor maps have wrong sizes");
  }
  for (int a = 0; a < m; ++a) {
    if (f.obj_map[a] < 0 || f.obj_map[a] >= d.base.num_objects) {
      throw ValidationError("object image out of range");
    }
  }
  for (int phi = 0; phi < k; ++phi) {
    int im = f.arr_map[phi];
    if (im < 0 || im >= d.base.num_arrows()) {
      throw ValidationError("arrow image out of range");
    }
    if (d.base.dom(im) != f.obj_map[c.base.dom(phi)] ||
        d.base.cod(im) != f.obj_map[c.base.cod(phi)]) {
      throw ValidationError("functor breaks endpoints at arrow " +
                            std::to_string(phi));
    }
  }
  for (int a = 0; a < m; ++a) {
    if (f.arr_map[c.base.identity[a]] != d.base.identity[f.obj_map[a]]) {
      throw ValidationError("functor breaks identity at object " +
                            std::to_string(a));
    }
  }
  for (int phi = 0; phi < k; ++phi) {
    for (int psi = 0; psi < k; ++psi) {
      if (!c.base.composable(phi, psi)) {
        continue;
      }
      if (f.arr_map[c.base.compose(phi, psi)] !=
          d.base.compose(f.arr_map[phi], f.arr_map[psi])) {
        throw ValidationError("functor breaks composition at (" +
                              std::to_string(phi) + "," +
                              std::to_string(psi) + ")");
      }
    }
  }
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      if (f.arr_map[c.wire_at(a, b)] !=
          d.wire_at(f.obj_map[a], f.obj_map[b])) {
        throw ValidationError("functor breaks wire (" + std::to_string(a) +
                              "," + std::to_string(b) + ")");
      }
    }
  }
}

std::vector<int> s_on_functor(const WiredCategory& c, const WiredCategory& d,
                              const WiredFunctor& f) {
  validate_wired_functor(c, d, f);
  WiredSemigroup sc = wired_to_semigroup(c);
  WiredSemigroup sd = wired_to_semigroup(d);
  for (int x = 0; x < sc.sgr.n; ++x) {
    for (int y = 0; y < sc.sgr.n; ++y) {
      if (f.arr_map[sc.sgr.at(x, y)] !=
          sd.sgr.at(f.arr_map[x], f.arr_map[y])) {
        throw NotHomomorphismError(x, y);
      }
    }
  }
  return f.arr_map;
}

std::vector<int> split_epi_witness(const FiniteCategory& c) {
  int k = c.num_arrows();
  std::vector<int> witness(k, -1);
  for (int f = 0; f < k; ++f) {
    int id_cod = c.identity[c.cod(f)];
    for (int g = 0; g < k; ++g) {
      if (c.composable(g, f) && c.dom(g) == c.cod(f) &&
          c.compose(g, f) == id_cod) {
        witness[f] = g;
        break;
      }
    }
  }
  return witness;
}

std::vector<int> split_mono_witness(const FiniteCategory& c) {
  int k = c.num_arrows();
  std::vector<int> witness(k, -1);
  for (int f = 0; f < k; ++f) {
    int id_dom = c.identity[c.dom(f)];
    for (int g = 0; g < k; ++g) {
      if (c.composable(f, g) && c.cod(g) == c.dom(f) &&
          c.compose(f, g) == id_dom) {
        witness[f] = g;
        break;
      }
    }
  }
  return witness;
}

std::optional<SplitFactorization> factorize_split(const FiniteCategory& c,
                                                  int phi) {
  std::vector<int> epi_wit = split_epi_witness(c);
  std::vector<int> mono_wit = split_mono_witness(c);
  int k = c.num_arrows();
  for (int e = 0; e < k; ++e) {
    if (epi_wit[e] == -1 || c.dom(e) != c.dom(phi)) {
      continue;
    }
    for (int m = 0; m < k; ++m) {
      if (mono_wit[m] == -1 || !c.composable(e, m) || c.cod(m) != c.cod(phi)) {
        continue;
      }
      if (c.compose(e, m) == phi) {
        return SplitFactorization{e, m, epi_wit[e], mono_wit[m]};
      }
    }
  }
  return std::nullopt;
}

namespace {

// The wire-interleaving diagram for alpha: a->x, beta: b->y.  Nodes 0..3
// are the top row (a, b, a, b), nodes 4..7 the bottom row (x, y, x, y).
struct DiagramEdge {
  int from, to, arrow;
};

std::vector<DiagramEdge> theta_diagram(const WiredCategory& c, int alpha,
                                       int beta) {
  int a = c.base.dom(alpha), x = c.base.cod(alpha);
  int b = c.base.dom(beta), y = c.base.cod(beta);
  int wab = c.wire_at(a, b), wba = c.wire_at(b, a);
  int wxy = c.wire_at(x, y), wyx = c.wire_at(y, x);
  return {
      {0, 1, wab}, {1, 2, wba}, {2, 3, wab},   // top rail
      {4, 5, wxy}, {5, 6, wyx}, {6, 7, wxy},   // bottom rail
      {0, 4, alpha}, {1, 5, beta}, {2, 6, alpha}, {3, 7, beta},
      {0, 6, alpha}, {1, 7, beta},             // printed diagonals
  };
}

// Appends the composites of every directed path from `node` to each node,
// continuing the partial composite `acc` (-1 = empty so far).
void collect_paths(const std::vector<DiagramEdge>& edges,
                   const FiniteCategory& cat, int node, int acc,
                   std::vector<std::vector<int>>& composites) {
  if (acc != -1) {
    composites[node].push_back(acc);
  }
  for (const DiagramEdge& e : edges) {
    if (e.from != node) {
      continue;
    }
    int next = acc == -1 ? e.arrow : cat.compose(acc, e.arrow);
    collect_paths(edges, cat, e.to, next, composites);
  }
}

bool theta_related(const WiredCategory& c, int alpha, int beta) {
  std::vector<DiagramEdge> edges = theta_diagram(c, alpha, beta);
  for (int start = 0; start < 8; ++start) {
    std::vector<std::vector<int>> composites(8);
    collect_paths(edges, c.base, start, -1, composites);
    for (int end = 0; end < 8; ++end) {
      for (size_t i = 1; i < composites[end].size(); ++i) {
        if (composites[end][i] != composites[end][0]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool theta_related_by_equations(const WiredCategory& c, int alpha, int beta) {
  const FiniteCategory& cat = c.base;
  int a = cat.dom(alpha), x = cat.cod(alpha);
  int b = cat.dom(beta), y = cat.cod(beta);
  int wab = c.wire_at(a, b), wba = c.wire_at(b, a);
  int wxy = c.wire_at(x, y), wyx = c.wire_at(y, x);
  return cat.compose(alpha, wxy) == cat.compose(wab, beta) &&
         cat.compose(beta, wyx) == cat.compose(wba, alpha) &&
         cat.compose(cat.compose(wab, wba), alpha) == alpha &&
         cat.compose(cat.compose(wba, wab), beta) == beta;
}

}  // namespace

std::vector<std::vector<bool>> theta(const WiredCategory& c) {
  int k = c.base.num_arrows();
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
  for (int alpha = 0; alpha < k; ++alpha) {
    for (int beta = 0; beta < k; ++beta) {
      rel[alpha][beta] = theta_related(c, alpha, beta);
    }
  }
  return rel;
}

std::vector<std::vector<bool>> theta_by_equations(const WiredCategory& c) {
  int k = c.base.num_arrows();
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
  for (int alpha = 0; alpha < k; ++alpha) {
    for (int beta = 0; beta < k; ++beta) {
      rel[alpha][beta] = theta_related_by_equations(c, alpha, beta);
    }
  }
  return rel;
}

ThetaReport theta_properties(const WiredCategory& c) {
  int k = c.base.num_arrows();
  std::vector<std::vector<bool>> rel = theta(c);
  ThetaReport report;
  report.reflexive = true;
  report.symmetric = true;
  report.parallel_collapse = true;
  for (int i = 0; i < k; ++i) {
    report.reflexive = report.reflexive && rel[i][i];
    for (int j = 0; j < k; ++j) {
      if (rel[i][j]) {
        ++report.related_pairs;
      }
      report.symmetric = report.symmetric && rel[i][j] == rel[j][i];
      if (rel[i][j] && i != j && c.base.dom(i) == c.base.dom(j) &&
          c.base.cod(i) == c.base.cod(j)) {
        report.parallel_collapse = false;
      }
    }
  }
  report.equations_agree = rel == theta_by_equations(c);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (!rel[i][j]) {
        continue;
      }
      for (int l = 0; l < k; ++l) {
        if (rel[j][l] && !rel[i][l]) {
          report.transitivity_counterexamples.push_back({i, j, l});
        }
      }
    }
  }
  return report;
}

std::string wired_to_json(const WiredCategory& c,
                          const std::vector<std::string>& object_names,
                          const std::vector<std::string>& arrow_names) {
  nlohmann::ordered_json doc;
  doc["objects"] = c.base.num_objects;
  doc["object_names"] = object_names;
  doc["arrows"] = nlohmann::ordered_json::array();
  for (int f = 0; f < c.base.num_arrows(); ++f) {
    nlohmann::ordered_json arrow;
    arrow["name"] = arrow_names[f];
    arrow["dom"] = c.base.dom(f);
    arrow["cod"] = c.base.cod(f);
    doc["arrows"].push_back(arrow);
  }
  doc["identity"] = c.base.identity;
  doc["wire"] = c.wire;
  doc["composition"] = nlohmann::ordered_json::array();
  for (int f = 0; f < c.base.num_arrows(); ++f) {
    for (int g = 0; g < c.base.num_arrows(); ++g) {
      if (c.base.composable(f, g)) {
        doc["composition"].push_back({f, g, c.base.compose(f, g)});
      }
    }
  }
  return doc.dump(2) + "\n";
}

std::string wired_to_json(const WiredCategory& c) {
  std::vector<std::string> object_names, arrow_names;
  for (int a = 0; a < c.base.num_objects; ++a) {
    object_names.push_back("o" + std::to_string(a));
  }
  for (int f = 0; f < c.base.num_arrows(); ++f) {
    arrow_names.push_back("f" + std::to_string(f));
  }
  return wired_to_json(c, object_names, arrow_names);
}

}  // namespace wirecat
