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

#include "wirecat/semigroupad.hpp"

#include <sstream>

#include "wirecat/errors.hpp"

namespace wirecat {

namespace {

// Anything larger than this is refused as a materialized table.
constexpr long long kMaxTable = 1 << 20;

void require_table(long long size, const std::string& what) {
  if (size > kMaxTable) {
    throw SizeBoundError(what + " needs a table of " + std::to_string(size) +
                         " entries (cap " + std::to_string(kMaxTable) + ")");
  }
}

}  // namespace

FinFunction fin_identity(int k) {
  FinFunction f;
  f.dom = f.cod = k;
  f.table.resize(k);
  for (int i = 0; i < k; ++i) {
    f.table[i] = i;
  }
  return f;
}

FinFunction then(const FinFunction& f, const FinFunction& g) {
  if (f.cod != g.dom) {
    throw ShapeMismatchError("cannot compose: cod " + std::to_string(f.cod) +
                             " != dom " + std::to_string(g.dom));
  }
  FinFunction h;
  h.dom = f.dom;
  h.cod = g.cod;
  h.table.resize(f.dom);
  for (int x = 0; x < f.dom; ++x) {
    h.table[x] = g.table[f.table[x]];
  }
  return h;
}

void for_each_function(int dom, int cod,
                       const std::function<void(const FinFunction&)>& fn) {
  if (dom > 0 && cod == 0) {
    return;  // no functions into the empty set
  }
  FinFunction f;
  f.dom = dom;
  f.cod = cod;
  f.table.assign(dom, 0);
  while (true) {
    fn(f);
    int pos = dom - 1;
    while (pos >= 0 && f.table[pos] == cod - 1) {
      f.table[pos--] = 0;
    }
    if (pos < 0) {
      return;
    }
    ++f.table[pos];
  }
}

namespace {

class WriterSemigroupad final : public Semigroupad {
 public:
  WriterSemigroupad(int n, std::vector<int> table, std::string name)
      : n_(n), table_(std::move(table)), name_(std::move(name)) {
    if (n_ < 1 || static_cast<int>(table_.size()) != n_ * n_) {
      throw ValidationError("writer needs a square operation table");
    }
    for (int v : table_) {
      if (v < 0 || v >= n_) {
        throw ValidationError("writer operation entry out of range");
      }
    }
  }

  std::string name() const override { return name_; }

  int carrier_size(int k) const override {
    if (k < 0) {
      throw ShapeMismatchError("negative set size");
    }
    require_table(static_cast<long long>(k) * n_, name_ + " carrier");
    return k * n_;
  }

  FinFunction lift(const FinFunction& f) const override {
    FinFunction g;
    g.dom = carrier_size(f.dom);
    g.cod = carrier_size(f.cod);
    g.table.resize(g.dom);
    for (int a = 0; a < f.dom; ++a) {
      for (int s = 0; s < n_; ++s) {
        g.table[a * n_ + s] = f.table[a] * n_ + s;
      }
    }
    return g;
  }

  FinFunction mu(int k) const override {
    FinFunction m;
    m.dom = carrier_size(carrier_size(k));
    m.cod = carrier_size(k);
    m.table.resize(m.dom);
    for (int a = 0; a < k; ++a) {
      for (int s1 = 0; s1 < n_; ++s1) {
        for (int s2 = 0; s2 < n_; ++s2) {
          m.table[(a * n_ + s1) * n_ + s2] = a * n_ + table_[s1 * n_ + s2];
        }
      }
    }
    return m;
  }

  std::string decode(int /*k*/, int value) const override {
    std::ostringstream out;
    out << '(' << value / n_ << ',' << value % n_ << ')';
    return out.str();
  }

 private:
  int n_;
  std::vector<int> table_;
  std::string name_;
};

class NepowSemigroupad final : public Semigroupad {
 public:
  std::string name() const override { return "nepow"; }

  int carrier_size(int k) const override {
    if (k < 0 || k > 20) {
      throw SizeBoundError("nepow carrier for set size " + std::to_string(k) +
                           " exceeds the table cap");
    }
    return (1 << k) - 1;
  }

  FinFunction lift(const FinFunction& f) const override {
    FinFunction g;
    g.dom = carrier_size(f.dom);
    g.cod = carrier_size(f.cod);
    g.table.resize(g.dom);
    for (int v = 0; v < g.dom; ++v) {
      unsigned mask = static_cast<unsigned>(v) + 1;
      unsigned image = 0;
      for (int a = 0; a < f.dom; ++a) {
        if (mask >> a & 1u) {
          image |= 1u << f.table[a];
        }
      }
      g.table[v] = static_cast<int>(image) - 1;
    }
    return g;
  }

  FinFunction mu(int k) const override {
    int tk = carrier_size(k);
    FinFunction m;
    m.dom = carrier_size(tk);
    m.cod = tk;
    m.table.resize(m.dom);
    for (int v = 0; v < m.dom; ++v) {
      unsigned family = static_cast<unsigned>(v) + 1;
      unsigned uni = 0;
      for (int member = 0; member < tk; ++member) {
        if (family >> member & 1u) {
          uni |= static_cast<unsigned>(member) + 1;  // member's own mask
        }
      }
      m.table[v] = static_cast<int>(uni) - 1;
    }
    return m;
  }

  std::string decode(int k, int value) const override {
    unsigned mask = static_cast<unsigned>(value) + 1;
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int a = 0; a < k; ++a) {
      if (mask >> a & 1u) {
        if (!first) {
          out << ',';
        }
        out << a;
        first = false;
      }
    }
    out << '}';
    return out.str();
  }
};

}  // namespace

std::unique_ptr<Semigroupad> writer_semigroupad(const FiniteSemigroup& s0) {
  return std::make_unique<WriterSemigroupad>(s0.n, s0.table, "writer");
}

std::unique_ptr<Semigroupad> writer_over_magma(int n, std::vector<int> table,
                                               const std::string& name) {
  return std::make_unique<WriterSemigroupad>(n, std::move(table), name);
}

std::unique_ptr<Semigroupad> nepow_semigroupad() {
  return std::make_unique<NepowSemigroupad>();
}

SemigroupadCheckReport validate_semigroupad(const Semigroupad& t,
                                            int size_bound) {
  SemigroupadCheckReport report;
  auto guarded = [&report](const std::string& what,
                           const std::function<void()>& body) {
    try {
      body();
    } catch (const SizeBoundError&) {
      report.skipped.push_back(what);
    }
  };

  for (int k = 0; k <= size_bound; ++k) {
    guarded("functor identity at " + std::to_string(k), [&] {
      if (t.lift(fin_identity(k)) != fin_identity(t.carrier_size(k))) {
        report.violations.push_back("lift(id) != id at size " +
                                    std::to_string(k));
      }
    });
  }

  for (int i = 0; i <= size_bound; ++i) {
    for (int j = 0; j <= size_bound; ++j) {
      for (int k = 0; k <= size_bound; ++k) {
        guarded("functor composition at (" + std::to_string(i) + "," +
                    std::to_string(j) + "," + std::to_string(k) + ")",
                [&] {
                  for_each_function(i, j, [&](const FinFunction& f) {
                    for_each_function(j, k, [&](const FinFunction& g) {
                      if (t.lift(then(f, g)) != then(t.lift(f), t.lift(g))) {
                        report.violations.push_back(
                            "lift(f;g) != lift(f);lift(g) at (" +
                            std::to_string(i) + "," + std::to_string(j) + "," +
                            std::to_string(k) + ")");
                      }
                    });
                  });
                });
      }
    }
  }

  for (int j = 0; j <= size_bound; ++j) {
    for (int k = 0; k <= size_bound; ++k) {
      guarded("mu naturality at (" + std::to_string(j) + "," +
                  std::to_string(k) + ")",
              [&] {
                FinFunction mu_j = t.mu(j);
                FinFunction mu_k = t.mu(k);
                for_each_function(j, k, [&](const FinFunction& f) {
                  if (then(t.lift(t.lift(f)), mu_k) != then(mu_j, t.lift(f))) {
                    report.violations.push_back("mu not natural at f: [" +
                                                std::to_string(j) + "]->[" +
                                                std::to_string(k) + "]");
                  }
                });
              });
    }
  }

  for (int k = 0; k <= size_bound; ++k) {
    guarded("associativity square at " + std::to_string(k), [&] {
      FinFunction mu_k = t.mu(k);
      FinFunction route_tmu = then(t.lift(mu_k), mu_k);
      FinFunction route_mut = then(t.mu(t.carrier_size(k)), mu_k);
      if (route_tmu != route_mut) {
        report.violations.push_back("associativity square fails at size " +
                                    std::to_string(k));
      }
    });
  }
  return report;
}

FinFunction kleisli_star(const Semigroupad& t, const FinFunction& f,
                         int b_size) {
  if (f.cod != t.carrier_size(b_size)) {
    throw ShapeMismatchError("star expects cod(f) == carrier(" +
                             std::to_string(b_size) + ")");
  }
  return then(t.lift(f), t.mu(b_size));
}

KAxiomReport check_k_axioms(const Semigroupad& t, int size_bound) {
  KAxiomReport report;
  for (int a = 0; a <= size_bound; ++a) {
    for (int b = 0; b <= size_bound; ++b) {
      for (int c = 0; c <= size_bound; ++c) {
        // k1: f: a->b, g: b->Tc.
        for_each_function(b, t.carrier_size(c), [&](const FinFunction& g) {
          FinFunction star_g = kleisli_star(t, g, c);
          for_each_function(a, b, [&](const FinFunction& f) {
            ++report.k1_cases;
            if (kleisli_star(t, then(f, g), c) != then(t.lift(f), star_g)) {
              report.violations.push_back(
                  "k1 fails at sizes (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(c) + ")");
            }
          });
        });
        // k2: f: a->Tb, g: b->c.
        for_each_function(a, t.carrier_size(b), [&](const FinFunction& f) {
          FinFunction star_f = kleisli_star(t, f, b);
          for_each_function(b, c, [&](const FinFunction& g) {
            ++report.k2_cases;
            if (kleisli_star(t, then(f, t.lift(g)), c) !=
                then(star_f, t.lift(g))) {
              report.violations.push_back(
                  "k2 fails at sizes (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(c) + ")");
            }
          });
        });
        // k3: f: a->Tb, g: b->Tc.
        for_each_function(b, t.carrier_size(c), [&](const FinFunction& g) {
          FinFunction star_g = kleisli_star(t, g, c);
          for_each_function(a, t.carrier_size(b), [&](const FinFunction& f) {
            ++report.k3_cases;
            if (kleisli_star(t, then(f, star_g), c) !=
                then(kleisli_star(t, f, b), star_g)) {
              report.violations.push_back(
                  "k3 fails at sizes (" + std::to_string(a) + "," +
                  std::to_string(b) + "," + std::to_string(c) + ")");
            }
          });
        });
      }
    }
  }
  return report;
}

StarMuRoundtrip mu_from_star(const Semigroupad& functor_part,
                             const StarOracle& star, int size_bound) {
  StarMuRoundtrip result;
  result.derived_mu.resize(size_bound + 1);
  for (int k = 0; k <= size_bound; ++k) {
    result.derived_mu[k] =
        star(fin_identity(functor_part.carrier_size(k)), k);
  }
  for (int j = 0; j <= size_bound; ++j) {
    for (int k = 0; k <= size_bound; ++k) {
      for_each_function(j, k, [&](const FinFunction& f) {
        if (then(functor_part.lift(functor_part.lift(f)),
                 result.derived_mu[k]) !=
            then(result.derived_mu[j], functor_part.lift(f))) {
          result.mu_natural = false;
        }
      });
    }
  }
  for (int a = 0; a <= size_bound; ++a) {
    for (int b = 0; b <= size_bound; ++b) {
      for_each_function(a, functor_part.carrier_size(b),
                        [&](const FinFunction& f) {
                          if (then(functor_part.lift(f),
                                   result.derived_mu[b]) != star(f, b)) {
                            result.star_recovered = false;
                          }
                        });
    }
  }
  return result;
}

bool mu_star_mu_roundtrip(const Semigroupad& t, int size_bound) {
  StarOracle star = [&t](const FinFunction& f, int b_size) {
    return kleisli_star(t, f, b_size);
  };
  StarMuRoundtrip trip = mu_from_star(t, star, size_bound);
  if (!trip.ok()) {
    return false;
  }
  for (int k = 0; k <= size_bound; ++k) {
    if (trip.derived_mu[k] != t.mu(k)) {
      return false;
    }
  }
  return true;
}

SemicategoryReport kleisli_semicategory_check(const Semigroupad& t,
                                              int size_bound) {
  SemicategoryReport report;
  for (int a = 0; a <= size_bound; ++a) {
    for (int b = 0; b <= size_bound; ++b) {
      for (int c = 0; c <= size_bound; ++c) {
        for (int d = 0; d <= size_bound; ++d) {
          for_each_function(a, t.carrier_size(b), [&](const FinFunction& f) {
            for_each_function(b, t.carrier_size(c), [&](const FinFunction& g) {
              FinFunction fg = then(f, kleisli_star(t, g, c));
              for_each_function(
                  c, t.carrier_size(d), [&](const FinFunction& h) {
                    ++report.cases;
                    FinFunction lhs = then(fg, kleisli_star(t, h, d));
                    FinFunction gh = then(g, kleisli_star(t, h, d));
                    FinFunction rhs = then(f, kleisli_star(t, gh, d));
                    if (lhs != rhs) {
                      report.associative = false;
                    }
                  });
            });
          });
        }
      }
    }
  }
  return report;
}

FinFunction right_translation(const FiniteSemigroup& s, int y) {
  FinFunction f;
  f.dom = f.cod = s.n;
  f.table.resize(s.n);
  for (int x = 0; x < s.n; ++x) {
    f.table[x] = s.at(x, y);
  }
  return f;
}

FinFunction bar_map(const Semigroupad& t, const FiniteSemigroup& s, int p) {
  FinFunction f;
  f.dom = s.n;
  f.cod = t.carrier_size(s.n);
  f.table.resize(s.n);
  for (int x = 0; x < s.n; ++x) {
    f.table[x] = t.lift(right_translation(s, x)).table[p];
  }
  return f;
}

FinFunction tilde_map(const Semigroupad& t, const FiniteSemigroup& s, int p) {
  return kleisli_star(t, bar_map(t, s, p), s.n);
}

FiniteSemigroup induced_operation(const Semigroupad& t,
                                  const FiniteSemigroup& s) {
  int n = t.carrier_size(s.n);
  require_table(static_cast<long long>(n) * n, "induced operation");
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int p = 0; p < n; ++p) {
    FinFunction tilde_p = tilde_map(t, s, p);
    for (int q = 0; q < n; ++q) {
      table[static_cast<size_t>(p) * n + q] = tilde_p.table[q];
    }
  }
  return validate_semigroup(n, std::move(table));
}

FinFunction nat_component(const Semigroupad& t, const NatFamily& xi, int m) {
  if (m <= xi.bound) {
    return xi.component[m];
  }
  if (xi.bound < 1) {
    throw ShapeMismatchError("family bound too small to extend");
  }
  // xi_m(a) is forced by naturality along the point map [1] -> [m], 0 |-> a.
  FinFunction f;
  f.dom = m;
  f.cod = t.carrier_size(m);
  f.table.resize(m);
  int seed = xi.component[1].table[0];
  for (int a = 0; a < m; ++a) {
    FinFunction point;
    point.dom = 1;
    point.cod = m;
    point.table = {a};
    f.table[a] = t.lift(point).table[seed];
  }
  return f;
}

std::vector<NatFamily> enumerate_nat_families(const Semigroupad& t,
                                              int size_bound) {
  // Candidate component tables for each size, walked as one big odometer.
  long long total = 1;
  for (int k = 0; k <= size_bound; ++k) {
    for (int i = 0; i < k; ++i) {
      total *= t.carrier_size(k);
      if (total > 10'000'000) {
        throw SizeBoundError("natural family enumeration too large");
      }
    }
  }

  std::vector<NatFamily> found;
  NatFamily xi;
  xi.bound = size_bound;
  xi.component.resize(size_bound + 1);
  for (int k = 0; k <= size_bound; ++k) {
    xi.component[k].dom = k;
    xi.component[k].cod = t.carrier_size(k);
    xi.component[k].table.assign(k, 0);
  }

  auto natural = [&]() {
    for (int j = 0; j <= size_bound; ++j) {
      for (int k = 0; k <= size_bound; ++k) {
        bool ok = true;
        for_each_function(j, k, [&](const FinFunction& f) {
          if (!ok) {
            return;
          }
          ok = then(xi.component[j], t.lift(f)) == then(f, xi.component[k]);
        });
        if (!ok) {
          return false;
        }
      }
    }
    return true;
  };

  while (true) {
    if (natural()) {
      found.push_back(xi);
    }
    // Advance: least significant digit is the last entry of the largest
    // component.
    int k = size_bound;
    int pos = k - 1;
    while (k >= 0) {
      if (pos >= 0 && xi.component[k].table[pos] < t.carrier_size(k) - 1) {
        ++xi.component[k].table[pos];
        break;
      }
      if (pos >= 0) {
        xi.component[k].table[pos] = 0;
        --pos;
        continue;
      }
      --k;
      pos = k - 1;
    }
    if (k < 0) {
      break;
    }
  }
  return found;
}

ConstantClassReport constant_class(const Semigroupad& t, const NatFamily& xi,
                                   int size_bound) {
  if (xi.bound < size_bound) {
    throw ShapeMismatchError("family has no components up to size " +
                             std::to_string(size_bound));
  }
  ConstantClassReport report;

  // Component (mu) form.
  ConstantFlags& m = report.mu_form;
  m.left = m.right = m.central = m.idempotent = true;
  report.note_holds = true;
  for (int k = 0; k <= size_bound; ++k) {
    FinFunction mu_k = t.mu(k);
    FinFunction xi_k = xi.component[k];
    FinFunction id_tk = fin_identity(t.carrier_size(k));
    FinFunction xi_at_tk = nat_component(t, xi, t.carrier_size(k));
    FinFunction lift_route = then(t.lift(xi_k), mu_k);
    FinFunction comp_route = then(xi_at_tk, mu_k);
    m.left = m.left && lift_route == id_tk;
    m.right = m.right && comp_route == id_tk;
    m.central = m.central && lift_route == comp_route;
    m.idempotent = m.idempotent && then(xi_k, lift_route) == xi_k;
    report.note_holds =
        report.note_holds && then(xi_k, t.lift(xi_k)) == then(xi_k, xi_at_tk);

    // The extended components feeding the checks above must themselves be
    // natural against everything in the bounded skeleton.
    for (int j = 0; j <= size_bound; ++j) {
      for_each_function(j, t.carrier_size(k), [&](const FinFunction& f) {
        if (then(xi.component[j], t.lift(f)) != then(f, xi_at_tk)) {
          report.extension_natural = false;
        }
      });
    }
  }

  // Kleisli (star) form property lists, quantified over arrows.
  ConstantFlags& s = report.star_form;
  s.left = s.right = s.central = s.idempotent = true;
  for (int a = 0; a <= size_bound; ++a) {
    FinFunction star_xi_a = kleisli_star(t, xi.component[a], a);
    s.left = s.left && star_xi_a == fin_identity(t.carrier_size(a));
    s.idempotent =
        s.idempotent && then(xi.component[a], star_xi_a) == xi.component[a];
    for (int b = 0; b <= size_bound; ++b) {
      FinFunction star_xi_b = kleisli_star(t, xi.component[b], b);
      for_each_function(a, t.carrier_size(b), [&](const FinFunction& f) {
        FinFunction star_f = kleisli_star(t, f, b);
        FinFunction left_side = then(xi.component[a], star_f);
        s.right = s.right && left_side == f;
        s.central = s.central && left_side == then(f, star_xi_b);
      });
    }
  }

  report.agree = report.mu_form == report.star_form;
  return report;
}

TransferReport constants_transfer_check(const Semigroupad& t,
                                        const NatFamily& xi,
                                        const FiniteSemigroup& s, int e,
                                        int size_bound) {
  TransferReport report;
  report.xi_flags = constant_class(t, xi, size_bound).mu_form;
  FinFunction xi_s = nat_component(t, xi, s.n);
  report.e_image = xi_s.table[e];
  FiniteSemigroup induced = induced_operation(t, s);

  bool e_left = true, e_right = true, e_central = true;
  for (int x = 0; x < s.n; ++x) {
    e_left = e_left && s.at(e, x) == x;
    e_right = e_right && s.at(x, e) == x;
    e_central = e_central && s.at(e, x) == s.at(x, e);
  }
  bool e_idem = s.at(e, e) == e;

  int cap = report.e_image;
  report.left.hypothesis = report.xi_flags.left && e_left;
  report.right.hypothesis = report.xi_flags.right && e_right;
  report.central.hypothesis = report.xi_flags.central && e_central;
  report.idempotent.hypothesis = report.xi_flags.idempotent && e_idem;

  report.left.conclusion = true;
  report.right.conclusion = true;
  report.central.conclusion = true;
  for (int p = 0; p < induced.n; ++p) {
    report.left.conclusion =
        report.left.conclusion && induced.at(cap, p) == p;
    report.right.conclusion =
        report.right.conclusion && induced.at(p, cap) == p;
    report.central.conclusion =
        report.central.conclusion && induced.at(cap, p) == induced.at(p, cap);
  }
  report.idempotent.conclusion = induced.at(cap, cap) == cap;
  return report;
}

}  // namespace wirecat
