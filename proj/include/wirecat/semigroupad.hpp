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

#ifndef WIRECAT_SEMIGROUPAD_HPP_
#define WIRECAT_SEMIGROUPAD_HPP_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "wirecat/semigroup.hpp"

namespace wirecat {

// A total function between skeleton sets [0..dom) -> [0..cod).
struct FinFunction {
  int dom = 0;
  int cod = 0;
  std::vector<int> table;

  int operator()(int x) const { return table[x]; }
  bool operator==(const FinFunction& other) const = default;
};

FinFunction fin_identity(int k);

// Diagrammatic composition: x |-> g(f(x)).  Throws ShapeMismatchError.
FinFunction then(const FinFunction& f, const FinFunction& g);

// Invokes fn(FinFunction) for every total function [dom] -> [cod], in
// lexicographic table order.
void for_each_function(int dom, int cod,
                       const std::function<void(const FinFunction&)>& fn);

// An endofunctor on the skeleton of finite sets together with a
// multiplication mu: TT -> T.  Every finite set is identified with the
// skeleton set of its size, so T(T(A)) is carrier applied twice.
// Naturality over all of Set is approximated by exhaustiveness over the
// bounded skeleton; table materialization is capped (SizeBoundError).
class Semigroupad {
 public:
  virtual ~Semigroupad() = default;

  virtual std::string name() const = 0;
  // |T([k])|.
  virtual int carrier_size(int k) const = 0;
  // T(f): T[dom f] -> T[cod f].
  virtual FinFunction lift(const FinFunction& f) const = 0;
  // mu component at [k]: T(T[k]) -> T[k].
  virtual FinFunction mu(int k) const = 0;
  // Printable form of carrier element `value` of T[k], for diagnostics.
  virtual std::string decode(int k, int value) const = 0;
};

// A |-> A x S with mu the free action ((a,s1),s2) |-> (a, s1*s2); pair
// (a, s) has index a*|S| + s.
std::unique_ptr<Semigroupad> writer_semigroupad(const FiniteSemigroup& s0);

// The same construction over a raw (possibly non-associative) binary
// operation.  Functor laws and mu-naturality hold regardless; the
// associativity square holds exactly when the operation is associative.
std::unique_ptr<Semigroupad> writer_over_magma(int n, std::vector<int> table,
                                               const std::string& name);

// A |-> nonempty subsets of A (subset with bitmask m is element m-1), lift
// is the image map and mu the union of a family.
std::unique_ptr<Semigroupad> nepow_semigroupad();

// Exhaustive check of functor laws, mu-naturality and the associativity
// square over all sets of size 0..size_bound.  Laws whose tables exceed
// the cap are recorded as skipped, not silently dropped.
struct SemigroupadCheckReport {
  std::vector<std::string> violations;
  std::vector<std::string> skipped;

  bool ok() const { return violations.empty(); }
};

SemigroupadCheckReport validate_semigroupad(const Semigroupad& t,
                                            int size_bound);

// Kleisli lifting of f: A -> T[b_size], defined as lift(f) ; mu(b_size).
FinFunction kleisli_star(const Semigroupad& t, const FinFunction& f,
                         int b_size);

// k1: (f;g)* = lift(f);g*          for f: A->B, g: B->TC
// k2: (f;lift(g))* = f*;lift(g)    for f: A->TB, g: B->C
// k3: (f;g*)* = f*;g*              for f: A->TB, g: B->TC
struct KAxiomReport {
  long long k1_cases = 0;
  long long k2_cases = 0;
  long long k3_cases = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

KAxiomReport check_k_axioms(const Semigroupad& t, int size_bound);

// An externally supplied Kleisli lifting: star(f, b_size) for f with
// cod == carrier_size(b_size).
using StarOracle = std::function<FinFunction(const FinFunction&, int)>;

// Recovers mu from a star operation via mu_k := star(1_{T[k]}), checks the
// recovered family is natural, and checks the star built from it agrees
// with the oracle on every f within the bound (the star->mu->star leg).
struct StarMuRoundtrip {
  std::vector<FinFunction> derived_mu;  // index k = component at [k]
  bool mu_natural = true;
  bool star_recovered = true;

  bool ok() const { return mu_natural && star_recovered; }
};

StarMuRoundtrip mu_from_star(const Semigroupad& functor_part,
                             const StarOracle& star, int size_bound);

// The mu->star->mu leg: derives star from t's own mu and re-extracts mu.
bool mu_star_mu_roundtrip(const Semigroupad& t, int size_bound);

// Associativity of the Kleisli composite f (.) g := f ; g* over all
// composable triples with set sizes <= size_bound.
struct SemicategoryReport {
  long long cases = 0;
  bool associative = true;
};

SemicategoryReport kleisli_semicategory_check(const Semigroupad& t,
                                              int size_bound);

// x |-> x*y.
FinFunction right_translation(const FiniteSemigroup& s, int y);

// bar(p): S -> TS,  x |-> T(.x)(p).
FinFunction bar_map(const Semigroupad& t, const FiniteSemigroup& s, int p);

// tilde(p) := (bar p)* : TS -> TS.
FinFunction tilde_map(const Semigroupad& t, const FiniteSemigroup& s, int p);

// The induced semigroup on T(S): p (.) q := tilde(p)(q).  The table is
// validated for associativity from scratch.
FiniteSemigroup induced_operation(const Semigroupad& t,
                                  const FiniteSemigroup& s);

// A natural family xi_k: [k] -> T[k] for k = 0..bound.  Components at
// larger sets are obtained from xi_1 by naturality along point maps.
struct NatFamily {
  int bound = 0;
  std::vector<FinFunction> component;
};

FinFunction nat_component(const Semigroupad& t, const NatFamily& xi, int m);

// All families natural with respect to every function between sets of
// size <= size_bound, in lexicographic order of their tables.
std::vector<NatFamily> enumerate_nat_families(const Semigroupad& t,
                                              int size_bound = 3);

struct ConstantFlags {
  bool left = false;
  bool right = false;
  bool central = false;
  bool idempotent = false;

  bool operator==(const ConstantFlags& other) const = default;
};

// Classification of a natural family against mu (left/right identity,
// central, idempotent), computed two independent ways: from the component
// equations on mu and from the quantified Kleisli-star characterisations.
struct ConstantClassReport {
  ConstantFlags mu_form;
  ConstantFlags star_form;
  bool agree = false;
  bool note_holds = false;          // xi ; lift(xi) == xi ; xi_at(T-)
  bool extension_natural = true;    // xi at carrier-sized sets is natural

  bool ok() const { return agree && note_holds && extension_natural; }
};

ConstantClassReport constant_class(const Semigroupad& t, const NatFamily& xi,
                                   int size_bound);

// Transfer of constants to the induced semigroup on T(S): each implication
// "xi has property P and e has property P in S  =>  xi_S(e) has property P
// in the induced semigroup" with vacuous hypotheses recorded as such.
struct TransferItem {
  bool hypothesis = false;
  bool conclusion = false;

  bool ok() const { return !hypothesis || conclusion; }
};

struct TransferReport {
  int e_image = -1;  // xi_S(e) as an element of the induced semigroup
  ConstantFlags xi_flags;
  TransferItem left, right, central, idempotent;

  bool ok() const {
    return left.ok() && right.ok() && central.ok() && idempotent.ok();
  }
};

TransferReport constants_transfer_check(const Semigroupad& t,
                                        const NatFamily& xi,
                                        const FiniteSemigroup& s, int e,
                                        int size_bound);

}  // namespace wirecat

#endif  // WIRECAT_SEMIGROUPAD_HPP_
