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

#include "wirecat/suite.hpp"

#include <functional>
#include <sstream>

#include "wirecat/corpus.hpp"
#include "wirecat/errors.hpp"
#include "wirecat/karoubi.hpp"
#include "wirecat/ordered.hpp"
#include "wirecat/semigroupad.hpp"

namespace wirecat {

namespace {

constexpr int kSuiteArrowBound = 4096;  // headroom for K(S(K(S))) sweeps

class Builder {
 public:
  explicit Builder(SuiteReport& report) : report_(report) {}

  void info(const std::string& line) { report_.lines.push_back("INFO " + line); }

  void check(const std::string& name, bool ok, const std::string& detail) {
    if (ok) {
      report_.lines.push_back("PASS " + name + ": " + detail);
    } else {
      report_.lines.push_back("FAIL " + name + ": " + detail);
      ++report_.failures;
    }
  }

 private:
  SuiteReport& report_;
};

struct Instances {
  std::vector<Corpus> corpora;  // per order 1..max_order

  std::vector<const FiniteSemigroup*> all() const {
    std::vector<const FiniteSemigroup*> out;
    for (const Corpus& c : corpora) {
      for (const FiniteSemigroup& s : c.tables) {
        out.push_back(&s);
      }
    }
    return out;
  }
};

// The wired categories used for functor-level sweeps (Karoubi envelopes of
// corpus members are handled separately, per member).
std::vector<std::pair<std::string, WiredCategory>> wired_fixtures() {
  std::vector<std::pair<std::string, WiredCategory>> out;
  out.emplace_back("one-object(Z2)", one_object_wired(fixture("Z2")));
  out.emplace_back("one-object(SL2)", one_object_wired(fixture("SL2")));
  out.emplace_back("one-object(T2)", one_object_wired(fixture("T2")));
  out.emplace_back("indiscrete(1)", indiscrete_wired(1));
  out.emplace_back("indiscrete(2)", indiscrete_wired(2));
  out.emplace_back("indiscrete(3)", indiscrete_wired(3));
  for (const auto& [name, s] : fixtures()) {
    out.emplace_back("K(" + name + ")", karoubi_envelope(s).wired);
  }
  return out;
}

void run_regularity(Builder& b, const Instances& in) {
  auto members = in.all();

  long long witness_cases = 0, witness_bad = 0;
  for (const FiniteSemigroup* s : members) {
    RegularityReport reg = is_regular(*s);
    if (!reg.regular) {
      continue;
    }
    for (int x = 0; x < s->n; ++x) {
      int y = reg.witness[x];
      int e = s->at(x, y), f = s->at(y, x);
      ++witness_cases;
      if (s->at(e, e) != e || s->at(f, f) != f || s->at(e, x, f) != x) {
        ++witness_bad;
      }
    }
  }
  b.check("regular-implies-enough-witnesses", witness_bad == 0,
          std::to_string(witness_bad) + " violations in " +
              std::to_string(witness_cases) + " witness pairs e=xy, f=yx");

  long long theorem_bad = 0;
  for (const FiniteSemigroup* s : members) {
    RegularityTheoremReport report =
        theorem_regular_iff_factorization(*s, kSuiteArrowBound);
    if (!report.biconditional_holds()) {
      ++theorem_bad;
    }
  }
  b.check("regularity-theorem", theorem_bad == 0,
          std::to_string(theorem_bad) + " violations in " +
              std::to_string(members.size()) + " semigroups");

  long long fact_cases = 0, fact_bad = 0;
  for (const FiniteSemigroup* s : members) {
    KaroubiEnvelope env = karoubi_envelope(*s, kSuiteArrowBound);
    for (const KaroubiTriple& t : env.triples) {
      for (int y : pseudoinverses(*s, t.x)) {
        ++fact_cases;
        try {
          regular_factorization(*s, t, y);
        } catch (const Error&) {
          ++fact_bad;
        }
      }
    }
  }
  b.check("factorization-witness-equations", fact_bad == 0,
          std::to_string(fact_bad) + " violations in " +
              std::to_string(fact_cases) + " (triple, pseudoinverse) cases");

  long long standalone_app = 0, standalone_bad = 0;
  auto standalone = [&](const WiredCategory& c) {
    SplitFactRegularReport report = splitfact_regular_check(c, kSuiteArrowBound);
    if (report.hypothesis) {
      ++standalone_app;
      if (!report.regular || !report.witnesses_ok) {
        ++standalone_bad;
      }
    }
  };
  for (const auto& [name, c] : wired_fixtures()) {
    standalone(c);
  }
  for (const FiniteSemigroup* s : members) {
    standalone(karoubi_envelope(*s, kSuiteArrowBound).wired);
  }
  b.check("splitfact-regular-standalone", standalone_bad == 0,
          std::to_string(standalone_bad) + " violations in " +
              std::to_string(standalone_app) +
              " fully factorizable categories");

  long long lax_bad = 0, lax_cases = 0;
  auto lax = [&](const FiniteSemigroup& s) {
    RectBand band = rect_band_on_subset_pairs(idempotents(s));
    ++lax_cases;
    if (check_lax_morphism(support_map_into_rect_band(s, band), s, band.ord)) {
      ++lax_bad;
    }
  };
  for (const FiniteSemigroup* s : members) {
    lax(*s);
  }
  for (const auto& [name, s] : fixtures()) {
    lax(s);
  }
  b.check("support-lax-inequality", lax_bad == 0,
          std::to_string(lax_bad) + " violations in " +
              std::to_string(lax_cases) + " semigroups");
}

void run_adjunction(Builder& b, const Instances& in) {
  auto members = in.all();

  long long counit_bad = 0;
  long long formula_bad = 0;
  long long extension_bad = 0;
  for (const FiniteSemigroup* s : members) {
    KaroubiEnvelope env = karoubi_envelope(*s, kSuiteArrowBound);
    CounitReport cou = counit(env);
    if (cou.surjective != has_enough_idempotents(*s).enough) {
      ++counit_bad;
    }
    int k = static_cast<int>(env.triples.size());
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        const KaroubiTriple& a = env.triples[i];
        const KaroubiTriple& c = env.triples[j];
        int product = cou.sk.sgr.at(i, j);
        int expect =
            env.triple_index({a.e, s->at(s->at(a.x, c.e), c.x), c.f});
        int expect2 = env.triple_index({a.e, s->at(a.x, c.x), c.f});
        if (product != expect || product != expect2) {
          ++formula_bad;
        }
        if (env.wired.base.composable(i, j) &&
            product != env.wired.base.compose(i, j)) {
          ++extension_bad;
        }
      }
    }
  }
  b.check("counit-surjective-iff-enough-idempotents", counit_bad == 0,
          std::to_string(counit_bad) + " violations in " +
              std::to_string(members.size()) + " semigroups");
  b.check("karoubi-product-formula", formula_bad == 0,
          std::to_string(formula_bad) + " pair violations");
  b.check("extension-property", extension_bad == 0,
          std::to_string(extension_bad) + " composable pair violations");

  std::vector<std::pair<std::string, WiredCategory>> bijection_cats;
  bijection_cats.emplace_back("one-object(Z2)",
                              one_object_wired(fixture("Z2")));
  bijection_cats.emplace_back("one-object(SL2)",
                              one_object_wired(fixture("SL2")));
  bijection_cats.emplace_back("one-object(T2)",
                              one_object_wired(fixture("T2")));
  bijection_cats.emplace_back("indiscrete(2)", indiscrete_wired(2));
  bijection_cats.emplace_back("K(SL2)",
                              karoubi_envelope(fixture("SL2")).wired);
  std::vector<std::string> small = {"LZ2", "NULL2", "SL2", "Z2"};
  long long bij_cases = 0, bij_bad = 0;
  for (const auto& [cname, c] : bijection_cats) {
    for (const std::string& sname : small) {
      ++bij_cases;
      BijectionReport report = adjunction_bijection_check(c, fixture(sname));
      if (!report.ok()) {
        ++bij_bad;
      }
    }
  }
  b.check("adjunction-bijection", bij_bad == 0,
          std::to_string(bij_bad) + " violations in " +
              std::to_string(bij_cases) + " (category, semigroup) pairs");

  long long unit_cases = 0, unit_bad = 0, unit_skipped = 0;
  auto unit_check = [&](const WiredCategory& c) {
    try {
      unit(c, kSuiteArrowBound);  // validates all functor laws internally
      ++unit_cases;
    } catch (const SizeBoundError&) {
      ++unit_skipped;
    } catch (const Error&) {
      ++unit_bad;
    }
  };
  for (const auto& [name, c] : wired_fixtures()) {
    unit_check(c);
  }
  for (const FiniteSemigroup* s : members) {
    unit_check(karoubi_envelope(*s, kSuiteArrowBound).wired);
  }
  b.check("unit-functor-laws", unit_bad == 0,
          std::to_string(unit_bad) + " violations in " +
              std::to_string(unit_cases) + " wired categories (" +
              std::to_string(unit_skipped) + " skipped by arrow bound)");

  long long tri_left_ok = 0, tri_left_total = 0;
  long long tri_right_ok = 0, tri_right_total = 0, tri_skipped = 0;
  for (const auto& [name, c] : wired_fixtures()) {
    try {
      ++tri_left_total;
      tri_left_ok += triangle_left(c, kSuiteArrowBound) ? 1 : 0;
    } catch (const SizeBoundError&) {
      --tri_left_total;
      ++tri_skipped;
    }
  }
  for (const FiniteSemigroup* s : members) {
    try {
      ++tri_right_total;
      tri_right_ok += triangle_right(*s, kSuiteArrowBound) ? 1 : 0;
    } catch (const SizeBoundError&) {
      --tri_right_total;
      ++tri_skipped;
    }
  }
  b.info("triangle-identities (informational): left " +
         std::to_string(tri_left_ok) + "/" + std::to_string(tri_left_total) +
         ", right " + std::to_string(tri_right_ok) + "/" +
         std::to_string(tri_right_total) + ", skipped " +
         std::to_string(tri_skipped));
}

void run_theta(Builder& b, const Instances& in) {
  auto members = in.all();

  long long refl_sym_bad = 0, parallel_bad = 0, equations_bad = 0;
  long long counterexamples = 0;
  std::string first_counterexample;
  auto theta_check = [&](const std::string& name, const WiredCategory& c) {
    ThetaReport report = theta_properties(c);
    if (!report.reflexive || !report.symmetric) {
      ++refl_sym_bad;
    }
    if (!report.parallel_collapse) {
      ++parallel_bad;
    }
    if (!report.equations_agree) {
      ++equations_bad;
    }
    counterexamples += report.transitivity_counterexamples.size();
    if (first_counterexample.empty() &&
        !report.transitivity_counterexamples.empty()) {
      const auto& [x, y, z] = report.transitivity_counterexamples.front();
      first_counterexample = name + " arrows (" + std::to_string(x) + "," +
                             std::to_string(y) + "," + std::to_string(z) + ")";
    }
  };

  int instance_count = 0;
  for (const auto& [name, c] : wired_fixtures()) {
    theta_check(name, c);
    ++instance_count;
  }
  for (size_t order = 0; order < in.corpora.size(); ++order) {
    const Corpus& corpus = in.corpora[order];
    for (size_t i = 0; i < corpus.tables.size(); ++i) {
      theta_check("order " + std::to_string(corpus.order) + " #" +
                      std::to_string(i),
                  karoubi_envelope(corpus.tables[i], kSuiteArrowBound).wired);
      ++instance_count;
    }
  }
  b.check("theta-reflexive-symmetric", refl_sym_bad == 0,
          std::to_string(refl_sym_bad) + " violations in " +
              std::to_string(instance_count) + " wired categories");
  b.check("theta-parallel-collapse", parallel_bad == 0,
          std::to_string(parallel_bad) + " violations");
  b.check("theta-paths-vs-equations", equations_bad == 0,
          std::to_string(equations_bad) + " disagreements");
  b.info("theta-transitivity search: " + std::to_string(counterexamples) +
         " counterexamples" +
         (first_counterexample.empty() ? std::string(" (relation transitive ")
                                             + "on every tested instance)"
                                       : ", first at " + first_counterexample));
}

void run_semigroupad(Builder& b, const Instances& in) {
  std::vector<std::pair<std::string, std::unique_ptr<Semigroupad>>> instances;
  instances.emplace_back("writer(Z2)", writer_semigroupad(fixture("Z2")));
  instances.emplace_back("writer(LZ2)", writer_semigroupad(fixture("LZ2")));
  instances.emplace_back("nepow", nepow_semigroupad());

  for (const auto& [name, t] : instances) {
    SemigroupadCheckReport laws = validate_semigroupad(*t, 3);
    b.check("semigroupad-laws " + name, laws.ok(),
            std::to_string(laws.violations.size()) + " violations, " +
                std::to_string(laws.skipped.size()) +
                " checks skipped by size cap");
    KAxiomReport axioms = check_k_axioms(*t, 3);
    b.check("kleisli-axioms " + name, axioms.ok(),
            "k1 " + std::to_string(axioms.k1_cases) + ", k2 " +
                std::to_string(axioms.k2_cases) + ", k3 " +
                std::to_string(axioms.k3_cases) + " cases, " +
                std::to_string(axioms.violations.size()) + " violations");
    b.check("star-mu-roundtrip " + name, mu_star_mu_roundtrip(*t, 3),
            "mu -> star -> mu and star -> mu -> star are identities");
    SemicategoryReport semi = kleisli_semicategory_check(*t, 2);
    b.check("kleisli-semicategory " + name, semi.associative,
            std::to_string(semi.cases) + " composable triples");
  }

  // The writer construction over a non-associative operation: the
  // mu <-> (k1,k2) correspondence survives, k3 and the associativity
  // square must fail.
  std::unique_ptr<Semigroupad> magma =
      writer_over_magma(2, {1, 0, 0, 0}, "writer(nonassoc)");
  SemigroupadCheckReport magma_laws = validate_semigroupad(*magma, 2);
  bool square_fails = false;
  for (const std::string& v : magma_laws.violations) {
    square_fails = square_fails ||
                   v.find("associativity square") != std::string::npos;
  }
  b.check("nonassoc-writer-square-fails", square_fails,
          "associativity square violation detected");
  KAxiomReport magma_axioms = check_k_axioms(*magma, 2);
  long long k12_bad = 0, k3_bad = 0;
  for (const std::string& v : magma_axioms.violations) {
    (v.rfind("k3", 0) == 0 ? k3_bad : k12_bad) += 1;
  }
  b.check("nonassoc-writer-k1-k2", k12_bad == 0,
          "k1/k2 hold for a merely natural mu");
  b.check("nonassoc-writer-k3-fails", k3_bad > 0,
          std::to_string(k3_bad) + " k3 violations (expected nonzero)");
  b.check("nonassoc-writer-roundtrip", mu_star_mu_roundtrip(*magma, 2),
          "mu <-> star bijection holds on the k1/k2 fragment");

  std::vector<std::string> small = {"LZ2", "NULL2", "SL2", "Z2"};
  long long power_bad = 0;
  for (const std::string& sname : small) {
    FiniteSemigroup s = fixture(sname);
    if (!(induced_operation(*instances[2].second, s) ==
          power_semigroup(s).sgr)) {
      ++power_bad;
    }
  }
  b.check("induced-equals-power-semigroup", power_bad == 0,
          std::to_string(power_bad) + " mismatches in " +
              std::to_string(small.size()) + " fixtures");

  long long product_bad = 0, product_cases = 0;
  for (const std::string& s0name : small) {
    std::unique_ptr<Semigroupad> writer =
        writer_semigroupad(fixture(s0name));
    for (const std::string& sname : small) {
      FiniteSemigroup s = fixture(sname);
      ++product_cases;
      if (!(induced_operation(*writer, s) ==
            direct_product(s, fixture(s0name)))) {
        ++product_bad;
      }
    }
  }
  b.check("induced-equals-direct-product", product_bad == 0,
          std::to_string(product_bad) + " mismatches in " +
              std::to_string(product_cases) + " (S0, S) pairs");

  // Lemma sweep over the whole corpus: both commutation lemmas, then
  // bar(p.q) = bar q ; tilde p and tilde(p.q) = tilde q ; tilde p.
  auto members = in.all();
  long long lemma_cases = 0, lemma_bad = 0;
  for (const auto& [name, t] : instances) {
    for (const FiniteSemigroup* s : members) {
      int carrier = t->carrier_size(s->n);
      std::vector<FinFunction> tilde(carrier);
      std::vector<FinFunction> bar(carrier);
      for (int p = 0; p < carrier; ++p) {
        bar[p] = bar_map(*t, *s, p);
        tilde[p] = tilde_map(*t, *s, p);
      }
      FiniteSemigroup induced = induced_operation(*t, *s);
      for (int y = 0; y < s->n; ++y) {
        FinFunction lift_y = t->lift(right_translation(*s, y));
        for (int p = 0; p < carrier; ++p) {
          ++lemma_cases;
          if (then(right_translation(*s, y), bar[p]) !=
                  then(bar[p], lift_y) ||
              then(lift_y, tilde[p]) != then(tilde[p], lift_y)) {
            ++lemma_bad;
          }
        }
      }
      for (int p = 0; p < carrier; ++p) {
        for (int q = 0; q < carrier; ++q) {
          ++lemma_cases;
          int pq = induced.at(p, q);
          if (bar[pq] != then(bar[q], tilde[p]) ||
              tilde[pq] != then(tilde[q], tilde[p])) {
            ++lemma_bad;
          }
        }
      }
    }
  }
  b.check("translation-and-tilde-lemmas", lemma_bad == 0,
          std::to_string(lemma_bad) + " violations in " +
              std::to_string(lemma_cases) + " cases");
}

void run_constants(Builder& b, const Instances& in) {
  std::vector<std::pair<std::string, std::unique_ptr<Semigroupad>>> instances;
  instances.emplace_back("writer(Z2)", writer_semigroupad(fixture("Z2")));
  instances.emplace_back("writer(LZ2)", writer_semigroupad(fixture("LZ2")));
  instances.emplace_back("nepow", nepow_semigroupad());

  std::vector<std::vector<NatFamily>> families;
  bool counts_ok = true;
  std::string counts_detail;
  for (const auto& [name, t] : instances) {
    families.push_back(enumerate_nat_families(*t, 3));
    counts_detail += (counts_detail.empty() ? "" : ", ") + name + "=" +
                     std::to_string(families.back().size());
  }
  counts_ok = families[0].size() == 2 && families[1].size() == 2 &&
              families[2].size() == 1;
  b.check("natural-family-enumeration", counts_ok, counts_detail);

  long long agree_bad = 0, note_bad = 0, families_total = 0;
  for (size_t i = 0; i < instances.size(); ++i) {
    for (const NatFamily& xi : families[i]) {
      ++families_total;
      ConstantClassReport cls = constant_class(*instances[i].second, xi, 3);
      if (!cls.agree || !cls.extension_natural) {
        ++agree_bad;
      }
      if (!cls.note_holds) {
        ++note_bad;
      }
    }
  }
  b.check("constant-class-mu-vs-star", agree_bad == 0,
          std::to_string(agree_bad) + " disagreements across " +
              std::to_string(families_total) + " families");
  b.check("constant-class-note", note_bad == 0,
          "xi;Txi == xi;xiT for all enumerated families");

  // Writer families are the constant sections a |-> (a, c); their flags
  // must mirror the role of c in S0.  The nepow singleton family is a
  // two-sided identity.
  long long oracle_bad = 0;
  for (size_t i = 0; i < 2; ++i) {
    FiniteSemigroup s0 = fixture(i == 0 ? "Z2" : "LZ2");
    for (const NatFamily& xi : families[i]) {
      int c = xi.component[1].table[0] % s0.n;
      ConstantFlags flags =
          constant_class(*instances[i].second, xi, 3).mu_form;
      bool c_left = true, c_right = true, c_central = true;
      for (int x = 0; x < s0.n; ++x) {
        c_left = c_left && s0.at(c, x) == x;
        c_right = c_right && s0.at(x, c) == x;
        c_central = c_central && s0.at(c, x) == s0.at(x, c);
      }
      if (flags.left != c_left || flags.right != c_right ||
          flags.central != c_central ||
          flags.idempotent != (s0.at(c, c) == c)) {
        ++oracle_bad;
      }
    }
  }
  ConstantFlags nepow_flags =
      constant_class(*instances[2].second, families[2][0], 3).mu_form;
  if (!nepow_flags.left || !nepow_flags.right || !nepow_flags.central ||
      !nepow_flags.idempotent) {
    ++oracle_bad;
  }
  b.check("constant-class-oracle", oracle_bad == 0,
          "flags match the underlying element properties");

  auto members = in.all();
  long long transfer_cases = 0, transfer_bad = 0, transfer_vacuous = 0;
  for (size_t i = 0; i < instances.size(); ++i) {
    for (const NatFamily& xi : families[i]) {
      for (const FiniteSemigroup* s : members) {
        for (int e = 0; e < s->n; ++e) {
          TransferReport tr =
              constants_transfer_check(*instances[i].second, xi, *s, e, 3);
          for (const TransferItem* item :
               {&tr.left, &tr.right, &tr.central, &tr.idempotent}) {
            ++transfer_cases;
            if (!item->hypothesis) {
              ++transfer_vacuous;
            } else if (!item->conclusion) {
              ++transfer_bad;
            }
          }
        }
      }
    }
  }
  b.check("constants-transfer", transfer_bad == 0,
          std::to_string(transfer_bad) + " violations in " +
              std::to_string(transfer_cases) + " implications (" +
              std::to_string(transfer_vacuous) + " vacuous)");
}

}  // namespace

std::string SuiteReport::text() const {
  std::ostringstream out;
  for (const std::string& line : lines) {
    out << line << "\n";
  }
  return out.str();
}

SuiteReport run_suite(const SuiteOptions& options) {
  const std::string& suite = options.suite;
  bool all = suite == "all";
  if (!all && suite != "regularity" && suite != "adjunction" &&
      suite != "theta" && suite != "semigroupad" && suite != "constants") {
    throw ValidationError("unknown suite '" + suite + "'");
  }

  SuiteReport report;
  Builder b(report);
  b.info("suite " + suite + ", max order " + std::to_string(options.max_order));

  Instances in;
  for (int order = 1; order <= options.max_order; ++order) {
    in.corpora.push_back(enumerate_semigroups(order));
    b.info("corpus order " + std::to_string(order) + ": " +
           std::to_string(in.corpora.back().tables.size()) + " semigroups");
  }
  if (all || suite == "regularity") {
    run_regularity(b, in);
  }
  if (all || suite == "adjunction") {
    run_adjunction(b, in);
  }
  if (all || suite == "theta") {
    run_theta(b, in);
  }
  if (all || suite == "semigroupad") {
    run_semigroupad(b, in);
  }
  if (all || suite == "constants") {
    run_constants(b, in);
  }

  report.lines.push_back(
      (report.failures == 0 ? "RESULT PASS" : "RESULT FAIL") +
      std::string(" failures=") + std::to_string(report.failures));
  return report;
}

}  // namespace wirecat
