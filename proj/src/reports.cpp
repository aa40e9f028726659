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

#include "wirecat/reports.hpp"

#include <sstream>

#include "wirecat/cayley_io.hpp"
#include "wirecat/errors.hpp"
#include "wirecat/karoubi.hpp"
#include "wirecat/ordered.hpp"

namespace wirecat {

namespace {

std::string mask_to_set(uint32_t mask, const std::vector<int>& elements) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (size_t i = 0; i < elements.size(); ++i) {
    if (mask >> i & 1u) {
      if (!first) {
        out << ',';
      }
      out << elements[i];
      first = false;
    }
  }
  out << '}';
  return out.str();
}

std::string triple_str(const KaroubiTriple& t) {
  std::ostringstream out;
  out << '(' << t.e << ',' << t.x << ',' << t.f << ')';
  return out.str();
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string analyze_report(const FiniteSemigroup& s) {
  std::ostringstream out;
  std::vector<int> idem = idempotents(s);
  RegularityReport reg = is_regular(s);
  EnoughIdempotentsReport enough = has_enough_idempotents(s);
  std::vector<SubsetPair> support = support_lax_morphism(s);

  out << "order: " << s.n << "\n";
  out << "idempotents: {";
  for (size_t i = 0; i < idem.size(); ++i) {
    out << (i ? "," : "") << idem[i];
  }
  out << "}\n";
  out << "regular: " << yesno(reg.regular);
  if (!reg.regular) {
    out << " (no pseudoinverse for x=" << reg.counterexample << ")";
  }
  out << "\n";
  out << "enough idempotents: " << yesno(enough.enough);
  if (!enough.enough) {
    out << " (no support for x=" << enough.counterexample << ")";
  }
  out << "\n";
  out << "support lax morphism x -> (left stabilizers, right stabilizers):\n";
  for (int x = 0; x < s.n; ++x) {
    out << "  " << x << " -> (" << mask_to_set(support[x].left, idem) << ", "
        << mask_to_set(support[x].right, idem) << ")\n";
  }
  if (static_cast<int>(idem.size()) <= 5) {
    RectBand band = rect_band_on_subset_pairs(idem);
    std::vector<int> map = support_map_into_rect_band(s, band);
    auto violation = check_lax_morphism(map, s, band.ord);
    out << "lax inequality: "
        << (violation ? "violated at (" + std::to_string(violation->x) + "," +
                            std::to_string(violation->y) + ")"
                      : "holds for all pairs")
        << "\n";
  } else {
    out << "lax inequality: skipped (rect band too large)\n";
  }
  return out.str();
}

std::string karoubi_summary(const FiniteSemigroup& s, int max_arrows) {
  KaroubiEnvelope env = karoubi_envelope(s, max_arrows);
  std::ostringstream out;
  out << env.objects.size() << " objects, " << env.triples.size()
      << " arrows\n";
  out << "objects (idempotents):";
  for (int e : env.objects) {
    out << ' ' << e;
  }
  out << "\n";
  for (size_t i = 0; i < env.triples.size(); ++i) {
    out << "arrow " << i << ": " << triple_str(env.triples[i]) << "\n";
  }
  return out.str();
}

std::string karoubi_json(const FiniteSemigroup& s, int max_arrows) {
  KaroubiEnvelope env = karoubi_envelope(s, max_arrows);
  std::vector<std::string> object_names, arrow_names;
  for (int e : env.objects) {
    object_names.push_back(std::to_string(e));
  }
  for (const KaroubiTriple& t : env.triples) {
    arrow_names.push_back(triple_str(t));
  }
  return wired_to_json(env.wired, object_names, arrow_names);
}

std::string theta_report_text(const FiniteSemigroup& s, int max_arrows) {
  KaroubiEnvelope env = karoubi_envelope(s, max_arrows);
  ThetaReport report = theta_properties(env.wired);
  std::ostringstream out;
  out << "arrows: " << env.triples.size() << "\n";
  out << "reflexive: " << yesno(report.reflexive) << "\n";
  out << "symmetric: " << yesno(report.symmetric) << "\n";
  out << "parallel arrows collapse: " << yesno(report.parallel_collapse)
      << "\n";
  out << "path enumeration agrees with generating equations: "
      << yesno(report.equations_agree) << "\n";
  out << "related pairs: " << report.related_pairs << "\n";
  out << "transitivity counterexamples: "
      << report.transitivity_counterexamples.size() << "\n";
  for (const auto& [a, b, c] : report.transitivity_counterexamples) {
    out << "  " << triple_str(env.triples[a]) << " ~ "
        << triple_str(env.triples[b]) << " ~ " << triple_str(env.triples[c])
        << " but not " << triple_str(env.triples[a]) << " ~ "
        << triple_str(env.triples[c]) << "\n";
  }
  return out.str();
}

std::string factorize_report_text(const FiniteSemigroup& s, int max_arrows) {
  KaroubiEnvelope env = karoubi_envelope(s, max_arrows);
  std::ostringstream out;
  out << "arrows: " << env.triples.size() << "\n";
  for (size_t i = 0; i < env.triples.size(); ++i) {
    out << triple_str(env.triples[i]) << ": ";
    std::optional<SplitFactorization> fact =
        factorize_split(env.wired.base, static_cast<int>(i));
    if (!fact) {
      out << "no split epi -- split mono factorization\n";
      continue;
    }
    out << "epi " << triple_str(env.triples[fact->epi]) << " mono "
        << triple_str(env.triples[fact->mono]) << " (left inverse "
        << triple_str(env.triples[fact->epi_left_inverse])
        << ", right inverse "
        << triple_str(env.triples[fact->mono_right_inverse]) << ")\n";
  }
  return out.str();
}

std::string constants_report_text(const Semigroupad& t,
                                  const FiniteSemigroup* transfer,
                                  int size_bound) {
  std::ostringstream out;
  out << "functor: " << t.name() << "\n";
  std::vector<NatFamily> families = enumerate_nat_families(t, size_bound);
  out << "natural families up to size " << size_bound << ": "
      << families.size() << "\n";
  for (size_t i = 0; i < families.size(); ++i) {
    const NatFamily& xi = families[i];
    out << "family " << i << ":";
    for (int k = 1; k <= xi.bound; ++k) {
      out << " [" << k << "]:";
      for (int a = 0; a < k; ++a) {
        out << (a ? "," : "") << t.decode(k, xi.component[k].table[a]);
      }
    }
    out << "\n";
    ConstantClassReport cls = constant_class(t, xi, size_bound);
    out << "  left identity: " << yesno(cls.mu_form.left)
        << "  right identity: " << yesno(cls.mu_form.right)
        << "  central: " << yesno(cls.mu_form.central)
        << "  idempotent: " << yesno(cls.mu_form.idempotent) << "\n";
    out << "  star characterization agrees: " << yesno(cls.agree)
        << "  note xi;Txi == xi;xiT: " << yesno(cls.note_holds) << "\n";
    if (transfer != nullptr) {
      for (int e = 0; e < transfer->n; ++e) {
        TransferReport tr =
            constants_transfer_check(t, xi, *transfer, e, size_bound);
        out << "  transfer e=" << e << " image "
            << t.decode(transfer->n, tr.e_image) << ":";
        auto item = [&out](const char* name, const TransferItem& it) {
          out << ' ' << name << '='
              << (it.hypothesis ? (it.conclusion ? "holds" : "VIOLATED")
                                : "vacuous");
        };
        item("left", tr.left);
        item("right", tr.right);
        item("central", tr.central);
        item("idempotent", tr.idempotent);
        out << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace wirecat
