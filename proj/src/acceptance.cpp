#include "galois/acceptance.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "galois/errors.hpp"
#include "galois/families.hpp"

namespace galois {

namespace {

using Rng = std::mt19937_64;

Rng criterion_rng(const AcceptanceConfig& cfg, int id) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(id)};
  return Rng(seq);
}

OracleConfig oracle_config(const AcceptanceConfig& cfg, Rng& rng) {
  OracleConfig oc = cfg.oracle;
  oc.seed = rng();
  return oc;
}

// Collects distinct warnings in first-seen order.
struct WarningSink {
  std::vector<std::string> list;
  std::set<std::string> seen;
  void add(const std::vector<std::string>& ws) {
    for (const auto& w : ws)
      if (seen.insert(w).second) list.push_back(w);
  }
};

CriterionResult timed(int id, const char* name, double budget,
                      const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  r.budget_seconds = budget;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (budget > 0.0 && r.seconds > budget) {
    r.pass = false;
    r.detail += "; runtime over budget";
  }
  return r;
}

// Rank of the forms' coefficient vectors.
std::size_t span_rank(const std::vector<BinaryForm>& forms) { return coefficient_matrix(forms).rank(); }

}  // namespace

CriterionResult criterion_partition(const AcceptanceConfig& cfg) {
  return timed(1, "conic partition at d = 2", 10.0, [&](CriterionResult& r) {
    Rng rng = criterion_rng(cfg, 1);
    const LinearSystem v = LinearSystem::complete(2);
    std::vector<std::array<Rational, 3>> points;
    for (int i = -10; i <= 10; ++i)
      for (int j = -10; j <= 10; ++j)
        points.push_back({make_rational(i, 5), make_rational(j, 5), Rational(1)});
    for (int j = -10; j <= 10; ++j) points.push_back({Rational(1), make_rational(j, 5), Rational(0)});

    int on_conic = 0, galois_two = 0, exceptions = 0;
    WarningSink sink;
    std::string first_exception;
    for (const auto& z : points) {
      Matrix zt(1, 3);
      for (int c = 0; c < 3; ++c) zt(0, c) = Number(z[c]);
      auto kernel = kernel_basis(zt);
      Matrix pencil = Matrix::from_rows({kernel[0], kernel[1]});
      const bool conic = z[0] * z[2] == z[1] * z[1];
      OracleReport rep = is_galois(ProjectionCenter(2, pencil), v, oracle_config(cfg, rng));
      sink.add(rep.warnings);
      bool ok;
      if (conic) {
        ok = rep.degree == 1;
        on_conic += ok;
      } else {
        ok = rep.galois && rep.degree == 2 && rep.deck_order == 2;
        galois_two += ok;
      }
      if (!ok) {
        ++exceptions;
        if (first_exception.empty())
          first_exception = "(" + z[0].get_str() + ", " + z[1].get_str() + ", " + z[2].get_str() + ")";
      }
    }
    std::ostringstream os;
    os << points.size() << " centers: " << on_conic << " on the conic with degree 1, " << galois_two
       << " Galois of degree 2, " << exceptions << " exceptions";
    if (!first_exception.empty()) os << " (first at " << first_exception << ")";
    r.detail = os.str();
    r.pass = exceptions == 0;
    r.warnings = sink.list;
  });
}

CriterionResult criterion_round_trip(const AcceptanceConfig& cfg) {
  return timed(2, "construction/oracle round trip, d = 2..8", 60.0, [&](CriterionResult& r) {
    Rng rng = criterion_rng(cfg, 2);
    int cases = 0, failures = 0;
    std::string first_failure;
    WarningSink sink;
    for (int d = 2; d <= 8; ++d) {
      const LinearSystem v = LinearSystem::complete(d);
      for (const GroupKind& kind : catalog_kinds(d)) {
        for (int t = 0; t < 10; ++t) {
          GroupSpec spec{kind, random_conjugator(rng)};
          const InvariantPair pair = conjugated_pair(spec);
          const auto basis = galois_space(pair, v);
          for (int k = 0; k < 5; ++k) {
            ++cases;
            std::string why;
            if (basis.empty()) {
              why = "empty Galois space";
            } else {
              const BinaryForm s = random_section(basis, rng);
              const ProjectionCenter c = center_from_section(pair, s, v);
              auto [p0, p1] = pulled_back_pencil(c, v);
              const RationalSelfMap f = compose_projection(c, v);
              OracleReport rep = is_galois(f, oracle_config(cfg, rng));
              sink.add(rep.warnings);
              if (span_rank({f.p(), f.q(), pair.a, pair.b}) != 2)
                why = "composed pencil differs from the quotient pencil";
              else if (!proportional(form_gcd(p0, p1), s))
                why = "base form is not the section";
              else if (f.degree() != kind.order())
                why = "degree " + std::to_string(f.degree());
              else if (!rep.galois || !rep.kind || *rep.kind != kind)
                why = "oracle reported " + (rep.kind ? rep.kind->label() : std::string("non-Galois")) +
                      " with " + std::to_string(rep.deck_order) + " deck elements";
            }
            if (!why.empty()) {
              ++failures;
              if (first_failure.empty())
                first_failure = kind.label() + " at d = " + std::to_string(d) + ": " + why;
            }
          }
        }
      }
    }
    r.detail = std::to_string(cases - failures) + "/" + std::to_string(cases) + " round trips agree";
    if (!first_failure.empty()) r.detail += " (first failure " + first_failure + ")";
    r.pass = failures == 0;
    r.warnings = sink.list;
  });
}

CriterionResult criterion_dimension_law(const AcceptanceConfig&) {
  return timed(3, "dimension law, d <= 12", 0.0, [&](CriterionResult& r) {
    int cases = 0, failures = 0;
    std::string first_failure;
    for (int d = 1; d <= 12; ++d) {
      const LinearSystem v = LinearSystem::complete(d);
      for (const GroupKind& kind : catalog_kinds(d)) {
        ++cases;
        const int dim = static_cast<int>(galois_space(standard_invariant_pair(kind), v).size());
        if (dim != d - kind.order() + 1) {
          ++failures;
          if (first_failure.empty())
            first_failure = kind.label() + " at d = " + std::to_string(d) + " has dimension " +
                            std::to_string(dim);
        }
      }
    }
    r.detail = std::to_string(cases - failures) + "/" + std::to_string(cases) +
               " (kind, d) pairs have dim = d - m + 1";
    if (!first_failure.empty()) r.detail += " (" + first_failure + ")";
    r.pass = failures == 0;
  });
}

CriterionResult criterion_injectivity(const AcceptanceConfig& cfg) {
  return timed(4, "Pluecker injectivity at d = 5", 0.0, [&](CriterionResult& r) {
    Rng rng = criterion_rng(cfg, 4);
    const int d = 5;
    const LinearSystem v = LinearSystem::complete(d);
    int pairs = 0, collisions = 0, families = 0;
    std::vector<std::string> skipped;
    for (const GroupKind& kind : catalog_kinds(d)) {
      if (kind.order() == d) {
        // A single section up to scalar: nothing to separate.
        skipped.push_back(kind.label());
        continue;
      }
      ++families;
      for (int i = 0; i < cfg.samples; ++i) {
        GroupSpec spec{kind, random_conjugator(rng)};
        const InvariantPair pair = conjugated_pair(spec);
        const auto basis = galois_space(pair, v);
        BinaryForm s = random_section(basis, rng);
        BinaryForm t = random_section(basis, rng);
        while (proportional(s, t)) t = random_section(basis, rng);
        ++pairs;
        if (plucker(center_from_section(pair, s, v)) == plucker(center_from_section(pair, t, v)))
          ++collisions;
      }
    }
    std::ostringstream os;
    os << pairs << " section pairs over " << families << " families, " << collisions << " collisions";
    if (!skipped.empty()) {
      os << "; zero-dimensional fibers skipped:";
      for (const auto& k : skipped) os << " " << k;
    }
    r.detail = os.str();
    r.pass = collisions == 0 && pairs > 0;
  });
}

CriterionResult criterion_disjointness(const AcceptanceConfig& cfg) {
  return timed(5, "disjointness of families at d = 6", 0.0, [&](CriterionResult& r) {
    Rng rng = criterion_rng(cfg, 5);
    const int d = 6;
    const LinearSystem v = LinearSystem::complete(d);
    std::map<std::string, std::string> owner;  // Pluecker key -> family label
    int samples = 0, clashes = 0;
    std::string first_clash;
    const auto kinds = catalog_kinds(d);
    for (const GroupKind& kind : kinds) {
      for (int i = 0; i < cfg.samples; ++i) {
        GroupSpec spec{kind, random_conjugator(rng)};
        const InvariantPair pair = conjugated_pair(spec);
        const BinaryForm s = random_section(galois_space(pair, v), rng);
        const std::string key = plucker(center_from_section(pair, s, v)).key();
        ++samples;
        auto [it, inserted] = owner.emplace(key, kind.label());
        if (!inserted && it->second != kind.label()) {
          ++clashes;
          if (first_clash.empty()) first_clash = it->second + " and " + kind.label();
        }
      }
    }
    r.detail = std::to_string(samples) + " centers from " + std::to_string(kinds.size()) +
               " families, " + std::to_string(clashes) + " shared across families";
    if (!first_clash.empty()) r.detail += " (first: " + first_clash + ")";
    r.pass = clashes == 0;
  });
}

CriterionResult criterion_intermediate(const AcceptanceConfig& cfg) {
  return timed(6, "intermediate factorization, m <= d <= 8", 0.0, [&](CriterionResult& r) {
    Rng rng = criterion_rng(cfg, 6);
    int cases = 0, failures = 0;
    std::string first_failure;
    for (int d = 1; d <= 8; ++d) {
      const LinearSystem v = LinearSystem::complete(d);
      for (const GroupKind& kind : catalog_kinds(d)) {
        for (int k = 0; k < 5; ++k) {
          GroupSpec spec{kind, k == 0 ? MoebiusElement::identity() : random_conjugator(rng)};
          const InvariantPair pair = conjugated_pair(spec);
          const BinaryForm s = random_section(galois_space(pair, v), rng);
          const IntermediateReport rep = intermediate_factorization(pair, s, v);
          ++cases;
          if (!rep.identity_holds || !rep.intermediate_disjoint) {
            ++failures;
            if (first_failure.empty())
              first_failure = kind.label() + " at d = " + std::to_string(d) +
                              (rep.identity_holds ? ": intermediate center meets the curve"
                                                  : ": C M_s^T differs from the pencil");
          }
        }
      }
    }
    r.detail = std::to_string(cases - failures) + "/" + std::to_string(cases) +
               " sections factor exactly through the degree-m system";
    if (!first_failure.empty()) r.detail += " (" + first_failure + ")";
    r.pass = failures == 0;
  });
}

CriterionResult criterion_negative_control(const AcceptanceConfig& cfg) {
  return timed(7, "random centers at d = 4 are not Galois", 120.0, [&](CriterionResult& r) {
    Rng rng = criterion_rng(cfg, 7);
    const LinearSystem v = LinearSystem::complete(4);
    std::uniform_int_distribution<long> num(-10, 10), den(1, 10);
    int non_galois = 0, inconsistent = 0, galois = 0, trials = 0;
    WarningSink sink;
    while (trials < 100) {
      Matrix pencil(2, 5);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 5; ++j) pencil(i, j) = Number(make_rational(num(rng), den(rng)));
      if (pencil.rank() < 2) continue;
      ++trials;
      OracleReport rep = is_galois(ProjectionCenter(4, pencil), v, oracle_config(cfg, rng));
      sink.add(rep.warnings);
      if (rep.galois) {
        ++galois;
      } else {
        ++non_galois;
        if (rep.deck_order >= rep.degree) ++inconsistent;
      }
    }
    r.detail = std::to_string(non_galois) + "/100 non-Galois (" + std::to_string(galois) +
               " Galois, " + std::to_string(inconsistent) + " verdicts without |Deck| < degree)";
    r.pass = non_galois >= 95 && inconsistent == 0;
    r.warnings = sink.list;
  });
}

CriterionResult criterion_catalog(const AcceptanceConfig&) {
  return timed(8, "catalog self-certification", 0.0, [&](CriterionResult& r) {
    int kinds = 0, failures = 0;
    std::set<std::string> families_seen;
    std::string first_failure;
    for (const GroupKind& kind : catalog_kinds(60)) {
      ++kinds;
      const auto gens = standard_generators(kind);
      const bool invariant = verify_invariance(standard_invariant_pair(kind), gens);
      const std::size_t order = generate_group(gens).size();
      if (!invariant || order != static_cast<std::size_t>(kind.order())) {
        ++failures;
        if (first_failure.empty())
          first_failure = kind.label() + (invariant ? "" : " not invariant") + " closure order " +
                          std::to_string(order);
      } else {
        families_seen.insert(kind.name());
      }
    }
    r.detail = std::to_string(kinds - failures) + "/" + std::to_string(kinds) +
               " kinds of order <= 60 certified (" + std::to_string(families_seen.size()) +
               " families)";
    if (!first_failure.empty()) r.detail += " (" + first_failure + ")";
    r.pass = failures == 0 && families_seen.size() == 5;
  });
}

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
  return {criterion_partition(cfg),    criterion_round_trip(cfg),  criterion_dimension_law(cfg),
          criterion_injectivity(cfg),  criterion_disjointness(cfg), criterion_intermediate(cfg),
          criterion_negative_control(cfg), criterion_catalog(cfg)};
}

std::string summary_line(const CriterionResult& r) {
  return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " +
         r.detail;
}

}  // namespace galois
