#include <random>

#include "doctest.h"
#include "galois/errors.hpp"
#include "galois/families.hpp"
#include "galois/moebius.hpp"
#include "oracles.hpp"

using namespace galois;
using oracle::form;

namespace {

std::vector<ComplexMoebius> numeric(const std::vector<MoebiusElement>& els) {
  std::vector<ComplexMoebius> out;
  for (const auto& g : els) out.push_back(ComplexMoebius{g.to_complex()}.unit());
  return out;
}

}  // namespace

TEST_CASE("Moebius elements compare modulo scalars") {
  const MoebiusElement a(Matrix{{2, 4}, {6, 8}});
  const MoebiusElement b(Matrix{{1, 2}, {3, 4}});
  CHECK(a == b);
  CHECK(a.key() == b.key());
  CHECK(a * a.inverse() == MoebiusElement::identity());
  CHECK_THROWS_AS(MoebiusElement(Matrix{{1, 2}, {2, 4}}), InputError);
}

TEST_CASE("standard generators examples") {
  const auto c2 = standard_generators(GroupKind::cyclic(2));
  REQUIRE(c2.size() == 1);
  CHECK(c2[0] == MoebiusElement::diagonal(-1, 1));
  CHECK(standard_generators(GroupKind::cyclic(1)).empty());
  CHECK(generate_group(standard_generators(GroupKind::dihedral(2))).size() == 4);
  CHECK_THROWS_AS(GroupKind::dihedral(1), InputError);
}

TEST_CASE("every catalog kind closes to its order and its pair is invariant") {
  for (const GroupKind& kind : catalog_kinds(60)) {
    CAPTURE(kind.label());
    const auto gens = standard_generators(kind);
    CHECK(generate_group(gens).size() == static_cast<std::size_t>(kind.order()));
    const InvariantPair pair = standard_invariant_pair(kind);
    CHECK(pair.degree() == kind.order());
    CHECK(pair.b.degree() == kind.order());
    CHECK(verify_invariance(pair, gens));
    CHECK(form_gcd(pair.a, pair.b).degree() == 0);
    CHECK(oracle::span_rank({pair.a, pair.b}) == 2);
  }
}

TEST_CASE("standard pair examples") {
  const auto c2 = standard_invariant_pair(GroupKind::cyclic(2));
  CHECK(c2.a == form({1, 0, 0}));
  CHECK(c2.b == form({0, 0, 1}));
  const auto c3 = standard_invariant_pair(GroupKind::cyclic(3));
  CHECK(c3.a == form({1, 0, 0, 0}));
  CHECK(c3.b == form({0, 0, 0, 1}));
  const auto d2 = standard_invariant_pair(GroupKind::dihedral(2));
  CHECK(d2.a == form({0, 0, 1, 0, 0}));
  CHECK(d2.b == form({1, 0, 0, 0, 1}));
}

TEST_CASE("icosahedral pair matches the classical forms") {
  const auto pair = standard_invariant_pair(GroupKind::icosahedral());
  const BinaryForm f = form({0, 1, 0, 0, 0, 0, 11, 0, 0, 0, 0, -1, 0});
  CHECK(pair.a == form_pow(f, 5) * Number(1728));
  // Klein: H = -(x^20 + y^20) + 228 (x^15 y^5 - x^5 y^15) - 494 x^10 y^10
  BinaryForm h = BinaryForm::zero(20);
  for (auto [k, c] : std::vector<std::pair<int, long>>{{0, -1}, {5, 228}, {10, -494}, {15, -228}, {20, -1}})
    h += BinaryForm::monomial(20, k, Number(c));
  CHECK(pair.b == form_pow(h, 3));
}

TEST_CASE("verify_invariance examples") {
  const InvariantPair sq{form({1, 0, 0}), form({0, 0, 1})};
  CHECK(verify_invariance(sq, {MoebiusElement::diagonal(-1, 1)}));
  const auto lambda = invariance_scalars(sq, {MoebiusElement::diagonal(-1, 1)});
  REQUIRE(lambda.has_value());
  CHECK((*lambda)[0] == Number(1));
  CHECK_FALSE(verify_invariance(sq, {MoebiusElement::swap()}));
  const InvariantPair d2{form({0, 0, 1, 0, 0}), form({1, 0, 0, 0, 1})};
  CHECK(verify_invariance(d2, {MoebiusElement::swap(), MoebiusElement::diagonal(-1, 1)}));
  // x -> i x sends x^2 y^2 to -x^2 y^2 but fixes x^4 + y^4: no common scalar.
  const Number i = Number::zeta(4), px(3), py(2);
  CHECK(oracle::eval(d2.a, i * px, py) == -oracle::eval(d2.a, px, py));
  CHECK(oracle::eval(d2.b, i * px, py) == oracle::eval(d2.b, px, py));
  CHECK_FALSE(verify_invariance(d2, {MoebiusElement::diagonal(Number::zeta(4), 1)}));
}

TEST_CASE("conjugated_pair examples") {
  const auto id = conjugated_pair({GroupKind::cyclic(2), MoebiusElement::identity()});
  CHECK(id.a == form({1, 0, 0}));
  CHECK(id.b == form({0, 0, 1}));
  const auto sw = conjugated_pair({GroupKind::cyclic(2), MoebiusElement::swap()});
  CHECK(sw.a == form({0, 0, 1}));
  CHECK(sw.b == form({1, 0, 0}));
  const auto sh = conjugated_pair({GroupKind::cyclic(2), MoebiusElement(Matrix{{1, 1}, {0, 1}})});
  CHECK(sh.a == form({1, -2, 1}));  // (x - y)^2
  CHECK(sh.b == form({0, 0, 1}));
}

TEST_CASE("conjugated pairs are invariant under conjugated generators") {
  std::mt19937_64 rng(11);
  for (const GroupKind& kind : catalog_kinds(24)) {
    CAPTURE(kind.label());
    for (int t = 0; t < 3; ++t) {
      const GroupSpec spec{kind, random_conjugator(rng)};
      CHECK(verify_invariance(conjugated_pair(spec), conjugated_generators(spec)));
    }
  }
}

TEST_CASE("quotient maps have degree |G| (5 random fibers per kind)") {
  std::mt19937_64 rng(12);
  for (const GroupKind& kind : catalog_kinds(60)) {
    if (kind.family() == GroupFamily::Cyclic && kind.param() > 12) continue;
    if (kind.family() == GroupFamily::Dihedral && kind.param() > 6) continue;
    CAPTURE(kind.label());
    const InvariantPair pair = standard_invariant_pair(kind);
    for (int t = 0; t < 5; ++t) {
      Number t0 = oracle::random_rational(rng, 50, 7);
      while (t0.is_zero()) t0 = oracle::random_rational(rng, 50, 7);
      const Number t1 = Number(t + 1);
      const BinaryForm fiber = pair.a * t1 - pair.b * t0;
      // m distinct roots: the fiber form is squarefree of full degree.
      CHECK(fiber.degree() == kind.order());
      CHECK(oracle::sylvester_gcd_degree(form_partial_x(fiber), form_partial_y(fiber)) == 0);
    }
  }
}

TEST_CASE("normalizer dimension matches the commutant oracle") {
  CHECK(normalizer_dim(GroupKind::cyclic(1)) == 3);
  CHECK(normalizer_dim(GroupKind::cyclic(2)) == 1);
  CHECK(normalizer_dim(GroupKind::icosahedral()) == 0);
  for (const GroupKind& kind : catalog_kinds(60)) {
    CAPTURE(kind.label());
    CHECK(normalizer_dim(kind) == oracle::commutant_dim(standard_generators(kind)));
  }
}

TEST_CASE("classify_group examples") {
  CHECK(classify_group(numeric(generate_group({MoebiusElement::diagonal(-1, 1)})), 1e-8) ==
        GroupKind::cyclic(2));
  // Three rotations by cube roots of unity, conjugated away from the axes.
  const GroupSpec c3{GroupKind::cyclic(3), MoebiusElement(Matrix{{1, 2}, {-1, 1}})};
  const auto c3_elems = generate_group(conjugated_generators(c3));
  CHECK(c3_elems.size() == 3);
  CHECK(classify_group(numeric(c3_elems), 1e-8) == GroupKind::cyclic(3));
  // Klein four-group: three involutions.
  const auto v4 = generate_group({MoebiusElement::diagonal(-1, 1), MoebiusElement::swap()});
  REQUIRE(v4.size() == 4);
  int involutions = 0;
  for (const auto& g : numeric(v4)) involutions += element_order(g, 1e-8) == 2;
  CHECK(involutions == 3);
  CHECK(classify_group(numeric(v4), 1e-8) == GroupKind::dihedral(2));

  CHECK_THROWS_AS(classify_group(numeric({MoebiusElement::identity(), MoebiusElement::diagonal(Number::zeta(3), 1)}), 1e-8),
                  ComputationError);
}

TEST_CASE("classify_group recovers every catalog kind up to order 60") {
  for (const GroupKind& kind : catalog_kinds(60)) {
    if (kind.family() == GroupFamily::Cyclic && kind.param() % 7 != 0 && kind.param() > 12) continue;
    CAPTURE(kind.label());
    CHECK(classify_group(numeric(generate_group(standard_generators(kind))), 1e-8) == kind);
  }
}
