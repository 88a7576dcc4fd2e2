#include <random>

#include "doctest.h"
#include "galois/errors.hpp"
#include "galois/families.hpp"
#include "galois/galois_space.hpp"
#include "oracles.hpp"

using namespace galois;
using oracle::form;

namespace {

InvariantPair std_pair(const GroupKind& k) { return standard_invariant_pair(k); }

// Membership check of s*A, s*B in V by brute force on the span rank.
bool is_section(const BinaryForm& s, const InvariantPair& pair, const LinearSystem& v) {
  for (const auto& prod : {form_mul(s, pair.a), form_mul(s, pair.b)}) {
    auto forms = v.basis();
    const std::size_t base = oracle::span_rank(forms);
    forms.push_back(prod);
    if (oracle::span_rank(forms) != base) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("linear systems validate their basis") {
  CHECK(LinearSystem::complete(3).dimension() == 4);
  CHECK(LinearSystem::complete(3).is_complete());
  CHECK_THROWS_AS(LinearSystem(2, {form({1, 0, 0})}), InputError);
  CHECK_THROWS_AS(LinearSystem(2, {form({1, 0, 0}), form({2, 0, 0})}), InputError);
  CHECK_THROWS_AS(LinearSystem(2, {form({1, 0, 0}), form({1, 0})}), InputError);
  const LinearSystem v(3, {form({1, 0, 0, 0}), form({0, 1, 0, 0}), form({0, 0, 0, 1})});
  CHECK(v.coordinates(form({2, 3, 0, 5})).has_value());
  CHECK_FALSE(v.coordinates(form({0, 0, 1, 0})).has_value());
}

TEST_CASE("galois_space examples") {
  for (int d = 1; d <= 5; ++d) {
    const auto basis = galois_space(std_pair(GroupKind::cyclic(1)), LinearSystem::complete(d));
    CHECK(basis.size() == static_cast<std::size_t>(d));
    for (const auto& s : basis) CHECK(s.degree() == d - 1);
  }
  const auto c2 = galois_space(std_pair(GroupKind::cyclic(2)), LinearSystem::complete(2));
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].degree() == 0);

  const LinearSystem v(3, {form({1, 0, 0, 0}), form({0, 1, 0, 0}), form({0, 0, 0, 1})});
  const auto sub = galois_space(std_pair(GroupKind::cyclic(2)), v);
  REQUIRE(sub.size() == 1);
  CHECK(proportional(sub[0], BinaryForm::y()));

  CHECK(galois_space(std_pair(GroupKind::cyclic(4)), LinearSystem::complete(3)).empty());
}

TEST_CASE("galois_space agrees with brute-force membership") {
  std::mt19937_64 rng(21);
  // A random 4-dimensional subsystem of degree-4 forms containing x^2 * (x^2, y^2).
  const LinearSystem v(4, {form({1, 0, 0, 0, 0}), form({0, 0, 1, 0, 0}), form({0, 1, 0, 1, 0}),
                           form({0, 0, 0, 0, 1})});
  for (const GroupKind& kind : catalog_kinds(4)) {
    CAPTURE(kind.label());
    const auto pair = std_pair(kind);
    const auto basis = galois_space(pair, v);
    for (const auto& s : basis) CHECK(is_section(s, pair, v));
    // Every monomial section outside the span must fail membership.
    const int k = 4 - kind.order();
    for (int i = 0; i <= k; ++i) {
      const BinaryForm mono = BinaryForm::monomial(k, i);
      std::vector<BinaryForm> with = basis;
      with.push_back(mono);
      const bool in_span = !basis.empty() && oracle::span_rank(with) == basis.size();
      CHECK(in_span == is_section(mono, pair, v));
    }
  }
}

TEST_CASE("dimension law for complete systems") {
  for (int d = 1; d <= 12; ++d)
    for (const GroupKind& kind : catalog_kinds(d)) {
      CAPTURE(kind.label());
      CHECK(galois_space(std_pair(kind), LinearSystem::complete(d)).size() ==
            static_cast<std::size_t>(d - kind.order() + 1));
    }
}

TEST_CASE("center_from_section examples") {
  const auto c3 = center_from_section(std_pair(GroupKind::cyclic(3)), form({1}), LinearSystem::complete(3));
  CHECK(c3.pencil() == (Matrix{{1, 0, 0, 0}, {0, 0, 0, 1}}));
  const auto c2 = center_from_section(std_pair(GroupKind::cyclic(2)), BinaryForm::x(), LinearSystem::complete(3));
  CHECK(c2.pencil() == (Matrix{{1, 0, 0, 0}, {0, 0, 1, 0}}));
  const auto c1 = center_from_section(std_pair(GroupKind::cyclic(1)), form({1}), LinearSystem::complete(1));
  CHECK(c1.pencil() == Matrix::identity(2));
}

TEST_CASE("center_from_section names the violated inclusion") {
  const LinearSystem v(3, {form({1, 0, 0, 0}), form({0, 1, 0, 0}), form({0, 0, 0, 1})});
  try {
    center_from_section(std_pair(GroupKind::cyclic(2)), BinaryForm::x(), v);
    FAIL("expected an InputError");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("s*B") != std::string::npos);
  }
  CHECK_THROWS_AS(center_from_section(std_pair(GroupKind::cyclic(2)), BinaryForm::zero(1), v), InputError);
}

TEST_CASE("plucker examples and row invariance") {
  const auto p1 = plucker(Matrix{{1, 0, 0}, {0, 0, 1}});
  CHECK(p1.minors == std::vector<Number>{0, 1, 0});
  const auto p2 = plucker(Matrix{{1, 0, 0}, {0, 1, 0}});
  CHECK(p2.minors == std::vector<Number>{1, 0, 0});
  CHECK_THROWS_AS(plucker(Matrix{{1, 2, 3}, {2, 4, 6}}), InputError);

  std::mt19937_64 rng(22);
  for (int t = 0; t < 20; ++t) {
    Matrix r(2, 5);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 5; ++j) r(i, j) = oracle::random_rational(rng);
    if (r.rank() < 2) continue;
    const Matrix e = oracle::random_invertible(rng);
    CHECK(plucker(e * r) == plucker(r));
    CHECK(plucker(r).minors.size() == 10);
  }
}

TEST_CASE("plucker index convention") {
  const auto idx = PluckerPoint::index_pairs(4);
  REQUIRE(idx.size() == 6);
  CHECK(idx[0] == std::pair<int, int>{0, 1});
  CHECK(idx[2] == std::pair<int, int>{0, 3});
  CHECK(idx[3] == std::pair<int, int>{1, 2});
  CHECK(idx[5] == std::pair<int, int>{2, 3});
}

TEST_CASE("meets_curve examples") {
  const auto v3 = LinearSystem::complete(3);
  CHECK(meets_curve(ProjectionCenter(3, Matrix{{1, 0, 0, 0}, {0, 0, 0, 1}}), v3).points.empty());
  const auto m2 = meets_curve(ProjectionCenter(3, Matrix{{1, 0, 0, 0}, {0, 0, 1, 0}}), v3);
  REQUIRE(m2.points.size() == 1);
  REQUIRE(m2.points[0].exact.has_value());
  CHECK(m2.points[0].exact->first == 0);   // [0:1]
  CHECK(m2.points[0].exact->second == 1);
  const auto conic = meets_curve(ProjectionCenter(2, Matrix{{0, 1, 0}, {0, 0, 1}}), LinearSystem::complete(2));
  REQUIRE(conic.points.size() == 1);
  REQUIRE(conic.points[0].exact.has_value());
  CHECK(conic.points[0].exact->first == 1);   // [1:0]
  CHECK(conic.points[0].exact->second == 0);
}

TEST_CASE("constructed centers meet the curve exactly at the roots of s") {
  std::mt19937_64 rng(23);
  for (int d = 2; d <= 6; ++d) {
    const auto v = LinearSystem::complete(d);
    for (const GroupKind& kind : catalog_kinds(d)) {
      CAPTURE(kind.label());
      const GroupSpec spec{kind, random_conjugator(rng)};
      const auto pair = conjugated_pair(spec);
      const BinaryForm s = random_section(galois_space(pair, v), rng);
      const auto inc = meets_curve(center_from_section(pair, s, v), v);
      CHECK(proportional(inc.base_form, s));
      CHECK(inc.points.size() == static_cast<std::size_t>(s.degree()));
      CHECK(inc.points.empty() == (kind.order() == d));
    }
  }
}

TEST_CASE("distinct sections give distinct Pluecker points") {
  std::mt19937_64 rng(24);
  const auto v = LinearSystem::complete(5);
  for (const GroupKind& kind : catalog_kinds(4)) {
    CAPTURE(kind.label());
    const auto pair = conjugated_pair({kind, random_conjugator(rng)});
    const auto basis = galois_space(pair, v);
    for (int t = 0; t < 10; ++t) {
      const BinaryForm s = random_section(basis, rng), u = random_section(basis, rng);
      const bool same = proportional(s, u);
      CHECK((plucker(center_from_section(pair, s, v)) == plucker(center_from_section(pair, u, v))) == same);
    }
  }
}
