#include <algorithm>
#include <random>

#include "doctest.h"
#include "galois/binary_form.hpp"
#include "galois/errors.hpp"
#include "galois/roots.hpp"
#include "oracles.hpp"

using namespace galois;
using oracle::form;

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(format_rational(parse_rational("-6/4")) == "-3/2");
  CHECK(format_rational(parse_rational("5")) == "5/1");
  CHECK(format_rational(parse_rational(" 0/7 ")) == "0/1");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK_THROWS_AS(parse_rational("6/-4"), InputError);
  CHECK(make_rational(10, -4) == Rational(-5, 2));
}

TEST_CASE("rational approximation by continued fractions") {
  CHECK(*rational_approximation(0.75, 1000, 1e-12) == Rational(3, 4));
  CHECK(*rational_approximation(-1.0 / 3.0, 1000, 1e-12) == Rational(-1, 3));
  CHECK_FALSE(rational_approximation(3.14159265358979, 10, 1e-9).has_value());
}

TEST_CASE("cyclotomic arithmetic is exact") {
  const Number z3 = Number::zeta(3);
  CHECK(z3 * z3 * z3 == Number(1));
  CHECK(z3 + z3 * z3 == Number(-1));
  CHECK((z3 + z3 * z3).is_rational());

  const Number z5 = Number::zeta(5);
  Number sum(0);
  for (int k = 0; k < 5; ++k) sum += Number::zeta(5, k);
  CHECK(sum.is_zero());
  CHECK(z5 * z5.inverse() == Number(1));
  const Number a = z5 - Number::zeta(5, 4);
  CHECK(a * a.inverse() == Number(1));

  // Mixed fields lift to the lcm.
  const Number i = Number::zeta(4);
  CHECK(i * i == Number(-1));
  CHECK((i * z3).field() == 12);
  CHECK(Number::zeta(12, 3) == i);
  CHECK(Number::zeta(2) == Number(-1));
  CHECK(Number::zeta(7, 7) == Number(1));

  const auto c = (Number(2) * Number::zeta(8)).to_complex();
  CHECK(c.real() == doctest::Approx(std::sqrt(2.0)));
  CHECK(c.imag() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(Matrix::identity(3)).empty());
  CHECK(kernel_basis(Matrix(2, 3)).size() == 3);
  const auto k = kernel_basis(Matrix{{1, 0, 0}, {0, 0, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0][0].is_zero());
  CHECK_FALSE(k[0][1].is_zero());
  CHECK(k[0][2].is_zero());
}

TEST_CASE("kernel vectors are annihilated (random matrices)") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    Matrix m(3, 5);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 5; ++c) m(r, c) = oracle::random_rational(rng);
    const auto k = kernel_basis(m);
    CHECK(k.size() + m.rank() == 5);
    for (const auto& v : k)
      for (const auto& x : m * v) CHECK(x.is_zero());
  }
}

TEST_CASE("form_mul examples") {
  CHECK(form_mul(BinaryForm::x(), BinaryForm::y()) == form({0, 1, 0}));
  CHECK(form_mul(form({1, 1}), form({1, -1})) == form({1, 0, -1}));
  CHECK(form_mul(form({1, 0, 0}), form({1, 0, 1})) == form({1, 0, 1, 0, 0}));
}

TEST_CASE("form_mul agrees with pointwise evaluation") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const BinaryForm f = oracle::random_form(rng, 3), g = oracle::random_form(rng, 4);
    const Number x = oracle::random_rational(rng), y = oracle::random_rational(rng);
    CHECK(oracle::eval(form_mul(f, g), x, y) == oracle::eval(f, x, y) * oracle::eval(g, x, y));
  }
}

TEST_CASE("form_gcd examples") {
  CHECK(form_gcd(form({1, 0, 0, 0}), form({0, 0, 1, 0})) == form({1, 0}));  // (x^3, x y^2) -> x
  CHECK(form_gcd(form({1, 0, 0}), form({0, 0, 1})) == form({1}));          // (x^2, y^2) -> 1
  CHECK(form_gcd(form({0, 1, 0, 0}), form({0, 0, 1, 0})) == form({0, 1, 0}));  // x y
  CHECK(form_gcd(form({0, 0, 1}), form({0, 1, 0})) == form({0, 1}));        // (y^2, xy) -> y
  CHECK(form_gcd(BinaryForm::zero(2), form({0, 0, 3})) == form({0, 0, 1}));
  CHECK_THROWS_AS(form_gcd(BinaryForm::zero(2), BinaryForm::zero(3)), InputError);
}

TEST_CASE("form_gcd degree matches the Sylvester rank oracle") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const BinaryForm h = oracle::random_form(rng, t % 4);
    const BinaryForm f = form_mul(oracle::random_form(rng, 1 + t % 3), h);
    BinaryForm g = form_mul(oracle::random_form(rng, 2), h);
    if (t % 5 == 0) g = form_mul(g, BinaryForm::y());  // exercises the factor at [1:0]
    const BinaryForm d = form_gcd(f, g);
    CHECK(d.degree() == oracle::sylvester_gcd_degree(f, g));
    CHECK(form_divide(f, d).has_value());
    CHECK(form_divide(g, d).has_value());
  }
}

TEST_CASE("gcd closure: gcd(f h, g h) = h gcd(f, g) up to scalar") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const BinaryForm f = oracle::random_form(rng, 3), g = oracle::random_form(rng, 2);
    const BinaryForm h = oracle::random_form(rng, 1 + t % 3);
    CHECK(proportional(form_gcd(form_mul(f, h), form_mul(g, h)), form_mul(h, form_gcd(f, g))));
  }
}

TEST_CASE("form_compose examples") {
  const BinaryForm x2 = form({1, 0, 0});
  CHECK(form_compose(x2, Matrix::identity(2)) == x2);
  CHECK(form_compose(x2, Matrix{{0, 1}, {1, 0}}) == form({0, 0, 1}));
  const BinaryForm t = form({0, 1, 0, 0, 0, -1, 0});  // x y (x^4 - y^4)
  const BinaryForm moved = form_compose(t, Matrix{{Number::zeta(4), 0}, {0, 1}});
  CHECK(proportional(moved, t));
  CHECK_FALSE(moved == t);
  CHECK_THROWS_AS(form_compose(x2, Matrix{{1, 2}, {2, 4}}), InputError);
}

TEST_CASE("form_compose is a right action and matches substitution") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const BinaryForm f = oracle::random_form(rng, 4);
    const Matrix m = oracle::random_invertible(rng), n = oracle::random_invertible(rng);
    CHECK(form_compose(form_compose(f, m), n) == form_compose(f, m * n));
    const Number x = oracle::random_rational(rng), y = oracle::random_rational(rng);
    CHECK(oracle::eval(form_compose(f, m), x, y) ==
          oracle::eval(f, m(0, 0) * x + m(0, 1) * y, m(1, 0) * x + m(1, 1) * y));
  }
}

TEST_CASE("form_divide and partial derivatives") {
  CHECK(*form_divide(form({1, 0, -1}), form({1, 1})) == form({1, -1}));
  CHECK_FALSE(form_divide(form({1, 0, 1}), form({1, 1})).has_value());
  CHECK(*form_divide(form({0, 0, 1}), form({0, 1})) == form({0, 1}));
  // Euler: x f_x + y f_y = d f
  const BinaryForm f = form({2, -1, 3, 5});
  CHECK(form_mul(BinaryForm::x(), form_partial_x(f)) + form_mul(BinaryForm::y(), form_partial_y(f)) ==
        f * Number(3));
}

TEST_CASE("multiplication matrix reproduces products") {
  std::mt19937_64 rng(6);
  const BinaryForm s = oracle::random_form(rng, 2), g = oracle::random_form(rng, 3);
  const Matrix m = multiplication_matrix(s, 3);
  CHECK(BinaryForm(m * g.coeffs()) == form_mul(s, g));
}

namespace {

double root_residual(const BinaryForm& f, const ProjPoint& r) {
  const ComplexForm c = to_complex(f);
  return std::abs(evaluate(c, r.unit())) / coefficient_norm(c);
}

bool contains(const std::vector<ProjPoint>& roots, const ProjPoint& p, double tol = 1e-8) {
  return std::any_of(roots.begin(), roots.end(),
                     [&](const ProjPoint& r) { return chordal_distance(r, p) < tol; });
}

}  // namespace

TEST_CASE("roots_numeric examples") {
  const auto r1 = roots_numeric(form({1, 0, -1}));
  REQUIRE(r1.size() == 2);
  CHECK(contains(r1, {1.0, 1.0}));
  CHECK(contains(r1, {-1.0, 1.0}));

  const auto r2 = roots_numeric(form({1, 0, 1}));
  REQUIRE(r2.size() == 2);
  CHECK(contains(r2, {Complex(0, 1), 1.0}));
  CHECK(contains(r2, {Complex(0, -1), 1.0}));

  const auto r3 = roots_numeric(form({0, 1, 0}));
  REQUIRE(r3.size() == 2);
  CHECK(contains(r3, {0.0, 1.0}));
  CHECK(r3.back().y == Complex(0.0));  // [1:0] exactly, sorted last
  CHECK(r3.back().x == Complex(1.0));

  CHECK_THROWS_AS(roots_numeric(BinaryForm::zero(3)), InputError);
}

TEST_CASE("roots_numeric residual bound and multiset union") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    const BinaryForm f = oracle::random_form(rng, 2 + t % 4), g = oracle::random_form(rng, 3);
    const auto rf = roots_numeric(f), rg = roots_numeric(g), rfg = roots_numeric(form_mul(f, g));
    CHECK(rf.size() == static_cast<std::size_t>(f.degree()));
    for (const auto& r : rf) CHECK(root_residual(f, r) < 1e-10);
    REQUIRE(rfg.size() == rf.size() + rg.size());
    // Greedy matching of the union against the product's roots.
    std::vector<ProjPoint> pool = rfg;
    std::vector<ProjPoint> all = rf;
    all.insert(all.end(), rg.begin(), rg.end());
    for (const auto& r : all) {
      auto it = std::min_element(pool.begin(), pool.end(), [&](const ProjPoint& a, const ProjPoint& b) {
        return chordal_distance(a, r) < chordal_distance(b, r);
      });
      CHECK(chordal_distance(*it, r) < 1e-8);
      pool.erase(it);
    }
  }
}
