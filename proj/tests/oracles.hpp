#pragma once

// Independent reference computations used by the unit tests. None of these
// call the library routine they are used to check.

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "galois/binary_form.hpp"
#include "galois/matrix.hpp"
#include "galois/moebius.hpp"

namespace oracle {

using galois::BinaryForm;
using galois::Matrix;
using galois::Number;

inline BinaryForm form(std::initializer_list<long> coeffs) {
  std::vector<Number> c;
  for (long v : coeffs) c.emplace_back(v);
  return BinaryForm(std::move(c));
}

inline Number power(const Number& base, int k) {
  Number r(1);
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

/// f(x, y) by the defining sum.
inline Number eval(const BinaryForm& f, const Number& x, const Number& y) {
  const int d = f.degree();
  Number acc(0);
  for (int i = 0; i <= d; ++i) acc += f[i] * power(x, d - i) * power(y, i);
  return acc;
}

/// Degree of gcd(f, g) from the rank of the homogeneous Sylvester matrix:
/// deg gcd = a + b - rank of (u, v) -> u f + v g with deg u = b - 1, deg v = a - 1.
inline int sylvester_gcd_degree(const BinaryForm& f, const BinaryForm& g) {
  const int a = f.degree(), b = g.degree();
  if (a == 0 || b == 0) return 0;
  Matrix s(a + b, a + b);
  for (int j = 0; j < b; ++j)
    for (int i = 0; i <= a; ++i) s(i + j, j) = f[i];
  for (int j = 0; j < a; ++j)
    for (int i = 0; i <= b; ++i) s(i + j, b + j) = g[i];
  return a + b - static_cast<int>(s.rank());
}

/// Rank of the coefficient vectors of `forms` (all of one degree).
inline std::size_t span_rank(const std::vector<BinaryForm>& forms) {
  Matrix m(forms.size(), forms.front().degree() + 1);
  for (std::size_t r = 0; r < forms.size(); ++r)
    for (int c = 0; c <= forms[r].degree(); ++c) m(r, c) = forms[r][c];
  return m.rank();
}

/// dim { X in gl2 : g X = X g for all generators } - 1: the dimension of the
/// identity component of the normalizer, which centralizes a finite group.
inline int commutant_dim(const std::vector<galois::MoebiusElement>& gens) {
  Matrix eqs(4 * std::max<std::size_t>(gens.size(), 1), 4);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Matrix& g = gens[k].matrix();
    // Entry (r, c) of gX - Xg in the unknowns X = (x00, x01, x10, x11).
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        const std::size_t row = 4 * k + 2 * r + c;
        for (int t = 0; t < 2; ++t) {
          eqs(row, 2 * t + c) += g(r, t);
          eqs(row, 2 * r + t) -= g(t, c);
        }
      }
  }
  return static_cast<int>(4 - eqs.rank()) - 1;
}

inline Number random_rational(std::mt19937_64& rng, long num = 9, long den = 5) {
  std::uniform_int_distribution<long> n(-num, num), d(1, den);
  return Number(galois::make_rational(n(rng), d(rng)));
}

inline BinaryForm random_form(std::mt19937_64& rng, int degree) {
  for (;;) {
    std::vector<Number> c;
    for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng));
    BinaryForm f(std::move(c));
    if (!f.is_zero()) return f;
  }
}

inline Matrix random_invertible(std::mt19937_64& rng) {
  for (;;) {
    Matrix m{{random_rational(rng), random_rational(rng)}, {random_rational(rng), random_rational(rng)}};
    if (!m.det2().is_zero()) return m;
  }
}

}  // namespace oracle
