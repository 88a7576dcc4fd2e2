#include "galois/roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "galois/errors.hpp"

namespace galois {

ProjPoint ProjPoint::unit() const {
  double n = std::sqrt(std::norm(x) + std::norm(y));
  return {x / n, y / n};
}

double chordal_distance(const ProjPoint& a, const ProjPoint& b) {
  ProjPoint ua = a.unit();
  ProjPoint ub = b.unit();
  return std::abs(ua.x * ub.y - ua.y * ub.x);
}

bool proj_less(const ProjPoint& a, const ProjPoint& b) {
  if (a.at_infinity() || b.at_infinity()) return !a.at_infinity() && b.at_infinity();
  Complex za = a.x / a.y;
  Complex zb = b.x / b.y;
  if (za.real() != zb.real()) return za.real() < zb.real();
  return za.imag() < zb.imag();
}

ComplexForm to_complex(const BinaryForm& f) {
  ComplexForm out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.to_complex());
  return out;
}

LongForm to_complex_long(const BinaryForm& f) {
  LongForm out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(c.to_complex_long());
  return out;
}

Complex evaluate(const ComplexForm& f, const ProjPoint& p) {
  const int d = static_cast<int>(f.size()) - 1;
  // Horner in whichever variable is larger keeps the powers bounded.
  Complex acc = 0.0;
  if (std::abs(p.x) >= std::abs(p.y)) {
    Complex u = p.y / p.x;
    for (int i = d; i >= 0; --i) acc = acc * u + f[i];
    return acc * std::pow(p.x, d);
  }
  Complex z = p.x / p.y;
  for (int i = 0; i <= d; ++i) acc = acc * z + f[i];
  return acc * std::pow(p.y, d);
}

double coefficient_norm(const ComplexForm& f) {
  double s = 0.0;
  for (const auto& c : f) s += std::norm(c);
  return std::sqrt(s);
}

namespace {

using LComplex = LongComplex;

// Newton iteration on sum_k a[k] t^(n-k) starting at t.
LComplex newton_polish(const std::vector<LComplex>& a, LComplex t) {
  const int n = static_cast<int>(a.size()) - 1;
  auto eval = [&](LComplex v, LComplex& deriv) {
    LComplex p = 0, dp = 0;
    for (int k = 0; k <= n; ++k) {
      dp = dp * v + p;
      p = p * v + a[k];
    }
    deriv = dp;
    return p;
  };
  LComplex dp;
  LComplex p = eval(t, dp);
  for (int it = 0; it < 8; ++it) {
    if (dp == LComplex(0)) break;
    LComplex next = t - p / dp;
    LComplex dn;
    LComplex pn = eval(next, dn);
    if (std::abs(pn) >= std::abs(p)) break;
    t = next;
    p = pn;
    dp = dn;
  }
  return t;
}

std::vector<ProjPoint> roots_with_polish(const ComplexForm& f, const LongForm& lf) {
  const int d = static_cast<int>(f.size()) - 1;
  int lead = 0;
  while (lead <= d && f[lead] == Complex(0.0)) ++lead;
  if (lead > d) throw InputError("roots of the zero form are undefined");

  std::vector<ProjPoint> roots;
  roots.reserve(d);
  for (int i = 0; i < lead; ++i) roots.push_back({1.0, 0.0});

  // Remaining polynomial in z = x/y: sum_{i>=lead} f[i] z^(d-i), degree d - lead.
  const int n = d - lead;
  if (n > 0) {
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int r = 1; r < n; ++r) companion(r, r - 1) = 1.0;
    for (int k = 0; k < n; ++k) companion(k, n - 1) = -f[d - k] / f[lead];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) throw ComputationError("companion eigenvalue solve failed");

    std::vector<LComplex> z_chart(n + 1), w_chart(n + 1);
    for (int k = 0; k <= n; ++k) {
      z_chart[k] = lf[lead + k];
      w_chart[k] = lf[d - k];  // reversed: polynomial in w = 1/z
    }
    for (int k = 0; k < n; ++k) {
      Complex z = solver.eigenvalues()[k];
      if (std::abs(z) <= 1.0) {
        LComplex t = newton_polish(z_chart, LComplex(z));
        roots.push_back({Complex(t), 1.0});
      } else {
        LComplex w = newton_polish(w_chart, LComplex(1.0) / LComplex(z));
        if (w == LComplex(0)) w = LComplex(1.0) / LComplex(z);
        roots.push_back({Complex(LComplex(1.0) / w), 1.0});
      }
    }
  }
  std::sort(roots.begin(), roots.end(), proj_less);
  return roots;
}

}  // namespace

std::vector<ProjPoint> roots_numeric(const ComplexForm& f) {
  LongForm lf(f.begin(), f.end());
  return roots_with_polish(f, lf);
}

std::vector<ProjPoint> roots_numeric(const BinaryForm& f) {
  if (f.is_zero()) throw InputError("roots of the zero form are undefined");
  return roots_with_polish(to_complex(f), to_complex_long(f));
}

}  // namespace galois
