#include "galois/galois_space.hpp"

#include <cmath>

#include "galois/errors.hpp"

namespace galois {

LinearSystem::LinearSystem(int degree, std::vector<BinaryForm> basis)
    : degree_(degree), basis_(std::move(basis)) {
  if (degree_ < 1) throw InputError("linear system degree must be positive");
  if (basis_.size() < 2) throw InputError("linear system needs at least two forms (N >= 1)");
  for (const auto& f : basis_)
    if (f.degree() != degree_) throw InputError("basis form of wrong degree in linear system");
  basis_matrix_ = coefficient_matrix(basis_).transpose();
  if (basis_matrix_.rank() != basis_.size())
    throw InputError("linear system basis is linearly dependent");
}

LinearSystem LinearSystem::complete(int degree) {
  std::vector<BinaryForm> basis;
  for (int j = 0; j <= degree; ++j) basis.push_back(BinaryForm::monomial(degree, j));
  return LinearSystem(degree, std::move(basis));
}

std::optional<Vector> LinearSystem::coordinates(const BinaryForm& f) const {
  if (f.degree() != degree_) return std::nullopt;
  return solve(basis_matrix_, f.coeffs());
}

BinaryForm LinearSystem::combine(const Vector& coords) const {
  if (coords.size() != basis_.size()) throw InputError("coordinate vector has wrong length");
  return BinaryForm(basis_matrix_ * coords);
}

ProjectionCenter::ProjectionCenter(int degree, Matrix pencil)
    : degree_(degree), pencil_(std::move(pencil)) {
  if (pencil_.rows() != 2 || pencil_.cols() < 2)
    throw InputError("a center pencil must be a 2 x (N+1) matrix");
  if (pencil_.rank() != 2) throw InputError("center pencil is rank-deficient");
}

std::vector<std::pair<int, int>> PluckerPoint::index_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

std::string PluckerPoint::key() const {
  std::string k;
  for (const auto& m : minors) k += m.str() + ";";
  return k;
}

std::vector<BinaryForm> galois_space(const InvariantPair& pair, const LinearSystem& v) {
  const int d = v.degree();
  const int m = pair.degree();
  if (m > d) return {};
  const int unknowns = d - m + 1;
  // Linear functionals vanishing on V, applied to s A and s B.
  std::vector<Vector> annihilator = kernel_basis(v.basis_matrix().transpose());
  const Matrix ma = multiplication_matrix(pair.a, d - m);
  const Matrix mb = multiplication_matrix(pair.b, d - m);
  Matrix conditions(2 * annihilator.size(), unknowns);
  for (std::size_t k = 0; k < annihilator.size(); ++k) {
    Matrix ell = Matrix::from_rows({annihilator[k]});
    Matrix ra = ell * ma;
    Matrix rb = ell * mb;
    for (int c = 0; c < unknowns; ++c) {
      conditions(2 * k, c) = ra(0, c);
      conditions(2 * k + 1, c) = rb(0, c);
    }
  }
  std::vector<BinaryForm> basis;
  for (auto& vec : kernel_basis(conditions)) basis.emplace_back(std::move(vec));
  return basis;
}

ProjectionCenter center_from_section(const InvariantPair& pair, const BinaryForm& s,
                                     const LinearSystem& v) {
  if (s.is_zero()) throw InputError("Galois section must be nonzero");
  if (s.degree() != v.degree() - pair.degree())
    throw InputError("section degree " + std::to_string(s.degree()) + " != d - |G| = " +
                     std::to_string(v.degree() - pair.degree()));
  auto ca = v.coordinates(form_mul(s, pair.a));
  if (!ca) throw InputError("inclusion s*A in V violated for s = " + s.str());
  auto cb = v.coordinates(form_mul(s, pair.b));
  if (!cb) throw InputError("inclusion s*B in V violated for s = " + s.str());
  return ProjectionCenter(v.degree(), Matrix::from_rows({*ca, *cb}));
}

PluckerPoint plucker(const Matrix& pencil) {
  if (pencil.rows() != 2 || pencil.rank() != 2)
    throw InputError("Pluecker coordinates need a rank-2 pencil");
  PluckerPoint p;
  for (auto [i, j] : PluckerPoint::index_pairs(static_cast<int>(pencil.cols())))
    p.minors.push_back(pencil(0, i) * pencil(1, j) - pencil(0, j) * pencil(1, i));
  Number lead;
  for (const auto& x : p.minors)
    if (!x.is_zero()) {
      lead = x.inverse();
      break;
    }
  for (auto& x : p.minors) x *= lead;
  return p;
}

PluckerPoint plucker(const ProjectionCenter& center) { return plucker(center.pencil()); }

std::pair<BinaryForm, BinaryForm> pulled_back_pencil(const ProjectionCenter& center,
                                                     const LinearSystem& v) {
  if (center.pencil().cols() != static_cast<std::size_t>(v.dimension()) ||
      center.degree() != v.degree())
    throw InputError("center does not match the linear system");
  return {v.combine(center.pencil().row(0)), v.combine(center.pencil().row(1))};
}

namespace {

std::optional<std::pair<Rational, Rational>> exact_root(const BinaryForm& g, const ProjPoint& p) {
  for (const auto& c : g.coeffs())
    if (!c.is_rational()) return std::nullopt;
  std::pair<Rational, Rational> cand;
  if (p.at_infinity()) {
    cand = {Rational(1), Rational(0)};
  } else {
    Complex z = p.x / p.y;
    if (std::abs(z.imag()) > 1e-7 * std::max(1.0, std::abs(z))) return std::nullopt;
    auto q = rational_approximation(z.real(), 1000000, 1e-7 * std::max(1.0, std::abs(z)));
    if (!q) return std::nullopt;
    cand = {*q, Rational(1)};
  }
  // g(a, b) = sum c_i a^(d-i) b^i
  const int d = g.degree();
  Rational acc = 0;
  for (int i = 0; i <= d; ++i) {
    Rational term = g[i].to_rational();
    for (int k = 0; k < d - i; ++k) term *= cand.first;
    for (int k = 0; k < i; ++k) term *= cand.second;
    acc += term;
  }
  if (sgn(acc) != 0) return std::nullopt;
  return cand;
}

}  // namespace

CurveIncidence meets_curve(const ProjectionCenter& center, const LinearSystem& v) {
  auto [p0, p1] = pulled_back_pencil(center, v);
  CurveIncidence out{form_gcd(p0, p1), {}};
  if (out.base_form.degree() == 0) return out;
  for (const auto& r : roots_numeric(out.base_form))
    out.points.push_back({r, exact_root(out.base_form, r)});
  return out;
}

}  // namespace galois
