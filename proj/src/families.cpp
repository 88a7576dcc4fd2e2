#include "galois/families.hpp"

#include <algorithm>
#include <random>

#include "galois/errors.hpp"

namespace galois {

std::vector<FamilyRecord> enumerate_families(const LinearSystem& v, const FamilySampling& sampling) {
  const int d = v.degree();
  std::vector<FamilyRecord> out;
  for (const auto& kind : catalog_kinds(d)) {
    FamilyRecord rec;
    rec.kind = kind;
    rec.m = kind.order();
    rec.base_dim = 3 - normalizer_dim(kind);
    rec.disjoint_from_curve = rec.m == d;
    if (v.is_complete()) {
      rec.fiber_dim = d - rec.m;
    } else {
      std::mt19937_64 rng(sampling.seed ^ (0x9e3779b97f4a7c15ULL * rec.m) ^
                          static_cast<std::uint64_t>(kind.family()));
      const int n = std::max(1, sampling.samples);
      for (int i = 0; i < n; ++i) {
        GroupSpec spec{kind, i == 0 ? MoebiusElement::identity() : random_conjugator(rng)};
        int dim = static_cast<int>(galois_space(conjugated_pair(spec), v).size()) - 1;
        rec.sampled_fiber_dims.push_back(dim);
      }
      rec.fiber_dim = *std::max_element(rec.sampled_fiber_dims.begin(), rec.sampled_fiber_dims.end());
      rec.fiber_dim_may_vary = true;
    }
    rec.total_dim = rec.fiber_dim >= 0 ? rec.fiber_dim + rec.base_dim : -1;
    out.push_back(std::move(rec));
  }
  return out;
}

ProjectionCenter family_sample(const GroupSpec& spec, const BinaryForm& s, const LinearSystem& v) {
  return center_from_section(conjugated_pair(spec), s, v);
}

std::optional<BinaryForm> check_factorization(const Matrix& xi, const InvariantPair& pair,
                                              const LinearSystem& v) {
  if (xi.cols() != 2 || xi.rows() != static_cast<std::size_t>(v.dimension()))
    throw InputError("linear map must be an (N+1) x 2 matrix");
  if (xi.rank() < 2) throw InputError("linear map has rank < 2");
  BinaryForm p0 = v.combine(xi.col(0));
  BinaryForm p1 = v.combine(xi.col(1));
  BinaryForm g = form_gcd(p0, p1);
  auto q0 = form_divide(p0, g);
  auto q1 = form_divide(p1, g);
  if (!q0 || !q1) throw ComputationError("gcd does not divide the pencil");
  if (q0->degree() != pair.degree()) return std::nullopt;
  if (coefficient_matrix({*q0, *q1, pair.a, pair.b}).rank() != 2) return std::nullopt;
  return g;
}

IntermediateReport intermediate_factorization(const InvariantPair& pair, const BinaryForm& s,
                                              const LinearSystem& v) {
  if (!v.is_complete()) throw InputError("intermediate factorization requires complete system");
  IntermediateReport r;
  r.pencil = center_from_section(pair, s, v).pencil();
  const Matrix c = coefficient_matrix({pair.a, pair.b});
  const Matrix ms = multiplication_matrix(s, pair.degree());
  // Monomial coordinates -> coordinates in the basis of V.
  r.product = c * ms.transpose() * v.basis_matrix().inverse().transpose();
  r.identity_holds = r.product == r.pencil;
  r.intermediate_disjoint = form_gcd(pair.a, pair.b).degree() == 0;
  return r;
}

namespace {

// Derivative of A(Phi v) along Phi -> Phi + eps X.
BinaryForm compose_derivative(const BinaryForm& a, const Matrix& phi, const Matrix& x) {
  if (a.degree() == 0) return BinaryForm::zero(0);
  BinaryForm lx1({x(0, 0), x(0, 1)});
  BinaryForm lx2({x(1, 0), x(1, 1)});
  return form_mul(form_compose(form_partial_x(a), phi), lx1) +
         form_mul(form_compose(form_partial_y(a), phi), lx2);
}

}  // namespace

int family_tangent_rank(const GroupSpec& spec, const BinaryForm& s, const LinearSystem& v) {
  if (!v.is_complete()) throw InputError("tangent rank requires a complete system");
  const InvariantPair std_pair = standard_invariant_pair(spec.kind);
  const Matrix phi = spec.theta.matrix().inverse();
  const BinaryForm a = form_compose(std_pair.a, phi);
  const BinaryForm b = form_compose(std_pair.b, phi);
  const int d = v.degree();
  const int m = std_pair.degree();
  if (s.degree() != d - m) throw InputError("section degree does not match d - |G|");

  auto coords = [&](const BinaryForm& f) {
    auto c = v.coordinates(f);
    if (!c) throw ComputationError("variation left the linear system");
    return *c;
  };
  const Vector r0 = coords(form_mul(s, a));
  const Vector r1 = coords(form_mul(s, b));
  const auto pairs = PluckerPoint::index_pairs(v.dimension());

  std::vector<Vector> rows;
  Vector p;
  for (auto [i, j] : pairs) p.push_back(r0[i] * r1[j] - r0[j] * r1[i]);
  rows.push_back(p);
  auto push_variation = [&](const Vector& d0, const Vector& d1) {
    Vector dp;
    for (auto [i, j] : pairs)
      dp.push_back(d0[i] * r1[j] + r0[i] * d1[j] - d0[j] * r1[i] - r0[j] * d1[i]);
    rows.push_back(std::move(dp));
  };
  for (int k = 0; k < 4; ++k) {
    Matrix x(2, 2);
    x(k / 2, k % 2) = 1;
    push_variation(coords(form_mul(s, compose_derivative(std_pair.a, phi, x))),
                   coords(form_mul(s, compose_derivative(std_pair.b, phi, x))));
  }
  for (int j = 0; j <= s.degree(); ++j) {
    BinaryForm t = BinaryForm::monomial(s.degree(), j);
    push_variation(coords(form_mul(t, a)), coords(form_mul(t, b)));
  }
  return static_cast<int>(Matrix::from_rows(rows).rank()) - 1;
}

}  // namespace galois
