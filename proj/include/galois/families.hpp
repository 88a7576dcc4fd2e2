#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "galois/binary_form.hpp"
#include "galois/galois_space.hpp"
#include "galois/moebius.hpp"

namespace galois {

/// One family of Galois centers: all conjugates of a catalog group, fibered
/// over PGL(2) / N(G) with projective-space fibers.
struct FamilyRecord {
  GroupKind kind = GroupKind::cyclic(1);
  int m = 1;             // group order
  int fiber_dim = 0;     // -1 when every sampled fiber was empty
  int base_dim = 0;      // 3 - dim N(G)
  int total_dim = 0;     // fiber_dim + base_dim, -1 with empty fibers
  bool disjoint_from_curve = false;
  bool fiber_dim_may_vary = false;
  /// Per-conjugate projective fiber dimensions (sub-linear systems only).
  std::vector<int> sampled_fiber_dims;
};

struct FamilySampling {
  int samples = 8;
  std::uint64_t seed = 0;
};

/// Random conjugator with small integer entries and nonzero determinant.
template <class Rng>
MoebiusElement random_conjugator(Rng& rng, long bound = 3);

/// Random nonzero integer combination of `basis` with coefficients in
/// [-bound, bound]. `basis` must be non-empty.
template <class Rng>
BinaryForm random_section(const std::vector<BinaryForm>& basis, Rng& rng, long bound = 3);

/// One record per catalog kind of order <= d. Complete systems get the exact
/// dimension count; for sub-linear systems the fiber dimension is sampled
/// over the identity and random conjugators and flagged as possibly varying.
std::vector<FamilyRecord> enumerate_families(const LinearSystem& v,
                                             const FamilySampling& sampling = {});

/// The center of section s over the conjugated group of `spec`.
ProjectionCenter family_sample(const GroupSpec& spec, const BinaryForm& s, const LinearSystem& v);

/// Given the (N+1) x 2 coordinate matrix of a linear map onto the pencil,
/// returns the section s with span{P0/s, P1/s} = span{A, B}, or nothing.
/// Throws InputError when xi has rank < 2.
std::optional<BinaryForm> check_factorization(const Matrix& xi, const InvariantPair& pair,
                                              const LinearSystem& v);

struct IntermediateReport {
  /// C M_s^T in the coordinates of V (C: pencil of (A, B) in degree m).
  Matrix product;
  /// Pencil matrix of the center built from s.
  Matrix pencil;
  bool identity_holds = false;
  /// gcd(A, B) = 1: the degree-m center misses the degree-m rational normal curve.
  bool intermediate_disjoint = false;
};

/// Factors the projection through the complete degree-|G| system. Throws
/// InputError "intermediate factorization requires complete system" otherwise.
IntermediateReport intermediate_factorization(const InvariantPair& pair, const BinaryForm& s,
                                              const LinearSystem& v);

/// Rank of the exact first-order variation of the Pluecker point of
/// family_sample(spec, s, V) under perturbations of the conjugator and the
/// section, modulo the point itself. Equals the family's total dimension when
/// the family map is an immersion there. Requires a complete system.
int family_tangent_rank(const GroupSpec& spec, const BinaryForm& s, const LinearSystem& v);

// ---------------------------------------------------------------- inline

template <class Rng>
MoebiusElement random_conjugator(Rng& rng, long bound) {
  auto draw = [&] {
    return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
  };
  for (;;) {
    Matrix m{{draw(), draw()}, {draw(), draw()}};
    if (!m.det2().is_zero()) return MoebiusElement(std::move(m));
  }
}

template <class Rng>
BinaryForm random_section(const std::vector<BinaryForm>& basis, Rng& rng, long bound) {
  for (;;) {
    BinaryForm s = BinaryForm::zero(basis.front().degree());
    for (const auto& b : basis) {
      long c = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
      if (c != 0) s += b * Number(c);
    }
    if (!s.is_zero()) return s;
  }
}

}  // namespace galois
