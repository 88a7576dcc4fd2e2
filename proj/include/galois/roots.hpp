#pragma once

#include <complex>
#include <vector>

#include "galois/binary_form.hpp"

namespace galois {

using Complex = std::complex<double>;

/// A point [x:y] of the complex projective line. roots_numeric stores finite
/// points as [z:1] and the point at infinity as exactly [1:0].
struct ProjPoint {
  Complex x;
  Complex y;

  bool at_infinity() const { return y == Complex(0.0); }
  /// Representative scaled to unit Euclidean norm.
  ProjPoint unit() const;
};

/// Chordal distance on P^1 (0 iff same point, at most 1).
double chordal_distance(const ProjPoint& a, const ProjPoint& b);

/// Fixed total order: finite points by real then imaginary part of x/y,
/// infinity last.
bool proj_less(const ProjPoint& a, const ProjPoint& b);

/// Coefficient vector with the same indexing as BinaryForm.
using ComplexForm = std::vector<Complex>;

ComplexForm to_complex(const BinaryForm& f);

using LongComplex = std::complex<long double>;
using LongForm = std::vector<LongComplex>;
LongForm to_complex_long(const BinaryForm& f);
Complex evaluate(const ComplexForm& f, const ProjPoint& p);
double coefficient_norm(const ComplexForm& f);

/// All deg f roots with multiplicity, sorted by proj_less.
///
/// [1:0] is reported exactly, once per vanishing leading coefficient; the
/// finite roots come from companion-matrix eigenvalues of the dehomogenized
/// polynomial, polished by Newton steps in whichever affine chart keeps the
/// root inside the unit disk. The BinaryForm overload polishes against
/// extended-precision coefficients. Throws InputError for the zero form.
std::vector<ProjPoint> roots_numeric(const ComplexForm& f);
std::vector<ProjPoint> roots_numeric(const BinaryForm& f);

}  // namespace galois
