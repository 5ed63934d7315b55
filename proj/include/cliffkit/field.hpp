#pragma once

#include <array>

#include "cliffkit/matrix.hpp"
#include "cliffkit/multivector.hpp"

namespace cliffkit {

// Space-time gamma matrices over the Gaussian rationals:
//   g0 = diag(1,1,-1,-1),  g_i = [[0, s_i], [-s_i, 0]]  (s_i = Pauli).
// g0^2 = +I, g_i^2 = -I, pairwise anticommuting (checked on construction).
std::array<Matrix<CRat>, 4> gamma_basis();
Matrix<CRat> gamma0123();  // g0 g1 g2 g3, squares to -I
Matrix<CRat> gamma5();     // -i g0 g1 g2 g3, squares to +I

// Element of the even subalgebra Cl+(1,3) ~= Cl(3,0) in its eight real
// coordinates  a0 + a01 g01 + a02 g02 + a03 g03 + a12 g12 + a13 g13
// + a23 g23 + a0123 g0123.
struct DHSpinor {
  Rat a0, a01, a02, a03, a12, a13, a23, a0123;
};

// phi1 = a0 - i a12, phi2 = a31 - i a23, phi3 = a03 - i a0123,
// phi4 = a01 + i a02   (cyclic pairs 12|23|31; a31 = -a13).
std::array<CRat, 4> phi_components(const DHSpinor& s);

// The 4x4 matrix of s, computed by summing coefficient * gamma-monomial and
// cross-checked against the closed biquaternion pattern
//   [[phi1, -phi2*, phi3,  phi4*],
//    [phi2,  phi1*, phi4, -phi3*],
//    [phi3,  phi4*, phi1, -phi2*],
//    [phi4, -phi3*, phi2,  phi1*]].
Matrix<CRat> dh_matrix(const DHSpinor& s);

// phi * (1+g0)/2 * (1+i g12)/2: kills all but the first column, which
// carries (phi1, phi2, phi3, phi4).
Matrix<CRat> ideal_projection(const DHSpinor& s);

// Reversion of the Cl(3,0) counterpart: flips the spatial-bivector and
// pseudoscalar coordinates.
DHSpinor dh_reverse(const DHSpinor& s);

// Chiral split of the massless theory: plus/minus = P+- * phi * g2 g1 with
// P+- = (1 +- g5)/2.  Rows 3..4 repeat rows 1..2 (negated for plus).
struct HelicitySplit {
  Matrix<CRat> plus, minus;
  Matrix<CRat> p_plus, p_minus;
};
HelicitySplit helicity_split(const DHSpinor& s);

// Electromagnetic data in the paravector model of Cl(3,0) (e0 = scalar 1):
// nabla A = scalar + (E^i + w H^i) e_i, w = e123.
struct EMField {
  Rat scalar;  // d0 A0 + div A, the gauge residue
  std::array<Rat, 3> E, H;
};

// Clifford product (d0 + d^i e_i)(A0 + A^j e_j) in Cl(3,0), read off by
// grade.  Derivatives are caller-supplied numbers.
EMField nabla_a(const std::array<Rat, 4>& d, const std::array<Rat, 4>& A);

// The multivector scalar + E^i e_i + H^1 e23 + H^2 e31 + H^3 e12.
Mv em_element(const EMField& f);

// Maxwell residuals from the product nabla F with F = E^i e_i + w H^i e_i;
// dE[mu][i] = d^mu E^i and likewise dH.
struct MaxwellResiduals {
  Rat div_e;
  std::array<Rat, 3> ampere;   // curl H - d0 E
  std::array<Rat, 3> faraday;  // curl E + d0 H
  Rat div_h;
};
MaxwellResiduals nabla_f(const std::array<std::array<Rat, 3>, 4>& dE,
                         const std::array<std::array<Rat, 3>, 4>& dH);

// phi = sum F_i g0 g_i with F = E + iH (complex scalars), and its projected
// single-column spinor psi = phi * (1+g0)/2 * (1+i g12)/2 with column
// (0, 0, F3, F1 + i F2).  Reversion of the Cl(3,0) field element maps
// F -> conj(F), i.e. (E, H) -> (E, -H).
struct FieldBivector {
  std::array<CRat, 3> F;
  Matrix<CRat> phi, psi;
};
FieldBivector field_bivector(const std::array<Rat, 3>& E,
                             const std::array<Rat, 3>& H);

}  // namespace cliffkit
