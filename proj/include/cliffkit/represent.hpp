#pragma once

#include <string>
#include <vector>

#include "cliffkit/classify.hpp"
#include "cliffkit/idempotent.hpp"
#include "cliffkit/matrix.hpp"
#include "cliffkit/multivector.hpp"

namespace cliffkit {

// The division ring K = f Cl(p,q) f attached to a primitive idempotent.
struct KField {
  Ring ring = Ring::R;
  std::vector<Mv> basis;  // basis[0] = f (the unit of K); size 1, 2 or 4
};

// Spinor representation on the minimal left ideal Cl(p,q) f, with K acting
// on the right.  Generator images have entries in K (multivectors).
struct SpinorRep {
  Sig sig;
  IdempotentInfo idem;
  KField K;
  std::vector<Mv> ideal_basis;            // s_1 = f, ..., s_d
  std::vector<Matrix<Mv>> gamma;          // one per generator e_1..e_n
  Matrix<Mv> unit;                        // identity matrix over K
};

KField k_field(const Sig& s, const Mv& f);

// Greedy basis of the minimal left ideal Cl f such that the s_t * b_u
// (b_u running over the K basis) are linearly independent over R.
std::vector<Mv> ideal_k_basis(const Sig& s, const Mv& f, const KField& K);

SpinorRep spinor_k_repr(int p, int q, const IdempotentInfo& idem);
inline SpinorRep spinor_k_repr(int p, int q) {
  return spinor_k_repr(p, q, find_primitive_idempotent(p, q));
}

// Image of an arbitrary element under the representation.
Matrix<Mv> rep_of(const SpinorRep& rep, const Mv& x);

// Decompose a K-entry over the K basis; coordinates are rational.
std::vector<Rat> k_coords(const SpinorRep& rep, const Mv& entry);

std::string k_entry_str(const SpinorRep& rep, const Mv& entry);

// ---------------------------------------------------------------------------
// Complex representation of the complex algebra on n generators by tensor
// products of the three 2x2 spin matrices; generators square to +1 and
// anticommute.  For even n = 2k the images span all of M_{2^k}(C); for odd
// n = 2k+1 the last generator is the diagonal tensor power.
std::vector<Matrix<CRat>> tensor_pauli_gens(int n);

Matrix<CRat> sigma1();
Matrix<CRat> sigma2();
Matrix<CRat> sigma3();

// Image of a complex-algebra multivector in the tensor representation.
Matrix<CRat> tensor_rep_of(const std::vector<Matrix<CRat>>& gens, const Mv& x);

// Rank of the span of all blade images (monomial independence check).
int tensor_monomial_rank(int n);

}  // namespace cliffkit
