#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cliffkit/matrix.hpp"
#include "cliffkit/multivector.hpp"

namespace cliffkit {

// Discrete operations: grade involution P, reversion T, their composite PT,
// and the coefficient-conjugating family C, CP, CT, CPT.
enum class DiscreteOp { P, T, PT, C, CP, CT, CPT };

std::string op_name(DiscreteOp op);
const std::vector<DiscreteOp>& all_ops();

// p_real splits the generators into a real-form basis for the conjugating
// family: generator indices past p_real pick up a sign under conjugation.
Mv apply_op(const Mv& x, DiscreteOp op, int p_real);

// Projection onto the subalgebra spanned by the first n-1 generators,
// A^1 + eps*omega*A^2 -> A^1 + A^2, defined when the volume element omega is
// central ((eps*omega)^2 = 1 fixes eps up to sign).
struct EpsilonHom {
  Sig source, target;
  CRat eps;  // 1 or i
  uint32_t omega_mask = 0;
  int p_real = 0, q_real = 0;  // real form of the source
};

// Complex algebra on an odd number of generators; the real form (p_real,
// n - p_real) only matters for the conjugating family.
EpsilonHom make_epsilon_complex(int n_source, int p_real);
// Real algebra with a doubled ring (p - q = 1, 5 mod 8), eps = 1.
EpsilonHom make_epsilon_real(int p, int q);

Mv epsilon_map(const EpsilonHom& h, const Mv& x);
std::vector<Mv> epsilon_kernel_span(const EpsilonHom& h);

struct TransferEntry {
  DiscreteOp op;
  int omega_sign = 0;     // sign of the blade action on the volume element
  bool transfers = false; // omega_sign == +1; checked against the residue rule
  bool kernel_stable = false;  // literal kernel preservation; coincides with
                               // `transfers` for P, T, PT, while the
                               // conjugating family may swap the two ideals
};
std::vector<TransferEntry> transfer_report(const EpsilonHom& h);

struct QuotientClass {
  std::string cls;  // a1 a2 b c d1 d2 for a complex source, e1 e2 f1 f2 real
  std::vector<DiscreteOp> ops;  // transferred operations
  bool conj_trivial = false;    // induced conjugation is scalar on the target
};
QuotientClass quotient_class(const EpsilonHom& h);

// Central idempotents (1 +/- eps*omega)/2 for an odd generator count; the
// identities lambda^2 = lambda, lambda+ lambda- = 0, lambda+ + lambda- = 1
// are verified on construction.
std::pair<Mv, Mv> central_idempotents(const Sig& s);

// Cover kind of the induced group homomorphism on the quotient side.
std::string quotient_pin_kind(const EpsilonHom& h);

// ---------------------------------------------------------------------------
// Intertwiner of entrywise conjugation in the tensor representation of the
// real form: gamma_i = Pi conj(gamma_i) Pi^{-1} for the spin basis
// {E_1..E_p, iE_{p+1}..iE_{p+q}} (p + q even).
struct PiResult {
  std::vector<Matrix<CRat>> gamma;
  std::vector<int> conj_sign;  // +1: entries fixed by conjugation, -1: negated
  std::vector<int> pi_set;     // 0-based generator indices in the product
  Matrix<CRat> pi;
  int pi_pidot = 0;            // Pi conj(Pi) = sign * I
  bool w_anticommutes = false; // Pi against the volume image
};
PiResult build_pi(int p, int q);

// K = R signatures (p - q = 0, 2 mod 8) admit an ideal representation with
// rational entries, on which coefficient conjugation acts trivially.
bool real_rep_is_real(int p, int q);

}  // namespace cliffkit
