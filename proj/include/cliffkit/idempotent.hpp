#pragma once

#include <vector>

#include "cliffkit/multivector.hpp"

namespace cliffkit {

// Radon-Hurwitz numbers r_i with r_{i+8} = r_i + 4, extended to negative i.
int radon_hurwitz(int i);

// Number of idempotent factors for a primitive idempotent of Cl(p,q):
// k = q - r_{q-p}.
int rh_factor_count(int p, int q);

struct IdempotentInfo {
  std::vector<uint32_t> gens;  // commuting, mutually independent, square +1
  Mv f;                        // product of (1 + e_T)/2 over gens
  int k = 0;
};

// Expand the product idempotent from a commuting generator set, verifying
// squares, commutation, independence of all subset products, and f^2 = f.
// The signed overload builds the product of (1 + sign_i e_{T_i})/2.
IdempotentInfo idempotent_from_blades(const Sig& s,
                                      const std::vector<uint32_t>& gens);
IdempotentInfo idempotent_from_blades(const Sig& s,
                                      const std::vector<uint32_t>& gens,
                                      const std::vector<int>& signs);

// Deterministic search: depth-first over blades in (grade, mask) ascending
// order, returning the lexicographically first commuting independent set of
// the required size.  Throws if none exists (it always does for p+q <= 12).
IdempotentInfo find_primitive_idempotent(int p, int q);

// All distinct subgroups (+/- subset products) generated by valid generator
// sets of the required size; each subgroup is returned via its
// lexicographically smallest generator set.  Exponential in n; intended for
// small algebras.
std::vector<std::vector<uint32_t>> enumerate_idempotent_gen_sets(int p, int q);

}  // namespace cliffkit
