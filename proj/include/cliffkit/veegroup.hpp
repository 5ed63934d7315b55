#pragma once

#include <string>
#include <vector>

#include "cliffkit/groupid.hpp"
#include "cliffkit/multivector.hpp"

namespace cliffkit {

// Finite 2-group sitting inside Cl(p,q)^x: all +/- basis blades.
struct VeeElem {
  int sign = +1;       // +1 or -1
  uint32_t mask = 0;

  bool operator==(const VeeElem& o) const {
    return sign == o.sign && mask == o.mask;
  }
  std::string name() const {
    std::string b = blade_name(mask);
    return sign < 0 ? "-" + b : b;
  }
};

struct VeeGroup {
  Sig sig;
  std::vector<VeeElem> elems;  // canonical order: blades by (grade, mask), + then -

  int order() const { return static_cast<int>(elems.size()); }
  int index_of(const VeeElem& e) const;
};

VeeGroup vee_group(int p, int q);
VeeElem vee_mul(const Sig& s, const VeeElem& a, const VeeElem& b);

GroupTable vee_table(const VeeGroup& g);

// Family label by (p-q) mod 8: N_odd / N_even / Omega_odd / Omega_even / S.
std::string vee_type(int p, int q);

// "Z2", "Z2xZ2" or "Z4" -- cross-checked against the computed center.
std::string vee_center(int p, int q);

// Fixed-width text rendering of the full multiplication table.
std::string render_vee_table(const VeeGroup& g);

}  // namespace cliffkit
