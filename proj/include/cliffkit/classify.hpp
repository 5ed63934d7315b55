#pragma once

#include <string>
#include <vector>

#include "cliffkit/multivector.hpp"

namespace cliffkit {

enum class Ring { R, C, H };

inline std::string ring_name(Ring r) {
  switch (r) {
    case Ring::R: return "R";
    case Ring::C: return "C";
    case Ring::H: return "H";
  }
  return "?";
}

// Cl(p,q) ~ M_d(K) or M_d(K) (+) M_d(K).
struct AlgClass {
  Ring ring = Ring::R;
  bool doubled = false;
  long dim = 1;  // d
  bool complex_algebra = false;

  std::string name() const;  // "R", "2R", "H(4)", "2H(2)", ...
};

AlgClass algebra_class(int p, int q);
AlgClass complex_algebra_class(int n);

// p x q grid of class names; row index is q = 0..qmax, column p = 0..pmax.
std::vector<std::vector<std::string>> periodic_table(int pmax, int qmax);

// Graded Brauer-Wall composition: the class of the graded tensor product
// Cl(p,q) (x) Cl(p',q') is the class of Cl(p+p', q+q').  Returns that class
// and cross-checks ring/doubling/dimension bookkeeping.
AlgClass bw_compose(int p, int q, int p2, int q2);

// Same graded-Brauer-Wall class iff p+q' == p'+q (mod 8).
bool bw_equivalent(int p, int q, int p2, int q2);
int bw_class_index(int p, int q);  // (p-q) mod 8

// Central simple over its center iff p-q != 1, 5 (mod 8).
bool central_simple(int p, int q);

// Factor Cl(p,q) as a tensor chain of Cl(1,1) / Cl(2,0) / Cl(0,2) with a
// terminal factor of dimension <= 2; verifies the class bookkeeping.
std::vector<std::pair<int, int>> karoubi_factorize(int p, int q);

// Cl(p+8,q) has the same ring and doubling as Cl(p,q) with 16x the matrix
// dimension.
bool abs_shift_check(int p, int q);

}  // namespace cliffkit
