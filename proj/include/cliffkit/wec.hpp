#pragma once

#include <string>
#include <vector>

#include "cliffkit/groupid.hpp"
#include "cliffkit/matrix.hpp"
#include "cliffkit/represent.hpp"

namespace cliffkit {

// W, E, C intertwiners of a faithful matrix image of a Clifford algebra:
//   W   = image of the volume element (grade involution conjugator),
//   E   = reversion conjugator, a product of the all-skew or all-symmetric
//         subset of generator images (plain transpose, entries untouched),
//   C   = E W, the conjugation (Clifford conjugate) conjugator.
template <class T>
struct Wec {
  Matrix<T> W, E, C;
  std::vector<int> sym;     // +1 symmetric / -1 skew, per generator image
  std::vector<int> e_set;   // 0-based generator indices whose product is E
  int a = 0, b = 0, c = 0;  // signs of W^2, E^2, C^2
  std::string closure;      // group generated by {W,E,C} with signs
};

std::string aut_label(int minus_count);    // Z2xZ2, D4/Z2, Z4, Q4/Z2
std::string cover_label(int minus_count);  // Z2xZ2xZ2, D4, Z2xZ4, Q4

template <class T>
Wec<T> build_wec(const std::vector<Matrix<T>>& gens, const Matrix<T>& unit) {
  Wec<T> w;
  int n = static_cast<int>(gens.size());
  std::vector<int> skew_idx, sym_idx;
  for (int i = 0; i < n; ++i) {
    Matrix<T> tr = gens[i].transpose();
    if (tr == gens[i]) {
      w.sym.push_back(+1);
      sym_idx.push_back(i);
    } else if (tr == -gens[i]) {
      w.sym.push_back(-1);
      skew_idx.push_back(i);
    } else {
      throw internal_error("generator image neither symmetric nor skew");
    }
  }
  w.W = unit;
  for (auto& g : gens) w.W = w.W * g;

  if (skew_idx.size() % 2 == 0)
    w.e_set = skew_idx;
  else if (sym_idx.size() % 2 == 1)
    w.e_set = sym_idx;
  else
    throw internal_error("no reversion conjugator subset");
  w.E = unit;
  for (int i : w.e_set) w.E = w.E * gens[i];
  w.C = w.E * w.W;

  // E commutes with symmetric generator images and anticommutes with skew
  // ones; C does the opposite.
  for (int i = 0; i < n; ++i) {
    bool ce = w.sym[i] > 0 ? commutes(w.E, gens[i]) : anticommutes(w.E, gens[i]);
    bool cc = w.sym[i] > 0 ? anticommutes(w.C, gens[i]) : commutes(w.C, gens[i]);
    check(ce, "reversion conjugator commutation");
    check(cc, "conjugation conjugator commutation");
  }

  auto square_sign = [&](const Matrix<T>& M) {
    Matrix<T> sq = M * M;
    if (sq == unit) return +1;
    if (sq == -unit) return -1;
    throw internal_error("W/E/C square is not a sign");
  };
  w.a = square_sign(w.W);
  w.b = square_sign(w.E);
  w.c = square_sign(w.C);

  // The two-sided cover is the closure of {-I, W, E, C}: order 8 generically,
  // smaller when E or C degenerates to a scalar or to W itself.
  auto elems = matrix_closure(std::vector<Matrix<T>>{-unit, w.W, w.E, w.C},
                              unit, 16);
  w.closure = identify_group(table_from_matrices(elems));

  // The abstract group is a function of the number of -1 squares alone;
  // degeneracies shrink the closure but never move it off this list.
  int minus = (w.a < 0) + (w.b < 0) + (w.c < 0);
  static const char* allowed[4][3] = {
      {"Z2xZ2xZ2", "Z2xZ2", "Z2"},
      {"D4", "", ""},
      {"Z2xZ4", "Z4", ""},
      {"Q4", "", ""},
  };
  bool ok = false;
  for (auto* name : allowed[minus])
    if (name && *name && w.closure == name) ok = true;
  check(ok, "closure group does not match signature: " + w.closure);
  return w;
}

struct WecChecks {
  bool commut = false;   // E vs generators, split by symmetry
  bool commut3 = false;  // C vs generators, split by symmetry
  bool condt = false;    // E^T = (-1)^{m(m-1)/2} E, C^T = (-1)^{m(m+1)/2} C
};

template <class T>
WecChecks wec_checks(const Wec<T>& w, const std::vector<Matrix<T>>& gens) {
  WecChecks out;
  out.commut = out.commut3 = true;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool ce = w.sym[i] > 0 ? commutes(w.E, gens[i]) : anticommutes(w.E, gens[i]);
    bool cc = w.sym[i] > 0 ? anticommutes(w.C, gens[i]) : commutes(w.C, gens[i]);
    out.commut = out.commut && ce;
    out.commut3 = out.commut3 && cc;
  }
  int m = static_cast<int>(gens.size()) / 2;
  int se = ((m * (m - 1) / 2) % 2 == 0) ? +1 : -1;
  int sc = ((m * (m + 1) / 2) % 2 == 0) ? +1 : -1;
  Matrix<T> Et = w.E.transpose();
  Matrix<T> Ct = w.C.transpose();
  out.condt = (Et == (se > 0 ? w.E : -w.E)) && (Ct == (sc > 0 ? w.C : -w.C));
  return out;
}

// ---------------------------------------------------------------------------

struct ComplexAut {
  int n = 0;
  int a = 0, b = 0, c = 0;       // after the scalar normalization over C
  std::string aut_group, pin_cover;
  bool cliffordian = false;
};

// Both the residue-class rule and the explicit tensor representation are
// evaluated and must agree (even n only).
ComplexAut complex_aut_type(int n);

struct RealAut {
  int p = 0, q = 0;
  int type = 0;                   // (p-q) mod 8
  bool has_wec = false;           // even types only
  int a = 0, b = 0, c = 0;
  std::string aut_group, pin_cover, closure;
  bool cliffordian = false;
  // census of the canonical representation (quaternionic entries use the
  // plain transpose), filled for even types
  int k_skew = 0, l = 0, t = 0, h = 0, g = 0;
  // simple summand signatures for the doubled types 1 and 5
  std::vector<std::pair<int, int>> summands;
};

// Canonical-representation path cross-checked against the residue rules.
RealAut real_aut_type(int p, int q);

// As above but for an explicitly given idempotent.
RealAut real_aut_from_rep(const SpinorRep& rep);

// Complexified checks: generators of Cl(p,q) realized inside the complex
// algebra (tensor representation); returns the W/E/C data over C together
// with the transpose-sign checks.
struct ComplexFormResult {
  Wec<CRat> wec;
  WecChecks checks;
};
ComplexFormResult complex_form_wec(int p, int q);

struct PinCompare {
  bool isomorphic = false;
  std::string reason;
  RealAut left, right;
};
PinCompare compare_pin(int p, int q);

// The standard 4x4 Dirac generators (all squares +1), the usual concrete
// basis for the four-generator complex algebra.
std::vector<Matrix<CRat>> dirac_basis();

// The 2m-generator complex algebra built from m factors of the 3-generator
// real Euclidean algebra: Cliffordian cover iff m is odd.
ComplexAut many_body_symmetry(int m);

}  // namespace cliffkit
