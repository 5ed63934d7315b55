#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "cliffkit/numeric.hpp"

namespace cliffkit {

// Signature of a Clifford algebra.  Generators e_1..e_p square to +1 and
// e_{p+1}..e_{p+q} to -1.  `cx` marks the complex algebra on p+q generators
// (all squares +1, coefficients taken over the Gaussian rationals with
// conjugation acting on them).  `known` is false only for bare scalars, which
// combine with any signature.
struct Sig {
  int p = 0, q = 0;
  bool cx = false;
  bool known = false;

  int n() const { return p + q; }
  bool operator==(const Sig& o) const {
    return p == o.p && q == o.q && cx == o.cx && known == o.known;
  }
};

inline Sig real_sig(int p, int q) { return Sig{p, q, false, true}; }
inline Sig complex_sig(int n) { return Sig{n, 0, true, true}; }

// Number of set bits = grade of a basis blade.
inline int grade(uint32_t mask) { return __builtin_popcount(mask); }

// Sign from reordering e_S e_T into canonical ascending order (before
// squaring out repeated generators).
int blade_reorder_sign(uint32_t a, uint32_t b);

// Product of basis blades: (mask, sign) with generator squares applied.
std::pair<uint32_t, int> blade_mul(uint32_t a, uint32_t b, const Sig& s);

// "1", "e1", "e13", ... (indices joined; all our algebras have n <= 12, so
// indices 10..12 are printed in brackets to stay unambiguous).
std::string blade_name(uint32_t mask);

class Multivector {
 public:
  Sig sig;                       // known=false for bare scalars
  std::map<uint32_t, CRat> t;    // blade mask -> coefficient

  Multivector() = default;
  static Multivector scalar(const CRat& c);
  static Multivector blade(const Sig& s, uint32_t mask, const CRat& c = CRat(1));
  static Multivector generator(const Sig& s, int i);  // 1-based
  static Multivector volume(const Sig& s);
  static Multivector one(const Sig& s) { return blade(s, 0); }
  static Multivector zero_of(const Sig& s) { Multivector z; z.sig = s; return z; }

  bool is_zero() const { return t.empty(); }
  CRat coeff(uint32_t mask) const;
  void set(uint32_t mask, const CRat& c);
  void add(uint32_t mask, const CRat& c);

  Multivector operator-() const;
  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector operator*(const Multivector& o) const;
  Multivector& operator+=(const Multivector& o) { return *this = *this + o; }
  Multivector& operator-=(const Multivector& o) { return *this = *this - o; }
  Multivector& operator*=(const Multivector& o) { return *this = *this * o; }
  Multivector scaled(const CRat& c) const;

  bool operator==(const Multivector& o) const;
  bool operator!=(const Multivector& o) const { return !(*this == o); }

  Multivector grade_part(int k) const;
  int max_grade() const;

  // The four fundamental coefficient-preserving symmetries.
  Multivector involute() const;       // e_i -> -e_i          (grade sign (-1)^k)
  Multivector reverse() const;        // reverses products    ((-1)^{k(k-1)/2})
  Multivector conjugate() const;      // involute + reverse   ((-1)^{k(k+1)/2})
  Multivector pseudo() const;         // conjugates coefficients only

  // Coefficient conjugation for an embedded real form Cl(p_real, n-p_real)
  // inside the complex algebra: generators beyond p_real pick up a sign.
  Multivector pseudo_wrt(int p_real) const;

  std::string str() const;

  bool is_real() const;  // every coefficient has zero imaginary part
};

using Mv = Multivector;

inline bool ck_is_zero(const Mv& x) { return x.is_zero(); }

// +1 or -1: the square of the volume element, by the mod-8 rule.
int volume_square_sign(int p, int q);

// Basis of the center: {1} for even n, {1, volume} for odd n.
std::vector<Mv> center_basis(const Sig& s);

// Uniformly sampled sparse multivector with small rational coefficients.
Mv random_mv(const Sig& s, std::mt19937_64& rng, bool complex_coeffs);

}  // namespace cliffkit
