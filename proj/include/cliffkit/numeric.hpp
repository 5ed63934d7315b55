#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace cliffkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Thrown when a structural cross-check fails (two independent computations of
// the same quantity disagree).  The CLI maps this to exit code 3.
struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check(bool ok, const std::string& what) {
  if (!ok) throw internal_error(what);
}

inline std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

// ---------------------------------------------------------------------------
// Gaussian extension of a commutative coefficient ring.

template <class T>
struct Cx {
  T re{}, im{};

  Cx() = default;
  Cx(T r) : re(std::move(r)) {}
  Cx(T r, T i) : re(std::move(r)), im(std::move(i)) {}
  Cx(int r) : re(T(r)) {}

  static Cx unit_i() { return Cx(T(0), T(1)); }

  bool is_zero() const { return re == T(0) && im == T(0); }
  bool is_real() const { return im == T(0); }

  Cx conj() const { return Cx(re, -im); }

  Cx operator-() const { return Cx(-re, -im); }
  Cx operator+(const Cx& o) const { return Cx(re + o.re, im + o.im); }
  Cx operator-(const Cx& o) const { return Cx(re - o.re, im - o.im); }
  Cx operator*(const Cx& o) const {
    return Cx(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  Cx& operator+=(const Cx& o) { return *this = *this + o; }
  Cx& operator-=(const Cx& o) { return *this = *this - o; }
  Cx& operator*=(const Cx& o) { return *this = *this * o; }

  bool operator==(const Cx& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Cx& o) const { return !(*this == o); }
};

using CRat = Cx<Rat>;

inline CRat cx_div(const CRat& a, const CRat& b) {
  Rat n = b.re * b.re + b.im * b.im;
  check(n != 0, "division by zero");
  return CRat((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
}

inline std::string cx_str(const CRat& c) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  if (c.re != 0) {
    os << c.re;
    if (c.im > 0) os << "+";
  }
  if (c.im != 0) {
    if (c.im == 1) os << "i";
    else if (c.im == -1) os << "-i";
    else os << c.im << "i";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Exact ring  Q[sqrt(d_1), sqrt(d_2), ...]  with squarefree radicands.
// Stored as a map  radicand -> rational coefficient;  radicand 1 is the
// rational part.  Products reduce via sqrt(a)sqrt(b) = g sqrt(ab/g^2).

struct Surd {
  std::map<long long, Rat> t;

  Surd() = default;
  Surd(int v) {
    if (v != 0) t[1] = v;
  }
  Surd(const Rat& v) {
    if (v != 0) t[1] = v;
  }

  // r = s*s*m with m squarefree; returns (s, m).
  static std::pair<long long, long long> split_square(long long r) {
    long long s = 1;
    for (long long d = 2; d * d <= r; ++d) {
      while (r % (d * d) == 0) {
        r /= d * d;
        s *= d;
      }
    }
    return {s, r};
  }

  // sqrt of a nonnegative rational, exactly.
  static Surd sqrt_of(const Rat& x) {
    check(x >= 0, "sqrt_of: negative radicand");
    if (x == 0) return Surd();
    Int num = boost::multiprecision::numerator(x);
    Int den = boost::multiprecision::denominator(x);
    Int rad = num * den;
    check(rad <= Int(std::numeric_limits<long long>::max()),
          "sqrt_of: radicand too large");
    auto [s, m] = split_square(static_cast<long long>(rad));
    Surd out;
    out.t[m] = Rat(s, den);
    return out;
  }

  void add_term(long long rad, const Rat& c) {
    if (c == 0) return;
    auto it = t.find(rad);
    if (it == t.end()) {
      t[rad] = c;
    } else {
      it->second += c;
      if (it->second == 0) t.erase(it);
    }
  }

  bool is_zero() const { return t.empty(); }

  // Rational value if purely rational.
  Rat rational() const {
    if (t.empty()) return Rat(0);
    check(t.size() == 1 && t.begin()->first == 1, "surd is irrational");
    return t.begin()->second;
  }

  Surd operator-() const {
    Surd out;
    for (auto& [r, c] : t) out.t[r] = -c;
    return out;
  }
  Surd operator+(const Surd& o) const {
    Surd out = *this;
    for (auto& [r, c] : o.t) out.add_term(r, c);
    return out;
  }
  Surd operator-(const Surd& o) const { return *this + (-o); }
  Surd operator*(const Surd& o) const {
    Surd out;
    for (auto& [r1, c1] : t)
      for (auto& [r2, c2] : o.t) {
        long long g = std::gcd(r1, r2);
        long long rad = (r1 / g) * (r2 / g);
        out.add_term(rad, c1 * c2 * g);
      }
    return out;
  }
  Surd& operator+=(const Surd& o) { return *this = *this + o; }
  Surd& operator*=(const Surd& o) { return *this = *this * o; }

  bool operator==(const Surd& o) const { return t == o.t; }
  bool operator!=(const Surd& o) const { return !(*this == o); }

  std::string str() const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [r, c] : t) {
      if (!first && c > 0) os << "+";
      first = false;
      if (r == 1) {
        os << c;
      } else {
        if (c == 1) {
        } else if (c == -1) {
          os << "-";
        } else {
          os << c << "*";
        }
        os << "sqrt(" << r << ")";
      }
    }
    return os.str();
  }
};

using CSurd = Cx<Surd>;

inline CSurd to_csurd(const CRat& c) { return CSurd(Surd(c.re), Surd(c.im)); }

// sqrt of a rational of either sign as a complex surd.
inline CSurd csqrt_of(const Rat& x) {
  if (x >= 0) return CSurd(Surd::sqrt_of(x), Surd(0));
  return CSurd(Surd(0), Surd::sqrt_of(-x));
}

// is_zero hooks used by generic matrix code.
inline bool ck_is_zero(const Rat& x) { return x == 0; }
inline bool ck_is_zero(const Surd& x) { return x.is_zero(); }
template <class T>
inline bool ck_is_zero(const Cx<T>& x) {
  return x.is_zero();
}

}  // namespace cliffkit
