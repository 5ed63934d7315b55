#include "cliffkit/multivector.hpp"

#include <sstream>

namespace cliffkit {

int blade_reorder_sign(uint32_t a, uint32_t b) {
  // Each generator of b moves left past the generators of a with larger
  // index; count the transpositions.
  int swaps = 0;
  uint32_t bb = b;
  while (bb) {
    int j = __builtin_ctz(bb);
    bb &= bb - 1;
    swaps += __builtin_popcount(a >> (j + 1));
  }
  return (swaps & 1) ? -1 : +1;
}

std::pair<uint32_t, int> blade_mul(uint32_t a, uint32_t b, const Sig& s) {
  int sign = blade_reorder_sign(a, b);
  uint32_t common = a & b;
  if (!s.cx) {
    // e_k^2 = -1 for k > p (0-based bit k >= p).
    uint32_t neg = common >> s.p;
    if (__builtin_popcount(neg) & 1) sign = -sign;
  }
  return {a ^ b, sign};
}

std::string blade_name(uint32_t mask) {
  if (!mask) return "1";
  std::ostringstream os;
  os << "e";
  bool wide = (mask & ~0x1ffu) != 0;
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) {
      if (wide && !first) os << ",";
      os << (i + 1);
      first = false;
    }
  return os.str();
}

Multivector Multivector::scalar(const CRat& c) {
  Multivector m;
  if (!c.is_zero()) m.t[0] = c;
  return m;
}

Multivector Multivector::blade(const Sig& s, uint32_t mask, const CRat& c) {
  check(s.known, "blade requires a known signature");
  check(mask < (1u << s.n()), "blade outside algebra");
  Multivector m;
  m.sig = s;
  if (!c.is_zero()) m.t[mask] = c;
  return m;
}

Multivector Multivector::generator(const Sig& s, int i) {
  check(i >= 1 && i <= s.n(), "generator index out of range");
  return blade(s, 1u << (i - 1));
}

Multivector Multivector::volume(const Sig& s) {
  check(s.known, "volume requires a signature");
  // empty product for n = 0
  return blade(s, (1u << s.n()) - 1);
}

CRat Multivector::coeff(uint32_t mask) const {
  auto it = t.find(mask);
  return it == t.end() ? CRat(0) : it->second;
}

void Multivector::set(uint32_t mask, const CRat& c) {
  if (c.is_zero())
    t.erase(mask);
  else
    t[mask] = c;
}

void Multivector::add(uint32_t mask, const CRat& c) {
  if (c.is_zero()) return;
  auto it = t.find(mask);
  if (it == t.end()) {
    t[mask] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

static Sig merge_sig(const Sig& a, const Sig& b) {
  if (!a.known) return b;
  if (!b.known) return a;
  check(a == b, "signature mismatch");
  return a;
}

Multivector Multivector::operator-() const {
  Multivector m;
  m.sig = sig;
  for (auto& [mask, c] : t) m.t[mask] = -c;
  return m;
}

Multivector Multivector::operator+(const Multivector& o) const {
  Multivector m = *this;
  m.sig = merge_sig(sig, o.sig);
  for (auto& [mask, c] : o.t) m.add(mask, c);
  return m;
}

Multivector Multivector::operator-(const Multivector& o) const {
  return *this + (-o);
}

Multivector Multivector::operator*(const Multivector& o) const {
  Multivector m;
  m.sig = merge_sig(sig, o.sig);
  for (auto& [ma, ca] : t)
    for (auto& [mb, cb] : o.t) {
      auto [mask, sign] = blade_mul(ma, mb, m.sig);
      CRat c = ca * cb;
      if (sign < 0) c = -c;
      m.add(mask, c);
    }
  return m;
}

Multivector Multivector::scaled(const CRat& c) const {
  Multivector m;
  m.sig = sig;
  if (c.is_zero()) return m;
  for (auto& [mask, x] : t) m.t[mask] = x * c;
  return m;
}

bool Multivector::operator==(const Multivector& o) const {
  if (sig.known && o.sig.known && !(sig == o.sig)) return false;
  return t == o.t;
}

Multivector Multivector::grade_part(int k) const {
  Multivector m;
  m.sig = sig;
  for (auto& [mask, c] : t)
    if (grade(mask) == k) m.t[mask] = c;
  return m;
}

int Multivector::max_grade() const {
  int g = 0;
  for (auto& [mask, c] : t) g = std::max(g, grade(mask));
  return g;
}

Multivector Multivector::involute() const {
  Multivector m;
  m.sig = sig;
  for (auto& [mask, c] : t) m.t[mask] = (grade(mask) & 1) ? -c : c;
  return m;
}

Multivector Multivector::reverse() const {
  Multivector m;
  m.sig = sig;
  for (auto& [mask, c] : t) {
    int k = grade(mask);
    m.t[mask] = ((k * (k - 1) / 2) & 1) ? -c : c;
  }
  return m;
}

Multivector Multivector::conjugate() const {
  Multivector m;
  m.sig = sig;
  for (auto& [mask, c] : t) {
    int k = grade(mask);
    m.t[mask] = ((k * (k + 1) / 2) & 1) ? -c : c;
  }
  return m;
}

Multivector Multivector::pseudo() const {
  Multivector m;
  m.sig = sig;
  for (auto& [mask, c] : t) m.t[mask] = c.conj();
  return m;
}

Multivector Multivector::pseudo_wrt(int p_real) const {
  Multivector m;
  m.sig = sig;
  for (auto& [mask, c] : t) {
    int neg = __builtin_popcount(mask >> p_real);
    CRat v = c.conj();
    m.t[mask] = (neg & 1) ? -v : v;
  }
  return m;
}

bool Multivector::is_real() const {
  for (auto& [mask, c] : t)
    if (c.im != 0) return false;
  return true;
}

std::string Multivector::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [mask, c] : t) {
    std::string cs = cx_str(c);
    if (!first) os << (cs[0] == '-' ? " - " : " + ");
    std::string body = cs;
    if (!first && body[0] == '-') body = body.substr(1);
    if (mask == 0) {
      os << body;
    } else {
      bool needs_star = !(body == "1" || body == "i" || body == "-i");
      if (body == "1")
        os << blade_name(mask);
      else if (needs_star && (c.re != 0 && c.im != 0))
        os << "(" << body << ")" << blade_name(mask);
      else if (needs_star)
        os << body << "*" << blade_name(mask);
      else
        os << body << blade_name(mask);
    }
    first = false;
  }
  return os.str();
}

int volume_square_sign(int p, int q) {
  int d = ((p - q) % 8 + 8) % 8;
  return (d == 0 || d == 1 || d == 4 || d == 5) ? +1 : -1;
}

std::vector<Mv> center_basis(const Sig& s) {
  std::vector<Mv> out;
  out.push_back(Mv::one(s));
  if (s.n() % 2 == 1) out.push_back(Mv::volume(s));
  // Cross-check: every listed element commutes with all generators.
  for (auto& z : out)
    for (int i = 1; i <= s.n(); ++i) {
      Mv g = Mv::generator(s, i);
      check((z * g - g * z).is_zero(), "center_basis: element not central");
    }
  return out;
}

Mv random_mv(const Sig& s, std::mt19937_64& rng, bool complex_coeffs) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 4);
  std::uniform_int_distribution<int> pick(0, 1);
  Mv m;
  m.sig = s;
  uint32_t nblades = 1u << s.n();
  for (uint32_t mask = 0; mask < nblades; ++mask) {
    if (nblades > 16 && pick(rng) == 0) continue;
    Rat re(num(rng), den(rng));
    Rat im = complex_coeffs ? Rat(num(rng), den(rng)) : Rat(0);
    m.add(mask, CRat(re, im));
  }
  return m;
}

}  // namespace cliffkit
