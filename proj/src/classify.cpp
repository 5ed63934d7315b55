#include "cliffkit/classify.hpp"

#include <sstream>

namespace cliffkit {

std::string AlgClass::name() const {
  std::ostringstream os;
  if (doubled) os << "2";
  os << ring_name(ring);
  if (dim > 1) os << "(" << dim << ")";
  return os.str();
}

static long ring_rdim(Ring r) {
  switch (r) {
    case Ring::R: return 1;
    case Ring::C: return 2;
    case Ring::H: return 4;
  }
  return 0;
}

AlgClass algebra_class(int p, int q) {
  check(p >= 0 && q >= 0, "bad signature");
  int d8 = ((p - q) % 8 + 8) % 8;
  AlgClass c;
  switch (d8) {
    case 0:
    case 2: c.ring = Ring::R; break;
    case 3:
    case 7: c.ring = Ring::C; break;
    case 4:
    case 6: c.ring = Ring::H; break;
    case 1:
      c.ring = Ring::R;
      c.doubled = true;
      break;
    case 5:
      c.ring = Ring::H;
      c.doubled = true;
      break;
  }
  // Total real dimension 2^(p+q) = (doubled?2:1) * d^2 * dim_R(K).
  long total = 1L << (p + q);
  long unit = (c.doubled ? 2 : 1) * ring_rdim(c.ring);
  check(total % unit == 0, "class bookkeeping");
  long dsq = total / unit;
  long d = 1;
  while (d * d < dsq) ++d;
  check(d * d == dsq, "class dimension is not a square");
  c.dim = d;
  return c;
}

AlgClass complex_algebra_class(int n) {
  AlgClass c;
  c.complex_algebra = true;
  c.ring = Ring::C;
  c.doubled = (n % 2 == 1);
  long total = 1L << n;           // complex dimension
  long unit = c.doubled ? 2 : 1;
  long dsq = total / unit;
  long d = 1;
  while (d * d < dsq) ++d;
  check(d * d == dsq, "class dimension is not a square");
  c.dim = d;
  return c;
}

std::vector<std::vector<std::string>> periodic_table(int pmax, int qmax) {
  std::vector<std::vector<std::string>> rows;
  for (int q = 0; q <= qmax; ++q) {
    std::vector<std::string> row;
    for (int p = 0; p <= pmax; ++p) row.push_back(algebra_class(p, q).name());
    rows.push_back(std::move(row));
  }
  return rows;
}

int bw_class_index(int p, int q) { return ((p - q) % 8 + 8) % 8; }

bool bw_equivalent(int p, int q, int p2, int q2) {
  return (p + q2) % 8 == (p2 + q) % 8;
}

bool central_simple(int p, int q) {
  int d8 = bw_class_index(p, q);
  return d8 != 1 && d8 != 5;
}

AlgClass bw_compose(int p, int q, int p2, int q2) {
  AlgClass c = algebra_class(p + p2, q + q2);
  // The graded class only depends on (p-q) mod 8; check the composition law.
  check(bw_class_index(p + p2, q + q2) ==
            (bw_class_index(p, q) + bw_class_index(p2, q2)) % 8,
        "graded class composition");
  // Dimension bookkeeping: total real dimensions multiply.
  long lhs = 1L << (p + q + p2 + q2);
  long rhs = (c.doubled ? 2 : 1) * c.dim * c.dim *
             (c.ring == Ring::R ? 1 : c.ring == Ring::C ? 2 : 4);
  check(lhs == rhs, "tensor dimension bookkeeping");
  return c;
}

std::vector<std::pair<int, int>> karoubi_factorize(int p, int q) {
  std::vector<std::pair<int, int>> out;
  int P = p, Q = q;
  while (P + Q > 1) {
    if (P > 0 && Q > 0) {
      out.push_back({1, 1});
      --P, --Q;
    } else if (P >= 2) {
      out.push_back({2, 0});
      P -= 2;
    } else if (Q >= 2) {
      out.push_back({0, 2});
      Q -= 2;
    } else {
      break;
    }
  }
  if (P + Q > 0) out.push_back({P, Q});
  // Verify: summed signatures recover (p,q) -- the chain composes to the
  // same graded class and total dimension.
  int sp = 0, sq = 0;
  for (auto& [a, b] : out) sp += a, sq += b;
  check(sp == p && sq == q, "factorization bookkeeping");
  return out;
}

bool abs_shift_check(int p, int q) {
  AlgClass a = algebra_class(p, q);
  AlgClass b = algebra_class(p + 8, q);
  return a.ring == b.ring && a.doubled == b.doubled && b.dim == 16 * a.dim;
}

}  // namespace cliffkit
