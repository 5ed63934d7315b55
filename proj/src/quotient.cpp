#include "cliffkit/quotient.hpp"

#include <algorithm>

#include "cliffkit/classify.hpp"
#include "cliffkit/represent.hpp"

namespace cliffkit {

static int mod8(int x) { return ((x % 8) + 8) % 8; }

std::string op_name(DiscreteOp op) {
  switch (op) {
    case DiscreteOp::P: return "P";
    case DiscreteOp::T: return "T";
    case DiscreteOp::PT: return "PT";
    case DiscreteOp::C: return "C";
    case DiscreteOp::CP: return "CP";
    case DiscreteOp::CT: return "CT";
    case DiscreteOp::CPT: return "CPT";
  }
  return "?";
}

const std::vector<DiscreteOp>& all_ops() {
  static const std::vector<DiscreteOp> ops = {
      DiscreteOp::P,  DiscreteOp::T,  DiscreteOp::PT, DiscreteOp::C,
      DiscreteOp::CP, DiscreteOp::CT, DiscreteOp::CPT};
  return ops;
}

Mv apply_op(const Mv& x, DiscreteOp op, int p_real) {
  switch (op) {
    case DiscreteOp::P: return x.involute();
    case DiscreteOp::T: return x.reverse();
    case DiscreteOp::PT: return x.conjugate();
    case DiscreteOp::C: return x.pseudo_wrt(p_real);
    case DiscreteOp::CP: return x.involute().pseudo_wrt(p_real);
    case DiscreteOp::CT: return x.reverse().pseudo_wrt(p_real);
    case DiscreteOp::CPT: return x.conjugate().pseudo_wrt(p_real);
  }
  throw internal_error("unknown operation");
}

// Sign fixed by (eps*omega)^2 = 1: eps = 1 when omega squares to +1
// (generator count 1 mod 4 for the all-plus algebra, and everywhere we allow
// a real source), eps = i when it squares to -1.
static CRat pick_eps(const Sig& s) {
  int sq = volume_square_sign(s.p, s.q);
  if (sq == 1) return CRat(1);
  check(s.cx, "volume element squares to -1 in a real algebra");
  return CRat(Rat(0), Rat(1));
}

EpsilonHom make_epsilon_complex(int n_source, int p_real) {
  check(n_source >= 1 && n_source % 2 == 1,
        "the projection needs an odd number of generators");
  check(p_real >= 0 && p_real <= n_source, "real form out of range");
  EpsilonHom h;
  h.source = complex_sig(n_source);
  h.target = complex_sig(n_source - 1);
  h.omega_mask = (1u << n_source) - 1;
  h.eps = pick_eps(h.source);
  h.p_real = p_real;
  h.q_real = n_source - p_real;
  return h;
}

EpsilonHom make_epsilon_real(int p, int q) {
  int tm = mod8(p - q);
  check(tm == 1 || tm == 5,
        "a real projection needs a central volume element squaring to +1");
  EpsilonHom h;
  h.source = real_sig(p, q);
  h.target = q >= 1 ? real_sig(p, q - 1) : real_sig(p - 1, 0);
  h.omega_mask = (1u << (p + q)) - 1;
  h.eps = CRat(1);
  h.p_real = p;
  h.q_real = q;
  return h;
}

static Mv epsilonmap_impl(const EpsilonHom& h, const Mv& x) {
  uint32_t top = 1u << (h.source.n() - 1);
  Mv out = Mv::zero_of(h.target);
  for (const auto& [m, c] : x.t) {
    if (!(m & top)) {
      out.add(m, c);
      continue;
    }
    // A = eps*omega*A2 on this blade: A2's blade is eps*omega*e_m.
    auto [m2, sg] = blade_mul(h.omega_mask, m, h.source);
    check((m2 & top) == 0, "volume product should clear the top generator");
    out.add(m2, c * h.eps * CRat(sg));
  }
  return out;
}

Mv epsilon_map(const EpsilonHom& h, const Mv& x) {
  check(x.sig == h.source || !x.sig.known, "element not in the source algebra");
  return epsilonmap_impl(h, x);
}

std::vector<Mv> epsilon_kernel_span(const EpsilonHom& h) {
  // (1 - eps*omega) b for b running over the subalgebra blades.
  Mv unit = Mv::one(h.source);
  Mv eo = Mv::blade(h.source, h.omega_mask, h.eps);
  Mv proj = unit - eo;
  std::vector<Mv> out;
  uint32_t top = 1u << (h.source.n() - 1);
  for (uint32_t m = 0; m < top; ++m)
    out.push_back(proj * Mv::blade(h.source, m));
  return out;
}

// Action of the operation on the bare volume blade; every operation sends it
// to plus or minus itself.
static int omega_sign(const EpsilonHom& h, DiscreteOp op) {
  Mv w = Mv::blade(h.source, h.omega_mask);
  Mv im = apply_op(w, op, h.p_real);
  if (im == w) return 1;
  if (im == -w) return -1;
  throw internal_error("volume element not preserved up to sign");
}

static bool rule_transfers(const EpsilonHom& h, DiscreteOp op) {
  bool q_even = h.q_real % 2 == 0;
  // r = 1: reversion fixes the volume element; r = 3: conjugation does.
  // Real sources (p - q = 1, 5 mod 8) follow the same residue: there q is
  // even exactly when r = 1.
  int r = h.source.n() % 4;
  switch (op) {
    case DiscreteOp::P: return false;
    case DiscreteOp::T: return r == 1;
    case DiscreteOp::PT: return r == 3;
    case DiscreteOp::C: return q_even;
    case DiscreteOp::CP: return !q_even;
    case DiscreteOp::CT: return r == 1 ? q_even : !q_even;
    case DiscreteOp::CPT: return r == 1 ? !q_even : q_even;
  }
  throw internal_error("unknown operation");
}

std::vector<TransferEntry> transfer_report(const EpsilonHom& h) {
  auto kernel = epsilon_kernel_span(h);
  std::vector<TransferEntry> out;
  for (DiscreteOp op : all_ops()) {
    TransferEntry e;
    e.op = op;
    e.omega_sign = omega_sign(h, op);
    e.transfers = e.omega_sign == 1;
    check(e.transfers == rule_transfers(h, op),
          "transfer rule disagrees with the volume action for " + op_name(op));
    e.kernel_stable = true;
    for (const Mv& v : kernel)
      if (!epsilonmap_impl(h, apply_op(v, op, h.p_real)).is_zero()) {
        e.kernel_stable = false;
        break;
      }
    bool linear = op == DiscreteOp::P || op == DiscreteOp::T || op == DiscreteOp::PT;
    if (linear)
      check(e.kernel_stable == e.transfers,
            "kernel stability disagrees with the volume action for " + op_name(op));
    out.push_back(e);
  }
  return out;
}

// The target inherits the real form with the last generator dropped (or, for
// q = 0, the isomorphic relabeling with the roles of p and q exchanged).
static bool target_conj_trivial(const EpsilonHom& h) {
  int tp = h.q_real >= 1 ? h.p_real : h.q_real;
  int tq = h.q_real >= 1 ? h.q_real - 1 : h.p_real - 1;
  int tm = mod8(tp - tq);
  return tm == 0 || tm == 2;
}

QuotientClass quotient_class(const EpsilonHom& h) {
  QuotientClass out;
  for (const TransferEntry& e : transfer_report(h))
    if (e.transfers) out.ops.push_back(e.op);
  out.conj_trivial = target_conj_trivial(h);

  int tm = mod8(h.p_real - h.q_real);
  bool q_even = h.q_real % 2 == 0;
  if (h.source.cx) {
    if (h.source.n() % 4 == 1)
      out.cls = q_even ? (tm == 1 ? "a1" : "a2") : "b";
    else
      out.cls = q_even ? "c" : (tm == 1 ? "d1" : "d2");
  } else {
    out.cls = tm == 1 ? (q_even ? "e1" : "e2") : (q_even ? "f1" : "f2");
  }

  // The conjugation marked trivial is exactly the one landing on a target
  // with p - q = 0, 2 (mod 8); in source terms, p - q = +-1 (mod 8).  The
  // labels a1, d1, e1, e2 always have it; b and c split (their residue can
  // be 3 or 7), so the label alone does not decide it there.
  check(out.conj_trivial == (tm == 1 || tm == 7),
        "induced-conjugation triviality disagrees with the residue rule");
  if (out.cls == "a1" || out.cls == "d1" || out.cls == "e1" ||
      out.cls == "e2")
    check(out.conj_trivial, "class table triviality");
  else if (out.cls != "b" && out.cls != "c")
    check(!out.conj_trivial, "class table triviality");

  // Each class carries a fixed transferred set.
  std::vector<DiscreteOp> expect;
  if (out.cls == "b")
    expect = {DiscreteOp::T, DiscreteOp::CP, DiscreteOp::CPT};
  else if (out.cls == "c")
    expect = {DiscreteOp::PT, DiscreteOp::C, DiscreteOp::CPT};
  else if (out.cls == "d1" || out.cls == "d2" || out.cls == "e2" || out.cls == "f2")
    expect = {DiscreteOp::PT, DiscreteOp::CP, DiscreteOp::CT};
  else  // a1, a2, e1, f1
    expect = {DiscreteOp::T, DiscreteOp::C, DiscreteOp::CT};
  check(out.ops == expect, "transferred set disagrees with the class table");
  return out;
}

std::pair<Mv, Mv> central_idempotents(const Sig& s) {
  check(s.n() % 2 == 1, "central idempotents need an odd generator count");
  Mv unit = Mv::one(s);
  CRat eps = pick_eps(s);
  Mv eo = Mv::blade(s, (1u << s.n()) - 1, eps);
  CRat half(Rat(1, 2));
  Mv lp = (unit + eo).scaled(half);
  Mv lm = (unit - eo).scaled(half);
  check(lp * lp == lp && lm * lm == lm, "central idempotents fail to square");
  check((lp * lm).is_zero() && lp + lm == unit,
        "central idempotents fail to resolve the identity");
  // Central: they commute with every generator.
  for (int i = 1; i <= s.n(); ++i) {
    Mv g = Mv::generator(s, i);
    check(lp * g == g * lp, "idempotent not central");
  }
  return {lp, lm};
}

std::string quotient_pin_kind(const EpsilonHom& h) {
  if (!h.source.cx) return "pin^b";
  int r = mod8(h.source.n());
  return (r == 1 || r == 5) ? "pin^b" : "pin^{b,c}";
}

// ---------------------------------------------------------------------------

PiResult build_pi(int p, int q) {
  int n = p + q;
  check(n >= 1 && n % 2 == 0, "the intertwiner search expects an even count");
  PiResult out;
  auto base = tensor_pauli_gens(n);
  CRat i_unit = CRat::unit_i();
  Matrix<CRat> unit = Matrix<CRat>::identity(base[0].nr, CRat(1));
  for (int j = 0; j < n; ++j)
    out.gamma.push_back(j < p ? base[j] : base[j].scaled(i_unit));

  // Every spin-basis matrix is a tensor monomial with purely real or purely
  // imaginary entries.
  for (const auto& g : out.gamma) {
    Matrix<CRat> gc = conj(g);
    if (gc == g)
      out.conj_sign.push_back(1);
    else if (gc == -g)
      out.conj_sign.push_back(-1);
    else
      throw internal_error("spin basis matrix neither real nor imaginary");
  }

  // Structural candidate: all imaginary generators when their count is even,
  // else all real generators (whose count is then odd, n being even).
  int a = (int)std::count(out.conj_sign.begin(), out.conj_sign.end(), -1);
  int b = n - a;
  std::vector<int> rule_set;
  if (a % 2 == 0) {
    for (int j = 0; j < n; ++j)
      if (out.conj_sign[j] == -1) rule_set.push_back(j);
  } else {
    check(b % 2 == 1, "parity bookkeeping broke down");
    for (int j = 0; j < n; ++j)
      if (out.conj_sign[j] == 1) rule_set.push_back(j);
  }

  // Brute force over subset products: the intertwiner is unique up to scalar
  // and distinct subsets give independent monomials, so exactly one subset
  // works.
  std::vector<std::vector<int>> found;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    Matrix<CRat> P = unit;
    std::vector<int> set;
    for (int j = 0; j < n; ++j)
      if (mask & (1u << j)) {
        P = P * out.gamma[j];
        set.push_back(j);
      }
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = P * conj(out.gamma[j]) == out.gamma[j] * P;
    if (ok) found.push_back(set);
  }
  check(found.size() == 1, "conjugation intertwiner subset not unique");
  check(found[0] == rule_set, "intertwiner subset disagrees with the parity rule");
  out.pi_set = rule_set;

  out.pi = unit;
  for (int j : out.pi_set) out.pi = out.pi * out.gamma[j];
  out.pi_pidot = pm_identity_matrix(out.pi * conj(out.pi), unit);
  // Independent parity prediction: conjugation flips each imaginary factor,
  // reversing a k-factor product costs k(k-1)/2 swaps, and each factor with a
  // negative square contributes one more sign.  (When every factor in the set
  // squares to +1 this collapses to the familiar "+ iff k = 0, 1 mod 4".)
  int k = (int)out.pi_set.size();
  int flips = k * (k - 1) / 2;
  for (int j : out.pi_set) {
    if (out.conj_sign[j] < 0) ++flips;
    if (j >= p) ++flips;
  }
  check(out.pi_pidot == (flips % 2 == 0 ? 1 : -1),
        "Pi conj(Pi) sign disagrees with the parity rule");

  Matrix<CRat> W = unit;
  for (const auto& g : out.gamma) W = W * g;
  if (anticommutes(out.pi, W))
    out.w_anticommutes = true;
  else if (commutes(out.pi, W))
    out.w_anticommutes = false;
  else
    throw internal_error("Pi neither commutes nor anticommutes with the volume");
  check(out.w_anticommutes == ((a * b) % 2 == 1),
        "Pi / volume commutation disagrees with the parity rule");
  return out;
}

bool real_rep_is_real(int p, int q) {
  int tm = mod8(p - q);
  check(tm == 0 || tm == 2, "a rational ideal representation needs K = R");
  SpinorRep rep = spinor_k_repr(p, q);
  check(rep.K.ring == Ring::R, "division ring is not R");
  for (const auto& g : rep.gamma)
    for (const auto& e : g.a)
      if (!e.is_real()) return false;
  return true;
}

}  // namespace cliffkit
