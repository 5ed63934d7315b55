// Acceptance suite: one pass/fail line per criterion, exact comparisons only.
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cliffkit/classify.hpp"
#include "cliffkit/field.hpp"
#include "cliffkit/idempotent.hpp"
#include "cliffkit/lorentz.hpp"
#include "cliffkit/multivector.hpp"
#include "cliffkit/quotient.hpp"
#include "cliffkit/represent.hpp"
#include "cliffkit/veegroup.hpp"
#include "cliffkit/wec.hpp"

using namespace cliffkit;

static int g_failures = 0;

template <class F>
static void criterion(int num, const char* label, F body) {
  bool ok = false;
  std::string why;
  try {
    ok = body();
  } catch (const std::exception& e) {
    why = e.what();
  }
  std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", num, label,
              why.empty() ? "" : " -- ", why.c_str());
  if (!ok) ++g_failures;
}

// ---------------------------------------------------------------------------
// 1. Frozen 8x8 classification table, rows q = 0..7, columns p = 0..7.

static const char* kTable[8][8] = {
    {"R", "2R", "R(2)", "C(2)", "H(2)", "2H(2)", "H(4)", "C(8)"},
    {"C", "R(2)", "2R(2)", "R(4)", "C(4)", "H(4)", "2H(4)", "H(8)"},
    {"H", "C(2)", "R(4)", "2R(4)", "R(8)", "C(8)", "H(8)", "2H(8)"},
    {"2H", "H(2)", "C(4)", "R(8)", "2R(8)", "R(16)", "C(16)", "H(16)"},
    {"H(2)", "2H(2)", "H(4)", "C(8)", "R(16)", "2R(16)", "R(32)", "C(32)"},
    {"C(4)", "H(4)", "2H(4)", "H(8)", "C(16)", "R(32)", "2R(32)", "R(64)"},
    {"R(8)", "C(8)", "H(8)", "2H(8)", "H(16)", "C(32)", "R(64)", "2R(64)"},
    {"2R(8)", "R(16)", "C(16)", "H(16)", "2H(16)", "H(32)", "C(64)", "R(128)"},
};

static bool c1_periodic_table() {
  auto t = periodic_table(7, 7);
  if (t.size() != 8) return false;
  int cells = 0;
  for (int q = 0; q <= 7; ++q) {
    if (t[q].size() != 8) return false;
    for (int p = 0; p <= 7; ++p) {
      if (t[q][p] != kTable[q][p]) return false;
      ++cells;
    }
  }
  return cells == 64;
}

// ---------------------------------------------------------------------------
// 2. Volume-element square rule vs the direct blade product, all p+q <= 10.

static bool c2_volume_squares() {
  int sigs = 0;
  for (int p = 0; p <= 10; ++p)
    for (int q = 0; p + q <= 10; ++q) {
      Sig s = real_sig(p, q);
      Mv w = Mv::volume(s);
      if (w * w != Mv::blade(s, 0, CRat(volume_square_sign(p, q))))
        return false;
      ++sigs;
    }
  return sigs == 66;
}

// ---------------------------------------------------------------------------
// 3. Vee groups: identifications, byte-identical printed tables, orders,
// centers.

struct VeeFixture {
  int p, q;
  const char* group;
  std::vector<std::string> order;
  // rows for the base elements 1, e1 (, e2, e12); the others follow by
  // negation
  std::vector<std::vector<std::string>> base_rows;
};

static std::string neg_name(const std::string& s) {
  return s[0] == '-' ? s.substr(1) : "-" + s;
}

static std::string render_expected(const VeeFixture& f) {
  // rows, in element order: row(1)=order, row(-1)=-order, frozen base rows,
  // row(-x) = -row(x)
  std::vector<std::vector<std::string>> rows;
  auto negated = [](const std::vector<std::string>& r) {
    std::vector<std::string> out;
    for (auto& x : r) out.push_back(neg_name(x));
    return out;
  };
  rows.push_back(f.order);
  rows.push_back(negated(f.order));
  for (auto& r : f.base_rows) {
    rows.push_back(r);
    rows.push_back(negated(r));
  }
  size_t w = 1;
  for (auto& e : f.order) w = std::max(w, e.size());
  auto pad = [&](const std::string& s) {
    std::string out = s;
    while (out.size() < w) out += ' ';
    return out;
  };
  std::string out = pad("*");
  for (auto& e : f.order) out += " | " + pad(e);
  out += "\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    out += pad(f.order[i]);
    for (auto& x : rows[i]) out += " | " + pad(x);
    out += "\n";
  }
  return out;
}

static bool c3_vee_groups() {
  std::vector<VeeFixture> fx = {
      {1, 0, "Z2xZ2", {"1", "-1", "e1", "-e1"}, {{"e1", "-e1", "1", "-1"}}},
      {0, 1, "Z4", {"1", "-1", "e1", "-e1"}, {{"e1", "-e1", "-1", "1"}}},
      {2,
       0,
       "D4",
       {"1", "-1", "e1", "-e1", "e2", "-e2", "e12", "-e12"},
       {{"e1", "-e1", "1", "-1", "e12", "-e12", "e2", "-e2"},
        {"e2", "-e2", "-e12", "e12", "1", "-1", "-e1", "e1"},
        {"e12", "-e12", "-e2", "e2", "e1", "-e1", "-1", "1"}}},
      {0,
       2,
       "Q4",
       {"1", "-1", "e1", "-e1", "e2", "-e2", "e12", "-e12"},
       {{"e1", "-e1", "-1", "1", "e12", "-e12", "-e2", "e2"},
        {"e2", "-e2", "-e12", "e12", "-1", "1", "e1", "-e1"},
        {"e12", "-e12", "e2", "-e2", "-e1", "e1", "-1", "1"}}},
  };
  for (auto& f : fx) {
    VeeGroup g = vee_group(f.p, f.q);
    if (identify_group(vee_table(g)) != f.group) return false;
    for (size_t i = 0; i < f.order.size(); ++i)
      if (g.elems[i].name() != f.order[i]) return false;
    if (render_vee_table(g) != render_expected(f)) return false;
  }
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; p + q <= 6; ++q) {
      if (vee_group(p, q).order() != (1 << (p + q + 1))) return false;
      int d8 = ((p - q) % 8 + 8) % 8;
      const char* want = (d8 % 2 == 0)             ? "Z2"
                         : (d8 == 1 || d8 == 5)    ? "Z2xZ2"
                                                   : "Z4";
      if (vee_center(p, q) != want) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// 4. Idempotent factor counts and the printed factor sets.

static bool primitive_rep_ok(int p, int q, const IdempotentInfo& idem) {
  SpinorRep rep = spinor_k_repr(p, q, idem);
  AlgClass cls = algebra_class(p, q);
  return static_cast<long>(rep.ideal_basis.size()) == cls.dim &&
         rep.K.ring == cls.ring;
}

static bool c4_idempotents() {
  if (rh_factor_count(1, 3) != 1 || rh_factor_count(4, 1) != 2 ||
      rh_factor_count(0, 8) != 4 || rh_factor_count(8, 0) != 4)
    return false;

  // the one-factor case is found literally: f = (1 + e1)/2
  IdempotentInfo a = find_primitive_idempotent(1, 3);
  Sig s13 = real_sig(1, 3);
  if (a.gens != std::vector<uint32_t>{0b0001}) return false;
  if (a.f != Mv::blade(s13, 0, CRat(Rat(1, 2))) +
                 Mv::blade(s13, 0b0001, CRat(Rat(1, 2))))
    return false;

  // printed factor set for five generators: (1+e1234)/2 (1+e145)/2
  Sig s41 = real_sig(4, 1);
  IdempotentInfo b = idempotent_from_blades(s41, {0b01111, 0b11001});
  Mv want = Mv::blade(s41, 0, CRat(Rat(1, 4)));
  want += Mv::blade(s41, 0b01111, CRat(Rat(1, 4)));
  want -= Mv::blade(s41, 0b10110, CRat(Rat(1, 4)));
  want += Mv::blade(s41, 0b11001, CRat(Rat(1, 4)));
  if (b.k != 2 || b.f != want) return false;
  if (!primitive_rep_ok(4, 1, b)) return false;

  // printed four-factor set for eight generators, both metrics
  std::vector<uint32_t> g8 = {0b10001011, 0b10010110, 0b10101100, 0b11011000};
  for (auto [p, q] : {std::pair{0, 8}, {8, 0}}) {
    IdempotentInfo c = idempotent_from_blades(real_sig(p, q), g8);
    if (c.k != 4) return false;
    if (!primitive_rep_ok(p, q, c)) return false;
  }

  // the deterministic search lands on equally primitive sets
  for (auto [p, q] : {std::pair{1, 3}, {4, 1}, {0, 8}, {8, 0}}) {
    IdempotentInfo f = find_primitive_idempotent(p, q);
    if (f.k != rh_factor_count(p, q)) return false;
    if (!primitive_rep_ok(p, q, f)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 5. Dirac basis intertwiners and their eight-element closure.

static Matrix<CRat> mat4(std::initializer_list<int> re,
                         std::initializer_list<int> im = {}) {
  Matrix<CRat> m(4, 4);
  int k = 0;
  for (int v : re) {
    m.at(k / 4, k % 4) = m.at(k / 4, k % 4) + CRat(Rat(v));
    ++k;
  }
  k = 0;
  for (int v : im) {
    m.at(k / 4, k % 4) = m.at(k / 4, k % 4) + CRat(Rat(0), Rat(v));
    ++k;
  }
  return m;
}

static bool c5_dirac_fixtures() {
  auto g = dirac_basis();
  Matrix<CRat> one = Matrix<CRat>::identity(4, CRat(1));
  Wec<CRat> w = build_wec(g, one);

  Matrix<CRat> W = mat4({0, 0, -1, 0,    //
                         0, 0, 0, -1,    //
                         -1, 0, 0, 0,    //
                         0, -1, 0, 0});
  Matrix<CRat> E = mat4({0, -1, 0, 0,    //
                         1, 0, 0, 0,     //
                         0, 0, 0, -1,    //
                         0, 0, 1, 0});
  Matrix<CRat> C = mat4({0, 0, 0, 1,     //
                         0, 0, -1, 0,    //
                         0, 1, 0, 0,     //
                         -1, 0, 0, 0});
  if (w.W != W || w.E != E || w.C != C) return false;
  if (w.a != 1 || w.b != -1 || w.c != -1) return false;

  // the printed 3x3 product table on {W, E, C}
  bool table = w.W * w.W == one && w.W * w.E == w.C && w.W * w.C == w.E &&
               w.E * w.W == w.C && w.E * w.E == -one && w.E * w.C == -w.W &&
               w.C * w.W == w.E && w.C * w.E == -w.W && w.C * w.C == -one;
  if (!table) return false;

  auto elems = matrix_closure(std::vector<Matrix<CRat>>{-one, w.W, w.E, w.C},
                              one, 16);
  return elems.size() == 8 && w.closure == "Z2xZ4";
}

// ---------------------------------------------------------------------------
// 6. Census of all primitive-idempotent representations for the (3,1)/(1,3)
// pair.

static bool c6_pin_census() {
  auto sets31 = enumerate_idempotent_gen_sets(3, 1);
  if (sets31.size() != 20) return false;
  Sig s31 = real_sig(3, 1);
  for (auto& gens : sets31) {
    SpinorRep rep = spinor_k_repr(3, 1, idempotent_from_blades(s31, gens));
    RealAut r = real_aut_from_rep(rep);
    if (r.aut_group != "Q4/Z2" || r.a != -1 || r.b != -1 || r.c != -1 ||
        r.pin_cover != "Q4")
      return false;
  }

  auto sets13 = enumerate_idempotent_gen_sets(1, 3);
  std::set<std::vector<uint32_t>> got(sets13.begin(), sets13.end());
  std::set<std::vector<uint32_t>> expect = {
      {0b0001}, {0b0011}, {0b0101}, {0b1001}, {0b1110}};
  if (got != expect) return false;
  Sig s13 = real_sig(1, 3);
  for (auto& gens : sets13) {
    SpinorRep rep = spinor_k_repr(1, 3, idempotent_from_blades(s13, gens));
    RealAut r = real_aut_from_rep(rep);
    if (gens == std::vector<uint32_t>{0b1110}) {
      if (r.aut_group != "Z4" || r.a != -1 || r.b != 1 || r.c != -1 ||
          r.pin_cover != "Z2xZ4")
        return false;
    } else {
      if (r.aut_group != "Q4/Z2" || r.a != -1 || r.b != -1 || r.c != -1 ||
          r.pin_cover != "Q4")
        return false;
    }
  }

  return !compare_pin(3, 1).isomorphic && compare_pin(2, 2).isomorphic;
}

// ---------------------------------------------------------------------------
// 7. Complex symmetry groups, rule vs matrices, n in {2,4,6,8}.

static bool c7_complex_aut() {
  for (int n : {2, 4, 6, 8}) {
    ComplexAut a = complex_aut_type(n);  // internal rule/matrix cross-check
    if (n % 4 == 0) {
      if (a.aut_group != "Z2xZ2" || a.a != 1 || a.b != 1 || a.c != 1 ||
          a.pin_cover != "Z2xZ2xZ2" || a.cliffordian)
        return false;
    } else {
      if (a.aut_group != "Q4/Z2" || a.a != -1 || a.b != -1 || a.c != -1 ||
          a.pin_cover != "Q4" || !a.cliffordian)
        return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// 8. Real even types p+q <= 6: transpose-sign conditions plus the case table.

static std::array<int, 3> case_table(const RealAut& r) {
  if (r.type == 0) {
    switch (r.p % 4) {
      case 0: return {+1, +1, +1};
      case 1: return {+1, +1, -1};
      case 2: return {+1, -1, -1};
      default: return {+1, -1, +1};
    }
  }
  if (r.type == 2) {
    if (r.p % 2 == 0)
      return r.p % 4 == 0 ? std::array<int, 3>{-1, -1, +1}
                          : std::array<int, 3>{-1, +1, -1};
    return r.p % 4 == 3 ? std::array<int, 3>{-1, -1, -1}
                        : std::array<int, 3>{-1, +1, +1};
  }
  // types 4 and 6: parity census of the canonical representation
  int delta = (r.k_skew % 2 == 0) ? r.l - r.t : r.h - r.g;
  int d4 = ((delta % 4) + 4) % 4;
  int b = (d4 == 0 || d4 == 1) ? +1 : -1;
  int a = r.type == 4 ? +1 : -1;
  int c = ((r.type == 4) == (r.k_skew % 2 == 0)) ? b : -b;
  return {a, b, c};
}

static bool c8_real_case_table() {
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; p + q <= 6; ++q) {
      int t = ((p - q) % 8 + 8) % 8;
      if (t % 2 != 0) continue;
      RealAut r = real_aut_type(p, q);
      auto want = case_table(r);
      if (r.a != want[0] || r.b != want[1] || r.c != want[2]) return false;
      int minus = (r.a < 0) + (r.b < 0) + (r.c < 0);
      if (r.aut_group != aut_label(minus) || r.pin_cover != cover_label(minus))
        return false;
      ComplexFormResult cf = complex_form_wec(p, q);
      if (!cf.checks.commut || !cf.checks.commut3 || !cf.checks.condt)
        return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// 9. Lorentz block operators: the printed fundamental matrices, bracket
// relations through dim 16, and the known two-generator deviation.

static bool c9_lorentz() {
  GnOps g = build_block_ops(1, 3);
  auto sr = [](int num, int den) { return CSurd(Surd(Rat(num, den))); };
  auto si = [](int num, int den) {
    return CSurd(Surd(0), Surd(Rat(num, den)));
  };
  auto m2 = [](CSurd a, CSurd b, CSurd c, CSurd d) {
    Matrix<CSurd> m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
  };
  CSurd z(0);
  if (g.a23 != m2(z, si(-1, 2), si(-1, 2), z)) return false;
  if (g.a13 != m2(z, sr(1, 2), sr(-1, 2), z)) return false;
  if (g.a12 != m2(si(1, 2), z, z, si(-1, 2))) return false;
  if (g.b1 != m2(z, sr(-1, 2), sr(-1, 2), z)) return false;
  if (g.b2 != m2(z, si(-1, 2), si(1, 2), z)) return false;
  if (g.b3 != m2(sr(-1, 2), z, z, sr(1, 2))) return false;

  for (auto [a, b] : gn_labels(16)) {
    GnOps ops = build_block_ops(a, b);
    verify_brackets(ops);     // throws on violation
    verify_hf_brackets(ops);  // throws on violation
  }

  // expected failure mode at two generators: boosts break the volume pattern
  return n2_volume_verdicts() == "aacaac";
}

// ---------------------------------------------------------------------------
// 10. Permutation audit: unique pattern -> family map with matching verdicts.

static bool c10_audit_families() {
  AuditResult r4 = symmetry_permutation_audit(4);
  if (!r4.t0_ok) return false;
  if (r4.pattern_family.at("b") != 5 || r4.pattern_family.at("ab") != 3)
    return false;

  AuditResult r6 = symmetry_permutation_audit(6);
  if (!r6.t0_ok) return false;
  if (r6.pattern_family.at("") != 1 || r6.pattern_family.at("c") != 3 ||
      r6.pattern_family.at("ca") != 5 || r6.pattern_family.at("cab") != 2)
    return false;

  for (const AuditResult* r : {&r4, &r6})
    for (auto& row : r->rows) {
      if (row.family < 1 || row.family > 8) return false;
      if (row.e_verdict != audit_families[row.family - 1].first ||
          row.c_verdict != audit_families[row.family - 1].second)
        return false;
      if (r->pattern_family.at(row.pattern) != row.family) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// 11. Quotient machinery: homomorphism property, central idempotents,
// transfer rules, and the pinned class.

static bool c11_quotients() {
  std::mt19937_64 rng(2024);
  int pairs = 0;
  std::vector<EpsilonHom> homs = {
      make_epsilon_complex(3, 3), make_epsilon_complex(5, 5),
      make_epsilon_real(2, 1), make_epsilon_real(3, 2)};
  for (auto& h : homs) {
    for (int it = 0; it < 250; ++it) {
      Mv x = random_mv(h.source, rng, h.source.cx);
      Mv y = random_mv(h.source, rng, h.source.cx);
      if (epsilon_map(h, x * y) != epsilon_map(h, x) * epsilon_map(h, y))
        return false;
      ++pairs;
    }
  }
  if (pairs < 1000) return false;

  // central idempotent identities for odd generator counts up to 9
  std::vector<Sig> odd = {complex_sig(1), complex_sig(3), complex_sig(5),
                          complex_sig(7), complex_sig(9), real_sig(2, 1),
                          real_sig(3, 2), real_sig(5, 0), real_sig(1, 4),
                          real_sig(0, 7), real_sig(9, 0)};
  for (auto& s : odd) {
    auto [lp, lm] = central_idempotents(s);
    if (lp * lp != lp || lm * lm != lm) return false;
    if (!(lp * lm).is_zero() || lp + lm != Mv::one(s)) return false;
    Mv x = random_mv(s, rng, s.cx);
    if (lp * x != x * lp) return false;
  }

  // transfer rules: the grade involution never survives; reversion survives
  // exactly when the target dimension is divisible by four
  for (int n : {3, 5, 7, 9}) {
    EpsilonHom h = make_epsilon_complex(n, n);
    for (auto& row : transfer_report(h)) {
      if (row.op == DiscreteOp::P && row.transfers) return false;
      if (row.op == DiscreteOp::T && row.transfers != ((n - 1) % 4 == 0))
        return false;
    }
  }
  for (auto& h : {make_epsilon_real(2, 1), make_epsilon_real(3, 2)}) {
    int tn = h.target.n();
    for (auto& row : transfer_report(h)) {
      if (row.op == DiscreteOp::P && row.transfers) return false;
      if (row.op == DiscreteOp::T && row.transfers != (tn % 4 == 0))
        return false;
    }
  }

  // pinned fixture: the Euclidean real form of the three-generator complex
  // algebra sits in class c with evidence {PT, C, CPT}
  QuotientClass qc = quotient_class(make_epsilon_complex(3, 3));
  return qc.cls == "c" &&
         qc.ops == std::vector<DiscreteOp>{DiscreteOp::PT, DiscreteOp::C,
                                           DiscreteOp::CPT};
}

// ---------------------------------------------------------------------------
// 12. Conjugation intertwiner Pi.

static bool c12_pseudoautomorphism() {
  // K = R types admit rational ideal representations: conjugation is the
  // identity there
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; p + q <= 6; ++q) {
      int t = ((p - q) % 8 + 8) % 8;
      if (t != 0 && t != 2) continue;
      if (!real_rep_is_real(p, q)) return false;
    }

  // brute force on the (1,3) tensor form
  PiResult r = build_pi(1, 3);
  if (r.pi_set != std::vector<int>{0, 2, 3}) return false;
  for (auto& g : r.gamma)
    if (r.pi * conj(g) != g * r.pi) return false;
  // |set| = 3 -> minus by the mod-4 rule, and the volume anticommutes since
  // a*b = 1*3 is odd
  if (r.pi_pidot != -1 || !r.w_anticommutes) return false;

  // parity rules across every even signature with p+q <= 6
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; p + q <= 6; ++q) {
      int n = p + q;
      if (n == 0 || n % 2 != 0) continue;
      PiResult x = build_pi(p, q);  // internally verifies the sign rule
      int a = 0;
      for (int s : x.conj_sign)
        if (s < 0) ++a;
      if (x.w_anticommutes != ((a * (n - a)) % 2 == 1)) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// 13. Field layer.

static Rat rnd_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  return Rat(num(rng), den(rng));
}

static bool c13_field_layer() {
  std::mt19937_64 rng(99);
  auto g = gamma_basis();
  Matrix<CRat> one = Matrix<CRat>::identity(4, CRat(1));

  for (int it = 0; it < 200; ++it) {
    DHSpinor s{rnd_rat(rng), rnd_rat(rng), rnd_rat(rng), rnd_rat(rng),
               rnd_rat(rng), rnd_rat(rng), rnd_rat(rng), rnd_rat(rng)};
    auto phi = phi_components(s);
    Matrix<CRat> P = ideal_projection(s);
    for (int r = 0; r < 4; ++r) {
      if (P.at(r, 0) != phi[r]) return false;
      for (int c = 1; c < 4; ++c)
        if (P.at(r, c) != CRat(0)) return false;
    }
  }

  for (int it = 0; it < 200; ++it) {
    std::array<Rat, 4> d{rnd_rat(rng), rnd_rat(rng), rnd_rat(rng),
                         rnd_rat(rng)};
    std::array<Rat, 4> A{rnd_rat(rng), rnd_rat(rng), rnd_rat(rng),
                         rnd_rat(rng)};
    EMField f = nabla_a(d, A);
    if (f.scalar != d[0] * A[0] + d[1] * A[1] + d[2] * A[2] + d[3] * A[3])
      return false;
    for (int i = 1; i <= 3; ++i)
      if (f.E[i - 1] != d[0] * A[i] + d[i] * A[0]) return false;
    if (f.H[0] != d[2] * A[3] - d[3] * A[2]) return false;
    if (f.H[1] != d[3] * A[1] - d[1] * A[3]) return false;
    if (f.H[2] != d[1] * A[2] - d[2] * A[1]) return false;
  }

  for (int it = 0; it < 20; ++it) {
    DHSpinor s{rnd_rat(rng), rnd_rat(rng), rnd_rat(rng), rnd_rat(rng),
               rnd_rat(rng), rnd_rat(rng), rnd_rat(rng), rnd_rat(rng)};
    HelicitySplit h = helicity_split(s);
    if (h.p_plus * h.p_plus != h.p_plus) return false;
    if (h.p_minus * h.p_minus != h.p_minus) return false;
    if (h.p_plus + h.p_minus != one) return false;
    if (!(h.p_plus * h.p_minus).is_zero()) return false;
    if (gamma5() * h.p_plus != h.p_plus) return false;
    if (gamma5() * h.p_minus != -h.p_minus) return false;
    if (h.plus + h.minus != dh_matrix(s) * g[2] * g[1]) return false;
  }

  for (int m = 1; m <= 8; ++m) {
    ComplexAut a = many_body_symmetry(m);
    if (a.n != 2 * m || a.cliffordian != (m % 2 == 1)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// 14. Graded class arithmetic and the period-8 shift.

static bool c14_periodicity() {
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; p + q <= 4; ++q)
      for (int p2 = 0; p2 <= 4; ++p2)
        for (int q2 = 0; p2 + q2 <= 4; ++q2) {
          AlgClass c = bw_compose(p, q, p2, q2);
          AlgClass d = algebra_class(p + p2, q + q2);
          if (c.name() != d.name()) return false;
        }
  for (int p = 0; p <= 6; ++p)
    for (int q = 0; p + q <= 6; ++q)
      if (!abs_shift_check(p, q)) return false;
  return true;
}

// ---------------------------------------------------------------------------

int main() {
  setvbuf(stdout, nullptr, _IONBF, 0);
  criterion(1, "classification table 0 <= p,q <= 7", c1_periodic_table);
  criterion(2, "volume squares, 66 signatures", c2_volume_squares);
  criterion(3, "vee groups and printed tables", c3_vee_groups);
  criterion(4, "idempotent factor counts and factor sets", c4_idempotents);
  criterion(5, "dirac-basis intertwiners and closure", c5_dirac_fixtures);
  criterion(6, "census of the (3,1)/(1,3) covers", c6_pin_census);
  criterion(7, "complex symmetry groups n=2,4,6,8", c7_complex_aut);
  criterion(8, "real even-type case table, p+q <= 6", c8_real_case_table);
  criterion(9, "lorentz operators and brackets", c9_lorentz);
  criterion(10, "volume/reversion/conjugation audit n=4,6", c10_audit_families);
  criterion(11, "projection homomorphism and transfers", c11_quotients);
  criterion(12, "conjugation intertwiner rules", c12_pseudoautomorphism);
  criterion(13, "field layer read-offs and parity", c13_field_layer);
  criterion(14, "graded composition and period-8 shift", c14_periodicity);
  if (g_failures) {
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 14 criteria passed\n");
  return 0;
}
