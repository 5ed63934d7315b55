#include "cliffkit/lorentz.hpp"

#include <algorithm>

#include "cliffkit/represent.hpp"
#include "cliffkit/wec.hpp"

namespace cliffkit {

// Interblock coupling signs. The bracket system on multi-block labels fixes
// all six signs up to one global flip (a change of basis negating alternate
// blocks); this assignment is the solution keeping the B3 down-coupling and
// the B1/B2 up-couplings positive.
static constexpr int kD1 = -1, kU1 = 1, kD2 = -1, kU2 = 1, kD3 = 1, kU3 = -1;

static CSurd srat(const Rat& r) { return CSurd(Surd(r), Surd(0)); }
static CSurd simag(const Rat& r) { return CSurd(Surd(0), Surd(r)); }
static CSurd ssqrt(const Rat& r) { return CSurd(Surd::sqrt_of(r), Surd(0)); }

GnOps build_block_ops(int twol0, int twol1) {
  check(twol0 >= 0 && twol1 > twol0 && (twol1 - twol0) % 2 == 0,
        "label needs l1 = l0 + positive integer");
  GnOps g;
  g.twol0 = twol0;
  g.twol1 = twol1;
  for (int tl = twol0; tl < twol1; tl += 2) {
    g.blocks.push_back(tl);
    g.dim += tl + 1;
  }
  check(4 * g.dim == twol1 * twol1 - twol0 * twol0,
        "block dimensions do not sum to l1^2 - l0^2");

  auto idx = [&](int tl, int tm) {
    int off = 0;
    for (int bl : g.blocks) {
      if (bl == tl) return off + (tm + tl) / 2;
      off += bl + 1;
    }
    throw internal_error("block index out of range");
  };
  auto valid = [&](int tl, int tm) {
    return tl >= twol0 && tl < twol1 && tm >= -tl && tm <= tl;
  };

  // a_l = i l0 l1 / (l(l+1));  c_l = (i/l) sqrt((l^2-l0^2)(l^2-l1^2)/(4l^2-1)),
  // real and negative for l0 < l < l1 by the principal branch.
  auto a_l = [&](int tl) {
    return simag(Rat(twol0 * twol1, tl * (tl + 2)));
  };
  auto c_l = [&](int tl) {
    Rat r = Rat((tl * tl - twol0 * twol0) * (twol1 * twol1 - tl * tl),
                16 * (tl * tl - 1));
    return simag(Rat(2, tl)) * (r >= 0 ? ssqrt(r) : simag(1) * ssqrt(-r));
  };

  Matrix<CSurd> zero(g.dim, g.dim);
  g.a23 = g.a13 = g.a12 = g.b1 = g.b2 = g.b3 = zero;

  CSurd ih = simag(Rat(1, 2));  // i/2
  CSurd h = srat(Rat(1, 2));

  for (int tl : g.blocks) {
    Rat l(tl, 2);
    for (int tm = -tl; tm <= tl; tm += 2) {
      Rat m(tm, 2);
      int col = idx(tl, tm);
      Rat up = (l + m + 1) * (l - m);    // raising radicand
      Rat dn = (l + m) * (l - m + 1);    // lowering radicand

      if (valid(tl, tm + 2)) {
        g.a23.at(idx(tl, tm + 2), col) += -ih * ssqrt(up);
        g.a13.at(idx(tl, tm + 2), col) += -h * ssqrt(up);
      }
      if (valid(tl, tm - 2)) {
        g.a23.at(idx(tl, tm - 2), col) += -ih * ssqrt(dn);
        g.a13.at(idx(tl, tm - 2), col) += h * ssqrt(dn);
      }
      g.a12.at(col, col) += simag(-m);

      // Boosts: couplings inside the block carry a_l, the l -> l-1 and
      // l -> l+1 couplings carry c_l and c_{l+1}.
      if (tm != 0 || tl != 0) {  // a_0 never enters: the l = 0 block is 1-dim
        if (valid(tl, tm + 2)) {
          CSurd al = a_l(tl);
          g.b1.at(idx(tl, tm + 2), col) += ih * al * ssqrt((l - m) * (l + m + 1));
          g.b2.at(idx(tl, tm + 2), col) += h * al * ssqrt((l - m) * (l + m + 1));
        }
        if (valid(tl, tm - 2)) {
          CSurd al = a_l(tl);
          g.b1.at(idx(tl, tm - 2), col) += ih * al * ssqrt((l + m) * (l - m + 1));
          g.b2.at(idx(tl, tm - 2), col) += -h * al * ssqrt((l + m) * (l - m + 1));
        }
        g.b3.at(col, col) += simag(-1) * a_l(tl) * srat(m);
      }
      if (valid(tl - 2, tm + 2)) {
        CSurd c1 = srat(kD1) * c_l(tl), c2 = srat(kD2) * c_l(tl);
        g.b1.at(idx(tl - 2, tm + 2), col) += -ih * c1 * ssqrt((l - m) * (l - m - 1));
        g.b2.at(idx(tl - 2, tm + 2), col) += -h * c2 * ssqrt((l - m) * (l - m - 1));
      }
      if (valid(tl - 2, tm - 2)) {
        CSurd c1 = srat(kD1) * c_l(tl), c2 = srat(kD2) * c_l(tl);
        g.b1.at(idx(tl - 2, tm - 2), col) += ih * c1 * ssqrt((l + m) * (l + m - 1));
        g.b2.at(idx(tl - 2, tm - 2), col) += -h * c2 * ssqrt((l + m) * (l + m - 1));
      }
      if (valid(tl - 2, tm)) {
        g.b3.at(idx(tl - 2, tm), col) +=
            simag(-kD3) * c_l(tl) * ssqrt(l * l - m * m);
      }
      if (valid(tl + 2, tm + 2)) {
        CSurd c1 = srat(kU1) * c_l(tl + 2), c2 = srat(kU2) * c_l(tl + 2);
        g.b1.at(idx(tl + 2, tm + 2), col) += -ih * c1 * ssqrt((l + m + 1) * (l + m + 2));
        g.b2.at(idx(tl + 2, tm + 2), col) += -h * c2 * ssqrt((l + m + 1) * (l + m + 2));
      }
      if (valid(tl + 2, tm - 2)) {
        CSurd c1 = srat(kU1) * c_l(tl + 2), c2 = srat(kU2) * c_l(tl + 2);
        g.b1.at(idx(tl + 2, tm - 2), col) += ih * c1 * ssqrt((l - m + 1) * (l - m + 2));
        g.b2.at(idx(tl + 2, tm - 2), col) += -h * c2 * ssqrt((l - m + 1) * (l - m + 2));
      }
      if (valid(tl + 2, tm)) {
        g.b3.at(idx(tl + 2, tm), col) +=
            simag(kU3) * c_l(tl + 2) * ssqrt((l + 1) * (l + 1) - m * m);
      }
    }
  }
  return g;
}

std::vector<std::pair<int, int>> gn_labels(int max_dim) {
  std::vector<std::pair<int, int>> out;
  for (int twol0 = 0; twol0 + 1 <= max_dim; ++twol0)
    for (int twol1 = twol0 + 2;; twol1 += 2) {
      int dim = (twol1 * twol1 - twol0 * twol0) / 4;
      if (dim > max_dim) break;
      out.emplace_back(twol0, twol1);
    }
  return out;
}

static Matrix<CSurd> comm(const Matrix<CSurd>& x, const Matrix<CSurd>& y) {
  return x * y - y * x;
}

static void req(bool ok, const std::string& what) {
  check(ok, "bracket failed: " + what);
}

void verify_brackets(const GnOps& g) {
  req(comm(g.a23, g.a13) == g.a12, "[A23,A13]=A12");
  req(comm(g.a13, g.a12) == g.a23, "[A13,A12]=A23");
  req(comm(g.a12, g.a23) == g.a13, "[A12,A23]=A13");
  req(comm(g.b1, g.b2) == -g.a12, "[B1,B2]=-A12");
  req(comm(g.b2, g.b3) == g.a23, "[B2,B3]=A23");
  req(comm(g.b3, g.b1) == g.a13, "[B3,B1]=A13");
  req(comm(g.a23, g.b1).is_zero(), "[A23,B1]=0");
  req(comm(g.a13, g.b2).is_zero(), "[A13,B2]=0");
  req(comm(g.a12, g.b3).is_zero(), "[A12,B3]=0");
  req(comm(g.a23, g.b2) == -g.b3, "[A23,B2]=-B3");
  req(comm(g.a23, g.b3) == g.b2, "[A23,B3]=B2");
  req(comm(g.a13, g.b3) == -g.b1, "[A13,B3]=-B1");
  req(comm(g.a13, g.b1) == g.b3, "[A13,B1]=B3");
  req(comm(g.a12, g.b1) == g.b2, "[A12,B1]=B2");
  req(comm(g.a12, g.b2) == -g.b1, "[A12,B2]=-B1");
}

void verify_hf_brackets(const GnOps& g) {
  CSurd i = CSurd::unit_i();
  CSurd two = srat(Rat(2));
  Matrix<CSurd> hp = g.a23.scaled(i) - g.a13;
  Matrix<CSurd> hm = g.a23.scaled(i) + g.a13;
  Matrix<CSurd> h3 = g.a12.scaled(i);
  Matrix<CSurd> fp = g.b1.scaled(i) - g.b2;
  Matrix<CSurd> fm = g.b1.scaled(i) + g.b2;
  Matrix<CSurd> f3 = g.b3.scaled(i);
  req(comm(hp, h3) == -hp, "[H+,H3]=-H+");
  req(comm(hm, h3) == hm, "[H-,H3]=H-");
  req(comm(hp, hm) == h3.scaled(two), "[H+,H-]=2H3");
  req(comm(hp, fp).is_zero(), "[H+,F+]=0");
  req(comm(hm, fm).is_zero(), "[H-,F-]=0");
  req(comm(h3, f3).is_zero(), "[H3,F3]=0");
  req(comm(fp, f3) == -hp, "[F+,F3]=-H+");
  req(comm(fm, f3) == hm, "[F-,F3]=H-");
  req(comm(fp, fm) == -h3.scaled(two), "[F+,F-]=-2H3");
  req(comm(hp, f3) == fp, "[H+,F3]=F+");
  req(comm(hm, f3) == -fm, "[H-,F3]=-F-");
  req(comm(hm, fp) == f3.scaled(two), "[H-,F+]=2F3");
  req(comm(hp, fm) == -f3.scaled(two), "[H+,F-]=-2F3");
  req(comm(fp, h3) == -fp, "[F+,H3]=-F+");
  req(comm(fm, h3) == fm, "[F-,H3]=F-");
}

// ---------------------------------------------------------------------------

const std::pair<const char*, const char*> audit_families[8] = {
    {"cccaaa", "cccccc"}, {"cccccc", "cccaaa"}, {"caacaa", "caaacc"},
    {"caaacc", "caacaa"}, {"aaccca", "aacaac"}, {"acacac", "acaaca"},
    {"acaaca", "acacac"}, {"aacaac", "aaccca"},
};

static char verdict_of(const Matrix<CRat>& op, const Matrix<CRat>& against) {
  if (commutes(op, against)) return 'c';
  if (anticommutes(op, against)) return 'a';
  throw internal_error("operator neither commutes nor anticommutes");
}

AuditResult symmetry_permutation_audit(int n) {
  check(n >= 4 && n % 2 == 0, "the audit needs an even count of at least 4");
  AuditResult out;
  out.n = n;
  out.m = n / 2;

  auto gens = tensor_pauli_gens(n);
  Matrix<CRat> unit = Matrix<CRat>::identity(gens[0].nr, CRat(1));
  auto w = build_wec(gens, unit);
  for (int j : w.e_set) out.e_set.push_back(j + 1);
  // The symmetric generators are the first m, the skew ones the last m;
  // E is the skew product when m is even, the symmetric one otherwise.
  {
    std::vector<int> expect;
    if (out.m % 2 == 0)
      for (int j = out.m + 1; j <= n; ++j) expect.push_back(j);
    else
      for (int j = 1; j <= out.m; ++j) expect.push_back(j);
    check(out.e_set == expect, "E index set off the m-parity rule");
  }

  int s = (int)out.e_set.size();
  auto kappa = [&](int j) {  // commutation sign of E against E_j
    bool in = std::find(out.e_set.begin(), out.e_set.end(), j) != out.e_set.end();
    return (in ? (s - 1) : s) % 2 == 0 ? 1 : -1;
  };

  out.t0_ok = true;
  for (int c = 1; c <= n; ++c)
    for (int a = c + 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        AuditTriple row;
        row.c = c;
        row.a = a;
        row.b = b;
        // Index sets of (A23, A13, A12, B1, B2, B3).
        const std::vector<std::vector<int>> ops = {{a, b}, {c, b}, {c, a},
                                                   {c},    {a},    {b}};
        const char* names = "cab";
        int idx_of[3] = {c, a, b};
        for (int k = 0; k < 3; ++k)
          if (std::find(out.e_set.begin(), out.e_set.end(), idx_of[k]) !=
              out.e_set.end())
            row.pattern += names[k];

        for (const auto& op : ops) {
          Matrix<CRat> M = unit;
          int kap_e = 1;
          for (int j : op) {
            M = M * gens[j - 1];
            kap_e *= kappa(j);
          }
          // C = E W and the volume element anticommutes with every
          // generator (n even), so C flips the verdict of odd products.
          int kap_c = op.size() % 2 == 1 ? -kap_e : kap_e;
          char ve = verdict_of(M, w.E);
          char vc = verdict_of(M, w.C);
          check(ve == (kap_e > 0 ? 'c' : 'a'), "E verdict off the parity rule");
          check(vc == (kap_c > 0 ? 'c' : 'a'), "C verdict off the parity rule");
          row.e_verdict += ve;
          row.c_verdict += vc;
          char vw = verdict_of(M, w.W);
          if (vw != (op.size() % 2 == 0 ? 'c' : 'a')) out.t0_ok = false;
        }

        row.family = 0;
        for (int f = 0; f < 8; ++f)
          if (row.e_verdict == audit_families[f].first &&
              row.c_verdict == audit_families[f].second)
            row.family = f + 1;
        check(row.family != 0, "verdict pair is not one of the eight families");

        auto it = out.pattern_family.find(row.pattern);
        if (it == out.pattern_family.end())
          out.pattern_family[row.pattern] = row.family;
        else
          check(it->second == row.family,
                "one membership pattern produced two families");
        out.rows.push_back(row);
      }
  return out;
}

static Matrix<CSurd> widen(const Matrix<CRat>& M) {
  Matrix<CSurd> out(M.nr, M.nc);
  for (size_t k = 0; k < M.a.size(); ++k) out.a[k] = to_csurd(M.a[k]);
  return out;
}

std::string n2_volume_verdicts() {
  GnOps g = build_block_ops(1, 3);
  auto gens = tensor_pauli_gens(2);
  Matrix<CSurd> W = widen(gens[0]) * widen(gens[1]);
  std::string out;
  for (const auto* op : {&g.a23, &g.a13, &g.a12, &g.b1, &g.b2, &g.b3}) {
    if (commutes(*op, W))
      out += 'c';
    else if (anticommutes(*op, W))
      out += 'a';
    else
      throw internal_error("operator neither commutes nor anticommutes");
  }
  return out;
}

}  // namespace cliffkit
