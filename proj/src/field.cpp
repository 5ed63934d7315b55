#include "cliffkit/field.hpp"

namespace cliffkit {

static Matrix<CRat> pauli(int i) {
  Matrix<CRat> m(2, 2);
  switch (i) {
    case 1:
      m.at(0, 1) = CRat(1);
      m.at(1, 0) = CRat(1);
      break;
    case 2:
      m.at(0, 1) = -CRat::unit_i();
      m.at(1, 0) = CRat::unit_i();
      break;
    default:
      m.at(0, 0) = CRat(1);
      m.at(1, 1) = -CRat(1);
      break;
  }
  return m;
}

std::array<Matrix<CRat>, 4> gamma_basis() {
  std::array<Matrix<CRat>, 4> g;
  g[0] = Matrix<CRat>(4, 4);
  for (int i = 0; i < 4; ++i) g[0].at(i, i) = CRat(i < 2 ? 1 : -1);
  for (int k = 1; k <= 3; ++k) {
    Matrix<CRat> s = pauli(k);
    Matrix<CRat> m(4, 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        m.at(i, j + 2) = s.at(i, j);
        m.at(i + 2, j) = -s.at(i, j);
      }
    g[k] = m;
  }
  Matrix<CRat> I = Matrix<CRat>::identity(4, CRat(1));
  check(g[0] * g[0] == I, "g0 must square to +I");
  for (int k = 1; k <= 3; ++k) {
    check(g[k] * g[k] == -I, "g_i must square to -I");
    for (int j = 0; j < k; ++j)
      check(anticommutes(g[k], g[j]), "gamma matrices must anticommute");
  }
  return g;
}

Matrix<CRat> gamma0123() {
  auto g = gamma_basis();
  return g[0] * g[1] * g[2] * g[3];
}

Matrix<CRat> gamma5() { return gamma0123().scaled(-CRat::unit_i()); }

std::array<CRat, 4> phi_components(const DHSpinor& s) {
  CRat i = CRat::unit_i();
  return {CRat(s.a0) - i * CRat(s.a12), CRat(-s.a13) - i * CRat(s.a23),
          CRat(s.a03) - i * CRat(s.a0123), CRat(s.a01) + i * CRat(s.a02)};
}

// The fixed right-multiplied projector (1+g0)/2 * (1+i g12)/2.  The two
// factors commute here; both orders are formed and compared.
static Matrix<CRat> ideal_projector() {
  auto g = gamma_basis();
  Matrix<CRat> I = Matrix<CRat>::identity(4, CRat(1));
  Matrix<CRat> half = (I + g[0]).scaled(CRat(Rat(1, 2)));
  Matrix<CRat> rot =
      (I + (g[1] * g[2]).scaled(CRat::unit_i())).scaled(CRat(Rat(1, 2)));
  Matrix<CRat> P = half * rot;
  check(P == rot * half, "ideal projector factors must commute");
  check(P * P == P, "ideal projector must be idempotent");
  return P;
}

Matrix<CRat> dh_matrix(const DHSpinor& s) {
  auto g = gamma_basis();
  auto term = [](const Matrix<CRat>& m, const Rat& c) {
    return m.scaled(CRat(c));
  };
  Matrix<CRat> M = Matrix<CRat>::identity(4, CRat(s.a0));
  M = M + term(g[0] * g[1], s.a01) + term(g[0] * g[2], s.a02) +
      term(g[0] * g[3], s.a03) + term(g[1] * g[2], s.a12) +
      term(g[1] * g[3], s.a13) + term(g[2] * g[3], s.a23) +
      term(g[0] * g[1] * g[2] * g[3], s.a0123);

  auto f = phi_components(s);
  auto cj = [](const CRat& c) { return c.conj(); };
  Matrix<CRat> pat(4, 4);
  const CRat &f1 = f[0], &f2 = f[1], &f3 = f[2], &f4 = f[3];
  CRat row[4][4] = {{f1, -cj(f2), f3, cj(f4)},
                    {f2, cj(f1), f4, -cj(f3)},
                    {f3, cj(f4), f1, -cj(f2)},
                    {f4, -cj(f3), f2, cj(f1)}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) pat.at(i, j) = row[i][j];
  check(M == pat, "gamma expansion must match the biquaternion pattern");
  return M;
}

Matrix<CRat> ideal_projection(const DHSpinor& s) {
  Matrix<CRat> M = dh_matrix(s) * ideal_projector();
  auto f = phi_components(s);
  for (int i = 0; i < 4; ++i) {
    check(M.at(i, 0) == f[i], "ideal column must carry phi1..phi4");
    for (int j = 1; j < 4; ++j)
      check(M.at(i, j).is_zero(), "ideal projection must be single-column");
  }
  return M;
}

DHSpinor dh_reverse(const DHSpinor& s) {
  DHSpinor r = s;
  r.a12 = -s.a12;
  r.a13 = -s.a13;
  r.a23 = -s.a23;
  r.a0123 = -s.a0123;
  return r;
}

HelicitySplit helicity_split(const DHSpinor& s) {
  auto g = gamma_basis();
  Matrix<CRat> I = Matrix<CRat>::identity(4, CRat(1));
  Matrix<CRat> g5 = gamma5();
  check(g5 * g5 == I, "g5 must square to +I");
  HelicitySplit out;
  out.p_plus = (I + g5).scaled(CRat(Rat(1, 2)));
  out.p_minus = (I - g5).scaled(CRat(Rat(1, 2)));
  check(out.p_plus * out.p_plus == out.p_plus &&
            out.p_minus * out.p_minus == out.p_minus &&
            (out.p_plus * out.p_minus).is_zero() &&
            out.p_plus + out.p_minus == I,
        "chiral projectors must resolve the identity");
  Matrix<CRat> base = dh_matrix(s) * g[2] * g[1];
  out.plus = out.p_plus * base;
  out.minus = out.p_minus * base;
  // Half-rank structure: rows 3..4 are -(rows 1..2) on the plus side and
  // +(rows 1..2) on the minus side.
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) {
      check(out.plus.at(i + 2, j) == -out.plus.at(i, j),
            "plus block must repeat with a sign flip");
      check(out.minus.at(i + 2, j) == out.minus.at(i, j),
            "minus block must repeat");
    }
  return out;
}

EMField nabla_a(const std::array<Rat, 4>& d, const std::array<Rat, 4>& A) {
  Sig s = real_sig(3, 0);
  auto para = [&](const std::array<Rat, 4>& v) {
    Mv m = Mv::zero_of(s);
    m.add(0, CRat(v[0]));
    for (int i = 1; i <= 3; ++i) m.add(1u << (i - 1), CRat(v[i]));
    return m;
  };
  Mv prod = para(d) * para(A);
  EMField f;
  f.scalar = prod.coeff(0).re;
  f.E = {prod.coeff(1).re, prod.coeff(2).re, prod.coeff(4).re};
  // e23, e31 = -e13, e12
  f.H = {prod.coeff(6).re, -prod.coeff(5).re, prod.coeff(3).re};
  check(prod.is_real(), "paravector product must stay real");
  check(prod == em_element(f), "graded read-off must rebuild the product");
  return f;
}

Mv em_element(const EMField& f) {
  Sig s = real_sig(3, 0);
  Mv m = Mv::zero_of(s);
  m.add(0, CRat(f.scalar));
  Mv w = Mv::volume(s);
  for (int i = 1; i <= 3; ++i) {
    Mv e = Mv::generator(s, i);
    m += e.scaled(CRat(f.E[i - 1])) + (w * e).scaled(CRat(f.H[i - 1]));
  }
  return m;
}

MaxwellResiduals nabla_f(const std::array<std::array<Rat, 3>, 4>& dE,
                         const std::array<std::array<Rat, 3>, 4>& dH) {
  Sig s = real_sig(3, 0);
  Mv w = Mv::volume(s);
  Mv prod = Mv::zero_of(s);
  for (int mu = 0; mu < 4; ++mu) {
    Mv dF = Mv::zero_of(s);
    for (int i = 1; i <= 3; ++i) {
      Mv e = Mv::generator(s, i);
      dF += e.scaled(CRat(dE[mu][i - 1])) + (w * e).scaled(CRat(dH[mu][i - 1]));
    }
    Mv b = mu == 0 ? Mv::one(s) : Mv::generator(s, mu);
    prod += b * dF;
  }
  MaxwellResiduals r;
  r.div_e = prod.coeff(0).re;
  // Vector part carries -(curl H - d0 E), the dual-bivector part
  // curl E + d0 H, the pseudoscalar part div H.
  r.ampere = {-prod.coeff(1).re, -prod.coeff(2).re, -prod.coeff(4).re};
  r.faraday = {prod.coeff(6).re, -prod.coeff(5).re, prod.coeff(3).re};
  r.div_h = prod.coeff(7).re;
  return r;
}

FieldBivector field_bivector(const std::array<Rat, 3>& E,
                             const std::array<Rat, 3>& H) {
  auto g = gamma_basis();
  FieldBivector out;
  CRat i = CRat::unit_i();
  Matrix<CRat> phi(4, 4);
  for (int k = 0; k < 3; ++k) {
    out.F[k] = CRat(E[k]) + i * CRat(H[k]);
    phi = phi + (g[0] * g[k + 1]).scaled(out.F[k]);
  }
  const CRat &F1 = out.F[0], &F2 = out.F[1], &F3 = out.F[2];
  Matrix<CRat> pat(4, 4);
  pat.at(0, 2) = F3;
  pat.at(0, 3) = F1 - i * F2;
  pat.at(1, 2) = F1 + i * F2;
  pat.at(1, 3) = -F3;
  pat.at(2, 0) = F3;
  pat.at(2, 1) = F1 - i * F2;
  pat.at(3, 0) = F1 + i * F2;
  pat.at(3, 1) = -F3;
  check(phi == pat, "field element must match the anti-diagonal pattern");
  out.phi = phi;
  out.psi = phi * ideal_projector();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (c > 0 || r < 2)
        check(out.psi.at(r, c).is_zero(), "projected field spinor shape");
  check(out.psi.at(2, 0) == F3 && out.psi.at(3, 0) == F1 + i * F2,
        "projected field spinor entries");
  return out;
}

}  // namespace cliffkit
