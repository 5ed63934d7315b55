#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cliffkit/field.hpp"

using namespace cliffkit;

static Rat rnd_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  return Rat(num(rng), den(rng));
}

TEST_CASE("gamma matrices") {
  auto g = gamma_basis();
  Matrix<CRat> one = Matrix<CRat>::identity(4, CRat(1));
  CHECK(g[0] * g[0] == one);
  for (int i = 1; i < 4; ++i) CHECK(g[i] * g[i] == -one);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) CHECK(anticommutes(g[i], g[j]));
  CHECK(gamma0123() * gamma0123() == -one);
  CHECK(gamma5() * gamma5() == one);
  CHECK(gamma5() == gamma0123().scaled(CRat(Rat(0), Rat(-1))));
}

TEST_CASE("matrix of an even element and its first column") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 20; ++it) {
    DHSpinor s{rnd_rat(rng), rnd_rat(rng), rnd_rat(rng), rnd_rat(rng),
               rnd_rat(rng), rnd_rat(rng), rnd_rat(rng), rnd_rat(rng)};
    auto phi = phi_components(s);
    Matrix<CRat> M = dh_matrix(s);
    // first column carries the four components
    for (int r = 0; r < 4; ++r) CHECK(M.at(r, 0) == phi[r]);
    // the projection keeps exactly that column
    Matrix<CRat> P = ideal_projection(s);
    for (int r = 0; r < 4; ++r) {
      CHECK(P.at(r, 0) == phi[r]);
      for (int c = 1; c < 4; ++c) CHECK(P.at(r, c) == CRat(0));
    }
  }
  // component dictionary on a simple element
  DHSpinor s{};
  s.a0 = Rat(1);
  s.a12 = Rat(1, 2);
  auto phi = phi_components(s);
  CHECK(phi[0] == CRat(Rat(1), Rat(-1, 2)));  // a0 - i a12
  CHECK(phi[1] == CRat(0));
  Matrix<CRat> M = dh_matrix(s);
  CHECK(M.at(0, 0) == CRat(Rat(1), Rat(-1, 2)));
  CHECK(M.at(1, 1) == CRat(Rat(1), Rat(1, 2)));
}

TEST_CASE("reversion flips bivectors and the volume") {
  DHSpinor s{Rat(1), Rat(2), Rat(3), Rat(4), Rat(5), Rat(6), Rat(7), Rat(8)};
  DHSpinor r = dh_reverse(s);
  CHECK(r.a0 == s.a0);
  CHECK(r.a01 == s.a01);
  CHECK(r.a02 == s.a02);
  CHECK(r.a03 == s.a03);
  CHECK(r.a12 == -s.a12);
  CHECK(r.a13 == -s.a13);
  CHECK(r.a23 == -s.a23);
  CHECK(r.a0123 == -s.a0123);
  DHSpinor rr = dh_reverse(r);
  CHECK(rr.a12 == s.a12);
}

TEST_CASE("helicity split recombines") {
  std::mt19937_64 rng(9);
  Matrix<CRat> one = Matrix<CRat>::identity(4, CRat(1));
  for (int it = 0; it < 10; ++it) {
    DHSpinor s{rnd_rat(rng), rnd_rat(rng), rnd_rat(rng), rnd_rat(rng),
               rnd_rat(rng), rnd_rat(rng), rnd_rat(rng), rnd_rat(rng)};
    HelicitySplit h = helicity_split(s);
    CHECK(h.p_plus + h.p_minus == one);
    CHECK(h.p_plus * h.p_plus == h.p_plus);
    CHECK(h.p_minus * h.p_minus == h.p_minus);
    CHECK(gamma5() * h.p_plus == h.p_plus);
    CHECK(gamma5() * h.p_minus == -h.p_minus);
    // plus + minus = phi g2 g1
    auto g = gamma_basis();
    CHECK(h.plus + h.minus == dh_matrix(s) * g[2] * g[1]);
  }
}

TEST_CASE("paravector derivative of a potential") {
  // pure time derivative of A3 lands in the third vector slot
  EMField f = nabla_a({Rat(1), 0, 0, 0}, {0, 0, 0, Rat(1)});
  CHECK(f.scalar == 0);
  CHECK(f.E == std::array<Rat, 3>{0, 0, Rat(1)});
  CHECK(f.H == std::array<Rat, 3>{0, 0, 0});
  // d1 of A1 is a pure gauge residue
  EMField g = nabla_a({0, Rat(1), 0, 0}, {0, Rat(1), 0, 0});
  CHECK(g.scalar == Rat(1));
  CHECK(g.E == std::array<Rat, 3>{0, 0, 0});
  // d1 of A2 contributes to H3 = (curl A)_3 and E1 = -d1 A0... only curl here
  EMField h = nabla_a({0, Rat(1), 0, 0}, {0, 0, Rat(1), 0});
  CHECK(h.H == std::array<Rat, 3>{0, 0, Rat(1)});
  CHECK(h.E == std::array<Rat, 3>{0, 0, 0});
  // oracle comparison on random data
  std::mt19937_64 rng(21);
  for (int it = 0; it < 50; ++it) {
    std::array<Rat, 4> d{rnd_rat(rng), rnd_rat(rng), rnd_rat(rng),
                         rnd_rat(rng)};
    std::array<Rat, 4> A{rnd_rat(rng), rnd_rat(rng), rnd_rat(rng),
                         rnd_rat(rng)};
    EMField e = nabla_a(d, A);
    CHECK(e.scalar == d[0] * A[0] + d[1] * A[1] + d[2] * A[2] + d[3] * A[3]);
    for (int i = 1; i <= 3; ++i)
      CHECK(e.E[i - 1] == d[0] * A[i] + d[i] * A[0]);
    CHECK(e.H[0] == d[2] * A[3] - d[3] * A[2]);
    CHECK(e.H[1] == d[3] * A[1] - d[1] * A[3]);
    CHECK(e.H[2] == d[1] * A[2] - d[2] * A[1]);
  }
}

TEST_CASE("field element embeds by grade") {
  EMField f;
  f.scalar = Rat(1, 2);
  f.E = {Rat(1), Rat(2), Rat(3)};
  f.H = {Rat(4), Rat(5), Rat(6)};
  Mv x = em_element(f);
  Sig s = real_sig(3, 0);
  CHECK(x.coeff(0) == CRat(Rat(1, 2)));
  CHECK(x.coeff(0b001) == CRat(Rat(1)));
  CHECK(x.coeff(0b010) == CRat(Rat(2)));
  CHECK(x.coeff(0b100) == CRat(Rat(3)));
  CHECK(x.coeff(0b110) == CRat(Rat(4)));   // H1 e23
  CHECK(x.coeff(0b101) == CRat(Rat(-5)));  // H2 e31 = -e13
  CHECK(x.coeff(0b011) == CRat(Rat(6)));   // H3 e12
  CHECK(x.sig == s);
}

TEST_CASE("maxwell residuals vanish only for closed data") {
  std::array<std::array<Rat, 3>, 4> dE{}, dH{};
  // static uniform fields: all residuals zero
  MaxwellResiduals r = nabla_f(dE, dH);
  CHECK(r.div_e == 0);
  CHECK(r.div_h == 0);
  CHECK(r.ampere == std::array<Rat, 3>{0, 0, 0});
  CHECK(r.faraday == std::array<Rat, 3>{0, 0, 0});
  // d0 E1 = 1 shows up in ampere's first slot with a minus sign
  dE[0][0] = Rat(1);
  r = nabla_f(dE, dH);
  CHECK(r.ampere[0] == Rat(-1));
  CHECK(r.faraday == std::array<Rat, 3>{0, 0, 0});
  // d1 H2 = 1 contributes +1 to (curl H)_3
  dE[0][0] = 0;
  dH[1][1] = Rat(1);
  r = nabla_f(dE, dH);
  CHECK(r.ampere[2] == Rat(1));
  CHECK(r.div_h == 0);
}

TEST_CASE("bivector field spinor") {
  FieldBivector f = field_bivector({Rat(1), 0, 0}, {0, Rat(1), 0});
  CHECK(f.F[0] == CRat(Rat(1)));
  CHECK(f.F[1] == CRat(Rat(0), Rat(1)));
  CHECK(f.F[2] == CRat(0));
  // only the bottom two slots of the first column survive
  CHECK(f.psi.at(0, 0) == CRat(0));
  CHECK(f.psi.at(1, 0) == CRat(0));
  CHECK(f.psi.at(2, 0) == f.F[2]);
  CHECK(f.psi.at(3, 0) == f.F[0] + f.F[1] * CRat(Rat(0), Rat(1)));
  for (int r = 0; r < 4; ++r)
    for (int c = 1; c < 4; ++c) CHECK(f.psi.at(r, c) == CRat(0));
}
