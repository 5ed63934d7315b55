#include "cliffkit/represent.hpp"

#include <algorithm>
#include <sstream>

namespace cliffkit {

static std::vector<uint32_t> blades_by_grade(int n) {
  std::vector<uint32_t> blades;
  for (uint32_t m = 0; m < (1u << n); ++m) blades.push_back(m);
  std::sort(blades.begin(), blades.end(), [](uint32_t a, uint32_t b) {
    if (grade(a) != grade(b)) return grade(a) < grade(b);
    return a < b;
  });
  return blades;
}

// Stack a multivector into a coefficient column (real and imaginary parts
// are kept as one Gaussian-rational entry per blade).
static std::vector<CRat> column_of(const Sig& s, const Mv& x) {
  std::vector<CRat> col(1u << s.n(), CRat(0));
  for (auto& [mask, c] : x.t) col[mask] = c;
  return col;
}

static int span_rank(const Sig& s, const std::vector<Mv>& xs) {
  if (xs.empty()) return 0;
  Matrix<CRat> M(1 << s.n(), static_cast<int>(xs.size()));
  for (size_t j = 0; j < xs.size(); ++j) {
    auto col = column_of(s, xs[j]);
    for (int i = 0; i < M.nr; ++i) M.at(i, static_cast<int>(j)) = col[i];
  }
  return rank_of(M);
}

KField k_field(const Sig& s, const Mv& f) {
  KField K;
  K.basis.push_back(f);
  long expected = 0;
  {
    AlgClass c = algebra_class(s.p, s.q);
    expected = c.ring == Ring::R ? 1 : c.ring == Ring::C ? 2 : 4;
    K.ring = c.ring;
  }
  for (uint32_t g : blades_by_grade(s.n())) {
    if (static_cast<long>(K.basis.size()) == expected) break;
    if (g == 0) continue;
    Mv y = f * Mv::blade(s, g) * f;
    if (y.is_zero()) continue;
    auto trial = K.basis;
    trial.push_back(y);
    if (span_rank(s, trial) == static_cast<int>(trial.size()))
      K.basis = std::move(trial);
  }
  check(static_cast<long>(K.basis.size()) == expected,
        "division ring dimension mismatch");
  return K;
}

std::vector<Mv> ideal_k_basis(const Sig& s, const Mv& f, const KField& K) {
  long dimK = static_cast<long>(K.basis.size());
  long d = algebra_class(s.p, s.q).dim;
  std::vector<Mv> basis;       // s_1..s_d
  std::vector<Mv> r_span;      // all s_t * b_u accumulated
  basis.push_back(f);
  for (auto& b : K.basis) r_span.push_back(f * b);
  int rank = span_rank(s, r_span);
  check(rank == dimK, "idempotent does not start a free module");
  for (uint32_t g : blades_by_grade(s.n())) {
    if (static_cast<long>(basis.size()) == d) break;
    if (g == 0) continue;
    Mv cand = Mv::blade(s, g) * f;
    if (cand.is_zero()) continue;
    auto trial = r_span;
    for (auto& b : K.basis) trial.push_back(cand * b);
    int r2 = span_rank(s, trial);
    if (r2 == rank) continue;
    check(r2 == rank + dimK, "partial K-dependence in ideal basis");
    basis.push_back(cand);
    r_span = std::move(trial);
    rank = r2;
  }
  check(static_cast<long>(basis.size()) == d, "ideal basis incomplete");
  return basis;
}

// Decompose x (an element of the ideal) over the R-basis {s_t b_u}.
static std::vector<CRat> ideal_coords(const Sig& s, const Matrix<CRat>& M,
                                      const Mv& x) {
  auto b = column_of(s, x);
  auto sol = solve(M, b);
  check(sol.has_value(), "element outside the ideal span");
  return *sol;
}

SpinorRep spinor_k_repr(int p, int q, const IdempotentInfo& idem) {
  SpinorRep rep;
  rep.sig = real_sig(p, q);
  rep.idem = idem;
  check(idem.k == rh_factor_count(p, q), "idempotent is not primitive");
  rep.K = k_field(rep.sig, idem.f);
  rep.ideal_basis = ideal_k_basis(rep.sig, idem.f, rep.K);

  int d = static_cast<int>(rep.ideal_basis.size());
  int dimK = static_cast<int>(rep.K.basis.size());
  rep.unit = Matrix<Mv>(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) rep.unit.at(i, j) = Mv::zero_of(rep.sig);
    rep.unit.at(i, i) = idem.f;
  }

  for (int i = 1; i <= rep.sig.n(); ++i)
    rep.gamma.push_back(rep_of(rep, Mv::generator(rep.sig, i)));

  // Defining relations must hold entrywise.
  for (int i = 0; i < rep.sig.n(); ++i) {
    Matrix<Mv> sq = rep.gamma[i] * rep.gamma[i];
    Matrix<Mv> want = rep.unit;
    if (i >= rep.sig.p) want = -want;
    check(sq == want, "generator square in representation");
    for (int j = i + 1; j < rep.sig.n(); ++j)
      check(anticommutes(rep.gamma[i], rep.gamma[j]),
            "generators must anticommute in representation");
  }
  (void)dimK;
  return rep;
}

Matrix<Mv> rep_of(const SpinorRep& rep, const Mv& x) {
  const Sig& s = rep.sig;
  int d = static_cast<int>(rep.ideal_basis.size());
  int dimK = static_cast<int>(rep.K.basis.size());
  // Assemble the R-basis matrix once per call.
  Matrix<CRat> M(1 << s.n(), d * dimK);
  for (int t = 0; t < d; ++t)
    for (int u = 0; u < dimK; ++u) {
      auto col = column_of(s, rep.ideal_basis[t] * rep.K.basis[u]);
      for (int r = 0; r < M.nr; ++r) M.at(r, t * dimK + u) = col[r];
    }
  Matrix<Mv> out(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) out.at(i, j) = Mv::zero_of(s);
  for (int j = 0; j < d; ++j) {
    Mv img = x * rep.ideal_basis[j];
    auto coords = ideal_coords(s, M, img);
    for (int t = 0; t < d; ++t) {
      Mv entry = Mv::zero_of(s);
      for (int u = 0; u < dimK; ++u) {
        CRat c = coords[t * dimK + u];
        if (!c.is_zero()) entry += rep.K.basis[u].scaled(c);
      }
      out.at(t, j) = entry;
    }
  }
  return out;
}

std::vector<Rat> k_coords(const SpinorRep& rep, const Mv& entry) {
  const Sig& s = rep.sig;
  int dimK = static_cast<int>(rep.K.basis.size());
  Matrix<CRat> M(1 << s.n(), dimK);
  for (int u = 0; u < dimK; ++u) {
    auto col = column_of(s, rep.K.basis[u]);
    for (int r = 0; r < M.nr; ++r) M.at(r, u) = col[r];
  }
  auto sol = solve(M, column_of(s, entry));
  check(sol.has_value(), "entry outside K");
  std::vector<Rat> out;
  for (auto& c : *sol) {
    check(c.im == 0, "K coordinate not real");
    out.push_back(c.re);
  }
  return out;
}

std::string k_entry_str(const SpinorRep& rep, const Mv& entry) {
  auto coords = k_coords(rep, entry);
  std::ostringstream os;
  bool first = true;
  for (size_t u = 0; u < coords.size(); ++u) {
    if (coords[u] == 0) continue;
    Rat c = coords[u];
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    Rat a = c < 0 ? Rat(-c) : c;
    if (u == 0) {
      os << a;
    } else {
      // label the K basis vector by its leading blade
      uint32_t lead = 0;
      for (auto& [mask, cc] : rep.K.basis[u].t)
        if (mask) {
          lead = mask;
          break;
        }
      if (a != 1) os << a << "*";
      os << "<" << blade_name(lead) << ">";
    }
    first = false;
  }
  if (first) return "0";
  return os.str();
}

// ---------------------------------------------------------------------------

Matrix<CRat> sigma1() {
  Matrix<CRat> m(2, 2);
  m.at(0, 1) = CRat(1);
  m.at(1, 0) = CRat(1);
  return m;
}
Matrix<CRat> sigma2() {
  Matrix<CRat> m(2, 2);
  m.at(0, 1) = CRat(Rat(0), Rat(-1));
  m.at(1, 0) = CRat(Rat(0), Rat(1));
  return m;
}
Matrix<CRat> sigma3() {
  Matrix<CRat> m(2, 2);
  m.at(0, 0) = CRat(1);
  m.at(1, 1) = CRat(-1);
  return m;
}

std::vector<Matrix<CRat>> tensor_pauli_gens(int n) {
  int k = n / 2;
  Matrix<CRat> s0 = Matrix<CRat>::identity(2, CRat(1));
  auto build = [&](int slot, const Matrix<CRat>& mid) {
    Matrix<CRat> m(1, 1);
    m.at(0, 0) = CRat(1);
    for (int t = 0; t < k; ++t) {
      const Matrix<CRat>& f =
          t < slot ? sigma3() : (t == slot ? mid : s0);
      m = kron(m, f);
    }
    return m;
  };
  std::vector<Matrix<CRat>> gens;
  if (k == 0) {
    // n <= 1: one generator represented on a 1x1 space.
    if (n == 1) {
      Matrix<CRat> m(1, 1);
      m.at(0, 0) = CRat(1);
      gens.push_back(m);
    }
    return gens;
  }
  for (int i = 0; i < k; ++i) gens.push_back(build(i, sigma1()));
  for (int i = 0; i < k; ++i) gens.push_back(build(i, sigma2()));
  if (n % 2 == 1) {
    Matrix<CRat> m(1, 1);
    m.at(0, 0) = CRat(1);
    for (int t = 0; t < k; ++t) m = kron(m, sigma3());
    gens.push_back(m);
  }
  // Defining relations.
  for (size_t i = 0; i < gens.size(); ++i) {
    check(gens[i] * gens[i] ==
              Matrix<CRat>::identity(gens[i].nr, CRat(1)),
          "tensor generator square");
    for (size_t j = i + 1; j < gens.size(); ++j)
      check(anticommutes(gens[i], gens[j]), "tensor generators anticommute");
  }
  return gens;
}

Matrix<CRat> tensor_rep_of(const std::vector<Matrix<CRat>>& gens, const Mv& x) {
  check(!gens.empty() || x.max_grade() == 0, "no generators");
  int dim = gens.empty() ? 1 : gens[0].nr;
  Matrix<CRat> out(dim, dim);
  for (auto& [mask, c] : x.t) {
    Matrix<CRat> term = Matrix<CRat>::identity(dim, CRat(1));
    for (int i = 0; i < 32; ++i)
      if (mask & (1u << i)) term = term * gens[i];
    out = out + term.scaled(c);
  }
  return out;
}

int tensor_monomial_rank(int n) {
  auto gens = tensor_pauli_gens(n);
  int dim = gens.empty() ? 1 : gens[0].nr;
  Matrix<CRat> M(1 << n, dim * dim);
  Sig s = complex_sig(n);
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    Matrix<CRat> img = tensor_rep_of(gens, Mv::blade(s, mask));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        M.at(static_cast<int>(mask), i * dim + j) = img.at(i, j);
  }
  // For even n the blade images span the full matrix algebra; for odd n the
  // representation factors through one simple summand.
  return rank_of(M);
}

}  // namespace cliffkit
