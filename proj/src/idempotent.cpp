#include "cliffkit/idempotent.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace cliffkit {

int radon_hurwitz(int i) {
  static const int base[8] = {0, 1, 2, 2, 3, 3, 3, 3};
  int shift = 0;
  while (i < 0) {
    i += 8;
    shift -= 4;
  }
  while (i > 7) {
    i -= 8;
    shift += 4;
  }
  return base[i] + shift;
}

int rh_factor_count(int p, int q) { return q - radon_hurwitz(q - p); }

static bool blade_square_plus_one(const Sig& s, uint32_t m) {
  auto [mask, sign] = blade_mul(m, m, s);
  check(mask == 0, "blade square is not scalar");
  return sign > 0;
}

static bool blades_commute(const Sig& s, uint32_t a, uint32_t b) {
  // e_A e_B = +/- e_B e_A; compare reorder+square signs both ways.
  auto [m1, s1] = blade_mul(a, b, s);
  auto [m2, s2] = blade_mul(b, a, s);
  check(m1 == m2, "blade product mask mismatch");
  return s1 == s2;
}

// All 2^k subset products must have pairwise distinct masks (this also
// excludes +/-1 and repeated blades), which makes the expanded product of
// (1+e_T)/2 a sum of 2^k distinct blades.
static bool independent(const Sig& s, const std::vector<uint32_t>& gens) {
  std::set<uint32_t> masks;
  size_t total = 1u << gens.size();
  for (size_t sub = 0; sub < total; ++sub) {
    uint32_t m = 0;
    for (size_t i = 0; i < gens.size(); ++i)
      if (sub & (1u << i)) m ^= gens[i];
    if (!masks.insert(m).second) return false;
  }
  return true;
}

IdempotentInfo idempotent_from_blades(const Sig& s,
                                      const std::vector<uint32_t>& gens) {
  return idempotent_from_blades(s, gens, std::vector<int>(gens.size(), +1));
}

IdempotentInfo idempotent_from_blades(const Sig& s,
                                      const std::vector<uint32_t>& gens,
                                      const std::vector<int>& signs) {
  check(signs.size() == gens.size(), "one sign per generator blade");
  for (uint32_t g : gens) {
    check(g != 0 && g < (1u << s.n()), "generator blade outside algebra");
    check(blade_square_plus_one(s, g), "generator blade must square to +1");
  }
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      check(blades_commute(s, gens[i], gens[j]),
            "generator blades must commute");
  check(independent(s, gens), "generator blades must be independent");

  Mv f = Mv::one(s);
  for (size_t i = 0; i < gens.size(); ++i) {
    Mv term = Mv::blade(s, gens[i]);
    Mv factor = Mv::one(s) + (signs[i] >= 0 ? term : -term);
    f = f * factor.scaled(CRat(Rat(1, 2)));
  }
  check(!f.is_zero() && f * f == f, "product is not idempotent");
  IdempotentInfo info;
  info.gens = gens;
  info.f = f;
  info.k = static_cast<int>(gens.size());
  return info;
}

static std::vector<uint32_t> sorted_blades(int n) {
  std::vector<uint32_t> blades;
  for (uint32_t m = 1; m < (1u << n); ++m) blades.push_back(m);
  std::sort(blades.begin(), blades.end(), [](uint32_t a, uint32_t b) {
    if (grade(a) != grade(b)) return grade(a) < grade(b);
    return a < b;
  });
  return blades;
}

static bool dfs_pick(const Sig& s, const std::vector<uint32_t>& blades,
                     size_t from, int need, std::vector<uint32_t>& acc) {
  if (need == 0) return true;
  for (size_t i = from; i < blades.size(); ++i) {
    uint32_t b = blades[i];
    if (!blade_square_plus_one(s, b)) continue;
    bool ok = true;
    for (uint32_t g : acc)
      if (!blades_commute(s, g, b)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    acc.push_back(b);
    if (!independent(s, acc)) {
      acc.pop_back();
      continue;
    }
    if (dfs_pick(s, blades, i + 1, need - 1, acc)) return true;
    acc.pop_back();
  }
  return false;
}

IdempotentInfo find_primitive_idempotent(int p, int q) {
  Sig s = real_sig(p, q);
  int k = rh_factor_count(p, q);
  check(k >= 0, "negative factor count");
  std::vector<uint32_t> acc;
  if (k > 0) {
    bool found = dfs_pick(s, sorted_blades(s.n()), 0, k, acc);
    check(found, "no primitive idempotent generator set found");
  }
  return idempotent_from_blades(s, acc);
}

std::vector<std::vector<uint32_t>> enumerate_idempotent_gen_sets(int p, int q) {
  Sig s = real_sig(p, q);
  int k = rh_factor_count(p, q);
  std::vector<uint32_t> blades = sorted_blades(s.n());
  std::vector<std::vector<uint32_t>> out;
  std::set<std::set<uint32_t>> seen;  // subgroup keyed by its full mask set

  std::vector<uint32_t> acc;
  // Depth-first enumeration of all valid sets; dedup by generated subgroup.
  std::function<void(size_t, int)> go = [&](size_t from, int need) {
    if (need == 0) {
      std::set<uint32_t> subgroup;
      size_t total = 1u << acc.size();
      for (size_t sub = 0; sub < total; ++sub) {
        uint32_t m = 0;
        for (size_t i = 0; i < acc.size(); ++i)
          if (sub & (1u << i)) m ^= acc[i];
        subgroup.insert(m);
      }
      if (seen.insert(subgroup).second) out.push_back(acc);
      return;
    }
    for (size_t i = from; i < blades.size(); ++i) {
      uint32_t b = blades[i];
      if (!blade_square_plus_one(s, b)) continue;
      bool ok = true;
      for (uint32_t g : acc)
        if (!blades_commute(s, g, b)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      acc.push_back(b);
      if (independent(s, acc)) go(i + 1, need - 1);
      acc.pop_back();
    }
  };
  if (k == 0) {
    out.push_back({});
    return out;
  }
  go(0, k);
  return out;
}

}  // namespace cliffkit
