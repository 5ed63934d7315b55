#include "cliffkit/veegroup.hpp"

#include <algorithm>
#include <sstream>

namespace cliffkit {

int VeeGroup::index_of(const VeeElem& e) const {
  for (size_t i = 0; i < elems.size(); ++i)
    if (elems[i] == e) return static_cast<int>(i);
  throw internal_error("vee element not found");
}

VeeGroup vee_group(int p, int q) {
  VeeGroup g;
  g.sig = real_sig(p, q);
  int n = p + q;
  std::vector<uint32_t> blades;
  for (uint32_t m = 0; m < (1u << n); ++m) blades.push_back(m);
  std::sort(blades.begin(), blades.end(), [](uint32_t a, uint32_t b) {
    if (grade(a) != grade(b)) return grade(a) < grade(b);
    return a < b;
  });
  for (uint32_t m : blades) {
    g.elems.push_back({+1, m});
    g.elems.push_back({-1, m});
  }
  return g;
}

VeeElem vee_mul(const Sig& s, const VeeElem& a, const VeeElem& b) {
  auto [mask, sign] = blade_mul(a.mask, b.mask, s);
  return {a.sign * b.sign * sign, mask};
}

GroupTable vee_table(const VeeGroup& g) {
  int n = g.order();
  GroupTable t;
  t.mul.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.mul[i][j] = g.index_of(vee_mul(g.sig, g.elems[i], g.elems[j]));
  validate_group(t);
  return t;
}

std::string vee_type(int p, int q) {
  int n = p + q;
  int d8 = ((p - q) % 8 + 8) % 8;
  std::ostringstream os;
  // Even n carries the pair {N_{n-1}, N_n}; odd n carries {Omega_{n-2},
  // Omega_{n-1}} (each Omega_k = N_k x Z2 via the central volume element)
  // and S_{(n-1)/2} when the center is Z4.
  switch (d8) {
    case 0:
    case 2: os << "N_" << std::max(n - 1, 0); break;
    case 4:
    case 6: os << "N_" << n; break;
    case 1: os << "Omega_" << std::max(n - 2, 0); break;
    case 5: os << "Omega_" << (n - 1); break;
    case 3:
    case 7: os << "S_" << (n - 1) / 2; break;
  }
  return os.str();
}

std::string vee_center(int p, int q) {
  int d8 = ((p - q) % 8 + 8) % 8;
  std::string label;
  switch (d8) {
    case 0:
    case 2:
    case 4:
    case 6: label = "Z2"; break;
    case 1:
    case 5: label = "Z2xZ2"; break;
    case 3:
    case 7: label = "Z4"; break;
  }
  // Cross-check against the actual center of the group.
  VeeGroup g = vee_group(p, q);
  std::vector<VeeElem> central;
  for (auto& z : g.elems) {
    bool ok = true;
    for (auto& x : g.elems)
      if (!(vee_mul(g.sig, z, x) == vee_mul(g.sig, x, z))) {
        ok = false;
        break;
      }
    if (ok) central.push_back(z);
  }
  std::string computed;
  if (central.size() == 2) {
    computed = "Z2";
  } else if (central.size() == 4) {
    // {1,-1,w,-w}: cyclic iff w^2 = -1.
    VeeElem w;
    for (auto& z : central)
      if (z.mask != 0 && z.sign > 0) w = z;
    VeeElem w2 = vee_mul(g.sig, w, w);
    computed = (w2.mask == 0 && w2.sign < 0) ? "Z4" : "Z2xZ2";
  } else {
    throw internal_error("unexpected center size");
  }
  check(label == computed, "vee center rule mismatch");
  return label;
}

std::string render_vee_table(const VeeGroup& g) {
  size_t w = 1;
  for (auto& e : g.elems) w = std::max(w, e.name().size());
  auto pad = [&](const std::string& s) {
    std::string out = s;
    while (out.size() < w) out += ' ';
    return out;
  };
  std::ostringstream os;
  os << pad("*");
  for (auto& e : g.elems) os << " | " << pad(e.name());
  os << "\n";
  for (auto& a : g.elems) {
    os << pad(a.name());
    for (auto& b : g.elems) os << " | " << pad(vee_mul(g.sig, a, b).name());
    os << "\n";
  }
  return os.str();
}

}  // namespace cliffkit
