#include "cliffkit/groupid.hpp"

#include <algorithm>

namespace cliffkit {

void validate_group(const GroupTable& g) {
  int n = g.order();
  check(n > 0, "empty group");
  for (int i = 0; i < n; ++i) {
    check(g.mul[0][i] == i && g.mul[i][0] == i, "element 0 is not an identity");
    bool inv = false;
    for (int j = 0; j < n; ++j)
      if (g.mul[i][j] == 0 && g.mul[j][i] == 0) inv = true;
    check(inv, "missing inverse");
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        check(g.mul[g.mul[i][j]][k] == g.mul[i][g.mul[j][k]],
              "not associative");
}

int element_order(const GroupTable& g, int x) {
  int e = x, ord = 1;
  while (e != 0) {
    e = g.mul[e][x];
    ++ord;
    check(ord <= g.order(), "order computation diverged");
  }
  return ord;
}

bool is_abelian(const GroupTable& g) {
  int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.mul[i][j] != g.mul[j][i]) return false;
  return true;
}

std::string identify_group(const GroupTable& g) {
  int n = g.order();
  std::vector<int> ords(n);
  for (int i = 0; i < n; ++i) ords[i] = element_order(g, i);
  int invol = static_cast<int>(std::count(ords.begin(), ords.end(), 2));
  int maxord = *std::max_element(ords.begin(), ords.end());
  bool ab = is_abelian(g);

  switch (n) {
    case 1: return "Z1";
    case 2: return "Z2";
    case 3: return "Z3";
    case 4: return maxord == 4 ? "Z4" : "Z2xZ2";
    case 8:
      if (!ab) return invol == 1 ? "Q4" : "D4";  // quaternion vs dihedral
      if (maxord == 8) return "Z8";
      return invol == 7 ? "Z2xZ2xZ2" : "Z2xZ4";
    case 16:
      if (ab && maxord == 2) return "Z2xZ2xZ2xZ2";
      break;
    default: break;
  }
  if (ab && maxord == 2) {
    int k = 0;
    while ((1 << k) < n) ++k;
    if ((1 << k) == n) {
      std::string s = "Z2";
      for (int i = 1; i < k; ++i) s += "xZ2";
      return s;
    }
  }
  return "order-" + std::to_string(n);
}

}  // namespace cliffkit
