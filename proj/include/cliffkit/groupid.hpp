#pragma once

#include <string>
#include <vector>

#include "cliffkit/matrix.hpp"

namespace cliffkit {

// Multiplication table of a finite group on indices 0..n-1 (0 = identity).
struct GroupTable {
  std::vector<std::vector<int>> mul;
  int order() const { return static_cast<int>(mul.size()); }
};

// Validates associativity/identity/inverses; throws on failure.
void validate_group(const GroupTable& g);

int element_order(const GroupTable& g, int x);
bool is_abelian(const GroupTable& g);

// Names groups of order <= 8 (all of them) plus Z2^3-style descriptions.
// Unrecognized orders return "order-N".
std::string identify_group(const GroupTable& g);

// Closure of a set of matrices under multiplication (bounded); the identity
// is prepended if missing.
template <class T>
std::vector<Matrix<T>> matrix_closure(std::vector<Matrix<T>> gens,
                                      const T& one, size_t bound = 128) {
  check(!gens.empty(), "matrix_closure: empty generating set");
  std::vector<Matrix<T>> elems;
  auto push = [&](const Matrix<T>& m) {
    for (auto& e : elems)
      if (e == m) return false;
    elems.push_back(m);
    return true;
  };
  push(Matrix<T>::identity(gens[0].nr, one));
  for (auto& g : gens) push(g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = 0; j < elems.size(); ++j) {
        if (push(elems[i] * elems[j])) grew = true;
        check(elems.size() <= bound, "matrix_closure: bound exceeded");
      }
  }
  return elems;
}

// As above, with an explicit identity matrix (for entry types whose unit is
// not constructible from the type alone, e.g. idempotent-diagonal units).
template <class T>
std::vector<Matrix<T>> matrix_closure(std::vector<Matrix<T>> gens,
                                      const Matrix<T>& unit,
                                      size_t bound = 128) {
  check(!gens.empty(), "matrix_closure: empty generating set");
  std::vector<Matrix<T>> elems;
  auto push = [&](const Matrix<T>& m) {
    for (auto& e : elems)
      if (e == m) return false;
    elems.push_back(m);
    return true;
  };
  push(unit);
  for (auto& g : gens) push(g);
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t i = 0; i < elems.size(); ++i)
      for (size_t j = 0; j < elems.size(); ++j) {
        if (push(elems[i] * elems[j])) grew = true;
        check(elems.size() <= bound, "matrix_closure: bound exceeded");
      }
  }
  return elems;
}

template <class T>
GroupTable table_from_matrices(const std::vector<Matrix<T>>& elems) {
  GroupTable g;
  int n = static_cast<int>(elems.size());
  g.mul.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix<T> p = elems[i] * elems[j];
      for (int k = 0; k < n; ++k)
        if (elems[k] == p) {
          g.mul[i][j] = k;
          break;
        }
      check(g.mul[i][j] >= 0, "matrix set not closed");
    }
  validate_group(g);
  return g;
}

}  // namespace cliffkit
