#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cliffkit/lorentz.hpp"

using namespace cliffkit;

static CSurd half_i() { return CSurd(Surd(0), Surd(Rat(1, 2))); }

TEST_CASE("fundamental representation matrices") {
  GnOps g = build_block_ops(1, 3);  // (1/2, 3/2)
  CHECK(g.dim == 2);
  REQUIRE(g.blocks == std::vector<int>{1});

  // A23 = -(i/2) [[0,1],[1,0]]
  CHECK(g.a23.at(0, 0) == CSurd(0));
  CHECK(g.a23.at(0, 1) == -half_i());
  CHECK(g.a23.at(1, 0) == -half_i());
  // A13 = (1/2) [[0,1],[-1,0]]
  CHECK(g.a13.at(0, 1) == CSurd(Surd(Rat(1, 2))));
  CHECK(g.a13.at(1, 0) == CSurd(Surd(Rat(-1, 2))));
  // A12 = (i/2) diag(1,-1)
  CHECK(g.a12.at(0, 0) == half_i());
  CHECK(g.a12.at(1, 1) == -half_i());
  CHECK(g.a12.at(0, 1) == CSurd(0));
  // B1 = -(1/2) [[0,1],[1,0]]
  CHECK(g.b1.at(0, 1) == CSurd(Surd(Rat(-1, 2))));
  CHECK(g.b1.at(1, 0) == CSurd(Surd(Rat(-1, 2))));
  // B2 = (1/2) [[0,-i],[i,0]]
  CHECK(g.b2.at(0, 1) == -half_i());
  CHECK(g.b2.at(1, 0) == half_i());
  // B3 = (1/2) diag(-1,1)
  CHECK(g.b3.at(0, 0) == CSurd(Surd(Rat(-1, 2))));
  CHECK(g.b3.at(1, 1) == CSurd(Surd(Rat(1, 2))));
}

TEST_CASE("block structure") {
  GnOps g = build_block_ops(0, 6);  // (0, 3): l = 0, 1, 2
  CHECK(g.dim == 9);
  CHECK(g.blocks == std::vector<int>{0, 2, 4});
  GnOps h = build_block_ops(1, 5);  // (1/2, 5/2): l = 1/2, 3/2
  CHECK(h.dim == 6);
  CHECK(h.blocks == std::vector<int>{1, 3});
}

TEST_CASE("label enumeration") {
  auto labels = gn_labels(16);
  CHECK(labels.size() == 27);
  // the fundamental and its conjugate-size partners come first
  bool has_12_32 = false;
  for (auto [a, b] : labels) {
    CHECK(b > a);
    CHECK((b - a) % 2 == 0);
    CHECK((b * b - a * a) / 4 <= 16);
    if (a == 1 && b == 3) has_12_32 = true;
  }
  CHECK(has_12_32);
}

TEST_CASE("bracket relations hold in every small representation") {
  for (auto [a, b] : gn_labels(9)) {
    GnOps g = build_block_ops(a, b);
    CHECK_NOTHROW(verify_brackets(g));
    CHECK_NOTHROW(verify_hf_brackets(g));
  }
}

TEST_CASE("permutation audit families") {
  AuditResult r4 = symmetry_permutation_audit(4);
  CHECK(r4.n == 4);
  CHECK(r4.m == 2);
  CHECK(r4.t0_ok);
  CHECK(r4.pattern_family.at("b") == 5);
  CHECK(r4.pattern_family.at("ab") == 3);
  // each pattern maps to exactly one family
  for (auto& row : r4.rows)
    CHECK(r4.pattern_family.at(row.pattern) == row.family);

  AuditResult r6 = symmetry_permutation_audit(6);
  CHECK(r6.t0_ok);
  CHECK(r6.pattern_family.at("") == 1);
  CHECK(r6.pattern_family.at("c") == 3);
  CHECK(r6.pattern_family.at("ca") == 5);
  CHECK(r6.pattern_family.at("cab") == 2);

  // verdicts in each row match the family strings
  for (auto& row : r6.rows) {
    CHECK(row.e_verdict == audit_families[row.family - 1].first);
    CHECK(row.c_verdict == audit_families[row.family - 1].second);
  }
}

TEST_CASE("the two-generator volume anomaly") {
  CHECK(n2_volume_verdicts() == "aacaac");
}
