#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cliffkit/veegroup.hpp"

using namespace cliffkit;

TEST_CASE("canonical element order") {
  VeeGroup g = vee_group(2, 0);
  REQUIRE(g.order() == 8);
  const char* want[] = {"1", "-1", "e1", "-e1", "e2", "-e2", "e12", "-e12"};
  for (int i = 0; i < 8; ++i) CHECK(g.elems[i].name() == want[i]);
}

TEST_CASE("group orders and identifications") {
  CHECK(identify_group(vee_table(vee_group(1, 0))) == "Z2xZ2");
  CHECK(identify_group(vee_table(vee_group(0, 1))) == "Z4");
  CHECK(identify_group(vee_table(vee_group(2, 0))) == "D4");
  CHECK(identify_group(vee_table(vee_group(0, 2))) == "Q4");
  for (int p = 0; p <= 4; ++p)
    for (int q = 0; p + q <= 4; ++q)
      CHECK(vee_group(p, q).order() == (1 << (p + q + 1)));
}

TEST_CASE("multiplication rows") {
  // signs track the blade products: e1*e2 = e12, e2*e1 = -e12, ...
  Sig s = real_sig(2, 0);
  VeeElem e1{+1, 0b01}, e2{+1, 0b10}, e12{+1, 0b11};
  CHECK(vee_mul(s, e1, e2) == e12);
  CHECK(vee_mul(s, e2, e1) == VeeElem{-1, 0b11});
  CHECK(vee_mul(s, e12, e12) == VeeElem{-1, 0});
  // in Cl(0,2) the generators square to -1
  Sig h = real_sig(0, 2);
  CHECK(vee_mul(h, e1, e1) == VeeElem{-1, 0});
  CHECK(vee_mul(h, e12, e12) == VeeElem{-1, 0});
  // one full frozen row of the Cl(0,2) table: e1 * (each element in order)
  VeeGroup g = vee_group(0, 2);
  const char* row[] = {"e1", "-e1", "-1", "1", "e12", "-e12", "-e2", "e2"};
  for (int j = 0; j < 8; ++j)
    CHECK(vee_mul(h, e1, g.elems[j]).name() == row[j]);
}

TEST_CASE("family labels follow the signature residue") {
  CHECK(vee_type(0, 0) == "N_0");
  CHECK(vee_type(2, 0) == "N_1");
  CHECK(vee_type(0, 2) == "N_2");
  CHECK(vee_type(1, 1) == "N_1");
  CHECK(vee_type(1, 0) == "Omega_0");
  CHECK(vee_type(0, 1) == "S_0");
  CHECK(vee_type(3, 0) == "S_1");
  CHECK(vee_type(2, 1) == "Omega_1");
  CHECK(vee_type(0, 3) == "Omega_2");
  CHECK(vee_type(4, 1) == "S_2");
}

TEST_CASE("centers") {
  CHECK(vee_center(2, 0) == "Z2");
  CHECK(vee_center(1, 1) == "Z2");
  CHECK(vee_center(1, 0) == "Z2xZ2");
  CHECK(vee_center(0, 1) == "Z4");
  CHECK(vee_center(3, 0) == "Z4");
  CHECK(vee_center(0, 3) == "Z2xZ2");
  CHECK(vee_center(3, 2) == "Z2xZ2");
  CHECK(vee_center(2, 2) == "Z2");
}

TEST_CASE("table validity and rendering") {
  VeeGroup g = vee_group(2, 0);
  GroupTable t = vee_table(g);
  validate_group(t);
  CHECK_FALSE(is_abelian(t));
  CHECK(element_order(t, g.index_of(VeeElem{-1, 0})) == 2);
  CHECK(element_order(t, g.index_of(VeeElem{+1, 0b11})) == 4);
  std::string r = render_vee_table(g);
  // header row then one line per element
  int lines = 0;
  for (char c : r)
    if (c == '\n') ++lines;
  CHECK(lines == 9);
  CHECK(r.find("e12") != std::string::npos);
}
