#include "cliffkit/json_io.hpp"

#include <algorithm>
#include <vector>

namespace cliffkit {

Json mv_json(const Mv& x) {
  Json j;
  j["sig"] = {{"p", x.sig.p},
              {"q", x.sig.q},
              {"field", x.sig.cx ? "C" : "R"}};
  std::vector<uint32_t> masks;
  for (auto& [m, c] : x.t)
    if (!c.is_zero()) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
    int ga = grade(a), gb = grade(b);
    return ga != gb ? ga < gb : a < b;
  });
  Json terms = Json::array();
  for (uint32_t m : masks) {
    Json idx = Json::array();
    for (int i = 0; i < 32; ++i)
      if (m >> i & 1u) idx.push_back(i + 1);
    CRat c = x.coeff(m);
    terms.push_back({{"blade", idx}, {"re", rat_str(c.re)}, {"im", rat_str(c.im)}});
  }
  j["terms"] = terms;
  return j;
}

std::string csurd_str(const CSurd& c) {
  if (c.is_zero()) return "0";
  std::string re = c.re.str(), im = c.im.str();
  if (c.im.is_zero()) return re;
  std::string ip = "(" + im + ")i";
  if (c.re.is_zero()) return ip;
  return re + "+" + ip;
}

template <class T, class F>
static Json grid_json(const Matrix<T>& m, F str) {
  Json rows = Json::array();
  for (int r = 0; r < m.nr; ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.nc; ++c) row.push_back(str(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json matrix_json(const Matrix<CRat>& m) {
  return grid_json(m, [](const CRat& c) { return cx_str(c); });
}

Json matrix_json(const Matrix<CSurd>& m) {
  return grid_json(m, [](const CSurd& c) { return csurd_str(c); });
}

Json envelope(const std::string& command) {
  Json j;
  j["schema"] = "cliffkit/1";
  j["command"] = command;
  return j;
}

std::string json_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cliffkit
