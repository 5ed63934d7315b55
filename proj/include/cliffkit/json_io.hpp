#pragma once

#include <string>

#include "json.hpp"

#include "cliffkit/matrix.hpp"
#include "cliffkit/multivector.hpp"

namespace cliffkit {

// All machine output uses insertion-ordered JSON so a given invocation is
// byte-stable across runs.
using Json = nlohmann::ordered_json;

// {"sig":{"p":..,"q":..,"field":"R"|"C"},
//  "terms":[{"blade":[1,3],"re":"1/2","im":"0"}, ...]}
// Blades are ascending 1-based generator indices; the scalar term has an
// empty blade list.  Terms are ordered by grade, then lexicographically.
Json mv_json(const Mv& x);

std::string csurd_str(const CSurd& c);

// Matrices render as row-major grids of exact coefficient strings.
Json matrix_json(const Matrix<CRat>& m);
Json matrix_json(const Matrix<CSurd>& m);

// Envelope every command's output starts from.
Json envelope(const std::string& command);

// dump with a trailing newline (UTF-8, two-space indent)
std::string json_dump(const Json& j);

}  // namespace cliffkit
