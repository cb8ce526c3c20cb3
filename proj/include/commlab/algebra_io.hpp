#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "commlab/finite_algebra.hpp"

namespace commlab {

  // Reads the JSON algebra format
  //
  //   {"size": s, "operations": [{"symbol": "m", "arity": 2, "table": [...]}]}
  //
  // Malformed JSON raises ParseError (with the line and column in the
  // message); a well-formed document with a bad field raises DomainError
  // naming the field, e.g. "operations[1].table".
  FiniteAlgebra parse_algebra(std::string_view text);

  FiniteAlgebra read_algebra(std::istream& in);

  // Loads from a file; "-" reads standard input.
  FiniteAlgebra load_algebra(std::string const& path);

  std::string algebra_to_json(FiniteAlgebra const& alg);

}  // namespace commlab
