#pragma once

#include <string_view>

#include "commlab/element.hpp"
#include "commlab/term.hpp"

namespace commlab {

  // Parses the canonical element text
  //
  //   a(i,j)  b(i,j)  d(k)  c  t([e1,...,en],tag)
  //
  // Whitespace between tokens is ignored. Throws ParseError with the byte
  // offset of the problem.
  Element parse_element(std::string_view text);

  // Parses the term grammar
  //
  //   x<k>  u(t)  upqr{p;q;r}(t)  f(t1,...,tn)
  //
  // where element literals are accepted as constant leaves.
  Term parse_term(std::string_view text);

}  // namespace commlab
