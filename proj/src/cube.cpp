#include "commlab/cube.hpp"

#include <algorithm>

namespace commlab {

  namespace {
    void check_vertex(unsigned m, std::size_t i) {
      if (m == 0 || m > 30) {
        throw DomainError("cube dimension must be in 1..30, got "
                          + std::to_string(m));
      }
      if (i < 1 || i > (std::size_t{1} << m)) {
        throw DomainError("vertex " + std::to_string(i)
                          + " is out of range for dimension "
                          + std::to_string(m));
      }
    }
  }  // namespace

  std::vector<std::uint8_t> vertex_assignment(unsigned m, std::size_t i) {
    check_vertex(m, i);
    std::vector<std::uint8_t> bits(m);
    for (unsigned j = 0; j < m; ++j) {
      bits[j] = static_cast<std::uint8_t>(((i - 1) >> (m - 1 - j)) & 1);
    }
    return bits;
  }

  std::vector<std::size_t> adjacent_vertices(unsigned m, std::size_t i) {
    check_vertex(m, i);
    std::vector<std::size_t> out;
    for (unsigned b = m; b-- > 0;) {
      out.push_back(((i - 1) ^ (std::size_t{1} << b)) + 1);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Cube<Element> term_cube(Term const&                     t,
                          BlockAssignment<Element> const& blocks,
                          Params const&                   params) {
    return term_cube(blocks, [&](Assignment const& a) {
      return eval_term(t, a, params);
    });
  }

}  // namespace commlab
