#include "commlab/algebra_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace commlab {

  namespace {
    using nlohmann::json;

    std::string line_col(std::string_view text, std::size_t byte) {
      std::size_t line = 1;
      std::size_t col  = 1;
      for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      return "line " + std::to_string(line) + ", column "
             + std::to_string(col);
    }

    json const& field(json const& obj, char const* key, std::string const& at) {
      if (!obj.is_object()) {
        throw DomainError(at + ": expected an object");
      }
      auto it = obj.find(key);
      if (it == obj.end()) {
        throw DomainError(at + ": missing field \"" + key + "\"");
      }
      return *it;
    }

    std::uint64_t natural(json const& v, std::string const& at) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
        throw DomainError(at + ": expected a non-negative integer");
      }
      return v.get<std::uint64_t>();
    }
  }  // namespace

  FiniteAlgebra parse_algebra(std::string_view text) {
    json doc;
    try {
      doc = json::parse(text.begin(), text.end());
    } catch (json::parse_error const& e) {
      throw ParseError("malformed algebra JSON (" + line_col(text, e.byte)
                           + "): " + e.what(),
                       e.byte == 0 ? 0 : e.byte - 1);
    }
    std::uint64_t size = natural(field(doc, "size", "algebra"), "size");
    if (size == 0 || size > 0xFFFF'FFFFu) {
      throw DomainError("size: must be between 1 and 2^32 - 1");
    }
    auto const& ops = field(doc, "operations", "algebra");
    if (!ops.is_array()) {
      throw DomainError("operations: expected an array");
    }
    std::vector<Operation> out;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      std::string at = "operations[" + std::to_string(i) + "]";
      Operation   op;
      auto const& sym = field(ops[i], "symbol", at);
      if (!sym.is_string()) {
        throw DomainError(at + ".symbol: expected a string");
      }
      op.symbol = sym.get<std::string>();
      std::uint64_t arity = natural(field(ops[i], "arity", at), at + ".arity");
      if (arity > 16) {
        throw DomainError(at + ".arity: arity above 16 is not supported");
      }
      op.arity          = static_cast<unsigned>(arity);
      auto const& table = field(ops[i], "table", at);
      if (!table.is_array()) {
        throw DomainError(at + ".table: expected an array");
      }
      std::size_t expected = 1;
      for (unsigned k = 0; k < op.arity; ++k) {
        if (expected > (std::size_t{1} << 40) / size) {
          throw DomainError(at + ".table: too large");
        }
        expected *= size;
      }
      if (table.size() != expected) {
        throw DomainError(at + ".table: expected " + std::to_string(expected)
                          + " entries (size^arity), got "
                          + std::to_string(table.size()));
      }
      op.table.reserve(expected);
      for (std::size_t j = 0; j < table.size(); ++j) {
        std::string   cell = at + ".table[" + std::to_string(j) + "]";
        std::uint64_t v    = natural(table[j], cell);
        if (v >= size) {
          throw DomainError(cell + ": value " + std::to_string(v)
                            + " is outside the universe 0.."
                            + std::to_string(size - 1));
        }
        op.table.push_back(static_cast<std::uint32_t>(v));
      }
      out.push_back(std::move(op));
    }
    return FiniteAlgebra(size, std::move(out));
  }

  FiniteAlgebra read_algebra(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return parse_algebra(text);
  }

  FiniteAlgebra load_algebra(std::string const& path) {
    if (path == "-") {
      return read_algebra(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
      throw DomainError("cannot open algebra file '" + path + "'");
    }
    return read_algebra(in);
  }

  std::string algebra_to_json(FiniteAlgebra const& alg) {
    json ops = json::array();
    for (auto const& op : alg.operations()) {
      ops.push_back(
          {{"symbol", op.symbol}, {"arity", op.arity}, {"table", op.table}});
    }
    json doc = {{"size", alg.size()}, {"operations", ops}};
    return doc.dump();
  }

}  // namespace commlab
