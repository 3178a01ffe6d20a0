#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "lpa/element.hpp"

namespace lpa {

/// Syntax error with a 0-based character position into the source text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses the canonical element syntax
///   Expr   := ['+'|'-'] Term (('+'|'-') Term)*
///   Term   := [Scalar '*'] Factor ('.' Factor)* | Scalar
///   Factor := ID ['*']
/// against a graph: identifiers resolve to vertices or edges, a trailing
/// '*' marks a ghost factor, and a term denotes the product of its factors
/// in the algebra. A bare scalar term means scalar times the identity (the
/// sum of all vertices). Terms whose factors do not compose multiply to
/// zero; they are dropped with a "zero monomial" warning on `warnings`.
Element parse_element(const std::string& text, const GraphPtr& g, Field field,
                      std::ostream* warnings = nullptr);

}  // namespace lpa
