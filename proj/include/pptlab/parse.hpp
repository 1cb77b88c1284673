#ifndef PPTLAB_PARSE_HPP
#define PPTLAB_PARSE_HPP

#include <string_view>

#include "pptlab/poly.hpp"

namespace pptlab {

// Parses an integer-coefficient polynomial expression into Z/p^2.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER | 'p' | IDENT | '(' expr ')'
//
// 'p' denotes the prime of the context.  Juxtaposition is not
// multiplication.  Throws SyntaxError (with position) or UnknownVariable.
LiftPoly parse_poly(std::string_view src, const ContextPtr& ctx);

}  // namespace pptlab

#endif
