// Literal grammar for rational functions and Weierstrass equations:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' int)?          (integer exponents, negative allowed)
//   atom   := integer | 't' | 'g' | '(' expr ')' | '-' factor
// An equation literal is `[a1,a2,a3,a4,a6]`.  `g` is the declared generator
// of the constant field and is rejected over a prime field.

#ifndef NERON_PARSE_HPP
#define NERON_PARSE_HPP

#include <string>

#include "neron/ratfunc.hpp"

namespace neron {

RatFunc parse_ratfunc(const std::string& text, const Field& F);

// five comma-separated rational functions in square brackets
struct EqLiteral {
    RatFunc a1, a2, a3, a4, a6;
};
EqLiteral parse_equation(const std::string& text, const Field& F);

// a place literal: "0", "inf", or a constant-field element expression
Place parse_place(const std::string& text, const Field& F);

}  // namespace neron

#endif
