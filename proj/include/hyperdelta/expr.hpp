#pragma once

#include <string>

#include "ratfunc.hpp"

namespace hyperdelta {

// Grammar (ASCII only, no implicit multiplication):
//   expr  := term (('+'|'-') term)*
//   term  := unary (('*'|'/') unary)*
//   unary := '-'? power
//   power := atom ('^' uint)?
//   atom  := 'x' | uint | '(' expr ')'
RatFunc parse_expr(const std::string& src);

// canonical descending-degree form with explicit '*' and '^'
std::string to_string(const UPoly& p, const std::string& var = "x");
std::string to_string(const RatFunc& f, const std::string& var = "x");

}  // namespace hyperdelta
