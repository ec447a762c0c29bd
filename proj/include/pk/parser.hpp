#pragma once

#include <string>

#include "pk/poly.hpp"
#include "pk/space.hpp"

namespace pk {

// Grammar (ASCII):
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*      '/' requires a constant divisor
//   factor := '-' factor | atom ('^' nat)?
//   atom   := nat | gen | '(' expr ')'
//   gen    := x3 | y1 | xi2 | eta1            coordinates
//           | Dx3 | Deta1 | ...               partial derivatives
//           | dx3 | deta1 | ...               de Rham forms
//           | ys1 | xis2                      linear duals of the odd coordinates
// Every generator is validated against the space.
Poly parse(const std::string& text, const Space& sp);

// A single generator name such as "Dx2"; throws ParseError otherwise.
Gen parse_gen(const std::string& token, const Space& sp);

} // namespace pk
