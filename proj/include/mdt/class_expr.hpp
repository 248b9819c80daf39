#pragma once

#include <string>

#include "mdt/laurent.hpp"

namespace mdt {

// Parses the small class-expression grammar used on the command line:
// integers, L, L^p, L^(p/2), +, -, *, parentheses, unary minus.  Round-trips
// the canonical text form of a motivic weight.
MotWeight parse_class_expr(const std::string& text);

}  // namespace mdt
