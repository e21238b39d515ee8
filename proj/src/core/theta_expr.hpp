#pragma once

#include <string>

namespace qwtrap {

// Evaluates time expressions like "pi/sqrt(10)" or "3*pi/(4*sqrt(6))".
// Grammar: numbers, pi, sqrt(...), parentheses, unary minus, + - * /.
// Throws std::invalid_argument on malformed input.
double eval_theta(const std::string& text);

}  // namespace qwtrap
