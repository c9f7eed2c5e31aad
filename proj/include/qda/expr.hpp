#pragma once
// The CLI expression language: term-sums of scalar-coefficient word
// products over generators x<i>, parameters q[i,j], t / z scalars and
// rationals, with + - * / ^ and parentheses.

#include <string>

#include "qda/params.hpp"

namespace qda {

struct ParseError : Error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

FreePoly parse_expression(const std::string& text, const ParamSpec& params);
Scalar parse_scalar(const std::string& text, const ParamSpec& params);

// Canonical text: terms in basis order, generator runs as powers, scalar
// coefficients rendered through the parameter point (q back-mapping when
// exponents invert).  parse_expression(poly_to_string(p)) == p.
std::string poly_to_string(const FreePoly& p, const ParamSpec& params);

std::string word_to_string(const Word& w);

}  // namespace qda
