#pragma once

// Plain-text formats shared by the CLI and the test corpus.
//
// Rational:  "p" or "p/q" in base 10, q > 0; printed in lowest terms without "/1".
// Matrix:    line 1 is n, then n lines of n whitespace-separated rationals.
// Vector:    line 1 is n, line 2 holds the n rationals.
// Subset:    one line of space-separated 1-based indices; a blank line is the
//            empty set.
// Witness:   a tag line, then
//              PV1, PV3SING   one subset line
//              PV2            a vector (two lines)
//              PV3SINKS       q on one line, then the alpha and beta lines
//            Lines before the tag are ignored, so a report whose last block
//            is a witness can be fed back in directly.

#include <cstddef>
#include <string>
#include <string_view>

#include "pwitness/core.hpp"
#include "pwitness/ratmat.hpp"

namespace pw::text {

/// Throws ParseError (line/column are 1-based and relative to `s`).
Rational parse_rational(std::string_view s, std::size_t line = 1, std::size_t column = 1);

RatMatrix parse_matrix(std::string_view text);
RatVector parse_vector(std::string_view text);
/// `n` is the dimension of the matrix the witness refers to.
Witness parse_witness(std::string_view text, std::size_t n);

std::string format_matrix(const RatMatrix& m);
std::string format_vector(const RatVector& x);
std::string format_subset(const IndexSet& s);
std::string format_witness(const Witness& w);

}  // namespace pw::text
