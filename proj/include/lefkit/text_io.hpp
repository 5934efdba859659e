#ifndef LEFKIT_TEXT_IO_HPP
#define LEFKIT_TEXT_IO_HPP

#include <string>
#include <vector>

#include "lefkit/ring.hpp"

namespace lefkit {

// Text grammar, shared by every surface that reads polynomials:
//   polynomial := ['+'|'-'] term (('+'|'-') term)*
//   term       := factor ('*' factor)*
//   factor     := rational | variable ['^' natural]
//   rational   := natural ['/' natural]
// Whitespace may appear between any two tokens. Variables must belong to the
// ring. Parse failures raise ParseError with a 1-based line and column.

std::string format_rational(const mpq_class& q);
std::string format_monomial(const Monomial& m, const RingContext& ring);
std::string format_polynomial(const Polynomial& f);

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

/// Same, but errors report the given line number (for callers slicing a
/// larger document into lines).
Polynomial parse_polynomial_line(const std::string& text, const RingPtr& ring,
                                 int line);

/// Parses a generator list separated by commas or newlines. Blank segments
/// between newlines and lines starting with '#' are skipped.
std::vector<Polynomial> parse_polynomial_list(const std::string& text,
                                              const RingPtr& ring);

/// Parses a single monomial: one term whose coefficient is a nonzero rational
/// (the coefficient is discarded).
Monomial parse_monomial(const std::string& text, const RingPtr& ring);

std::vector<Monomial> parse_monomial_list(const std::string& text,
                                          const RingPtr& ring);

/// Parses a comma-separated variable header such as "x, y, z".
RingPtr parse_vars(const std::string& csv);

}  // namespace lefkit

#endif
