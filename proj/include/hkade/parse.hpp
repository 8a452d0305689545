#ifndef HKADE_PARSE_HPP
#define HKADE_PARSE_HPP

#include <string>
#include <vector>

#include "hkade/poly.hpp"

namespace hkade {

// Polynomial text syntax: terms joined by + / -, monomials like 3*X^2*Y,
// the imaginary unit spelled i, parentheses with integer powers allowed,
// e.g. "(X+Y)^5".
Poly<GaussInt> parse_poly(const std::string& text, const std::vector<std::string>& names);

std::string poly_str(const Poly<GaussInt>& p, const std::vector<std::string>& names);
std::string poly_str(const Poly<Int>& p, const std::vector<std::string>& names);

// Comma-separated list of polynomials.
std::vector<Poly<GaussInt>> parse_poly_list(const std::string& text,
                                            const std::vector<std::string>& names);

} // namespace hkade

#endif
