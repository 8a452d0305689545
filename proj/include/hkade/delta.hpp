#ifndef HKADE_DELTA_HPP
#define HKADE_DELTA_HPP

#include <array>
#include <optional>

#include "hkade/rational.hpp"

namespace hkade {

// Exact evaluation of the delta function (normalized syzygy gap of
// (X^a1, Y^a2, (X+Y)^a3), extended continuously to rational triples) and
// its weighted variant tau.

using Triple = std::array<Rational, 3>;

struct DistResult {
    Rational dist;
    std::array<Int, 3> corner; // a nearest odd-lattice corner
};

// Minimal taxicab distance from t to the odd lattice (integer points with
// odd coordinate sum), over the eight floor/ceil corners.
DistResult dist_to_odd_lattice(const Triple& t);

struct SBounds {
    long lower;
    long upper;
};

// lower: smallest L with p^L >= (3/2)*max(t).
// upper: one less than the first index at which the residue triple
// (num(t_i)*p^u mod 2*lcm(denominators)) repeats.
SBounds s_bounds(long p, const Triple& t);

struct DeltaResult {
    Rational value;
    std::optional<long> s;                       // scan witness, when used
    std::optional<std::array<Int, 3>> witness;   // nearest corner, when used
};

// Non-strict-triangle case: 2*max - sum. Otherwise scan s upward and return
// (1 - D)/p^s at the first s with D = dist(p^s * t) < 1, else 0. The scan
// floor is min(s_bounds.lower, smallest L with p^L > 2/(3*max(t))); the
// second bound is what makes the first hit the minimal s of the dichotomy.
DeltaResult delta(long p, const Triple& t);

// Weighted variant: tau(t) = a*c * delta(t1/c, t2/d, t3), for ac = bd.
Rational tau(long p, long a, long b, long c, long d, const Triple& t);

} // namespace hkade

#endif
