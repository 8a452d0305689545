#include "hkade/delta.hpp"

#include <algorithm>
#include <vector>

namespace hkade {

namespace {

Rational rat_abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

void check_nonnegative(const Triple& t) {
    for (const auto& x : t)
        if (x < 0) throw domain_error("NegativeArgument", "triple components must be >= 0");
}

} // namespace

DistResult dist_to_odd_lattice(const Triple& t) {
    check_nonnegative(t);
    std::array<Int, 3> fl, ce;
    for (int i = 0; i < 3; ++i) {
        fl[i] = floor_rat(t[i]);
        ce[i] = ceil_rat(t[i]);
    }
    std::optional<DistResult> best;
    for (int mask = 0; mask < 8; ++mask) {
        std::array<Int, 3> u;
        for (int i = 0; i < 3; ++i) u[i] = (mask >> i & 1) ? ce[i] : fl[i];
        if (mpz_even_p(Int(u[0] + u[1] + u[2]).get_mpz_t())) continue;
        Rational d = 0;
        for (int i = 0; i < 3; ++i) d += rat_abs(t[i] - Rational(u[i]));
        if (!best || d < best->dist) best = DistResult{d, u};
    }
    return *best; // at least one corner parity is odd
}

SBounds s_bounds(long p, const Triple& t) {
    check_nonnegative(t);
    if (p < 2) throw domain_error("BadPrime", "p must be a prime >= 2");
    Rational m = *std::max_element(t.begin(), t.end());
    if (m == 0) throw domain_error("ZeroTriple", "all components are zero");

    Rational target = frac(3, 2) * m;
    long lower = 0;
    if (pow_signed(p, 0) >= target) {
        while (pow_signed(p, lower - 1) >= target) --lower;
    } else {
        while (pow_signed(p, lower) < target) ++lower;
    }

    Int lcm = 1;
    for (const auto& x : t)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    Int mod = 2 * lcm;
    std::vector<std::array<Int, 3>> seen;
    long u = 1;
    while (true) {
        std::array<Int, 3> res;
        for (int i = 0; i < 3; ++i)
            res[i] = Int(t[i].get_num() * pow_int(Int(p), static_cast<unsigned long>(u))) % mod;
        if (std::find(seen.begin(), seen.end(), res) != seen.end()) break;
        seen.push_back(res);
        ++u;
    }
    return {lower, u - 1};
}

DeltaResult delta(long p, const Triple& t) {
    check_nonnegative(t);
    if (p < 2) throw domain_error("BadPrime", "p must be a prime >= 2");
    Rational mx = *std::max_element(t.begin(), t.end());
    Rational sum = t[0] + t[1] + t[2];
    if (2 * mx >= sum) return {2 * mx - sum, std::nullopt, std::nullopt};

    // strict triangle from here on; all components positive
    SBounds b = s_bounds(p, t);
    long safe = 0;
    Rational floor_target = Rational(2) / (3 * mx);
    if (pow_signed(p, 0) > floor_target) {
        while (pow_signed(p, safe - 1) > floor_target) --safe;
    } else {
        while (!(pow_signed(p, safe) > floor_target)) ++safe;
    }
    long lo = std::min(b.lower, safe);

    for (long s = lo; s <= b.upper; ++s) {
        Rational scale = pow_signed(p, s);
        DistResult d = dist_to_odd_lattice({t[0] * scale, t[1] * scale, t[2] * scale});
        if (d.dist < 1) {
            Rational val = (1 - d.dist) / scale;
            return {val, s, d.corner};
        }
    }
    return {Rational(0), std::nullopt, std::nullopt};
}

Rational tau(long p, long a, long b, long c, long d, const Triple& t) {
    if (a < 1 || b < 1 || c < 1 || d < 1 || a * c != b * d)
        throw domain_error("BadTauParameters", "need positive a,b,c,d with a*c = b*d");
    Triple scaled{t[0] / c, t[1] / d, t[2]};
    return Rational(a) * Rational(c) * delta(p, scaled).value;
}

} // namespace hkade
