#ifndef HKADE_SERIES_HPP
#define HKADE_SERIES_HPP

#include <map>
#include <set>
#include <vector>

#include "hkade/oracle.hpp"
#include "hkade/ring.hpp"

namespace hkade {

// Rational Hilbert series: integer Laurent numerator over a multiset of
// denominator factors (1 - t^a). Canonical form cancels common factors
// greedily from the largest a downward.
class HilbertSeries {
public:
    HilbertSeries() = default;
    HilbertSeries(std::map<long, Int> numerator, std::multiset<long> denom_factors);

    static HilbertSeries zero() { return HilbertSeries(); }
    static HilbertSeries polynomial(std::map<long, Int> numerator) {
        return HilbertSeries(std::move(numerator), {});
    }

    const std::map<long, Int>& numerator() const { return num_; }
    const std::multiset<long>& denominator_factors() const { return den_; }
    bool is_zero() const { return num_.empty(); }

    HilbertSeries shifted(long m) const;

    friend HilbertSeries operator+(const HilbertSeries& a, const HilbertSeries& b);
    friend HilbertSeries operator-(const HilbertSeries& a, const HilbertSeries& b);
    friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);

    // Multiply the numerator by an integer Laurent polynomial.
    HilbertSeries times(const std::map<long, Int>& poly) const;
    // Append a denominator factor (1 - t^a).
    HilbertSeries over(long a) const;

    Int numerator_at_one() const;

    // Power-series coefficients [0..upTo]. Errors if negative exponents
    // survive cancellation.
    std::vector<Int> expand(long up_to) const;

    std::string str() const;

private:
    void canonicalize();
    std::map<long, Int> num_;
    std::multiset<long> den_;
};

// The unique m with h2 = t^m * h1, if any. Decided by cross-multiplied
// numerators, so it is independent of the cancellation state.
std::optional<long> hs_equal_up_to_shift(const HilbertSeries& h1, const HilbertSeries& h2);

// (1 - t^dF) / prod_v (1 - t^(w_v)); no relation drops the numerator factor.
HilbertSeries hs_ring(const RingSpec& spec);

// (sum_i t^deg(F_i) - 1) * hs_ring + quotient Hilbert polynomial.
HilbertSeries hs_syz_direct(const RingSpec& spec, const std::vector<long>& gen_degrees,
                            const HilbertFn& quotient);

// Hilbert series of Syz(X^a V_1, ..., X^a V_m, V_{m+1}, ...) over
// k[X, Y1, Y2]/(X^d - F(Y1, Y2)); the distinguished variable is the first
// one of the spec, and the V_i are polynomials in the other two. The
// generator degrees of the middle syzygy modules are computed over F_p for
// two primes; a mismatch raises CharacteristicArtifact.
HilbertSeries hs_ma(const RingSpec& spec, long a, const std::vector<Poly<Int>>& vhead,
                    const std::vector<Poly<Int>>& vtail, uint32_t prime1 = 101,
                    uint32_t prime2 = 103);

// Generator-degree multisets of the two middle modules S_q, S_{q+1}; mostly
// a debugging/inspection surface for hs_ma.
struct MaParts {
    long q = 0;
    long r = 0;
    std::vector<long> sq_degrees;
    std::vector<long> sq1_degrees;
};
MaParts hs_ma_parts(const RingSpec& spec, long a, const std::vector<Poly<Int>>& vhead,
                    const std::vector<Poly<Int>>& vtail, uint32_t prime1 = 101,
                    uint32_t prime2 = 103);

} // namespace hkade

#endif
