#ifndef HKADE_ADE_HPP
#define HKADE_ADE_HPP

#include <string>
#include <vector>

#include "hkade/series.hpp"

namespace hkade {

// Surface-ring kinds: A(n) is the Dynkin label (ring U^(n+1) - VW with
// group order n+1), D(n) likewise (U^2 + V^(n-1) + VW^2, group order
// 4(n-2)), plus the degenerations and the Veronese example.
struct ADEKind {
    enum Tag { A, D, E6, E7, E8, AInf, DInf, Veronese } tag = A;
    long n = 0; // index for A/D/Veronese

    static ADEKind parse(const std::string& name, long n);
    std::string str() const;
    // n for A(n-1)-as-cyclic, 4n-8 for D(n), 24, 48, 120.
    std::optional<long> group_order() const;
};

// Weighted presentation used by the oracle cross-checks.
RingSpec ade_ring_spec(const ADEKind& kind);

// Hilbert-Kunz function value; exact, always a non-negative integer.
Int hkf(const ADEKind& kind, long p, long e);

// Generalized A-model value at arbitrary m >= 1 (any characteristic),
// on the X^(n+1) - YZ model.
Int hkf_gen_a(long n, long m);

// F-signature function (A, D, E6, E7, E8 only).
Rational fsig(const ADEKind& kind, long p, long e);

// n-th Veronese of k[X,Y]; needs gcd(p, n) = 1.
Int veronese_hkf(long n, long p, long e);

// Representative syzygy class of Syz(U^q, V^q, W^q) with its degree shift;
// in small characteristics the pull-backs split as two free summands.
struct SyzClassDescriptor {
    bool free = false;
    std::vector<std::string> ideal;   // representative generators (empty when free)
    Rational shift;                   // twist of the representative
    Rational free_shift_a, free_shift_b; // the two twists in the split case
    std::string branch;               // human-readable branch tag
};
SyzClassDescriptor syz_class(const ADEKind& kind, long p, long e);

// Hilbert-Kunz function of the E8 ring with respect to (X,Y,Z^2) for
// p >= 7, or (X,Y^2,YZ,Z^2) for p = 7 only.
enum class E8Ideal { XYZ2, XY2YZZ2 };
Int e8_ideal_hkf(E8Ideal ideal, long p, long e);

// Closed-form Hilbert series of the indecomposable non-free maximal
// Cohen-Macaulay modules (1-based index per kind); D-infinity families take
// the parameter through `n` of the kind; index semantics per kind:
//  A(n): 1..n; D(n): 1..n; E6/E7/E8: 1..6/7/8;
//  AInf: 1 = Syz(X), 2 = Syz(Y, Z^n); DInf: 1..4 per the catalog families.
HilbertSeries ade_module_series(const ADEKind& kind, long index);

// Ranks matching the series (numerator_at_one = 2 * rank for the ADE kinds).
long ade_module_rank(const ADEKind& kind, long index);

// Generators of the representative syzygy ideal, as text in the weighted
// presentation's variables; empty for indices only shipped as series
// fixtures is never the case - every index has a representative.
std::vector<std::string> ade_module_ideal(const ADEKind& kind, long index);

// True when the representative ideal is monomial, i.e. the series is also
// computable through the degreewise recursion (hs_ma).
bool ade_module_is_monomial(const ADEKind& kind, long index);

// Series of the representative via the recursion (monomial indices only).
HilbertSeries ade_module_series_computed(const ADEKind& kind, long index,
                                         uint32_t prime1 = 101, uint32_t prime2 = 103);

} // namespace hkade

#endif
