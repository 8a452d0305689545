#ifndef HKADE_HKM_HPP
#define HKADE_HKM_HPP

#include <array>

#include "hkade/delta.hpp"
#include "hkade/poly.hpp"

namespace hkade {

enum class TrinomialType { I, II };

// Canonicalized trinomial: row i of exp holds the exponents of monomial i
// in the (permuted) variables. Type I canonical form X^a1 Y^a2, Y^b2 Z^b3,
// X^c1 Z^c3; type II canonical form X^d, X^b1 Y^b2 Z^b3, Y^c2 Z^c3. The
// determinant of the column matrix is d*lambda with lambda > 0. `regular`
// marks a match that also satisfies the >d/2 entries of the two-family
// normal form.
struct TrinomialForm {
    std::array<std::array<long, 3>, 3> exp;
    long d = 0;
    Int lambda;
    TrinomialType kind = TrinomialType::I;
    bool regular = false;
    std::array<int, 3> monomial_perm{0, 1, 2}; // canonical row i = input row perm[i]
    std::array<int, 3> variable_perm{0, 1, 2}; // canonical col j = input col perm[j]
};

// Errors: InhomogeneousRows, Irregular (no pattern matches),
// DegenerateDeterminant (lambda = 0 under every matching orientation).
TrinomialForm classify_trinomial(const std::array<std::array<long, 3>, 3>& raw);

TrinomialForm classify_trinomial(const Poly<Int>& trinomial);

// 2(rs + rt + st) - r^2 - s^2 - t^2.
Rational qform(const Rational& r, const Rational& s, const Rational& t);

// The sign-split alpha/beta/gamma of the multiplicity formula, already
// combined per the trinomial type. t is in canonical variable order.
std::array<Rational, 3> abg(const TrinomialForm& form, const Triple& t);

struct HkmResult {
    Rational value;
    Int lambda;
    TrinomialType kind = TrinomialType::I;
    bool regular = false;
    Triple delta_args{Rational(0), Rational(0), Rational(0)};
    Rational delta_value;
};

// mu(t) = (d/4) Q(t) + (lambda^2 / 4d) * delta(alpha/l, beta/l, gamma/l)^2.
// t is given in the caller's variable order and permuted internally.
HkmResult hkm_standard(const TrinomialForm& form, long p, const Triple& t);

HkmResult hkm_standard(const Poly<Int>& trinomial, long p, const Triple& t);

// Quasi-homogeneous wrapper: substitute v -> v^w_v, classify, evaluate at
// t = weights, divide by the product of the weights.
HkmResult hkm_weighted(const std::vector<long>& weights, const Poly<Int>& trinomial, long p);

// k[U,V,W]/(U^d1 + V^d2 + W^d3).
Rational hkm_diagonal(long d1, long d2, long d3, long p);

// Binomial hypersurface X^d - Y1^a1 * ... * Yn^an: characteristic-free.
Rational hkm_binomial(long d, const std::vector<long>& a);

// Trinomial families with one exponent L growing; the limit is the HKM of
// an attached binomial hypersurface.
enum class FamilyKind { F1, FU, FV, FW };

struct FamilySpec {
    FamilyKind kind;
    // F1: U^L V^a2 + V^b2 W^b3 + U^c1 W^c3
    // FU: U^L + U^b1 V^b2 W^b3 + V^c2 W^c3
    // FV: U^a1 + U^b1 V^L W^b3 + V^c2 W^c3
    // FW: U^a1 + U^b1 V^b2 W^b3 + V^c2 W^L
    long a1 = 0, a2 = 0, b1 = 0, b2 = 0, b3 = 0, c1 = 0, c2 = 0, c3 = 0;

    static FamilySpec f1(long a2, long b2, long b3, long c1, long c3);
    static FamilySpec fu(long b1, long b2, long b3, long c2, long c3);
    static FamilySpec fv(long a1, long b1, long b3, long c2, long c3);
    static FamilySpec fw(long a1, long b1, long b2, long b3, long c2);
};

// Weights of the family member at parameter L (grading positivity checked).
std::array<long, 3> family_weights(const FamilySpec& fam, long L);

Poly<Int> family_trinomial(const FamilySpec& fam, long L);

HkmResult family_hkm(const FamilySpec& fam, long p, long L);

Rational family_limit(const FamilySpec& fam);

} // namespace hkade

#endif
