#include "hkade/hkm.hpp"

#include <algorithm>

namespace hkade {

namespace {

using Mat3 = std::array<std::array<long, 3>, 3>;

Int column_det(const Mat3& m) {
    // determinant of the matrix whose column j holds the exponents of
    // monomial j (transpose of the row layout; same determinant)
    Int r = 0;
    r += Int(m[0][0]) * (Int(m[1][1]) * m[2][2] - Int(m[1][2]) * m[2][1]);
    r -= Int(m[0][1]) * (Int(m[1][0]) * m[2][2] - Int(m[1][2]) * m[2][0]);
    r += Int(m[0][2]) * (Int(m[1][0]) * m[2][1] - Int(m[1][1]) * m[2][0]);
    return r;
}

bool shape_type1(const Mat3& m) {
    return m[0][2] == 0 && m[1][0] == 0 && m[2][1] == 0;
}
bool regular_type1(const Mat3& m, long d) {
    return shape_type1(m) && 2 * m[0][0] > d && 2 * m[1][1] > d && 2 * m[2][2] > d;
}
bool shape_type2(const Mat3& m, long d) {
    return m[0][0] == d && m[0][1] == 0 && m[0][2] == 0 && m[2][0] == 0;
}
bool regular_type2(const Mat3& m, long d) {
    return shape_type2(m, d) && 2 * m[1][1] > d && 2 * m[2][2] > d;
}

const std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

} // namespace

TrinomialForm classify_trinomial(const Mat3& raw) {
    long d = raw[0][0] + raw[0][1] + raw[0][2];
    for (const auto& row : raw) {
        for (long e : row)
            if (e < 0) throw domain_error("NegativeExponent", "exponents must be >= 0");
        if (row[0] + row[1] + row[2] != d)
            throw domain_error("InhomogeneousRows", "monomials have different degrees");
    }
    if (raw[0] == raw[1] || raw[0] == raw[2] || raw[1] == raw[2])
        throw domain_error("Irregular", "monomials must be distinct");
    if (d <= 0) throw domain_error("InhomogeneousRows", "degree must be positive");

    // a diagonal (three pure powers) is labelled type I; a trinomial with a
    // pure d-th power and a mixed monomial is labelled type II; both limbs
    // of the normal-form table give the same multiplicity where they overlap
    int pure = 0;
    for (const auto& row : raw) pure += (row[0] == d || row[1] == d || row[2] == d) ? 1 : 0;
    std::array<TrinomialType, 2> order = (pure == 3 || pure == 0)
                                             ? std::array{TrinomialType::I, TrinomialType::II}
                                             : std::array{TrinomialType::II, TrinomialType::I};

    bool degenerate_seen = false;
    auto scan = [&](TrinomialType want, bool need_regular) -> std::optional<TrinomialForm> {
        for (const auto& mp : kPerms) {
            for (const auto& vp : kPerms) {
                Mat3 m;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) m[i][j] = raw[mp[i]][vp[j]];
                bool shaped = (want == TrinomialType::I) ? shape_type1(m) : shape_type2(m, d);
                if (!shaped) continue;
                bool regular =
                    (want == TrinomialType::I) ? regular_type1(m, d) : regular_type2(m, d);
                if (need_regular && !regular) continue;
                Int det = column_det(m);
                if (det == 0) {
                    degenerate_seen = true;
                    continue;
                }
                if (det < 0) continue; // the mirrored permutation fixes the sign
                TrinomialForm f;
                f.exp = m;
                f.d = d;
                f.lambda = det / d;
                f.kind = want;
                f.regular = regular;
                f.monomial_perm = {mp[0], mp[1], mp[2]};
                f.variable_perm = {vp[0], vp[1], vp[2]};
                return f;
            }
        }
        return std::nullopt;
    };
    for (bool need_regular : {true, false})
        for (TrinomialType want : order)
            if (auto f = scan(want, need_regular)) return *f;
    if (degenerate_seen)
        throw domain_error("DegenerateDeterminant", "lambda = 0 for every matching orientation");
    throw domain_error("Irregular", "no monomial/variable permutation matches the normal forms");
}

TrinomialForm classify_trinomial(const Poly<Int>& trinomial) {
    if (trinomial.nvars() != 3 || trinomial.term_count() != 3)
        throw domain_error("Irregular", "expected a trinomial in three variables");
    Mat3 raw;
    int i = 0;
    for (const auto& [e, c] : trinomial.terms()) {
        for (int j = 0; j < 3; ++j) raw[i][j] = e[j];
        ++i;
    }
    return classify_trinomial(raw);
}

Rational qform(const Rational& r, const Rational& s, const Rational& t) {
    return 2 * (r * s + r * t + s * t) - r * r - s * s - t * t;
}

std::array<Rational, 3> abg(const TrinomialForm& form, const Triple& t) {
    for (const auto& x : t)
        if (x < 0) throw domain_error("NegativeArgument", "t components must be >= 0");
    const auto& m = form.exp;
    long d = form.d;
    Rational ap = t[0] * (d - m[1][2] - m[2][1]) - t[1] * m[2][0] - t[2] * m[1][0];
    Rational bp = t[1] * (d - m[2][0] - m[0][2]) - t[0] * m[2][1] - t[2] * m[0][1];
    Rational gp = t[2] * (d - m[0][1] - m[1][0]) - t[0] * m[1][2] - t[1] * m[0][2];
    auto pos = [](const Rational& x) { return x >= 0 ? x : Rational(0); };
    auto neg = [](const Rational& x) { return x < 0 ? Rational(-x) : Rational(0); };
    if (form.kind == TrinomialType::I)
        return {pos(ap) + neg(gp), pos(bp) + neg(ap), pos(gp) + neg(bp)};
    return {pos(ap) + neg(bp) + neg(gp), pos(bp), pos(gp) + neg(ap)};
}

HkmResult hkm_standard(const TrinomialForm& form, long p, const Triple& t) {
    Triple tc;
    for (int j = 0; j < 3; ++j) tc[j] = t[form.variable_perm[j]];
    auto [al, be, ga] = abg(form, tc);
    Rational lam(form.lambda);
    Triple args{al / lam, be / lam, ga / lam};
    DeltaResult dv = delta(p, args);
    HkmResult r;
    r.lambda = form.lambda;
    r.kind = form.kind;
    r.regular = form.regular;
    r.delta_args = args;
    r.delta_value = dv.value;
    r.value = frac(form.d, 4) * qform(tc[0], tc[1], tc[2]) +
              lam * lam / (4 * Rational(form.d)) * dv.value * dv.value;
    return r;
}

HkmResult hkm_standard(const Poly<Int>& trinomial, long p, const Triple& t) {
    return hkm_standard(classify_trinomial(trinomial), p, t);
}

HkmResult hkm_weighted(const std::vector<long>& weights, const Poly<Int>& trinomial, long p) {
    if (weights.size() != 3)
        throw domain_error("VariableCountMismatch", "three weights expected");
    if (!weighted_degree(trinomial, weights))
        throw domain_error("InhomogeneousRows",
                           "trinomial is not quasi-homogeneous for the given weights");
    std::vector<uint32_t> subst(weights.begin(), weights.end());
    Poly<Int> standard = substitute_powers(trinomial, subst);
    TrinomialForm form = classify_trinomial(standard);
    Triple t{Rational(weights[0]), Rational(weights[1]), Rational(weights[2])};
    HkmResult r = hkm_standard(form, p, t);
    r.value /= Rational(weights[0]) * weights[1] * weights[2];
    return r;
}

Rational hkm_diagonal(long d1, long d2, long d3, long p) {
    if (d1 < 2 || d2 < 2 || d3 < 2)
        throw domain_error("BadExponent", "diagonal exponents must be >= 2");
    Rational dv = delta(p, {frac(1, d1), frac(1, d2), frac(1, d3)}).value;
    Rational s = 2 * Rational(d1 + d2 + d3);
    s -= Rational(d1) * d2 / d3 + Rational(d1) * d3 / d2 + Rational(d2) * d3 / d1;
    s += Rational(d1) * d2 * d3 * dv * dv;
    return s / 4;
}

Rational hkm_binomial(long d, const std::vector<long>& a) {
    if (d < 2) throw domain_error("BadExponent", "d must be >= 2");
    long sum = 0;
    bool capped = false;
    for (long ai : a) {
        if (ai < 0) throw domain_error("BadExponent", "binomial exponents must be >= 0");
        if (ai >= d) capped = true;
        sum += ai;
    }
    if (sum <= 1) throw domain_error("BadExponent", "need sum of exponents > 1");
    if (capped) return Rational(d);
    Rational prod(1);
    for (long ai : a) prod *= frac(d - ai, d);
    return Rational(d) * (1 - prod);
}

FamilySpec FamilySpec::f1(long a2, long b2, long b3, long c1, long c3) {
    if (b2 <= a2 || c3 <= b3)
        throw domain_error("BadFamilyExponents", "F1 needs b2 > a2 and c3 > b3");
    FamilySpec f;
    f.kind = FamilyKind::F1;
    f.a2 = a2; f.b2 = b2; f.b3 = b3; f.c1 = c1; f.c3 = c3;
    return f;
}
FamilySpec FamilySpec::fu(long b1, long b2, long b3, long c2, long c3) {
    if (c3 <= b3 || b2 <= c2)
        throw domain_error("BadFamilyExponents", "FU needs c3 > b3 and b2 > c2");
    FamilySpec f;
    f.kind = FamilyKind::FU;
    f.b1 = b1; f.b2 = b2; f.b3 = b3; f.c2 = c2; f.c3 = c3;
    return f;
}
FamilySpec FamilySpec::fv(long a1, long b1, long b3, long c2, long c3) {
    if (a1 * c3 - a1 * b3 - b1 * c3 <= 0)
        throw domain_error("BadFamilyExponents", "FV needs a1*c3 > a1*b3 + b1*c3");
    FamilySpec f;
    f.kind = FamilyKind::FV;
    f.a1 = a1; f.b1 = b1; f.b3 = b3; f.c2 = c2; f.c3 = c3;
    return f;
}
FamilySpec FamilySpec::fw(long a1, long b1, long b2, long b3, long c2) {
    if (a1 <= b1 || b2 <= c2)
        throw domain_error("BadFamilyExponents", "FW needs a1 > b1 and b2 > c2");
    FamilySpec f;
    f.kind = FamilyKind::FW;
    f.a1 = a1; f.b1 = b1; f.b2 = b2; f.b3 = b3; f.c2 = c2;
    return f;
}

std::array<long, 3> family_weights(const FamilySpec& f, long L) {
    std::array<long, 3> w{};
    switch (f.kind) {
    case FamilyKind::F1:
        w = {f.b2 * f.c3 - f.a2 * f.c3 + f.a2 * f.b3,
             (f.c3 - f.b3) * L + f.b3 * f.c1,
             f.b2 * L - f.b2 * f.c1 + f.a2 * f.c1};
        break;
    case FamilyKind::FU:
        w = {f.b2 * f.c3 - f.b3 * f.c2,
             (f.c3 - f.b3) * L - f.c3 * f.b1,
             (f.b2 - f.c2) * L + f.b1 * f.c2};
        break;
    case FamilyKind::FV:
        w = {f.c3 * L - f.b3 * f.c2,
             f.a1 * f.c3 - f.a1 * f.b3 - f.b1 * f.c3,
             f.a1 * L - f.a1 * f.c2 + f.b1 * f.c2};
        break;
    case FamilyKind::FW:
        w = {f.b2 * L - f.b3 * f.c2,
             (f.a1 - f.b1) * L - f.a1 * f.b3,
             (f.b2 - f.c2) * f.a1 + f.b1 * f.c2};
        break;
    }
    if (w[0] < 1 || w[1] < 1 || w[2] < 1)
        throw domain_error("NonPositiveGrading",
                           "family grading is not positive at this L");
    return w;
}

Poly<Int> family_trinomial(const FamilySpec& f, long L) {
    auto mono = [](long u, long v, long w) {
        return Poly<Int>::monomial(3, {static_cast<uint32_t>(u), static_cast<uint32_t>(v),
                                       static_cast<uint32_t>(w)}, Int(1));
    };
    switch (f.kind) {
    case FamilyKind::F1:
        return mono(L, f.a2, 0) + mono(0, f.b2, f.b3) + mono(f.c1, 0, f.c3);
    case FamilyKind::FU:
        return mono(L, 0, 0) + mono(f.b1, f.b2, f.b3) + mono(0, f.c2, f.c3);
    case FamilyKind::FV:
        return mono(f.a1, 0, 0) + mono(f.b1, L, f.b3) + mono(0, f.c2, f.c3);
    case FamilyKind::FW:
        return mono(f.a1, 0, 0) + mono(f.b1, f.b2, f.b3) + mono(0, f.c2, L);
    }
    throw domain_error("BadFamilyExponents", "unknown family kind");
}

HkmResult family_hkm(const FamilySpec& f, long p, long L) {
    auto w = family_weights(f, L);
    return hkm_weighted({w[0], w[1], w[2]}, family_trinomial(f, L), p);
}

namespace {

// HKM of the split-off binomial: monomial factor multiplicity plus the
// binomial value; a linear binomial (d = 1) cuts out a regular ring.
Rational monomial_plus_binomial(long prefix, long d, std::vector<long> a) {
    if (d == 1) return Rational(prefix + 1);
    return Rational(prefix) + hkm_binomial(d, a);
}

} // namespace

Rational family_limit(const FamilySpec& f) {
    switch (f.kind) {
    case FamilyKind::F1: // W^b3 * (V^b2 + U^c1 W^(c3-b3))
        return monomial_plus_binomial(f.b3, f.b2, {f.c1, f.c3 - f.b3});
    case FamilyKind::FU: // V^c2 W^b3 * (U^b1 V^(b2-c2) + W^(c3-b3))
        return monomial_plus_binomial(f.c2 + f.b3, f.c3 - f.b3, {f.b1, f.b2 - f.c2});
    case FamilyKind::FV: // U^a1 + V^c2 W^c3
        return monomial_plus_binomial(0, f.a1, {f.c2, f.c3});
    case FamilyKind::FW: // U^b1 * (U^(a1-b1) + V^b2 W^b3)
        return monomial_plus_binomial(f.b1, f.a1 - f.b1, {f.b2, f.b3});
    }
    throw domain_error("BadFamilyExponents", "unknown family kind");
}

} // namespace hkade
