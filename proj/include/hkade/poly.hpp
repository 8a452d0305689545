#ifndef HKADE_POLY_HPP
#define HKADE_POLY_HPP

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "hkade/coeff.hpp"
#include "hkade/rational.hpp"

namespace hkade {

using Exponents = std::vector<uint32_t>;

// Graded-lex: total degree first, then lexicographic. All downstream
// matrices index rows/columns in this order.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        long da = std::accumulate(a.begin(), a.end(), 0L);
        long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db) return da < db;
        return a < b;
    }
};

// Sparse multivariate polynomial with a fixed variable count. Zero
// coefficients are never stored.
template <class C>
class Poly {
public:
    using TermMap = std::map<Exponents, C, GradedLexLess>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {}

    static Poly constant(int nvars, C c) {
        Poly p(nvars);
        p.add_term(Exponents(nvars, 0), std::move(c));
        return p;
    }
    static Poly monomial(int nvars, Exponents e, C c) {
        Poly p(nvars);
        p.add_term(std::move(e), std::move(c));
        return p;
    }
    static Poly variable(int nvars, int idx, uint32_t exp, C c) {
        Exponents e(nvars, 0);
        e[idx] = exp;
        return monomial(nvars, std::move(e), std::move(c));
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    void add_term(Exponents e, C c) {
        if (is_zero_coeff(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), std::move(c));
        } else {
            it->second = it->second + c;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(a.nvars_ ? a.nvars_ : b.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(ea);
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }
    Poly scaled(const C& c) const {
        Poly r(nvars_);
        for (const auto& [e, k] : terms_) r.add_term(e, k * c);
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) {
        return a.terms_ == b.terms_;
    }

    Poly pow(unsigned long n) const {
        Poly r = constant(nvars_, one_like());
        Poly base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

private:
    static bool is_zero_coeff(const C& c) { return coeff_is_zero(c); }
    C one_like() const {
        // For Fp the modulus is adopted from the operand during multiplication.
        if constexpr (std::is_same_v<C, Fp>) {
            for (const auto& [e, c] : terms_) return Fp(1, c.modulus());
            return Fp();
        } else {
            return C(1);
        }
    }

    int nvars_;
    TermMap terms_;
};

// Replaces each variable v by v^e[v].
template <class C>
Poly<C> substitute_powers(const Poly<C>& p, const std::vector<uint32_t>& exps) {
    if (static_cast<int>(exps.size()) != p.nvars())
        throw domain_error("VariableCountMismatch", "substitute_powers exponent list");
    Poly<C> r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents f(e);
        for (size_t i = 0; i < f.size(); ++i) f[i] *= exps[i];
        r.add_term(std::move(f), c);
    }
    return r;
}

template <class C>
long monomial_weighted_degree(const Exponents& e, const std::vector<long>& w) {
    long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * w[i];
    return d;
}

// Common weighted degree when homogeneous; absent for inhomogeneous input
// and for the zero polynomial (reported as undefined-zero at the CLI).
template <class C>
std::optional<long> weighted_degree(const Poly<C>& p, const std::vector<long>& w) {
    if (static_cast<int>(w.size()) != p.nvars())
        throw domain_error("VariableCountMismatch", "weighted_degree weight list");
    std::optional<long> deg;
    for (const auto& [e, c] : p.terms()) {
        long d = monomial_weighted_degree<C>(e, w);
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg;
}

// Coefficient conversions.
inline Poly<Fp> to_fp(const Poly<Int>& p, uint32_t prime) {
    Poly<Fp> r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, Fp::from_int(c, prime));
    return r;
}

inline Poly<Fp> to_fp(const Poly<GaussInt>& p, uint32_t prime) {
    std::optional<uint32_t> i;
    Poly<Fp> r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Fp v = Fp::from_int(c.re, prime);
        if (c.im != 0) {
            if (!i) {
                i = sqrt_minus_one(prime);
                if (!i)
                    throw domain_error("NoImaginaryUnit",
                                       "no square root of -1 mod " + std::to_string(prime));
            }
            v = v + Fp::from_int(c.im, prime) * Fp(*i, prime);
        }
        r.add_term(e, v);
    }
    return r;
}

inline Poly<Int> to_int(const Poly<GaussInt>& p) {
    Poly<Int> r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (c.im != 0)
            throw domain_error("NonRealCoefficient", "polynomial has imaginary part");
        r.add_term(e, c.re);
    }
    return r;
}

inline Poly<GaussInt> to_gauss(const Poly<Int>& p) {
    Poly<GaussInt> r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, GaussInt(c));
    return r;
}

} // namespace hkade

#endif
