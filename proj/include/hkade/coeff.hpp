#ifndef HKADE_COEFF_HPP
#define HKADE_COEFF_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "hkade/rational.hpp"

namespace hkade {

// Prime field element, canonical representative in [0, p). A default
// constructed element is the neutral zero with unknown modulus; binary
// operations adopt the modulus of the other operand.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long v, uint32_t p) : p_(p) {
        long r = v % static_cast<long>(p);
        if (r < 0) r += p;
        v_ = static_cast<uint32_t>(r);
    }
    static Fp from_int(const Int& v, uint32_t p) {
        Int r = v % p;
        if (r < 0) r += p;
        return Fp(r.get_si(), p);
    }

    uint32_t value() const { return v_; }
    uint32_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        uint32_t p = a.join(b);
        if (p == 0) return Fp();
        return Fp((static_cast<uint64_t>(a.v_) + b.v_) % p, p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        uint32_t p = a.join(b);
        if (p == 0) return Fp();
        return Fp((static_cast<uint64_t>(a.v_) + p - b.v_) % p, p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        uint32_t p = a.join(b);
        if (p == 0) return Fp();
        return Fp((static_cast<uint64_t>(a.v_) * b.v_) % p, p);
    }
    Fp operator-() const { return p_ == 0 ? Fp() : Fp(p_ - v_, p_); }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }

    // Inversion by extended Euclid.
    Fp inverse() const {
        if (v_ == 0) throw domain_error("DivisionByZero", "inverse of 0 in F_p");
        int64_t t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            int64_t q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        if (t < 0) t += p_;
        return Fp(t, p_);
    }

private:
    static Fp make(uint64_t v, uint32_t p) { return Fp(static_cast<long>(v % p), p); }
    uint32_t join(const Fp& o) const {
        if (p_ != 0 && o.p_ != 0 && p_ != o.p_)
            throw domain_error("ModulusMismatch", "F_p elements from different fields");
        return p_ != 0 ? p_ : o.p_;
    }
    uint32_t v_;
    uint32_t p_;
};

inline bool coeff_is_zero(const Fp& a) { return a.is_zero(); }

// Smallest square root of -1 mod p (p prime), if any; exists iff p = 2 or
// p = 1 mod 4. Brute scan is fine at the primes used here.
inline std::optional<uint32_t> sqrt_minus_one(uint32_t p) {
    for (uint64_t x = 1; x < p; ++x)
        if ((x * x) % p == p - 1) return static_cast<uint32_t>(x);
    if (p == 2) return 1u;
    return std::nullopt;
}

// Gaussian integer a + b*i over arbitrary-precision integers.
struct GaussInt {
    Int re, im;

    GaussInt() : re(0), im(0) {}
    GaussInt(Int r) : re(std::move(r)), im(0) {}
    GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}
    static GaussInt unit_i() { return GaussInt(Int(0), Int(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    // Units of Z[i]: 1, -1, i, -i.
    bool is_unit() const {
        return (abs(re) == 1 && im == 0) || (re == 0 && abs(im) == 1);
    }

    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussInt operator-() const { return {-re, -im}; }
    friend bool operator==(const GaussInt& a, const GaussInt& b) {
        return a.re == b.re && a.im == b.im;
    }

    std::string str() const {
        if (im == 0) return re.get_str();
        std::string s;
        if (re != 0) s = re.get_str() + (im > 0 ? "+" : "");
        if (im == 1) s += "i";
        else if (im == -1) s += "-i";
        else s += im.get_str() + "*i";
        return s;
    }
};

inline bool coeff_is_zero(const GaussInt& a) { return a.is_zero(); }
inline bool coeff_is_zero(const Int& a) { return a == 0; }

} // namespace hkade

#endif
