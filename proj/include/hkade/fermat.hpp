#ifndef HKADE_FERMAT_HPP
#define HKADE_FERMAT_HPP

#include <optional>
#include <string>

#include "hkade/series.hpp"

namespace hkade {

// Frobenius analysis of the degree-n Fermat curve ring k[X,Y,Z]/(X^n+Y^n+Z^n)
// in characteristic p with gcd(p, n) = 1.

enum class Semistability { No, Yes, YesIfNotTrivialized };

Semistability is_strongly_semistable(long n, long p);

// Finite projective dimension of R/(X^N, Y^N, Z^N) (Kustin-Rahmati-Vraciu
// criterion); the odd-J search is bounded by p^(e-1) <= 3N/n + 1.
bool finite_projdim(long n, long p, const Int& N);

struct FermatClass {
    long n = 0;
    Int N;
    Int theta;
    long r = 0;        // N = n*theta + r, 1 <= r <= n-1
    long class_exp = 0; // r if theta even, n-r if theta odd
    Rational shift;    // Syz(X^N,..) = Syz(X^c,..)(shift)
};

// Class map for infinite projective dimension; errors when R/(X^N,...) has
// finite projective dimension (which requires the ambient p).
FermatClass fermat_syz_class(long n, long p, const Int& N);

// Hilbert series of Syz(X^c, Y^c, Z^c) over the Fermat ring at the working
// characteristic (both oracle primes equal p).
HilbertSeries fermat_rep_series(long n, long c, uint32_t p);

struct Periodicity {
    long s = 0;
    long t = 0;
};

// Minimal (s, t) with matching syzygy classes (confirmed by Hilbert-series
// fingerprints at characteristic p); absent when not strongly semistable.
std::optional<Periodicity> period(long n, long p);

struct HNData {
    long s = 0;               // first non-semistable Frobenius level
    long sub_degree = 0;      // twist of the destabilizing line bundle
    long quot_degree = 0;     // twist of the quotient line bundle
    long split_threshold = 0; // pull-backs split from e >= s + split_threshold
};

HNData hn_filtration(long n, long p);

struct FermatHkf {
    std::optional<Int> value;
    std::string branch; // "semistable", "split", "indeterminate:*"
};

// Closed-form Hilbert-Kunz value where the classification determines it;
// in the non-semistable gap the result is indeterminate and callers are
// expected to fall back to the oracle (fermat_hkf_oracle).
FermatHkf hkf_fermat(long n, long p, long e);

// Brute-force value via the degreewise oracle.
Int fermat_hkf_oracle(long n, long p, long e);

RingSpec fermat_ring_spec(long n);

// Eventual cycle length of the sequence p^s mod 2n (the multiplicative
// order when gcd(p, 2n) = 1); periodicity lengths are bounded by it.
long frobenius_order_bound(long n, long p);

} // namespace hkade

#endif
