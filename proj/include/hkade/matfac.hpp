#ifndef HKADE_MATFAC_HPP
#define HKADE_MATFAC_HPP

#include <string>
#include <vector>

#include "hkade/poly.hpp"

namespace hkade {

template <class C>
struct PolyMatrix {
    size_t n = 0;
    std::vector<Poly<C>> a; // row-major, n*n entries

    PolyMatrix() = default;
    PolyMatrix(size_t size, int nvars) : n(size), a(size * size, Poly<C>(nvars)) {}
    Poly<C>& at(size_t i, size_t j) { return a[i * n + j]; }
    const Poly<C>& at(size_t i, size_t j) const { return a[i * n + j]; }
};

template <class C>
struct MatFacT {
    PolyMatrix<C> phi, psi;
    Poly<C> f;
    int sign = 1; // phi * psi = sign * f * Id
};

using MatFac = MatFacT<GaussInt>;

struct VerifyResult {
    bool ok = true;
    std::string which;  // "phi*psi" or "psi*phi"
    size_t row = 0, col = 0;
};

template <class C>
PolyMatrix<C> mat_mul(const PolyMatrix<C>& a, const PolyMatrix<C>& b);

template <class C>
VerifyResult verify(const MatFacT<C>& mf);

template <class C>
MatFacT<C> transpose_dual(const MatFacT<C>& mf);

// Yoshino product: factorization of f + g of size 2nm; variable supports
// must be disjoint and the sign conventions equal.
template <class C>
MatFacT<C> tensor_hat(const MatFacT<C>& mf1, const MatFacT<C>& mf2);

// Split of (phi,phi) tensor (psi,psi) as (xi,zeta) + (zeta,xi) with
// xi = phi x Id - i (Id x psi); needs a square root of -1 in the domain.
template <class C>
std::pair<MatFacT<C>, MatFacT<C>> tensor_split(const MatFacT<C>& mf1, const MatFacT<C>& mf2,
                                               const C& imaginary_unit);

// Both commuting squares of the morphism diagram are checked.
template <class C>
bool verify_morphism(const PolyMatrix<C>& alpha, const PolyMatrix<C>& beta,
                     const MatFacT<C>& mf1, const MatFacT<C>& mf2);

template <class C>
Poly<C> mat_det(const PolyMatrix<C>& m);

// The exponent m with det(phi) = unit * f^m; errors when the determinant is
// not a unit multiple of a power of f.
long det_rank(const MatFac& mf);

struct CatalogEntry {
    std::string kind;
    long index = 0;
    MatFac mf;
    std::vector<std::string> ideal; // representative syzygy ideal generators
    long rank = 0;
    long dual_index = 0;
};

// Complete lists of reduced indecomposable matrix factorizations up to
// equivalence. A/D take the Dynkin index; the A-infinity, D-infinity and
// Fermat catalogs are parameterized (Z^n power resp. degree n).
std::vector<CatalogEntry> catalog_a(long n);
std::vector<CatalogEntry> catalog_d(long n);
std::vector<CatalogEntry> catalog_e6();
std::vector<CatalogEntry> catalog_e7();
std::vector<CatalogEntry> catalog_e8();
std::vector<CatalogEntry> catalog_a_inf(long n);
std::vector<CatalogEntry> catalog_d_inf(long n);
std::vector<CatalogEntry> catalog_fermat(long n);
std::vector<CatalogEntry> catalog(const std::string& kind, long n);

// The explicit rank-two split of the D4 factorization over a ground ring
// containing i: returns (alpha, beta, mf_source, mf_target) with
// mf_target = (phi1,phi1) + (phi2,phi2).
struct D4SplitData {
    PolyMatrix<GaussInt> alpha, beta;
    MatFac source, target;
};
D4SplitData d4_split_equivalence();

std::vector<std::string> matfac_variables();

extern template struct MatFacT<GaussInt>;
extern template struct MatFacT<Fp>;

} // namespace hkade

#endif
