#include "hkade/matfac.hpp"

#include <algorithm>
#include <bit>

#include "hkade/parse.hpp"

namespace hkade {

namespace {

const std::vector<std::string> kVars{"X", "Y", "Z"};

Poly<GaussInt> P(const std::string& s) { return parse_poly(s, kVars); }

PolyMatrix<GaussInt> M(const std::vector<std::vector<std::string>>& rows) {
    PolyMatrix<GaussInt> m(rows.size(), 3);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
            throw domain_error("SizeMismatch", "matrix rows must be square");
        for (size_t j = 0; j < rows.size(); ++j) m.at(i, j) = P(rows[i][j]);
    }
    return m;
}

std::string pw(const std::string& v, long e) {
    if (e == 0) return "1";
    if (e == 1) return v;
    return v + "^" + std::to_string(e);
}

MatFac make_mf(PolyMatrix<GaussInt> phi, PolyMatrix<GaussInt> psi, Poly<GaussInt> f,
               int sign = 1) {
    MatFac mf{std::move(phi), std::move(psi), std::move(f), sign};
    VerifyResult v = verify(mf);
    if (!v.ok)
        throw domain_error("BadFactorization", "catalog entry fails verification at " + v.which +
                                                   "[" + std::to_string(v.row) + "][" +
                                                   std::to_string(v.col) + "]");
    return mf;
}

CatalogEntry entry(std::string kind, long index, MatFac mf, std::vector<std::string> ideal,
                   long rank, long dual) {
    return CatalogEntry{std::move(kind), index, std::move(mf), std::move(ideal), rank, dual};
}

} // namespace

std::vector<std::string> matfac_variables() { return kVars; }

template <class C>
PolyMatrix<C> mat_mul(const PolyMatrix<C>& a, const PolyMatrix<C>& b) {
    if (a.n != b.n) throw domain_error("SizeMismatch", "matrix sizes differ");
    int nv = 0;
    for (const auto& p : a.a)
        if (p.nvars()) nv = p.nvars();
    PolyMatrix<C> r(a.n, nv);
    for (size_t i = 0; i < a.n; ++i)
        for (size_t j = 0; j < a.n; ++j) {
            Poly<C> s(nv);
            for (size_t k = 0; k < a.n; ++k) s = s + a.at(i, k) * b.at(k, j);
            r.at(i, j) = std::move(s);
        }
    return r;
}

template <class C>
VerifyResult verify(const MatFacT<C>& mf) {
    if (mf.phi.n != mf.psi.n) throw domain_error("SizeMismatch", "phi and psi sizes differ");
    Poly<C> target = mf.sign >= 0 ? mf.f : -mf.f;
    auto check = [&](const PolyMatrix<C>& prod, const char* which) {
        for (size_t i = 0; i < prod.n; ++i)
            for (size_t j = 0; j < prod.n; ++j) {
                const Poly<C>& want = (i == j) ? target : Poly<C>(prod.at(i, j).nvars());
                if (!(prod.at(i, j) == want)) return VerifyResult{false, which, i, j};
            }
        return VerifyResult{};
    };
    VerifyResult r = check(mat_mul(mf.phi, mf.psi), "phi*psi");
    if (!r.ok) return r;
    return check(mat_mul(mf.psi, mf.phi), "psi*phi");
}

template <class C>
MatFacT<C> transpose_dual(const MatFacT<C>& mf) {
    MatFacT<C> r = mf;
    for (size_t i = 0; i < mf.phi.n; ++i)
        for (size_t j = 0; j < mf.phi.n; ++j) {
            r.phi.at(i, j) = mf.phi.at(j, i);
            r.psi.at(i, j) = mf.psi.at(j, i);
        }
    return r;
}

namespace {

template <class C>
bool uses_variable(const Poly<C>& p, int v) {
    for (const auto& [e, c] : p.terms())
        if (e[static_cast<size_t>(v)] != 0) return true;
    return false;
}

// Kronecker block helpers on flattened PolyMatrix.
template <class C>
PolyMatrix<C> kron_left(const PolyMatrix<C>& a, size_t m, int nv) {
    // a x Id_m
    PolyMatrix<C> r(a.n * m, nv);
    for (size_t i = 0; i < a.n; ++i)
        for (size_t j = 0; j < a.n; ++j)
            for (size_t k = 0; k < m; ++k) r.at(i * m + k, j * m + k) = a.at(i, j);
    return r;
}

template <class C>
PolyMatrix<C> kron_right(size_t n, const PolyMatrix<C>& b, int nv) {
    // Id_n x b
    PolyMatrix<C> r(n * b.n, nv);
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < b.n; ++i)
            for (size_t j = 0; j < b.n; ++j) r.at(k * b.n + i, k * b.n + j) = b.at(i, j);
    return r;
}

template <class C>
PolyMatrix<C> blocks2x2(const PolyMatrix<C>& a, const PolyMatrix<C>& b, const PolyMatrix<C>& c,
                        const PolyMatrix<C>& d, int nv) {
    size_t n = a.n;
    PolyMatrix<C> r(2 * n, nv);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            r.at(i, j) = a.at(i, j);
            r.at(i, n + j) = b.at(i, j);
            r.at(n + i, j) = c.at(i, j);
            r.at(n + i, n + j) = d.at(i, j);
        }
    return r;
}

template <class C>
PolyMatrix<C> negated(PolyMatrix<C> m) {
    for (auto& p : m.a) p = -p;
    return m;
}

} // namespace

template <class C>
MatFacT<C> tensor_hat(const MatFacT<C>& mf1, const MatFacT<C>& mf2) {
    int nv = mf1.f.nvars();
    if (nv != mf2.f.nvars())
        throw domain_error("VariableCountMismatch", "factors live in different ambient rings");
    if (mf1.sign != mf2.sign)
        throw domain_error("SignMismatch", "factors carry different sign conventions");
    for (int v = 0; v < nv; ++v)
        if (uses_variable(mf1.f, v) && uses_variable(mf2.f, v))
            throw domain_error("OverlappingVariables",
                               "tensor factors must use disjoint variables");
    size_t n = mf1.phi.n, m = mf2.phi.n;
    MatFacT<C> r;
    r.f = mf1.f + mf2.f;
    r.sign = mf1.sign;
    r.phi = blocks2x2(kron_left(mf1.phi, m, nv), kron_right(n, mf2.phi, nv),
                      negated(kron_right(n, mf2.psi, nv)), kron_left(mf1.psi, m, nv), nv);
    r.psi = blocks2x2(kron_left(mf1.psi, m, nv), negated(kron_right(n, mf2.phi, nv)),
                      kron_right(n, mf2.psi, nv), kron_left(mf1.phi, m, nv), nv);
    VerifyResult v = verify(r);
    if (!v.ok) throw domain_error("BadFactorization", "tensor product fails verification");
    return r;
}

template <class C>
std::pair<MatFacT<C>, MatFacT<C>> tensor_split(const MatFacT<C>& mf1, const MatFacT<C>& mf2,
                                               const C& imaginary_unit) {
    if (!(mf1.phi.a == mf1.psi.a) || !(mf2.phi.a == mf2.psi.a))
        throw domain_error("NotSelfPaired", "tensor_split needs factorizations (phi,phi), (psi,psi)");
    if (mf1.sign != mf2.sign)
        throw domain_error("SignMismatch", "factors carry different sign conventions");
    int nv = mf1.f.nvars();
    size_t n = mf1.phi.n, m = mf2.phi.n;
    PolyMatrix<C> left = kron_left(mf1.phi, m, nv);
    PolyMatrix<C> right = kron_right(n, mf2.phi, nv);
    Poly<C> ic = Poly<C>::constant(nv, imaginary_unit);
    PolyMatrix<C> xi(n * m, nv), zeta(n * m, nv);
    for (size_t k = 0; k < n * m * n * m; ++k) {
        xi.a[k] = left.a[k] - ic * right.a[k];
        zeta.a[k] = left.a[k] + ic * right.a[k];
    }
    MatFacT<C> first{xi, zeta, mf1.f + mf2.f, mf1.sign};
    MatFacT<C> second{zeta, xi, mf1.f + mf2.f, mf1.sign};
    if (!verify(first).ok || !verify(second).ok)
        throw domain_error("NoImaginaryUnit", "split outputs do not verify; is i^2 = -1?");
    return {first, second};
}

template <class C>
bool verify_morphism(const PolyMatrix<C>& alpha, const PolyMatrix<C>& beta,
                     const MatFacT<C>& mf1, const MatFacT<C>& mf2) {
    if (alpha.n != mf2.phi.n || beta.n != mf2.phi.n || mf1.phi.n != mf2.phi.n)
        throw domain_error("SizeMismatch", "morphism matrices do not fit");
    PolyMatrix<C> l1 = mat_mul(alpha, mf1.phi);
    PolyMatrix<C> r1 = mat_mul(mf2.phi, beta);
    PolyMatrix<C> l2 = mat_mul(beta, mf1.psi);
    PolyMatrix<C> r2 = mat_mul(mf2.psi, alpha);
    for (size_t i = 0; i < alpha.n; ++i)
        for (size_t j = 0; j < alpha.n; ++j)
            if (!(l1.at(i, j) == r1.at(i, j)) || !(l2.at(i, j) == r2.at(i, j))) return false;
    return true;
}

template <class C>
Poly<C> mat_det(const PolyMatrix<C>& m) {
    // column-subset dynamic program, division free
    size_t n = m.n;
    if (n == 0) throw domain_error("SizeMismatch", "empty matrix");
    int nv = 0;
    for (const auto& p : m.a)
        if (p.nvars()) nv = p.nvars();
    std::vector<Poly<C>> dp(size_t(1) << n, Poly<C>(nv));
    for (size_t j = 0; j < n; ++j) dp[size_t(1) << j] = m.at(0, j);
    for (size_t i = 1; i < n; ++i) {
        std::vector<Poly<C>> next(size_t(1) << n, Poly<C>(nv));
        for (size_t s = 0; s < (size_t(1) << n); ++s) {
            if (std::popcount(static_cast<unsigned long long>(s)) != static_cast<int>(i) ||
                dp[s].is_zero())
                continue;
            for (size_t j = 0; j < n; ++j) {
                if (s >> j & 1) continue;
                if (m.at(i, j).is_zero()) continue;
                Poly<C> term = dp[s] * m.at(i, j);
                // parity of used columns below j gives the cofactor sign
                int below = std::popcount(static_cast<unsigned long long>(s & ((size_t(1) << j) - 1)));
                if (below % 2 == 1) term = -term;
                next[s | (size_t(1) << j)] = next[s | (size_t(1) << j)] + term;
            }
        }
        dp = std::move(next);
    }
    return dp[(size_t(1) << n) - 1];
}

namespace {

// Exact division of Gaussian-integer coefficients; nullopt when not exact.
std::optional<GaussInt> gauss_exact_div(const GaussInt& a, const GaussInt& b) {
    Int norm = b.re * b.re + b.im * b.im;
    if (norm == 0) return std::nullopt;
    GaussInt num = a * GaussInt(b.re, -b.im);
    if (num.re % norm != 0 || num.im % norm != 0) return std::nullopt;
    return GaussInt(num.re / norm, num.im / norm);
}

// Exact polynomial division (graded-lex leading-term recurrence); nullopt
// when the division is not exact.
std::optional<Poly<GaussInt>> poly_exact_div(Poly<GaussInt> dividend,
                                             const Poly<GaussInt>& divisor) {
    if (divisor.is_zero()) return std::nullopt;
    auto lead = [](const Poly<GaussInt>& p) { return std::prev(p.terms().end()); };
    auto dlt = lead(divisor);
    Poly<GaussInt> q(dividend.nvars());
    while (!dividend.is_zero()) {
        auto lt = lead(dividend);
        Exponents e = lt->first;
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] < dlt->first[k]) return std::nullopt;
            e[k] -= dlt->first[k];
        }
        auto c = gauss_exact_div(lt->second, dlt->second);
        if (!c) return std::nullopt;
        Poly<GaussInt> term = Poly<GaussInt>::monomial(dividend.nvars(), e, *c);
        q = q + term;
        dividend = dividend - term * divisor;
    }
    return q;
}

} // namespace

long det_rank(const MatFac& mf) {
    Poly<GaussInt> d = mat_det(mf.phi);
    if (d.is_zero())
        throw domain_error("NotUnitTimesPower", "determinant vanishes");
    long m = 0;
    while (true) {
        if (d.term_count() == 1) {
            const auto& [e, c] = *d.terms().begin();
            bool constant = true;
            for (uint32_t x : e) constant = constant && x == 0;
            if (constant && c.is_unit()) return m;
        }
        auto q = poly_exact_div(d, mf.f);
        if (!q)
            throw domain_error("NotUnitTimesPower",
                               "determinant is not a unit multiple of a power of f");
        d = std::move(*q);
        ++m;
    }
}

std::vector<CatalogEntry> catalog_a(long n) {
    if (n < 1) throw domain_error("BadIndex", "A catalog needs n >= 1");
    Poly<GaussInt> f = P("X^" + std::to_string(n + 1) + "+Y*Z");
    std::vector<CatalogEntry> out;
    for (long m = 1; m <= n; ++m) {
        std::string xm = pw("X", m), xc = pw("X", n + 1 - m);
        MatFac mf = make_mf(M({{"Y", xc}, {xm, "-Z"}}), M({{"Z", xc}, {xm, "-Y"}}), f);
        out.push_back(entry("A", m, std::move(mf), {xm, "Z"}, 1, n + 1 - m));
    }
    return out;
}

std::vector<CatalogEntry> catalog_d(long n) {
    if (n < 4) throw domain_error("BadIndex", "D catalog needs n >= 4");
    Poly<GaussInt> f = P("X^2+Y^" + std::to_string(n - 1) + "+Y*Z^2");
    std::vector<CatalogEntry> out;
    out.push_back(entry("D", 1,
                        make_mf(M({{"X", pw("Y", n - 2) + "+Z^2"}, {"Y", "-X"}}),
                                M({{"X", pw("Y", n - 2) + "+Z^2"}, {"Y", "-X"}}), f),
                        {"X", "Y"}, 1, 1));
    for (long m = 2; m <= n - 2; ++m) {
        PolyMatrix<GaussInt> phi;
        std::vector<std::string> ideal;
        if (m % 2 == 0) {
            std::string ym = pw("Y", m / 2), yc = pw("Y", n - 1 - m / 2);
            phi = M({{"-X", "0", "Y*Z", ym},
                     {"0", "-X", yc, "-Z"},
                     {"Z", ym, "X", "0"},
                     {yc, "-Y*Z", "0", "X"}});
            ideal = {"X", ym, "Z"};
        } else {
            std::string ya = pw("Y", (m - 1) / 2), yb = pw("Y", n - 1 - (m - 1) / 2);
            std::string yc = pw("Y", n - 2 - (m - 1) / 2), yd = pw("Y", (m + 1) / 2);
            phi = M({{"-X", yb, "Y*Z", "0"},
                     {ya, "X", "0", "-Z"},
                     {"Z", "0", "X", yc},
                     {"0", "-Y*Z", yd, "-X"}});
            ideal = {"X", yd, "Y*Z"};
        }
        out.push_back(entry("D", m, make_mf(phi, phi, f), std::move(ideal), 2, m));
    }
    bool even = (n % 2 == 0);
    std::string h = std::to_string((even ? n - 2 : n - 1) / 2);
    if (even) {
        MatFac m1 = make_mf(M({{"X", "Y*(i*Y^" + h + "+Z)"}, {"Z-i*Y^" + h, "-X"}}),
                            M({{"X", "Y*(i*Y^" + h + "+Z)"}, {"Z-i*Y^" + h, "-X"}}), f);
        MatFac m2 = make_mf(M({{"X", "Y*(-i*Y^" + h + "+Z)"}, {"Z+i*Y^" + h, "-X"}}),
                            M({{"X", "Y*(-i*Y^" + h + "+Z)"}, {"Z+i*Y^" + h, "-X"}}), f);
        out.push_back(entry("D", n - 1, std::move(m1), {"X", "Z-i*Y^" + h}, 1, n - 1));
        out.push_back(entry("D", n, std::move(m2), {"X", "Z+i*Y^" + h}, 1, n));
    } else {
        PolyMatrix<GaussInt> a = M({{"X+i*Y^" + h, "Y*Z"}, {"Z", "-X+i*Y^" + h}});
        PolyMatrix<GaussInt> b = M({{"X-i*Y^" + h, "Y*Z"}, {"Z", "-X-i*Y^" + h}});
        out.push_back(entry("D", n - 1, make_mf(a, b, f), {"Z", "X+i*Y^" + h}, 1, n));
        out.push_back(entry("D", n, make_mf(b, a, f), {"Z", "X-i*Y^" + h}, 1, n - 1));
    }
    return out;
}

std::vector<CatalogEntry> catalog_e6() {
    Poly<GaussInt> f = P("X^2+Y^3+Z^4");
    std::vector<CatalogEntry> out;
    PolyMatrix<GaussInt> phi1 = M({{"-X", "0", "Y^2", "Z^3"},
                                   {"0", "-X", "Z", "-Y"},
                                   {"Y", "Z^3", "X", "0"},
                                   {"Z", "-Y^2", "0", "X"}});
    out.push_back(entry("E6", 1, make_mf(phi1, phi1, f), {"X", "Y", "Z"}, 2, 1));

    PolyMatrix<GaussInt> phi2 = M({{"-i*X", "-Z^2", "Y*Z", "0", "Y^2", "0"},
                                   {"-Z^2", "-i*X", "0", "0", "0", "Y"},
                                   {"0", "0", "-i*X", "-Y", "0", "Z"},
                                   {"0", "Y*Z", "-Y^2", "-i*X", "Z^3", "0"},
                                   {"Y", "0", "0", "Z", "-i*X", "0"},
                                   {"0", "Y^2", "Z^3", "0", "Y*Z^2", "-i*X"}});
    PolyMatrix<GaussInt> psi2 = M({{"i*X", "-Z^2", "Y*Z", "0", "Y^2", "0"},
                                   {"-Z^2", "i*X", "0", "0", "0", "Y"},
                                   {"0", "0", "i*X", "-Y", "0", "Z"},
                                   {"0", "Y*Z", "-Y^2", "i*X", "Z^3", "0"},
                                   {"Y", "0", "0", "Z", "i*X", "0"},
                                   {"0", "Y^2", "Z^3", "0", "Y*Z^2", "i*X"}});
    out.push_back(entry("E6", 2, make_mf(phi2, psi2, f), {"X", "Y^2", "Y*Z", "Z^2"}, 3, 2));

    PolyMatrix<GaussInt> phi3 = M({{"-Z^2+i*X", "0", "Y*Z", "Y"},
                                   {"-Y*Z", "Z^2+i*X", "Y^2", "0"},
                                   {"0", "Y", "i*X", "Z"},
                                   {"Y^2", "-Y*Z", "Z^3", "i*X"}});
    PolyMatrix<GaussInt> phi4 = M({{"-Z^2-i*X", "0", "Y*Z", "Y"},
                                   {"-Y*Z", "Z^2-i*X", "Y^2", "0"},
                                   {"0", "Y", "-i*X", "Z"},
                                   {"Y^2", "-Y*Z", "Z^3", "-i*X"}});
    out.push_back(entry("E6", 3, make_mf(phi3, phi4, f), {"i*X+Z^2", "Y^2", "Y*Z"}, 2, 4));
    out.push_back(entry("E6", 4, make_mf(phi4, phi3, f), {"-i*X+Z^2", "Y^2", "Y*Z"}, 2, 3));

    PolyMatrix<GaussInt> phi5 = M({{"-Z^2+i*X", "Y"}, {"Y^2", "Z^2+i*X"}});
    PolyMatrix<GaussInt> phi6 = M({{"-Z^2-i*X", "Y"}, {"Y^2", "Z^2-i*X"}});
    out.push_back(entry("E6", 5, make_mf(phi5, phi6, f), {"-i*X+Z^2", "Y"}, 1, 6));
    out.push_back(entry("E6", 6, make_mf(phi6, phi5, f), {"i*X+Z^2", "Y"}, 1, 5));
    return out;
}

std::vector<CatalogEntry> catalog_e7() {
    Poly<GaussInt> f = P("X^2+Y^3+Y*Z^3");
    std::vector<CatalogEntry> out;
    auto self = [&](long idx, const std::vector<std::vector<std::string>>& rows,
                    std::vector<std::string> ideal, long rank) {
        PolyMatrix<GaussInt> phi = M(rows);
        out.push_back(entry("E7", idx, make_mf(phi, phi, f), std::move(ideal), rank, idx));
    };
    self(1,
         {{"X", "0", "-Y^2", "Z"},
          {"0", "X", "Y*Z^2", "Y"},
          {"-Y", "Z", "-X", "0"},
          {"Y*Z^2", "Y^2", "0", "-X"}},
         {"X", "Y", "Z"}, 2);
    self(2,
         {{"-X", "Z^2", "Y*Z", "0", "Y^2", "0"},
          {"Y*Z", "X", "0", "0", "0", "-Y"},
          {"0", "0", "X", "-Y", "0", "Z"},
          {"0", "-Y*Z", "-Y^2", "-X", "Y*Z^2", "0"},
          {"Y", "0", "0", "Z", "X", "0"},
          {"0", "-Y^2", "Y*Z^2", "0", "Y^2*Z", "-X"}},
         {"X", "Y^2", "Y*Z", "Z^2"}, 3);
    self(3,
         {{"-X", "0", "Y*Z", "-Z^2", "0", "0", "Y^2", "0"},
          {"0", "-X", "0", "Z^2", "0", "0", "0", "Y"},
          {"Z^2", "Z^2", "X", "0", "0", "-Y", "0", "0"},
          {"0", "Y*Z", "0", "X", "-Y^2", "0", "0", "0"},
          {"0", "0", "0", "-Y", "-X", "0", "0", "Z"},
          {"0", "0", "-Y^2", "0", "0", "-X", "Y*Z^2", "Z^2"},
          {"Y", "0", "0", "0", "-Z^2", "Z", "X", "0"},
          {"0", "Y^2", "0", "0", "Y*Z^2", "0", "0", "X"}},
         {"X*Y", "X*Z", "Y^2", "Y*Z^2", "Z^3"}, 4);
    self(4,
         {{"-X", "Z^2", "0", "Y"},
          {"Y*Z", "X", "-Y^2", "0"},
          {"0", "-Y", "-X", "Z"},
          {"Y^2", "0", "Y*Z^2", "X"}},
         {"X", "Y^2", "Y*Z"}, 2);
    self(5,
         {{"-X", "0", "Y*Z", "0", "0", "Y"},
          {"-Y*Z", "X", "0", "-Z^2", "-Y^2", "0"},
          {"Z^2", "0", "X", "-Y", "Y*Z", "0"},
          {"0", "-Y*Z", "-Y^2", "-X", "0", "0"},
          {"0", "-Y", "0", "0", "-X", "-Z"},
          {"Y^2", "0", "0", "Y*Z", "-Y*Z^2", "X"}},
         {"X*Y", "X*Z", "Y^2", "Y*Z^2"}, 3);
    self(6,
         {{"X", "0", "-Y*Z", "Y"},
          {"0", "X", "Y^2", "Z^2"},
          {"-Z^2", "Y", "-X", "0"},
          {"Y^2", "Y*Z", "0", "-X"}},
         {"X", "Y", "Z^2"}, 2);
    self(7, {{"X", "Y"}, {"Y^2+Z^3", "-X"}}, {"X", "Y"}, 1);
    return out;
}

std::vector<CatalogEntry> catalog_e8() {
    Poly<GaussInt> f = P("X^2+Y^3+Z^5");
    std::vector<CatalogEntry> out;
    auto self = [&](long idx, const std::vector<std::vector<std::string>>& rows,
                    std::vector<std::string> ideal, long rank) {
        PolyMatrix<GaussInt> phi = M(rows);
        out.push_back(entry("E8", idx, make_mf(phi, phi, f), std::move(ideal), rank, idx));
    };
    self(1,
         {{"X", "0", "Y", "Z"},
          {"0", "X", "Z^4", "-Y^2"},
          {"Y^2", "Z", "-X", "0"},
          {"Z^4", "-Y", "0", "-X"}},
         {"X", "Y", "Z"}, 2);
    self(2,
         {{"X", "-Z^2", "Y*Z", "0", "-Y^2", "0"},
          {"-Z^3", "-X", "0", "0", "0", "Y"},
          {"0", "0", "-X", "Y", "0", "Z"},
          {"0", "-Y*Z", "Y^2", "X", "Z^4", "0"},
          {"-Y", "0", "0", "Z", "-X", "0"},
          {"0", "Y^2", "Z^4", "0", "-Y*Z^3", "X"}},
         {"X", "Y^2", "Y*Z", "Z^2"}, 3);
    self(3,
         {{"-X", "0", "-Y*Z", "Z^2", "0", "0", "Y^2", "0"},
          {"0", "-X", "Z^3", "0", "0", "0", "0", "Y"},
          {"0", "Z^2", "X", "0", "0", "-Y", "0", "0"},
          {"Z^3", "Y*Z", "0", "X", "-Y^2", "0", "0", "0"},
          {"0", "0", "0", "-Y", "-X", "0", "Z^3", "Z"},
          {"0", "0", "-Y^2", "0", "0", "-X", "0", "Z^2"},
          {"Y", "0", "0", "0", "Z^2", "-Z", "X", "0"},
          {"0", "Y^2", "0", "0", "0", "Z^3", "0", "X"}},
         {"X*Y", "X*Z", "Y^2", "Y*Z^2", "Z^3"}, 4);
    self(4,
         {{"X", "0", "Y*Z", "0", "0", "-Z^2", "Z^3", "0", "-Y^2", "0"},
          {"0", "-X", "0", "0", "0", "0", "0", "-Z^2", "0", "Y"},
          {"0", "0", "-X", "Z^2", "0", "0", "0", "Y", "0", "0"},
          {"0", "Y*Z", "Z^3", "X", "0", "0", "-Y^2", "0", "0", "0"},
          {"0", "Z^2", "0", "0", "X", "-Y", "0", "0", "Z^3", "0"},
          {"-Z^3", "0", "0", "0", "-Y^2", "-X", "0", "0", "0", "Z^2"},
          {"0", "0", "0", "-Y", "0", "0", "-X", "0", "0", "Z"},
          {"0", "-Z^3", "Y^2", "0", "0", "0", "Y*Z^2", "X", "0", "0"},
          {"-Y", "0", "0", "0", "Z^2", "0", "0", "Z", "-X", "0"},
          {"0", "Y^2", "Y*Z^2", "0", "0", "0", "Z^4", "0", "0", "X"}},
         {"X*Y", "X*Z^2", "Y^3", "Y^2*Z", "Y*Z^3", "Z^4"}, 5);
    self(5,
         {{"-X", "0", "0", "0", "0", "0", "0", "Z^2", "0", "0", "0", "Y"},
          {"0", "-X", "-Y*Z", "0", "0", "0", "Z^3", "-Z^2", "0", "0", "Y^2", "0"},
          {"0", "0", "X", "0", "0", "-Z^2", "0", "0", "Z^3", "-Y", "0", "0"},
          {"Y*Z", "0", "0", "X", "-Z^3", "0", "0", "0", "-Y^2", "0", "0", "0"},
          {"0", "0", "0", "-Z^2", "-X", "0", "0", "Y", "0", "0", "0", "0"},
          {"0", "0", "-Z^3", "0", "0", "-X", "-Y^2", "0", "0", "0", "Y*Z^2", "Z^2"},
          {"Z^2", "Z^2", "0", "0", "0", "-Y", "X", "0", "0", "0", "0", "0"},
          {"Z^3", "0", "0", "0", "Y^2", "0", "0", "X", "-Y*Z^2", "0", "0", "0"},
          {"0", "0", "0", "-Y", "0", "0", "0", "0", "-X", "0", "0", "Z"},
          {"0", "0", "-Y^2", "-Z^3", "0", "0", "Y*Z^2", "0", "0", "-X", "-Z^4", "0"},
          {"0", "Y", "0", "0", "Z^2", "0", "0", "0", "0", "-Z", "X", "0"},
          {"Y^2", "0", "0", "0", "-Y*Z^2", "0", "0", "0", "Z^4", "0", "0", "X"}},
         {"X*Y^2", "X*Y*Z^2", "X*Z^4", "Y^4", "Y^3*Z", "Y^2*Z^3", "Z^5"}, 6);
    self(6,
         {{"-X", "0", "0", "Z^2", "0", "Y"},
          {"Y*Z", "X", "-Z^3", "0", "-Y^2", "0"},
          {"0", "-Z^2", "-X", "Y", "0", "0"},
          {"Z^3", "0", "Y^2", "X", "-Y*Z^2", "0"},
          {"0", "-Y", "0", "0", "-X", "Z"},
          {"Y^2", "0", "-Y*Z^2", "0", "Z^4", "X"}},
         {"X", "Y^2", "Y*Z", "Z^3"}, 3);
    self(7,
         {{"X", "0", "0", "0", "-Z^3", "0", "0", "-Y"},
          {"Y*Z", "-X", "0", "0", "0", "Z^2", "Y^2", "0"},
          {"0", "0", "-X", "Z^2", "0", "Y", "-Z^3", "0"},
          {"0", "0", "0", "X", "-Y^2", "0", "0", "Z^2"},
          {"-Z^2", "0", "0", "-Y", "-X", "0", "0", "0"},
          {"0", "Z^3", "Y^2", "0", "Y*Z^2", "X", "0", "0"},
          {"0", "Y", "-Z^2", "0", "0", "0", "X", "Z"},
          {"-Y^2", "0", "0", "Z^3", "0", "0", "0", "-X"}},
         {"X*Y", "X*Z", "Y^2", "Y*Z^2", "Z^4"}, 4);
    self(8,
         {{"X", "0", "Y", "Z^2"},
          {"0", "X", "Z^3", "-Y^2"},
          {"Y^2", "Z^2", "-X", "0"},
          {"Z^3", "-Y", "0", "-X"}},
         {"X", "Y", "Z^2"}, 2);
    return out;
}

std::vector<CatalogEntry> catalog_a_inf(long n) {
    if (n < 1) throw domain_error("BadIndex", "A-infinity catalog needs n >= 1");
    Poly<GaussInt> f = P("X*Y");
    std::vector<CatalogEntry> out;
    out.push_back(entry("Ainf", 1, make_mf(M({{"X"}}), M({{"Y"}}), f), {"X"}, 1, 2));
    out.push_back(entry("Ainf", 2, make_mf(M({{"Y"}}), M({{"X"}}), f), {"Y"}, 1, 1));
    std::string zn = pw("Z", n);
    out.push_back(entry("Ainf", 3,
                        make_mf(M({{"Y", zn}, {"0", "X"}}), M({{"X", "-" + zn}, {"0", "Y"}}), f),
                        {"Y", zn}, 1, 4));
    out.push_back(entry("Ainf", 4,
                        make_mf(M({{"X", "-" + zn}, {"0", "Y"}}), M({{"Y", zn}, {"0", "X"}}), f),
                        {"X", zn}, 1, 3));
    return out;
}

std::vector<CatalogEntry> catalog_d_inf(long n) {
    if (n < 1) throw domain_error("BadIndex", "D-infinity catalog needs n >= 1");
    Poly<GaussInt> f = P("X^2*Y-Z^2");
    std::vector<CatalogEntry> out;
    out.push_back(entry("Dinf", 1,
                        make_mf(M({{"Z", "X*Y"}, {"X", "Z"}}), M({{"-Z", "X*Y"}, {"X", "-Z"}}), f),
                        {"X", "Z"}, 1, 1));
    out.push_back(entry("Dinf", 2,
                        make_mf(M({{"X^2", "Z"}, {"Z", "Y"}}), M({{"Y", "-Z"}, {"-Z", "X^2"}}), f),
                        {"Z", "Y"}, 1, 2));
    // band extensions of the normalization block A = [[Z,XY],[X,Z]]: the
    // partner blocks solve A*B' + B*A' = 0 against A' = [[-Z,XY],[X,-Z]]
    std::string yn = pw("Y", n), yn1 = pw("Y", n + 1);
    out.push_back(entry("Dinf", 3,
                        make_mf(M({{"Z", "X*Y", "0", "-" + yn1},
                                   {"X", "Z", yn, "0"},
                                   {"0", "0", "Z", "X*Y"},
                                   {"0", "0", "X", "Z"}}),
                                M({{"-Z", "X*Y", "0", "-" + yn1},
                                   {"X", "-Z", yn, "0"},
                                   {"0", "0", "-Z", "X*Y"},
                                   {"0", "0", "X", "-Z"}}),
                                f),
                        {yn1, "X*Y", "Z"}, 2, 3));
    out.push_back(entry("Dinf", 4,
                        make_mf(M({{"Z", "X*Y", "-" + yn, "0"},
                                   {"X", "Z", "0", yn},
                                   {"0", "0", "Z", "X*Y"},
                                   {"0", "0", "X", "Z"}}),
                                M({{"-Z", "X*Y", "-" + yn, "0"},
                                   {"X", "-Z", "0", yn},
                                   {"0", "0", "-Z", "X*Y"},
                                   {"0", "0", "X", "-Z"}}),
                                f),
                        {yn, "Z", "X"}, 2, 4));
    return out;
}

std::vector<CatalogEntry> catalog_fermat(long n) {
    if (n < 2) throw domain_error("BadIndex", "Fermat catalog needs n >= 2");
    Poly<GaussInt> f = P("X^" + std::to_string(n) + "+Y^" + std::to_string(n) + "+Z^" +
                         std::to_string(n));
    std::vector<CatalogEntry> out;
    auto phi = [&](long r, long s) {
        std::string xr = pw("X", r), yr = pw("Y", r), zr = pw("Z", r);
        std::string xs = pw("X", s), ys = pw("Y", s), zs = pw("Z", s);
        return M({{"0", zr, "-" + yr, xs},
                  {"-" + zr, "0", xr, ys},
                  {yr, "-" + xr, "0", zs},
                  {"-" + xs, "-" + ys, "-" + zs, "0"}});
    };
    for (long r = 1; r <= n - 1; ++r) {
        long s = n - r;
        MatFac mf = make_mf(phi(r, s), phi(s, r), f, -1);
        out.push_back(entry("Fermat", r, std::move(mf), {pw("X", r), pw("Y", r), pw("Z", r)}, 2, r));
    }
    return out;
}

std::vector<CatalogEntry> catalog(const std::string& kind, long n) {
    std::string s = kind;
    std::transform(s.begin(), s.end(), s.begin(), ::tolower);
    if (s == "a") return catalog_a(n);
    if (s == "d") return catalog_d(n);
    if (s == "e6") return catalog_e6();
    if (s == "e7") return catalog_e7();
    if (s == "e8") return catalog_e8();
    if (s == "ainf" || s == "ainfinity") return catalog_a_inf(n);
    if (s == "dinf" || s == "dinfinity") return catalog_d_inf(n);
    if (s == "fermat") return catalog_fermat(n);
    throw domain_error("UnknownKind", "unknown catalog '" + kind + "'");
}

D4SplitData d4_split_equivalence() {
    Poly<GaussInt> f = P("X^2+Y^3+Y*Z^2");
    PolyMatrix<GaussInt> phi0 = M({{"-X", "Y^2", "Y*Z", "0"},
                                   {"Y", "X", "0", "-Z"},
                                   {"Z", "0", "X", "Y"},
                                   {"0", "-Y*Z", "Y^2", "-X"}});
    PolyMatrix<GaussInt> phi1 = M({{"X", "i*Y^2+Y*Z"}, {"Z-i*Y", "-X"}});
    PolyMatrix<GaussInt> phi2 = M({{"X", "-i*Y^2+Y*Z"}, {"Z+i*Y", "-X"}});
    PolyMatrix<GaussInt> alpha = M({{"i", "0", "0", "-1"},
                                    {"0", "-1", "-i", "0"},
                                    {"-i", "0", "0", "-1"},
                                    {"0", "-1", "i", "0"}});
    D4SplitData d;
    d.alpha = alpha;
    d.beta = negated(alpha);
    d.source = make_mf(phi0, phi0, f);
    PolyMatrix<GaussInt> tphi(4, 3);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 2; ++j) {
            tphi.at(i, j) = phi1.at(i, j);
            tphi.at(2 + i, 2 + j) = phi2.at(i, j);
        }
    d.target = make_mf(tphi, tphi, f);
    return d;
}

// explicit instantiations
template PolyMatrix<GaussInt> mat_mul(const PolyMatrix<GaussInt>&, const PolyMatrix<GaussInt>&);
template PolyMatrix<Fp> mat_mul(const PolyMatrix<Fp>&, const PolyMatrix<Fp>&);
template VerifyResult verify(const MatFacT<GaussInt>&);
template VerifyResult verify(const MatFacT<Fp>&);
template MatFacT<GaussInt> transpose_dual(const MatFacT<GaussInt>&);
template MatFacT<Fp> transpose_dual(const MatFacT<Fp>&);
template MatFacT<GaussInt> tensor_hat(const MatFacT<GaussInt>&, const MatFacT<GaussInt>&);
template MatFacT<Fp> tensor_hat(const MatFacT<Fp>&, const MatFacT<Fp>&);
template std::pair<MatFacT<GaussInt>, MatFacT<GaussInt>>
tensor_split(const MatFacT<GaussInt>&, const MatFacT<GaussInt>&, const GaussInt&);
template std::pair<MatFacT<Fp>, MatFacT<Fp>> tensor_split(const MatFacT<Fp>&, const MatFacT<Fp>&,
                                                          const Fp&);
template bool verify_morphism(const PolyMatrix<GaussInt>&, const PolyMatrix<GaussInt>&,
                              const MatFacT<GaussInt>&, const MatFacT<GaussInt>&);
template Poly<GaussInt> mat_det(const PolyMatrix<GaussInt>&);
template struct MatFacT<GaussInt>;
template struct MatFacT<Fp>;

} // namespace hkade
