#include "selftest.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "hkade/ade.hpp"
#include "hkade/delta.hpp"
#include "hkade/fermat.hpp"
#include "hkade/hkm.hpp"
#include "hkade/matfac.hpp"
#include "hkade/oracle.hpp"
#include "hkade/parse.hpp"
#include "hkade/series.hpp"

namespace hkade {

namespace {

struct Checker {
    bool pass = true;
    std::ostringstream detail;
    int failures = 0;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (failures < 8) detail << (failures ? "; " : "") << what;
        ++failures;
    }
    template <class A, class B>
    void expect_eq(const A& got, const B& want, const std::string& what) {
        if (got == want) return;
        std::ostringstream os;
        os << what << " (got " << got << ", want " << want << ")";
        expect(false, os.str());
    }
};

Triple rt(const char* a, const char* b, const char* c) {
    return {parse_rat(a), parse_rat(b), parse_rat(c)};
}

std::vector<Poly<Fp>> fp_gens(const RingSpec& spec, uint32_t p,
                              const std::vector<std::string>& texts) {
    std::vector<Poly<Fp>> out;
    for (const auto& t : texts) out.push_back(to_fp(parse_poly(t, spec.names), p));
    return out;
}

Int ade_oracle(const ADEKind& kind, long p, long e) {
    RingSpec spec = ade_ring_spec(kind);
    Int q = pow_int(Int(p), static_cast<unsigned long>(e));
    std::vector<Poly<Fp>> gens;
    for (int v = 0; v < 3; ++v)
        gens.push_back(to_fp(Poly<Int>::variable(3, v, static_cast<uint32_t>(q.get_ui()), Int(1)),
                             static_cast<uint32_t>(p)));
    return quotient_dim(QuotientProblem::make(spec, static_cast<uint32_t>(p), gens));
}

void crit1_delta(Checker& c) {
    c.expect_eq(rat_str(delta(3, rt("1/7", "1/7", "1/7")).value), "1/63", "delta(3,1/7^3)");
    c.expect_eq(rat_str(delta(5, rt("1/2", "1/3", "1/4")).value), "0", "delta(5,(1/2,1/3,1/4))");
    c.expect_eq(rat_str(delta(3, rt("1/2", "1/3", "1/4")).value), "1/12", "delta(3,(1/2,1/3,1/4))");
    c.expect_eq(rat_str(delta(5, rt("1/2", "1/3", "1/5")).value), "1/30", "delta(5,(1/2,1/3,1/5))");
    for (long p : {2L, 3L, 5L, 7L})
        c.expect_eq(rat_str(delta(p, rt("1", "1/3", "1/4")).value), "5/12",
                    "delta(p,(1,1/3,1/4)) at p=" + std::to_string(p));
}

void crit2_delta_oracle(Checker& c) {
    std::mt19937 rng(20130801);
    std::uniform_int_distribution<int> pick_p(0, 4);
    std::uniform_int_distribution<long> pick_a(1, 24);
    const long primes[5] = {2, 3, 5, 7, 11};
    std::vector<std::string> uv{"X", "Y"};
    for (int i = 0; i < 200; ++i) {
        long p = primes[pick_p(rng)];
        long a1 = pick_a(rng), a2 = pick_a(rng), a3 = pick_a(rng);
        Rational dv = delta(p, {Rational(a1), Rational(a2), Rational(a3)}).value;
        RingSpec spec = RingSpec::make(uv, {1, 1});
        auto gens = fp_gens(spec, static_cast<uint32_t>(p),
                            {"X^" + std::to_string(a1), "Y^" + std::to_string(a2),
                             "(X+Y)^" + std::to_string(a3)});
        long sg = syz_gap({1, 1}, static_cast<uint32_t>(p), gens);
        if (dv != sg) {
            c.expect(false, "delta != sg at p=" + std::to_string(p) + " a=(" +
                                std::to_string(a1) + "," + std::to_string(a2) + "," +
                                std::to_string(a3) + ")");
            return;
        }
    }
}

void crit3_ade_oracle(Checker& c, bool full) {
    struct Row {
        ADEKind kind;
        long p, e;
        long want;
    };
    std::vector<Row> rows{
        {{ADEKind::A, 1}, 3, 1, 13},  {{ADEKind::D, 4}, 3, 1, 16}, {{ADEKind::E6, 0}, 5, 1, 48},
        {{ADEKind::E6, 0}, 3, 1, 18}, {{ADEKind::E7, 0}, 5, 1, 48}, {{ADEKind::E7, 0}, 7, 1, 96},
        {{ADEKind::E8, 0}, 7, 1, 96},
    };
    if (full) rows.push_back({{ADEKind::E8, 0}, 7, 2, 4781});
    for (const auto& r : rows) {
        Int closed = hkf(r.kind, r.p, r.e);
        std::string tag = r.kind.str() + " p=" + std::to_string(r.p) + " e=" + std::to_string(r.e);
        c.expect_eq(closed.get_str(), std::to_string(r.want), "closed form " + tag);
        Int orc = ade_oracle(r.kind, r.p, r.e);
        c.expect_eq(orc.get_str(), closed.get_str(), "oracle vs closed form " + tag);
    }
}

void crit4_fermat(Checker& c, bool full) {
    const long want[4] = {1, 27, 419, 3843};
    for (long e = 0; e <= 3; ++e) {
        FermatHkf r = hkf_fermat(7, 3, e);
        if (!r.value && e == 3 && !full) continue; // the q=27 oracle runs in the full suite
        Int v = r.value ? *r.value : fermat_hkf_oracle(7, 3, e);
        c.expect_eq(v.get_str(), std::to_string(want[e]), "Fermat(7,3) e=" + std::to_string(e));
        if (e >= 1 && e <= 2)
            c.expect_eq(fermat_hkf_oracle(7, 3, e).get_str(), std::to_string(want[e]),
                        "oracle confirm e=" + std::to_string(e));
    }
}

void check_series_entry(Checker& c, const ADEKind& kind, long index) {
    HilbertSeries fix = ade_module_series(kind, index);
    std::string tag = kind.str() + " M" + std::to_string(index);
    c.expect_eq(fix.numerator_at_one().get_str(),
                std::to_string(2 * ade_module_rank(kind, index)), tag + " numerator(1)");
    auto coeffs = fix.expand(60);
    for (const Int& k : coeffs)
        if (k < 0) {
            c.expect(false, tag + " negative expansion coefficient");
            break;
        }
    if (ade_module_is_monomial(kind, index)) {
        HilbertSeries comp = ade_module_series_computed(kind, index);
        c.expect(hs_equal_up_to_shift(fix, comp) == std::optional<long>(0),
                 tag + " recursion mismatch");
    }
}

void crit5_series(Checker& c) {
    for (long n : {1L, 2L, 3L})
        for (long i = 1; i <= n; ++i) check_series_entry(c, {ADEKind::A, n}, i);
    for (long n : {4L, 5L})
        for (long i = 1; i <= n; ++i) check_series_entry(c, {ADEKind::D, n}, i);
    for (long i = 1; i <= 6; ++i) check_series_entry(c, {ADEKind::E6, 0}, i);
    for (long i = 1; i <= 7; ++i) check_series_entry(c, {ADEKind::E7, 0}, i);
    for (long i = 1; i <= 8; ++i) check_series_entry(c, {ADEKind::E8, 0}, i);

    // non-monomial representatives: re-derive from the known quotient series
    // (the quotient is k[Z], k[Z] + Y*k, resp. k[Y] as a graded module)
    auto direct = [](const RingSpec& spec, std::vector<long> degs, HilbertSeries quot) {
        std::map<long, Int> front{{0, Int(-1)}};
        for (long d : degs) front[d] += 1;
        return hs_ring(spec).times(front) + quot;
    };
    {
        RingSpec e6 = ade_ring_spec({ADEKind::E6, 0});
        HilbertSeries kz(std::map<long, Int>{{0, Int(1)}}, {3});
        HilbertSeries kzy = kz + HilbertSeries::polynomial({{4, Int(1)}});
        c.expect(direct(e6, {6, 8, 7}, kzy) == ade_module_series({ADEKind::E6, 0}, 3),
                 "E6 M3 direct derivation");
        c.expect(direct(e6, {6, 4}, kz) == ade_module_series({ADEKind::E6, 0}, 5),
                 "E6 M5 direct derivation");
    }
    for (long n : {4L, 5L}) {
        RingSpec dn = ade_ring_spec({ADEKind::D, n});
        HilbertSeries ky(std::map<long, Int>{{0, Int(1)}}, {2});
        c.expect(direct(dn, {n - 1, n - 2}, ky) == ade_module_series({ADEKind::D, n}, n - 1),
                 "D" + std::to_string(n) + " M" + std::to_string(n - 1) + " direct derivation");
    }

    // degenerations
    {
        ADEKind ai{ADEKind::AInf, 1};
        RingSpec sp = ade_ring_spec(ai);
        HilbertSeries ring = hs_ring(sp);
        c.expect(HilbertSeries(std::map<long, Int>{{0, Int(1)}, {1, Int(1)}}, {1, 1}) == ring,
                 "A-infinity ring series");
        HilbertSeries kyz(std::map<long, Int>{{0, Int(1)}}, {1, 1});
        HilbertSeries syzx = ring.times({{1, Int(1)}, {0, Int(-1)}}) + kyz;
        c.expect(syzx == ade_module_series(ai, 1), "A-infinity Syz(X) series");
        for (long n : {1L, 2L, 3L}) {
            HilbertSeries quot(std::map<long, Int>{{0, Int(1)}, {n, Int(-1)}}, {1, 1});
            std::map<long, Int> front{{0, Int(-1)}};
            front[1] += 1;
            front[n] += 1;
            HilbertSeries s = ring.times(front) + quot;
            c.expect(s == ade_module_series({ADEKind::AInf, n}, 2),
                     "A-infinity Syz(Y,Z^" + std::to_string(n) + ") series");
            check_series_entry(c, {ADEKind::AInf, n}, 2);
        }
    }
    {
        RingSpec dinf = ade_ring_spec({ADEKind::DInf, 1});
        c.expect(HilbertSeries(std::map<long, Int>{{0, Int(1)}, {3, Int(1)}}, {2, 2}) ==
                     hs_ring(dinf),
                 "D-infinity ring series");
        for (long n : {1L, 2L, 3L})
            for (long i = 1; i <= 4; ++i) check_series_entry(c, {ADEKind::DInf, n}, i);
        for (long q : {3L, 5L, 7L}) {
            RingSpec spec = RingSpec::make({"Z", "X", "Y"}, {3, 2, 2},
                                           to_int(parse_poly("Z^2-X^2*Y", {"Z", "X", "Y"})));
            auto mono = [&](int v, long e) {
                return Poly<Int>::variable(3, v, static_cast<uint32_t>(e), Int(1));
            };
            HilbertSeries got = hs_ma(spec, q, {Poly<Int>::constant(3, Int(1))},
                                      {mono(1, q), mono(2, q)});
            std::map<long, Int> num;
            for (long d : {3 * q + 2, 3 * q + 3, 4 * q, 4 * q + 1}) num[d] += 1;
            c.expect(got == HilbertSeries(num, {2, 2}),
                     "D-infinity Frobenius series q=" + std::to_string(q));
        }
    }
}

void crit6_matfac(Checker& c) {
    auto run = [&](const std::vector<CatalogEntry>& entries) {
        for (const auto& e : entries) {
            std::string tag = e.kind + " #" + std::to_string(e.index);
            VerifyResult v = verify(e.mf);
            c.expect(v.ok, tag + " verify");
            bool has_i = false;
            for (const auto& p : e.mf.phi.a)
                for (const auto& [ex, co] : p.terms())
                    if (co.im != 0) has_i = true;
            for (uint32_t p : {5u, 7u, 11u, 13u}) {
                if (has_i && p % 4 != 1) continue;
                MatFacT<Fp> red{PolyMatrix<Fp>(e.mf.phi.n, 3), PolyMatrix<Fp>(e.mf.psi.n, 3),
                                to_fp(e.mf.f, p), e.mf.sign};
                for (size_t k = 0; k < e.mf.phi.a.size(); ++k) {
                    red.phi.a[k] = to_fp(e.mf.phi.a[k], p);
                    red.psi.a[k] = to_fp(e.mf.psi.a[k], p);
                }
                c.expect(verify(red).ok, tag + " verify mod " + std::to_string(p));
            }
            if (e.kind == "Ainf" && e.index <= 2) continue; // f = XY is reducible
            c.expect_eq(det_rank(e.mf), e.rank, tag + " det rank");
        }
    };
    run(catalog_a(4));
    run(catalog_d(4));
    run(catalog_d(5));
    run(catalog_e6());
    run(catalog_e7());
    run(catalog_e8());
    run(catalog_a_inf(2));
    run(catalog_d_inf(2));
    run(catalog_fermat(5));
    D4SplitData d4 = d4_split_equivalence();
    c.expect(verify_morphism(d4.alpha, d4.beta, d4.source, d4.target), "D4 split morphism");
}

void crit7_hkm(Checker& c) {
    std::vector<std::string> nm{"X", "Y", "Z"};
    std::vector<std::string> uvw{"U", "V", "W"};
    c.expect_eq(rat_str(hkm_standard(to_int(parse_poly("X^7+Y^7+Z^7", nm)), 3,
                                     {Rational(1), Rational(1), Rational(1)})
                            .value),
                "427/81", "Fermat degree-7 multiplicity at p=3");
    c.expect_eq(
        rat_str(hkm_weighted({15, 10, 6}, to_int(parse_poly("U^2+V^3+W^5", uvw)), 7).value),
        "239/120", "E8 weighted multiplicity");
    c.expect_eq(rat_str(hkm_diagonal(2, 3, 4, 5)), "47/24", "diagonal (2,3,4) p=5");
    c.expect_eq(rat_str(hkm_diagonal(2, 3, 4, 3)), "2", "diagonal (2,3,4) p=3");
    c.expect_eq(rat_str(hkm_weighted({3, 3, 3}, to_int(parse_poly("U^3+V^3+U*V*W", uvw)), 5).value),
                "7/3", "T(3,3,inf) multiplicity");
    c.expect_eq(rat_str(hkm_binomial(2, {1, 1})), "3/2", "binomial d=2 (1,1)");
}

void crit8_gorenstein(Checker& c) {
    struct Row {
        ADEKind kind;
        long p, e;
    };
    for (const Row& r : std::vector<Row>{{{ADEKind::A, 1}, 3, 1},
                                         {{ADEKind::D, 4}, 3, 1},
                                         {{ADEKind::E6, 0}, 5, 1},
                                         {{ADEKind::E6, 0}, 3, 1},
                                         {{ADEKind::E7, 0}, 5, 1},
                                         {{ADEKind::E7, 0}, 7, 1},
                                         {{ADEKind::E8, 0}, 7, 1},
                                         {{ADEKind::E8, 0}, 7, 2}}) {
        Int q = pow_int(Int(r.p), static_cast<unsigned long>(r.e));
        Rational sum = Rational(hkf(r.kind, r.p, r.e)) + fsig(r.kind, r.p, r.e);
        c.expect(sum == Rational(2 * q * q),
                 "pairing fails for " + r.kind.str() + " p=" + std::to_string(r.p) +
                     " e=" + std::to_string(r.e));
    }
}

void crit9_period(Checker& c) {
    auto eq = [&](long n, long p, long s, long t) {
        auto pr = period(n, p);
        std::string tag = "period(" + std::to_string(n) + "," + std::to_string(p) + ")";
        if (!pr) {
            c.expect(false, tag + " absent");
            return;
        }
        c.expect(pr->s == s && pr->t == t,
                 tag + " = (" + std::to_string(pr->s) + "," + std::to_string(pr->t) + ") want (" +
                     std::to_string(s) + "," + std::to_string(t) + ")");
        c.expect(pr->t - pr->s <= frobenius_order_bound(n, p), tag + " exceeds the order bound");
    };
    eq(3, 7, 0, 1);
    eq(4, 7, 0, 1);
    eq(5, 11, 0, 1);
    eq(5, 3, 0, 2);
    eq(5, 7, 0, 2);
    eq(14, 37, 0, 3);
    eq(3, 2, 1, 2);
    c.expect(!period(6, 5), "period(6,5) should be absent");
    c.expect(!period(7, 3), "period(7,3) should be absent");
}

void crit10_families(Checker& c) {
    FamilySpec fv = FamilySpec::fv(5, 0, 0, 2, 3);
    Rational limit = family_limit(fv);
    c.expect_eq(rat_str(limit), "19/5", "F_V limit");
    for (long L : {20L, 40L, 80L})
        c.expect(family_hkm(fv, 7, L).value == limit,
                 "F_V value at L=" + std::to_string(L) + " is not the constant");
    // U^L + V^2 + W^3 climbs to min(2,3) = 2 and stays there: the small-L
    // values sit below the limit, the sampled ones have reached it
    FamilySpec diag = FamilySpec::fu(0, 2, 0, 0, 3);
    Rational prev(-1);
    for (long L : {4L, 20L, 40L, 80L}) {
        Rational v = family_hkm(diag, 7, L).value;
        c.expect(v >= prev, "diagonal family decreasing at L=" + std::to_string(L));
        c.expect(v <= 2, "diagonal family exceeded its limit at L=" + std::to_string(L));
        prev = v;
    }
    c.expect(family_hkm(diag, 7, 4).value < 2, "diagonal family already at the limit at L=4");
    c.expect_eq(rat_str(prev), "2", "diagonal family value at L=80");
    c.expect_eq(rat_str(family_limit(diag)), "2", "diagonal family limit");
}

CheckResult timed(const std::string& name, void (*fn)(Checker&)) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        fn(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    return {name, c.pass, c.detail.str(), std::chrono::duration<double>(t1 - t0).count()};
}

CheckResult timed_full(const std::string& name, void (*fn)(Checker&, bool), bool full) {
    Checker c;
    auto t0 = std::chrono::steady_clock::now();
    try {
        fn(c, full);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    auto t1 = std::chrono::steady_clock::now();
    return {name, c.pass, c.detail.str(), std::chrono::duration<double>(t1 - t0).count()};
}

} // namespace

std::vector<CheckResult> run_acceptance(bool full) {
    std::vector<CheckResult> out;
    out.push_back(timed("01 delta fixtures", crit1_delta));
    out.push_back(timed("02 delta = syzygy-gap oracle (200 random)", crit2_delta_oracle));
    out.push_back(timed_full("03 ADE closed forms = oracle colengths", crit3_ade_oracle, full));
    out.push_back(timed_full("04 Fermat (7,3) Hilbert-Kunz values", crit4_fermat, full));
    out.push_back(timed("05 Hilbert series tables", crit5_series));
    out.push_back(timed("06 matrix factorization catalogs", crit6_matfac));
    out.push_back(timed("07 multiplicity fixtures", crit7_hkm));
    out.push_back(timed("08 Gorenstein pairing", crit8_gorenstein));
    out.push_back(timed("09 Frobenius periodicities", crit9_period));
    out.push_back(timed("10 family limits", crit10_families));
    return out;
}

} // namespace hkade
