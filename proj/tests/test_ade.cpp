#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hkade/ade.hpp"
#include "hkade/parse.hpp"

using namespace hkade;

namespace {

Int oracle_colength(const ADEKind& kind, long p, long e, const std::vector<std::string>& gens) {
    RingSpec spec = ade_ring_spec(kind);
    std::vector<Poly<Fp>> g;
    for (const auto& t : gens)
        g.push_back(to_fp(parse_poly(t, spec.names), static_cast<uint32_t>(p)));
    (void)e;
    return quotient_dim(QuotientProblem::make(spec, static_cast<uint32_t>(p), g));
}

} // namespace

TEST_CASE("closed-form Hilbert-Kunz values") {
    CHECK(hkf({ADEKind::D, 4}, 3, 1) == 16);
    CHECK(hkf({ADEKind::E7, 0}, 7, 1) == 96);
    CHECK(hkf({ADEKind::E8, 0}, 7, 2) == 4781);
    CHECK(hkf({ADEKind::E6, 0}, 2, 3) == 128);
    CHECK(hkf({ADEKind::AInf, 0}, 2, 3) == 120); // q = 8
    CHECK(hkf({ADEKind::DInf, 0}, 3, 2) == 157); // 2*81 - 5
    CHECK(hkf({ADEKind::DInf, 0}, 2, 2) == 32);
    for (long p : {2L, 3L, 5L, 7L})
        CHECK(hkf({ADEKind::E8, 0}, p, 0) == 1);
}

TEST_CASE("generalized A-model values") {
    CHECK(hkf_gen_a(1, 3) == 13);
    for (long m : {1L, 2L, 5L, 9L}) CHECK(hkf_gen_a(0, m) == m * m);
    CHECK(hkf_gen_a(2, 4) == 26);
    CHECK(oracle_colength({ADEKind::A, 2}, 5, 0, {"X^4", "Y^4", "Z^4"}) == 26);
}

TEST_CASE("F-signatures") {
    CHECK(fsig({ADEKind::E7, 0}, 5, 1) == 2);
    CHECK(fsig({ADEKind::D, 4}, 3, 1) == 2);
    for (long e : {1L, 2L, 3L}) CHECK(fsig({ADEKind::E6, 0}, 3, e) == 0);
    CHECK(fsig({ADEKind::A, 1}, 3, 1) == 2 * 9 - 13);
    CHECK_THROWS_AS(fsig({ADEKind::AInf, 0}, 3, 1), domain_error);
}

TEST_CASE("Gorenstein pairing at random points") {
    for (long e : {1L, 2L}) {
        for (auto [kind, p] : std::vector<std::pair<ADEKind, long>>{{{ADEKind::A, 3}, 7},
                                                                    {{ADEKind::D, 6}, 5},
                                                                    {{ADEKind::E6, 0}, 7},
                                                                    {{ADEKind::E7, 0}, 11},
                                                                    {{ADEKind::E8, 0}, 11}}) {
            Int q = pow_int(Int(p), static_cast<unsigned long>(e));
            CHECK(Rational(hkf(kind, p, e)) + fsig(kind, p, e) == Rational(2 * q * q));
        }
    }
}

TEST_CASE("multiplicity limit 2 - 1/|G|") {
    for (auto [kind, p] : std::vector<std::pair<ADEKind, long>>{{{ADEKind::A, 2}, 5},
                                                                {{ADEKind::D, 5}, 7},
                                                                {{ADEKind::E6, 0}, 5},
                                                                {{ADEKind::E7, 0}, 5},
                                                                {{ADEKind::E8, 0}, 7}}) {
        long g = *kind.group_order();
        for (long e : {1L, 2L, 3L}) {
            Int q = pow_int(Int(p), static_cast<unsigned long>(e));
            Rational tail = (2 - frac(1, g)) * Rational(q * q) - Rational(hkf(kind, p, e));
            CHECK(tail >= 0);
            CHECK(tail < 2);
        }
    }
}

TEST_CASE("integrality") {
    for (long e : {0L, 1L, 2L, 3L})
        for (auto [kind, p] : std::vector<std::pair<ADEKind, long>>{{{ADEKind::D, 7}, 3},
                                                                    {{ADEKind::E7, 0}, 13},
                                                                    {{ADEKind::E8, 0}, 13}})
            CHECK_NOTHROW(hkf(kind, p, e)); // throws if a value is non-integral
}

TEST_CASE("Veronese") {
    CHECK(veronese_hkf(2, 3, 1) == 13);
    CHECK(veronese_hkf(3, 2, 2) == 31);
    CHECK(veronese_hkf(2, 3, 1) == hkf({ADEKind::A, 1}, 3, 1));
    for (long e : {1L, 2L}) CHECK_NOTHROW(veronese_hkf(5, 11, e));
    CHECK_THROWS_AS(veronese_hkf(4, 2, 1), domain_error);
}

TEST_CASE("A-infinity is the pointwise A-model limit") {
    for (long e = 1; e <= 4; ++e) {
        long q = 1 << e;
        if (q > 16) break;
        Int want = hkf({ADEKind::AInf, 0}, 2, e);
        for (long n : {q, q + 3})
            CHECK(hkf_gen_a(n, q) == want);
    }
}

TEST_CASE("syzygy classes") {
    SyzClassDescriptor e8 = syz_class({ADEKind::E8, 0}, 7, 1);
    CHECK(!e8.free);
    CHECK(e8.ideal == std::vector<std::string>{"X", "Y", "Z^2"});
    CHECK(e8.shift == -90);

    SyzClassDescriptor e6 = syz_class({ADEKind::E6, 0}, 5, 1);
    CHECK(e6.ideal == std::vector<std::string>{"X", "Y", "Z"});
    CHECK(e6.shift == -26);

    for (long n : {2L, 3L}) {
        SyzClassDescriptor d = syz_class({ADEKind::D, n + 2}, 2, 1);
        CHECK(d.free);
        CHECK(d.free_shift_a == Rational(-(n + 1) * 2));
        CHECK(d.free_shift_b == Rational(-(n + 2) * 2));
    }
    SyzClassDescriptor d4 = syz_class({ADEKind::D, 4}, 3, 1);
    CHECK(d4.ideal == std::vector<std::string>{"X", "Y^2", "Z"}); // r = 3
}

TEST_CASE("E8 with other ideals") {
    CHECK(e8_ideal_hkf(E8Ideal::XYZ2, 7, 1) == 175);
    CHECK(e8_ideal_hkf(E8Ideal::XY2YZZ2, 7, 1) == 241);
    CHECK(Rational(e8_ideal_hkf(E8Ideal::XY2YZZ2, 7, 2)) ==
          frac(149, 30) * 2401 - frac(59, 30));
    CHECK_THROWS_AS(e8_ideal_hkf(E8Ideal::XYZ2, 5, 1), domain_error);
    CHECK_THROWS_AS(e8_ideal_hkf(E8Ideal::XY2YZZ2, 11, 1), domain_error);
    // oracle confirmation at q = 7
    CHECK(oracle_colength({ADEKind::E8, 0}, 7, 1, {"X^7", "Y^7", "Z^14"}) == 175);
    CHECK(oracle_colength({ADEKind::E8, 0}, 7, 1, {"X^7", "Y^14", "Y^7*Z^7", "Z^14"}) == 241);
}

TEST_CASE("module tables") {
    CHECK(ade_module_series({ADEKind::A, 2}, 1) ==
          HilbertSeries(std::map<long, Int>{{5, Int(1)}, {6, Int(1)}}, {2, 3}));
    CHECK(ade_module_rank({ADEKind::E8, 0}, 5) == 6);
    CHECK(ade_module_ideal({ADEKind::E6, 0}, 5) ==
          std::vector<std::string>{"-i*X+Z^2", "Y"});
    CHECK(!ade_module_is_monomial({ADEKind::E6, 0}, 4));
    CHECK(ade_module_is_monomial({ADEKind::E7, 0}, 5));
    CHECK_THROWS_AS(ade_module_series({ADEKind::E6, 0}, 7), domain_error);
}
