from fractions import Fraction

import pytest

import hkade


def test_delta_fixtures():
    assert hkade.delta(3, ("1/7", "1/7", "1/7")) == Fraction(1, 63)
    assert hkade.delta(5, ("1/2", "1/3", "1/4")) == 0
    assert hkade.delta(3, (Fraction(1, 2), Fraction(1, 3), Fraction(1, 4))) == Fraction(1, 12)
    r = hkade.delta_full(3, ("1/7", "1/7", "1/7"))
    assert r["s"] == 2


def test_syzygy_gap_matches_delta():
    for p, a in [(5, (3, 4, 5)), (7, (2, 9, 6)), (2, (8, 2, 3))]:
        gens = [f"X^{a[0]}", f"Y^{a[1]}", f"(X+Y)^{a[2]}"]
        assert hkade.syz_gap(p, gens) == hkade.delta(p, a)


def test_oracle_colengths():
    assert hkade.quotient_dim(3, (1, 1, 1), "", ["X*Z", "Y*Z", "X^3", "Y^3", "Z^3"]) == 11
    assert hkade.quotient_dim(5, (6, 4, 3), "X^2+Y^3+Z^4", ["X^5", "Y^5", "Z^5"]) == 48
    hf = hkade.hilbert_function(5, (1, 1, 1), "X^2-Y*Z", ["X^3", "Y^3", "Z^3"])
    assert hf["artinian"] and hf["total"] == 13


def test_multiplicities():
    r = hkade.hkm_trinomial("X^7+Y^7+Z^7", 3, (1, 1, 1))
    assert r["value"] == Fraction(427, 81)
    assert r["lambda"] == 49
    assert hkade.hkm_weighted((15, 10, 6), "U^2+V^3+W^5", 7)["value"] == Fraction(239, 120)
    assert hkade.hkm_diagonal(2, 3, 4, 5) == Fraction(47, 24)
    assert hkade.hkm_binomial(2, (1, 1)) == Fraction(3, 2)


def test_hilbert_kunz_functions():
    assert hkade.hkf("E8", 7, 2) == 4781
    assert hkade.hkf("D", 3, 1, n=4) == 16
    assert hkade.hkf("A", 3, 1, n=1) == 13
    assert hkade.fsig("E7", 5, 1) == 2
    assert hkade.hkf("E6", 5, 1) + hkade.fsig("E6", 5, 1) == 2 * 25
    assert hkade.veronese_hkf(3, 2, 2) == 31
    cls = hkade.syz_class("E8", 7, 1)
    assert cls["ideal"] == ["X", "Y", "Z^2"] and cls["shift"] == -90


def test_series():
    s = hkade.module_series("E6", 1, expand_to=12)
    assert s["numerator"] == {7: "1", 9: "1", 10: "1", 12: "1"}
    assert s["numerator_at_one"] == "4"
    assert s["expansion"][7] == "1"
    r = hkade.series_ma((2, 3, 3), "X^3-Y*Z", 1, ["1"], ["Z"])
    assert r["numerator_at_one"] == "2"


def test_fermat():
    assert hkade.fermat_hkf(7, 3, 2)["value"] == 419
    assert hkade.fermat_hkf(6, 5, 2)["value"] == 3150
    assert hkade.fermat_period(5, 3) == (0, 2)
    assert hkade.fermat_period(6, 5) is None
    st = hkade.fermat_status(6, 5)
    assert st["semistable"] == "No" and st["twists"] == (-6, -9)
    assert hkade.finite_projdim(6, 5, 25)


def test_catalog():
    entries = hkade.catalog("E8")
    assert [e["rank"] for e in entries] == [2, 3, 4, 5, 6, 3, 4, 2]
    e = entries[0]
    assert hkade.matfac_verify(e["f"], e["phi"], e["psi"], e["sign"])["ok"]
    bad = [row[:] for row in e["phi"]]
    bad[0][0] = bad[0][0] + "+1"
    assert not hkade.matfac_verify(e["f"], bad, e["psi"], e["sign"])["ok"]


def test_domain_errors():
    with pytest.raises(hkade.DomainError):
        hkade.veronese_hkf(4, 2, 1)
    with pytest.raises(hkade.DomainError):
        hkade.hkm_trinomial("X^2*Y+X*Y^2+Y^3", 5, (1, 1, 1))


def test_acceptance_quick():
    results = hkade.acceptance(full=False)
    assert all(r["pass"] for r in results), [r for r in results if not r["pass"]]
