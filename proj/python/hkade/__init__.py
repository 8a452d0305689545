"""Exact Hilbert-Kunz multiplicities, syzygy gaps, Hilbert series and
matrix-factorization catalogs for hypersurface rings, backed by a C++ core.

All rationals cross the boundary as strings in lowest terms; the helpers
here convert them to fractions.Fraction.
"""

from fractions import Fraction

try:
    from . import _hkade as _core
except ImportError:  # running against a plain CMake build directory
    import _hkade as _core

DomainError = _core.DomainError


def _frac(s):
    return Fraction(s)


def _triple(t):
    return [str(Fraction(str(x))) for x in t]


def delta(p, t):
    """Value of the delta function at a rational triple; exact Fraction."""
    return _frac(_core.delta(p, _triple(t))["value"])


def delta_full(p, t):
    """Value plus the scan witness (s and the nearest odd-lattice corner)."""
    r = _core.delta(p, _triple(t))
    r["value"] = _frac(r["value"])
    return r


def tau(p, a, b, c, d, t):
    return _frac(_core.tau(p, a, b, c, d, _triple(t)))


def syz_gap(p, gens, weights=(1, 1), names=("X", "Y")):
    return _core.syz_gap(p, list(gens), list(weights), list(names))


def syz_generator_degrees(p, gens, weights=(1, 1), names=("X", "Y")):
    return _core.syz_generator_degrees(p, list(gens), list(weights), list(names))


def quotient_dim(p, weights, relation, gens, names=("X", "Y", "Z")):
    return int(_core.quotient_dim(p, list(weights), relation, list(gens), list(names)))


def hilbert_function(p, weights, relation, gens, names=("X", "Y", "Z"), max_degree=-1):
    r = _core.hilbert_function(p, list(weights), relation, list(gens), list(names), max_degree)
    if "total" in r:
        r["total"] = int(r["total"])
    return r


def _hkm_result(r):
    r["value"] = _frac(r["value"])
    r["lambda"] = int(r["lambda"])
    r["delta"] = _frac(r["delta"])
    r["delta_args"] = [_frac(x) for x in r["delta_args"]]
    return r


def hkm_trinomial(f, p, t, names=("X", "Y", "Z")):
    return _hkm_result(_core.hkm_trinomial(f, p, _triple(t), list(names)))


def hkm_weighted(weights, f, p, names=("U", "V", "W")):
    return _hkm_result(_core.hkm_weighted(list(weights), f, p, list(names)))


def hkm_diagonal(d1, d2, d3, p):
    return _frac(_core.hkm_diagonal(d1, d2, d3, p))


def hkm_binomial(d, a):
    return _frac(_core.hkm_binomial(d, list(a)))


def hkf(type, p, e, n=0):
    return int(_core.hkf(type, n, p, e))


def fsig(type, p, e, n=0):
    return _frac(_core.fsig(type, n, p, e))


def hkf_gen_a(n, m):
    return int(_core.hkf_gen_a(n, m))


def veronese_hkf(n, p, e):
    return int(_core.veronese_hkf(n, p, e))


def syz_class(type, p, e, n=0):
    r = _core.syz_class(type, n, p, e)
    if r["free"]:
        r["shifts"] = tuple(_frac(x) for x in r["shifts"])
    else:
        r["shift"] = _frac(r["shift"])
    return r


def e8_ideal_hkf(ideal, p, e):
    return int(_core.e8_ideal_hkf(ideal, p, e))


def module_series(type, index, n=0, expand_to=-1):
    return _core.module_series(type, n, index, expand_to)


def series_ma(weights, relation, a, vhead, vtail, names=("X", "Y", "Z"), expand_to=-1):
    return _core.series_ma(list(weights), relation, a, list(vhead), list(vtail), list(names),
                           expand_to)


def fermat_status(n, p):
    return _core.fermat_status(n, p)


def fermat_hkf(n, p, e, use_oracle=True):
    r = _core.fermat_hkf(n, p, e, use_oracle)
    if r["value"] is not None:
        r["value"] = int(r["value"])
    return r


def fermat_period(n, p):
    return _core.fermat_period(n, p)


def finite_projdim(n, p, N):
    return _core.finite_projdim(n, p, N)


def catalog(kind, n=4):
    return _core.catalog(kind, n)


def matfac_verify(f, phi, psi, sign=1, names=("X", "Y", "Z")):
    return _core.matfac_verify(f, list(phi), list(psi), sign, list(names))


def acceptance(full=False):
    """Run the built-in fixture suite; returns one record per criterion."""
    return _core.acceptance(full)


__all__ = [
    "DomainError", "delta", "delta_full", "tau", "syz_gap", "syz_generator_degrees",
    "quotient_dim", "hilbert_function", "hkm_trinomial", "hkm_weighted", "hkm_diagonal",
    "hkm_binomial", "hkf", "fsig", "hkf_gen_a", "veronese_hkf", "syz_class", "e8_ideal_hkf",
    "module_series", "series_ma", "fermat_status", "fermat_hkf", "fermat_period",
    "finite_projdim", "catalog", "matfac_verify", "acceptance",
]
