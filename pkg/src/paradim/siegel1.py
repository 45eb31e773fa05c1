"""Dimensions of vector-valued Siegel cusp forms of degree 2, level 1,
weight det^k Sym(j), for j in {0, 2, 4}, via their generating functions.

For other even j a dimension table can be injected with
register_level1_table (e.g. from an external closed-form evaluation);
queries for unregistered j raise UnsupportedJ.
"""
import threading

from .errors import MissingData, UnsupportedJ
from .exactmath import RationalGF, series_coeffs


def _sparse(*terms):
    """Numerator coefficient list from (exponent, coefficient) pairs."""
    coeffs = [0] * (max(e for e, _ in terms) + 1)
    for e, c in terms:
        coeffs[e] += c
    return coeffs


LEVEL1_SERIES = {
    0: RationalGF(_sparse((10, 1), (12, 1), (22, -1), (35, 1)), [4, 6, 10, 12]),
    2: RationalGF(
        _sparse(
            (14, 1), (16, 2), (18, 1), (22, 1), (26, -1), (28, -1),
            (21, 1), (23, 1), (27, 1), (29, 1), (33, -1),
        ),
        [4, 6, 10, 12],
    ),
    4: RationalGF(
        _sparse(
            (10, 1), (12, 1), (14, 1), (15, 1), (16, 1), (17, 1), (18, 1),
            (19, 1), (20, 1), (21, 1), (23, 1), (30, -1),
        ),
        [4, 6, 10, 12],
    ),
}

_coeff_cache = {}
_tables = {}
_lock = threading.Lock()


def _coeffs_up_to(j, k):
    cached = _coeff_cache.get(j)
    if cached is None or len(cached) <= k:
        cached = series_coeffs(LEVEL1_SERIES[j], max(k + 1, 128))
        _coeff_cache[j] = cached
    return cached


def dim_cusp_sp4(k, j=0):
    """dim of weight det^k Sym(j) level-1 Siegel cusp forms of degree 2."""
    if j in LEVEL1_SERIES:
        return _coeffs_up_to(j, k)[k]
    table = _tables.get(j)
    if table is None:
        raise UnsupportedJ(f"j = {j}: no built-in series and no registered table")
    try:
        return table[k]
    except KeyError:
        raise MissingData(f"registered table for j = {j} has no entry at k = {k}") from None


def register_level1_table(j, dims):
    """Install an external k -> dimension table for an even j >= 6."""
    if j % 2 or j in LEVEL1_SERIES:
        raise UnsupportedJ(f"register_level1_table needs even j >= 6, got {j}")
    with _lock:
        if j in _tables:
            raise MissingData(f"table for j = {j} already registered")
        _tables[j] = dict(dims)
