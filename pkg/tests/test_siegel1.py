import pytest

from paradim.errors import MissingData, UnsupportedJ
from paradim.exactmath import series_coeffs
from paradim.siegel1 import LEVEL1_SERIES, dim_cusp_sp4, register_level1_table


def test_scalar_valued_known_dims():
    # the Igusa generators: first cusp forms in weights 10, 12, 35
    for k in range(0, 10):
        assert dim_cusp_sp4(k) == 0, k
    assert dim_cusp_sp4(10) == 1
    assert dim_cusp_sp4(11) == 0
    assert dim_cusp_sp4(12) == 1
    assert dim_cusp_sp4(35) == 1
    assert dim_cusp_sp4(20) == 3


def test_scalar_series_palindromic_shape():
    gf = LEVEL1_SERIES[0]
    assert gf.denom_exponents == (4, 6, 10, 12)


def test_vector_valued_first_dims():
    # j = 2: no cusp forms below weight 14
    assert all(dim_cusp_sp4(k, 2) == 0 for k in range(0, 10))
    assert dim_cusp_sp4(14, 2) == 1
    # j = 4: the first vector-valued cusp form is Ibukiyama's weight (10, 4)
    assert dim_cusp_sp4(10, 4) == 1
    assert all(dim_cusp_sp4(k, 4) == 0 for k in range(0, 10))


def test_series_coeffs_nonnegative():
    for j, gf in LEVEL1_SERIES.items():
        assert all(c >= 0 for c in series_coeffs(gf, 100)), j


def test_unsupported_j():
    with pytest.raises(UnsupportedJ):
        dim_cusp_sp4(10, 6)


def test_register_table():
    register_level1_table(26, {4: 0, 5: 1})
    assert dim_cusp_sp4(5, 26) == 1
    with pytest.raises(MissingData):
        dim_cusp_sp4(99, 26)
    with pytest.raises(MissingData):
        register_level1_table(26, {})
    with pytest.raises(UnsupportedJ):
        register_level1_table(2, {})
