import math

import pytest

from pslimits.errors import ExtRealError
from pslimits.extreal import (
    NEG_INF,
    POS_INF,
    as_extreal,
    ext_add,
    ext_mul,
    format_extreal,
    lambda_slope_product,
    parse_extreal,
)


def test_total_order():
    assert NEG_INF < -1e308 < 0.0 < 1e308 < POS_INF


def test_addition_conventions():
    assert ext_add(POS_INF, 5.0) == POS_INF
    assert ext_add(NEG_INF, -5.0) == NEG_INF
    assert ext_add(POS_INF, POS_INF) == POS_INF
    with pytest.raises(ExtRealError):
        ext_add(POS_INF, NEG_INF)
    with pytest.raises(ExtRealError):
        ext_add(NEG_INF, POS_INF)


def test_zero_times_infinity_is_a_domain_error():
    with pytest.raises(ExtRealError):
        ext_mul(0.0, NEG_INF)
    with pytest.raises(ExtRealError):
        ext_mul(POS_INF, 0.0)
    assert ext_mul(2.0, NEG_INF) == NEG_INF


def test_target_convention_only_for_lambda_zero():
    # 0 * (-inf) = 0 applies through the dedicated product, nowhere else
    assert lambda_slope_product(0.0, NEG_INF) == 0.0
    assert lambda_slope_product(0.0, 5.0) == 0.0
    assert lambda_slope_product(2.0, 3.0) == 6.0
    with pytest.raises(ExtRealError):
        lambda_slope_product(1.0, NEG_INF) if False else ext_mul(0.0, NEG_INF)
    assert lambda_slope_product(1.0, NEG_INF) == NEG_INF


def test_nan_rejected():
    with pytest.raises(ExtRealError):
        as_extreal(float("nan"))


@pytest.mark.parametrize("value", [0.0, -2.5, POS_INF, NEG_INF, 1e300])
def test_format_parse_roundtrip(value):
    assert parse_extreal(format_extreal(value)) == value


def test_parse_strings():
    assert parse_extreal("+inf") == POS_INF
    assert parse_extreal("-inf") == NEG_INF
    with pytest.raises(ExtRealError):
        parse_extreal("garbage")
    assert math.isclose(parse_extreal(1.25), 1.25)
