"""Extended-real scalars and their arithmetic conventions.

Extended reals are plain Python/numpy floats: ``-inf`` and ``+inf`` are
first-class values with the builtin total order, which is exactly the order
required here.  NaN is *not* an extended real and is rejected at every entry
point.  Two operations need conventions beyond IEEE:

* ``(+inf) + (-inf)`` is a domain error (:class:`~pslimits.errors.ExtRealError`),
  never NaN;
* ``0 * (+-inf)`` is a domain error everywhere except in the tail-limit
  target, where ``lambda * slope`` with ``lambda == 0`` is defined as ``0``
  (see :func:`lambda_slope_product`).
"""

from __future__ import annotations

import math

from .errors import ExtRealError

NEG_INF = float("-inf")
POS_INF = float("inf")

#: Alias documenting intent; extended reals are represented as floats.
ExtReal = float


def as_extreal(x) -> float:
    """Coerce to float and reject NaN."""
    v = float(x)
    if math.isnan(v):
        raise ExtRealError("NaN is not an extended real")
    return v


def is_finite(x: float) -> bool:
    return NEG_INF < x < POS_INF


def ext_add(a: float, b: float) -> float:
    """Extended-real addition; (+inf)+(-inf) is a domain error."""
    a = as_extreal(a)
    b = as_extreal(b)
    if (a == POS_INF and b == NEG_INF) or (a == NEG_INF and b == POS_INF):
        raise ExtRealError("(+inf) + (-inf) is undefined")
    return a + b


def ext_sub(a: float, b: float) -> float:
    return ext_add(a, -as_extreal(b))


def ext_mul(a: float, b: float) -> float:
    """Extended-real product; 0 * (+-inf) is a domain error here.

    The ``0 * (-inf) = 0`` convention is deliberately *not* implemented by
    this function: it applies only inside the tail-limit target, via
    :func:`lambda_slope_product`.
    """
    a = as_extreal(a)
    b = as_extreal(b)
    if (a == 0.0 and not is_finite(b)) or (b == 0.0 and not is_finite(a)):
        raise ExtRealError("0 * inf is undefined outside the target convention")
    return a * b


def lambda_slope_product(lam: float, slope: float) -> float:
    """``lam * slope`` with the target convention ``0 * (-inf) = 0``.

    Used when assembling ``L(lam+) - lam * L'_r(lam+)``: the slope may be
    ``-inf`` only when ``lam == 0``, and the product is then zero.
    """
    lam = as_extreal(lam)
    slope = as_extreal(slope)
    if lam == 0.0:
        return 0.0
    return ext_mul(lam, slope)


def format_extreal(x: float):
    """JSON-friendly form: finite floats pass through, infinities as strings."""
    x = as_extreal(x)
    if x == POS_INF:
        return "+inf"
    if x == NEG_INF:
        return "-inf"
    return x


def parse_extreal(v) -> float:
    """Inverse of :func:`format_extreal`; accepts numbers and inf strings."""
    if isinstance(v, str):
        s = v.strip().lower()
        if s in ("+inf", "inf", "infinity", "+infinity"):
            return POS_INF
        if s in ("-inf", "-infinity"):
            return NEG_INF
        raise ExtRealError(f"cannot parse extended real from {v!r}")
    return as_extreal(v)
