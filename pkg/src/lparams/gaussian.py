"""Gaussian rationals a + b*i with exact Fraction components."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Tuple, Union

from .errors import InputError

Rat = Union[int, Q]


@dataclass(frozen=True, eq=False)
class GaussQ:
    """One complex number with rational real and imaginary parts."""

    re: Q = Q(0)
    im: Q = Q(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Q(self.re))
        object.__setattr__(self, "im", Q(self.im))

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussQ):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Q)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        # equal to hash of the plain rational when the imaginary part is zero
        return hash(self.re) if self.im == 0 else hash((self.re, self.im))

    def __add__(self, other: "GaussQ | Rat") -> "GaussQ":
        other = as_gauss(other)
        return GaussQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: "GaussQ | Rat") -> "GaussQ":
        other = as_gauss(other)
        return GaussQ(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: Rat) -> "GaussQ":
        return as_gauss(other) - self

    def __neg__(self) -> "GaussQ":
        return GaussQ(-self.re, -self.im)

    def __mul__(self, other: "GaussQ | Rat") -> "GaussQ":
        other = as_gauss(other)
        return GaussQ(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conj(self) -> "GaussQ":
        return GaussQ(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_rational(self) -> bool:
        return self.im == 0

    def sort_key(self) -> Tuple[Q, Q]:
        return (self.re, self.im)

    def __str__(self) -> str:
        return format_gauss(self)


def as_gauss(x: "GaussQ | Rat") -> GaussQ:
    if isinstance(x, GaussQ):
        return x
    return GaussQ(Q(x))


GVec = Tuple[GaussQ, ...]


def gvec(entries) -> GVec:
    return tuple(as_gauss(e) for e in entries)


def gvec_add(a: GVec, b: GVec) -> GVec:
    return tuple(x + y for x, y in zip(a, b))


def gvec_sub(a: GVec, b: GVec) -> GVec:
    return tuple(x - y for x, y in zip(a, b))


def gvec_neg(a: GVec) -> GVec:
    return tuple(-x for x in a)


def gvec_conj(a: GVec) -> GVec:
    return tuple(x.conj() for x in a)


def format_gauss(z: GaussQ) -> str:
    """Canonical "a/b+c/di" form; pure reals drop the imaginary half."""
    if z.im == 0:
        return str(z.re)
    sign = "+" if z.im > 0 else "-"
    return f"{z.re}{sign}{abs(z.im)}i"


_GAUSS_RE = re.compile(
    r"""^\s*
        (?P<re>[+-]?\d+(?:/\d+)?)?
        (?:(?P<sign>[+-])?(?P<im>\d+(?:/\d+)?)?i)?
        \s*$""",
    re.VERBOSE,
)


def parse_gauss(text: str) -> GaussQ:
    """Parse "a/b", "a/b+c/di", "c/di", "-i" and friends."""
    if not isinstance(text, str):
        raise InputError(f"expected a string, got {text!r}")
    m = _GAUSS_RE.match(text)
    if not m or (m.group("re") is None and "i" not in text):
        raise InputError(f"bad Gaussian rational: {text!r}")
    has_i = text.strip().endswith("i")
    re_part = m.group("re")
    sign = m.group("sign")
    im_part = m.group("im")
    try:
        if not has_i:
            if re_part is None or sign is not None or im_part is not None:
                raise InputError(f"bad Gaussian rational: {text!r}")
            return GaussQ(Q(re_part))
        if re_part is not None and sign is None:
            # forms like "3/2i": the leading number is the imaginary part
            if im_part is not None:
                raise InputError(f"bad Gaussian rational: {text!r}")
            return GaussQ(0, Q(re_part))
        real = Q(re_part) if re_part is not None else Q(0)
        mag = Q(im_part) if im_part is not None else Q(1)
        imag = -mag if sign == "-" else mag
        return GaussQ(real, imag)
    except ZeroDivisionError as exc:
        raise InputError(f"bad Gaussian rational: {text!r}") from exc
