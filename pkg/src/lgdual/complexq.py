"""Exact complex numbers with rational real and imaginary parts.

Kahler-type class decorations live in C/Z tensor a finitely generated
group; deciding class equality needs exact arithmetic, so lifts are kept
as pairs of Fractions rather than floats.  The text form is ``a+bi`` where
both parts accept anything Fraction parses ("2/3", "0.25", "-1e-3").
"""

import re
from dataclasses import dataclass
from fractions import Fraction

__all__ = ["ComplexQ", "parse_complex", "format_complex"]


@dataclass(frozen=True)
class ComplexQ:
    re: Fraction
    im: Fraction

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __add__(self, other):
        other = _coerce(other)
        return ComplexQ(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return ComplexQ(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        return ComplexQ(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __neg__(self):
        return ComplexQ(-self.re, -self.im)

    def is_integer(self):
        return self.im == 0 and self.re.denominator == 1

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __str__(self):
        return format_complex(self)


def _coerce(x):
    if isinstance(x, ComplexQ):
        return x
    if isinstance(x, (int, Fraction)):
        return ComplexQ(x, 0)
    raise TypeError("cannot mix ComplexQ with %r" % (x,))


def parse_complex(text):
    """Parse ``a+bi`` / ``a`` / ``bi`` / ``i`` into a ComplexQ.

    Both components may be any Fraction-parsable literal, e.g. "1/2-3i",
    "0.25+1e-2i", "-i", "2".
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty complex literal")
    # hide exponent signs from the term splitter ("1e-3" is one term)
    protected = re.sub(r"([0-9.][eE])\+", "\\1\x00", s)
    protected = re.sub(r"([0-9.][eE])-", "\\1\x01", protected)
    terms = re.findall(r"[+-]?[^+-]+", protected)
    if "".join(terms) != protected:
        raise ValueError("bad complex literal %r" % text)
    terms = [t.replace("\x00", "+").replace("\x01", "-") for t in terms]
    if not 1 <= len(terms) <= 2:
        raise ValueError("bad complex literal %r" % text)
    re_part = None
    im_part = None
    for t in terms:
        if t[-1] in "iIjJ":
            if im_part is not None:
                raise ValueError("two imaginary components in %r" % text)
            body = t[:-1]
            if body in ("", "+"):
                im_part = Fraction(1)
            elif body == "-":
                im_part = Fraction(-1)
            else:
                im_part = Fraction(body)
        else:
            if re_part is not None:
                raise ValueError("two real components in %r" % text)
            re_part = Fraction(t)
    return ComplexQ(re_part or 0, im_part or 0)


def format_complex(z):
    """Canonical ``a+bi`` text form; pure reals drop the imaginary part."""
    if isinstance(z, complex):
        sign = "+" if z.imag >= 0 else "-"
        return "%r%s%ri" % (z.real, sign, abs(z.imag))
    if z.im == 0:
        return str(z.re)
    sign = "+" if z.im >= 0 else "-"
    mag = abs(z.im)
    return "%s%s%si" % (str(z.re), sign, str(mag))
