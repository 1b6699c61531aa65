"""Normalized univariate rational functions over exact rationals.

The canonical internal form has coprime numerator/denominator and a monic
denominator; zero is 0/1.  Equality is therefore structural.  The formal
variable is treated as transcendental: a RatFunc "is" a number only when both
parts have degree zero (see :func:`RatFunc.as_constant`).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Optional, Union

from limfuse.exact.poly import Poly, Rat

Scalar = Union[int, Rat, Poly, "RatFunc"]


class DivisionByZero(ZeroDivisionError):
    """Division by the zero rational function."""


class DegenerateSubstitution(ValueError):
    """Substitution that annihilates the denominator identically."""


class RatFunc:
    """Quotient of two polynomials in one formal variable, kept normalized."""

    __slots__ = ("num", "den")

    def __init__(self, num: Scalar = 0, den: Scalar = 1):
        if isinstance(num, RatFunc) or isinstance(den, RatFunc):
            f = _coerce(num) / _coerce(den)
            object.__setattr__(self, "num", f.num)
            object.__setattr__(self, "den", f.den)
            return
        num = Poly(num)
        den = Poly(den)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            num, den = Poly(), Poly(1)
        else:
            g = num.gcd(den)
            if g.degree > 0:
                num = num.divmod(g)[0]
                den = den.divmod(g)[0]
            lead = den.leading
            if lead != 1:
                inv = 1 / lead
                num = num * inv
                den = den * inv
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @staticmethod
    def var() -> "RatFunc":
        """The formal variable as a rational function."""
        return RatFunc(Poly.x())

    @staticmethod
    def const(c: Union[int, Rat]) -> "RatFunc":
        return RatFunc(Poly(Fraction(c)))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __add__(self, other: Scalar) -> "RatFunc":
        other = _coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __sub__(self, other: Scalar) -> "RatFunc":
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> "RatFunc":
        return _coerce(other) + (-self)

    def __mul__(self, other: Scalar) -> "RatFunc":
        other = _coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "RatFunc":
        other = _coerce(other)
        if other.is_zero():
            raise DivisionByZero("division by the zero function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other: Scalar) -> "RatFunc":
        return _coerce(other) / self

    def __pow__(self, n: int) -> "RatFunc":
        if n < 0:
            return RatFunc(self.den, self.num) ** (-n)
        return RatFunc(self.num**n, self.den**n)

    def substitute(self, g: "RatFunc") -> "RatFunc":
        """Composition self(g).

        Raises DegenerateSubstitution when the composed denominator vanishes
        identically (g hits a pole of self as a function of the variable).
        """
        g = _coerce(g)
        # f = sum a_k x^k / sum b_k x^k  ->  clear g.den powers of both parts.
        n = max(self.num.degree, self.den.degree, 0)
        num_acc = Poly()
        den_acc = Poly()
        gn_pows = [Poly(1)]
        gd_pows = [Poly(1)]
        for _ in range(n):
            gn_pows.append(gn_pows[-1] * g.num)
            gd_pows.append(gd_pows[-1] * g.den)
        for k, c in enumerate(self.num.coeffs):
            num_acc = num_acc + gn_pows[k] * gd_pows[n - k] * c
        for k, c in enumerate(self.den.coeffs):
            den_acc = den_acc + gn_pows[k] * gd_pows[n - k] * c
        if den_acc.is_zero():
            raise DegenerateSubstitution("substitution lands in a pole")
        return RatFunc(num_acc, den_acc)

    def as_constant(self) -> Optional[Rat]:
        """The constant value, or None when the variable genuinely occurs."""
        if self.num.is_zero():
            return Fraction(0)
        if self.num.degree == 0 and self.den.degree == 0:
            return self.num.coeffs[0] / self.den.coeffs[0]
        return None

    def is_integer_constant(self) -> bool:
        c = self.as_constant()
        return c is not None and c.denominator == 1

    def eval(self, x: Union[int, Rat]) -> Rat:
        """Evaluate at a rational point; the point must avoid the poles."""
        d = self.den.eval(x)
        if d == 0:
            raise DivisionByZero(f"evaluation at a pole: {x}")
        return self.num.eval(x) / d

    def __str__(self) -> str:
        return format_ratfunc(self)

    def __repr__(self) -> str:
        return f"RatFunc({format_ratfunc(self)!r})"


def _coerce(v: Scalar) -> RatFunc:
    return v if isinstance(v, RatFunc) else RatFunc(v)


# ---------------------------------------------------------------------------
# canonical text form: integer-coefficient fraction with descending powers and
# explicit '*', e.g. "(3*t^2-6*t+3)/(4*t)"; a denominator of one is omitted.
# ---------------------------------------------------------------------------


def _int_scaled(f: RatFunc) -> tuple[list[int], list[int]]:
    """Scale num/den jointly to coprime integer coefficient lists (ascending)."""
    denoms = [c.denominator for c in f.num.coeffs] + [c.denominator for c in f.den.coeffs]
    scale = 1
    for d in denoms:
        scale = scale * d // _gcd(scale, d)
    num = [int(c * scale) for c in f.num.coeffs]
    den = [int(c * scale) for c in f.den.coeffs]
    content = 0
    for c in num + den:
        content = _gcd(content, abs(c))
    if content > 1:
        num = [c // content for c in num]
        den = [c // content for c in den]
    return num, den


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _format_intpoly(coeffs: list[int], var: str) -> str:
    if not coeffs:
        return "0"
    parts: list[str] = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = f"{var}" if mag == 1 else f"{mag}*{var}"
        else:
            body = f"{var}^{k}" if mag == 1 else f"{mag}*{var}^{k}"
        parts.append(sign + body)
    return "".join(parts) if parts else "0"


def format_ratfunc(f: RatFunc, var: str = "t") -> str:
    c = f.as_constant()
    if c is not None:
        return format_rat(c)
    num, den = _int_scaled(f)
    num_s = _format_intpoly(num, var)
    if den == [1]:
        return num_s
    den_s = _format_intpoly(den, var)
    return f"({num_s})/({den_s})"


def format_rat(q: Rat) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


_RAT_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def parse_rat(text: str) -> Rat:
    text = text.strip().replace("−", "-")
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"not a rational: {text!r}")
    return Fraction(int(m.group(1)), int(m.group(2) or 1))


_TERM_RE = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:
            (?P<coeff>\d+)\s*(?:\*\s*(?P<var1>[A-Za-z]\w*)\s*(?:\^\s*(?P<exp1>\d+))?)?
          | (?P<var2>[A-Za-z]\w*)\s*(?:\^\s*(?P<exp2>\d+))?
        )\s*""",
    re.VERBOSE,
)


def _parse_intpoly(text: str, var: Optional[str]) -> tuple[Poly, Optional[str]]:
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        depth = 0
        for k, ch in enumerate(text):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0 and k < len(text) - 1:
                break
        else:
            text = text[1:-1].strip()
    if not text:
        raise ValueError("empty polynomial")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad polynomial syntax at {text[pos:]!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"missing +/- before {text[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        name = m.group("var1") or m.group("var2")
        if name is not None:
            if var is None:
                var = name
            elif name != var:
                raise ValueError(f"mixed variables {var!r} and {name!r}")
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        exp = 0
        if name is not None:
            exp_s = m.group("exp1") or m.group("exp2")
            exp = int(exp_s) if exp_s else 1
        coeffs[exp] = coeffs.get(exp, Fraction(0)) + sign * coeff
        pos = m.end()
        first = False
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, c in coeffs.items():
        out[k] = c
    return Poly(out), var


def parse_ratfunc(text: str, var: Optional[str] = None) -> RatFunc:
    """Parse the canonical integer-coefficient fraction form.

    The variable letter is inferred when not supplied; a bare polynomial
    (no top-level '/') is accepted.
    """
    text = text.strip().replace("−", "-")
    depth = 0
    split = None
    for k, ch in enumerate(text):
        depth += ch == "("
        depth -= ch == ")"
        if ch == "/" and depth == 0:
            if split is not None:
                raise ValueError("more than one top-level '/'")
            split = k
    if split is None:
        num, _ = _parse_intpoly(text, var)
        return RatFunc(num)
    num, var = _parse_intpoly(text[:split], var)
    den, _ = _parse_intpoly(text[split + 1 :], var)
    if den.is_zero():
        raise DivisionByZero("zero denominator in text form")
    return RatFunc(num, den)
