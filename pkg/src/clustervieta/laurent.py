"""Sparse Laurent polynomials over the integers and unreduced fractions of them.

A :class:`LaurentPoly` is a map from signed exponent vectors to nonzero
integer coefficients.  A :class:`RationalFn` is a pair ``num / den`` that is
never reduced; equality is decided by cross-multiplication, so no
multivariate gcd is ever needed.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]

# exponents are machine-width integers; anything larger is a bug upstream
_EXP_LIMIT = 2**62


class ShapeError(ValueError):
    """Operands live in polynomial rings with different numbers of variables."""


class LaurentDivisionError(ZeroDivisionError):
    pass


def _grlex_key(exp: Exponent) -> tuple[int, Exponent]:
    return (sum(exp), exp)


class LaurentPoly:
    """Element of Z[x1^(+-1), ..., xn^(+-1)].

    Instances are immutable and hashable; two polynomials compare equal iff
    their term maps agree exactly.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponent, int] = {}
        for exp, coeff in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars:
                raise ShapeError(f"exponent {exp} has length {len(exp)}, expected {nvars}")
            if any(abs(e) >= _EXP_LIMIT for e in exp):
                raise OverflowError(f"exponent out of range: {exp}")
            if isinstance(coeff, Fraction):
                if coeff.denominator != 1:
                    raise ValueError(f"non-integer coefficient {coeff}")
                coeff = coeff.numerator
            acc[exp] = acc.get(exp, 0) + int(coeff)
        self.nvars = nvars
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash: int | None = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> LaurentPoly:
        return cls(nvars)

    @classmethod
    def constant(cls, c: int, nvars: int) -> LaurentPoly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], coeff: int = 1) -> LaurentPoly:
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def var(cls, i: int, nvars: int) -> LaurentPoly:
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise IndexError(f"variable index {i} out of range 1..{nvars}")
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    @classmethod
    def gens(cls, nvars: int) -> tuple[LaurentPoly, ...]:
        return tuple(cls.var(i, nvars) for i in range(1, nvars + 1))

    # -- inspection -------------------------------------------------------

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        """True for +-x^a, the invertible elements of the Laurent ring."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Terms in descending graded-lexicographic order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def leading_term(self) -> tuple[Exponent, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self._terms, key=_grlex_key)
        return exp, self._terms[exp]

    def min_exponents(self) -> Exponent:
        if not self._terms:
            return (0,) * self.nvars
        return tuple(min(col) for col in zip(*self._terms))

    def coefficient_sum(self) -> int:
        return sum(self._terms.values())

    # -- arithmetic -------------------------------------------------------

    def _check(self, other: LaurentPoly) -> None:
        if self.nvars != other.nvars:
            raise ShapeError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.nvars)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_unit():
                raise ValueError("negative powers only exist for monomial units")
            (e, c), = self._terms.items()
            return LaurentPoly(self.nvars, {tuple(x * k for x in e): c**-k})
        result = LaurentPoly.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def shift(self, exp: Sequence[int]) -> LaurentPoly:
        """Multiply by the monomial x^exp."""
        return LaurentPoly(
            self.nvars, {tuple(a + b for a, b in zip(e, exp)): c for e, c in self._terms.items()}
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.nvars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, {render(self)!r})"

    def __str__(self) -> str:
        return render(self)

    def __truediv__(self, other):
        if isinstance(other, (LaurentPoly, int)):
            return RationalFn(self, other)
        if isinstance(other, RationalFn):
            return RationalFn(self) / other
        return NotImplemented

    def evaluate(self, point: Sequence) -> Fraction:
        """Exact value at a point of nonzero rationals."""
        if len(point) != self.nvars:
            raise ShapeError("point has wrong length")
        pt = [Fraction(p) for p in point]
        total = Fraction(0)
        for e, c in self._terms.items():
            term = Fraction(c)
            for p, k in zip(pt, e):
                if k:
                    term *= p**k
            total += term
        return total


# -- exact division -------------------------------------------------------


def _poly_divide(p: dict[Exponent, int], q: dict[Exponent, int]) -> dict[Exponent, int] | None:
    """Exact division of ordinary polynomials (nonnegative exponents).

    Classic multivariate division against the single divisor ``q`` in
    graded-lex order.  Returns ``None`` as soon as a leading term is not
    divisible, which is conclusive because grlex is a monomial order.
    """
    lq = max(q, key=_grlex_key)
    cq = q[lq]
    rest_q = [(e, c) for e, c in q.items() if e != lq]
    rem = dict(p)
    quot: dict[Exponent, int] = {}
    while rem:
        lr = max(rem, key=_grlex_key)
        cr = rem[lr]
        me = tuple(a - b for a, b in zip(lr, lq))
        if any(x < 0 for x in me) or cr % cq:
            return None
        mc = cr // cq
        quot[me] = mc
        del rem[lr]
        for e, c in rest_q:
            t = tuple(a + b for a, b in zip(e, me))
            v = rem.get(t, 0) - mc * c
            if v:
                rem[t] = v
            else:
                rem.pop(t, None)
    return quot


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly | None:
    """Return ``r`` with ``r * q == p`` if such a Laurent polynomial exists.

    Both operands are shifted by monomials so that no variable divides
    them; since variables are prime in the polynomial ring, the shifted
    quotient must then be an ordinary polynomial, and one polynomial
    division settles existence.  Quotients that would need non-integer
    coefficients are reported as absent.
    """
    p._check(q)
    if q.is_zero():
        raise LaurentDivisionError("division by the zero Laurent polynomial")
    if p.is_zero():
        return LaurentPoly.zero(p.nvars)
    mp, mq = p.min_exponents(), q.min_exponents()
    p0 = p.shift([-e for e in mp])
    q0 = q.shift([-e for e in mq])
    quot = _poly_divide(p0._terms, q0._terms)
    if quot is None:
        return None
    return LaurentPoly(p.nvars, quot).shift([a - b for a, b in zip(mp, mq)])


def weighted_degree(p: LaurentPoly, weights: Sequence[int]) -> int | None:
    """Common weighted degree of all terms, or ``None`` if ``p`` is not homogeneous."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no degree")
    if len(weights) != p.nvars:
        raise ShapeError("weight vector has wrong length")
    degrees = {sum(w * e for w, e in zip(weights, exp)) for exp in p._terms}
    return degrees.pop() if len(degrees) == 1 else None


# -- fractions ------------------------------------------------------------


class RationalFn:
    """Unreduced quotient of two Laurent polynomials; stands in for the ambient field."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | int = 1):
        if isinstance(den, int):
            den = LaurentPoly.constant(den, num.nvars)
        num._check(den)
        if den.is_zero():
            raise LaurentDivisionError("zero denominator")
        self.num = num
        self.den = den

    def normalized(self) -> RationalFn:
        """Equal fraction with a unit denominator folded into the numerator."""
        if self.den.is_unit():
            (e, c), = self.den.items()
            return RationalFn(self.num.shift([-x for x in e]) * c)
        return self

    @property
    def nvars(self) -> int:
        return self.num.nvars

    @classmethod
    def lift(cls, x, nvars: int | None = None) -> RationalFn:
        if isinstance(x, RationalFn):
            return x
        if isinstance(x, LaurentPoly):
            return cls(x)
        if isinstance(x, int) and nvars is not None:
            return cls(LaurentPoly.constant(x, nvars))
        raise TypeError(f"cannot lift {type(x).__name__} to RationalFn")

    def _other(self, other) -> RationalFn | None:
        if isinstance(other, (RationalFn, LaurentPoly, int)):
            return RationalFn.lift(other, self.nvars)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.den == self.den:
            return RationalFn(self.num + o.num, self.den)
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFn:
        return RationalFn(-self.num, self.den)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RationalFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int) -> RationalFn:
        if k >= 0:
            return RationalFn(self.num**k, self.den**k)
        return RationalFn(self.den**-k, self.num**-k)

    def __eq__(self, other) -> bool:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return fraction_equal(self, o)

    __hash__ = None  # semantic equality has no cheap canonical hash

    def to_laurent(self) -> LaurentPoly | None:
        """The quotient as a Laurent polynomial, if it is one."""
        return exact_div(self.num, self.den)

    def evaluate(self, point: Sequence) -> Fraction:
        d = self.den.evaluate(point)
        if d == 0:
            raise ZeroDivisionError("denominator vanishes at point")
        return self.num.evaluate(point) / d

    def __repr__(self) -> str:
        return f"RationalFn(({render(self.num)}) / ({render(self.den)}))"

    def __str__(self) -> str:
        if self.den == 1:
            return render(self.num)
        return f"({render(self.num)})/({render(self.den)})"


def fraction_equal(f: RationalFn, g: RationalFn) -> bool:
    if f.nvars != g.nvars:
        raise ShapeError("nvars mismatch")
    return f.num * g.den == g.num * f.den


def substitute(p: LaurentPoly | RationalFn, images: Sequence) -> RationalFn:
    """Compose ``p`` with per-variable images (RationalFn, LaurentPoly or int).

    Terms are put over one common denominator built from the largest
    positive and negative exponent of each variable, so the result stays
    polynomial-sized instead of multiplying out one denominator per term.
    """
    if isinstance(p, RationalFn):
        return substitute(p.num, images) / substitute(p.den, images)
    if len(images) != p.nvars:
        raise ShapeError(f"need {p.nvars} images, got {len(images)}")
    imgs = []
    m = None
    for im in images:
        if isinstance(im, (RationalFn, LaurentPoly)):
            m = im.nvars if m is None else m
    if m is None:
        m = 1
    for im in images:
        r = RationalFn.lift(im, m)
        if r.nvars != m:
            raise ShapeError("images live in different rings")
        if r.num.is_zero() and any(e[len(imgs)] < 0 for e in p._terms):
            raise LaurentDivisionError("negative power of an image that is zero")
        imgs.append(r)
    if p.is_zero():
        return RationalFn(LaurentPoly.zero(m))

    exps = list(p._terms)
    maxpos = [max(0, max(e[i] for e in exps)) for i in range(p.nvars)]
    maxneg = [max(0, -min(e[i] for e in exps)) for i in range(p.nvars)]

    one = LaurentPoly.constant(1, m)
    pow_cache: dict[tuple[int, bool, int], LaurentPoly] = {}

    def power(i: int, use_num: bool, k: int) -> LaurentPoly:
        key = (i, use_num, k)
        if key not in pow_cache:
            base = imgs[i].num if use_num else imgs[i].den
            pow_cache[key] = base**k if k else one
        return pow_cache[key]

    den = one
    for i in range(p.nvars):
        den = den * power(i, False, maxpos[i]) * power(i, True, maxneg[i])

    num = LaurentPoly.zero(m)
    for e, c in p._terms.items():
        term = LaurentPoly.constant(c, m)
        for i, k in enumerate(e):
            if k >= 0:
                term = term * power(i, True, k + maxneg[i]) * power(i, False, maxpos[i] - k)
            else:
                term = term * power(i, False, -k + maxpos[i]) * power(i, True, maxneg[i] + k)
        num = num + term
    return RationalFn(num, den)


# -- text form ------------------------------------------------------------


def _render_monomial(exp: Exponent) -> str:
    parts = []
    for i, k in enumerate(exp, start=1):
        if k == 0:
            continue
        if k == 1:
            parts.append(f"x{i}")
        elif k > 0:
            parts.append(f"x{i}^{k}")
        else:
            parts.append(f"x{i}^({k})")
    return "*".join(parts)


def render(p: LaurentPoly) -> str:
    """Render as text, e.g. ``x2^2*x1^(-1)`` style terms joined by +/-.

    Terms appear in descending graded-lex order; negative exponents are
    parenthesised so the output parses back unambiguously.
    """
    if p.is_zero():
        return "0"
    out = []
    for n, (exp, c) in enumerate(p.sorted_terms()):
        mono = _render_monomial(exp)
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if n == 0:
            out.append(body if sign == "+" else f"-{body}")
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


_FACTOR_RE = re.compile(r"^x(\d+)(?:\^(\d+|\(-?\d+\)))?$")


def parse(text: str, nvars: int) -> LaurentPoly:
    """Inverse of :func:`render`."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(nvars)
    # protect negative exponents so the +/- split below is safe
    guarded = re.sub(r"\^\((-?\d+)\)", lambda m: "^(" + m.group(1).replace("-", "~") + ")", text)
    pieces = re.findall(r"([+-]?)\s*([^+-]+)", guarded.replace(" ", ""))
    if not pieces:
        raise ValueError(f"cannot parse polynomial: {text!r}")
    terms: dict[Exponent, int] = {}
    for sign, body in pieces:
        coeff = 1
        exp = [0] * nvars
        for factor in body.split("*"):
            factor = factor.replace("~", "-")
            if factor.isdigit():
                coeff *= int(factor)
                continue
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            i = int(m.group(1))
            if not 1 <= i <= nvars:
                raise ValueError(f"variable x{i} out of range")
            k = m.group(2)
            exp[i - 1] += 1 if k is None else int(k.strip("()"))
        if sign == "-":
            coeff = -coeff
        key = tuple(exp)
        terms[key] = terms.get(key, 0) + coeff
    return LaurentPoly(nvars, terms)
