"""Exact sparse Laurent polynomials over the integers.

``BiLaurent`` lives in Z[u^{+-1}, v^{+-1}] and ``UniLaurent`` in Z[t^{+-1}].
Both are immutable maps from exponents to nonzero integer coefficients, so
equality is term-map equality and values can be shared freely between threads.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from sympy.polys.domains import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

from vknots.errors import (
    DivisionByZeroError,
    MalformedPolynomialError,
    NotDivisibleError,
)

# Exact division runs in Z[u, v] under graded lex with u > v.
_DIVISION_RING, _, _ = ring("u,v", ZZ, grlex)

_UNI_TERM = re.compile(r"^(?P<coeff>\d+)?(?:\*?(?P<var>t)(?:\^(?P<exp>-?\d+))?)?$")


class _Laurent:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable | None = None):
        clean: dict = {}
        if terms:
            for key, coeff in dict(terms).items():
                coeff = int(coeff)
                if coeff:
                    clean[self._normalize_key(key)] = coeff
        self._terms = clean

    @classmethod
    def _wrap(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    # Subclass hooks
    @staticmethod
    def _normalize_key(key):
        raise NotImplementedError

    @staticmethod
    def _add_keys(a, b):
        raise NotImplementedError

    _ZERO_KEY: object = None

    def _monomial_text(self, key) -> str:
        raise NotImplementedError

    # Read access
    def items(self) -> Iterator:
        return iter(sorted(self._terms.items()))

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, key) -> int:
        return self._terms.get(self._normalize_key(key), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # Comparison
    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, int):
            return type(self)._wrap({self._ZERO_KEY: other} if other else {})
        return None

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash((type(self).__name__, frozenset(self._terms.items())))

    # Ring operations
    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            total = out.get(key, 0) + coeff
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return type(self)._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._wrap({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, k: int):
        if not k:
            return type(self)()
        return type(self)._wrap({key: c * k for key, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        out: dict = {}
        add_keys = self._add_keys
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                key = add_keys(k1, k2)
                out[key] = out.get(key, 0) + c1 * c2
        return type(self)._wrap({k: c for k, c in out.items() if c})

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __pow__(self, exponent: int):
        if exponent < 0:
            if not self.is_monomial():
                raise DivisionByZeroError(
                    "only monomials can be raised to negative powers"
                )
            ((key, coeff),) = self._terms.items()
            if abs(coeff) != 1:
                raise NotDivisibleError(f"{self.render()} is not a unit")
            return self._unit_power(key, coeff, exponent)
        result = type(self)._wrap({self._ZERO_KEY: 1})
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def _unit_power(self, key, coeff, exponent):
        raise NotImplementedError

    # Presentation
    @staticmethod
    def _power_text(name: str, exponent: int) -> str:
        if exponent == 0:
            return ""
        if exponent == 1:
            return name
        return f"{name}^{exponent}"

    def render(self) -> str:
        """Render as e.g. ``-2 + t^-1 + t``: constant first, then ascending exponents."""
        if not self._terms:
            return "0"
        keys = sorted(self._terms, key=lambda k: (k != self._ZERO_KEY, k))
        parts = []
        for idx, key in enumerate(keys):
            coeff = self._terms[key]
            monomial = self._monomial_text(key)
            magnitude = abs(coeff)
            if not monomial:
                body = str(magnitude)
            elif magnitude == 1:
                body = monomial
            else:
                body = f"{magnitude}*{monomial}"
            if idx == 0:
                parts.append(("-" if coeff < 0 else "") + body)
            else:
                parts.append((" - " if coeff < 0 else " + ") + body)
        return "".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.render()!r})"


class BiLaurent(_Laurent):
    """Element of Z[u^{+-1}, v^{+-1}] keyed by exponent pairs (i, j)."""

    __slots__ = ()
    _ZERO_KEY = (0, 0)

    @staticmethod
    def _normalize_key(key) -> tuple[int, int]:
        i, j = key
        return (int(i), int(j))

    @staticmethod
    def _add_keys(a, b):
        return (a[0] + b[0], a[1] + b[1])

    def _monomial_text(self, key) -> str:
        return "*".join(
            part
            for part in (self._power_text("u", key[0]), self._power_text("v", key[1]))
            if part
        )

    def _unit_power(self, key, coeff, exponent):
        return BiLaurent._wrap(
            {(key[0] * exponent, key[1] * exponent): coeff ** abs(exponent)}
        )

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> "BiLaurent":
        return cls._wrap({(i, j): coeff} if coeff else {})

    @classmethod
    def constant(cls, coeff: int) -> "BiLaurent":
        return cls.monomial(0, 0, coeff)

    @classmethod
    def from_u(cls, w: "UniLaurent") -> "BiLaurent":
        """Inject a polynomial in t as a polynomial in u alone."""
        return cls._wrap({(i, 0): c for i, c in w._terms.items()})

    @classmethod
    def from_json(cls, rows: Iterable[Iterable[int]]) -> "BiLaurent":
        return cls({(i, j): c for i, j, c in rows})

    def to_json(self) -> list[list[int]]:
        return [[i, j, c] for (i, j), c in self.items()]

    def min_exponents(self) -> tuple[int, int]:
        if not self._terms:
            return (0, 0)
        return (
            min(i for i, _ in self._terms),
            min(j for _, j in self._terms),
        )

    def shift(self, di: int, dj: int) -> "BiLaurent":
        return BiLaurent._wrap(
            {(i + di, j + dj): c for (i, j), c in self._terms.items()}
        )

    def normalized(self) -> "BiLaurent":
        """Multiply by (uv)^k so the smallest u-exponent becomes 0."""
        if not self._terms:
            return self
        k = self.min_exponents()[0]
        return self.shift(-k, -k)

    def swap_variables(self) -> "BiLaurent":
        return BiLaurent._wrap({(j, i): c for (i, j), c in self._terms.items()})

    def invert_variables(self) -> "BiLaurent":
        return BiLaurent._wrap({(-i, -j): c for (i, j), c in self._terms.items()})

    def substitute_diag(self) -> "UniLaurent":
        """Set u = t, v = t^-1."""
        out: dict[int, int] = {}
        for (i, j), c in self._terms.items():
            out[i - j] = out.get(i - j, 0) + c
        return UniLaurent._wrap({k: c for k, c in out.items() if c})

    def eval(self, u, v) -> Fraction:
        total = Fraction(0)
        u, v = Fraction(u), Fraction(v)
        for (i, j), c in self._terms.items():
            if (u == 0 and i < 0) or (v == 0 and j < 0):
                raise DivisionByZeroError("zero substituted into a negative power")
            total += c * u**i * v**j
        return total

    def as_univariate(self) -> "UniLaurent":
        if any(j for _, j in self._terms):
            raise NotDivisibleError(f"{self.render()} involves v")
        return UniLaurent._wrap({i: c for (i, _), c in self._terms.items()})


@dataclass(frozen=True)
class LaurentShape:
    width: int
    min_exp: int | None
    max_exp: int | None
    term_count: int
    coeff_abs_sum: int


class UniLaurent(_Laurent):
    """Element of Z[t^{+-1}] keyed by the exponent of t."""

    __slots__ = ()
    _ZERO_KEY = 0

    @staticmethod
    def _normalize_key(key) -> int:
        return int(key)

    @staticmethod
    def _add_keys(a, b):
        return a + b

    def _monomial_text(self, key) -> str:
        return self._power_text("t", key)

    def _unit_power(self, key, coeff, exponent):
        return UniLaurent._wrap({key * exponent: coeff ** abs(exponent)})

    @classmethod
    def monomial(cls, i: int, coeff: int = 1) -> "UniLaurent":
        return cls._wrap({i: coeff} if coeff else {})

    @classmethod
    def constant(cls, coeff: int) -> "UniLaurent":
        return cls.monomial(0, coeff)

    @classmethod
    def from_json(cls, rows: Iterable[Iterable[int]]) -> "UniLaurent":
        return cls({i: c for i, c in rows})

    def to_json(self) -> list[list[int]]:
        return [[i, c] for i, c in self.items()]

    @classmethod
    def parse(cls, text: str) -> "UniLaurent":
        """Parse the ``render`` format; spaces and ``*`` are optional."""
        compact = "".join(text.split()).replace("−", "-")
        if not compact:
            raise MalformedPolynomialError("empty polynomial text")
        if compact == "0":
            return cls()
        guarded = compact.replace("^-", "^~")
        pieces = re.findall(r"[+-]?[^+-]+", guarded)
        if "".join(pieces) != guarded:
            raise MalformedPolynomialError(f"cannot parse polynomial {text!r}")
        out: dict[int, int] = {}
        for piece in pieces:
            sign = -1 if piece.startswith("-") else 1
            body = piece.lstrip("+-").replace("^~", "^-")
            match = _UNI_TERM.match(body)
            if not body or match is None or (
                match.group("coeff") is None and match.group("var") is None
            ):
                raise MalformedPolynomialError(f"bad term {piece!r} in {text!r}")
            coeff = int(match.group("coeff")) if match.group("coeff") else 1
            if match.group("var") is None:
                exponent = 0
            else:
                exponent = int(match.group("exp")) if match.group("exp") else 1
            out[exponent] = out.get(exponent, 0) + sign * coeff
        return cls(out)

    def shift(self, d: int) -> "UniLaurent":
        return UniLaurent._wrap({i + d: c for i, c in self._terms.items()})

    def invert_variable(self) -> "UniLaurent":
        return UniLaurent._wrap({-i: c for i, c in self._terms.items()})

    def as_bivariate(self) -> BiLaurent:
        return BiLaurent.from_u(self)

    def eval(self, t) -> Fraction:
        t = Fraction(t)
        total = Fraction(0)
        for i, c in self._terms.items():
            if t == 0 and i < 0:
                raise DivisionByZeroError("zero substituted into a negative power")
            total += c * t**i
        return total

    def shape(self) -> LaurentShape:
        if not self._terms:
            return LaurentShape(0, None, None, 0, 0)
        lo, hi = min(self._terms), max(self._terms)
        return LaurentShape(
            width=hi - lo,
            min_exp=lo,
            max_exp=hi,
            term_count=len(self._terms),
            coeff_abs_sum=sum(abs(c) for c in self._terms.values()),
        )


def divide_exact(p, q):
    """Return r with p = q * r, raising NotDivisibleError when none exists.

    Both operands are shifted by monomials into Z[u, v], divided there, and the
    quotient is shifted back.
    """
    if isinstance(p, UniLaurent) and isinstance(q, UniLaurent):
        return divide_exact(p.as_bivariate(), q.as_bivariate()).as_univariate()
    if not (isinstance(p, BiLaurent) and isinstance(q, BiLaurent)):
        raise TypeError("divide_exact needs two polynomials of the same ring")
    if q.is_zero():
        raise DivisionByZeroError("division by the zero polynomial")
    if p.is_zero():
        return BiLaurent()
    pi, pj = p.min_exponents()
    qi, qj = q.min_exponents()
    numerator = _DIVISION_RING.from_dict(
        {(i - pi, j - pj): c for (i, j), c in p._terms.items()}
    )
    denominator = _DIVISION_RING.from_dict(
        {(i - qi, j - qj): c for (i, j), c in q._terms.items()}
    )
    quotient, remainder = numerator.div(denominator)
    if remainder:
        raise NotDivisibleError(f"{p.render()} is not divisible by {q.render()}")
    return BiLaurent(
        {(i + pi - qi, j + pj - qj): int(c) for (i, j), c in quotient.items()}
    )


def eval_int(p, point) -> Fraction:
    """Evaluate exactly; ``point`` is (u, v) for BiLaurent and t for UniLaurent."""
    if isinstance(p, BiLaurent):
        u, v = point
        return p.eval(u, v)
    return p.eval(point)


def substitute_diag(p: BiLaurent) -> UniLaurent:
    return p.substitute_diag()


def shape(p: UniLaurent) -> LaurentShape:
    return p.shape()


def render(p) -> str:
    return p.render()


ONE = BiLaurent.constant(1)
U = BiLaurent.monomial(1, 0)
V = BiLaurent.monomial(0, 1)
UV = BiLaurent.monomial(1, 1)
UV_INV = BiLaurent.monomial(-1, -1)
ONE_MINUS_UV = ONE - UV
ONE_MINUS_UV_INV = ONE - UV_INV
# (1-u)(1-v)(1-uv)
ALEXANDER_FACTOR = (ONE - U) * (ONE - V) * ONE_MINUS_UV
T = UniLaurent.monomial(1)
T_MINUS_ONE = T - 1
