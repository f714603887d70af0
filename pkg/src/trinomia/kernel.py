"""Exact scalars and polynomials.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`.
This module adds the two polynomial types the rest of the package is built
on:

* :class:`BiPoly` -- sparse polynomial in ``b`` and ``c`` with integer
  coefficients (and its sibling :class:`UVPoly` in ``u`` and ``v``);
* :class:`UniPoly` -- dense univariate polynomial over the rationals.

Every value is immutable.  Scalars, ``BiPoly`` and ``UniPoly`` interoperate
through the usual operators, so sequence generators can be written once and
run either numerically (``b=3, c=2``) or symbolically (``b=BiPoly.b()``).
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Iterable, Iterator, Mapping

Scalar = int | Fraction


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


def normalize(x):
    """Collapse integral fractions to ``int``; leave everything else alone."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


def exact_div(a, d):
    """Divide ``a`` by ``d`` without leaving the ring ``a`` lives in.

    Integers divide to ``int`` when exact and to ``Fraction`` otherwise
    (numeric mode works over the rationals).  A :class:`BiPoly` numerator or
    divisor must divide exactly; otherwise ``ArithmeticError`` is raised.
    """
    if isinstance(a, BiPoly) or isinstance(d, BiPoly):
        return BiPoly.coerce(a).exact_div(d)
    if isinstance(a, int) and isinstance(d, int):
        if d == 0:
            raise ZeroDivisionError("exact_div by zero")
        q, r = divmod(a, d)
        return q if r == 0 else Fraction(a, d)
    return normalize(as_fraction(a) / as_fraction(d))


def decimal(x) -> str:
    """Exact decimal/fraction string for JSON reports."""
    if isinstance(x, (BiPoly, UniPoly)):
        return str(x)
    x = normalize(x)
    return str(x)


# ---------------------------------------------------------------------------
# Sparse bivariate polynomials


class _Sparse2:
    """Sparse integer polynomial in two variables.

    ``terms`` maps ``(i, j)`` to the nonzero coefficient of ``x^i y^j``.
    """

    __slots__ = ("_terms", "_hash")
    names: tuple[str, str] = ("x", "y")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        if terms:
            for (i, j), v in terms.items():
                if i < 0 or j < 0:
                    raise ValueError("negative exponent")
                v = normalize(v)
                if not isinstance(v, int):
                    raise TypeError(f"{type(self).__name__} coefficients must be integers, got {v!r}")
                if v:
                    clean[(i, j)] = v
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def coerce(cls, x):
        if isinstance(x, cls):
            return x
        if isinstance(x, _Sparse2):
            raise TypeError(f"cannot mix {type(x).__name__} and {cls.__name__}")
        x = normalize(x)
        if isinstance(x, int):
            return cls._raw({(0, 0): x} if x else {})
        raise TypeError(f"cannot coerce {x!r} to {cls.__name__}")

    @classmethod
    def const(cls, v: int):
        return cls.coerce(v)

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1):
        return cls({(i, j): coeff})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[tuple[int, int], int]]:
        """Terms in graded-lex order, highest total degree first."""
        for key in sorted(self._terms, key=lambda e: (-(e[0] + e[1]), -e[0])):
            yield key, self._terms[key]

    def is_zero(self) -> bool:
        return not self._terms

    def constant_term(self) -> int:
        return self._terms.get((0, 0), 0)

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(i + j for i, j in self._terms)

    def degree_in(self, var: int) -> int:
        if not self._terms:
            return -1
        return max(e[var] for e in self._terms)

    def __len__(self):
        return len(self._terms)

    # -- arithmetic --------------------------------------------------------

    def _other(self, other):
        try:
            return type(self).coerce(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, v in o._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return type(self)._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({k: -v for k, v in self._terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, int) or (isinstance(other, Fraction) and other.denominator == 1):
            m = int(other)
            if m == 0:
                return type(self)._raw({})
            return type(self)._raw({k: v * m for k, v in self._terms.items()})
        o = self._other(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), v1 in self._terms.items():
            for (i2, j2), v2 in o._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + v1 * v2
        return type(self)._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = type(self).const(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def _leading(self):
        # lex order with the first variable dominant
        return max(self._terms)

    def exact_div(self, d):
        """Exact quotient; raises ``ArithmeticError`` if ``d`` does not divide."""
        if isinstance(d, int) or isinstance(d, Fraction):
            d = normalize(d)
            if not isinstance(d, int):
                raise ArithmeticError(f"cannot divide integer polynomial by {d}")
            if d == 0:
                raise ZeroDivisionError("division by zero polynomial")
            out = {}
            for k, v in self._terms.items():
                q, r = divmod(v, d)
                if r:
                    raise ArithmeticError(f"coefficient {v} not divisible by {d}")
                out[k] = q
            return type(self)._raw(out)
        d = type(self).coerce(d)
        if d.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if len(d._terms) == 1:
            ((di, dj), dv), = d._terms.items()
            out = {}
            for (i, j), v in self._terms.items():
                if i < di or j < dj:
                    raise ArithmeticError("monomial division is not exact")
                q, r = divmod(v, dv)
                if r:
                    raise ArithmeticError("coefficient division is not exact")
                out[(i - di, j - dj)] = q
            return type(self)._raw(out)
        lead = d._leading()
        lead_c = d._terms[lead]
        rem = dict(self._terms)
        quot: dict[tuple[int, int], int] = {}
        while rem:
            top = max(rem)
            v = rem[top]
            di, dj = top[0] - lead[0], top[1] - lead[1]
            if di < 0 or dj < 0:
                raise ArithmeticError("polynomial division is not exact")
            q, r = divmod(v, lead_c)
            if r:
                raise ArithmeticError("polynomial division is not exact")
            quot[(di, dj)] = q
            for (i, j), w in d._terms.items():
                k = (i + di, j + dj)
                s = rem.get(k, 0) - q * w
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return type(self)._raw(quot)

    def __truediv__(self, other):
        return self.exact_div(other)

    def __floordiv__(self, other):
        return self.exact_div(other)

    def derivative(self, var: int):
        out = {}
        for (i, j), v in self._terms.items():
            e = (i, j)[var]
            if e:
                k = (i - 1, j) if var == 0 else (i, j - 1)
                out[k] = v * e
        return type(self)._raw(out)

    def evaluate(self, x, y):
        """Exact value at rational (or ring-element) arguments."""
        total = 0
        for (i, j), v in self._terms.items():
            total = total + v * (x ** i) * (y ** j)
        return normalize(total)

    def __call__(self, x, y):
        return self.evaluate(x, y)

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        if isinstance(other, _Sparse2):
            return type(other) is type(self) and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            other = normalize(other)
            if not isinstance(other, int):
                return False
            return self._terms == ({(0, 0): other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if not self._terms:
                self._hash = hash(0)
            elif set(self._terms) == {(0, 0)}:
                self._hash = hash(self._terms[(0, 0)])
            else:
                self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {"terms": [[i, j, str(v)] for (i, j), v in self.items()]}

    @classmethod
    def from_json(cls, obj: Mapping) -> "_Sparse2":
        terms: dict[tuple[int, int], int] = {}
        for i, j, v in obj["terms"]:
            key = (int(i), int(j))
            terms[key] = terms.get(key, 0) + int(v)
        return cls(terms)

    def __str__(self):
        if not self._terms:
            return "0"
        x, y = self.names
        parts = []
        for (i, j), v in self.items():
            mono = []
            if i:
                mono.append(x if i == 1 else f"{x}^{i}")
            if j:
                mono.append(y if j == 1 else f"{y}^{j}")
            body = "*".join(mono)
            if not body:
                text = str(abs(v))
            elif abs(v) == 1:
                text = body
            else:
                text = f"{abs(v)}*{body}"
            sign = "-" if v < 0 else "+"
            parts.append((sign, text))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"{type(self).__name__}({self})"


class BiPoly(_Sparse2):
    """Polynomial in ``b`` (first exponent) and ``c`` (second exponent)."""

    __slots__ = ()
    names = ("b", "c")

    @classmethod
    def b(cls) -> "BiPoly":
        return cls._raw({(1, 0): 1})

    @classmethod
    def c(cls) -> "BiPoly":
        return cls._raw({(0, 1): 1})


class UVPoly(_Sparse2):
    """Polynomial in ``u`` (stands for b^2 - m*c) and ``v`` (stands for c)."""

    __slots__ = ()
    names = ("u", "v")

    @classmethod
    def u(cls) -> "UVPoly":
        return cls._raw({(1, 0): 1})

    @classmethod
    def v(cls) -> "UVPoly":
        return cls._raw({(0, 1): 1})


def symbols() -> tuple[BiPoly, BiPoly]:
    """The symbolic pair ``(b, c)``."""
    return BiPoly.b(), BiPoly.c()


def is_symbolic(*xs) -> bool:
    return any(isinstance(x, BiPoly) for x in xs)


def bipoly_eval(p: BiPoly, b0, c0):
    """Exact value of ``p`` at ``(b0, c0)``."""
    return normalize(BiPoly.coerce(p).evaluate(as_fraction(b0), as_fraction(c0)))


# ---------------------------------------------------------------------------
# Parity basis change


class ParityForm:
    """``poly`` in ``(u, v)`` together with the parity of the b-exponents.

    For ``parity == "even"`` the source equals ``poly(b^2 - m c, c)``; for
    ``"odd"`` it equals ``b * poly(b^2 - m c, c)``.
    """

    __slots__ = ("parity", "poly", "m")

    def __init__(self, parity: str, poly: UVPoly, m: int = 2):
        self.parity = parity
        self.poly = poly
        self.m = m

    def __eq__(self, other):
        if isinstance(other, ParityForm):
            return (self.parity, self.poly, self.m) == (other.parity, other.poly, other.m)
        if isinstance(other, tuple) and len(other) == 2:
            return (self.parity, self.poly) == other
        return NotImplemented

    def __repr__(self):
        return f"ParityForm({self.parity!r}, {self.poly}, m={self.m})"

    def nonneg(self) -> bool:
        return uvpoly_nonneg(self.poly)

    def substitute(self) -> BiPoly:
        """Back-substitute ``u = b^2 - m c``, ``v = c``."""
        b, c = symbols()
        u = b * b - self.m * c
        out = BiPoly.const(0)
        for (p, q), v in self.poly.items():
            out = out + v * u ** p * c ** q
        return out * b if self.parity == "odd" else out

    def to_json(self) -> dict:
        return {"parity": self.parity, "m": self.m, "poly": self.poly.to_json()}


class ParityError(ValueError):
    pass


def parity_of(p: BiPoly) -> str | None:
    """'even'/'odd' when every b-exponent has the same parity, None if mixed.

    The zero polynomial reports 'even'.
    """
    ps = {i & 1 for (i, _j) in BiPoly.coerce(p)._terms}
    if not ps:
        return "even"
    if len(ps) > 1:
        return None
    return "odd" if ps.pop() else "even"


def basis_change_uv(p, m: int = 2) -> ParityForm:
    """Rewrite a parity-homogeneous ``p(b, c)`` in ``u = b^2 - m c``, ``v = c``.

    Uses ``b^(2k) = (u + m v)^k``; the result is exact and unique.
    """
    p = BiPoly.coerce(p)
    parity = parity_of(p)
    if parity is None:
        raise ParityError("not parity-homogeneous")
    shift = 1 if parity == "odd" else 0
    out: dict[tuple[int, int], int] = {}
    for (i, j), coef in p._terms.items():
        k = (i - shift) // 2
        # (u + m v)^k v^j
        for r in range(k + 1):
            key = (r, k - r + j)
            out[key] = out.get(key, 0) + coef * comb(k, r) * m ** (k - r)
    return ParityForm(parity, UVPoly({key: v for key, v in out.items() if v}), m)


def uvpoly_nonneg(q) -> bool:
    return all(v >= 0 for v in q._terms.values())


# ---------------------------------------------------------------------------
# Dense univariate polynomials over Q


class UniPoly:
    """Dense polynomial over the rationals, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def coerce(cls, p) -> "UniPoly":
        if isinstance(p, UniPoly):
            return p
        return cls([p])

    @property
    def degree(self) -> int | float:
        """Degree; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __add__(self, other):
        o = UniPoly.coerce(other) if not isinstance(other, UniPoly) else other
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly(self[k] + o[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-UniPoly.coerce(other))

    def __rsub__(self, other):
        return UniPoly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            if isinstance(other, (int, Fraction)):
                s = as_fraction(other)
                return UniPoly(c * s for c in self.coeffs)
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = UniPoly([1])
        for _ in range(e):
            out = out * self
        return out

    def __divmod__(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] / lc
            if q:
                quot[k - dd] = q
                for j, c in enumerate(other.coeffs):
                    rem[k - dd + j] -= q * c
        return UniPoly(quot), UniPoly(rem[:dd] if dd else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def derivative(self) -> "UniPoly":
        return UniPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def __call__(self, x):
        x = as_fraction(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def sign_at(self, x) -> int:
        v = self(x)
        return (v > 0) - (v < 0)

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self * (1 / self.lc())

    def primitive(self) -> "UniPoly":
        """Positive rational multiple with coprime integer coefficients."""
        if not self.coeffs:
            return self
        from math import gcd, lcm

        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = gcd(g, v)
        return UniPoly(v // g for v in ints)

    def gcd(self, other: "UniPoly") -> "UniPoly":
        a, b = self.primitive(), other.primitive()
        while not b.is_zero():
            a, b = b, (a % b).primitive()
        return a.monic()

    def compose(self, inner: "UniPoly") -> "UniPoly":
        acc = UniPoly()
        for c in reversed(self.coeffs):
            acc = acc * inner + UniPoly([c])
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            mag = abs(c)
            if mono and mag == 1:
                text = mono
            elif mono:
                text = f"{mag}*{mono}"
            else:
                text = str(mag)
            parts.append(("-" if c < 0 else "+", text))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, text in parts[1:]:
            out += f" {sign} {text}"
        return out

    def __repr__(self):
        return f"UniPoly({self})"

    def to_json(self) -> dict:
        return {"coeffs": [str(c) for c in self.coeffs]}


def is_rational_scalar(x) -> bool:
    return isinstance(x, (int, Fraction)) or isinstance(x, Rational)
