"""Exact scalar arithmetic in the formal parameter q.

`QLaurent` is an integer Laurent polynomial in q.  Attaching a `CycloContext`
turns q into an exact primitive m-th root of unity: every value is kept
reduced modulo the cyclotomic polynomial Phi_m, with exponents in
[0, deg Phi_m).

Coefficients are Python ints throughout, so nothing here can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping, TypeVar

__all__ = [
    "IntPoly",
    "CycloContext",
    "QLaurent",
    "ContextMismatch",
    "cyclo_poly",
    "cyclo_reduce",
    "qint",
    "qbinom",
    "cheb",
    "poly_eval",
    "valid_root_orders",
]


class ContextMismatch(ValueError):
    """Operands carry different cyclotomic contexts."""


# ---------------------------------------------------------------------------
# integer polynomials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IntPoly:
    """One-variable integer polynomial, ``coeffs[i]`` is the coefficient of t^i."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = list(self.coeffs)
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(int(x) for x in c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    def __neg__(self) -> IntPoly:
        return IntPoly(tuple(-x for x in self.coeffs))

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly) -> IntPoly:
        if not self.coeffs or not other.coeffs:
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return IntPoly(tuple(out))

    def shift(self, k: int = 1) -> IntPoly:
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __call__(self, x):
        return poly_eval(self, x)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if c:
                parts.append(_signed_term(c, "t", e, first=not parts))
        return "".join(parts)


def _divmod_monic(num: list[int], den: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Exact long division by a monic integer polynomial (coefficient lists, low first)."""
    num = list(num)
    dq = len(den) - 1
    if len(num) <= dq:
        return [], num
    quot = [0] * (len(num) - dq)
    for i in range(len(num) - 1, dq - 1, -1):
        c = num[i]
        if c:
            quot[i - dq] = c
            for j in range(dq + 1):
                num[i - dq + j] -= c * den[j]
    return quot, num[:dq]


@lru_cache(maxsize=None)
def cyclo_poly(m: int) -> IntPoly:
    """Cyclotomic polynomial Phi_m, by dividing x^m - 1 by Phi_d for every proper divisor d."""
    if m < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {m}")
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num, rem = _divmod_monic(num, cyclo_poly(d).coeffs)
            assert not any(rem)
    return IntPoly(tuple(num))


# ---------------------------------------------------------------------------
# cyclotomic context
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CycloContext:
    """q is a primitive m-th root of unity; q^2 then has order ``n``."""

    m: int
    phi: tuple[int, ...] = field(init=False, repr=False, compare=False)
    # _power_table[e] = coefficients of q^e mod Phi_m for 0 <= e < m
    _power_table: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"root order m must be a positive integer, got {self.m!r}")
        object.__setattr__(self, "phi", cyclo_poly(self.m).coeffs)
        object.__setattr__(self, "_power_table", _power_table(self.m))

    @property
    def n(self) -> int:
        return self.m if self.m % 2 else self.m // 2

    @property
    def degree(self) -> int:
        return len(self.phi) - 1

    def power_row(self, e: int) -> tuple[int, ...]:
        return self._power_table[e % self.m]

    @property
    def power_table(self) -> tuple[tuple[int, ...], ...]:
        return self._power_table

    def reduce_terms(self, terms: Mapping[int, int]) -> dict[int, int]:
        """Reduce {exponent: coeff} using q^m = 1 and then Phi_m."""
        deg = self.degree
        out = [0] * deg
        for e, c in terms.items():
            if c:
                row = self._power_table[e % self.m]
                for i, r in enumerate(row):
                    if r:
                        out[i] += c * r
        return {i: c for i, c in enumerate(out) if c}


@lru_cache(maxsize=None)
def _power_table(m: int) -> tuple[tuple[int, ...], ...]:
    phi = cyclo_poly(m).coeffs
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1) if deg else []
    for _ in range(m):
        rows.append(tuple(cur))
        # multiply by q, then reduce the overflow coefficient with the monic Phi_m
        nxt = [0] + cur
        top = nxt.pop()
        for i in range(deg):
            nxt[i] -= top * phi[i]
        cur = nxt
    return tuple(rows)


def valid_root_orders(n: int) -> list[int]:
    """Orders m of q for which q^2 is a primitive n-th root of unity."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return [n, 2 * n] if n % 2 else [2 * n]


# ---------------------------------------------------------------------------
# Laurent polynomials in q
# ---------------------------------------------------------------------------


def _signed_term(c: int, var: str, e: int, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    if e == 0:
        return f"{sign}{a}"
    mono = var if e == 1 else f"{var}^{e}"
    return f"{sign}{mono}" if a == 1 else f"{sign}{a}*{mono}"


class QLaurent:
    """Immutable integer Laurent polynomial in q, optionally reduced in Z[q]/Phi_m."""

    __slots__ = ("_terms", "_ctx", "_hash")

    def __init__(self, terms: Mapping[int, int] | int | None = None, ctx: CycloContext | None = None):
        if terms is None:
            raw: Mapping[int, int] = {}
        elif isinstance(terms, int):
            raw = {0: terms}
        else:
            raw = terms
        if ctx is not None:
            clean = ctx.reduce_terms(raw)
        else:
            clean = {int(e): int(c) for e, c in raw.items() if c}
        self._terms = dict(sorted(clean.items()))
        self._ctx = ctx
        self._hash = None

    @classmethod
    def monomial(cls, e: int, c: int = 1, ctx: CycloContext | None = None) -> QLaurent:
        return cls({e: c}, ctx)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    @property
    def ctx(self) -> CycloContext | None:
        return self._ctx

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {0: 1}

    def eval_at_one(self) -> int:
        return sum(self._terms.values())

    def is_nonneg(self) -> bool:
        return all(c >= 0 for c in self._terms.values())

    def _ctx_with(self, other: QLaurent) -> CycloContext | None:
        if self._ctx is None:
            return other._ctx
        if other._ctx is None or other._ctx == self._ctx:
            return self._ctx
        raise ContextMismatch(f"cannot combine m={self._ctx.m} with m={other._ctx.m}")

    @staticmethod
    def _coerce(x) -> QLaurent:
        if isinstance(x, QLaurent):
            return x
        if isinstance(x, int):
            return QLaurent(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ctx = self._ctx_with(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return QLaurent(out, ctx)

    __radd__ = __add__

    def __neg__(self) -> QLaurent:
        return QLaurent({e: -c for e, c in self._terms.items()}, self._ctx)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        ctx = self._ctx_with(other)
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QLaurent(out, ctx)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> QLaurent:
        if k < 0:
            if len(self._terms) == 1:
                (e, c), = self._terms.items()
                if abs(c) == 1:
                    return QLaurent({e * k: c ** (-k)}, self._ctx)
            raise ValueError("only signed monomials can be inverted")
        out = QLaurent(1, self._ctx)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def subs_power(self, s: int) -> QLaurent:
        """Substitute q -> q^s."""
        return QLaurent({e * s: c for e, c in self._terms.items()}, self._ctx)

    def with_context(self, ctx: CycloContext | None) -> QLaurent:
        if ctx is None:
            if self._ctx is not None:
                raise ContextMismatch("cannot lift a reduced value back to generic q")
            return self
        if self._ctx is not None and self._ctx != ctx:
            raise ContextMismatch(f"cannot move m={self._ctx.m} value into m={ctx.m}")
        return QLaurent(self._terms, ctx)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QLaurent(other, self._ctx)
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self._terms == other._terms and self._ctx == other._ctx

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((tuple(self._terms.items()), self._ctx))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in self._terms.items():
            parts.append(_signed_term(c, "q", e, first=not parts))
        return "".join(parts)

    def __repr__(self) -> str:
        tag = "" if self._ctx is None else f", m={self._ctx.m}"
        return f"QLaurent({self}{tag})"


def cyclo_reduce(x: QLaurent, ctx: CycloContext) -> QLaurent:
    return x.with_context(ctx)


# ---------------------------------------------------------------------------
# quantum integers, binomials, Chebyshev polynomials
# ---------------------------------------------------------------------------


def qint(j: int, kind: str = "standard") -> QLaurent:
    """Quantum integer: ``standard`` is 1 + q + ... + q^(j-1); ``balanced`` is q^(j-1) + q^(j-3) + ... + q^(1-j)."""
    if j < 0:
        raise ValueError("quantum integers are defined for j >= 0")
    if kind == "standard":
        return QLaurent({i: 1 for i in range(j)})
    if kind == "balanced":
        return QLaurent({j - 1 - 2 * i: 1 for i in range(j)})
    raise ValueError(f"unknown quantum integer kind {kind!r}")


@lru_cache(maxsize=None)
def _gauss(n: int, k: int) -> tuple[tuple[int, int], ...]:
    # q-Pascal: [n, k] = [n-1, k-1] + q^k [n-1, k]
    if k == 0 or k == n:
        return ((0, 1),)
    out: dict[int, int] = dict(_gauss(n - 1, k - 1))
    for e, c in _gauss(n - 1, k):
        out[e + k] = out.get(e + k, 0) + c
    return tuple(sorted(out.items()))


def qbinom(n: int, k: int, step: int = 1) -> QLaurent:
    """Gaussian binomial coefficient in base q^step, as a polynomial with nonnegative coefficients."""
    if n < 0 or k < 0:
        raise ValueError("qbinom needs n, k >= 0")
    if k > n:
        raise ValueError(f"qbinom needs k <= n, got n={n}, k={k}")
    if step < 1:
        raise ValueError("step must be positive")
    return QLaurent({e * step: c for e, c in _gauss(n, k)})


@lru_cache(maxsize=None)
def cheb(n: int, kind: str = "first") -> IntPoly:
    """Normalized Chebyshev polynomial: T_0 = 2 (first kind) or S_0 = 1 (second kind), then P_{n+1} = t P_n - P_{n-1}."""
    if n < 0:
        raise ValueError("Chebyshev index must be >= 0")
    if kind not in ("first", "second"):
        raise ValueError(f"unknown Chebyshev kind {kind!r}")
    p0 = IntPoly((2,)) if kind == "first" else IntPoly((1,))
    p1 = IntPoly((0, 1))
    if n == 0:
        return p0
    for _ in range(n - 1):
        p0, p1 = p1, p1.shift() - p0
    return p1


R = TypeVar("R")


def poly_eval(p: IntPoly, x: R, one: Callable[[], R] | None = None) -> R:
    """Horner evaluation of an integer polynomial at a ring element.

    The ring needs ``+``, ``*`` and addition of plain ints (read as multiples of
    its unit).  Pass ``one`` for rings where the zero polynomial must still
    produce a ring element.
    """
    coeffs = p.coeffs
    if not coeffs:
        if one is not None:
            return one() * 0
        if hasattr(x, "zero"):
            return x.zero()
        return 0 * x
    acc = x * 0 + coeffs[-1] if not isinstance(x, int) else coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x
        if c:
            acc = acc + c
    return acc


def qlaurent_sum(xs: Iterable[QLaurent], ctx: CycloContext | None = None) -> QLaurent:
    out = QLaurent(0, ctx)
    for x in xs:
        out = out + x
    return out
