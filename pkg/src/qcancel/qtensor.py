"""The algebra of k independent q-commuting pairs.

Generators a_i^{+-1}, b_i (i = 1..k) with b_i a_i = q a_i b_i; letters with
different indices commute.  Every element is a finite sum of normal-ordered
monomials a_1^alpha_1 b_1^beta_1 ... a_k^alpha_k b_k^beta_k with
coefficients in Z[q^{+-1}] (or Z[q]/Phi_m under a cyclotomic context).

Moving b_i^beta past a_i^alpha' costs q^(alpha' beta), so

    (alpha, beta) * (alpha', beta') = q^(sum_i alpha'_i beta_i) (alpha + alpha', beta + beta').
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .qscalar import ContextMismatch, CycloContext, QLaurent

__all__ = ["TMonomial", "TAlgebra", "TElement", "tmul", "tadd", "frobenius_shift", "eval_counting", "is_nonneg"]


class TMonomial(NamedTuple):
    alpha: tuple[int, ...]
    beta: tuple[int, ...]


class TAlgebra:
    """Parent of `TElement`: the variable count ``k`` and an optional cyclotomic context."""

    def __init__(self, k: int, ctx: CycloContext | None = None):
        if k < 1:
            raise ValueError("need at least one variable pair")
        self.k = k
        self.ctx = ctx

    def __eq__(self, other) -> bool:
        return isinstance(other, TAlgebra) and self.k == other.k and self.ctx == other.ctx

    def __hash__(self) -> int:
        return hash((self.k, self.ctx))

    def __repr__(self) -> str:
        tag = "generic q" if self.ctx is None else f"q of order {self.ctx.m}"
        return f"TAlgebra(k={self.k}, {tag})"

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.k:
            raise IndexError(f"variable index {i} outside 1..{self.k}")

    def monomial(self, alpha: Sequence[int], beta: Sequence[int], coeff: QLaurent | int = 1) -> TElement:
        return self.from_terms({TMonomial(tuple(alpha), tuple(beta)): coeff})

    def a(self, i: int, e: int = 1) -> TElement:
        self._check_index(i)
        alpha = [0] * self.k
        alpha[i - 1] = e
        return self.monomial(alpha, [0] * self.k)

    def b(self, i: int, e: int = 1) -> TElement:
        self._check_index(i)
        if e < 0:
            raise ValueError("b_i has no inverse")
        beta = [0] * self.k
        beta[i - 1] = e
        return self.monomial([0] * self.k, beta)

    def scalar(self, c: QLaurent | int) -> TElement:
        return self.monomial([0] * self.k, [0] * self.k, c)

    def one(self) -> TElement:
        return self.scalar(1)

    def zero(self) -> TElement:
        K, E, C = _kernels.empty(self.k)
        return TElement(self, K, E, C)

    def from_terms(self, terms: Mapping[TMonomial | tuple, QLaurent | int]) -> TElement:
        rows, es, cs = [], [], []
        for mono, coeff in terms.items():
            alpha, beta = (mono.alpha, mono.beta) if isinstance(mono, TMonomial) else mono
            if len(alpha) != self.k or len(beta) != self.k:
                raise ValueError(f"monomial length must be {self.k}")
            if any(b < 0 for b in beta):
                raise ValueError("b exponents must be nonnegative")
            if isinstance(coeff, int):
                coeff = QLaurent(coeff)
            if coeff.ctx is not None and coeff.ctx != self.ctx:
                raise ContextMismatch("coefficient context differs from the algebra's")
            for e, c in coeff.items():
                rows.append(tuple(alpha) + tuple(beta))
                es.append(e)
                cs.append(c)
        if not rows:
            return self.zero()
        K = np.array(rows, dtype=np.int64).reshape(len(rows), 2 * self.k)
        E = np.array(es, dtype=np.int64)
        C = np.array(cs, dtype=object)
        return TElement(self, *_kernels.canonicalize(K, E, C, self.ctx))


class TElement:
    """Immutable element of a `TAlgebra`, stored as canonical flat term arrays."""

    __slots__ = ("parent", "K", "E", "C", "_hash")

    def __init__(self, parent: TAlgebra, K: np.ndarray, E: np.ndarray, C: np.ndarray):
        self.parent = parent
        for arr in (K, E, C):
            arr.flags.writeable = False
        self.K, self.E, self.C = K, E, C
        self._hash = None

    # -- ring structure -------------------------------------------------

    @property
    def k(self) -> int:
        return self.parent.k

    @property
    def ctx(self) -> CycloContext | None:
        return self.parent.ctx

    def zero(self) -> TElement:
        return self.parent.zero()

    def one(self) -> TElement:
        return self.parent.one()

    def _same_parent(self, other: TElement) -> None:
        if other.parent != self.parent:
            if other.k != self.k:
                raise ValueError(f"variable counts differ: {self.k} vs {other.k}")
            raise ContextMismatch("operands live over different cyclotomic contexts")

    def _lift(self, x) -> TElement:
        if isinstance(x, TElement):
            self._same_parent(x)
            return x
        if isinstance(x, (int, QLaurent)):
            return self.parent.scalar(x)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return TElement(self.parent, *_kernels.add(self.K, self.E, self.C, other.K, other.E, other.C, self.ctx))

    __radd__ = __add__

    def __neg__(self) -> TElement:
        C = -self.C
        return TElement(self.parent, self.K.copy(), self.E.copy(), C)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        K, E, C = _kernels.multiply(self.K, self.E, self.C, other.K, other.E, other.C, self.k, self.ctx)
        return TElement(self.parent, K, E, C)

    def __rmul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self

    def __pow__(self, n: int) -> TElement:
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = self.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: QLaurent | int) -> TElement:
        return self.parent.scalar(c) * self

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, QLaurent)):
            other = self.parent.scalar(other)
        if not isinstance(other, TElement):
            return NotImplemented
        return (
            self.parent == other.parent
            and np.array_equal(self.K, other.K)
            and np.array_equal(self.E, other.E)
            and np.array_equal(self.C, other.C)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.parent, self.K.tobytes(), self.E.tobytes(), tuple(int(c) for c in self.C)))
        return self._hash

    def is_zero(self) -> bool:
        return len(self.C) == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- views ------------------------------------------------------------

    @property
    def terms(self) -> dict[TMonomial, QLaurent]:
        out: dict[TMonomial, dict[int, int]] = {}
        k = self.k
        for row, e, c in zip(self.K.tolist(), self.E.tolist(), self.C.tolist()):
            mono = TMonomial(tuple(row[:k]), tuple(row[k:]))
            out.setdefault(mono, {})[e] = int(c)
        return {mono: QLaurent(t, self.ctx) for mono, t in out.items()}

    @property
    def num_monomials(self) -> int:
        """Number of distinct normal-ordered monomials (ignoring the q-expansion of coefficients)."""
        if len(self.E) == 0:
            return 0
        return int(len(np.unique(self.K, axis=0)))

    @property
    def num_terms(self) -> int:
        """Number of stored (monomial, q-power) terms."""
        return len(self.E)

    def max_abs_coeff(self) -> int:
        return max((abs(int(c)) for c in self.C), default=0)

    def with_context(self, ctx: CycloContext) -> TElement:
        """Reduce a generic-q element into a cyclotomic context."""
        if self.ctx is not None and self.ctx != ctx:
            raise ContextMismatch("element already carries a different context")
        parent = TAlgebra(self.k, ctx)
        return TElement(parent, *_kernels.canonicalize(self.K, self.E, self.C.copy(), ctx))

    def render(self, names: Sequence[tuple[str, str]] | None = None) -> str:
        """Canonical text: terms sorted by (alpha, beta), e.g. ``(1+q^2)*a1^1*b1^1*a2^-1``."""
        terms = self.terms
        if not terms:
            return "0"
        parts = []
        for mono in sorted(terms):
            parts.append(_render_term(terms[mono], _render_mono(mono, names)))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"TElement({self.render()})"


def _render_mono(mono: TMonomial, names: Sequence[tuple[str, str]] | None) -> str:
    factors = []
    for i, (al, be) in enumerate(zip(mono.alpha, mono.beta)):
        an, bn = names[i] if names else (f"a{i + 1}", f"b{i + 1}")
        if al:
            factors.append(f"{an}^{al}")
        if be:
            factors.append(f"{bn}^{be}")
    return "*".join(factors)


def _render_term(coeff: QLaurent, mono: str) -> str:
    text = str(coeff)
    if not mono:
        return f"({text})" if len(coeff.terms) > 1 else text
    if coeff.is_one():
        return mono
    if coeff.terms == {0: -1}:
        return f"-{mono}"
    if len(coeff.terms) == 1:
        return f"{text}*{mono}"
    return f"({text})*{mono}"


# ---------------------------------------------------------------------------
# operation-level API
# ---------------------------------------------------------------------------


def tmul(x: TElement, y: TElement) -> TElement:
    return x * y


def tadd(x: TElement, y: TElement) -> TElement:
    return x + y


def frobenius_shift(x: TElement, n: int) -> TElement:
    """Replace every a_i, b_i by a_i^n, b_i^n monomial-wise, keeping coefficients.

    Only a ring map at q = 1; for generic q the q-swap factors change by n^2.
    """
    if n < 1:
        raise ValueError("frobenius shift needs n >= 1")
    return TElement(x.parent, x.K * n, x.E.copy(), x.C.copy())


def eval_counting(x: TElement) -> int:
    """Set q and every a_i, b_i to 1: the sum of all integer coefficients."""
    if x.ctx is not None:
        raise ValueError("counting evaluation is defined for generic q only")
    return int(sum(int(c) for c in x.C))


def is_nonneg(x: TElement) -> bool:
    if x.ctx is not None:
        raise ValueError("sign inspection is defined for generic q only")
    return all(int(c) >= 0 for c in x.C)


def sum_elements(parent: TAlgebra, xs: Iterable[TElement]) -> TElement:
    out = parent.zero()
    for x in xs:
        out = out + x
    return out
