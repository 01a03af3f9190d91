"""The quantum coordinate ring SL_2^q in PBW normal form.

Relations on the generators a, b, c, d:

    ba = q ab    ca = q ac    db = q bd    dc = q cd    bc = cb
    ad - q^-1 bc = 1 = da - q bc

Normal monomials are a^i b^j c^k d^l with i*l = 0, i.e. the basis
{a^i b^j c^k} u {b^j c^k d^l}.  Products are normalised by multiplying on the
right one generator at a time, using closed forms for each letter.
"""

from __future__ import annotations

from typing import Iterable, Mapping, NamedTuple

from .qscalar import QLaurent

__all__ = [
    "PBWMonomial",
    "SL2qElement",
    "GENERATORS",
    "gen",
    "pbw_mul",
    "pbw_nf_word",
    "counit",
    "antipode",
    "coproduct",
    "hopf",
    "tautological_point",
    "TensorSquare",
]

GENERATORS = "abcd"


class PBWMonomial(NamedTuple):
    i: int
    j: int
    k: int
    l: int

    def word(self) -> str:
        return "a" * self.i + "b" * self.j + "c" * self.k + "d" * self.l


def _q(e: int) -> QLaurent:
    return QLaurent({e: 1})


def _accumulate(out: dict, key, coeff: QLaurent) -> None:
    acc = out.get(key)
    out[key] = coeff if acc is None else acc + coeff


class SL2qElement:
    """Immutable element of SL_2^q: a map PBWMonomial -> QLaurent."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, QLaurent | int] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            mono = PBWMonomial(*mono)
            if mono.i and mono.l:
                raise ValueError(f"{mono} is not a PBW monomial; use pbw_nf_word")
            if min(mono) < 0:
                raise ValueError("exponents must be nonnegative")
            if isinstance(c, int):
                c = QLaurent(c)
            if c.ctx is not None:
                raise ValueError("SL_2^q elements use generic q coefficients")
            if c:
                clean[mono] = c
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> SL2qElement:
        obj = cls.__new__(cls)
        obj._terms = dict(sorted((m, c) for m, c in terms.items() if c))
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict[PBWMonomial, QLaurent]:
        return dict(self._terms)

    def zero(self) -> SL2qElement:
        return SL2qElement()

    def one(self) -> SL2qElement:
        return SL2qElement({(0, 0, 0, 0): 1})

    @staticmethod
    def _lift(x):
        if isinstance(x, SL2qElement):
            return x
        if isinstance(x, (int, QLaurent)):
            return SL2qElement({(0, 0, 0, 0): x})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for m, c in other._terms.items():
            _accumulate(out, m, c)
        return SL2qElement._raw(out)

    __radd__ = __add__

    def __neg__(self) -> SL2qElement:
        return SL2qElement._raw({m: -c for m, c in self._terms.items()})

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
        return pbw_mul(self, other)

    def __rmul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return pbw_mul(other, self)

    def __pow__(self, n: int) -> SL2qElement:
        out = self.one()
        for _ in range(n):
            out = out * self
        return out

    def scale(self, c: QLaurent | int) -> SL2qElement:
        return SL2qElement._raw({m: v * c for m, v in self._terms.items()})

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in self._terms.items():
            factors = " ".join(f"{g}^{e}" for g, e in zip(GENERATORS, mono) if e)
            text = str(c)
            if not factors:
                parts.append(f"({text})" if len(c.terms) > 1 else text)
            elif c.is_one():
                parts.append(factors)
            elif len(c.terms) == 1:
                parts.append(f"{text}*{factors}")
            else:
                parts.append(f"({text})*{factors}")
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SL2qElement({self.render()})"


def gen(g: str) -> SL2qElement:
    """The generator ``g`` in {'a', 'b', 'c', 'd'}."""
    idx = GENERATORS.index(g)
    exps = [0, 0, 0, 0]
    exps[idx] = 1
    return SL2qElement({tuple(exps): 1})


def tautological_point():
    """The matrix (a, b; c, d) over SL_2^q itself."""
    from .qmatrix import Matrix2

    return Matrix2(gen("a"), gen("b"), gen("c"), gen("d"))


# ---------------------------------------------------------------------------
# multiplication
# ---------------------------------------------------------------------------


def _times_letter(mono: PBWMonomial, g: str) -> list[tuple[PBWMonomial, int]]:
    """Normal form of mono * g as [(monomial, q exponent)], all coefficients +-q^e."""
    i, j, k, l = mono
    if g == "b":
        # d^l b = q^l b d^l, c^k b = b c^k
        return [(PBWMonomial(i, j + 1, k, l), l)]
    if g == "c":
        # d^l c = q^l c d^l
        return [(PBWMonomial(i, j, k + 1, l), l)]
    if g == "d":
        if i == 0:
            return [(PBWMonomial(0, j, k, l + 1), 0)]
        # l == 0 here; a^i b^j c^k d = q^(-j-k) a^(i-1) (ad) b^j c^k, ad = 1 + q^-1 bc
        return [
            (PBWMonomial(i - 1, j, k, 0), -j - k),
            (PBWMonomial(i - 1, j + 1, k + 1, 0), -j - k - 1),
        ]
    if g == "a":
        if l == 0:
            # c^k a = q^k a c^k, b^j a = q^j a b^j
            return [(PBWMonomial(i + 1, j, k, 0), j + k)]
        # i == 0; d^l a = d^(l-1) (1 + q bc) and d^(l-1) bc = q^(2l-2) bc d^(l-1)
        return [
            (PBWMonomial(0, j, k, l - 1), 0),
            (PBWMonomial(0, j + 1, k + 1, l - 1), 2 * l - 1),
        ]
    raise ValueError(f"unknown generator {g!r}")


def _times_word(terms: dict[PBWMonomial, QLaurent], word: str) -> dict[PBWMonomial, QLaurent]:
    for g in word:
        nxt: dict[PBWMonomial, QLaurent] = {}
        for mono, c in terms.items():
            for m2, e in _times_letter(mono, g):
                _accumulate(nxt, m2, c * _q(e) if e else c)
        terms = {m: c for m, c in nxt.items() if c}
    return terms


def pbw_mul(x: SL2qElement, y: SL2qElement) -> SL2qElement:
    out: dict[PBWMonomial, QLaurent] = {}
    for my, cy in y._terms.items():
        prod = _times_word(dict(x._terms), my.word())
        for m, c in prod.items():
            _accumulate(out, m, c * cy)
    return SL2qElement._raw(out)


# ---------------------------------------------------------------------------
# free-word rewriting (oracle for pbw_mul)
# ---------------------------------------------------------------------------

# adjacent out-of-order pairs: xy -> [(replacement word, q exponent)]
_SWAP_RULES = {
    "ba": [("ab", 1)],
    "ca": [("ac", 1)],
    "db": [("bd", 1)],
    "dc": [("cd", 1)],
    "cb": [("bc", 0)],
    "da": [("", 0), ("bc", 1)],
}


def _is_sorted(w: str) -> bool:
    return all(x <= y for x, y in zip(w, w[1:]))


def _rewrite_once(w: str, scan: str) -> list[tuple[str, int]] | None:
    """One rewriting step on a word, or None if the word is a PBW normal word."""
    positions = range(len(w) - 1) if scan == "left" else range(len(w) - 2, -1, -1)
    for p in positions:
        rule = _SWAP_RULES.get(w[p : p + 2])
        if rule is not None:
            return [(w[:p] + r + w[p + 2 :], e) for r, e in rule]
    # sorted word a^i (b|c)* d^l: pull the first d leftwards to the last a, then ad = 1 + q^-1 bc
    if "a" in w and "d" in w:
        ia = w.rindex("a")
        id_ = w.index("d")
        mid = w[ia + 1 : id_]
        head, tail = w[:ia], w[id_ + 1 :]
        return [(head + mid + tail, -len(mid)), (head + "bc" + mid + tail, -len(mid) - 1)]
    return None


def pbw_nf_word(w: Iterable[str], scan: str = "left") -> SL2qElement:
    """Normal form of a free word in a, b, c, d by adjacent-letter rewriting.

    ``scan`` picks the leftmost or the rightmost applicable inversion first.
    """
    w = "".join(w)
    if any(ch not in GENERATORS for ch in w):
        raise ValueError(f"word {w!r} has letters outside a, b, c, d")
    pending: dict[str, QLaurent] = {w: QLaurent(1)}
    done: dict[PBWMonomial, QLaurent] = {}
    while pending:
        word, coeff = pending.popitem()
        step = _rewrite_once(word, scan)
        if step is None:
            assert _is_sorted(word)
            mono = PBWMonomial(*(word.count(g) for g in GENERATORS))
            _accumulate(done, mono, coeff)
            continue
        for w2, e in step:
            _accumulate(pending, w2, coeff * _q(e) if e else coeff)
            if not pending[w2]:
                del pending[w2]
    return SL2qElement._raw(done)


# ---------------------------------------------------------------------------
# Hopf structure
# ---------------------------------------------------------------------------

_ANTIPODE = {"a": ("d", 1, 0), "b": ("b", -1, 1), "c": ("c", -1, -1), "d": ("a", 1, 0)}

# coproduct of each generator as [(left letter, right letter)]
_COPRODUCT = {
    "a": [("a", "a"), ("b", "c")],
    "b": [("a", "b"), ("b", "d")],
    "c": [("c", "a"), ("d", "c")],
    "d": [("c", "b"), ("d", "d")],
}


def counit(x: SL2qElement) -> QLaurent:
    """Algebra map with a, d -> 1 and b, c -> 0."""
    total = QLaurent(0)
    for mono, c in x._terms.items():
        if mono.j == 0 and mono.k == 0:
            total = total + c
    return total


def antipode(x: SL2qElement) -> SL2qElement:
    """Anti-homomorphism with S(a) = d, S(b) = -q b, S(c) = -q^-1 c, S(d) = a."""
    out = SL2qElement()
    for mono, c in x._terms.items():
        img = SL2qElement({(0, 0, 0, 0): c})
        for g in reversed(mono.word()):
            letter, sign, e = _ANTIPODE[g]
            img = img * gen(letter).scale(QLaurent({e: sign}))
        out = out + img
    return out


class TensorSquare:
    """Formal sum of (left, right) PBW monomial pairs with QLaurent coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[PBWMonomial, PBWMonomial], QLaurent] | None = None):
        self.terms = {k: v for k, v in sorted((terms or {}).items()) if v}

    @classmethod
    def pure(cls, left: SL2qElement, right: SL2qElement) -> TensorSquare:
        out: dict = {}
        for ml, cl in left.terms.items():
            for mr, cr in right.terms.items():
                _accumulate(out, (ml, mr), cl * cr)
        return cls(out)

    def __add__(self, other: TensorSquare) -> TensorSquare:
        out = dict(self.terms)
        for k, v in other.terms.items():
            _accumulate(out, k, v)
        return TensorSquare(out)

    def __mul__(self, other: TensorSquare) -> TensorSquare:
        out = TensorSquare()
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                left = pbw_mul(SL2qElement({l1: c1 * c2}), SL2qElement({l2: 1}))
                right = pbw_mul(SL2qElement({r1: 1}), SL2qElement({r2: 1}))
                out = out + TensorSquare.pure(left, right)
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorSquare) and self.terms == other.terms

    def render(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (l, r), c in self.terms.items():
            lt = SL2qElement({l: 1}).render()
            rt = SL2qElement({r: 1}).render()
            coeff = "" if c.is_one() else f"({c})*"
            parts.append(f"{coeff}{lt} ⊗ {rt}")
        return " + ".join(parts)


def coproduct(x: SL2qElement) -> TensorSquare:
    """Algebra map into SL_2^q (x) SL_2^q extended from the generator coproducts."""
    total = TensorSquare()
    unit = PBWMonomial(0, 0, 0, 0)
    for mono, c in x._terms.items():
        acc = TensorSquare({(unit, unit): c})
        for g in mono.word():
            acc = acc * TensorSquare({(PBWMonomial(*_letter(l)), PBWMonomial(*_letter(r))): QLaurent(1) for l, r in _COPRODUCT[g]})
        total = total + acc
    return total


def _letter(g: str) -> tuple[int, int, int, int]:
    exps = [0, 0, 0, 0]
    exps[GENERATORS.index(g)] = 1
    return tuple(exps)


def hopf(x: SL2qElement, which: str):
    if which == "counit":
        return counit(x)
    if which == "antipode":
        return antipode(x)
    if which == "coproduct":
        return coproduct(x)
    raise ValueError(f"unknown Hopf map {which!r}")
