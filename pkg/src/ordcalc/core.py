"""Ordinal terms in Cantor normal form.

An :class:`Ordinal` is either zero, an uncountable-cardinal atom ``w_k``
(treated as an epsilon number, so ``w^(w_k) = w_k``), or a strictly
decreasing list of monomials ``w^e * c``.  Values are immutable and
canonical, so structural equality is ordinal equality.
"""

from __future__ import annotations

import enum
from functools import total_ordering
from typing import Iterable, Sequence, Tuple, Union

__all__ = [
    "Ordinal",
    "Comparison",
    "ZERO",
    "ONE",
    "OMEGA",
    "ordinal",
    "atom",
    "monomial",
    "omega_pow",
    "compare",
    "ord_add",
    "nat_add",
    "nat_sum",
    "nat_mul_fin",
    "ord_mul",
    "truncate",
    "leading_exponent",
    "smallest_exponent",
    "blocks",
    "left_difference",
    "split_finite",
    "is_limit",
    "is_successor",
    "cardinality",
    "normalize",
    "denormalize",
]


class Comparison(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @property
    def symbol(self) -> str:
        return {-1: "<", 0: "=", 1: ">"}[int(self)]


Monomial = Tuple["Ordinal", int]


@total_ordering
class Ordinal:
    """A canonical Cantor-normal-form term.

    ``terms`` holds ``(exponent, coefficient)`` pairs with strictly
    decreasing exponents; ``atom`` is a positive index for the leaf
    ``w_k`` (in which case ``terms`` is empty).
    """

    __slots__ = ("terms", "atom", "_hash")

    def __init__(self, terms: Sequence[Monomial] = (), atom: int = 0):
        terms = tuple(terms)
        if atom and terms:
            raise ValueError("an atom carries no monomials")
        if atom < 0:
            raise ValueError("atom index must be positive")
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "atom", atom)
        object.__setattr__(self, "_hash", hash((terms, atom)))

    def __setattr__(self, name, value):
        raise AttributeError("Ordinal is immutable")

    def __reduce__(self):
        return (Ordinal, (self.terms, self.atom))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = _coerce(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        if self is other:
            return True
        return self._hash == other._hash and self.atom == other.atom and self.terms == other.terms

    def __lt__(self, other) -> bool:
        if isinstance(other, int) and not isinstance(other, bool):
            other = _coerce(other)
        if not isinstance(other, Ordinal):
            return NotImplemented
        return compare(self, other) is Comparison.LESS

    def __bool__(self) -> bool:
        return bool(self.terms) or bool(self.atom)

    def __add__(self, other):
        return ord_add(self, _coerce(other))

    def __radd__(self, other):
        return ord_add(_coerce(other), self)

    def __mul__(self, other):
        return ord_mul(self, _coerce(other))

    def __rmul__(self, other):
        return ord_mul(_coerce(other), self)

    def __repr__(self) -> str:
        return f"Ordinal({str(self)!r})"

    def __str__(self) -> str:
        from .syntax import print_ordinal

        return print_ordinal(self)

    @property
    def is_atom(self) -> bool:
        return self.atom > 0

    @property
    def is_finite(self) -> bool:
        return not self.atom and (not self.terms or (len(self.terms) == 1 and not self.terms[0][0]))

    def __int__(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is not finite")
        return self.terms[0][1] if self.terms else 0

    def monomials(self) -> Tuple[Monomial, ...]:
        """Monomial view; an atom ``w_k`` reads as ``((w_k, 1),)``."""
        if self.atom:
            return ((self, 1),)
        return self.terms


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def _coerce(x: Union[int, Ordinal]) -> Ordinal:
    if isinstance(x, Ordinal):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return ordinal(x)
    raise TypeError(f"cannot interpret {x!r} as an ordinal")


def ordinal(n: int) -> Ordinal:
    """The finite ordinal ``n``."""
    if n < 0:
        raise ValueError("ordinals are non-negative")
    if n == 0:
        return ZERO
    if n == 1:
        return ONE
    return Ordinal(((ZERO, n),))


def atom(k: int) -> Ordinal:
    """The initial ordinal of the ``k``-th uncountable cardinal."""
    if k < 1:
        raise ValueError("atom index must be >= 1")
    return Ordinal(atom=k)


def _make(terms: Sequence[Monomial]) -> Ordinal:
    terms = tuple(terms)
    if len(terms) == 1 and terms[0][1] == 1 and terms[0][0].atom:
        return terms[0][0]
    return Ordinal(terms)


def monomial(e, c: int = 1) -> Ordinal:
    """``w^e * c``."""
    if c < 0:
        raise ValueError("coefficient must be non-negative")
    if c == 0:
        return ZERO
    return _make(((_coerce(e), c),))


def omega_pow(e) -> Ordinal:
    return monomial(e, 1)


def compare(a: Ordinal, b: Ordinal) -> Comparison:
    if a is b:
        return Comparison.EQUAL
    if a.atom and b.atom:
        return Comparison((a.atom > b.atom) - (a.atom < b.atom))
    ta, tb = a.monomials(), b.monomials()
    for (ea, ca), (eb, cb) in zip(ta, tb):
        c = compare(ea, eb)
        if c:
            return c
        if ca != cb:
            return Comparison.LESS if ca < cb else Comparison.GREATER
    return Comparison((len(ta) > len(tb)) - (len(ta) < len(tb)))


def ord_add(a, b) -> Ordinal:
    a, b = _coerce(a), _coerce(b)
    if not b:
        return a
    if not a:
        return b
    tb = b.monomials()
    lead, lead_c = tb[0]
    out = []
    for e, c in a.monomials():
        k = compare(e, lead)
        if k is Comparison.GREATER:
            out.append((e, c))
        elif k is Comparison.EQUAL:
            out.append((e, c + lead_c))
            out.extend(tb[1:])
            return _make(out)
        else:
            break
    out.extend(tb)
    return _make(out)


def nat_add(a, b) -> Ordinal:
    a, b = _coerce(a), _coerce(b)
    if not a:
        return b
    if not b:
        return a
    ta, tb = a.monomials(), b.monomials()
    out = []
    i = j = 0
    while i < len(ta) and j < len(tb):
        k = compare(ta[i][0], tb[j][0])
        if k is Comparison.GREATER:
            out.append(ta[i])
            i += 1
        elif k is Comparison.LESS:
            out.append(tb[j])
            j += 1
        else:
            out.append((ta[i][0], ta[i][1] + tb[j][1]))
            i += 1
            j += 1
    out.extend(ta[i:])
    out.extend(tb[j:])
    return _make(out)


def nat_sum(values: Iterable) -> Ordinal:
    acc = ZERO
    for v in values:
        acc = nat_add(acc, v)
    return acc


def nat_mul_fin(a, n: int) -> Ordinal:
    a = _coerce(a)
    if n < 0:
        raise ValueError("multiplier must be non-negative")
    if n == 0 or not a:
        return ZERO
    return _make(tuple((e, c * n) for e, c in a.monomials()))


def leading_exponent(a) -> Ordinal:
    a = _coerce(a)
    if not a:
        raise ValueError("zero has no leading exponent")
    return a.monomials()[0][0]


def smallest_exponent(a) -> Ordinal:
    a = _coerce(a)
    if not a:
        raise ValueError("zero has no smallest exponent")
    return a.monomials()[-1][0]


def ord_mul(a, b) -> Ordinal:
    a, b = _coerce(a), _coerce(b)
    if not a or not b:
        return ZERO
    ta = a.monomials()
    lam, lead_c = ta[0]
    acc = ZERO
    for e, c in b.monomials():
        if e:
            piece = monomial(ord_add(lam, e), c)
        else:
            piece = _make(((lam, lead_c * c),) + ta[1:])
        acc = ord_add(acc, piece)
    return acc


def truncate(a, eta) -> Ordinal:
    """Keep the monomials of ``a`` whose exponent is at least ``eta``."""
    a, eta = _coerce(a), _coerce(eta)
    return _make(tuple((e, c) for e, c in a.monomials() if compare(e, eta) >= 0))


def blocks(a) -> list:
    """Block order types of ``a`` in order: ``w^e`` repeated ``c`` times per monomial."""
    out = []
    for e, c in _coerce(a).monomials():
        out.extend([omega_pow(e)] * c)
    return out


def left_difference(a, b) -> Ordinal:
    """The unique ``r`` with ``a + r == b``; requires ``a <= b``."""
    a, b = _coerce(a), _coerce(b)
    if compare(a, b) is Comparison.GREATER:
        raise ValueError(f"{a} exceeds {b}")
    ta, tb = a.monomials(), b.monomials()
    for i, (eb, cb) in enumerate(tb):
        if i >= len(ta):
            return _make(tb[i:])
        ea, ca = ta[i]
        if ea == eb and ca == cb:
            continue
        if ea == eb:
            # ca < cb here, since a <= b
            return _make(((eb, cb - ca),) + tb[i + 1:])
        return _make(tb[i:])
    return ZERO


def split_finite(a) -> Tuple[Ordinal, int]:
    """Write ``a`` as ``limit_part + n`` with ``n`` finite."""
    a = _coerce(a)
    t = a.monomials()
    if t and not t[-1][0]:
        return _make(t[:-1]), t[-1][1]
    return a, 0


def is_limit(a) -> bool:
    a = _coerce(a)
    return bool(a) and bool(smallest_exponent(a))


def is_successor(a) -> bool:
    a = _coerce(a)
    return bool(a) and not smallest_exponent(a)


def cardinality(a):
    """Finite size as an int, or ``("aleph", k)`` with ``k`` the largest atom index."""
    a = _coerce(a)
    if a.is_finite:
        return int(a)
    return ("aleph", _max_atom(a))


def _max_atom(a: Ordinal) -> int:
    if a.atom:
        return a.atom
    return max((max(_max_atom(e), 0) for e, _ in a.terms), default=0)


def normalize(parts: Iterable[Tuple[object, int]]) -> Ordinal:
    """Ordinal sum, left to right, of arbitrary ``(exponent, coefficient)`` pairs."""
    acc = ZERO
    for e, c in parts:
        acc = ord_add(acc, monomial(e, c))
    return acc


def denormalize(a) -> list:
    """Unit monomials whose left-to-right sum is ``a``."""
    out = []
    for e, c in _coerce(a).monomials():
        out.extend([(e, 1)] * c)
    return out
