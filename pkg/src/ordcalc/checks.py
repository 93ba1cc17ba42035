"""Seeded property suites with independent oracles.

Each suite takes ``(seed, cases)`` and returns a :class:`SuiteResult`
listing every violation found.  The suites are shared by ``ordcalc check``
and the test-suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from .core import (
    ONE,
    ZERO,
    Ordinal,
    blocks,
    compare,
    leading_exponent,
    monomial,
    nat_add,
    normalize,
    denormalize,
    omega_pow,
    ord_add,
    ord_mul,
    ordinal,
    truncate,
)
from .gen import (
    random_below_tower,
    random_countable_multiset,
    random_explicit_sequence,
    random_finite_tree,
    random_limit_sequence,
    random_ordinal,
    random_sequence,
    random_split,
    random_stepset,
    random_tree,
)
from .invariant import ALEPH0, OrdMultiset, arrangement_nat_sum, countable_nsum
from .mixed import enumerate_pure_interleavings
from .sequence import Explicit, Repeat, SeqDesc, seq_length
from .sums import (
    g_sum,
    g_sum_spectrum,
    iter_nat_sum,
    iter_ord_sum,
    partial_nat_sum,
    range_g_sum,
    range_nat_sum,
    range_ord_sum,
    tail_character,
)
from .syntax import parse_ordinal, print_ordinal
from .trees import (
    expand_tree,
    extension_order_type,
    linear_extensions,
    node_count,
    rank,
    size,
    truncate_tree,
)

__all__ = [
    "SuiteResult",
    "SUITES",
    "run_suite",
    "brute_force_spectrum",
    "attaining_arrangements",
    "omega_arrangements",
    "repeat_rule_grid",
]


@dataclass
class SuiteResult:
    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def __str__(self) -> str:
        return f"{self.name}: {self.cases} cases, {len(self.failures)} violations"


def _p(a: Ordinal) -> str:
    return print_ordinal(a)


# algebra ---------------------------------------------------------------

def _at_least(a: Ordinal, eta: Ordinal, r: int) -> bool:
    return r == 0 or a >= monomial(eta, r)


def _facts_violations(a: Ordinal, b: Ordinal, c: Ordinal) -> List[str]:
    out = []
    ab = nat_add(a, b)
    if ab != nat_add(b, a):
        out.append("commutativity")
    if nat_add(ab, c) != nat_add(a, nat_add(b, c)):
        out.append("associativity")
    # cancellation, read through monotonicity: a # c = b # c exactly when a = b
    if (nat_add(a, c) == nat_add(b, c)) != (a == b) or (nat_add(c, a) == nat_add(c, b)) != (a == b):
        out.append("cancellation")
    if compare(a, b) != compare(nat_add(a, c), nat_add(b, c)) or compare(a, b) != compare(nat_add(c, a), nat_add(c, b)):
        out.append("strict monotonicity")
    s = ord_add(a, b)
    if not (max(a, b) <= s <= ab):
        out.append("sup <= + <= #")
    # (3): every beta < w^eta satisfies a # beta < a + w^eta; take beta = c, eta = lead(c) + 1
    eta = ord_add(leading_exponent(c), ONE) if c else ZERO
    if not nat_add(a, c) < ord_add(a, omega_pow(eta)):
        out.append("(3) bound")
    # (4): a # b >= w^eta*r splits as a >= w^eta*r1, b >= w^eta*r2
    for eta, _ in ab.monomials():
        r = 1
        while r < 6 and ab >= monomial(eta, r + 1):
            r += 1
        if not any(_at_least(a, eta, r1) and _at_least(b, eta, r - r1) for r1 in range(r + 1)):
            out.append(f"(4) no witness for w^{_p(eta)}*{r}")
    if b:
        t = truncate(a, leading_exponent(b))
        if not (s == ord_add(t, b) == nat_add(t, b)):
            out.append("(5) truncation")
    if not nat_add(s, c) >= ord_add(a, nat_add(b, c)):
        out.append("(6)")
    if not nat_add(a, ord_add(b, c)) >= ord_add(ab, c):
        out.append("(7)")
    if ord_add(ord_add(a, b), c) != ord_add(a, ord_add(b, c)):
        out.append("+ associativity")
    bl = blocks(a)
    if any(x < y for x, y in zip(bl, bl[1:])):
        out.append("blocks not non-increasing")
    acc = ZERO
    for x in bl:
        acc = ord_add(acc, x)
    if acc != a or normalize(denormalize(a)) != a:
        out.append("block / normal-form round trip")
    return out


def suite_algebra(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("algebra")
    rng = random.Random(seed)
    for _ in range(cases):
        a, b, c = (random_below_tower(rng, 2) for _ in range(3))
        res.cases += 1
        for v in _facts_violations(a, b, c):
            res.fail(f"{v}: a={_p(a)} b={_p(b)} c={_p(c)}")
    return res


def suite_roundtrip(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("roundtrip")
    rng = random.Random(seed)
    for _ in range(cases):
        a = random_below_tower(rng, 3)
        res.cases += 1
        text = print_ordinal(a)
        if parse_ordinal(text) != a:
            res.fail(f"round trip changed {text}")
    return res


# transfinite sums ------------------------------------------------------

def suite_carruth(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("carruth")
    rng = random.Random(seed)
    while res.cases < cases:
        a, b = random_ordinal(rng, 4, coef=3), random_ordinal(rng, 4, coef=3)
        if len(blocks(a)) + len(blocks(b)) > 12:
            continue
        res.cases += 1
        vals = enumerate_pure_interleavings(a, b)
        target = nat_add(a, b)
        if max(vals) != target or any(v > target for v in vals):
            res.fail(f"a={_p(a)} b={_p(b)} max={_p(max(vals))}")
    return res


def suite_sandwich(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("sandwich")
    rng = random.Random(seed)
    for _ in range(cases):
        s = random_sequence(rng)
        d1, d2 = random_split(rng, s)
        g = random_stepset(rng, s)
        res.cases += 1
        whole, left, mid = partial_nat_sum(s, d2), partial_nat_sum(s, d1), range_nat_sum(s, d1, d2)
        if not nat_add(left, mid) >= whole >= ord_add(left, mid):
            res.fail(f"natural sandwich at [{_p(d1)}, {_p(d2)}) of {s}")
        gw, gl, gm = range_g_sum(s, g, ZERO, d2), range_g_sum(s, g, ZERO, d1), range_g_sum(s, g, d1, d2)
        if not nat_add(gl, gm) >= gw >= ord_add(gl, gm):
            res.fail(f"G sandwich at [{_p(d1)}, {_p(d2)}) of {s}")
    return res


def suite_ordsum_dominates(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("ordsum-dominates")
    rng = random.Random(seed)
    for _ in range(cases):
        s = random_sequence(rng)
        res.cases += 1
        ordinary = iter_ord_sum(s)
        for e, c in iter_nat_sum(s).monomials():
            if not ordinary >= monomial(e, c):
                res.fail(f"ordinary sum {_p(ordinary)} below w^{_p(e)}*{c} for {s}")
    return res


def suite_tail(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("tail")
    rng = random.Random(seed)
    for _ in range(cases):
        s = random_limit_sequence(rng)
        res.cases += 1
        tc = tail_character(s)
        zeta = seq_length(s)
        tail = omega_pow(tc.xi)
        if tc.xi != (tc.total.monomials()[-1][0]):
            res.fail(f"xi is not the smallest exponent for {s}")
        for eps in sorted(tc.checked):
            if eps < tc.gamma_bar:
                continue
            if range_nat_sum(s, eps, zeta) != tail or range_ord_sum(s, eps, zeta) != tail:
                res.fail(f"tail from {_p(eps)} is not w^{_p(tc.xi)} for {s}")
            if ord_add(partial_nat_sum(s, eps), tail) != tc.total:
                res.fail(f"prefix + tail != total at {_p(eps)} for {s}")
    return res


def brute_force_spectrum(values: List[Ordinal]) -> List[Ordinal]:
    """Every value of the step-by-step fold over all subsets of natural steps."""
    out = set()
    n = len(values)
    for mask in range(1 << n):
        acc = ZERO
        for i, v in enumerate(values):
            acc = nat_add(acc, v) if mask >> i & 1 else ord_add(acc, v)
        out.add(acc)
    return sorted(out)


def suite_spectrum(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("spectrum")
    rng = random.Random(seed)
    for _ in range(cases):
        s = random_explicit_sequence(rng)
        res.cases += 1
        vals = list(s.segments[0].values) if s.segments else []
        spec = g_sum_spectrum(s)
        if spec != brute_force_spectrum(vals):
            res.fail(f"spectrum mismatch for {[_p(v) for v in vals]}")
        # sampled G-sums on sequences with Repeat segments land in the spectrum
        t = random_sequence(rng)
        spec_t = set(g_sum_spectrum(t))
        for _ in range(4):
            if g_sum(t, random_stepset(rng, t)) not in spec_t:
                res.fail(f"sampled G-sum outside spectrum for {t}")
    return res


def repeat_rule_grid() -> List[tuple]:
    alphas = ["1", "w", "w+1", "w^2+w", "w^2*2+3"]
    return [(parse_ordinal(a), eta, s) for a in alphas for eta in (1, 2, 3) for s in (1, 2)]


def _prefix_value(alpha: Ordinal, eta: int, j: int, m: int, n: int) -> Ordinal:
    """Natural sum of ``alpha`` over ``w^eta*j + w^(eta-1)*m + n`` steps; the last ``n`` are folded one by one."""
    length = ord_add(ord_mul(omega_pow(ordinal(eta)), ordinal(j)), ord_mul(omega_pow(ordinal(eta - 1)), ordinal(m)))
    segs = [Repeat(alpha, length)] if length else []
    acc = iter_nat_sum(SeqDesc(segs))
    for _ in range(n):
        acc = nat_add(acc, alpha)
    return acc


def suite_repeat_rule(seed: int = 0, cases: int = 0) -> SuiteResult:
    """The closed form for ``Repeat(alpha, w^eta*s)`` is the least upper bound of its partial sums.

    The partial sums at ``w^eta*j + w^(eta-1)*m + n`` (``j < s``, ``m <= 5``,
    ``n <= 20``) must all lie below it, and for the top copy ``j = s - 1``
    they must exceed ``w^(L+eta)*(s-1) + w^(L+eta-1)*m`` for each ``m``, so no
    ordinal below the closed form bounds the family.
    """
    res = SuiteResult("repeat-rule")
    for alpha, eta, s in repeat_rule_grid():
        res.cases += 1
        closed = iter_nat_sum(SeqDesc([Repeat(alpha, ord_mul(omega_pow(ordinal(eta)), ordinal(s)))]))
        top = ord_add(leading_exponent(alpha), ordinal(eta))
        below = ord_add(leading_exponent(alpha), ordinal(eta - 1))
        if closed != monomial(top, s):
            res.fail(f"closed form {_p(closed)} for {_p(alpha)}, eta={eta}, s={s}")
        family = {
            (j, m, n): _prefix_value(alpha, eta, j, m, n)
            for j in range(s) for m in range(6) for n in range(21)
        }
        if any(v >= closed for v in family.values()):
            res.fail(f"partial sum reaches the closed form for {_p(alpha)}, eta={eta}, s={s}")
        base = monomial(top, s - 1) if s > 1 else ZERO
        for m in range(1, 6):
            if not family[(s - 1, m, 0)] >= ord_add(base, monomial(below, m)):
                res.fail(f"family stays below w^{_p(top)}*{s - 1} + w^{_p(below)}*{m} for {_p(alpha)}, eta={eta}")
    return res


# invariant sums --------------------------------------------------------

def omega_arrangements(m: OrdMultiset, rng: random.Random, count: int) -> List[SeqDesc]:
    """Distinct length-``w`` arrangements: the finite members in some order, then the countable value."""
    (v,) = [x for x, n in m if not isinstance(n, int)]
    finite = [x for x, n in m if isinstance(n, int) for _ in range(n)]
    seen, out = set(), []
    for _ in range(50 * count):
        if len(out) == count:
            break
        vals = finite[:]
        rng.shuffle(vals)
        k = rng.randint(0, 3)
        for _ in range(k):
            vals.insert(rng.randint(0, len(vals)), v)
        arr = SeqDesc([Explicit(vals), Repeat(v, parse_ordinal("w"))]) if vals else SeqDesc([Repeat(v, parse_ordinal("w"))])
        if arr not in seen:
            seen.add(arr)
            out.append(arr)
    return out


def attaining_arrangements(m: OrdMultiset, rng: random.Random, count: int) -> List[SeqDesc]:
    """Distinct arrangements longer than ``w`` that attain the invariant sum.

    Everything else goes first, then the countable value ``w`` times, then a
    nonempty ordered selection of the clean members: nonzero members all of
    whose exponents are at least ``xi``, which survive the tail untruncated.
    """
    (v,) = [x for x, n in m if not isinstance(n, int)]
    xi = ord_add(leading_exponent(v), ONE)
    low = [x for x, n in m if isinstance(n, int) and not _clean(x, xi) for _ in range(n)]
    high = [x for x, n in m if isinstance(n, int) and _clean(x, xi) for _ in range(n)]
    if not high:
        return []
    seen, out = set(), []
    for _ in range(50 * count):
        if len(out) == count:
            break
        k = rng.randint(1, len(high))
        after = high[:]
        rng.shuffle(after)
        before, after = after[k:], after[:k]
        pre = low + before
        rng.shuffle(pre)
        segs = ([Explicit(pre)] if pre else []) + [Repeat(v, parse_ordinal("w")), Explicit(after)]
        arr = SeqDesc(segs)
        if arr not in seen:
            seen.add(arr)
            out.append(arr)
    return out


def _clean(x: Ordinal, xi: Ordinal) -> bool:
    return bool(x) and truncate(x, xi) == x


def _clean_multiset(rng: random.Random) -> OrdMultiset:
    """One countable entry, at least three finite entries and at least two clean ones."""
    m = random_countable_multiset(rng, infinite_entries=1, finite_entries=5)
    (v,) = [x for x, n in m if not isinstance(n, int)]
    xi = ord_add(leading_exponent(v), ONE)
    entries = dict(m)
    while sum(1 for x, n in entries.items() if n != ALEPH0 and _clean(x, xi)) < 2:
        x = truncate(nat_add(omega_pow(xi), random_ordinal(rng, 5)), xi)
        entries.setdefault(x, rng.randint(1, 2))
    while sum(1 for n in entries.values() if n != ALEPH0) < 3:
        entries.setdefault(random_ordinal(rng, 3), 1)
    return OrdMultiset(entries.items())


def suite_invariant(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("invariant")
    rng = random.Random(seed)
    for _ in range(cases):
        m = _clean_multiset(rng)
        res.cases += 1
        target = countable_nsum(m)
        omegas = omega_arrangements(m, rng, 5)
        longs = attaining_arrangements(m, rng, 3)
        if len(omegas) < 5 or len(longs) < 3:
            res.fail(f"too few distinct arrangements for {m}")
        for arr in omegas:
            if arrangement_nat_sum(m, arr) != target:
                res.fail(f"length-w arrangement {arr} differs from {_p(target)}")
        for arr in longs:
            if not seq_length(arr) > parse_ordinal("w"):
                res.fail(f"arrangement {arr} is not longer than w")
            if arrangement_nat_sum(m, arr) != target:
                res.fail(f"long arrangement {arr} differs from {_p(target)}")
        # any other long arrangement can only be larger
        for arr in _longer_arrangements(m, rng, 3):
            if arrangement_nat_sum(m, arr) < target:
                res.fail(f"arrangement {arr} below {_p(target)}")
    return res


def _longer_arrangements(m: OrdMultiset, rng: random.Random, count: int) -> List[SeqDesc]:
    (v,) = [x for x, n in m if not isinstance(n, int)]
    finite = [x for x, n in m if isinstance(n, int) for _ in range(n)]
    out = []
    for _ in range(count):
        vals = finite[:]
        rng.shuffle(vals)
        k = rng.randint(0, len(vals))
        segs = ([Explicit(vals[:k])] if k else []) + [Repeat(v, parse_ordinal("w*2"))]
        if k < len(vals):
            segs.append(Explicit(vals[k:]))
        out.append(SeqDesc(segs))
    return out


# trees -----------------------------------------------------------------

def suite_trees(seed: int, cases: int) -> SuiteResult:
    res = SuiteResult("trees")
    rng = random.Random(seed)
    for _ in range(cases):
        t = random_finite_tree(rng)
        res.cases += 1
        n = node_count(t)
        if size(t) != ordinal(n) or extension_order_type(t) != ordinal(n):
            res.fail(f"finite tree with {n} nodes has size {_p(size(t))}")
        if not size(t) >= ord_add(rank(t), ONE):
            res.fail("size below rank + 1")
        u = random_tree(rng)
        if extension_order_type(u) != size(u):
            res.fail(f"extension type {_p(extension_order_type(u))} != size {_p(size(u))}")
        if not size(u) >= ord_add(rank(u), ONE):
            res.fail("size below rank + 1")
        prev = ZERO
        for k in range(1, 7):
            cur = size(truncate_tree(u, k))
            if not prev <= cur <= size(u):
                res.fail(f"truncation at {k} not monotone")
            prev = cur
    # exhaustive linear extensions of small finite trees
    small = 0
    while small < max(1, cases // 4):
        t = random_finite_tree(rng, max_nodes=7)
        small += 1
        n = node_count(t)
        _, parent = expand_tree(t)
        for ext in linear_extensions(t):
            pos = {x: i for i, x in enumerate(ext)}
            if len(ext) != n or any(pos[c] > pos[p] for c, p in parent):
                res.fail("brute-force extension is not a linear extension")
            if ordinal(len(ext)) != size(t):
                res.fail("linear extension order type differs from size")
    return res


SUITES: Dict[str, Callable[[int, int], SuiteResult]] = {
    "algebra": suite_algebra,
    "roundtrip": suite_roundtrip,
    "carruth": suite_carruth,
    "sandwich": suite_sandwich,
    "ordsum": suite_ordsum_dominates,
    "tail": suite_tail,
    "spectrum": suite_spectrum,
    "repeat": suite_repeat_rule,
    "invariant": suite_invariant,
    "trees": suite_trees,
}


def run_suite(name: str, seed: int, cases: int) -> List[SuiteResult]:
    if name == "all":
        return [fn(seed, cases) for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name](seed, cases)]
