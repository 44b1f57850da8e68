"""Finite inverse semigroups as multiplication tables.

A `FiniteInverseSemigroup` wraps an m x m table of element indices and
derives the inverse map, the idempotents, the absorbing zero (if any)
and the natural partial order s <= t  iff  t s* s = s.  Construction
never rejects an algebraically broken table; `verify_inverse_semigroup`
reports whether the table really is an inverse semigroup, with a
certificate on failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceeded, ContractViolation
from .partial_bijection import PartialBijection

DEFAULT_CLOSE_BUDGET = 5000

UP = "leq"    # A^<= : everything above some member
DOWN = "geq"  # A^>= : everything below some member


class FiniteInverseSemigroup:
    """Multiplication-table model of a finite inverse semigroup.

    Immutable after construction; all queries are pure, so instances can
    be shared freely between threads.
    """

    __slots__ = ("mul", "order", "labels", "inv", "idempotents", "zero",
                 "_inverse_sets", "_up_masks")

    def __init__(self, mul: Sequence[Sequence[int]], labels: Sequence | None = None):
        table = tuple(tuple(row) for row in mul)
        m = len(table)
        for i, row in enumerate(table):
            if len(row) != m:
                raise ContractViolation(f"row {i} has length {len(row)}, expected {m}")
            for v in row:
                if not (0 <= v < m):
                    raise ContractViolation(f"table entry {v} out of range [0, {m})")
        if labels is not None and len(labels) != m:
            raise ContractViolation(f"{len(labels)} labels for {m} elements")
        object.__setattr__(self, "mul", table)
        object.__setattr__(self, "order", m)
        object.__setattr__(self, "labels", tuple(labels) if labels is not None else None)
        object.__setattr__(self, "idempotents",
                           frozenset(e for e in range(m) if table[e][e] == e))
        # Generalized inverses per element; the structure is inverse only
        # when every set below is a singleton.
        inverse_sets = tuple(
            frozenset(t for t in range(m)
                      if table[table[s][t]][s] == s and table[table[t][s]][t] == t)
            for s in range(m))
        object.__setattr__(self, "_inverse_sets", inverse_sets)
        if all(len(c) == 1 for c in inverse_sets):
            inv = tuple(next(iter(c)) for c in inverse_sets)
        else:
            inv = None
        object.__setattr__(self, "inv", inv)
        zero = None
        for z in range(m):
            if all(table[z][x] == z and table[x][z] == z for x in range(m)):
                zero = z
                break
        object.__setattr__(self, "zero", zero)
        if inv is not None:
            up_masks = []
            for s in range(m):
                ss = table[inv[s]][s]
                mask = 0
                for t in range(m):
                    if table[t][ss] == s:
                        mask |= 1 << t
                up_masks.append(mask)
            object.__setattr__(self, "_up_masks", tuple(up_masks))
        else:
            object.__setattr__(self, "_up_masks", None)

    def __setattr__(self, name, value):
        raise AttributeError("FiniteInverseSemigroup is immutable")

    # -- basic arithmetic ------------------------------------------------

    def product(self, s: int, t: int) -> int:
        self._check_index(s)
        self._check_index(t)
        return self.mul[s][t]

    def inverse(self, s: int) -> int:
        self._check_index(s)
        if self.inv is None:
            raise ContractViolation("table is not an inverse semigroup; no inverse map")
        return self.inv[s]

    def is_idempotent(self, s: int) -> bool:
        return s in self.idempotents

    @property
    def is_group(self) -> bool:
        return self.inv is not None and len(self.idempotents) == 1

    def label(self, s: int):
        return self.labels[s] if self.labels is not None else s

    def label_str(self, s: int) -> str:
        return str(self.label(s))

    def elements(self) -> range:
        return range(self.order)

    # -- natural partial order -------------------------------------------

    def leq(self, s: int, t: int) -> bool:
        """s <= t in the natural partial order: t s* s = s."""
        self._check_index(s)
        self._check_index(t)
        return bool(self._require_up_masks()[s] >> t & 1)

    def upper_set(self, s: int) -> frozenset[int]:
        """All t with s <= t."""
        self._check_index(s)
        return _mask_to_set(self._require_up_masks()[s])

    def lower_set(self, s: int) -> frozenset[int]:
        """All t with t <= s."""
        self._check_index(s)
        masks = self._require_up_masks()
        return frozenset(t for t in range(self.order) if masks[t] >> s & 1)

    def up_set(self, subset: Iterable[int], relation: str = UP) -> frozenset[int]:
        """A^rel = {b : a rel b for some a in A}, rel one of "leq"/"geq".

        "leq" collects everything above some member, "geq" everything
        below some member (the downward closure used by the finite-cover
        criterion).
        """
        members = set(subset)
        for a in members:
            self._check_index(a)
        if relation == UP:
            out: set[int] = set()
            masks = self._require_up_masks()
            for a in members:
                out |= _mask_to_set(masks[a])
            return frozenset(out)
        if relation == DOWN:
            out = set()
            for a in members:
                out |= self.lower_set(a)
            return frozenset(out)
        raise ContractViolation(f"relation must be {UP!r} or {DOWN!r}, got {relation!r}")

    def maximal_elements(self, subset: Iterable[int]) -> tuple[int, ...]:
        """Members of `subset` not strictly below another member; sorted."""
        members = sorted(set(subset))
        out = []
        for a in members:
            if not any(b != a and self.leq(a, b) for b in members):
                out.append(a)
        return tuple(out)

    # -- derived sets ------------------------------------------------------

    def j_set(self, s: int) -> frozenset[int]:
        """Idempotents e with s e = e; equivalently the idempotents below s."""
        self._check_index(s)
        row = self.mul[s]
        return frozenset(e for e in self.idempotents if row[e] == e)

    def right_ideal(self, s: int) -> frozenset[int]:
        """The set sS = {s x : x in S}."""
        self._check_index(s)
        return frozenset(self.mul[s])

    def idempotent_set(self) -> "IdempotentSet":
        return IdempotentSet(self, self.idempotents)

    # -- plumbing ----------------------------------------------------------

    def _check_index(self, s: int) -> None:
        if not (0 <= s < self.order):
            raise ContractViolation(f"element index {s} out of range [0, {self.order})")

    def _require_up_masks(self):
        if self._up_masks is None:
            raise ContractViolation("table is not an inverse semigroup; order undefined")
        return self._up_masks

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"<FiniteInverseSemigroup order={self.order} idempotents={len(self.idempotents)}>"


@dataclass(frozen=True)
class IdempotentSet:
    """The commutative idempotent subsemigroup E_S of a parent semigroup."""

    parent: FiniteInverseSemigroup
    members: frozenset[int]

    def meet(self, e: int, f: int) -> int:
        self._check(e)
        self._check(f)
        return self.parent.mul[e][f]

    def leq(self, e: int, f: int) -> bool:
        """On idempotents the natural order reduces to e f = e."""
        self._check(e)
        self._check(f)
        return self.parent.mul[e][f] == e

    def is_closed(self) -> bool:
        return all(self.parent.mul[e][f] in self.members
                   for e in self.members for f in self.members)

    def is_commutative(self) -> bool:
        return all(self.parent.mul[e][f] == self.parent.mul[f][e]
                   for e in self.members for f in self.members)

    def _check(self, e: int) -> None:
        if e not in self.members:
            raise ContractViolation(f"{e} is not a member idempotent")


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of `verify_inverse_semigroup`.

    On failure `reason` is "associativity" (certificate: violating
    triple) or "inverse-uniqueness" (certificate: (element, candidate
    inverses)).
    """

    ok: bool
    reason: str | None = None
    certificate: tuple | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_inverse_semigroup(S: FiniteInverseSemigroup) -> VerificationResult:
    """Check associativity and uniqueness of generalized inverses.

    Exhaustive over all triples/pairs, so intended for desk-scale tables.
    """
    mul = S.mul
    m = S.order
    for a in range(m):
        for b in range(m):
            ab = mul[a][b]
            row_a = mul[a]
            for c in range(m):
                if mul[ab][c] != row_a[mul[b][c]]:
                    return VerificationResult(False, "associativity", (a, b, c))
    for s in range(m):
        cands = S._inverse_sets[s]
        if len(cands) != 1:
            return VerificationResult(False, "inverse-uniqueness", (s, tuple(sorted(cands))))
    return VerificationResult(True)


def natural_leq(S: FiniteInverseSemigroup, s: int, t: int) -> bool:
    return S.leq(s, t)


def j_set(S: FiniteInverseSemigroup, s: int) -> frozenset[int]:
    return S.j_set(s)


def up_set(S: FiniteInverseSemigroup, subset: Iterable[int], relation: str = UP) -> frozenset[int]:
    return S.up_set(subset, relation)


def close(generators: Sequence[PartialBijection],
          budget: int | None = None) -> FiniteInverseSemigroup:
    """Close partial-bijection generators under composition and inverses.

    Breadth-first: generators in the given order, then their inverses,
    then products explored in (left index, right index) order, so equal
    generator lists always yield identical element indexing.  Raises
    `BudgetExceeded` if the closure would pass `budget` elements.
    """
    if not generators:
        raise ContractViolation("need at least one generator")
    ground = generators[0].ground_size
    for g in generators:
        if g.ground_size != ground:
            raise ContractViolation("generators live on different ground sets")
    if budget is None:
        budget = DEFAULT_CLOSE_BUDGET

    elements: list[PartialBijection] = []
    index: dict[PartialBijection, int] = {}

    def add(el: PartialBijection) -> None:
        if el not in index:
            if len(elements) >= budget:
                raise BudgetExceeded(
                    f"closure exceeded element budget {budget}", budget)
            index[el] = len(elements)
            elements.append(el)

    for g in generators:
        add(g)
    for g in generators:
        add(g.invert())

    frontier_start = 0
    while frontier_start < len(elements):
        known = len(elements)
        # products with at least one factor in the new frontier
        for i in range(known):
            for j in range(known):
                if i < frontier_start and j < frontier_start:
                    continue
                add(elements[i].compose(elements[j]))
        frontier_start = known

    mul = [[index[elements[i].compose(elements[j])] for j in range(len(elements))]
           for i in range(len(elements))]
    return FiniteInverseSemigroup(mul, labels=elements)


def _mask_to_set(mask: int) -> frozenset[int]:
    out = []
    t = 0
    while mask:
        if mask & 1:
            out.append(t)
        mask >>= 1
        t += 1
    return frozenset(out)
