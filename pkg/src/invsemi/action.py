"""Actions of a finite inverse semigroup on a finite discrete set.

Each idempotent e owns a domain D_e; the element s acts as a bijection
from D_{s*s} onto D_{ss*}.  On a finite discrete space every domain is
clopen, so every `FiniteAction` is a clopen action by construction.
"""

from __future__ import annotations

from typing import Mapping

from .errors import ContractViolation
from .semigroup import FiniteInverseSemigroup


class FiniteAction:
    """An inverse semigroup acting by partial bijections on {0, ..., n-1}.

    `domain_of` maps each idempotent index to its domain; `table` maps
    (element, point) to the image point and is defined exactly on
    {(s, x) : x in D_{s*s}}.  Call `validate()` to confirm the data
    really is an action (homomorphism plus per-element bijectivity).
    """

    __slots__ = ("semigroup", "space_size", "domain_of", "table")

    def __init__(self, semigroup: FiniteInverseSemigroup, space_size: int,
                 domain_of: Mapping[int, frozenset[int]],
                 table: Mapping[tuple[int, int], int]):
        if semigroup.inv is None:
            raise ContractViolation("actions need a genuine inverse semigroup")
        if space_size < 0:
            raise ContractViolation("space_size must be non-negative")
        if set(domain_of) != set(semigroup.idempotents):
            raise ContractViolation(
                "domain_of must assign a domain to every idempotent, exactly")
        doms = {}
        for e, pts in domain_of.items():
            pts = frozenset(pts)
            for x in pts:
                if not (0 <= x < space_size):
                    raise ContractViolation(f"domain point {x} outside space of size {space_size}")
            doms[e] = pts
        object.__setattr__(self, "semigroup", semigroup)
        object.__setattr__(self, "space_size", space_size)
        object.__setattr__(self, "domain_of", doms)
        object.__setattr__(self, "table", dict(table))

    def __setattr__(self, name, value):
        raise AttributeError("FiniteAction is immutable")

    def domain(self, s: int) -> frozenset[int]:
        """D_{s*s}, where the action of s is defined."""
        S = self.semigroup
        S._check_index(s)
        return self.domain_of[S.mul[S.inv[s]][s]]

    def codomain(self, s: int) -> frozenset[int]:
        """D_{ss*}, where the action of s lands."""
        S = self.semigroup
        S._check_index(s)
        return self.domain_of[S.mul[s][S.inv[s]]]

    def act(self, s: int, x: int) -> int:
        try:
            return self.table[(s, x)]
        except KeyError:
            raise ContractViolation(
                f"action of element {s} undefined at point {x}") from None

    def germ_pairs(self) -> list[tuple[int, int]]:
        """The pair space {(s, x) : x in D_{s*s}} in (s, x) order."""
        return [(s, x) for s in self.semigroup.elements()
                for x in sorted(self.domain(s))]

    def idempotents_at(self, x: int) -> list[int]:
        """Idempotents whose domain contains x, sorted."""
        return [e for e in sorted(self.semigroup.idempotents)
                if x in self.domain_of[e]]

    def validate(self) -> None:
        """Raise ContractViolation unless the data defines an action."""
        S = self.semigroup
        defined = set(self.table)
        expected = {(s, x) for s in S.elements() for x in self.domain(s)}
        if defined != expected:
            stray = sorted(defined ^ expected)[:5]
            raise ContractViolation(f"action table domain mismatch near {stray}")
        for s in S.elements():
            dom, cod = self.domain(s), self.codomain(s)
            image = {self.table[(s, x)] for x in dom}
            if len(image) != len(dom) or not image <= cod:
                raise ContractViolation(
                    f"element {s} does not act as a bijection D_s*s -> D_ss*")
            if image != cod:
                raise ContractViolation(
                    f"element {s} does not act onto D_ss*")
        for e in S.idempotents:
            for x in self.domain_of[e]:
                if self.table[(e, x)] != x:
                    raise ContractViolation(
                        f"idempotent {e} must act as the identity on its domain")
        for s in S.elements():
            for t in S.elements():
                st = S.mul[s][t]
                dom_s = self.domain(s)
                composite = {x: self.table[(s, self.table[(t, x)])]
                             for x in self.domain(t)
                             if self.table[(t, x)] in dom_s}
                direct = {x: self.table[(st, x)] for x in self.domain(st)}
                if composite != direct:
                    raise ContractViolation(
                        f"action is not a homomorphism at ({s}, {t})")


def left_translation_action(S: FiniteInverseSemigroup) -> FiniteAction:
    """S acting on itself: s sends t to s t, defined on the ideal s*S."""
    domains = {e: frozenset(S.right_ideal(e)) for e in S.idempotents}
    table = {}
    for s in S.elements():
        ss = S.mul[S.inv[s]][s]
        for x in domains[ss]:
            table[(s, x)] = S.mul[s][x]
    return FiniteAction(S, S.order, domains, table)
