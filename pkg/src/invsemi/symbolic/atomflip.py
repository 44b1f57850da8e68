"""The atom-flip family: the smallest refuting fixture for the finite cover.

Elements are ZERO, FLIP, SQUARE and countably many ATOM(i).  SQUARE is
the identity, FLIP is an order-two symmetry fixing every atom, and
distinct atoms annihilate each other.  J_FLIP is the zero together with
all atoms, an infinite antichain of maximal idempotents, so FLIP admits
no finite downward cover; every truncation to n atoms is a genuine
finite inverse semigroup where the cover is exactly the n atoms.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..criterion import HAUSDORFF_WITNESS, REFUTED, hausdorff_criterion
from ..errors import ContractViolation, ParseError
from ..semigroup import FiniteInverseSemigroup
from . import AntichainWitness, SymbolicCriterionReport

FAMILY = "atomflip"


@dataclass(frozen=True)
class AtomFlipElement:
    kind: str            # "zero" | "flip" | "square" | "atom"
    index: int | None = None

    def __post_init__(self):
        if self.kind not in ("zero", "flip", "square", "atom"):
            raise ContractViolation(f"unknown atom-flip kind {self.kind!r}")
        if (self.kind == "atom") != (self.index is not None):
            raise ContractViolation("exactly the atoms carry an index")
        if self.index is not None and self.index < 1:
            raise ContractViolation("atom indices start at 1")

    def is_idempotent(self) -> bool:
        return self.kind != "flip"

    def __str__(self) -> str:
        return f"atom:{self.index}" if self.kind == "atom" else self.kind

    def __mul__(self, other: "AtomFlipElement") -> "AtomFlipElement":
        return multiply(self, other)

    def inverse(self) -> "AtomFlipElement":
        return self


ZERO = AtomFlipElement("zero")
FLIP = AtomFlipElement("flip")
SQUARE = AtomFlipElement("square")


def atom(i: int) -> AtomFlipElement:
    return AtomFlipElement("atom", i)


def multiply(a: AtomFlipElement, b: AtomFlipElement) -> AtomFlipElement:
    if a.kind == "zero" or b.kind == "zero":
        return ZERO
    if a.kind == "square":
        return b
    if b.kind == "square":
        return a
    if a.kind == "flip" and b.kind == "flip":
        return SQUARE
    if a.kind == "flip":
        return b
    if b.kind == "flip":
        return a
    return a if a.index == b.index else ZERO


def invert(a: AtomFlipElement) -> AtomFlipElement:
    return a


def parse(text: str) -> AtomFlipElement:
    text = text.strip().lower()
    if text in ("zero", "flip", "square"):
        return AtomFlipElement(text)
    if text.startswith("atom:"):
        try:
            return atom(int(text[5:]))
        except (ValueError, ContractViolation) as exc:
            raise ParseError(f"bad atom-flip element {text!r}: {exc}") from None
    raise ParseError(f"bad atom-flip element {text!r}; "
                     "expected zero, flip, square or atom:<i>")


def _elements(n_atoms: int) -> tuple[AtomFlipElement, ...]:
    return (ZERO, FLIP, SQUARE) + tuple(atom(i) for i in range(1, n_atoms + 1))


def truncation(n_atoms: int) -> FiniteInverseSemigroup:
    """The finite inverse semigroup on ZERO, FLIP, SQUARE and n atoms."""
    if n_atoms < 0:
        raise ContractViolation("atom count must be non-negative")
    els = _elements(n_atoms)
    index = {el: i for i, el in enumerate(els)}
    mul = [[index[multiply(a, b)] for b in els] for a in els]
    return FiniteInverseSemigroup(mul, labels=els)


def criterion(s: AtomFlipElement, truncation_atoms: int | None = None) -> SymbolicCriterionReport:
    """Finite-cover verdict for one element.

    Without a truncation bound the full countable family is meant: FLIP
    is refuted by the antichain of all atoms; everything else is
    idempotent and covered by itself.  With a bound, the verdict is
    delegated to the exhaustive table criterion on the truncation.
    """
    if truncation_atoms is not None:
        S = truncation(truncation_atoms)
        labels = {el: i for i, el in enumerate(S.labels)}
        if s not in labels:
            raise ContractViolation(
                f"{s} does not live in the truncation with {truncation_atoms} atoms")
        verdict = hausdorff_criterion(S, labels[s])
        witness = tuple(S.labels[f] for f in verdict.witness)
        return SymbolicCriterionReport(
            family=FAMILY, element=str(s),
            j_set_description=_describe_j_set(s, truncation_atoms),
            verdict=verdict.verdict,
            witness=witness)
    if s.kind == "flip":
        return SymbolicCriterionReport(
            family=FAMILY, element=str(s),
            j_set_description=_describe_j_set(s, None),
            verdict=REFUTED,
            witness=None,
            antichain=AntichainWitness(
                description="i -> atom:i, pairwise products zero, each maximal in J_s",
                member=atom))
    # zero, square and the atoms are idempotent: J_s is their down-set
    return SymbolicCriterionReport(
        family=FAMILY, element=str(s),
        j_set_description=_describe_j_set(s, None),
        verdict=HAUSDORFF_WITNESS,
        witness=(s,))


def _describe_j_set(s: AtomFlipElement, bound: int | None) -> str:
    if s.kind == "flip":
        atoms = "all atoms" if bound is None else f"atoms 1..{bound}"
        return f"zero and {atoms}"
    if s.kind == "zero":
        return "zero only"
    if s.kind == "atom":
        return f"zero and atom:{s.index}"
    atoms = "every atom" if bound is None else f"atoms 1..{bound}"
    return f"all idempotents (zero, square, {atoms})"
