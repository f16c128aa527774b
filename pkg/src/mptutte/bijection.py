"""The activity/compatible-set bijection for a matroid perspective.

forward sends a set B (independent in the matroid, spanning in the quotient)
to X = B \\ Int(B) ∪ Ext(B), landing in the compatible family; backward
inverts it via minimal bases of the restriction's dual and the contracted
quotient:

    backward(X) = X \\ min_basis((M|X)*) ∪ min_basis(M'/X)

bijection_table lays out one row per valid B, ordered by size then
lexicographically, with the monomial exponents
(|Int|, |Ext|, rank defect) that drive the trivariate polynomial.
"""

from dataclasses import dataclass

from .activities import externally_active, internally_active
from .compatible import is_compatible
from .errors import DomainError
from .perspective import Perspective


@dataclass(frozen=True)
class BijectionRow:
    """One table row: B with its activities, image X, and monomial exponents."""

    b: int
    internal: int
    external: int
    x: int
    monomial: tuple


def forward(p: Perspective, b: int, check: bool = True) -> int:
    """X = B \\ Int_{quotient}(B) ∪ Ext_{matroid}(B)."""
    if check and not (p.matroid.is_independent(b) and p.quotient.is_spanning(b)):
        raise DomainError(
            f"{p.ground.fmt(b)} is not independent-in-matroid and spanning-in-quotient"
        )
    return (b & ~internally_active(p.quotient, b)) | externally_active(p.matroid, b)


def backward(p: Perspective, x: int, check: bool = True) -> int:
    """B = X \\ min_basis((M|X)*) ∪ min_basis(M'/X)."""
    if check and not (
        is_compatible(p.quotient.dual(), x)
        and is_compatible(p.matroid, p.ground.mask ^ x)
    ):
        raise DomainError(f"{p.ground.fmt(x)} is not in the compatible family")
    drop = p.matroid.restrict(x).dual().min_basis()
    add = p.quotient.contract(x).min_basis()
    return (x & ~drop) | add


def bijection_table(p: Perspective) -> list:
    """Rows for every valid B, sorted by (size, lex)."""
    rows = []
    for b in p.independent_spanning_sets():
        internal = internally_active(p.quotient, b)
        external = externally_active(p.matroid, b)
        x = (b & ~internal) | external
        assert internal & ~b == 0 and external & b == 0
        rows.append(
            BijectionRow(
                b=b,
                internal=internal,
                external=external,
                x=x,
                monomial=(internal.bit_count(), external.bit_count(), p.rank_defect(b)),
            )
        )
    return rows
