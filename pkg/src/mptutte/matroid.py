"""Matroids given by an explicit basis family.

The basis family is the canonical representation (sorted tuple of bitmasks);
circuits, the dual, and minors are derived from it.  Construction validates
the basis-exchange axiom exhaustively, which is O(|bases|^2 * n) and entirely
fine at the desk scale this package targets (n <= 30, realistically far
smaller).  Internal constructions whose correctness is a theorem (duals,
minors) skip validation via the ``validate`` flag.

Loops and coloops are ordinary citizens: a rank-0 matroid is
``Matroid.from_bases(ground, [0])``, and from_circuits accepts singleton
circuits.
"""

from itertools import combinations

from .errors import AxiomError, DomainError
from .setcore import GroundSet, bit


class Matroid:
    """A matroid on a :class:`GroundSet`, stored by its bases."""

    __slots__ = ("ground", "bases", "_bases_set", "_circuits", "_dual")

    def __init__(self, ground: GroundSet, bases, validate: bool = True):
        seen = set()
        for b in bases:
            ground.check_subset(b)
            seen.add(b)
        if not seen:
            raise AxiomError("a matroid needs at least one basis")
        self.ground = ground
        self.bases = tuple(sorted(seen))
        self._bases_set = frozenset(seen)
        self._circuits = None
        self._dual = None
        if validate:
            self._check_exchange()

    # -- construction ------------------------------------------------------

    @classmethod
    def from_bases(cls, ground: GroundSet, bases, validate: bool = True) -> "Matroid":
        """Matroid from an explicit basis family; checks the exchange axiom."""
        return cls(ground, bases, validate=validate)

    @classmethod
    def from_circuits(cls, ground: GroundSet, circuits, validate: bool = True) -> "Matroid":
        """Matroid from its circuit family.

        Checks that the family is an antichain satisfying circuit
        elimination, then derives the bases as the maximum-size circuit-free
        subsets.  An empty family gives the free matroid.
        """
        circs = sorted({ground.check_subset(c) for c in circuits})
        if validate:
            _check_circuit_axioms(ground, circs)
        best, best_size = [], -1
        for s in ground.subsets():
            if any(c & ~s == 0 for c in circs):
                continue
            size = s.bit_count()
            if size > best_size:
                best, best_size = [s], size
            elif size == best_size:
                best.append(s)
        m = cls(ground, best, validate=False)
        m._circuits = tuple(circs)
        return m

    # -- basic oracles -----------------------------------------------------

    @property
    def size(self) -> int:
        return self.ground.size

    def rank(self, x: int | None = None) -> int:
        """Rank of a subset (of the whole ground set when omitted)."""
        if x is None:
            return self.bases[0].bit_count() if self.bases else 0
        self.ground.check_subset(x)
        return max((b & x).bit_count() for b in self.bases)

    def corank(self, x: int | None = None) -> int:
        """Rank in the dual: |X| - r(M) + r(E \\ X)."""
        if x is None:
            x = self.ground.mask
        self.ground.check_subset(x)
        return x.bit_count() - self.rank() + self.rank(self.ground.mask ^ x)

    def is_basis(self, x: int) -> bool:
        return x in self._bases_set

    def is_independent(self, x: int) -> bool:
        """True iff some basis contains X."""
        self.ground.check_subset(x)
        return any(x & ~b == 0 for b in self.bases)

    def is_spanning(self, x: int) -> bool:
        """True iff X has full rank."""
        return self.rank(x) == self.rank()

    # -- derived structure -------------------------------------------------

    @property
    def circuits(self) -> tuple:
        """All circuits, sorted by mask value.  Computed once and cached.

        Every circuit C is the unique circuit of B + e for any basis B
        extending C - e with e = some element of C, so collecting fundamental
        circuits {e} | {f in B : B - f + e is a basis} over all pairs
        (basis, e outside) yields the full family.
        """
        if self._circuits is None:
            found = set()
            ground_mask = self.ground.mask
            in_bases = self._bases_set
            for b in self.bases:
                outside = ground_mask & ~b
                while outside:
                    low = outside & -outside
                    outside ^= low
                    circ = low
                    rest = b
                    while rest:
                        f = rest & -rest
                        rest ^= f
                        if (b ^ f) | low in in_bases:
                            circ |= f
                    found.add(circ)
            self._circuits = tuple(sorted(found))
        return self._circuits

    def circuits_within(self, x: int) -> tuple:
        """All circuits contained in X."""
        self.ground.check_subset(x)
        return tuple(c for c in self.circuits if c & ~x == 0)

    def dual(self) -> "Matroid":
        """The dual matroid: bases are the complements of bases.  Cached."""
        if self._dual is None:
            full = self.ground.mask
            d = Matroid(self.ground, [full ^ b for b in self.bases], validate=False)
            d._dual = self
            self._dual = d
        return self._dual

    def restrict(self, x: int) -> "Matroid":
        """M|X on ground set X, original labels and order."""
        self.ground.check_subset(x)
        sub = GroundSet.from_order(e for e in self.ground.order if bit(e) & x)
        r = self.rank(x)
        return Matroid(sub, {b & x for b in self.bases if (b & x).bit_count() == r},
                       validate=False)

    def contract(self, x: int) -> "Matroid":
        """M/X on ground set E \\ X, original labels and order."""
        self.ground.check_subset(x)
        keep = self.ground.mask ^ x
        sub = GroundSet.from_order(e for e in self.ground.order if bit(e) & keep)
        bx = self._max_independent_within(x)
        return Matroid(sub, {b & keep for b in self.bases if b & bx == bx},
                       validate=False)

    def min_basis(self) -> int:
        """Lexicographically least basis under the ground order, greedily.

        Scanning elements in ``<`` order and keeping those that preserve
        independence is the classic matroid greedy; tests check it against
        the brute-force lexicographic minimum.
        """
        kept = 0
        for e in self.ground.order:
            cand = kept | bit(e)
            if self.is_independent(cand):
                kept = cand
        return kept

    def _max_independent_within(self, x: int) -> int:
        kept = 0
        for e in self.ground.order:
            b = bit(e)
            if b & x and self.is_independent(kept | b):
                kept |= b
        return kept

    # -- plumbing ----------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Matroid)
            and self.ground == other.ground
            and self._bases_set == other._bases_set
        )

    def __hash__(self):
        return hash((self.ground, self._bases_set))

    def __repr__(self):
        shown = ", ".join(self.ground.fmt(b) for b in self.bases[:4])
        more = "" if len(self.bases) <= 4 else f", ... ({len(self.bases)} bases)"
        return f"Matroid(rank {self.rank()} on {self.ground.fmt(self.ground.mask)}; bases {shown}{more})"

    def _check_exchange(self):
        fmt = self.ground.fmt
        sizes = {b.bit_count() for b in self.bases}
        if len(sizes) > 1:
            small = min(self.bases, key=int.bit_count)
            big = max(self.bases, key=int.bit_count)
            raise AxiomError(
                f"bases must share one cardinality; {fmt(small)} and {fmt(big)} differ"
            )
        for b1 in self.bases:
            for b2 in self.bases:
                only1 = b1 & ~b2
                rest = only1
                while rest:
                    e = rest & -rest
                    rest ^= e
                    swap_in = b2 & ~b1
                    ok = False
                    while swap_in:
                        f = swap_in & -swap_in
                        swap_in ^= f
                        if (b1 ^ e) | f in self._bases_set:
                            ok = True
                            break
                    if not ok:
                        raise AxiomError(
                            "basis exchange fails: no replacement for element "
                            f"{e.bit_length()} of {fmt(b1)} against {fmt(b2)}"
                        )


def _check_circuit_axioms(ground: GroundSet, circs):
    fmt = ground.fmt
    for c in circs:
        if c == 0:
            raise AxiomError("the empty set cannot be a circuit")
    for c1, c2 in combinations(circs, 2):
        if c1 & ~c2 == 0 or c2 & ~c1 == 0:
            raise AxiomError(f"circuits must form an antichain; {fmt(c1)} is inside {fmt(c2)}")
    for c1, c2 in combinations(circs, 2):
        common = c1 & c2
        while common:
            e = common & -common
            common ^= e
            union = (c1 | c2) ^ e
            if not any(c & ~union == 0 for c in circs):
                raise AxiomError(
                    "circuit elimination fails: no circuit inside "
                    f"{fmt(union)} (from {fmt(c1)}, {fmt(c2)} dropping {e.bit_length()})"
                )


# -- small factories used throughout the tests and the corpus ---------------

def free_matroid(ground: GroundSet) -> Matroid:
    """Every subset independent: the single basis is E."""
    return Matroid(ground, [ground.mask], validate=False)


def rank_zero_matroid(ground: GroundSet) -> Matroid:
    """Every element a loop: the single basis is the empty set."""
    return Matroid(ground, [0], validate=False)


def uniform_matroid(k: int, ground: GroundSet) -> Matroid:
    """U_{k,n}: the bases are all k-subsets."""
    n = ground.size
    if not 0 <= k <= n:
        raise DomainError(f"uniform rank {k} out of range 0..{n}")
    bases = [sum(map(bit, combo)) for combo in combinations(ground.labels(ground.mask), k)]
    return Matroid(ground, bases, validate=False)
