"""Compatible sets and the families they index.

X is compatible with a matroid (under the ground order) when no circuit C
meets X exactly in C's `<`-least element.  The family D(M, M', <) collects
the X that are compatible with (M')* while E \\ X is compatible with M; for
M = M' this is Kochol's original D(M, <).

compatible_family enumerates all 2^n subsets against the definition.  That
is deliberate: it is the ground truth the bijection is tested against, so a
smarter generator must never replace it here.
"""

from .matroid import Matroid
from .perspective import Perspective
from .setcore import bit


def is_compatible(m: Matroid, x: int) -> bool:
    """True iff no circuit C has X ∩ C = {min(C)}."""
    m.ground.check_subset(x)
    ground = m.ground
    for c in m.circuits:
        if x & c == bit(ground.min_element(c)):
            return False
    return True


def compatible_family(p: Perspective) -> list:
    """All X with X compatible for quotient* and E \\ X compatible for the
    matroid, in increasing mask order."""
    dual_q = p.quotient.dual()
    full = p.ground.mask
    return [
        x
        for x in p.ground.subsets()
        if is_compatible(dual_q, x) and is_compatible(p.matroid, full ^ x)
    ]


def compatible_family_single(m: Matroid) -> list:
    """D(M, <): the perspective family of (M, M)."""
    return compatible_family(Perspective(m, m))
