"""Tutte polynomials of matroids and matroid perspectives, several ways.

Three routes compute the trivariate polynomial of a perspective and must
agree coefficient-exactly:

  * tutte_activities      - activities expansion over sets independent in
                            the matroid and spanning in the quotient
                            (Las Vergnas),
  * tutte_compatible      - compatible-sets expansion over D(M, M', <)
                            (Kochol),
  * tutte_rank_generating - corank-nullity sum over all subsets; order-free,
                            activity-free, and kept strictly as the
                            cross-validation oracle.

The bivariate specializations (Crapo's activities sum over bases, the
compatible-sets sum, the (x-1)-power expansion) are the M = M' and
quotient-of-rank-0 cases and share the same arithmetic core.
"""

from .activities import externally_active, internally_active
from .compatible import compatible_family, compatible_family_single, is_compatible
from .errors import ConsistencyError
from .matroid import Matroid, rank_zero_matroid
from .perspective import Perspective
from .polynomial import ONE, Poly, X, Y, Z


def tutte_activities(p: Perspective) -> Poly:
    """Sum of x^|Int| y^|Ext| z^defect over valid B."""
    terms = {}
    for b in p.independent_spanning_sets():
        key = (
            internally_active(p.quotient, b).bit_count(),
            externally_active(p.matroid, b).bit_count(),
            p.rank_defect(b),
        )
        terms[key] = terms.get(key, 0) + 1
    return Poly(terms)


def tutte_compatible(p: Perspective) -> Poly:
    """Sum of x^r(M'/X) y^r*(M|X) z^defect over the compatible family."""
    rq = p.quotient.rank()
    terms = {}
    for x in compatible_family(p):
        key = (
            rq - p.quotient.rank(x),
            x.bit_count() - p.matroid.rank(x),
            p.rank_defect(x),
        )
        terms[key] = terms.get(key, 0) + 1
    return Poly(terms)


def tutte_rank_generating(p: Perspective) -> Poly:
    """Corank-nullity oracle: sum over every subset A of

        (x-1)^(r(M') - r_{M'}(A)) * (y-1)^(|A| - r_M(A)) * z^defect(A).
    """
    rq = p.quotient.rank()
    xm1 = _powers(X - 1, rq)
    ym1 = _powers(Y - 1, p.ground.size)
    total = Poly()
    cache = {}
    for a in p.ground.subsets():
        key = (rq - p.quotient.rank(a), a.bit_count() - p.matroid.rank(a), p.rank_defect(a))
        term = cache.get(key)
        if term is None:
            i, j, k = key
            term = cache[key] = xm1[i] * ym1[j] * Poly.monomial(0, 0, k)
        total = total + term
    return total


def tutte_bivariate_crapo(m: Matroid) -> Poly:
    """Activities expansion of the ordinary Tutte polynomial: sum over bases
    of x^|Int(B)| y^|Ext(B)|."""
    terms = {}
    for b in m.bases:
        key = (
            internally_active(m, b).bit_count(),
            externally_active(m, b).bit_count(),
            0,
        )
        terms[key] = terms.get(key, 0) + 1
    return Poly(terms)


def tutte_bivariate_kochol(m: Matroid) -> Poly:
    """Compatible-sets expansion: sum over D(M, <) of x^r(M/X) y^r*(M|X)."""
    r = m.rank()
    terms = {}
    for x in compatible_family_single(m):
        key = (r - m.rank(x), x.bit_count() - m.rank(x), 0)
        terms[key] = terms.get(key, 0) + 1
    return Poly(terms)


def tutte_m0_expansion(m: Matroid) -> Poly:
    """Alternate compatible-sets expansion of T_M(x, y):

        sum over X with E \\ X compatible of (x-1)^r(M/X) y^r*(M|X),

    with the (x-1) powers expanded exactly.  Equals tutte_bivariate_crapo.
    """
    r = m.rank()
    xm1 = _powers(X - 1, r)
    full = m.ground.mask
    total = Poly()
    for x in m.ground.subsets():
        if not is_compatible(m, full ^ x):
            continue
        rx = m.rank(x)
        total = total + xm1[r - rx] * Poly.monomial(0, x.bit_count() - rx, 0)
    return total


def specialize_m0(m: Matroid) -> Poly:
    """Trivariate polynomial of (M, rank-0 quotient), cross-checked against
    T_M(z+1, y).

    Both routes are computed; disagreement means an implementation bug, so it
    raises rather than returning either value.
    """
    p = Perspective(m, rank_zero_matroid(m.ground))
    direct = tutte_activities(p)
    via_substitution = tutte_bivariate_crapo(m).substitute(x=Z + 1)
    if direct != via_substitution:
        raise ConsistencyError(
            f"quotient-of-rank-0 mismatch: activities gave {direct}, "
            f"T_M(z+1, y) gave {via_substitution}"
        )
    return direct


def _powers(base: Poly, up_to: int) -> list:
    out = [ONE]
    for _ in range(up_to):
        out.append(out[-1] * base)
    return out
