"""Point-set classification and end-to-end theorem verification.

The classification is three-way: convex position, the exceptional
six-point order type (pentagon-like hull plus interior point where every
vertex line halves the set), or generic.  Only the first two attain the
convex minimum number of matchings; a verification report checks all the
implications on a concrete set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OddSizeError
from .geometry import PointSet, convex_hull, is_convex_position, side_counts
from .matchings import (
    DEFAULT_COUNT_CAP,
    catalan,
    count_matchings,
    gnt_lower_bound,
)
from .witness import build_witness

CONVEX = "convex"
EXCEPTIONAL_SIX = "exceptional_six"
GENERIC = "generic"


def is_exceptional_six(ps: PointSet) -> bool:
    """True iff n = 6 with one interior point and every vertex line halving.

    The all-halving condition is the operational definition of the
    exceptional order type; its consequences (exactly five matchings, no
    piercing matching) are cross-validated in the test suite.
    """
    if len(ps) != 6:
        return False
    labeling = convex_hull(ps)
    if len(labeling.interior) != 1:
        return False
    q = labeling.interior[0]
    return all(side_counts(ps, q, j) == (2, 2) for j in labeling.hull)


def classify(ps: PointSet) -> str:
    """Convex / exceptional-six / generic; two points count as convex."""
    n = len(ps)
    if n % 2 != 0:
        raise OddSizeError(f"point set has odd size {n}")
    if n == 2 or is_convex_position(ps):
        return CONVEX
    if is_exceptional_six(ps):
        return EXCEPTIONAL_SIX
    return GENERIC


@dataclass(frozen=True)
class TheoremReport:
    """All quantities and consistency checks for one point set.

    ``pm`` is None when the set exceeds the enumeration cap; checks that
    need it are then listed in ``skipped_checks`` instead of contributing
    to ``consistent``.  Failed check labels are kept for diagnostics.
    """

    n: int
    k: int
    pm: int | None
    catalan_k: int
    gnt: int
    classification: str
    witness_found: bool
    consistent: bool
    skipped_checks: tuple[str, ...] = ()
    failed_checks: tuple[str, ...] = ()


def verify_main_theorem(ps: PointSet, *, max_enum: int = DEFAULT_COUNT_CAP) -> TheoremReport:
    """Evaluate every implication of the matching-minimum theorems on ps.

    Checks: pm >= C_k; C_k <= gnt <= pm; pm = C_k exactly for convex and
    exceptional sets; a witness exists exactly for generic sets; a witness
    implies pm > C_k.
    """
    n = len(ps)
    if n % 2 != 0:
        raise OddSizeError(f"point set has odd size {n}")
    k = n // 2
    cat = catalan(k)
    gnt = gnt_lower_bound(ps)
    classification = classify(ps)
    witness = build_witness(ps)
    witness_found = witness.found

    pm: int | None = None
    skipped: list[str] = []
    if n <= max_enum:
        pm = count_matchings(ps, max_n=max_enum)

    checks: dict[str, bool | None] = {
        "pm_ge_catalan": None if pm is None else pm >= cat,
        "gnt_ge_catalan": gnt >= cat,
        "gnt_le_pm": None if pm is None else gnt <= pm,
        "equality_iff_special": None
        if pm is None
        else (pm == cat) == (classification in (CONVEX, EXCEPTIONAL_SIX)),
        "witness_iff_generic": witness_found == (classification == GENERIC),
        "witness_implies_pm_gt": None
        if pm is None
        else (not witness_found) or pm > cat,
    }
    failed = tuple(name for name, ok in checks.items() if ok is False)
    skipped = [name for name, ok in checks.items() if ok is None]

    return TheoremReport(
        n=n,
        k=k,
        pm=pm,
        catalan_k=cat,
        gnt=gnt,
        classification=classification,
        witness_found=witness_found,
        consistent=not failed,
        skipped_checks=tuple(skipped),
        failed_checks=failed,
    )
