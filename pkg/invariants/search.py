# Search for lens spaces that Ohtsuki's tau cannot tell apart, and the odd
# levels r at which xi_r still distinguishes them
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from tqdm import tqdm

from invariants.errors import CrossCheckError, DomainError
from invariants.lens import lens_normalize, oriented_homeomorphic, tau_equal, xi
from invariants.numtheory import dedekind_fast
from utils.distributed import map_work_items

BUCKET_DISTINGUISHING = "distinguishing"
BUCKET_AGREEING = "agreeing"
BUCKET_ZERO = "zero"
BUCKET_MIXED = "mixed"


@dataclass(frozen=True)
class PairReport:
    p: int
    q1: int
    q2: int
    dedekind_value: Fraction
    distinguishing_r: Tuple[int, ...] = ()
    agreeing_r: Tuple[int, ...] = ()
    all_zero_r: Tuple[int, ...] = ()


def dedekind_classes(p: int) -> Dict[Fraction, List[int]]:
    classes: Dict[Fraction, List[int]] = {}
    for q in range(1, p):
        if math.gcd(p, q) == 1:
            classes.setdefault(dedekind_fast(q, p), []).append(q)
    return classes


def _twins_for_modulus(p: int) -> List[Tuple[int, int, int]]:
    twins = []
    for qs in dedekind_classes(p).values():
        for i, q1 in enumerate(qs):
            l1 = lens_normalize(p, q1)
            for q2 in qs[i + 1:]:
                if not oriented_homeomorphic(l1, lens_normalize(p, q2)):
                    twins.append((p, q1, q2))
    return twins


def find_tau_twins(p_max: int, workers: int = 1, show_progress: bool = False) -> List[Tuple[int, int, int]]:
    """All (p, q1, q2), 0 < q1 < q2 < p <= p_max, with s(q1,p) = s(q2,p) and L(p,q1) not
    orientation-preserving homeomorphic to L(p,q2)."""
    if p_max < 2:
        raise DomainError(f"find_tau_twins: p_max must be >= 2, got {p_max}")
    per_p = map_work_items(_twins_for_modulus, range(2, p_max + 1), workers=workers,
                           show_progress=show_progress, desc="moduli")
    twins = sorted(t for p in per_p for t in per_p[p])
    for p, q1, q2 in twins:
        l1, l2 = lens_normalize(p, q1), lens_normalize(p, q2)
        if not tau_equal(l1, l2) or oriented_homeomorphic(l1, l2):
            raise CrossCheckError(f"search produced an invalid pair {l1}, {l2}")
    return twins


def odd_levels(r_max: int) -> range:
    return range(3, r_max + 1, 2)


def classify_pair(p: int, q1: int, q2: int, r_max: int, show_progress: bool = False) -> PairReport:
    l1, l2 = lens_normalize(p, q1), lens_normalize(p, q2)
    if oriented_homeomorphic(l1, l2):
        raise DomainError(f"classify_pair: {l1} and {l2} are homeomorphic")
    if not tau_equal(l1, l2):
        raise DomainError(f"classify_pair: tau distinguishes {l1} and {l2}")

    distinguishing, agreeing, all_zero = [], [], []
    for r in tqdm(odd_levels(r_max), desc=f"{l1} vs {l2}", disable=not show_progress):
        t1, t2 = xi(l1, r), xi(l2, r)
        if t1.value == t2.value:
            agreeing.append(r)
            if t1.is_zero and t2.is_zero:
                all_zero.append(r)
        else:
            distinguishing.append(r)
    return PairReport(
        p=p, q1=l1.q, q2=l2.q, dedekind_value=dedekind_fast(l1.q, p),
        distinguishing_r=tuple(distinguishing), agreeing_r=tuple(agreeing), all_zero_r=tuple(all_zero),
    )


def gcd_profile(report: PairReport) -> Dict[int, str]:
    """Bucket of every gcd(r, p) class; 'mixed' when its levels fell into different buckets."""
    zero = set(report.all_zero_r)
    seen: Dict[int, set] = {}
    for r in report.distinguishing_r:
        seen.setdefault(math.gcd(r, report.p), set()).add(BUCKET_DISTINGUISHING)
    for r in report.agreeing_r:
        bucket = BUCKET_ZERO if r in zero else BUCKET_AGREEING
        seen.setdefault(math.gcd(r, report.p), set()).add(bucket)
    return {g: (buckets.pop() if len(buckets) == 1 else BUCKET_MIXED) for g, buckets in sorted(seen.items())}
