import json
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Optional, Union

import mpmath

from invariants.cyclotomic import CycloElement, from_terms, to_mpc
from invariants.lens import XiTrace
from invariants.numtheory import BezoutPair
from invariants.search import PairReport


def readable_timestamp():
    """Generate a sortable timestamp for run names (no weekday)."""
    return time.strftime("%Y_%m_%d_%H_%M_%S")


def fraction_to_str(x: Union[int, Fraction]) -> str:
    return str(Fraction(x))


def parse_fraction(s: str) -> Fraction:
    return Fraction(s)


def cyclo_to_record(x: CycloElement) -> Dict[str, Any]:
    return {
        "conductor": x.conductor,
        "terms": {str(k): fraction_to_str(c) for k, c in x.terms().items()},
    }


def cyclo_from_record(record: Dict[str, Any]) -> CycloElement:
    return from_terms(int(record["conductor"]), {int(k): parse_fraction(v) for k, v in record["terms"].items()})


def approx_pair(x: CycloElement, precision: int = 15):
    z = to_mpc(x, precision)
    return [float(z.real), float(z.imag)]


def format_approx(x: CycloElement, precision: int = 15) -> str:
    z = to_mpc(x, precision)
    return mpmath.nstr(z, precision)


def format_cyclo(x: CycloElement) -> str:
    # sparse power-basis coordinates: {exponent: coefficient}
    body = ", ".join(f"{k}: {fraction_to_str(c)}" for k, c in x.terms().items())
    return f"Q(zeta_{x.conductor}) {{{body}}}"


def _bezout_record(pair) -> Optional[Dict[str, int]]:
    if pair is None:
        return None
    if isinstance(pair, BezoutPair):
        return {"p_c_prime": pair.a_prime, "r_c_prime": pair.b_prime, "p_c": pair.a, "r_c": pair.b}
    r_prime, p_prime = pair
    return {"r_prime": r_prime, "p_prime": p_prime}


def trace_record(trace: XiTrace) -> Dict[str, Any]:
    return {
        "r": trace.r,
        "c": trace.c,
        "case_tag": trace.case_tag,
        "eta": trace.eta,
        "q_star": trace.q_star,
        "p_star": trace.p_star,
        "bezout": _bezout_record(trace.bezout),
    }


def report_record(report: PairReport) -> Dict[str, Any]:
    return {
        "p": report.p,
        "q1": report.q1,
        "q2": report.q2,
        "dedekind_value": fraction_to_str(report.dedekind_value),
        "distinguishing_r": list(report.distinguishing_r),
        "agreeing_r": list(report.agreeing_r),
        "all_zero_r": list(report.all_zero_r),
    }


@dataclass
class OutputRecord:
    command: str
    inputs: Dict[str, Any]
    exact: Any
    approx: Any = None
    trace: Optional[Dict[str, Any]] = field(default=None)

    def to_json(self) -> str:
        return json.dumps(
            {"command": self.command, "inputs": self.inputs, "exact": self.exact,
             "approx": self.approx, "trace": self.trace},
            sort_keys=False,
        )
