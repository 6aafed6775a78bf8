"""
Sequence harness: recompute published sequences and tables and compare them
exactly, one line per check.
"""
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from app.budget import Budget
from app.coefficients import codegree_coefficients
from app.polynomial import codegree_coefficient_of, expand_phi_rowling
from app.presets import resolve_preset
from app.simplex import simplex_Ck
from app.veblen import all_veblen_class_counts, connected_veblen_classes

logger = logging.getLogger(__name__)

SIMPLEX_VALUES = {
    2: 2, 3: 21, 4: 588, 5: 28230, 6: 2092206, 7: 220611384, 8: 31373370936,
    9: 5785037767440, 10: 1342136211324090,
}
C100_LEADING = "3433452419824795908447767175"
C100_TRAILING = "2080249009900"

CONNECTED_VEBLEN_COUNTS_K3 = [0, 0, 1, 1, 2, 11, 26, 122, 781]
ALL_VEBLEN_COUNTS_K3 = [0, 0, 1, 1, 2, 12, 27, 125, 795]

FANO_FAMILY_TABLE = {
    "rowling": [1, 0, 0, -240, 0, 0, 28320, 0, 0, -2190860, 0, 0, 125012034, 0, 0, 5612445168],
    "fano-minus-1": [1, 0, 0, -288, 0, 0, 40788, 0, 0, -3788016, 0, 0, 259553826, 0, 0, -13997317932],
    "fano": [1, 0, 0, -336, 0, 0, 55524, -696, 0, -6017746, 220038, 0, 481293561, -34237560, -122004,
             -30303162330],
}


@dataclass
class CheckResult:
    name: str
    expected: object
    actual: object
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.error is None and self.expected == self.actual

    def render(self) -> str:
        if self.ok:
            return f"ok {self.name}"
        if self.error:
            return f"FAIL {self.name}: {self.error}"
        return f"FAIL {self.name}: expected {self.expected}, got {self.actual}"


def _simplex_sequence() -> Tuple[object, object]:
    return SIMPLEX_VALUES, {k: simplex_Ck(k) for k in SIMPLEX_VALUES}


def _simplex_100() -> Tuple[object, object]:
    digits = str(simplex_Ck(100))
    return (344, C100_LEADING, C100_TRAILING), (len(digits), digits[:len(C100_LEADING)], digits[-len(C100_TRAILING):])


def _veblen_counts(max_d: int, budget: Budget) -> Callable[[], Tuple[object, object]]:
    def check():
        expected = (CONNECTED_VEBLEN_COUNTS_K3[:max_d], ALL_VEBLEN_COUNTS_K3[:max_d])
        connected = [len(connected_veblen_classes(3, d, budget)) for d in range(1, max_d + 1)]
        everything = [all_veblen_class_counts(3, d, budget) for d in range(1, max_d + 1)]
        return expected, (connected, everything)
    return check


def _fano_family(name: str, d_max: int, budget: Budget) -> Callable[[], Tuple[object, object]]:
    def check():
        vector = codegree_coefficients(resolve_preset(name), d_max, budget)
        computed = [vector.values[d] for d in range(vector.valid_through + 1)]
        return FANO_FAMILY_TABLE[name][:d_max + 1], computed
    return check


def _rowling_polynomial(d_max: int) -> Callable[[], Tuple[object, object]]:
    def check():
        p = expand_phi_rowling(max_codegree=d_max)
        return FANO_FAMILY_TABLE["rowling"][:d_max + 1], [codegree_coefficient_of(p, d) for d in range(d_max + 1)]
    return check


def run_selftest(table_dmax: int = 9, veblen_dmax: int = 7, budget: Optional[Budget] = None) -> List[CheckResult]:
    budget = budget or Budget(label="selftest budget")
    checks: List[Tuple[str, Callable[[], Tuple[object, object]]]] = [
        ("simplex constants C_2..C_10", _simplex_sequence),
        ("simplex constant C_100 digits", _simplex_100),
        (f"Veblen 3-graph counts d<={veblen_dmax}", _veblen_counts(veblen_dmax, budget)),
        ("Rowling polynomial codegrees d<=15", _rowling_polynomial(15)),
    ]
    for name in FANO_FAMILY_TABLE:
        checks.append((f"{name} coefficients d<={table_dmax}", _fano_family(name, table_dmax, budget)))

    results = []
    for name, check in checks:
        try:
            expected, actual = check()
            result = CheckResult(name, expected, actual)
        except Exception as exc:
            logger.exception(f"selftest check {name!r} raised")
            result = CheckResult(name, None, None, error=f"{type(exc).__name__}: {exc}")
        logger.info(result.render())
        results.append(result)
    return results
