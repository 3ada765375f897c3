"""Verification suites.

Each suite runs a family of exact checks and returns a :class:`SuiteReport`.
A failed check is recorded in the report, never raised: an exception thrown
while checking becomes a failed check whose detail names the exception.
"""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache, partial
from typing import Callable, Iterable, List, Optional, Sequence, Tuple, Union

from sympy.functions.combinatorial.numbers import stirling

from . import config
from .analysis import (
    positivity_report,
    real_root_certificate,
    strictly_interlaces,
    symmetric_decompose,
)
from .enumeration import (
    distribution,
    first_entry_split,
    gen_family,
    last_entry_split,
    multiset_descent_poly,
    reversal_negation,
    word_stats,
)
from .exceptions import MultiEulerException, ValidationException
from .families import family_center, family_decomposition_parts, family_polynomial
from .grammar import builtin_grammar, iterate_pair, specialize, stirling_row
from .model.formal import FormalPoly
from .model.poly import UniPoly, poly_reverse
from .model.report import CheckResult, SuiteReport
from .recurrences import (
    assemble_from_gamma,
    diff_system,
    eta_rows,
    gamma_p_rows,
    gamma_r_rows,
    pnk_rows,
    qnk_via_r,
    r_poly_diff,
    snk_rows,
    tnk_rows,
)
from .series import check_macmahon, check_p_identity, check_q_identity

logger = logging.getLogger(__name__)

Outcome = Union[bool, Tuple[bool, str]]
FAMILIES = config.AVAILABLE_FAMILIES


class _Collector:
    def __init__(self, suite: str):
        self.suite = suite
        self.checks: List[CheckResult] = []

    def check(self, name: str, family: str, n: int, test: Callable[[], Outcome]) -> None:
        try:
            outcome = test()
        except MultiEulerException as e:
            outcome = (False, f"{type(e).__name__}: {e}")
        passed, detail = outcome if isinstance(outcome, tuple) else (outcome, "")
        if not passed:
            logger.warning(f"[{self.suite}] {name} {family} n={n} failed {detail}".rstrip())
        self.checks.append(CheckResult(self.suite, name, family, n, bool(passed), detail))

    def equal(self, name: str, family: str, n: int, got: Callable[[], object],
              want: Callable[[], object]) -> None:
        def test() -> Outcome:
            g, w = got(), want()
            return (True, "") if g == w else (False, f"got {g}, expected {w}")

        self.check(name, family, n, test)


def _family_rows(max_n: int):
    """Recurrence polynomials for every family, n = 1..max_n."""
    r_table, q_table = qnk_via_r(max_n)
    return {
        "P": pnk_rows(max_n),
        "Q": q_table,
        "S": snk_rows(max_n),
        "T": tnk_rows(max_n),
        "R": r_table,
    }


def _cardinality(family: str, n: int) -> int:
    even = math.factorial(2 * n)
    return {
        "P": even // 2 ** n,
        "Q": (2 * n + 1) * even // 2 ** n,
        "S": 2 ** n * even,
        "T": (2 * n + 1) * 2 ** n * even,
    }[family]


def suite_cross(max_n: int) -> List[CheckResult]:
    out = _Collector("cross")
    rows = _family_rows(max_n)
    system = diff_system(max_n)
    for family in FAMILIES:
        for n in range(1, max_n + 1):
            rec = rows[family].poly(n)
            out.equal("diffsys", family, n, lambda: getattr(system, family)[n], lambda: rec)
            out.equal("gamma", family, n, lambda: assemble_from_gamma(family, n), lambda: rec)
            out.check(
                "cardinality", family, n, lambda: sum(rec.int_coeffs()) == _cardinality(family, n)
            )
            if n <= config.GRAMMAR_DEPTH:
                out.equal("grammar", family, n, lambda: family_polynomial(family, n, "grammar"),
                          lambda: rec)
            if n <= config.CROSS_ENUM_DEPTH[family]:
                out.equal("enum", family, n, lambda: family_polynomial(family, n, "enum"),
                          lambda: rec)
            if n <= config.CROSS_INVSEQ_DEPTH[family]:
                out.equal("invseq", family, n, lambda: family_polynomial(family, n, "invseq"),
                          lambda: rec)
    return out.checks


def suite_gamma(max_n: int) -> List[CheckResult]:
    out = _Collector("gamma")
    out.check("p_nonnegative", "p", max_n, lambda: bool(gamma_p_rows(max_n).rows))
    out.check("r_nonnegative", "r", max_n, lambda: bool(gamma_r_rows(max_n).rows))
    out.check(
        "eta_nonnegative", "eta", 2 * max_n + 1, lambda: bool(eta_rows(2 * max_n + 1)[0].rows)
    )
    rows = _family_rows(max_n)
    for n in range(1, max_n + 1):
        p, r, q = rows["P"].poly(n), rows["R"].poly(n), rows["Q"].poly(n)
        out.equal("Q=R+xP", "Q", n, lambda: r + p.shift(1), lambda: q)
        out.equal("R_gamma", "R", n, lambda: assemble_from_gamma("R", n), lambda: r)
        out.equal("R_diff", "R", n, lambda: r_poly_diff(n), lambda: r)
        out.equal("P_symmetric", "P", n, lambda: poly_reverse(p, 2 * n - 2), lambda: p)
        out.equal("R_symmetric", "R", n, lambda: poly_reverse(r, 2 * n - 1), lambda: r)
        for family in FAMILIES:
            f = rows[family].poly(n)
            center = family_center(family, n)

            def decomposition() -> Outcome:
                parts = symmetric_decompose(f, center)
                a, b = family_decomposition_parts(family, n)
                if (parts.a, parts.b) != (a, b):
                    return False, f"got ({parts.a}, {parts.b}), expected ({a}, {b})"
                return parts.a + parts.b.shift(1) == f

            out.check("decomposition", family, n, decomposition)
            out.check(
                "bi_gamma", family, n, lambda: positivity_report(f, center).bi_gamma_positive
            )
    return out.checks


def suite_unimodal(max_n: int) -> List[CheckResult]:
    out = _Collector("unimodal")
    rows = _family_rows(max_n)
    for family in FAMILIES:
        for n in range(1, max_n + 1):
            f = rows[family].poly(n)
            # both checks read one report; a raise fails each of them
            report = lru_cache(maxsize=1)(partial(positivity_report, f, family_center(family, n)))

            def modes() -> Outcome:
                facts = report()
                d = f.degree
                middle = {d // 2, (d + 1) // 2}
                ok = facts.unimodal and set(facts.mode_set) <= middle
                return ok, f"mode_set={facts.mode_set} observed_mode={facts.observed_mode}"

            def implications() -> Outcome:
                facts = report()
                if facts.bi_gamma_positive and not facts.alternatingly_increasing:
                    return False, "bi-gamma without alternating increase"
                if facts.alternatingly_increasing and not facts.unimodal:
                    return False, "alternating increase without unimodality"
                return True, ""

            out.check("modes_in_middle", family, n, modes)
            out.check("implications", family, n, implications)
    return out.checks


def suite_roots(max_n: int) -> List[CheckResult]:
    out = _Collector("roots")
    rows = _family_rows(max_n)
    for family in FAMILIES:
        for n in range(1, max_n + 1):
            f = rows[family].poly(n)

            def certified() -> Outcome:
                cert = real_root_certificate(f)
                return cert.is_real_rooted, f"{cert.isolation.root_count}/{cert.degree} real roots"

            out.check("real_rooted", family, n, certified)
    return out.checks


def suite_interlace(max_n: int) -> List[CheckResult]:
    out = _Collector("interlace")
    rows = _family_rows(max_n + 1)
    for n in range(1, max_n + 1):
        P, Q, P1 = rows["P"].poly(n), rows["Q"].poly(n), rows["P"].poly(n + 1)
        S, T, S1 = rows["S"].poly(n), rows["T"].poly(n), rows["S"].poly(n + 1)
        out.check("P<Q", "P", n, lambda: strictly_interlaces(P, Q))
        out.check("Q<P+1", "Q", n, lambda: strictly_interlaces(Q, P1))
        out.check("S<T", "S", n, lambda: strictly_interlaces(S, T))
        out.check("T<S+1", "T", n, lambda: strictly_interlaces(T, S1))
    return out.checks


def macmahon_vectors(total: int = config.MACMAHON_TOTAL) -> List[Tuple[int, ...]]:
    """All compositions with positive parts summing to at most ``total``, shortest sums first."""
    vectors: List[Tuple[int, ...]] = []
    frontier: List[Tuple[int, ...]] = [()]
    while frontier:
        grown = [v + (part,) for v in frontier for part in range(1, total - sum(v) + 1)]
        vectors.extend(grown)
        frontier = grown
    return sorted(vectors, key=lambda v: (sum(v), v))


def suite_genfun(max_n: int) -> List[CheckResult]:
    out = _Collector("genfun")
    rows = _family_rows(max_n)
    for n in range(1, max_n + 1):
        out.check("p_identity", "P", n, lambda: check_p_identity(n, config.SERIES_ORDER))
        out.check("q_identity", "Q", n, lambda: check_q_identity(n, config.SERIES_ORDER))
        if 2 * n + 1 <= config.MULTISET_CAP:
            out.equal("multiset_2^n", "P", n, lambda: multiset_descent_poly((2,) * n),
                      lambda: rows["P"].poly(n))
            out.equal("multiset_2^n_1", "Q", n, lambda: multiset_descent_poly((2,) * n + (1,)),
                      lambda: rows["Q"].poly(n))
    for vector in macmahon_vectors(min(2 * max_n + 1, config.MACMAHON_TOTAL)):
        label = ",".join(map(str, vector))
        out.check(f"macmahon({label})", "W", sum(vector),
                  lambda: check_macmahon(vector, config.SERIES_ORDER))
    return out.checks


def _reversal_des_r(n: int) -> UniPoly:
    counts = [0] * (2 * n + 2)
    for word in gen_family("Dpm", n):
        counts[word_stats(reversal_negation(word)).des_r] += 1
    return UniPoly.of(*counts)


def suite_corollary(max_n: int) -> List[CheckResult]:
    out = _Collector("corollary")
    rows = _family_rows(max_n)
    for n in range(1, max_n + 1):
        S, T = rows["S"].poly(n), rows["T"].poly(n)
        if n <= config.SPLIT_DEPTH["Cpm"]:
            out.equal("last_entry_split", "S", n, lambda: last_entry_split("Cpm", n),
                      lambda: family_decomposition_parts("S", n))
            out.equal("des_star", "S", n, lambda: distribution("Cpm", n, "des_star"),
                      lambda: poly_reverse(S, 2 * n))
            out.equal("asc_star_plat", "S", n,
                      lambda: distribution("Cpm", n, "asc_star_plat_minus_one"), lambda: S)
        if n <= config.SPLIT_DEPTH["Dpm"]:
            out.equal("last_entry_split", "T", n, lambda: last_entry_split("Dpm", n),
                      lambda: family_decomposition_parts("T", n))
            out.equal("des_star", "T", n, lambda: distribution("Dpm", n, "des_star"),
                      lambda: poly_reverse(T, 2 * n + 1))
            out.equal("asc_star_plat", "T", n,
                      lambda: distribution("Dpm", n, "asc_star_plat_minus_one"), lambda: T)
        if n <= config.SPLIT_DEPTH["D"]:
            out.equal("first_entry_split", "Q", n, lambda: first_entry_split(n),
                      lambda: (rows["R"].poly(n), rows["P"].poly(n).shift(1)))
        if n <= config.SPLIT_DEPTH["C"]:
            out.equal("des_asc_symmetry", "P", n, lambda: distribution("C", n, "des"),
                      lambda: distribution("C", n, "asc"))
        if n <= config.REVERSAL_DEPTH:
            out.equal("reversal_des_r", "T", n, lambda: _reversal_des_r(n), lambda: T)
    return out.checks


_SHIFT = FormalPoly.from_terms((1, {"w": 1, "x": -1, "y": -1}))


def suite_grammarlemmas(max_n: int) -> List[CheckResult]:
    out = _Collector("grammarlemmas")
    g = {name: builtin_grammar(name) for name in ("G1", "G2", "G3", "G4", "G5", "G6")}
    for n in range(1, max_n + 1):
        if n <= config.JOINT_DEPTH:
            out.equal("joint_Cpm", "S", n, lambda: distribution("Cpm", n, "joint"),
                      lambda: iterate_pair(g["G1"], g["G2"], n))
            out.equal("joint_Dpm", "T", n, lambda: distribution("Dpm", n, "joint") * _SHIFT,
                      lambda: iterate_pair(g["G1"], g["G2"], n, "a"))
        if n <= config.REDUCTION_DEPTH:
            for trailing, family in ((None, "S"), ("a", "T")):
                joint = iterate_pair(g["G1"], g["G2"], n, trailing)
                out.equal(f"q=0 trailing={trailing or 'none'}", family, n,
                          lambda: specialize(joint, {"q": 0}),
                          lambda: iterate_pair(g["G3"], g["G4"], n, trailing))
                out.equal(f"q=1 trailing={trailing or 'none'}", family, n,
                          lambda: specialize(joint, {"q": 1}),
                          lambda: iterate_pair(g["G5"], g["G6"], n, trailing))
    for n in range(1, config.STIRLING_DEPTH + 1):
        out.equal("stirling", "stirling", n, lambda: stirling_row(n).int_coeffs(),
                  lambda: [int(stirling(n, k)) for k in range(n + 1)])
    return out.checks


_SUITES = {
    "cross": suite_cross,
    "gamma": suite_gamma,
    "unimodal": suite_unimodal,
    "roots": suite_roots,
    "interlace": suite_interlace,
    "genfun": suite_genfun,
    "corollary": suite_corollary,
    "grammarlemmas": suite_grammarlemmas,
}


def verify_suite(name: str, max_n: Optional[int] = None) -> SuiteReport:
    """Run one suite; failures are data in the report.

    ``max_n`` defaults to the suite's entry in ``config.DEFAULT_SUITE_DEPTH``.
    """
    if name not in _SUITES:
        raise ValidationException(
            f"Unknown suite {name!r}. Available: {', '.join(config.AVAILABLE_SUITES)}"
        )
    if max_n is None:
        max_n = config.DEFAULT_SUITE_DEPTH[name]
    if not isinstance(max_n, int) or max_n < 1:
        raise ValidationException(f"max_n must be a positive integer, got {max_n!r}")
    logger.info(f"running suite {name} up to n={max_n}")
    start = time.perf_counter()
    checks = _SUITES[name](max_n)
    report = SuiteReport(name, max_n, checks, time.perf_counter() - start).sorted()
    counts = report.counts()
    logger.info(
        f"suite {name}: {counts['passed']}/{counts['total']} passed in {report.elapsed:.2f}s"
    )
    return report


def _run(job: Tuple[str, Optional[int]]) -> SuiteReport:
    return verify_suite(*job)


def verify_suites(
    jobs: Iterable[Tuple[str, Optional[int]]], workers: int = 1
) -> List[SuiteReport]:
    """Run several suites, in a process pool when ``workers > 1``; order follows ``jobs``."""
    pending = list(jobs)
    if workers > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run, pending))
    return [_run(job) for job in pending]


def suite_names(name: str) -> Sequence[str]:
    """Expand ``all`` into every suite name."""
    return config.AVAILABLE_SUITES if name == "all" else (name,)
