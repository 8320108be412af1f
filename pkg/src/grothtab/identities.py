"""Registry of named cross-checks between independent computation routes.

Every check compares a left and a right route that share nothing beyond the
scalar/polynomial arithmetic layer: closed-form counts against brute-force
enumeration, determinant quotients against tableau sums, coupled
hypergeometric sums against polynomial evaluations.  A check never raises
out of run_check; failures are reported with the first (minimal, in grid
order) witnesses.

Checks run over a Grid of instances ordered by shape size, then shape
(lexicographically), then number of variables, so the first reported
witness of a failure is the smallest offender.  run_all executes the whole
registry, in parallel processes when more than one worker is available;
the GROTH_THREADS environment variable caps the worker count.
"""

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from time import perf_counter

from .arith import binomial
from .grothendieck import (
    BETA,
    count_svt_formula,
    grothendieck_bialternant,
    grothendieck_tableau_sum,
    principal_specialization_q,
    refined_bialternant,
)
from .hypergeom import HolmanInstance, gauss_2f1_terminating, holman_series
from .partitions import Partition, count_sst_hook, count_sst_product, partitions_of
from .tableaux import enumerate_sst, enumerate_svt

DEFAULT_BETAS = (Fraction(1), Fraction(-1), Fraction(2), Fraction(1, 3), Fraction(-3, 5))
DEFAULT_QS = (Fraction(2), Fraction(3, 2), Fraction(5, 7))

MAX_WITNESSES = 5


class UnknownCheckError(LookupError):
    """Requested check id is not registered."""


@dataclass(frozen=True)
class Grid:
    """Parameter grid a check runs over.

    Shapes are all partitions of size 1..max_size paired with every
    variable count 1..max_vars that can hold them; scalar points are fixed
    generic rationals chosen to keep every denominator nonzero.
    """

    max_size: int = 6
    max_vars: int = 4
    betas: tuple = DEFAULT_BETAS
    qs: tuple = DEFAULT_QS
    seed: int = 2718

    def shapes(self):
        """(shape, nvars) pairs, ordered by size, shape, nvars; pairs whose
        shape has more rows than variables are skipped (no fillings)."""
        for size in range(1, self.max_size + 1):
            for shape in partitions_of(size):
                for nvars in range(1, self.max_vars + 1):
                    if len(shape) <= nvars:
                        yield shape, nvars

    def random_betas(self, shape: Partition, nvars: int) -> tuple[Fraction, ...]:
        """Deterministic pseudo-random refinement parameters per instance."""
        h = self.seed
        for v in (shape.size, *shape.parts, nvars):
            h = h * 1000003 + v + 11
        rng = random.Random(h)
        return tuple(Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                     for _ in range(nvars - 1))


@dataclass
class Witness:
    params: dict[str, str]
    left: str
    right: str

    def to_json(self) -> dict:
        return {"params": dict(self.params), "left": self.left, "right": self.right}


@dataclass
class CheckReport:
    id: str
    summary: str
    instances: int
    passed: int
    failed: int
    witnesses: list[Witness] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "summary": self.summary,
            "instances": self.instances,
            "passed": self.passed,
            "failed": self.failed,
            "seconds": round(self.seconds, 3),
            "witnesses": [w.to_json() for w in self.witnesses],
        }


@dataclass
class SuiteReport:
    max_size: int
    max_vars: int
    checks: list[CheckReport]

    @property
    def passed(self) -> int:
        return sum(c.passed for c in self.checks)

    @property
    def failed(self) -> int:
        return sum(c.failed for c in self.checks)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "max_size": self.max_size,
            "max_vars": self.max_vars,
            "passed": self.passed,
            "failed": self.failed,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }


@dataclass(frozen=True)
class Check:
    id: str
    summary: str
    left: str
    right: str
    instances: callable


CHECKS: dict[str, Check] = {}


def _register(check_id: str, summary: str, left: str, right: str):
    def wrap(fn):
        CHECKS[check_id] = Check(check_id, summary, left, right, fn)
        return fn
    return wrap


def check_ids() -> list[str]:
    return list(CHECKS)


def _fmt(value) -> str:
    return str(value)


def run_check(check_id: str, grid: Grid | None = None) -> CheckReport:
    """Run one registered check over the grid and report per-instance
    pass/fail counts with the first few failing witnesses."""
    if check_id not in CHECKS:
        raise UnknownCheckError(f"unknown check id {check_id!r}; "
                                f"known: {', '.join(check_ids())}")
    check = CHECKS[check_id]
    grid = grid or Grid()
    report = CheckReport(check.id, check.summary, 0, 0, 0)
    start = perf_counter()
    try:
        for params, left, right in check.instances(grid):
            report.instances += 1
            if left == right:
                report.passed += 1
            else:
                report.failed += 1
                if len(report.witnesses) < MAX_WITNESSES:
                    report.witnesses.append(Witness(
                        {k: _fmt(v) for k, v in params.items()},
                        _fmt(left), _fmt(right)))
    except Exception as exc:  # a check must report, never crash the suite
        report.instances += 1
        report.failed += 1
        report.witnesses.append(Witness({"error": type(exc).__name__}, str(exc), ""))
    report.seconds = perf_counter() - start
    return report


def _run_one(job) -> CheckReport:
    check_id, grid = job
    return run_check(check_id, grid)


def resolve_workers(explicit: int | None = None) -> int:
    """Worker count: explicit request or cpu count, capped by GROTH_THREADS."""
    workers = explicit if explicit is not None else (os.cpu_count() or 1)
    cap = os.environ.get("GROTH_THREADS")
    if cap:
        try:
            workers = min(workers, max(1, int(cap)))
        except ValueError:
            pass
    return max(1, workers)


def run_all(grid: Grid | None = None, workers: int | None = None) -> SuiteReport:
    """Run every registered check; reports are merged in registry order."""
    grid = grid or Grid()
    ids = check_ids()
    count = resolve_workers(workers)
    if count > 1 and len(ids) > 1:
        with ProcessPoolExecutor(max_workers=min(count, len(ids))) as pool:
            by_id = {r.id: r for r in pool.map(_run_one, [(i, grid) for i in ids])}
        reports = [by_id[i] for i in ids]
    else:
        reports = [run_check(i, grid) for i in ids]
    return SuiteReport(grid.max_size, grid.max_vars, reports)


# ----------------------------------------------------------------------
# the registered checks
# ----------------------------------------------------------------------

def _at_ones(shape, nvars):
    """Tableau-sum polynomial with every x set to 1 (a polynomial in b)."""
    ones = {f"x{i}": Fraction(1) for i in range(1, nvars + 1)}
    return grothendieck_tableau_sum(shape, nvars).substitute(ones)


@_register("hook-counts",
           "closed-form semistandard counts match direct enumeration",
           "pairwise-difference and content/hook products",
           "enumeration of semistandard tableaux")
def _hook_counts(grid):
    for shape, n in grid.shapes():
        direct = sum(1 for _ in enumerate_sst(shape, n))
        yield {"shape": shape, "n": n, "form": "pairwise"}, count_sst_product(shape, n), direct
        yield {"shape": shape, "n": n, "form": "hook"}, count_sst_hook(shape, n), direct


@_register("gg-eq-w",
           "set-valued tableau sum equals the determinant quotient",
           "tableau generating sum", "bi-alternant / Vandermonde")
def _tableau_sum_vs_bialternant(grid):
    for shape, n in grid.shapes():
        yield ({"shape": shape, "n": n},
               grothendieck_tableau_sum(shape, n),
               grothendieck_bialternant(shape, n))


@_register("prop-3.1",
           "single-row all-ones values via the Gauss series",
           "C(n+k-1,k) * 2F1(k,1-n;k+1;-beta)", "tableau sum at x = 1")
def _single_row_values(grid):
    for k in range(1, grid.max_size + 1):
        shape = Partition([k])
        for n in range(1, grid.max_vars + 1):
            ones = _at_ones(shape, n)
            for beta in grid.betas:
                left = binomial(n + k - 1, k) * gauss_2f1_terminating(k, 1 - n, k + 1, -beta)
                right = ones.substitute({BETA: beta}).as_fraction()
                yield {"shape": shape, "n": n, "beta": beta}, left, right


@_register("prop-3.2",
           "single-column all-ones values via the Gauss series",
           "C(n,k) * 2F1(k,k-n;k+1;-beta)", "tableau sum at x = 1")
def _single_column_values(grid):
    for k in range(1, grid.max_size + 1):
        shape = Partition([1] * k)
        for n in range(k, grid.max_vars + 1):
            ones = _at_ones(shape, n)
            for beta in grid.betas:
                left = binomial(n, k) * gauss_2f1_terminating(k, k - n, k + 1, -beta)
                right = ones.substitute({BETA: beta}).as_fraction()
                yield {"shape": shape, "n": n, "beta": beta}, left, right


@_register("cor-3.3",
           "single-row set-valued counts via the Gauss series",
           "C(n+k-1,k) * 2F1(k,1-n;k+1;-1)", "enumeration")
def _single_row_counts(grid):
    for k in range(1, grid.max_size + 1):
        shape = Partition([k])
        for n in range(1, grid.max_vars + 1):
            left = binomial(n + k - 1, k) * gauss_2f1_terminating(k, 1 - n, k + 1, -1)
            right = sum(1 for _ in enumerate_svt(shape, n))
            yield {"shape": shape, "n": n}, left, right


@_register("cor-3.4",
           "single-column set-valued counts via the Gauss series",
           "C(n,k) * 2F1(k,k-n;k+1;-1)", "enumeration")
def _single_column_counts(grid):
    for k in range(1, grid.max_size + 1):
        shape = Partition([1] * k)
        for n in range(k, grid.max_vars + 1):
            left = binomial(n, k) * gauss_2f1_terminating(k, k - n, k + 1, -1)
            right = sum(1 for _ in enumerate_svt(shape, n))
            yield {"shape": shape, "n": n}, left, right


@_register("thm-3.5",
           "shifted-exponent expansion equals the refined quotient at the "
           "geometric point",
           "nested k-sum", "refined bi-alternant at x = (1,q,..,q^(n-1))")
def _geometric_point_expansion(grid):
    for shape, n in grid.shapes():
        betas = grid.random_betas(shape, n)
        poly = refined_bialternant(shape, n, betas)
        for q in grid.qs:
            point = {f"x{i + 1}": q ** i for i in range(n)}
            left = principal_specialization_q(shape, n, betas, q)
            right = poly.substitute(point).as_fraction()
            yield ({"shape": shape, "n": n, "q": q,
                    "betas": ",".join(str(b) for b in betas)}, left, right)


@_register("cor-3.8",
           "binomial-shift count formula matches enumeration",
           "nested binomial-shift sum", "enumeration of set-valued tableaux")
def _count_formula(grid):
    for shape, n in grid.shapes():
        left = count_svt_formula(shape, n)
        right = sum(1 for _ in enumerate_svt(shape, n))
        yield {"shape": shape, "n": n}, left, right


@_register("thm-3.9",
           "all-ones value factors through the coupled series",
           "|SST| * coupled series at z = -beta", "tableau sum at x = 1")
def _all_ones_factorization(grid):
    for shape, n in grid.shapes():
        ones = _at_ones(shape, n)
        sst = count_sst_product(shape, n)
        for beta in grid.betas:
            inst = HolmanInstance.from_shape(shape, n, -beta)
            left = sst * holman_series(inst)
            right = ones.substitute({BETA: beta}).as_fraction()
            yield {"shape": shape, "n": n, "beta": beta}, left, right


@_register("cor-3.11",
           "set-valued count factors through the coupled series",
           "|SST| * coupled series at z = -1", "enumeration")
def _count_factorization(grid):
    for shape, n in grid.shapes():
        left = count_sst_product(shape, n) * holman_series(
            HolmanInstance.from_shape(shape, n, -1))
        right = sum(1 for _ in enumerate_svt(shape, n))
        yield {"shape": shape, "n": n}, left, right


@_register("prop-AA",
           "value at x = (beta,..,beta) with parameter -1/beta is beta^|shape|",
           "tableau sum at the tilted point", "beta^|shape|")
def _tilted_point_value(grid):
    for shape, n in grid.shapes():
        poly = grothendieck_tableau_sum(shape, n)
        for beta in grid.betas:
            point = {f"x{i}": beta for i in range(1, n + 1)}
            point[BETA] = -1 / beta
            left = poly.substitute(point).as_fraction()
            right = beta ** shape.size
            yield {"shape": shape, "n": n, "beta": beta}, left, right


@_register("thm-3.13",
           "coupled series at z = 1 is the reciprocal semistandard count",
           "coupled series at z = 1", "1 / |SST|")
def _reciprocal_count(grid):
    for shape, n in grid.shapes():
        left = holman_series(HolmanInstance.from_shape(shape, n, 1))
        right = Fraction(1, count_sst_product(shape, n))
        yield {"shape": shape, "n": n}, left, right


@_register("oddness",
           "every non-empty set-valued count is odd",
           "enumerated count mod 2", "1")
def _odd_counts(grid):
    for shape, n in grid.shapes():
        count = sum(1 for _ in enumerate_svt(shape, n))
        yield {"shape": shape, "n": n, "count": count}, count % 2, 1
