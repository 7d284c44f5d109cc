"""Seeded verification suites.

A suite draws ``instances`` parameter sets from ``random.Random(seed)`` in
the calling process and then checks them, serially or over a process pool.
Results keep instance order whatever the completion order, so a run is fully
determined by ``(suite, seed, instances)``.

Suites are versioned: changing what a suite draws or checks bumps its
version, which is printed with every summary.
"""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Tuple

from blobkl.affine_weyl import evaluate_word
from blobkl.alcove import graded_dim_reports, is_regular, w_of
from blobkl.blob_comb import (
    DEFAULT_CAP,
    BlobParams,
    OneColMultipartition,
    enumerate_std_same_residue,
    tableau_degree,
)
from blobkl.dihedral_blob import (
    blob_vs_soergel,
    catalan,
    degree_zero_cells,
    fast_degree,
    two_col_tableaux,
)
from blobkl.errors import InputError, InvalidParameters
from blobkl.hecke import bott_samelson, bott_samelson_bruteforce

__all__ = ["Outcome", "SuiteResult", "SUITES", "run_suite", "generate_instances"]

logger = logging.getLogger(__name__)

Instance = Dict[str, Any]


@dataclass(frozen=True)
class Outcome:
    index: int
    instance: Instance
    equal: bool
    detail: str = ""
    finding: bool = False


@dataclass
class SuiteResult:
    suite: str
    version: int
    seed: int
    outcomes: List[Outcome] = field(default_factory=list)

    @property
    def equal_count(self) -> int:
        return sum(1 for outcome in self.outcomes if outcome.equal)

    @property
    def findings(self) -> List[Outcome]:
        return [outcome for outcome in self.outcomes if outcome.finding]

    @property
    def failures(self) -> List[Outcome]:
        return [o for o in self.outcomes if not o.equal and not o.finding]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        line = f"{self.equal_count}/{len(self.outcomes)} equal"
        if self.findings:
            line += f", {len(self.findings)} finding(s) at p = 2"
        return line


# ----------------------------------------------------------------------
# Instance generation
# ----------------------------------------------------------------------
BLOB_PRIMES = (2, 3, 5, 7)
BLOB_PAIRS = [(p, k) for k in range(1, 11) for p in BLOB_PRIMES]


def _random_params(rng: random.Random, l: int, e_max: int = 12) -> BlobParams:
    while True:
        e = rng.randint(2 * l, max(2 * l, e_max))
        kappa = tuple(sorted(rng.sample(range(e), l)))
        try:
            return BlobParams(e, l, kappa)
        except InvalidParameters:
            continue


def _walk_to_length(
    rng: random.Random, params: BlobParams, k: int, n_max: int
) -> Optional[OneColMultipartition]:
    """Add boxes along a random ray until a regular ``lambda`` has ``l(w_lambda) = k``.

    One box moves the point by a unit vector, so between two regular points the
    length changes by at most the number of hyperplanes crossed.
    """
    l = params.l
    weights = [rng.random() for _ in range(l)]
    weights[rng.randrange(l)] += 1.0
    heights = [0] * l
    for _ in range(n_max):
        heights[rng.choices(range(l), weights=weights)[0]] += 1
        lam = OneColMultipartition(tuple(heights))
        if is_regular(lam, params) and w_of(lam, params).length() == k:
            return lam
    return None


def _regular_of_length(
    rng: random.Random,
    l: int,
    k: int,
    *,
    e_max: int,
    n_max: Optional[int] = None,
    k_min: int = 0,
) -> Tuple[BlobParams, OneColMultipartition]:
    """Regular ``lambda`` with ``l(w_lambda) = k``.

    Without ``n_max`` the walk may use ``3 (k + 2) e`` boxes. When a fixed
    ``n_max`` makes ``k`` unreachable, ``k`` drops towards ``k_min``.
    """
    while True:
        for _ in range(40):
            params = _random_params(rng, l, e_max)
            bound = n_max if n_max is not None else 3 * (k + 2) * params.e
            lam = _walk_to_length(rng, params, k, bound)
            if lam is not None:
                return params, lam
        logger.debug("no regular lambda of length %d at level %d", k, l)
        k = max(k - 1, k_min)


def _blob_instance(params: BlobParams, lam: OneColMultipartition, **extra: Any) -> Instance:
    data: Instance = {"e": params.e, "l": params.l, "kappa": list(params.kappa)}
    data["lambda"] = list(lam.heights)
    data.update(extra)
    return data


def _unpack(instance: Instance) -> Tuple[BlobParams, OneColMultipartition]:
    params = BlobParams(instance["e"], instance["l"], tuple(instance["kappa"]))
    return params, OneColMultipartition(tuple(instance["lambda"]))


def _gen_graded_dim(rng: random.Random, index: int) -> Instance:
    l = rng.choice((2, 3, 4))
    params, lam = _regular_of_length(rng, l, index % 11, e_max=12, n_max=30)
    return _blob_instance(params, lam)


def _gen_blob_vs_soergel(rng: random.Random, index: int) -> Instance:
    p, k = BLOB_PAIRS[index % len(BLOB_PAIRS)]
    params, lam = _regular_of_length(rng, 2, k, e_max=8, k_min=1)
    return _blob_instance(params, lam, p=p)


def _gen_fast_degree(rng: random.Random, index: int) -> Instance:
    params, lam = _regular_of_length(rng, 2, index % 13, e_max=12, n_max=40)
    return _blob_instance(params, lam)


def _gen_degree_zero(rng: random.Random, index: int) -> Instance:
    params, lam = _regular_of_length(rng, 2, 2 + index % 9, e_max=8, k_min=2)
    return _blob_instance(params, lam)


def _gen_bott_samelson(rng: random.Random, index: int) -> Instance:
    l = rng.choice((2, 3, 4))
    return {"l": l, "word": [rng.randrange(l) for _ in range(index % 11)]}


# ----------------------------------------------------------------------
# Checks
# ----------------------------------------------------------------------
def _check_graded_dim(instance: Instance, cap: int) -> Tuple[bool, str, bool]:
    params, lam = _unpack(instance)
    bad = [r for r in graded_dim_reports(lam, params, cap=cap) if not r.equal]
    if bad:
        first = bad[0]
        return False, f"mu={first.mu}: {first.lhs} != {first.rhs}", False
    return True, "", False


def _check_blob_vs_soergel(instance: Instance, cap: int) -> Tuple[bool, str, bool]:
    params, lam = _unpack(instance)
    p = instance["p"]
    bad = [v for v in blob_vs_soergel(lam, params, p, cap=cap) if not v.equal]
    if bad:
        first = bad[0]
        detail = f"mu={first.mu} w={first.w}: blob {first.blob} != p-KL {first.soergel}"
        return False, detail, p == 2
    return True, "", False


def _check_fast_degree(instance: Instance, cap: int) -> Tuple[bool, str, bool]:
    params, lam = _unpack(instance)
    for t in enumerate_std_same_residue(lam, params, cap=cap):
        fast, slow = fast_degree(t, lam, params), tableau_degree(t, params)
        if fast != slow:
            return False, f"t={t}: fast {fast} != {slow}", False
    return True, "", False


def _check_degree_zero(instance: Instance, cap: int) -> Tuple[bool, str, bool]:
    params, lam = _unpack(instance)
    cells = degree_zero_cells(lam, params, cap=cap)
    k = w_of(lam, params).length()
    for cell in cells.values():
        if cell.count != len(two_col_tableaux(cell.two_col)):
            return False, f"mu={cell.mu}: {cell.count} tableaux for {cell.two_col}", False
    total = sum(cell.count**2 for cell in cells.values())
    if total != catalan(k - 1):
        return False, f"sum of squares {total} != C_{k - 1} = {catalan(k - 1)}", False
    return True, "", False


def _check_bott_samelson(instance: Instance, cap: int) -> Tuple[bool, str, bool]:
    word, l = tuple(instance["word"]), instance["l"]
    fast, slow = bott_samelson(word, l), bott_samelson_bruteforce(word, l)
    if fast != slow:
        end = evaluate_word(word, l)
        return False, f"word {list(word)} ends at {end}: {fast!r} != {slow!r}", False
    return True, "", False


@dataclass(frozen=True)
class Suite:
    name: str
    version: int
    description: str
    generate: Callable[[random.Random, int], Instance]
    check: Callable[[Instance, int], Tuple[bool, str, bool]]


SUITES: Dict[str, Suite] = {
    suite.name: suite
    for suite in (
        Suite(
            "theorem-graded-dim",
            2,
            "graded cell dimensions against Bott-Samelson coefficients, l in {2,3,4}",
            _gen_graded_dim,
            _check_graded_dim,
        ),
        Suite(
            "blob-vs-soergel",
            2,
            "level-2 graded decomposition numbers against p-KL polynomials",
            _gen_blob_vs_soergel,
            _check_blob_vs_soergel,
        ),
        Suite(
            "fast-degree",
            2,
            "wall-to-wall degree formula against the tableau degree",
            _gen_fast_degree,
            _check_fast_degree,
        ),
        Suite(
            "bott-samelson-oracle",
            2,
            "Bott-Samelson products against the 01-subsequence sum",
            _gen_bott_samelson,
            _check_bott_samelson,
        ),
        Suite(
            "degree-zero-catalan",
            2,
            "degree-zero cells against two-column tableaux and Catalan numbers",
            _gen_degree_zero,
            _check_degree_zero,
        ),
    )
}


# ----------------------------------------------------------------------
# Runner
# ----------------------------------------------------------------------
def _suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        known = ", ".join(SUITES)
        raise InputError(f"--suite {name!r} is unknown; choose one of {known}") from None


def generate_instances(name: str, *, seed: int, instances: int) -> List[Instance]:
    suite = _suite(name)
    rng = random.Random(seed)
    return [suite.generate(rng, index) for index in range(instances)]


def _run_one(job: Tuple[str, int, Instance, int]) -> Outcome:
    name, index, instance, cap = job
    equal, detail, finding = SUITES[name].check(instance, cap)
    return Outcome(index=index, instance=instance, equal=equal, detail=detail, finding=finding)


def run_suite(
    name: str,
    *,
    seed: int = 0,
    instances: int = 200,
    workers: int = 1,
    cap: int = DEFAULT_CAP,
) -> SuiteResult:
    suite = _suite(name)
    jobs = [
        (name, index, instance, cap)
        for index, instance in enumerate(generate_instances(name, seed=seed, instances=instances))
    ]
    result = SuiteResult(suite=name, version=suite.version, seed=seed)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            result.outcomes = list(executor.map(_run_one, jobs))
    else:
        result.outcomes = [_run_one(job) for job in jobs]
    for outcome in result.outcomes:
        if outcome.finding:
            logger.warning("%s #%d finding: %s", name, outcome.index, outcome.detail)
        elif not outcome.equal:
            logger.error("%s #%d mismatch: %s", name, outcome.index, outcome.detail)
    logger.info("%s v%d seed=%d: %s", name, suite.version, seed, result.summary())
    return result
