"""
Report suites that sit beside the identity catalog: the sequence telescopes,
the difference identities, the lattice partitions and the cross-checks. Each
suite expands to a flat, ordered list of (label, check) jobs so `verify --all`
can print them the same way it prints catalog instances.
"""

from typing import Callable, Dict, Iterable, List, Optional, Tuple

from app.core.errors import InvalidParams
from app.core.logger import logger
from app.verify.crosscheck import (
    DIFFERENCE_TARGETS,
    difference_sum_vs_identity,
    eq30_three_forms,
    gauss_agreement,
    lattice_vs_symbolic,
    second_proof_chain,
)
from app.verify.engine import BUILD_ERRORS
from app.verify.lattice import (
    even_region_identity,
    odd_region_identity,
    odd_region_tiling,
    verify_hook_partition,
    verify_region_partition,
)
from app.verify.report import VerificationReport, make_error
from app.verify.telescope import (
    BUILTIN_SEQUENCES,
    DifferenceKind,
    backward_telescope,
    difference_identity,
    forward_telescope,
    general_difference,
    partial_sum_consistency,
    random_sequences,
    verify_telescoped_difference,
)

Job = Tuple[str, Callable[[], VerificationReport]]


def _telescope_jobs() -> List[Job]:
    jobs: List[Job] = []
    for name, seq in BUILTIN_SEQUENCES.items():
        for n in range(1, 31):
            jobs.append((f"forward_telescope[{name}] n={n}", lambda s=seq, n=n: forward_telescope(s, n)))
            jobs.append((f"backward_telescope[{name}] n={n}", lambda s=seq, n=n: backward_telescope(s, n)))
    for seq in random_sequences():
        for n in (1, 7, 30):
            jobs.append((f"forward_telescope[{seq.name}] n={n}", lambda s=seq, n=n: forward_telescope(s, n)))
            jobs.append((f"backward_telescope[{seq.name}] n={n}", lambda s=seq, n=n: backward_telescope(s, n)))
        jobs.append((f"partial_sums[{seq.name}]", lambda s=seq: partial_sum_consistency(s, 30)))
    return jobs


def _difference_jobs() -> List[Job]:
    jobs: List[Job] = []
    for kind in DifferenceKind:
        jobs += [(f"difference[{kind.value}] n={n}", lambda k=kind, n=n: difference_identity(k, n))
                 for n in range(1, 41)]
        jobs += [(f"telescoped[{kind.value}] n={n}", lambda k=kind, n=n: verify_telescoped_difference(k, n))
                 for n in range(1, 13)]
    for a in (0, 1, 2):
        jobs += [(f"general_difference n={n} a={a}", lambda n=n, a=a: general_difference(n, a))
                 for n in range(1, 21)]
    return jobs


def _lattice_jobs() -> List[Job]:
    jobs: List[Job] = [(f"hook_partition n={n}", lambda n=n: verify_hook_partition(n)) for n in range(1, 13)]
    jobs += [(f"region_partition n={n}", lambda n=n: verify_region_partition(n)) for n in range(1, 9)]
    jobs += [(f"odd_region j={j}", lambda j=j: odd_region_identity(j)) for j in range(1, 16, 2)]
    jobs += [(f"even_region ell={ell}", lambda ell=ell: even_region_identity(ell)) for ell in range(1, 9)]
    jobs += [(f"odd_tiling j={j} n={n}", lambda j=j, n=n: odd_region_tiling(j, n))
             for n in range(1, 8) for j in range(1, n + 1, 2)]
    return jobs


def _crosscheck_jobs() -> List[Job]:
    jobs: List[Job] = [(f"lattice_vs_symbolic n={n}", lambda n=n: lattice_vs_symbolic(n)) for n in range(1, 9)]
    jobs += [(f"second_proof n={n}", lambda n=n: second_proof_chain(n)) for n in range(1, 11)]
    jobs += [(f"eq30_forms n={n}", lambda n=n: eq30_three_forms(n)) for n in range(0, 7)]
    jobs += [(f"difference_sum[{kind.value}] n={n}", lambda k=kind, n=n: difference_sum_vs_identity(k, n))
             for kind in DIFFERENCE_TARGETS for n in range(1, 21)]
    jobs += [(f"gauss_agreement n={n} k={k}", lambda n=n, k=k: gauss_agreement(n, k))
             for n in range(0, 13) for k in range(-1, n + 2)]
    return jobs


SUITES: Dict[str, Callable[[], List[Job]]] = {
    "telescopes": _telescope_jobs,
    "differences": _difference_jobs,
    "lattice": _lattice_jobs,
    "crosschecks": _crosscheck_jobs,
}


def run_suite(name: str) -> List[VerificationReport]:
    try:
        jobs = SUITES[name]()
    except KeyError:
        raise InvalidParams(f"unknown suite {name!r}; expected one of {sorted(SUITES)}") from None
    logger.info("[suite] %s: %d check(s)", name, len(jobs))
    reports = []
    for label, job in jobs:
        try:
            reports.append(job())
        except BUILD_ERRORS as e:
            logger.warning("[suite] %s: %s", label, e)
            reports.append(make_error(f"{name}:{label}", {}, str(e)))
    failed = sum(1 for r in reports if not r.passed)
    logger.info("[suite] %s: %d failure(s)", name, failed)
    return reports


def run_suites(names: Optional[Iterable[str]] = None) -> List[VerificationReport]:
    return [r for name in (names or list(SUITES)) for r in run_suite(name)]
