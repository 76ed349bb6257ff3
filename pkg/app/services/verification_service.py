"""
Exhaustive verification of the regularisation / Mullineux results.

Every check walks a deterministic list of instances (partitions, pairs of
partitions, or a partition with a column length), keeps those satisfying
the check's hypothesis, and records a counterexample whenever the
conclusion fails or an operator raises. Instances are split into
contiguous index ranges for the worker pool and merged back in order, so
reports do not depend on the number of workers.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from app.partitions import (
    HookClass,
    Partition,
    S_operator,
    add_column,
    conjugate,
    e_rim,
    e_weight,
    enumerate_partitions,
    format_partition,
    hook_profile,
    is_L_partition,
    is_e_regular,
    is_e_restricted,
    ladder_counts,
    mullineux,
    mullineux_characterization_check,
    num_parts,
    part_at,
    partitions_up_to,
    regularise,
    remove_first_column,
    remove_first_row,
    s_value,
    size,
    strip_J,
    strip_truncated_rim,
    t_value,
    z_conj_value,
    z_value,
)
from app.schemas.report import CensusRow, Counterexample, VerificationReport

logger = logging.getLogger(__name__)

DEFAULT_MAX_N = 12
DEFAULT_E_SET = (2, 3, 4, 5, 6)
DEFAULT_WORKERS = 1

# pairs for cggc and columns for simplereg grow quickly with n
PAIR_SIZE_CAP = 10
SIMPLEREG_SIZE_CAP = 10
SIMPLEREG_EXTRA_COLUMNS = 4

SUITES = ("main", "boxthm", "lemmas", "identities", "census", "all")

fmt = format_partition
Instance = Tuple


@dataclass(frozen=True)
class Check:
    """
    One verifiable statement.

    `conclusion` returns None when the statement holds for an instance and a
    description of the failure otherwise.
    """
    check_id: str
    conclusion: Callable[..., Optional[str]]
    hypothesis: Optional[Callable[..., bool]] = None
    instances: Optional[Callable[[int, int], List[Instance]]] = None
    min_e: int = 2
    only_e: Optional[int] = None
    size_cap: Optional[int] = None

    def applies_to(self, e: int) -> bool:
        if self.only_e is not None:
            return e == self.only_e
        return e >= self.min_e

    def size_bound(self, n_max: int) -> int:
        return min(n_max, self.size_cap) if self.size_cap is not None else n_max


# ------------------------
# Instance generators
# ------------------------

def single_partitions(n_max: int, e: int) -> List[Instance]:
    return [(la,) for la in partitions_up_to(n_max)]


def equal_length_pairs(n_max: int, e: int) -> List[Instance]:
    pairs = []
    for n in range(n_max + 1):
        group = list(enumerate_partitions(n))
        for la in group:
            for mu in group:
                if num_parts(la) == num_parts(mu):
                    pairs.append((la, mu))
    return pairs


def partitions_with_columns(n_max: int, e: int) -> List[Instance]:
    instances = []
    for zeta in partitions_up_to(n_max):
        start = num_parts(zeta) + e - 1
        for x in range(start, start + SIMPLEREG_EXTRA_COLUMNS + 1):
            instances.append((zeta, x))
    return instances


# ------------------------
# MGλ = GTλ and the Mλ = GTλ variant
# ------------------------

def _theorem_sides(la: Partition, e: int) -> Dict[str, Partition]:
    g = regularise(la, e)
    t = conjugate(la)
    return {"G": g, "T": t, "MG": mullineux(g, e), "GT": regularise(t, e)}


def _hook_table(la: Partition, e: int) -> str:
    divisible = hook_profile(la, e).divisible
    return "; ".join(record.describe() for record in divisible) or "none"


def main_theorem(la: Partition, e: int) -> Optional[str]:
    sides = _theorem_sides(la, e)
    equal = sides["MG"] == sides["GT"]
    l_partition = is_L_partition(la, e)
    if equal == l_partition:
        return None
    return (
        f"MGλ={fmt(sides['MG'])} GTλ={fmt(sides['GT'])} (equal={equal}) "
        f"L-partition={l_partition}; Gλ={fmt(sides['G'])} Tλ={fmt(sides['T'])}; "
        f"divisible hooks: {_hook_table(la, e)}"
    )


def boxthm(la: Partition, e: int) -> Optional[str]:
    m = mullineux(la, e)
    gt = regularise(conjugate(la), e)
    all_shallow = z_value(la, e) == 0 and is_L_partition(la, e)
    if (m == gt) == all_shallow:
        return None
    return (
        f"Mλ={fmt(m)} GTλ={fmt(gt)} (equal={m == gt}) all divisible hooks shallow={all_shallow}; "
        f"divisible hooks: {_hook_table(la, e)}"
    )


# ------------------------
# Lemma suite
# ------------------------

def rggr_hypothesis(la: Partition, e: int) -> bool:
    return part_at(regularise(la, e), 1) == part_at(la, 1) if la else True


def rggr(la: Partition, e: int) -> Optional[str]:
    left = remove_first_row(regularise(la, e))
    right = regularise(remove_first_row(la), e)
    if left == right:
        return None
    return f"RGλ={fmt(left)} GRλ={fmt(right)}"


def cggc_hypothesis(la: Partition, mu: Partition, e: int) -> bool:
    return regularise(remove_first_column(la), e) == remove_first_column(mu)


def cggc(la: Partition, mu: Partition, e: int) -> Optional[str]:
    g_la, g_mu = regularise(la, e), regularise(mu, e)
    if g_la == g_mu:
        return None
    return f"μ={fmt(mu)} Gλ={fmt(g_la)} Gμ={fmt(g_mu)}"


def simplereg_hypothesis(zeta: Partition, x: int, e: int) -> bool:
    return is_e_regular(zeta, e) and x >= num_parts(zeta) + e - 1


def simplereg(zeta: Partition, x: int, e: int) -> Optional[str]:
    xi = add_column(zeta, x)
    eta = add_column(remove_first_column(zeta), x - e + 1)
    left = regularise(eta, e)
    right = remove_first_column(regularise(xi, e))
    if left == right:
        return None
    return f"x={x} ξ={fmt(xi)} η={fmt(eta)} Gη={fmt(left)} CGξ={fmt(right)}"


def gse_minus_one(la: Partition, e: int) -> Optional[str]:
    t = conjugate(la)
    short_rows = [
        i for i in range(1, s_value(la, e) + 1)
        if part_at(la, i) - part_at(la, i + 1) < e - 1
    ]
    short_columns = [
        j for j in range(1, t_value(la, e) + 1)
        if part_at(t, j) - part_at(t, j + 1) < e - 1
    ]
    if not short_rows and not short_columns:
        return None
    return f"rows with gap < e-1: {short_rows}; columns with gap < e-1: {short_columns}"


def shallow_steep(la: Partition, e: int) -> Optional[str]:
    s, t = s_value(la, e), t_value(la, e)
    wrong = []
    for record in hook_profile(la, e).divisible:
        row, col = record.node
        if row > s and record.hook_class is not HookClass.STEEP:
            wrong.append(f"{record.describe()} below row s={s}")
        if col > t and record.hook_class is not HookClass.SHALLOW:
            wrong.append(f"{record.describe()} right of column t={t}")
    return "; ".join(wrong) or None


def ssss(la: Partition, e: int) -> Optional[str]:
    image = S_operator(la, e)
    if is_L_partition(image, e):
        return None
    return f"Sλ={fmt(image)} has divisible hooks: {_hook_table(image, e)}"


def srow(la: Partition, e: int) -> Optional[str]:
    left = regularise(conjugate(S_operator(la, e)), e)
    right = remove_first_column(regularise(conjugate(la), e))
    if left == right:
        return None
    return f"GTSλ={fmt(left)} CGTλ={fmt(right)}"


def equiv(la: Partition, e: int) -> Optional[str]:
    g = regularise(la, e)
    left = strip_J(g, e)
    right = regularise(S_operator(la, e), e)
    if left == right:
        return None
    return f"Gλ={fmt(g)} JGλ={fmt(left)} GSλ={fmt(right)}"


def sssreg_hypothesis(la: Partition, e: int) -> bool:
    return is_L_partition(la, e) and s_value(la, e) > 0 and part_at(la, 1) >= num_parts(la)


def sssreg(la: Partition, e: int) -> Optional[str]:
    g = regularise(la, e)
    s_la = S_operator(la, e)
    gs = regularise(s_la, e)
    failures = []
    if part_at(g, 1) != part_at(la, 1):
        failures.append(f"(Gλ)_1={part_at(g, 1)} but λ_1={part_at(la, 1)}")
    if part_at(g, 1) - part_at(g, 2) < e - 1:
        failures.append(f"(Gλ)_1-(Gλ)_2={part_at(g, 1) - part_at(g, 2)} < e-1")
    if part_at(gs, 1) != part_at(s_la, 1):
        failures.append(f"(GSλ)_1={part_at(gs, 1)} but (Sλ)_1={part_at(s_la, 1)}")
    return "; ".join(failures) or None


def zlemma(la: Partition, e: int) -> Optional[str]:
    t = conjugate(la)
    w, w_t = e_weight(la, e), e_weight(t, e)
    z, z_t, shallow = z_value(la, e), z_value(t, e), z_conj_value(la, e)
    failures = []
    if w != w_t:
        failures.append(f"w(λ)={w} but w(Tλ)={w_t}")
    if z_t != shallow:
        failures.append(f"z(Tλ)={z_t} but λ has {shallow} divisible shallow hooks")
    if is_L_partition(la, e) != (w == z + z_t):
        failures.append(f"L-partition={is_L_partition(la, e)} but w={w}, z(λ)+z(Tλ)={z + z_t}")
    return "; ".join(failures) or None


def xuv(la: Partition, e: int) -> Optional[str]:
    mu = mullineux(la, e)
    left = mullineux(strip_J(la, e), e)
    right = remove_first_column(mu)
    if left == right:
        return None
    return f"Mλ={fmt(mu)} MJλ={fmt(left)} CMλ={fmt(right)}"


def characterization_hypothesis(la: Partition, e: int) -> bool:
    return bool(la) and is_e_regular(la, e)


def characterization(la: Partition, e: int) -> Optional[str]:
    if mullineux_characterization_check(la, e):
        return None
    mu = mullineux(la, e)
    return f"Mλ={fmt(mu)} rim lengths {e_rim(la, e).r}/{e_rim(mu, e).r} m={e_rim(la, e).m} l(Mλ)={num_parts(mu)}"


# ------------------------
# Structural identities
# ------------------------

def partition_core(la: Partition, e: int) -> Optional[str]:
    t = conjugate(la)
    failures = []
    if conjugate(t) != la:
        failures.append(f"TTλ={fmt(conjugate(t))}")
    if conjugate(remove_first_row(la)) != remove_first_column(t):
        failures.append("TRλ != CTλ")
    if size(t) != size(la) or num_parts(t) != part_at(la, 1):
        failures.append(f"Tλ={fmt(t)} has the wrong size or length")
    if la and add_column(remove_first_column(la), num_parts(la)) != la:
        failures.append("adding back the first column does not restore λ")
    if is_e_restricted(la, e) != is_e_regular(t, e):
        failures.append("e-restricted does not match e-regularity of Tλ")
    return "; ".join(failures) or None


def regularisation_laws(la: Partition, e: int) -> Optional[str]:
    g = regularise(la, e)
    failures = []
    if size(g) != size(la):
        failures.append("size changed")
    if not is_e_regular(g, e):
        failures.append("Gλ is e-singular")
    if regularise(g, e) != g:
        failures.append("G is not idempotent")
    if ladder_counts(g, e) != ladder_counts(la, e):
        failures.append("ladder counts changed")
    if is_e_regular(la, e) and g != la:
        failures.append("e-regular λ is not fixed")
    for row, part in enumerate(g.parts, start=1):
        for col in range(1, part + 1):
            higher_row = row - (e - 1)
            if higher_row >= 1 and part_at(g, higher_row) < col + 1:
                failures.append(f"node ({row},{col}) could move up its ladder")
    if failures:
        return f"Gλ={fmt(g)}: " + "; ".join(failures)
    return None


def two_regularisation_symmetry(la: Partition, e: int) -> Optional[str]:
    g, gt = regularise(la, e), regularise(conjugate(la), e)
    return None if g == gt else f"Gλ={fmt(g)} GTλ={fmt(gt)}"


def mullineux_involution(la: Partition, e: int) -> Optional[str]:
    mu = mullineux(la, e)
    failures = []
    if mullineux(mu, e) != la:
        failures.append(f"MMλ={fmt(mullineux(mu, e))}")
    if size(mu) != size(la):
        failures.append("size changed")
    if not is_e_regular(mu, e):
        failures.append("Mλ is e-singular")
    if failures:
        return f"Mλ={fmt(mu)}: " + "; ".join(failures)
    return None


def mullineux_identity(la: Partition, e: int) -> Optional[str]:
    mu = mullineux(la, e)
    return None if mu == la else f"Mλ={fmt(mu)}"


def large_e_hypothesis(la: Partition, e: int) -> bool:
    return is_e_regular(la, e) and e > part_at(la, 1) + num_parts(la) - 1


def mullineux_large_e(la: Partition, e: int) -> Optional[str]:
    mu, t = mullineux(la, e), conjugate(la)
    return None if mu == t else f"Mλ={fmt(mu)} Tλ={fmt(t)}"


def truncated_rim(la: Partition, e: int) -> Optional[str]:
    via_column, via_rim = strip_J(la, e), strip_truncated_rim(la, e)
    if via_column == via_rim:
        return None
    return f"add_column(Iλ, l')={fmt(via_column)} but λ minus truncated rim={fmt(via_rim)}"


def hook_laws(la: Partition, e: int) -> Optional[str]:
    profile = hook_profile(la, e)
    failures = [
        f"h != a+l+1 at {record.node}"
        for record in profile.records
        if record.hook_length != record.arm + record.leg + 1
    ]
    l_partition = not profile.bad_hooks
    if l_partition != is_L_partition(conjugate(la), e):
        failures.append("L-partition status differs from Tλ")
    if l_partition and not (
        is_L_partition(remove_first_row(la), e) and is_L_partition(remove_first_column(la), e)
    ):
        failures.append("Rλ or Cλ is not an L-partition")
    if profile.z > 0 and is_e_regular(la, e):
        failures.append("e-regular partition has a divisible steep hook")
    if profile.z + profile.z_conj > profile.w:
        failures.append("z + z_conj exceeds the e-weight")
    return "; ".join(failures) or None


def _regular(la: Partition, e: int) -> bool:
    return is_e_regular(la, e)


CHECKS: Dict[str, Check] = {
    check.check_id: check
    for check in (
        Check("main", main_theorem),
        Check("boxthm", boxthm, hypothesis=_regular),
        Check("rggr", rggr, hypothesis=rggr_hypothesis),
        Check("cggc", cggc, hypothesis=cggc_hypothesis, instances=equal_length_pairs,
              size_cap=PAIR_SIZE_CAP),
        Check("simplereg", simplereg, hypothesis=simplereg_hypothesis,
              instances=partitions_with_columns, size_cap=SIMPLEREG_SIZE_CAP),
        Check("gse-1", gse_minus_one, hypothesis=is_L_partition, min_e=3),
        Check("shallowsteep", shallow_steep, hypothesis=is_L_partition, min_e=3),
        Check("ssss", ssss, hypothesis=is_L_partition, min_e=3),
        Check("srow", srow, hypothesis=is_L_partition, min_e=3),
        Check("equiv", equiv, hypothesis=is_L_partition, min_e=3),
        Check("sssreg", sssreg, hypothesis=sssreg_hypothesis, min_e=3),
        Check("zlemma", zlemma),
        Check("xuv", xuv, hypothesis=_regular),
        Check("characterization", characterization, hypothesis=characterization_hypothesis),
        Check("partition-core", partition_core),
        Check("regularisation", regularisation_laws),
        Check("regularisation-e2-symmetry", two_regularisation_symmetry, only_e=2),
        Check("mullineux-involution", mullineux_involution, hypothesis=_regular),
        Check("mullineux-e2-identity", mullineux_identity, hypothesis=_regular, only_e=2),
        Check("mullineux-large-e", mullineux_large_e, hypothesis=large_e_hypothesis),
        Check("truncated-rim", truncated_rim, hypothesis=_regular),
        Check("hooks", hook_laws),
    )
}

LEMMA_CHECKS = (
    "rggr", "cggc", "simplereg", "gse-1", "shallowsteep", "ssss", "srow",
    "equiv", "sssreg", "zlemma", "xuv", "characterization",
)
IDENTITY_CHECKS = (
    "partition-core", "regularisation", "regularisation-e2-symmetry",
    "mullineux-involution", "mullineux-e2-identity", "mullineux-large-e",
    "truncated-rim", "hooks",
)


# ------------------------
# Harness
# ------------------------

@dataclass
class ChunkResult:
    checked: int
    scanned: int
    counterexamples: List[Tuple[List[int], str]]


def evaluate_chunk(check_id: str, e: int, instances: Sequence[Instance]) -> ChunkResult:
    """Worker entrypoint: evaluate a contiguous slice of a check's instances"""
    check = CHECKS[check_id]
    checked = 0
    counterexamples = []
    for instance in instances:
        counted = False
        try:
            if check.hypothesis is not None and not check.hypothesis(*instance, e):
                continue
            counted = True
            checked += 1
            details = check.conclusion(*instance, e)
        except Exception as exc:
            # a raising hypothesis still counts once, as a failed instance
            if not counted:
                checked += 1
            details = f"{type(exc).__name__}: {exc}"
        if details is not None:
            counterexamples.append((instance[0].to_json(), details))
    return ChunkResult(checked=checked, scanned=len(instances), counterexamples=counterexamples)


def _chunks(items: List[Instance], pieces: int) -> List[List[Instance]]:
    step = max(1, -(-len(items) // pieces))
    return [items[start:start + step] for start in range(0, len(items), step)]


def run_check(
    check_id: str,
    n_max: int,
    e: int,
    workers: int = DEFAULT_WORKERS,
    executor: Optional[ProcessPoolExecutor] = None,
) -> VerificationReport:
    check = CHECKS[check_id]
    bound = check.size_bound(n_max)
    generate = check.instances or single_partitions
    instances = generate(bound, e)
    started = time.perf_counter()

    if executor is not None and workers > 1 and len(instances) > 1:
        slices = _chunks(instances, workers * 4)
        results = list(executor.map(evaluate_chunk, [check_id] * len(slices), [e] * len(slices), slices))
    else:
        results = [evaluate_chunk(check_id, e, instances)]

    counterexamples = [
        Counterexample(partition=partition, details=details)
        for result in results
        for partition, details in result.counterexamples
    ]
    report = VerificationReport(
        check_id=check_id,
        e=e,
        n_range=(0, bound),
        instances_checked=sum(result.checked for result in results),
        counterexamples=counterexamples,
        elapsed=sum(result.scanned for result in results),
        passed=not counterexamples,
    )
    logger.info(
        f"Check {check_id} e={e} n<={bound}: {report.instances_checked} instances, "
        f"{len(counterexamples)} counterexamples in {time.perf_counter() - started:.2f}s"
    )
    return report


def _run_checks(
    check_ids: Iterable[str],
    n_max: int,
    e_set: Iterable[int],
    workers: int = DEFAULT_WORKERS,
) -> List[VerificationReport]:
    _validate_bounds(n_max, e_set)
    e_values = sorted(set(e_set))
    plan = [(check_id, e) for check_id in check_ids for e in e_values if CHECKS[check_id].applies_to(e)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return [run_check(check_id, n_max, e, workers, executor) for check_id, e in plan]
    return [run_check(check_id, n_max, e) for check_id, e in plan]


def _validate_bounds(n_max: int, e_set: Iterable[int]) -> None:
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    bad = [e for e in e_set if e < 2]
    if bad:
        raise ValueError(f"every e must be at least 2, got {bad}")


def check_main_theorem(n_max: int, e_set: Iterable[int], workers: int = DEFAULT_WORKERS) -> List[VerificationReport]:
    return _run_checks(["main"], n_max, e_set, workers)


def check_boxthm(n_max: int, e_set: Iterable[int], workers: int = DEFAULT_WORKERS) -> List[VerificationReport]:
    return _run_checks(["boxthm"], n_max, e_set, workers)


def check_lemma_suite(n_max: int, e_set: Iterable[int], workers: int = DEFAULT_WORKERS) -> List[VerificationReport]:
    return _run_checks(LEMMA_CHECKS, n_max, e_set, workers)


def check_identities(n_max: int, e_set: Iterable[int], workers: int = DEFAULT_WORKERS) -> List[VerificationReport]:
    return _run_checks(IDENTITY_CHECKS, n_max, e_set, workers)


def check_census(n_max: int, e_set: Iterable[int]) -> List[VerificationReport]:
    """Per (n, e): number of L-partitions against number of λ with MGλ = GTλ"""
    _validate_bounds(n_max, e_set)
    reports = []
    for e in sorted(set(e_set)):
        rows, counterexamples, total = [], [], 0
        for n in range(n_max + 1):
            l_count = mg_count = scanned = 0
            for la in enumerate_partitions(n):
                scanned += 1
                l_count += is_L_partition(la, e)
                sides = _theorem_sides(la, e)
                mg_count += sides["MG"] == sides["GT"]
            total += scanned
            rows.append(CensusRow(n=n, l_partitions=l_count, mg_equals_gt=mg_count))
            if l_count != mg_count:
                counterexamples.append(Counterexample(
                    partition=[],
                    details=f"n={n}: {l_count} L-partitions but {mg_count} with MGλ=GTλ",
                ))
        reports.append(VerificationReport(
            check_id="census",
            e=e,
            n_range=(0, n_max),
            instances_checked=total,
            counterexamples=counterexamples,
            elapsed=total,
            passed=not counterexamples,
            census=rows,
        ))
        logger.info(f"Census e={e} n<={n_max}: {total} partitions, {len(counterexamples)} mismatches")
    return reports


def run_suite(
    suite: str,
    n_max: int = DEFAULT_MAX_N,
    e_set: Iterable[int] = DEFAULT_E_SET,
    workers: int = DEFAULT_WORKERS,
) -> List[VerificationReport]:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    e_set = tuple(e_set)
    reports: List[VerificationReport] = []
    if suite in ("main", "all"):
        reports += check_main_theorem(n_max, e_set, workers)
        reports += check_census(n_max, e_set)
    if suite == "census":
        reports += check_census(n_max, e_set)
    if suite in ("boxthm", "all"):
        reports += check_boxthm(n_max, e_set, workers)
    if suite in ("lemmas", "all"):
        reports += check_lemma_suite(n_max, e_set, workers)
    if suite in ("identities", "all"):
        reports += check_identities(n_max, e_set, workers)
    return reports


def reports_to_json(reports: Iterable[VerificationReport]) -> List[dict]:
    return [report.to_json_dict() for report in reports]
