"""Absorbing bounds, complete cycle censuses, and empirical verifiers.

The per-digit map never exceeds ``(t+1)*(t+2)`` on a single digit, so an
m-digit value transforms to at most ``m*(t+1)*(t+2)``, which falls below
the value itself once it is large.  ``absorbing_bound`` turns that cap
into a certified finite box [0, B] that no orbit ever leaves; everything
else here (cycle enumeration, fixed points, the collapse verifiers, and
parameter sweeps) reduces to finite, exhaustively checked computation
inside the box.
"""

from __future__ import annotations

import multiprocessing
import random
from array import array
from dataclasses import dataclass

from .errors import AbsorptionError, ParameterDomainError, PreconditionError
from .hypothesis import HypothesisReport, check_a, check_all
from .kadic import digit_count, from_digits
from .transform import OrbitTrace, Params, digit_step, orbit

LABEL_UNIVERSAL = "universal_2cycle"
LABEL_FIXED_POINT = "fixed_point"
LABEL_ZERO = "degenerate_zero"
LABEL_OTHER = "other"

THEOREM1_PASS = "pass"
THEOREM1_FAIL = "fail"
THEOREM1_NOT_CHECKED = "not_checked"
THEOREM1_SKIPPED = "skipped"
THEOREM1_ERROR = "error"


def max_digit_step(params: Params) -> int:
    """Largest value the per-digit map takes on any single base-k digit.

    Equals (t+1)*(t+2), attained at the digit t*p + 1 (always < k).
    """
    return (params.t + 1) * (params.t + 2)


def z_upper_bound(m: int, params: Params) -> int:
    """Cap on the transform of any m-digit value: m times the digit maximum."""
    if m < 1:
        raise ParameterDomainError(f"digit count must be >= 1, got {m}")
    return m * max_digit_step(params)


def absorbing_bound(params: Params) -> int:
    """Certified bound B: [0, B] is forward-invariant and attracts every orbit.

    Phase one grows a seed until the digit-count cap of B itself fits
    inside B, making [0, B] forward-invariant.  Phase two absorbs every n
    whose cap m*max_digit_step fails to certify strict descent (cap >= n),
    so that above the final B the cap argument alone proves z(n) < n.
    Cap violations only exist while k**(m-1) <= m*max_digit_step; past the
    last such m the margin grows monotonically because (m+1)/m <= 2 < k,
    which the exit assertion pins down.
    """
    k = params.k
    step_max = max_digit_step(params)
    bound = max(k - 1, step_max)
    while True:
        cap = digit_count(bound, k) * step_max
        if cap <= bound:
            break
        bound = cap
    m = 2
    power = k  # k**(m-1)
    while power <= m * step_max:
        bound = max(bound, min(m * step_max, power * k - 1))
        m += 1
        power *= k
    assert m * step_max < power and (m + 1) * step_max < power * k
    assert digit_count(bound, k) * step_max <= bound
    return bound


def _make_stepper(params: Params):
    """Transform closure specialized via a per-digit lookup table."""
    k = params.k
    table = tuple(digit_step(a, params.p) for a in range(k))

    def step(n: int, _table=table, _k=k) -> int:
        total = 0
        while n:
            n, a = divmod(n, _k)
            total += _table[a]
        return total

    return step


def _canonical_rotation(members: list[int]) -> tuple[int, ...]:
    pivot = members.index(min(members))
    return tuple(members[pivot:] + members[:pivot])


class _FunctionalGraph:
    """Memoized resolution of the step map over the absorbing box [0, B].

    Each node's destination cycle is resolved exactly once, walking paths
    with an explicit stack (no recursion).  Cycles are stored sorted by
    minimum element.  ``depth`` additionally memoizes how many steps a
    node needs to enter its cycle.
    """

    def __init__(self, params: Params):
        self.params = params
        self.step = _make_stepper(params)
        self.bound = absorbing_bound(params)
        size = self.bound + 1
        self.cycle_id = array("l", [-1]) * size
        self._depth = array("l", [-1]) * size
        self.cycles: tuple[tuple[int, ...], ...] = ()
        self._resolve_cycles()

    def _resolve_cycles(self) -> None:
        step = self.step
        bound = self.bound
        cycle_id = self.cycle_id
        depth = self._depth
        found: list[tuple[int, ...]] = []
        for start in range(bound + 1):
            if cycle_id[start] >= 0:
                continue
            path: list[int] = []
            on_path: dict[int, int] = {}
            current = start
            while cycle_id[current] < 0 and current not in on_path:
                on_path[current] = len(path)
                path.append(current)
                current = step(current)
                if current > bound:
                    raise AbsorptionError(
                        f"step left the certified box [0, {bound}] from {path[-1]}"
                    )
            if cycle_id[current] >= 0:
                cid = cycle_id[current]
            else:
                members = path[on_path[current] :]
                cid = len(found)
                found.append(_canonical_rotation(members))
                for v in members:
                    depth[v] = 0
            for v in path:
                cycle_id[v] = cid
        order = sorted(range(len(found)), key=lambda i: found[i][0])
        remap = [0] * len(found)
        for new_id, old_id in enumerate(order):
            remap[old_id] = new_id
        self.cycles = tuple(found[i] for i in order)
        for i in range(bound + 1):
            cycle_id[i] = remap[cycle_id[i]]

    def descend(self, n: int) -> tuple[int, int]:
        """Walk n down into [0, bound]; returns (landing value, steps taken).

        Checks strict descent at every step above the bound, so a broken
        certificate surfaces as AbsorptionError instead of a wrong census.
        """
        step = self.step
        bound = self.bound
        taken = 0
        while n > bound:
            nxt = step(n)
            if nxt >= n:
                raise AbsorptionError(
                    f"descent violated above certified bound {bound}: z({n}) = {nxt}"
                )
            n = nxt
            taken += 1
        return n, taken

    def resolve(self, n: int) -> int:
        """Index into ``cycles`` of the cycle the orbit of n terminates in."""
        landed, _ = self.descend(n)
        return self.cycle_id[landed]

    def depth(self, n: int) -> int:
        """Number of steps before the orbit of n first enters its cycle."""
        landed, above = self.descend(n)
        depth = self._depth
        step = self.step
        stack: list[int] = []
        current = landed
        while depth[current] < 0:
            stack.append(current)
            current = step(current)
        value = depth[current]
        while stack:
            value += 1
            depth[stack.pop()] = value
        return value + above


@dataclass(frozen=True)
class Cycle:
    """A periodic orbit segment in canonical rotation (minimum first)."""

    values: tuple[int, ...]
    basin_size: int

    @property
    def length(self) -> int:
        return len(self.values)

    @property
    def degenerate(self) -> bool:
        # 0 has the empty digit sum and maps to itself; the verifiers
        # quantify over positive integers and leave it aside.
        return self.values == (0,)


@dataclass(frozen=True)
class CycleCensus:
    """Every cycle reachable from a scanned range, with basin sizes.

    Cycles live inside [0, absorbing_bound]; ``scanned_range`` is the
    inclusive range of starting values attributed to basins, and basin
    sizes partition it exactly.
    """

    params: Params
    absorbing_bound: int
    cycles: tuple[Cycle, ...]
    scanned_range: tuple[int, int]


def cycle_census(params: Params, extra_range: int | None = None) -> CycleCensus:
    """Enumerate all cycles and attribute basins over the scanned range.

    The scanned range is [0, max(absorbing_bound, extra_range)].  Cycles
    are reported in canonical rotation, sorted by minimum element.
    """
    return _census_from_graph(_FunctionalGraph(params), extra_range)


def _census_from_graph(graph: _FunctionalGraph, extra_range: int | None) -> CycleCensus:
    bound = graph.bound
    hi = bound if extra_range is None else max(bound, extra_range)
    counts = [0] * len(graph.cycles)
    cycle_id = graph.cycle_id
    for n in range(bound + 1):
        counts[cycle_id[n]] += 1
    descend = graph.descend
    for n in range(bound + 1, hi + 1):
        landed, _ = descend(n)
        counts[cycle_id[landed]] += 1
    cycles = tuple(
        Cycle(values=values, basin_size=counts[cid])
        for cid, values in enumerate(graph.cycles)
    )
    return CycleCensus(
        params=graph.params,
        absorbing_bound=bound,
        cycles=cycles,
        scanned_range=(0, hi),
    )


def fixed_points(params: Params) -> list[int]:
    """All n in [0, absorbing_bound] with z(n) = n.

    Any fixed point is a cycle, and every cycle lies inside the absorbing
    box, so the scan is complete.
    """
    step = _make_stepper(params)
    return [n for n in range(absorbing_bound(params) + 1) if step(n) == n]


def classify_cycle(cycle: Cycle) -> str:
    """Label a census cycle: the universal {1, 2} cycle, a fixed point,
    the degenerate zero, or other."""
    if cycle.values == (0,):
        return LABEL_ZERO
    if set(cycle.values) == {1, 2}:
        return LABEL_UNIVERSAL
    if cycle.length == 1:
        return LABEL_FIXED_POINT
    return LABEL_OTHER


@dataclass(frozen=True)
class Lemma2Violation:
    m: int
    n: int
    transformed: int
    bound: int


@dataclass(frozen=True)
class Lemma2Report:
    """Outcome of the digit-shrink sweep z(n) < k**(m-1) over m >= 3."""

    params: Params
    m_max: int
    samples_per_m: int
    seed: int
    checked: int
    violations: tuple[Lemma2Violation, ...]

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_lemma2(params: Params, m_max: int, samples_per_m: int, seed: int) -> Lemma2Report:
    """Check that every sampled m-digit value shrinks below k**(m-1).

    For each m in [3, m_max] draws ``samples_per_m`` values uniformly from
    [k**(m-1), k**m) with a deterministic generator seeded by ``seed``
    (leading digit nonzero by construction), plus the two extremal digit
    patterns: all digits k-1 and all digits t*p + 1 (the digit with the
    maximal image).  Requires condition (a).
    """
    if not check_a(params):
        raise PreconditionError(
            f"condition (a) does not hold for k={params.k}, p={params.p}",
            failed=("a",),
        )
    if m_max < 3:
        raise ParameterDomainError(f"m_max must be >= 3, got {m_max}")
    if samples_per_m < 1:
        raise ParameterDomainError(f"samples_per_m must be >= 1, got {samples_per_m}")
    k = params.k
    step = _make_stepper(params)
    rng = random.Random(seed)
    heaviest_digit = params.t * params.p + 1
    violations: list[Lemma2Violation] = []
    checked = 0
    for m in range(3, m_max + 1):
        lo = k ** (m - 1)
        hi = k**m
        batch = [rng.randrange(lo, hi) for _ in range(samples_per_m)]
        batch.append(hi - 1)
        batch.append(from_digits([heaviest_digit] * m, k))
        for n in batch:
            image = step(n)
            checked += 1
            if image >= lo:
                violations.append(Lemma2Violation(m=m, n=n, transformed=image, bound=lo))
    return Lemma2Report(
        params=params,
        m_max=m_max,
        samples_per_m=samples_per_m,
        seed=seed,
        checked=checked,
        violations=tuple(violations),
    )


@dataclass(frozen=True)
class Theorem1Report:
    """Exhaustive desk-scale check that every positive orbit ends in {1, 2}."""

    params: Params
    n_max: int
    passed: bool
    counterexample: OrbitTrace | None
    census: CycleCensus


def _positive_cycle_verdict(
    graph: _FunctionalGraph, census: CycleCensus
) -> tuple[bool, OrbitTrace | None]:
    """Decide whether {1, 2} is the only positive cycle in the census.

    On failure returns the orbit of the smallest scanned start that lands
    in an offending cycle (cycle members are themselves scanned starts,
    so a witness always exists).
    """
    bad_ids = {
        cid for cid, values in enumerate(graph.cycles) if set(values) not in ({0}, {1, 2})
    }
    if not bad_ids:
        return True, None
    for n in range(1, census.scanned_range[1] + 1):
        if graph.resolve(n) in bad_ids:
            return False, orbit(n, graph.params)
    raise AssertionError("offending cycle exists but no scanned start reaches it")


def verify_theorem1(params: Params, n_max: int) -> Theorem1Report:
    """Confirm every orbit started in [1, n_max] terminates in {1, 2}.

    Preconditions: all of (a), (b), (c) hold; otherwise raises
    PreconditionError naming the failed conditions.  The census scan
    actually covers [0, max(absorbing_bound, n_max)], which subsumes the
    requested range.
    """
    if n_max < 1:
        raise ParameterDomainError(f"n_max must be >= 1, got {n_max}")
    report = check_all(params)
    if not report.satisfied:
        failed = report.failed_conditions
        names = ", ".join(f"({c})" for c in failed)
        raise PreconditionError(
            f"condition(s) {names} fail for k={params.k}, p={params.p}", failed=failed
        )
    graph = _FunctionalGraph(params)
    census = _census_from_graph(graph, n_max)
    passed, counterexample = _positive_cycle_verdict(graph, census)
    return Theorem1Report(
        params=params,
        n_max=n_max,
        passed=passed,
        counterexample=counterexample,
        census=census,
    )


@dataclass(frozen=True)
class CycleClassification:
    cycle: Cycle
    label: str


@dataclass(frozen=True)
class Theorem2Report:
    """Census classification under condition (a) alone.

    ``all_orbits_terminated`` asserts that every scanned start landed in
    a census cycle; the classification table is the substantive answer
    (non-{1,2} cycles need not be fixed points, so no stronger shape
    claim is made).
    """

    params: Params
    n_max: int
    census: CycleCensus
    classification: tuple[CycleClassification, ...]
    all_orbits_terminated: bool

    @property
    def passed(self) -> bool:
        return self.all_orbits_terminated


def verify_theorem2(params: Params, n_max: int) -> Theorem2Report:
    """Census and classify every cycle reachable from [1, n_max].

    Requires condition (a) only.  Each cycle is labelled as the universal
    {1, 2} cycle, a fixed point, the degenerate zero, or other.
    """
    if n_max < 1:
        raise ParameterDomainError(f"n_max must be >= 1, got {n_max}")
    if not check_a(params):
        raise PreconditionError(
            f"condition (a) fails for k={params.k}, p={params.p}", failed=("a",)
        )
    census = cycle_census(params, extra_range=n_max)
    lo, hi = census.scanned_range
    terminated = sum(c.basin_size for c in census.cycles) == hi - lo + 1
    classification = tuple(
        CycleClassification(cycle=c, label=classify_cycle(c)) for c in census.cycles
    )
    return Theorem2Report(
        params=params,
        n_max=n_max,
        census=census,
        classification=classification,
        all_orbits_terminated=terminated,
    )


@dataclass(frozen=True)
class SweepRow:
    """One (k, p) cell of a parameter sweep."""

    k: int
    p: int
    skip_reason: str | None = None
    hypothesis: HypothesisReport | None = None
    absorbing_bound: int | None = None
    cycles: tuple[Cycle, ...] = ()
    theorem1_status: str = THEOREM1_SKIPPED
    max_transient: int | None = None
    error: str | None = None

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)


def _sweep_cell(cell: tuple[int, int, int]) -> SweepRow:
    k, p, n_max = cell
    if k < 3:
        return SweepRow(k=k, p=p, skip_reason=f"base k={k} below 3")
    if p < 2:
        return SweepRow(k=k, p=p, skip_reason=f"modulus p={p} below 2")
    try:
        params = Params(k, p)
        hyp = check_all(params)
        graph = _FunctionalGraph(params)
        census = _census_from_graph(graph, n_max)
        max_transient = max(graph.depth(n) for n in range(1, n_max + 1))
        if hyp.satisfied:
            clean = all(set(c.values) in ({0}, {1, 2}) for c in census.cycles)
            status = THEOREM1_PASS if clean else THEOREM1_FAIL
        else:
            status = THEOREM1_NOT_CHECKED
        return SweepRow(
            k=k,
            p=p,
            hypothesis=hyp,
            absorbing_bound=census.absorbing_bound,
            cycles=census.cycles,
            theorem1_status=status,
            max_transient=max_transient,
        )
    except Exception as exc:  # per-cell capture: the row reports the fault
        return SweepRow(
            k=k, p=p, theorem1_status=THEOREM1_ERROR, error=f"{type(exc).__name__}: {exc}"
        )


def sweep(
    k_range: tuple[int, int],
    p_range: tuple[int, int],
    n_max: int,
    jobs: int = 1,
) -> tuple[SweepRow, ...]:
    """Evaluate every (k, p) cell of the inclusive ranges.

    Cells outside the library domain (k < 3 or p < 2) become skipped rows
    with a reason; per-cell failures are captured in the row.  Rows come
    back in (k, p) lexicographic order regardless of ``jobs``.
    """
    k_lo, k_hi = k_range
    p_lo, p_hi = p_range
    if k_lo > k_hi or p_lo > p_hi:
        raise ParameterDomainError("ranges must satisfy lo <= hi")
    if n_max < 1:
        raise ParameterDomainError(f"n_max must be >= 1, got {n_max}")
    if jobs < 1:
        raise ParameterDomainError(f"jobs must be >= 1, got {jobs}")
    cells = [(k, p, n_max) for k in range(k_lo, k_hi + 1) for p in range(p_lo, p_hi + 1)]
    if jobs > 1 and len(cells) > 1:
        with multiprocessing.Pool(processes=jobs) as pool:
            rows = pool.map(_sweep_cell, cells)
    else:
        rows = [_sweep_cell(cell) for cell in cells]
    return tuple(rows)
