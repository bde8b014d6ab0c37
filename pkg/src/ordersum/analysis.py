"""Range sweeps over group orders, with checkpoints and worker pools.

The one engine here (scan_orders) walks every abelian group type of every
order in a range, computes the order-sum of each, and records everything
the library's long-running searches care about:

  * same-order collisions: two types of the same order with equal order
    sums (none are expected; finding one would be a discovery),
  * divisibility hits: types whose order-sum is a multiple of the group
    order (rare but real; the smallest has order 3887),
  * violations of the two proved facts that every order-sum is odd and at
    least 2*order - 1 (impossible unless the formulas are broken, so the
    sweep wrappers turn them into hard assertion failures).

Long sweeps persist progress in a small JSON checkpoint.  Checkpoints are
written atomically (temp file + rename), carry a format version that is
checked before anything else, and record the largest fully-scanned order,
so a resumed sweep continues exactly where the file says and the final
state is byte-identical to an uninterrupted run.  Worker parallelism
splits the range into fixed blocks handled by forked processes; results
are merged in block order, so worker count never changes any output.
"""

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import prod
from multiprocessing import get_context

from .arith import is_prime, smallest_prime_factors
from .partitions import Partition, partitions_of
from .psi_core import (
    _psi_prime_power,
    format_components,
    psi_cyclic,
    psi_elem_abelian,
)

__all__ = [
    "CHECKPOINT_VERSION",
    "CheckpointError",
    "CollisionRecord",
    "DivisibleRecord",
    "ImageReport",
    "MonotonicityReport",
    "SweepCheckpoint",
    "SweepOutcome",
    "conjecture_sweep",
    "divisibility_search",
    "image_probe",
    "load_checkpoint",
    "monotonicity_check",
    "save_checkpoint",
    "scan_orders",
]

CHECKPOINT_VERSION = 1
DEFAULT_BLOCK_SIZE = 1000


@dataclass(frozen=True, slots=True)
class CollisionRecord:
    """Two distinct types of the same order with the same order-sum."""

    order: int
    group_a: str
    group_b: str
    psi: int

    def to_json_obj(self) -> dict:
        return {"order": self.order, "group_a": self.group_a,
                "group_b": self.group_b, "psi": str(self.psi)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "CollisionRecord":
        return cls(order=_get_int(obj, "order"),
                   group_a=_get_str(obj, "group_a"),
                   group_b=_get_str(obj, "group_b"),
                   psi=_get_int_string(obj, "psi"))


@dataclass(frozen=True, slots=True)
class DivisibleRecord:
    """A type whose order-sum is an exact multiple of the group order."""

    order: int
    group: str
    psi: int
    quotient: int

    def to_json_obj(self) -> dict:
        return {"order": self.order, "group": self.group,
                "psi": str(self.psi), "quotient": str(self.quotient)}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "DivisibleRecord":
        return cls(order=_get_int(obj, "order"),
                   group=_get_str(obj, "group"),
                   psi=_get_int_string(obj, "psi"),
                   quotient=_get_int_string(obj, "quotient"))


class CheckpointError(RuntimeError):
    """Checkpoint file is missing, malformed, or inconsistent with the run."""


def _get_int(obj: dict, key: str) -> int:
    v = obj.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise CheckpointError(f"field {key!r} must be an integer, got {v!r}")
    return v


def _get_str(obj: dict, key: str) -> str:
    v = obj.get(key)
    if not isinstance(v, str):
        raise CheckpointError(f"field {key!r} must be a string, got {v!r}")
    return v


def _get_int_string(obj: dict, key: str) -> int:
    v = _get_str(obj, key)
    if not v.isdigit():
        raise CheckpointError(f"field {key!r} must be a decimal string, got {v!r}")
    return int(v)


@dataclass
class SweepCheckpoint:
    """Persistent state of a sweep: progress watermark plus found records.

    max_done is the largest order fully scanned; a sweep resumed from this
    state starts at max_done + 1.
    """

    max_done: int
    collisions: list[CollisionRecord] = field(default_factory=list)
    divisible_hits: list[DivisibleRecord] = field(default_factory=list)
    version: int = CHECKPOINT_VERSION

    @classmethod
    def fresh(cls, start: int) -> "SweepCheckpoint":
        """Empty checkpoint for a sweep that will begin at `start`."""
        return cls(max_done=start - 1)

    def to_json_obj(self) -> dict:
        return {
            "version": self.version,
            "max_done": self.max_done,
            "collisions": [c.to_json_obj() for c in self.collisions],
            "divisible_hits": [d.to_json_obj() for d in self.divisible_hits],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "SweepCheckpoint":
        if not isinstance(obj, dict):
            raise CheckpointError(f"checkpoint root must be an object, got {type(obj).__name__}")
        version = obj.get("version")
        if version != CHECKPOINT_VERSION:
            raise CheckpointError(
                f"checkpoint version {version!r} is not supported "
                f"(this build reads version {CHECKPOINT_VERSION})")
        expected = {"version", "max_done", "collisions", "divisible_hits"}
        extra = set(obj) - expected
        if extra:
            raise CheckpointError(f"unknown checkpoint fields: {sorted(extra)}")
        missing = expected - set(obj)
        if missing:
            raise CheckpointError(f"missing checkpoint fields: {sorted(missing)}")
        for key in ("collisions", "divisible_hits"):
            if not isinstance(obj[key], list):
                raise CheckpointError(f"field {key!r} must be a list")
        return cls(
            max_done=_get_int(obj, "max_done"),
            collisions=[CollisionRecord.from_json_obj(c) for c in obj["collisions"]],
            divisible_hits=[DivisibleRecord.from_json_obj(d) for d in obj["divisible_hits"]],
        )


def save_checkpoint(checkpoint: SweepCheckpoint, path: str) -> None:
    """Write a checkpoint atomically: temp file in place, then rename."""
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(checkpoint.to_json_obj(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    os.replace(tmp, path)


def load_checkpoint(path: str) -> SweepCheckpoint:
    """Read a checkpoint; any defect raises CheckpointError."""
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise CheckpointError(f"cannot read checkpoint {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CheckpointError(f"checkpoint {path} is not valid JSON: {exc}") from exc
    return SweepCheckpoint.from_json_obj(obj)


@dataclass
class SweepOutcome:
    """Everything one range scan observed, before any persistence."""

    types_scanned: int = 0
    collisions: list[CollisionRecord] = field(default_factory=list)
    divisible_hits: list[DivisibleRecord] = field(default_factory=list)
    odd_violations: list[tuple[int, str, int]] = field(default_factory=list)
    bound_violations: list[tuple[int, str, int]] = field(default_factory=list)
    five_orders: list[int] = field(default_factory=list)

    def merge(self, other: "SweepOutcome") -> None:
        self.types_scanned += other.types_scanned
        self.collisions.extend(other.collisions)
        self.divisible_hits.extend(other.divisible_hits)
        self.odd_violations.extend(other.odd_violations)
        self.bound_violations.extend(other.bound_violations)
        self.five_orders.extend(other.five_orders)


@lru_cache(maxsize=None)
def _shapes_of(e: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(s.parts) for s in partitions_of(e))


def _iter_type_combos(n: int, spf: list[int]):
    """Yield each abelian type of order n as ((p, parts), ...) pairs."""
    if n == 1:
        yield ()
        return
    pairs: list[tuple[int, int]] = []
    while n > 1:
        p = spf[n]
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        pairs.append((p, e))
    combos = [()]
    for p, e in pairs:
        combos = [c + ((p, parts),) for c in combos for parts in _shapes_of(e)]
    yield from combos


def _scan_range(start: int, stop: int, spf: list[int]) -> SweepOutcome:
    """Scan every order in [start, stop] with all detectors on."""
    out = SweepOutcome()
    for n in range(start, stop + 1):
        rows: list[tuple[str, int]] = []
        for combo in _iter_type_combos(n, spf):
            value = prod(_psi_prime_power(p, parts) for p, parts in combo)
            spec = format_components(combo)
            rows.append((spec, value))
            if value % 2 == 0:
                out.odd_violations.append((n, spec, value))
            if value < 2 * n - 1:
                out.bound_violations.append((n, spec, value))
            if value == 5:
                out.five_orders.append(n)
            if n >= 2 and value % n == 0:
                out.divisible_hits.append(
                    DivisibleRecord(n, spec, value, value // n))
        out.types_scanned += len(rows)
        if len(rows) > 1:
            by_value: dict[int, list[str]] = {}
            for spec, value in rows:
                by_value.setdefault(value, []).append(spec)
            for value, specs in by_value.items():
                for a, b in combinations(specs, 2):
                    out.collisions.append(CollisionRecord(n, a, b, value))
    return out


# Worker state for forked pools: children inherit this module-level sieve,
# so nothing large travels through the task queue.
_WORKER_SPF: list[int] | None = None


def _scan_block(bounds: tuple[int, int]) -> SweepOutcome:
    start, stop = bounds
    return _scan_range(start, stop, _WORKER_SPF)


def _iter_block_outcomes(start: int, stop: int, workers: int, block_size: int):
    """Yield (last_order_of_block, SweepOutcome) in ascending block order."""
    global _WORKER_SPF
    if start > stop:
        return
    _WORKER_SPF = smallest_prime_factors(stop)
    blocks = [(a, min(a + block_size - 1, stop))
              for a in range(start, stop + 1, block_size)]
    if workers <= 1:
        for b in blocks:
            yield b[1], _scan_block(b)
    else:
        ctx = get_context("fork")
        with ctx.Pool(workers) as pool:
            for b, outcome in zip(blocks, pool.imap(_scan_block, blocks)):
                yield b[1], outcome


def scan_orders(start: int, stop: int, *, workers: int = 1,
                block_size: int = DEFAULT_BLOCK_SIZE) -> SweepOutcome:
    """Scan a whole order range and return the merged outcome.

    The result is a pure function of (start, stop): worker count and block
    size only change how the work is split, never what comes back.
    """
    if start < 1:
        raise ValueError(f"start must be >= 1, got {start}")
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers}")
    total = SweepOutcome()
    for _, outcome in _iter_block_outcomes(start, stop, workers, block_size):
        total.merge(outcome)
    return total


def _require_sound(outcome: SweepOutcome) -> None:
    # Odd / lower-bound violations cannot occur for correct formulas; any
    # appearance means the computation itself is broken, so fail loudly
    # rather than record them as findings.
    assert not outcome.odd_violations, (
        f"internal error: even order-sum recorded: {outcome.odd_violations[:3]}")
    assert not outcome.bound_violations, (
        f"internal error: order-sum below 2n-1 recorded: {outcome.bound_violations[:3]}")


def conjecture_sweep(start: int, stop: int,
                     checkpoint: SweepCheckpoint | None = None, *,
                     workers: int = 1,
                     checkpoint_path: str | None = None,
                     block_size: int = DEFAULT_BLOCK_SIZE) -> SweepCheckpoint:
    """Sweep [start, stop] recording collisions and divisibility hits.

    Continues the given checkpoint (or a fresh one) and returns it with
    max_done advanced to stop.  The requested start must not leave a gap
    above the checkpoint's watermark; orders already covered are skipped,
    never rescanned.  When checkpoint_path is set the file is rewritten
    after every block, so an interrupted sweep loses at most one block.
    """
    if start < 2:
        raise ValueError(f"start must be >= 2, got {start}")
    if stop < start:
        raise ValueError(f"need start <= stop, got [{start}, {stop}]")
    if checkpoint is None:
        checkpoint = SweepCheckpoint.fresh(start)
    if checkpoint.version != CHECKPOINT_VERSION:
        raise CheckpointError(
            f"checkpoint version {checkpoint.version!r} is not supported")
    if start > checkpoint.max_done + 1:
        raise CheckpointError(
            f"gap between checkpoint (orders <= {checkpoint.max_done} done) "
            f"and requested start {start}")
    effective = max(start, checkpoint.max_done + 1)
    for block_end, outcome in _iter_block_outcomes(
            effective, stop, workers, block_size):
        _require_sound(outcome)
        checkpoint.collisions.extend(outcome.collisions)
        checkpoint.divisible_hits.extend(outcome.divisible_hits)
        checkpoint.max_done = block_end
        if checkpoint_path is not None:
            save_checkpoint(checkpoint, checkpoint_path)
    if checkpoint_path is not None:
        save_checkpoint(checkpoint, checkpoint_path)
    return checkpoint


def divisibility_search(max_order: int, *, workers: int = 1) -> list[DivisibleRecord]:
    """All types of order 2..max_order whose order-sum the order divides."""
    if max_order < 2:
        raise ValueError(f"max_order must be >= 2, got {max_order}")
    outcome = scan_orders(2, max_order, workers=workers)
    _require_sound(outcome)
    return outcome.divisible_hits


@dataclass(frozen=True, slots=True)
class ImageReport:
    """What the order-sum image over all orders <= max_order looks like."""

    max_order: int
    types_scanned: int
    values_up_to_3: tuple[int, ...]
    all_odd: bool
    bound_holds: bool
    five_orders: tuple[int, ...]
    conclusive: bool
    explanation: str


def image_probe(max_order: int, *, workers: int = 1) -> ImageReport:
    """Check which small values the order-sum attains, 5 in particular.

    The verdict on 5 is conclusive once max_order >= 5: orders 1 to 3
    realize exactly the values {1, 3, 7}, and every group of order >= 4
    has order-sum at least 2*4 - 1 = 7, so no group of any order attains
    5 (or any other value missing from the scanned range below 7).
    """
    if max_order < 1:
        raise ValueError(f"max_order must be >= 1, got {max_order}")
    outcome = scan_orders(1, max_order, workers=workers)
    spf_small = smallest_prime_factors(3)
    small = sorted({
        prod(_psi_prime_power(p, parts) for p, parts in combo)
        for n in range(1, min(3, max_order) + 1)
        for combo in _iter_type_combos(n, spf_small)
    })
    all_odd = not outcome.odd_violations
    bound_holds = not outcome.bound_violations
    five_orders = tuple(outcome.five_orders)
    conclusive = (max_order >= 5 and all_odd and bound_holds
                  and not five_orders)
    if conclusive:
        explanation = (
            f"conclusive: orders 1..3 realize exactly {small}, every scanned "
            f"value up to order {max_order} is odd and >= 2*order-1, and any "
            "group of order >= 4 has order-sum >= 7, so the value 5 is never "
            "attained by any finite abelian group")
    elif five_orders:
        explanation = (
            f"value 5 attained at orders {sorted(set(five_orders))}; this "
            "contradicts the proved lower bound, so treat it as a defect")
    else:
        explanation = (
            f"inconclusive: scanned only up to order {max_order}; rerun with "
            "a bound of at least 5 for a conclusive verdict on the value 5")
    return ImageReport(
        max_order=max_order,
        types_scanned=outcome.types_scanned,
        values_up_to_3=tuple(small),
        all_odd=all_odd,
        bound_holds=bound_holds,
        five_orders=five_orders,
        conclusive=conclusive,
        explanation=explanation,
    )


@dataclass(frozen=True, slots=True)
class MonotonicityReport:
    """Order-sums along the partition chain of p^n, in enumeration order."""

    n: int
    p: int
    entries: tuple[tuple[Partition, int], ...]
    violations: tuple[tuple[Partition, Partition], ...]
    first_matches_flat_formula: bool
    last_matches_cyclic_formula: bool

    @property
    def strictly_increasing(self) -> bool:
        return not self.violations

    @property
    def ok(self) -> bool:
        return (self.strictly_increasing
                and self.first_matches_flat_formula
                and self.last_matches_cyclic_formula)


def monotonicity_check(n: int, p: int) -> MonotonicityReport:
    """Evaluate the order-sum along all p-group types of order p^n.

    In the partition enumeration order the values are expected to be
    strictly increasing, from the all-ones type (whose value the flat-type
    closed form gives) up to the single-part cyclic type (whose value the
    cyclic closed form gives).  A non-monotonic chain is reported, not
    assumed away; it is the cheapest whole-row cross-check the formulas
    have.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    entries = tuple((shape, _psi_prime_power(p, shape.parts))
                    for shape in partitions_of(n))
    violations = tuple(
        (a, b) for (a, va), (b, vb) in zip(entries, entries[1:]) if va >= vb)
    return MonotonicityReport(
        n=n,
        p=p,
        entries=entries,
        violations=violations,
        first_matches_flat_formula=entries[0][1] == psi_elem_abelian(p, n),
        last_matches_cyclic_formula=entries[-1][1] == psi_cyclic(p, n),
    )
