"""Exhaustive and randomized searches over small lattice knots.

Enumeration lists every closed simple lattice cycle up to a given edge
length, one representative per equivalence class under translation, the 48
signed axis permutations, cyclic change of starting vertex, and reversal of
orientation.  Classes are identified by the lexicographically least encoded
step sequence over the whole group, so counts and output order are
reproducible across runs.

On top of the enumeration sit the distortion-one census and a randomized
walk through reduction/extension moves that tracks the lowest distortion
conformation it encounters (an empirical upper bound for the knot type,
never a proof of the infimum).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .distortion import check_distortion_one_structure, vertex_distortion
from .knot import LatticeKnot, StickType
from .lattice import ISOMETRIES, Point
from .reduction import (
    Direction,
    ReductionError,
    ReductionMove,
    apply_extension,
    apply_reduction,
)

_ENCODE = {t: i for i, t in enumerate(StickType)}
_DIRS: tuple[StickType, ...] = tuple(StickType)

# bytes translation tables: encoded step images under each of the 48 isometries
_STEP_IMAGES = tuple(
    bytes(
        _ENCODE[StickType.from_axis_sign(iso[0][t.axis], t.sign * iso[1][t.axis])]
        for t in _DIRS
    )
    + bytes(range(6, 256))
    for iso in ISOMETRIES
)
_OPPOSITE_CODE = tuple(_ENCODE[t.opposite] for t in _DIRS)


def encode_steps(steps: Sequence[StickType]) -> tuple[int, ...]:
    return tuple(_ENCODE[s] for s in steps)


def decode_steps(codes: Sequence[int]) -> tuple[StickType, ...]:
    return tuple(_DIRS[c] for c in codes)


def canonical_steps(steps: Sequence[StickType]) -> tuple[int, ...]:
    """Least encoded step sequence over isometries, rotations and reversal."""
    base = bytes(encode_steps(steps))
    n = len(base)
    reversed_base = bytes(_OPPOSITE_CODE[c] for c in reversed(base))
    best: bytes | None = None
    for image in _STEP_IMAGES:
        for seq in (base, reversed_base):
            mapped = seq.translate(image)
            doubled = mapped + mapped
            candidate = min(doubled[i : i + n] for i in range(n))
            if best is None or candidate < best:
                best = candidate
    assert best is not None
    return tuple(best)


_DX = (1, -1, 0, 0, 0, 0)
_DY = (0, 0, 1, -1, 0, 0)
_DZ = (0, 0, 0, 0, 1, -1)


def _closed_walks(length: int) -> list[tuple[int, ...]]:
    """Self-avoiding closed walks of the exact length, first step x+.

    Direction-canonical pruning keeps the tree small: the first step off the
    x-axis must be y+, and the first z-axis step must be z+.  Every isometry
    class keeps at least one surviving rooted traversal (map any traversal's
    first step to x+, then use the stabilizer of x+ to normalize the first
    y/z directions), and the canonical-form dedup afterwards removes the
    remaining redundancy.
    """
    results: list[tuple[int, ...]] = []
    steps = [0]
    base = 2 * length + 1
    visited = {0}  # encoded origin

    def rec(x: int, y: int, z: int, seen_y: bool, seen_z: bool) -> None:
        remaining = length - len(steps)
        if remaining == 0:
            if x == 0 and y == 0 and z == 0:
                results.append(tuple(steps))
            return
        if abs(x) + abs(y) + abs(z) > remaining:
            return
        key = (x * base + y) * base + z
        if key in visited:
            return
        visited.add(key)
        for code in range(6):
            if code == 3 and not seen_y:
                continue
            if code >= 4 and (not seen_y or (code == 5 and not seen_z)):
                continue
            steps.append(code)
            rec(
                x + _DX[code],
                y + _DY[code],
                z + _DZ[code],
                seen_y or code in (2, 3),
                seen_z or code in (4, 5),
            )
            steps.pop()
        visited.discard(key)

    rec(1, 0, 0, False, False)
    return results


def enumerate_conformations(
    max_edge_length: int, cap: int = 16
) -> Iterator[LatticeKnot]:
    """All conformations up to isometry, shortest first, in canonical order.

    Each emitted knot is built from its canonical step sequence starting at
    the origin.  The edge-length bound must be even, at least 4, and within
    the configured cap (enumeration grows exponentially).
    """
    if max_edge_length % 2 != 0 or max_edge_length < 4:
        raise ValueError("max_edge_length must be an even integer >= 4")
    if max_edge_length > cap:
        raise ValueError(
            f"max_edge_length {max_edge_length} exceeds the configured cap {cap}"
        )
    for length in range(4, max_edge_length + 1, 2):
        classes = {canonical_steps(decode_steps(w)) for w in _closed_walks(length)}
        for codes in sorted(classes):
            yield LatticeKnot(decode_steps(codes))


def conformation_counts(max_edge_length: int, cap: int = 16) -> dict[int, int]:
    """Number of isometry classes of conformations at each edge length."""
    counts: dict[int, int] = {}
    for K in enumerate_conformations(max_edge_length, cap):
        counts[K.edge_length] = counts.get(K.edge_length, 0) + 1
    return counts


def classify_distortion_one(max_edge_length: int, cap: int = 16) -> list[LatticeKnot]:
    """All enumerated conformations whose vertex distortion equals one.

    Every survivor is pushed through the structural consequences of the
    distortion-one theorem: each vertex must be a corner of the minimal
    bounding box (hence the whole cycle lies on the box boundary) and all
    antipodal arcs must be staircase walks.  A survivor failing those checks
    would falsify the theorem, so it raises immediately.
    """
    survivors = []
    for K in enumerate_conformations(max_edge_length, cap):
        if vertex_distortion(K).value != 1:
            continue
        report = check_distortion_one_structure(K)
        if not report.ok:
            raise AssertionError(
                f"distortion-one conformation violates structure: {report}"
            )
        box = K.bounding_box()
        if not all(box.on_boundary(v) for v in K.vertices):
            raise AssertionError("distortion-one conformation leaves its box boundary")
        survivors.append(K)
    return survivors


def random_lattice_knot(
    rng: random.Random, max_edge_length: int = 60, min_edge_length: int = 4
) -> LatticeKnot:
    """A pseudo-random closed simple lattice cycle, for property tests.

    Picks a random even target length and backtracks through self-avoiding
    walks in randomized direction order until one closes up.
    """
    if min_edge_length < 4 or max_edge_length < min_edge_length:
        raise ValueError("need 4 <= min_edge_length <= max_edge_length")
    length = rng.randrange(min_edge_length // 2, max_edge_length // 2 + 1) * 2

    steps: list[StickType] = []
    visited: dict[Point, int] = {}
    pos = (0, 0, 0)

    def rec() -> bool:
        nonlocal pos
        remaining = length - len(steps)
        if remaining == 0:
            return pos == (0, 0, 0)
        if abs(pos[0]) + abs(pos[1]) + abs(pos[2]) > remaining:
            return False
        if pos in visited:
            return False
        visited[pos] = len(steps)
        here = pos
        for t in rng.sample(_DIRS, 6):
            steps.append(t)
            d = t.step
            pos = (here[0] + d[0], here[1] + d[1], here[2] + d[2])
            if rec():
                return True
            steps.pop()
        pos = here
        del visited[pos]
        return False

    if not rec():
        raise RuntimeError("no closed walk found (unreachable for length >= 4)")
    return LatticeKnot(steps)


@dataclass(frozen=True)
class SearchResult:
    """Lowest-distortion conformation seen during a randomized move walk."""

    best_knot: LatticeKnot
    best_value: Fraction
    moves_applied: int
    moves_tried: int


def search_low_distortion(
    knot: LatticeKnot, move_budget: int, seed: int = 0
) -> SearchResult:
    """Random walk through reductions and extensions, tracking min distortion.

    Reductions are preferred when available so the walk gravitates toward
    short conformations, with occasional extensions to escape dead ends.
    The returned value is an upper bound observed for the knot type; the
    walk never claims the infimum.
    """
    rng = random.Random(seed)
    current = knot
    best = knot
    best_value = vertex_distortion(knot).value
    applied = 0
    for tried in range(1, move_budget + 1):
        stick = rng.randrange(len(current.sticks))
        direction = rng.choice((Direction.WITH, Direction.AGAINST))
        extend = rng.random() < 0.25
        try:
            if extend:
                amount = rng.randrange(1, 3)
                candidate = apply_extension(current, stick, direction, amount)
            else:
                amount = rng.randrange(1, max(2, current.sticks[stick].length))
                candidate = apply_reduction(
                    current, ReductionMove(stick, direction, amount)
                )
        except ReductionError:
            continue
        applied += 1
        current = candidate
        value = vertex_distortion(current).value
        if value < best_value:
            best, best_value = current, value
    return SearchResult(best, best_value, applied, move_budget)
