"""Lattice knots: stick types, tabulations, construction and validation.

A lattice knot is a closed, simple, axis-parallel polygon in the cubic
lattice.  It is stored as the full cyclic sequence of unit steps together
with every integer point it visits, so the vertex set is exactly the set of
stored vertices and two sticks intersect iff they share a stored point.

Knots can be built from a tabulation (a cyclic stick-type sequence paired
with per-axis columns of stick lengths, consumed in order) or from an
explicit cyclic vertex list.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .lattice import (
    AXES,
    AXIS_NAMES,
    Isometry,
    Point,
    apply_isometry,
    bounding_box,
    Box,
)


class KnotError(Exception):
    """Base class for knot construction and validation failures."""


class NotClosed(KnotError):
    """The walk does not return to its starting point."""


class SelfIntersection(KnotError):
    """The walk visits a lattice point twice."""

    def __init__(self, point: Point, stick_indices: tuple[int, int]):
        self.point = point
        self.stick_indices = stick_indices
        super().__init__(
            f"self-intersection at {point} between sticks "
            f"{stick_indices[0]} and {stick_indices[1]}"
        )


class LengthMismatch(KnotError):
    """A length column does not agree with the stick-type sequence."""


class NonAxisParallel(KnotError):
    """Consecutive vertices do not differ along exactly one axis."""


class StickType(enum.Enum):
    """One of the six oriented axis directions."""

    XP = "x+"
    XM = "x-"
    YP = "y+"
    YM = "y-"
    ZP = "z+"
    ZM = "z-"

    @property
    def axis(self) -> int:
        return _AXIS[self]

    @property
    def sign(self) -> int:
        return _SIGN[self]

    @property
    def step(self) -> Point:
        return _STEP[self]

    @property
    def opposite(self) -> "StickType":
        return _OPPOSITE[self]

    @classmethod
    def from_axis_sign(cls, axis: int, sign: int) -> "StickType":
        return _BY_AXIS_SIGN[(axis, sign)]

    @classmethod
    def parse(cls, text: str) -> "StickType":
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"unknown stick type {text!r}") from None

    def __str__(self) -> str:
        return self.value


_AXIS = {t: AXIS_NAMES.index(t.value[0]) for t in StickType}
_SIGN = {t: 1 if t.value[1] == "+" else -1 for t in StickType}
_STEP = {
    t: tuple(_SIGN[t] if axis == _AXIS[t] else 0 for axis in AXES) for t in StickType
}
_OPPOSITE = {
    t: StickType(t.value[0] + ("-" if t.value[1] == "+" else "+")) for t in StickType
}
_BY_AXIS_SIGN = {(_AXIS[t], _SIGN[t]): t for t in StickType}


def _add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1], p[2] + q[2])


@dataclass(frozen=True)
class Tabulation:
    """A stick-type sequence with per-axis columns of stick lengths.

    The n-th stick of a given axis takes its length from the n-th entry of
    that axis's column.  Columns may be padded with trailing zeros (as in
    printed tables whose rows run to the largest per-axis stick count); the
    padding is accepted on input and never emitted.
    """

    types: tuple[StickType, ...]
    lengths: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    def __post_init__(self) -> None:
        for axis in AXES:
            count = sum(1 for t in self.types if t.axis == axis)
            column = self.lengths[axis]
            if len(column) < count:
                raise LengthMismatch(
                    f"{AXIS_NAMES[axis]} column has {len(column)} entries "
                    f"but the type sequence uses {count} {AXIS_NAMES[axis]}-sticks"
                )
            consumed = column[:count]
            if any(n < 1 for n in consumed):
                raise LengthMismatch(
                    f"{AXIS_NAMES[axis]} column holds a nonpositive length "
                    f"within its first {count} entries"
                )
            if any(n != 0 for n in column[count:]):
                raise LengthMismatch(
                    f"{AXIS_NAMES[axis]} column has unconsumed positive entries "
                    f"past row {count}"
                )

    @classmethod
    def from_columns(
        cls,
        types: Iterable[StickType | str],
        x: Iterable[int],
        y: Iterable[int],
        z: Iterable[int],
    ) -> "Tabulation":
        parsed = tuple(
            t if isinstance(t, StickType) else StickType.parse(t) for t in types
        )
        return cls(parsed, (tuple(x), tuple(y), tuple(z)))

    def column(self, axis: int) -> tuple[int, ...]:
        """The consumed (unpadded) length column for one axis."""
        count = sum(1 for t in self.types if t.axis == axis)
        return self.lengths[axis][:count]

    def stick_lengths(self) -> tuple[int, ...]:
        """Lengths in traversal order, one per entry of the type sequence."""
        cursor = [0, 0, 0]
        out = []
        for t in self.types:
            out.append(self.lengths[t.axis][cursor[t.axis]])
            cursor[t.axis] += 1
        return tuple(out)

    @property
    def total_length(self) -> int:
        return sum(self.stick_lengths())


@dataclass(frozen=True)
class Stick:
    """A maximal straight segment: its type, length, and starting vertex index."""

    type: StickType
    length: int
    start: int


@dataclass(frozen=True)
class Level:
    """Intersection of a knot with one axis-aligned integer plane.

    ``arcs`` lists maximal runs of two or more consecutive vertex indices in
    the plane, in traversal order; ``isolated_points`` lists the vertices
    whose cycle neighbours both leave the plane.  A planar knot meets its own
    plane in a single cyclic arc covering every vertex.
    """

    axis: int
    value: int
    arcs: tuple[tuple[int, ...], ...]
    isolated_points: tuple[int, ...]

    @property
    def is_empty(self) -> bool:
        return not self.arcs and not self.isolated_points


class LatticeKnot:
    """A validated closed simple axis-parallel lattice polygon.

    Instances are immutable after construction and safe for concurrent use.
    Orientation is part of the value; :meth:`reverse` returns the opposite
    traversal as a new knot.
    """

    __slots__ = ("steps", "vertices", "sticks", "_point_index")

    def __init__(self, steps: Sequence[StickType], origin: Point = (0, 0, 0)):
        steps = tuple(steps)
        if len(steps) < 4:
            raise NotClosed("a closed simple lattice polygon needs at least 4 steps")
        total = [0, 0, 0]
        for s in steps:
            total[s.axis] += s.sign
        if total != [0, 0, 0]:
            raise NotClosed(f"steps sum to {tuple(total)}, not to zero")

        sticks = _derive_sticks(steps)
        owner = _vertex_owners(sticks, len(steps))
        vertices: list[Point] = []
        point_index: dict[Point, int] = {}
        pos = (origin[0], origin[1], origin[2])
        for i, step in enumerate(steps):
            if pos in point_index:
                raise SelfIntersection(pos, (owner[point_index[pos]], owner[i]))
            point_index[pos] = i
            vertices.append(pos)
            pos = _add(pos, step.step)

        self.steps = steps
        self.vertices = tuple(vertices)
        self.sticks = sticks
        self._point_index = point_index

    # -- basic queries ------------------------------------------------

    @property
    def edge_length(self) -> int:
        """Number of unit edges; equals the number of lattice points visited."""
        return len(self.steps)

    @property
    def stick_count(self) -> int:
        return len(self.sticks)

    @property
    def origin(self) -> Point:
        return self.vertices[0]

    @property
    def point_set(self) -> frozenset[Point]:
        return frozenset(self._point_index)

    def index_of(self, point: Point) -> int:
        return self._point_index[point]

    def is_critical(self, i: int) -> bool:
        """True iff vertex ``i`` is an endpoint of a stick (the knot turns there)."""
        return self.steps[i - 1] != self.steps[i % self.edge_length]

    @property
    def critical_flags(self) -> tuple[bool, ...]:
        return tuple(self.is_critical(i) for i in range(self.edge_length))

    def antipodal_vertex(self, i: int) -> int:
        """Index of the vertex at arc distance edge_length/2 from vertex ``i``."""
        n = self.edge_length
        if not 0 <= i < n:
            raise IndexError(f"vertex index {i} out of range")
        return (i + n // 2) % n

    def stick_points(self, stick_index: int) -> tuple[Point, ...]:
        """All lattice points of one stick, initial and final vertex included."""
        stick = self.sticks[stick_index]
        pos = self.vertices[stick.start]
        pts = [pos]
        for _ in range(stick.length):
            pos = _add(pos, stick.type.step)
            pts.append(pos)
        return tuple(pts)

    def arc_between(self, i: int, j: int) -> tuple[Point, ...]:
        """Vertices from ``i`` forward (in orientation) to ``j``, inclusive."""
        n = self.edge_length
        out = [self.vertices[i]]
        k = i
        while k != j:
            k = (k + 1) % n
            out.append(self.vertices[k])
        return tuple(out)

    def bounding_box(self) -> Box:
        return bounding_box(self.vertices)

    # -- levels and sums ----------------------------------------------

    def level(self, axis: int, value: int) -> Level:
        """The arcs and isolated points of the knot in the plane axis = value."""
        n = self.edge_length
        inside = [v[axis] == value for v in self.vertices]
        if not any(inside):
            return Level(axis, value, (), ())
        if all(inside):
            return Level(axis, value, (tuple(range(n)),), ())
        arcs = []
        points = []
        for start in range(n):
            if inside[start] and not inside[start - 1]:
                run = [start]
                k = (start + 1) % n
                while inside[k]:
                    run.append(k)
                    k = (k + 1) % n
                if len(run) == 1:
                    points.append(start)
                else:
                    arcs.append(tuple(run))
        return Level(axis, value, tuple(arcs), tuple(points))

    def partial_sums(self, axis: int, signed: bool = True) -> tuple[int, ...]:
        """Running sums of this axis's stick lengths in traversal order.

        Signed sums carry the stick orientation and start from the first
        critical vertex's coordinate, so the n-th sum is the level holding
        the n-th stick's terminal critical vertex.  Unsigned sums are plain
        cumulative lengths.
        """
        acc = self.vertices[self.sticks[0].start][axis] if signed else 0
        out = []
        for stick in self.sticks:
            if stick.type.axis != axis:
                continue
            acc += stick.length * stick.type.sign if signed else stick.length
            out.append(acc)
        return tuple(out)

    # -- derived forms ------------------------------------------------

    def canonical_tabulation(self) -> tuple[Tabulation, Point]:
        """Tabulation read off from the lexicographically least critical vertex.

        Returns the tabulation and the vertex it starts from, giving every
        knot a reproducible serialized form.
        """
        starts = [s.start for s in self.sticks]
        least = min(starts, key=lambda i: self.vertices[i])
        offset = starts.index(least)
        ordered = self.sticks[offset:] + self.sticks[:offset]
        columns: list[list[int]] = [[], [], []]
        for stick in ordered:
            columns[stick.type.axis].append(stick.length)
        return (
            Tabulation(
                tuple(s.type for s in ordered),
                (tuple(columns[0]), tuple(columns[1]), tuple(columns[2])),
            ),
            self.vertices[least],
        )

    def reverse(self) -> "LatticeKnot":
        """The same polygon traversed in the opposite orientation."""
        rev = tuple(s.opposite for s in reversed(self.steps))
        return LatticeKnot(rev, self.origin)

    def translate(self, offset: Point) -> "LatticeKnot":
        return LatticeKnot(self.steps, _add(self.origin, offset))

    def transform(self, iso: Isometry) -> "LatticeKnot":
        """Apply one of the 48 signed axis permutations."""
        perm, signs = iso
        new_steps = tuple(
            StickType.from_axis_sign(perm[s.axis], s.sign * signs[s.axis])
            for s in self.steps
        )
        return LatticeKnot(new_steps, apply_isometry(iso, self.origin))

    def rotate_start(self, new_start: int) -> "LatticeKnot":
        """The same oriented polygon with the vertex cycle starting elsewhere."""
        n = self.edge_length
        new_steps = self.steps[new_start:] + self.steps[:new_start]
        return LatticeKnot(new_steps, self.vertices[new_start % n])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticeKnot):
            return NotImplemented
        return self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash(self.vertices)

    def __repr__(self) -> str:
        return (
            f"<LatticeKnot sticks={self.stick_count} "
            f"edge_length={self.edge_length} origin={self.origin}>"
        )


def _derive_sticks(steps: tuple[StickType, ...]) -> tuple[Stick, ...]:
    """Group the cyclic step sequence into maximal same-direction runs."""
    n = len(steps)
    first = next((i for i in range(n) if steps[i - 1] != steps[i]), None)
    if first is None:
        raise NotClosed("all steps point the same way")
    sticks = []
    i = first
    seen = 0
    while seen < n:
        direction = steps[i]
        length = 1
        while steps[(i + length) % n] == direction and length < n:
            length += 1
        sticks.append(Stick(direction, length, i))
        i = (i + length) % n
        seen += length
    return tuple(sticks)


def _vertex_owners(sticks: tuple[Stick, ...], n: int) -> list[int]:
    """Map each vertex index to the stick it starts or lies inside of."""
    owner = [0] * n
    for idx, stick in enumerate(sticks):
        for k in range(stick.length):
            owner[(stick.start + k) % n] = idx
    return owner


def build_knot(tab: Tabulation, origin: Point = (0, 0, 0)) -> LatticeKnot:
    """Construct and validate the knot a tabulation describes.

    The walk starts at ``origin``, follows the type sequence, and takes the
    n-th stick of each axis at the length in the n-th row of that axis's
    column.  Raises NotClosed if the walk does not return to the origin and
    SelfIntersection (with the offending point and stick pair) if it revisits
    a lattice point.
    """
    steps: list[StickType] = []
    for t, length in zip(tab.types, tab.stick_lengths()):
        steps.extend([t] * length)
    return LatticeKnot(steps, origin)


def knot_from_vertices(cycle: Sequence[Point]) -> LatticeKnot:
    """Build a knot from a cyclic list of points, interpolating unit steps.

    Consecutive points (cyclically) must differ along exactly one axis.
    Collinear same-direction segments merge into one stick; opposite-direction
    neighbours double back over shared points and fail as self-intersections.
    """
    if len(cycle) < 3:
        raise NotClosed("a vertex cycle needs at least 3 points")
    steps: list[StickType] = []
    n = len(cycle)
    for k in range(n):
        p = cycle[k]
        q = cycle[(k + 1) % n]
        diff = tuple(q[axis] - p[axis] for axis in AXES)
        nonzero = [axis for axis in AXES if diff[axis] != 0]
        if len(nonzero) != 1:
            raise NonAxisParallel(f"{p} -> {q} does not move along exactly one axis")
        axis = nonzero[0]
        sign = 1 if diff[axis] > 0 else -1
        steps.extend([StickType.from_axis_sign(axis, sign)] * abs(diff[axis]))
    return LatticeKnot(steps, cycle[0])


def partial_sums(
    source: LatticeKnot | Tabulation,
    axis: int,
    signed: bool = True,
    origin: Point = (0, 0, 0),
) -> tuple[int, ...]:
    """Partial sums of one axis's stick lengths, from a knot or a raw tabulation."""
    if isinstance(source, LatticeKnot):
        return source.partial_sums(axis, signed)
    acc = origin[axis] if signed else 0
    out = []
    for t, length in zip(source.types, source.stick_lengths()):
        if t.axis != axis:
            continue
        acc += length * t.sign if signed else length
        out.append(acc)
    return tuple(out)
