"""Exact vertex distortion.

The distortion of a knot is the maximum over vertex pairs of the ratio
(shorter arc length along the knot) / (taxicab distance).  Arc positions are
vertex indices because every edge has unit length, so the scan reduces to
integer arithmetic.  All comparisons cross-multiply exact integers; no
floating point appears anywhere in the computation.

The all-pairs scan runs over int64 numpy blocks.  That stays exact as long
as the products involved fit in 64 bits, which holds for every knot with
fewer than 2**31 edges; larger inputs are refused rather than silently
rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .knot import LatticeKnot
from .lattice import Point, is_staircase, is_box_corner, l1_distance

_EXACT_LIMIT = 2**31


class PreconditionFailed(ValueError):
    """A structural check was invoked on a knot that does not qualify."""


@dataclass(frozen=True)
class DistortionReport:
    """Exact distortion value with every vertex pair attaining it.

    ``realizing_pairs`` holds ascending (i, j) index pairs, i < j, sorted;
    each attains exactly ``value`` and no other pair exceeds it.
    """

    value: Fraction
    realizing_pairs: tuple[tuple[int, int], ...]
    pair_count_scanned: int


def knot_distance(K: LatticeKnot, i: int, j: int) -> int:
    """Length of the shorter of the two arcs between vertices ``i`` and ``j``."""
    n = K.edge_length
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"vertex index out of range for edge length {n}")
    d = abs(i - j)
    return min(d, n - d)


def distortion_pair_value(K: LatticeKnot, i: int, j: int) -> Fraction:
    """The exact distortion ratio of a single vertex pair."""
    if i == j:
        raise ValueError("distortion ratio of a vertex with itself is undefined")
    return Fraction(knot_distance(K, i, j), l1_distance(K.vertices[i], K.vertices[j]))


def distortion_upper_bound(K: LatticeKnot) -> Fraction:
    """Half the edge length; no pair's ratio can exceed it."""
    return Fraction(K.edge_length, 2)


def vertex_distortion(K: LatticeKnot, block_size: int = 512) -> DistortionReport:
    """Scan all unordered vertex pairs for the exact maximum ratio.

    Two passes over index blocks: the first records, for every occurring
    taxicab distance, the largest arc distance seen with it; the exact
    maximum of those candidate fractions is then the distortion, and the
    second pass collects every pair attaining it by integer cross
    multiplication.
    """
    n = K.edge_length
    if n >= _EXACT_LIMIT:
        raise ValueError(
            f"edge length {n} exceeds the int64 exactness bound of the scan"
        )
    coords = np.asarray(K.vertices, dtype=np.int64)
    all_j = np.arange(n, dtype=np.int64)

    box = K.bounding_box()
    max_d1 = sum(hi - lo for lo, hi in zip(box.min_corner, box.max_corner))
    best_dk = np.full(max_d1 + 1, -1, dtype=np.int64)

    def blocks():
        for start in range(0, n, block_size):
            stop = min(start + block_size, n)
            rows = coords[start:stop]
            d1 = np.abs(rows[:, None, :] - coords[None, :, :]).sum(axis=2)
            diff = all_j[None, :] - np.arange(start, stop, dtype=np.int64)[:, None]
            upper = diff > 0
            dk = np.minimum(diff, n - diff)
            yield start, upper, d1, dk

    for _, upper, d1, dk in blocks():
        np.maximum.at(best_dk, d1[upper], dk[upper])

    value = max(
        Fraction(int(best_dk[d1v]), d1v)
        for d1v in range(1, max_d1 + 1)
        if best_dk[d1v] >= 0
    )

    num = value.numerator
    den = value.denominator
    pairs: list[tuple[int, int]] = []
    for start, upper, d1, dk in blocks():
        hits = upper & (dk * den == num * d1)
        for bi, bj in zip(*np.nonzero(hits)):
            pairs.append((start + int(bi), int(bj)))
    pairs.sort()

    return DistortionReport(value, tuple(pairs), n * (n - 1) // 2)


@dataclass(frozen=True)
class DistortionOneReport:
    """Outcome of the structural checks available to distortion-one knots.

    For such a knot every vertex must be a corner of the minimal bounding
    box and both arcs between any vertex and its antipode must be staircase
    walks.  Violation lists are empty when the checks pass.
    """

    all_vertices_box_corners: bool
    non_corner_vertices: tuple[Point, ...]
    all_antipodal_arcs_staircase: bool
    non_staircase_pairs: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return self.all_vertices_box_corners and self.all_antipodal_arcs_staircase


def check_distortion_one_structure(K: LatticeKnot) -> DistortionOneReport:
    """Verify the geometric consequences of having distortion exactly one.

    Raises PreconditionFailed when the knot's distortion is not 1.
    """
    report = vertex_distortion(K)
    if report.value != 1:
        raise PreconditionFailed(
            f"vertex distortion is {report.value}, structure check needs 1"
        )

    points = K.point_set
    non_corner = tuple(v for v in K.vertices if not is_box_corner(v, points))

    bad_pairs = []
    n = K.edge_length
    for i in range(n // 2):
        j = K.antipodal_vertex(i)
        forward = K.arc_between(i, j)
        backward = K.arc_between(j, i)
        if not (is_staircase(forward) and is_staircase(backward)):
            bad_pairs.append((i, j))

    return DistortionOneReport(
        all_vertices_box_corners=not non_corner,
        non_corner_vertices=non_corner,
        all_antipodal_arcs_staircase=not bad_pairs,
        non_staircase_pairs=tuple(bad_pairs),
    )


def format_exact(value: Fraction) -> str:
    """Render a rational as ``a/b``, or plain ``a`` for integers."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
