"""Independent brute-force oracles used by the tests.

The planar arrangement enumerator knows nothing about the chord adjacency
rules of the library: it is handed bare segments, computes intersections
with exact rational arithmetic, and extracts faces by rotating around
vertices.  Counts and edge sets derived here cross-check the constructive
dual complex.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cmp_to_key

Point = tuple[Fraction, Fraction]
Segment = tuple[Point, Point]


def _frac_point(p) -> Point:
    return (Fraction(p[0]), Fraction(p[1]))


def _on_segment(p: Point, seg: Segment) -> bool:
    (x1, y1), (x2, y2) = seg
    (px, py) = p
    cross = (x2 - x1) * (py - y1) - (y2 - y1) * (px - x1)
    if cross != 0:
        return False
    return min(x1, x2) <= px <= max(x1, x2) and min(y1, y2) <= py <= max(y1, y2)


def _intersect(s1: Segment, s2: Segment) -> Point | None:
    """Proper or endpoint intersection of two non-collinear segments."""
    (x1, y1), (x2, y2) = s1
    (x3, y3), (x4, y4) = s2
    d1 = (x2 - x1, y2 - y1)
    d2 = (x4 - x3, y4 - y3)
    denom = d1[0] * d2[1] - d1[1] * d2[0]
    if denom == 0:
        return None
    t = ((x3 - x1) * d2[1] - (y3 - y1) * d2[0])
    u = ((x3 - x1) * d1[1] - (y3 - y1) * d1[0])
    t = Fraction(t, denom)
    u = Fraction(u, denom)
    if 0 <= t <= 1 and 0 <= u <= 1:
        return (x1 + t * d1[0], y1 + t * d1[1])
    return None


def _direction_cmp(u, v) -> int:
    """Counterclockwise order of direction vectors starting from +x axis."""

    def half(d):
        dx, dy = d
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    hu, hv = half(u), half(v)
    if hu != hv:
        return -1 if hu < hv else 1
    cross = u[0] * v[1] - u[1] * v[0]
    if cross > 0:
        return -1
    if cross < 0:
        return 1
    return 0


def build_arrangement(raw_segments) -> dict:
    """Vertices, edges and face count of a segment arrangement.

    Returns a dict with ``vertices`` (set of points), ``edges`` (set of
    frozen point pairs) and ``faces`` (number of bounded faces).  The input
    must be connected with no collinear overlaps.
    """
    segments = [(_frac_point(a), _frac_point(b)) for a, b in raw_segments]
    cuts_on: list[set[Point]] = [{s[0], s[1]} for s in segments]
    for i, s1 in enumerate(segments):
        for j in range(i + 1, len(segments)):
            p = _intersect(s1, segments[j])
            if p is not None:
                cuts_on[i].add(p)
                cuts_on[j].add(p)
    # endpoints of one segment may lie inside another without crossing it
    for i, seg in enumerate(segments):
        for j, other in enumerate(segments):
            if i == j:
                continue
            for endpoint in (other[0], other[1]):
                if _on_segment(endpoint, seg):
                    cuts_on[i].add(endpoint)

    vertices: set[Point] = set()
    edges: set[frozenset] = set()
    adjacency: dict[Point, set[Point]] = {}
    for seg, pts in zip(segments, cuts_on):
        (x1, y1), (x2, y2) = seg
        ordered = sorted(pts, key=lambda p: (p[0] - x1) ** 2 + (p[1] - y1) ** 2)
        for a, b in zip(ordered, ordered[1:]):
            vertices.update((a, b))
            edges.add(frozenset((a, b)))
            adjacency.setdefault(a, set()).add(b)
            adjacency.setdefault(b, set()).add(a)

    order: dict[Point, list[Point]] = {}
    for v, nbrs in adjacency.items():
        order[v] = sorted(
            nbrs,
            key=cmp_to_key(
                lambda p, q: _direction_cmp(
                    (p[0] - v[0], p[1] - v[1]), (q[0] - v[0], q[1] - v[1])
                )
            ),
        )

    half_edges = set()
    for e in edges:
        a, b = tuple(e)
        half_edges.add((a, b))
        half_edges.add((b, a))
    faces = 0
    seen = set()
    for start in sorted(half_edges):
        if start in seen:
            continue
        faces += 1
        h = start
        while True:
            seen.add(h)
            u, v = h
            ring = order[v]
            idx = ring.index(u)
            w = ring[(idx - 1) % len(ring)]
            h = (v, w)
            if h == start:
                break
    return {
        "vertices": vertices,
        "edges": edges,
        "faces": faces - 1,  # drop the outer face
    }


def triangle_segments(k: int, cuts: tuple[int, ...]):
    """Bare segments of the subdivided triangle in the (a, b) plane."""
    segs = [((0, 0), (k, 0)), ((0, 0), (0, k)), ((k, 0), (0, k))]
    for s in cuts:
        segs.append(((s, 0), (s, k - s)))
    for s in cuts:
        w = k - s
        segs.append(((0, w), (k - w, w)))
    return segs


def arrangement_counts(k: int, cuts: tuple[int, ...]) -> tuple[int, int, int]:
    arr = build_arrangement(triangle_segments(k, cuts))
    return len(arr["vertices"]), len(arr["edges"]), arr["faces"]


def arrangement_edge_positions(k: int, cuts: tuple[int, ...]) -> set[frozenset]:
    """Edges as frozensets of integral (a, b, c) positions."""
    arr = build_arrangement(triangle_segments(k, cuts))
    out = set()
    for e in arr["edges"]:
        pts = []
        for (x, y) in e:
            assert x.denominator == 1 and y.denominator == 1
            a, b = int(x), int(y)
            pts.append((a, b, k - a - b))
        out.add(frozenset(pts))
    return out
