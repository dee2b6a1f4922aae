"""Shared computational geometry: 3D convex hull with volume, rasterized
polygon IoU, polyline length.

The hull is a quickhull-style incremental construction with a coplanarity
tolerance of 1e-10 times the bounding-box diagonal, robust at the 2e5-point
scale used by the workspace study.  Volume comes from a fan of signed
tetrahedra around the vertex centroid, which is always interior for a
convex hull.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateInput, DegeneratePolygon

__all__ = [
    "Hull3",
    "Polygon2",
    "convex_hull_3d",
    "hull_volume",
    "polygon_iou",
    "polyline_length",
]


@dataclass
class Hull3:
    """Convex hull: vertex coordinates, triangular facets (vertex indices,
    outward orientation), and enclosed volume in m^3."""

    vertices: np.ndarray          # (V, 3)
    facets: np.ndarray            # (F, 3) int, counterclockwise seen from outside
    volume: float

    def facet_normals(self) -> np.ndarray:
        v = self.vertices
        f = self.facets
        n = np.cross(v[f[:, 1]] - v[f[:, 0]], v[f[:, 2]] - v[f[:, 0]])
        return n / np.linalg.norm(n, axis=1, keepdims=True)

    def max_signed_distance(self, points: np.ndarray) -> float:
        """Largest signed distance of any point to any facet plane
        (<= 0 means all points inside or on the hull)."""
        pts = np.asarray(points, float)
        normals = self.facet_normals()
        offsets = np.einsum("ij,ij->i", normals, self.vertices[self.facets[:, 0]])
        d = pts @ normals.T - offsets
        return float(d.max())


def _initial_simplex(pts: np.ndarray, tol: float) -> list[int]:
    """Four affinely independent extreme points, or DegenerateInput."""
    lo = np.argmin(pts, axis=0)
    hi = np.argmax(pts, axis=0)
    cand = np.unique(np.concatenate([lo, hi]))
    if len(cand) < 2:
        raise DegenerateInput("all points coincide")
    # farthest pair among the axis extremes
    sub = pts[cand]
    d2 = ((sub[:, None, :] - sub[None, :, :]) ** 2).sum(-1)
    i, j = np.unravel_index(np.argmax(d2), d2.shape)
    a, b = int(cand[i]), int(cand[j])
    if d2[i, j] <= tol * tol:
        raise DegenerateInput("point set has near-zero extent")
    ab = pts[b] - pts[a]
    # farthest point from line a-b
    t = (pts - pts[a]) @ ab / (ab @ ab)
    perp = pts - pts[a] - np.outer(t, ab)
    c = int(np.argmax((perp * perp).sum(1)))
    if np.linalg.norm(perp[c]) <= tol:
        raise DegenerateInput("points are collinear")
    n = np.cross(ab, pts[c] - pts[a])
    n /= np.linalg.norm(n)
    # farthest point from plane a-b-c
    h = (pts - pts[a]) @ n
    d = int(np.argmax(np.abs(h)))
    if abs(h[d]) <= tol:
        raise DegenerateInput("points are coplanar (rank < 3)")
    return [a, b, c, d]


def convex_hull_3d(points) -> Hull3:
    """Quickhull convex hull of >= 4 points of full rank."""
    pts = np.asarray(points, float)
    if pts.ndim != 2 or pts.shape[1] != 3:
        raise DegenerateInput(f"expected (N, 3) points, got shape {pts.shape}")
    if not np.all(np.isfinite(pts)):
        raise DegenerateInput("points must be finite")
    n_pts = len(pts)
    if n_pts < 4:
        raise DegenerateInput(f"need >= 4 points, got {n_pts}")
    diag = float(np.linalg.norm(pts.max(0) - pts.min(0)))
    tol = 1e-10 * diag
    if diag == 0.0:
        raise DegenerateInput("all points coincide")

    simplex = _initial_simplex(pts, tol)
    interior = pts[simplex].mean(axis=0)

    faces: dict[int, tuple] = {}   # id -> (i, j, k, normal, offset)
    edge_face: dict[tuple, list] = {}
    next_id = 0

    def face_plane(i, j, k):
        nrm = np.cross(pts[j] - pts[i], pts[k] - pts[i])
        ln = np.linalg.norm(nrm)
        nrm = nrm / ln
        off = nrm @ pts[i]
        return nrm, off

    def add_face(i, j, k):
        nonlocal next_id
        nrm, off = face_plane(i, j, k)
        if nrm @ interior > off:   # flip to point away from the interior
            j, k = k, j
            nrm, off = face_plane(i, j, k)
        fid = next_id
        next_id += 1
        faces[fid] = (i, j, k, nrm, off)
        for e in ((i, j), (j, k), (k, i)):
            edge_face.setdefault(frozenset(e), []).append(fid)
        return fid

    def drop_face(fid):
        i, j, k, _, _ = faces.pop(fid)
        for e in ((i, j), (j, k), (k, i)):
            key = frozenset(e)
            edge_face[key].remove(fid)
            if not edge_face[key]:
                del edge_face[key]

    a, b, c, d = simplex
    for tri in ((a, b, c), (a, b, d), (a, c, d), (b, c, d)):
        add_face(*tri)

    # outside sets: each candidate point assigned to (at most) one face
    outside: dict[int, np.ndarray] = {}
    cand = np.setdiff1d(np.arange(n_pts), np.array(simplex))
    if len(cand):
        remaining = cand
        for fid, (_, _, _, nrm, off) in list(faces.items()):
            if not len(remaining):
                break
            above = pts[remaining] @ nrm - off > tol
            grabbed = remaining[above]
            if len(grabbed):
                outside[fid] = grabbed
                remaining = remaining[~above]

    pending = [fid for fid in outside]
    while pending:
        fid = pending.pop()
        if fid not in faces or fid not in outside:
            continue
        pool = outside.pop(fid)
        _, _, _, nrm, off = faces[fid]
        heights = pts[pool] @ nrm - off
        apex = int(pool[np.argmax(heights)])

        # faces visible from the apex: BFS across shared edges
        visible = {fid}
        stack = [fid]
        while stack:
            cur = stack.pop()
            i, j, k, _, _ = faces[cur]
            for e in ((i, j), (j, k), (k, i)):
                for nb in edge_face.get(frozenset(e), ()):
                    if nb in visible:
                        continue
                    _, _, _, nrm2, off2 = faces[nb]
                    if pts[apex] @ nrm2 - off2 > tol:
                        visible.add(nb)
                        stack.append(nb)

        horizon = []
        for vf in visible:
            i, j, k, _, _ = faces[vf]
            for e in ((i, j), (j, k), (k, i)):
                shared = edge_face[frozenset(e)]
                if all(f in visible for f in shared):
                    continue
                horizon.append(e)

        orphan_chunks = [pool]
        for vf in visible:
            if vf in outside:
                orphan_chunks.append(outside.pop(vf))
            drop_face(vf)
        orphans = np.concatenate(orphan_chunks)
        orphans = orphans[orphans != apex]

        new_ids = [add_face(e[0], e[1], apex) for e in horizon]
        remaining = orphans
        for nid in new_ids:
            if not len(remaining):
                break
            _, _, _, nrm3, off3 = faces[nid]
            above = pts[remaining] @ nrm3 - off3 > tol
            grabbed = remaining[above]
            if len(grabbed):
                outside[nid] = grabbed
                pending.append(nid)
                remaining = remaining[~above]

    used = sorted({v for (i, j, k, _, _) in faces.values() for v in (i, j, k)})
    remap = {v: idx for idx, v in enumerate(used)}
    vertices = pts[used]
    facets = np.array(
        [[remap[i], remap[j], remap[k]] for (i, j, k, _, _) in faces.values()],
        dtype=np.intp,
    )
    hull = Hull3(vertices=vertices, facets=facets, volume=0.0)
    hull.volume = hull_volume(hull)
    return hull


def hull_volume(hull: Hull3) -> float:
    """Enclosed volume as a fan of signed tetrahedra around the vertex
    centroid (interior for a convex hull, so every term is positive)."""
    v = hull.vertices
    f = hull.facets
    c = v.mean(axis=0)
    a = v[f[:, 0]] - c
    b = v[f[:, 1]] - c
    d = v[f[:, 2]] - c
    vol6 = np.einsum("ij,ij->i", a, np.cross(b, d))
    return float(np.abs(vol6).sum() / 6.0)


def _segments_intersect(p1, p2, p3, p4) -> bool:
    """Proper intersection test for open segments p1-p2 and p3-p4."""
    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    d1 = orient(p3, p4, p1)
    d2 = orient(p3, p4, p2)
    d3 = orient(p1, p2, p3)
    d4 = orient(p1, p2, p4)
    return ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0))


@dataclass
class Polygon2:
    """Simple closed polygon given by an ordered vertex list (no repeat of
    the first vertex at the end).  Self-intersection is rejected at
    construction."""

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, float)
        if v.ndim != 2 or v.shape[1] != 2:
            raise DegeneratePolygon(f"expected (M, 2) vertices, got shape {v.shape}")
        if len(v) < 3:
            raise DegeneratePolygon(f"polygon needs >= 3 vertices, got {len(v)}")
        if not np.all(np.isfinite(v)):
            raise DegeneratePolygon("vertices must be finite")
        self.vertices = v
        m = len(v)
        edges = [(v[i], v[(i + 1) % m]) for i in range(m)]
        for i in range(m):
            for j in range(i + 1, m):
                if j == i or (j + 1) % m == i or (i + 1) % m == j:
                    continue  # adjacent edges share a vertex
                if _segments_intersect(*edges[i], *edges[j]):
                    raise DegeneratePolygon("polygon is self-intersecting")

    def area(self) -> float:
        v = self.vertices
        x, y = v[:, 0], v[:, 1]
        return float(abs(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1))) / 2.0)

    def bbox(self) -> tuple[float, float, float, float]:
        v = self.vertices
        return float(v[:, 0].min()), float(v[:, 1].min()), float(v[:, 0].max()), float(v[:, 1].max())


def _raster_mask(poly: Polygon2, gx: np.ndarray, gy: np.ndarray) -> np.ndarray:
    """Even-odd inside mask of grid cell centers (gx, gy flattened grids)."""
    v = poly.vertices
    m = len(v)
    inside = np.zeros(gx.shape, dtype=bool)
    for i in range(m):
        x1, y1 = v[i]
        x2, y2 = v[(i + 1) % m]
        crosses = (y1 > gy) != (y2 > gy)
        if not crosses.any():
            continue
        with np.errstate(divide="ignore", invalid="ignore"):
            xi = x1 + (gy - y1) * (x2 - x1) / (y2 - y1)
        inside ^= crosses & (gx < xi)
    return inside


def polygon_iou(a: Polygon2, b: Polygon2, resolution: int = 1024) -> float:
    """Intersection-over-union of two polygons by rasterization over their
    joint bounding box.  Symmetric by construction (shared grid)."""
    if resolution < 64:
        raise ValueError(f"resolution must be >= 64, got {resolution}")
    if a.area() < 1e-12 or b.area() < 1e-12:
        raise DegeneratePolygon("polygon area below 1e-12 m^2")
    ax0, ay0, ax1, ay1 = a.bbox()
    bx0, by0, bx1, by1 = b.bbox()
    x0, y0 = min(ax0, bx0), min(ay0, by0)
    x1, y1 = max(ax1, bx1), max(ay1, by1)
    xs = x0 + (np.arange(resolution) + 0.5) * (x1 - x0) / resolution
    ys = y0 + (np.arange(resolution) + 0.5) * (y1 - y0) / resolution
    gx, gy = np.meshgrid(xs, ys)
    mask_a = _raster_mask(a, gx, gy)
    mask_b = _raster_mask(b, gx, gy)
    union = np.logical_or(mask_a, mask_b).sum()
    if union == 0:
        return 0.0
    inter = np.logical_and(mask_a, mask_b).sum()
    return float(inter) / float(union)


def polyline_length(points) -> float:
    """Total length of an ordered 2D polyline."""
    pts = np.asarray(points, float)
    if pts.ndim != 2 or len(pts) < 2:
        raise DegenerateInput("polyline needs >= 2 points")
    return float(np.hypot(*np.diff(pts, axis=0).T).sum())
