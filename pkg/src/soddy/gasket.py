"""Apollonian circle packings grown from a seed triple of curvatures.

Expansion never re-solves the quadratic: each new circle is the second root
shared with an existing quadruple (partner = 2*(sum of the other three) - k),
so no square root is taken and integer seeds keep integer curvatures.
Centers come from trilateration against the parent triple.  The finished
gasket is canonically ordered by (depth, curvature, center), which makes
generation a pure function of (seed, max_depth) and the SVG output
byte-reproducible.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .embedding import EmbeddedPoints, append_point
from .errors import (
    AmbiguousSolutionError,
    GeometryError,
    NoRealSolutionError,
    NoSolutionError,
    SeedError,
    ValidationError,
)
from .numeric import as_float
from .tangency import Curvatures, solve_missing_curvature, vieta_partner

#: Hard output-size guard on the expansion depth.
MAX_DEPTH = 12

_AUDIT_TOL = 1e-9


@dataclass(frozen=True)
class Circle:
    """One packed circle; ``parents`` are gasket indices of the tangent triple
    that spawned it (empty for the seed circles)."""

    center: tuple[float, float]
    radius: float
    curvature: float
    depth: int
    parents: tuple[int, ...]


@dataclass(frozen=True)
class Gasket:
    circles: tuple[Circle, ...]
    seed_curvatures: tuple[float, float, float]
    max_depth: int

    def curvatures(self) -> list[float]:
        return [c.curvature for c in self.circles]

    def enclosing(self) -> Circle | None:
        for c in self.circles:
            if c.radius < 0:
                return c
        return None


@dataclass(frozen=True)
class SvgOptions:
    width: int = 512
    stroke: str = "#1f2430"
    palette: tuple[str, ...] = (
        "#f4f1e8",
        "#bcd8e6",
        "#8fbcd4",
        "#679dc0",
        "#477ca6",
        "#2f5d87",
        "#1f4066",
    )


def _validate_seed(seed) -> tuple[float, float, float]:
    if len(seed) != 3:
        raise SeedError(f"seed needs exactly 3 curvatures, got {len(seed)}")
    try:
        ks = tuple(as_float(v) for v in seed)
    except ValidationError as exc:
        raise SeedError(str(exc)) from exc
    if any(k == 0.0 for k in ks):
        raise SeedError("zero curvature (a straight line) is not supported")
    if sum(1 for k in ks if k < 0) > 1:
        raise SeedError("at most one seed curvature may be negative")
    return ks


class _Builder:
    """Mutable working state during generation; frozen into a Gasket at the end."""

    def __init__(self, seed: tuple[float, float, float]):
        self.seed = seed
        self.centers: list[np.ndarray] = []
        self.radii: list[float] = []
        self.curvatures: list[float] = []
        self.depths: list[int] = []
        self.parents: list[tuple[int, ...]] = []
        self._grid: dict[tuple[int, int], list[int]] = {}
        radii = [1.0 / k for k in seed]
        self._cell = max(1e-9 * max(abs(r) for r in radii), 1e-300)

    def _key(self, center: np.ndarray) -> tuple[int, int]:
        return (math.floor(center[0] / self._cell), math.floor(center[1] / self._cell))

    def find_duplicate(self, center: np.ndarray, curvature: float) -> int | None:
        kx, ky = self._key(center)
        for ix in (kx - 1, kx, kx + 1):
            for iy in (ky - 1, ky, ky + 1):
                for idx in self._grid.get((ix, iy), ()):
                    if abs(self.curvatures[idx] - curvature) <= 1e-9 * abs(curvature) and (
                        np.hypot(*(self.centers[idx] - center)) <= self._cell
                    ):
                        return idx
        return None

    def add(
        self,
        center: np.ndarray,
        curvature: float,
        depth: int,
        parents: tuple[int, ...],
    ) -> int:
        idx = len(self.centers)
        self.centers.append(np.asarray(center, dtype=float))
        self.radii.append(1.0 / curvature)
        self.curvatures.append(curvature)
        self.depths.append(depth)
        self.parents.append(parents)
        self._grid.setdefault(self._key(center), []).append(idx)
        return idx

    def audit_residual(self, quad: tuple[int, int, int, int]) -> None:
        ks = [self.curvatures[i] for i in quad]
        s = sum(ks)
        res = s * s - 2.0 * sum(k * k for k in ks)
        scale = max(k * k for k in ks)
        if abs(res) > _AUDIT_TOL * scale:
            raise GeometryError(f"tangency residual {res:.3e} failed the audit")

    def trilaterate(
        self, anchors: tuple[int, ...], radius: float, away_from: int | None
    ) -> np.ndarray:
        pts = EmbeddedPoints(np.array([self.centers[i] for i in anchors]))
        sq = [(radius + self.radii[i]) ** 2 for i in anchors]
        ref = self.centers[away_from] if away_from is not None else None
        try:
            return append_point(pts, sq, prefer_away_from=ref)
        except (NoSolutionError, AmbiguousSolutionError) as exc:
            raise GeometryError(f"circle placement failed: {exc}") from exc

    def freeze(self, max_depth: int) -> Gasket:
        order = sorted(
            range(len(self.centers)),
            key=lambda i: (
                self.depths[i],
                self.curvatures[i],
                self.centers[i][0],
                self.centers[i][1],
            ),
        )
        remap = {old: new for new, old in enumerate(order)}
        circles = tuple(
            Circle(
                center=(float(self.centers[i][0]), float(self.centers[i][1])),
                radius=self.radii[i],
                curvature=self.curvatures[i],
                depth=self.depths[i],
                parents=tuple(sorted(remap[p] for p in self.parents[i])),
            )
            for i in order
        )
        return Gasket(circles=circles, seed_curvatures=self.seed, max_depth=max_depth)


def _build_initial(seed: tuple[float, float, float]) -> tuple[_Builder, tuple[int, int, int, int]]:
    ks = _validate_seed(seed)
    try:
        k3 = solve_missing_curvature(list(ks), 2)[0]
    except NoRealSolutionError as exc:
        raise SeedError(
            f"seed curvatures admit no tangent circle: {exc}", exit_code=2
        ) from exc
    b = _Builder(ks)
    r = [1.0 / k for k in ks]
    b.add(np.zeros(2), ks[0], 0, ())
    b.add(np.array([abs(r[0] + r[1]), 0.0]), ks[1], 0, ())
    c2 = b.trilaterate((0, 1), r[2], away_from=None)
    b.add(c2, ks[2], 0, ())
    c3 = b.trilaterate((0, 1, 2), 1.0 / k3, away_from=None)
    b.add(c3, k3, 0, (0, 1, 2))
    b.audit_residual((0, 1, 2, 3))
    return b, (0, 1, 2, 3)


def initial_configuration(seed) -> Gasket:
    """Place the three seed circles and the tangent circle they determine
    (the larger curvature root, i.e. the inner one)."""
    b, _ = _build_initial(tuple(seed))
    return b.freeze(0)


def generate(seed, max_depth: int) -> Gasket:
    """Breadth-first Apollonian expansion to the given depth.

    Each quadruple spawns the reflection partner of every member except the
    one it was itself created by; duplicates are removed by a center/curvature
    proximity check and every emitted quadruple is residual-audited.
    """
    if not 0 <= max_depth <= MAX_DEPTH:
        raise ValidationError(f"max_depth must be between 0 and {MAX_DEPTH}")
    b, quad0 = _build_initial(tuple(seed))
    queue: deque[tuple[tuple[int, int, int, int], int | None, int]] = deque()
    queue.append((quad0, None, 1))
    while queue:
        quad, skip, depth = queue.popleft()
        if depth > max_depth:
            continue
        kq = Curvatures(
            values=tuple(b.curvatures[i] for i in quad), n=2, mode="float"
        )
        for pos in range(4):
            if pos == skip:
                continue
            triple = tuple(quad[t] for t in range(4) if t != pos)
            k_new = vieta_partner(kq, pos)
            if abs(k_new) < 1e-12 * max(abs(v) for v in kq.values):
                raise GeometryError("expansion produced a zero-curvature circle")
            center = b.trilaterate(triple, 1.0 / k_new, away_from=quad[pos])
            if b.find_duplicate(center, k_new) is not None:
                continue
            idx = b.add(center, k_new, depth, triple)
            b.audit_residual((*triple, idx))
            queue.append(((*triple, idx), 3, depth + 1))
    return b.freeze(max_depth)


def _fmt(value: float) -> str:
    text = f"{value:.6f}"
    return "0.000000" if text == "-0.000000" else text


def render_svg(g: Gasket, options: SvgOptions = SvgOptions()) -> str:
    """Deterministic SVG 1.1 document: one circle element per packed circle,
    in canonical order, coordinates fixed at six decimals.  Negative-radius
    (enclosing) circles render as unfilled outlines."""
    if not g.circles:
        raise ValidationError("cannot render an empty gasket")
    xmin = min(c.center[0] - abs(c.radius) for c in g.circles)
    xmax = max(c.center[0] + abs(c.radius) for c in g.circles)
    ymin = min(c.center[1] - abs(c.radius) for c in g.circles)
    ymax = max(c.center[1] + abs(c.radius) for c in g.circles)
    pad = 0.02 * max(xmax - xmin, ymax - ymin)
    vx, vy = xmin - pad, ymin - pad
    vw, vh = (xmax - xmin) + 2 * pad, (ymax - ymin) + 2 * pad
    height = max(1, round(options.width * vh / vw))
    stroke_width = vw / options.width
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{options.width}" height="{height}" '
        f'viewBox="{_fmt(vx)} {_fmt(vy)} {_fmt(vw)} {_fmt(vh)}">',
    ]
    for c in g.circles:
        fill = "none" if c.radius < 0 else options.palette[c.depth % len(options.palette)]
        lines.append(
            f'  <circle cx="{_fmt(c.center[0])}" cy="{_fmt(c.center[1])}" '
            f'r="{_fmt(abs(c.radius))}" fill="{fill}" stroke="{options.stroke}" '
            f'stroke-width="{_fmt(stroke_width)}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def gasket_to_dict(g: Gasket) -> dict:
    """JSON-ready geometry export."""
    return {
        "seed": list(g.seed_curvatures),
        "max_depth": g.max_depth,
        "circles": [
            {
                "center": [c.center[0], c.center[1]],
                "radius": c.radius,
                "curvature": c.curvature,
                "depth": c.depth,
                "parents": list(c.parents),
            }
            for c in g.circles
        ],
    }
