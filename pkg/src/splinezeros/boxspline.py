"""Box splines over integer vector configurations in R^1 and R^2:
zonotope supports, semi-integral interior points, exact point evaluation by
fiber volumes, unimodularity, and the collocation-style matrix A_X whose
invertibility is under test.

Normalization: B_X is the density of the pushforward of the uniform measure
on the unit cube [0,1]^m under t -> X t. Writing t = W x + V u with X W = I
and X V = 0, the change of variables gives

    B_X(x) = |det [W V]| * vol_(m-s){ u : W x + V u in [0,1]^m }.

The fiber is a point (m = s), an interval (m - s = 1), or a convex polygon
(m - s = 2); its measure is computed exactly with rational arithmetic. The
all-ones univariate family is additionally evaluable at any length through
the cardinal B-spline (the two routes agree where both apply).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .bspline import cardinal_bspline
from .errors import (
    CapabilityError,
    DimensionError,
    FormatError,
    RankDeficiencyError,
)
from .linalg import (
    IntegerMatrix,
    RationalMatrix,
    lattice_basis,
    lattice_determinant,
    mat_determinant,
)
from .rational import as_rational, format_rational
from .spline import spline_eval


@dataclass(frozen=True)
class VectorConfig:
    """m non-zero integer vectors spanning R^s, s in {1, 2}."""

    dim: int
    vectors: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "vectors",
            tuple(tuple(int(c) for c in v) for v in self.vectors),
        )
        if self.dim not in (1, 2):
            raise DimensionError(f"ambient dimension must be 1 or 2, got {self.dim}")
        if len(self.vectors) < self.dim:
            raise RankDeficiencyError("need at least s vectors")
        for v in self.vectors:
            if len(v) != self.dim:
                raise DimensionError(f"vector {v} has wrong dimension")
            if all(c == 0 for c in v):
                raise RankDeficiencyError("zero vectors are not allowed")
        if not _spans(self.dim, self.vectors):
            raise RankDeficiencyError("vectors do not span the ambient space")

    @property
    def count(self) -> int:
        return len(self.vectors)

    @property
    def box_degree(self) -> int:
        """Degree of B_X: m - s."""
        return self.count - self.dim

    def vector_sum(self) -> tuple[int, ...]:
        return tuple(sum(v[i] for v in self.vectors) for i in range(self.dim))

    def as_matrix(self) -> IntegerMatrix:
        """X as an s x m matrix (vectors as columns)."""
        return IntegerMatrix.from_rows(
            [[v[i] for v in self.vectors] for i in range(self.dim)]
        )

    def __str__(self) -> str:
        return ";".join(",".join(str(c) for c in v) for v in self.vectors)


def _spans(dim: int, vectors) -> bool:
    if dim == 1:
        return any(v[0] != 0 for v in vectors)
    for a, b in itertools.combinations(vectors, 2):
        if a[0] * b[1] - a[1] * b[0] != 0:
            return True
    return False


def parse_vector_config(text: str) -> VectorConfig:
    """Parse "1,0;1,1;0,1" (semicolon-separated integer vectors)."""
    chunks = [chunk.strip() for chunk in text.strip().split(";") if chunk.strip()]
    if not chunks:
        raise FormatError("empty vector configuration")
    vectors = []
    for chunk in chunks:
        try:
            vectors.append(tuple(int(c.strip()) for c in chunk.split(",")))
        except ValueError:
            raise FormatError(f"malformed vector {chunk!r}") from None
    dims = {len(v) for v in vectors}
    if len(dims) != 1:
        raise FormatError("vectors have mixed dimensions")
    return VectorConfig(dims.pop(), tuple(vectors))


# -- zonotope ---------------------------------------------------------------------


@dataclass(frozen=True)
class Zonotope:
    """Support polytope: a segment (dim 1) or a counterclockwise convex
    polygon with strict turns (dim 2); vertices are exact rationals."""

    dim: int
    vertices: tuple[tuple[Fraction, ...], ...]


def _cross(o, a, b) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> list[tuple[Fraction, Fraction]]:
    """Monotone-chain hull, collinear points dropped (strict turning)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def zonotope_support(config: VectorConfig) -> Zonotope:
    """Minkowski sum of the segments [0, a_i], built by iterated sum +
    hull."""
    if config.dim == 1:
        lo = sum(min(0, v[0]) for v in config.vectors)
        hi = sum(max(0, v[0]) for v in config.vectors)
        return Zonotope(1, ((Fraction(lo),), (Fraction(hi),)))
    points: list[tuple[Fraction, Fraction]] = [(Fraction(0), Fraction(0))]
    for v in config.vectors:
        shifted = [(p[0] + v[0], p[1] + v[1]) for p in points]
        points = convex_hull(points + shifted)
    return Zonotope(2, tuple(points))


def point_strictly_inside(zonotope: Zonotope, point) -> bool:
    pt = tuple(as_rational(c) for c in point)
    if zonotope.dim == 1:
        return zonotope.vertices[0][0] < pt[0] < zonotope.vertices[1][0]
    verts = zonotope.vertices
    for a, b in zip(verts, verts[1:] + verts[:1]):
        if _cross(a, b, pt) <= 0:
            return False
    return True


# -- semi-integral interior points --------------------------------------------------


@dataclass(frozen=True)
class Omega:
    """Points of half the lattice generated by X lying strictly inside the
    zonotope, sorted lexicographically. ``proper_sublattice`` flags
    configurations whose generated lattice is smaller than Z^s (the
    half-lattice reading then matters; see module notes)."""

    points: tuple[tuple[Fraction, ...], ...]
    proper_sublattice: bool

    def __len__(self) -> int:
        return len(self.points)


def semi_integral_interior_points(config: VectorConfig) -> Omega:
    basis = lattice_basis(config.vectors)
    proper = lattice_determinant(basis) > 1
    zono = zonotope_support(config)

    if config.dim == 1:
        step = Fraction(basis.get(0, 0), 2)
        lo, hi = zono.vertices[0][0], zono.vertices[1][0]
        k_lo = math.floor(lo / step) + 1
        k_hi = math.ceil(hi / step) - 1
        pts = tuple((k * step,) for k in range(k_lo, k_hi + 1)
                    if lo < k * step < hi)
        return Omega(pts, proper)

    half = [
        (Fraction(basis.get(0, 0), 2), Fraction(basis.get(1, 0), 2)),
        (Fraction(basis.get(0, 1), 2), Fraction(basis.get(1, 1), 2)),
    ]
    det = half[0][0] * half[1][1] - half[0][1] * half[1][0]
    xs = [v[0] for v in zono.vertices]
    ys = [v[1] for v in zono.vertices]
    corners = [(x, y) for x in (min(xs), max(xs)) for y in (min(ys), max(ys))]
    # invert the half-basis to bound the integer coefficients over the bbox
    k1s, k2s = [], []
    for cx, cy in corners:
        k1s.append((cx * half[1][1] - cy * half[1][0]) / det)
        k2s.append((-cx * half[0][1] + cy * half[0][0]) / det)
    pts = []
    for k1 in range(math.floor(min(k1s)), math.ceil(max(k1s)) + 1):
        for k2 in range(math.floor(min(k2s)), math.ceil(max(k2s)) + 1):
            q = (k1 * half[0][0] + k2 * half[1][0],
                 k1 * half[0][1] + k2 * half[1][1])
            if point_strictly_inside(zono, q):
                pts.append(q)
    pts.sort()
    return Omega(tuple(pts), proper)


# -- fiber-volume evaluation ---------------------------------------------------------


def _independent_columns(config: VectorConfig, strategy: str) -> list[int]:
    order = range(config.count) if strategy == "first" else \
        range(config.count - 1, -1, -1)
    cols = [tuple(config.vectors[j]) for j in range(config.count)]
    chosen: list[int] = []
    for j in order:
        if not chosen:
            if any(c != 0 for c in cols[j]):
                chosen.append(j)
                if config.dim == 1:
                    break
        else:
            a, b = cols[chosen[0]], cols[j]
            if a[0] * b[1] - a[1] * b[0] != 0:
                chosen.append(j)
                break
    if len(chosen) != config.dim:  # pragma: no cover - guarded by VectorConfig
        raise RankDeficiencyError("could not find independent columns")
    return sorted(chosen)


def _integer_primitive(column: list[Fraction]) -> list[int]:
    den = 1
    for c in column:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in column]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    return [v // g for v in ints]


@lru_cache(maxsize=None)
def _fiber_data(config: VectorConfig, strategy: str):
    """Right inverse W (m x s), integer kernel basis V (m x (m-s)), and the
    Jacobian factor |det [W V]|."""
    s, m = config.dim, config.count
    pivots = _independent_columns(config, strategy)
    sub = [[Fraction(config.vectors[j][i]) for j in pivots] for i in range(s)]
    if s == 1:
        inv = [[Fraction(1) / sub[0][0]]]
    else:
        det = sub[0][0] * sub[1][1] - sub[0][1] * sub[1][0]
        inv = [[sub[1][1] / det, -sub[0][1] / det],
               [-sub[1][0] / det, sub[0][0] / det]]
    w_rows = [[Fraction(0)] * s for _ in range(m)]
    for k, j in enumerate(pivots):
        w_rows[j] = list(inv[k])
    kernel: list[list[int]] = []
    for free in range(m):
        if free in pivots:
            continue
        col = [Fraction(0)] * m
        col[free] = Fraction(1)
        rhs = [Fraction(config.vectors[free][i]) for i in range(s)]
        for k, j in enumerate(pivots):
            col[j] = -sum(inv[k][i] * rhs[i] for i in range(s))
        kernel.append(_integer_primitive(col))
    square = [w_rows[i] + [Fraction(kernel_col[i]) for kernel_col in kernel]
              for i in range(m)]
    factor = abs(mat_determinant(RationalMatrix.from_rows(square)))
    return tuple(tuple(r) for r in w_rows), tuple(tuple(c) for c in kernel), factor


def _clip_half_plane(polygon, coeff, offset):
    """Keep {u : offset + coeff . u >= 0} of a convex polygon
    (Sutherland-Hodgman step, exact)."""
    if not polygon:
        return []
    def value(p):
        return offset + coeff[0] * p[0] + coeff[1] * p[1]
    out = []
    for current, following in zip(polygon, polygon[1:] + polygon[:1]):
        vc, vf = value(current), value(following)
        if vc >= 0:
            out.append(current)
            if vf < 0:
                t = vc / (vc - vf)
                out.append((current[0] + t * (following[0] - current[0]),
                            current[1] + t * (following[1] - current[1])))
        elif vf >= 0:
            t = vc / (vc - vf)
            out.append((current[0] + t * (following[0] - current[0]),
                        current[1] + t * (following[1] - current[1])))
    return out


def _polygon_area(polygon) -> Fraction:
    if len(polygon) < 3:
        return Fraction(0)
    acc = Fraction(0)
    for a, b in zip(polygon, polygon[1:] + polygon[:1]):
        acc += a[0] * b[1] - a[1] * b[0]
    return abs(acc) / 2


def box_spline_eval(config: VectorConfig, point: Sequence, *,
                    method: str = "auto", strategy: str = "first") -> Fraction:
    """Exact B_X at a rational point.

    Fiber volumes cover m - s <= 2; the all-ones univariate family delegates
    to the cardinal B-spline beyond that (method="auto"). method="fiber" or
    "cardinal" forces a route. On the support boundary the m = s indicator
    uses the half-open box convention; for m - s >= 1 the function is
    continuous wherever its slab data is nondegenerate, and degenerate slabs
    (kernel rows that vanish) reuse the half-open convention."""
    pt = tuple(as_rational(c) for c in point)
    if len(pt) != config.dim:
        raise DimensionError(f"point dimension {len(pt)} != {config.dim}")
    deg = config.box_degree
    is_all_ones = config.dim == 1 and all(v == (1,) for v in config.vectors)
    if method not in ("auto", "fiber", "cardinal"):
        raise CapabilityError(f"unknown method {method!r}")
    if method == "cardinal" or (method == "auto" and deg > 2):
        if not is_all_ones:
            raise CapabilityError(
                "degree m - s > 2 is only evaluable for the all-ones "
                "univariate family (cardinal route)"
            )
        return spline_eval(cardinal_bspline(deg).spline, pt[0])
    if deg > 2:
        raise CapabilityError(f"fiber route limited to m - s <= 2, got {deg}")

    w_rows, kernel, factor = _fiber_data(config, strategy)
    w = [sum(w_rows[i][k] * pt[k] for k in range(config.dim))
         for i in range(config.count)]

    if deg == 0:
        inside = all(0 <= wi < 1 for wi in w)
        return factor if inside else Fraction(0)

    if deg == 1:
        lo, hi = None, None
        for i, wi in enumerate(w):
            vi = kernel[0][i]
            if vi == 0:
                if not 0 <= wi < 1:
                    return Fraction(0)
                continue
            bound_a = -wi / vi
            bound_b = (1 - wi) / vi
            if bound_a > bound_b:
                bound_a, bound_b = bound_b, bound_a
            lo = bound_a if lo is None else max(lo, bound_a)
            hi = bound_b if hi is None else min(hi, bound_b)
        if lo is None or hi is None or hi <= lo:
            return Fraction(0)
        return factor * (hi - lo)

    # deg == 2: the fiber is a convex polygon in the u-plane
    rows = [(kernel[0][i], kernel[1][i]) for i in range(config.count)]
    constraints = []
    for i, row in enumerate(rows):
        if row == (0, 0):
            if not 0 <= w[i] < 1:
                return Fraction(0)
        else:
            constraints.append((row, w[i]))
    seed = None
    for (ra, wa), (rb, wb) in itertools.combinations(constraints, 2):
        det = ra[0] * rb[1] - ra[1] * rb[0]
        if det == 0:
            continue
        corners = []
        for ta, tb in ((0, 0), (1, 0), (1, 1), (0, 1)):
            rhs = (ta - wa, tb - wb)
            u = ((rhs[0] * rb[1] - rhs[1] * ra[1]) / det,
                 (-rhs[0] * rb[0] + rhs[1] * ra[0]) / det)
            corners.append(u)
        seed = corners
        seed_pair = ((ra, wa), (rb, wb))
        break
    if seed is None:  # pragma: no cover - kernel has rank m-s
        raise CapabilityError("degenerate kernel rows")
    polygon = seed
    for row, wi in constraints:
        if (row, wi) in seed_pair:
            continue
        polygon = _clip_half_plane(polygon, row, wi)
        polygon = _clip_half_plane(polygon, (-row[0], -row[1]), 1 - wi)
        if not polygon:
            return Fraction(0)
    return factor * _polygon_area(polygon)


# -- unimodularity and the conjecture matrix ----------------------------------------


@dataclass(frozen=True)
class UnimodularityReport:
    unimodular: bool
    witness_indices: tuple[int, ...] | None
    witness_det: int | None


def unimodular_check(config: VectorConfig) -> UnimodularityReport:
    """True iff every s x s minor of X has determinant in {-1, 0, 1}; the
    first offending minor is returned as a witness."""
    s = config.dim
    for idx in itertools.combinations(range(config.count), s):
        if s == 1:
            det = config.vectors[idx[0]][0]
        else:
            a, b = config.vectors[idx[0]], config.vectors[idx[1]]
            det = a[0] * b[1] - a[1] * b[0]
        if det not in (-1, 0, 1):
            return UnimodularityReport(False, idx, det)
    return UnimodularityReport(True, None, None)


def conjecture_matrix(config: VectorConfig) -> RationalMatrix:
    """A_X with entries B_X(sum(X) + w_i - 2 w_j) over the semi-integral
    interior points, lexicographically ordered."""
    omega = semi_integral_interior_points(config)
    total = config.vector_sum()
    n = len(omega)
    entries: list[Fraction] = []
    for wi in omega.points:
        for wj in omega.points:
            arg = tuple(total[k] + wi[k] - 2 * wj[k] for k in range(config.dim))
            entries.append(box_spline_eval(config, arg))
    return RationalMatrix(n, n, tuple(entries))


@dataclass(frozen=True)
class ConjectureVerdict:
    config: VectorConfig
    unimodular: bool
    omega: Omega
    matrix: RationalMatrix
    determinant: Fraction
    invertible: bool
    vacuous: bool  # empty Omega: 0x0 matrix, determinant 1 by convention


def conjecture_verdict(config: VectorConfig) -> ConjectureVerdict:
    omega = semi_integral_interior_points(config)
    matrix = conjecture_matrix(config)
    det = mat_determinant(matrix)
    return ConjectureVerdict(
        config=config,
        unimodular=unimodular_check(config).unimodular,
        omega=omega,
        matrix=matrix,
        determinant=det,
        invertible=(det != 0),
        vacuous=(len(omega) == 0),
    )


def format_matrix(matrix: RationalMatrix) -> str:
    """Plain-text matrix with aligned columns of canonical rationals."""
    if matrix.rows == 0:
        return "(empty 0x0 matrix)"
    cells = [[format_rational(matrix.get(i, j)) for j in range(matrix.cols)]
             for i in range(matrix.rows)]
    widths = [max(len(cells[i][j]) for i in range(matrix.rows))
              for j in range(matrix.cols)]
    lines = ["[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]"
             for row in cells]
    return "\n".join(lines)
