"""The quadric model of anti-de Sitter 3-space and its affine chart.

The ambient bilinear form has signature (2,2):

    b(x, y) = -x0 y0 - x1 y1 + x2 y2 + x3 y3.

The space is the projectivized quadric {b(x,x) = -1}; the affine chart
(x1/x0, x2/x0, x3/x0) maps it onto the interior of the one-sheeted
hyperboloid -c1^2 + c2^2 + c3^2 < 1.  The totally geodesic copy of the
hyperbolic plane sits at c1 = 0 as the open unit disc (the Klein model),
and the chart height over that disc is the coordinate c1 <= 0 for the
graph surfaces this package studies.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from . import hyp2

QUADRIC_TOL = 1e-12
CAUSAL_REL_TOL = 1e-10
CHART_TOL = 1e-12


class ChartMiss(ValueError):
    """The point lies on the plane at infinity of the affine chart (x0 = 0)."""


class NotTangent(ValueError):
    """The vector is not tangent to the quadric at the given point."""


class CoincidentPoints(ValueError):
    pass


class OutOfRange(ValueError):
    pass


class CausalType(Enum):
    SPACE_LIKE = "space-like"
    TIME_LIKE = "time-like"
    LIGHT_LIKE = "light-like"


def bilinear_form(x, y):
    """b(x,y) = -x0 y0 - x1 y1 + x2 y2 + x3 y3, broadcasting over leading axes."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    return (-x[..., 0]*y[..., 0] - x[..., 1]*y[..., 1]
            + x[..., 2]*y[..., 2] + x[..., 3]*y[..., 3])


class ProjectivePoint4:
    """Point of the quadric, stored as the representative with b(x,x) = -1.

    When x0 != 0 the representative is chosen with x0 > 0, which trivializes
    the double cover over the affine chart used throughout.
    """

    __slots__ = ("vec",)

    def __init__(self, coords):
        raw = np.asarray(coords, dtype=float)
        if raw.shape != (4,):
            raise ValueError("expected 4 homogeneous coordinates")
        q = bilinear_form(raw, raw)
        if q >= -1e-300:
            raise ValueError("representative must satisfy b(x,x) < 0")
        vec = raw/np.sqrt(-q)
        if abs(vec[0]) > CHART_TOL*np.abs(vec).max() and vec[0] < 0:
            vec = -vec
        self.vec = vec
        self.vec.setflags(write=False)

    @property
    def chart(self) -> "ChartPoint":
        return affine_chart(self)

    def __repr__(self):
        return "ProjectivePoint4({:.12g}, {:.12g}, {:.12g}, {:.12g})".format(*self.vec)


@dataclass(frozen=True)
class ChartPoint:
    """Affine-chart coordinates, strictly inside the one-sheeted hyperboloid."""

    c1: float
    c2: float
    c3: float

    def __post_init__(self):
        if chart_quadratic(self.as_array()) >= 1.0:
            raise ValueError("chart point lies outside the hyperboloid interior")

    def as_array(self):
        return np.array([self.c1, self.c2, self.c3])

    @property
    def on_disc(self) -> bool:
        return abs(self.c1) < 1e-12 and self.c2**2 + self.c3**2 < 1.0

    def lift(self):
        """Homogeneous lift (1, c1, c2, c3)."""
        return np.array([1.0, self.c1, self.c2, self.c3])


def chart_quadratic(c):
    """-c1^2 + c2^2 + c3^2; the boundary quadric is the level set = 1."""
    c = np.asarray(c, dtype=float)
    return -c[..., 0]**2 + c[..., 1]**2 + c[..., 2]**2


def affine_chart(p: ProjectivePoint4) -> ChartPoint:
    """Chart projection (x1/x0, x2/x0, x3/x0); fails on the x0 = 0 plane."""
    v = p.vec
    if abs(v[0]) <= CHART_TOL*np.abs(v).max():
        raise ChartMiss("point lies on the totally geodesic plane missing from the chart")
    return ChartPoint(v[1]/v[0], v[2]/v[0], v[3]/v[0])


def classify_value(q, scale: float) -> CausalType:
    tau = CAUSAL_REL_TOL*scale
    if q > tau:
        return CausalType.SPACE_LIKE
    if q < -tau:
        return CausalType.TIME_LIKE
    return CausalType.LIGHT_LIKE


def classify_vector(p: ProjectivePoint4, v) -> CausalType:
    """Causal type of a tangent vector at p, by the sign of b(v,v)."""
    v = np.asarray(v, dtype=float)
    vnorm2 = float((v**2).sum())
    if vnorm2 == 0.0:
        raise ValueError("zero vector has no causal type")
    tangency = bilinear_form(p.vec, v)
    if abs(tangency) > 1e-8*np.sqrt((p.vec**2).sum()*vnorm2):
        raise NotTangent(f"b(p, v) = {tangency:.3e} is not zero")
    return classify_value(float(bilinear_form(v, v)), vnorm2)


def classify_chart_line(a: ChartPoint, b: ChartPoint) -> CausalType:
    """Causal type of the geodesic through two chart points.

    Projectively, the line meets the boundary quadric {b = 0} where the
    restriction of b degenerates; the discriminant
        b(A,B)^2 - b(A,A) b(B,B)
    of the homogeneous lifts counts the real intersection points: two for a
    space-like geodesic, one (tangency) for light-like, none for time-like.
    """
    A = a.lift()
    B = b.lift()
    if np.abs(a.as_array() - b.as_array()).max() < 1e-14:
        raise CoincidentPoints("need two distinct chart points")
    # evaluate in the point+direction basis: algebraically the same
    # discriminant, but the subtraction happens once, before any quadratic
    # cancellation, so exact tangencies stay exactly zero
    D = B - A
    qa = bilinear_form(A, A)
    qd = bilinear_form(D, D)
    qad = bilinear_form(A, D)
    disc = qad**2 - qa*qd
    scale = float((A**2).sum()*(D**2).sum())
    return classify_value(float(disc), scale)


def chart_line_disc_crossing(a: ChartPoint, direction) -> np.ndarray | None:
    """Where the chart line a + s*direction meets the plane c1 = 0, or None.

    Returns the (c2, c3) coordinates of the crossing when the line is not
    parallel to the disc plane.
    """
    d = np.asarray(direction, dtype=float)
    if abs(d[0]) < 1e-14:
        return None
    s = -a.c1/d[0]
    pt = a.as_array() + s*d
    return pt[1:]


# ---------------------------------------------------------------------------
# the cylinder over the hyperbolic plane
# ---------------------------------------------------------------------------

def embed_h2(x) -> np.ndarray:
    """Embed hyperboloid-model points (x0,x1,x2) into the slice {x1 = 0}."""
    x = np.asarray(x, dtype=float)
    if isinstance(x, np.ndarray) and x.shape[-1] == 3:
        out = np.zeros(x.shape[:-1] + (4,))
        out[..., 0] = x[..., 0]
        out[..., 2] = x[..., 1]
        out[..., 3] = x[..., 2]
        return out
    raise ValueError("expected hyperboloid coordinates with last axis 3")


TIME_UNIT = np.array([0.0, -1.0, 0.0, 0.0])


def cylinder_map(x, t):
    """cos(t) x + sin(t) V for the unit normal V = (0,-1,0,0) to the slice.

    `x` is an H2Point or hyperboloid array; t in [0, pi/2).  The image lies
    on the quadric, and its chart point sits on the vertical line over the
    Klein image of x, at height -tan(t) sqrt(1 - |xbar|^2).
    """
    t = np.asarray(t, dtype=float)
    if np.any(t < 0.0) or np.any(t >= np.pi/2):
        raise OutOfRange("cylinder parameter must lie in [0, pi/2)")
    wrap = isinstance(x, hyp2.H2Point)
    xv = x.vec if wrap else np.asarray(x, dtype=float)
    emb = embed_h2(xv)
    out = np.cos(t)[..., None]*emb + np.sin(t)[..., None]*TIME_UNIT
    if wrap and out.ndim == 1:
        return ProjectivePoint4(out)
    return out


def height_to_chart(u_val, xbar):
    """Chart height of the graph point over xbar: -tan(u) sqrt(1 - |xbar|^2)."""
    u_val = np.asarray(u_val, dtype=float)
    xbar = np.asarray(xbar, dtype=float)
    s = (xbar**2).sum(axis=-1)
    return -np.tan(u_val)*np.sqrt(np.maximum(0.0, 1.0 - s))


def chart_to_height(cbar, xbar):
    """Inverse of height_to_chart: u = arctan(-cbar / sqrt(1 - |xbar|^2))."""
    cbar = np.asarray(cbar, dtype=float)
    xbar = np.asarray(xbar, dtype=float)
    s = (xbar**2).sum(axis=-1)
    return np.arctan(-cbar/np.sqrt(np.maximum(1e-300, 1.0 - s)))


# ---------------------------------------------------------------------------
# constructions used by the causal property tests
# ---------------------------------------------------------------------------

def random_chart_point(rng, c1_range=3.0) -> ChartPoint:
    """Uniform-ish sample of the hyperboloid interior with |c1| <= c1_range."""
    c1 = rng.uniform(-c1_range, c1_range)
    rmax = np.sqrt(1.0 + c1**2)
    r = rmax*np.sqrt(rng.uniform(0.0, 0.9999))
    phi = rng.uniform(0.0, 2*np.pi)
    return ChartPoint(c1, r*np.cos(phi), r*np.sin(phi))


def tangent_line_through_boundary(eta: float, phi: float, mix: float):
    """An exactly light-like chart line, tangent to the boundary quadric.

    The tangency point T = (sinh eta, cosh eta cos phi, cosh eta sin phi)
    satisfies -T1^2 + T2^2 + T3^2 = 1; directions d in its tangent plane
    with negative quadratic value give lines meeting the chart interior in
    the complement of T, hence light-like geodesics.  `mix` in (-1, 1)
    selects the direction within the time-like cone of the tangent plane.

    Returns (T, d).
    """
    T = np.array([np.sinh(eta), np.cosh(eta)*np.cos(phi), np.cosh(eta)*np.sin(phi)])
    # basis of the tangent plane {d : B3(T, d) = 0} of the quadratic form
    # B3(u,v) = -u1 v1 + u2 v2 + u3 v3
    e_ang = np.array([0.0, -np.sin(phi), np.cos(phi)])                # space-like
    e_time = np.array([np.cosh(eta), np.sinh(eta)*np.cos(phi), np.sinh(eta)*np.sin(phi)])
    # q3(e_time) = -cosh^2 + sinh^2 = -1 (time-like), B3(T, e_time) = 0
    d = e_time + mix*e_ang
    return T, d
