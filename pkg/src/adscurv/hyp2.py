"""Hyperbolic plane primitives in the hyperboloid model.

Points live on the upper sheet {-x0^2 + x1^2 + x2^2 = -1, x0 > 0} of the
Minkowski quadric in R^{1,2}.  All array-level functions broadcast over
leading axes, so a single point is shape (3,) and a batch is (n, 3).

The Klein disc view (x1/x0, x2/x0) is the chart used by the rest of the
package; the Poincare disc appears only as an independent cross-check model.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

HYPERBOLOID_TOL = 1e-12
DEGENERACY_TOL = 1e-12


class DegenerateTriangle(ValueError):
    """Raised when side lengths violate the (strict) triangle inequalities."""


# ---------------------------------------------------------------------------
# array-level primitives
# ---------------------------------------------------------------------------

def minkowski(p, q):
    """Minkowski pairing -p0*q0 + p1*q1 + p2*q2, broadcasting."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    return -p[..., 0]*q[..., 0] + p[..., 1]*q[..., 1] + p[..., 2]*q[..., 2]


def normalize(raw):
    """Scale a future-pointing vector onto the hyperboloid sheet."""
    raw = np.asarray(raw, dtype=float)
    nrm = np.sqrt(np.maximum(-minkowski(raw, raw), 0.0))
    if np.any(nrm <= 0):
        raise ValueError("vector is not time-like; cannot normalize onto the hyperboloid")
    out = raw/nrm[..., None]
    return np.where(out[..., :1] > 0, out, -out)


def distance(p, q):
    """Hyperbolic distance arccosh(-<p,q>).

    Pairings are clamped at -1 before arccosh: rounding can push the pairing
    of near-equal points slightly above -1.
    """
    return np.arccosh(np.clip(-minkowski(p, q), 1.0, None))


def to_klein(p):
    """Central-projection disc coordinates (x1/x0, x2/x0)."""
    p = np.asarray(p, dtype=float)
    return p[..., 1:]/p[..., :1]


def from_klein(k):
    k = np.asarray(k, dtype=float)
    s = (k**2).sum(axis=-1, keepdims=True)
    if np.any(s >= 1.0):
        raise ValueError("Klein coordinates must lie in the open unit disc")
    x0 = 1.0/np.sqrt(1.0 - s)
    return np.concatenate([x0, x0*k], axis=-1)


def to_poincare(p):
    p = np.asarray(p, dtype=float)
    return p[..., 1:]/(1.0 + p[..., :1])


def from_poincare(w):
    w = np.asarray(w, dtype=float)
    s = (w**2).sum(axis=-1, keepdims=True)
    return np.concatenate([1.0 + s, 2*w], axis=-1)/(1.0 - s)


def from_polar(r, phi):
    """Point at hyperbolic distance r from the origin in direction phi."""
    r = np.asarray(r, dtype=float)
    phi = np.asarray(phi, dtype=float)
    r, phi = np.broadcast_arrays(r, phi)
    return np.stack([np.cosh(r), np.sinh(r)*np.cos(phi), np.sinh(r)*np.sin(phi)], axis=-1)


def poincare_distance(a, b):
    """Independent disc-model distance 2*artanh of the Moebius quotient.

    `a`, `b` are Poincare-disc points as complex numbers or (..., 2) arrays.
    Kept deliberately separate from `distance` as a cross-check formula.
    """
    a = np.asarray(a)
    b = np.asarray(b)
    if a.dtype != complex:
        a = a[..., 0] + 1j*a[..., 1]
    if b.dtype != complex:
        b = b[..., 0] + 1j*b[..., 1]
    m = np.abs(a - b)/np.abs(1.0 - np.conj(a)*b)
    return 2.0*np.arctanh(m)


def geodesic_direction(p, q):
    """Unit tangent at p pointing toward q (requires p != q)."""
    d = distance(p, q)
    if np.any(d < 1e-15):
        raise ValueError("coincident points have no geodesic direction")
    w = (q - np.cosh(d)[..., None]*p)/np.sinh(d)[..., None]
    return w


def geodesic_point(p, q, lam):
    """Point at parameter lam in [0,1] on the geodesic from p to q."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    lam = np.asarray(lam, dtype=float)
    d = distance(p, q)
    sd = np.sinh(d)
    small = sd < 1e-15
    if np.any(small):
        sd = np.where(small, 1.0, sd)
    out = (np.sinh((1.0 - lam)*d)[..., None]*p + np.sinh(lam*d)[..., None]*q)/sd[..., None]
    if np.any(small):
        out = np.where(small[..., None], p, out)
    return out


def midpoint(p, q):
    return normalize(np.asarray(p, dtype=float) + np.asarray(q, dtype=float))


def flow(p, v, t):
    """Geodesic flow: point at arclength t from p along unit tangent v."""
    t = np.asarray(t, dtype=float)
    return np.cosh(t)[..., None]*p + np.sinh(t)[..., None]*v


def minkowski_cross(u, v):
    """Minkowski-orthogonal complement of span(u, v) (index-raised cross product)."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    return np.stack([
        -(u[..., 1]*v[..., 2] - u[..., 2]*v[..., 1]),
        u[..., 2]*v[..., 0] - u[..., 0]*v[..., 2],
        u[..., 0]*v[..., 1] - u[..., 1]*v[..., 0],
    ], axis=-1)


def side_of_line(x, p, q):
    """Signed pairing of x against the oriented geodesic line through p, q."""
    n = minkowski_cross(p, q)
    return minkowski(x, n)


def place_third_point(x, y, p, q, side=1.0):
    """Place z with d(x,z)=p, d(y,z)=q on the given side of the line xy.

    side > 0 puts z on the positive side of `side_of_line(., x, y)`.
    Raises DegenerateTriangle when no such point exists.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    c = minkowski(x, y)                      # -cosh d(x,y)
    # z = a x + b y + g n solving <z,x> = -cosh p, <z,y> = -cosh q
    denom = c**2 - 1.0                       # sinh^2 d(x,y)
    a = -(np.cosh(p) + c*np.cosh(q))/denom
    b = -(np.cosh(q) + c*np.cosh(p))/denom
    base = a[..., None]*x + b[..., None]*y
    rem = -1.0 - minkowski(base, base)
    if np.any(rem < -1e-9):
        raise DegenerateTriangle("triangle inequality violated in placement")
    n = minkowski_cross(x, y)
    n = n/np.sqrt(np.maximum(minkowski(n, n), 1e-300))[..., None]
    g = np.sign(side)*np.sqrt(np.maximum(rem, 0.0))
    return base + g[..., None]*n


# ---------------------------------------------------------------------------
# point / polyline wrappers
# ---------------------------------------------------------------------------

class H2Point:
    """A point of the hyperbolic plane, renormalized on construction."""

    __slots__ = ("vec",)

    def __init__(self, x0, x1=None, x2=None):
        if x1 is None:
            raw = np.asarray(x0, dtype=float)
        else:
            raw = np.array([x0, x1, x2], dtype=float)
        self.vec = normalize(raw)
        self.vec.setflags(write=False)

    @classmethod
    def from_klein(cls, k1, k2):
        return cls(from_klein(np.array([k1, k2])))

    @classmethod
    def origin(cls):
        return cls(np.array([1.0, 0.0, 0.0]))

    @property
    def klein(self):
        return to_klein(self.vec)

    @property
    def poincare(self):
        return to_poincare(self.vec)

    def distance_to(self, other: "H2Point") -> float:
        return float(distance(self.vec, other.vec))

    def __repr__(self):
        return f"H2Point({self.vec[0]:.12g}, {self.vec[1]:.12g}, {self.vec[2]:.12g})"


def h2_distance(p, q) -> float:
    """Distance between two points given as H2Point or hyperboloid triples."""
    pv = p.vec if isinstance(p, H2Point) else np.asarray(p, dtype=float)
    qv = q.vec if isinstance(q, H2Point) else np.asarray(q, dtype=float)
    return float(distance(pv, qv))


class H2Polyline:
    """Piecewise-geodesic curve through an ordered list of points.

    Each segment carries the constant-speed parameterization of the geodesic
    between consecutive points.
    """

    def __init__(self, points):
        vecs = []
        for p in points:
            vecs.append(p.vec if isinstance(p, H2Point) else normalize(np.asarray(p, dtype=float)))
        self.points = np.array(vecs)
        if len(self.points) < 2:
            raise ValueError("a polyline needs at least two points")
        self.segment_lengths = distance(self.points[:-1], self.points[1:])
        if np.any(self.segment_lengths < 1e-14):
            raise ValueError("consecutive polyline points must be distinct")

    @property
    def length(self) -> float:
        return float(self.segment_lengths.sum())

    def subdivide(self, max_spacing: float) -> "H2Polyline":
        """Insert geodesic points so no segment exceeds max_spacing."""
        out = [self.points[0]]
        for a, b, L in zip(self.points[:-1], self.points[1:], self.segment_lengths):
            k = max(1, int(np.ceil(L/max_spacing)))
            for j in range(1, k + 1):
                out.append(geodesic_point(a, b, j/k))
        return H2Polyline(out)

    def sample(self, lam):
        """Points at global arclength fractions lam in [0, 1]."""
        lam = np.atleast_1d(np.asarray(lam, dtype=float))
        cum = np.concatenate([[0.0], np.cumsum(self.segment_lengths)])
        s = lam*cum[-1]
        idx = np.clip(np.searchsorted(cum, s, side="right") - 1, 0, len(self.segment_lengths) - 1)
        local = (s - cum[idx])/self.segment_lengths[idx]
        return geodesic_point(self.points[idx], self.points[idx + 1], local)


# ---------------------------------------------------------------------------
# triangles
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TriangleShape:
    """Hyperbolic triangle with side a opposite angle alpha, etc."""

    a: float
    b: float
    c: float
    alpha: float
    beta: float
    gamma: float

    def cosine_law_residuals(self):
        """Cyclic residuals cos(alpha) sinh(b) sinh(c) - (cosh b cosh c - cosh a)."""
        res = []
        for (s1, s2, s3, ang) in ((self.a, self.b, self.c, self.alpha),
                                  (self.b, self.c, self.a, self.beta),
                                  (self.c, self.a, self.b, self.gamma)):
            res.append(np.cos(ang)*np.sinh(s2)*np.sinh(s3)
                       - (np.cosh(s2)*np.cosh(s3) - np.cosh(s1)))
        return np.array(res)

    @property
    def angle_sum(self) -> float:
        return self.alpha + self.beta + self.gamma

    @property
    def excess(self) -> float:
        """alpha + beta + gamma - pi; negative for genuine hyperbolic triangles."""
        return self.angle_sum - np.pi


def _check_sides(a, b, c):
    sides = np.array([a, b, c], dtype=float)
    if np.any(sides < DEGENERACY_TOL):
        raise DegenerateTriangle(f"side too short: {sides.min():.3e}")
    perim = sides.sum()
    slack = min(a + b - c, b + c - a, c + a - b)
    if slack < DEGENERACY_TOL*perim:
        raise DegenerateTriangle(f"triangle inequality slack {slack:.3e} below threshold")


def angle_from_sides(opp, s1, s2) -> float:
    """Angle opposite `opp` in the triangle with sides (opp, s1, s2)."""
    num = np.cosh(s1)*np.cosh(s2) - np.cosh(opp)
    den = np.sinh(s1)*np.sinh(s2)
    return float(np.arccos(np.clip(num/den, -1.0, 1.0)))


def comparison_triangle(d01: float, d02: float, d12: float) -> TriangleShape:
    """Hyperbolic triangle with the given vertex distances.

    Vertex 0 carries angle alpha (between the sides of lengths d01 and d02),
    vertex 1 beta, vertex 2 gamma; the returned shape satisfies the cosine
    law to float precision and is unique up to isometry.
    """
    _check_sides(d01, d02, d12)
    a, b, c = d12, d02, d01           # side opposite each vertex
    alpha = angle_from_sides(a, b, c)
    beta = angle_from_sides(b, c, a)
    gamma = angle_from_sides(c, a, b)
    return TriangleShape(a=a, b=b, c=c, alpha=alpha, beta=beta, gamma=gamma)


def triangle_area(t: TriangleShape) -> float:
    """Angle deficit pi - (alpha + beta + gamma) = -excess."""
    return float(np.pi - t.angle_sum)


def comparison_angle(d_xy: float, d_xz: float, d_yz: float) -> float:
    """Angle at the x-vertex of the comparison triangle.

    Unlike `comparison_triangle` this accepts boundary configurations:
    a collinear triple (d_yz = d_xy + d_xz) returns pi and coincident far
    vertices (d_yz = 0) return 0.
    """
    if d_xy < DEGENERACY_TOL or d_xz < DEGENERACY_TOL:
        raise DegenerateTriangle("comparison angle needs two nontrivial sides at the vertex")
    num = np.cosh(d_xy)*np.cosh(d_xz) - np.cosh(d_yz)
    den = np.sinh(d_xy)*np.sinh(d_xz)
    cosv = num/den
    slack_tol = 1e-9*max(1.0, np.cosh(d_yz)/den)
    if cosv < -1.0 - slack_tol or cosv > 1.0 + slack_tol:
        raise DegenerateTriangle(f"side lengths violate the triangle inequality (cos = {cosv:.3e})")
    return float(np.arccos(np.clip(cosv, -1.0, 1.0)))


def isosceles_chord(x, theta):
    """Chord of the isosceles wedge: legs x, apex angle theta.

    Uses sinh(l/2) = sinh(x) sin(theta/2); for x <= eps this gives the bound
    l <= sinh(eps) * theta.
    """
    x = np.asarray(x, dtype=float)
    theta = np.asarray(theta, dtype=float)
    return 2.0*np.arcsinh(np.sinh(x)*np.sin(theta/2.0))


def sides_from_angles(alpha: float, beta: float, gamma: float) -> tuple:
    """Dual cosine law: recover side lengths from the three angles."""
    if alpha + beta + gamma >= np.pi:
        raise DegenerateTriangle("angle sum must be below pi")
    def side(A, B, C):
        return np.arccosh((np.cos(A) + np.cos(B)*np.cos(C))/(np.sin(B)*np.sin(C)))
    return (float(side(alpha, beta, gamma)),
            float(side(beta, gamma, alpha)),
            float(side(gamma, alpha, beta)))
