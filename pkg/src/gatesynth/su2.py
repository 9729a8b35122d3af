"""Exact SU(2) arithmetic on unit quaternions.

A unit-determinant single-qubit gate

    U = [[ a + ib,  c + id],
         [-c + id,  a - ib]],      a^2 + b^2 + c^2 + d^2 = 1

is stored as the real 4-vector q = (a, b, c, d).  The sign of q is
significant: q and -q are distinct group elements, which matters because the
gate conventions used throughout this package are

    H = RY(pi/2) RZ(pi),   T = RZ(pi/4),   S = T^2,

all unit determinant, so that H^2 = T^8 = -1 rather than +1.

Axis convention implied by the matrix layout above: the vector part
(b, c, d) multiplies (sigma_z, sigma_y, sigma_x) respectively, i.e. the
standard rotation quaternion (w, x, y, z) is (a, -d, -c, -b).
"""

from __future__ import annotations

import math
from typing import Iterable, NamedTuple, Sequence

import numpy as np

TWO_PI = 2.0 * math.pi

# renormalize whenever the squared norm drifts further than this from 1
NORM_TOL = 1e-12


class Quaternion(NamedTuple):
    a: float
    b: float
    c: float
    d: float

    def norm(self) -> float:
        return math.sqrt(self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d)

    def normalized(self) -> "Quaternion":
        n = self.norm()
        return Quaternion(self.a / n, self.b / n, self.c / n, self.d / n)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def matrix(self) -> np.ndarray:
        """The 2x2 complex matrix this quaternion encodes."""
        a, b, c, d = self
        return np.array(
            [[complex(a, b), complex(c, d)], [complex(-c, d), complex(a, -b)]],
            dtype=complex,
        )

    @classmethod
    def from_matrix(cls, u: np.ndarray) -> "Quaternion":
        return cls(float(u[0, 0].real), float(u[0, 0].imag), float(u[0, 1].real), float(u[0, 1].imag))


class BlochPoint(NamedTuple):
    """Pure single-qubit state cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>."""

    theta: float  # polar angle in [0, pi]
    phi: float  # azimuth in [0, 2*pi)


class GateLabel(NamedTuple):
    kind: str  # one of "I", "H", "S", "T", "RZ", "RY"
    angle: float = 0.0  # radians; only meaningful for RZ / RY


IDENTITY = Quaternion(1.0, 0.0, 0.0, 0.0)

_FIXED_KINDS = ("I", "H", "S", "T")

_SQRT_HALF = math.sqrt(0.5)


def _guard(a: float, b: float, c: float, d: float) -> Quaternion:
    """Renormalize only when the norm has drifted measurably."""
    n2 = a * a + b * b + c * c + d * d
    if abs(n2 - 1.0) > NORM_TOL:
        n = math.sqrt(n2)
        return Quaternion(a / n, b / n, c / n, d / n)
    return Quaternion(a, b, c, d)


def rz_quaternion(beta: float) -> Quaternion:
    """RZ(beta) = diag(e^{-i beta/2}, e^{i beta/2})."""
    h = 0.5 * beta
    return Quaternion(math.cos(h), -math.sin(h), 0.0, 0.0)


def ry_quaternion(gamma: float) -> Quaternion:
    """RY(gamma) = [[cos g/2, -sin g/2], [sin g/2, cos g/2]]."""
    h = 0.5 * gamma
    return Quaternion(math.cos(h), 0.0, -math.sin(h), 0.0)


def gate_quaternion(g: GateLabel) -> Quaternion:
    """Unit quaternion of a gate label."""
    if g.kind == "I":
        return IDENTITY
    if g.kind == "H":
        return Quaternion(0.0, -_SQRT_HALF, 0.0, -_SQRT_HALF)
    if g.kind == "T":
        return rz_quaternion(math.pi / 4.0)
    if g.kind == "S":
        return rz_quaternion(math.pi / 2.0)
    if not math.isfinite(g.angle):
        raise ValueError(f"non-finite gate angle: {g.angle!r}")
    if g.kind == "RZ":
        return rz_quaternion(g.angle)
    if g.kind == "RY":
        return ry_quaternion(g.angle)
    raise ValueError(f"unknown gate kind: {g.kind!r}")


Q_H = gate_quaternion(GateLabel("H"))
Q_T = gate_quaternion(GateLabel("T"))
Q_S = gate_quaternion(GateLabel("S"))

_COS_PI_8 = math.cos(math.pi / 8.0)
_SIN_PI_8 = math.sin(math.pi / 8.0)


def compose(g: Quaternion, u: Quaternion) -> Quaternion:
    """Quaternion of the matrix product G*U (G applied after U)."""
    a1, b1, c1, d1 = g
    a2, b2, c2, d2 = u
    return _guard(
        a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
        a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
        a1 * c2 + c1 * a2 + d1 * b2 - b1 * d2,
        a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2,
    )


def apply_t(q: Quaternion) -> Quaternion:
    """Left multiplication by T as the closed-form linear component map."""
    a, b, c, d = q
    return Quaternion(
        a * _COS_PI_8 + b * _SIN_PI_8,
        b * _COS_PI_8 - a * _SIN_PI_8,
        c * _COS_PI_8 + d * _SIN_PI_8,
        d * _COS_PI_8 - c * _SIN_PI_8,
    )


def apply_h(q: Quaternion) -> Quaternion:
    """Left multiplication by H as the closed-form linear component map."""
    a, b, c, d = q
    return Quaternion(
        (b + d) * _SQRT_HALF,
        (c - a) * _SQRT_HALF,
        (d - b) * _SQRT_HALF,
        -(a + c) * _SQRT_HALF,
    )


def power(q: Quaternion, n: int) -> Quaternion:
    """q^n by squaring; ~2 log2(n) renormalized multiplies, safe up to n ~ 1e10."""
    if n < 0:
        raise ValueError("negative exponent")
    result = IDENTITY
    base = q
    while n:
        if n & 1:
            result = compose(base, result)
        n >>= 1
        if n:
            base = compose(base, base)
    return result


def quat_distance(q1: Quaternion, q2: Quaternion) -> float:
    """Euclidean distance between the two 4-vectors."""
    return math.sqrt(
        (q1.a - q2.a) ** 2 + (q1.b - q2.b) ** 2 + (q1.c - q2.c) ** 2 + (q1.d - q2.d) ** 2
    )


def hs_overlap(q1: Quaternion, q2: Quaternion) -> float:
    """Hilbert-Schmidt inner product tr(U1^dag U2) = 2 <q1, q2> (always real)."""
    return 2.0 * (q1.a * q2.a + q1.b * q2.b + q1.c * q2.c + q1.d * q2.d)


def zyz_decompose(q: Quaternion) -> tuple[float, float, float]:
    """Angles (alpha, beta, gamma) with U = RZ(alpha) RY(beta) RZ(gamma).

    The matrix entries give a + ib = cos(beta/2) e^{-i(alpha+gamma)/2} and
    c + id = -sin(beta/2) e^{-i(alpha-gamma)/2}, so the half-sum comes from
    atan2(-b, a) and the half-difference from atan2(d, -c).  Degenerate
    beta = 0 uses the alpha = gamma = delta/2 convention; beta = pi fixes
    gamma = 0.
    """
    a, b, c, d = q
    r_ab = math.hypot(a, b)
    r_cd = math.hypot(c, d)
    beta = 2.0 * math.atan2(r_cd, r_ab)
    if r_cd < 1e-12:  # pure z rotation
        half = math.atan2(-b, a)
        return half, 0.0, half
    if r_ab < 1e-12:  # beta = pi
        return 2.0 * math.atan2(d, -c), math.pi, 0.0
    half_sum = math.atan2(-b, a)
    half_diff = math.atan2(d, -c)
    return half_sum + half_diff, beta, half_sum - half_diff


def zyz_compose(alpha: float, beta: float, gamma: float) -> Quaternion:
    return compose(rz_quaternion(alpha), compose(ry_quaternion(beta), rz_quaternion(gamma)))


def axis_angle(q: Quaternion) -> tuple[float, float, float, float]:
    """Rotation axis (n_x, n_y, n_z) and angle of the Bloch-sphere action.

    theta_rot = 2 arccos(a); the axis is -(d, c, b)/sin(theta_rot/2) under
    this module's component convention.  Undefined at q = +-identity.
    """
    a, b, c, d = q
    s = math.sqrt(b * b + c * c + d * d)
    if s < 1e-12:
        raise ValueError("axis undefined for +-identity quaternion")
    theta_rot = 2.0 * math.atan2(s, a)  # equals 2 arccos(a), better conditioned
    return -d / s, -c / s, -b / s, theta_rot


def bloch_vector(p: BlochPoint) -> tuple[float, float, float]:
    st = math.sin(p.theta)
    return st * math.cos(p.phi), st * math.sin(p.phi), math.cos(p.theta)


def bloch_rotation_matrix(q: Quaternion) -> np.ndarray:
    """3x3 rotation acting on Bloch vectors; built from (w,x,y,z) = (a,-d,-c,-b)."""
    w, x, y, z = q.a, -q.d, -q.c, -q.b
    return np.array(
        [
            [1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)],
            [2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)],
            [2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)],
        ]
    )


def apply_to_bloch(q: Quaternion, p: BlochPoint) -> BlochPoint:
    """Bloch angles of U|psi(theta, phi)>, global phase discarded."""
    a, b, c, d = q
    if c == 0.0 and d == 0.0:
        # z rotation: theta is preserved exactly, phi shifts by the angle
        if b == 0.0:
            return p  # +-identity
        beta = 2.0 * math.atan2(-b, a)
        return BlochPoint(p.theta, (p.phi + beta) % TWO_PI)
    half = 0.5 * p.theta
    c0 = complex(math.cos(half), 0.0)
    c1 = complex(math.cos(p.phi), math.sin(p.phi)) * math.sin(half)
    out0 = complex(a, b) * c0 + complex(c, d) * c1
    out1 = complex(-c, d) * c0 + complex(a, -b) * c1
    theta = 2.0 * math.atan2(abs(out1), abs(out0))
    if abs(out1) == 0.0 or abs(out0) == 0.0:
        return BlochPoint(theta, 0.0)  # at a pole the azimuth is conventional
    phi = (math.atan2(out1.imag, out1.real) - math.atan2(out0.imag, out0.real)) % TWO_PI
    return BlochPoint(theta, phi)


def fidelity(p1: BlochPoint, p2: BlochPoint) -> float:
    """|<psi1|psi2>|^2 = cos^2(Theta/2) via the Bloch-vector dot product."""
    v1 = bloch_vector(p1)
    v2 = bloch_vector(p2)
    f = 0.5 * (1.0 + v1[0] * v2[0] + v1[1] * v2[1] + v1[2] * v2[2])
    return min(1.0, max(0.0, f))


def haar_random_su2(rng: np.random.Generator) -> Quaternion:
    """Uniform on the unit 3-sphere: four standard normals, normalized."""
    v = rng.normal(size=4)
    v /= np.linalg.norm(v)
    return Quaternion(float(v[0]), float(v[1]), float(v[2]), float(v[3]))


def label_str(g: GateLabel) -> str:
    if g.kind in _FIXED_KINDS:
        return g.kind
    return f"{g.kind}({g.angle:.6g})"


def render_sequence(labels: Sequence[GateLabel]) -> str:
    """Render an application-order list right to left (first gate rightmost)."""
    parts = [label_str(g) for g in reversed(labels)]
    if all(len(p) == 1 for p in parts):
        return "".join(parts)
    return " ".join(parts)


def parse_compact_sequence(text: str) -> list[GateLabel]:
    """Inverse of render_sequence for single-character gates only."""
    labels = []
    for ch in reversed(text.strip()):
        if ch not in _FIXED_KINDS:
            raise ValueError(f"unknown gate character {ch!r}")
        labels.append(GateLabel(ch))
    return labels


def replay(labels: Iterable[GateLabel], start: Quaternion = IDENTITY) -> Quaternion:
    """Exact quaternion reached by applying labels in application order."""
    q = start
    for g in labels:
        q = compose(gate_quaternion(g), q)
    return q
