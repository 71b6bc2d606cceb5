"""Rigid-body math: unit quaternions (w, x, y, z order) and poses.

Everything here is plain float64 numpy with no hidden state, so a given
sequence of operations is bit-reproducible across runs and threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

QUAT_NORM_TOL = 1e-9


def quat_identity() -> np.ndarray:
    return np.array([1.0, 0.0, 0.0, 0.0])


def quat_normalize(q: np.ndarray) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    n = math.sqrt(float(np.dot(q, q)))
    if n == 0.0:
        raise ValueError("zero quaternion")
    return q / n


def quat_multiply(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Hamilton product a*b (apply b's rotation first, then a's)."""
    aw, ax, ay, az = a
    bw, bx, by, bz = b
    return np.array([
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    ])


def quat_conjugate(q: np.ndarray) -> np.ndarray:
    return np.array([q[0], -q[1], -q[2], -q[3]])


def quat_rotate(q: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Rotate vector v by quaternion q."""
    qv = np.array([0.0, v[0], v[1], v[2]])
    return quat_multiply(quat_multiply(q, qv), quat_conjugate(q))[1:]


def quat_from_axis_angle(axis: np.ndarray, angle: float) -> np.ndarray:
    axis = np.asarray(axis, dtype=float)
    n = math.sqrt(float(np.dot(axis, axis)))
    if n == 0.0:
        raise ValueError("zero rotation axis")
    half = 0.5 * angle
    s = math.sin(half) / n
    return np.array([math.cos(half), axis[0] * s, axis[1] * s, axis[2] * s])


def quat_angle_between(a: np.ndarray, b: np.ndarray) -> float:
    """Smallest rotation angle taking a to b, in radians (double cover aware)."""
    d = abs(float(np.dot(a, b)))
    d = min(1.0, d)
    return 2.0 * math.acos(d)


def quat_slerp(a: np.ndarray, b: np.ndarray, t: float) -> np.ndarray:
    """Spherical linear interpolation, shortest arc."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    dot = float(np.dot(a, b))
    if dot < 0.0:
        b = -b
        dot = -dot
    if dot > 1.0 - 1e-12:
        # nearly parallel: lerp and renormalize
        return quat_normalize(a + t * (b - a))
    theta = math.acos(min(1.0, dot))
    s = math.sin(theta)
    return (math.sin((1.0 - t) * theta) / s) * a + (math.sin(t * theta) / s) * b


def quat_twist_angle(delta: np.ndarray, axis: np.ndarray) -> float:
    """Signed rotation of ``delta`` about ``axis`` (twist component), radians."""
    axis = np.asarray(axis, dtype=float)
    proj = float(np.dot(delta[1:], axis))
    return 2.0 * math.atan2(proj, float(delta[0]))


@dataclass
class Pose:
    """Position (meters, world frame) plus unit orientation quaternion."""

    position: np.ndarray = field(default_factory=lambda: np.zeros(3))
    orientation: np.ndarray = field(default_factory=quat_identity)

    def __post_init__(self):
        self.position = np.asarray(self.position, dtype=float).reshape(3)
        self.orientation = np.asarray(self.orientation, dtype=float).reshape(4)
        if not np.all(np.isfinite(self.position)):
            raise ValueError("pose position must be finite")
        n = float(np.linalg.norm(self.orientation))
        if abs(n - 1.0) > 1e-6:
            raise ValueError(f"quaternion norm {n} not 1")
        if abs(n - 1.0) > QUAT_NORM_TOL:
            self.orientation = self.orientation / n

    def copy(self) -> "Pose":
        return Pose(self.position.copy(), self.orientation.copy())

    def compose(self, other: "Pose") -> "Pose":
        """self * other: apply other in self's frame."""
        return Pose(
            self.position + quat_rotate(self.orientation, other.position),
            quat_normalize(quat_multiply(self.orientation, other.orientation)),
        )

    def inverse(self) -> "Pose":
        inv_q = quat_conjugate(self.orientation)
        return Pose(-quat_rotate(inv_q, self.position), inv_q)

    def transform_point(self, p: np.ndarray) -> np.ndarray:
        return self.position + quat_rotate(self.orientation, np.asarray(p, dtype=float))

    def distance_to(self, other: "Pose") -> float:
        return float(np.linalg.norm(self.position - other.position))

    def angle_to(self, other: "Pose") -> float:
        return quat_angle_between(self.orientation, other.orientation)

    def approx_equal(self, other: "Pose", pos_tol: float = 1e-9, ang_tol: float = 1e-9) -> bool:
        return self.distance_to(other) <= pos_tol and self.angle_to(other) <= ang_tol

    def as_tuple(self) -> tuple:
        p, q = self.position, self.orientation
        return (float(p[0]), float(p[1]), float(p[2]),
                float(q[0]), float(q[1]), float(q[2]), float(q[3]))


def interpolate_pose(a: Pose, b: Pose, t: float) -> Pose:
    """Linear position blend with slerped orientation."""
    return Pose(
        (1.0 - t) * a.position + t * b.position,
        quat_slerp(a.orientation, b.orientation, t),
    )


# Tool-down orientation: rotation of pi about world y maps local +z to world -z,
# so the tool axis points at the table and local -z is world up.
DOWN_QUAT = np.array([0.0, 0.0, 1.0, 0.0])


def down_pose(position) -> Pose:
    return Pose(np.asarray(position, dtype=float), DOWN_QUAT.copy())
