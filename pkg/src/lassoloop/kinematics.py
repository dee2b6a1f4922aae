"""Denavit-Hartenberg forward kinematics for 6-axis arms.

Standard (distal) convention: each joint transform is
Rz(theta) * Tz(d) * Tx(a) * Rx(alpha).  The shipped UR5 table uses the
vendor-published parameters; any 6-row table loads from JSON.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

__all__ = [
    "DHRow",
    "RobotModel",
    "JointConfig",
    "Pose",
    "forward_kinematics",
    "fk_batch",
    "tool_azimuth",
    "geometric_jacobian",
    "ur5_model",
    "load_robot",
    "robot_to_dict",
]


@dataclass(frozen=True)
class DHRow:
    a: float
    alpha: float
    d: float
    theta_offset: float = 0.0

    def __post_init__(self):
        for name in ("a", "alpha", "d", "theta_offset"):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"DH parameter {name} must be finite")


@dataclass(frozen=True)
class Pose:
    """Rigid-body pose: 3x3 rotation (orthonormal, det +1) + translation."""

    rotation: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        rot = np.asarray(self.rotation, float)
        tr = np.asarray(self.translation, float)
        if rot.shape != (3, 3) or tr.shape != (3,):
            raise ValueError("Pose needs a (3,3) rotation and (3,) translation")
        if np.abs(rot @ rot.T - np.eye(3)).max() > 1e-9:
            raise ValueError("rotation is not orthonormal within 1e-9")
        if abs(np.linalg.det(rot) - 1.0) > 1e-9:
            raise ValueError("rotation determinant must be +1 within 1e-9")
        object.__setattr__(self, "rotation", rot)
        object.__setattr__(self, "translation", tr)

    @classmethod
    def identity(cls) -> "Pose":
        return cls(np.eye(3), np.zeros(3))

    def matrix(self) -> np.ndarray:
        m = np.eye(4)
        m[:3, :3] = self.rotation
        m[:3, 3] = self.translation
        return m

    @classmethod
    def from_matrix(cls, m: np.ndarray) -> "Pose":
        return cls(m[:3, :3], m[:3, 3])


@dataclass(frozen=True)
class RobotModel:
    """Six DH rows applied after base_pose."""

    rows: tuple
    base_pose: Pose = field(default_factory=Pose.identity)
    name: str = "robot"

    def __post_init__(self):
        rows = tuple(self.rows)
        if len(rows) != 6:
            raise ValueError(f"RobotModel needs exactly 6 DH rows, got {len(rows)}")
        object.__setattr__(self, "rows", rows)

    def reach_bound(self) -> float:
        """Upper bound on TCP distance from the base frame origin."""
        return float(sum(abs(r.a) + abs(r.d) for r in self.rows))


@dataclass(frozen=True)
class JointConfig:
    """Six joint angles in radians; no joint limits."""

    q: np.ndarray

    def __post_init__(self):
        q = np.asarray(self.q, float)
        if q.shape != (6,):
            raise ValueError(f"JointConfig needs 6 angles, got shape {q.shape}")
        if not np.all(np.isfinite(q)):
            raise ValueError("joint angles must be finite")
        object.__setattr__(self, "q", q)


def _dh_transform(theta, a, d, alpha):
    ct, st = np.cos(theta), np.sin(theta)
    ca, sa = np.cos(alpha), np.sin(alpha)
    return np.array([
        [ct, -st * ca, st * sa, a * ct],
        [st, ct * ca, -ct * sa, a * st],
        [0.0, sa, ca, d],
        [0.0, 0.0, 0.0, 1.0],
    ])


def _as_q(q) -> np.ndarray:
    if isinstance(q, JointConfig):
        return q.q
    q = np.asarray(q, float)
    if q.shape != (6,):
        raise ValueError(f"expected 6 joint angles, got shape {q.shape}")
    return q


def forward_kinematics(model: RobotModel, q) -> Pose:
    """Tool pose: base_pose composed with the six standard DH transforms."""
    qv = _as_q(q)
    t = model.base_pose.matrix()
    for row, qi in zip(model.rows, qv):
        t = t @ _dh_transform(qi + row.theta_offset, row.a, row.d, row.alpha)
    return Pose.from_matrix(t)


def fk_batch(model: RobotModel, q_all: np.ndarray):
    """Vectorized FK over a (N, 6) joint matrix.

    Returns (translations (N,3), tool z-axes (N,3)).  Identical arithmetic
    to forward_kinematics per sample."""
    q_all = np.asarray(q_all, float)
    n = len(q_all)
    t = np.broadcast_to(model.base_pose.matrix(), (n, 4, 4)).copy()
    for j, row in enumerate(model.rows):
        th = q_all[:, j] + row.theta_offset
        ct, st = np.cos(th), np.sin(th)
        ca, sa = np.cos(row.alpha), np.sin(row.alpha)
        m = np.zeros((n, 4, 4))
        m[:, 0, 0] = ct
        m[:, 0, 1] = -st * ca
        m[:, 0, 2] = st * sa
        m[:, 0, 3] = row.a * ct
        m[:, 1, 0] = st
        m[:, 1, 1] = ct * ca
        m[:, 1, 2] = -ct * sa
        m[:, 1, 3] = row.a * st
        m[:, 2, 1] = sa
        m[:, 2, 2] = ca
        m[:, 2, 3] = row.d
        m[:, 3, 3] = 1.0
        t = t @ m
    return t[:, :3, 3], t[:, :3, 2]


def tool_azimuth(pose: Pose) -> float:
    """Heading of the tool z-axis projected on the world horizontal plane;
    falls back to the azimuth of the TCP position when the tool points
    vertically, and to 0 when that is degenerate too."""
    zax = pose.rotation[:, 2]
    if np.hypot(zax[0], zax[1]) >= 1e-6:
        return float(np.arctan2(zax[1], zax[0]))
    px, py = pose.translation[0], pose.translation[1]
    if np.hypot(px, py) >= 1e-6:
        return float(np.arctan2(py, px))
    return 0.0


def geometric_jacobian(model: RobotModel, q) -> np.ndarray:
    """(3, 6) linear-velocity Jacobian in cross-product form (revolute
    joints): column i is z_{i-1} x (p_tcp - p_{i-1})."""
    qv = _as_q(q)
    t = model.base_pose.matrix()
    origins = [t[:3, 3].copy()]
    axes = [t[:3, 2].copy()]
    for row, qi in zip(model.rows, qv):
        t = t @ _dh_transform(qi + row.theta_offset, row.a, row.d, row.alpha)
        origins.append(t[:3, 3].copy())
        axes.append(t[:3, 2].copy())
    p_tcp = origins[-1]
    cols = [np.cross(axes[i], p_tcp - origins[i]) for i in range(6)]
    return np.stack(cols, axis=1)


# vendor-published UR5 table (standard DH, meters/radians)
_UR5_A = [0.0, -0.425, -0.39225, 0.0, 0.0, 0.0]
_UR5_D = [0.089159, 0.0, 0.0, 0.10915, 0.09465, 0.0823]
_UR5_ALPHA = [np.pi / 2, 0.0, 0.0, np.pi / 2, -np.pi / 2, 0.0]


def ur5_model() -> RobotModel:
    rows = tuple(
        DHRow(a=a, alpha=al, d=d) for a, al, d in zip(_UR5_A, _UR5_ALPHA, _UR5_D)
    )
    return RobotModel(rows=rows, name="ur5")


_ROBOT_KEYS = {"name", "base_pose", "dh"}
_DH_KEYS = {"a", "alpha", "d", "theta_offset"}


def robot_from_dict(data: dict) -> RobotModel:
    unknown = set(data) - _ROBOT_KEYS
    if unknown:
        raise ValueError(f"unknown robot keys: {sorted(unknown)}")
    rows = []
    for entry in data["dh"]:
        bad = set(entry) - _DH_KEYS
        if bad:
            raise ValueError(f"unknown DH keys: {sorted(bad)}")
        rows.append(DHRow(
            a=float(entry["a"]),
            alpha=float(entry["alpha"]),
            d=float(entry["d"]),
            theta_offset=float(entry.get("theta_offset", 0.0)),
        ))
    base = data.get("base_pose")
    if base is None:
        pose = Pose.identity()
    else:
        pose = Pose(np.asarray(base["rotation"], float),
                    np.asarray(base["translation"], float))
    return RobotModel(rows=tuple(rows), base_pose=pose,
                      name=str(data.get("name", "robot")))


def robot_to_dict(model: RobotModel) -> dict:
    return {
        "name": model.name,
        "base_pose": {
            "rotation": model.base_pose.rotation.tolist(),
            "translation": model.base_pose.translation.tolist(),
        },
        "dh": [
            {"a": r.a, "alpha": r.alpha, "d": r.d, "theta_offset": r.theta_offset}
            for r in model.rows
        ],
    }


def load_robot(path) -> RobotModel:
    with open(path) as fh:
        return robot_from_dict(json.load(fh))
