"""Deterministic tabletop world model.

Objects are oriented boxes; containers additionally own an interior box
(extents inset by wall thickness).  Motion is quasi-static: objects move
only when attached to the gripper, driven by a joint, settled after a
release, or transferred by particle rules.  A wrist camera rigidly
mounted on the gripper projects 3D boxes to 2D pixel boxes.

All randomness in scene construction comes from the config ``seed``, so
identical configs serialize to identical bytes.
"""

from __future__ import annotations

import copy
import json
import math
import random
from dataclasses import dataclass, field

import numpy as np

from .errors import BehindCamera, DanglingReference, OutOfRange, SchemaError
from .geometry import (
    Pose,
    down_pose,
    quat_from_axis_angle,
    quat_identity,
    quat_multiply,
    quat_normalize,
    quat_rotate,
)

# 20-color palette used by the task variations.
NAMED_COLORS = [
    "red", "maroon", "lime", "green", "blue", "navy", "yellow", "cyan",
    "magenta", "silver", "gray", "orange", "olive", "purple", "teal",
    "azure", "violet", "rose", "black", "white",
]

AFFORDANCE_TAGS = {"graspable", "pressable", "container", "tool", "sweepable", "surface"}

GRIPPER_ID = "gripper"

# Container walls/bottom (meters); objects nest inside a container when their
# horizontal half-extents do not exceed the container's.
WALL_THICKNESS = 0.004
BOTTOM_THICKNESS = 0.004
NEST_OFFSET = 0.01
# Settling may raise an object onto a support at most this far above its
# release height (stacking); taller supports are ignored.
SETTLE_POP_TOL = 0.2

# Camera mounted on the wrist: with the tool pointing down, image u runs
# along world +y ("right") and v along world +x.
CAMERA_MOUNT = Pose(np.zeros(3), quat_from_axis_angle(np.array([0.0, 0.0, 1.0]), math.pi / 2))


@dataclass
class BBox2D:
    """Axis-aligned pixel box. ``source_id`` is hidden from policy code."""

    u0: float
    v0: float
    u1: float
    v1: float
    source_id: str

    def center(self) -> tuple[float, float]:
        return (0.5 * (self.u0 + self.u1), 0.5 * (self.v0 + self.v1))

    def as_array(self) -> np.ndarray:
        return np.array([self.u0, self.v0, self.u1, self.v1])


@dataclass
class SceneObject:
    id: str
    name: str
    descriptions: list[str]
    pose: Pose
    extents: np.ndarray  # half-sizes, meters
    affordances: set[str] = field(default_factory=set)
    color: str = "gray"
    attached_to: str | None = None
    wall: float = WALL_THICKNESS
    bottom: float = BOTTOM_THICKNESS
    pressed: bool = False
    wiped: bool = False
    # offset of this object in its attachment parent's frame, captured at
    # attach time (or at construction for config-declared attachments)
    attach_offset: Pose | None = None

    def __post_init__(self):
        self.extents = np.asarray(self.extents, dtype=float).reshape(3)
        if not np.all(self.extents > 0):
            raise SchemaError(f"object {self.id}: extents must be strictly positive")
        unknown = set(self.affordances) - AFFORDANCE_TAGS
        if unknown:
            raise SchemaError(f"object {self.id}: unknown affordances {sorted(unknown)}")

    def has(self, tag: str) -> bool:
        return tag in self.affordances

    def corners(self) -> np.ndarray:
        """The 8 world-frame corners of the oriented box."""
        ex, ey, ez = self.extents
        out = np.empty((8, 3))
        i = 0
        for sx in (-ex, ex):
            for sy in (-ey, ey):
                for sz in (-ez, ez):
                    out[i] = self.pose.transform_point(np.array([sx, sy, sz]))
                    i += 1
        return out

    def world_aabb(self) -> tuple[np.ndarray, np.ndarray]:
        c = self.corners()
        return c.min(axis=0), c.max(axis=0)

    def top_z(self) -> float:
        return float(self.world_aabb()[1][2])

    def contains_point(self, p: np.ndarray, margin: float = 0.0) -> bool:
        """Point inside the oriented box, box expanded by ``margin``."""
        local = self.pose.inverse().transform_point(p)
        return bool(np.all(np.abs(local) <= self.extents + margin))

    def interior_contains(self, p: np.ndarray, margin: float = 0.0) -> bool:
        """Point inside the container interior (inset walls, raised bottom)."""
        local = self.pose.inverse().transform_point(p)
        ix = self.extents[0] - self.wall + margin
        iy = self.extents[1] - self.wall + margin
        lo_z = -self.extents[2] + self.bottom - margin
        hi_z = self.extents[2] + margin
        return bool(abs(local[0]) <= ix and abs(local[1]) <= iy and lo_z <= local[2] <= hi_z)

    def interior_bottom_z(self) -> float:
        return float(self.pose.position[2] - self.extents[2] + self.bottom)

    def footprint_contains(self, x: float, y: float, margin: float = 0.0) -> bool:
        lo, hi = self.world_aabb()
        return lo[0] - margin <= x <= hi[0] + margin and lo[1] - margin <= y <= hi[1] + margin


@dataclass
class Joint:
    kind: str  # "revolute" | "prismatic"
    axis: np.ndarray  # unit vector
    origin: np.ndarray
    lo: float
    hi: float
    value: float
    child: str
    rest_pose: Pose | None = None  # child pose at value == lo

    def __post_init__(self):
        self.axis = np.asarray(self.axis, dtype=float).reshape(3)
        n = float(np.linalg.norm(self.axis))
        if abs(n - 1.0) > 1e-6:
            raise SchemaError(f"joint axis norm {n} not 1")
        if abs(n - 1.0) > 1e-9:
            self.axis = self.axis / n
        self.origin = np.asarray(self.origin, dtype=float).reshape(3)
        if self.kind not in ("revolute", "prismatic"):
            raise SchemaError(f"unknown joint kind {self.kind!r}")
        if not (self.lo <= self.value <= self.hi):
            raise OutOfRange(f"joint value {self.value} outside [{self.lo}, {self.hi}]")

    def child_pose_at(self, value: float) -> Pose:
        """Pure FK from the rest pose (pose at ``lo``)."""
        assert self.rest_pose is not None
        d = value - self.lo
        if self.kind == "prismatic":
            return Pose(self.rest_pose.position + d * self.axis,
                        self.rest_pose.orientation.copy())
        rot = quat_from_axis_angle(self.axis, d)
        rel = self.rest_pose.position - self.origin
        return Pose(self.origin + quat_rotate(rot, rel),
                    quat_normalize(quat_multiply(rot, self.rest_pose.orientation)))


@dataclass
class Particle:
    id: str
    position: np.ndarray
    contained_in: str | None = None

    def __post_init__(self):
        self.position = np.asarray(self.position, dtype=float).reshape(3)


@dataclass
class Gripper:
    pose: Pose
    aperture: str = "open"  # "open" | "closed"
    held: str | None = None


@dataclass
class Camera:
    fx: float = 600.0
    fy: float = 600.0
    cx: float = 320.0
    cy: float = 240.0
    width: int = 640
    height: int = 480
    mount: Pose = field(default_factory=lambda: CAMERA_MOUNT.copy())


@dataclass
class Workspace:
    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        self.lo = np.asarray(self.lo, dtype=float).reshape(3)
        self.hi = np.asarray(self.hi, dtype=float).reshape(3)
        if not np.all(self.lo < self.hi):
            raise SchemaError("workspace min must be below max on every axis")

    def contains(self, p: np.ndarray, tol: float = 1e-9) -> bool:
        return bool(np.all(p >= self.lo - tol) and np.all(p <= self.hi + tol))

    def floor_z(self) -> float:
        return float(self.lo[2])


DEFAULT_WORKSPACE = {"min": [0.1, -0.4, 0.0], "max": [0.8, 0.4, 0.6]}
DEFAULT_GRIPPER_POS = [0.25, 0.0, 0.35]


@dataclass
class Scene:
    objects: list[SceneObject]
    joints: list[Joint]
    particles: list[Particle]
    gripper: Gripper
    camera: Camera
    workspace: Workspace
    seed: int
    press_log: list[str] = field(default_factory=list)
    # id -> set of covered wipe-grid cells (executor fills this in)
    wipe_cells: dict[str, set[int]] = field(default_factory=dict)
    # task metadata stamped by generators (target ids, expected orders, ...)
    meta: dict = field(default_factory=dict)

    _index: dict[str, SceneObject] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.reindex()

    def reindex(self):
        self._index = {}
        for o in self.objects:
            if o.id in self._index or o.id == GRIPPER_ID:
                raise SchemaError(f"duplicate object id {o.id!r}")
            self._index[o.id] = o

    # -- lookups ----------------------------------------------------------

    def has_object(self, oid: str) -> bool:
        return oid in self._index

    def obj(self, oid: str) -> SceneObject:
        try:
            return self._index[oid]
        except KeyError:
            raise DanglingReference(f"no object with id {oid!r}") from None

    def find_joint(self, child_id: str) -> Joint | None:
        for j in self.joints:
            if j.child == child_id:
                return j
        return None

    def joint_for(self, oid: str) -> Joint | None:
        """Joint driving this object, via itself or an attachment ancestor."""
        seen = set()
        cur: str | None = oid
        while cur is not None and cur != GRIPPER_ID and cur not in seen:
            seen.add(cur)
            j = self.find_joint(cur)
            if j is not None:
                return j
            cur = self.obj(cur).attached_to
        return None

    def attached_children(self, oid: str) -> list[SceneObject]:
        return [o for o in self.objects if o.attached_to == oid]

    def contained_particles(self, oid: str) -> list[Particle]:
        return [p for p in self.particles if p.contained_in == oid]

    def camera_pose(self) -> Pose:
        return self.gripper.pose.compose(self.camera.mount)

    # -- motion -----------------------------------------------------------

    def set_object_pose(self, oid: str, new_pose: Pose):
        """Move an object rigidly, carrying attached children and contents."""
        obj = self.obj(oid)
        delta = new_pose.compose(obj.pose.inverse())
        self._apply_delta(obj, delta)

    def _apply_delta(self, obj: SceneObject, delta: Pose):
        obj.pose = delta.compose(obj.pose)
        for p in self.contained_particles(obj.id):
            p.position = delta.transform_point(p.position)
        for child in self.attached_children(obj.id):
            self._apply_delta(child, delta)

    # -- geometry queries ---------------------------------------------------

    def objects_inside(self, container: SceneObject) -> list[SceneObject]:
        return [o for o in self.objects
                if o.id != container.id and container.interior_contains(o.pose.position)]

    def fits_inside(self, obj: SceneObject, container: SceneObject) -> bool:
        # cups of equal size nest; anything wider than the opening rests on top
        tol = container.wall + 1e-9
        ix = container.extents[0] - container.wall
        iy = container.extents[1] - container.wall
        return obj.extents[0] <= ix + tol and obj.extents[1] <= iy + tol

    def settle_object(self, oid: str):
        """Drop an object straight down onto the highest support under it.

        Containers under the drop point capture the object when it fits
        through the opening; nested objects stack with a small offset.
        """
        obj = self.obj(oid)
        x, y = float(obj.pose.position[0]), float(obj.pose.position[1])
        z_bot = float(obj.pose.position[2]) - float(obj.extents[2])
        pop_limit = z_bot + SETTLE_POP_TOL

        best_container: SceneObject | None = None
        best_surface_z = self.workspace.floor_z()
        skip = self._attachment_family(oid)
        for other in self.objects:
            if other.id in skip:
                continue
            if not other.footprint_contains(x, y):
                continue
            if other.has("container") and self.fits_inside(obj, other):
                local = other.pose.inverse().transform_point(np.array([x, y, other.pose.position[2]]))
                in_opening = (abs(local[0]) <= other.extents[0] - other.wall
                              and abs(local[1]) <= other.extents[1] - other.wall)
                if in_opening and other.top_z() <= pop_limit:
                    if best_container is None or other.interior_bottom_z() > best_container.interior_bottom_z():
                        best_container = other
                    continue
            top = other.top_z()
            if top <= pop_limit and top > best_surface_z:
                best_surface_z = top

        if best_container is not None:
            n_inside = len(self.objects_inside(best_container))
            z = best_container.interior_bottom_z() + float(obj.extents[2]) + n_inside * NEST_OFFSET
        else:
            z = best_surface_z + float(obj.extents[2])
        target = Pose(np.array([x, y, z]), obj.pose.orientation.copy())
        self.set_object_pose(oid, target)

    def _attachment_family(self, oid: str) -> set[str]:
        """The object plus everything attached below it (directly or not)."""
        family = {oid}
        grew = True
        while grew:
            grew = False
            for o in self.objects:
                if o.attached_to in family and o.id not in family:
                    family.add(o.id)
                    grew = True
        return family

    def copy(self) -> "Scene":
        return copy.deepcopy(self)

    # -- serialization ------------------------------------------------------

    def canonical_dict(self) -> dict:
        def vec(a):
            return [float(x) for x in a]

        return {
            "seed": self.seed,
            "workspace": {"min": vec(self.workspace.lo), "max": vec(self.workspace.hi)},
            "camera": {
                "fx": self.camera.fx, "fy": self.camera.fy,
                "cx": self.camera.cx, "cy": self.camera.cy,
                "width": self.camera.width, "height": self.camera.height,
            },
            "gripper": {
                "position": vec(self.gripper.pose.position),
                "orientation": vec(self.gripper.pose.orientation),
                "aperture": self.gripper.aperture,
                "held": self.gripper.held,
            },
            "objects": [
                {
                    "id": o.id,
                    "name": o.name,
                    "descriptions": list(o.descriptions),
                    "position": vec(o.pose.position),
                    "orientation": vec(o.pose.orientation),
                    "extents": vec(o.extents),
                    "affordances": sorted(o.affordances),
                    "color": o.color,
                    "attached_to": o.attached_to,
                    "pressed": o.pressed,
                    "wiped": o.wiped,
                }
                for o in self.objects
            ],
            "joints": [
                {
                    "kind": j.kind,
                    "axis": vec(j.axis),
                    "origin": vec(j.origin),
                    "range": [j.lo, j.hi],
                    "value": j.value,
                    "child": j.child,
                }
                for j in self.joints
            ],
            "particles": [
                {"id": p.id, "position": vec(p.position), "contained_in": p.contained_in}
                for p in self.particles
            ],
            "press_log": list(self.press_log),
            "meta": self.meta,
        }

    def canonical_json(self) -> str:
        return json.dumps(self.canonical_dict(), sort_keys=True, separators=(",", ":"))


# --------------------------------------------------------------------------
# Construction from config
# --------------------------------------------------------------------------

_TOP_KEYS = {"seed", "workspace", "camera", "gripper", "objects", "joints", "particles", "meta"}
_OBJECT_KEYS = {"id", "name", "descriptions", "position", "orientation", "extents",
                "affordances", "color", "attached_to", "wall", "bottom"}
_JOINT_KEYS = {"kind", "axis", "origin", "range", "value", "child"}
_PARTICLE_KEYS = {"id", "position", "contained_in"}
_CAMERA_KEYS = {"fx", "fy", "cx", "cy", "width", "height"}
_GRIPPER_KEYS = {"position", "orientation", "aperture"}
_WORKSPACE_KEYS = {"min", "max"}


def _check_keys(section: str, given: dict, allowed: set[str]):
    if not isinstance(given, dict):
        raise SchemaError(f"{section}: expected a mapping, got {type(given).__name__}")
    unknown = set(given) - allowed
    if unknown:
        raise SchemaError(f"{section}: unknown keys {sorted(unknown)}")


def _vec3(section: str, v) -> np.ndarray:
    if not isinstance(v, (list, tuple)) or len(v) != 3:
        raise SchemaError(f"{section}: expected a 3-vector, got {v!r}")
    try:
        return np.array([float(x) for x in v])
    except (TypeError, ValueError):
        raise SchemaError(f"{section}: non-numeric 3-vector {v!r}") from None


def _quat(section: str, v) -> np.ndarray:
    if v is None:
        return quat_identity()
    if not isinstance(v, (list, tuple)) or len(v) != 4:
        raise SchemaError(f"{section}: expected a wxyz quaternion, got {v!r}")
    return quat_normalize(np.array([float(x) for x in v]))


def scene_from_config(config: dict) -> Scene:
    """Build a Scene from a parsed config tree.

    The same config always yields a byte-identical scene; any ``random``
    color fields are resolved from the config seed.
    """
    _check_keys("config", config, _TOP_KEYS)
    seed = config.get("seed", 0)
    if not isinstance(seed, int):
        raise SchemaError(f"seed: expected an integer, got {seed!r}")
    rng = random.Random(seed & 0xFFFFFFFFFFFFFFFF)

    ws_cfg = config.get("workspace", DEFAULT_WORKSPACE)
    _check_keys("workspace", ws_cfg, _WORKSPACE_KEYS)
    workspace = Workspace(_vec3("workspace.min", ws_cfg.get("min", DEFAULT_WORKSPACE["min"])),
                          _vec3("workspace.max", ws_cfg.get("max", DEFAULT_WORKSPACE["max"])))

    cam_cfg = config.get("camera", {})
    _check_keys("camera", cam_cfg, _CAMERA_KEYS)
    camera = Camera(
        fx=float(cam_cfg.get("fx", 600.0)), fy=float(cam_cfg.get("fy", 600.0)),
        cx=float(cam_cfg.get("cx", 320.0)), cy=float(cam_cfg.get("cy", 240.0)),
        width=int(cam_cfg.get("width", 640)), height=int(cam_cfg.get("height", 480)),
    )

    grip_cfg = config.get("gripper", {})
    _check_keys("gripper", grip_cfg, _GRIPPER_KEYS)
    gpos = _vec3("gripper.position", grip_cfg.get("position", DEFAULT_GRIPPER_POS))
    if grip_cfg.get("orientation") is not None:
        gq = _quat("gripper.orientation", grip_cfg["orientation"])
    else:
        gq = down_pose(gpos).orientation
    gripper = Gripper(pose=Pose(gpos, gq), aperture=grip_cfg.get("aperture", "open"))
    if gripper.aperture not in ("open", "closed"):
        raise SchemaError(f"gripper.aperture: expected open|closed, got {gripper.aperture!r}")

    objects: list[SceneObject] = []
    for i, ocfg in enumerate(config.get("objects", [])):
        _check_keys(f"objects[{i}]", ocfg, _OBJECT_KEYS)
        for req in ("id", "position", "extents"):
            if req not in ocfg:
                raise SchemaError(f"objects[{i}]: missing required key {req!r}")
        color = ocfg.get("color", "gray")
        if color == "random":
            color = rng.choice(NAMED_COLORS)
        name = ocfg.get("name", ocfg["id"])
        descriptions = ocfg.get("descriptions", [name])
        if not isinstance(descriptions, list) or not all(isinstance(d, str) for d in descriptions):
            raise SchemaError(f"objects[{i}]: descriptions must be a list of strings")
        objects.append(SceneObject(
            id=str(ocfg["id"]),
            name=str(name),
            descriptions=descriptions,
            pose=Pose(_vec3(f"objects[{i}].position", ocfg["position"]),
                      _quat(f"objects[{i}].orientation", ocfg.get("orientation"))),
            extents=_vec3(f"objects[{i}].extents", ocfg["extents"]),
            affordances=set(ocfg.get("affordances", [])),
            color=str(color),
            attached_to=ocfg.get("attached_to"),
            wall=float(ocfg.get("wall", WALL_THICKNESS)),
            bottom=float(ocfg.get("bottom", BOTTOM_THICKNESS)),
        ))

    joints: list[Joint] = []
    for i, jcfg in enumerate(config.get("joints", [])):
        _check_keys(f"joints[{i}]", jcfg, _JOINT_KEYS)
        for req in ("kind", "axis", "origin", "range", "child"):
            if req not in jcfg:
                raise SchemaError(f"joints[{i}]: missing required key {req!r}")
        rng_pair = jcfg["range"]
        if not isinstance(rng_pair, (list, tuple)) or len(rng_pair) != 2:
            raise SchemaError(f"joints[{i}].range: expected [lo, hi]")
        lo, hi = float(rng_pair[0]), float(rng_pair[1])
        joints.append(Joint(
            kind=jcfg["kind"],
            axis=_vec3(f"joints[{i}].axis", jcfg["axis"]),
            origin=_vec3(f"joints[{i}].origin", jcfg["origin"]),
            lo=lo, hi=hi,
            value=float(jcfg.get("value", lo)),
            child=str(jcfg["child"]),
        ))

    particles: list[Particle] = []
    for i, pcfg in enumerate(config.get("particles", [])):
        _check_keys(f"particles[{i}]", pcfg, _PARTICLE_KEYS)
        for req in ("id", "position"):
            if req not in pcfg:
                raise SchemaError(f"particles[{i}]: missing required key {req!r}")
        particles.append(Particle(
            id=str(pcfg["id"]),
            position=_vec3(f"particles[{i}].position", pcfg["position"]),
            contained_in=pcfg.get("contained_in"),
        ))

    scene = Scene(objects=objects, joints=joints, particles=particles,
                  gripper=gripper, camera=camera, workspace=workspace, seed=seed,
                  meta=dict(config.get("meta", {})))
    _validate_scene(scene)

    # configured attachments: capture the relative offset now
    for o in scene.objects:
        if o.attached_to is not None and o.attached_to != GRIPPER_ID:
            parent = scene.obj(o.attached_to)
            o.attach_offset = parent.pose.inverse().compose(o.pose)

    # joint children: configured pose is the rest pose (value == lo)
    for j in scene.joints:
        child = scene.obj(j.child)
        j.rest_pose = child.pose.copy()
        if j.value != j.lo:
            scene.set_object_pose(j.child, j.child_pose_at(j.value))
    return scene


def _validate_scene(scene: Scene):
    ids = {o.id for o in scene.objects}
    for o in scene.objects:
        if o.attached_to is not None and o.attached_to != GRIPPER_ID and o.attached_to not in ids:
            raise DanglingReference(f"object {o.id}: attached_to {o.attached_to!r} does not exist")
        if not scene.workspace.contains(o.pose.position):
            raise SchemaError(f"object {o.id}: center outside workspace")
    # attachment graph must be acyclic
    for o in scene.objects:
        seen = set()
        cur = o.attached_to
        while cur is not None and cur != GRIPPER_ID:
            if cur in seen:
                raise SchemaError(f"attachment cycle through {cur!r}")
            seen.add(cur)
            cur = scene.obj(cur).attached_to
    for j in scene.joints:
        if j.child not in ids:
            raise DanglingReference(f"joint child {j.child!r} does not exist")
    for p in scene.particles:
        if p.contained_in is not None:
            if p.contained_in not in ids:
                raise DanglingReference(f"particle {p.id}: contained_in {p.contained_in!r} does not exist")
            holder = scene.obj(p.contained_in)
            if not holder.interior_contains(p.position, margin=1e-6):
                raise SchemaError(f"particle {p.id}: not inside its container volume")


# --------------------------------------------------------------------------
# Description matching
# --------------------------------------------------------------------------

def _tokens(text: str) -> frozenset[str]:
    out = []
    word = []
    for ch in text.lower():
        if ch.isalnum():
            word.append(ch)
        elif word:
            out.append("".join(word))
            word = []
    if word:
        out.append("".join(word))
    return frozenset(out)


def description_matches(query: str, descriptions: list[str]) -> bool:
    q = _tokens(query)
    if not q:
        return False
    return any(q <= _tokens(d) for d in descriptions)


def match_objects(scene: Scene, description: str) -> list[str]:
    """Ids of objects whose description list matches, ordered left-to-right
    in the image plane (ties: distance to camera, then id)."""
    cam = scene.camera_pose()
    cam_inv = cam.inverse()
    hits = []
    for o in scene.objects:
        if not description_matches(description, o.descriptions):
            continue
        local = cam_inv.transform_point(o.pose.position)
        z = float(local[2])
        if z > 1e-9:
            u = scene.camera.fx * float(local[0]) / z + scene.camera.cx
            dist = float(np.linalg.norm(local))
        else:
            u = math.inf
            dist = math.inf
        hits.append((u, dist, o.id))
    hits.sort()
    return [oid for _, _, oid in hits]


# --------------------------------------------------------------------------
# Camera projection
# --------------------------------------------------------------------------

def project_point(scene: Scene, p: np.ndarray) -> tuple[float, float, float]:
    """Pinhole projection of a world point; returns (u, v, depth)."""
    local = scene.camera_pose().inverse().transform_point(p)
    z = max(float(local[2]), 1e-9)
    u = scene.camera.fx * float(local[0]) / z + scene.camera.cx
    v = scene.camera.fy * float(local[1]) / z + scene.camera.cy
    return u, v, float(local[2])


def project_bbox(scene: Scene, object_id: str) -> BBox2D:
    """Pixel box enclosing the 8 projected corners, clamped to image bounds."""
    obj = scene.obj(object_id)
    center_local = scene.camera_pose().inverse().transform_point(obj.pose.position)
    if float(center_local[2]) <= 1e-9:
        raise BehindCamera(f"object {object_id!r} center behind camera plane")
    us, vs = [], []
    for corner in obj.corners():
        u, v, _ = project_point(scene, corner)
        us.append(u)
        vs.append(v)
    w, h = scene.camera.width - 1, scene.camera.height - 1
    return BBox2D(
        u0=min(max(min(us), 0.0), w), v0=min(max(min(vs), 0.0), h),
        u1=min(max(max(us), 0.0), w), v1=min(max(max(vs), 0.0), h),
        source_id=object_id,
    )


# --------------------------------------------------------------------------
# Joints
# --------------------------------------------------------------------------

def set_joint_value(scene: Scene, joint: Joint, value: float) -> Scene:
    """Set a joint to ``value``; the child (and anything attached to it)
    moves per FK, everything else stays put."""
    if not (joint.lo <= value <= joint.hi):
        raise OutOfRange(f"value {value} outside [{joint.lo}, {joint.hi}]")
    joint.value = float(value)
    scene.set_object_pose(joint.child, joint.child_pose_at(joint.value))
    return scene
