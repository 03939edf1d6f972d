"""Spatial sampling and geometric primitives.

Flat-ground model: the x-y plane is the ground, z is altitude. The origin
is the disaster epicenter. All distances are in meters; km only appear at
the configuration boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class InvalidRegionError(ValueError):
    """Raised when a sampling region is degenerate (e.g. r_s <= r_d)."""


class InvalidGeometryError(ValueError):
    """Raised when a geometric precondition is violated."""


@dataclass(frozen=True)
class Point3:
    """A 3-D position: ground-plane east/north plus altitude (z >= 0)."""

    x: float
    y: float
    z: float = 0.0

    def __post_init__(self):
        for c in (self.x, self.y, self.z):
            if not math.isfinite(c):
                raise ValueError(f"non-finite coordinate in {(self.x, self.y, self.z)}")
        if self.z < 0:
            raise ValueError(f"negative altitude z={self.z}")

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)


@dataclass(frozen=True)
class DiskRegion:
    """A ground-level disk (center z must be 0, radius > 0)."""

    center: Point3
    radius: float

    def __post_init__(self):
        if self.radius <= 0:
            raise InvalidRegionError(f"disk radius must be > 0, got {self.radius}")
        if self.center.z != 0:
            raise InvalidRegionError("disk center must lie on the ground plane")


def as_xyz(p) -> np.ndarray:
    """Coerce a Point3 or length-3 array-like to a float ndarray of shape (3,)."""
    if isinstance(p, Point3):
        return p.as_array()
    a = np.asarray(p, dtype=float)
    if a.shape != (3,):
        raise ValueError(f"expected a 3-vector, got shape {a.shape}")
    return a


def disk_xy(rng: np.random.Generator, radius: float, n: int,
            cx: float = 0.0, cy: float = 0.0) -> np.ndarray:
    """n i.i.d. uniform points in a disk, as an (n, 3) array with z = 0."""
    r = radius * np.sqrt(rng.random(n))
    phi = rng.random(n) * (2.0 * np.pi)
    pts = np.zeros((n, 3))
    pts[:, 0] = cx + r * np.cos(phi)
    pts[:, 1] = cy + r * np.sin(phi)
    return pts


def annulus_xy(rng: np.random.Generator, r_in: float, r_out: float, n: int) -> np.ndarray:
    """n i.i.d. uniform points in the annulus r_in < ||p|| <= r_out, shape (n, 3)."""
    r = np.sqrt(rng.uniform(r_in ** 2, r_out ** 2, n))
    phi = rng.random(n) * (2.0 * np.pi)
    pts = np.zeros((n, 3))
    pts[:, 0] = r * np.cos(phi)
    pts[:, 1] = r * np.sin(phi)
    return pts


def sample_uniform_disk(rng: np.random.Generator, region: DiskRegion, n: int) -> np.ndarray:
    """Sample n points uniformly over a ground disk. Returns an (n, 3) array."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return disk_xy(rng, region.radius, n, region.center.x, region.center.y)


def sample_tbs_field(rng: np.random.Generator, r_d: float, r_s: float,
                     density_per_km2: float, fixed_count: bool = False) -> np.ndarray:
    """Sample functional TBS positions in the annulus r_d < ||p|| <= r_s.

    The count is Poisson with mean density * area (area in km^2); with
    fixed_count=True the rounded mean is used instead. TBSs inside the
    disaster disk are never generated (the original infrastructure there
    is nonfunctional).
    """
    if r_d < 0 or r_s <= r_d:
        raise InvalidRegionError(f"need r_s > r_d >= 0, got r_d={r_d}, r_s={r_s}")
    if density_per_km2 <= 0:
        raise ValueError(f"density must be > 0, got {density_per_km2}")
    area_km2 = np.pi * (r_s ** 2 - r_d ** 2) * 1e-6
    mean = density_per_km2 * area_km2
    n = int(round(mean)) if fixed_count else int(rng.poisson(mean))
    return annulus_xy(rng, r_d, r_s, n)


def distance3d(a, b) -> float:
    """Euclidean distance between two points."""
    return float(np.linalg.norm(as_xyz(a) - as_xyz(b)))


def distances_to(rx, positions: np.ndarray) -> np.ndarray:
    """Distances from each row of an (n, 3) array to a single point."""
    d = positions - as_xyz(rx)[None, :]
    return np.sqrt(np.einsum("ij,ij->i", d, d))


def elevation_angle(ground, aerial) -> float:
    """Elevation angle in degrees from a ground point toward an aerial one.

    Zero horizontal offset gives 90 degrees (zenith).
    """
    g, a = as_xyz(ground), as_xyz(aerial)
    dz = a[2] - g[2]
    if dz <= 0:
        raise InvalidGeometryError(f"aerial altitude {a[2]} must exceed ground altitude {g[2]}")
    horiz = math.hypot(a[0] - g[0], a[1] - g[1])
    return math.degrees(math.atan2(dz, horiz))


def elevation_angles(rx, positions: np.ndarray) -> np.ndarray:
    """Vectorized elevation angles (degrees) between rx and each row of positions.

    The angle is measured from the lower endpoint of each pair toward the
    higher one; equal altitudes give 0 degrees.
    """
    r = as_xyz(rx)
    dz = np.abs(positions[:, 2] - r[2])
    horiz = np.hypot(positions[:, 0] - r[0], positions[:, 1] - r[1])
    return np.degrees(np.arctan2(dz, horiz))
