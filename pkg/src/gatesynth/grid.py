"""Discretization of the Bloch sphere into polar caps and (theta, phi) cells.

With resolution k the cell angular width is eps = pi/k.  The sphere splits
into a north cap (theta < eps), a south cap (theta > pi - eps) and
(k - 2) * 2k interior cells indexed by theta band n in [1, k-2] and phi band
m in [0, 2k-1].  Band membership uses half-open floor binning so every point
belongs to exactly one cell; theta exactly pi - eps falls in the last
interior band.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .su2 import TWO_PI, BlochPoint


class CellId(NamedTuple):
    kind: str  # "north", "south" or "cell"
    n: int = -1  # theta band, interior cells only
    m: int = -1  # phi band, interior cells only


NORTH_CAP = CellId("north")
SOUTH_CAP = CellId("south")


class BlochGrid:
    """Immutable description of the cap/cell partition at resolution k."""

    def __init__(self, k: int):
        if k < 3:
            raise ValueError("grid resolution k must be at least 3")
        self.k = int(k)
        self.eps = math.pi / self.k
        self.n_phi = 2 * self.k
        self.n_cells = 2 + (self.k - 2) * self.n_phi

    def __repr__(self) -> str:
        return f"BlochGrid(k={self.k})"

    # --- index <-> CellId -------------------------------------------------

    def cell_index(self, cid: CellId) -> int:
        if cid.kind == "north":
            return 0
        if cid.kind == "south":
            return 1
        if not (1 <= cid.n <= self.k - 2 and 0 <= cid.m < self.n_phi):
            raise ValueError(f"invalid cell id {cid} for k={self.k}")
        return 2 + (cid.n - 1) * self.n_phi + cid.m

    def cell_at(self, index: int) -> CellId:
        if index == 0:
            return NORTH_CAP
        if index == 1:
            return SOUTH_CAP
        if not 2 <= index < self.n_cells:
            raise ValueError(f"cell index {index} out of range")
        n, m = divmod(index - 2, self.n_phi)
        return CellId("cell", n + 1, m)

    # --- classification ---------------------------------------------------

    def classify_index(self, theta: float, phi: float) -> int:
        eps = self.eps
        if theta < eps:
            return 0
        if theta > math.pi - eps:
            return 1
        n = int(theta / eps)
        if n > self.k - 2:  # theta == pi - eps boundary
            n = self.k - 2
        m = int(phi / eps)
        if m >= self.n_phi:  # phi == 2*pi float edge
            m = self.n_phi - 1
        return 2 + (n - 1) * self.n_phi + m

    def classify(self, p: BlochPoint) -> CellId:
        return self.cell_at(self.classify_index(p.theta, p.phi))

    def classify_many(self, theta: np.ndarray, phi: np.ndarray) -> np.ndarray:
        """Vectorized classify_index; bitwise-identical binning to the scalar path."""
        eps = self.eps
        n = np.clip(np.floor(theta / eps).astype(np.int64), 1, self.k - 2)
        m = np.minimum(np.floor(phi / eps).astype(np.int64), self.n_phi - 1)
        idx = 2 + (n - 1) * self.n_phi + m
        idx = np.where(theta < eps, 0, idx)
        return np.where(theta > math.pi - eps, 1, idx)

    # --- geometry ---------------------------------------------------------

    def theta_range(self, cid: CellId) -> tuple[float, float]:
        if cid.kind == "north":
            return 0.0, self.eps
        if cid.kind == "south":
            return math.pi - self.eps, math.pi
        return cid.n * self.eps, (cid.n + 1) * self.eps

    def phi_range(self, cid: CellId) -> tuple[float, float]:
        if cid.kind in ("north", "south"):
            return 0.0, TWO_PI
        return cid.m * self.eps, (cid.m + 1) * self.eps

    def cell_center(self, cid: CellId) -> BlochPoint:
        """Representative point: the pole for a cap, the angular center otherwise."""
        if cid.kind == "north":
            return BlochPoint(0.0, 0.0)
        if cid.kind == "south":
            return BlochPoint(math.pi, 0.0)
        return BlochPoint((cid.n + 0.5) * self.eps, (cid.m + 0.5) * self.eps)

    # --- sampling ----------------------------------------------------------

    def sample_in_cell(self, cid: CellId, rng: np.random.Generator) -> BlochPoint:
        """Area-uniform point within the cell; classify(result) is always cid."""
        index = self.cell_index(cid)  # validates the id
        t_lo, t_hi = self.theta_range(cid)
        u = rng.uniform(math.cos(t_hi), math.cos(t_lo))
        theta = math.acos(max(-1.0, min(1.0, u)))
        p_lo, p_hi = self.phi_range(cid)
        phi = min(rng.uniform(p_lo, p_hi), math.nextafter(p_hi, p_lo))
        # clamp away float edge cases so the closure property holds exactly
        if cid.kind == "south":
            theta = min(max(theta, math.nextafter(t_lo, math.pi)), math.pi)
        else:
            theta = min(max(theta, t_lo), math.nextafter(t_hi, t_lo))
        point = BlochPoint(theta, phi)
        assert self.classify_index(theta, phi) == index
        return point


def sample_uniform_sphere(rng: np.random.Generator) -> BlochPoint:
    """Area-uniform point: cos(theta) uniform on [-1, 1], phi uniform on [0, 2*pi)."""
    u = rng.uniform(-1.0, 1.0)
    phi = rng.uniform(0.0, TWO_PI) % TWO_PI
    return BlochPoint(math.acos(max(-1.0, min(1.0, u))), phi)


def sample_uniform_sphere_many(rng: np.random.Generator, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized area-uniform sampling; draws cos(theta) first, then phi."""
    u = rng.uniform(-1.0, 1.0, size=n)
    phi = rng.uniform(0.0, TWO_PI, size=n) % TWO_PI
    return np.arccos(np.clip(u, -1.0, 1.0)), phi
