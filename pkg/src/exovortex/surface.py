"""Domain surfaces: the round sphere and the flat torus.

A surface is described by a conformal chart density lam2 with
ds^2 = lam2(z) |dz|^2.  The sphere of Gauss curvature kappa0 uses two
stereographic charts with density (4/kappa0)/(1+|z|^2)^2 and transition
z = 1/zeta; the torus uses one periodic chart of constant density.
Quadrature grids carry weights that already include the metric volume
factor, so integral(f) = sum(w_i * f(z_i)).
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

from .elliptic import Lattice
from .errors import PreconditionError

NORTH, SOUTH = 0, 1

# chart disks |z| <= CHART_RADIUS on both charts; overlap needs radius > 1
CHART_RADIUS = np.sqrt(2.0)


@dataclass(frozen=True)
class SurfaceGeometry:
    """Round sphere or flat torus with constant Gauss curvature.

    kappa0 * volume = 2*pi*(2 - 2*genus) holds by construction.
    """

    kind: str                      # "sphere" | "torus"
    genus: int
    kappa0: float
    volume: float
    stereo_radius: float = 0.0     # sphere: 1/sqrt(kappa0)
    lattice: Lattice | None = None

    @staticmethod
    def sphere(kappa0: float) -> "SurfaceGeometry":
        if kappa0 <= 0:
            raise PreconditionError("sphere requires kappa0 > 0")
        return SurfaceGeometry(
            kind="sphere",
            genus=0,
            kappa0=float(kappa0),
            volume=4.0 * np.pi / kappa0,
            stereo_radius=1.0 / np.sqrt(kappa0),
        )

    @staticmethod
    def torus(lattice: Lattice, volume: float | None = None) -> "SurfaceGeometry":
        vol = lattice.cell_area if volume is None else float(volume)
        if vol <= 0:
            raise PreconditionError("torus volume must be positive")
        return SurfaceGeometry(
            kind="torus", genus=1, kappa0=0.0, volume=vol, lattice=lattice
        )


@dataclass(frozen=True)
class SampleGrid:
    """Quadrature nodes on the surface.

    points are chart coordinates, charts labels which chart each point
    lives in (always NORTH on the torus), and weights include the metric
    volume factor.  exclusion_radius records the chart radius of the
    disks removed around field zeros.
    """

    points: np.ndarray
    weights: np.ndarray
    charts: np.ndarray
    exclusion_radius: float = 0.0
    resolution: int = 0
    shape: tuple = field(default=())   # torus: (N, N) layout of the full grid

    def integrate(self, values: np.ndarray) -> float:
        return float(np.real(np.sum(self.weights * values)))

    def to_csv(self, path: str) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["re_z", "im_z", "weight"])
            for z, w in zip(self.points, self.weights):
                writer.writerow([repr(float(z.real)), repr(float(z.imag)), repr(float(w))])


def metric_density(geom: SurfaceGeometry, z, chart: int = NORTH):
    """Conformal factor lam2 with ds^2 = lam2 |dz|^2 at chart point z.

    Both sphere charts share the same density formula; the torus density
    is the constant volume / cell_area.
    """
    z = np.asarray(z)
    if geom.kind == "torus":
        dens = geom.volume / geom.lattice.cell_area
        return np.broadcast_to(np.asarray(dens), z.shape).copy() if z.shape else float(dens)
    dens = (4.0 / geom.kappa0) / (1.0 + np.abs(z) ** 2) ** 2
    return dens if z.shape else float(dens)


def gauss_curvature(geom: SurfaceGeometry, z, chart: int = NORTH):
    """Gauss curvature -Delta_flat(log lam2)/(2 lam2) at z.

    For both supported geometries the closed form collapses to the
    constant kappa0 (the finite-difference oracle in the tests confirms
    the cancellation).
    """
    z = np.asarray(z)
    val = np.full(z.shape, geom.kappa0) if z.shape else float(geom.kappa0)
    return val


def _chart_transition(z):
    """Sphere chart transition z -> 1/z (north <-> south)."""
    return 1.0 / z


def _smoothstep(x):
    """C-infinity step: 0 for x <= 0, 1 for x >= 1."""
    x = np.clip(x, 0.0, 1.0)
    with np.errstate(divide="ignore", over="ignore", invalid="ignore"):
        f = np.where(x > 0.0, np.exp(-1.0 / np.maximum(x, 1e-300)), 0.0)
        g = np.where(x < 1.0, np.exp(-1.0 / np.maximum(1.0 - x, 1e-300)), 0.0)
    return f / (f + g)


def _partition_weight(z):
    """Partition-of-unity weight of a chart point; chi(z) + chi(1/z) = 1."""
    t = np.log(np.abs(z) ** 2 + 1e-300)
    cap = np.log(CHART_RADIUS**2)
    # chi = 1 inside |z|^2 <= 1/cap-region, 0 outside the chart disk
    return _smoothstep((cap - t) / (2.0 * cap))


def _gauss_legendre(n: int, a: float, b: float):
    x, w = np.polynomial.legendre.leggauss(n)
    return 0.5 * (b - a) * x + 0.5 * (b + a), 0.5 * (b - a) * w


def build_grid(
    geom: SurfaceGeometry,
    resolution: int,
    exclusions: list[tuple[complex, float]] | None = None,
) -> SampleGrid:
    """Quadrature grid at the given resolution, minus exclusion disks.

    Torus: uniform periodic N x N grid offset by half a spacing (so the
    half-lattice points stay off-grid), equal weights.  Sphere: two
    stereographic polar charts, Gauss-Legendre radially and uniform in
    angle, blended by a smooth partition of unity.

    Exclusions are (chart coordinate, chart radius) pairs; points inside
    any disk are dropped.  Disks covering more than half the surface are
    rejected.
    """
    if resolution < 8:
        raise PreconditionError("resolution must be at least 8")
    exclusions = list(exclusions or [])

    if sum(np.pi * r * r for _, r in exclusions) > 0.5 * geom.volume:
        raise PreconditionError("exclusion disks cover more than half the surface")

    if geom.kind == "torus":
        lat = geom.lattice
        n = resolution
        s = (np.arange(n) + 0.5) / n
        a, b = np.meshgrid(s, s, indexing="ij")
        pts = (a * lat.omega1 + b * lat.omega2).ravel()
        dens = geom.volume / lat.cell_area
        w = np.full(pts.shape, dens * lat.cell_area / (n * n))
        charts = np.zeros(pts.shape, dtype=int)
        grid = SampleGrid(pts, w, charts, 0.0, resolution, (n, n))
        return _apply_exclusions(grid, exclusions, torus_lattice=lat)

    # sphere: polar grid per chart
    nr, nt = resolution, 2 * resolution
    r_nodes, r_w = _gauss_legendre(nr, 0.0, CHART_RADIUS)
    theta = 2.0 * np.pi * np.arange(nt) / nt
    t_w = 2.0 * np.pi / nt
    rr, tt = np.meshgrid(r_nodes, theta, indexing="ij")
    zz = rr * np.exp(1j * tt)
    base_w = np.outer(r_w, np.full(nt, t_w)) * rr  # polar area element r dr dtheta
    lam2 = metric_density(geom, zz)
    chi = _partition_weight(zz)
    w_chart = (base_w * lam2 * chi).ravel()
    pts = zz.ravel()
    keep = w_chart > 1e-300
    points = np.concatenate([pts[keep], pts[keep]])
    weights = np.concatenate([w_chart[keep], w_chart[keep]])
    charts = np.concatenate(
        [np.full(keep.sum(), NORTH), np.full(keep.sum(), SOUTH)]
    )
    grid = SampleGrid(points, weights, charts, 0.0, resolution)
    return _apply_exclusions(grid, exclusions)


def _apply_exclusions(grid: SampleGrid, exclusions, torus_lattice: Lattice | None = None):
    if not exclusions:
        return grid
    keep = np.ones(grid.points.shape, dtype=bool)
    for center, radius in exclusions:
        d = grid.points - center
        if torus_lattice is not None:
            d = torus_lattice.reduce(d)
        keep &= np.abs(d) >= radius
    rad = max(r for _, r in exclusions)
    return SampleGrid(
        grid.points[keep],
        grid.weights[keep],
        grid.charts[keep],
        rad,
        grid.resolution,
        (),
    )
