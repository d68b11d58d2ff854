"""Weierstrass elliptic machinery on a period lattice.

Provides the lattice invariants g2, g3 (via the rapidly convergent
Lambert/q-series form of the Eisenstein sums), evaluation of wp and
wp' by argument reduction plus a Laurent/duplication scheme, the first
Jacobi theta function, the exact periodic Green-singular comparison
function built from it, and the half-period Mobius transition maps of
the symmetric degree-2 torus map.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateLatticeError, PoleProximityError, PreconditionError
from .mobius import MobiusMap, chordal_distance, mobius_through_points

_DEGENERACY_EPS = 1e-10
_POLE_EPS = 1e-8
_LAURENT_ORDER = 34
_LAURENT_SAFE = 0.45  # evaluate the series only for |z| <= this * shortest period


@dataclass(frozen=True)
class Lattice:
    """Period lattice omega1*Z + omega2*Z with Im(omega2/omega1) > 0."""

    omega1: complex
    omega2: complex

    def __post_init__(self):
        o1, o2 = complex(self.omega1), complex(self.omega2)
        if o1 == 0 or o2 == 0:
            raise DegenerateLatticeError("lattice periods must be nonzero")
        if (o2 / o1).imag <= _DEGENERACY_EPS:
            raise DegenerateLatticeError(
                f"Im(omega2/omega1) = {(o2 / o1).imag:g} is not positive"
            )
        object.__setattr__(self, "omega1", o1)
        object.__setattr__(self, "omega2", o2)

    @property
    def tau(self) -> complex:
        return self.omega2 / self.omega1

    @property
    def cell_area(self) -> float:
        return float((np.conj(self.omega1) * self.omega2).imag)

    @property
    def is_rectangular(self) -> bool:
        return (
            abs(self.omega1.imag) <= 1e-12 * abs(self.omega1)
            and abs(self.omega2.real) <= 1e-12 * abs(self.omega2)
        )

    def scaled(self, t: complex) -> "Lattice":
        lat = Lattice(t * self.omega1, t * self.omega2)
        return lat

    def reduced_basis(self) -> tuple[complex, complex]:
        """Gauss-reduced basis (u, v): |u| <= |v|, positively oriented."""
        u, v = self.omega1, self.omega2
        for _ in range(256):
            if abs(v) < abs(u):
                u, v = v, u
            m = round((v * np.conj(u)).real / abs(u) ** 2)
            if m == 0:
                break
            v = v - m * u
        if (v / u).imag < 0:
            v = -v
        return u, v

    def reduce(self, z):
        """Shift z by lattice vectors into the cell centered at 0."""
        u, v = self.reduced_basis()
        det = u.real * v.imag - u.imag * v.real
        z = np.asarray(z, dtype=complex)
        a = (z.real * v.imag - z.imag * v.real) / det
        b = (u.real * z.imag - u.imag * z.real) / det
        out = z - np.rint(a) * u - np.rint(b) * v
        return out if out.shape else complex(out)


@dataclass(frozen=True)
class WeierstrassData:
    """Lattice invariants and evaluation tables for wp on a lattice."""

    lattice: Lattice
    g2: complex
    g3: complex
    e1: complex
    e2: complex
    e3: complex
    laurent: np.ndarray = field(default=None, repr=False)
    shortest_period: float = 0.0


def _lambert_series(q: complex, power: int, coeff: int) -> complex:
    """1 + coeff * sum n^power q^n / (1 - q^n), truncated at 1e-18."""
    total = 0.0 + 0.0j
    for n in range(1, 400):
        qn = q**n
        term = n**power * qn / (1.0 - qn)
        total += term
        if abs(term) < 1e-18 * max(1.0, abs(total)):
            break
    return 1.0 + coeff * total


def _laurent_coefficients(g2: complex, g3: complex, order: int) -> np.ndarray:
    """Coefficients c_k of wp(z) = z^-2 + sum c_k z^(2k-2), k = 2..order."""
    c = np.zeros(order + 1, dtype=complex)
    c[2] = g2 / 20.0
    c[3] = g3 / 28.0
    for k in range(4, order + 1):
        s = sum(c[m] * c[k - m] for m in range(2, k - 1))
        c[k] = 3.0 * s / ((2 * k + 1) * (k - 3))
    return c


def lattice_invariants(lat: Lattice) -> WeierstrassData:
    """Invariants g2, g3 and half-period values e1, e2, e3 of the lattice.

    g2 = 60 sum' w^-4 and g3 = 140 sum' w^-6; the slowly convergent
    lattice sums are evaluated through their accelerated q-series form
    (truncation error below 1e-14).  e1 = wp(omega1/2), e2 = wp(omega2/2),
    e3 = wp(-(omega1+omega2)/2).
    """
    u, v = lat.reduced_basis()
    tau = v / u
    q2 = np.exp(2j * np.pi * tau)
    e4 = _lambert_series(q2, 3, 240)
    e6 = _lambert_series(q2, 5, -504)
    g2 = (4.0 * np.pi**4 / 3.0) * e4 / u**4
    g3 = (8.0 * np.pi**6 / 27.0) * e6 / u**6
    laurent = _laurent_coefficients(g2, g3, _LAURENT_ORDER)
    data = WeierstrassData(
        lattice=lat,
        g2=complex(g2),
        g3=complex(g3),
        e1=0j,
        e2=0j,
        e3=0j,
        laurent=laurent,
        shortest_period=abs(u),
    )
    e1 = wp(data, lat.omega1 / 2.0)
    e2 = wp(data, lat.omega2 / 2.0)
    e3 = wp(data, -(lat.omega1 + lat.omega2) / 2.0)
    object.__setattr__(data, "e1", complex(e1))
    object.__setattr__(data, "e2", complex(e2))
    object.__setattr__(data, "e3", complex(e3))
    return data


def _wp_series(data: WeierstrassData, z: np.ndarray):
    """Laurent evaluation of (wp, wp') for |z| within the safe radius."""
    c = data.laurent
    z2 = z * z
    p = 1.0 / z2
    dp = -2.0 / (z2 * z)
    zpow = np.ones_like(z)  # z^(2k-4) running power
    for k in range(2, len(c)):
        term = c[k] * zpow * z2  # c_k z^(2k-2)
        p = p + term
        dp = dp + (2 * k - 2) * c[k] * zpow * z
        zpow = zpow * z2
    return p, dp


def _wp_both(data: WeierstrassData, z):
    z_in = np.asarray(z, dtype=complex)
    scalar = z_in.shape == ()
    zr = np.atleast_1d(data.lattice.reduce(z_in))
    rmin = data.shortest_period
    dist = np.abs(zr)
    if np.any(dist < _POLE_EPS * rmin):
        raise PoleProximityError(
            "evaluation point within pole-exclusion distance of a lattice point"
        )
    maxr = float(np.max(dist))
    doublings = max(0, int(np.ceil(np.log2(maxr / (_LAURENT_SAFE * rmin)))))
    zs = zr / (2.0**doublings)
    p, q = _wp_series(data, zs)
    g2 = data.g2
    for _ in range(doublings):
        pp = 6.0 * p * p - 0.5 * g2           # wp''
        q2 = q * q
        p_new = pp * pp / (4.0 * q2) - 2.0 * p
        q_new = 0.5 * ((6.0 * p * pp / q2 - 2.0) * q - pp * pp / (2.0 * q2 * q) * pp)
        p, q = p_new, q_new
    if scalar:
        return complex(p[0]), complex(q[0])
    return p.reshape(z_in.shape), q.reshape(z_in.shape)


def wp(data: WeierstrassData, z):
    """Weierstrass wp at z (argument-reduced; 1e-12 relative away from poles)."""
    return _wp_both(data, z)[0]


def wp_prime(data: WeierstrassData, z):
    """Derivative wp'(z)."""
    return _wp_both(data, z)[1]


def theta1(v, tau: complex):
    """First Jacobi theta function theta1(v | tau), q-series evaluation."""
    if tau.imag <= 0:
        raise PreconditionError("theta1 requires Im tau > 0")
    v = np.asarray(v, dtype=complex)
    scalar = v.shape == ()
    vv = np.atleast_1d(v)
    q = np.exp(1j * np.pi * tau)
    logq = -np.pi * tau.imag
    vmax = float(np.max(np.abs(vv.imag))) if vv.size else 0.0
    total = np.zeros_like(vv)
    sign = 1.0
    for n in range(0, 200):
        total = total + sign * q ** ((n + 0.5) ** 2) * np.sin((2 * n + 1) * vv)
        sign = -sign
        if (n + 1.5) ** 2 * logq + (2 * n + 3) * vmax < -42.0:  # next term < ~1e-18
            break
    out = 2.0 * total
    return complex(out[0]) if scalar else out.reshape(v.shape)


def green_singular(lat: Lattice, z):
    """Doubly periodic comparison function with log singularities.

    H(z) = log|theta1(pi z / w1 | tau)|^2 - (2 pi / Im tau) Im(z / w1)^2
    on the reduced basis (w1, w2); Delta_flat H = 4 pi sum_deltas - 4 pi / A.
    Additive normalization is arbitrary (callers difference it away).
    """
    u, v = lat.reduced_basis()
    tau = v / u
    z = np.asarray(z, dtype=complex)
    scalar = z.shape == ()
    zr = np.atleast_1d(lat.reduce(z))
    t = theta1(np.pi * zr / u, tau)
    with np.errstate(divide="ignore"):
        h = np.log(np.abs(t) ** 2) - (2.0 * np.pi / tau.imag) * (zr / u).imag ** 2
    return float(h[0]) if scalar else h.reshape(z.shape)


def _symmetric_map_constant(data: WeierstrassData) -> complex:
    """Normalization sqrt((e3 - e1)(e2 - e3)) of the symmetric torus map."""
    val = (data.e3 - data.e1) * (data.e2 - data.e3)
    return complex(np.sqrt(val))


def symmetric_map_values(data: WeierstrassData, z):
    """(wp(z) - e3) / sqrt((e3-e1)(e2-e3)) -- the symmetric degree-2 map."""
    return (wp(data, z) - data.e3) / _symmetric_map_constant(data)


def mobius_of_shift(data: WeierstrassData, shift: complex) -> MobiusMap:
    """Mobius map M with psi(z + shift) = M(psi(z)) for the symmetric map.

    Constructed numerically from three generic samples, then validated at
    twenty more points to 1e-9 in the chordal metric.
    """
    lat = data.lattice
    fractions = [(0.171, 0.233), (0.377, 0.133), (0.289, 0.411)]
    src, dst = [], []
    for fa, fb in fractions:
        z = fa * lat.omega1 + fb * lat.omega2
        src.append(complex(symmetric_map_values(data, z)))
        dst.append(complex(symmetric_map_values(data, z + shift)))
    m = mobius_through_points(src, dst)
    rng = np.random.default_rng(71)
    for _ in range(20):
        fa, fb = rng.uniform(0.05, 0.95, size=2)
        z = fa * lat.omega1 + fb * lat.omega2
        a = m(complex(symmetric_map_values(data, z)))
        b = complex(symmetric_map_values(data, z + shift))
        if chordal_distance(a, b) > 1e-9:
            from .errors import TwistConsistencyError

            raise TwistConsistencyError(
                f"half-period transition validation failed at z = {z:.4f}"
            )
    return m


def half_period_mobius(data: WeierstrassData, direction: str) -> MobiusMap:
    """Transition map across half of omega1 ('half1') or omega2 ('half2')."""
    if direction == "half1":
        shift = data.lattice.omega1 / 2.0
    elif direction == "half2":
        shift = data.lattice.omega2 / 2.0
    else:
        raise PreconditionError("direction must be 'half1' or 'half2'")
    return mobius_of_shift(data, shift)
