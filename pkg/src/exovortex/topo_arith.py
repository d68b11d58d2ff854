"""Exact integer/rational arithmetic for topological invariants.

Selection rules for achievable vortex numbers, moduli-space index
formulas, the Bradlow area inequality, and the genus-g Witten-index
counting sum.  Everything here is exact big-integer / rational
arithmetic; no floating point enters this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError

INDEX_KINDS = ("flat", "section", "combined", "exotic", "vortex")


@dataclass(frozen=True)
class IndexParams:
    """Inputs to the moduli-dimension formulas.

    genus, vortex number k, number of colors, number of flavors, and the
    complex dimension n of the target space (n = colors for the twisted
    holomorphic-map problem).
    """

    genus: int = 0
    k: int = 0
    colors: int = 1
    flavors: int = 1
    n: int = 1

    def __post_init__(self):
        if self.genus < 0:
            raise PreconditionError("genus must be nonnegative")
        if self.colors < 1 or self.flavors < 1 or self.n < 1:
            raise PreconditionError("colors, flavors and n must be positive")


@dataclass(frozen=True)
class CountingParams:
    """Inputs to the vortex counting sum.

    area is the normalized area (coupling^2 * tau * vol / 4pi) as an exact
    rational; level is the Chern-Simons level.
    """

    genus: int = 0
    flavors: int = 1
    level: int = -1
    area: Fraction = Fraction(0)
    k: int = 0

    def __post_init__(self):
        if self.genus < 0:
            raise PreconditionError("genus must be nonnegative")
        if self.flavors < 1:
            raise PreconditionError("flavors must be positive")
        object.__setattr__(self, "area", Fraction(self.area))


@dataclass(frozen=True)
class ResidueClass:
    """Arithmetic progression {k : k = residue (mod modulus)}."""

    modulus: int
    residue: int

    def __contains__(self, k: int) -> bool:
        return k % self.modulus == self.residue

    def members(self, lo: int, hi: int) -> list[int]:
        return [k for k in range(lo, hi + 1) if k in self]

    def __str__(self) -> str:
        return f"k = {self.residue} (mod {self.modulus})"


def generalized_binomial(x: int, m: int) -> int:
    """C(x, m) via the falling factorial, for integer x of either sign.

    C(x, m) = x (x-1) ... (x-m+1) / m! for m >= 0, and 0 for m < 0.
    Exact integer arithmetic; the division is always exact.
    """
    if m < 0:
        return 0
    num = 1
    for i in range(m):
        num *= x - i
    return num // math.factorial(m)


def allowed_vortex_numbers(n: int, genus: int, twist_class: int = 0) -> ResidueClass:
    """Residue class of achievable vortex numbers for a CP^n target.

    twist_class is the element of Z_{n+1} carried by the flat-bundle
    topology (0 for the trivial bundle).  On the sphere only the trivial
    class exists, so a nonzero class at genus 0 is rejected.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    if genus < 0:
        raise PreconditionError("genus must be nonnegative")
    modulus = n + 1
    twist_class %= modulus
    if genus == 0 and twist_class != 0:
        raise PreconditionError(
            "no nontrivial flat-bundle classes exist on the sphere"
        )
    return ResidueClass(modulus, (n * (2 * genus - 2) + twist_class) % modulus)


def moduli_index(params: IndexParams, which: str) -> int:
    """Real expected dimension of the chosen moduli problem.

    which selects the formula:
      flat      -- flat PSU(n+1) connections: ((n+1)^2 - 1)(2g - 2)
      section   -- twisted holomorphic sections: 2k + 3n(2 - 2g)
      combined  -- flat + section: 2k + n(1 - n)(2 - 2g)  (= 2k for n = 1)
      exotic    -- same combined formula, named per the nonAbelian problem
      vortex    -- gauge-theory vortices: 2k + colors(flavors - colors)(2 - 2g)
    """
    g, k, n = params.genus, params.k, params.n
    if which == "flat":
        return ((n + 1) ** 2 - 1) * (2 * g - 2)
    if which == "section":
        return 2 * k + 3 * n * (2 - 2 * g)
    if which in ("combined", "exotic"):
        return 2 * k + n * (1 - n) * (2 - 2 * g)
    if which == "vortex":
        return 2 * k + params.colors * (params.flavors - params.colors) * (2 - 2 * g)
    raise PreconditionError(f"unknown index kind {which!r}; expected one of {INDEX_KINDS}")


def witten_index(params: CountingParams) -> int:
    """Euler character of the k-vortex quantum mechanics at genus g.

    sum_{j=0}^{g} level^j flavors^(g-j) C(g, j)
        * C(level*(area - k) + flavors*(k - g + 1) - 1,
            flavors*(k - g + 1) + (g - j) - 1)

    The top binomial argument must be an exact integer, which requires
    level*(area - k) integral.
    """
    g, nf, lam, a, k = params.genus, params.flavors, params.level, params.area, params.k
    top_frac = lam * (a - k) + nf * (k - g + 1) - 1
    if Fraction(top_frac).denominator != 1:
        raise PreconditionError(
            f"level*(area - k) = {lam * (a - k)} is not an integer; "
            "the counting sum is only defined for integral arguments"
        )
    top = int(top_frac)
    total = 0
    for j in range(g + 1):
        bottom = nf * (k - g + 1) + (g - j) - 1
        total += (
            lam**j
            * nf ** (g - j)
            * generalized_binomial(g, j)
            * generalized_binomial(top, bottom)
        )
    return total


def bradlow_check(params: CountingParams) -> tuple[bool, str]:
    """Area inequality gating the existence of k-vortex configurations.

    In the exotic regime (negative level accompanying negative coupling)
    vortices produce area and the constraint is k > area, strictly.  In
    the nonexotic regime it is the usual k < area.
    """
    exotic = params.level < 0
    k, a = params.k, params.area
    if exotic:
        ok = k > a
        return ok, (
            f"exotic regime (level {params.level} < 0): require k > area; "
            f"k = {k}, area = {a} -> {'admissible' if ok else 'excluded'}"
        )
    ok = k < a
    return ok, (
        f"nonexotic regime (level {params.level} >= 0): require k < area; "
        f"k = {k}, area = {a} -> {'admissible' if ok else 'excluded'}"
    )
