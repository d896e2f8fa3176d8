"""One-step recursion maps for every system family.

Covers the quadratic family (indistinguishable zeros), its B/C-parameter
generalization, the cubic double-root family and its double-step identity,
the square-root intermediate systems with free exponents q and r, systems
conjugated by an invertible linear change of variables, and the k = 1
coefficient table together with the common-zero constraint residual.

Sign conventions: every map takes the per-step sign s in {+1, -1}; for the
quadratic family flipping s merely swaps the two (label-free) components,
while for the cubic family the two signs give genuinely different ordered
states.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import SingularChangeError, DegenerateQuadraticError
from .numeric import ComplexPair, Sign, cpow, sqrt_branch
from .polybridge import DistinctZeroPair, ZeroPair
from .ysystem import YParams, YState


def _require_int(name: str, value: int) -> None:
    if not isinstance(value, int) or isinstance(value, bool):
        raise TypeError(f"{name} must be an integer, got {value!r}")


@dataclass(frozen=True)
class QuadraticFamilyParams:
    """Parameters (a, b, k) of the quadratic (indistinguishable-zeros) family."""

    a: complex
    b: complex
    k: int

    def __post_init__(self) -> None:
        _require_int("k", self.k)
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))

    def y_params(self) -> YParams:
        """Coefficient-evolution parameters: alpha = 2a, beta = 2b, gamma = a**2 - b**2."""
        return YParams(
            2 * self.a, 2 * self.b, self.a * self.a - self.b * self.b,
            self.k, 2 * self.k, 2 * (1 + self.k),
        )


@dataclass(frozen=True)
class CubicFamilyParams:
    """Parameters (a, b, k) of the cubic (double-root) family."""

    a: complex
    b: complex
    k: int

    def __post_init__(self) -> None:
        _require_int("k", self.k)
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))

    def y_params(self) -> YParams:
        """Coefficient-evolution parameters: alpha = 3a, beta = 3b, gamma = 3(a**2 - b**2)."""
        return YParams(
            3 * self.a, 3 * self.b, 3 * (self.a * self.a - self.b * self.b),
            self.k, 2 * self.k, 2 * (1 + self.k),
        )


@dataclass(frozen=True)
class SqrtSystemParams:
    """Parameters of the square-root intermediate systems (free q and r)."""

    alpha: complex
    beta: complex
    gamma: complex
    k: int
    q: int
    r: int

    def __post_init__(self) -> None:
        for name in ("k", "q", "r"):
            _require_int(name, getattr(self, name))
        object.__setattr__(self, "alpha", complex(self.alpha))
        object.__setattr__(self, "beta", complex(self.beta))
        object.__setattr__(self, "gamma", complex(self.gamma))

    def y_params(self) -> YParams:
        return YParams(self.alpha, self.beta, self.gamma, self.k, self.q, self.r)


@dataclass(frozen=True)
class GeneralizedParams:
    """Parameters of the generalized B/C system, with derived coefficients.

    Invariants checked at construction: B2 != 0 (divisor in the update of the
    second component) and B1**2 C2 + B2**2 C1 - B1 B2 C3 != 0 (divisor in d).
    """

    alpha: complex
    beta: complex
    B1: complex
    B2: complex
    C1: complex
    C2: complex
    C3: complex
    k: int

    def __post_init__(self) -> None:
        _require_int("k", self.k)
        for name in ("alpha", "beta", "B1", "B2", "C1", "C2", "C3"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.B2 == 0:
            raise ValueError("B2 must be nonzero")
        if self.denom == 0:
            raise ValueError("B1**2 C2 + B2**2 C1 - B1 B2 C3 must be nonzero")

    @property
    def denom(self) -> complex:
        return self.B1 * self.B1 * self.C2 + self.B2 * self.B2 * self.C1 - self.B1 * self.B2 * self.C3

    @property
    def d(self) -> complex:
        return 1 / (2 * self.denom)

    @property
    def g1(self) -> complex:
        return 2 * self.B1 * self.C2 - self.B2 * self.C3

    @property
    def g2(self) -> complex:
        return 2 * self.B2 * self.C1 - self.B1 * self.C3

    @property
    def g3(self) -> complex:
        return self.B2 * self.C3 - 2 * self.B1 * self.C2

    @property
    def gamma(self) -> complex:
        """The coefficient-evolution inhomogeneity implied by the B/C assignment."""
        num = (self.C3 * self.C3 - 4 * self.C1 * self.C2) * (self.beta * self.beta - self.alpha * self.alpha)
        return num / (4 * self.denom)

    def e_table(self, s: Sign) -> tuple[tuple[complex, complex], tuple[complex, complex]]:
        """The 2x2 linear-part coefficient table for the given sign.

        One construction serves all k: the k = -1 rational form uses the same
        table as numerator (the two printed variants of the (1,2) entry are
        algebraically identical; the canonical d*B2*(alpha g1 + s beta g3)
        form is used).
        """
        d, g1, g2, g3 = self.d, self.g1, self.g2, self.g3
        a, b = self.alpha, self.beta
        e11 = d * (a * g1 * self.B1 + s * b * self.B2 * g2)
        e12 = d * self.B2 * (a * g1 + s * b * g3)
        e21 = a * (1 - self.B1 * d * g1) * (self.B1 / self.B2) - self.B1 * d * s * b * g2
        e22 = a * (1 - self.B1 * d * g1) - self.B1 * d * s * b * g3
        return ((e11, e12), (e21, e22))

    def y_params(self) -> YParams:
        return YParams(self.alpha, self.beta, self.gamma, self.k, 2 * self.k, 2 * (1 + self.k))


@dataclass(frozen=True)
class LinearChange:
    """Invertible linear change of dependent variables z = A x."""

    A11: complex
    A12: complex
    A21: complex
    A22: complex

    def __post_init__(self) -> None:
        for name in ("A11", "A12", "A21", "A22"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.det == 0:
            raise SingularChangeError("change of variables has zero determinant")

    @property
    def det(self) -> complex:
        return self.A11 * self.A22 - self.A12 * self.A21

    def apply(self, x: ComplexPair) -> ComplexPair:
        x1, x2 = x
        return (self.A11 * x1 + self.A12 * x2, self.A21 * x1 + self.A22 * x2)

    def invert(self, z: ComplexPair) -> ComplexPair:
        z1, z2 = z
        return (
            (self.A22 * z1 - self.A12 * z2) / self.det,
            (-self.A21 * z1 + self.A11 * z2) / self.det,
        )


IDENTITY_CHANGE = LinearChange(1, 0, 0, 1)


class K1CoeffTable(NamedTuple):
    """Quadratic-form coefficients of a conjugated k = 1 system.

    Row n gives z_n' = a_n1 z1**2 + a_n2 z2**2 + a_n3 z1 z2.  The lambda and
    eta values are the intermediate linear-factor coefficients the rows were
    assembled from (the common-zero line is lambda2 z1 + lambda1 z2 = 0).
    """

    a11: complex
    a12: complex
    a13: complex
    a21: complex
    a22: complex
    a23: complex
    lambda1: complex
    lambda2: complex
    eta11: complex
    eta12: complex
    eta21: complex
    eta22: complex

    @property
    def rows(self) -> tuple[tuple[complex, complex, complex], tuple[complex, complex, complex]]:
        return ((self.a11, self.a12, self.a13), (self.a21, self.a22, self.a23))


def step_quadratic_family(p: QuadraticFamilyParams, s: Sign, x: ZeroPair, step: int | None = None) -> ZeroPair:
    """One step of the quadratic family (flipping s swaps the components)."""
    x1, x2 = x
    w = x1 + x2
    base = cpow(-w, p.k, step=step)
    diff = p.b * (x1 - x2)
    return (base * (p.a * w - s * diff), base * (p.a * w + s * diff))


def step_cubic_family(p: CubicFamilyParams, s: Sign, x: DistinctZeroPair, step: int | None = None) -> DistinctZeroPair:
    """One step of the cubic family (ordered: the labels are meaningful)."""
    x1, x2 = x
    w = 2 * x1 + x2
    base = cpow(w, p.k, step=step)
    sign_k = -1 if p.k % 2 else 1
    diff = s * p.b * (x1 - x2)
    return DistinctZeroPair(
        base * (sign_k * p.a * w - diff),
        base * (sign_k * p.a * w + 2 * diff),
    )


def double_step_cubic(p: CubicFamilyParams, s01: Sign, x: DistinctZeroPair, step: int | None = None) -> DistinctZeroPair:
    """Two steps of the cubic family at once; only the sign product matters."""
    x1, x2 = x
    w = 2 * x1 + x2
    v = x1 - x2
    sign_k = -1 if p.k % 2 else 1
    prefactor = (
        sign_k
        * cpow(complex(3), p.k + 1, step=step)
        * cpow(p.a, p.k, step=step)
        * cpow(w, p.k * (p.k + 2), step=step)
    )
    aw = p.a * p.a * w
    bv = s01 * p.b * p.b * v
    return DistinctZeroPair(prefactor * (aw + bv), prefactor * (aw - 2 * bv))


def step_generalized(p: GeneralizedParams, s: Sign, z: ComplexPair, step: int | None = None) -> ComplexPair:
    """One step of the generalized B/C system."""
    z1, z2 = z
    e = p.e_table(s)
    base = cpow(p.B1 * z1 + p.B2 * z2, p.k, step=step)
    return (
        base * (e[0][0] * z1 + e[0][1] * z2),
        base * (e[1][0] * z1 + e[1][1] * z2),
    )


def step_sqrt_quadratic(p: SqrtSystemParams, s: Sign, x: ZeroPair, step: int | None = None) -> ZeroPair:
    """One step of the square-root quadratic system (free exponents q, r)."""
    x1, x2 = x
    t = -(x1 + x2)
    radicand = p.alpha * p.alpha * cpow(t, 2 * (p.k + 1), step=step)
    if p.beta != 0:
        radicand -= 4 * p.beta * p.beta * x1 * x2 * cpow(t, p.q, step=step)
    if p.gamma != 0:
        radicand -= 4 * p.gamma * cpow(t, p.r, step=step)
    delta = sqrt_branch(radicand, s)
    head = -p.alpha * cpow(t, p.k + 1, step=step)
    return ((head - delta) / 2, (head + delta) / 2)


def step_sqrt_cubic(
    p: SqrtSystemParams,
    s: Sign,
    x: DistinctZeroPair,
    step: int | None = None,
    printed_prefactor: bool = False,
) -> DistinctZeroPair:
    """One step of the square-root cubic system (free exponents q, r).

    The radicand carries the full dependent coefficient x1 (x1 + 2 x2) of the
    double-root cubic (the consistent choice; the source display abbreviates
    it inconsistently).  With ``printed_prefactor`` the uncorrected 1/2
    inversion prefactor is used instead of 1/3; that variant exists only for
    the discrepancy report.
    """
    x1, x2 = x
    t = -(2 * x1 + x2)
    y2 = x1 * (x1 + 2 * x2)
    radicand = p.alpha * p.alpha * cpow(t, 2 * (p.k + 1), step=step)
    if p.beta != 0:
        radicand -= 3 * p.beta * p.beta * y2 * cpow(t, p.q, step=step)
    if p.gamma != 0:
        radicand -= 3 * p.gamma * cpow(t, p.r, step=step)
    delta = sqrt_branch(radicand, s)
    head = -p.alpha * cpow(t, p.k + 1, step=step)
    if printed_prefactor:
        return DistinctZeroPair((head - delta) / 2, (head + 2 * delta) / 2)
    return DistinctZeroPair((head - delta) / 3, (head + 2 * delta) / 3)


def _theta(k: int, n1: int, n2: int, n: int, a: complex, b: complex, s: Sign) -> complex:
    """Theta coefficient: (-1)**k n1 a + (-1)**n n2 s b."""
    return (-1 if k % 2 else 1) * n1 * a + (-1 if n % 2 else 1) * n2 * s * b


def _conjugated_f_coeffs(A: LinearChange, p: CubicFamilyParams, s: Sign) -> list[ComplexPair]:
    """(z1, z2) coefficients of the two linear factors f_n of the conjugated map.

    The theta subscripts follow the conjugation algebra (the printed index
    pattern fails the probe-point oracle; the pattern below is the one the
    oracle certifies): f_n = (theta_{k;2,n;n} A22 - theta_{k;1,n;n+1} A21) z1
    + (theta_{k;1,n;n+1} A11 - theta_{k;2,n;n} A12) z2.
    """
    coeffs = []
    for n in (1, 2):
        t2 = _theta(p.k, 2, n, n, p.a, p.b, s)
        t1 = _theta(p.k, 1, n, n + 1, p.a, p.b, s)
        coeffs.append((t2 * A.A22 - t1 * A.A21, t1 * A.A11 - t2 * A.A12))
    return coeffs


def step_conjugated(
    A: LinearChange, p: CubicFamilyParams, s: Sign, z: ComplexPair, step: int | None = None
) -> ComplexPair:
    """One step of the cubic family conjugated by the linear change A."""
    z1, z2 = z
    base_lin = (2 * A.A22 - A.A21) * z1 + (A.A11 - 2 * A.A12) * z2
    (f11, f12), (f21, f22) = _conjugated_f_coeffs(A, p, s)
    f1 = f11 * z1 + f12 * z2
    f2 = f21 * z1 + f22 * z2
    prefactor = cpow(A.det, -(p.k + 1), step=step) * cpow(base_lin, p.k, step=step)
    return (
        prefactor * (A.A11 * f1 + A.A12 * f2),
        prefactor * (A.A21 * f1 + A.A22 * f2),
    )


def k1_coeff_table(A: LinearChange, p: CubicFamilyParams, s: Sign) -> K1CoeffTable:
    """Quadratic-form coefficients of the conjugated map at k = 1.

    Expands D**-2 (lambda2 z1 + lambda1 z2)(A_n1 f1 + A_n2 f2) into the six
    a_nj; the resulting table matches :func:`step_conjugated` on probe points
    and satisfies the common-zero constraint residual identically.
    """
    if p.k != 1:
        raise ValueError("coefficient table is defined for k = 1 only")
    lambda1 = A.A11 - 2 * A.A12
    lambda2 = 2 * A.A22 - A.A21
    (f11, f12), (f21, f22) = _conjugated_f_coeffs(A, p, s)
    # eta_nm: z_m coefficient of A_n1 f1 + A_n2 f2.
    eta11 = A.A11 * f11 + A.A12 * f21
    eta12 = A.A11 * f12 + A.A12 * f22
    eta21 = A.A21 * f11 + A.A22 * f21
    eta22 = A.A21 * f12 + A.A22 * f22
    d2 = 1 / (A.det * A.det)
    return K1CoeffTable(
        a11=d2 * lambda2 * eta11,
        a12=d2 * lambda1 * eta12,
        a13=d2 * (lambda2 * eta12 + lambda1 * eta11),
        a21=d2 * lambda2 * eta21,
        a22=d2 * lambda1 * eta22,
        a23=d2 * (lambda2 * eta22 + lambda1 * eta21),
        lambda1=lambda1,
        lambda2=lambda2,
        eta11=eta11,
        eta12=eta12,
        eta21=eta21,
        eta22=eta22,
    )


def conda_residual(t: K1CoeffTable) -> complex:
    """Common-zero constraint residual of a k = 1 coefficient table.

    (a11 a22 - a21 a12)**2 + (a13 a21 - a11 a23)(a13 a22 - a12 a23); zero
    signals that the two quadratic forms share a linear factor.
    """
    return (t.a11 * t.a22 - t.a21 * t.a12) ** 2 + (t.a13 * t.a21 - t.a11 * t.a23) * (
        t.a13 * t.a22 - t.a12 * t.a23
    )


def yz_forward(p: GeneralizedParams, z: ComplexPair) -> YState:
    """Coefficients (y1, y2) generated by the B/C quadratic relations."""
    z1, z2 = z
    return YState(
        p.B1 * z1 + p.B2 * z2,
        p.C1 * z1 * z1 + p.C2 * z2 * z2 + p.C3 * z1 * z2,
    )


def yz_invert(p: GeneralizedParams, y: YState, b: Sign) -> ComplexPair:
    """One branch of the inversion of :func:`yz_forward`."""
    b2sq = p.B2 * p.B2
    f = p.denom / b2sq
    if f == 0:
        raise DegenerateQuadraticError("inversion quadratic has zero leading coefficient")
    g = p.g3 * y.y1 / b2sq
    h = (p.C2 * y.y1 * y.y1 - b2sq * y.y2) / b2sq
    big_gamma = sqrt_branch(g * g - 4 * f * h, b)
    z1 = (-g + big_gamma) / (2 * f)
    z2 = (y.y1 - p.B1 * z1) / p.B2
    return (z1, z2)
