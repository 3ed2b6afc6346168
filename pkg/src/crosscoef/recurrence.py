"""Three-term recurrence coefficients for orthonormal polynomial families.

Every family here obeys

    b_n p_{n+1}(x) = (x - a_n) p_n(x) - b_{n-1} p_{n-1}(x),   b_{-1} = 0,

with ``p_0 = 1/sqrt(mass)`` where ``mass`` is the total measure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

__all__ = [
    "StieltjesBreakdown",
    "CoefficientSequence",
    "FamilySpec",
    "legendre_coeffs",
    "laguerre_coeffs",
    "stieltjes_coeffs",
    "norm_constants",
    "classical_values",
]


class StieltjesBreakdown(ArithmeticError):
    """The discrete measure supports fewer polynomials than requested."""

    def __init__(self, message: str, degree: int):
        super().__init__(message)
        self.degree = degree


def legendre_coeffs(n: int) -> tuple[float, float]:
    """Coefficients of the orthonormal Legendre polynomials sqrt(n + 1/2) P_n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return 0.0, (n + 1) / math.sqrt((2 * n + 1) * (2 * n + 3))


def laguerre_coeffs(n: int, beta: float) -> tuple[float, float]:
    """Coefficients of the orthonormal Laguerre polynomials for x^beta e^{-x}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if not beta > -1:
        raise ValueError(f"beta must exceed -1, got {beta}")
    return 2 * n + 1 + beta, math.sqrt((n + 1) * (n + 1 + beta))


class CoefficientSequence:
    """Lazily evaluated, memoized recurrence coefficients ``(a_n, b_n)``.

    Either ``provider`` (``n -> (a_n, b_n)``, unbounded) or precomputed
    arrays ``a``/``b`` (bounded) must be given. ``mass`` is the total
    measure, which fixes ``p_0``.

    The memo is filled on first access; concurrent use should warm it with
    :meth:`arrays` first, after which all reads are side-effect free.
    """

    def __init__(
        self,
        provider: Callable[[int], tuple[float, float]] | None = None,
        *,
        a=None,
        b=None,
        mass: float = 1.0,
        family_label: str = "",
    ):
        if provider is None and (a is None or b is None):
            raise ValueError("need a provider or both coefficient arrays")
        self._provider = provider
        self._a: list[float] = [] if a is None else [float(v) for v in a]
        self._b: list[float] = [] if b is None else [float(v) for v in b]
        if len(self._a) != len(self._b):
            raise ValueError("a and b must have equal length")
        if any(not v > 0 for v in self._b):
            raise ValueError("b_n must be positive")
        if not mass > 0:
            raise ValueError("mass must be positive")
        self.mass = float(mass)
        self.family_label = family_label

    @property
    def bounded(self) -> bool:
        return self._provider is None

    def __len__(self) -> int:
        if not self.bounded:
            raise TypeError("unbounded coefficient sequence has no length")
        return len(self._a)

    def _extend(self, n: int) -> None:
        if n < len(self._a):
            return
        if self._provider is None:
            raise IndexError(
                f"{self.family_label or 'sequence'}: coefficient {n} requested, "
                f"only {len(self._a)} available"
            )
        for k in range(len(self._a), n + 1):
            ak, bk = self._provider(k)
            if not bk > 0:
                raise ArithmeticError(f"b_{k} = {bk} is not positive")
            self._a.append(float(ak))
            self._b.append(float(bk))

    def a(self, n: int) -> float:
        if n < 0:
            raise IndexError("a_n is defined for n >= 0")
        self._extend(n)
        return self._a[n]

    def b(self, n: int) -> float:
        if n == -1:
            return 0.0
        if n < -1:
            raise IndexError("b_n is defined for n >= -1")
        self._extend(n)
        return self._b[n]

    def arrays(self, count: int) -> tuple[np.ndarray, np.ndarray]:
        """``(a_0..a_{count-1}, b_0..b_{count-1})`` as float arrays."""
        if count > 0:
            self._extend(count - 1)
        return np.array(self._a[:count]), np.array(self._b[:count])

    def values(self, count: int, x) -> np.ndarray:
        """Orthonormal ``p_0..p_{count-1}`` at ``x``; shape ``(count, len(x))``."""
        x = np.atleast_1d(np.asarray(x, dtype=float))
        out = np.zeros((count, x.size))
        if count == 0:
            return out
        a, b = self.arrays(max(count - 1, 0))
        out[0] = 1.0 / math.sqrt(self.mass)
        prev = np.zeros_like(x)
        for n in range(count - 1):
            bm1 = b[n - 1] if n > 0 else 0.0
            out[n + 1] = ((x - a[n]) * out[n] - bm1 * prev) / b[n]
            prev = out[n]
        return out

    def __repr__(self) -> str:
        label = self.family_label or "anonymous"
        return f"CoefficientSequence({label!r}, known={len(self._a)})"


def stieltjes_coeffs(rule, count: int, *, label: str = "stieltjes") -> CoefficientSequence:
    """Recurrence coefficients of the discrete measure ``sum w_k delta(x - x_k)``.

    Runs the discrete Stieltjes procedure with normalized vectors, so the
    result describes polynomials orthonormal with respect to the rule.
    Raises :class:`StieltjesBreakdown` when some ``b_n`` falls below
    ``1e-13 * max|x_k|``.
    """
    if count < 1:
        raise ValueError("count must be positive")
    x = np.asarray(rule.nodes, dtype=float)
    w = np.asarray(rule.weights, dtype=float)
    mass = float(w.sum())
    if not mass > 0:
        raise ValueError("rule has nonpositive total mass")
    tol = 1e-13 * max(float(np.abs(x).max()), 1.0)

    a = np.empty(count)
    b = np.empty(count)
    p_prev = np.zeros_like(x)
    p = np.full_like(x, 1.0 / math.sqrt(mass))
    b_prev = 0.0
    for n in range(count):
        a[n] = np.dot(w, x * p * p)
        r = (x - a[n]) * p - b_prev * p_prev
        # one reorthogonalization pass keeps large-node families honest
        r -= np.dot(w, r * p) * p
        if n > 0:
            r -= np.dot(w, r * p_prev) * p_prev
        b[n] = math.sqrt(max(np.dot(w, r * r), 0.0))
        if b[n] <= tol:
            raise StieltjesBreakdown(
                f"b_{n} = {b[n]:.3e} below tolerance {tol:.3e}; "
                f"no orthonormal polynomial of degree {n + 1}",
                n + 1,
            )
        p_prev, p, b_prev = p, r / b[n], b[n]
    return CoefficientSequence(a=a, b=b, mass=mass, family_label=label)


_KINDS = ("legendre", "laguerre", "ultraspherical", "custom")


@dataclass(frozen=True)
class FamilySpec:
    """A named orthogonal family and the normalization used for its members.

    ``param`` is beta for Laguerre (weight x^beta e^{-x}) and alpha for
    ultraspherical (weight (1 - x^2)^alpha on (-1, 1)). ``rule`` is the
    discrete measure for custom families.
    """

    kind: str
    param: float = 0.0
    normalization: str = "orthonormal"
    rule: object = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if self.normalization not in ("orthonormal", "classical"):
            raise ValueError(f"unknown normalization {self.normalization!r}")
        if self.kind in ("laguerre", "ultraspherical") and not self.param > -1:
            raise ValueError(f"{self.kind} parameter must exceed -1, got {self.param}")
        if self.kind == "custom":
            if self.rule is None:
                raise ValueError("custom family needs a quadrature rule")
            if self.normalization == "classical":
                raise ValueError("custom families have no classical normalization")

    @property
    def label(self) -> str:
        if self.kind == "legendre":
            return "legendre"
        if self.kind == "custom":
            return "custom"
        return f"{self.kind}({self.param:g})"

    def coefficients(self) -> CoefficientSequence:
        return _coefficients(self)

    def values(self, count: int, x) -> np.ndarray:
        """Members ``0..count-1`` at ``x`` in this family's normalization."""
        if self.normalization == "classical":
            return classical_values(self, count, x)
        return self.coefficients().values(count, x)


_cache: dict[FamilySpec, CoefficientSequence] = {}


def _coefficients(family: FamilySpec) -> CoefficientSequence:
    if family.kind == "custom":
        return stieltjes_coeffs(family.rule, len(family.rule.nodes) - 1, label="custom")
    key = FamilySpec(family.kind, family.param)
    seq = _cache.get(key)
    if seq is not None:
        return seq
    if family.kind == "legendre":
        seq = CoefficientSequence(legendre_coeffs, mass=2.0, family_label=key.label)
    elif family.kind == "laguerre":
        beta = family.param
        seq = CoefficientSequence(
            lambda n: laguerre_coeffs(n, beta),
            mass=math.gamma(1 + beta),
            family_label=key.label,
        )
    else:
        seq = _UltrasphericalProvider(family.param).sequence()
    _cache[key] = seq
    return seq


class _UltrasphericalProvider:
    """Stieltjes on a Gauss-Jacobi discretization, regrown on demand."""

    def __init__(self, alpha: float):
        self.alpha = alpha
        self._known: CoefficientSequence | None = None

    def _grow(self, count: int) -> CoefficientSequence:
        from scipy.special import roots_jacobi

        from .oracle import QuadratureRule

        nodes, weights = roots_jacobi(count + 8, self.alpha, self.alpha)
        rule = QuadratureRule(nodes, weights, "(-1,1)", f"(1-x^2)^{self.alpha:g}")
        return stieltjes_coeffs(rule, count)

    def __call__(self, n: int) -> tuple[float, float]:
        if self._known is None or n >= len(self._known):
            self._known = self._grow(max(2 * n + 2, 32))
        # the weight is even, so the diagonal vanishes identically
        return 0.0, self._known.b(n)

    def sequence(self) -> CoefficientSequence:
        from scipy.special import roots_jacobi

        mass = float(np.sum(roots_jacobi(4, self.alpha, self.alpha)[1]))
        return CoefficientSequence(
            self, mass=mass, family_label=f"ultraspherical({self.alpha:g})"
        )


def classical_values(family: FamilySpec, count: int, x) -> np.ndarray:
    """Classically normalized members at ``x``: P_n, L_n^{(beta)}, or P_n^{(alpha,alpha)}."""
    x = np.atleast_1d(np.asarray(x, dtype=float))
    out = np.zeros((count, x.size))
    if count == 0:
        return out
    out[0] = 1.0
    if count == 1:
        return out
    if family.kind == "legendre":
        out[1] = x
        for n in range(1, count - 1):
            out[n + 1] = ((2 * n + 1) * x * out[n] - n * out[n - 1]) / (n + 1)
    elif family.kind == "laguerre":
        beta = family.param
        out[1] = 1 + beta - x
        for n in range(1, count - 1):
            out[n + 1] = ((2 * n + 1 + beta - x) * out[n] - (n + beta) * out[n - 1]) / (n + 1)
    elif family.kind == "ultraspherical":
        al = family.param
        out[1] = (al + 1) * x
        for k in range(2, count):
            s = 2 * k + 2 * al
            out[k] = (
                (s - 1) * s * (s - 2) * x * out[k - 1]
                - 2 * (k + al - 1) ** 2 * s * out[k - 2]
            ) / (2 * k * (k + 2 * al) * (s - 2))
    else:
        raise ValueError(f"{family.kind} family has no classical normalization")
    return out


def norm_constants(family: FamilySpec, count: int) -> np.ndarray:
    """Squared norms ``h_n`` of the classical members, by Gauss quadrature."""
    if family.kind == "custom":
        raise ValueError("custom families have no classical normalization")
    from .oracle import gauss_from_coeffs

    rule = gauss_from_coeffs(family.coefficients(), count + 1)
    vals = classical_values(family, count, rule.nodes)
    return (vals * vals) @ rule.weights
