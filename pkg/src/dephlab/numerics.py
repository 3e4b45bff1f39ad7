"""Special functions, 2x2 Hermitian algebra and semi-infinite quadrature.

Complex scalars are plain Python ``complex`` values throughout the package.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

PSD_TOL = 1e-12

# Lanczos approximation, g = 7, n = 9.
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)
_SQRT_2PI = math.sqrt(2.0 * math.pi)


def gamma(x: float) -> float:
    """Euler gamma function for real ``x > 0``."""
    x = float(x)
    if not math.isfinite(x) or x <= 0.0:
        raise DomainError(f"gamma requires finite x > 0, got {x!r}")
    if x < 0.5:
        # Lanczos is least accurate near the origin; shift up by one.
        return gamma(x + 1.0) / x
    z = x - 1.0
    acc = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return _SQRT_2PI * t ** (z + 0.5) * math.exp(-t) * acc


@dataclass(frozen=True)
class Hermitian2:
    """2x2 Hermitian matrix ``[[a, c], [conj(c), d]]``."""

    a: float
    d: float
    c: complex = 0j

    @classmethod
    def from_array(cls, m) -> "Hermitian2":
        """Build from a 2x2 array, symmetrising the off-diagonal entries."""
        m = np.asarray(m, dtype=complex)
        c = 0.5 * (m[0, 1] + np.conj(m[1, 0]))
        return cls(float(m[0, 0].real), float(m[1, 1].real), complex(c))

    def to_array(self) -> np.ndarray:
        return np.array(
            [[self.a, self.c], [self.c.conjugate(), self.d]], dtype=complex
        )

    @property
    def trace(self) -> float:
        return self.a + self.d

    @property
    def det(self) -> float:
        return self.a * self.d - abs(self.c) ** 2


def eig_hermitian2(m: Hermitian2):
    """Eigen-decomposition of a 2x2 Hermitian matrix.

    Returns ``((l1, l2), (v1, v2))`` with ``l1 >= l2`` and each ``v`` a pair
    of complex components forming an orthonormal basis.
    """
    a, d, c = float(m.a), float(m.d), complex(m.c)
    mean = 0.5 * (a + d)
    half = 0.5 * (a - d)
    rad = math.hypot(half, abs(c))
    l1, l2 = mean + rad, mean - rad
    if abs(c) == 0.0:
        if a >= d:
            return (l1, l2), ((1 + 0j, 0j), (0j, 1 + 0j))
        return (l1, l2), ((0j, 1 + 0j), (1 + 0j, 0j))
    # Pick the row of (M - l1) whose solution avoids cancellation.
    if half >= 0.0:
        u = (complex(half + rad), c.conjugate())
    else:
        u = (c, complex(rad - half))
    norm = math.sqrt(abs(u[0]) ** 2 + abs(u[1]) ** 2)
    v1 = (u[0] / norm, u[1] / norm)
    v2 = (-v1[1].conjugate(), v1[0].conjugate())
    return (l1, l2), (v1, v2)


def _from_spectrum(lams, vecs) -> Hermitian2:
    a = d = 0.0
    c = 0j
    for lam, (x, y) in zip(lams, vecs):
        a += lam * abs(x) ** 2
        d += lam * abs(y) ** 2
        c += lam * x * y.conjugate()
    return Hermitian2(a, d, c)


def sqrt_psd2(m: Hermitian2) -> Hermitian2:
    """Principal square root of a positive semidefinite 2x2 matrix.

    Eigenvalues in ``[-PSD_TOL, 0)`` are treated as rounding residue and
    clamped to zero.
    """
    lams, vecs = eig_hermitian2(m)
    if lams[1] < -PSD_TOL:
        raise DomainError(f"matrix is not positive semidefinite (eigenvalue {lams[1]:.3e})")
    roots = tuple(math.sqrt(max(lam, 0.0)) for lam in lams)
    return _from_spectrum(roots, vecs)


def _power_tail(f_half, f_full, h):
    """Integral over [0, h] of C*u**p matched at u = h/2 and u = h."""
    if f_half == 0.0 or f_full == 0.0 or (f_half > 0) != (f_full > 0):
        return None
    p = math.log(f_full / f_half) / math.log(2.0)
    if p <= -1.0:
        return None
    return f_full * h / (p + 1.0)


def quad_semiinf(f, tol: float = 1e-10, max_rounds: int = 2000, max_panels: int = 1_000_000) -> float:
    """Integrate ``f`` over ``(0, inf)`` by globally adaptive Simpson.

    The half line is mapped onto ``(0, 1)`` by ``w = u / (1 - u)``. ``f`` must
    accept a numpy array of abscissae. Integrable singularities at ``w = 0``
    are tolerated: non-finite values exactly at the endpoints count as zero.
    Every round bisects the panels carrying more than their even share of
    the tolerance, until the summed error estimate is below ``tol``.
    """
    if not tol > 0:
        raise DomainError("tol must be positive")

    def g(u):
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            w = u / (1.0 - u)
            out = np.asarray(f(w), dtype=float) / (1.0 - u) ** 2
        edge = (u <= 0.0) | (u >= 1.0)
        out = np.where(edge & ~np.isfinite(out), 0.0, out)
        out = np.where(u >= 1.0, 0.0, out)
        if not np.all(np.isfinite(out)):
            raise DomainError("integrand is not finite inside the domain")
        return out

    def panels(a, b, fa, fm, fb):
        flm = g(0.75 * a + 0.25 * b)
        frm = g(0.25 * a + 0.75 * b)
        h = b - a
        whole = h / 6.0 * (fa + 4.0 * fm + fb)
        halves = h / 12.0 * (fa + 4.0 * flm + 2.0 * fm + 4.0 * frm + fb)
        # The raw difference is kept as the error estimate (no /15) so that
        # panels touching an endpoint singularity are not under-resolved.
        val = halves + (halves - whole) / 15.0
        err = np.abs(halves - whole)
        if singular:
            # Panel at the singular endpoint: fit C*u**p through the interior
            # samples and integrate exactly; compare fits at two scales.
            k = np.flatnonzero(a == 0.0)
            if k.size:
                i = k[0]
                coarse = _power_tail(fm[i], fb[i], h[i])
                fine = _power_tail(flm[i], fm[i], 0.5 * h[i])
                if coarse is not None and fine is not None:
                    rest = h[i] / 12.0 * (fm[i] + 4.0 * frm[i] + fb[i])
                    val[i] = fine + rest
                    err[i] = abs(fine + rest - coarse)
        return flm, frm, val, err

    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        singular = not np.isfinite(f(np.zeros(1))).all()
    a = np.linspace(0.0, 1.0, 33)
    a, b = a[:-1], a[1:]
    fa, fm, fb = g(a), g(0.5 * (a + b)), g(b)
    flm, frm, val, err = panels(a, b, fa, fm, fb)
    for _ in range(max_rounds):
        if err.sum() <= tol:
            return float(val.sum())
        refine = err > 0.5 * tol / len(err)
        refine[np.argmax(err)] = True
        keep = ~refine
        mid = 0.5 * (a[refine] + b[refine])
        na = np.concatenate([a[refine], mid])
        nb = np.concatenate([mid, b[refine]])
        nfa = np.concatenate([fa[refine], fm[refine]])
        nfm = np.concatenate([flm[refine], frm[refine]])
        nfb = np.concatenate([fm[refine], fb[refine]])
        nflm, nfrm, nval, nerr = panels(na, nb, nfa, nfm, nfb)
        a = np.concatenate([a[keep], na])
        b = np.concatenate([b[keep], nb])
        fa = np.concatenate([fa[keep], nfa])
        fm = np.concatenate([fm[keep], nfm])
        fb = np.concatenate([fb[keep], nfb])
        flm = np.concatenate([flm[keep], nflm])
        frm = np.concatenate([frm[keep], nfrm])
        val = np.concatenate([val[keep], nval])
        err = np.concatenate([err[keep], nerr])
        if len(a) > max_panels:
            break
    raise ConvergenceError(f"quadrature did not reach tol={tol:.1e} (estimate {err.sum():.2e})")
