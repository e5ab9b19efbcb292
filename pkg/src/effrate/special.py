"""Gamma-family special functions used by the rate expressions.

The workhorses are two Mellin-Barnes contour integrals (Fox H and Meijer G,
the latter evaluated through its Fox H form) and the Tricomi confluent
hypergeometric function U(a;b;z).  Everything is evaluated in log space so
that gamma-function products with large arguments neither overflow nor lose
precision before the final exponentiation.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate
from scipy.special import loggamma as _scipy_loggamma


class ContourError(ValueError):
    """No vertical contour separates the two pole families."""


class TruncationError(RuntimeError):
    """The contour integral tail did not fall below tolerance."""


def log_gamma_complex(z):
    """Principal branch of log Gamma for complex argument.

    Accepts scalars or arrays.  Raises ValueError at the poles
    (non-positive real integers), where no finite value exists.
    """
    z = np.asarray(z, dtype=complex)
    on_pole = (z.real <= 0) & (z.imag == 0) & (z.real == np.floor(z.real))
    if np.any(on_pole):
        raise ValueError("log_gamma_complex: argument is a non-positive integer (pole)")
    out = _scipy_loggamma(z)
    if out.ndim == 0:
        return complex(out)
    return out


def tricomi_u(a, b, z):
    """Tricomi confluent hypergeometric U(a;b;z) for a > 0, z > 0.

    Evaluated from the Laplace-type integral

        U(a;b;z) = z^-a / Gamma(a) * int_0^inf e^-u u^(a-1) (1 + u/z)^(b-a-1) du

    which is smooth in b, so nothing special happens when b passes through
    an integer.  The u^(a-1) endpoint singularity for a < 1 is removed by
    substituting w = u^a on [0, 1].
    """
    if a <= 0:
        raise ValueError("tricomi_u: need a > 0, got a=%r" % (a,))
    if z <= 0:
        raise ValueError("tricomi_u: need z > 0, got z=%r" % (z,))
    c = b - a - 1.0

    def h(u):
        return (1.0 + u / z) ** c

    # [0, 1] with the singularity absorbed: u = w^(1/a)
    def head(w):
        u = w ** (1.0 / a)
        return math.exp(-u) * h(u)

    i0, _ = integrate.quad(head, 0.0, 1.0, epsabs=0.0, epsrel=1e-13, limit=200)
    i0 /= a

    def tail(u):
        return math.exp((a - 1.0) * math.log(u) - u) * h(u)

    i1, _ = integrate.quad(tail, 1.0, np.inf, epsabs=1e-300, epsrel=1e-13, limit=200)
    total = i0 + i1
    if total <= 0:
        raise TruncationError("tricomi_u: quadrature returned a non-positive value")
    return math.exp(-a * math.log(z) - math.lgamma(a) + math.log(total))


@dataclass(frozen=True)
class FoxHSpec:
    """Order and parameter pairs of a Fox H function H^{m,n}_{p,q}.

    upper_pairs holds the p pairs (a_j, A_j), lower_pairs the q pairs
    (b_j, B_j), with the first n upper and first m lower pairs producing
    numerator gamma factors.  All coefficients A_j, B_j must be positive.
    """

    m: int
    n: int
    upper_pairs: tuple
    lower_pairs: tuple

    def __post_init__(self):
        p, q = len(self.upper_pairs), len(self.lower_pairs)
        if not (0 <= self.n <= p and 0 <= self.m <= q):
            raise ValueError("FoxHSpec: need 0 <= n <= p and 0 <= m <= q")
        for _, coef in tuple(self.upper_pairs) + tuple(self.lower_pairs):
            if coef <= 0:
                raise ValueError("FoxHSpec: gamma argument coefficients must be positive")
        lo, hi = self.strip()
        if not lo < hi:
            raise ContourError(
                "FoxHSpec: pole families overlap, no contour exists "
                "(strip [%g, %g] is empty)" % (lo, hi)
            )

    @property
    def p(self):
        return len(self.upper_pairs)

    @property
    def q(self):
        return len(self.lower_pairs)

    def strip(self):
        """Open interval of contour abscissas separating the pole families.

        Poles of Gamma(b_j + B_j s), j <= m sit at s <= -b_j/B_j and must stay
        left; poles of Gamma(1 - a_j - A_j s), j <= n sit at s >= (1-a_j)/A_j
        and must stay right.
        """
        lo = -math.inf
        for b, B in self.lower_pairs[: self.m]:
            lo = max(lo, -b / B)
        hi = math.inf
        for a, A in self.upper_pairs[: self.n]:
            hi = min(hi, (1.0 - a) / A)
        return lo, hi

    def contour_abscissa(self):
        lo, hi = self.strip()
        if math.isinf(lo) and math.isinf(hi):
            return 0.0
        if math.isinf(lo):
            return hi - 1.0
        if math.isinf(hi):
            return lo + 1.0
        return 0.5 * (lo + hi)

    def decay_rate(self):
        """Exponential decay rate of |chi(c+it)| as |t| grows.

        Each gamma factor Gamma(x+iy) behaves like exp(-pi |y| / 2) up to
        powers, so the net rate is pi/2 times the signed coefficient sum.
        """
        num = sum(B for _, B in self.lower_pairs[: self.m])
        num += sum(A for _, A in self.upper_pairs[: self.n])
        den = sum(B for _, B in self.lower_pairs[self.m :])
        den += sum(A for _, A in self.upper_pairs[self.n :])
        return 0.5 * math.pi * (num - den)


def _log_chi(spec, s):
    """Log of the gamma-product kernel chi(s) of the Mellin-Barnes integrand."""
    tot = np.zeros_like(s, dtype=complex) if isinstance(s, np.ndarray) else 0.0 + 0.0j
    for b, B in spec.lower_pairs[: spec.m]:
        tot = tot + _scipy_loggamma(b + B * s)
    for a, A in spec.upper_pairs[: spec.n]:
        tot = tot + _scipy_loggamma(1.0 - a - A * s)
    for b, B in spec.lower_pairs[spec.m :]:
        tot = tot - _scipy_loggamma(1.0 - b - B * s)
    for a, A in spec.upper_pairs[spec.n :]:
        tot = tot - _scipy_loggamma(a + A * s)
    return tot


def fox_h(spec, z, rel_tol=1e-12):
    """Fox H function by direct contour integration.

    Evaluates (1/2 pi i) int chi(s) z^-s ds along the vertical line
    Re s = c inside the pole-separating strip.  Conjugate symmetry folds the
    line onto t in [0, inf); panels [0,1], [1,2], [2,4], ... are integrated
    adaptively and accumulation stops once the analytic tail bound drops
    below rel_tol relative to the running total.
    """
    if z <= 0:
        raise ValueError("fox_h: argument must be positive, got %r" % (z,))
    kappa = spec.decay_rate()
    if kappa <= 0:
        raise ContourError("fox_h: integrand does not decay on vertical contours")
    c = spec.contour_abscissa()
    log_z = math.log(z)

    def integrand(t):
        s = complex(c, t)
        val = np.exp(_log_chi(spec, s) - s * log_z)
        return val.real / math.pi

    total = 0.0
    left = 0.0
    width = 1.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        for _ in range(64):
            piece, _ = integrate.quad(
                integrand, left, left + width, epsabs=1e-300, epsrel=1e-13, limit=300
            )
            total += piece
            left += width
            width = min(2.0 * width, 64.0)
            # |integrand| <= |integrand(T)| * exp(-kappa (t-T)) for t >= T
            edge = abs(integrand(left))
            tail_bound = edge / kappa
            if tail_bound <= rel_tol * max(abs(total), 1e-300):
                return total
    raise TruncationError("fox_h: tail bound still %g after exhausting panels" % tail_bound)


@dataclass(frozen=True)
class MeijerGSpec:
    """Order and parameters of a Meijer G function G^{m,n}_{p,q}.

    The Fox H special case with all gamma argument coefficients equal to 1.
    """

    m: int
    n: int
    uppers: tuple
    lowers: tuple

    def __post_init__(self):
        # delegate validation to the H form
        self.as_fox_h()

    def as_fox_h(self):
        return FoxHSpec(
            m=self.m,
            n=self.n,
            upper_pairs=tuple((a, 1.0) for a in self.uppers),
            lower_pairs=tuple((b, 1.0) for b in self.lowers),
        )


def meijer_g(spec, z, rel_tol=1e-12):
    """Meijer G function, evaluated through its Fox H equivalent."""
    return fox_h(spec.as_fox_h(), z, rel_tol=rel_tol)
