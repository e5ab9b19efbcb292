"""Delay-constrained effective rate of a MISO link over alpha-mu fading.

With equal power split over n_t antennas and a QoS exponent folded into the
dimensionless parameter A (delay exponent times block duration times
bandwidth over ln 2), the effective rate is

    R(rho) = -(1/A) log2 E{ (1 + rho * S / n_t)^-A },

where S is the sum of the branch SNRs.  S is replaced by its moment-matched
alpha-mu proxy (exact for alpha = 2), after which the expectation has three
interchangeable evaluations: adaptive quadrature in the Gamma domain, a Fox H
contour integral, and a Meijer G form obtained by rationalizing alpha/2.
A Tricomi-U closed form covers the Nakagami-m line, and both ends of the SNR
axis get dedicated asymptotics.
"""

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from scipy import integrate

from .alphamu import AlphaMuParams, moment
from .special import FoxHSpec, MeijerGSpec, fox_h, meijer_g, tricomi_u
from .sumfit import fit_sum

LN2 = math.log(2.0)


class RationalizationError(ValueError):
    """alpha/2 has no rational form l/k with small enough k."""


@dataclass(frozen=True)
class MisoLink:
    """A transmit-array link: antenna count, QoS exponent A, branch fading.

    The moment-matched distribution of the SNR sum is fitted once, on first
    use, and cached; the link itself is immutable and safe to share.
    """

    n_t: int
    delay_a: float
    branch: AlphaMuParams

    def __post_init__(self):
        if self.n_t < 1 or self.n_t != int(self.n_t):
            raise ValueError("n_t must be a positive integer, got %r" % (self.n_t,))
        if not self.delay_a > 0:
            raise ValueError("delay_a must be > 0, got %r" % (self.delay_a,))

    @cached_property
    def fit(self):
        return fit_sum(self.branch, self.n_t)


def gamma_expectation(mu, g, epsrel=1e-12):
    """E[g(U)] for U ~ Gamma(mu, 1), by piecewise adaptive quadrature.

    Integration panels bracket the bulk of the Gamma weight (mean mu, width
    sqrt(mu)); for mu < 1 the u^(mu-1) endpoint singularity is absorbed by
    the substitution w = u^mu on the first panel.
    """
    if mu <= 0:
        raise ValueError("gamma_expectation: mu must be > 0")
    lg = math.lgamma(mu)

    def f(u):
        if u <= 0.0:
            return 0.0
        return math.exp((mu - 1.0) * math.log(u) - u - lg) * g(u)

    # epsabs is intentionally unreachable so quad always refines to epsrel;
    # its roundoff-limit warning is then expected noise, and accuracy is
    # cross-checked against the contour route rather than trusted blindly
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        total = 0.0
        if mu < 1.0:
            # head panel [0, 1/2] with the singularity substituted away
            def head(w):
                u = w ** (1.0 / mu)
                return math.exp(-u - lg) * g(u) / mu

            piece, _ = integrate.quad(
                head, 0.0, 0.5 ** mu, epsabs=1e-300, epsrel=epsrel, limit=200
            )
            total += piece
            edges = [0.5, 2.0, 8.0, 24.0]
        else:
            sd = math.sqrt(mu)
            raw = [mu - 8.0 * sd, mu - 2.0 * sd, mu + 2.0 * sd, mu + 8.0 * sd, mu + 24.0 * sd]
            edges = [0.0] + sorted(e for e in raw if e > 0.0)
        for a, b in zip(edges, edges[1:]):
            piece, _ = integrate.quad(f, a, b, epsabs=1e-300, epsrel=epsrel, limit=200)
            total += piece
        piece, _ = integrate.quad(
            f, edges[-1], math.inf, epsabs=1e-300, epsrel=epsrel, limit=200
        )
    return total + piece


def _check_rho(rho):
    if not rho > 0:
        raise ValueError("rho must be > 0, got %r" % (rho,))


def rate_exact_quadrature(link, rho):
    """Effective rate by direct quadrature of the defining expectation.

    This is the reference evaluation the other routes are checked against.
    The fitted sum density turns into a unit Gamma weight under
    u = (gamma/beta)^(alpha/2), and the integrand is exp(-A log1p(.)) so
    that nothing is lost when rho is tiny.
    """
    _check_rho(rho)
    p = link.fit.fitted
    a_qos = link.delay_a
    c = rho * p.beta / link.n_t
    two_over_alpha = 2.0 / p.alpha

    def g(u):
        return math.exp(-a_qos * math.log1p(c * u ** two_over_alpha))

    e = gamma_expectation(p.mu, g)
    return -math.log(e) / (a_qos * LN2)


def rate_exact_foxh(link, rho):
    """Effective rate through the Fox H contour-integral form.

    The expectation equals (alpha/2) H / (Gamma(A) Gamma(mu)) with
    H = H^{2,1}_{1,2}[ (n_t/(rho beta))^(alpha/2) | (1, alpha/2);
                       (mu, 1), (A, alpha/2) ]
    in the fitted sum parameters.
    """
    _check_rho(rho)
    p = link.fit.fitted
    a_qos = link.delay_a
    half_alpha = 0.5 * p.alpha
    z = (link.n_t / (rho * p.beta)) ** half_alpha
    spec = FoxHSpec(
        m=2,
        n=1,
        upper_pairs=((1.0, half_alpha),),
        lower_pairs=((p.mu, 1.0), (a_qos, half_alpha)),
    )
    h = fox_h(spec, z)
    if h <= 0:
        raise ArithmeticError("rate_exact_foxh: contour integral returned %r" % (h,))
    log_e = math.log(half_alpha) + math.log(h) - math.lgamma(a_qos) - math.lgamma(p.mu)
    return -log_e / (a_qos * LN2)


def _rationalize_half_alpha(alpha, cap=25):
    """Represent alpha/2 as l/k with positive integers and k <= cap.

    Integer alpha keeps the conventional unreduced pair (l, k) = (alpha, 2);
    otherwise a continued-fraction approximation is accepted only when it
    reproduces alpha/2 to within 1e-9 relative.
    """
    if abs(alpha - round(alpha)) <= 1e-12 * alpha and round(alpha) >= 1:
        return int(round(alpha)), 2
    frac = Fraction(alpha / 2.0).limit_denominator(cap)
    l, k = frac.numerator, frac.denominator
    if l < 1 or abs(l / k - alpha / 2.0) > 1e-9 * (alpha / 2.0):
        raise RationalizationError(
            "alpha/2 = %r has no l/k with k <= %d within 1e-9 relative" % (alpha / 2.0, cap)
        )
    return l, k


def _delta_block(n, tau):
    """The n-term arithmetic block tau/n, (tau+1)/n, ..., (tau+n-1)/n."""
    return tuple((tau + j) / n for j in range(n))


def rate_exact_meijerg(link, rho, cap=25):
    """Effective rate through the Meijer G form of the contour integral.

    Requires alpha/2 = l/k rational; the gamma factors are split by the
    multiplication theorem into unit-coefficient blocks, giving

        E = P/2 * G^{k+l,l}_{l,k+l}[ (n_t/rho)^l / (beta^(alpha/2) k)^k |
              Delta(l, 1 - alpha mu/2);  Delta(k, 0), Delta(l, A - alpha mu/2) ]

    with P = alpha sqrt(k) l^(A-1) (n_t/(rho beta))^(alpha mu/2)
             (2 pi)^(3/2 - l - k/2) / (Gamma(A) Gamma(mu)).

    If no admissible (l, k) exists the Fox H route is used instead, with a
    warning.
    """
    _check_rho(rho)
    p = link.fit.fitted
    a_qos = link.delay_a
    try:
        l, k = _rationalize_half_alpha(p.alpha, cap=cap)
    except RationalizationError as err:
        warnings.warn("rate_exact_meijerg: %s; falling back to the Fox H route" % err)
        return rate_exact_foxh(link, rho)
    # snap to the exactly rational exponent so blocks, argument and prefactor agree
    alpha = 2.0 * l / k
    params = AlphaMuParams(alpha=alpha, mu=p.mu, mean_snr=p.mean_snr)
    beta = params.beta
    amu2 = alpha * params.mu / 2.0
    spec = MeijerGSpec(
        m=k + l,
        n=l,
        uppers=_delta_block(l, 1.0 - amu2),
        lowers=_delta_block(k, 0.0) + _delta_block(l, a_qos - amu2),
    )
    x = math.exp(l * math.log(link.n_t / rho) - k * (0.5 * alpha * math.log(beta) + math.log(k)))
    g = meijer_g(spec, x)
    if g <= 0:
        raise ArithmeticError("rate_exact_meijerg: contour integral returned %r" % (g,))
    log_p = (
        math.log(alpha)
        + 0.5 * math.log(k)
        + (a_qos - 1.0) * math.log(l)
        + amu2 * math.log(link.n_t / (rho * beta))
        + (1.5 - l - 0.5 * k) * math.log(2.0 * math.pi)
        - math.lgamma(a_qos)
        - math.lgamma(params.mu)
    )
    log_e = log_p + math.log(g) - LN2
    return -log_e / (a_qos * LN2)


def rate_nakagami(m, omega, n_t, delay_a, rho):
    """Closed-form effective rate for Nakagami-m branches (alpha = 2).

    The branch SNRs are Gamma distributed, their sum is exactly
    Gamma(m n_t, omega/m), and the expectation collapses to a Tricomi U:

        R = (m n_t / A) log2(omega rho / (m n_t))
            - (1/A) log2 U(m n_t; m n_t + 1 - A; m n_t / (omega rho))
    """
    if not m > 0:
        raise ValueError("rate_nakagami: need m > 0")
    if not omega > 0:
        raise ValueError("rate_nakagami: need omega > 0")
    if n_t < 1 or n_t != int(n_t):
        raise ValueError("rate_nakagami: n_t must be a positive integer")
    if not delay_a > 0:
        raise ValueError("rate_nakagami: need delay_a > 0")
    _check_rho(rho)
    mn = m * n_t
    z = mn / (omega * rho)
    u = tricomi_u(mn, mn + 1.0 - delay_a, z)
    return (mn / delay_a) * math.log2(omega * rho / mn) - math.log(u) / (delay_a * LN2)


def high_snr_validity(link):
    """(required, conservative) validity flags of the high-SNR expansion.

    The leading term exists iff A < alpha mu / 2 in the fitted parameters;
    the conservative margin A < alpha mu / 2 - 1 additionally keeps the
    next-order correction integrable.
    """
    p = link.fit.fitted
    half = p.alpha * p.mu / 2.0
    return link.delay_a < half, link.delay_a < half - 1.0


def rate_high_snr(link, rho):
    """Leading high-SNR expansion: slope 1 per octave-of-2 in rho.

        R ~ log2(beta rho / n_t) - (1/A) log2( Gamma(mu - 2A/alpha) / Gamma(mu) )

    in the fitted sum parameters.  Requires A < alpha mu / 2; between that
    bound and the conservative A < alpha mu / 2 - 1 a warning is emitted
    because convergence becomes slow.
    """
    _check_rho(rho)
    required, conservative = high_snr_validity(link)
    p = link.fit.fitted
    if not required:
        raise ValueError(
            "rate_high_snr: delay_a must satisfy delay_a < alpha*mu/2 "
            "(got %g >= %g)" % (link.delay_a, p.alpha * p.mu / 2.0)
        )
    if not conservative:
        warnings.warn(
            "rate_high_snr: delay_a is within one unit of alpha*mu/2; "
            "the asymptote converges slowly here"
        )
    a_qos = link.delay_a
    gap = math.lgamma(p.mu - 2.0 * a_qos / p.alpha) - math.lgamma(p.mu)
    return math.log2(p.beta * rho / link.n_t) - gap / (a_qos * LN2)


def channel_power_moments(link):
    """First two moments of the array gain: E{S} and E{S^2} for the branch sum."""
    m1 = moment(link.branch, 1)
    m2 = moment(link.branch, 2)
    first = link.n_t * m1
    second = link.n_t * m2 + link.n_t * (link.n_t - 1) * m1 * m1
    return first, second


def wideband_metrics(link):
    """Minimum energy per bit and wideband slope of the low-SNR expansion.

    Derived from the first two array-gain moments:

        (Eb/N0)_min = n_t ln2 / E{S}            (= ln2 / mean branch SNR)
        S0 = 2 E{S}^2 / ((A+1) E{S^2} - A E{S}^2)

    For Nakagami-m branches S0 reduces to 2 m n_t / (A + 1 + m n_t).
    """
    e1, e2 = channel_power_moments(link)
    eb_min = link.n_t * LN2 / e1
    a_qos = link.delay_a
    s0 = 2.0 * e1 * e1 / ((a_qos + 1.0) * e2 - a_qos * e1 * e1)
    return eb_min, s0


def rate_low_snr(link, eb_n0):
    """Wideband approximation R ~ S0 log2(eb_n0 / eb_n0_min).

    Below the minimum energy per bit no positive rate is supportable; the
    value is clamped to 0 and a warning raised.
    """
    if not eb_n0 > 0:
        raise ValueError("rate_low_snr: eb_n0 must be > 0")
    eb_min, s0 = wideband_metrics(link)
    if eb_n0 <= eb_min:
        warnings.warn("rate_low_snr: eb_n0 at or below the minimum, rate clamped to 0")
        return 0.0
    return s0 * math.log2(eb_n0 / eb_min)


def parametric_eb_n0(link, rho, rate_fn=None):
    """Map an SNR point to the (Eb/N0, rate) plane: Eb/N0 = rho / R(rho)."""
    fn = rate_fn or rate_exact_quadrature
    r = fn(link, rho)
    if r <= 0:
        raise ArithmeticError("parametric_eb_n0: rate is not positive at rho=%r" % (rho,))
    return rho / r, r


def ergodic_capacity_quadrature(link, rho):
    """E{log2(1 + rho S / n_t)} under the fitted sum density.

    The A -> 0 limit of the effective rate; used as the no-QoS reference.
    """
    _check_rho(rho)
    p = link.fit.fitted
    c = rho * p.beta / link.n_t
    two_over_alpha = 2.0 / p.alpha

    def g(u):
        return math.log1p(c * u ** two_over_alpha) / LN2

    return gamma_expectation(p.mu, g)
