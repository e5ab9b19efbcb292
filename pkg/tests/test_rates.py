"""Exact rate routes, closed forms, and both asymptotic regimes.

Frozen values were computed independently with 40-digit arithmetic; the
canonical single-antenna Rayleigh point at 0 dB with unit delay exponent is
-log2(e * E1(1)) = 0.7457751737292681.
"""

import math
import warnings

import numpy as np
import pytest

from effrate.alphamu import AlphaMuParams
from effrate.rates import (
    MisoLink,
    channel_power_moments,
    ergodic_capacity_quadrature,
    high_snr_validity,
    parametric_eb_n0,
    rate_exact_foxh,
    rate_exact_meijerg,
    rate_exact_quadrature,
    rate_high_snr,
    rate_low_snr,
    rate_nakagami,
    wideband_metrics,
)

_EXP_LINK = MisoLink(n_t=1, delay_a=1.0, branch=AlphaMuParams(alpha=2.0, mu=1.0))


def _rel(a, b):
    return abs(a - b) / max(abs(a), abs(b))


# ------------------------------------------------------------- exact routes


def test_rayleigh_point_all_routes():
    ref = 0.7457751737292681
    np.testing.assert_allclose(rate_exact_quadrature(_EXP_LINK, 1.0), ref, rtol=1e-12)
    np.testing.assert_allclose(rate_exact_foxh(_EXP_LINK, 1.0), ref, rtol=1e-10)
    np.testing.assert_allclose(rate_exact_meijerg(_EXP_LINK, 1.0), ref, rtol=1e-10)
    np.testing.assert_allclose(rate_nakagami(1.0, 1.0, 1, 1.0, 1.0), ref, rtol=1e-12)


def test_routes_agree_on_mixed_grid():
    # broad spot grid; the full acceptance sweep runs the complete one
    for alpha in (0.8, 4.0):
        for mu in (1.0, 2.0):
            for n_t in (1, 4):
                for a in (0.5, 2.0):
                    link = MisoLink(
                        n_t=n_t, delay_a=a, branch=AlphaMuParams(alpha=alpha, mu=mu)
                    )
                    for rho in (0.1, 100.0):
                        rq = rate_exact_quadrature(link, rho)
                        rf = rate_exact_foxh(link, rho)
                        with warnings.catch_warnings():
                            warnings.simplefilter("ignore")
                            rg = rate_exact_meijerg(link, rho)
                        assert _rel(rq, rf) < 1e-6, (alpha, mu, n_t, a, rho)
                        assert _rel(rf, rg) < 1e-6, (alpha, mu, n_t, a, rho)


def test_meijerg_uses_genuine_rational_path():
    # single antenna keeps the branch alpha, so 0.8 = 2*2/5 and 4 = 2*2/1
    # rationalize exactly and no fallback may fire
    for alpha, n_t in ((0.8, 1), (4.0, 1), (2.0, 3)):
        link = MisoLink(n_t=n_t, delay_a=0.7, branch=AlphaMuParams(alpha=alpha, mu=1.5))
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            rg = rate_exact_meijerg(link, 3.0)
        np.testing.assert_allclose(rg, rate_exact_foxh(link, 3.0), rtol=1e-9)


def test_meijerg_falls_back_for_irrational_shape():
    # fitting a multi-antenna sum moves alpha off every small rational, so
    # the G route must warn and agree with the H route exactly
    link = MisoLink(n_t=2, delay_a=0.5, branch=AlphaMuParams(alpha=0.8, mu=1.0))
    with pytest.warns(UserWarning, match="falling back"):
        rg = rate_exact_meijerg(link, 10.0)
    assert rg == rate_exact_foxh(link, 10.0)


def test_rate_monotone_in_snr():
    link = MisoLink(n_t=2, delay_a=0.5, branch=AlphaMuParams(alpha=4.0, mu=2.0))
    rhos = np.logspace(-2, 4, 13)
    vals = [rate_exact_quadrature(link, r) for r in rhos]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_rate_decreases_with_delay_exponent():
    # a stricter delay constraint can only cost rate
    branch = AlphaMuParams(alpha=3.0, mu=1.5)
    vals = [
        rate_exact_quadrature(MisoLink(n_t=2, delay_a=a, branch=branch), 10.0)
        for a in (0.25, 0.5, 1.0, 2.0, 4.0)
    ]
    assert all(b < a for a, b in zip(vals, vals[1:]))


def test_rate_rejects_bad_snr():
    with pytest.raises(ValueError):
        rate_exact_quadrature(_EXP_LINK, 0.0)
    with pytest.raises(ValueError):
        rate_exact_foxh(_EXP_LINK, -1.0)


# ----------------------------------------------------------- Nakagami forms

_NAKAGAMI_REF = [
    # (m, n_t, delay_a, rho, reference)
    (0.5, 1, 0.5, 1.0, 0.6814661931332918),
    (2.0, 2, 1.0, 10.0, 3.147360598288596),
    (3.5, 2, 0.5, 10.0, 3.3296044826914776),
    (1.0, 2, 2.0, 1.0, 0.7868549481759019),
]


def test_nakagami_frozen_values():
    for m, n_t, a, rho, ref in _NAKAGAMI_REF:
        np.testing.assert_allclose(rate_nakagami(m, 1.0, n_t, a, rho), ref, rtol=1e-12)


def test_nakagami_agrees_with_contour_route():
    for m in (0.5, 1.0, 2.0, 3.5):
        for n_t in (1, 2):
            link = MisoLink(n_t=n_t, delay_a=1.0, branch=AlphaMuParams(alpha=2.0, mu=m))
            for rho in (1.0, 10.0):
                np.testing.assert_allclose(
                    rate_nakagami(m, 1.0, n_t, 1.0, rho),
                    rate_exact_foxh(link, rho),
                    rtol=1e-8,
                )


def test_nakagami_scale_parameter():
    # omega is the per-branch mean SNR; doubling it must match doubling rho
    r1 = rate_nakagami(2.0, 2.0, 2, 0.5, 5.0)
    r2 = rate_nakagami(2.0, 1.0, 2, 0.5, 10.0)
    np.testing.assert_allclose(r1, r2, rtol=1e-12)


# ------------------------------------------------------------- ergodic link


def test_ergodic_frozen_value():
    np.testing.assert_allclose(
        ergodic_capacity_quadrature(_EXP_LINK, 1.0), 0.8603473822708860, rtol=1e-12
    )


def test_ergodic_is_delay_free_limit():
    # the effective rate climbs to the ergodic capacity as the delay
    # constraint is relaxed
    soft = MisoLink(n_t=1, delay_a=1e-4, branch=AlphaMuParams(alpha=2.0, mu=1.0))
    assert (
        abs(rate_exact_quadrature(soft, 1.0) - ergodic_capacity_quadrature(soft, 1.0))
        < 1e-4
    )
    hard = MisoLink(n_t=1, delay_a=4.0, branch=AlphaMuParams(alpha=2.0, mu=1.0))
    assert rate_exact_quadrature(hard, 1.0) < ergodic_capacity_quadrature(hard, 1.0)


# ----------------------------------------------------------------- high SNR


def test_high_snr_validity_flags():
    # branch alpha*mu/2 = 0.4 cannot support A = 2
    bad = MisoLink(n_t=1, delay_a=2.0, branch=AlphaMuParams(alpha=0.8, mu=1.0))
    required, conservative = high_snr_validity(bad)
    assert not required and not conservative
    with pytest.raises(ValueError):
        rate_high_snr(bad, 1e6)
    # inside the validity strip: legal but slowly converging, must warn
    strip = MisoLink(n_t=1, delay_a=0.6, branch=AlphaMuParams(alpha=2.0, mu=1.0))
    required, conservative = high_snr_validity(strip)
    assert required and not conservative
    with pytest.warns(UserWarning, match="slowly"):
        rate_high_snr(strip, 1e6)


def test_high_snr_asymptote_converges():
    link = MisoLink(n_t=2, delay_a=0.5, branch=AlphaMuParams(alpha=4.0, mu=2.0))
    f = 10.0 ** 0.05
    slope = (
        rate_exact_quadrature(link, 1e5 * f) - rate_exact_quadrature(link, 1e5 / f)
    ) / (2.0 * math.log2(f))
    np.testing.assert_allclose(slope, 1.0, atol=1e-2)
    gap5 = abs(rate_exact_quadrature(link, 1e5) - rate_high_snr(link, 1e5))
    gap6 = abs(rate_exact_quadrature(link, 1e6) - rate_high_snr(link, 1e6))
    assert gap6 < 1e-2
    # the offset gap decays like a power of rho
    assert gap6 < 0.2 * gap5


# ------------------------------------------------------------------ low SNR


def test_wideband_minimum_energy():
    # with unit mean branch SNR the minimum energy per bit is ln 2 for every
    # fading shape and array size
    for alpha, mu, n_t in ((0.8, 2.0, 3), (2.0, 1.0, 1), (6.0, 0.7, 4)):
        link = MisoLink(n_t=n_t, delay_a=1.0, branch=AlphaMuParams(alpha=alpha, mu=mu))
        eb_min, _ = wideband_metrics(link)
        np.testing.assert_allclose(eb_min, math.log(2.0), rtol=1e-12)
    # scaling the branch mean scales the minimum down
    rich = MisoLink(n_t=2, delay_a=1.0, branch=AlphaMuParams(2.0, 1.0, mean_snr=4.0))
    eb_min, _ = wideband_metrics(rich)
    np.testing.assert_allclose(eb_min, math.log(2.0) / 4.0, rtol=1e-12)


def test_wideband_slope_closed_form():
    # Gamma branches give S0 = 2 m n_t / (A + 1 + m n_t); the (m=1, n_t=2,
    # A=0.5) corner is exactly 4/3.5
    _, s0 = wideband_metrics(MisoLink(n_t=2, delay_a=0.5, branch=AlphaMuParams(2.0, 1.0)))
    np.testing.assert_allclose(s0, 4.0 / 3.5, rtol=1e-12)
    for m in (0.5, 1.0, 2.0, 3.5):
        for n_t in (1, 2, 4):
            for a in (0.5, 1.0, 2.0):
                link = MisoLink(n_t=n_t, delay_a=a, branch=AlphaMuParams(2.0, m))
                _, s0 = wideband_metrics(link)
                np.testing.assert_allclose(
                    s0, 2.0 * m * n_t / (a + 1.0 + m * n_t), rtol=1e-10
                )


def test_wideband_slope_saturates_at_two():
    # channel hardening: huge diversity drives the slope to the AWGN value
    link = MisoLink(n_t=1, delay_a=1.0, branch=AlphaMuParams(2.0, 1e4))
    _, s0 = wideband_metrics(link)
    np.testing.assert_allclose(s0, 2.0, atol=1e-3)


def test_wideband_slope_orderings():
    branch = AlphaMuParams(alpha=0.8, mu=2.0)
    by_nt = [
        wideband_metrics(MisoLink(n_t=n, delay_a=1.0, branch=branch))[1]
        for n in (1, 2, 4, 8)
    ]
    assert all(b > a for a, b in zip(by_nt, by_nt[1:]))
    by_a = [
        wideband_metrics(MisoLink(n_t=2, delay_a=a, branch=branch))[1]
        for a in (0.25, 0.5, 1.0, 2.0, 4.0)
    ]
    assert all(b < a for a, b in zip(by_a, by_a[1:]))


def test_low_snr_rate_shape():
    link = MisoLink(n_t=2, delay_a=1.0, branch=AlphaMuParams(alpha=2.0, mu=2.0))
    eb_min, s0 = wideband_metrics(link)
    # doubling the energy per bit buys exactly one slope unit
    r1 = rate_low_snr(link, 2.0 * eb_min)
    r2 = rate_low_snr(link, 4.0 * eb_min)
    np.testing.assert_allclose(r2 - r1, s0, rtol=1e-12)
    with pytest.warns(UserWarning, match="clamped"):
        assert rate_low_snr(link, eb_min) == 0.0
    with pytest.raises(ValueError):
        rate_low_snr(link, 0.0)


def test_parametric_curve_hits_intercept():
    for a in (0.5, 1.0, 2.0):
        link = MisoLink(n_t=2, delay_a=a, branch=AlphaMuParams(alpha=2.0, mu=2.0))
        eb, rate = parametric_eb_n0(link, 1e-4)
        assert rate > 0
        offset_db = 10.0 * math.log10(eb) - 10.0 * math.log10(math.log(2.0))
        assert abs(offset_db) < 0.05


def test_channel_power_moments_exponential():
    # two exponential branches: E{S} = 2, E{S^2} = 2*2 + 2*1 = 6
    link = MisoLink(n_t=2, delay_a=1.0, branch=AlphaMuParams(alpha=2.0, mu=1.0))
    e1, e2 = channel_power_moments(link)
    np.testing.assert_allclose(e1, 2.0, rtol=1e-14)
    np.testing.assert_allclose(e2, 6.0, rtol=1e-13)


def test_link_validation():
    branch = AlphaMuParams(alpha=2.0, mu=1.0)
    with pytest.raises(ValueError):
        MisoLink(n_t=0, delay_a=1.0, branch=branch)
    with pytest.raises(ValueError):
        MisoLink(n_t=2, delay_a=0.0, branch=branch)
