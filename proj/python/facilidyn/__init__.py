"""Equilibrium and bifurcation analysis of a predator-prey model with hunting cooperation."""

import json as _json
import os as _os

from . import _core

k1 = _core.k1
k2 = _core.k2
k3 = _core.k3
alpha1 = _core.alpha1
alpha2 = _core.alpha2
sigma2 = _core.sigma2


def _default_tol():
    value = _os.environ.get("FACILIDYN_TOL")
    return float(value) if value else _core.DEFAULT_TOL


def classify(h, k, sigma, alpha, tol=None):
    """Region label, boundary flag and thresholds."""
    return _json.loads(_core.classify(h, k, sigma, alpha, _default_tol() if tol is None else tol))


def equilibria(h, k, sigma, alpha, tol=None):
    """Computed equilibria with kinds and the predicted census check."""
    return _json.loads(_core.equilibria(h, k, sigma, alpha, _default_tol() if tol is None else tol))


def simulate(h, k, sigma, alpha, x0, y0, t=100.0, rtol=1e-10, atol=1e-12, backward=False):
    """Orbit samples with the classification of its long-time behaviour."""
    return _json.loads(_core.simulate(h, k, sigma, alpha, x0, y0, t, rtol, atol, backward))


def limit_cycle(h, k, sigma, alpha):
    """The stable cycle if any, else the first cycle found, else None."""
    text = _core.limit_cycle(h, k, sigma, alpha)
    return None if text is None else _json.loads(text)


def sweep(h, k, sigma_min, sigma_max, n_sigma, alpha_min, alpha_max, n_alpha, threads=0):
    return _json.loads(_core.sweep(h, k, sigma_min, sigma_max, n_sigma, alpha_min, alpha_max, n_alpha, threads))


def hopf(h, k, sigma):
    return _json.loads(_core.hopf(h, k, sigma))


def cusp(h, k):
    return _json.loads(_core.cusp(h, k))


def curves(h, k, sigma_min, sigma_max, n):
    return _json.loads(_core.curves(h, k, sigma_min, sigma_max, n))


def ek_reduction(h, sigma, alpha):
    return _json.loads(_core.ek_reduction(h, sigma, alpha))


def sn_reduction(h, k, sigma):
    return _json.loads(_core.sn_reduction(h, k, sigma))


def acceptance(quick=True, seed=20240601):
    return _json.loads(_core.acceptance(quick, seed))
