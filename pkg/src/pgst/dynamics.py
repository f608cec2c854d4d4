"""Continuous-time evolution ``U(t) = exp(i t M)`` and transfer-time search.

Amplitudes are evaluated from a :class:`~pgst.spectral.SpectralDecomposition`
as ``sum_r exp(i theta_r t) (E_r)_{a,b}``.  Time is dimensionless.
"""

from __future__ import annotations

import csv
import io
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize_scalar

from .spectral import SpectralDecomposition

log = logging.getLogger(__name__)

DEFAULT_SAMPLES_PER_PERIOD = 8
DEFAULT_BUDGET = 10**7
HORIZON_CAP = 1e6
_CHUNK = 1 << 15
_WEIGHT_TOL = 1e-12


@dataclass(frozen=True)
class FidelityTrace:
    pair: tuple[int, int]
    times: np.ndarray
    amplitudes: np.ndarray

    @property
    def probabilities(self) -> np.ndarray:
        return np.abs(self.amplitudes) ** 2

    def argmax(self) -> tuple[float, float]:
        p = self.probabilities
        k = int(np.argmax(p))
        return float(self.times[k]), float(p[k])

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["t", "re", "im", "prob"])
        for t, amp, p in zip(self.times, self.amplitudes, self.probabilities):
            w.writerow([f"{t:.17g}", f"{amp.real:.17g}", f"{amp.imag:.17g}", f"{p:.17g}"])
        return buf.getvalue()


@dataclass(frozen=True)
class TransferPeak:
    tau: float
    fidelity: float
    phase: float
    horizon: float
    target: float
    found: bool
    budget_exhausted: bool = False
    evaluations: int = 0

    def to_dict(self) -> dict:
        return {
            "status": "found" if self.found else "not_found",
            "tau": self.tau,
            "fidelity": self.fidelity,
            "phase": self.phase,
            "target": self.target,
            "horizon": self.horizon,
            "budget_exhausted": self.budget_exhausted,
            "evaluations": self.evaluations,
        }


def _weights(D: SpectralDecomposition, a: int, b: int):
    w = D.amplitude_weights(a, b)
    keep = np.abs(w) > _WEIGHT_TOL
    return D.eigenvalues[keep], w[keep]


def _amplitudes(theta, w, t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    return np.exp(1j * np.multiply.outer(t, theta)) @ w


def evolve_amplitude(D: SpectralDecomposition, a: int, b: int, t: float) -> complex:
    """``U(t)_{a,b}``."""
    w = D.amplitude_weights(a, b)
    return complex(np.exp(1j * D.eigenvalues * t) @ w)


def evolve_row(D: SpectralDecomposition, a: int, t: float) -> np.ndarray:
    """Full row ``U(t)_{a,.}``; used for unitarity checks."""
    phases = np.exp(1j * D.eigenvalues * t)
    return np.einsum("r,rj->j", phases, D.projectors[:, a - 1, :])


def evolution_matrix(D: SpectralDecomposition, t: float) -> np.ndarray:
    return np.einsum("r,rij->ij", np.exp(1j * D.eigenvalues * t), D.projectors)


def n3_probability(t):
    """End-to-end transfer probability on the three-vertex Heisenberg chain."""
    c = np.cos(t)
    return (1 - c) ** 2 * (5 + 4 * c) / 9


def fidelity_trace(D: SpectralDecomposition, a: int, b: int,
                   t_start: float, t_end: float, steps: int) -> FidelityTrace:
    if not t_start < t_end:
        raise ValueError("t_start must be below t_end")
    if steps < 2:
        raise ValueError("steps must be at least 2")
    times = np.linspace(t_start, t_end, steps)
    theta, w = _weights(D, a, b)
    amps = np.concatenate([_amplitudes(theta, w, times[i:i + _CHUNK])
                           for i in range(0, steps, _CHUNK)])
    return FidelityTrace((a, b), times, amps)


def default_horizon(D: SpectralDecomposition) -> float:
    """``1e3 * 2 pi / (smallest gap between distinct eigenvalues)``, capped."""
    if len(D.eigenvalues) < 2:
        return HORIZON_CAP
    gap = float(np.min(np.diff(D.eigenvalues)))
    return min(1e3 * 2 * math.pi / gap, HORIZON_CAP)


def wrap_phase(phi: float) -> float:
    """Wrap to (-pi, pi]."""
    phi = math.remainder(phi, 2 * math.pi)
    return math.pi if phi == -math.pi else phi


def find_peak(D: SpectralDecomposition, a: int, b: int, target_fidelity: float,
              horizon: float | None = None, budget: int = DEFAULT_BUDGET,
              samples_per_period: int = DEFAULT_SAMPLES_PER_PERIOD,
              mode: str = "first") -> TransferPeak:
    """Search ``(0, horizon]`` for a time with ``|U(t)_{a,b}| >= target_fidelity``.

    A uniform scan with step ``2 pi / (K * spread)`` (spread = range of the
    eigenvalues carrying weight on ``(a, b)``) is followed by bounded
    golden-section/Brent refinement around coarse local maxima.  Because the
    second derivative of ``|U|^2`` is at most ``spread^2``, a true peak sits
    at most ``pi^2 / (2 K^2)`` above the nearest sample; only local maxima
    within that margin of the target are refined.

    ``mode="first"`` returns the earliest time meeting the target,
    ``mode="global"`` the best over the whole horizon.  If the target is not
    met the best time seen is returned with ``found=False``.
    """
    if not 0 < target_fidelity <= 1:
        raise ValueError("target fidelity must be in (0, 1]")
    if mode not in ("first", "global"):
        raise ValueError("mode must be 'first' or 'global'")
    if samples_per_period < 8:
        raise ValueError("need at least 8 samples per period")
    if horizon is None:
        horizon = default_horizon(D)
    theta, w = _weights(D, a, b)
    spread = float(theta.max() - theta.min()) if len(theta) else 0.0
    evals = 0

    def peak(t, amp, found, exhausted=False):
        return TransferPeak(float(t), float(abs(amp)), wrap_phase(float(np.angle(amp))),
                            float(horizon), float(target_fidelity), found, exhausted, evals)

    if spread == 0.0:
        # single frequency: |U(t)_{a,b}| is constant
        amp = complex(w.sum()) if len(w) else 0j
        return peak(horizon, amp, abs(amp) >= target_fidelity)

    dt = 2 * math.pi / (samples_per_period * spread)
    margin = math.pi**2 / (2 * samples_per_period**2)
    threshold = target_fidelity**2 - margin
    nsteps = int(math.ceil(horizon / dt))

    def fidelity(t):
        return abs(complex(np.exp(1j * theta * t) @ w))

    def refine(i):
        nonlocal evals
        t0 = i * dt
        lo, hi = max(t0 - dt, 0.0), t0 + dt
        res = minimize_scalar(lambda t: -fidelity(t), bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-11 * max(1.0, hi)})
        evals += res.nfev
        t_star = float(res.x)
        if fidelity(t_star) < fidelity(t0):
            t_star = t0
        return t_star, complex(np.exp(1j * theta * t_star) @ w)

    best_t, best_amp = 0.0, complex(w.sum())
    coarse_best = (-1.0, 0)
    start = 0
    exhausted = False
    while start < nsteps and not exhausted:
        stop = min(start + _CHUNK, nsteps)
        # one sample of overlap on each side so local maxima at chunk edges are seen
        idx = np.arange(max(start - 1, 0), min(stop + 1, nsteps + 1))
        times = idx * dt
        probs = np.abs(_amplitudes(theta, w, times)) ** 2
        evals += len(times)
        k = int(np.argmax(probs))
        if probs[k] > coarse_best[0]:
            coarse_best = (float(probs[k]), int(idx[k]))
        inner = np.flatnonzero((idx[1:-1] >= max(start, 1)) & (idx[1:-1] < stop)) + 1
        is_max = (probs[inner] >= probs[inner - 1]) & (probs[inner] >= probs[inner + 1])
        cand = inner[is_max]
        if mode == "global":
            cut = max(threshold, (probs[cand].max() if len(cand) else 0) - margin,
                      abs(best_amp) ** 2 - margin)
        else:
            cut = threshold
        cand = cand[probs[cand] >= cut]
        if mode == "global":
            cand = cand[np.argsort(-probs[cand], kind="stable")]
        for i in cand:
            if evals >= budget:
                exhausted = True
                break
            t_star, amp = refine(idx[i])
            if abs(amp) > abs(best_amp) or (abs(amp) == abs(best_amp) and t_star < best_t):
                best_t, best_amp = t_star, amp
            if mode == "first" and abs(amp) >= target_fidelity:
                return peak(t_star, amp, True)
        start = stop
        if evals >= budget and start < nsteps:
            exhausted = True
    if exhausted:
        log.info("evaluation budget %d exhausted at t=%g", budget, start * dt)
    if coarse_best[0] > abs(best_amp) ** 2:
        t_star, amp = refine(coarse_best[1])
        if abs(amp) > abs(best_amp):
            best_t, best_amp = t_star, amp
    return peak(best_t, best_amp, abs(best_amp) >= target_fidelity, exhausted)


def detect_pst(D: SpectralDecomposition, a: int, b: int, tol: float = 1e-9,
               horizon: float | None = None) -> float | None:
    """Earliest time with fidelity >= 1 - tol, if the scan finds one.

    A numerical perfect-state-transfer candidate only, never a proof.
    """
    if tol > 1e-9:
        raise ValueError("tol must be at most 1e-9")
    pk = find_peak(D, a, b, 1 - tol, horizon=horizon)
    return pk.tau if pk.found else None


def phase_at_peak(D: SpectralDecomposition, a: int, b: int, peak: TransferPeak) -> float:
    """``arg U(tau)_{a,b}`` wrapped to (-pi, pi]."""
    return wrap_phase(float(np.angle(evolve_amplitude(D, a, b, peak.tau))))
