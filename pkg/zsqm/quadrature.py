"""
Cuadratura
Reglas doble exponencial (tanh-sinh en intervalos finitos, exp-sinh en
semirrectas) y Gauss-Legendre compuesta para integrandos oscilatorios
"""

import math
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Tuple

import numpy as np

from zsqm.errors import ConvergenceError, DomainError, WindowError

logger = logging.getLogger(__name__)

Integrand = Callable[[np.ndarray], np.ndarray]


SCHEMES = ("tanh_sinh", "gauss_legendre")


@dataclass(frozen=True)
class QuadratureConfig:
    """
    Parámetros de las cuadraturas

    window, si se da, sustituye a la ventana de integración de la familia.
    """
    tol: float = 1e-12
    max_level: int = 9
    gl_order: int = 32
    max_panels: int = 4096
    scheme: str = "tanh_sinh"
    window: Optional[Tuple[float, float]] = None

    def __post_init__(self):
        if not self.tol > 0.0:
            raise DomainError("La tolerancia debe ser positiva")
        if self.scheme not in SCHEMES:
            raise DomainError(f"Esquema desconocido: {self.scheme}")
        if self.window is not None:
            lo, hi = self.window
            if not hi > lo:
                raise WindowError(f"Ventana vacía: [{lo}, {hi}]")
            object.__setattr__(self, "window", (float(lo), float(hi)))

    @property
    def abs_tol(self) -> float:
        return self.tol

    def integrate(self, f: "Integrand", a: float, b: float):
        """Aplica el esquema configurado en [a, b]"""
        if self.scheme == "gauss_legendre":
            return adaptive_gauss_legendre(f, a, b, self)
        return tanh_sinh(f, a, b, self)


DEFAULT_QUADRATURE = QuadratureConfig()

# Rango de t donde los pesos doble exponencial aún son representables
_TANH_SINH_TMAX = 3.2
_EXP_SINH_TMIN = -4.5
_EXP_SINH_TMAX = 3.0


def _converged(new, old, tol: float) -> bool:
    return abs(new - old) <= tol * max(1.0, abs(new))


def _evaluate(f: Integrand, x: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore", under="ignore"):
        values = np.asarray(f(x))
    return np.where(np.isfinite(values), values, 0.0)


# ==============================
# TANH-SINH
# ==============================

def _tanh_sinh_nodes(t: np.ndarray, a: float, b: float) -> Tuple[np.ndarray, np.ndarray]:
    """Abscisas y pesos en [a, b]; la distancia al extremo se calcula sin cancelación"""
    u = 0.5 * math.pi * np.sinh(np.abs(t))
    # 1 - tanh(u) = 2 / (1 + e^{2u})
    gap = 2.0 / (1.0 + np.exp(2.0 * u))
    half = 0.5 * (b - a)
    x = np.where(t >= 0.0, b - half * gap, a + half * gap)
    w = half * 0.5 * math.pi * np.cosh(t) / np.cosh(u) ** 2
    return x, w


def tanh_sinh(f: Integrand, a: float, b: float, config: QuadratureConfig = DEFAULT_QUADRATURE):
    """
    ∫_a^b f(x) dx por tanh-sinh con niveles de paso h = 2^{-k}

    Cada nivel reutiliza la suma anterior y sólo evalúa los nodos impares.
    Tolera singularidades integrables en los extremos.

    Args:
        f: Integrando vectorizado (recibe un arreglo)
        a, b: Extremos finitos
        config: Tolerancia y nivel máximo

    Returns:
        Valor de la integral (real o complejo según f)

    Raises:
        ConvergenceError: si dos niveles consecutivos no concuerdan dentro de tol
    """
    if a == b:
        return 0.0
    if a > b:
        return -tanh_sinh(f, b, a, config)

    h = 1.0
    t = np.arange(-math.floor(_TANH_SINH_TMAX), math.floor(_TANH_SINH_TMAX) + 1, dtype=np.float64)
    x, w = _tanh_sinh_nodes(t, a, b)
    raw = np.sum(w * _evaluate(f, x))
    estimate = h * raw

    for level in range(1, config.max_level + 1):
        h /= 2.0
        m = int(math.floor(_TANH_SINH_TMAX / h))
        m -= 1 - m % 2
        t = h * np.arange(-m, m + 1, 2, dtype=np.float64)
        x, w = _tanh_sinh_nodes(t, a, b)
        raw = raw + np.sum(w * _evaluate(f, x))
        new = h * raw
        if level >= 3 and _converged(new, estimate, config.tol):
            return new
        estimate = new

    raise ConvergenceError(f"tanh-sinh no convergió en [{a}, {b}] tras {config.max_level} niveles")


# ==============================
# EXP-SINH
# ==============================

def exp_sinh(f: Integrand, a: float, config: QuadratureConfig = DEFAULT_QUADRATURE):
    """∫_a^∞ f(x) dx con x = a + exp(π/2 sinh t)"""
    def contribution(t):
        e = np.exp(0.5 * math.pi * np.sinh(t))
        return np.sum(0.5 * math.pi * np.cosh(t) * e * _evaluate(f, a + e))

    h = 0.5
    intervals = int(round((_EXP_SINH_TMAX - _EXP_SINH_TMIN) / h))
    raw = contribution(_EXP_SINH_TMIN + h * np.arange(intervals + 1))
    estimate = h * raw

    for level in range(1, config.max_level + 1):
        h /= 2.0
        raw = raw + contribution(_EXP_SINH_TMIN + h * np.arange(1, 2 * intervals, 2))
        intervals *= 2
        new = h * raw
        if level >= 3 and _converged(new, estimate, config.tol):
            return new
        estimate = new

    raise ConvergenceError(f"exp-sinh no convergió en [{a}, ∞) tras {config.max_level} niveles")


# ==============================
# GAUSS-LEGENDRE COMPUESTA
# ==============================

@lru_cache(maxsize=8)
def _legendre_rule(order: int) -> Tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def gauss_legendre(f: Integrand, a: float, b: float, panels: int, order: int = 32):
    """Regla fija: `panels` subintervalos iguales con `order` nodos cada uno"""
    nodes, weights = _legendre_rule(order)
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)[:, None]
    mid = 0.5 * (edges[1:] + edges[:-1])[:, None]
    x = (mid + half * nodes[None, :]).ravel()
    w = (half * weights[None, :]).ravel()
    return np.sum(w * _evaluate(f, x))


def adaptive_gauss_legendre(f: Integrand, a: float, b: float,
                            config: QuadratureConfig = DEFAULT_QUADRATURE, panels: int = 8):
    """
    Gauss-Legendre compuesta duplicando paneles hasta que dos estimaciones concuerden

    Pensada para transformadas de Fourier, donde el integrando oscila con
    frecuencia fija en una ventana finita.
    """
    estimate = gauss_legendre(f, a, b, panels, config.gl_order)
    while panels < config.max_panels:
        panels *= 2
        new = gauss_legendre(f, a, b, panels, config.gl_order)
        if _converged(new, estimate, config.tol):
            return new
        estimate = new
    raise ConvergenceError(f"Gauss-Legendre no convergió en [{a}, {b}] con {panels} paneles")
