"""
Catálogo de Prepotenciales
Las siete familias (oscilador, Morse, Riemann I/II, Xi I/II, Ramanujan) con su
superpotencial analítico, potenciales compañeros, estado base normalizado,
deformaciones y formas radiales

Unidades: 2m = ħ = 1, de modo que H₋ = -d²/dx² + V₋ con V∓ = W² ∓ W'.
"""

import math
import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache
from typing import Optional, Tuple

import numpy as np
from numpy.typing import ArrayLike
from scipy.special import expit

from zsqm import specfun
from zsqm.errors import DomainError, WindowError
from zsqm.quadrature import DEFAULT_QUADRATURE, QuadratureConfig, tanh_sinh

logger = logging.getLogger(__name__)


class Family(str, Enum):
    """Familias de prepotenciales; el valor es el nombre usado en la CLI"""
    SHO = "sho"
    MORSE = "morse"
    RIEMANN_I = "riemann1"
    RIEMANN_II = "riemann2"
    XI_I = "xi1"
    XI_II = "xi2"
    RAMANUJAN = "ramanujan"


# Valores críticos por defecto de A (ω para el oscilador)
DEFAULT_A = {
    Family.SHO: 2.0,
    Family.MORSE: 0.5,
    Family.RIEMANN_I: 0.5,
    Family.RIEMANN_II: 0.5,
    Family.XI_I: 0.5,
    Family.XI_II: 0.5,
    Family.RAMANUJAN: 6.0,
}

# Ventanas donde las fórmulas se evalúan sin desbordamiento
EVALUABLE_WINDOWS = {
    Family.SHO: (-math.inf, math.inf),
    Family.MORSE: (-20.0, 200.0),
    Family.RIEMANN_I: (-20.0, 200.0),
    Family.RIEMANN_II: (-20.0, 200.0),
    Family.XI_I: (-20.0, 20.0),
    Family.XI_II: (-20.0, 20.0),
    Family.RAMANUJAN: (-20.0, 20.0),
}

_MORSE_LIKE = (Family.MORSE, Family.RIEMANN_I, Family.RIEMANN_II)


@dataclass(frozen=True)
class PotentialSpec:
    """
    Familia de prepotencial con sus parámetros

    A es el parámetro tipo Morse (ω para el oscilador). T sólo afecta a
    Riemann I (T = 0 es Morse, T = ∞ es Morse desplazado). quad_boost añade
    λx² al prepotencial.
    """
    family: Family
    A: Optional[float] = None
    T: float = 1.0
    quad_boost: float = 0.0

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        if self.A is None:
            object.__setattr__(self, "A", DEFAULT_A[family])
        object.__setattr__(self, "A", float(self.A))
        if family is not Family.RIEMANN_I:
            object.__setattr__(self, "T", 1.0)
        if self.T < 0.0:
            raise DomainError(f"T debe ser ≥ 0 (recibido {self.T})")
        if self.quad_boost < 0.0:
            raise DomainError("quad_boost debe ser ≥ 0")
        if family is Family.SHO and self.A <= 0.0:
            raise DomainError("El oscilador requiere ω > 0")
        if family in _MORSE_LIKE and self.A <= 0.0 and self.quad_boost == 0.0:
            raise DomainError(f"{family.value} requiere A > 0 para ser normalizable")

    @property
    def label(self) -> str:
        text = f"{self.family.value}(A={self.A:g}"
        if self.family is Family.RIEMANN_I and self.T != 1.0:
            text += f", T={self.T:g}"
        if self.quad_boost:
            text += f", λ={self.quad_boost:g}"
        return text + ")"

    def with_A(self, A: float) -> "PotentialSpec":
        return replace(self, A=A)


@dataclass(frozen=True)
class NormalizationConstant:
    """N₀ = ∫ e^{-2V₀} dx"""
    value: float
    method: str = field(default="analytic")


def _as_array(x: ArrayLike) -> np.ndarray:
    return np.asarray(x, dtype=np.float64)


def _check_window(spec: PotentialSpec, x: np.ndarray):
    lo, hi = EVALUABLE_WINDOWS[spec.family]
    if np.any((x < lo) | (x > hi)) or np.any(np.isnan(x)):
        raise WindowError(f"x fuera de la ventana evaluable [{lo}, {hi}] para {spec.family.value}")


def _scalar(values: np.ndarray):
    return float(values) if values.ndim == 0 else values


# ==============================
# TÉRMINOS POR FAMILIA
# ==============================

def _t_log_term(y: np.ndarray, T: float) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """T log(1 + e^{-y/T}) y sus derivadas en x (y = e^{-x}) para 0 < T < ∞"""
    e = expit(-y / T)
    value = T * np.log1p(np.exp(-y / T))
    d1 = y * e
    d2 = -y * e + (y ** 2 / T) * e * (1.0 - e)
    return value, d1, d2


def _riemann_i_terms(A: float, T: float, x: np.ndarray, y: np.ndarray):
    if T == 0.0:
        return A * x + y, A - y, y
    if math.isinf(T):
        return A * x + 0.5 * y, A - 0.5 * y, 0.5 * y
    value, d1, d2 = _t_log_term(y, T)
    return A * x + y + value, A - y + d1, y + d2


def _log_cosh(y: np.ndarray) -> np.ndarray:
    return y + np.log1p(np.exp(-2.0 * y)) - math.log(2.0)


def _family_terms(spec: PotentialSpec, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(V₀, W, W') sin el término cuadrático adicional"""
    A = spec.A
    family = spec.family

    if family is Family.SHO:
        return 0.25 * A * x ** 2, 0.5 * A * x, np.full_like(x, 0.5 * A)

    y = np.exp(-x)
    if family is Family.MORSE:
        return A * x + y, A - y, y
    if family is Family.RIEMANN_I:
        return _riemann_i_terms(A, spec.T, x, y)
    if family is Family.RIEMANN_II:
        th = np.tanh(y)
        sech2 = 1.0 - th ** 2
        return ((A + 1.0) * x + 2.0 * _log_cosh(y),
                (A + 1.0) - 2.0 * y * th,
                2.0 * y * th + 2.0 * y ** 2 * sech2)
    if family is Family.XI_I:
        ell, d1, d2 = specfun.log_phi_derivatives(x)
        return (A - 0.5) * x - ell, (A - 0.5) - d1, -d2
    if family is Family.XI_II:
        ell, d1, d2 = specfun.log_phi2_derivatives(x)
        return (A - 0.5) * x - ell, (A - 0.5) - d1, -d2
    if family is Family.RAMANUJAN:
        ell, d1, d2 = specfun.log_discriminant_x_derivatives(x)
        return A * x - ell, A - d1, -d2
    raise DomainError(f"Familia desconocida: {family}")


def _terms(spec: PotentialSpec, x: ArrayLike):
    x = _as_array(x)
    _check_window(spec, x)
    v0, w, dw = _family_terms(spec, x)
    if spec.quad_boost:
        lam = spec.quad_boost
        v0, w, dw = v0 + lam * x ** 2, w + 2.0 * lam * x, dw + 2.0 * lam
    return np.asarray(v0), np.asarray(w), np.asarray(dw)


# ==============================
# OPERACIONES PRINCIPALES
# ==============================

def prepotential(spec: PotentialSpec, x: ArrayLike):
    """
    V₀(x) + quad_boost·x²

    Args:
        spec: Familia y parámetros
        x: Posición (escalar o arreglo) dentro de la ventana evaluable

    Returns:
        Valor del prepotencial

    Raises:
        WindowError: si x sale de la ventana evaluable de la familia
    """
    return _scalar(_terms(spec, x)[0])


def superpotential(spec: PotentialSpec, x: ArrayLike):
    """W(x) = V₀'(x), derivada analítica por familia"""
    return _scalar(_terms(spec, x)[1])


def superpotential_derivative(spec: PotentialSpec, x: ArrayLike):
    """W'(x) = V₀''(x)"""
    return _scalar(_terms(spec, x)[2])


def partner_potentials(spec: PotentialSpec, x: ArrayLike):
    """
    (V₋, V₊) = (W² - W', W² + W')

    Returns:
        Tupla con ambos compañeros evaluados en x
    """
    _, w, dw = _terms(spec, x)
    return _scalar(w ** 2 - dw), _scalar(w ** 2 + dw)


def shape_invariance_residual(A: float, x: ArrayLike):
    """
    V₊(x, A+1) - V₋(x, A) - (2A + 1) para Riemann I

    El término (2A + 1) = (A+1)² - A² es el corrimiento de energía de la
    invariancia de forma; lo que queda es f₂(x) = 2y²e^y/(1 + e^y)², y = e^{-x},
    independiente de A.
    """
    _, v_plus = partner_potentials(PotentialSpec(Family.RIEMANN_I, A + 1.0), x)
    v_minus, _ = partner_potentials(PotentialSpec(Family.RIEMANN_I, A), x)
    return _scalar(np.asarray(v_plus - v_minus - (2.0 * A + 1.0)))


def shape_invariance_remainder(x: ArrayLike):
    """f₂(x) = 2 e^{-2x} exp(e^{-x}) / (1 + exp(e^{-x}))²"""
    y = np.exp(-_as_array(x))
    s = expit(y)
    return _scalar(2.0 * y ** 2 * s * (1.0 - s))


# ==============================
# NORMALIZACIÓN Y ESTADO BASE
# ==============================

def integration_window(spec: PotentialSpec) -> Tuple[float, float]:
    """
    Ventana donde ψ₀² supera 1e-17 de su máximo

    Las colas fuera de ella no contribuyen en doble precisión a ninguna
    integral de densidad.
    """
    family = spec.family
    if family is Family.SHO:
        half = math.sqrt(80.0 / (spec.A + 4.0 * spec.quad_boost))
        return -half, half
    if family in _MORSE_LIKE:
        a_eff = spec.A + (1.0 if family is Family.RIEMANN_II else 0.0)
        if family is Family.RIEMANN_I and math.isinf(spec.T):
            left = -5.5
        else:
            left = -4.5
        right = 3.0 + 40.0 / (2.0 * a_eff) if a_eff > 0.0 else math.inf
        if spec.quad_boost:
            right = min(right, 3.0 + math.sqrt(40.0 / spec.quad_boost))
        return left, min(right, EVALUABLE_WINDOWS[family][1])
    if family is Family.RAMANUJAN:
        return -3.0 + min(0.0, spec.A - 6.0), 3.0 + max(0.0, spec.A - 6.0)
    return -2.5, 2.5


def _density(spec: PotentialSpec):
    def f(x):
        return np.exp(-2.0 * prepotential(spec, x))
    return f


def _analytic_norm(spec: PotentialSpec):
    A = spec.A
    family = spec.family
    if spec.quad_boost:
        return None
    if family is Family.SHO:
        return math.sqrt(2.0 * math.pi / A)
    if family is Family.MORSE:
        return math.gamma(2.0 * A) / 4.0 ** A
    if family is Family.RIEMANN_I:
        if spec.T == 0.0:
            return math.gamma(2.0 * A) / 4.0 ** A
        if math.isinf(spec.T):
            return math.gamma(2.0 * A)
        if spec.T == 1.0:
            eta_a = specfun.dirichlet_eta(2.0 * A).real
            eta_b = specfun.dirichlet_eta(2.0 * A - 1.0).real
            return math.gamma(2.0 * A) * (eta_a - eta_b)
        return None
    if family is Family.RIEMANN_II:
        eta_a = specfun.dirichlet_eta(2.0 * A + 1.0).real
        eta_b = specfun.dirichlet_eta(2.0 * A - 1.0).real
        return (8.0 / 3.0) * math.gamma(2.0 * A + 2.0) * 2.0 ** (-2.0 * A - 2.0) * (eta_a - eta_b)
    return None


@lru_cache(maxsize=128)
def normalization_constant(spec: PotentialSpec,
                           config: QuadratureConfig = DEFAULT_QUADRATURE) -> NormalizationConstant:
    """
    N₀ = ∫ e^{-2V₀(x)} dx

    Forma cerrada para oscilador, Morse, Riemann I (T ∈ {0, 1, ∞}) y Riemann II;
    tanh-sinh sobre la ventana de integración en el resto.
    """
    value = _analytic_norm(spec)
    if value is not None:
        return NormalizationConstant(float(value), "analytic")
    lo, hi = integration_window(spec)
    value = float(np.real(tanh_sinh(_density(spec), lo, hi, config)))
    logger.debug(f"N₀ por cuadratura para {spec.label}: {value:.12g}")
    return NormalizationConstant(value, "quadrature")


def ground_state_position(spec: PotentialSpec, x: ArrayLike, normalized: bool = True):
    """
    ψ₀(x) = e^{-V₀(x)}, dividido entre √N₀ si normalized

    Siempre positivo: el estado base no tiene nodos.
    """
    psi = np.exp(-_terms(spec, x)[0])
    if normalized:
        psi = psi / math.sqrt(normalization_constant(spec).value)
    return _scalar(psi)


# ==============================
# DEFORMACIONES
# ==============================

def t_deformed_prepotential(A: float, x: ArrayLike, T: float):
    """V₀(x, T) = Ax + e^{-x} + T log(1 + e^{-e^{-x}/T}), con T = 0 y T = ∞ explícitos"""
    return prepotential(PotentialSpec(Family.RIEMANN_I, A, T=T), x)


def t_deformation_endpoints(A: float, x: ArrayLike) -> Tuple[float, float]:
    """
    Brechas respecto de los dos extremos de la deformación

    Returns:
        (|V₀(x, 1e-6) - V₀ᴹᵒʳˢᵉ(x)|, |V₀(x, 1e6) - T log 2 - (Ax + e^{-x}/2)|).
        Ax + e^{-x}/2 es Morse desplazado a la izquierda en log 2 salvo la
        constante A log 2.
    """
    x = _as_array(x)
    y = np.exp(-x)
    morse = A * x + y
    small = t_deformed_prepotential(A, x, 1e-6)
    big_t = 1e6
    # T log(1 + e^{-y/T}) - T log 2 = T log1p(expm1(-y/T)/2)
    centered = A * x + y + big_t * np.log1p(np.expm1(-y / big_t) / 2.0)
    shifted = A * x + 0.5 * y
    return float(np.max(np.abs(small - morse))), float(np.max(np.abs(centered - shifted)))


def morse_isospectral_ground_state(lam: float, x: ArrayLike):
    """
    ψ₀(x, λ) = √(λ(λ+1)) √2 e^{-x/2} / (e^{-e^{-x}} + λ e^{e^{-x}})

    Normalizado a 1 para todo λ > 0; λ → ∞ recupera Morse con A = 1/2.
    """
    if lam <= 0.0:
        raise DomainError(f"La deformación isoespectral requiere λ > 0 (recibido {lam})")
    x = _as_array(x)
    y = np.exp(-x)
    # se divide numerador y denominador entre e^{y} para evitar desbordamiento
    value = math.sqrt(2.0 * lam * (lam + 1.0)) * np.exp(-0.5 * x - y) / (np.exp(-2.0 * y) + lam)
    return _scalar(value)


def morse_isospectral_potential(lam: float, x: ArrayLike):
    """
    V(x, λ) = ψ₀''/ψ₀ para la deformación isoespectral de Morse (A = 1/2)

    Con D = e^{-y} + λe^{y}: log ψ₀ = -x/2 - log D + cte, y r = D'/D.
    """
    if lam <= 0.0:
        raise DomainError(f"La deformación isoespectral requiere λ > 0 (recibido {lam})")
    y = np.exp(-_as_array(x))
    e = np.exp(-2.0 * y)
    r = y * (e - lam) / (e + lam)
    d2 = r - y ** 2 + r ** 2
    d1 = -0.5 - r
    return _scalar(d2 + d1 ** 2)


# ==============================
# FORMAS RADIALES
# ==============================

class RadialKind(str, Enum):
    OSCILLATOR = "oscillator"
    COULOMB = "coulomb"


def _radial_y(r: np.ndarray, kind: RadialKind) -> np.ndarray:
    if np.any(r <= 0.0):
        raise DomainError("La coordenada radial requiere r > 0")
    return 0.5 * r ** 2 if kind is RadialKind.OSCILLATOR else 0.5 * r


def radial_form(A: float, r: ArrayLike, kind: str = "oscillator", energy: float = 0.0):
    """
    Potencial central bidimensional equivalente a Riemann I

    oscillator: r² = 2e^{-x}, V(r) = 4(V₋ - E)/r²
    coulomb:    r = 2e^{-x},  V_C(r) = (V₋ - E)/r²

    En ambos casos el operador radial es -∂²_r - (1/r)∂_r + V(r).
    """
    kind = RadialKind(kind)
    r = _as_array(r)
    y = _radial_y(r, kind)
    x = -np.log(y)
    v_minus, _ = partner_potentials(PotentialSpec(Family.RIEMANN_I, A), x)
    scale = 4.0 if kind is RadialKind.OSCILLATOR else 1.0
    return _scalar(scale * (np.asarray(v_minus) - energy) / r ** 2)


def radial_ground_state(A: float, r: ArrayLike, kind: str = "oscillator"):
    """r^{2A}/(1 + e^{r²/2}) (oscilador) o r^A/(e^{r/2} + 1) (Coulomb), sin normalizar"""
    kind = RadialKind(kind)
    r = _as_array(r)
    _radial_y(r, kind)
    if kind is RadialKind.OSCILLATOR:
        return _scalar(r ** (2.0 * A) * expit(-0.5 * r ** 2))
    return _scalar(r ** A * expit(-0.5 * r))


def radial_residual(A: float, r: ArrayLike, kind: str = "oscillator"):
    """
    (-ψ'' - ψ'/r + Vψ)/ψ para el estado base radial, con derivadas analíticas de log ψ

    Debe anularse: es la ecuación en x reescrita en coordenadas radiales.
    """
    kind = RadialKind(kind)
    r = _as_array(r)
    if kind is RadialKind.OSCILLATOR:
        s = expit(0.5 * r ** 2)
        g1 = 2.0 * A / r - r * s
        g2 = -2.0 * A / r ** 2 - s - r ** 2 * s * (1.0 - s)
    else:
        s = expit(0.5 * r)
        g1 = A / r - 0.5 * s
        g2 = -A / r ** 2 - 0.25 * s * (1.0 - s)
    potential = _as_array(radial_form(A, r, kind.value))
    return _scalar(-(g2 + g1 ** 2) - g1 / r + potential)
