"""
Análisis en Espacio de Momentos
Estado base en momentos (forma cerrada y transformada numérica), nodos sobre
la línea crítica, ecuación en diferencias en momento, momentos e
incertidumbre, entropías de Shannon y desarrollos alrededor del mínimo

Convención de Fourier unitaria: ψ̃₀(p) = (2π)^{-1/2} ∫ ψ₀(x) e^{-ipx} dx.
"""

import math
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import Chebyshev, Polynomial
from scipy.optimize import brentq, minimize_scalar

from zsqm import specfun
from zsqm.errors import (
    ConvergenceError,
    DomainError,
    NoMinimumError,
    WindingAmbiguityError,
    WindowError,
)
from zsqm.potentials import (
    EVALUABLE_WINDOWS,
    Family,
    PotentialSpec,
    integration_window,
    normalization_constant,
    partner_potentials,
    prepotential,
    superpotential,
    superpotential_derivative,
)
from zsqm.quadrature import DEFAULT_QUADRATURE, QuadratureConfig, tanh_sinh
from zsqm.spectral import GROUND_TAIL_RATIO, solve_spectrum

logger = logging.getLogger(__name__)

# Ordenadas de los primeros ceros no triviales de ζ (referencia para barridos)
RIEMANN_ZERO_ORDINATES = (
    14.134725141734693, 21.022039638771555, 25.010857580145688,
    30.424876125859513, 32.935061587739189, 37.586178158825671,
)

MAX_MOMENTUM = 60.0
ENTROPY_FLOOR = 1e-300

FOURIER_QUADRATURE = QuadratureConfig(scheme="gauss_legendre")


# ==============================
# TIPOS
# ==============================

@dataclass(frozen=True)
class ZeroRecord:
    """Nodo de ψ̃₀ en p real"""
    p: float
    residual: float
    newton_iterations: int
    method: str = "winding"

    def to_dict(self) -> Dict:
        return {
            "p": self.p,
            "residuo": self.residual,
            "iteraciones": self.newton_iterations,
            "metodo": self.method,
        }


@dataclass(frozen=True)
class NodeScan:
    """
    Resultado de un barrido fuera de la línea crítica

    min_abs es min|Γη| sin normalizar (≈ 1e-18 cerca de p ≈ 25 por el decaimiento de Γ),
    no comparable entre valores de A; min_relative lo divide por el máximo del barrido.
    """
    A: float
    min_abs: float
    min_eta: float
    p_at_min: float
    min_relative: float


@dataclass(frozen=True)
class Moments:
    """(⟨·⟩, ⟨·²⟩, desviación)"""
    mean: float
    second: float
    spread: float

    def as_tuple(self) -> Tuple[float, float, float]:
        return self.mean, self.second, self.spread


# ==============================
# ESTADO BASE EN MOMENTOS
# ==============================

def momentum_kernel(spec: PotentialSpec, p) -> np.ndarray:
    """
    ∫ e^{-V₀(x)} e^{-ipx} dx en forma cerrada, con s = A + ip

    Oscilador √(4π/ω) e^{-p²/ω}; Morse Γ(s); Riemann I Γ(s)η(s) (Γ(s) en T = 0,
    2^s Γ(s) en T = ∞); Riemann II 2^{1-s} s Γ(s) η(s); Xi I ξ(s);
    Xi II (2^{1-s} + 2^s - 3)·2ξ(s)/((s-1)s); Ramanujan Λ(s).

    Raises:
        DomainError: si no hay forma cerrada (quad_boost ≠ 0 o T genérico)
    """
    if spec.quad_boost:
        raise DomainError(f"{spec.label} no tiene transformada cerrada; usar fourier_transform_numeric")
    p = np.asarray(p, dtype=np.complex128)
    A = spec.A
    family = spec.family
    s = A + 1j * p

    if family is Family.SHO:
        return math.sqrt(4.0 * math.pi / A) * np.exp(-p ** 2 / A)
    if family is Family.MORSE:
        return specfun.gamma_complex(s)
    if family is Family.RIEMANN_I:
        if spec.T == 0.0:
            return specfun.gamma_complex(s)
        if math.isinf(spec.T):
            return 2.0 ** s * specfun.gamma_complex(s)
        if spec.T == 1.0:
            return specfun.gamma_complex(s) * specfun.dirichlet_eta(s)
        raise DomainError(f"Riemann I con T = {spec.T} sólo admite transformada numérica")
    if family is Family.RIEMANN_II:
        return 2.0 ** (1.0 - s) * s * specfun.gamma_complex(s) * specfun.dirichlet_eta(s)
    if family is Family.XI_I:
        return specfun.riemann_xi(s)
    if family is Family.XI_II:
        return (2.0 ** (1.0 - s) + 2.0 ** s - 3.0) * 2.0 * specfun.riemann_xi(s) / ((s - 1.0) * s)
    if family is Family.RAMANUJAN:
        flat = np.atleast_1d(s).ravel()
        values = np.array([specfun.ramanujan_completed_l(complex(z)) for z in flat])
        return values.reshape(np.shape(s)) if np.ndim(s) else values[0]
    raise DomainError(f"Familia desconocida: {family}")


def momentum_ground_state(spec: PotentialSpec, p, A_override: Optional[float] = None):
    """
    ψ̃₀(p) normalizado: kernel/(√(2π)·√N₀)

    Args:
        spec: Familia y parámetros
        p: Momento real (escalar o arreglo); se aceptan valores complejos
        A_override: Sustituye A en el kernel y en N₀

    Returns:
        Valor complejo (complex para escalares)
    """
    if A_override is not None:
        spec = spec.with_A(A_override)
    kernel = np.asarray(momentum_kernel(spec, p), dtype=np.complex128)
    value = kernel / math.sqrt(2.0 * math.pi * normalization_constant(spec).value)
    return complex(value) if value.ndim == 0 else value


def _check_tails(spec: PotentialSpec, lo: float, hi: float):
    x = np.linspace(lo, hi, 513)
    log_psi = -np.asarray(prepotential(spec, x))
    ratio = np.exp(log_psi[[0, -1]] - np.max(log_psi))
    if np.any(ratio >= GROUND_TAIL_RATIO):
        raise WindowError(f"Ventana [{lo}, {hi}] demasiado estrecha para {spec.label}")


def fourier_transform_numeric(spec: PotentialSpec, p, config: QuadratureConfig = FOURIER_QUADRATURE):
    """
    ψ̃₀(p) por cuadratura directa de ψ₀(x) e^{-ipx}

    Usa la ventana de la configuración o la de integración de la familia.
    Es la verificación independiente de momentum_ground_state.

    Raises:
        WindowError: si ψ₀ no cae por debajo de 1e-8 de su máximo en los bordes
        ConvergenceError: si la cuadratura no converge
    """
    lo, hi = config.window or integration_window(spec)
    _check_tails(spec, lo, hi)
    scale = 1.0 / math.sqrt(2.0 * math.pi * normalization_constant(spec).value)

    def transform(q: float) -> complex:
        def integrand(x):
            return np.exp(-np.asarray(prepotential(spec, x)) - 1j * q * x)
        return complex(config.integrate(integrand, lo, hi)) * scale

    if np.ndim(p) == 0:
        return transform(float(p))
    return np.array([transform(float(q)) for q in np.ravel(p)]).reshape(np.shape(p))


# ==============================
# NODOS EN MOMENTOS
# ==============================

def _gamma_eta(s):
    return specfun.gamma_complex(s) * specfun.dirichlet_eta(s)


ZERO_FUNCTIONS: Dict[str, Callable] = {
    "zeta": _gamma_eta,
    "xi": specfun.riemann_xi,
    "morse": specfun.gamma_complex,
}

_ZERO_ALIASES = {"riemann1": "zeta", "xi1": "xi"}

# Funciones con polos de Γ en s = 0, -1, ...
GAMMA_ZERO_KEYS = ("zeta", "morse")


def _zero_function(family: Union[str, Family]) -> Tuple[str, Callable]:
    key = family.value if isinstance(family, Family) else str(family)
    key = _ZERO_ALIASES.get(key, key)
    if key not in ZERO_FUNCTIONS:
        raise DomainError(f"Familia sin búsqueda de ceros: {family}")
    return key, ZERO_FUNCTIONS[key]


def _box_boundary(a0: float, a1: float, p0: float, p1: float, n_side: int) -> np.ndarray:
    """Contorno antihorario del rectángulo [a0, a1] × [p0, p1] en s = a + ip"""
    t = np.linspace(0.0, 1.0, n_side, endpoint=False)
    edges = [
        a0 + (a1 - a0) * t + 1j * p0,
        a1 + 1j * (p0 + (p1 - p0) * t),
        a1 - (a1 - a0) * t + 1j * p1,
        a0 + 1j * (p1 - (p1 - p0) * t),
    ]
    contour = np.concatenate(edges)
    return np.append(contour, contour[0])


def winding_number(func: Callable, a0: float, a1: float, p0: float, p1: float,
                   n_side: int = 64) -> Tuple[int, float]:
    """
    Número de ceros de func dentro del rectángulo (principio del argumento)

    Returns:
        (conteo, escala) donde escala es max|func| en el contorno

    Raises:
        WindingAmbiguityError: si el contorno pasa demasiado cerca de un cero
    """
    values = np.asarray(func(_box_boundary(a0, a1, p0, p1, n_side)), dtype=np.complex128)
    magnitude = np.abs(values)
    scale = float(np.max(magnitude))
    if np.min(magnitude) < 1e-6 * scale:
        raise WindingAmbiguityError(f"|f| casi nula en el borde de [{a0}, {a1}]×[{p0}, {p1}]")
    steps = np.angle(values[1:] / values[:-1])
    if np.max(np.abs(steps)) > 0.5 * math.pi:
        raise WindingAmbiguityError(f"Salto de fase excesivo en [{a0}, {a1}]×[{p0}, {p1}]")
    return int(round(np.sum(steps) / (2.0 * math.pi))), scale


def _newton(func: Callable, s0: complex, max_iter: int = 60, h: float = 1e-6) -> Tuple[complex, int]:
    s = complex(s0)
    for iteration in range(1, max_iter + 1):
        f = complex(func(np.array([s]))[0])
        df = complex((func(np.array([s + h]))[0] - func(np.array([s - h]))[0]) / (2.0 * h))
        if df == 0.0:
            break
        step = f / df
        s -= step
        if abs(step) < 1e-13 * max(1.0, abs(s)):
            return s, iteration
    raise ConvergenceError(f"Newton no convergió desde s = {s0}")


def _scan_box(func: Callable, A: float, p0: float, p1: float, half_width: float) -> List[ZeroRecord]:
    width = half_width
    lo, hi = p0, p1
    for _ in range(4):
        try:
            count, scale = winding_number(func, A - width, A + width, lo, hi)
            break
        except WindingAmbiguityError:
            width *= 0.7
            lo, hi = lo + 0.0137, hi + 0.0137
    else:
        raise WindingAmbiguityError(f"Caja p ∈ [{p0}, {p1}] ambigua tras reintentos")

    if count == 0:
        return []
    s, iterations = _newton(func, complex(A, 0.5 * (lo + hi)))
    if not (lo - 0.05 <= s.imag <= hi + 0.05):
        raise ConvergenceError(f"Newton salió de la caja [{lo}, {hi}]: s = {s}")
    if abs(s.real - A) > 1e-7:
        logger.debug(f"Cero fuera de la recta Re s = {A}: s = {s}")
        return []
    residual = abs(complex(func(np.array([s]))[0])) / scale
    return [ZeroRecord(float(s.imag), float(residual), iterations, "winding")]


def _bisect_real(func: Callable, p_lo: float, p_hi: float, step: float = 0.05) -> List[ZeroRecord]:
    p = np.arange(p_lo, p_hi + 0.5 * step, step)

    def g(q):
        return float(np.real(func(np.array([0.5 + 1j * q]))[0]))

    values = np.real(func(0.5 + 1j * p))
    scale = float(np.max(np.abs(values)))
    records = []
    for j in np.nonzero(np.sign(values[:-1]) * np.sign(values[1:]) < 0)[0]:
        root, info = brentq(g, p[j], p[j + 1], xtol=1e-14, rtol=1e-15, full_output=True)
        records.append(ZeroRecord(float(root), abs(g(root)) / scale, info.iterations, "bisection"))
    return records


def find_momentum_zeros(family: Union[str, Family], A: float = 0.5,
                        p_range: Tuple[float, float] = (10.0, 30.0), box_height: float = 0.5,
                        half_width: float = 0.1, workers: int = 1) -> List[ZeroRecord]:
    """
    Nodos de ψ̃₀(p) para p real en p_range

    Cajas de conteo de altura 0.5 en p sobre la recta Re s = A, refinadas por
    Newton sobre la función analítica (Γη, ξ o Γ). Para ξ en A = 1/2 la
    función es real y basta con bisección.

    Con factor Γ el semiancho se recorta a A/2 para que ninguna caja toque
    el polo en s = 0.

    Raises:
        DomainError: si p_range excede |p| ≤ 60, o A ≤ 0 con factor Γ
        WindingAmbiguityError: si una caja no se resuelve tras los reintentos
    """
    key, func = _zero_function(family)
    p_lo, p_hi = p_range
    if not 0.0 <= p_lo < p_hi <= MAX_MOMENTUM:
        raise DomainError(f"Rango de momentos fuera de [0, {MAX_MOMENTUM}]: {p_range}")
    if key in GAMMA_ZERO_KEYS:
        if not A > 0.0:
            raise DomainError(f"La búsqueda de ceros de {key} requiere A > 0 (polo de Γ en s = 0)")
        half_width = min(half_width, 0.5 * A)

    if key == "xi" and A == 0.5:
        records = _bisect_real(func, p_lo, p_hi)
    else:
        edges = np.arange(p_lo, p_hi, box_height)
        boxes = [(e, min(e + box_height, p_hi)) for e in edges]

        def run(box):
            return _scan_box(func, A, box[0], box[1], half_width)

        if workers > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                found = list(pool.map(run, boxes))
        else:
            found = [run(box) for box in boxes]
        records = []
        for record in sorted((r for rs in found for r in rs), key=lambda r: r.p):
            if not records or abs(record.p - records[-1].p) > 1e-8:
                records.append(record)

    logger.info(f"✓ {len(records)} nodos de {key} (A = {A}) en p ∈ [{p_lo}, {p_hi}]")
    return records


def node_scan_off_critical(A: float, p_list: Optional[Sequence[float]] = None,
                           half_window: float = 0.05, n_points: int = 1001) -> NodeScan:
    """
    min |Γ(A+ip)η(A+ip)| en ventanas alrededor de las ordenadas de ceros de ζ

    min_eta divide el factor Γ (sin ceros) y mide la distancia relativa al nodo.
    """
    if not 0.0 < A < 1.0:
        raise DomainError(f"El barrido requiere A ∈ (0, 1) (A = {A})")
    if A == 0.5:
        logger.warning("A = 1/2 está sobre la línea crítica: el mínimo es un nodo")
    centers = RIEMANN_ZERO_ORDINATES[:3] if p_list is None else p_list
    p = np.concatenate([np.linspace(c - half_window, c + half_window, n_points) for c in centers])
    s = A + 1j * p
    gamma = np.abs(specfun.gamma_complex(s))
    eta = np.abs(specfun.dirichlet_eta(s))
    j = int(np.argmin(eta))
    product = gamma * eta
    return NodeScan(A, float(np.min(product)), float(eta[j]), float(p[j]),
                    float(np.min(product) / np.max(product)))


# ==============================
# ECUACIÓN EN DIFERENCIAS
# ==============================

def finite_difference_residual(family: Union[str, Family], A: float, p: complex,
                               n_terms: Optional[int] = None) -> complex:
    """
    Residuo de la ecuación en diferencias en momento, relativo a |ψ̃₀(p)|

    Morse: (A + ip)ψ̃₀(p) - ψ̃₀(p - i) = 0, identidad de recurrencia de Γ.
    Riemann I: (A + ip)ψ̃₀(p) - ψ̃₀(p - i) + ½Σ Eₙ(0)/n! ψ̃₀(p - i(n+1)) = 0.
    La serie de Euler es asintótica (|Eₙ(0)| ~ 4n!/π^{n+1}); con n_terms se
    usa la suma parcial, sin él la suma exacta Γ(s+1)(η(s+1) - η(s)).

    Raises:
        DomainError: familia no soportada o n_terms > 30
    """
    key = family.value if isinstance(family, Family) else str(family)
    s = A + 1j * complex(p)
    if key == "morse":
        base = s * specfun.gamma_complex(s) - specfun.gamma_complex(s + 1.0)
        return base / abs(specfun.gamma_complex(s))
    if key not in ("riemann1", "zeta"):
        raise DomainError(f"Ecuación en diferencias no disponible para {family}")

    kernel = _gamma_eta
    base = s * kernel(s) - kernel(s + 1.0)
    if n_terms is None:
        series = specfun.gamma_complex(s + 1.0) * (specfun.dirichlet_eta(s + 1.0) - specfun.dirichlet_eta(s))
    else:
        if not 0 <= n_terms <= 30:
            raise DomainError("n_terms debe estar en [0, 30]")
        series = 0.0
        for n in range(n_terms):
            euler = float(specfun.euler_number_at_zero(n))
            if euler:
                series += 0.5 * euler / math.factorial(n) * kernel(s + n + 1.0)
    return complex((base + series) / abs(kernel(s)))


# ==============================
# MOMENTOS E INCERTIDUMBRE
# ==============================

def _window(spec: PotentialSpec, config: QuadratureConfig) -> Tuple[float, float]:
    return config.window or integration_window(spec)


def _position_density(spec: PotentialSpec):
    log_norm = math.log(normalization_constant(spec).value)

    def rho(x):
        return np.exp(-2.0 * np.asarray(prepotential(spec, x)) - log_norm)
    return rho


def position_moments(spec: PotentialSpec, config: QuadratureConfig = DEFAULT_QUADRATURE) -> Moments:
    """(⟨x⟩, ⟨x²⟩, Δx) con la densidad ψ₀²/N₀"""
    lo, hi = _window(spec, config)
    rho = _position_density(spec)
    mean = float(tanh_sinh(lambda x: x * rho(x), lo, hi, config))
    second = float(tanh_sinh(lambda x: x ** 2 * rho(x), lo, hi, config))
    return Moments(mean, second, math.sqrt(max(second - mean ** 2, 0.0)))


def momentum_density(spec: PotentialSpec, p) -> np.ndarray:
    """|ψ̃₀(p)|², numérica si la familia no tiene forma cerrada"""
    try:
        values = momentum_ground_state(spec, p)
    except DomainError:
        values = fourier_transform_numeric(spec, p)
    return np.abs(values) ** 2


def momentum_window(spec: PotentialSpec, ratio: float = 1e-20, step: float = 2.5) -> float:
    """Menor P tal que |ψ̃₀(P)|² < ratio·|ψ̃₀(0)|², hasta |p| ≤ 120"""
    peak = float(momentum_density(spec, 0.0))
    p = step
    while p < 120.0:
        if float(momentum_density(spec, p)) < ratio * peak:
            return p
        p += step
    return 120.0


def density_minima(spec: PotentialSpec, top: float, step: float = 0.05) -> List[float]:
    """
    Mínimos locales de |ψ̃₀(p)|² en (0, top), refinados con Brent

    Incluye los nodos de ψ̃₀, donde -ρ log ρ deja de ser suave.
    """
    p = np.linspace(0.0, top, int(math.ceil(top / step)) + 1)
    rho = np.asarray(momentum_density(spec, p), dtype=np.float64)
    interior = np.nonzero((rho[1:-1] < rho[:-2]) & (rho[1:-1] <= rho[2:]))[0] + 1
    minima = []
    for j in interior:
        result = minimize_scalar(lambda q: math.sqrt(float(momentum_density(spec, q))),
                                 bounds=(p[j - 1], p[j + 1]), method="bounded", options={"xatol": 1e-12})
        minima.append(float(result.x))
    return minima


def momentum_moments(spec: PotentialSpec, method: str = "derivative",
                     config: QuadratureConfig = DEFAULT_QUADRATURE) -> Moments:
    """
    (⟨p⟩, ⟨p²⟩, Δp)

    derivative: ⟨p²⟩ = ∫ |ψ₀'|² dx = ∫ W² ψ₀² dx. density: ∫ p² |ψ̃₀|² dp.
    ⟨p⟩ = 0 porque ψ₀ es real.
    """
    if method == "derivative":
        lo, hi = _window(spec, config)
        rho = _position_density(spec)
        second = float(tanh_sinh(lambda x: np.asarray(superpotential(spec, x)) ** 2 * rho(x), lo, hi, config))
    elif method == "density":
        top = momentum_window(spec)
        second = 2.0 * float(tanh_sinh(lambda p: p ** 2 * momentum_density(spec, p), 0.0, top, config))
    else:
        raise DomainError(f"Método desconocido: {method}")
    return Moments(0.0, second, math.sqrt(second))


def uncertainty_product(spec: PotentialSpec, config: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """Δx·Δp, acotado inferiormente por 1/2"""
    return position_moments(spec, config).spread * momentum_moments(spec, config=config).spread


def parseval_defect(spec: PotentialSpec, config: QuadratureConfig = DEFAULT_QUADRATURE) -> float:
    """|∫|ψ̃₀|² dp - 1|"""
    top = momentum_window(spec)
    return abs(2.0 * float(tanh_sinh(lambda p: momentum_density(spec, p), 0.0, top, config)) - 1.0)


# ==============================
# ENTROPÍAS DE SHANNON
# ==============================

def _entropy_integrand(rho: np.ndarray) -> np.ndarray:
    # 0·log 0 → 0
    safe = np.maximum(rho, ENTROPY_FLOOR)
    return np.where(rho > ENTROPY_FLOOR, -rho * np.log(safe), 0.0)


def shannon_entropies(spec: PotentialSpec, config: QuadratureConfig = DEFAULT_QUADRATURE) -> Tuple[float, float, float]:
    """
    (S_x, S_p, S_x + S_p), con S_x + S_p ≥ 1 + log π

    En posición log ρ = -2V₀ - log N₀ se evalúa de forma exacta. En momentos
    la integral se parte en los mínimos de ρ(p).
    """
    lo, hi = _window(spec, config)
    log_norm = math.log(normalization_constant(spec).value)

    def sx_integrand(x):
        log_rho = -2.0 * np.asarray(prepotential(spec, x)) - log_norm
        return -np.exp(log_rho) * log_rho

    s_x = float(tanh_sinh(sx_integrand, lo, hi, config))
    top = momentum_window(spec)
    edges = [0.0] + density_minima(spec, top) + [top]
    s_p = 2.0 * sum(float(tanh_sinh(lambda p: _entropy_integrand(momentum_density(spec, p)), a, b, config))
                    for a, b in zip(edges[:-1], edges[1:]) if b > a)
    logger.debug(f"Entropías {spec.label}: S_x = {s_x:.6f}, S_p = {s_p:.6f}")
    return s_x, s_p, s_x + s_p


# ==============================
# DESARROLLO ALREDEDOR DEL MÍNIMO
# ==============================

def _is_even(spec: PotentialSpec) -> bool:
    if spec.family is Family.SHO:
        return True
    if spec.family in (Family.XI_I, Family.XI_II):
        return spec.A == 0.5
    if spec.family is Family.RAMANUJAN:
        return spec.A == 6.0
    return False


def find_minimum(spec: PotentialSpec, n_scan: int = 2001) -> float:
    """
    Mínimo de V₀: cambio de signo de W (de - a +), bisección y pulido de Newton

    Raises:
        NoMinimumError: si W no cambia de signo en la ventana de integración
    """
    if _is_even(spec):
        return 0.0
    lo, hi = integration_window(spec)
    hi = min(hi, EVALUABLE_WINDOWS[spec.family][1])
    x = np.linspace(lo, hi, n_scan)
    w = np.asarray(superpotential(spec, x))
    crossings = np.nonzero((w[:-1] < 0.0) & (w[1:] >= 0.0))[0]
    if crossings.size == 0:
        raise NoMinimumError(f"W no cambia de signo en [{lo}, {hi}] para {spec.label}")
    j = int(crossings[0])
    x_min = brentq(lambda t: float(superpotential(spec, t)), x[j], x[j + 1], xtol=1e-15)
    for _ in range(3):
        slope = float(superpotential_derivative(spec, x_min))
        if slope <= 0.0:
            break
        x_min -= float(superpotential(spec, x_min)) / slope
    return float(x_min)


def _taylor_on_window(spec: PotentialSpec, x_min: float, radius: float, degree: int) -> np.ndarray:
    series = Chebyshev.interpolate(lambda t: np.asarray(prepotential(spec, x_min + t)), degree,
                                   domain=[-radius, radius])
    return series.convert(kind=Polynomial, domain=[-radius, radius], window=[-radius, radius]).coef


def expand_about_minimum(spec: PotentialSpec, order: int = 8, radius: float = 0.3,
                         degree: int = 20) -> Tuple[float, np.ndarray]:
    """
    (x_min, c) con V₀(x_min + t) ≈ Σ c_k t^k

    Interpolación de Chebyshev en [-r, r] convertida a potencias; se valida
    contra la misma construcción en [-r/2, r/2] (las diferencias escaladas por
    r^k deben ser despreciables). En los casos simétricos los términos impares
    se anulan.

    Raises:
        DomainError: si order no está en [0, 12]
        NoMinimumError: si no hay mínimo
        ConvergenceError: si las dos ventanas no concuerdan
    """
    if not 0 <= order <= 12:
        raise DomainError("order debe estar en [0, 12]")
    x_min = find_minimum(spec)
    coarse = _taylor_on_window(spec, x_min, radius, degree)[: order + 1]
    fine = _taylor_on_window(spec, x_min, 0.5 * radius, degree)[: order + 1]
    k = np.arange(order + 1)
    gap = float(np.max(np.abs(coarse - fine) * (0.5 * radius) ** k))
    if gap > 1e-6 * max(1.0, abs(coarse[0])):
        raise ConvergenceError(f"Desarrollo de {spec.label} inestable (discrepancia {gap:.2e})")
    coefficients = np.zeros(order + 1)
    coefficients[: coarse.size] = coarse
    if _is_even(spec):
        coefficients[1::2] = 0.0
    return x_min, coefficients


def quadratic_comparison_spectrum(omega: float, k: int, verify: bool = True) -> np.ndarray:
    """
    {0, ω, 2ω, ...} del potencial 0.25ω²x² - 0.5ω

    Con verify se resuelve el oscilador en malla y se exige acuerdo a 1e-4.
    """
    if k < 1:
        raise DomainError("k debe ser ≥ 1")
    if omega <= 0.0:
        raise DomainError("ω debe ser positiva")
    analytic = omega * np.arange(k, dtype=np.float64)
    if verify:
        numeric = solve_spectrum(PotentialSpec(Family.SHO, omega), k=k).eigenvalues
        gap = float(np.max(np.abs(numeric - analytic)))
        if gap > 1e-4 * max(1.0, omega * (k - 1)):
            raise ConvergenceError(f"Oscilador ω = {omega}: malla y forma analítica difieren en {gap:.2e}")
    return analytic


# ==============================
# SERIES PARA FIGURAS Y RESÚMENES
# ==============================

PLOT_KINDS = ("potential", "prepotential", "ground", "momentum", "logmomentum")


def plot_series(spec: PotentialSpec, what: str, x_range: Optional[Tuple[float, float]] = None,
                n: int = 1001) -> Tuple[np.ndarray, np.ndarray]:
    """
    Pares (abscisa, valor) para las figuras

    potential: V₋(x); prepotential: V₀(x); ground: |ψ₀(x)|; momentum: |ψ̃₀(p)|;
    logmomentum: log|ψ̃₀(p)| con piso en 1e-300.

    Raises:
        WindowError: si el rango sale de la región evaluable
    """
    if what not in PLOT_KINDS:
        raise DomainError(f"Serie desconocida: {what}")
    if n < 2:
        raise DomainError("n debe ser ≥ 2")
    in_momentum = what in ("momentum", "logmomentum")
    if x_range is None:
        x_range = (0.0, 30.0) if in_momentum else integration_window(spec)
    lo, hi = x_range
    if not hi > lo:
        raise WindowError(f"Rango vacío: {x_range}")
    if in_momentum and max(abs(lo), abs(hi)) > MAX_MOMENTUM:
        raise WindowError(f"|p| ≤ {MAX_MOMENTUM} en series de momento")

    grid = np.linspace(lo, hi, n)
    if what == "potential":
        values = np.asarray(partner_potentials(spec, grid)[0])
    elif what == "prepotential":
        values = np.asarray(prepotential(spec, grid))
    elif what == "ground":
        values = np.exp(-np.asarray(prepotential(spec, grid))) / math.sqrt(normalization_constant(spec).value)
    else:
        magnitude = np.sqrt(momentum_density(spec, grid))
        values = magnitude if what == "momentum" else np.log(np.maximum(magnitude, ENTROPY_FLOOR))
    return grid, values


def ground_state_record(spec: PotentialSpec) -> Dict:
    """N₀, método y ψ̃₀(0) de una familia"""
    norm = normalization_constant(spec)
    try:
        at_zero = momentum_ground_state(spec, 0.0)
    except DomainError:
        at_zero = fourier_transform_numeric(spec, 0.0)
    return {
        "familia": spec.label,
        "N0": norm.value,
        "metodo": norm.method,
        "psi_p0_real": float(np.real(at_zero)),
        "psi_p0_imag": float(np.imag(at_zero)),
    }
