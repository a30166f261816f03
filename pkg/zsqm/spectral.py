"""
Espectros
Autovalores de H₋ = -d²/dx² + V₋ por diferencias finitas con extrapolación de
Richardson, fórmulas exactas de Morse, cuantización WKB/SWKB y verificación en
malla del álgebra de operadores escalera
"""

import math
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln

from zsqm import specfun
from zsqm.errors import ConvergenceError, DomainError, GridTooNarrowError
from zsqm.potentials import (
    Family,
    PotentialSpec,
    partner_potentials,
    prepotential,
    superpotential,
    superpotential_derivative,
)
from zsqm.quadrature import tanh_sinh

logger = logging.getLogger(__name__)

DEFAULT_N_POINTS = 4001
GROUND_TAIL_RATIO = 1e-8


# ==============================
# MALLAS
# ==============================

@dataclass(frozen=True)
class Grid:
    """Malla uniforme [x_min, x_max] con n_points puntos"""
    x_min: float
    x_max: float
    n_points: int = DEFAULT_N_POINTS

    def __post_init__(self):
        if self.n_points < 3:
            raise DomainError("La malla requiere al menos 3 puntos")
        if not self.x_max > self.x_min:
            raise DomainError(f"Malla vacía: [{self.x_min}, {self.x_max}]")

    @property
    def dx(self) -> float:
        return (self.x_max - self.x_min) / (self.n_points - 1)

    @property
    def points(self) -> np.ndarray:
        return np.linspace(self.x_min, self.x_max, self.n_points)

    def refined(self) -> "Grid":
        """Misma ventana con Δx/2"""
        return Grid(self.x_min, self.x_max, 2 * self.n_points - 1)

    def with_spacing(self, dx: float) -> "Grid":
        n = int(round((self.x_max - self.x_min) / dx)) + 1
        return Grid(self.x_min, self.x_max, n)

    def to_dict(self) -> Dict:
        return {"x_min": self.x_min, "x_max": self.x_max, "n_points": self.n_points}


@dataclass
class GridFunction:
    """Muestras reales o complejas sobre una malla"""
    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values)
        if self.values.shape != (self.grid.n_points,):
            raise DomainError("El número de muestras no coincide con la malla")

    def norm(self) -> float:
        return float(np.sqrt(np.sum(np.abs(self.values) ** 2) * self.grid.dx))

    @classmethod
    def sample(cls, grid: Grid, func: Callable[[np.ndarray], np.ndarray]) -> "GridFunction":
        return cls(grid, func(grid.points))


def default_grid(spec: PotentialSpec, n_points: int = DEFAULT_N_POINTS) -> Grid:
    """
    Ventana por defecto del eigensolver

    Morse, Riemann I/II: [-4, max(14, 20.7/A_eff + 2)] (la cola derecha decae
    como e^{-A_eff x}); Xi: [-2, 2]; Ramanujan: [-2.5, 2.5]; oscilador: ±(√(83/ω) + 1).
    """
    family = spec.family
    if family is Family.SHO:
        half = math.sqrt(83.0 / (spec.A + 4.0 * spec.quad_boost)) + 1.0
        return Grid(-half, half, n_points)
    if family in (Family.MORSE, Family.RIEMANN_I, Family.RIEMANN_II):
        a_eff = spec.A + (1.0 if family is Family.RIEMANN_II else 0.0)
        right = max(14.0, 20.7 / a_eff + 2.0) if a_eff > 0.0 else 14.0
        return Grid(-4.0, right, n_points)
    if family is Family.RAMANUJAN:
        return Grid(-2.5, 2.5, n_points)
    return Grid(-2.0, 2.0, n_points)


def continuum_threshold(spec: PotentialSpec) -> float:
    """lim V₋(x) cuando x → ∞; infinito para potenciales confinantes"""
    if spec.quad_boost:
        return math.inf
    if spec.family in (Family.MORSE, Family.RIEMANN_I):
        return spec.A ** 2
    if spec.family is Family.RIEMANN_II:
        return (spec.A + 1.0) ** 2
    return math.inf


def check_grid_width(spec: PotentialSpec, grid: Grid):
    """
    Verifica que ψ₀ caiga por debajo de 1e-8 de su máximo en ambos bordes

    Raises:
        GridTooNarrowError: si alguno de los extremos no cumple el criterio
    """
    log_psi = -np.asarray(prepotential(spec, grid.points))
    ratio = np.exp(log_psi[[0, -1]] - np.max(log_psi))
    if np.any(ratio >= GROUND_TAIL_RATIO):
        raise GridTooNarrowError(
            f"Malla demasiado estrecha para {spec.label}: ψ₀/máx en bordes = {ratio[0]:.2e}, {ratio[1]:.2e}"
        )


# ==============================
# EIGENSOLVER
# ==============================

@dataclass
class SpectrumResult:
    """Autovalores ascendentes con su estimación de error de Richardson"""
    eigenvalues: np.ndarray
    grid: Grid
    richardson_error: float
    bound: np.ndarray = None
    eigenvectors: Optional[List[GridFunction]] = None
    label: str = ""

    def __post_init__(self):
        self.eigenvalues = np.asarray(self.eigenvalues, dtype=np.float64)
        if self.bound is None:
            self.bound = np.ones(self.eigenvalues.size, dtype=bool)

    def to_record(self) -> Dict:
        return {
            "potencial": self.label,
            "malla": self.grid.to_dict(),
            "autovalores": [float(e) for e in self.eigenvalues],
            "ligado": [bool(b) for b in self.bound],
            "error": float(self.richardson_error),
        }


def _tridiagonal_levels(potential: np.ndarray, dx: float, k: int, vectors: bool):
    # Laplaciano de 3 puntos con Dirichlet en los extremos
    interior = potential[1:-1]
    diag = 2.0 / dx ** 2 + interior
    off = np.full(interior.size - 1, -1.0 / dx ** 2)
    if vectors:
        return eigh_tridiagonal(diag, off, select="i", select_range=(0, k - 1))
    return eigh_tridiagonal(diag, off, eigvals_only=True, select="i", select_range=(0, k - 1)), None


def solve_hamiltonian(potential: Callable[[np.ndarray], np.ndarray], grid: Grid, k: int,
                      tol: float = 1e-3, return_vectors: bool = False, workers: int = 1,
                      label: str = "") -> SpectrumResult:
    """
    k autovalores más bajos de -d²/dx² + V(x) en la malla dada

    Se resuelve en Δx y en Δx/2 y se extrapola E_R = (4E_{Δx/2} - E_{Δx})/3;
    richardson_error es la mayor corrección |E_R - E_{Δx/2}|.

    Args:
        potential: V(x) vectorizado
        grid: Malla gruesa
        k: Número de autovalores
        tol: Tolerancia solicitada; dos resoluciones que difieran más de 10·tol fallan
        return_vectors: Si se devuelven autovectores normalizados de la malla gruesa
        workers: Hilos para resolver ambas resoluciones en paralelo

    Raises:
        ConvergenceError: si las dos resoluciones no concuerdan
    """
    if k < 1:
        raise DomainError("k debe ser ≥ 1")
    if k > grid.n_points - 2:
        raise DomainError("k excede el número de puntos interiores de la malla")

    fine = grid.refined()
    jobs = [(grid, return_vectors), (fine, False)]

    def run(job):
        g, vectors = job
        return _tridiagonal_levels(np.asarray(potential(g.points), dtype=np.float64), g.dx, k, vectors)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=min(workers, 2)) as pool:
            (coarse_e, coarse_v), (fine_e, _) = list(pool.map(run, jobs))
    else:
        (coarse_e, coarse_v), (fine_e, _) = [run(job) for job in jobs]

    gap = np.abs(fine_e - coarse_e)
    limit = 10.0 * tol * np.maximum(1.0, np.abs(fine_e))
    if np.any(gap > limit):
        worst = int(np.argmax(gap / limit))
        raise ConvergenceError(
            f"Refinamientos discrepan en el nivel {worst}: {coarse_e[worst]:.8g} vs {fine_e[worst]:.8g}"
        )

    extrapolated = (4.0 * fine_e - coarse_e) / 3.0
    error = float(np.max(np.abs(extrapolated - fine_e)))

    eigenvectors = None
    if return_vectors:
        eigenvectors = []
        for j in range(k):
            values = np.zeros(grid.n_points)
            values[1:-1] = coarse_v[:, j]
            values /= math.sqrt(np.sum(values ** 2) * grid.dx)
            # signo fijado por el valor de mayor magnitud
            if values[np.argmax(np.abs(values))] < 0.0:
                values = -values
            eigenvectors.append(GridFunction(grid, values))

    return SpectrumResult(extrapolated, grid, error, eigenvectors=eigenvectors, label=label)


def solve_spectrum(spec: PotentialSpec, grid: Optional[Grid] = None, k: int = 5,
                   tol: float = 1e-3, return_vectors: bool = False, workers: int = 1) -> SpectrumResult:
    """
    k niveles más bajos del compañero H₋ de la familia

    Raises:
        GridTooNarrowError: si ψ₀ no decae en los bordes de la malla
        ConvergenceError: si los refinamientos no concuerdan
    """
    grid = grid or default_grid(spec)
    check_grid_width(spec, grid)

    def v_minus(x):
        return partner_potentials(spec, x)[0]

    result = solve_hamiltonian(v_minus, grid, k, tol, return_vectors, workers, label=spec.label)
    result.bound = result.eigenvalues < continuum_threshold(spec)
    logger.info(f"✓ Espectro {spec.label}: {np.array2string(result.eigenvalues, precision=6)}")
    return result


# ==============================
# MORSE EXACTO
# ==============================

def morse_exact_energy(A: float, n: int) -> float:
    """E_n = A² - (A - n)² = 2An - n², para 0 ≤ n ≤ ⌊A⌋"""
    if n < 0 or n > math.floor(A):
        raise DomainError(f"n = {n} fuera de rango para A = {A}")
    return A ** 2 - (A - n) ** 2


def morse_excited_state(n: int, A: float, x):
    """
    ψₙ(x) = e^{-x(A-n)} e^{-e^{-x}} L_n^{(2A-2n)}(2e^{-x}), sin normalizar

    En y = e^{-x}: ψ₁ ∝ y^{A-1} e^{-y} (2A - 1 - 2y).
    """
    if n < 0 or n >= A:
        raise DomainError(f"Estado excitado n = {n} requiere 0 ≤ n < A = {A}")
    x = np.asarray(x, dtype=np.float64)
    y = np.exp(-x)
    value = np.exp(-x * (A - n) - y) * specfun.laguerre(n, 2.0 * A - 2.0 * n, 2.0 * y)
    return float(value) if value.ndim == 0 else value


def morse_eigen_residual(n: int, A: float, grid: Optional[Grid] = None) -> float:
    """‖H₋ψₙ - Eₙψₙ‖/‖ψₙ‖ con derivadas de cuarto orden"""
    spec = PotentialSpec(Family.MORSE, A)
    grid = grid or default_grid(spec, 18001)
    x = grid.points
    psi = morse_excited_state(n, A, x)
    v_minus = partner_potentials(spec, x)[0]
    h_psi = -second_derivative(psi, grid.dx) + v_minus * psi
    residual = (h_psi - morse_exact_energy(A, n) * psi)[_INNER]
    return float(np.linalg.norm(residual) / np.linalg.norm(psi[_INNER]))


# ==============================
# WKB Y SWKB
# ==============================

def _check_energy(A: float, E: float):
    if not (0.0 < E < A ** 2):
        raise DomainError(f"E = {E} fuera de (0, A²) = (0, {A ** 2})")


def swkb_quantization(A: float, E: float) -> float:
    """
    n = (1/π) ∫ √(E - W²) dy/y entre y = A ∓ √E

    Con y = A + √E sin θ el integrando queda E cos²θ/(A + √E sin θ), sin
    singularidades en los puntos de retorno.
    """
    _check_energy(A, E)
    root = math.sqrt(E)

    def integrand(theta):
        return E * np.cos(theta) ** 2 / (A + root * np.sin(theta))

    return float(tanh_sinh(integrand, -0.5 * math.pi, 0.5 * math.pi)) / math.pi


def wkb_quantization(A: float, E: float) -> float:
    """
    (1/π) ∫ √(E - V₋) dy/y, que corresponde a n + 1/2

    Puntos de retorno y = c ∓ ρ con c = A + 1/2 y ρ = √(E + A + 1/4).
    """
    _check_energy(A, E)
    c = A + 0.5
    rho = math.sqrt(E + A + 0.25)

    def integrand(theta):
        return rho ** 2 * np.cos(theta) ** 2 / (c + rho * np.sin(theta))

    return float(tanh_sinh(integrand, -0.5 * math.pi, 0.5 * math.pi)) / math.pi


# ==============================
# OPERADORES EN MALLA
# ==============================

# Puntos excluidos en cada extremo al medir residuos (estenciles anidados)
_MARGIN = 4
_INNER = slice(_MARGIN, -_MARGIN)


def first_derivative(values: np.ndarray, dx: float) -> np.ndarray:
    """Diferencia central de cuarto orden; segundo orden en los dos puntos de cada borde"""
    out = np.gradient(values, dx, edge_order=2)
    out[2:-2] = (-values[4:] + 8.0 * values[3:-1] - 8.0 * values[1:-3] + values[:-4]) / (12.0 * dx)
    return out


def second_derivative(values: np.ndarray, dx: float) -> np.ndarray:
    out = np.zeros_like(values)
    out[1:-1] = (values[2:] - 2.0 * values[1:-1] + values[:-2]) / dx ** 2
    out[2:-2] = (-values[4:] + 16.0 * values[3:-1] - 30.0 * values[2:-2]
                 + 16.0 * values[1:-3] - values[:-4]) / (12.0 * dx ** 2)
    return out


def apply_annihilation(spec: PotentialSpec, psi: GridFunction) -> GridFunction:
    """a ψ = ψ' + W ψ"""
    w = superpotential(spec, psi.grid.points)
    return GridFunction(psi.grid, first_derivative(psi.values, psi.grid.dx) + w * psi.values)


def apply_creation(spec: PotentialSpec, psi: GridFunction) -> GridFunction:
    """a† ψ = -ψ' + W ψ"""
    w = superpotential(spec, psi.grid.points)
    return GridFunction(psi.grid, -first_derivative(psi.values, psi.grid.dx) + w * psi.values)


def annihilation_ratio(spec: PotentialSpec, psi: GridFunction) -> float:
    """‖aψ‖/‖ψ‖ sobre puntos interiores"""
    a_psi = apply_annihilation(spec, psi).values[_INNER]
    return float(np.linalg.norm(a_psi) / np.linalg.norm(psi.values[_INNER]))


def factorization_residual(spec: PotentialSpec, psi: GridFunction) -> float:
    """max |a†aψ - (-ψ'' + V₋ψ)| sobre puntos interiores"""
    factored = apply_creation(spec, apply_annihilation(spec, psi)).values
    v_minus = partner_potentials(spec, psi.grid.points)[0]
    direct = -second_derivative(psi.values, psi.grid.dx) + v_minus * psi.values
    return float(np.max(np.abs(factored - direct)[_INNER]))


def ladder_commutator(spec_a: PotentialSpec, spec_b: PotentialSpec, psi: GridFunction) -> GridFunction:
    """[a(A), a†(B)] ψ aplicado numéricamente"""
    ab = apply_annihilation(spec_a, apply_creation(spec_b, psi)).values
    ba = apply_creation(spec_b, apply_annihilation(spec_a, psi)).values
    return GridFunction(psi.grid, ab - ba)


def commutator_deviation(spec_a: PotentialSpec, spec_b: PotentialSpec, psi: GridFunction) -> float:
    """
    max |[a(A), a†(B)]ψ - (W_A' + W_B')ψ| sobre puntos interiores

    Oscilador: W' = ω/2, así que el conmutador es (ω₁ + ω₂)/2. Morse: W' = e^{-x}
    y el conmutador es 2e^{-x}.
    """
    x = psi.grid.points
    expected = (superpotential_derivative(spec_a, x) + superpotential_derivative(spec_b, x)) * psi.values
    numeric = ladder_commutator(spec_a, spec_b, psi).values
    return float(np.max(np.abs(numeric - expected)[_INNER]))


def morse_commutator_identity_residual(A: float, B: float, psi: GridFunction) -> float:
    """max |[a(A), a†(B)]ψ - ((A + B) - a(A) - a†(B))ψ| para Morse"""
    spec_a = PotentialSpec(Family.MORSE, A)
    spec_b = PotentialSpec(Family.MORSE, B)
    lhs = ladder_commutator(spec_a, spec_b, psi).values
    rhs = ((A + B) * psi.values - apply_annihilation(spec_a, psi).values
           - apply_creation(spec_b, psi).values)
    return float(np.max(np.abs(lhs - rhs)[_INNER]))


# ==============================
# BASE COMPLETA
# ==============================

def complete_basis_function(n: int, sigma: float, y, scale: Optional[float] = None):
    """
    φₙ(y) = c·y^σ e^{-y/2} L_n^{(2σ-1)}(y), ortogonales con la medida dx = dy/y

    Sin scale, c = √(n!/Γ(n + 2σ)) (ortonormal). Con scale = α, c es el
    prefactor √(α n!/Γ(2σ + 1)) de la literatura, que sólo normaliza n = 0 con α = 2σ.
    """
    if sigma <= 0.0:
        raise DomainError(f"σ debe ser > 0 (recibido {sigma})")
    y = np.asarray(y, dtype=np.float64)
    if np.any(y <= 0.0):
        raise DomainError("y debe ser > 0")
    if scale is None:
        log_c = 0.5 * (gammaln(n + 1.0) - gammaln(n + 2.0 * sigma))
    else:
        log_c = 0.5 * (math.log(scale) + gammaln(n + 1.0) - gammaln(2.0 * sigma + 1.0))
    value = np.exp(log_c + sigma * np.log(y) - 0.5 * y) * specfun.laguerre(n, 2.0 * sigma - 1.0, y)
    return float(value) if value.ndim == 0 else value


def complete_basis_overlap(n: int, m: int, sigma: float, scale: Optional[float] = None) -> float:
    """∫ φₙ φₘ dx = ∫ φₙ(y) φₘ(y) dy/y, por cuadratura en x = -log y"""
    def integrand(x):
        y = np.exp(-x)
        return complete_basis_function(n, sigma, y, scale) * complete_basis_function(m, sigma, y, scale)

    right = 2.0 + (60.0 + 2.0 * (n + m)) / (2.0 * sigma)
    return float(tanh_sinh(integrand, -math.log(200.0 + 8.0 * (n + m)), right))
