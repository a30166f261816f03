"""
Polinomios Ortogonales
Momentos, recurrencias de tres términos por Gram-Schmidt, matrices de Jacobi,
funciones de partición de modelos de una y dos matrices, polinomios
biortogonales y verificaciones asintóticas

Convención: polinomios mónicos R_k(y) = (y - B_k) R_{k-1} - C_k R_{k-2}.
"""

import math
import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence, Tuple

import mpmath
import numpy as np
from numpy.polynomial import polynomial as P
from scipy.special import gammaln

from zsqm import specfun
from zsqm.errors import ConditioningError, DomainError
from zsqm.quadrature import gauss_legendre

logger = logging.getLogger(__name__)

# Dígitos de trabajo para momentos y Gram-Schmidt
_WORK_DPS = 40
_PIVOT_FLOOR = 1e-10

# Anchura de la parte cuadrática del prepotencial Xi en su mínimo
XI_QUADRATIC_COEFFICIENT = 9.36345


# ==============================
# TIPOS
# ==============================

@dataclass(frozen=True)
class PolynomialCoeffs:
    """Coeficientes ascendentes de un polinomio mónico"""
    coefficients: Tuple[float, ...]

    def __post_init__(self):
        coeffs = tuple(float(c) for c in self.coefficients)
        if not coeffs or abs(coeffs[-1] - 1.0) > 1e-12:
            raise DomainError("El polinomio debe ser mónico")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        return P.polyval(np.asarray(x, dtype=np.float64), self.coefficients)

    def roots(self) -> np.ndarray:
        return np.sort(np.real(P.polyroots(self.coefficients)))

    def to_list(self) -> List[float]:
        return list(self.coefficients)


@dataclass(frozen=True)
class RecurrenceCoefficients:
    """
    Datos de recurrencia {α_k, β_k} y normas h_k

    alphas[k] = B_{k+1} (diagonal de Jacobi), betas[k] = C_{k+1} para k ≥ 1
    (betas[0] = h_0 por convención), norms[k] = h_k.
    """
    alphas: np.ndarray
    betas: np.ndarray
    norms: np.ndarray = None
    label: str = ""

    def __post_init__(self):
        object.__setattr__(self, "alphas", np.asarray(self.alphas, dtype=np.float64))
        object.__setattr__(self, "betas", np.asarray(self.betas, dtype=np.float64))
        if self.norms is not None:
            norms = np.asarray(self.norms, dtype=np.float64)
            if np.any(norms <= 0.0):
                raise DomainError("Todas las normas h_k deben ser positivas")
            object.__setattr__(self, "norms", norms)
        if np.any(self.betas[1:] <= 0.0):
            raise DomainError("Los coeficientes C_k deben ser positivos")

    def __hash__(self):
        return hash((self.label, self.alphas.tobytes(), self.betas.tobytes()))

    @property
    def size(self) -> int:
        return self.alphas.size

    def B(self, k: int) -> float:
        return float(self.alphas[k - 1])

    def C(self, k: int) -> float:
        return float(self.betas[k - 1])

    def polynomials(self, k_max: Optional[int] = None) -> List[PolynomialCoeffs]:
        """R_0..R_{k_max} generados por la recurrencia"""
        k_max = self.size if k_max is None else k_max
        polys = [np.array([1.0])]
        prev = np.array([0.0])
        for k in range(k_max):
            nxt = P.polysub(P.polymulx(polys[-1]), self.alphas[k] * polys[-1])
            if k > 0:
                nxt = P.polysub(nxt, self.betas[k] * prev)
            prev = polys[-1]
            polys.append(nxt)
        return [PolynomialCoeffs(tuple(p)) for p in polys]


@dataclass(frozen=True)
class MomentTable:
    """μ[m][n] = ∫ w y^{m+n}, simétrica y de Hankel"""
    moments: Tuple[Tuple[float, ...], ...]
    weight: str = ""

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.moments, dtype=np.float64)

    def is_positive(self) -> bool:
        try:
            np.linalg.cholesky(self.matrix)
        except np.linalg.LinAlgError:
            return False
        return True


@dataclass(frozen=True)
class Weight:
    """
    Peso de ortogonalidad en (a, b)

    moment(k) devuelve ∫ w y^k en precisión extendida (mpmath); density(y)
    evalúa w en doble precisión para cuadraturas de verificación.
    """
    label: str
    moment: Callable[[int], mpmath.mpf] = field(compare=False)
    density: Callable[[np.ndarray], np.ndarray] = field(compare=False)
    support: Tuple[float, float] = (0.0, math.inf)


# ==============================
# PESOS Y MOMENTOS
# ==============================

def _riemann_moment_mp(s) -> mpmath.mpf:
    # (1 - 2^{1-s}) Γ(s) ζ(s) = Γ(s) η(s)
    return mpmath.gamma(s) * mpmath.altzeta(s)


def moment_riemann_weight(m: int, n: int, alpha: float) -> float:
    """
    μ_{m,n} = (1 - 2^{-m-n-α}) Γ(1+m+n+α) ζ(1+m+n+α) = ∫_0^∞ y^{m+n} y^α/(e^y + 1) dy

    Raises:
        DomainError: si α ≤ -1
    """
    if alpha <= -1.0:
        raise DomainError(f"El peso de Riemann requiere α > -1 (recibido {alpha})")
    if m < 0 or n < 0:
        raise DomainError("m y n deben ser ≥ 0")
    with mpmath.workdps(_WORK_DPS):
        return float(_riemann_moment_mp(mpmath.mpf(1 + m + n) + mpmath.mpf(alpha)))


def riemann_weight(alpha: float) -> Weight:
    """w(y) = y^α/(e^y + 1) en (0, ∞)"""
    if alpha <= -1.0:
        raise DomainError(f"El peso de Riemann requiere α > -1 (recibido {alpha})")
    a = mpmath.mpf(alpha)

    def density(y):
        y = np.asarray(y, dtype=np.float64)
        return y ** alpha * np.exp(-y) / (1.0 + np.exp(-y))

    return Weight(f"riemann:{alpha:g}", lambda k: _riemann_moment_mp(k + 1 + a), density)


def matrix_integral_weight() -> Weight:
    """
    w(y) = e^{-y}/(1 + e^{-y/2})² en (0, ∞)

    Desarrollando 1/(1+u)² con u = e^{-y/2}: μ_k = k! 2^{k+1} (η(k+1) - η(k)).
    """
    def moment(k):
        return mpmath.factorial(k) * mpmath.mpf(2) ** (k + 1) * (mpmath.altzeta(k + 1) - mpmath.altzeta(k))

    def density(y):
        y = np.asarray(y, dtype=np.float64)
        return np.exp(-y) / (1.0 + np.exp(-0.5 * y)) ** 2

    return Weight("matrix", moment, density)


def generic_weight(density: Callable, a: float, b: float, label: str = "generic") -> Weight:
    """Peso arbitrario; los momentos se integran con mpmath.quad"""
    def moment(k):
        return mpmath.quad(lambda y: y ** k * density(float(y)), [a, b])

    return Weight(label, moment, density, (a, b))


def moment_table(weight: Weight, size: int) -> MomentTable:
    with mpmath.workdps(_WORK_DPS):
        mu = [weight.moment(k) for k in range(2 * size - 1)]
        rows = tuple(tuple(float(mu[i + j]) for j in range(size)) for i in range(size))
    return MomentTable(rows, weight.label)


# ==============================
# GRAM-SCHMIDT
# ==============================

def _inner(p: List, q: List, mu: List):
    return mpmath.fsum(p[i] * q[j] * mu[i + j] for i in range(len(p)) for j in range(len(q)))


def gram_schmidt_recurrence(weight: Weight, k_max: int) -> Tuple[RecurrenceCoefficients, List[PolynomialCoeffs]]:
    """
    Recurrencia mónica R_0..R_{k_max} para el peso dado

    Los momentos y los productos internos se acumulan con 40 dígitos; B_k y
    C_k salen de las fórmulas de cociente B_k = ⟨yR_{k-1}, R_{k-1}⟩/h_{k-1},
    C_k = h_{k-1}/h_{k-2}. Las normas h_k son los pivotes de Cholesky de la
    matriz de Hankel de momentos.

    Raises:
        ConditioningError: si un pivote cae por debajo de 1e-10 del primero
    """
    if k_max < 1:
        raise DomainError("k_max debe ser ≥ 1")
    with mpmath.workdps(_WORK_DPS):
        mu = [weight.moment(k) for k in range(2 * k_max + 2)]
        polys = [[mpmath.mpf(1)]]
        norms = [mu[0]]
        alphas, betas = [], [mu[0]]
        for k in range(1, k_max + 1):
            prev = polys[-1]
            y_prev = [mpmath.mpf(0)] + prev
            b_k = _inner(y_prev, prev, mu) / norms[-1]
            nxt = [c - b_k * p for c, p in zip(y_prev, prev + [mpmath.mpf(0)])]
            if k >= 2:
                c_k = norms[-1] / norms[-2]
                older = polys[-2] + [mpmath.mpf(0)] * 2
                nxt = [c - c_k * o for c, o in zip(nxt, older)]
                betas.append(c_k)
            alphas.append(b_k)
            h_k = _inner(nxt, nxt, mu)
            if h_k < _PIVOT_FLOOR * norms[0]:
                raise ConditioningError(f"Pivote de Hankel h_{k} = {float(h_k):.3e} demasiado pequeño")
            polys.append(nxt)
            norms.append(h_k)

        rec = RecurrenceCoefficients(
            np.array([float(a) for a in alphas]),
            np.array([float(b) for b in betas[:k_max]]),
            np.array([float(h) for h in norms]),
            weight.label,
        )
        coeffs = [PolynomialCoeffs(tuple(float(c) for c in p)) for p in polys]

    logger.debug(f"Gram-Schmidt {weight.label}: B = {rec.alphas}, h = {rec.norms}")
    return rec, coeffs


def orthogonality_defect(weight: Weight, polys: Sequence[PolynomialCoeffs]) -> float:
    """max_{m≠n} |⟨R_m, R_n⟩|/√(h_m h_n), con los momentos exactos del peso"""
    degree = max(p.degree for p in polys)
    with mpmath.workdps(_WORK_DPS):
        mu = [weight.moment(k) for k in range(2 * degree + 1)]
        gram = [[_inner([mpmath.mpf(c) for c in p.coefficients], [mpmath.mpf(c) for c in q.coefficients], mu)
                 for q in polys] for p in polys]
    worst = 0.0
    for m in range(len(polys)):
        for n in range(len(polys)):
            if m != n:
                worst = max(worst, float(abs(gram[m][n]) / mpmath.sqrt(gram[m][m] * gram[n][n])))
    return worst


def orthonormal_functions(rec: RecurrenceCoefficients, weight: Weight, n: int, y) -> np.ndarray:
    """φ_n(y) = R_n(y) √(w(y)/h_n)"""
    poly = rec.polynomials(n)[n]
    y = np.asarray(y, dtype=np.float64)
    return poly(y) * np.sqrt(weight.density(y) / rec.norms[n])


# ==============================
# FAMILIAS CLÁSICAS Y MATRIZ DE JACOBI
# ==============================

def hermite_recurrence(size: int) -> RecurrenceCoefficients:
    """He_n: α_n = 0, β_n = n, h_n = √(2π) n!"""
    k = np.arange(size)
    norms = np.sqrt(2.0 * math.pi) * np.exp(gammaln(np.arange(size + 1) + 1.0))
    return RecurrenceCoefficients(np.zeros(size), np.where(k == 0, norms[0], k), norms, "hermite")


def laguerre_recurrence(alpha: float, size: int) -> RecurrenceCoefficients:
    """Laguerre mónicos: α_n = 2n + 1 + α, β_n = n(n + α), h_n = n! Γ(n + α + 1)"""
    if alpha <= -1.0:
        raise DomainError("Laguerre requiere α > -1")
    k = np.arange(size)
    norms = np.exp(gammaln(np.arange(size + 1) + 1.0) + gammaln(np.arange(size + 1) + alpha + 1.0))
    betas = np.where(k == 0, norms[0], k * (k + alpha))
    return RecurrenceCoefficients(2.0 * k + 1.0 + alpha, betas, norms, f"laguerre:{alpha:g}")


def jacobi_matrix(rec: RecurrenceCoefficients, n: int) -> np.ndarray:
    """
    J_n simétrica tridiagonal n×n: diagonal α_0..α_{n-1}, fuera √β_1..√β_{n-1}

    det(xI - J_n) = R_n(x).
    """
    if n < 1 or n > rec.size:
        raise DomainError(f"Tamaño {n} fuera de rango (disponibles {rec.size})")
    off = np.sqrt(rec.betas[1:n])
    return np.diag(rec.alphas[:n]) + np.diag(off, 1) + np.diag(off, -1)


def characteristic_polynomial(rec: RecurrenceCoefficients, n: int, x) -> np.ndarray:
    """det(xI - J_n) evaluado por LU en cada x"""
    J = jacobi_matrix(rec, n)
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    return np.array([np.linalg.det(xi * np.eye(n) - J) for xi in x])


def char_poly_check(rec: RecurrenceCoefficients, n: int, polys: Optional[Sequence[PolynomialCoeffs]] = None,
                    samples: int = 17) -> float:
    """
    max |det(xI - J_n) - R_n(x)| / max(1, max|R_n|) sobre puntos que cubren las raíces

    Sin polys se usan los R_n generados por la propia recurrencia.
    """
    poly = (polys or rec.polynomials(n))[n]
    roots = polynomial_roots(rec, n)
    span = max(1.0, roots[-1] - roots[0])
    x = np.linspace(roots[0] - 0.25 * span, roots[-1] + 0.25 * span, samples)
    exact = poly(x)
    return float(np.max(np.abs(characteristic_polynomial(rec, n, x) - exact)) / max(1.0, np.max(np.abs(exact))))


def polynomial_roots(rec: RecurrenceCoefficients, n: int) -> np.ndarray:
    """Raíces de R_n como autovalores de J_n (siempre reales)"""
    return np.linalg.eigvalsh(jacobi_matrix(rec, n))


def roots_interlace(rec: RecurrenceCoefficients, n: int) -> bool:
    """Las raíces de R_n separan estrictamente a las de R_{n+1}"""
    inner = polynomial_roots(rec, n)
    outer = polynomial_roots(rec, n + 1)
    return bool(np.all(outer[:-1] < inner) and np.all(inner < outer[1:]))


# ==============================
# FUNCIONES DE PARTICIÓN
# ==============================

def partition_from_norms(norms: Sequence[float], n: int) -> float:
    """Z_n = h_0 h_1 ⋯ h_{n-1}"""
    if n < 1 or n > len(norms):
        raise DomainError(f"n = {n} fuera de rango para {len(norms)} normas")
    return float(np.prod(np.asarray(norms[:n], dtype=np.float64)))


def partition_gaussian(n: int, N: int) -> float:
    """Z_n = (2π)^{n/2} G(n+1) / N^{n²/2}"""
    if n < 1 or N < 1:
        raise DomainError("n y N deben ser ≥ 1")
    return (2.0 * math.pi) ** (n / 2.0) * specfun.barnes_g(n + 1) / N ** (n * n / 2.0)


def gaussian_norms(n: int, N: int) -> np.ndarray:
    """h_k = √(2π) k! / N^{k + 1/2} para e^{-N z²/2}"""
    k = np.arange(n)
    return np.sqrt(2.0 * math.pi) * np.exp(gammaln(k + 1.0)) / N ** (k + 0.5)


def penner_norms(n: int, alpha: float) -> np.ndarray:
    """h_k = α^{-2k-α-1} k! Γ(k + α + 1) para el peso y^α e^{-αy}"""
    k = np.arange(n)
    return np.exp((-2.0 * k - alpha - 1.0) * math.log(alpha) + gammaln(k + 1.0) + gammaln(k + alpha + 1.0))


def partition_penner(n: int, N: int, gamma: float, method: str = "product") -> float:
    """
    Z_n del modelo de Penner con α = -N/γ

    product: ∏_{k<n} h_k. barnes: α^{-n(n+α)} G(n+1) G(n+α+1)/G(α+1), sólo
    para α entero (con γ = -1 es la forma en N).

    Raises:
        DomainError: si α ≤ 0, o α no es entero con method='barnes'
    """
    if n < 1 or N < 1:
        raise DomainError("n y N deben ser ≥ 1")
    alpha = -N / gamma
    if alpha <= 0.0:
        raise DomainError(f"Penner requiere α = -N/γ > 0 (α = {alpha})")
    if method == "product":
        return partition_from_norms(penner_norms(n, alpha), n)
    if method == "barnes":
        if alpha != int(alpha):
            raise DomainError("La forma con G de Barnes requiere α entero")
        a = int(alpha)
        return (alpha ** (-n * (n + alpha)) * specfun.barnes_g(n + 1)
                * specfun.barnes_g(n + a + 1) / specfun.barnes_g(a + 1))
    raise DomainError(f"Método desconocido: {method}")


# ==============================
# POLINOMIOS BIORTOGONALES
# ==============================

def _appell_polynomials(scaled_taylor: np.ndarray, n_max: int) -> List[PolynomialCoeffs]:
    """
    R_n(t) = Σ_k C(n,k) a_k t^{n-k} con a_k = k! [x^k] e^{-Ṽ(x)}

    Σ_n R_n(t) xⁿ/n! = e^{xt - Ṽ(x)}: el emparejamiento ∫∫ e^{-Ṽ(a) - ab} aᵐ R_n(b)
    se anula para m < n.
    """
    series = np.zeros(n_max + 1)
    series[: min(len(scaled_taylor), n_max + 1)] = scaled_taylor[: n_max + 1]
    # exp de una serie formal: E' = -Ṽ' E
    exp_series = np.zeros(n_max + 1)
    exp_series[0] = 1.0
    deriv = np.arange(n_max + 1) * series
    for k in range(1, n_max + 1):
        exp_series[k] = -sum(deriv[j] * exp_series[k - j] for j in range(1, k + 1)) / k
    a = exp_series * np.exp(gammaln(np.arange(n_max + 1) + 1.0))

    polys = []
    for n in range(n_max + 1):
        coeffs = np.zeros(n + 1)
        for k in range(n + 1):
            coeffs[n - k] = math.comb(n, k) * a[k]
        polys.append(PolynomialCoeffs(tuple(coeffs)))
    return polys


def two_matrix_biorthogonal(prepotential: str, n_max: int = 9, A: float = 0.5) -> List[PolynomialCoeffs]:
    """
    R_0..R_{n_max} biortogonales a Q_m(a) = aᵐ bajo e^{-V₀(a) - ab}

    gaussian: Ṽ(x) = x². xi_scaled: prepotencial Xi I centrado en su mínimo y
    reescalado por 1/√9.36345 para que el término cuadrático valga 1.
    """
    if not 0 <= n_max <= 12:
        raise DomainError("n_max debe estar en [0, 12]")
    if prepotential == "gaussian":
        taylor = np.zeros(n_max + 1)
        if n_max >= 2:
            taylor[2] = 1.0
        return _appell_polynomials(taylor, n_max)
    if prepotential == "xi_scaled":
        from zsqm.analysis import expand_about_minimum
        from zsqm.potentials import Family, PotentialSpec

        _, coeffs = expand_about_minimum(PotentialSpec(Family.XI_I, A), order=max(n_max, 2))
        k = np.arange(len(coeffs))
        scaled = np.asarray(coeffs) / XI_QUADRATIC_COEFFICIENT ** (k / 2.0)
        scaled[0] = 0.0
        return _appell_polynomials(scaled, n_max)
    raise DomainError(f"Prepotencial desconocido para el modelo de dos matrices: {prepotential}")


def gaussian_dual_defect(polys: Sequence[PolynomialCoeffs], panels: int = 200) -> float:
    """
    max_{n≥1} |∫ e^{-b²/4} R_n(b) db| / ∫ e^{-b²/4} |R_n(b)| db

    e^{-b²/4} es el peso dual de Ṽ = x²: ∫ e^{xb} e^{-b²/4} db ∝ e^{x²}.
    """
    worst = 0.0
    for poly in polys[1:]:
        def f(b, poly=poly):
            return np.exp(-0.25 * b ** 2) * poly(b)
        signed = gauss_legendre(f, -40.0, 40.0, panels)
        scale = gauss_legendre(lambda b: np.abs(f(b)), -40.0, 40.0, panels)
        worst = max(worst, abs(signed) / scale)
    return float(worst)


# ==============================
# ASINTÓTICA
# ==============================

def _log_abs_hermite(n: int, x: float) -> float:
    """log|He_n(x)| con reescalado para evitar desbordamiento"""
    prev, cur, log_scale = 0.0, 1.0, 0.0
    for k in range(n):
        prev, cur = cur, x * cur - k * prev
        magnitude = abs(cur)
        if magnitude > 1e100:
            prev /= magnitude
            cur /= magnitude
            log_scale += math.log(magnitude)
    return log_scale + math.log(abs(cur))


def hermite_airy_check(n: int, u: float) -> float:
    """
    |He_n(2√n + n^{-1/6}u) / asintótica - 1|

    Asintótica de punto de silla: n! n^{-n/2-1/3} e^{3n/2 + n^{1/3}u} Ai(u),
    con ∫ exp(iut + it³/3) dt = 2π Ai(u).
    """
    if n < 1:
        raise DomainError("n debe ser ≥ 1")
    ai = specfun.airy_ai(u)
    if ai <= 0.0:
        raise DomainError(f"Ai(u) no es positiva en u = {u}")
    x = 2.0 * math.sqrt(n) + n ** (-1.0 / 6.0) * u
    log_exact = _log_abs_hermite(n, x)
    log_asym = math.lgamma(n + 1.0) - (0.5 * n + 1.0 / 3.0) * math.log(n) + 1.5 * n + n ** (1.0 / 3.0) * u + math.log(ai)
    return abs(math.expm1(log_exact - log_asym))


def laguerre_bessel_check(n: int, alpha: float, y: float) -> float:
    """
    |L_n^{(α)}(y/n) / (n^α y^{-α/2} e^{-y/2n} J_α(2√y)) - 1|

    Límite de Mehler-Heine; para α = 0 coincide con la forma (y/n)^{-α/2}.
    """
    if n < 1 or y <= 0.0:
        raise DomainError("Se requiere n ≥ 1 e y > 0")
    exact = specfun.laguerre(n, alpha, y / n)
    asym = n ** alpha * y ** (-alpha / 2.0) * math.exp(-y / (2.0 * n)) * specfun.bessel_j(alpha, 2.0 * math.sqrt(y))
    return abs(exact / asym - 1.0)


# ==============================
# BASE DEL OSCILADOR
# ==============================

SHO_BASIS_WINDOW = (-3.0, 3.0)
SHO_BASIS_PANELS = 240
DEFAULT_SHO_MOMEGA = 2.0 * XI_QUADRATIC_COEFFICIENT


def sho_basis_functions(n_max: int, x, m_omega: float = DEFAULT_SHO_MOMEGA) -> np.ndarray:
    """Funciones de Hermite normalizadas ψ_0..ψ_{n_max}, recurrencia estable"""
    xi = math.sqrt(m_omega) * np.asarray(x, dtype=np.float64)
    out = np.empty((n_max + 1,) + xi.shape)
    out[0] = (m_omega / math.pi) ** 0.25 * np.exp(-0.5 * xi ** 2)
    if n_max >= 1:
        out[1] = math.sqrt(2.0) * xi * out[0]
    for n in range(1, n_max):
        out[n + 1] = math.sqrt(2.0 / (n + 1)) * xi * out[n] - math.sqrt(n / (n + 1)) * out[n - 1]
    return out


def _basis_nodes():
    nodes, weights = np.polynomial.legendre.leggauss(32)
    lo, hi = SHO_BASIS_WINDOW
    edges = np.linspace(lo, hi, SHO_BASIS_PANELS + 1)
    half = 0.5 * np.diff(edges)[:, None]
    mid = 0.5 * (edges[1:] + edges[:-1])[:, None]
    return (mid + half * nodes).ravel(), (half * weights).ravel()


def sho_basis_coefficients(n_max: int, m_omega: float = DEFAULT_SHO_MOMEGA) -> np.ndarray:
    """
    a_n = ∫ Φ(x) ψ_n(x) dx en la base del oscilador

    Ojo: el mω por defecto NO es 1 sino DEFAULT_SHO_MOMEGA = 2·9.36345, que
    iguala la parte gaussiana de Φ, e^{-9.36345x²}. Con mω = 1 (pásese
    m_omega=1.0) la base apenas converge: error relativo ≈ 0.19 con n_max = 20,
    lejos de 1e-6.
    """
    if not 0 <= n_max <= 40:
        raise DomainError("n_max debe estar en [0, 40]")
    x, w = _basis_nodes()
    phi = specfun.phi_function(x)
    return sho_basis_functions(n_max, x, m_omega) @ (w * phi)


def sho_reconstruction_error(coefficients: np.ndarray, m_omega: float = DEFAULT_SHO_MOMEGA) -> float:
    """‖Φ - Σ a_n ψ_n‖ / ‖Φ‖ en L²"""
    x, w = _basis_nodes()
    phi = specfun.phi_function(x)
    basis = sho_basis_functions(len(coefficients) - 1, x, m_omega)
    residual = phi - np.asarray(coefficients) @ basis
    return float(math.sqrt(np.sum(w * residual ** 2) / np.sum(w * phi ** 2)))
