"""
Pruebas de polinomios ortogonales, funciones de partición y base del oscilador
"""

import math

import numpy as np
import pytest

from scripts.reference_tables import (GAUSSIAN_TWO_MATRIX, MATRIX_NORMS, MATRIX_RECURRENCE, RIEMANN_POLYNOMIALS,
                                      RIEMANN_RECURRENCE, XI_TWO_MATRIX)
from zsqm import orthopoly
from zsqm.errors import ConditioningError, DomainError
from zsqm.quadrature import exp_sinh, gauss_legendre


@pytest.fixture(scope="module")
def riemann_gs():
    return orthopoly.gram_schmidt_recurrence(orthopoly.riemann_weight(1.0), 5)


@pytest.fixture(scope="module")
def matrix_gs():
    return orthopoly.gram_schmidt_recurrence(orthopoly.matrix_integral_weight(), 3)


# ==============================
# MOMENTOS
# ==============================

def test_momentos_del_peso_de_riemann():
    assert orthopoly.moment_riemann_weight(0, 0, 1.0) == pytest.approx(math.pi ** 2 / 12.0, rel=1e-13)
    assert orthopoly.moment_riemann_weight(0, 0, 0.0) == pytest.approx(math.log(2.0), rel=1e-13)
    # μ depende sólo de m + n
    assert orthopoly.moment_riemann_weight(2, 1, 0.5) == orthopoly.moment_riemann_weight(1, 2, 0.5)


def test_momento_contra_cuadratura():
    weight = orthopoly.riemann_weight(1.0)
    numeric = exp_sinh(lambda y: y * weight.density(y), 0.0)
    assert orthopoly.moment_riemann_weight(1, 0, 1.0) == pytest.approx(numeric, rel=1e-9)


def test_peso_de_riemann_invalido():
    with pytest.raises(DomainError):
        orthopoly.moment_riemann_weight(0, 0, -1.0)
    with pytest.raises(DomainError):
        orthopoly.riemann_weight(-2.0)


def test_tabla_de_momentos_de_hankel():
    table = orthopoly.moment_table(orthopoly.matrix_integral_weight(), 4)
    matrix = table.matrix
    assert matrix.shape == (4, 4)
    np.testing.assert_allclose(matrix, matrix.T)
    assert matrix[1, 2] == matrix[0, 3]
    assert table.is_positive()
    assert matrix[0, 0] == pytest.approx(2.0 * math.log(2.0) - 1.0, rel=1e-13)


# ==============================
# GRAM-SCHMIDT
# ==============================

def test_recurrencia_de_riemann_contra_tabla(riemann_gs):
    rec, polys = riemann_gs
    for name, ref in RIEMANN_RECURRENCE.items():
        value = rec.B(int(name[1:])) if name[0] == "B" else rec.C(int(name[1:]))
        assert value == pytest.approx(ref, abs=1e-3)
    for n, coeffs in RIEMANN_POLYNOMIALS.items():
        np.testing.assert_allclose(polys[n].to_list(), coeffs, atol=1e-3)


def test_peso_matricial_contra_tabla(matrix_gs):
    rec, polys = matrix_gs
    np.testing.assert_allclose(rec.norms, MATRIX_NORMS, atol=1e-3)
    assert rec.B(3) == pytest.approx(MATRIX_RECURRENCE["B3"], abs=1e-3)
    assert rec.C(2) == pytest.approx(MATRIX_RECURRENCE["C2"], abs=1e-3)
    np.testing.assert_allclose(polys[2].to_list(), [2.97619, -4.66845, 1.0], atol=1e-3)


def test_recurrencia_reproduce_los_polinomios(riemann_gs):
    rec, polys = riemann_gs
    assert rec.size == 5 and rec.norms.size == 6
    for generated, direct in zip(rec.polynomials(), polys):
        np.testing.assert_allclose(generated.to_list(), direct.to_list(), rtol=1e-9, atol=1e-9)


def test_ortogonalidad(riemann_gs):
    rec, polys = riemann_gs
    assert orthopoly.orthogonality_defect(orthopoly.riemann_weight(1.0), polys) < 1e-9


def test_funciones_ortonormales(riemann_gs):
    rec, _ = riemann_gs
    weight = orthopoly.riemann_weight(1.0)

    def phi(n):
        return lambda y: orthopoly.orthonormal_functions(rec, weight, n, y)

    assert exp_sinh(lambda y: phi(2)(y) ** 2, 0.0) == pytest.approx(1.0, rel=1e-8)
    assert exp_sinh(lambda y: phi(1)(y) * phi(2)(y), 0.0) == pytest.approx(0.0, abs=1e-8)


def test_gram_schmidt_mal_condicionado():
    weight = orthopoly.generic_weight(lambda y: 1.0, 0.0, 1.0, "uniforme")
    with pytest.raises(ConditioningError):
        orthopoly.gram_schmidt_recurrence(weight, 12)


def test_gram_schmidt_k_invalido():
    with pytest.raises(DomainError):
        orthopoly.gram_schmidt_recurrence(orthopoly.riemann_weight(0.0), 0)


def test_polinomio_no_monico():
    with pytest.raises(DomainError):
        orthopoly.PolynomialCoeffs((1.0, 2.0))


# ==============================
# MATRIZ DE JACOBI
# ==============================

def test_hermite_desde_la_recurrencia():
    rec = orthopoly.hermite_recurrence(4)
    np.testing.assert_allclose(rec.polynomials(3)[3].to_list(), [0.0, -3.0, 0.0, 1.0], atol=1e-14)
    assert rec.norms[2] == pytest.approx(2.0 * math.sqrt(2.0 * math.pi))


@pytest.mark.parametrize("rec", [orthopoly.hermite_recurrence(8), orthopoly.laguerre_recurrence(0.5, 8)])
def test_polinomio_caracteristico(rec):
    assert orthopoly.char_poly_check(rec, 6) < 1e-10
    assert orthopoly.roots_interlace(rec, 5)


def test_polinomio_caracteristico_gram_schmidt(riemann_gs):
    rec, polys = riemann_gs
    assert orthopoly.char_poly_check(rec, 4, polys) < 1e-9
    np.testing.assert_allclose(orthopoly.polynomial_roots(rec, 3), polys[3].roots(), rtol=1e-8)


def test_matriz_de_jacobi_fuera_de_rango():
    rec = orthopoly.hermite_recurrence(3)
    with pytest.raises(DomainError):
        orthopoly.jacobi_matrix(rec, 4)
    with pytest.raises(DomainError):
        orthopoly.laguerre_recurrence(-1.0, 3)


# ==============================
# FUNCIONES DE PARTICIÓN
# ==============================

def test_particion_gaussiana():
    assert orthopoly.partition_gaussian(1, 1) == pytest.approx(math.sqrt(2.0 * math.pi))
    assert orthopoly.partition_gaussian(3, 1) == pytest.approx(2.0 * (2.0 * math.pi) ** 1.5)
    for N in (1, 2, 5):
        from_norms = orthopoly.partition_from_norms(orthopoly.gaussian_norms(4, N), 4)
        assert from_norms == pytest.approx(orthopoly.partition_gaussian(4, N), rel=1e-12)


def test_particion_de_penner():
    product = orthopoly.partition_penner(3, 2, -1.0)
    barnes = orthopoly.partition_penner(3, 2, -1.0, method="barnes")
    assert product == pytest.approx(barnes, rel=1e-12)


def test_particion_de_penner_invalida():
    with pytest.raises(DomainError):
        orthopoly.partition_penner(3, 2, 1.0)
    with pytest.raises(DomainError):
        orthopoly.partition_penner(3, 3, -2.0, method="barnes")
    with pytest.raises(DomainError):
        orthopoly.partition_from_norms([1.0, 2.0], 3)


# ==============================
# MODELO DE DOS MATRICES
# ==============================

def test_biortogonales_gaussianos():
    polys = orthopoly.two_matrix_biorthogonal("gaussian", 9)
    for n, coeffs in GAUSSIAN_TWO_MATRIX.items():
        np.testing.assert_allclose(polys[n].to_list(), coeffs, atol=1e-8)
    assert orthopoly.gaussian_dual_defect(polys) < 1e-10


def test_biortogonales_xi_reescalados():
    polys = orthopoly.two_matrix_biorthogonal("xi_scaled", 9)
    for (n, k), ref in XI_TWO_MATRIX.items():
        assert polys[n].to_list()[k] == pytest.approx(ref, rel=1e-2)
    # paridad: R_n sólo tiene potencias de la misma paridad que n
    assert polys[5].to_list()[0] == 0.0


def test_biortogonales_invalidos():
    with pytest.raises(DomainError):
        orthopoly.two_matrix_biorthogonal("gaussian", 13)
    with pytest.raises(DomainError):
        orthopoly.two_matrix_biorthogonal("cuartico", 4)


# ==============================
# ASINTÓTICA
# ==============================

def test_hermite_airy_mejora_con_n():
    coarse = orthopoly.hermite_airy_check(50, 0.0)
    fine = orthopoly.hermite_airy_check(1000, 0.0)
    assert fine < coarse
    assert fine < 0.1


def test_laguerre_bessel():
    assert orthopoly.laguerre_bessel_check(1000, 0.5, 2.0) < 1e-2
    assert orthopoly.laguerre_bessel_check(2000, 0.0, 3.0) < orthopoly.laguerre_bessel_check(100, 0.0, 3.0)


# ==============================
# BASE DEL OSCILADOR
# ==============================

def test_funciones_de_hermite_ortonormales():
    def overlap(n, m):
        return gauss_legendre(lambda x: orthopoly.sho_basis_functions(4, x, 1.0)[n]
                              * orthopoly.sho_basis_functions(4, x, 1.0)[m], -12.0, 12.0, 48)

    assert overlap(2, 2) == pytest.approx(1.0, rel=1e-10)
    assert overlap(1, 3) == pytest.approx(0.0, abs=1e-12)


def test_coeficientes_de_la_base_del_oscilador():
    # el mω por defecto es el de la gaussiana de Φ, no 1
    assert orthopoly.DEFAULT_SHO_MOMEGA == pytest.approx(2.0 * 9.36345)
    assert "m_omega=1.0" in orthopoly.sho_basis_coefficients.__doc__
    tuned = orthopoly.sho_basis_coefficients(20)
    assert tuned[0] == pytest.approx(0.565143, abs=1e-6)
    assert orthopoly.sho_reconstruction_error(tuned) < 1e-5

    plain = orthopoly.sho_basis_coefficients(20, m_omega=1.0)
    assert plain[0] == pytest.approx(0.365042, abs=1e-6)
    assert orthopoly.sho_reconstruction_error(plain, m_omega=1.0) > 0.1


def test_coeficientes_impares_nulos():
    # Φ es par
    coefficients = orthopoly.sho_basis_coefficients(7)
    np.testing.assert_allclose(coefficients[1::2], 0.0, atol=1e-12)
    with pytest.raises(DomainError):
        orthopoly.sho_basis_coefficients(41)
