"""
Pruebas del eigensolver, Morse exacto, cuantización y operadores escalera
"""

import numpy as np
import pytest

from scripts.reference_tables import RIEMANN_I_SPECTRUM
from zsqm import spectral
from zsqm.errors import ConvergenceError, DomainError, GridTooNarrowError
from zsqm.potentials import Family, PotentialSpec, ground_state_position, prepotential
from zsqm.spectral import Grid, GridFunction


# ==============================
# MALLAS
# ==============================

def test_malla_basica():
    grid = Grid(-1.0, 1.0, 201)
    assert grid.dx == pytest.approx(0.01)
    assert grid.points[0] == -1.0 and grid.points[-1] == 1.0
    assert grid.refined().n_points == 401
    assert grid.refined().dx == pytest.approx(0.005)
    assert grid.with_spacing(0.1).n_points == 21


def test_malla_invalida():
    with pytest.raises(DomainError):
        Grid(0.0, 1.0, 2)
    with pytest.raises(DomainError):
        Grid(1.0, 1.0)
    with pytest.raises(DomainError):
        GridFunction(Grid(0.0, 1.0, 11), np.zeros(10))


def test_norma_de_gridfunction():
    grid = Grid(-8.0, 8.0, 3201)
    psi = GridFunction.sample(grid, lambda x: np.exp(-0.5 * x ** 2))
    assert psi.norm() == pytest.approx(np.pi ** 0.25, rel=1e-8)


def test_malla_estrecha(morse5):
    with pytest.raises(GridTooNarrowError):
        spectral.solve_spectrum(morse5, Grid(-1.0, 1.0, 401))


# ==============================
# ESPECTROS
# ==============================

def test_espectro_del_oscilador():
    result = spectral.solve_spectrum(PotentialSpec(Family.SHO, 2.0), k=4)
    np.testing.assert_allclose(result.eigenvalues, [0.0, 2.0, 4.0, 6.0], atol=1e-3)
    assert result.richardson_error < 1e-3
    assert result.bound.all()


def test_espectro_de_morse(morse5):
    result = spectral.solve_spectrum(morse5, k=5)
    expected = [spectral.morse_exact_energy(5.0, n) for n in range(5)]
    np.testing.assert_allclose(result.eigenvalues, expected, atol=1e-3)
    assert result.bound.all()
    assert spectral.continuum_threshold(morse5) == 25.0


def test_espectro_riemann_i_contra_tabla():
    result = spectral.solve_spectrum(PotentialSpec(Family.RIEMANN_I, 5.0), k=5)
    np.testing.assert_allclose(result.eigenvalues, RIEMANN_I_SPECTRUM, atol=1e-2)


def test_espectro_con_hilos_coincide(morse5):
    serial = spectral.solve_spectrum(morse5, k=3)
    threaded = spectral.solve_spectrum(morse5, k=3, workers=2)
    np.testing.assert_allclose(serial.eigenvalues, threaded.eigenvalues, rtol=0.0, atol=1e-12)


def test_autovector_base_de_morse(morse5):
    result = spectral.solve_spectrum(morse5, k=2, return_vectors=True)
    psi0 = result.eigenvectors[0]
    exact = ground_state_position(morse5, psi0.grid.points)
    assert psi0.norm() == pytest.approx(1.0, rel=1e-12)
    assert np.max(np.abs(psi0.values - exact)) < 1e-3


def test_registro_del_espectro(morse5):
    record = spectral.solve_spectrum(morse5, k=2).to_record()
    assert set(record) == {"potencial", "malla", "autovalores", "ligado", "error"}
    assert record["potencial"] == "morse(A=5)"
    assert record["ligado"] == [True, True]


def test_hamiltoniano_k_invalido():
    grid = Grid(-1.0, 1.0, 11)
    with pytest.raises(DomainError):
        spectral.solve_hamiltonian(lambda x: x ** 2, grid, 0)
    with pytest.raises(DomainError):
        spectral.solve_hamiltonian(lambda x: x ** 2, grid, 10)


def test_hamiltoniano_sin_convergencia():
    # malla muy gruesa para un pozo estrecho
    with pytest.raises(ConvergenceError):
        spectral.solve_hamiltonian(lambda x: 400.0 * x ** 2, Grid(-3.0, 3.0, 21), 3, tol=1e-6)


# ==============================
# MORSE EXACTO
# ==============================

def test_energias_exactas_de_morse():
    assert [spectral.morse_exact_energy(5.0, n) for n in range(6)] == [0.0, 9.0, 16.0, 21.0, 24.0, 25.0]
    with pytest.raises(DomainError):
        spectral.morse_exact_energy(5.0, 6)


def test_primer_excitado_de_morse():
    A = 3.0
    x = np.linspace(-1.0, 4.0, 11)
    y = np.exp(-x)
    expected = y ** (A - 1.0) * np.exp(-y) * (2.0 * A - 1.0 - 2.0 * y)
    np.testing.assert_allclose(spectral.morse_excited_state(1, A, x), expected, rtol=1e-12, atol=1e-15)
    with pytest.raises(DomainError):
        spectral.morse_excited_state(3, A, x)


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_residuo_de_autoestados_de_morse(n):
    assert spectral.morse_eigen_residual(n, 5.0) < 1e-6


# ==============================
# WKB Y SWKB
# ==============================

@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_swkb_exacto_para_morse(n):
    E = spectral.morse_exact_energy(5.0, n)
    assert spectral.swkb_quantization(5.0, E) == pytest.approx(float(n), abs=1e-10)


def test_wkb_da_n_mas_un_medio():
    assert spectral.wkb_quantization(5.0, 9.0) == pytest.approx(1.5, abs=1e-10)


def test_cuantizacion_fuera_de_rango():
    with pytest.raises(DomainError):
        spectral.swkb_quantization(5.0, 25.0)
    with pytest.raises(DomainError):
        spectral.wkb_quantization(5.0, 0.0)


# ==============================
# OPERADORES EN MALLA
# ==============================

def test_derivadas_de_cuarto_orden():
    grid = Grid(0.0, 2.0 * np.pi, 2001)
    x = grid.points
    np.testing.assert_allclose(spectral.first_derivative(np.sin(x), grid.dx)[2:-2], np.cos(x)[2:-2], atol=1e-10)
    np.testing.assert_allclose(spectral.second_derivative(np.sin(x), grid.dx)[2:-2], -np.sin(x)[2:-2], atol=1e-8)


def test_aniquilacion_anula_el_estado_base(morse5):
    grid = Grid(-3.0, 12.0, 6001)
    psi = GridFunction.sample(grid, lambda x: np.exp(-prepotential(morse5, x)))
    assert spectral.annihilation_ratio(morse5, psi) < 1e-6


def test_factorizacion_del_hamiltoniano():
    spec = PotentialSpec(Family.SHO, 2.0)
    psi = GridFunction.sample(Grid(-3.0, 3.0, 6001), lambda x: np.exp(-(x - 0.3) ** 2) * (1.0 + x))
    assert spectral.factorization_residual(spec, psi) < 1e-6


def test_conmutador_del_oscilador():
    psi = GridFunction.sample(Grid(-6.0, 6.0, 6001), lambda x: np.exp(-x ** 2))
    deviation = spectral.commutator_deviation(PotentialSpec(Family.SHO, 2.0), PotentialSpec(Family.SHO, 3.0), psi)
    assert deviation < 1e-6


def test_conmutador_de_morse():
    psi = GridFunction.sample(Grid(-3.0, 5.0, 8001), lambda x: np.exp(-(x - 1.0) ** 2))
    spec_a, spec_b = PotentialSpec(Family.MORSE, 2.0), PotentialSpec(Family.MORSE, 3.5)
    assert spectral.commutator_deviation(spec_a, spec_b, psi) < 1e-6
    assert spectral.morse_commutator_identity_residual(2.0, 3.5, psi) < 1e-6


# ==============================
# BASE COMPLETA
# ==============================

@pytest.mark.parametrize("n, m, expected", [(0, 0, 1.0), (1, 1, 1.0), (3, 3, 1.0), (0, 1, 0.0), (1, 3, 0.0)])
def test_base_completa_ortonormal(n, m, expected):
    assert spectral.complete_basis_overlap(n, m, 1.0) == pytest.approx(expected, abs=1e-10)


def test_prefactor_de_la_literatura_normaliza_n_cero():
    assert spectral.complete_basis_overlap(0, 0, 1.5, scale=3.0) == pytest.approx(1.0, abs=1e-10)


def test_base_completa_dominio():
    with pytest.raises(DomainError):
        spectral.complete_basis_function(0, 0.0, 1.0)
    with pytest.raises(DomainError):
        spectral.complete_basis_function(0, 1.0, -1.0)
