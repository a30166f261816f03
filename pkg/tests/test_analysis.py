"""
Pruebas del estado base en momentos, nodos, momentos, entropías y desarrollos
"""

import math

import numpy as np
import pytest

from scripts.reference_tables import (SHANNON_REFERENCE, TABLE_FAMILIES, UNCERTAINTY_REFERENCE, XI_CUBIC_THREE_QUARTERS,
                                      XI_EXPANSION_HALF, XI_MIN_THREE_QUARTERS, ENTROPY_BOUND)
from zsqm import analysis, specfun
from zsqm.errors import DomainError, WindowError
from zsqm.potentials import Family, PotentialSpec

MORSE_HALF = PotentialSpec(Family.MORSE, 0.5)


# ==============================
# ESTADO BASE EN MOMENTOS
# ==============================

def test_nucleo_del_oscilador():
    spec = PotentialSpec(Family.SHO, 2.0)
    value = analysis.momentum_kernel(spec, 1.5)
    assert value.real == pytest.approx(math.sqrt(2.0 * math.pi) * math.exp(-1.125), rel=1e-13)


def test_densidad_de_morse_es_secante_hiperbolica():
    assert float(analysis.momentum_density(MORSE_HALF, 1.0)) == pytest.approx(1.0 / math.cosh(math.pi), rel=1e-12)


def test_estado_base_en_cero_es_real_y_positivo():
    for family in (Family.MORSE, Family.RIEMANN_I, Family.XI_I, Family.XI_II):
        value = analysis.momentum_ground_state(PotentialSpec(family), 0.0)
        assert value.real > 0.0
        assert abs(value.imag) < 1e-12


@pytest.mark.parametrize("spec, p", [
    (MORSE_HALF, 0.7),
    (PotentialSpec(Family.RIEMANN_I, 0.5), 3.0),
    (PotentialSpec(Family.RIEMANN_II, 0.5), 1.2),
    (PotentialSpec(Family.XI_I, 0.5), 5.0),
])
def test_forma_cerrada_contra_transformada_numerica(spec, p):
    closed = analysis.momentum_ground_state(spec, p)
    numeric = analysis.fourier_transform_numeric(spec, p)
    assert abs(closed - numeric) < 1e-7


def test_sustitucion_de_a():
    direct = analysis.momentum_ground_state(PotentialSpec(Family.MORSE, 2.0), 0.4)
    override = analysis.momentum_ground_state(MORSE_HALF, 0.4, A_override=2.0)
    assert override == direct


def test_sin_forma_cerrada():
    boosted = PotentialSpec(Family.MORSE, 1.0, quad_boost=0.2)
    with pytest.raises(DomainError):
        analysis.momentum_kernel(boosted, 0.0)
    with pytest.raises(DomainError):
        analysis.momentum_kernel(PotentialSpec(Family.RIEMANN_I, 0.5, T=2.0), 0.0)
    # momentum_density recurre a la transformada numérica
    assert float(analysis.momentum_density(boosted, 0.0)) > 0.0


def test_ventana_numerica_estrecha():
    from zsqm.quadrature import QuadratureConfig

    config = QuadratureConfig(scheme="gauss_legendre", window=(-1.0, 1.0))
    with pytest.raises(WindowError):
        analysis.fourier_transform_numeric(MORSE_HALF, 0.0, config)


# ==============================
# NODOS
# ==============================

def test_nodos_de_xi_en_la_recta_critica():
    records = analysis.find_momentum_zeros("xi", 0.5, (10.0, 26.0))
    np.testing.assert_allclose([r.p for r in records], analysis.RIEMANN_ZERO_ORDINATES[:3], atol=1e-6)
    assert all(r.method == "bisection" for r in records)


def test_nodos_de_zeta_por_conteo():
    records = analysis.find_momentum_zeros("riemann1", 0.5, (10.0, 22.0), workers=2)
    np.testing.assert_allclose([r.p for r in records], analysis.RIEMANN_ZERO_ORDINATES[:2], atol=1e-6)
    assert all(r.method == "winding" and r.residual < 1e-8 for r in records)


def test_morse_sin_nodos():
    assert analysis.find_momentum_zeros("morse", 5.0, (0.0, 60.0)) == []


def test_nodos_fuera_de_la_recta_critica():
    assert analysis.find_momentum_zeros("zeta", 0.75, (10.0, 16.0)) == []


def test_nodos_argumentos_invalidos():
    with pytest.raises(DomainError):
        analysis.find_momentum_zeros("xi", 0.5, (10.0, 70.0))
    with pytest.raises(DomainError):
        analysis.find_momentum_zeros("ramanujan", 6.0, (10.0, 20.0))


def test_cajas_lejos_del_polo_de_gamma():
    # A pequeño: la primera caja empieza en p = 0 junto a s = 0
    assert analysis.find_momentum_zeros("morse", 0.05, (0.0, 5.0)) == []
    with pytest.raises(DomainError, match="A > 0"):
        analysis.find_momentum_zeros("zeta", 0.0, (0.0, 5.0))


def test_numero_de_vueltas():
    count, scale = analysis.winding_number(specfun.riemann_xi, 0.4, 0.6, 14.0, 14.3)
    assert count == 1
    assert scale > 0.0
    count, _ = analysis.winding_number(specfun.riemann_xi, 0.4, 0.6, 15.0, 15.3)
    assert count == 0


def test_barrido_fuera_de_la_recta():
    scan = analysis.node_scan_off_critical(0.6)
    assert scan.min_eta > 0.0
    assert scan.min_abs < 1e-6
    assert scan.min_abs < scan.min_relative < 1.0
    on_line = analysis.node_scan_off_critical(0.5)
    assert on_line.min_eta < scan.min_eta
    assert on_line.min_relative < scan.min_relative
    with pytest.raises(DomainError):
        analysis.node_scan_off_critical(1.2)


def test_registro_de_nodo():
    record = analysis.ZeroRecord(14.1347, 1e-12, 4)
    assert record.to_dict() == {"p": 14.1347, "residuo": 1e-12, "iteraciones": 4, "metodo": "winding"}


# ==============================
# ECUACIÓN EN DIFERENCIAS
# ==============================

def test_diferencias_morse():
    assert abs(analysis.finite_difference_residual("morse", 0.5, 3.0)) < 1e-10


def test_diferencias_riemann_resumada():
    for p in (0.0, 2.5, 10.0):
        assert abs(analysis.finite_difference_residual("riemann1", 0.5, p)) < 1e-10


def test_diferencias_argumentos_invalidos():
    with pytest.raises(DomainError):
        analysis.finite_difference_residual("riemann1", 0.5, 1.0, n_terms=31)
    with pytest.raises(DomainError):
        analysis.finite_difference_residual("xi2", 0.5, 1.0)


# ==============================
# MOMENTOS, INCERTIDUMBRE Y ENTROPÍAS
# ==============================

def _family_id(spec):
    return spec.family.value


def test_incertidumbre_del_oscilador():
    spec = PotentialSpec(Family.SHO, 2.0)
    assert analysis.position_moments(spec).second == pytest.approx(0.5, rel=1e-10)
    assert analysis.uncertainty_product(spec) == pytest.approx(0.5, rel=1e-10)


@pytest.mark.parametrize("spec", TABLE_FAMILIES, ids=_family_id)
def test_incertidumbre_contra_tabla(spec):
    x_moments = analysis.position_moments(spec)
    p_moments = analysis.momentum_moments(spec)
    computed = (x_moments.mean, x_moments.second, x_moments.spread, p_moments.second, p_moments.spread,
                x_moments.spread * p_moments.spread)
    np.testing.assert_allclose(computed, UNCERTAINTY_REFERENCE[spec.family], atol=1e-3)
    assert computed[-1] >= 0.5 - 1e-9


def test_producto_de_riemann_es_consistente_con_su_fila():
    ref = UNCERTAINTY_REFERENCE[Family.RIEMANN_I]
    assert ref[5] == pytest.approx(ref[2] * ref[4], abs=1e-5)


@pytest.mark.parametrize("spec", TABLE_FAMILIES, ids=_family_id)
def test_momento_p2_por_densidad_y_derivada(spec):
    by_density = analysis.momentum_moments(spec, method="density").second
    by_derivative = analysis.momentum_moments(spec, method="derivative").second
    assert by_density == pytest.approx(by_derivative, rel=1e-6)


def test_momento_p2_de_morse():
    assert analysis.momentum_moments(MORSE_HALF, method="density").second == pytest.approx(0.25, rel=1e-8)
    with pytest.raises(DomainError):
        analysis.momentum_moments(MORSE_HALF, method="otro")


@pytest.mark.parametrize("spec", TABLE_FAMILIES, ids=_family_id)
def test_parseval(spec):
    assert analysis.parseval_defect(spec) < 1e-7


@pytest.mark.parametrize("spec", TABLE_FAMILIES, ids=_family_id)
def test_entropias_contra_tabla(spec):
    s_x, s_p, total = analysis.shannon_entropies(spec)
    np.testing.assert_allclose((s_x, s_p, total), SHANNON_REFERENCE[spec.family], atol=1e-3)
    assert total >= ENTROPY_BOUND - 1e-9


def test_minimos_de_densidad_en_los_nodos():
    xi = PotentialSpec(Family.XI_I, 0.5)
    minima = analysis.density_minima(xi, 26.0)
    np.testing.assert_allclose(minima, analysis.RIEMANN_ZERO_ORDINATES[:3], atol=1e-6)
    assert analysis.density_minima(MORSE_HALF, 20.0) == []


# ==============================
# DESARROLLO ALREDEDOR DEL MÍNIMO
# ==============================

def test_minimo_de_morse():
    assert analysis.find_minimum(PotentialSpec(Family.MORSE, 5.0)) == pytest.approx(-math.log(5.0), abs=1e-12)
    assert analysis.find_minimum(PotentialSpec(Family.XI_I, 0.5)) == 0.0


def test_desarrollo_de_morse():
    A = 2.0
    x_min, coefficients = analysis.expand_about_minimum(PotentialSpec(Family.MORSE, A), order=4)
    assert x_min == pytest.approx(-math.log(A), abs=1e-12)
    expected = [A - A * math.log(A), 0.0, A / 2.0, -A / 6.0, A / 24.0]
    np.testing.assert_allclose(coefficients, expected, atol=1e-8)


def test_desarrollo_de_xi_un_medio():
    x_min, coefficients = analysis.expand_about_minimum(PotentialSpec(Family.XI_I, 0.5), order=8)
    assert x_min == 0.0
    assert np.all(coefficients[1::2] == 0.0)
    for k, ref in XI_EXPANSION_HALF.items():
        assert coefficients[k] == pytest.approx(ref, abs=5e-2 if k == 8 else 1e-3)


def test_desarrollo_de_xi_tres_cuartos():
    x_min, coefficients = analysis.expand_about_minimum(PotentialSpec(Family.XI_I, 0.75), order=4)
    assert abs(x_min) == pytest.approx(XI_MIN_THREE_QUARTERS, abs=1e-5)
    assert abs(coefficients[3]) == pytest.approx(XI_CUBIC_THREE_QUARTERS, abs=1e-3)


def test_desarrollo_orden_invalido():
    with pytest.raises(DomainError):
        analysis.expand_about_minimum(MORSE_HALF, order=13)


def test_espectro_cuadratico():
    np.testing.assert_allclose(analysis.quadratic_comparison_spectrum(2.0, 4), [0.0, 2.0, 4.0, 6.0])
    with pytest.raises(DomainError):
        analysis.quadratic_comparison_spectrum(2.0, 0)
    with pytest.raises(DomainError):
        analysis.quadratic_comparison_spectrum(-1.0, 3, verify=False)


# ==============================
# SERIES Y REGISTROS
# ==============================

def test_series_para_figuras(morse5):
    x, values = analysis.plot_series(morse5, "potential", (-1.0, 3.0), 5)
    np.testing.assert_allclose(x, [-1.0, 0.0, 1.0, 2.0, 3.0])
    assert values[1] == pytest.approx(15.0)
    p, log_values = analysis.plot_series(MORSE_HALF, "logmomentum", (0.0, 50.0), 11)
    assert np.all(np.isfinite(log_values))
    assert log_values[-1] < log_values[0]


def test_series_invalidas(morse5):
    with pytest.raises(DomainError):
        analysis.plot_series(morse5, "fase")
    with pytest.raises(WindowError):
        analysis.plot_series(morse5, "momentum", (0.0, 80.0))
    with pytest.raises(WindowError):
        analysis.plot_series(morse5, "ground", (2.0, 1.0))


def test_registro_del_estado_base():
    record = analysis.ground_state_record(MORSE_HALF)
    assert set(record) == {"familia", "N0", "metodo", "psi_p0_real", "psi_p0_imag"}
    assert record["N0"] == pytest.approx(0.5)
    assert record["metodo"] == "analytic"
    # ψ̃₀(0) = Γ(1/2)/√(2π·N₀) = 1
    assert record["psi_p0_real"] == pytest.approx(1.0, rel=1e-12)
