"""
Pruebas de la interfaz de línea de comandos
"""

import json

import pandas as pd
import pytest

from scripts import cli


def _leer_json(ruta):
    with open(ruta, 'r', encoding='utf-8') as f:
        return json.load(f)


# ==============================
# ERRORES DE USO
# ==============================

def test_comando_desconocido(carpeta_resultados):
    assert cli.main(['fourier']) == cli.EXIT_USAGE


def test_tabla_sin_nombre(carpeta_resultados):
    assert cli.main(['table']) == cli.EXIT_USAGE


def test_tolerancia_no_positiva(carpeta_resultados):
    assert cli.main(['table', 'morse_levels', '--tol', '0']) == cli.EXIT_USAGE


def test_configuracion_con_clave_desconocida(carpeta_resultados):
    ruta = carpeta_resultados / 'cfg.json'
    ruta.write_text(json.dumps({'family': 'morse', 'semilla': 3}), encoding='utf-8')
    assert cli.main(['expand', '--config', str(ruta)]) == cli.EXIT_USAGE


def test_configuracion_ilegible(carpeta_resultados):
    ruta = carpeta_resultados / 'cfg.json'
    ruta.write_text('{no es json', encoding='utf-8')
    assert cli.main(['expand', '--config', str(ruta)]) == cli.EXIT_USAGE


def test_peso_desconocido(carpeta_resultados):
    assert cli.main(['orthopoly', '--weight', 'cuartico']) == cli.EXIT_USAGE


def test_rango_invalido_es_error_de_uso(carpeta_resultados):
    assert cli.main(['plotdata', '--family', 'morse', '--range', 'a:b']) == cli.EXIT_USAGE
    # rango vacío: WindowError
    assert cli.main(['plotdata', '--family', 'morse', '--range=3:1']) == cli.EXIT_USAGE


# ==============================
# CONFIGURACIÓN
# ==============================

def test_banderas_sobre_archivo_sobre_defectos(carpeta_resultados):
    ruta = carpeta_resultados / 'cfg.json'
    ruta.write_text(json.dumps({'family': 'morse', 'A': 2.0, 'order': 6}), encoding='utf-8')
    args = cli.build_parser().parse_args(['expand', '--config', str(ruta), '--order', '3'])
    config = cli.RunConfig.from_args(args)
    assert config.params == {'family': 'morse', 'A': 2.0, 'order': 3}
    assert config.format == 'csv'
    assert config.output_path('x').name == 'x.csv'


# ==============================
# COMANDOS
# ==============================

def test_tabla_de_niveles_de_morse(carpeta_resultados):
    assert cli.main(['table', 'morse_levels', '--A', '3']) == cli.EXIT_OK
    df = pd.read_csv(carpeta_resultados / 'resultados' / 'morse_levels.csv')
    assert list(df.columns) == ['grupo', 'cantidad', 'calculado', 'referencia', 'delta', 'ok']
    energias = df[df['cantidad'] == 'E']
    assert list(energias['referencia']) == [0.0, 5.0, 8.0, 9.0]
    assert energias['ok'].all()


def test_orthopoly_gaussiano_en_json(carpeta_resultados):
    salida = carpeta_resultados / 'g.json'
    codigo = cli.main(['orthopoly', '--weight', 'gauss2m', '--kmax', '5', '--format', 'json', '--output', str(salida)])
    assert codigo == cli.EXIT_OK
    data = _leer_json(salida)
    assert data['peso'] == 'gauss2m'
    assert len(data['polinomios']) == 6
    assert data['polinomios'][2] == pytest.approx([-2.0, 0.0, 1.0], abs=1e-10)
    assert all(fila['ok'] for fila in data['comparacion'])


def test_orthopoly_riemann_en_csv(carpeta_resultados):
    assert cli.main(['orthopoly', '--weight', 'riemann:1', '--kmax', '2']) == cli.EXIT_OK
    df = pd.read_csv(carpeta_resultados / 'resultados' / 'orthopolyriemann1.csv')
    assert list(df.columns) == ['polinomio', 'grado', 'coeficiente']
    # R0 = 1, R1 de grado 1, R2 de grado 2
    assert len(df) == 1 + 2 + 3


def test_plotdata_potencial_de_morse(carpeta_resultados):
    codigo = cli.main(['plotdata', '--what', 'potential', '--family', 'morse', '--A', '5',
                       '--range=-1:3', '--n', '5'])
    assert codigo == cli.EXIT_OK
    df = pd.read_csv(carpeta_resultados / 'resultados' / 'plot_potential_morse.csv')
    assert list(df.columns) == ['x', 'valor']
    assert df['valor'][1] == pytest.approx(15.0)


def test_ceros_de_morse_csv_vacio(carpeta_resultados):
    codigo = cli.main(['zeros', '--family', 'morse', '--A', '5', '--pmin', '0', '--pmax', '5'])
    assert codigo == cli.EXIT_OK
    texto = (carpeta_resultados / 'resultados' / 'zeros_morse.csv').read_text(encoding='utf-8')
    assert texto.strip() == 'p,residuo,iteraciones,metodo'


def test_ceros_de_xi_en_json(carpeta_resultados):
    salida = carpeta_resultados / 'xi.json'
    codigo = cli.main(['zeros', '--family', 'xi', '--pmin', '10', '--pmax', '22', '--format', 'json',
                       '--output', str(salida)])
    assert codigo == cli.EXIT_OK
    data = _leer_json(salida)
    assert [round(c['p'], 4) for c in data['ceros']] == [14.1347, 21.022]


def test_desarrollo_en_json(carpeta_resultados):
    salida = carpeta_resultados / 'expand.json'
    codigo = cli.main(['expand', '--family', 'morse', '--A', '2', '--order', '2', '--format', 'json',
                       '--output', str(salida)])
    assert codigo == cli.EXIT_OK
    data = _leer_json(salida)
    assert data['potencial'] == 'morse(A=2)'
    assert len(data['coeficientes']) == 3
    assert data['coeficientes'][2] == pytest.approx(1.0, abs=1e-8)


def test_espectro_del_oscilador(carpeta_resultados):
    salida = carpeta_resultados / 'sho.json'
    codigo = cli.main(['spectrum', '--family', 'sho', '--A', '2', '--k', '3', '--format', 'json',
                       '--output', str(salida)])
    assert codigo == cli.EXIT_OK
    data = _leer_json(salida)
    assert data['autovalores'] == pytest.approx([0.0, 2.0, 4.0], abs=1e-3)
    assert [fila['cantidad'] for fila in data['comparacion']] == ['E0', 'E1', 'E2']
