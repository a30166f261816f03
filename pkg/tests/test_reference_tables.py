"""
Pruebas de filas comparativas, escritura de tablas y verificación por lotes
"""

import json

import pandas as pd
import pytest
from openpyxl import load_workbook

from scripts import cli
from scripts.batch_processor import BatchProcessor
from scripts.reference_tables import TableRow, all_ok, zero_rows
from scripts.table_consolidator import TableConsolidator, write_json, write_records
from zsqm.analysis import ZeroRecord
from zsqm.errors import DomainError


# ==============================
# FILAS COMPARATIVAS
# ==============================

def test_fila_absoluta():
    row = TableRow('morse', 'E', 9.0004, 9.0, 1e-3)
    assert row.delta == pytest.approx(4e-4)
    assert row.ok
    assert not TableRow('morse', 'E', 9.002, 9.0, 1e-3).ok


def test_fila_relativa():
    # el límite se escala por |referencia| cuando ésta supera 1
    assert TableRow('xi2m', 'R8[0]', 281.0, 280.0, 1e-2, relative=True).ok
    assert not TableRow('xi2m', 'R8[0]', 281.0, 280.0, 1e-3, relative=True).ok
    assert not TableRow('xi2m', 'R1[0]', 0.5, 0.48, 1e-2, relative=True).ok


def test_fila_informativa():
    row = TableRow('sho', 'E0', 0.1)
    assert row.delta is None and row.ok
    assert row.to_dict() == {'grupo': 'sho', 'cantidad': 'E0', 'calculado': 0.1,
                             'referencia': None, 'delta': None, 'ok': True}
    assert all_ok([row, TableRow('a', 'b', 1.0, 1.0)])
    assert not all_ok([row, TableRow('a', 'b', 2.0, 1.0)])


def test_filas_de_ceros():
    records = [ZeroRecord(14.1347251, 1e-14, 3), ZeroRecord(21.0220396, 1e-14, 3)]
    rows = zero_rows('xi', 0.5, (10.0, 22.0), records)
    assert [r.cantidad for r in rows] == ['nodos', 'p1', 'p2']
    assert all_ok(rows)
    assert not all_ok(zero_rows('xi', 0.5, (10.0, 26.0), records))
    assert zero_rows('morse', 5.0, (0.0, 60.0), [])[0].ok


# ==============================
# ESCRITURA
# ==============================

def test_csv_determinista(tmp_path):
    rows = [TableRow('morse', 'E', 1.0 / 3.0, 0.0, 1.0)]
    ruta = write_records(rows, tmp_path / 'sub' / 'tabla.csv')
    texto = ruta.read_text(encoding='utf-8')
    assert texto.splitlines()[0] == 'grupo,cantidad,calculado,referencia,delta,ok'
    assert '0.333333333333,' in texto
    assert '\r' not in texto


def test_csv_con_columnas_fijas_sin_filas(tmp_path):
    ruta = write_records([], tmp_path / 'ceros.csv', columns=['p', 'residuo'])
    assert ruta.read_text(encoding='utf-8').strip() == 'p,residuo'


def test_json_sin_redondeo(tmp_path):
    ruta = write_records([{'x': 1.0 / 3.0}], tmp_path / 'serie.json', 'json')
    assert json.loads(ruta.read_text(encoding='utf-8')) == [{'x': 1.0 / 3.0}]
    ruta = write_json({'nombre': 'ξ'}, tmp_path / 'doc.json')
    assert 'ξ' in ruta.read_text(encoding='utf-8')


def test_formato_no_soportado(tmp_path):
    with pytest.raises(DomainError):
        write_records([], tmp_path / 'x.xml', 'xml')


# ==============================
# CONSOLIDADOR
# ==============================

def test_estadisticas_del_consolidador():
    consolidador = TableConsolidator()
    consolidador.agregar_tabla('a', [TableRow('g', 'q', 1.0, 1.0), TableRow('g', 'r', 1.5, 1.0)])
    consolidador.agregar_tabla('b', [TableRow('g', 'q', 2.0)])
    stats = consolidador.obtener_estadisticas()
    assert stats['total_tablas'] == 2
    assert stats['total_filas'] == 3
    assert stats['total_fallos'] == 1
    assert stats['por_tabla']['a']['max_delta'] == pytest.approx(0.5)
    assert stats['por_tabla']['b']['max_delta'] is None
    consolidador.limpiar_datos()
    assert consolidador.obtener_estadisticas()['total_tablas'] == 0


def test_excel_consolidado(tmp_path):
    consolidador = TableConsolidator()
    with pytest.raises(ValueError):
        consolidador.generar_excel_consolidado(tmp_path / 'vacio.xlsx')
    consolidador.agregar_tabla('morse_levels', [TableRow('n=0', 'E', 0.0, 0.0)])
    ruta = consolidador.generar_excel_consolidado(tmp_path / 'libro.xlsx')
    wb = load_workbook(ruta)
    assert wb.sheetnames == ['Resumen', 'morse_levels']
    hoja = wb['morse_levels']
    assert [c.value for c in hoja[1]] == ['grupo', 'cantidad', 'calculado', 'referencia', 'delta', 'ok']


# ==============================
# VERIFICACIÓN POR LOTES
# ==============================

def test_tarea_desconocida(tmp_path):
    with pytest.raises(ValueError):
        BatchProcessor(carpeta_salida=str(tmp_path), solo=['tabla9'])


def test_verificacion_parcial(carpeta_resultados):
    salida = carpeta_resultados / 'verif'
    codigo = cli.main(['verify-all', '--only', 'prepotentials,ground_states', '--excel', '--output', str(salida)])
    assert codigo == cli.EXIT_OK
    df = pd.read_csv(salida / 'prepotentials.csv')
    assert df['ok'].all()
    assert (salida / 'ground_states.csv').exists()
    assert len(list(salida.glob('verificacion_consolidada_*.xlsx'))) == 1
    resumen = json.loads(next(salida.glob('resumen_verificacion_*.json')).read_text(encoding='utf-8'))
    assert resumen['estadisticas_procesamiento']['tareas_exitosas'] == 2
    assert resumen['tareas']['ground_states']['dentro_de_tolerancia']


def test_verificacion_de_incertidumbre_y_entropias(carpeta_resultados):
    salida = carpeta_resultados / 'tablas'
    codigo = cli.main(['verify-all', '--only', 'uncertainty,shannon', '--output', str(salida)])
    assert codigo == cli.EXIT_OK
    for nombre in ('uncertainty', 'shannon'):
        df = pd.read_csv(salida / f'{nombre}.csv')
        assert len(df['grupo'].unique()) == 6
        assert df['ok'].all()
    df = pd.read_csv(salida / 'uncertainty.csv')
    producto = df[(df['grupo'] == 'riemann1') & (df['cantidad'] == 'producto')]
    assert producto['referencia'].iloc[0] == pytest.approx(0.679403)


def test_verificacion_tarea_desconocida_es_error_de_uso(carpeta_resultados):
    assert cli.main(['verify-all', '--only', 'tabla9']) == cli.EXIT_USAGE


@pytest.mark.slow
def test_verificacion_completa(carpeta_resultados):
    assert cli.main(['verify-all', '--output', str(carpeta_resultados / 'todo')]) == cli.EXIT_OK
