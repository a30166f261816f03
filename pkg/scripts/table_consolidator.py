"""
Consolidador de Tablas
Escribe tablas y registros en CSV/JSON deterministas y genera el libro Excel
consolidado de una verificación completa
"""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

import pandas as pd
from openpyxl import Workbook
from openpyxl.styles import Font, PatternFill, Alignment, Border, Side

from scripts.config import CSV_FLOAT_FORMAT, OUTPUT_FORMATS
from zsqm.errors import DomainError

logger = logging.getLogger(__name__)

Record = Dict[str, object]


def _as_records(rows: Sequence) -> List[Record]:
    return [row.to_dict() if hasattr(row, 'to_dict') else dict(row) for row in rows]


def write_records(records: Sequence, ruta: Union[str, Path], formato: str = 'csv',
                  columns: Optional[List[str]] = None) -> Path:
    """
    Escribe una lista de registros planos

    CSV: punto decimal, sin separador de miles, 12 cifras significativas y
    saltos de línea '\\n'. JSON: números como dobles sin redondear.

    Args:
        records: Filas (dicts u objetos con to_dict)
        ruta: Archivo de salida
        formato: 'csv' o 'json'
        columns: Encabezados fijos del CSV (se escriben aunque no haya filas)

    Returns:
        Ruta escrita
    """
    if formato not in OUTPUT_FORMATS:
        raise DomainError(f"Formato no soportado: {formato}")
    ruta = Path(ruta)
    ruta.parent.mkdir(parents=True, exist_ok=True)
    registros = _as_records(records)

    if formato == 'csv':
        df = pd.DataFrame(registros, columns=columns)
        df.to_csv(ruta, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator='\n', encoding='utf-8')
    else:
        write_json(registros, ruta)
    logger.debug(f"✓ {len(registros)} filas escritas en {ruta}")
    return ruta


def write_json(payload: Union[Dict, List], ruta: Union[str, Path]) -> Path:
    """Vuelca un documento JSON en UTF-8 con sangría 2"""
    ruta = Path(ruta)
    ruta.parent.mkdir(parents=True, exist_ok=True)
    with open(ruta, 'w', encoding='utf-8', newline='\n') as f:
        json.dump(payload, f, ensure_ascii=False, indent=2)
        f.write('\n')
    return ruta


class TableConsolidator:
    """
    Acumula las tablas comparativas de una verificación y las consolida
    en un libro Excel con una hoja por tabla y una hoja de resumen
    """

    def __init__(self):
        self.tablas: Dict[str, List[Record]] = {}

    def agregar_tabla(self, nombre: str, rows: Sequence):
        """
        Registra las filas de una tabla (se reemplaza si ya existía)

        Args:
            nombre: Nombre de la tabla (morse_levels, uncertainty, ...)
            rows: Filas TableRow o dicts con las columnas comparativas
        """
        self.tablas[nombre] = _as_records(rows)

    def generar_excel_consolidado(self, ruta_salida: Union[str, Path] = 'verificacion_consolidada.xlsx') -> str:
        """
        Genera el libro Excel consolidado

        Returns:
            Ruta del archivo generado
        """
        if not self.tablas:
            raise ValueError("No hay tablas para consolidar. Primero agregue tablas con agregar_tabla()")

        wb = Workbook()
        wb.remove(wb.active)

        for nombre, registros in self.tablas.items():
            self._crear_hoja_tabla(wb, nombre, registros)
        self._crear_hoja_resumen(wb)

        wb.save(ruta_salida)
        logger.info(f"✓ Libro consolidado generado: {ruta_salida}")
        return str(ruta_salida)

    def _crear_hoja_tabla(self, wb: Workbook, nombre: str, registros: List[Record]):
        # Excel limita los nombres de hoja a 31 caracteres
        ws = wb.create_sheet(nombre[:31])
        columnas = list(registros[0]) if registros else []
        ws.append(columnas)

        header_fill = PatternFill(start_color="366092", end_color="366092", fill_type="solid")
        header_font = Font(bold=True, color="FFFFFF", size=12)
        for cell in ws[1]:
            cell.fill = header_fill
            cell.font = header_font
            cell.alignment = Alignment(horizontal="center", vertical="center", wrap_text=True)

        for registro in registros:
            ws.append([registro.get(c) for c in columnas])

        thin_border = Border(
            left=Side(style='thin'),
            right=Side(style='thin'),
            top=Side(style='thin'),
            bottom=Side(style='thin')
        )
        fallo_fill = PatternFill(start_color="F4CCCC", end_color="F4CCCC", fill_type="solid")
        col_ok = columnas.index('ok') if 'ok' in columnas else None

        for row in ws.iter_rows(min_row=2, max_row=ws.max_row):
            marcar = col_ok is not None and row[col_ok].value is False
            for cell in row:
                cell.border = thin_border
                if marcar:
                    cell.fill = fallo_fill

        for col, width in zip('ABCDEF', (18, 22, 20, 20, 14, 8)):
            ws.column_dimensions[col].width = width
        ws.freeze_panes = "A2"

    def _crear_hoja_resumen(self, wb: Workbook):
        ws = wb.create_sheet("Resumen", 0)

        ws.merge_cells('A1:D1')
        titulo_cell = ws['A1']
        titulo_cell.value = "RESUMEN DE VERIFICACIÓN"
        titulo_cell.font = Font(bold=True, size=14, color="FFFFFF")
        titulo_cell.fill = PatternFill(start_color="203764", end_color="203764", fill_type="solid")
        titulo_cell.alignment = Alignment(horizontal="center", vertical="center")

        encabezados = ['Tabla', 'Filas', 'Fuera de tolerancia', 'Máx |delta|']
        for col, texto in zip('ABCD', encabezados):
            cell = ws[f'{col}3']
            cell.value = texto
            cell.font = Font(bold=True)
            cell.fill = PatternFill(start_color="D0CECE", end_color="D0CECE", fill_type="solid")

        for idx, (nombre, stats) in enumerate(self.obtener_estadisticas()['por_tabla'].items(), start=4):
            ws[f'A{idx}'] = nombre
            ws[f'B{idx}'] = stats['filas']
            ws[f'C{idx}'] = stats['fallos']
            ws[f'D{idx}'] = stats['max_delta']

        ws.column_dimensions['A'].width = 30
        ws.column_dimensions['B'].width = 10
        ws.column_dimensions['C'].width = 20
        ws.column_dimensions['D'].width = 18

    def limpiar_datos(self):
        """Limpia las tablas acumuladas"""
        self.tablas = {}

    def obtener_estadisticas(self) -> Dict:
        """
        Filas, fallos y máximo |delta| por tabla

        Returns:
            Diccionario con estadísticas
        """
        por_tabla = {}
        for nombre, registros in self.tablas.items():
            deltas = [abs(r['delta']) for r in registros if r.get('delta') is not None]
            por_tabla[nombre] = {
                'filas': len(registros),
                'fallos': sum(1 for r in registros if r.get('ok') is False),
                'max_delta': max(deltas) if deltas else None,
            }
        return {
            'total_tablas': len(por_tabla),
            'total_filas': sum(s['filas'] for s in por_tabla.values()),
            'total_fallos': sum(s['fallos'] for s in por_tabla.values()),
            'por_tabla': por_tabla,
        }


# Instancia global del consolidador
consolidator = TableConsolidator()


def agregar_tabla(nombre: str, rows: Sequence):
    """Función de conveniencia para registrar una tabla"""
    consolidator.agregar_tabla(nombre, rows)


def generar_excel_consolidado(ruta_salida: Union[str, Path] = 'verificacion_consolidada.xlsx') -> str:
    """Función de conveniencia para generar el Excel consolidado"""
    return consolidator.generar_excel_consolidado(ruta_salida)


def obtener_estadisticas() -> Dict:
    """Función de conveniencia para obtener estadísticas"""
    return consolidator.obtener_estadisticas()


def limpiar_datos():
    """Función de conveniencia para limpiar datos"""
    consolidator.limpiar_datos()
