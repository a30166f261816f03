"""
Procesador por Lotes
Ejecuta todas las reproducciones de tablas y verificaciones numéricas,
escribe cada tabla comparativa y genera el resumen consolidado
"""

import sys
import logging
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple
from datetime import datetime
from tqdm import tqdm

from scripts.config import LOG_LEVEL, LOGS_SUBFOLDER, MAX_THREADS, RESULTS_FOLDER, TABLE_TOLERANCE, VERBOSE
from scripts.reference_tables import TABLE_BUILDERS, VERIFICATION_BUILDERS, TableRow, all_ok
from scripts.table_consolidator import TableConsolidator, write_json, write_records
from zsqm.errors import ZsqmError

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DELTAS = 2


class BatchProcessor:
    """
    Procesador por lotes para la verificación completa (verify-all)
    """

    def __init__(self, carpeta_salida: str = RESULTS_FOLDER, tol: float = TABLE_TOLERANCE,
                 formato: str = 'csv', excel: bool = False, workers: int = MAX_THREADS,
                 solo: Optional[List[str]] = None):
        """
        Inicializa el procesador por lotes

        Args:
            carpeta_salida: Carpeta donde se guardarán tablas, resumen y logs
            tol: Tolerancia base de los deltas
            formato: 'csv' o 'json' para las tablas individuales
            excel: Generar además el libro Excel consolidado
            workers: Hilos para las filas de cada tabla
            solo: Subconjunto de tareas a ejecutar (todas si es None)
        """
        self.carpeta_salida = Path(carpeta_salida)
        self.carpeta_salida.mkdir(parents=True, exist_ok=True)
        self.tol = tol
        self.formato = formato
        self.excel = excel
        self.workers = workers
        self.consolidator = TableConsolidator()

        self.tareas: Dict[str, Callable[..., List[TableRow]]] = {**TABLE_BUILDERS, **VERIFICATION_BUILDERS}
        if solo:
            desconocidas = sorted(set(solo) - set(self.tareas))
            if desconocidas:
                raise ValueError(f"Tareas desconocidas: {', '.join(desconocidas)}")
            self.tareas = {nombre: self.tareas[nombre] for nombre in solo}

        self._configurar_logging()

        self.stats = {
            'total_tareas': len(self.tareas),
            'tareas_exitosas': 0,
            'tareas_con_error': 0,
            'tareas_fuera_de_tolerancia': 0,
            'total_filas': 0,
        }
        self.errores: Dict[str, str] = {}

    def _configurar_logging(self):
        """Configura el sistema de logging"""
        log_dir = self.carpeta_salida / LOGS_SUBFOLDER
        log_dir.mkdir(exist_ok=True)

        timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')
        log_file = log_dir / f'verificacion_{timestamp}.log'

        logging.basicConfig(
            level=getattr(logging, LOG_LEVEL.upper(), logging.INFO),
            format='%(asctime)s - %(levelname)s - %(message)s',
            handlers=[
                logging.FileHandler(log_file, encoding='utf-8'),
                logging.StreamHandler(sys.stdout)
            ],
            force=True
        )

        self.logger = logging.getLogger(__name__)
        self.logger.info("Iniciando verificación completa")
        self.logger.info(f"Carpeta de salida: {self.carpeta_salida}")
        self.logger.info(f"Tolerancia base: {self.tol:g}")

    def procesar_tarea(self, nombre: str) -> Tuple[bool, List[TableRow]]:
        """
        Ejecuta una tabla o verificación y escribe su archivo

        Args:
            nombre: Nombre de la tarea

        Returns:
            (exito, filas); exito es False si la tarea lanzó una excepción
        """
        self.logger.info(f"Procesando: {nombre}")
        try:
            rows = self.tareas[nombre](tol=self.tol, workers=self.workers)
        except (ZsqmError, ArithmeticError, ValueError) as e:
            self.logger.error(f"✗ Error en {nombre}: {str(e)}")
            self.errores[nombre] = str(e)
            self.stats['tareas_con_error'] += 1
            return False, []

        write_records(rows, self.carpeta_salida / f'{nombre}.{self.formato}', self.formato)
        self.consolidator.agregar_tabla(nombre, rows)
        self.stats['tareas_exitosas'] += 1
        self.stats['total_filas'] += len(rows)

        fallos = [row for row in rows if not row.ok]
        if fallos:
            self.stats['tareas_fuera_de_tolerancia'] += 1
            for row in fallos:
                self.logger.warning(f"✗ {nombre}: {row.grupo}/{row.cantidad} delta = {row.delta:.3e}")
        else:
            self.logger.info(f"✓ {nombre}: {len(rows)} filas dentro de tolerancia")
        return True, rows

    def procesar_todos(self) -> int:
        """
        Ejecuta todas las tareas en orden fijo

        Returns:
            Código de salida: 0 todo correcto, 2 deltas fuera de tolerancia, 1 errores
        """
        if VERBOSE:
            print("\n" + "=" * 80)
            print("  VERIFICACIÓN COMPLETA ZSQM")
            print("  Reproducción de tablas y verificaciones numéricas")
            print("=" * 80 + "\n")

        resultados = {}
        for nombre in tqdm(list(self.tareas), desc="Progreso", unit="tabla", disable=not VERBOSE):
            resultados[nombre] = self.procesar_tarea(nombre)

        self._generar_reportes_finales(resultados)
        if VERBOSE:
            self._mostrar_resumen()

        if self.stats['tareas_con_error']:
            return EXIT_ERROR
        if not all(all_ok(rows) for _, rows in resultados.values()):
            return EXIT_DELTAS
        return EXIT_OK

    def _generar_reportes_finales(self, resultados: Dict[str, Tuple[bool, List[TableRow]]]):
        """Escribe el resumen JSON y, si se pidió, el libro Excel"""
        timestamp = datetime.now().strftime('%Y%m%d_%H%M%S')

        ruta_excel = None
        if self.excel and self.consolidator.tablas:
            try:
                ruta_excel = self.consolidator.generar_excel_consolidado(
                    self.carpeta_salida / f'verificacion_consolidada_{timestamp}.xlsx')
            except (OSError, ValueError) as e:
                self.logger.error(f"✗ Error generando el libro Excel: {str(e)}")

        resumen = {
            'fecha_verificacion': datetime.now().isoformat(),
            'carpeta_salida': str(self.carpeta_salida),
            'tolerancia': self.tol,
            'estadisticas_procesamiento': self.stats,
            'estadisticas_tablas': self.consolidator.obtener_estadisticas(),
            'tareas': {
                nombre: {
                    'exito': exito,
                    'dentro_de_tolerancia': exito and all_ok(rows),
                    'error': self.errores.get(nombre),
                }
                for nombre, (exito, rows) in resultados.items()
            },
            'archivos_salida': {
                'tablas': [str(self.carpeta_salida / f'{n}.{self.formato}') for n, (ok, _) in resultados.items() if ok],
                'excel': ruta_excel,
            },
        }
        ruta_resumen = write_json(resumen, self.carpeta_salida / f'resumen_verificacion_{timestamp}.json')
        self.logger.info(f"Resumen: {ruta_resumen}")

    def _mostrar_resumen(self):
        """Muestra un resumen de la verificación en la consola"""
        print("\n" + "=" * 80)
        print("  RESUMEN DE VERIFICACIÓN")
        print("=" * 80)
        print(f"  Total de tareas:                    {self.stats['total_tareas']}")
        print(f"  Tareas exitosas:                    {self.stats['tareas_exitosas']} ✓")
        print(f"  Tareas con errores:                 {self.stats['tareas_con_error']} ✗")
        print(f"  Tareas fuera de tolerancia:         {self.stats['tareas_fuera_de_tolerancia']}")
        print(f"  Filas comparadas:                   {self.stats['total_filas']}")
        print("=" * 80 + "\n")


def main():
    """Ejecuta la verificación completa con la configuración por defecto"""
    processor = BatchProcessor()
    try:
        sys.exit(processor.procesar_todos())
    except KeyboardInterrupt:
        print("\n\n⚠ Verificación interrumpida por el usuario")
        sys.exit(EXIT_ERROR)


if __name__ == '__main__':
    main()
