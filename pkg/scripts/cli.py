"""
Interfaz de Línea de Comandos
Reproduce las tablas como archivos CSV/JSON y expone las operaciones de zsqm
(ceros, series de figuras, polinomios, espectros, desarrollos y verificación)

Códigos de salida: 0 correcto, 1 error numérico o interrupción,
2 deltas fuera de tolerancia, 3 error de uso o de dominio.
"""

import sys
import json
import logging
import argparse
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from scripts.config import GRID_POINTS, LOG_LEVEL, MAX_THREADS, OUTPUT_FORMATS, RESULTS_FOLDER, TABLE_TOLERANCE
from scripts import reference_tables
from scripts.reference_tables import TABLE_BUILDERS, VERIFICATION_BUILDERS, TableRow, all_ok
from scripts.table_consolidator import write_json, write_records
from zsqm import analysis, spectral
from zsqm.errors import DomainError, ZsqmError
from zsqm.potentials import Family, PotentialSpec

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_DELTAS = 2
EXIT_USAGE = 3

ZERO_FAMILIES = ('xi', 'zeta', 'morse', 'riemann1', 'xi1')
ZERO_COLUMNS = ['p', 'residuo', 'iteraciones', 'metodo']
ORTHOPOLY_WEIGHTS = 'riemann:<α> | matrix | xi2m | gauss2m'

# Parámetros por comando con sus valores por defecto
COMMAND_PARAMS: Dict[str, Dict[str, Any]] = {
    'table': {'name': None, 'A': reference_tables.MORSE_TABLE_A},
    'zeros': {'family': 'xi', 'A': 0.5, 'pmin': 0.0, 'pmax': 30.0},
    'plotdata': {'what': 'potential', 'family': 'riemann1', 'A': None, 'range': None, 'n': 1001},
    'orthopoly': {'weight': 'riemann:1', 'kmax': 3},
    'spectrum': {'family': 'riemann1', 'A': None, 'T': 1.0, 'k': 5, 'n_points': GRID_POINTS},
    'expand': {'family': 'xi1', 'A': None, 'order': 8},
    'verify-all': {'excel': False, 'only': None},
}
COMMON_DEFAULTS: Dict[str, Any] = {'output': None, 'format': 'csv', 'tol': TABLE_TOLERANCE, 'threads': MAX_THREADS}


class UsageError(ZsqmError):
    """Banderas o archivo de configuración inválidos"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ==============================
# CONFIGURACIÓN DE EJECUCIÓN
# ==============================

@dataclass
class RunConfig:
    """
    Parámetros de un comando: defectos ← archivo --config ← banderas

    Las claves desconocidas del archivo de configuración son un error de uso.
    """
    command: str
    params: Dict[str, Any] = field(default_factory=dict)
    output: Optional[Path] = None
    format: str = 'csv'
    tol: float = TABLE_TOLERANCE
    threads: int = MAX_THREADS

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'RunConfig':
        command = args.comando
        allowed = COMMAND_PARAMS[command]
        merged = {**COMMON_DEFAULTS, **allowed}

        if args.config:
            merged.update(load_config_file(args.config, set(allowed) | set(COMMON_DEFAULTS)))
        for key in merged:
            value = getattr(args, key, None)
            if value is not None:
                merged[key] = value

        if merged['format'] not in OUTPUT_FORMATS:
            raise UsageError(f"Formato no soportado: {merged['format']}")
        if not merged['tol'] > 0.0:
            raise UsageError("--tol debe ser positiva")
        return cls(
            command=command,
            params={key: merged[key] for key in allowed},
            output=Path(merged['output']) if merged['output'] else None,
            format=merged['format'],
            tol=float(merged['tol']),
            threads=max(1, int(merged['threads'])),
        )

    def output_path(self, stem: str) -> Path:
        return self.output or Path(RESULTS_FOLDER) / f'{stem}.{self.format}'


def load_config_file(ruta: str, allowed: set) -> Dict[str, Any]:
    """Lee el JSON de configuración y rechaza claves desconocidas"""
    try:
        with open(ruta, 'r', encoding='utf-8') as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"No se pudo leer {ruta}: {e}")
    if not isinstance(data, dict):
        raise UsageError(f"{ruta} debe contener un objeto JSON")
    unknown = sorted(set(data) - allowed)
    if unknown:
        raise UsageError(f"Claves desconocidas en {ruta}: {', '.join(unknown)}")
    return data


def _spec(params: Dict[str, Any]) -> PotentialSpec:
    try:
        family = Family(params['family'])
    except ValueError:
        raise UsageError(f"Familia desconocida: {params['family']}")
    return PotentialSpec(family, params.get('A'), T=params.get('T', 1.0))


def _parse_range(text: Optional[str]):
    if text is None:
        return None
    if isinstance(text, (list, tuple)):
        lo, hi = text
        return float(lo), float(hi)
    try:
        lo, hi = (float(v) for v in str(text).split(':'))
    except ValueError:
        raise UsageError(f"Rango inválido '{text}' (formato lo:hi)")
    return lo, hi


def _exit_for(rows: Sequence[TableRow]) -> int:
    return EXIT_OK if all_ok(rows) else EXIT_DELTAS


def _log_failures(rows: Sequence[TableRow]):
    for row in rows:
        if not row.ok:
            logger.warning(f"✗ {row.grupo}/{row.cantidad}: calculado {row.calculado:.9g}, "
                           f"referencia {row.referencia:.9g}")


# ==============================
# COMANDOS
# ==============================

def cmd_table(config: RunConfig) -> int:
    """Tabla comparativa con valores calculados, de referencia y deltas"""
    name = config.params['name']
    builder = TABLE_BUILDERS.get(name)
    if builder is None:
        raise UsageError(f"Tabla desconocida: {name}")
    kwargs = {'tol': config.tol, 'workers': config.threads}
    if name == 'morse_levels':
        kwargs['A'] = float(config.params['A'])
    rows = builder(**kwargs)
    ruta = write_records(rows, config.output_path(name), config.format)
    _log_failures(rows)
    logger.info(f"✓ Tabla {name}: {len(rows)} filas en {ruta}")
    return _exit_for(rows)


def cmd_zeros(config: RunConfig) -> int:
    """Nodos de ψ̃₀ en p ∈ [pmin, pmax]; fuera de la línea crítica informa el mínimo de |η|"""
    params = config.params
    family, A = params['family'], float(params['A'])
    if family not in ZERO_FAMILIES:
        raise UsageError(f"Familia sin buscador de ceros: {family}")
    p_range = (float(params['pmin']), float(params['pmax']))
    records = analysis.find_momentum_zeros(family, A, p_range, workers=config.threads)

    scan = None
    if family in ('zeta', 'riemann1') and A != 0.5 and 0.0 < A < 1.0:
        scan = analysis.node_scan_off_critical(A)
        logger.info(f"Mínimo de |Γη| cerca de las ordenadas de ζ: {scan.min_abs:.6e} "
                    f"(relativo {scan.min_relative:.6e}; |η| = {scan.min_eta:.6e} en p = {scan.p_at_min:.6f})")

    ruta = config.output_path(f'zeros_{family}')
    if config.format == 'json':
        payload = {'familia': family, 'A': A, 'rango': list(p_range), 'ceros': [r.to_dict() for r in records]}
        if scan is not None:
            payload['barrido'] = {'min_abs': scan.min_abs, 'min_relativo': scan.min_relative,
                                  'min_eta': scan.min_eta, 'p_min': scan.p_at_min}
        write_json(payload, ruta)
    else:
        write_records(records, ruta, 'csv', columns=ZERO_COLUMNS)

    rows = reference_tables.zero_rows(family, A, p_range, records)
    _log_failures(rows)
    return _exit_for(rows)


def cmd_plotdata(config: RunConfig) -> int:
    """Serie de dos columnas para una figura"""
    params = config.params
    what = params['what']
    if what not in analysis.PLOT_KINDS:
        raise UsageError(f"Serie desconocida: {what}")
    spec = _spec(params)
    grid, values = analysis.plot_series(spec, what, _parse_range(params['range']), int(params['n']))
    abscissa = 'p' if what in ('momentum', 'logmomentum') else 'x'
    records = [{abscissa: float(a), 'valor': float(v)} for a, v in zip(grid, values)]
    ruta = write_records(records, config.output_path(f'plot_{what}_{spec.family.value}'), config.format)
    logger.info(f"✓ {len(records)} puntos de {what} para {spec.label} en {ruta}")
    return EXIT_OK


def cmd_orthopoly(config: RunConfig) -> int:
    """Polinomios, recurrencia y normas de un peso, con deltas donde hay referencia"""
    weight, k_max = config.params['weight'], int(config.params['kmax'])
    if not (weight.startswith('riemann:') or weight in ('matrix', 'xi2m', 'gauss2m')):
        raise UsageError(f"Peso desconocido: {weight} (use {ORTHOPOLY_WEIGHTS})")
    data, rows = reference_tables.orthopoly_rows(weight, k_max, config.tol)
    ruta = config.output_path(f"orthopoly_{weight.replace(':', '')}")
    if config.format == 'json':
        write_json({'peso': weight, 'kmax': k_max, **data, 'comparacion': [r.to_dict() for r in rows]}, ruta)
    else:
        records = [{'polinomio': f'R{n}', 'grado': k, 'coeficiente': c}
                   for n, coeffs in enumerate(data['polinomios']) for k, c in enumerate(coeffs)]
        write_records(records, ruta, 'csv')
    _log_failures(rows)
    return _exit_for(rows)


def cmd_spectrum(config: RunConfig) -> int:
    """k niveles más bajos de H₋"""
    params = config.params
    spec = _spec(params)
    grid = spectral.default_grid(spec, int(params['n_points']))
    result = spectral.solve_spectrum(spec, grid, k=int(params['k']), workers=config.threads)
    rows = reference_tables.spectrum_rows(spec, result.eigenvalues)
    ruta = config.output_path(f'spectrum_{spec.family.value}')
    if config.format == 'json':
        write_json({**result.to_record(), 'comparacion': [r.to_dict() for r in rows]}, ruta)
    else:
        records = [{'n': n, 'E': float(e), 'ligado': bool(b)}
                   for n, (e, b) in enumerate(zip(result.eigenvalues, result.bound))]
        write_records(records, ruta, 'csv')
    _log_failures(rows)
    return _exit_for(rows)


def cmd_expand(config: RunConfig) -> int:
    """Coeficientes de V₀ alrededor de su mínimo"""
    params = config.params
    spec = _spec(params)
    x_min, coefficients = analysis.expand_about_minimum(spec, order=int(params['order']))
    rows = reference_tables.expansion_rows(spec, x_min, coefficients, config.tol)
    ruta = config.output_path(f'expand_{spec.family.value}')
    if config.format == 'json':
        write_json({'potencial': spec.label, 'x_min': x_min, 'coeficientes': [float(c) for c in coefficients],
                    'comparacion': [r.to_dict() for r in rows]}, ruta)
    else:
        write_records([{'k': k, 'c': float(c)} for k, c in enumerate(coefficients)], ruta, 'csv')
    _log_failures(rows)
    return _exit_for(rows)


def cmd_verify_all(config: RunConfig) -> int:
    """Todas las tablas y verificaciones, con resumen JSON y libro Excel opcional"""
    from scripts.batch_processor import BatchProcessor

    only = config.params['only']
    if isinstance(only, str):
        only = [name.strip() for name in only.split(',') if name.strip()]
    try:
        processor = BatchProcessor(
            carpeta_salida=str(config.output or RESULTS_FOLDER),
            tol=config.tol,
            formato=config.format,
            excel=bool(config.params['excel']),
            workers=config.threads,
            solo=only,
        )
    except ValueError as e:
        raise UsageError(str(e))
    return processor.procesar_todos()


COMMANDS = {
    'table': cmd_table,
    'zeros': cmd_zeros,
    'plotdata': cmd_plotdata,
    'orthopoly': cmd_orthopoly,
    'spectrum': cmd_spectrum,
    'expand': cmd_expand,
    'verify-all': cmd_verify_all,
}


# ==============================
# PARSER
# ==============================

EPILOG = """
Ejemplos de uso:
  # Niveles de Morse (A = 5) con deltas contra la referencia
  python app.py table morse_levels --A 5

  # Entropías de Shannon en JSON
  python app.py table shannon --format json

  # Ceros de ψ̃₀ para la familia Xi hasta p = 30
  python app.py zeros --family xi --pmax 30

  # Serie |ψ̃₀(p)| de Riemann I
  python app.py plotdata --what momentum --family riemann1 --A 0.5 --range 0:30 --n 3000

  # Polinomios de Gram-Schmidt del peso de Riemann (α = 1)
  python app.py orthopoly --weight riemann:1 --kmax 3

  # Verificación completa con libro Excel
  python app.py verify-all --excel
"""


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog='zsqm',
        description='Mecánica cuántica supersimétrica de potenciales tipo zeta',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=EPILOG
    )
    parser.add_argument('--log-level', default=LOG_LEVEL, help=f'Nivel de logging (default: {LOG_LEVEL})')

    common = _Parser(add_help=False)
    common.add_argument('--output', type=str, help='Archivo de salida (carpeta para verify-all)')
    common.add_argument('--format', choices=OUTPUT_FORMATS, help='Formato de salida (default: csv)')
    common.add_argument('--config', type=str, help='Archivo JSON con parámetros del comando')
    common.add_argument('--tol', type=float, help=f'Tolerancia base de los deltas (default: {TABLE_TOLERANCE:g})')
    common.add_argument('--threads', type=int, help=f'Hilos máximos (default: {MAX_THREADS})')

    sub = parser.add_subparsers(dest='comando', required=True, parser_class=_Parser)

    p = sub.add_parser('table', parents=[common], help='Reproduce una tabla de referencia')
    p.add_argument('name', nargs='?', choices=sorted(TABLE_BUILDERS))
    p.add_argument('--A', type=float, help='Parámetro A de morse_levels (default: 5)')

    p = sub.add_parser('zeros', parents=[common], help='Nodos de ψ̃₀ en momentos')
    p.add_argument('--family', choices=ZERO_FAMILIES)
    p.add_argument('--A', type=float)
    p.add_argument('--pmin', type=float)
    p.add_argument('--pmax', type=float)

    p = sub.add_parser('plotdata', parents=[common], help='Series de dos columnas para figuras')
    p.add_argument('--what', choices=analysis.PLOT_KINDS)
    p.add_argument('--family', choices=[f.value for f in Family])
    p.add_argument('--A', type=float)
    p.add_argument('--range', type=str, help='lo:hi')
    p.add_argument('--n', type=int)

    p = sub.add_parser('orthopoly', parents=[common], help='Polinomios ortogonales y biortogonales')
    p.add_argument('--weight', type=str, help=ORTHOPOLY_WEIGHTS)
    p.add_argument('--kmax', type=int)

    p = sub.add_parser('spectrum', parents=[common], help='Espectro de H₋ en malla')
    p.add_argument('--family', choices=[f.value for f in Family])
    p.add_argument('--A', type=float)
    p.add_argument('--T', type=float)
    p.add_argument('--k', type=int)
    p.add_argument('--n-points', dest='n_points', type=int)

    p = sub.add_parser('expand', parents=[common], help='Desarrollo de V₀ alrededor del mínimo')
    p.add_argument('--family', choices=[f.value for f in Family])
    p.add_argument('--A', type=float)
    p.add_argument('--order', type=int)

    p = sub.add_parser('verify-all', parents=[common], help='Todas las tablas y verificaciones')
    p.add_argument('--excel', action='store_true', default=None, help='Generar libro Excel consolidado')
    p.add_argument('--only', type=str,
                   help=f"Tareas separadas por comas ({', '.join(list(TABLE_BUILDERS) + list(VERIFICATION_BUILDERS))})")
    return parser


def _configure_logging(level: str):
    logging.basicConfig(
        level=getattr(logging, str(level).upper(), logging.INFO),
        format='%(asctime)s - %(levelname)s - %(message)s',
        handlers=[logging.StreamHandler(sys.stderr)]
    )


def run(argv: Optional[List[str]] = None) -> int:
    """Analiza argumentos y ejecuta el comando; las excepciones se propagan"""
    args = build_parser().parse_args(argv)
    if args.comando != 'verify-all':
        _configure_logging(args.log_level)
    config = RunConfig.from_args(args)
    if config.command == 'table' and config.params['name'] is None:
        raise UsageError(f"Falta el nombre de la tabla ({', '.join(sorted(TABLE_BUILDERS))})")
    return COMMANDS[config.command](config)


def main(argv: Optional[List[str]] = None) -> int:
    """Punto de entrada: traduce excepciones a códigos de salida"""
    try:
        return run(argv)
    except (UsageError, DomainError) as e:
        print(f"✗ Error de uso: {str(e)}", file=sys.stderr)
        return EXIT_USAGE
    except (ZsqmError, ArithmeticError) as e:
        print(f"✗ Error numérico: {str(e)}", file=sys.stderr)
        return EXIT_ERROR
    except KeyboardInterrupt:
        print("\n\n⚠ Ejecución interrumpida por el usuario", file=sys.stderr)
        return EXIT_ERROR
