"""
Configuración del sistema de verificación zsqm
"""

import os
from dotenv import load_dotenv

load_dotenv()

# ==============================
# CONFIGURACIÓN DE RENDIMIENTO
# ==============================

# Hilos máximos para filas de tablas y cajas de ceros
MAX_THREADS = max(1, int(os.getenv('ZSQM_THREADS', '1')))

# ==============================
# CONFIGURACIÓN NUMÉRICA
# ==============================

# Tolerancia absoluta de los deltas contra valores de referencia
TABLE_TOLERANCE = float(os.getenv('ZSQM_TABLE_TOL', '1e-3'))

# Puntos de malla por defecto del eigensolver
GRID_POINTS = int(os.getenv('ZSQM_N_POINTS', '4001'))

# Tolerancia de tanh-sinh
QUADRATURE_TOLERANCE = float(os.getenv('ZSQM_QUAD_TOL', '1e-12'))

# ==============================
# CONFIGURACIÓN DE SALIDA
# ==============================

# Formatos de archivo admitidos por los comandos
OUTPUT_FORMATS = ('csv', 'json')

# Dígitos significativos en CSV
CSV_FLOAT_FORMAT = '%.12g'

# ==============================
# CONFIGURACIÓN DE LOGGING
# ==============================

# Nivel de logging
LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')

# Mostrar resúmenes y barras de progreso
VERBOSE = os.getenv('VERBOSE', 'True').lower() == 'true'

# ==============================
# RUTAS
# ==============================

RESULTS_FOLDER = os.getenv('ZSQM_OUTPUT_DIR', 'resultados')
LOGS_SUBFOLDER = 'logs'
