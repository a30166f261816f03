"""
Excepciones del paquete zsqm
Toda falla numérica o de dominio hereda de ZsqmError para que la CLI
pueda traducirla a un código de salida
"""


class ZsqmError(Exception):
    """Error base del paquete"""


class DomainError(ZsqmError, ValueError):
    """Argumento fuera del dominio de evaluación"""


class PoleError(DomainError):
    """Evaluación exactamente en un polo (Γ en enteros no positivos, ζ en s = 1)"""


class WindowError(DomainError):
    """Ventana de cuadratura o de muestreo fuera de la región evaluable"""


class ConvergenceError(ZsqmError, ArithmeticError):
    """Cuadratura, refinamiento o iteración que no alcanzó la tolerancia"""


class GridTooNarrowError(ConvergenceError):
    """La función de onda no decae lo suficiente en los bordes de la malla"""


class ConditioningError(ConvergenceError):
    """Pivote de Cholesky de la matriz de Hankel por debajo del umbral"""


class WindingAmbiguityError(ConvergenceError):
    """El borde de una caja de conteo pasa demasiado cerca de un cero"""


class NoMinimumError(ConvergenceError):
    """El superpotencial no cambia de signo en la ventana de búsqueda"""
