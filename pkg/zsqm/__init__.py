"""
Paquete zsqm
Mecánica cuántica supersimétrica de potenciales tipo zeta: funciones especiales,
catálogo de prepotenciales, espectros, polinomios ortogonales y diagnósticos
de información sobre el estado base
"""

__version__ = "1.0.0"
