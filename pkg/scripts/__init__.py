"""
Scripts de zsqm
Módulos auxiliares para configuración, tablas de referencia, consolidación
de resultados, verificación por lotes y línea de comandos
"""
