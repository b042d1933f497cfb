"""
Aplicación - Línea de comandos y suites de verificación.
"""
