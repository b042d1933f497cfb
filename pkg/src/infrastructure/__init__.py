"""
Infraestructura - Lectores de gramáticas y archivos, registro y exportación.
"""
