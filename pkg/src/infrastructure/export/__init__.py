"""
Exportación de resultados a texto, JSON y Excel.
"""
