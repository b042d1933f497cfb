"""
Índices ordinales de operadores
"""
