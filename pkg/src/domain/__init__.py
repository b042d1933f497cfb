"""
Dominio - Entidades y servicios de ordinales, árboles, familias, normas e índices.
"""
