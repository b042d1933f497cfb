"""
Servicios de dominio: aritmética ordinal, árboles, familias, normas, dominación e índices.
"""
