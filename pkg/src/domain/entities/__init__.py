"""
Entidades de dominio.
"""

from src.domain.entities.Ordinal import Ordinal
from src.domain.entities.Arbol import ArbolFinito, ArbolPerezoso, Rango
from src.domain.entities.Familia import ExpresionFamilia, FamiliaRestringida
from src.domain.entities.Intervalo import Intervalo
from src.domain.entities.DescriptorNorma import DescriptorNorma
from src.domain.entities.VectorFinito import VectorFinito
from src.domain.entities.MatrizOperador import MatrizOperador

__all__ = [
    'Ordinal', 'ArbolFinito', 'ArbolPerezoso', 'Rango', 'ExpresionFamilia',
    'FamiliaRestringida', 'Intervalo', 'DescriptorNorma', 'VectorFinito', 'MatrizOperador',
]
