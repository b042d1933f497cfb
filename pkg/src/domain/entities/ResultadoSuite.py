"""
Entidad de dominio: ResultadoSuite

Resultado de una suite de verificación.
"""

from dataclasses import dataclass
from typing import Dict


@dataclass(frozen=True)
class ResultadoSuite:
    """
    Fila de la tabla de verificación.

    Attributes:
        numero: Número de la suite (1-13)
        nombre: Nombre corto
        aprobado: La suite pasó
        detalle: Resumen o primer contraejemplo
        segundos: Duración
    """
    numero: int
    nombre: str
    aprobado: bool
    detalle: str
    segundos: float

    def to_fila(self) -> Dict:
        return {
            'suite': self.numero,
            'nombre': self.nombre,
            'resultado': 'PASS' if self.aprobado else 'FAIL',
            'detalle': self.detalle,
            'tiempo_s': round(self.segundos, 3),
        }
