"""
Entidad de dominio: ReporteProfundidad

Hechos de profundidad certificados por una sonda de índices.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from src.domain.Errores import ErrorEstructura
from src.domain.entities.VectorFinito import VectorFinito


class RazonImposibilidad(Enum):
    """Origen de la cota de imposibilidad."""
    RANGO = "cota de rango"
    EXHAUSTIVA = "busqueda agotada"


@dataclass(frozen=True)
class ReporteProfundidad:
    """
    Profundidad con testigo y, si se conoce, profundidad imposible.

    Attributes:
        profundidad_testigo: Longitud de la cadena testigo
        cadena: Cadena testigo
        imposible_desde: Menor longitud sin cadenas (si se certificó)
        razon: Origen de la imposibilidad
        indice_finito: 1 + profundidad_testigo, sólo bajo la cota de rango
    """
    profundidad_testigo: int
    cadena: Tuple[VectorFinito, ...] = ()
    imposible_desde: Optional[int] = None
    razon: Optional[RazonImposibilidad] = None
    indice_finito: Optional[int] = None

    def __post_init__(self):
        """Valida la coherencia entre testigo, imposibilidad e índice."""
        if len(self.cadena) != self.profundidad_testigo:
            raise ErrorEstructura("La cadena testigo no tiene la profundidad reportada")
        if (self.imposible_desde is None) != (self.razon is None):
            raise ErrorEstructura("imposible_desde y razon van juntos")
        if self.imposible_desde is not None and self.imposible_desde <= self.profundidad_testigo:
            raise ErrorEstructura("imposible_desde debe superar la profundidad testigo")
        if self.indice_finito is not None:
            if self.razon != RazonImposibilidad.RANGO or self.indice_finito != 1 + self.profundidad_testigo:
                raise ErrorEstructura("El índice finito sólo vale bajo la cota de rango")

    def to_dict(self) -> dict:
        return {
            'profundidad_testigo': self.profundidad_testigo,
            'cadena': [str(v) for v in self.cadena],
            'imposible_desde': self.imposible_desde,
            'razon': self.razon.value if self.razon else None,
            'indice_finito': self.indice_finito,
        }
