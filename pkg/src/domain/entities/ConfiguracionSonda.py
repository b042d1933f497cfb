"""
Entidad de dominio: ConfiguracionSonda

Parámetros de una sonda de profundidad sobre los árboles de índices.
"""

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Tuple

from src.domain.Errores import ErrorEstructura
from src.domain.entities.DescriptorNorma import DescriptorNorma, TipoDescriptor
from src.domain.entities.VectorFinito import VectorFinito


@dataclass(frozen=True)
class ConfiguracionSonda:
    """
    Configuración inmutable de una sonda.

    Attributes:
        base: Descriptor ℓ_p del sistema objetivo (e_i); su dimensión acota las cadenas
        constante: K ≥ 1, o None para el supremo sobre K
        profundidad_maxima: Longitud máxima de cadena explorada
        presupuesto: Máximo de nodos expandidos
        reserva: Vectores candidatos de la bola unidad (vacía = reserva por defecto)
        cierre_bloques: Agregar un nivel de bloques p-absolutamente convexos
    """
    base: DescriptorNorma
    constante: Optional[Fraction] = Fraction(1)
    profundidad_maxima: int = 6
    presupuesto: int = 10 ** 6
    reserva: Tuple[VectorFinito, ...] = ()
    cierre_bloques: bool = False

    def __post_init__(self):
        """Valida la base ℓ_p, la constante y los límites."""
        if self.base.tipo != TipoDescriptor.LP:
            raise ErrorEstructura(f"La base de la sonda debe ser un espacio lp, no {self.base}")
        if self.constante is not None:
            object.__setattr__(self, 'constante', Fraction(self.constante))
            if self.constante < 1:
                raise ErrorEstructura(f"La constante K debe ser >= 1: {self.constante}")
        if self.profundidad_maxima < 1:
            raise ErrorEstructura("La profundidad máxima debe ser positiva")
        if self.presupuesto < 1:
            raise ErrorEstructura("El presupuesto debe ser positivo")
        object.__setattr__(self, 'reserva', tuple(
            v if isinstance(v, VectorFinito) else VectorFinito.de(v) for v in self.reserva
        ))

    def con_constante(self, constante) -> 'ConfiguracionSonda':
        return replace(self, constante=constante)

    def to_dict(self) -> dict:
        return {
            'base': str(self.base),
            'constante': None if self.constante is None else str(self.constante),
            'profundidad_maxima': self.profundidad_maxima,
            'presupuesto': self.presupuesto,
            'reserva': [str(v) for v in self.reserva],
            'cierre_bloques': self.cierre_bloques,
        }
