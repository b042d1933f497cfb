"""
Entidad de dominio: ReporteDominacion

Cotas certificadas de la menor constante K con (x_i) ≲_K (y_i).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from src.domain.Errores import ErrorEstructura


@dataclass(frozen=True)
class ReporteDominacion:
    """
    Reporte inmutable de una constante de dominación.

    Attributes:
        inferior: Cota inferior racional
        superior: Cota superior racional (None si es +∞)
        exacto: True si las cotas coinciden (o la constante es +∞)
        testigo: Coeficientes que alcanzan o casi alcanzan el supremo
        modo: 'exacto', 'cotas' o 'infinito'
    """
    inferior: Fraction
    superior: Optional[Fraction]
    exacto: bool
    testigo: Tuple[Fraction, ...]
    modo: str = 'exacto'

    def __post_init__(self):
        """Valida inferior ≤ superior y la coherencia de exacto."""
        object.__setattr__(self, 'inferior', Fraction(self.inferior))
        object.__setattr__(self, 'testigo', tuple(Fraction(a) for a in self.testigo))
        if self.inferior < 0:
            raise ErrorEstructura("La cota inferior debe ser no negativa")
        if self.superior is not None:
            object.__setattr__(self, 'superior', Fraction(self.superior))
            if self.superior < self.inferior:
                raise ErrorEstructura("La cota superior es menor que la inferior")
            if self.exacto and self.superior != self.inferior:
                raise ErrorEstructura("Un reporte exacto requiere cotas iguales")

    @classmethod
    def infinita(cls, testigo) -> 'ReporteDominacion':
        return cls(Fraction(0), None, True, tuple(testigo), 'infinito')

    @property
    def es_infinito(self) -> bool:
        return self.superior is None and self.modo == 'infinito'

    def cumple_cota(self, cota) -> Optional[bool]:
        """
        True si K ≤ cota está certificado, False si K > cota está
        certificado, None si las cotas no deciden.
        """
        cota = Fraction(cota)
        if self.es_infinito:
            return False
        if self.superior is not None and self.superior <= cota:
            return True
        if self.inferior > cota:
            return False
        return None

    def to_dict(self) -> dict:
        return {
            'inferior': str(self.inferior) if not self.es_infinito else 'inf',
            'superior': 'inf' if self.superior is None else str(self.superior),
            'exacto': self.exacto,
            'testigo': [str(a) for a in self.testigo],
            'modo': self.modo,
        }
