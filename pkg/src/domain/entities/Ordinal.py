"""
Entidad de dominio: Ordinal

Ordinal menor que ε₀ en forma normal de Cantor.
"""

from dataclasses import dataclass
from functools import total_ordering
from typing import Optional, Tuple

from src.domain.Errores import ErrorOrdinal


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    """
    Ordinal inmutable en forma normal de Cantor (FNC).

    Attributes:
        terminos: Pares (exponente, coeficiente) con exponentes estrictamente
            decrecientes y coeficientes >= 1. La tupla vacía es el cero.
    """
    terminos: Tuple[Tuple['Ordinal', int], ...] = ()

    # Profundidad máxima de la torre de exponentes
    ALTURA_MAXIMA = 32

    def __post_init__(self):
        """Valida la forma normal y la altura de la torre."""
        terminos = tuple((e, int(c)) for e, c in self.terminos)
        for exponente, coeficiente in terminos:
            if not isinstance(exponente, Ordinal):
                raise ErrorOrdinal("Los exponentes deben ser ordinales")
            if coeficiente < 1:
                raise ErrorOrdinal(f"Coeficiente no positivo: {coeficiente}")
        for (e1, _), (e2, _) in zip(terminos, terminos[1:]):
            if not e2 < e1:
                raise ErrorOrdinal("Los exponentes deben ser estrictamente decrecientes")
        object.__setattr__(self, 'terminos', terminos)
        if self.altura > self.ALTURA_MAXIMA:
            raise ErrorOrdinal(
                f"Torre de exponentes de altura {self.altura} supera {self.ALTURA_MAXIMA}"
            )

    @classmethod
    def finito(cls, n: int) -> 'Ordinal':
        """Ordinal finito n."""
        if n < 0:
            raise ErrorOrdinal(f"No existe el ordinal {n}")
        if n == 0:
            return CERO
        return cls(((CERO, n),))

    @classmethod
    def omega(cls) -> 'Ordinal':
        return OMEGA

    @property
    def altura(self) -> int:
        """Profundidad de la torre: 0 para el cero, 1 para finitos."""
        if not self.terminos:
            return 0
        return 1 + max(e.altura for e, _ in self.terminos)

    @property
    def es_cero(self) -> bool:
        return not self.terminos

    @property
    def es_finito(self) -> bool:
        return all(e.es_cero for e, _ in self.terminos)

    @property
    def valor_finito(self) -> Optional[int]:
        """Valor entero si el ordinal es finito, None en otro caso."""
        if not self.es_finito:
            return None
        return self.terminos[0][1] if self.terminos else 0

    @property
    def grado(self) -> 'Ordinal':
        """Exponente del término principal (cero para el ordinal cero)."""
        return self.terminos[0][0] if self.terminos else CERO

    @property
    def es_potencia_omega(self) -> bool:
        return len(self.terminos) == 1 and self.terminos[0][1] == 1

    @staticmethod
    def comparar(a: 'Ordinal', b: 'Ordinal') -> int:
        """Compara dos ordinales: -1, 0 o 1."""
        for (ea, ca), (eb, cb) in zip(a.terminos, b.terminos):
            orden = Ordinal.comparar(ea, eb)
            if orden != 0:
                return orden
            if ca != cb:
                return -1 if ca < cb else 1
        if len(a.terminos) == len(b.terminos):
            return 0
        return -1 if len(a.terminos) < len(b.terminos) else 1

    def __lt__(self, otro: 'Ordinal') -> bool:
        if isinstance(otro, int):
            otro = Ordinal.finito(otro)
        if not isinstance(otro, Ordinal):
            return NotImplemented
        return Ordinal.comparar(self, otro) < 0

    def __str__(self) -> str:
        if not self.terminos:
            return "0"
        partes = []
        for exponente, coeficiente in self.terminos:
            if exponente.es_cero:
                partes.append(str(coeficiente))
                continue
            if exponente == UNO:
                base = "w"
            else:
                base = f"w^({exponente})"
            partes.append(base if coeficiente == 1 else f"{base}*{coeficiente}")
        return " + ".join(partes)

    def __repr__(self) -> str:
        return f"Ordinal({self})"


CERO = Ordinal()
UNO = Ordinal(((CERO, 1),))
OMEGA = Ordinal(((UNO, 1),))
