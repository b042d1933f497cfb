"""
Entidad de dominio: VectorFinito

Vector de coordenadas racionales exactas.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from src.domain.Errores import ErrorDimension


def a_fraccion(valor) -> Fraction:
    """Convierte enteros, fracciones o textos como '-2/3' a Fraction."""
    if isinstance(valor, Fraction):
        return valor
    if isinstance(valor, str):
        return Fraction(valor.strip())
    if isinstance(valor, float):
        return Fraction(str(valor))
    return Fraction(valor)


@dataclass(frozen=True)
class VectorFinito:
    """
    Vector inmutable con coordenadas racionales.

    Attributes:
        coordenadas: Coordenadas exactas
    """
    coordenadas: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, 'coordenadas', tuple(a_fraccion(c) for c in self.coordenadas))

    @classmethod
    def de(cls, valores: Iterable) -> 'VectorFinito':
        return cls(tuple(valores))

    @classmethod
    def cero(cls, dim: int) -> 'VectorFinito':
        return cls((Fraction(0),) * dim)

    @classmethod
    def base_canonica(cls, dim: int, i: int) -> 'VectorFinito':
        """e_i (i desde 0)."""
        return cls(tuple(Fraction(1 if j == i else 0) for j in range(dim)))

    def __len__(self) -> int:
        return len(self.coordenadas)

    def __getitem__(self, i):
        return self.coordenadas[i]

    def __iter__(self):
        return iter(self.coordenadas)

    def _verificar(self, otro: 'VectorFinito') -> None:
        if len(self) != len(otro):
            raise ErrorDimension(f"Dimensiones distintas: {len(self)} y {len(otro)}")

    def __add__(self, otro: 'VectorFinito') -> 'VectorFinito':
        self._verificar(otro)
        return VectorFinito(tuple(a + b for a, b in zip(self, otro)))

    def __sub__(self, otro: 'VectorFinito') -> 'VectorFinito':
        self._verificar(otro)
        return VectorFinito(tuple(a - b for a, b in zip(self, otro)))

    def escalar(self, factor) -> 'VectorFinito':
        factor = a_fraccion(factor)
        return VectorFinito(tuple(factor * c for c in self))

    def absoluto(self) -> 'VectorFinito':
        return VectorFinito(tuple(abs(c) for c in self))

    @property
    def es_cero(self) -> bool:
        return all(c == 0 for c in self)

    @property
    def soporte(self) -> Tuple[int, ...]:
        return tuple(i for i, c in enumerate(self) if c != 0)

    @classmethod
    def combinacion(cls, coeficientes: Iterable, vectores) -> 'VectorFinito':
        """Σ a_i x_i."""
        vectores = list(vectores)
        coeficientes = [a_fraccion(a) for a in coeficientes]
        if len(coeficientes) != len(vectores):
            raise ErrorDimension("Tantos coeficientes como vectores")
        if not vectores:
            raise ErrorDimension("Combinación vacía")
        dim = len(vectores[0])
        suma = [Fraction(0)] * dim
        for a, x in zip(coeficientes, vectores):
            if len(x) != dim:
                raise ErrorDimension("Vectores de dimensiones distintas")
            if a:
                for j, c in enumerate(x):
                    suma[j] += a * c
        return cls(tuple(suma))

    def __str__(self) -> str:
        return "[" + ", ".join(str(c) for c in self) + "]"
