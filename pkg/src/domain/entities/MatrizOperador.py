"""
Entidad de dominio: MatrizOperador

Matriz racional de un operador entre dos espacios descritos.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from sympy import Matrix, Rational

from src.domain.Errores import ErrorDimension
from src.domain.entities.DescriptorNorma import DescriptorNorma
from src.domain.entities.VectorFinito import VectorFinito, a_fraccion


@dataclass(frozen=True)
class MatrizOperador:
    """
    Operador lineal X → Y en coordenadas.

    Attributes:
        entradas: Filas de la matriz (una por coordenada del codominio)
        dominio: Espacio de partida
        codominio: Espacio de llegada
    """
    entradas: Tuple[Tuple[Fraction, ...], ...]
    dominio: DescriptorNorma
    codominio: DescriptorNorma

    def __post_init__(self):
        """Normaliza las entradas y valida la forma contra los descriptores."""
        entradas = tuple(tuple(a_fraccion(a) for a in fila) for fila in self.entradas)
        object.__setattr__(self, 'entradas', entradas)
        filas, columnas = self.codominio.dimension, self.dominio.dimension
        if len(entradas) != filas or any(len(f) != columnas for f in entradas):
            raise ErrorDimension(
                f"La matriz debe ser {filas}x{columnas} para {self.dominio} → {self.codominio}"
            )

    @classmethod
    def identidad(cls, dominio: DescriptorNorma, codominio: DescriptorNorma = None) -> 'MatrizOperador':
        codominio = codominio or dominio
        n = dominio.dimension
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)),
                   dominio, codominio)

    @classmethod
    def cero(cls, dominio: DescriptorNorma, codominio: DescriptorNorma) -> 'MatrizOperador':
        return cls(tuple((Fraction(0),) * dominio.dimension for _ in range(codominio.dimension)),
                   dominio, codominio)

    @classmethod
    def diagonal(cls, valores, dominio: DescriptorNorma, codominio: DescriptorNorma = None) -> 'MatrizOperador':
        valores = [a_fraccion(v) for v in valores]
        n = len(valores)
        return cls(tuple(tuple(valores[i] if i == j else Fraction(0) for j in range(n))
                         for i in range(n)), dominio, codominio or dominio)

    @property
    def filas(self) -> int:
        return len(self.entradas)

    @property
    def columnas(self) -> int:
        return self.dominio.dimension

    def columna(self, j: int) -> VectorFinito:
        """Imagen del j-ésimo vector de la base (j desde 0)."""
        return VectorFinito(tuple(fila[j] for fila in self.entradas))

    def imagenes_base(self) -> List[VectorFinito]:
        return [self.columna(j) for j in range(self.columnas)]

    def aplicar(self, v: VectorFinito) -> VectorFinito:
        if len(v) != self.columnas:
            raise ErrorDimension(f"El vector tiene dimensión {len(v)}, se esperaba {self.columnas}")
        return VectorFinito(tuple(sum((a * x for a, x in zip(fila, v)), Fraction(0))
                                  for fila in self.entradas))

    def componer(self, otro: 'MatrizOperador') -> 'MatrizOperador':
        """self ∘ otro."""
        if otro.filas != self.columnas:
            raise ErrorDimension("Formas incompatibles para componer")
        columnas = [self.aplicar(v) for v in otro.imagenes_base()]
        entradas = tuple(tuple(c[i] for c in columnas) for i in range(self.filas))
        return MatrizOperador(entradas, otro.dominio, self.codominio)

    def restar(self, otro: 'MatrizOperador') -> 'MatrizOperador':
        if self.filas != otro.filas or self.columnas != otro.columnas:
            raise ErrorDimension("Formas incompatibles para restar")
        entradas = tuple(tuple(a - b for a, b in zip(f, g)) for f, g in zip(self.entradas, otro.entradas))
        return MatrizOperador(entradas, self.dominio, self.codominio)

    def escalar(self, factor) -> 'MatrizOperador':
        factor = a_fraccion(factor)
        return MatrizOperador(tuple(tuple(factor * a for a in f) for f in self.entradas),
                              self.dominio, self.codominio)

    def a_sympy(self) -> Matrix:
        return Matrix([[Rational(a.numerator, a.denominator) for a in fila] for fila in self.entradas])

    @property
    def rango(self) -> int:
        if self.filas == 0 or self.columnas == 0:
            return 0
        return int(self.a_sympy().rank())

    def to_dict(self) -> dict:
        return {
            'entradas': [[str(a) for a in fila] for fila in self.entradas],
            'dominio': str(self.dominio),
            'codominio': str(self.codominio),
        }


@dataclass(frozen=True)
class OperadorConvexificado:
    """
    Resultado de convexificar un operador: cotas entrada a entrada.

    Las entradas de |a|^{1/t} que no son racionales quedan encerradas entre
    la matriz inferior y la superior.

    Attributes:
        inferior: Entradas por defecto
        superior: Entradas por exceso
    """
    inferior: MatrizOperador
    superior: MatrizOperador

    @property
    def exacto(self) -> bool:
        return self.inferior.entradas == self.superior.entradas

    @property
    def matriz(self) -> MatrizOperador:
        """Matriz exacta; sólo cuando todas las raíces son racionales."""
        if not self.exacto:
            raise ValueError("La convexificación no es exacta")
        return self.inferior
