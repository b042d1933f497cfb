"""
Entidades de dominio: familias de subconjuntos finitos de ℕ.

Los conjuntos finitos se representan como tuplas estrictamente crecientes
de enteros positivos.
"""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Iterable, List, Optional, Tuple

from src.domain.Errores import ErrorEstructura
from src.domain.entities.Ordinal import Ordinal

ConjuntoFinito = Tuple[int, ...]


def normalizar_conjunto(elementos: Iterable[int]) -> ConjuntoFinito:
    """
    Convierte a tupla estrictamente creciente de enteros positivos.

    Raises:
        ErrorEstructura: Si hay elementos no positivos o repetidos
    """
    valores = tuple(int(e) for e in elementos)
    if any(v < 1 for v in valores):
        raise ErrorEstructura(f"Los elementos deben ser enteros positivos: {valores}")
    ordenados = tuple(sorted(valores))
    if len(set(ordenados)) != len(ordenados):
        raise ErrorEstructura(f"Elementos repetidos: {valores}")
    return ordenados


class TipoFamilia(Enum):
    """Nodos de una expresión de familia."""
    S0 = "S0"
    SCHREIER = "S"
    A_K = "A"
    COMPOSICION = "[]"
    TOTAL = "S(w1)"


@dataclass(frozen=True)
class ExpresionFamilia:
    """
    Expresión sobre {S0, S_ξ, A_k, F[G]} y la constante S_{ω₁}.

    Attributes:
        tipo: Clase de nodo
        xi: Ordinal de S_ξ
        k: Cota de A_k
        externa: F en F[G]
        interna: G en F[G]
    """
    tipo: TipoFamilia
    xi: Optional[Ordinal] = None
    k: Optional[int] = None
    externa: Optional['ExpresionFamilia'] = None
    interna: Optional['ExpresionFamilia'] = None

    PROFUNDIDAD_MAXIMA = 16

    def __post_init__(self):
        """Valida los campos requeridos por cada tipo."""
        if self.tipo == TipoFamilia.SCHREIER and self.xi is None:
            raise ErrorEstructura("S_ξ requiere un ordinal")
        if self.tipo == TipoFamilia.A_K and (self.k is None or self.k < 1):
            raise ErrorEstructura("A_k requiere k >= 1")
        if self.tipo == TipoFamilia.COMPOSICION:
            if self.externa is None or self.interna is None:
                raise ErrorEstructura("F[G] requiere ambas familias")
            if self.profundidad > self.PROFUNDIDAD_MAXIMA:
                raise ErrorEstructura("Expresión de familia demasiado profunda")

    @classmethod
    def s0(cls) -> 'ExpresionFamilia':
        return cls(TipoFamilia.S0)

    @classmethod
    def schreier(cls, xi) -> 'ExpresionFamilia':
        if isinstance(xi, int):
            xi = Ordinal.finito(xi)
        return cls(TipoFamilia.SCHREIER, xi=xi)

    @classmethod
    def a(cls, k: int) -> 'ExpresionFamilia':
        return cls(TipoFamilia.A_K, k=k)

    @classmethod
    def componer(cls, externa: 'ExpresionFamilia', interna: 'ExpresionFamilia') -> 'ExpresionFamilia':
        return cls(TipoFamilia.COMPOSICION, externa=externa, interna=interna)

    @classmethod
    def total(cls) -> 'ExpresionFamilia':
        """S_{ω₁}: todos los subconjuntos finitos."""
        return cls(TipoFamilia.TOTAL)

    @property
    def profundidad(self) -> int:
        if self.tipo != TipoFamilia.COMPOSICION:
            return 1
        return 1 + max(self.externa.profundidad, self.interna.profundidad)

    def __str__(self) -> str:
        if self.tipo == TipoFamilia.S0:
            return "S0"
        if self.tipo == TipoFamilia.SCHREIER:
            return f"S({self.xi})"
        if self.tipo == TipoFamilia.A_K:
            return f"A({self.k})"
        if self.tipo == TipoFamilia.TOTAL:
            return "S(w1)"
        return f"{self.externa}[{self.interna}]"


@dataclass(frozen=True)
class FamiliaRestringida:
    """
    Miembros de una familia contenidos en {1..n}.

    Attributes:
        expresion: Familia de origen
        n: Cota del universo
        miembros: Conjuntos miembros (tuplas crecientes)
    """
    expresion: ExpresionFamilia
    n: int
    miembros: FrozenSet[ConjuntoFinito]

    def __post_init__(self):
        if self.n < 1:
            raise ErrorEstructura("La restricción requiere n >= 1")
        for miembro in self.miembros:
            if miembro and miembro[-1] > self.n:
                raise ErrorEstructura(f"{miembro} no está contenido en {{1..{self.n}}}")

    def __contains__(self, conjunto) -> bool:
        return tuple(conjunto) in self.miembros

    def __len__(self) -> int:
        return len(self.miembros)

    def ordenados(self) -> List[ConjuntoFinito]:
        """Miembros ordenados por tamaño y luego lexicográficamente."""
        return sorted(self.miembros, key=lambda e: (len(e), e))

    def to_dict(self) -> dict:
        return {
            'familia': str(self.expresion),
            'n': self.n,
            'miembros': [list(e) for e in self.ordenados()],
        }
