"""
Entidad de dominio: DescriptorNorma

Descripción composicional de un espacio normado de dimensión finita.
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Tuple, Union

from src.domain.Errores import ErrorEstructura
from src.domain.entities.Ordinal import Ordinal

INFINITO = math.inf

Exponente = Union[Fraction, float]


def normalizar_exponente(p) -> Exponente:
    """
    Convierte un exponente a Fraction ≥ 1 o INFINITO.

    Raises:
        ErrorEstructura: Si el exponente es menor que 1
    """
    if isinstance(p, str) and p.strip().lower() in ('inf', 'infinito', '∞'):
        return INFINITO
    if isinstance(p, float) and math.isinf(p):
        return INFINITO
    valor = Fraction(str(p)) if isinstance(p, (str, float)) else Fraction(p)
    if valor < 1:
        raise ErrorEstructura(f"El exponente debe ser >= 1: {p}")
    return valor


def formatear_exponente(p: Exponente) -> str:
    return "inf" if p == INFINITO else str(p)


class TipoDescriptor(Enum):
    """Clases de espacios."""
    LP = "lp"
    SCHREIER = "schreier"
    X_XI_2 = "xxi2"
    Z_PQ = "z"
    CONVEXIFICACION = "conv"
    SUMA_DIRECTA = "dsum"
    SUMANTE = "summing"


@dataclass(frozen=True)
class DescriptorNorma:
    """
    Nodo de la descripción de un espacio.

    Attributes:
        tipo: Clase del espacio
        dim: Dimensión (Lp, Schreier, X_ξ,2, sumante)
        p: Exponente de Lp, Z_pq o de la convexificación
        q: Exponente externo de Z_pq
        xi: Ordinal de Schreier y X_ξ,2
        nodos: Nodos del árbol de Z_pq, en orden de coordenadas
        base: Espacio convexificado
        externo: Norma externa de la suma directa
        internos: Sumandos de la suma directa
        metadatos: Nota de truncamiento (opcional)
    """
    tipo: TipoDescriptor
    dim: int = 0
    p: Optional[Exponente] = None
    q: Optional[Exponente] = None
    xi: Optional[Ordinal] = None
    nodos: Tuple[Tuple[int, ...], ...] = ()
    base: Optional['DescriptorNorma'] = None
    externo: Optional['DescriptorNorma'] = None
    internos: Tuple['DescriptorNorma', ...] = ()
    metadatos: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        """Valida la consistencia de dimensiones y la forma de los nodos."""
        if self.tipo in (TipoDescriptor.LP, TipoDescriptor.SCHREIER,
                         TipoDescriptor.X_XI_2, TipoDescriptor.SUMANTE):
            if self.dim < 1:
                raise ErrorEstructura(f"Dimensión inválida: {self.dim}")
        if self.tipo == TipoDescriptor.Z_PQ:
            nodos = tuple(sorted(set(tuple(int(e) for e in n) for n in self.nodos)))
            if not nodos:
                raise ErrorEstructura("Z_pq requiere al menos un nodo")
            if any(e < 1 for n in nodos for e in n):
                raise ErrorEstructura("Las etiquetas de los nodos deben ser positivas")
            conjunto = set(nodos)
            for nodo in nodos:
                if len(nodo) > 1 and nodo[:-1] not in conjunto:
                    raise ErrorEstructura(f"Nodos no cerrados hacia abajo: falta {nodo[:-1]}")
            object.__setattr__(self, 'nodos', nodos)
        if self.tipo == TipoDescriptor.SUMA_DIRECTA:
            object.__setattr__(self, 'internos', tuple(self.internos))
            if self.externo is None or self.externo.dimension != len(self.internos):
                raise ErrorEstructura("La norma externa debe tener un sumando por coordenada")
        if self.tipo == TipoDescriptor.CONVEXIFICACION and self.base is None:
            raise ErrorEstructura("La convexificación requiere un espacio base")

    @classmethod
    def lp(cls, p, dim: int) -> 'DescriptorNorma':
        return cls(TipoDescriptor.LP, dim=dim, p=normalizar_exponente(p))

    @classmethod
    def schreier(cls, xi, dim: int) -> 'DescriptorNorma':
        return cls(TipoDescriptor.SCHREIER, dim=dim, xi=_ordinal(xi))

    @classmethod
    def x_xi_2(cls, xi, dim: int) -> 'DescriptorNorma':
        return cls(TipoDescriptor.X_XI_2, dim=dim, xi=_ordinal(xi))

    @classmethod
    def z(cls, p, q, nodos) -> 'DescriptorNorma':
        return cls(TipoDescriptor.Z_PQ, p=normalizar_exponente(p), q=normalizar_exponente(q),
                   nodos=tuple(tuple(n) for n in nodos))

    @classmethod
    def convexificacion(cls, base: 'DescriptorNorma', p) -> 'DescriptorNorma':
        return cls(TipoDescriptor.CONVEXIFICACION, p=normalizar_exponente(p), base=base)

    @classmethod
    def suma_directa(cls, externo: 'DescriptorNorma', internos, metadatos: Optional[str] = None) -> 'DescriptorNorma':
        return cls(TipoDescriptor.SUMA_DIRECTA, externo=externo, internos=tuple(internos),
                   metadatos=metadatos)

    @classmethod
    def sumante(cls, dim: int) -> 'DescriptorNorma':
        return cls(TipoDescriptor.SUMANTE, dim=dim)

    @property
    def dimension(self) -> int:
        """Dimensión total de coordenadas."""
        if self.tipo == TipoDescriptor.Z_PQ:
            return len(self.nodos)
        if self.tipo == TipoDescriptor.CONVEXIFICACION:
            return self.base.dimension
        if self.tipo == TipoDescriptor.SUMA_DIRECTA:
            return sum(d.dimension for d in self.internos)
        return self.dim

    def con_metadatos(self, metadatos: str) -> 'DescriptorNorma':
        return DescriptorNorma(self.tipo, self.dim, self.p, self.q, self.xi, self.nodos,
                               self.base, self.externo, self.internos, metadatos)

    def __str__(self) -> str:
        if self.tipo == TipoDescriptor.LP:
            return f"lp({formatear_exponente(self.p)},{self.dim})"
        if self.tipo == TipoDescriptor.SCHREIER:
            return f"schreier({self.xi},{self.dim})"
        if self.tipo == TipoDescriptor.X_XI_2:
            return f"xxi2({self.xi},{self.dim})"
        if self.tipo == TipoDescriptor.SUMANTE:
            return f"summing({self.dim})"
        if self.tipo == TipoDescriptor.Z_PQ:
            arbol = "[" + ",".join("[" + ",".join(map(str, n)) + "]" for n in self.nodos) + "]"
            return f"z({formatear_exponente(self.p)},{formatear_exponente(self.q)},{arbol})"
        if self.tipo == TipoDescriptor.CONVEXIFICACION:
            return f"conv({self.base},{formatear_exponente(self.p)})"
        internos = ",".join(str(d) for d in self.internos)
        return f"dsum({self.externo}; {internos})"


def _ordinal(xi) -> Ordinal:
    return xi if isinstance(xi, Ordinal) else Ordinal.finito(int(xi))
