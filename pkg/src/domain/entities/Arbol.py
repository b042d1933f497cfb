"""
Entidades de dominio: árboles de sucesiones finitas.

ArbolFinito es un conjunto finito de sucesiones cerrado por segmentos
iniciales (con o sin la raíz vacía); ArbolPerezoso describe árboles
posiblemente infinitos mediante predicados; Rango es el orden o(T).
"""

from dataclasses import dataclass, field
from typing import Any, Callable, FrozenSet, Iterable, List, Optional, Tuple, Union

from src.domain.Errores import ErrorEstructura
from src.domain.entities.Ordinal import Ordinal

Nodo = Tuple[Any, ...]

# Marca de ramificación infinita para ArbolPerezoso.hijos
RAMIFICACION_INFINITA = "infinita"


@dataclass(frozen=True)
class ArbolFinito:
    """
    Árbol finito de sucesiones.

    Attributes:
        nodos: Conjunto de sucesiones (tuplas) cerrado por segmentos iniciales
        con_raiz: True para un árbol (contiene ∅), False para un B-árbol
    """
    nodos: FrozenSet[Nodo]
    con_raiz: bool = True

    def __post_init__(self):
        """Normaliza a frozenset de tuplas y valida el cierre por prefijos."""
        nodos = frozenset(tuple(n) for n in self.nodos)
        object.__setattr__(self, 'nodos', nodos)
        if not self.con_raiz and () in nodos:
            raise ErrorEstructura("Un B-árbol no contiene la sucesión vacía")
        if self.con_raiz and nodos and () not in nodos:
            raise ErrorEstructura("Un árbol no vacío debe contener la sucesión vacía")
        for nodo in nodos:
            if len(nodo) > 1 and nodo[:-1] not in nodos:
                raise ErrorEstructura(f"El prefijo {nodo[:-1]} de {nodo} no está en el árbol")

    @classmethod
    def desde_secuencias(cls, secuencias: Iterable[Iterable[Any]],
                         con_raiz: Optional[bool] = None) -> 'ArbolFinito':
        """
        Construye un árbol desde una lista de sucesiones.

        Si con_raiz no se indica, el árbol tiene raíz sii la lista contiene ∅.
        """
        nodos = frozenset(tuple(s) for s in secuencias)
        if con_raiz is None:
            con_raiz = () in nodos
        return cls(nodos, con_raiz)

    @classmethod
    def vacio(cls, con_raiz: bool = True) -> 'ArbolFinito':
        return cls(frozenset(), con_raiz)

    @property
    def es_vacio(self) -> bool:
        return not self.nodos

    @property
    def universo(self) -> FrozenSet[Any]:
        """Etiquetas que aparecen en algún nodo."""
        return frozenset(etiqueta for nodo in self.nodos for etiqueta in nodo)

    def __contains__(self, nodo) -> bool:
        return tuple(nodo) in self.nodos

    def __len__(self) -> int:
        return len(self.nodos)

    def ordenados(self) -> List[Nodo]:
        """Nodos ordenados por longitud y luego por texto de las etiquetas."""
        return sorted(self.nodos, key=lambda n: (len(n), [str(e) for e in n]))


@dataclass(frozen=True)
class EtiquetaEstructura:
    """
    Construcción conocida que identifica un árbol perezoso.

    Attributes:
        tipo: 'arbol_minimo' o 'truncamiento'
        xi: Ordinal de la construcción
        cota: Cota de etiquetas del truncamiento (si aplica)
    """
    tipo: str
    xi: Ordinal
    cota: Optional[int] = None


@dataclass(frozen=True)
class ArbolPerezoso:
    """
    Árbol definido por un predicado de pertenencia cerrado por prefijos.

    Attributes:
        miembro: Decide si una sucesión pertenece al árbol
        hijos: Lista finita de etiquetas hijas de un nodo o RAMIFICACION_INFINITA
        etiqueta: Construcción conocida (opcional)
        con_raiz: Si el árbol contiene ∅
    """
    miembro: Callable[[Nodo], bool] = field(compare=False)
    hijos: Callable[[Nodo], Union[Tuple[Any, ...], str]] = field(compare=False)
    etiqueta: Optional[EtiquetaEstructura] = None
    con_raiz: bool = False


@dataclass(frozen=True)
class Rango:
    """
    Orden o(T) de un árbol.

    Attributes:
        valor: Ordinal, o None si el árbol está marcado como mal fundado
    """
    valor: Optional[Ordinal]

    @property
    def mal_fundado(self) -> bool:
        return self.valor is None

    def __str__(self) -> str:
        return "mal_fundado" if self.valor is None else str(self.valor)
