"""
Servicio de dominio: CalculadorFamilias

Pertenencia a familias de Schreier y a sus composiciones, restricciones a
{1..n}, índices de Cantor-Bendixson y búsquedas de prefijos de Gasparis.
"""

from collections import defaultdict
from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from src.domain.Errores import ErrorOrdinal, ErrorPresupuesto
from src.domain.entities.Arbol import ArbolFinito
from src.domain.entities.Familia import (
    ConjuntoFinito, ExpresionFamilia, FamiliaRestringida, TipoFamilia, normalizar_conjunto
)
from src.domain.entities.Ordinal import Ordinal
from src.domain.services.AritmeticaOrdinal import AritmeticaOrdinal, ClaseOrdinal
from src.domain.services.CalculadorArboles import CalculadorArboles
from src.domain.services.ConfiguracionPresupuestos import ConfiguracionPresupuestos


class CalculadorFamilias:
    """Decisiones y enumeraciones sobre familias regulares."""

    # Entradas máximas de la caché de pertenencia a S_ξ
    TAMANO_CACHE = 2 ** 16

    # Pertenencia

    @classmethod
    def miembro_schreier(cls, xi: Ordinal, conjunto: Iterable[int]) -> bool:
        """
        Decide E ∈ S_ξ.

        S_0 son ∅ y los unitarios; S_{ξ+1} = S[S_ξ]; para ξ límite,
        E ∈ S_ξ sii E ∈ S_{ξ_n} para algún n ≤ min E.
        """
        if isinstance(xi, int):
            xi = Ordinal.finito(xi)
        return cls._miembro_schreier(xi, normalizar_conjunto(conjunto))

    @classmethod
    @lru_cache(maxsize=TAMANO_CACHE)
    def _miembro_schreier(cls, xi: Ordinal, conjunto: ConjuntoFinito) -> bool:
        if len(conjunto) <= 1:
            return True
        clasificacion = AritmeticaOrdinal.clasificar(xi)
        if clasificacion.clase == ClaseOrdinal.CERO:
            return False
        if clasificacion.clase == ClaseOrdinal.SUCESOR:
            # Bloques sucesivos maximales en S_η; S_η hereditaria hace óptima la voracidad
            predecesor = clasificacion.predecesor
            bloques = 0
            inicio = 0
            while inicio < len(conjunto):
                fin = inicio + 1
                while fin < len(conjunto) and cls._miembro_schreier(predecesor, conjunto[inicio:fin + 1]):
                    fin += 1
                bloques += 1
                if bloques > conjunto[0]:
                    return False
                inicio = fin
            return True
        return any(
            cls._miembro_schreier(AritmeticaOrdinal.sucesion_fundamental(xi, n), conjunto)
            for n in range(1, conjunto[0] + 1)
        )

    @classmethod
    def miembro(cls, familia: ExpresionFamilia, conjunto: Iterable[int]) -> bool:
        """Decide E ∈ F para cualquier expresión de familia."""
        return cls._miembro(familia, normalizar_conjunto(conjunto))

    @classmethod
    def _miembro(cls, familia: ExpresionFamilia, conjunto: ConjuntoFinito) -> bool:
        if not conjunto or familia.tipo == TipoFamilia.TOTAL:
            return True
        if familia.tipo == TipoFamilia.S0:
            return len(conjunto) <= 1
        if familia.tipo == TipoFamilia.SCHREIER:
            return cls._miembro_schreier(familia.xi, conjunto)
        if familia.tipo == TipoFamilia.A_K:
            return len(conjunto) <= familia.k
        if cls.miembro_composicion_voraz(familia, conjunto):
            return True
        return cls.miembro_composicion_exhaustiva(familia, conjunto)

    @classmethod
    def miembro_composicion_voraz(cls, familia: ExpresionFamilia, conjunto: Sequence[int]) -> bool:
        """F[G] tomando en cada paso el bloque inicial más largo que está en G."""
        conjunto = tuple(conjunto)
        minimos = []
        inicio = 0
        while inicio < len(conjunto):
            fin = inicio + 1
            while fin < len(conjunto) and cls._miembro(familia.interna, conjunto[inicio:fin + 1]):
                fin += 1
            if not cls._miembro(familia.interna, conjunto[inicio:fin]):
                return False
            minimos.append(conjunto[inicio])
            inicio = fin
        return cls._miembro(familia.externa, tuple(minimos))

    @classmethod
    def miembro_composicion_exhaustiva(cls, familia: ExpresionFamilia, conjunto: Sequence[int]) -> bool:
        """F[G] recorriendo todas las descomposiciones en bloques sucesivos."""
        conjunto = tuple(conjunto)

        def buscar(inicio: int, minimos: Tuple[int, ...]) -> bool:
            if inicio == len(conjunto):
                return cls._miembro(familia.externa, minimos)
            nuevos = minimos + (conjunto[inicio],)
            if not cls._miembro(familia.externa, nuevos):
                return False
            for fin in range(inicio + 1, len(conjunto) + 1):
                if not cls._miembro(familia.interna, conjunto[inicio:fin]):
                    break
                if buscar(fin, nuevos):
                    return True
            return False

        return buscar(0, ())

    # Restricciones

    @classmethod
    def restringir(cls, familia: ExpresionFamilia, n: int,
                   presupuestos: Optional[ConfiguracionPresupuestos] = None) -> FamiliaRestringida:
        """
        Enumera los miembros contenidos en {1..n}.

        Se extienden sólo los miembros: en una familia hereditaria todo
        prefijo de un miembro es miembro.

        Raises:
            ErrorPresupuesto: Si n o el número de miembros superan los límites
        """
        configuracion = ConfiguracionPresupuestos.resolver(presupuestos)
        if n > configuracion.n_max_restriccion:
            raise ErrorPresupuesto(
                f"n = {n} supera el límite de restricción {configuracion.n_max_restriccion}"
            )
        return cls._restringir(familia, n, configuracion.max_miembros)

    @classmethod
    @lru_cache(maxsize=256)
    def _restringir(cls, familia: ExpresionFamilia, n: int, max_miembros: int) -> FamiliaRestringida:
        miembros = [()]
        pila = [()]
        while pila:
            actual = pila.pop()
            desde = actual[-1] + 1 if actual else 1
            for x in range(desde, n + 1):
                candidato = actual + (x,)
                if cls._miembro(familia, candidato):
                    miembros.append(candidato)
                    pila.append(candidato)
                    if len(miembros) > max_miembros:
                        raise ErrorPresupuesto(f"La restricción supera {max_miembros} miembros")
        return FamiliaRestringida(familia, n, frozenset(miembros))

    @classmethod
    def indice_cb_restringido(cls, restringida: FamiliaRestringida) -> int:
        """
        Número de derivadas del árbol de miembros hasta que sólo queda ∅.
        """
        arbol = ArbolFinito(restringida.miembros, True)
        pasos = 0
        while not arbol.nodos <= {()}:
            arbol = CalculadorArboles.derivada(arbol)
            pasos += 1
        return pasos

    @classmethod
    def iota_simbolico(cls, familia: ExpresionFamilia) -> Ordinal:
        """
        ι(S_0)=1, ι(A_k)=k, ι(S_ξ)=ω^ξ, ι(F[G])=ι(G)·ι(F).

        Raises:
            ErrorOrdinal: Para S_{ω₁}, cuyo índice no es representable
        """
        if familia.tipo == TipoFamilia.S0:
            return Ordinal.finito(1)
        if familia.tipo == TipoFamilia.A_K:
            return Ordinal.finito(familia.k)
        if familia.tipo == TipoFamilia.SCHREIER:
            return AritmeticaOrdinal.potencia_omega(familia.xi)
        if familia.tipo == TipoFamilia.TOTAL:
            raise ErrorOrdinal("ι(S_ω₁) = ω₁ no es un ordinal menor que ε₀")
        return AritmeticaOrdinal.multiplicar(
            cls.iota_simbolico(familia.interna), cls.iota_simbolico(familia.externa)
        )

    @classmethod
    def es_hereditaria(cls, restringida: FamiliaRestringida) -> Tuple[bool, Optional[Tuple]]:
        """
        Verifica el cierre por subconjuntos.

        Returns:
            (True, None) o (False, (miembro, subconjunto ausente))
        """
        for miembro in restringida.ordenados():
            for i in range(len(miembro)):
                subconjunto = miembro[:i] + miembro[i + 1:]
                if subconjunto not in restringida.miembros:
                    return False, (miembro, subconjunto)
        return True, None

    @classmethod
    def es_extendible(cls, restringida: FamiliaRestringida) -> Tuple[bool, Optional[Tuple]]:
        """
        Verifica la propiedad de extensión (spreading) dentro de {1..n}.

        Basta el cierre por desplazamientos elementales (un elemento sube en
        uno sin alcanzar al siguiente): toda extensión se obtiene moviendo
        primero el mayor elemento.

        Returns:
            (True, None) o (False, (miembro, extensión ausente))
        """
        n = restringida.n
        for miembro in restringida.ordenados():
            for i, valor in enumerate(miembro):
                siguiente = miembro[i + 1] if i + 1 < len(miembro) else n + 1
                if valor + 1 < siguiente:
                    extension = miembro[:i] + (valor + 1,) + miembro[i + 1:]
                    if extension not in restringida.miembros:
                        return False, (miembro, extension)
        return True, None

    # Búsqueda de Gasparis

    @classmethod
    def busqueda_prefijo_gasparis(
        cls,
        f: ExpresionFamilia,
        g: ExpresionFamilia,
        profundidad: int,
        cota_valores: int,
        dentro_de: Optional[Iterable[int]] = None,
        presupuesto: Optional[int] = None,
        presupuestos: Optional[ConfiguracionPresupuestos] = None,
    ) -> Optional[Tuple[int, ...]]:
        """
        Busca m_1 < … < m_profundidad ≤ cota con M(E) ∈ G para todo
        E ∈ F ∩ P({1..profundidad}).

        Args:
            dentro_de: Conjunto N donde deben tomarse los valores (opcional)

        Returns:
            El prefijo lexicográficamente menor, o None si no existe

        Raises:
            ErrorPresupuesto: Si se agotan las expansiones permitidas
        """
        presupuestos = ConfiguracionPresupuestos.resolver(presupuestos)
        limite = presupuesto or presupuestos.max_nodos_busqueda
        por_maximo: Dict[int, List[ConjuntoFinito]] = defaultdict(list)
        for miembro in cls.restringir(f, profundidad, presupuestos).miembros:
            if miembro:
                por_maximo[miembro[-1]].append(miembro)
        valores = sorted(set(dentro_de)) if dentro_de is not None else range(1, cota_valores + 1)
        valores = [v for v in valores if 1 <= v <= cota_valores]

        prefijo: List[int] = []
        expansiones = [0]

        def valido(posicion: int) -> bool:
            return all(
                cls._miembro(g, tuple(prefijo[i - 1] for i in miembro))
                for miembro in por_maximo[posicion]
            )

        def buscar(desde: int) -> bool:
            if len(prefijo) == profundidad:
                return True
            faltan = profundidad - len(prefijo)
            for indice in range(desde, len(valores) - faltan + 1):
                expansiones[0] += 1
                if expansiones[0] > limite:
                    raise ErrorPresupuesto(f"La búsqueda de Gasparis supera {limite} expansiones")
                prefijo.append(valores[indice])
                if valido(len(prefijo)) and buscar(indice + 1):
                    return True
                prefijo.pop()
            return False

        return tuple(prefijo) if buscar(0) else None

    @classmethod
    def validar_prefijo_gasparis(cls, f: ExpresionFamilia, g: ExpresionFamilia,
                                 prefijo: Sequence[int],
                                 presupuestos: Optional[ConfiguracionPresupuestos] = None) -> bool:
        """Revisa exhaustivamente que M(E) ∈ G para todo E ∈ F ∩ P({1..|M|})."""
        prefijo = tuple(prefijo)
        if any(a >= b for a, b in zip(prefijo, prefijo[1:])):
            return False
        return all(
            cls._miembro(g, tuple(prefijo[i - 1] for i in miembro))
            for miembro in cls.restringir(f, len(prefijo), presupuestos).miembros
        )
