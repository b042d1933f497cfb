"""
Servicio de dominio: CalculadorArboles

Derivadas, órdenes y árboles mínimos T_ξ.

Un árbol mínimo T_ξ es el B-árbol de sucesiones decrecientes de sucesores:
MT_0 = {∅}, MT_{ξ+1} = {∅} ∪ {(ξ+1)^t : t ∈ MT_ξ} y, para ξ límite,
MT_ξ = ⋃_{ζ<ξ} MT_{ζ+1}; T_ξ = MT_ξ \\ {∅}.
"""

from collections import defaultdict, deque
from typing import Any, Dict, List, Optional, Union

from src.domain.Errores import ErrorEstructura, ErrorOrdinal, ErrorPresupuesto
from src.domain.entities.Arbol import (
    ArbolFinito, ArbolPerezoso, EtiquetaEstructura, Nodo, Rango, RAMIFICACION_INFINITA
)
from src.domain.entities.Ordinal import Ordinal, CERO
from src.domain.services.AritmeticaOrdinal import AritmeticaOrdinal, ClaseOrdinal
from src.domain.services.ConfiguracionPresupuestos import ConfiguracionPresupuestos

OrdinalOEntero = Union[Ordinal, int]


def _como_ordinal(valor: OrdinalOEntero) -> Ordinal:
    if isinstance(valor, Ordinal):
        return valor
    return Ordinal.finito(int(valor))


class CalculadorArboles:
    """Operaciones sobre árboles finitos y perezosos."""

    @classmethod
    def derivada(cls, arbol: ArbolFinito) -> ArbolFinito:
        """T' = T \\ MAX(T): conserva los nodos que tienen alguna extensión."""
        con_extension = {nodo[:-1] for nodo in arbol.nodos if nodo}
        return ArbolFinito(
            frozenset(n for n in arbol.nodos if n in con_extension), arbol.con_raiz
        )

    @classmethod
    def derivada_iterada(cls, arbol: ArbolFinito, xi: OrdinalOEntero) -> ArbolFinito:
        """
        T^ξ. Para un árbol finito T^ω ya es vacío, así que cualquier ξ
        infinito da el árbol vacío.
        """
        xi = _como_ordinal(xi)
        if not xi.es_finito:
            return ArbolFinito.vacio(arbol.con_raiz)
        resultado = arbol
        for _ in range(xi.valor_finito):
            if resultado.es_vacio:
                break
            resultado = cls.derivada(resultado)
        return resultado

    @classmethod
    def rango(cls, arbol: ArbolFinito) -> Rango:
        """o(T) contando derivadas hasta llegar al vacío."""
        pasos = 0
        actual = arbol
        while not actual.es_vacio:
            actual = cls.derivada(actual)
            pasos += 1
        return Rango(Ordinal.finito(pasos))

    @classmethod
    def rango_recursivo(cls, arbol: ArbolFinito) -> Rango:
        """
        o(T) por recursión: ρ(t) = 1 + max ρ(hijos), ρ(hoja) = 1; el orden es
        el máximo de ρ sobre los nodos minimales.
        """
        rho: Dict[Nodo, int] = {}
        for nodo in sorted(arbol.nodos, key=len, reverse=True):
            rho.setdefault(nodo, 1)
            if nodo:
                padre = nodo[:-1]
                rho[padre] = max(rho.get(padre, 1), rho[nodo] + 1)
        if arbol.es_vacio:
            return Rango(CERO)
        if arbol.con_raiz:
            return Rango(Ordinal.finito(rho[()]))
        return Rango(Ordinal.finito(max(rho[n] for n in arbol.nodos if len(n) == 1)))

    @classmethod
    def subarbol(cls, arbol: ArbolFinito, t: Nodo) -> ArbolFinito:
        """T(t) = {s : t^s ∈ T}."""
        t = tuple(t)
        nodos = frozenset(n[len(t):] for n in arbol.nodos if n[:len(t)] == t)
        con_raiz = () in nodos or (not t and arbol.con_raiz)
        if not nodos:
            con_raiz = True
        return ArbolFinito(nodos, con_raiz)

    @classmethod
    def con_raiz_agregada(cls, arbol: ArbolFinito) -> ArbolFinito:
        """El B-árbol visto como árbol: T ∪ {∅}."""
        return ArbolFinito(arbol.nodos | {()}, True)

    # Árboles mínimos

    @classmethod
    def miembro_arbol_minimo(cls, xi: OrdinalOEntero, s: Nodo) -> bool:
        """
        Decide s ∈ T_ξ para s no vacía.

        Raises:
            ErrorOrdinal: Si ξ = 0 (T_0 es vacío)
        """
        xi = _como_ordinal(xi)
        if xi.es_cero:
            raise ErrorOrdinal("T_0 es vacío: ξ debe ser al menos 1")
        s = tuple(_como_ordinal(e) for e in s)
        if not s:
            raise ErrorEstructura("La pertenencia a T_ξ se decide para sucesiones no vacías")
        return cls._en_mt(xi, s)

    @classmethod
    def _en_mt(cls, xi: Ordinal, s: Nodo) -> bool:
        # s ∈ MT_ξ
        if not s:
            return True
        if xi.es_cero:
            return False
        cabeza, cola = s[0], s[1:]
        clasificacion = AritmeticaOrdinal.clasificar(xi)
        if clasificacion.clase == ClaseOrdinal.SUCESOR:
            return cabeza == xi and cls._en_mt(clasificacion.predecesor, cola)
        # ξ límite: cabeza = ζ+1 < ξ y cola ∈ MT_ζ
        clase_cabeza = AritmeticaOrdinal.clasificar(cabeza)
        if clase_cabeza.clase != ClaseOrdinal.SUCESOR or not cabeza < xi:
            return False
        return cls._en_mt(clase_cabeza.predecesor, cola)

    @classmethod
    def _restante(cls, xi: Ordinal, s: Nodo) -> Ordinal:
        # Ordinal que gobierna los hijos de s en T_ξ
        if not s:
            return xi
        return AritmeticaOrdinal.predecesor(s[-1])

    @classmethod
    def arbol_minimo(cls, xi: OrdinalOEntero) -> ArbolPerezoso:
        """T_ξ como árbol perezoso etiquetado."""
        xi = _como_ordinal(xi)
        if xi.es_cero:
            raise ErrorOrdinal("T_0 es vacío: ξ debe ser al menos 1")

        def miembro(s: Nodo) -> bool:
            return not s or cls.miembro_arbol_minimo(xi, s)

        def hijos(s: Nodo):
            restante = cls._restante(xi, tuple(s))
            clase = AritmeticaOrdinal.clasificar(restante).clase
            if clase == ClaseOrdinal.CERO:
                return ()
            if clase == ClaseOrdinal.SUCESOR:
                return (restante,)
            return RAMIFICACION_INFINITA

        return ArbolPerezoso(miembro, hijos, EtiquetaEstructura('arbol_minimo', xi))

    @classmethod
    def truncar(cls, perezoso: ArbolPerezoso, cota: int,
               presupuestos: Optional[ConfiguracionPresupuestos] = None) -> ArbolFinito:
        """
        Restringe un árbol perezoso a las etiquetas ≤ cota.

        En los nodos con ramificación infinita sólo se consideran las
        etiquetas finitas 1..cota que el predicado acepta.
        """
        limite = ConfiguracionPresupuestos.resolver(presupuestos).max_nodos_busqueda
        cota_ordinal = Ordinal.finito(cota)
        nodos = set()
        pendientes = deque([()])
        while pendientes:
            nodo = pendientes.popleft()
            if nodo or perezoso.con_raiz:
                nodos.add(nodo)
            if len(nodos) > limite:
                raise ErrorPresupuesto(f"El truncamiento supera {limite} nodos")
            hijos = perezoso.hijos(nodo)
            if hijos == RAMIFICACION_INFINITA:
                candidatos = [Ordinal.finito(k) for k in range(1, cota + 1)]
            else:
                candidatos = [h for h in hijos if not cota_ordinal < _como_ordinal(h)]
            for etiqueta in candidatos:
                hijo = nodo + (etiqueta,)
                if perezoso.miembro(hijo):
                    pendientes.append(hijo)
        return ArbolFinito(frozenset(nodos), perezoso.con_raiz)

    @classmethod
    def truncamiento(cls, xi: OrdinalOEntero, cota: int) -> ArbolPerezoso:
        """T_ξ marcado como truncado a etiquetas ≤ cota."""
        base = cls.arbol_minimo(xi)
        return ArbolPerezoso(
            base.miembro, base.hijos,
            EtiquetaEstructura('truncamiento', base.etiqueta.xi, cota)
        )

    @classmethod
    def rango_simbolico(cls, perezoso: ArbolPerezoso,
                        presupuestos: Optional[ConfiguracionPresupuestos] = None) -> Rango:
        """
        Orden de un árbol perezoso con construcción conocida.

        Raises:
            ErrorEstructura: Si la etiqueta falta o no se reconoce
        """
        etiqueta = perezoso.etiqueta
        if etiqueta is None:
            raise ErrorEstructura("El árbol perezoso no tiene etiqueta de estructura")
        if etiqueta.tipo == 'arbol_minimo':
            return Rango(etiqueta.xi)
        if etiqueta.tipo == 'truncamiento' and etiqueta.cota is not None:
            return cls.rango(cls.truncar(perezoso, etiqueta.cota, presupuestos))
        raise ErrorEstructura(f"Etiqueta de estructura no reconocida: {etiqueta.tipo}")

    # Inmersión monótona

    @classmethod
    def busqueda_inmersion_monotona(
        cls, xi: OrdinalOEntero, arbol: ArbolFinito, presupuesto: Optional[int] = None,
        presupuestos: Optional[ConfiguracionPresupuestos] = None,
    ) -> Optional[Dict[Nodo, Any]]:
        """
        Busca f: T_ξ → etiquetas con (f(u|_i))_i ∈ T para todo u ∈ T_ξ.

        El destino se toma como árbol (se agrega ∅ a un B-árbol), de modo que
        el testigo existe sii o(T ∪ {∅}) > ξ.

        Returns:
            Diccionario nodo de T_ξ -> etiqueta, o None si no existe

        Raises:
            ErrorPresupuesto: Si se agotan las expansiones permitidas
        """
        xi = _como_ordinal(xi)
        if xi.es_cero:
            return {}
        if not xi.es_finito:
            # T_ξ contiene ramas de todo largo finito; un árbol finito no las admite
            return None
        presupuestos = ConfiguracionPresupuestos.resolver(presupuestos)
        limite = presupuesto or presupuestos.max_nodos_busqueda
        dominio = sorted(
            cls.truncar(cls.arbol_minimo(xi), xi.valor_finito, presupuestos).nodos, key=len
        )
        hijos_destino: Dict[Nodo, List[Any]] = defaultdict(list)
        for nodo in arbol.nodos:
            if nodo:
                hijos_destino[nodo[:-1]].append(nodo[-1])

        asignacion: Dict[Nodo, Any] = {}
        expansiones = [0]

        def imagen(u: Nodo) -> Nodo:
            return tuple(asignacion[u[:i]] for i in range(1, len(u) + 1))

        def asignar(indice: int) -> bool:
            if indice == len(dominio):
                return True
            u = dominio[indice]
            for etiqueta in hijos_destino.get(imagen(u[:-1]), []):
                expansiones[0] += 1
                if expansiones[0] > limite:
                    raise ErrorPresupuesto(f"La búsqueda de inmersión supera {limite} expansiones")
                asignacion[u] = etiqueta
                if asignar(indice + 1):
                    return True
                del asignacion[u]
            return False

        return dict(asignacion) if asignar(0) else None

    @classmethod
    def validar_inmersion(cls, xi: OrdinalOEntero, arbol: ArbolFinito,
                          testigo: Dict[Nodo, Any],
                          presupuestos: Optional[ConfiguracionPresupuestos] = None) -> bool:
        """Revisa que toda rama de T_ξ tenga imagen en el árbol."""
        xi = _como_ordinal(xi)
        if xi.es_cero:
            return True
        if not xi.es_finito:
            return False
        destino = cls.con_raiz_agregada(arbol) if not arbol.con_raiz else arbol
        for u in cls.truncar(cls.arbol_minimo(xi), xi.valor_finito, presupuestos).nodos:
            if any(u[:i] not in testigo for i in range(1, len(u) + 1)):
                return False
            if tuple(testigo[u[:i]] for i in range(1, len(u) + 1)) not in destino:
                return False
        return True
