"""
Servicio de dominio: SondaIndices

Sondas de profundidad acotada sobre los árboles de índices de operadores
(no preservación, estrictamente singular, compacidad débil) y certificados
de modelos extendidos.

Las decisiones de membresía tienen tres valores: True y False certificados,
None cuando las cotas de alguna constante no alcanzan a decidir.
"""

from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.domain.Errores import ErrorDimension, ErrorPrecondicion
from src.domain.entities.ConfiguracionSonda import ConfiguracionSonda
from src.domain.entities.DescriptorNorma import DescriptorNorma, INFINITO
from src.domain.entities.Familia import ConjuntoFinito, ExpresionFamilia
from src.domain.entities.MatrizOperador import MatrizOperador
from src.domain.entities.ReporteProfundidad import RazonImposibilidad, ReporteProfundidad
from src.domain.entities.VectorFinito import VectorFinito
from src.domain.services.CalculadorDominacion import CalculadorDominacion
from src.domain.services.CalculadorFamilias import CalculadorFamilias
from src.domain.services.CalculadorNormas import CalculadorNormas
from src.domain.services.ConfiguracionPresupuestos import ConfiguracionPresupuestos
from src.domain.services.EnumeradorVertices import a_sympy
from src.infrastructure.Registro import Registro

Cadena = Tuple[VectorFinito, ...]


def _vectores(xs) -> List[VectorFinito]:
    return [x if isinstance(x, VectorFinito) else VectorFinito.de(x) for x in xs]


def _base_canonica(n: int) -> List[VectorFinito]:
    return [VectorFinito.base_canonica(n, i) for i in range(n)]


def conjuncion(*decisiones: Optional[bool]) -> Optional[bool]:
    """Y de tres valores: False si alguna es False, si no None si alguna es None."""
    if any(d is False for d in decisiones):
        return False
    if any(d is None for d in decisiones):
        return None
    return True


class SondaIndices:
    """Servicio para membresía y profundidad en los árboles de índices."""

    # Membresía

    @classmethod
    def _en_bola_unidad(cls, espacio: DescriptorNorma, xs: Sequence[VectorFinito],
                        presupuestos: ConfiguracionPresupuestos) -> Optional[bool]:
        resultado: Optional[bool] = True
        for x in xs:
            norma = CalculadorNormas.norma(espacio, x, presupuestos=presupuestos)
            if norma.inferior > 1:
                return False
            if norma.superior > 1:
                Registro.advertencia(f"No se certifica ‖{x}‖ ≤ 1 (norma {norma})")
                resultado = None
        return resultado

    @staticmethod
    def _independientes(vectores: Sequence[VectorFinito]) -> bool:
        return a_sympy([list(v) for v in vectores]).rank() == len(vectores)

    @classmethod
    def np_miembro(cls, operador: MatrizOperador, config: ConfiguracionSonda, xs,
                   presupuestos: Optional[ConfiguracionPresupuestos] = None) -> Optional[bool]:
        """
        (x_i) ∈ T_(e_i)(A, X, Y, K): x_i ∈ B_X, (x_i) ≲_1 (e_i) y (e_i) ≲_K (A x_i).

        Con config.constante = None basta una constante finita en la segunda
        dominación.

        Returns:
            True o False certificados, None si alguna condición queda indecisa

        Raises:
            ErrorDimension: Si la cadena es más larga que la base
        """
        xs = _vectores(xs)
        if len(xs) > config.base.dimension:
            raise ErrorDimension(
                f"Cadena de longitud {len(xs)} más larga que la base {config.base}"
            )
        if not xs:
            return True
        presupuestos = ConfiguracionPresupuestos.resolver(presupuestos)
        dominio = operador.dominio
        en_bola = cls._en_bola_unidad(dominio, xs, presupuestos)
        if en_bola is False:
            return False
        n = len(xs)
        base = DescriptorNorma.lp(config.base.p, n)
        e = _base_canonica(n)

        inferior = CalculadorDominacion.constante_dominacion(xs, dominio, e, base, presupuestos)
        acotada = CalculadorDominacion.decidir(inferior, 1)
        if acotada is False:
            return False
        imagenes = [operador.aplicar(x) for x in xs]
        if config.constante is None:
            return conjuncion(en_bola, acotada, cls._independientes(imagenes))
        superior = CalculadorDominacion.constante_dominacion(e, base, imagenes, operador.codominio, presupuestos)
        return conjuncion(en_bola, acotada, CalculadorDominacion.decidir(superior, config.constante))

    @classmethod
    def ss_miembro(cls, operador: MatrizOperador, cota, xs,
                   presupuestos: Optional[ConfiguracionPresupuestos] = None) -> Optional[bool]:
        """
        (x_i) ∈ SS(A, X, Y, K): x_i unitarios, K-básica, y (x_i) ≲_K (A x_i).

        Raises:
            ErrorPrecondicion: Si algún x_i no tiene norma 1
        """
        xs = _vectores(xs)
        presupuestos = ConfiguracionPresupuestos.resolver(presupuestos)
        for x in xs:
            norma = CalculadorNormas.norma(operador.dominio, x, presupuestos=presupuestos)
            if not norma.contiene(1):
                raise ErrorPrecondicion(f"‖{x}‖ = {norma} no es unitario")
        if not xs:
            return True
        basica, _ = CalculadorDominacion.es_k_basica(xs, cota, operador.dominio, presupuestos)
        if basica is False:
            return False
        imagenes = [operador.aplicar(x) for x in xs]
        reporte = CalculadorDominacion.constante_dominacion(
            xs, operador.dominio, imagenes, operador.codominio, presupuestos
        )
        return conjuncion(basica, CalculadorDominacion.decidir(reporte, cota))

    @classmethod
    def wc_miembro(cls, operador: MatrizOperador, cota, xs,
                   presupuestos: Optional[ConfiguracionPresupuestos] = None) -> Optional[bool]:
        """(x_i) en la bola unidad con la base sumante (s_i) ≲_K (A x_i)."""
        xs = _vectores(xs)
        if not xs:
            return True
        presupuestos = ConfiguracionPresupuestos.resolver(presupuestos)
        en_bola = cls._en_bola_unidad(operador.dominio, xs, presupuestos)
        if en_bola is False:
            return False
        n = len(xs)
        imagenes = [operador.aplicar(x) for x in xs]
        reporte = CalculadorDominacion.constante_dominacion(
            _base_canonica(n), DescriptorNorma.sumante(n), imagenes, operador.codominio, presupuestos
        )
        return conjuncion(en_bola, CalculadorDominacion.decidir(reporte, cota))

    @staticmethod
    def cadena_sumante(n: int, longitud: Optional[int] = None) -> List[VectorFinito]:
        """Vectores x_i = 1_{[i, n]} de c₀, isométricos a la base sumante."""
        longitud = n if longitud is None else longitud
        return [VectorFinito.de(1 if j >= i else 0 for j in range(n)) for i in range(longitud)]

    # Sonda de profundidad

    @classmethod
    def reserva_por_defecto(cls, dominio: DescriptorNorma, p=None, cierre_bloques: bool = False,
                            presupuestos: Optional[ConfiguracionPresupuestos] = None) -> List[VectorFinito]:
        """
        Base canónica, diferencias normalizadas e_i − e_j (i < j) y, con
        cierre, un nivel de bloques p-absolutamente convexos (p ∈ {1, ∞}).
        """
        presupuestos = ConfiguracionPresupuestos.resolver(presupuestos)
        n = dominio.dimension
        reserva = []
        for e in _base_canonica(n):
            norma = CalculadorNormas.norma(dominio, e, presupuestos=presupuestos)
            reserva.append(e.escalar(1 / norma.superior))
        for i in range(n):
            for j in range(i + 1, n):
                diferencia = VectorFinito.base_canonica(n, i) - VectorFinito.base_canonica(n, j)
                norma = CalculadorNormas.norma(dominio, diferencia, presupuestos=presupuestos)
                reserva.append(diferencia.escalar(1 / norma.superior))
        if cierre_bloques:
            reserva.extend(cls._cierre_bloques(dominio, reserva, p, presupuestos))
        return reserva

    @classmethod
    def _cierre_bloques(cls, dominio: DescriptorNorma, reserva: List[VectorFinito], p,
                        presupuestos: ConfiguracionPresupuestos) -> List[VectorFinito]:
        if p == 1:
            factores = [(Fraction(1, 2), Fraction(1, 2)), (Fraction(1, 2), Fraction(-1, 2))]
        elif p == INFINITO:
            factores = [(Fraction(1), Fraction(1)), (Fraction(1), Fraction(-1))]
        else:
            Registro.advertencia(f"El cierre por bloques sólo se define para p ∈ {{1, inf}}, no p = {p}")
            return []
        vistos = set(reserva)
        nuevos = []
        for i, u in enumerate(reserva):
            for v in reserva[i + 1:]:
                for a, b in factores:
                    bloque = u.escalar(a) + v.escalar(b)
                    if bloque.es_cero or bloque in vistos:
                        continue
                    if CalculadorNormas.norma(dominio, bloque, presupuestos=presupuestos).superior <= 1:
                        vistos.add(bloque)
                        nuevos.append(bloque)
        return nuevos

    @classmethod
    def sonda_profundidad_np(cls, operador: MatrizOperador, config: ConfiguracionSonda,
                             presupuestos: Optional[ConfiguracionPresupuestos] = None) -> ReporteProfundidad:
        """
        Busca la cadena más profunda de T_(e_i)(A, X, Y, K) sobre la reserva.

        Ninguna cadena más larga que rank(A) es miembro: sus imágenes son
        linealmente dependientes. Si la profundidad testigo alcanza el rango,
        el índice es 1 + rank(A). Las cadenas no certificadas no se extienden.

        Returns:
            ReporteProfundidad con testigo, imposibilidad y, si corresponde,
            el índice finito
        """
        presupuestos = ConfiguracionPresupuestos.resolver(presupuestos)
        rango = operador.rango
        if config.reserva:
            reserva = list(config.reserva)
            for x in reserva:
                if CalculadorNormas.norma(operador.dominio, x, presupuestos=presupuestos).inferior > 1:
                    raise ErrorPrecondicion(f"El candidato {x} no está en la bola unidad")
        else:
            reserva = cls.reserva_por_defecto(operador.dominio, config.base.p, config.cierre_bloques, presupuestos)
        maxima = min(config.profundidad_maxima, config.base.dimension, len(reserva))
        objetivo = min(maxima, rango)

        mejor: Cadena = ()
        expandidos = 0
        agotado = False
        # la base ℓ_p es simétrica: basta recorrer subconjuntos de la reserva
        pila: List[Tuple[int, ...]] = [()]
        while pila and len(mejor) < objetivo:
            indices = pila.pop()
            if len(indices) >= maxima:
                continue
            desde = indices[-1] + 1 if indices else 0
            for k in reversed(range(desde, len(reserva))):
                expandidos += 1
                if expandidos > config.presupuesto:
                    agotado = True
                    break
                extendidos = indices + (k,)
                cadena = tuple(reserva[i] for i in extendidos)
                if cls.np_miembro(operador, config, cadena, presupuestos) is True:
                    if len(cadena) > len(mejor):
                        mejor = cadena
                    pila.append(extendidos)
            if agotado:
                Registro.advertencia(f"Presupuesto de la sonda agotado tras {config.presupuesto} expansiones")
                break

        profundidad = len(mejor)
        if profundidad == rango:
            return ReporteProfundidad(profundidad, mejor, rango + 1, RazonImposibilidad.RANGO, 1 + rango)
        if not agotado and profundidad < maxima:
            return ReporteProfundidad(profundidad, mejor, profundidad + 1, RazonImposibilidad.EXHAUSTIVA)
        return ReporteProfundidad(profundidad, mejor, rango + 1, RazonImposibilidad.RANGO)

    @classmethod
    def validar_reporte(cls, operador: MatrizOperador, config: ConfiguracionSonda,
                        reporte: ReporteProfundidad,
                        presupuestos: Optional[ConfiguracionPresupuestos] = None) -> bool:
        """La cadena testigo y cada prefijo son miembros certificados."""
        return all(
            cls.np_miembro(operador, config, reporte.cadena[:k], presupuestos) is True
            for k in range(1, reporte.profundidad_testigo + 1)
        )

    # Certificados indexados por familias de Schreier

    @classmethod
    def _miembros_schreier(cls, xi, n: int, presupuestos: ConfiguracionPresupuestos) -> List[ConjuntoFinito]:
        familia = CalculadorFamilias.restringir(ExpresionFamilia.schreier(xi), n, presupuestos)
        return [e for e in familia.ordenados() if e]

    @classmethod
    def certificado_modelo_extendido(cls, xs, espacio: DescriptorNorma, p, xi, a, b,
                                     presupuestos: Optional[ConfiguracionPresupuestos] = None
                                     ) -> Tuple[Optional[bool], Optional[Tuple[ConjuntoFinito, tuple]]]:
        """
        Para cada E ∈ S_ξ ∩ P({1..n}): (e_i)_E ≲_a (x_i)_E y (x_i)_E ≲_b (e_i)_E.

        Returns:
            (True, None), (False, (E, coeficientes testigo)) con la primera
            falla certificada, o (None, (E, coeficientes)) con el primer E
            indeciso si no hay fallas certificadas
        """
        xs = _vectores(xs)
        presupuestos = ConfiguracionPresupuestos.resolver(presupuestos)
        indeciso: Optional[Tuple[ConjuntoFinito, tuple]] = None
        for e in cls._miembros_schreier(xi, len(xs), presupuestos):
            subsistema = [xs[i - 1] for i in e]
            base = DescriptorNorma.lp(p, len(e))
            canonica = _base_canonica(len(e))
            for reporte, cota in (
                (CalculadorDominacion.constante_dominacion(canonica, base, subsistema, espacio, presupuestos), a),
                (CalculadorDominacion.constante_dominacion(subsistema, espacio, canonica, base, presupuestos), b),
            ):
                decision = CalculadorDominacion.decidir(reporte, cota)
                if decision is False:
                    return False, (e, reporte.testigo)
                if decision is None and indeciso is None:
                    indeciso = (e, reporte.testigo)
        if indeciso is not None:
            return None, indeciso
        return True, None

    @classmethod
    def miembro_indexado_schreier(cls, operador: MatrizOperador, config: ConfiguracionSonda, xi, xs,
                                  presupuestos: Optional[ConfiguracionPresupuestos] = None) -> Optional[bool]:
        """Toda E ∈ S_ξ ∩ P({1..n}) da una cadena (x_i)_{i∈E} de T_p(A, X, Y, K)."""
        xs = _vectores(xs)
        presupuestos = ConfiguracionPresupuestos.resolver(presupuestos)
        decisiones = []
        for e in cls._miembros_schreier(xi, len(xs), presupuestos):
            decision = cls.np_miembro(operador, config, [xs[i - 1] for i in e], presupuestos)
            if decision is False:
                Registro.info(f"La cadena indexada por {set(e)} no es miembro")
                return False
            decisiones.append(decision)
        return conjuncion(*decisiones)

    # Construcciones sobre cadenas testigo

    @classmethod
    def cadena_composicion(cls, a: MatrizOperador, b: MatrizOperador, c: MatrizOperador,
                           config: ConfiguracionSonda, ws,
                           presupuestos: Optional[ConfiguracionPresupuestos] = None
                           ) -> Tuple[List[VectorFinito], ConfiguracionSonda]:
        """
        De una cadena (w_t) de ABC a constante K construye x_t = C w_t / ‖C‖,
        cadena de B a constante ‖A‖·K·‖C‖.

        Raises:
            ErrorPrecondicion: Si C = 0 o config no fija K
        """
        if config.constante is None:
            raise ErrorPrecondicion("La construcción requiere una constante K finita")
        norma_c = CalculadorDominacion.norma_operador(c, presupuestos)
        norma_a = CalculadorDominacion.norma_operador(a, presupuestos)
        if norma_c.superior == 0 or norma_c.es_infinito:
            raise ErrorPrecondicion("El operador C es nulo")
        escala = 1 / norma_c.superior
        xs = [c.aplicar(w).escalar(escala) for w in _vectores(ws)]
        constante = max(Fraction(1), norma_a.superior * config.constante / escala)
        return xs, config.con_constante(constante)

    @classmethod
    def perturbacion_estable(cls, a: MatrizOperador, b: MatrizOperador,
                             config: ConfiguracionSonda, xs,
                             presupuestos: Optional[ConfiguracionPresupuestos] = None) -> Optional[bool]:
        """
        Si (x_i) es testigo para A a constante K y ‖A−B‖ < 1/2K, (x_i) es
        testigo para B a constante 2K.

        Raises:
            ErrorPrecondicion: Si ‖A−B‖ no es certificadamente menor que 1/2K
        """
        if config.constante is None:
            raise ErrorPrecondicion("La perturbación requiere una constante K finita")
        distancia = CalculadorDominacion.norma_operador(a.restar(b), presupuestos)
        if distancia.es_infinito or distancia.superior >= 1 / (2 * config.constante):
            raise ErrorPrecondicion(
                f"‖A−B‖ ≤ {distancia.superior} no es menor que 1/2K = {1 / (2 * config.constante)}"
            )
        return cls.np_miembro(b, config.con_constante(2 * config.constante), xs, presupuestos)
