"""
Servicio de aplicación: VerificacionService

Suites de aceptación. Cada suite contrasta los servicios de dominio con un
oráculo independiente (enumeración exhaustiva, isomorfismo de buenos órdenes explícitos,
evaluación densa en punto flotante) y devuelve un ResultadoSuite.
"""

import itertools
import time
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import Matrix

from src.domain.Errores import ErrorDominio, ErrorEstructura
from src.domain.entities.Arbol import ArbolFinito
from src.domain.entities.ConfiguracionSonda import ConfiguracionSonda
from src.domain.entities.DescriptorNorma import DescriptorNorma, INFINITO, TipoDescriptor
from src.domain.entities.Familia import ExpresionFamilia
from src.domain.entities.MatrizOperador import MatrizOperador
from src.domain.entities.Ordinal import Ordinal, OMEGA, UNO
from src.domain.entities.ReporteProfundidad import RazonImposibilidad
from src.domain.entities.ResultadoSuite import ResultadoSuite
from src.domain.entities.VectorFinito import VectorFinito
from src.domain.services.AritmeticaOrdinal import AritmeticaOrdinal
from src.domain.services.CalculadorArboles import CalculadorArboles
from src.domain.services.CalculadorDominacion import CalculadorDominacion
from src.domain.services.CalculadorFamilias import CalculadorFamilias
from src.domain.services.CalculadorNormas import CalculadorNormas
from src.domain.services.CombinadorOperadores import CombinadorOperadores
from src.domain.services.ConfiguracionPresupuestos import ConfiguracionPresupuestos
from src.domain.services.SondaIndices import SondaIndices
from src.infrastructure.Registro import Registro

Resultado = Tuple[bool, str]


# Ordinales al azar

def _ordinal_aleatorio(rng: np.random.Generator, max_exponente: int = 3,
                       max_coeficiente: int = 5, max_terminos: int = 3) -> Ordinal:
    """Ordinal menor que ω^ω con exponentes y coeficientes acotados."""
    cantidad = int(rng.integers(0, max_terminos + 1))
    exponentes = sorted(rng.choice(max_exponente + 1, size=cantidad, replace=False).tolist(), reverse=True)
    return Ordinal(tuple(
        (Ordinal.finito(int(e)), int(rng.integers(1, max_coeficiente + 1))) for e in exponentes
    ))


def _ordinal_bajo_omega_2(c1: int, c0: int) -> Ordinal:
    """ω·c1 + c0."""
    return Ordinal(tuple(
        (Ordinal.finito(e), c) for e, c in ((1, c1), (0, c0)) if c
    ))


# Oráculo de tipo de orden bajo ω²
#
# Un buen orden explícito es una sucesión de bloques y sus elementos son los
# pares (bloque, posición) en orden lexicográfico. Un bloque es una cadena
# finita de k elementos (k) o una copia de ℕ (None).

Bloque = Optional[int]


def _orden_explicito(c1: int, c0: int) -> Tuple[Bloque, ...]:
    """Pares (i, j) con i < c1 y j ∈ ℕ, seguidos de (c1, j) con j < c0."""
    return (None,) * c1 + ((c0,) if c0 else ())


def _orden_suma(a: Tuple[Bloque, ...], b: Tuple[Bloque, ...]) -> Tuple[Bloque, ...]:
    """Todos los elementos de a antes que los de b."""
    return a + b


def _orden_producto(a: Tuple[Bloque, ...], b: Tuple[Bloque, ...]) -> Optional[Tuple[Bloque, ...]]:
    """
    Pares (y, x) con y ∈ b y x ∈ a, ordenados primero por y.

    Returns:
        El orden, o None si a y b son infinitos (el producto no queda bajo ω²)
    """
    tamano_a = None if None in a else sum(a)
    resultado: List[Bloque] = []
    for bloque in b:
        if bloque is not None:
            resultado.extend(a * bloque)
        elif tamano_a is None:
            return None
        elif tamano_a:
            # ℕ × {0..m-1}: (j, t) tiene j·m + t predecesores y no hay máximo
            resultado.append(None)
    return tuple(resultado)


def _filas(orden: Sequence[Bloque]) -> Tuple[Bloque, ...]:
    """
    Imagen de x ↦ (límites ≤ x, elementos entre el último límite y x).

    Un límite es el primer elemento de un bloque que sigue a una copia de ℕ:
    tiene infinitos predecesores y ninguno inmediato. La fila i de la imagen
    es {0..k-1} (se guarda k) o ℕ (None); una fila infinita al final deja una
    fila vacía detrás.
    """
    filas: List[Bloque] = [0]
    for bloque in orden:
        if bloque == 0:
            continue
        if filas[-1] is None:
            filas.append(0)
        filas[-1] = None if bloque is None else filas[-1] + bloque
    if filas[-1] is None:
        filas.append(0)
    return tuple(filas)


@lru_cache(maxsize=4096)
def _filas_explicitas(c1: int, c0: int) -> Tuple[Bloque, ...]:
    return _filas(_orden_explicito(c1, c0))


def _tipo_orden(orden: Sequence[Bloque]) -> Ordinal:
    """
    Busca exhaustivamente el γ = ω·c1 + c0 cuyo orden explícito tiene la misma
    imagen por la inmersión de filas; la composición de una inmersión con la
    inversa de la otra es el isomorfismo. c1 no supera las copias de ℕ de
    `orden` y c0 sus elementos en bloques finitos.

    Raises:
        ErrorEstructura: Si no hay exactamente un candidato
    """
    filas = _filas(orden)
    copias = sum(1 for b in orden if b is None)
    finitos = sum(b for b in orden if b is not None)
    candidatos = [
        (c1, c0) for c1 in range(copias + 1) for c0 in range(finitos + 1)
        if _filas_explicitas(c1, c0) == filas
    ]
    if len(candidatos) != 1:
        raise ErrorEstructura(f"El orden {orden} no tiene un único tipo bajo ω²: {candidatos}")
    return _ordinal_bajo_omega_2(*candidatos[0])


# Árboles al azar

def _arbol_aleatorio(rng: np.random.Generator, max_nodos: int, ramificacion: int = 4) -> ArbolFinito:
    objetivo = int(rng.integers(1, max_nodos + 1))
    nodos = [()]
    vistos = {()}
    while len(nodos) < objetivo:
        padre = nodos[int(rng.integers(len(nodos)))]
        hijo = padre + (int(rng.integers(1, ramificacion + 1)),)
        if hijo not in vistos:
            vistos.add(hijo)
            nodos.append(hijo)
    return ArbolFinito(frozenset(nodos), True)


# Oráculos exhaustivos de normas

def _conjuntos_s1(n: int, desde: int = 1):
    """Subconjuntos no vacíos E ⊆ {desde..n} con |E| ≤ min E."""
    for tamano in range(1, n - desde + 2):
        for e in itertools.combinations(range(desde, n + 1), tamano):
            if tamano <= e[0]:
                yield e


def _oraculo_schreier_1(v: Sequence[Fraction]) -> Fraction:
    return max((sum((abs(v[i - 1]) for i in e), Fraction(0)) for e in _conjuntos_s1(len(v))),
               default=Fraction(0))


def _oraculo_xxi2_1_cuadrado(v: Sequence[Fraction]) -> Fraction:
    """max Σ_j (Σ_{i∈E_j} |v_i|)² sobre E_1 < E_2 < … en S_1."""
    n = len(v)

    def mejor(desde: int) -> Fraction:
        valor = Fraction(0)
        for e in _conjuntos_s1(n, desde):
            peso = sum((abs(v[i - 1]) for i in e), Fraction(0))
            valor = max(valor, peso ** 2 + mejor(e[-1] + 1))
        return valor

    return mejor(1)


def _oraculo_sumante(v: Sequence[Fraction]) -> Fraction:
    return max(abs(sum(v[:m], Fraction(0))) for m in range(1, len(v) + 1))


def _normas_flotantes(descriptor: DescriptorNorma, puntos: np.ndarray) -> np.ndarray:
    """Norma de cada fila de `puntos` para ℓ₁, ℓ_∞, sumante y Schreier(1, n)."""
    absolutos = np.abs(puntos)
    if descriptor.tipo == TipoDescriptor.LP and descriptor.p == 1:
        return absolutos.sum(axis=1)
    if descriptor.tipo == TipoDescriptor.LP and descriptor.p == INFINITO:
        return absolutos.max(axis=1)
    if descriptor.tipo == TipoDescriptor.SUMANTE:
        return np.abs(np.cumsum(puntos, axis=1)).max(axis=1)
    if descriptor.tipo == TipoDescriptor.SCHREIER:
        n = descriptor.dim
        mascaras = np.array([[1.0 if i + 1 in e else 0.0 for i in range(n)] for e in _conjuntos_s1(n)])
        return (absolutos @ mascaras.T).max(axis=1)
    raise ErrorEstructura(f"Sin oráculo flotante para {descriptor}")


def _malla_caras(n: int, paso: float) -> Iterator[np.ndarray]:
    """
    Puntos de la malla de paso `paso` sobre las caras a_i = 1 del cubo [-1, 1]^n,
    en bloques de filas. Las normas son pares y el cociente es homogéneo, así que
    cada dirección del cubo tiene un múltiplo positivo o negativo en alguna cara.
    """
    if n == 1:
        yield np.ones((1, 1))
        return
    eje = np.arange(-1.0, 1.0 + paso / 2, paso)
    if n == 2:
        resto = np.zeros((1, 0))
    else:
        resto = np.stack(np.meshgrid(*([eje] * (n - 2)), indexing='ij'), axis=-1).reshape(-1, n - 2)
    for cara in range(n):
        for primero in eje:
            libres = np.column_stack([np.full(len(resto), primero), resto])
            yield np.insert(libres, cara, 1.0, axis=1)


def _base_canonica(n: int) -> List[VectorFinito]:
    return [VectorFinito.base_canonica(n, i) for i in range(n)]


class VerificacionService:
    """
    Ejecuta las suites de aceptación 1-13.

    Cada suite acepta parámetros de tamaño con los valores de aceptación
    por defecto, de modo que las pruebas pueden correr versiones reducidas.
    """

    def __init__(self, semilla: Optional[int] = None,
                 presupuestos: Optional[ConfiguracionPresupuestos] = None):
        """
        Args:
            semilla: Semilla base de los generadores (por defecto la configurada)
            presupuestos: Presupuestos de la invocación (por defecto los valores de fábrica)
        """
        self.presupuestos = ConfiguracionPresupuestos.resolver(presupuestos)
        self.semilla = self.presupuestos.semilla if semilla is None else semilla
        self.suites: List[Tuple[int, str, Callable[[], Resultado]]] = [
            (1, 'leyes_ordinales', self.suite_leyes_ordinales),
            (2, 'oraculo_tipo_orden', self.suite_oraculo_tipo_orden),
            (3, 'rangos_arboles_minimos', self.suite_rangos_arboles_minimos),
            (4, 'identidades_derivada', self.suite_identidades_derivada),
            (5, 'convergencia_indices_familias', self.suite_indices_familias),
            (6, 'extension_hereditariedad', self.suite_extension_hereditariedad),
            (7, 'busqueda_gasparis', self.suite_gasparis),
            (8, 'oraculos_normas', self.suite_oraculos_normas),
            (9, 'dominacion_exacta', self.suite_dominacion_exacta),
            (10, 'indice_rango_finito', self.suite_indice_rango_finito),
            (11, 'estabilidad_perturbacion', self.suite_estabilidad_perturbacion),
            (12, 'certificados_modelo_extendido', self.suite_certificados_modelo_extendido),
            (13, 'truncamiento_w', self.suite_truncamiento_w),
        ]

    def _rng(self, numero: int) -> np.random.Generator:
        return np.random.default_rng(self.semilla + numero)

    def ejecutar(self, suite: Union[str, int, None] = 'all') -> List[ResultadoSuite]:
        """
        Ejecuta todas las suites o una sola (por número o nombre).

        Raises:
            ErrorEstructura: Si la suite no existe
        """
        if suite is None or str(suite) == 'all':
            seleccion = self.suites
        else:
            seleccion = [s for s in self.suites if str(suite) in (str(s[0]), s[1])]
            if not seleccion:
                raise ErrorEstructura(f"Suite desconocida: {suite}")
        return [self.ejecutar_suite(numero, nombre, funcion) for numero, nombre, funcion in seleccion]

    def ejecutar_suite(self, numero: int, nombre: str, funcion: Callable[[], Resultado]) -> ResultadoSuite:
        Registro.info(f"Suite {numero}: {nombre}...")
        inicio = time.perf_counter()
        try:
            aprobado, detalle = funcion()
        except ErrorDominio as e:
            aprobado, detalle = False, f"{e.codigo}: {e.mensaje}"
        segundos = time.perf_counter() - inicio
        if aprobado:
            Registro.info(f"Suite {numero} PASS ({segundos:.2f} s): {detalle}")
        else:
            Registro.error(f"Suite {numero} FAIL ({segundos:.2f} s): {detalle}")
        return ResultadoSuite(numero, nombre, aprobado, detalle, segundos)

    # 1-2: ordinales

    def suite_leyes_ordinales(self, cantidad: int = 10_000) -> Resultado:
        rng = self._rng(1)
        sumar, multiplicar = AritmeticaOrdinal.sumar, AritmeticaOrdinal.multiplicar
        potencia = AritmeticaOrdinal.potencia_omega
        for _ in range(cantidad):
            a, b, c = (_ordinal_aleatorio(rng) for _ in range(3))
            if sumar(sumar(a, b), c) != sumar(a, sumar(b, c)):
                return False, f"(a+b)+c ≠ a+(b+c) con a={a}, b={b}, c={c}"
            if multiplicar(multiplicar(a, b), c) != multiplicar(a, multiplicar(b, c)):
                return False, f"(a·b)·c ≠ a·(b·c) con a={a}, b={b}, c={c}"
            if multiplicar(a, sumar(b, c)) != sumar(multiplicar(a, b), multiplicar(a, c)):
                return False, f"a·(b+c) ≠ a·b+a·c con a={a}, b={b}, c={c}"
            if multiplicar(potencia(a), potencia(b)) != potencia(sumar(a, b)):
                return False, f"ω^a·ω^b ≠ ω^(a+b) con a={a}, b={b}"
            menor, mayor = sorted((b, c))
            if menor != mayor:
                if not sumar(a, menor) < sumar(a, mayor):
                    return False, f"a+b < a+c falla con a={a}, b={menor}, c={mayor}"
                if not a.es_cero and not multiplicar(a, menor) < multiplicar(a, mayor):
                    return False, f"a·b < a·c falla con a={a}, b={menor}, c={mayor}"
        return True, f"{cantidad} ternas bajo ω^ω"

    def suite_oraculo_tipo_orden(self, max_coeficiente: int = 5) -> Resultado:
        coeficientes = list(itertools.product(range(max_coeficiente + 1), repeat=2))
        productos = 0
        for ca, cb in itertools.product(coeficientes, repeat=2):
            a, b = _ordinal_bajo_omega_2(*ca), _ordinal_bajo_omega_2(*cb)
            orden_a, orden_b = _orden_explicito(*ca), _orden_explicito(*cb)
            suma = _tipo_orden(_orden_suma(orden_a, orden_b))
            if AritmeticaOrdinal.sumar(a, b) != suma:
                return False, f"{a} + {b}: {AritmeticaOrdinal.sumar(a, b)} vs {suma}"
            orden_producto = _orden_producto(orden_a, orden_b)
            if orden_producto is None:
                continue
            producto = _tipo_orden(orden_producto)
            if AritmeticaOrdinal.multiplicar(a, b) != producto:
                return False, f"{a} · {b}: {AritmeticaOrdinal.multiplicar(a, b)} vs {producto}"
            productos += 1
        return True, f"{len(coeficientes) ** 2} sumas y {productos} productos bajo ω²"

    # 3-4: árboles

    def suite_rangos_arboles_minimos(self, max_xi: int = 12, max_n: int = 10) -> Resultado:
        for xi in range(1, max_xi + 1):
            minimo = CalculadorArboles.arbol_minimo(xi)
            arbol = CalculadorArboles.truncar(minimo, xi, self.presupuestos)
            rango = CalculadorArboles.rango(arbol)
            if rango.valor != Ordinal.finito(xi) or CalculadorArboles.rango_recursivo(arbol) != rango:
                return False, f"o(T_{xi}) = {rango}"
            if CalculadorArboles.rango_simbolico(minimo, self.presupuestos).valor != Ordinal.finito(xi):
                return False, f"Rango simbólico de T_{xi} distinto de {xi}"
        omega = CalculadorArboles.arbol_minimo(OMEGA)
        for n in range(1, max_n + 1):
            rango = CalculadorArboles.rango(CalculadorArboles.truncar(omega, n, self.presupuestos))
            if rango.valor != Ordinal.finito(n):
                return False, f"T_ω truncado a {n} tiene rango {rango}"
        return True, f"T_ξ para ξ ≤ {max_xi}; T_ω truncado hasta {max_n}"

    def suite_identidades_derivada(self, cantidad: int = 500, max_nodos: int = 120) -> Resultado:
        rng = self._rng(4)
        for indice in range(cantidad):
            arbol = _arbol_aleatorio(rng, max_nodos)
            rango = CalculadorArboles.rango(arbol).valor.valor_finito
            derivadas = [arbol]
            for _ in range(rango):
                derivadas.append(CalculadorArboles.derivada(derivadas[-1]))
            if not derivadas[-1].es_vacio:
                return False, f"Árbol {indice}: T^o(T) no es vacío"
            for zeta in range(rango + 1):
                actual = derivadas[zeta]
                for xi in range(1, rango - zeta + 1):
                    actual = CalculadorArboles.derivada(actual)
                    if actual != derivadas[zeta + xi]:
                        return False, f"Árbol {indice}: (T^{zeta})^{xi} ≠ T^{zeta + xi}"
                if CalculadorArboles.derivada_iterada(derivadas[zeta], rango - zeta) != derivadas[rango]:
                    return False, f"Árbol {indice}: derivada iterada desde {zeta}"
            if not CalculadorArboles.derivada_iterada(arbol, OMEGA).es_vacio:
                return False, f"Árbol {indice}: T^ω no es vacío"
            nodos = arbol.ordenados()
            for _ in range(3):
                t = nodos[int(rng.integers(len(nodos)))]
                subarbol = CalculadorArboles.subarbol(arbol, t)
                for xi in range(rango + 1):
                    if CalculadorArboles.subarbol(derivadas[xi], t) != CalculadorArboles.derivada_iterada(subarbol, xi):
                        return False, f"Árbol {indice}: (T^{xi})({t}) ≠ (T({t}))^{xi}"
        return True, f"{cantidad} árboles de hasta {max_nodos} nodos"

    # 5-7: familias

    def suite_indices_familias(self, max_k: int = 6, max_n: int = 12, max_n_s1: int = 16) -> Resultado:
        indice = CalculadorFamilias.indice_cb_restringido
        presupuestos = self.presupuestos

        def restringir(familia, n):
            return CalculadorFamilias.restringir(familia, n, presupuestos)

        for k in range(1, max_k + 1):
            a_k = ExpresionFamilia.a(k)
            for n in range(k, max_n + 1):
                if indice(restringir(a_k, n)) != k:
                    return False, f"cb(A_{k}, {n}) ≠ {k}"
            if CalculadorFamilias.iota_simbolico(a_k) != Ordinal.finito(k):
                return False, f"ι(A_{k}) ≠ {k}"
        compuesta = ExpresionFamilia.componer(ExpresionFamilia.a(2), ExpresionFamilia.a(3))
        if CalculadorFamilias.iota_simbolico(compuesta) != Ordinal.finito(6):
            return False, "ι(A_2[A_3]) ≠ 6"
        for n in range(6, min(max_n, 10) + 1):
            if indice(restringir(compuesta, n)) != 6:
                return False, f"cb(A_2[A_3], {n}) ≠ 6"
        s1 = ExpresionFamilia.schreier(UNO)
        if CalculadorFamilias.iota_simbolico(s1) != OMEGA:
            return False, "ι(S_1) ≠ ω"
        valores = [indice(restringir(s1, n)) for n in range(2, max_n_s1 + 1)]
        if any(b < a for a, b in zip(valores, valores[1:])):
            return False, f"cb(S_1, n) decrece: {valores}"
        if any(c <= a for a, c in zip(valores, valores[2:])):
            return False, f"cb(S_1, n) no crece cada dos pasos: {valores}"
        return True, f"cb(S_1, 2..{max_n_s1}) = {valores}"

    def suite_extension_hereditariedad(self, n: int = 12) -> Resultado:
        s1 = ExpresionFamilia.schreier(1)
        familias = [
            ExpresionFamilia.s0(),
            s1,
            ExpresionFamilia.schreier(2),
            ExpresionFamilia.a(3),
            ExpresionFamilia.componer(ExpresionFamilia.a(2), s1),
            ExpresionFamilia.componer(s1, ExpresionFamilia.a(2)),
        ]
        for familia in familias:
            restringida = CalculadorFamilias.restringir(familia, n, self.presupuestos)
            hereditaria, fallo = CalculadorFamilias.es_hereditaria(restringida)
            if not hereditaria:
                return False, f"{familia} no es hereditaria: {fallo}"
            extendible, fallo = CalculadorFamilias.es_extendible(restringida)
            if not extendible:
                return False, f"{familia} no es extendible: {fallo}"
        return True, f"{len(familias)} familias en {{1..{n}}}"

    def suite_gasparis(self) -> Resultado:
        a3, s1 = ExpresionFamilia.a(3), ExpresionFamilia.schreier(1)
        prefijo = CalculadorFamilias.busqueda_prefijo_gasparis(a3, s1, 5, 30, presupuestos=self.presupuestos)
        if (prefijo != (3, 4, 5, 6, 7)
                or not CalculadorFamilias.validar_prefijo_gasparis(a3, s1, prefijo, self.presupuestos)):
            return False, f"(A_3, S_1) dio {prefijo}"
        pares = CalculadorFamilias.busqueda_prefijo_gasparis(a3, s1, 5, 30, dentro_de=range(2, 31, 2),
                                                          presupuestos=self.presupuestos)
        if pares != (4, 6, 8, 10, 12):
            return False, f"(A_3, S_1) dentro de los pares dio {pares}"
        ausente = CalculadorFamilias.busqueda_prefijo_gasparis(s1, ExpresionFamilia.a(2), 5, 30,
                                                            presupuestos=self.presupuestos)
        if ausente is not None:
            return False, f"(S_1, A_2) dio {ausente}"
        return True, "(A_3, S_1) → (3,4,5,6,7); (S_1, A_2) sin prefijo a profundidad 5"

    # 8-9: normas y dominación

    def suite_oraculos_normas(self, cantidad: int = 20) -> Resultado:
        tolerancia = self.presupuestos.ancho_intervalo
        presupuestos = self.presupuestos

        def norma(descriptor, vector):
            return CalculadorNormas.norma(descriptor, vector, presupuestos=presupuestos)

        def cuadrado_en(intervalo, cuadrado: Fraction) -> bool:
            return intervalo.inferior ** 2 <= cuadrado <= intervalo.superior ** 2 and intervalo.ancho <= tolerancia

        unos = VectorFinito.de([1, 1, 1, 1])
        if norma(DescriptorNorma.schreier(1, 4), unos).valor != _oraculo_schreier_1(unos) or _oraculo_schreier_1(unos) != 2:
            return False, "Schreier(1,4) en unos ≠ 2"
        par = VectorFinito.de([0, 1, 1, 0])
        if _oraculo_xxi2_1_cuadrado(par) != 4 or not cuadrado_en(norma(DescriptorNorma.x_xi_2(1, 4), par), Fraction(4)):
            return False, "XXi2(1,4) en 1_{2,3} ≠ 2"
        cadena = DescriptorNorma.z(1, 2, [(1,), (1, 1), (1, 1, 1), (1, 1, 1, 1)])
        antichain = DescriptorNorma.z(1, 2, [(1,), (2,), (3,), (4,)])
        for descriptor, esperado in ((cadena, 4), (antichain, 2)):
            valor = norma(descriptor, unos)
            exhaustivo = CalculadorNormas.norma_z_exhaustiva(descriptor, unos, presupuestos=self.presupuestos)
            if not (valor.contiene(esperado) and exhaustivo.contiene(esperado)):
                return False, f"Z(1,2) sobre {descriptor.nodos}: {valor} vs {exhaustivo}, se esperaba {esperado}"
        alternado = VectorFinito.de([1, -1, 1])
        if norma(DescriptorNorma.sumante(3), alternado).valor != _oraculo_sumante(alternado) or _oraculo_sumante(alternado) != 1:
            return False, "summing(3) en (1,-1,1) ≠ 1"
        v = VectorFinito.de([3, 4])
        convexificada = norma(DescriptorNorma.convexificacion(DescriptorNorma.lp(1, 2), 2), v)
        if not (convexificada.contiene(5) and norma(DescriptorNorma.lp(2, 2), v).contiene(5)):
            return False, f"conv(ℓ₁, 2) en (3,4) = {convexificada}"

        rng = self._rng(8)
        for _ in range(cantidad):
            v = VectorFinito.de(int(c) for c in rng.integers(-6, 7, size=6))
            if norma(DescriptorNorma.schreier(1, 6), v).valor != _oraculo_schreier_1(v):
                return False, f"Schreier(1,6) en {v}"
            if not cuadrado_en(norma(DescriptorNorma.x_xi_2(1, 6), v), _oraculo_xxi2_1_cuadrado(v)):
                return False, f"XXi2(1,6) en {v}"
            if norma(DescriptorNorma.sumante(6), v).valor != _oraculo_sumante(v):
                return False, f"summing(6) en {v}"
        return True, f"ejemplos fijos y {cantidad} vectores al azar"

    def suite_dominacion_exacta(self, max_n: int = 4, paso: float = 1 / 64) -> Resultado:
        instancias = 0
        for n in range(1, max_n + 1):
            espacios = [DescriptorNorma.lp(1, n), DescriptorNorma.lp('inf', n),
                        DescriptorNorma.schreier(1, n), DescriptorNorma.sumante(n)]
            pares = list(itertools.product(range(len(espacios)), repeat=2))
            maximos = np.zeros((len(espacios), len(espacios)))
            for puntos in _malla_caras(n, paso):
                normas = [_normas_flotantes(d, puntos) for d in espacios]
                for i, j in pares:
                    positivos = normas[j] > 1e-12
                    if positivos.any():
                        cociente = float((normas[i][positivos] / normas[j][positivos]).max())
                        maximos[i, j] = max(maximos[i, j], cociente)
            base = _base_canonica(n)
            for i, j in pares:
                x, y = espacios[i], espacios[j]
                reporte = CalculadorDominacion.constante_dominacion(base, x, base, y, self.presupuestos)
                if not reporte.exacto:
                    return False, f"{x} ≲ {y}: no exacto ({reporte.modo})"
                malla = float(maximos[i, j])
                k = float(reporte.superior)
                if malla > k + 1e-9 or malla < k - 2 * n * paso * k:
                    return False, f"{x} ≲ {y}: K = {k}, malla = {malla}"
                instancias += 1
        reporte = CalculadorDominacion.constante_dominacion(
            _base_canonica(2), DescriptorNorma.lp(1, 2), _base_canonica(2), DescriptorNorma.lp(2, 2),
            self.presupuestos,
        )
        raiz = 2 ** 0.5
        if (reporte.es_infinito or not reporte.inferior ** 2 <= 2 <= reporte.superior ** 2
                or float(reporte.superior) - raiz > 1e-9 or raiz - float(reporte.inferior) > 1e-9):
            return False, f"ℓ₁ → ℓ₂: [{reporte.inferior}, {reporte.superior}]"
        return True, f"{instancias} instancias poliédricas; ℓ₁ → ℓ₂ = √2"

    # 10-12: índices

    def suite_indice_rango_finito(self, cantidad: int = 200, max_dimension: int = 5) -> Resultado:
        rng = self._rng(10)
        for indice in range(cantidad):
            r = int(rng.integers(1, 4))
            n = int(rng.integers(r, max_dimension + 1))
            m = int(rng.integers(r, max_dimension + 1))
            while True:
                entradas = (rng.integers(-3, 4, size=(m, r)) @ rng.integers(-3, 4, size=(r, n))).tolist()
                if Matrix(entradas).rank() == r:
                    break
            operador = MatrizOperador(tuple(tuple(int(a) for a in fila) for fila in entradas),
                                      DescriptorNorma.lp(1, n), DescriptorNorma.lp(1, m))
            config = ConfiguracionSonda(base=DescriptorNorma.lp(1, n), constante=None, profundidad_maxima=n)
            reporte = SondaIndices.sonda_profundidad_np(operador, config, self.presupuestos)
            if (reporte.profundidad_testigo != r or reporte.imposible_desde != r + 1
                    or reporte.razon != RazonImposibilidad.RANGO or reporte.indice_finito != 1 + r):
                return False, f"Matriz {indice} de rango {r}: {reporte.to_dict()}"
            if not SondaIndices.validar_reporte(operador, config, reporte, self.presupuestos):
                return False, f"Matriz {indice}: la cadena testigo no se revalida"
        return True, f"{cantidad} matrices con índice 1 + rango"

    def suite_estabilidad_perturbacion(self, cantidad: int = 100) -> Resultado:
        rng = self._rng(11)
        for indice in range(cantidad):
            n = int(rng.integers(2, 4))
            espacio = DescriptorNorma.lp(1, n)
            while True:
                entradas = rng.integers(-3, 4, size=(n, n)).tolist()
                if Matrix(entradas).det() != 0:
                    break
            a = MatrizOperador(tuple(tuple(int(x) for x in fila) for fila in entradas), espacio, espacio)
            cadena = _base_canonica(n)
            reporte = CalculadorDominacion.constante_dominacion(
                cadena, espacio, [a.aplicar(x) for x in cadena], espacio, self.presupuestos
            )
            config = ConfiguracionSonda(base=espacio, constante=max(Fraction(1), reporte.superior))
            if SondaIndices.np_miembro(a, config, cadena, self.presupuestos) is not True:
                return False, f"Instancia {indice}: la cadena no es testigo para A"
            ruido = MatrizOperador(
                tuple(tuple(Fraction(int(x), 8) for x in fila) for fila in rng.integers(-8, 9, size=(n, n))),
                espacio, espacio,
            )
            norma_ruido = CalculadorDominacion.norma_operador(ruido, self.presupuestos).superior
            if norma_ruido == 0:
                ruido, norma_ruido = MatrizOperador.identidad(espacio), Fraction(1)
            ruido = ruido.escalar(1 / (4 * config.constante * norma_ruido))
            b = a.restar(ruido)
            if SondaIndices.perturbacion_estable(a, b, config, cadena, self.presupuestos) is not True:
                return False, f"Instancia {indice}: la cadena no es testigo para B a 2K"
        return True, f"{cantidad} perturbaciones con ‖A−B‖ = 1/4K"

    def suite_certificados_modelo_extendido(self, n_schreier: int = 10, n_infinito: int = 8,
                                            profundidad_sumante: int = 8) -> Resultado:
        espacio = DescriptorNorma.schreier(1, n_schreier)
        valido, fallo = SondaIndices.certificado_modelo_extendido(
            _base_canonica(n_schreier), espacio, 1, 1, 1, 1, self.presupuestos
        )
        if valido is not True:
            return False, f"La base de Schreier falla el certificado ℓ₁ en {fallo}"
        valido, fallo = SondaIndices.certificado_modelo_extendido(
            _base_canonica(n_infinito), DescriptorNorma.lp('inf', n_infinito), 1, 1, 1, 1,
            self.presupuestos,
        )
        if valido is not False or fallo[0] != (2, 3):
            return False, f"La base de ℓ_∞ debía fallar en {{2,3}}: {fallo}"
        for n in range(1, profundidad_sumante + 1):
            c0 = DescriptorNorma.lp('inf', n)
            miembro = SondaIndices.wc_miembro(MatrizOperador.identidad(c0), 1, SondaIndices.cadena_sumante(n),
                                              self.presupuestos)
            if miembro is not True:
                return False, f"La cadena sumante de largo {n} no es miembro a K = 1"
        return True, f"Schreier hasta {n_schreier}; ℓ_∞ falla en {{2,3}}; sumante hasta {profundidad_sumante}"

    # 13: espacios W

    def suite_truncamiento_w(self, cantidad: int = 50) -> Resultado:
        espacio = CombinadorOperadores.aproximacion_espacio_w(1, 3, self.presupuestos)
        if espacio.dimension != 6:
            return False, f"W_1 con 3 sumandos tiene dimensión {espacio.dimension}"
        tolerancia = self.presupuestos.ancho_intervalo
        rng = self._rng(13)
        for _ in range(cantidad):
            v = [int(c) for c in rng.integers(-5, 6, size=6)]
            cuadrado = Fraction(
                v[0] ** 2 + (abs(v[1]) + abs(v[2])) ** 2 + (abs(v[3]) + abs(v[4]) + abs(v[5])) ** 2
            )
            norma = CalculadorNormas.norma(espacio, VectorFinito.de(v), presupuestos=self.presupuestos)
            if not (norma.inferior ** 2 <= cuadrado <= norma.superior ** 2) or norma.ancho > tolerancia:
                return False, f"‖{v}‖ = {norma}, se esperaba √{cuadrado}"
        return True, f"{cantidad} vectores de W_1 (3 sumandos)"
