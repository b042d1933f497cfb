"""
Servicio de dominio: CalculadorDominacion

Constante de dominación entre sucesiones finitas de vectores:

    K = sup_{a≠0} ‖Σ a_i x_i‖_X / ‖Σ a_i y_i‖_Y

Modo exacto cuando Y es poliédrica (enumeración de vértices, o programación
lineal con certificado dual si la enumeración excede el presupuesto). Entre
espacios ℓ₂ la constante es la raíz del mayor autovalor generalizado de las
matrices de Gram, aislado como número algebraico. En cualquier otro caso se
devuelven cotas certificadas.
"""

from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.linalg import eigh
from scipy.optimize import linprog
from sympy import Matrix, Poly, Rational, Symbol

from src.domain.Errores import ErrorDimension, ErrorPrecondicion, ErrorPresupuesto
from src.domain.entities.DescriptorNorma import DescriptorNorma, INFINITO, TipoDescriptor
from src.domain.entities.Intervalo import Intervalo
from src.domain.entities.MatrizOperador import MatrizOperador
from src.domain.entities.ReporteDominacion import ReporteDominacion
from src.domain.entities.VectorFinito import VectorFinito
from src.domain.services.CalculadorNormas import CalculadorNormas
from src.domain.services.ConfiguracionPresupuestos import ConfiguracionPresupuestos
from src.domain.services.EnumeradorVertices import (
    EnumeradorVertices, a_fracciones, a_sympy, producto_punto
)
from src.infrastructure.Registro import Registro

Coeficientes = Tuple[Fraction, ...]


class CalculadorDominacion:
    """Servicio para constantes de dominación y propiedades de bases."""

    # Holgura máxima para considerar activa una restricción del LP
    HOLGURA_ACTIVA = 1e-7
    # Paso mínimo del ascenso por coordenadas
    PASO_MINIMO = Fraction(1, 2 ** 12)
    ITERACIONES_POR_PASO = 64

    @classmethod
    def constante_dominacion(cls, xs: Sequence[VectorFinito], espacio_x: DescriptorNorma,
                             ys: Sequence[VectorFinito], espacio_y: DescriptorNorma,
                             presupuestos: Optional[ConfiguracionPresupuestos] = None) -> ReporteDominacion:
        """
        Menor K con ‖Σ a_i x_i‖_X ≤ K ‖Σ a_i y_i‖_Y para todo a.

        Args:
            xs: Vectores del espacio X
            espacio_x: Descriptor de X
            ys: Vectores del espacio Y (misma cantidad que xs)
            espacio_y: Descriptor de Y
            presupuestos: Límites de vértices, arranques y ancho de intervalo

        Returns:
            ReporteDominacion exacto, infinito o con cotas

        Raises:
            ErrorDimension: Si las cantidades o dimensiones no coinciden
        """
        xs, ys = cls._validar(xs, espacio_x, ys, espacio_y)
        presupuestos = ConfiguracionPresupuestos.resolver(presupuestos)
        n = len(xs)
        matriz_x = cls._matriz_columnas(xs)
        matriz_y = cls._matriz_columnas(ys)

        for d in matriz_y.nullspace():
            if any(c != 0 for c in matriz_x * d):
                testigo = cls._orientar(a_fracciones(d))
                Registro.info(f"Constante infinita: Σ a_i y_i = 0 con a = {[str(a) for a in testigo]}")
                return ReporteDominacion.infinita(testigo)

        rango = matriz_y.rank()
        if rango == 0:
            return ReporteDominacion(Fraction(0), Fraction(0), True, (Fraction(1),) + (Fraction(0),) * (n - 1))
        if rango < n:
            base = [a_fracciones(fila) for fila in matriz_y.rowspace()]
        else:
            base = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
        x_red = [VectorFinito.combinacion(fila, xs) for fila in base]
        y_red = [VectorFinito.combinacion(fila, ys) for fila in base]

        def levantar(c: Coeficientes) -> Coeficientes:
            return tuple(sum((cj * fila[i] for cj, fila in zip(c, base)), Fraction(0)) for i in range(n))

        funcionales_y = CalculadorNormas.funcionales(espacio_y, presupuestos)
        if funcionales_y is not None:
            atajo = cls._caso_l1_disjunto(xs, espacio_x, ys, espacio_y, presupuestos)
            if atajo is not None:
                valor, c = atajo
                return ReporteDominacion(valor.inferior, valor.superior, valor.exacto, c,
                                         'exacto' if valor.exacto else 'cotas')
            filas = EnumeradorVertices.filas_distintas(
                [[producto_punto(f, y) for y in y_red] for f in funcionales_y]
            )
            resultado = cls._modo_exacto(x_red, espacio_x, filas, presupuestos)
            if resultado is not None:
                valor, c = resultado
                exacto = valor.exacto
                return ReporteDominacion(valor.inferior, valor.superior, exacto, levantar(c),
                                         'exacto' if exacto else 'cotas')

        if cls._es_euclideo(espacio_x) and cls._es_euclideo(espacio_y):
            valor, c = cls._modo_euclideo(x_red, y_red, presupuestos.ancho_intervalo)
            return ReporteDominacion(valor.inferior, valor.superior, valor.exacto, levantar(c),
                                     'exacto' if valor.exacto else 'cotas')

        inferior, superior, c = cls._modo_cotas(xs, espacio_x, ys, espacio_y, x_red, y_red, presupuestos)
        exacto = superior is not None and inferior == superior
        return ReporteDominacion(inferior, superior, exacto, levantar(c), 'exacto' if exacto else 'cotas')

    @classmethod
    def _validar(cls, xs, espacio_x, ys, espacio_y) -> Tuple[List[VectorFinito], List[VectorFinito]]:
        xs = [x if isinstance(x, VectorFinito) else VectorFinito.de(x) for x in xs]
        ys = [y if isinstance(y, VectorFinito) else VectorFinito.de(y) for y in ys]
        if not xs or len(xs) != len(ys):
            raise ErrorDimension(f"Se requieren sistemas no vacíos de igual longitud ({len(xs)} y {len(ys)})")
        for vectores, espacio in ((xs, espacio_x), (ys, espacio_y)):
            for v in vectores:
                if len(v) != espacio.dimension:
                    raise ErrorDimension(
                        f"El vector {v} no pertenece a {espacio} (dimensión {espacio.dimension})"
                    )
        return xs, ys

    @staticmethod
    def _matriz_columnas(vectores: Sequence[VectorFinito]) -> Matrix:
        dim = len(vectores[0])
        return a_sympy([[v[i] for v in vectores] for i in range(dim)])

    @staticmethod
    def _orientar(c: Coeficientes) -> Coeficientes:
        pivote = next((a for a in c if a != 0), Fraction(0))
        return c if pivote >= 0 else tuple(-a for a in c)

    # Modo exacto

    @classmethod
    def _caso_l1_disjunto(cls, xs, espacio_x, ys, espacio_y,
                          presupuestos) -> Optional[Tuple[Intervalo, Coeficientes]]:
        """
        Y = ℓ₁ con y_i no nulos de soportes disjuntos: la bola es la envolvente
        de ±e_i/‖y_i‖ y K = max_i ‖x_i‖/‖y_i‖.
        """
        if espacio_y.tipo != TipoDescriptor.LP or espacio_y.p != 1:
            return None
        if any(y.es_cero for y in ys) or not cls._soportes_disjuntos(ys):
            return None
        mejor: Optional[Tuple[Intervalo, Coeficientes]] = None
        superior = Fraction(0)
        for i, (x, y) in enumerate(zip(xs, ys)):
            peso = sum((abs(c) for c in y), Fraction(0))
            valor = CalculadorNormas.norma(espacio_x, x, presupuestos=presupuestos).escalar(1 / peso)
            superior = max(superior, valor.superior)
            if mejor is None or valor.inferior > mejor[0].inferior:
                vertice = tuple(1 / peso if j == i else Fraction(0) for j in range(len(xs)))
                mejor = (valor, vertice)
        return Intervalo(mejor[0].inferior, superior), mejor[1]

    @classmethod
    def _modo_exacto(cls, x_red, espacio_x, filas, presupuestos) -> Optional[Tuple[Intervalo, Coeficientes]]:
        try:
            vertices = EnumeradorVertices.vertices(filas, presupuestos.max_vertices)
        except ErrorPresupuesto as e:
            Registro.advertencia(str(e))
            return cls._modo_lp(x_red, espacio_x, filas, presupuestos)

        valores = [
            (CalculadorNormas.norma(espacio_x, VectorFinito.combinacion(v, x_red), presupuestos=presupuestos), v)
            for v in vertices
        ]
        if not valores:
            return None
        # vértices en orden lexicográfico descendente: el primero gana empates
        mejor = valores[0]
        for valor, v in valores[1:]:
            if valor.inferior > mejor[0].inferior:
                mejor = (valor, v)
        superior = max(valor.superior for valor, _ in valores)
        return Intervalo(mejor[0].inferior, superior), mejor[1]

    @classmethod
    def _modo_lp(cls, x_red, espacio_x, filas, presupuestos) -> Optional[Tuple[Intervalo, Coeficientes]]:
        funcionales_x = CalculadorNormas.funcionales(espacio_x, presupuestos)
        if funcionales_x is None:
            return None
        objetivos = EnumeradorVertices.filas_distintas(
            [[producto_punto(f, x) for x in x_red] for f in funcionales_x]
        )
        r = len(x_red)
        if not objetivos:
            return Intervalo.punto(0), (Fraction(1),) + (Fraction(0),) * (r - 1)
        mejor: Optional[Tuple[Fraction, Coeficientes]] = None
        for g in objetivos:
            v = cls._maximo_certificado(g, filas)
            if v is None:
                Registro.advertencia("El certificado dual del programa lineal falló")
                return None
            valor = producto_punto(g, v)
            if mejor is None or (valor, v) > mejor:
                mejor = (valor, v)
        Registro.info(f"Constante certificada por dualidad con {len(objetivos)} funcionales")
        return Intervalo.punto(mejor[0]), mejor[1]

    @classmethod
    def _maximo_certificado(cls, g: Coeficientes, filas) -> Optional[Coeficientes]:
        """
        Vértice que maximiza g·c sobre {|h·c| ≤ 1}, con certificado dual exacto.

        Returns:
            Vértice exacto, o None si no se pudo certificar
        """
        normales = np.array([[float(a) for a in h] for h in filas])
        resultado = linprog(
            -np.array([float(a) for a in g]),
            np.vstack([normales, -normales]), np.ones(2 * len(filas)),
            bounds=(None, None), method='highs'
        )
        if not resultado.success:
            return None
        productos = normales @ resultado.x
        holguras = 1 - np.abs(productos)
        r = len(g)
        seleccion: List[Coeficientes] = []
        signos: List[int] = []
        for i in np.argsort(holguras):
            if holguras[i] > cls.HOLGURA_ACTIVA:
                break
            candidata = seleccion + [filas[i]]
            if a_sympy(candidata).rank() == len(candidata):
                seleccion.append(filas[i])
                signos.append(1 if productos[i] > 0 else -1)
            if len(seleccion) == r:
                break
        if len(seleccion) < r:
            return None
        orientadas = [tuple(s * a for a in h) for h, s in zip(seleccion, signos)]
        v = EnumeradorVertices.resolver(orientadas, [Fraction(1)] * r)
        if v is None or not EnumeradorVertices.es_factible(filas, v):
            return None
        transpuesta = [tuple(h[j] for h in orientadas) for j in range(r)]
        duales = EnumeradorVertices.resolver(transpuesta, g)
        if duales is None or any(y < 0 for y in duales):
            return None
        return v

    # Modo euclídeo

    @staticmethod
    def _es_euclideo(espacio: DescriptorNorma) -> bool:
        return espacio.tipo == TipoDescriptor.LP and espacio.p == 2

    @classmethod
    def _modo_euclideo(cls, x_red, y_red, tolerancia: Fraction) -> Tuple[Intervalo, Coeficientes]:
        """
        X = Y = ℓ₂: K² es el mayor autovalor generalizado del par de Gram
        (XᵀX, YᵀY), con YᵀY definida positiva porque y' es independiente.

        El autovalor se aísla como raíz real del polinomio característico de
        (YᵀY)⁻¹XᵀX con ancho ≤ (tolerancia/2)²; si es racional el intervalo es
        el exacto y el testigo sale del núcleo de XᵀX - λ·YᵀY.
        """
        matriz_x = cls._matriz_columnas(x_red)
        matriz_y = cls._matriz_columnas(y_red)
        gram_x = matriz_x.T * matriz_x
        gram_y = matriz_y.T * matriz_y
        lam = Symbol('lam')
        polinomio = Poly((gram_y.inv() * gram_x).charpoly(lam).as_expr(), lam, domain='QQ')

        ancho = (tolerancia / 2) ** 2
        aislados = polinomio.intervals(eps=Rational(ancho.numerator, ancho.denominator))
        (a, b), _ = max(aislados, key=lambda par: par[0][1])
        a, b = Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q))
        racionales = [Fraction(int(r.p), int(r.q)) for r in polinomio.ground_roots()]
        lam_max = next((r for r in racionales if a <= r <= b), None)

        if lam_max is not None:
            valor = Intervalo.raiz_racional(lam_max, 2, tolerancia)
            nucleo = (gram_x - Rational(lam_max.numerator, lam_max.denominator) * gram_y).nullspace()
            testigo = cls._orientar(a_fracciones(nucleo[0]))
        else:
            valor = Intervalo(max(a, Fraction(0)), b).raiz(2, tolerancia / 4)
            testigo = cls._vector_propio_aproximado(gram_x, gram_y)
        Registro.info(f"Constante euclídea K² = λ_max con K ∈ {valor}")
        return valor, testigo

    @classmethod
    def _vector_propio_aproximado(cls, gram_x: Matrix, gram_y: Matrix) -> Coeficientes:
        """Vector propio del mayor autovalor, redondeado a racionales diádicos."""
        _, vectores = eigh(np.array(gram_x.tolist(), dtype=float), np.array(gram_y.tolist(), dtype=float))
        columna = vectores[:, -1]
        escala = float(np.max(np.abs(columna))) or 1.0
        testigo = tuple(Fraction(int(round(z / escala * 2 ** 20)), 2 ** 20) for z in columna)
        if not any(testigo):
            testigo = (Fraction(1),) + (Fraction(0),) * (len(testigo) - 1)
        return cls._orientar(testigo)

    # Modo de cotas

    @classmethod
    def _modo_cotas(cls, xs, espacio_x, ys, espacio_y, x_red, y_red, presupuestos
                    ) -> Tuple[Fraction, Optional[Fraction], Coeficientes]:
        c, cociente = cls._ascenso(x_red, espacio_x, y_red, espacio_y, presupuestos)
        inferior, superior = cociente.inferior, None

        for cota in (cls._cota_dual(xs, espacio_x, ys, espacio_y, presupuestos),
                     cls._cota_diagonal(xs, espacio_x, ys, espacio_y, presupuestos),
                     cls._cota_identica(xs, espacio_x, ys, espacio_y)):
            if cota is not None:
                inferior = max(inferior, cota.inferior)
                superior = cota.superior if superior is None else min(superior, cota.superior)
        emparedado = cls._cota_emparedado(x_red, espacio_x, y_red, espacio_y, presupuestos)
        superior = emparedado if superior is None else min(superior, emparedado)
        superior = max(superior, inferior)
        Registro.info(f"Cotas de dominación: [{float(inferior):.6g}, {float(superior):.6g}]")
        return inferior, superior, c

    @classmethod
    def _cociente(cls, c, x_red, espacio_x, y_red, espacio_y, presupuestos, tol=None) -> Optional[Intervalo]:
        numerador = CalculadorNormas.norma(espacio_x, VectorFinito.combinacion(c, x_red), tol, presupuestos)
        denominador = CalculadorNormas.norma(espacio_y, VectorFinito.combinacion(c, y_red), tol, presupuestos)
        if denominador.inferior <= 0:
            return None
        return numerador.dividir(denominador)

    @classmethod
    def _semillas(cls, r: int, config: ConfiguracionPresupuestos) -> List[Coeficientes]:
        semillas: List[Coeficientes] = []
        if r <= 6:
            semillas.extend((Fraction(1),) + tuple(Fraction(s) for s in signos)
                            for signos in product((1, -1), repeat=r - 1))
        semillas.extend(tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r))
        generador = np.random.default_rng(config.semilla)
        while len(semillas) < config.arranques_ascenso:
            muestra = generador.standard_normal(r)
            semilla = tuple(Fraction(int(round(z * 1024)), 1024) for z in muestra)
            if any(semilla):
                semillas.append(semilla)
        return semillas[:max(config.arranques_ascenso, 1)]

    @classmethod
    def _ascenso(cls, x_red, espacio_x, y_red, espacio_y, presupuestos) -> Tuple[Coeficientes, Intervalo]:
        """Ascenso por coordenadas con múltiples arranques; devuelve el mejor testigo."""
        tol = Fraction(1, 10 ** 6)
        r = len(x_red)

        def evaluar(c) -> float:
            cociente = cls._cociente(c, x_red, espacio_x, y_red, espacio_y, presupuestos, tol)
            return -1.0 if cociente is None else float(cociente.medio)

        mejor_c, mejor_valor = None, -1.0
        for semilla in cls._semillas(r, presupuestos):
            c, valor = semilla, evaluar(semilla)
            paso = Fraction(1, 2)
            while paso >= cls.PASO_MINIMO:
                for _ in range(cls.ITERACIONES_POR_PASO):
                    mejora = False
                    for j in range(r):
                        for signo in (1, -1):
                            candidato = tuple(a + signo * paso if i == j else a for i, a in enumerate(c))
                            if not any(candidato):
                                continue
                            nuevo = evaluar(candidato)
                            if nuevo > valor + 1e-12:
                                c, valor, mejora = candidato, nuevo, True
                    if not mejora:
                        break
                paso /= 2
            if valor > mejor_valor:
                mejor_c, mejor_valor = c, valor

        cociente = cls._cociente(mejor_c, x_red, espacio_x, y_red, espacio_y, presupuestos)
        if cociente is None:
            cociente = Intervalo.punto(0)
        return cls._orientar(mejor_c), cociente

    @staticmethod
    def _soportes_disjuntos(vectores: Sequence[VectorFinito]) -> bool:
        usados = set()
        for v in vectores:
            soporte = set(v.soporte)
            if usados & soporte:
                return False
            usados |= soporte
        return True

    @staticmethod
    def _conjugado(p):
        if p == 1:
            return INFINITO
        if p == INFINITO:
            return Fraction(1)
        return p / (p - 1)

    @classmethod
    def _cota_dual(cls, xs, espacio_x, ys, espacio_y, presupuestos) -> Optional[Intervalo]:
        """
        Y = ℓ_p con y_i de soportes disjuntos y normas racionales, X poliédrica:
        K = max_f ‖(f(x_i)/‖y_i‖)_i‖_{p'}.
        """
        if espacio_y.tipo != TipoDescriptor.LP or not cls._soportes_disjuntos(ys):
            return None
        if any(y.es_cero for y in ys):
            return None
        funcionales = CalculadorNormas.funcionales(espacio_x, presupuestos)
        if funcionales is None:
            return None
        pesos = [CalculadorNormas.norma(espacio_y, y, presupuestos=presupuestos) for y in ys]
        if not all(w.exacto for w in pesos):
            return None
        conjugado = DescriptorNorma.lp(cls._conjugado(espacio_y.p), len(xs))
        return Intervalo.maximo(
            CalculadorNormas.norma(conjugado, VectorFinito.de(
                producto_punto(f, x) / w.valor for x, w in zip(xs, pesos)
            ), presupuestos=presupuestos)
            for f in funcionales
        )

    @classmethod
    def _cota_diagonal(cls, xs, espacio_x, ys, espacio_y, presupuestos) -> Optional[Intervalo]:
        """Mismo ℓ_p en ambos lados con soportes disjuntos: K = max ‖x_i‖/‖y_i‖."""
        if espacio_x.tipo != TipoDescriptor.LP or espacio_y.tipo != TipoDescriptor.LP:
            return None
        if espacio_x.p != espacio_y.p:
            return None
        if not (cls._soportes_disjuntos(xs) and cls._soportes_disjuntos(ys)):
            return None
        cocientes = []
        for x, y in zip(xs, ys):
            if y.es_cero:
                continue
            cocientes.append(CalculadorNormas.norma(espacio_x, x, presupuestos=presupuestos).dividir(
                CalculadorNormas.norma(espacio_y, y, presupuestos=presupuestos)))
        return Intervalo.maximo(cocientes) if cocientes else None

    @staticmethod
    def _cota_identica(xs, espacio_x, ys, espacio_y) -> Optional[Intervalo]:
        if espacio_x == espacio_y and list(xs) == list(ys):
            return Intervalo.punto(1)
        return None

    @classmethod
    def _cota_emparedado(cls, x_red, espacio_x, y_red, espacio_y, presupuestos) -> Fraction:
        """
        K ≤ max_j ‖x'_j‖ · Σ|M⁻¹| / c_Y, con M un menor invertible de la
        matriz de y' y c_Y la constante con ‖z‖_Y ≥ c_Y ‖z‖_∞.
        """
        matriz = cls._matriz_columnas(y_red)
        _, pivotes = matriz.T.rref()
        menor = matriz.extract(list(pivotes), list(range(matriz.cols)))
        suma_inversa = sum(abs(a) for a in a_fracciones(menor.inv()))
        maximo_x = max(CalculadorNormas.norma(espacio_x, x, presupuestos=presupuestos).superior for x in x_red)
        return maximo_x * suma_inversa / CalculadorNormas.constante_inferior_infinito(espacio_y, presupuestos)

    # Propiedades de bases

    @classmethod
    def decidir(cls, reporte: ReporteDominacion, cota) -> Optional[bool]:
        """
        K ≤ cota: True o False con certificado, None si las cotas no deciden.
        Un None es un estado aparte (no certificado), nunca una violación.
        """
        decision = reporte.cumple_cota(cota)
        if decision is None:
            Registro.advertencia(
                f"Cotas [{float(reporte.inferior):.6g}, {float(reporte.superior):.6g}] "
                f"no deciden K ≤ {cota}; se reporta como no certificado"
            )
        return decision

    @classmethod
    def es_k_basica(cls, xs: Sequence[VectorFinito], cota, espacio: DescriptorNorma,
                    presupuestos: Optional[ConfiguracionPresupuestos] = None
                    ) -> Tuple[Optional[bool], Optional[dict]]:
        """
        ‖Σ_{i≤m} a_i x_i‖ ≤ K ‖Σ_{i≤n} a_i x_i‖ para todo m < n.

        Returns:
            (True, None), (False, {'m', 'n', 'testigo', 'reporte'}) con la
            primera violación certificada, o (None, {...}) con el primer par
            indeciso si no hay violaciones certificadas
        """
        xs = [x if isinstance(x, VectorFinito) else VectorFinito.de(x) for x in xs]
        presupuestos = ConfiguracionPresupuestos.resolver(presupuestos)
        indeciso: Optional[dict] = None
        for n in range(2, len(xs) + 1):
            for m in range(1, n):
                proyeccion = xs[:m] + [VectorFinito.cero(espacio.dimension)] * (n - m)
                reporte = cls.constante_dominacion(proyeccion, espacio, xs[:n], espacio, presupuestos)
                decision = cls.decidir(reporte, cota)
                if decision is True:
                    continue
                par = {'m': m, 'n': n, 'testigo': reporte.testigo, 'reporte': reporte}
                if decision is False:
                    return False, par
                if indeciso is None:
                    indeciso = par
        if indeciso is not None:
            return None, indeciso
        return True, None

    @classmethod
    def bloque_p_absolutamente_convexo(cls, xs: Sequence[VectorFinito], p,
                                       bloques: Sequence[Tuple[int, int, Sequence]],
                                       presupuestos: Optional[ConfiguracionPresupuestos] = None
                                       ) -> List[VectorFinito]:
        """
        Bloque p-absolutamente convexo u_j = Σ_{i∈[inicio, fin]} a_i x_i.

        Args:
            xs: Sucesión base
            p: Exponente (ℓ_p-norma de cada tramo de coeficientes igual a 1)
            bloques: Tramos (inicio, fin, coeficientes) con índices desde 1,
                sucesivos y disjuntos

        Raises:
            ErrorPrecondicion: Si los tramos no son sucesivos o los coeficientes
                no tienen ℓ_p-norma 1
        """
        xs = [x if isinstance(x, VectorFinito) else VectorFinito.de(x) for x in xs]
        resultado = []
        anterior = 0
        for inicio, fin, coeficientes in bloques:
            if inicio <= anterior or fin < inicio or fin > len(xs):
                raise ErrorPrecondicion(f"Tramo [{inicio}, {fin}] no sucesivo o fuera de rango")
            if len(coeficientes) != fin - inicio + 1:
                raise ErrorPrecondicion(f"El tramo [{inicio}, {fin}] necesita {fin - inicio + 1} coeficientes")
            coeficientes = VectorFinito.de(coeficientes)
            norma = CalculadorNormas.norma(DescriptorNorma.lp(p, len(coeficientes)), coeficientes,
                                           presupuestos=presupuestos)
            if not norma.contiene(1):
                raise ErrorPrecondicion(f"Los coeficientes {coeficientes} tienen ℓ_p-norma {norma}")
            if not norma.exacto:
                Registro.advertencia(f"ℓ_p-norma de {coeficientes} certificada solo en {norma}")
            resultado.append(VectorFinito.combinacion(coeficientes, xs[inicio - 1:fin]))
            anterior = fin
        return resultado

    @classmethod
    def norma_operador(cls, operador: MatrizOperador,
                       presupuestos: Optional[ConfiguracionPresupuestos] = None) -> ReporteDominacion:
        """‖A‖ como dominación de las columnas por la base canónica del dominio."""
        n = operador.dominio.dimension
        base = [VectorFinito.base_canonica(n, j) for j in range(n)]
        return cls.constante_dominacion(operador.imagenes_base(), operador.codominio, base, operador.dominio,
                                        presupuestos)
