"""
Servicio de dominio: CalculadorNormas

Motor de normas exactas para los espacios de dimensión finita descritos por
DescriptorNorma. Las normas racionales se devuelven como intervalos
degenerados; las irracionales como intervalos certificados.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from src.domain.Errores import ErrorDimension, ErrorEstructura, ErrorPresupuesto
from src.domain.entities.DescriptorNorma import DescriptorNorma, INFINITO, TipoDescriptor
from src.domain.entities.Familia import ExpresionFamilia
from src.domain.entities.Intervalo import Intervalo
from src.domain.entities.Ordinal import Ordinal
from src.domain.entities.VectorFinito import VectorFinito
from src.domain.services.CalculadorFamilias import CalculadorFamilias
from src.domain.services.ConfiguracionPresupuestos import ConfiguracionPresupuestos
from src.infrastructure.Registro import Registro

Coordenadas = Tuple[Fraction, ...]
Funcional = Tuple[Fraction, ...]


class CalculadorNormas:
    """Evaluación de normas y datos poliédricos de los descriptores."""

    # Refinamientos de la tolerancia interna antes de advertir
    REFINAMIENTOS = 3

    @classmethod
    def norma(cls, descriptor: DescriptorNorma, vector: VectorFinito,
              tolerancia: Optional[Fraction] = None,
              presupuestos: Optional[ConfiguracionPresupuestos] = None) -> Intervalo:
        """
        Norma de un vector en el espacio descrito.

        Args:
            descriptor: Espacio
            vector: Coordenadas (para Z_pq, en el orden de descriptor.nodos)
            tolerancia: Ancho máximo del intervalo (por defecto el configurado)
            presupuestos: Ventanas y límites de las normas exhaustivas

        Returns:
            Intervalo degenerado si la norma es racional, certificado en otro caso

        Raises:
            ErrorDimension: Si la longitud del vector no coincide
        """
        if len(vector) != descriptor.dimension:
            raise ErrorDimension(
                f"El vector tiene {len(vector)} coordenadas y {descriptor} tiene dimensión {descriptor.dimension}"
            )
        presupuestos = ConfiguracionPresupuestos.resolver(presupuestos)
        tolerancia = Fraction(tolerancia or presupuestos.ancho_intervalo)
        interna = tolerancia / 16
        resultado = cls._norma(descriptor, tuple(vector), interna, presupuestos)
        for _ in range(cls.REFINAMIENTOS):
            if resultado.ancho <= tolerancia:
                return resultado
            interna = interna / 2 ** 20
            resultado = cls._norma(descriptor, tuple(vector), interna, presupuestos)
        if resultado.ancho > tolerancia:
            Registro.advertencia(
                f"Norma en {descriptor} con ancho {float(resultado.ancho):.3g} > tolerancia"
            )
        return resultado

    @classmethod
    def _norma(cls, d: DescriptorNorma, v: Coordenadas, tol: Fraction,
               presupuestos: ConfiguracionPresupuestos) -> Intervalo:
        if d.tipo == TipoDescriptor.LP:
            return cls._norma_lp(d.p, v, tol)
        if d.tipo == TipoDescriptor.SCHREIER:
            return Intervalo.punto(cls._max_schreier(d.xi, d.dim, tuple(abs(c) for c in v), presupuestos))
        if d.tipo == TipoDescriptor.X_XI_2:
            cuadrado = cls._cuadrado_xxi2(d.xi, tuple(abs(c) for c in v), presupuestos)
            return Intervalo.raiz_racional(cuadrado, 2, tol)
        if d.tipo == TipoDescriptor.SUMANTE:
            return Intervalo.punto(cls._norma_sumante(v))
        if d.tipo == TipoDescriptor.Z_PQ:
            return cls._norma_z(d, v, tol, presupuestos)
        if d.tipo == TipoDescriptor.CONVEXIFICACION:
            return cls._norma_convexificada(d, v, tol, presupuestos)
        return cls._norma_suma_directa(d, v, tol, presupuestos)

    # Lp y sumante

    @classmethod
    def _norma_lp(cls, p, v: Coordenadas, tol: Fraction) -> Intervalo:
        absolutos = [abs(c) for c in v]
        if p == INFINITO:
            return Intervalo.punto(max(absolutos, default=Fraction(0)))
        if p == 1:
            return Intervalo.punto(sum(absolutos, Fraction(0)))
        if p.denominator == 1:
            k = p.numerator
            return Intervalo.raiz_racional(sum((a ** k for a in absolutos), Fraction(0)), k, tol)
        suma = Intervalo.punto(0)
        for a in absolutos:
            suma = suma + Intervalo.punto(a).potencia_racional(p, tol)
        return suma.potencia_racional(1 / p, tol)

    @classmethod
    def _norma_sumante(cls, v: Coordenadas) -> Fraction:
        mejor = Fraction(0)
        parcial = Fraction(0)
        for c in v:
            parcial += c
            mejor = max(mejor, abs(parcial))
        return mejor

    # Schreier y X_ξ,2

    @classmethod
    def _miembros_schreier(cls, xi: Ordinal, dim: int, presupuestos: ConfiguracionPresupuestos):
        return CalculadorFamilias.restringir(ExpresionFamilia.schreier(xi), dim, presupuestos).miembros

    @classmethod
    def _max_schreier(cls, xi: Ordinal, dim: int, pesos: Coordenadas,
                      presupuestos: ConfiguracionPresupuestos) -> Fraction:
        """max_{E ∈ S_ξ} Σ_{i∈E} |v_i| (índices desde 1)."""
        return max(
            (sum((pesos[i - 1] for i in e), Fraction(0))
             for e in cls._miembros_schreier(xi, dim, presupuestos)),
            default=Fraction(0),
        )

    @classmethod
    def _cuadrado_xxi2(cls, xi: Ordinal, pesos: Coordenadas, presupuestos: ConfiguracionPresupuestos) -> Fraction:
        """
        Cuadrado de la norma de X_ξ,2 por programación dinámica sobre la última
        coordenada cubierta. W(i, j) es el mayor peso de un conjunto de S_ξ
        contenido en la ventana [i, j].
        """
        dim = len(pesos)
        ventana = presupuestos.ventana_xxi2
        if dim > ventana:
            raise ErrorPresupuesto(f"Dimensión {dim} supera la ventana exhaustiva {ventana}")
        mejor = [[Fraction(0)] * (dim + 2) for _ in range(dim + 2)]
        for e in cls._miembros_schreier(xi, dim, presupuestos):
            if e:
                peso = sum((pesos[i - 1] for i in e), Fraction(0))
                if peso > mejor[e[0]][e[-1]]:
                    mejor[e[0]][e[-1]] = peso
        # Máximo sobre subventanas
        ventanas = [[Fraction(0)] * (dim + 2) for _ in range(dim + 2)]
        for largo in range(1, dim + 1):
            for i in range(1, dim - largo + 2):
                j = i + largo - 1
                ventanas[i][j] = max(mejor[i][j], ventanas[i + 1][j], ventanas[i][j - 1])
        acumulado = [Fraction(0)] * (dim + 1)
        for j in range(1, dim + 1):
            acumulado[j] = max(
                [acumulado[j - 1]] + [acumulado[i - 1] + ventanas[i][j] ** 2 for i in range(1, j + 1)]
            )
        return acumulado[dim]

    # Z_pq

    @classmethod
    def _exponentes_exactos(cls, d: DescriptorNorma) -> bool:
        p, q = d.p, d.q
        return p.denominator == 1 and q.denominator == 1 and q.numerator % p.numerator == 0

    @classmethod
    def _norma_z(cls, d: DescriptorNorma, v: Coordenadas, tol: Fraction,
                 presupuestos: ConfiguracionPresupuestos) -> Intervalo:
        if d.p == INFINITO or d.q == INFINITO:
            raise ErrorEstructura("Z_pq requiere exponentes finitos")
        if cls._exponentes_exactos(d):
            total = cls._suma_z_por_caminos(d, v)
            return Intervalo.raiz_racional(total, d.q.numerator, tol)
        limite = presupuestos.nodos_exhaustivo_z
        if len(d.nodos) > limite:
            raise ErrorPresupuesto(
                f"Z_pq con exponentes ({d.p},{d.q}) sobre {len(d.nodos)} nodos supera {limite}"
            )
        return cls.norma_z_exhaustiva(d, VectorFinito(v), tol, presupuestos)

    @classmethod
    def _suma_z_por_caminos(cls, d: DescriptorNorma, v: Coordenadas) -> Fraction:
        """
        Σ_i (Σ_{t∈s_i} |x_t|^p)^{q/p} máxima sobre familias de segmentos
        disjuntos, con q/p entero. Como f(w) = w^{q/p} es superaditiva, basta
        recorrer particiones del bosque en caminos verticales: para cada nodo
        se guardan los pares (peso del camino abierto, valor cerrado) no
        dominados.
        """
        p = d.p.numerator
        r = d.q.numerator // p
        peso = {nodo: abs(c) ** p for nodo, c in zip(d.nodos, v)}
        hijos: Dict[Tuple[int, ...], List[Tuple[int, ...]]] = {n: [] for n in d.nodos}
        raices = []
        for nodo in d.nodos:
            padre = nodo[:-1]
            if nodo and padre in hijos:
                hijos[padre].append(nodo)
            else:
                raices.append(nodo)

        opciones: Dict[Tuple[int, ...], List[Tuple[Fraction, Fraction]]] = {}
        cerrado: Dict[Tuple[int, ...], Fraction] = {}
        for nodo in sorted(d.nodos, key=len, reverse=True):
            base = sum((cerrado[h] for h in hijos[nodo]), Fraction(0))
            candidatos = [(peso[nodo], base)]
            for h in hijos[nodo]:
                resto = base - cerrado[h]
                for abierto, valor in opciones[h]:
                    candidatos.append((peso[nodo] + abierto, resto + valor))
            opciones[nodo] = cls._no_dominados(candidatos)
            cerrado[nodo] = max(abierto ** r + valor for abierto, valor in opciones[nodo])
        return sum((cerrado[raiz] for raiz in raices), Fraction(0))

    @staticmethod
    def _no_dominados(candidatos: List[Tuple[Fraction, Fraction]]) -> List[Tuple[Fraction, Fraction]]:
        resultado = []
        mejor_valor = None
        for abierto, valor in sorted(candidatos, key=lambda c: (-c[0], -c[1])):
            if mejor_valor is None or valor > mejor_valor:
                resultado.append((abierto, valor))
                mejor_valor = valor
        return resultado

    @classmethod
    def norma_z_exhaustiva(cls, d: DescriptorNorma, vector: VectorFinito,
                           tolerancia: Optional[Fraction] = None,
                           presupuestos: Optional[ConfiguracionPresupuestos] = None) -> Intervalo:
        """
        Norma de Z_pq recorriendo todas las familias de segmentos disjuntos.

        Cada nodo queda fuera, abre un segmento o continúa el segmento de su
        padre (si ningún hermano lo continuó ya).
        """
        if tolerancia is None:
            tolerancia = ConfiguracionPresupuestos.resolver(presupuestos).ancho_intervalo
        tol = Fraction(tolerancia) / 16
        nodos = d.nodos
        indice = {n: i for i, n in enumerate(nodos)}
        absolutos = [abs(c) for c in vector]
        segmento_de: List[Optional[int]] = [None] * len(nodos)
        continuado = [False] * len(nodos)
        segmentos: List[List[int]] = []
        mejor: List[Intervalo] = []

        def valor() -> Intervalo:
            total = Intervalo.punto(0)
            for miembros in segmentos:
                suma = Intervalo.punto(0)
                for i in miembros:
                    suma = suma + Intervalo.punto(absolutos[i]).potencia_racional(d.p, tol)
                total = total + suma.potencia_racional(d.q / d.p, tol)
            return total

        def recorrer(i: int) -> None:
            if i == len(nodos):
                mejor.append(valor())
                return
            nodo = nodos[i]
            recorrer(i + 1)
            segmentos.append([i])
            segmento_de[i] = len(segmentos) - 1
            recorrer(i + 1)
            segmentos.pop()
            segmento_de[i] = None
            padre = indice.get(nodo[:-1]) if nodo else None
            if padre is not None and segmento_de[padre] is not None and not continuado[padre]:
                s = segmento_de[padre]
                if segmentos[s][-1] == padre:
                    continuado[padre] = True
                    segmentos[s].append(i)
                    segmento_de[i] = s
                    recorrer(i + 1)
                    segmentos[s].pop()
                    segmento_de[i] = None
                    continuado[padre] = False

        recorrer(0)
        return Intervalo.maximo(mejor).potencia_racional(1 / d.q, tol)

    # Convexificación y suma directa

    @classmethod
    def _norma_monotona(cls, d: DescriptorNorma, valores: List[Intervalo], tol: Fraction,
                        presupuestos: ConfiguracionPresupuestos) -> Intervalo:
        """Norma de un vector de coordenadas no negativas dadas como intervalos."""
        if all(i.exacto for i in valores):
            return cls._norma(d, tuple(i.inferior for i in valores), tol, presupuestos)
        inferior = cls._norma(d, tuple(i.inferior for i in valores), tol, presupuestos)
        superior = cls._norma(d, tuple(i.superior for i in valores), tol, presupuestos)
        return Intervalo(inferior.inferior, superior.superior)

    @classmethod
    def _norma_convexificada(cls, d: DescriptorNorma, v: Coordenadas, tol: Fraction,
                             presupuestos: ConfiguracionPresupuestos) -> Intervalo:
        """‖v‖ = ‖|v|^p‖_base^{1/p}."""
        if d.p == INFINITO:
            raise ErrorEstructura("La convexificación requiere p finito")
        if d.base.tipo == TipoDescriptor.SUMANTE:
            raise ErrorEstructura("La base sumante no es 1-incondicional: no se convexifica")
        potencias = [Intervalo.punto(abs(c)).potencia_racional(d.p, tol) for c in v]
        return cls._norma_monotona(d.base, potencias, tol, presupuestos).potencia_racional(1 / d.p, tol)

    @classmethod
    def _norma_suma_directa(cls, d: DescriptorNorma, v: Coordenadas, tol: Fraction,
                            presupuestos: ConfiguracionPresupuestos) -> Intervalo:
        """‖(u_i)‖ = ‖(‖u_i‖)_i‖_externo."""
        internas = []
        inicio = 0
        for interno in d.internos:
            fin = inicio + interno.dimension
            internas.append(cls._norma(interno, v[inicio:fin], tol, presupuestos))
            inicio = fin
        return cls._norma_monotona(d.externo, internas, tol, presupuestos)

    # Datos poliédricos

    @classmethod
    def es_poliedrica(cls, d: DescriptorNorma) -> bool:
        """Lista blanca: ℓ₁, ℓ_∞, Schreier, sumante y sumas ℓ₁/ℓ_∞ de ellas."""
        if d.tipo == TipoDescriptor.LP:
            return d.p == 1 or d.p == INFINITO
        if d.tipo in (TipoDescriptor.SCHREIER, TipoDescriptor.SUMANTE):
            return True
        if d.tipo == TipoDescriptor.SUMA_DIRECTA:
            return cls.es_poliedrica(d.externo) and d.externo.tipo == TipoDescriptor.LP \
                and all(cls.es_poliedrica(i) for i in d.internos)
        return False

    @classmethod
    def funcionales(cls, d: DescriptorNorma,
                    presupuestos: Optional[ConfiguracionPresupuestos] = None) -> Optional[List[Funcional]]:
        """
        Funcionales f con ‖z‖ = max_f |f(z)|, uno por par ±f.

        Returns:
            Lista de funcionales, o None si la norma no es poliédrica o la
            lista supera el límite configurado
        """
        if not cls.es_poliedrica(d):
            return None
        try:
            return list(cls._funcionales(d, ConfiguracionPresupuestos.resolver(presupuestos)))
        except ErrorPresupuesto:
            Registro.advertencia(f"Demasiados funcionales para {d}")
            return None

    @classmethod
    @lru_cache(maxsize=128)
    def _funcionales(cls, d: DescriptorNorma, presupuestos: ConfiguracionPresupuestos) -> Tuple[Funcional, ...]:
        limite = presupuestos.max_funcionales
        uno, cero = Fraction(1), Fraction(0)
        if d.tipo == TipoDescriptor.LP and d.p == INFINITO:
            resultado = [tuple(uno if j == i else cero for j in range(d.dim)) for i in range(d.dim)]
        elif d.tipo == TipoDescriptor.LP:
            if 2 ** (d.dim - 1) > limite:
                raise ErrorPresupuesto("Demasiados funcionales")
            resultado = [(uno,) + tuple(Fraction(s) for s in signos)
                         for signos in product((1, -1), repeat=d.dim - 1)]
        elif d.tipo == TipoDescriptor.SUMANTE:
            resultado = [tuple(uno if j <= m else cero for j in range(d.dim)) for m in range(d.dim)]
        elif d.tipo == TipoDescriptor.SCHREIER:
            resultado = cls._funcionales_schreier(d, presupuestos)
        else:
            resultado = cls._funcionales_suma(d, presupuestos)
        if len(resultado) > limite:
            raise ErrorPresupuesto("Demasiados funcionales")
        return tuple(resultado)

    @classmethod
    def _funcionales_schreier(cls, d: DescriptorNorma, presupuestos: ConfiguracionPresupuestos) -> List[Funcional]:
        limite = presupuestos.max_funcionales
        miembros = cls._miembros_schreier(d.xi, d.dim, presupuestos)
        resultado = []
        for e in miembros:
            if not e:
                continue
            maximal = all(
                tuple(sorted(e + (x,))) not in miembros
                for x in range(1, d.dim + 1) if x not in e
            )
            if not maximal:
                continue
            for signos in product((1, -1), repeat=len(e) - 1):
                f = [Fraction(0)] * d.dim
                for i, s in zip(e, (1,) + signos):
                    f[i - 1] = Fraction(s)
                resultado.append(tuple(f))
                if len(resultado) > limite:
                    raise ErrorPresupuesto("Demasiados funcionales")
        return resultado

    @classmethod
    def _funcionales_suma(cls, d: DescriptorNorma, presupuestos: ConfiguracionPresupuestos) -> List[Funcional]:
        limite = presupuestos.max_funcionales
        bloques = [cls._funcionales(i, presupuestos) for i in d.internos]
        dims = [i.dimension for i in d.internos]
        total = sum(dims)
        resultado = []
        if d.externo.p == INFINITO:
            inicio = 0
            for funcionales, dim in zip(bloques, dims):
                for f in funcionales:
                    resultado.append((Fraction(0),) * inicio + f + (Fraction(0),) * (total - inicio - dim))
                inicio += dim
            return resultado
        cantidad = 1
        for funcionales in bloques:
            cantidad *= 2 * len(funcionales)
        if cantidad // 2 > limite:
            raise ErrorPresupuesto("Demasiados funcionales")
        for eleccion in product(*bloques):
            for signos in product((1, -1), repeat=len(bloques) - 1):
                f: List[Fraction] = []
                for g, s in zip(eleccion, (1,) + signos):
                    f.extend(s * c for c in g)
                resultado.append(tuple(f))
        return resultado

    @classmethod
    def constante_inferior_infinito(cls, d: DescriptorNorma,
                                    presupuestos: Optional[ConfiguracionPresupuestos] = None) -> Fraction:
        """c > 0 racional con ‖z‖ ≥ c·‖z‖_∞."""
        if d.tipo == TipoDescriptor.SUMANTE:
            return Fraction(1, 2)
        if d.tipo == TipoDescriptor.CONVEXIFICACION:
            c = cls.constante_inferior_infinito(d.base, presupuestos)
            if c == 1:
                return c
            tol = ConfiguracionPresupuestos.resolver(presupuestos).ancho_intervalo
            return Intervalo.punto(c).potencia_racional(1 / d.p, tol).inferior
        if d.tipo == TipoDescriptor.SUMA_DIRECTA:
            return cls.constante_inferior_infinito(d.externo, presupuestos) * min(
                cls.constante_inferior_infinito(i, presupuestos) for i in d.internos
            )
        return Fraction(1)
