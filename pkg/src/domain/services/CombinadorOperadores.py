"""
Servicio de dominio: CombinadorOperadores

Operadores convexificados, operadores de árbol S^T, sumas directas de
operadores y las aproximaciones finitas de los espacios W_ξ y V_ξ.
"""

from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from src.domain.Errores import ErrorDimension, ErrorEstructura, ErrorPrecondicion, ErrorPresupuesto
from src.domain.entities.DescriptorNorma import DescriptorNorma
from src.domain.entities.Intervalo import Intervalo
from src.domain.entities.MatrizOperador import MatrizOperador, OperadorConvexificado
from src.domain.entities.Ordinal import Ordinal
from src.domain.services.AritmeticaOrdinal import AritmeticaOrdinal, ClaseOrdinal
from src.domain.services.ConfiguracionPresupuestos import ConfiguracionPresupuestos


class CombinadorOperadores:
    """Construcciones de operadores y espacios a partir de otros."""

    @classmethod
    def operador_convexificado(cls, operador: MatrizOperador, t,
                               presupuestos: Optional[ConfiguracionPresupuestos] = None) -> OperadorConvexificado:
        """
        e_i ↦ Σ_j |a_ji|^{1/t} f_j entre las t-convexificaciones.

        Raises:
            ErrorPrecondicion: Si dos columnas comparten soporte
        """
        t = Fraction(t)
        if t < 1:
            raise ErrorPrecondicion("t debe ser >= 1")
        soportes = [set(c.soporte) for c in operador.imagenes_base()]
        for i in range(len(soportes)):
            for j in range(i + 1, len(soportes)):
                if soportes[i] & soportes[j]:
                    raise ErrorPrecondicion(f"Las columnas {i + 1} y {j + 1} tienen soportes solapados")
        tolerancia = ConfiguracionPresupuestos.resolver(presupuestos).ancho_intervalo
        raices = [[Intervalo.punto(abs(a)).potencia_racional(1 / t, tolerancia) for a in fila]
                  for fila in operador.entradas]
        dominio = DescriptorNorma.convexificacion(operador.dominio, t)
        codominio = DescriptorNorma.convexificacion(operador.codominio, t)
        inferior = MatrizOperador(tuple(tuple(r.inferior for r in f) for f in raices), dominio, codominio)
        superior = MatrizOperador(tuple(tuple(r.superior for r in f) for f in raices), dominio, codominio)
        return OperadorConvexificado(inferior, superior)

    @classmethod
    def operador_arbol(cls, nodos: Iterable[Sequence[int]],
                       seleccion: Iterable[Sequence[int]]) -> MatrizOperador:
        """
        S^T truncado: identidad formal ℓ₁(nodos) → Z_{1,2}(nodos) seguida de
        la proyección de base sobre los nodos seleccionados.

        Raises:
            ErrorEstructura: Si la selección no está contenida o no es cerrada hacia abajo
        """
        codominio = DescriptorNorma.z(1, 2, nodos)
        orden = codominio.nodos
        seleccion = {tuple(s) for s in seleccion}
        if not seleccion <= set(orden):
            raise ErrorEstructura("La selección debe estar contenida en los nodos")
        for nodo in seleccion:
            if len(nodo) > 1 and nodo[:-1] not in seleccion:
                raise ErrorEstructura(f"La selección no es cerrada hacia abajo: falta {nodo[:-1]}")
            if len(nodo) == 1 and () in orden and () not in seleccion:
                raise ErrorEstructura("La selección no es cerrada hacia abajo: falta la raíz")
        dominio = DescriptorNorma.lp(1, len(orden))
        return MatrizOperador.diagonal([1 if n in seleccion else 0 for n in orden], dominio, codominio)

    @classmethod
    def suma_directa_operadores(cls, externo_dominio: DescriptorNorma, externo_codominio: DescriptorNorma,
                                operadores: Sequence[MatrizOperador]) -> MatrizOperador:
        """(⊕ A_i) bloque diagonal entre las sumas directas de dominios y codominios."""
        if externo_dominio.dimension != len(operadores) or externo_codominio.dimension != len(operadores):
            raise ErrorDimension("Las normas externas deben tener un sumando por operador")
        dominio = DescriptorNorma.suma_directa(externo_dominio, [a.dominio for a in operadores])
        codominio = DescriptorNorma.suma_directa(externo_codominio, [a.codominio for a in operadores])
        filas: List[Tuple[Fraction, ...]] = []
        desplazamiento = 0
        for a in operadores:
            for fila in a.entradas:
                filas.append((Fraction(0),) * desplazamiento + fila
                             + (Fraction(0),) * (dominio.dimension - desplazamiento - a.columnas))
            desplazamiento += a.columnas
        return MatrizOperador(tuple(filas), dominio, codominio)

    # Espacios W_ξ

    @classmethod
    def dimension_espacio_w(cls, xi: Ordinal, sumandos: int) -> int:
        """Dimensión del truncamiento de W_ξ, sin construirlo."""
        clasificacion = AritmeticaOrdinal.clasificar(xi)
        if clasificacion.clase == ClaseOrdinal.CERO:
            return 1
        if clasificacion.clase == ClaseOrdinal.SUCESOR:
            return sumandos * (sumandos + 1) // 2 * cls.dimension_espacio_w(clasificacion.predecesor, sumandos)
        return sum(cls.dimension_espacio_w(AritmeticaOrdinal.sucesion_fundamental(xi, n), sumandos)
                   for n in range(1, sumandos + 1))

    @classmethod
    def aproximacion_espacio_w(cls, xi, sumandos: int,
                               presupuestos: Optional[ConfiguracionPresupuestos] = None) -> DescriptorNorma:
        """
        Truncamiento finito de W_ξ.

        W_0 son los escalares; Z_1 = W_ξ, Z_{n+1} = W_ξ ⊕₁ Z_n y
        W_{ξ+1} = (⊕_{n≤m} Z_n)_{ℓ₂}; para ξ límite,
        W_ξ = (⊕_{n≤m} W_{ξ_n})_{ℓ₂} con la sucesión fundamental canónica.

        Raises:
            ErrorPresupuesto: Si la dimensión supera el límite configurado
        """
        xi = xi if isinstance(xi, Ordinal) else Ordinal.finito(int(xi))
        if sumandos < 1:
            raise ErrorEstructura("Se requiere al menos un sumando")
        limite = ConfiguracionPresupuestos.resolver(presupuestos).dimension_max_w
        dimension = cls.dimension_espacio_w(xi, sumandos)
        if dimension > limite:
            raise ErrorPresupuesto(f"W_{xi} con {sumandos} sumandos tiene dimensión {dimension} > {limite}")
        return cls._espacio_w(xi, sumandos)

    @classmethod
    def _espacio_w(cls, xi: Ordinal, sumandos: int) -> DescriptorNorma:
        clasificacion = AritmeticaOrdinal.clasificar(xi)
        nota = f"W_{xi} truncado a {sumandos} sumandos"
        if clasificacion.clase == ClaseOrdinal.CERO:
            return DescriptorNorma.lp(1, 1).con_metadatos("W_0 escalares")
        if clasificacion.clase == ClaseOrdinal.SUCESOR:
            anterior = cls._espacio_w(clasificacion.predecesor, sumandos)
            zetas = [anterior]
            for _ in range(1, sumandos):
                zetas.append(DescriptorNorma.suma_directa(DescriptorNorma.lp(1, 2), [anterior, zetas[-1]]))
            return DescriptorNorma.suma_directa(DescriptorNorma.lp(2, sumandos), zetas, nota)
        internos = [cls._espacio_w(AritmeticaOrdinal.sucesion_fundamental(xi, n), sumandos)
                    for n in range(1, sumandos + 1)]
        return DescriptorNorma.suma_directa(DescriptorNorma.lp(2, sumandos), internos, nota)

    @classmethod
    def espacio_v(cls, xi, sumandos: int,
                  presupuestos: Optional[ConfiguracionPresupuestos] = None) -> DescriptorNorma:
        """V_ξ: espacio ℓ₁ de la misma dimensión que el truncamiento de W_ξ."""
        w = cls.aproximacion_espacio_w(xi, sumandos, presupuestos)
        return DescriptorNorma.lp(1, w.dimension).con_metadatos(f"V compañero de {w.metadatos}")

    @classmethod
    def operador_a_xi(cls, xi, sumandos: int,
                      presupuestos: Optional[ConfiguracionPresupuestos] = None) -> MatrizOperador:
        """A_ξ: identidad formal V_ξ → W_ξ."""
        w = cls.aproximacion_espacio_w(xi, sumandos, presupuestos)
        return MatrizOperador.identidad(cls.espacio_v(xi, sumandos, presupuestos), w)
