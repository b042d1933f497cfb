"""
Servicio de dominio: EnumeradorVertices

Vértices del politopo simétrico {c : |h·c| ≤ 1 para toda fila h} con
aritmética racional exacta.
"""

from fractions import Fraction
from itertools import combinations, product
from math import comb
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix, Rational

from src.domain.Errores import ErrorPresupuesto

Fila = Tuple[Fraction, ...]


def a_sympy(filas: Sequence[Sequence[Fraction]]) -> Matrix:
    return Matrix([[Rational(a.numerator, a.denominator) for a in fila] for fila in filas])


def a_fracciones(vector) -> Tuple[Fraction, ...]:
    return tuple(Fraction(int(x.p), int(x.q)) for x in vector)


def producto_punto(h: Sequence[Fraction], c: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(h, c)), Fraction(0))


class EnumeradorVertices:
    """Enumeración por subsistemas cuadrados de hiperplanos activos."""

    @classmethod
    def filas_distintas(cls, filas: Sequence[Sequence[Fraction]]) -> List[Fila]:
        """Filas no nulas, una por par ±h."""
        vistas = set()
        resultado = []
        for fila in filas:
            fila = tuple(Fraction(a) for a in fila)
            pivote = next((a for a in fila if a != 0), None)
            if pivote is None:
                continue
            normalizada = tuple(a / abs(pivote) * (1 if pivote > 0 else -1) for a in fila)
            if normalizada not in vistas:
                vistas.add(normalizada)
                resultado.append(normalizada)
        return resultado

    @classmethod
    def es_factible(cls, filas: Sequence[Fila], c: Sequence[Fraction]) -> bool:
        return all(abs(producto_punto(h, c)) <= 1 for h in filas)

    @classmethod
    def vertices(cls, filas: Sequence[Sequence[Fraction]], limite: int) -> List[Tuple[Fraction, ...]]:
        """
        Un representante de cada par ±v de vértices.

        Args:
            filas: Normales h de las restricciones |h·c| ≤ 1 (deben generar el espacio)
            limite: Máximo de candidatos (subsistema, signos)

        Returns:
            Vértices en orden lexicográfico descendente

        Raises:
            ErrorPresupuesto: Si el número de candidatos supera el límite
        """
        filas = cls.filas_distintas(filas)
        if not filas:
            return []
        r = len(filas[0])
        candidatos = comb(len(filas), r) * 2 ** (r - 1)
        if candidatos > limite:
            raise ErrorPresupuesto(
                f"La enumeración de vértices requiere {candidatos} candidatos (límite {limite})"
            )
        encontrados = set()
        for subconjunto in combinations(range(len(filas)), r):
            sistema = a_sympy([filas[i] for i in subconjunto])
            if sistema.det() == 0:
                continue
            inv = sistema.inv()
            inversa = [a_fracciones(inv.row(i)) for i in range(r)]
            for signos in product((1, -1), repeat=r - 1):
                lados = (1,) + signos
                v = tuple(sum((a * s for a, s in zip(fila, lados)), Fraction(0)) for fila in inversa)
                if cls.es_factible(filas, v):
                    encontrados.add(cls._representante(v))
        return sorted(encontrados, reverse=True)

    @staticmethod
    def _representante(v: Tuple[Fraction, ...]) -> Tuple[Fraction, ...]:
        pivote = next((a for a in v if a != 0), Fraction(0))
        return v if pivote >= 0 else tuple(-a for a in v)

    @classmethod
    def resolver(cls, filas: Sequence[Fila], lados: Sequence[Fraction]) -> Optional[Tuple[Fraction, ...]]:
        """Solución exacta de un sistema cuadrado, None si es singular."""
        sistema = a_sympy(filas)
        if sistema.det() == 0:
            return None
        return a_fracciones(sistema.LUsolve(a_sympy([[b] for b in lados])))
