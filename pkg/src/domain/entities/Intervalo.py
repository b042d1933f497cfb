"""
Entidad de dominio: Intervalo

Intervalo racional certificado [inferior, superior] que encierra un real.
Los valores exactos son intervalos degenerados.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from sympy import integer_nthroot

Racional = Union[Fraction, int]


@dataclass(frozen=True)
class Intervalo:
    """
    Intervalo cerrado con extremos racionales.

    Attributes:
        inferior: Extremo inferior
        superior: Extremo superior
    """
    inferior: Fraction
    superior: Fraction

    def __post_init__(self):
        """Normaliza a Fraction y valida el orden de los extremos."""
        object.__setattr__(self, 'inferior', Fraction(self.inferior))
        object.__setattr__(self, 'superior', Fraction(self.superior))
        if self.inferior > self.superior:
            raise ValueError(f"Intervalo inválido: [{self.inferior}, {self.superior}]")

    @classmethod
    def punto(cls, valor: Racional) -> 'Intervalo':
        return cls(Fraction(valor), Fraction(valor))

    @property
    def exacto(self) -> bool:
        return self.inferior == self.superior

    @property
    def valor(self) -> Fraction:
        """Valor exacto; sólo para intervalos degenerados."""
        if not self.exacto:
            raise ValueError("El intervalo no es exacto")
        return self.inferior

    @property
    def ancho(self) -> Fraction:
        return self.superior - self.inferior

    @property
    def medio(self) -> Fraction:
        return (self.inferior + self.superior) / 2

    def contiene(self, valor: Racional) -> bool:
        return self.inferior <= valor <= self.superior

    def __add__(self, otro: 'Intervalo') -> 'Intervalo':
        return Intervalo(self.inferior + otro.inferior, self.superior + otro.superior)

    def escalar(self, factor: Racional) -> 'Intervalo':
        """Producto por un racional no negativo."""
        factor = Fraction(factor)
        if factor < 0:
            raise ValueError("El factor debe ser no negativo")
        return Intervalo(self.inferior * factor, self.superior * factor)

    def multiplicar(self, otro: 'Intervalo') -> 'Intervalo':
        """Producto de intervalos no negativos."""
        return Intervalo(self.inferior * otro.inferior, self.superior * otro.superior)

    def dividir(self, otro: 'Intervalo') -> 'Intervalo':
        """Cociente de intervalos no negativos con denominador positivo."""
        if otro.inferior <= 0:
            raise ZeroDivisionError("El denominador puede anularse")
        return Intervalo(self.inferior / otro.superior, self.superior / otro.inferior)

    def potencia(self, k: int) -> 'Intervalo':
        """Potencia entera de un intervalo no negativo."""
        return Intervalo(self.inferior ** k, self.superior ** k)

    def raiz(self, n: int, tolerancia: Fraction) -> 'Intervalo':
        """Raíz n-ésima certificada de un intervalo no negativo."""
        if n == 1:
            return self
        return Intervalo(
            Intervalo.raiz_racional(self.inferior, n, tolerancia).inferior,
            Intervalo.raiz_racional(self.superior, n, tolerancia).superior,
        )

    def potencia_racional(self, exponente: Fraction, tolerancia: Fraction) -> 'Intervalo':
        """|x|^(s/t) = (x^s)^(1/t) para intervalos no negativos."""
        exponente = Fraction(exponente)
        return self.potencia(exponente.numerator).raiz(exponente.denominator, tolerancia)

    @classmethod
    def raiz_racional(cls, x: Racional, n: int, tolerancia: Fraction) -> 'Intervalo':
        """
        Encierra x^(1/n) en un intervalo de ancho ≤ tolerancia.

        Usa la raíz entera exacta de num·den^(n-1)·escala^n; si es exacta el
        intervalo es degenerado.
        """
        x = Fraction(x)
        if x < 0:
            raise ValueError("Raíz de un número negativo")
        if x == 0 or n == 1:
            return cls.punto(x)
        numerador, denominador = x.numerator, x.denominator
        escala = 1
        while Fraction(1, denominador * escala) > tolerancia:
            escala *= 2
        base = numerador * denominador ** (n - 1) * escala ** n
        raiz, es_exacta = integer_nthroot(base, n)
        raiz = int(raiz)
        inferior = Fraction(raiz, denominador * escala)
        if es_exacta:
            return cls.punto(inferior)
        return cls(inferior, Fraction(raiz + 1, denominador * escala))

    @classmethod
    def maximo(cls, intervalos: Iterable['Intervalo']) -> 'Intervalo':
        """Encierra el máximo de los valores encerrados."""
        intervalos = list(intervalos)
        if not intervalos:
            return cls.punto(0)
        return cls(max(i.inferior for i in intervalos), max(i.superior for i in intervalos))

    def __str__(self) -> str:
        if self.exacto:
            return str(self.inferior)
        return f"[{float(self.inferior):.12g}, {float(self.superior):.12g}]"
