"""
Servicio de dominio: AritmeticaOrdinal

Suma, producto, potencias de ω, clasificación y sucesiones fundamentales
para ordinales en forma normal de Cantor.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Optional

from src.domain.Errores import ErrorOrdinal
from src.domain.entities.Ordinal import Ordinal, CERO, UNO


class ClaseOrdinal(Enum):
    """Clase de un ordinal."""
    CERO = "cero"
    SUCESOR = "sucesor"
    LIMITE = "limite"


@dataclass(frozen=True)
class Clasificacion:
    """
    Resultado de clasificar un ordinal.

    Attributes:
        clase: Cero, sucesor o límite
        predecesor: Ordinal anterior cuando la clase es sucesor
    """
    clase: ClaseOrdinal
    predecesor: Optional[Ordinal] = None

    def __str__(self) -> str:
        if self.clase == ClaseOrdinal.SUCESOR:
            return f"sucesor({self.predecesor})"
        return self.clase.value


class AritmeticaOrdinal:
    """Operaciones puras sobre ordinales en FNC."""

    TAMANO_CACHE = 2 ** 14

    @classmethod
    def sumar(cls, a: Ordinal, b: Ordinal) -> Ordinal:
        """
        Suma ordinal a + b.

        Los términos de a con exponente menor que el grado de b se absorben.
        """
        if b.es_cero:
            return a
        grado_b, coef_b = b.terminos[0]
        terminos = []
        for exponente, coeficiente in a.terminos:
            if grado_b < exponente:
                terminos.append((exponente, coeficiente))
            elif exponente == grado_b:
                coef_b += coeficiente
                break
            else:
                break
        terminos.append((grado_b, coef_b))
        terminos.extend(b.terminos[1:])
        return Ordinal(tuple(terminos))

    @classmethod
    def multiplicar(cls, a: Ordinal, b: Ordinal) -> Ordinal:
        """
        Producto ordinal a·b, distribuyendo por la derecha sobre los términos de b.
        """
        if a.es_cero or b.es_cero:
            return CERO
        grado_a, coef_a = a.terminos[0]
        resultado = CERO
        for exponente, coeficiente in b.terminos:
            if exponente.es_cero:
                parte = Ordinal(((grado_a, coef_a * coeficiente),) + a.terminos[1:])
            else:
                parte = Ordinal(((cls.sumar(grado_a, exponente), coeficiente),))
            resultado = cls.sumar(resultado, parte)
        return resultado

    @classmethod
    def potencia_omega(cls, e: Ordinal) -> Ordinal:
        """ω^e como ordinal de un único término."""
        return Ordinal(((e, 1),))

    @classmethod
    def sucesor(cls, a: Ordinal) -> Ordinal:
        return cls.sumar(a, UNO)

    @classmethod
    def clasificar(cls, a: Ordinal) -> Clasificacion:
        """Cero, sucesor (con predecesor) o límite."""
        if a.es_cero:
            return Clasificacion(ClaseOrdinal.CERO)
        exponente, coeficiente = a.terminos[-1]
        if not exponente.es_cero:
            return Clasificacion(ClaseOrdinal.LIMITE)
        terminos = a.terminos[:-1]
        if coeficiente > 1:
            terminos = terminos + ((CERO, coeficiente - 1),)
        return Clasificacion(ClaseOrdinal.SUCESOR, Ordinal(terminos))

    @classmethod
    def es_limite(cls, a: Ordinal) -> bool:
        return cls.clasificar(a).clase == ClaseOrdinal.LIMITE

    @classmethod
    def predecesor(cls, a: Ordinal) -> Ordinal:
        clasificacion = cls.clasificar(a)
        if clasificacion.clase != ClaseOrdinal.SUCESOR:
            raise ErrorOrdinal(f"{a} no es un ordinal sucesor")
        return clasificacion.predecesor

    @classmethod
    @lru_cache(maxsize=TAMANO_CACHE)
    def sucesion_fundamental(cls, a: Ordinal, n: int) -> Ordinal:
        """
        n-ésimo elemento de la sucesión fundamental canónica de un límite.

        Regla estándar de FNC sobre el último término; si el resultado es
        límite se le suma 1, de modo que todos los elementos son sucesores.

        Raises:
            ErrorOrdinal: Si a no es límite o n < 1
        """
        if n < 1:
            raise ErrorOrdinal(f"El índice de la sucesión debe ser positivo: {n}")
        if not cls.es_limite(a):
            raise ErrorOrdinal(f"{a} no es un ordinal límite")
        exponente, coeficiente = a.terminos[-1]
        prefijo = a.terminos[:-1]
        if coeficiente > 1:
            prefijo = prefijo + ((exponente, coeficiente - 1),)
        base = Ordinal(prefijo)

        clasificacion = cls.clasificar(exponente)
        if clasificacion.clase == ClaseOrdinal.SUCESOR:
            cola = Ordinal(((clasificacion.predecesor, n),))
        else:
            cola = cls.potencia_omega(cls.sucesion_fundamental(exponente, n))
        resultado = cls.sumar(base, cola)
        if cls.es_limite(resultado):
            resultado = cls.sucesor(resultado)
        return resultado

    @classmethod
    def es_multiplicativamente_indescomponible(cls, a: Ordinal) -> bool:
        """Verdadero sii a ∈ {0, 1} o a = ω^(ω^ζ)."""
        if a.es_cero or a == UNO:
            return True
        if not a.es_potencia_omega:
            return False
        return a.grado.es_potencia_omega
