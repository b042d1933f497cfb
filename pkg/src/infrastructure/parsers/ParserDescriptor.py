"""
Lector de descriptores de espacios, vectores y matrices.

Descriptores: `lp(2,4)`, `lp(inf,3)`, `schreier(1,6)`, `xxi2(1,6)`,
`summing(5)`, `z(1,2,[[1],[1,1],[2]])`, `conv(<d>,2)` y
`dsum(<externo>; <interno>,...)`. Vectores: `[1, -2/3, 0]`; listas de
vectores y matrices: `[[1,0],[0,1]]`.
"""

import json
from fractions import Fraction
from typing import List

from src.domain.Errores import ErrorDominio, ErrorSintaxis
from src.domain.entities.DescriptorNorma import DescriptorNorma
from src.domain.entities.VectorFinito import VectorFinito
from src.infrastructure.parsers.ParserFamilia import buscar_cierre
from src.infrastructure.parsers.ParserOrdinal import ParserOrdinal


def dividir_nivel_cero(texto: str, separador: str) -> List[str]:
    """Divide por `separador` fuera de paréntesis y corchetes."""
    partes, nivel, actual = [], 0, []
    for caracter in texto:
        if caracter in '([{':
            nivel += 1
        elif caracter in ')]}':
            nivel -= 1
        if caracter == separador and nivel == 0:
            partes.append(''.join(actual).strip())
            actual = []
        else:
            actual.append(caracter)
    partes.append(''.join(actual).strip())
    return partes


class ParserDescriptor:
    """Analizador de la gramática de descriptores."""

    def __init__(self, texto: str):
        self.texto = texto.strip()

    def leer(self) -> DescriptorNorma:
        """
        Analiza el texto completo.

        Raises:
            ErrorSintaxis: Si el texto no respeta la gramática
            ErrorEstructura: Si el descriptor es sintácticamente válido pero inconsistente
        """
        texto = self.texto
        apertura = texto.find('(')
        if apertura <= 0 or not texto.endswith(')'):
            raise ErrorSintaxis(f"Descriptor mal formado: '{texto}'")
        if buscar_cierre(texto, apertura, '(', ')') != len(texto) - 1:
            raise ErrorSintaxis(f"Texto sobrante en '{texto}'")
        nombre = texto[:apertura].strip().lower()
        interior = texto[apertura + 1:-1]
        if nombre == 'dsum':
            return self._suma_directa(interior)
        argumentos = dividir_nivel_cero(interior, ',')
        try:
            if nombre == 'lp' and len(argumentos) == 2:
                return DescriptorNorma.lp(argumentos[0], self._natural(argumentos[1]))
            if nombre == 'schreier' and len(argumentos) == 2:
                return DescriptorNorma.schreier(ParserOrdinal.parsear(argumentos[0]), self._natural(argumentos[1]))
            if nombre == 'xxi2' and len(argumentos) == 2:
                return DescriptorNorma.x_xi_2(ParserOrdinal.parsear(argumentos[0]), self._natural(argumentos[1]))
            if nombre == 'summing' and len(argumentos) == 1:
                return DescriptorNorma.sumante(self._natural(argumentos[0]))
            if nombre == 'z' and len(argumentos) == 3:
                return DescriptorNorma.z(argumentos[0], argumentos[1], self._nodos(argumentos[2]))
            if nombre == 'conv' and len(argumentos) == 2:
                return DescriptorNorma.convexificacion(ParserDescriptor(argumentos[0]).leer(), argumentos[1])
        except ValueError as e:
            if isinstance(e, ErrorDominio):
                raise
            raise ErrorSintaxis(f"Argumento inválido en '{texto}': {e}")
        raise ErrorSintaxis(f"Descriptor desconocido o con aridad incorrecta: '{texto}'")

    def _suma_directa(self, interior: str) -> DescriptorNorma:
        partes = dividir_nivel_cero(interior, ';')
        if len(partes) != 2:
            raise ErrorSintaxis(f"dsum requiere 'externo; internos': '{self.texto}'")
        externo = ParserDescriptor(partes[0]).leer()
        internos = [ParserDescriptor(t).leer() for t in dividir_nivel_cero(partes[1], ',') if t]
        return DescriptorNorma.suma_directa(externo, internos)

    @staticmethod
    def _natural(texto: str) -> int:
        if not texto.strip().isdigit():
            raise ErrorSintaxis(f"Se esperaba un natural: '{texto}'")
        return int(texto)

    @staticmethod
    def _nodos(texto: str):
        try:
            nodos = json.loads(texto)
        except json.JSONDecodeError:
            raise ErrorSintaxis(f"Árbol de nodos mal formado: '{texto}'")
        if not isinstance(nodos, list) or not all(
            isinstance(n, list) and all(isinstance(e, int) for e in n) for n in nodos
        ):
            raise ErrorSintaxis(f"Los nodos deben ser listas de naturales: '{texto}'")
        return [tuple(n) for n in nodos]

    @classmethod
    def parsear(cls, texto: str) -> DescriptorNorma:
        """Atajo: analiza un texto y devuelve el descriptor."""
        return cls(texto).leer()

    @classmethod
    def parsear_nodos(cls, texto: str):
        """`[[1],[1,2],[2]]`: nodos de un árbol como tuplas."""
        return cls._nodos(texto)

    # Vectores y matrices

    @staticmethod
    def parsear_racional(texto: str) -> Fraction:
        try:
            return Fraction(texto.strip())
        except (ValueError, ZeroDivisionError):
            raise ErrorSintaxis(f"Racional inválido: '{texto}'")

    @classmethod
    def parsear_vector(cls, texto: str) -> VectorFinito:
        """`[1, -2/3, 0]`."""
        texto = texto.strip()
        if not (texto.startswith('[') and texto.endswith(']')):
            raise ErrorSintaxis(f"Se esperaba un vector entre corchetes: '{texto}'")
        interior = texto[1:-1].strip()
        if not interior:
            raise ErrorSintaxis("Vector vacío")
        return VectorFinito.de(cls.parsear_racional(c) for c in dividir_nivel_cero(interior, ','))

    @classmethod
    def parsear_vectores(cls, texto: str) -> List[VectorFinito]:
        """`[[1,0],[0,1]]`: una lista de vectores (o las filas de una matriz)."""
        texto = texto.strip()
        if not (texto.startswith('[') and texto.endswith(']')):
            raise ErrorSintaxis(f"Se esperaba una lista entre corchetes: '{texto}'")
        interior = texto[1:-1].strip()
        if not interior:
            return []
        return [cls.parsear_vector(t) for t in dividir_nivel_cero(interior, ',')]

    @classmethod
    def parsear_sucesion(cls, texto: str) -> tuple:
        """`[w+1, w, 3]`: sucesión de ordinales."""
        texto = texto.strip()
        if not (texto[:1] in '[(' and texto[-1:] in '])'):
            raise ErrorSintaxis(f"Se esperaba una sucesión entre corchetes: '{texto}'")
        interior = texto[1:-1].strip()
        if not interior:
            return ()
        return tuple(ParserOrdinal.parsear(t) for t in dividir_nivel_cero(interior, ','))
