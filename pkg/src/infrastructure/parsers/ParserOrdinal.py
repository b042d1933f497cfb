"""
Lector de la gramática de ordinales.

Gramática: `0`, naturales, `w`, `w^(expr)`, `*k`, `+`; por ejemplo
`w^(2)*3 + w + 4`. También acepta `w^2` y el símbolo `ω`.
"""

import re
from typing import List, Tuple

from src.domain.Errores import ErrorSintaxis
from src.domain.entities.Ordinal import Ordinal, OMEGA
from src.domain.services.AritmeticaOrdinal import AritmeticaOrdinal


class ParserOrdinal:
    """Analizador descendente recursivo de expresiones ordinales."""

    _TOKEN = re.compile(r"\s*(?:(\d+)|([wω])|([\^*+()]))")

    def __init__(self, texto: str):
        self.texto = texto
        self._tokens = self._tokenizar(texto)
        self._pos = 0

    def _tokenizar(self, texto: str) -> List[Tuple[str, str]]:
        tokens = []
        pos = 0
        texto = texto.rstrip()
        while pos < len(texto):
            m = self._TOKEN.match(texto, pos)
            if not m:
                raise ErrorSintaxis(f"Carácter inesperado en '{texto}' posición {pos}")
            if m.group(1):
                tokens.append(('NAT', m.group(1)))
            elif m.group(2):
                tokens.append(('W', 'w'))
            else:
                tokens.append(('SIM', m.group(3)))
            pos = m.end()
        return tokens

    def _ver(self) -> Tuple[str, str]:
        if self._pos < len(self._tokens):
            return self._tokens[self._pos]
        return ('FIN', '')

    def _consumir(self, tipo: str, valor: str = None) -> str:
        actual = self._ver()
        if actual[0] != tipo or (valor is not None and actual[1] != valor):
            esperado = valor or tipo
            raise ErrorSintaxis(f"Se esperaba '{esperado}' en '{self.texto}'")
        self._pos += 1
        return actual[1]

    def leer(self) -> Ordinal:
        """
        Analiza el texto completo.

        Returns:
            Ordinal en forma normal de Cantor

        Raises:
            ErrorSintaxis: Si el texto no respeta la gramática
        """
        if not self._tokens:
            raise ErrorSintaxis("Expresión ordinal vacía")
        resultado = self._expresion()
        if self._ver()[0] != 'FIN':
            raise ErrorSintaxis(f"Texto sobrante en '{self.texto}'")
        return resultado

    def _expresion(self) -> Ordinal:
        resultado = self._termino()
        while self._ver() == ('SIM', '+'):
            self._pos += 1
            resultado = AritmeticaOrdinal.sumar(resultado, self._termino())
        return resultado

    def _termino(self) -> Ordinal:
        resultado = self._atomo()
        while self._ver() == ('SIM', '*'):
            self._pos += 1
            k = int(self._consumir('NAT'))
            resultado = AritmeticaOrdinal.multiplicar(resultado, Ordinal.finito(k))
        return resultado

    def _atomo(self) -> Ordinal:
        tipo, valor = self._ver()
        if tipo == 'NAT':
            self._pos += 1
            return Ordinal.finito(int(valor))
        if tipo == 'SIM' and valor == '(':
            self._pos += 1
            resultado = self._expresion()
            self._consumir('SIM', ')')
            return resultado
        if tipo == 'W':
            self._pos += 1
            if self._ver() != ('SIM', '^'):
                return OMEGA
            self._pos += 1
            tipo, valor = self._ver()
            if tipo == 'NAT':
                self._pos += 1
                exponente = Ordinal.finito(int(valor))
            elif tipo == 'W':
                self._pos += 1
                exponente = OMEGA
            else:
                self._consumir('SIM', '(')
                exponente = self._expresion()
                self._consumir('SIM', ')')
            return AritmeticaOrdinal.potencia_omega(exponente)
        raise ErrorSintaxis(f"Se esperaba un ordinal en '{self.texto}'")

    @classmethod
    def parsear(cls, texto: str) -> Ordinal:
        """Atajo: analiza un texto y devuelve el ordinal."""
        return cls(texto).leer()
