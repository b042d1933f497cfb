"""
Lector de la gramática de familias.

Gramática: `S0`, `S(<ordinal>)`, `A(<k>)`, `S(w1)` y la composición `F[G]`,
con anidamiento, por ejemplo `S(1)[A(2)[S(w)]]`. Los conjuntos se escriben
`{2,3}` (también `[2,3]` o `{}`).
"""

from typing import Tuple

from src.domain.Errores import ErrorDominio, ErrorSintaxis
from src.domain.entities.Familia import ConjuntoFinito, ExpresionFamilia, normalizar_conjunto
from src.infrastructure.parsers.ParserOrdinal import ParserOrdinal


def buscar_cierre(texto: str, inicio: int, abre: str, cierra: str) -> int:
    """Posición del delimitador que cierra el abierto en `inicio`."""
    nivel = 0
    for i in range(inicio, len(texto)):
        if texto[i] == abre:
            nivel += 1
        elif texto[i] == cierra:
            nivel -= 1
            if nivel == 0:
                return i
    raise ErrorSintaxis(f"Falta '{cierra}' en '{texto}'")


class ParserFamilia:
    """Analizador de expresiones de familias."""

    OMEGA_UNO = ('w1', 'ω1', 'ω₁', 'w_1')

    def __init__(self, texto: str):
        self.texto = texto.replace(' ', '')

    def leer(self) -> ExpresionFamilia:
        """
        Analiza el texto completo.

        Raises:
            ErrorSintaxis: Si el texto no respeta la gramática
        """
        if not self.texto:
            raise ErrorSintaxis("Expresión de familia vacía")
        familia, pos = self._expresion(0)
        if pos != len(self.texto):
            raise ErrorSintaxis(f"Texto sobrante en '{self.texto}' posición {pos}")
        return familia

    def _expresion(self, pos: int) -> Tuple[ExpresionFamilia, int]:
        familia, pos = self._atomo(pos)
        while pos < len(self.texto) and self.texto[pos] == '[':
            fin = buscar_cierre(self.texto, pos, '[', ']')
            interna = ParserFamilia(self.texto[pos + 1:fin]).leer()
            try:
                familia = ExpresionFamilia.componer(familia, interna)
            except ErrorDominio as e:
                raise ErrorSintaxis(e.mensaje)
            pos = fin + 1
        return familia, pos

    def _atomo(self, pos: int) -> Tuple[ExpresionFamilia, int]:
        texto = self.texto
        if texto.startswith('S0', pos):
            return ExpresionFamilia.s0(), pos + 2
        if texto.startswith('S(', pos) or texto.startswith('A(', pos):
            fin = buscar_cierre(texto, pos + 1, '(', ')')
            argumento = texto[pos + 2:fin]
            if texto[pos] == 'A':
                if not argumento.isdigit() or int(argumento) < 1:
                    raise ErrorSintaxis(f"A(k) requiere un natural k >= 1: '{argumento}'")
                return ExpresionFamilia.a(int(argumento)), fin + 1
            if argumento in self.OMEGA_UNO:
                return ExpresionFamilia.total(), fin + 1
            return ExpresionFamilia.schreier(ParserOrdinal.parsear(argumento)), fin + 1
        raise ErrorSintaxis(f"Se esperaba S0, S(..) o A(..) en '{texto}' posición {pos}")

    @classmethod
    def parsear(cls, texto: str) -> ExpresionFamilia:
        """Atajo: analiza un texto y devuelve la expresión."""
        return cls(texto).leer()

    @staticmethod
    def parsear_conjunto(texto: str) -> ConjuntoFinito:
        """
        Conjunto finito `{2,3}` de naturales positivos.

        Raises:
            ErrorSintaxis: Si el texto no es un conjunto bien escrito
            ErrorEstructura: Si hay elementos no positivos o repetidos
        """
        texto = texto.strip()
        if len(texto) < 2 or (texto[0], texto[-1]) not in (('{', '}'), ('[', ']')):
            raise ErrorSintaxis(f"Se esperaba un conjunto entre llaves: '{texto}'")
        interior = texto[1:-1].strip()
        if not interior:
            return ()
        try:
            elementos = [int(e) for e in interior.split(',')]
        except ValueError:
            raise ErrorSintaxis(f"Elementos no naturales en '{texto}'")
        return normalizar_conjunto(elementos)
