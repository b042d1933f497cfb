"""
Punto de entrada principal de los índices ordinales de operadores.

Ejecuta un subcomando (ord, tree, family, norm, dominate, index, verify) e
imprime el resultado como tabla de texto o, con --json, como un objeto JSON.
"""

import sys
from typing import List, Optional

from src.application.ComandosService import ComandosService
from src.infrastructure.export.SerializadorSalida import SerializadorSalida


def main(argv: Optional[List[str]] = None) -> int:
    """
    Función principal: ejecuta la invocación y devuelve el código de salida.
    """
    argv = sys.argv[1:] if argv is None else argv
    servicio = ComandosService()
    resultado = servicio.run(argv)
    print(SerializadorSalida.formatear(resultado))
    return ComandosService.codigo_salida(resultado)


if __name__ == "__main__":
    sys.exit(main())
