"""
Mensajes de progreso con prefijo [INFO]/[WARNING]/[ERROR].

Se escriben en stderr para que la salida JSON en stdout quede limpia.
"""

import sys


class Registro:
    """Ayudante de mensajes de consola."""

    silencioso = False

    @classmethod
    def _emitir(cls, etiqueta: str, mensaje: str) -> None:
        if cls.silencioso:
            return
        print(f"  - [{etiqueta}] {mensaje}", file=sys.stderr)

    @classmethod
    def info(cls, mensaje: str) -> None:
        cls._emitir("INFO", mensaje)

    @classmethod
    def advertencia(cls, mensaje: str) -> None:
        cls._emitir("WARNING", mensaje)

    @classmethod
    def error(cls, mensaje: str) -> None:
        cls._emitir("ERROR", mensaje)
