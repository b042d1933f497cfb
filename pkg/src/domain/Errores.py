"""
Errores de dominio.

Cada error lleva un código legible por máquina que la línea de comandos
reporta junto al mensaje.
"""


class ErrorDominio(ValueError):
    """Error base del dominio de índices ordinales."""

    codigo = "E_DOMINIO"

    def __init__(self, mensaje: str):
        super().__init__(mensaje)
        self.mensaje = mensaje


class ErrorSintaxis(ErrorDominio):
    """Texto que no respeta la gramática de ordinales, familias o descriptores."""
    codigo = "E_SINTAXIS"


class ErrorPresupuesto(ErrorDominio):
    """Se superó un límite configurable (restricción, vértices, nodos, dimensión)."""
    codigo = "E_PRESUPUESTO"


class ErrorDimension(ErrorDominio):
    """Formas incompatibles entre vectores, matrices y descriptores."""
    codigo = "E_DIMENSION"


class ErrorOrdinal(ErrorDominio, ArithmeticError):
    """Ordinal fuera del fragmento representable o de la clase exigida."""
    codigo = "E_ORDINAL"


class ErrorEstructura(ErrorDominio):
    """Árbol, familia o selección mal formada."""
    codigo = "E_ESTRUCTURA"


class ErrorPrecondicion(ErrorDominio):
    """Entrada que viola una precondición de la operación."""
    codigo = "E_PRECONDICION"
