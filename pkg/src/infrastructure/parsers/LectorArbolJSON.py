"""
Lector JSON de árboles finitos.

El archivo contiene una lista de sucesiones, por ejemplo
`[[], [1], [1, 2], [3]]`. El árbol tiene raíz sii la lista contiene `[]`.
"""

import json
from pathlib import Path

from src.domain.Errores import ErrorEstructura
from src.domain.entities.Arbol import ArbolFinito


class LectorArbolJSON:
    """Lector de archivos de árboles."""

    def __init__(self, ruta_archivo: str):
        """
        Args:
            ruta_archivo: Ruta al archivo JSON

        Raises:
            FileNotFoundError: Si el archivo no existe
        """
        self.ruta_archivo = Path(ruta_archivo)
        if not self.ruta_archivo.exists():
            raise FileNotFoundError(f"El archivo no existe: {ruta_archivo}")

    def leer(self) -> ArbolFinito:
        """
        Lee el árbol del archivo.

        Raises:
            ErrorEstructura: Si el contenido no es una lista de sucesiones o
                no es cerrado por prefijos
        """
        with open(self.ruta_archivo, 'r', encoding='utf-8') as archivo:
            try:
                datos = json.load(archivo)
            except json.JSONDecodeError as e:
                raise ErrorEstructura(f"JSON inválido en {self.ruta_archivo.name}: {e}")
        if not isinstance(datos, list) or not all(isinstance(s, list) for s in datos):
            raise ErrorEstructura(f"{self.ruta_archivo.name} debe contener una lista de sucesiones")
        for sucesion in datos:
            if not all(isinstance(e, (int, str)) and not isinstance(e, bool) for e in sucesion):
                raise ErrorEstructura(f"Etiquetas no admitidas en {sucesion}")
        return ArbolFinito.desde_secuencias(datos)
