"""
Servicio de dominio: ConfiguracionPresupuestos

Resuelve los presupuestos y tolerancias de los cálculos.
Orden de prioridad: valor manual > archivo config_presupuestos.json > valor por defecto.
"""

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional


class ConfiguracionPresupuestos:
    """
    Presupuestos configurables de los cálculos exactos y de búsqueda.

    Los valores por defecto son constantes de clase; el archivo de
    configuración y los valores manuales los sobrescriben por clave.
    Una instancia no cambia tras construirse y se pasa explícitamente a los
    servicios; es hashable para servir de clave en las cachés.
    """

    ARCHIVO_CONFIG = 'config_presupuestos.json'

    # Valores por defecto
    N_MAX_RESTRICCION = 24
    MAX_MIEMBROS = 2 ** 20
    MAX_VERTICES = 50000
    ARRANQUES_ASCENSO = 64
    SEMILLA = 12345
    ANCHO_INTERVALO = Fraction(1, 10 ** 9)
    VENTANA_XXI2 = 18
    NODOS_EXHAUSTIVO_Z = 12
    MAX_NODOS_BUSQUEDA = 10 ** 6
    DIMENSION_MAX_W = 4096
    MAX_FUNCIONALES = 4096
    PROFUNDIDAD_MAXIMA_SONDA = 6

    CLAVES = {
        'n_max_restriccion': int,
        'max_miembros': int,
        'max_vertices': int,
        'arranques_ascenso': int,
        'semilla': int,
        'ancho_intervalo': Fraction,
        'ventana_xxi2': int,
        'nodos_exhaustivo_z': int,
        'max_nodos_busqueda': int,
        'dimension_max_w': int,
        'max_funcionales': int,
        'profundidad_maxima_sonda': int,
    }

    def __init__(self, valores_manuales: Optional[Dict[str, Any]] = None,
                 ruta_archivo: Optional[str] = None):
        """
        Inicializa la configuración.

        Args:
            valores_manuales: Valores que prevalecen sobre archivo y defecto
            ruta_archivo: Archivo JSON alternativo (por defecto config_presupuestos.json)
        """
        self._ruta_archivo = Path(ruta_archivo or self.ARCHIVO_CONFIG)
        self._valores: Dict[str, Any] = {
            clave: getattr(self, clave.upper()) for clave in self.CLAVES
        }
        self._valores.update(self._obtener_desde_archivo())
        for clave, valor in (valores_manuales or {}).items():
            if valor is not None:
                self._establecer(clave, valor)

    def _obtener_desde_archivo(self) -> Dict[str, Any]:
        """
        Lee los presupuestos desde el archivo de configuración.

        Returns:
            Diccionario con las claves reconocidas, vacío si no hay archivo válido
        """
        if not self._ruta_archivo.exists():
            return {}

        try:
            with open(self._ruta_archivo, 'r', encoding='utf-8') as f:
                config = json.load(f)
            return {
                clave: self._convertir(clave, valor)
                for clave, valor in config.items() if clave in self.CLAVES
            }
        except (FileNotFoundError, json.JSONDecodeError, KeyError, ValueError, TypeError):
            return {}

    def _convertir(self, clave: str, valor: Any) -> Any:
        tipo = self.CLAVES[clave]
        if tipo is Fraction:
            return Fraction(str(valor))
        return int(valor)

    def _establecer(self, clave: str, valor: Any) -> None:
        """
        Fija un presupuesto durante la construcción.

        Raises:
            KeyError: Si la clave no es un presupuesto conocido
        """
        if clave not in self.CLAVES:
            raise KeyError(f"Presupuesto desconocido: {clave}")
        self._valores[clave] = self._convertir(clave, valor)

    def obtener(self, clave: str) -> Any:
        return self._valores[clave]

    def __getattr__(self, nombre: str) -> Any:
        valores = self.__dict__.get('_valores')
        if valores is not None and nombre in valores:
            return valores[nombre]
        raise AttributeError(nombre)

    def to_dict(self) -> Dict[str, Any]:
        return {clave: str(valor) if isinstance(valor, Fraction) else valor
                for clave, valor in self._valores.items()}

    def __eq__(self, otra: object) -> bool:
        if not isinstance(otra, ConfiguracionPresupuestos):
            return NotImplemented
        return self._valores == otra._valores

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._valores.items())))

    @classmethod
    def resolver(cls, presupuestos: Optional['ConfiguracionPresupuestos']) -> 'ConfiguracionPresupuestos':
        """La configuración recibida, o una nueva (archivo y valores por defecto)."""
        return cls() if presupuestos is None else presupuestos
