"""
Entidad de dominio: ResultadoComando

Resultado estructurado de una invocación de la línea de comandos.
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

ESTADO_OK = 'ok'
ESTADO_ERROR = 'error'


@dataclass(frozen=True)
class ResultadoComando:
    """
    Resultado de un comando.

    Attributes:
        estado: 'ok' o 'error'
        carga: Registro con el valor devuelto por la operación
        tiempo_ms: Duración en milisegundos
        codigo: Código legible por máquina (sólo en error)
        mensaje: Mensaje para el usuario (sólo en error)
        salida_json: La salida se pidió en JSON
    """
    estado: str
    carga: Dict[str, Any] = field(default_factory=dict)
    tiempo_ms: float = 0.0
    codigo: Optional[str] = None
    mensaje: Optional[str] = None
    salida_json: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.estado not in (ESTADO_OK, ESTADO_ERROR):
            raise ValueError(f"Estado desconocido: {self.estado}")
        if self.estado == ESTADO_ERROR and (not self.codigo or not self.mensaje):
            raise ValueError("Un resultado con error requiere código y mensaje")

    @property
    def es_ok(self) -> bool:
        return self.estado == ESTADO_OK

    def to_dict(self) -> Dict[str, Any]:
        datos = {
            'estado': self.estado,
            'carga': self.carga,
            'tiempo_ms': round(self.tiempo_ms, 3),
        }
        if self.estado == ESTADO_ERROR:
            datos['codigo'] = self.codigo
            datos['mensaje'] = self.mensaje
        return datos
