"""
Serializador de resultados de comandos a texto y JSON.

El texto usa tablas alineadas de pandas; el JSON es un único objeto por
invocación.
"""

import json
from typing import Any

import pandas as pd

from src.domain.entities.ResultadoComando import ResultadoComando


class SerializadorSalida:
    """Formatea un ResultadoComando para la salida estándar."""

    @classmethod
    def formatear(cls, resultado: ResultadoComando) -> str:
        if resultado.salida_json:
            return cls.a_json(resultado)
        return cls.a_texto(resultado)

    @staticmethod
    def a_json(resultado: ResultadoComando) -> str:
        return json.dumps(resultado.to_dict(), ensure_ascii=False)

    @classmethod
    def a_texto(cls, resultado: ResultadoComando) -> str:
        """
        Un único campo `resultado` se imprime solo; una `tabla` como tabla
        alineada; cualquier otra carga como tabla campo/valor.
        """
        carga = resultado.carga
        lineas = []
        if not resultado.es_ok:
            lineas.append(f"[ERROR] {resultado.codigo}: {resultado.mensaje}")
            if not carga:
                return "\n".join(lineas)
        if set(carga) == {'resultado'}:
            lineas.append(cls.valor_texto(carga['resultado']))
        elif 'tabla' in carga:
            tabla = pd.DataFrame(carga['tabla'])
            lineas.append(tabla.to_string(index=False) if not tabla.empty else "(sin filas)")
        else:
            tabla = pd.DataFrame({
                'campo': list(carga.keys()),
                'valor': [cls.valor_texto(v) for v in carga.values()],
            })
            lineas.append(tabla.to_string(index=False))
        return "\n".join(lineas)

    @classmethod
    def valor_texto(cls, valor: Any) -> str:
        if isinstance(valor, bool):
            return 'true' if valor else 'false'
        if valor is None:
            return '-'
        if isinstance(valor, (list, tuple)):
            return "[" + ", ".join(cls.valor_texto(v) for v in valor) + "]"
        if isinstance(valor, dict):
            return "{" + ", ".join(f"{k}: {cls.valor_texto(v)}" for k, v in valor.items()) + "}"
        return str(valor)
