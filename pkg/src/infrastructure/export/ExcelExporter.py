"""
Exportador de la tabla de verificación a Excel.

Genera un libro con una hoja de resumen de las suites de aceptación.
"""

from pathlib import Path
from typing import Dict, List

import openpyxl
from openpyxl.styles import Alignment, Border, Font, PatternFill, Side
from openpyxl.utils import get_column_letter


class ExcelExporter:
    """
    Exporta filas de resultados a un archivo Excel.

    Cada fila es un diccionario columna -> valor; la primera fila define
    las columnas.
    """

    ANCHO_MINIMO = 10
    ANCHO_MAXIMO = 80

    def __init__(self, ruta_salida: str):
        """
        Args:
            ruta_salida: Ruta donde se guardará el archivo Excel
        """
        self.ruta_salida = Path(ruta_salida)
        self.workbook = openpyxl.Workbook()
        self._configurar_estilos()

    def _configurar_estilos(self):
        """Configura los estilos que se usarán en el Excel."""
        self.estilo_titulo = Font(bold=True, size=14)
        self.relleno_encabezado = PatternFill(
            start_color='366092',
            end_color='366092',
            fill_type='solid'
        )
        self.relleno_encabezado_font = Font(bold=True, color='FFFFFF', size=11)
        self.relleno_fallo = PatternFill(start_color='F8D7DA', end_color='F8D7DA', fill_type='solid')
        self.borde = Border(
            left=Side(style='thin'),
            right=Side(style='thin'),
            top=Side(style='thin'),
            bottom=Side(style='thin')
        )

    def _aplicar_estilo_encabezado(self, celda):
        celda.font = self.relleno_encabezado_font
        celda.fill = self.relleno_encabezado
        celda.alignment = Alignment(horizontal='center', vertical='center')
        celda.border = self.borde

    def exportar(self, filas: List[Dict], titulo: str = "Verificación"):
        """
        Escribe las filas en una hoja y guarda el archivo.

        Las filas con 'resultado' igual a 'FAIL' se resaltan.
        """
        hoja = self.workbook.active
        hoja.title = titulo[:31]
        hoja.cell(row=1, column=1, value=titulo).font = self.estilo_titulo

        columnas = list(filas[0].keys()) if filas else []
        for col, nombre in enumerate(columnas, start=1):
            self._aplicar_estilo_encabezado(hoja.cell(row=3, column=col, value=nombre))

        for fila_idx, fila in enumerate(filas, start=4):
            fallo = str(fila.get('resultado', '')).upper() == 'FAIL'
            for col, nombre in enumerate(columnas, start=1):
                celda = hoja.cell(row=fila_idx, column=col, value=fila.get(nombre))
                celda.border = self.borde
                if fallo:
                    celda.fill = self.relleno_fallo

        for col, nombre in enumerate(columnas, start=1):
            largo = max([len(str(nombre))] + [len(str(f.get(nombre, ''))) for f in filas])
            hoja.column_dimensions[get_column_letter(col)].width = min(
                self.ANCHO_MAXIMO, max(self.ANCHO_MINIMO, largo + 2)
            )

        self.workbook.save(self.ruta_salida)
