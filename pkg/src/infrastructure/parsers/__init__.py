"""
Lectores de gramáticas de texto y de archivos de árboles.
"""
