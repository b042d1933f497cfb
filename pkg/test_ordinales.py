"""Test de la aritmética de ordinales en forma normal de Cantor."""

import pytest
from hypothesis import given, settings, strategies as st

from src.domain.Errores import ErrorOrdinal, ErrorSintaxis
from src.domain.entities.Ordinal import Ordinal, CERO, UNO, OMEGA
from src.domain.services.AritmeticaOrdinal import AritmeticaOrdinal, ClaseOrdinal
from src.infrastructure.parsers.ParserOrdinal import ParserOrdinal


def o(texto: str) -> Ordinal:
    return ParserOrdinal.parsear(texto)


# Ordinales bajo ω^ω: lista de (exponente, coeficiente) con exponentes distintos
ordinales_finitarios = st.dictionaries(
    st.integers(min_value=0, max_value=3), st.integers(min_value=1, max_value=5), max_size=3
).map(lambda d: Ordinal(tuple((Ordinal.finito(e), d[e]) for e in sorted(d, reverse=True))))


def test_suma():
    """Absorción a la izquierda y concatenación sin absorción."""
    print("=== Test suma ===")
    assert AritmeticaOrdinal.sumar(UNO, OMEGA) == OMEGA, "1 + ω debe ser ω"
    assert AritmeticaOrdinal.sumar(o("w^2"), o("w+1")) == o("w^2 + w + 1"), "ω² + (ω+1)"
    resultado = AritmeticaOrdinal.sumar(o("w*2+3"), o("w*3"))
    print(f"  - (ω·2+3) + ω·3 = {resultado}")
    assert resultado == o("w*5"), "(ω·2+3) + ω·3 debe ser ω·5"


def test_producto():
    """Productos con absorción del factor finito."""
    print("\n=== Test producto ===")
    assert AritmeticaOrdinal.multiplicar(Ordinal.finito(2), OMEGA) == OMEGA, "2·ω = ω"
    assert AritmeticaOrdinal.multiplicar(o("w*2"), OMEGA) == o("w^2"), "(ω·2)·ω = ω²"
    resultado = AritmeticaOrdinal.multiplicar(o("w+1"), o("w+1"))
    print(f"  - (ω+1)·(ω+1) = {resultado}")
    assert resultado == o("w^2 + w + 1"), "(ω+1)² debe ser ω²+ω+1"


def test_potencia_omega():
    print("\n=== Test potencia de ω ===")
    assert AritmeticaOrdinal.potencia_omega(CERO) == UNO
    assert AritmeticaOrdinal.potencia_omega(UNO) == OMEGA
    resultado = AritmeticaOrdinal.potencia_omega(o("w+1"))
    assert resultado.terminos == ((o("w+1"), 1),), "ω^(ω+1) es un único término"
    print(f"  - ω^(ω+1) = {resultado}")


def test_clasificar():
    print("\n=== Test clasificación ===")
    clasificacion = AritmeticaOrdinal.clasificar(o("w*2+5"))
    assert clasificacion.clase == ClaseOrdinal.SUCESOR
    assert clasificacion.predecesor == o("w*2+4")
    assert AritmeticaOrdinal.clasificar(o("w^2")).clase == ClaseOrdinal.LIMITE
    assert AritmeticaOrdinal.clasificar(CERO).clase == ClaseOrdinal.CERO
    print(f"  - ω·2+5 es {clasificacion}")


def test_sucesion_fundamental():
    print("\n=== Test sucesión fundamental ===")
    assert AritmeticaOrdinal.sucesion_fundamental(OMEGA, 3) == Ordinal.finito(3)
    assert AritmeticaOrdinal.sucesion_fundamental(o("w^2"), 2) == o("w*2+1")
    assert AritmeticaOrdinal.sucesion_fundamental(o("w^w"), 2) == o("w^2+1")
    with pytest.raises(ErrorOrdinal):
        AritmeticaOrdinal.sucesion_fundamental(o("w+1"), 2)
    with pytest.raises(ErrorOrdinal):
        AritmeticaOrdinal.sucesion_fundamental(OMEGA, 0)


def test_indescomponibles():
    print("\n=== Test indescomponibles multiplicativos ===")
    assert AritmeticaOrdinal.es_multiplicativamente_indescomponible(OMEGA)
    assert not AritmeticaOrdinal.es_multiplicativamente_indescomponible(o("w^2"))
    assert AritmeticaOrdinal.es_multiplicativamente_indescomponible(UNO)
    assert AritmeticaOrdinal.es_multiplicativamente_indescomponible(o("w^w"))


def test_parser_errores():
    print("\n=== Test errores del parser ===")
    for texto in ("", "w+", "w*w", "2x", "(w"):
        with pytest.raises(ErrorSintaxis):
            ParserOrdinal.parsear(texto)
    with pytest.raises(ErrorOrdinal):
        Ordinal(((UNO, 1), (OMEGA, 1)))


@settings(max_examples=300, deadline=None)
@given(ordinales_finitarios, ordinales_finitarios, ordinales_finitarios)
def test_leyes_algebraicas(a, b, c):
    """Asociatividad, distributividad a izquierda y ω^a·ω^b = ω^(a+b)."""
    sumar, multiplicar = AritmeticaOrdinal.sumar, AritmeticaOrdinal.multiplicar
    assert sumar(sumar(a, b), c) == sumar(a, sumar(b, c))
    assert multiplicar(multiplicar(a, b), c) == multiplicar(a, multiplicar(b, c))
    assert multiplicar(a, sumar(b, c)) == sumar(multiplicar(a, b), multiplicar(a, c))
    assert multiplicar(AritmeticaOrdinal.potencia_omega(a), AritmeticaOrdinal.potencia_omega(b)) == \
        AritmeticaOrdinal.potencia_omega(sumar(a, b))


@settings(max_examples=300, deadline=None)
@given(ordinales_finitarios, ordinales_finitarios, ordinales_finitarios)
def test_monotonia_derecha(a, b, c):
    if b == c:
        return
    menor, mayor = sorted((b, c))
    assert AritmeticaOrdinal.sumar(a, menor) < AritmeticaOrdinal.sumar(a, mayor)
    if not a.es_cero:
        assert AritmeticaOrdinal.multiplicar(a, menor) < AritmeticaOrdinal.multiplicar(a, mayor)


@settings(max_examples=200, deadline=None)
@given(ordinales_finitarios)
def test_formato_reversible(a):
    """El texto de un ordinal se vuelve a leer como el mismo ordinal."""
    assert ParserOrdinal.parsear(str(a)) == a


def test_suites_ordinales_reducidas():
    """Versiones pequeñas de las suites 1 y 2."""
    from src.application.VerificacionService import VerificacionService
    servicio = VerificacionService(semilla=7)
    aprobado, detalle = servicio.suite_leyes_ordinales(cantidad=200)
    assert aprobado, detalle
    aprobado, detalle = servicio.suite_oraculo_tipo_orden(max_coeficiente=2)
    assert aprobado, detalle
    print(f"  - {detalle}")



def test_oraculo_tipo_orden_explicito():
    """Tipos de orden de buenos órdenes explícitos armados a mano."""
    print("\n=== Test oráculo de tipo de orden ===")
    from src.application.VerificacionService import _orden_producto, _tipo_orden
    omega_2 = Ordinal(((Ordinal.finito(1), 2),))
    assert _tipo_orden(()) == CERO and _tipo_orden((3,)) == Ordinal.finito(3)
    assert _tipo_orden((3, None)) == OMEGA, "3 + ω = ω"
    assert _tipo_orden((None, 0, 2, None, 1)) == Ordinal(((UNO, 2), (CERO, 1)))
    assert _tipo_orden((None, None)) == omega_2
    assert _tipo_orden(_orden_producto((2,), (None,))) == OMEGA, "2·ω = ω"
    assert _tipo_orden(_orden_producto((None, 3), (2,))) == Ordinal(((UNO, 2), (CERO, 3)))
    assert _orden_producto((None,), (None,)) is None, "ω·ω no queda bajo ω²"
    assert _orden_producto((), (None, 4)) == ()


if __name__ == '__main__':
    test_suma()
    test_producto()
    test_potencia_omega()
    test_clasificar()
    test_sucesion_fundamental()
    test_indescomponibles()
    test_parser_errores()
    test_leyes_algebraicas()
    test_monotonia_derecha()
    test_formato_reversible()
    test_suites_ordinales_reducidas()
    test_oraculo_tipo_orden_explicito()
