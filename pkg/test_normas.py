"""Test del motor de normas y de las construcciones de operadores."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.domain.Errores import ErrorDimension, ErrorEstructura, ErrorPrecondicion, ErrorSintaxis
from src.domain.entities.DescriptorNorma import DescriptorNorma, INFINITO, TipoDescriptor
from src.domain.entities.MatrizOperador import MatrizOperador
from src.domain.entities.Ordinal import OMEGA
from src.domain.entities.VectorFinito import VectorFinito
from src.domain.services.CalculadorNormas import CalculadorNormas
from src.domain.services.CombinadorOperadores import CombinadorOperadores
from src.infrastructure.parsers.ParserDescriptor import ParserDescriptor

norma = CalculadorNormas.norma

vectores_5 = st.lists(st.integers(min_value=-4, max_value=4), min_size=5, max_size=5).map(VectorFinito.de)


def test_normas_basicas():
    print("=== Test normas de referencia ===")
    assert norma(DescriptorNorma.lp(2, 2), VectorFinito.de([3, 4])).valor == 5
    assert norma(DescriptorNorma.lp('inf', 3), VectorFinito.de([1, -7, 2])).valor == 7
    assert norma(DescriptorNorma.lp(1, 3), VectorFinito.de([1, -7, Fraction(1, 2)])).valor == Fraction(17, 2)
    assert norma(DescriptorNorma.schreier(1, 4), VectorFinito.de([1, 1, 1, 1])).valor == 2
    assert norma(DescriptorNorma.x_xi_2(1, 4), VectorFinito.de([0, 1, 1, 0])).valor == 2
    assert norma(DescriptorNorma.sumante(3), VectorFinito.de([1, -1, 1])).valor == 1
    raiz_dos = norma(DescriptorNorma.lp(2, 2), VectorFinito.de([1, 1]))
    print(f"  - ‖(1,1)‖₂ = {raiz_dos}")
    assert not raiz_dos.exacto and raiz_dos.inferior ** 2 <= 2 <= raiz_dos.superior ** 2
    assert raiz_dos.ancho <= Fraction(1, 10 ** 9)


def test_normas_z():
    print("\n=== Test Z(1,2) ===")
    unos = VectorFinito.de([1, 1, 1, 1])
    cadena = DescriptorNorma.z(1, 2, [(1,), (1, 1), (1, 1, 1), (1, 1, 1, 1)])
    antichain = DescriptorNorma.z(1, 2, [(1,), (2,), (3,), (4,)])
    assert norma(cadena, unos).valor == 4
    assert norma(antichain, unos).valor == 2
    assert CalculadorNormas.norma_z_exhaustiva(cadena, unos).contiene(4)
    assert CalculadorNormas.norma_z_exhaustiva(antichain, unos).contiene(2)
    with pytest.raises(ErrorEstructura):
        DescriptorNorma.z(1, 2, [(1, 1)])


def test_convexificacion_y_suma_directa():
    print("\n=== Test convexificación y suma directa ===")
    v = VectorFinito.de([3, 4])
    assert norma(DescriptorNorma.convexificacion(DescriptorNorma.lp(1, 2), 2), v).valor == 5
    suma = DescriptorNorma.suma_directa(DescriptorNorma.lp(2, 2), [DescriptorNorma.lp(1, 2)] * 2)
    assert suma.dimension == 4
    assert norma(suma, VectorFinito.de([1, 1, 0, 0])).valor == 2
    assert norma(suma, VectorFinito.de([3, 0, 0, -4])).valor == 5
    with pytest.raises(ErrorEstructura):
        norma(DescriptorNorma.convexificacion(DescriptorNorma.sumante(2), 2), v)
    with pytest.raises(ErrorDimension):
        norma(DescriptorNorma.lp(2, 3), v)


def test_datos_poliedricos():
    print("\n=== Test funcionales ===")
    assert CalculadorNormas.es_poliedrica(DescriptorNorma.schreier(1, 4))
    assert not CalculadorNormas.es_poliedrica(DescriptorNorma.lp(2, 4))
    assert CalculadorNormas.funcionales(DescriptorNorma.lp(2, 4)) is None
    assert len(CalculadorNormas.funcionales(DescriptorNorma.lp(1, 3))) == 4
    assert len(CalculadorNormas.funcionales(DescriptorNorma.lp('inf', 3))) == 3
    schreier = DescriptorNorma.schreier(1, 4)
    funcionales = CalculadorNormas.funcionales(schreier)
    v = VectorFinito.de([1, -2, 3, 1])
    maximo = max(abs(sum(f * c for f, c in zip(g, v))) for g in funcionales)
    assert maximo == norma(schreier, v).valor
    assert CalculadorNormas.constante_inferior_infinito(DescriptorNorma.sumante(3)) == Fraction(1, 2)


def test_parser_descriptor():
    print("\n=== Test parser de descriptores ===")
    assert ParserDescriptor.parsear("lp(2,4)") == DescriptorNorma.lp(2, 4)
    assert ParserDescriptor.parsear("lp(inf,3)").p == INFINITO
    assert ParserDescriptor.parsear("schreier(w,5)") == DescriptorNorma.schreier(OMEGA, 5)
    z = ParserDescriptor.parsear("z(1,2,[[1],[1,1],[2]])")
    assert z.tipo == TipoDescriptor.Z_PQ and z.dimension == 3
    suma = ParserDescriptor.parsear("dsum(lp(2,2); lp(1,2), summing(3))")
    assert suma.dimension == 5
    assert str(ParserDescriptor.parsear("conv(lp(1,2),2)")) == "conv(lp(1,2),2)"
    assert ParserDescriptor.parsear_vector("[1, -2/3, 0]") == VectorFinito.de([1, Fraction(-2, 3), 0])
    assert len(ParserDescriptor.parsear_vectores("[[1,0],[0,1]]")) == 2
    for texto in ("lp(2)", "foo(1,2)", "lp(2,4)x", "summing(a)"):
        with pytest.raises(ErrorSintaxis):
            ParserDescriptor.parsear(texto)
    with pytest.raises(ErrorEstructura):
        ParserDescriptor.parsear("lp(1/2,3)")
    with pytest.raises(ErrorSintaxis):
        ParserDescriptor.parsear_vector("1,2")


def test_operador_convexificado():
    print("\n=== Test operador convexificado ===")
    l1 = DescriptorNorma.lp(1, 2)
    identidad = CombinadorOperadores.operador_convexificado(MatrizOperador.identidad(l1), 2)
    assert identidad.exacto and identidad.matriz.entradas == MatrizOperador.identidad(l1).entradas
    diagonal = CombinadorOperadores.operador_convexificado(MatrizOperador.diagonal([4, 9], l1), 2)
    assert diagonal.matriz.entradas == ((2, 0), (0, 3))
    assert diagonal.matriz.dominio == DescriptorNorma.convexificacion(l1, 2)
    columnas = MatrizOperador(((2, 0), (3, 0), (0, 5)), l1, DescriptorNorma.lp(1, 3))
    raices = CombinadorOperadores.operador_convexificado(columnas, 2)
    assert not raices.exacto
    assert raices.inferior.entradas[0][0] ** 2 <= 2 <= raices.superior.entradas[0][0] ** 2
    with pytest.raises(ErrorPrecondicion):
        CombinadorOperadores.operador_convexificado(
            MatrizOperador(((1, 1), (0, 1)), l1, l1), 2
        )


def test_operador_arbol():
    print("\n=== Test operador de árbol ===")
    nodos = [(1,), (1, 1), (1, 1, 1), (2,)]
    cadena = [(1,), (1, 1), (1, 1, 1)]
    operador = CombinadorOperadores.operador_arbol(nodos, cadena)
    suma_cadena = VectorFinito.de([1 if n in cadena else 0 for n in operador.codominio.nodos])
    imagen = operador.aplicar(suma_cadena)
    assert norma(operador.codominio, imagen).valor == 3
    assert CombinadorOperadores.operador_arbol(nodos, []).rango == 0
    assert CombinadorOperadores.operador_arbol([(), (1,), (2,)], [()]).rango == 1
    with pytest.raises(ErrorEstructura):
        CombinadorOperadores.operador_arbol(nodos, [(1, 1)])


def test_espacios_w():
    print("\n=== Test espacios W ===")
    assert CombinadorOperadores.aproximacion_espacio_w(0, 3) == DescriptorNorma.lp(1, 1)
    w1 = CombinadorOperadores.aproximacion_espacio_w(1, 2)
    assert w1.tipo == TipoDescriptor.SUMA_DIRECTA and w1.externo == DescriptorNorma.lp(2, 2)
    assert [i.dimension for i in w1.internos] == [1, 2]
    w_omega = CombinadorOperadores.aproximacion_espacio_w(OMEGA, 2)
    assert [i.dimension for i in w_omega.internos] == [3, 9]
    assert w_omega.dimension == CombinadorOperadores.dimension_espacio_w(OMEGA, 2)
    a_xi = CombinadorOperadores.operador_a_xi(1, 2)
    assert a_xi.dominio == DescriptorNorma.lp(1, 3) and a_xi.rango == 3
    print(f"  - dim W_ω (2 sumandos) = {w_omega.dimension}")


@settings(max_examples=80, deadline=None)
@given(vectores_5, st.integers(min_value=-3, max_value=3))
def test_axiomas_y_comparaciones(v, c):
    """Homogeneidad, incondicionalidad y ℓ_∞ ≤ ‖·‖ ≤ ℓ₁."""
    infinito = norma(DescriptorNorma.lp('inf', 5), v).valor
    uno = norma(DescriptorNorma.lp(1, 5), v).valor
    schreier = DescriptorNorma.schreier(1, 5)
    valor = norma(schreier, v).valor
    assert norma(schreier, v.escalar(c)).valor == abs(c) * valor
    assert norma(schreier, v.absoluto()).valor == valor
    assert infinito <= valor <= uno
    xxi2 = norma(DescriptorNorma.x_xi_2(1, 5), v)
    assert xxi2.superior >= valor
    assert xxi2.inferior <= uno
    assert norma(DescriptorNorma.sumante(5), v).valor <= uno


@settings(max_examples=60, deadline=None)
@given(vectores_5, vectores_5)
def test_desigualdad_triangular(u, v):
    for descriptor in (DescriptorNorma.schreier(1, 5), DescriptorNorma.sumante(5), DescriptorNorma.lp(2, 5)):
        suma = norma(descriptor, u + v)
        assert suma.inferior <= norma(descriptor, u).superior + norma(descriptor, v).superior


def test_suites_normas_reducidas():
    from src.application.VerificacionService import VerificacionService
    servicio = VerificacionService(semilla=11)
    aprobado, detalle = servicio.suite_oraculos_normas(cantidad=5)
    assert aprobado, detalle
    aprobado, detalle = servicio.suite_truncamiento_w(cantidad=10)
    assert aprobado, detalle
    print(f"  - {detalle}")


if __name__ == '__main__':
    test_normas_basicas()
    test_normas_z()
    test_convexificacion_y_suma_directa()
    test_datos_poliedricos()
    test_parser_descriptor()
    test_operador_convexificado()
    test_operador_arbol()
    test_espacios_w()
    test_axiomas_y_comparaciones()
    test_desigualdad_triangular()
    test_suites_normas_reducidas()
