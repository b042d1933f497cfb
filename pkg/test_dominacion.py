"""Test de constantes de dominación, bases K-básicas y bloques convexos."""

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from src.domain.Errores import ErrorDimension, ErrorPrecondicion
from src.domain.entities.DescriptorNorma import DescriptorNorma
from src.domain.entities.MatrizOperador import MatrizOperador
from src.domain.entities.ReporteDominacion import ReporteDominacion
from src.domain.entities.VectorFinito import VectorFinito
from src.domain.services.CalculadorDominacion import CalculadorDominacion

dominacion = CalculadorDominacion.constante_dominacion


def base(n: int):
    return [VectorFinito.base_canonica(n, i) for i in range(n)]


def v(*valores) -> VectorFinito:
    return VectorFinito.de(valores)


sistemas_2x2 = st.lists(
    st.lists(st.integers(min_value=-3, max_value=3), min_size=2, max_size=2), min_size=2, max_size=2
).map(lambda filas: [VectorFinito.de(f) for f in filas])


def test_bases_lp():
    print("=== Test bases de ℓ_p ===")
    reporte = dominacion(base(2), DescriptorNorma.lp(2, 2), base(2), DescriptorNorma.lp(1, 2))
    assert reporte.exacto and reporte.superior == 1, "‖a‖₂ ≤ ‖a‖₁"
    reporte = dominacion(base(2), DescriptorNorma.lp(1, 2), base(2), DescriptorNorma.lp(2, 2))
    print(f"  - ℓ₁ ≲ ℓ₂: [{float(reporte.inferior):.10f}, {float(reporte.superior):.10f}]")
    assert reporte.inferior ** 2 <= 2 <= reporte.superior ** 2
    assert reporte.superior - reporte.inferior < Fraction(1, 10 ** 6)
    reporte = dominacion(base(3), DescriptorNorma.lp('inf', 3), base(3), DescriptorNorma.lp(1, 3))
    assert reporte.exacto and reporte.superior == 1
    reporte = dominacion(base(3), DescriptorNorma.lp(1, 3), base(3), DescriptorNorma.lp('inf', 3))
    assert reporte.exacto and reporte.superior == 3
    assert reporte.testigo == (1, 1, 1), "El vértice de ℓ_∞ que maximiza ℓ₁"


def test_constante_infinita():
    print("\n=== Test constante infinita ===")
    l2 = DescriptorNorma.lp(2, 2)
    reporte = dominacion([v(1, 0), v(0, 1)], l2, [v(1, 0), v(1, 0)], l2)
    assert reporte.es_infinito and reporte.superior is None
    assert reporte.testigo == (1, -1)
    assert reporte.to_dict()['superior'] == 'inf'
    cero = dominacion([v(0, 0)], l2, [v(0, 0)], l2)
    assert cero.exacto and cero.superior == 0
    with pytest.raises(ErrorDimension):
        dominacion(base(2), l2, base(2)[:1], l2)
    with pytest.raises(ErrorDimension):
        dominacion([v(1, 0, 0)], l2, [v(1, 0)], l2)


def test_sistemas_poliedricos():
    print("\n=== Test modo exacto ===")
    schreier = DescriptorNorma.schreier(1, 4)
    reporte = dominacion(base(4), schreier, base(4), DescriptorNorma.lp('inf', 4))
    assert reporte.exacto and reporte.superior == 2
    reporte = dominacion(base(4), DescriptorNorma.lp(1, 4), base(4), schreier)
    assert reporte.exacto and reporte.superior == Fraction(5, 2), "a = (1, 1/2, 1/2, 1/2)"
    sumante = DescriptorNorma.sumante(3)
    reporte = dominacion(base(3), DescriptorNorma.lp('inf', 3), base(3), sumante)
    print(f"  - ℓ_∞ ≲ sumante: K = {reporte.superior}")
    assert reporte.exacto and reporte.superior == 2


def test_k_basica():
    print("\n=== Test K-básicas ===")
    l2 = DescriptorNorma.lp(2, 3)
    assert CalculadorDominacion.es_k_basica(base(3), 1, l2) == (True, None)
    linf = DescriptorNorma.lp('inf', 2)
    xs = [v(1, 0), v(1, 1)]
    basica, violacion = CalculadorDominacion.es_k_basica(xs, 1, linf)
    assert not basica and (violacion['m'], violacion['n']) == (1, 2)
    assert violacion['reporte'].superior == 2
    assert CalculadorDominacion.es_k_basica(xs, 2, linf) == (True, None)
    basica, violacion = CalculadorDominacion.es_k_basica([v(1, 0), v(1, 0)], 5, DescriptorNorma.lp(2, 2))
    assert not basica
    assert (violacion['m'], violacion['n'], violacion['testigo']) == (1, 2, (1, -1))


def test_decidir():
    print("\n=== Test decisión con cotas ===")
    indeciso = ReporteDominacion(Fraction(1), Fraction(2), False, (Fraction(1),), 'cotas')
    assert CalculadorDominacion.decidir(indeciso, Fraction(3, 2)) is None, "Las cotas [1, 2] no deciden 3/2"
    assert CalculadorDominacion.decidir(indeciso, 2) is True
    assert CalculadorDominacion.decidir(indeciso, Fraction(1, 2)) is False
    assert CalculadorDominacion.decidir(ReporteDominacion.infinita((1, -1)), 10 ** 6) is False


def test_euclideo_exacto():
    print("\n=== Test modo euclídeo ===")
    rotados = [v(Fraction(3, 5), Fraction(4, 5), 0), v(Fraction(-4, 5), Fraction(3, 5), 0)]
    assert CalculadorDominacion.es_k_basica(rotados, 1, DescriptorNorma.lp(2, 3)) == (True, None), \
        "Una base ortonormal de ℓ₂ es 1-básica"
    l2 = DescriptorNorma.lp(2, 2)
    reporte = dominacion(base(2), l2, [v(1, 0), v(1, 1)], l2)
    # K es la razón áurea (1 + √5)/2, irracional: intervalo con (2K - 1)² = 5 adentro
    assert not reporte.exacto and reporte.modo == 'cotas'
    assert (2 * reporte.inferior - 1) ** 2 <= 5 <= (2 * reporte.superior - 1) ** 2
    assert reporte.superior - reporte.inferior <= Fraction(1, 10 ** 9), "Ancho por defecto de los intervalos"
    assert abs(float(reporte.superior) - (1 + 5 ** 0.5) / 2) < 1e-8
    diagonal = dominacion([v(2, 0), v(0, 1)], l2, base(2), l2)
    assert diagonal.exacto and diagonal.superior == 2 and diagonal.testigo == (1, 0)
    print(f"  - K(ℓ₂, (1,0),(1,1)) ∈ [{float(reporte.inferior):.9f}, {float(reporte.superior):.9f}]")


def test_bloques_convexos():
    print("\n=== Test bloques p-absolutamente convexos ===")
    xs = [v(1, 0), v(0, 1), v(1, 1)]
    bloque = CalculadorDominacion.bloque_p_absolutamente_convexo
    assert bloque(xs, 1, [(1, 1, [1]), (2, 2, [1]), (3, 3, [1])]) == xs
    medios = bloque(xs, 1, [(1, 2, [Fraction(1, 2), Fraction(1, 2)])])
    assert medios == [v(Fraction(1, 2), Fraction(1, 2))]
    assert bloque(xs, 'inf', [(1, 2, [1, -1])]) == [v(1, -1)]
    with pytest.raises(ErrorPrecondicion):
        bloque(xs, 1, [(1, 2, [Fraction(1, 2), Fraction(1, 2)]), (2, 3, [1, 0])])
    with pytest.raises(ErrorPrecondicion):
        bloque(xs, 1, [(1, 2, [1, 1])])


def test_norma_operador():
    print("\n=== Test norma de operador ===")
    l2 = DescriptorNorma.lp(2, 2)
    reporte = CalculadorDominacion.norma_operador(MatrizOperador.diagonal([1, Fraction(1, 2)], l2))
    assert reporte.superior == 1
    l1 = DescriptorNorma.lp(1, 2)
    reporte = CalculadorDominacion.norma_operador(MatrizOperador(((1, 2), (3, -1)), l1, l1))
    assert reporte.exacto and reporte.superior == 4, "Máxima suma absoluta de columnas"


def _rotacion(a: int, b: int):
    """(cos, sen) racionales a partir de la terna pitagórica (a² - b², 2ab, a² + b²)."""
    hipotenusa = a ** 2 + b ** 2
    return Fraction(a ** 2 - b ** 2, hipotenusa), Fraction(2 * a * b, hipotenusa)


rotaciones = st.builds(_rotacion, st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=12))


@settings(max_examples=30, deadline=None)
@given(rotaciones, st.sampled_from([1, -1]))
def test_rotaciones_racionales_son_1_basicas(rotacion, signo):
    """Rotaciones racionales de ℓ₂ (ternas pitagóricas): base 1-básica e isométrica."""
    c, s = rotacion
    assert c ** 2 + s ** 2 == 1
    rotados = [v(c, s, 0), v(-s, c, 0), v(0, 0, signo)]
    l2 = DescriptorNorma.lp(2, 3)
    assert CalculadorDominacion.es_k_basica(rotados, 1, l2) == (True, None)
    ida = dominacion(rotados, l2, base(3), l2)
    vuelta = dominacion(base(3), l2, rotados, l2)
    assert ida.exacto and ida.superior == 1 and vuelta.exacto and vuelta.superior == 1


@settings(max_examples=40, deadline=None)
@given(sistemas_2x2, sistemas_2x2, st.sampled_from([Fraction(2), Fraction(-3), Fraction(1, 2)]))
def test_escalamiento(xs, ys, c):
    """K(c·xs, ys) = |c|·K(xs, ys) en modo exacto."""
    assume(ys[0][0] * ys[1][1] != ys[0][1] * ys[1][0])
    l1, linf = DescriptorNorma.lp(1, 2), DescriptorNorma.lp('inf', 2)
    reporte = dominacion(xs, l1, ys, linf)
    escalado = dominacion([x.escalar(c) for x in xs], l1, ys, linf)
    assert reporte.exacto and escalado.exacto
    assert escalado.superior == abs(c) * reporte.superior


@settings(max_examples=30, deadline=None)
@given(sistemas_2x2)
def test_transitividad(ys):
    """K(xs→zs) ≤ K(xs→ys)·K(ys→zs) con xs, zs bases canónicas."""
    assume(ys[0][0] * ys[1][1] != ys[0][1] * ys[1][0])
    l1, linf = DescriptorNorma.lp(1, 2), DescriptorNorma.lp('inf', 2)
    directa = dominacion(base(2), l1, base(2), linf)
    ida = dominacion(base(2), l1, ys, linf)
    vuelta = dominacion(ys, linf, base(2), linf)
    assert directa.superior <= ida.superior * vuelta.superior


def test_malla_caras():
    print("\n=== Test malla sobre las caras del cubo ===")
    import numpy as np
    from src.application.VerificacionService import _malla_caras
    assert [b.tolist() for b in _malla_caras(1, 1 / 64)] == [[[1.0]]]
    puntos = np.vstack(list(_malla_caras(3, 1 / 64)))
    assert puntos.shape == (3 * 129 ** 2, 3), "n·129^(n-1) puntos con paso 1/64"
    assert np.all(np.abs(puntos) <= 1) and np.all((puntos == 1).any(axis=1))
    assert np.all(np.isclose(puntos * 64, np.round(puntos * 64)))


def test_suite_dominacion_reducida():
    from src.application.VerificacionService import VerificacionService
    aprobado, detalle = VerificacionService().suite_dominacion_exacta(max_n=2)
    assert aprobado, detalle
    print(f"  - {detalle}")


if __name__ == '__main__':
    test_bases_lp()
    test_constante_infinita()
    test_sistemas_poliedricos()
    test_k_basica()
    test_decidir()
    test_euclideo_exacto()
    test_bloques_convexos()
    test_norma_operador()
    test_escalamiento()
    test_transitividad()
    test_rotaciones_racionales_son_1_basicas()
    test_malla_caras()
    test_suite_dominacion_reducida()
