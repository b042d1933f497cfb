"""Test de las sondas de índices NP, SS, WC y de los certificados de Schreier."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from src.domain.Errores import ErrorDimension, ErrorEstructura, ErrorPrecondicion
from src.domain.entities.ConfiguracionSonda import ConfiguracionSonda
from src.domain.entities.DescriptorNorma import DescriptorNorma
from src.domain.entities.MatrizOperador import MatrizOperador
from src.domain.entities.ReporteProfundidad import RazonImposibilidad, ReporteProfundidad
from src.domain.entities.VectorFinito import VectorFinito
from src.domain.services.SondaIndices import SondaIndices


def base(n: int):
    return [VectorFinito.base_canonica(n, i) for i in range(n)]


def config_l1(n: int, constante=1, **kwargs) -> ConfiguracionSonda:
    return ConfiguracionSonda(base=DescriptorNorma.lp(1, n), constante=constante, **kwargs)


def test_np_miembro():
    print("=== Test membresía NP ===")
    l1 = DescriptorNorma.lp(1, 3)
    identidad = MatrizOperador.identidad(l1)
    assert SondaIndices.np_miembro(identidad, config_l1(3), base(3))
    assert not SondaIndices.np_miembro(MatrizOperador.cero(l1, l1), config_l1(3), base(3)[:1])
    assert SondaIndices.np_miembro(MatrizOperador.cero(l1, l1), config_l1(3), [])
    l2 = DescriptorNorma.lp(2, 2)
    assert not SondaIndices.np_miembro(MatrizOperador.identidad(l2), config_l1(2), base(2)), \
        "‖e₁+e₂‖₂ = √2 < 2"
    assert SondaIndices.np_miembro(MatrizOperador.identidad(l2), config_l1(2, constante=2), base(2))
    assert not SondaIndices.np_miembro(identidad, config_l1(3), [VectorFinito.de([2, 0, 0])]), \
        "Fuera de la bola unidad"
    with pytest.raises(ErrorDimension):
        SondaIndices.np_miembro(identidad, config_l1(2), base(3))


def test_configuracion_sonda():
    print("\n=== Test configuración de sonda ===")
    with pytest.raises(ErrorEstructura):
        ConfiguracionSonda(base=DescriptorNorma.sumante(3))
    with pytest.raises(ErrorEstructura):
        config_l1(3, constante=Fraction(1, 2))
    with pytest.raises(ErrorEstructura):
        ReporteProfundidad(1, (), None, None)
    with pytest.raises(ErrorEstructura):
        ReporteProfundidad(0, (), 1, RazonImposibilidad.EXHAUSTIVA, 1)
    assert config_l1(3).con_constante(4).constante == 4


def test_sonda_rango_uno():
    print("\n=== Test sonda sobre una matriz de rango 1 ===")
    l1 = DescriptorNorma.lp(1, 3)
    operador = MatrizOperador(((1, 1, 1), (0, 0, 0), (0, 0, 0)), l1, l1)
    config = config_l1(3)
    reporte = SondaIndices.sonda_profundidad_np(operador, config)
    print(f"  - {reporte.to_dict()}")
    assert reporte.profundidad_testigo == 1
    assert reporte.imposible_desde == 2 and reporte.razon == RazonImposibilidad.RANGO
    assert reporte.indice_finito == 2
    assert SondaIndices.validar_reporte(operador, config, reporte)


def test_sonda_cero_e_identidad():
    print("\n=== Test sonda sobre cero e identidad ===")
    l1 = DescriptorNorma.lp(1, 3)
    reporte = SondaIndices.sonda_profundidad_np(MatrizOperador.cero(l1, l1), config_l1(3))
    assert reporte.profundidad_testigo == 0 and reporte.indice_finito == 1
    l1_4 = DescriptorNorma.lp(1, 4)
    config = config_l1(4, reserva=tuple(base(4)))
    reporte = SondaIndices.sonda_profundidad_np(MatrizOperador.identidad(l1_4), config)
    assert reporte.profundidad_testigo == 4 and reporte.indice_finito == 5
    assert SondaIndices.validar_reporte(MatrizOperador.identidad(l1_4), config, reporte)
    with pytest.raises(ErrorPrecondicion):
        SondaIndices.sonda_profundidad_np(
            MatrizOperador.identidad(l1_4), config_l1(4, reserva=(VectorFinito.de([3, 0, 0, 0]),))
        )


def test_reserva_por_defecto():
    print("\n=== Test reserva de candidatos ===")
    l1 = DescriptorNorma.lp(1, 3)
    reserva = SondaIndices.reserva_por_defecto(l1)
    assert len(reserva) == 3 + 3
    assert VectorFinito.de([Fraction(1, 2), Fraction(-1, 2), 0]) in reserva
    cerrada = SondaIndices.reserva_por_defecto(l1, 1, cierre_bloques=True)
    assert len(cerrada) > len(reserva)
    assert set(reserva) <= set(cerrada)


def test_ss_miembro():
    print("\n=== Test membresía SS ===")
    l2 = DescriptorNorma.lp(2, 3)
    assert SondaIndices.ss_miembro(MatrizOperador.identidad(l2), 1, base(3))
    l2_2 = DescriptorNorma.lp(2, 2)
    diagonal = MatrizOperador.diagonal([1, Fraction(1, 2)], l2_2)
    assert SondaIndices.ss_miembro(diagonal, 1, base(2)) is False, "K = 2 certificado en ℓ₂"
    assert SondaIndices.ss_miembro(diagonal, 2, base(2))
    e1 = VectorFinito.base_canonica(2, 0)
    assert not SondaIndices.ss_miembro(diagonal, 100, [e1, e1]), "Una repetición nunca es básica"
    with pytest.raises(ErrorPrecondicion):
        SondaIndices.ss_miembro(diagonal, 1, [VectorFinito.de([2, 0])])


def test_ss_miembro_rotacion_euclidea():
    print("\n=== Test membresía SS de una base rotada ===")
    rotados = [VectorFinito.de([Fraction(3, 5), Fraction(4, 5), 0]),
               VectorFinito.de([Fraction(-4, 5), Fraction(3, 5), 0])]
    identidad = MatrizOperador.identidad(DescriptorNorma.lp(2, 3))
    assert SondaIndices.ss_miembro(identidad, 1, rotados) is True, "La base rotada es 1-básica e isométrica"


def _rotacion(a: int, b: int) -> MatrizOperador:
    """Rotación racional de ℓ₂² a partir de la terna pitagórica (a² - b², 2ab, a² + b²)."""
    hipotenusa = a ** 2 + b ** 2
    c, s = Fraction(a ** 2 - b ** 2, hipotenusa), Fraction(2 * a * b, hipotenusa)
    l2 = DescriptorNorma.lp(2, 2)
    return MatrizOperador(((c, -s), (s, c)), l2, l2)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=12))
def test_rotaciones_racionales_ss(a, b):
    """Las columnas de una rotación racional y sus imágenes forman miembros SS a K = 1."""
    rotacion = _rotacion(a, b)
    columnas = rotacion.imagenes_base()
    assert SondaIndices.ss_miembro(rotacion, 1, base(2)) is True
    assert SondaIndices.ss_miembro(MatrizOperador.identidad(rotacion.dominio), 1, columnas) is True
    assert SondaIndices.ss_miembro(rotacion, 1, columnas) is True


def test_wc_miembro():
    print("\n=== Test membresía WC ===")
    for n in range(1, 5):
        c0 = DescriptorNorma.lp('inf', n)
        assert SondaIndices.wc_miembro(MatrizOperador.identidad(c0), 1, SondaIndices.cadena_sumante(n))
    assert SondaIndices.cadena_sumante(3, 2) == [VectorFinito.de([1, 1, 1]), VectorFinito.de([0, 1, 1])]
    l2 = DescriptorNorma.lp(2, 3)
    assert not SondaIndices.wc_miembro(MatrizOperador.identidad(l2), 1, base(3)), "3 contra √3"
    assert SondaIndices.wc_miembro(MatrizOperador.identidad(l2), 1, base(3)[:1])
    assert not SondaIndices.wc_miembro(MatrizOperador.cero(l2, l2), 5, base(3)[:2])


def test_certificado_modelo_extendido():
    print("\n=== Test certificados de modelos extendidos ===")
    valido, fallo = SondaIndices.certificado_modelo_extendido(
        base(8), DescriptorNorma.schreier(1, 8), 1, 1, 1, 1
    )
    assert valido and fallo is None
    valido, fallo = SondaIndices.certificado_modelo_extendido(
        base(8), DescriptorNorma.lp('inf', 8), 1, 1, 1, 1
    )
    print(f"  - ℓ_∞ falla en {fallo}")
    assert not valido and fallo == ((2, 3), (1, 1))
    for xi in (0, 1, 3):
        valido, _ = SondaIndices.certificado_modelo_extendido(
            [VectorFinito.de([1])], DescriptorNorma.lp(2, 1), 2, xi, 1, 1
        )
        assert valido


def test_miembro_indexado_schreier():
    print("\n=== Test miembros indexados por S_ξ ===")
    schreier = DescriptorNorma.schreier(1, 6)
    assert SondaIndices.miembro_indexado_schreier(MatrizOperador.identidad(schreier), config_l1(6), 1, base(6))
    l2 = DescriptorNorma.lp(2, 6)
    assert not SondaIndices.miembro_indexado_schreier(MatrizOperador.identidad(l2), config_l1(6), 1, base(6))
    assert SondaIndices.miembro_indexado_schreier(MatrizOperador.identidad(l2), config_l1(6), 0, base(6))


def test_composicion_y_perturbacion():
    print("\n=== Test composición y perturbación ===")
    l1 = DescriptorNorma.lp(1, 2)
    identidad = MatrizOperador.identidad(l1)
    doble = identidad.escalar(2)
    xs, config = SondaIndices.cadena_composicion(identidad, identidad, doble, config_l1(2), base(2))
    assert xs == base(2) and config.constante == 2
    assert SondaIndices.np_miembro(identidad, config, xs)
    with pytest.raises(ErrorPrecondicion):
        SondaIndices.cadena_composicion(identidad, identidad, MatrizOperador.cero(l1, l1), config_l1(2), base(2))
    with pytest.raises(ErrorPrecondicion):
        SondaIndices.cadena_composicion(identidad, identidad, identidad, config_l1(2, constante=None), base(2))

    cercana = MatrizOperador.diagonal([Fraction(7, 8), 1], l1)
    assert SondaIndices.perturbacion_estable(identidad, cercana, config_l1(2), base(2))
    with pytest.raises(ErrorPrecondicion):
        SondaIndices.perturbacion_estable(identidad, MatrizOperador.diagonal([0, 1], l1), config_l1(2), base(2))


def test_suites_indices_reducidas():
    from src.application.VerificacionService import VerificacionService
    servicio = VerificacionService(semilla=5)
    aprobado, detalle = servicio.suite_indice_rango_finito(cantidad=8, max_dimension=3)
    assert aprobado, detalle
    aprobado, detalle = servicio.suite_estabilidad_perturbacion(cantidad=5)
    assert aprobado, detalle
    aprobado, detalle = servicio.suite_certificados_modelo_extendido(6, 4, 4)
    assert aprobado, detalle
    print(f"  - {detalle}")


if __name__ == '__main__':
    test_np_miembro()
    test_configuracion_sonda()
    test_sonda_rango_uno()
    test_sonda_cero_e_identidad()
    test_reserva_por_defecto()
    test_ss_miembro()
    test_ss_miembro_rotacion_euclidea()
    test_rotaciones_racionales_ss()
    test_wc_miembro()
    test_certificado_modelo_extendido()
    test_miembro_indexado_schreier()
    test_composicion_y_perturbacion()
    test_suites_indices_reducidas()
