"""Test de derivadas, órdenes, árboles mínimos e inmersiones."""

import json

import pytest
from hypothesis import given, settings, strategies as st

from src.domain.Errores import ErrorEstructura, ErrorOrdinal
from src.domain.entities.Arbol import ArbolFinito
from src.domain.entities.Ordinal import Ordinal, OMEGA
from src.domain.services.CalculadorArboles import CalculadorArboles
from src.infrastructure.parsers.LectorArbolJSON import LectorArbolJSON
from src.infrastructure.parsers.ParserOrdinal import ParserOrdinal


def arbol_binario(profundidad: int, con_raiz: bool = True) -> ArbolFinito:
    nodos = [()]
    for _ in range(profundidad):
        nodos += [n + (b,) for n in nodos if len(n) == max(len(m) for m in nodos) for b in (1, 2)]
    if not con_raiz:
        nodos = [n for n in nodos if n]
    return ArbolFinito.desde_secuencias(nodos, con_raiz)


arboles = st.lists(st.lists(st.integers(min_value=1, max_value=3), max_size=5), max_size=25).map(
    lambda ramas: ArbolFinito.desde_secuencias(
        {tuple(r[:i]) for r in ramas for i in range(len(r) + 1)} | {()}
    )
)


def test_derivada():
    print("=== Test derivada ===")
    cadena = ArbolFinito.desde_secuencias([(), (1,), (1, 1), (1, 1, 1)])
    assert CalculadorArboles.derivada(cadena) == ArbolFinito.desde_secuencias([(), (1,), (1, 1)])
    assert CalculadorArboles.derivada(ArbolFinito.desde_secuencias([()])) == ArbolFinito.vacio()
    assert CalculadorArboles.derivada(arbol_binario(2)) == arbol_binario(1), \
        "La derivada del binario de profundidad 2 es el de profundidad 1"


def test_rango():
    print("\n=== Test rango ===")
    assert CalculadorArboles.rango(ArbolFinito.desde_secuencias([()])).valor == Ordinal.finito(1)
    t5 = CalculadorArboles.truncar(CalculadorArboles.arbol_minimo(5), 5)
    assert len(t5) == 5 and not t5.con_raiz, "T_5 es la cadena (5,4,3,2,1) sin raíz"
    assert max(t5.nodos, key=len) == tuple(Ordinal.finito(k) for k in (5, 4, 3, 2, 1))
    assert CalculadorArboles.rango(t5).valor == Ordinal.finito(5)
    for d in range(4):
        rango = CalculadorArboles.rango(arbol_binario(d))
        print(f"  - binario de profundidad {d}: rango {rango}")
        assert rango.valor == Ordinal.finito(d + 1)
    assert CalculadorArboles.rango(ArbolFinito.vacio()).valor == Ordinal()


def test_arbol_minimo():
    print("\n=== Test árbol mínimo ===")
    assert CalculadorArboles.miembro_arbol_minimo(3, (3, 2))
    assert not CalculadorArboles.miembro_arbol_minimo(3, (2, 1))
    assert CalculadorArboles.miembro_arbol_minimo(OMEGA, (5, 4, 3, 2, 1))
    assert not CalculadorArboles.miembro_arbol_minimo(OMEGA, (OMEGA,))
    with pytest.raises(ErrorOrdinal):
        CalculadorArboles.miembro_arbol_minimo(0, (1,))
    with pytest.raises(ErrorEstructura):
        CalculadorArboles.miembro_arbol_minimo(3, ())

    w2 = ParserOrdinal.parsear("w^2")
    assert CalculadorArboles.rango_simbolico(CalculadorArboles.arbol_minimo(w2)).valor == w2
    assert CalculadorArboles.rango_simbolico(CalculadorArboles.arbol_minimo(7)).valor == Ordinal.finito(7)
    truncado = CalculadorArboles.truncar(CalculadorArboles.arbol_minimo(OMEGA), 4)
    assert CalculadorArboles.rango(truncado).valor == Ordinal.finito(4)
    assert CalculadorArboles.rango_simbolico(CalculadorArboles.truncamiento(OMEGA, 4)).valor == Ordinal.finito(4)


def test_inmersion_monotona():
    print("\n=== Test inmersión monótona ===")
    cadena = ArbolFinito.desde_secuencias([(1,), (1, 1), (1, 1, 1)])
    testigo = CalculadorArboles.busqueda_inmersion_monotona(2, cadena)
    assert testigo is not None
    assert CalculadorArboles.validar_inmersion(2, cadena, testigo)
    print(f"  - testigo ξ=2: {testigo}")
    # El destino cuenta con ∅ agregado: o(T ∪ {∅}) = 4
    assert CalculadorArboles.busqueda_inmersion_monotona(3, cadena) is not None
    assert CalculadorArboles.busqueda_inmersion_monotona(4, cadena) is None
    binario = arbol_binario(3, con_raiz=False)
    assert CalculadorArboles.busqueda_inmersion_monotona(2, binario) is not None
    assert CalculadorArboles.busqueda_inmersion_monotona(OMEGA, binario) is None


def test_subarbol_y_raiz():
    print("\n=== Test subárbol ===")
    arbol = ArbolFinito.desde_secuencias([(), (1,), (1, 2), (2,)])
    assert CalculadorArboles.subarbol(arbol, (1,)) == ArbolFinito.desde_secuencias([(), (2,)])
    assert CalculadorArboles.subarbol(arbol, (3,)).es_vacio
    b_arbol = ArbolFinito.desde_secuencias([(1,), (1, 2)])
    assert CalculadorArboles.con_raiz_agregada(b_arbol) == ArbolFinito.desde_secuencias([(), (1,), (1, 2)])
    with pytest.raises(ErrorEstructura):
        ArbolFinito.desde_secuencias([(), (1, 2)])


def test_lector_json(tmp_path):
    print("\n=== Test lector JSON ===")
    ruta = tmp_path / "arbol.json"
    ruta.write_text(json.dumps([[], [1], [1, 1], [2]]), encoding='utf-8')
    arbol = LectorArbolJSON(str(ruta)).leer()
    assert arbol.con_raiz and len(arbol) == 4
    assert CalculadorArboles.rango(arbol).valor == Ordinal.finito(3)

    mal = tmp_path / "mal.json"
    mal.write_text(json.dumps({"nodos": []}), encoding='utf-8')
    with pytest.raises(ErrorEstructura):
        LectorArbolJSON(str(mal)).leer()
    with pytest.raises(FileNotFoundError):
        LectorArbolJSON(str(tmp_path / "no_existe.json"))


@settings(max_examples=150, deadline=None)
@given(arboles)
def test_rango_por_derivadas_y_recursion(arbol):
    assert CalculadorArboles.rango(arbol) == CalculadorArboles.rango_recursivo(arbol)


@settings(max_examples=100, deadline=None)
@given(arboles, st.integers(min_value=0, max_value=6), st.integers(min_value=0, max_value=6))
def test_identidades_derivada(arbol, zeta, xi):
    """(T^ζ)^ξ = T^(ζ+ξ) y (T^ξ)(t) = (T(t))^ξ."""
    derivada = CalculadorArboles.derivada_iterada
    assert derivada(derivada(arbol, zeta), xi) == derivada(arbol, zeta + xi)
    for t in arbol.ordenados()[:5]:
        assert CalculadorArboles.subarbol(derivada(arbol, xi), t) == \
            derivada(CalculadorArboles.subarbol(arbol, t), xi)


def test_suites_arboles_reducidas():
    from src.application.VerificacionService import VerificacionService
    servicio = VerificacionService(semilla=3)
    aprobado, detalle = servicio.suite_rangos_arboles_minimos()
    assert aprobado, detalle
    aprobado, detalle = servicio.suite_identidades_derivada(cantidad=20, max_nodos=40)
    assert aprobado, detalle
    print(f"  - {detalle}")


if __name__ == '__main__':
    import tempfile
    from pathlib import Path
    test_derivada()
    test_rango()
    test_arbol_minimo()
    test_inmersion_monotona()
    test_subarbol_y_raiz()
    with tempfile.TemporaryDirectory() as directorio:
        test_lector_json(Path(directorio))
    test_rango_por_derivadas_y_recursion()
    test_identidades_derivada()
    test_suites_arboles_reducidas()
