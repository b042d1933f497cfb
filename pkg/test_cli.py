"""Test de la línea de comandos: salida de texto, JSON y códigos de salida."""

import json

from main import main
from src.application.ComandosService import NO_CERTIFICADO, ComandosService, _decision
from src.domain.services import ConfiguracionPresupuestos as modulo_presupuestos


def ejecutar(*argv):
    return ComandosService().run(list(argv))


def test_salida_texto(capsys):
    print("=== Test salida de texto ===")
    capsys.readouterr()
    assert main(['ord', 'w*2+3', '+', 'w']) == 0
    assert capsys.readouterr().out.strip() == "w*3"
    assert main(['family', 'member', 'S(1)', '{2,3}']) == 0
    assert capsys.readouterr().out.strip() == "true"
    assert main(['norm', 'summing(3)', '[1,-1,1]']) == 0
    assert capsys.readouterr().out.strip() == "1"


def test_salida_json(capsys):
    print("\n=== Test salida JSON ===")
    capsys.readouterr()
    assert main(['--json', 'norm', 'lp(2,2)', '[3,4]']) == 0
    datos = json.loads(capsys.readouterr().out)
    assert datos['estado'] == 'ok' and datos['carga'] == {'resultado': '5'}
    assert main(['--json', 'ord', 'w+']) == 2
    datos = json.loads(capsys.readouterr().out)
    assert datos['estado'] == 'error' and datos['codigo'] == 'E_SINTAXIS'


def test_codigos_salida(tmp_path):
    print("\n=== Test códigos de salida ===")
    codigo = ComandosService.codigo_salida
    assert codigo(ejecutar('ord', 'fund', 'w^2', '2')) == 0
    assert codigo(ejecutar('inexistente')) == 2
    assert codigo(ejecutar('family', 'rank', 'S(1)')) == 2
    assert codigo(ejecutar('--seed', 'abc', 'ord', 'w')) == 2
    resultado = ejecutar('family', 'rank', 'S(1)', '30')
    assert resultado.codigo == 'E_PRESUPUESTO' and codigo(resultado) == 1
    resultado = ejecutar('tree', 'rank', str(tmp_path / 'no_existe.json'))
    assert resultado.codigo == 'E_ARCHIVO' and codigo(resultado) == 1
    assert ejecutar('ord', 'fund', 'w+1', '2').codigo == 'E_ORDINAL'


def test_presupuestos_por_invocacion():
    print("\n=== Test presupuestos por invocación ===")
    resultado = ejecutar('--n-max', '8', 'family', 'rank', 'S(1)', '9')
    assert resultado.codigo == 'E_PRESUPUESTO'
    # la configuración vive en la invocación: nada queda instalado para la siguiente
    assert ejecutar('family', 'rank', 'S(1)', '9').es_ok
    clase = modulo_presupuestos.ConfiguracionPresupuestos
    assert not hasattr(clase, 'instalar') and not hasattr(clase, 'actual')
    assert not hasattr(modulo_presupuestos, '_actual')
    servicio = ComandosService()
    assert servicio.run(['--n-max', '8', 'family', 'rank', 'S(1)', '9']).codigo == 'E_PRESUPUESTO'
    assert servicio.run(['family', 'rank', 'S(1)', '9']).es_ok


def test_ordinales_y_arboles(tmp_path):
    print("\n=== Test comandos ord y tree ===")
    assert ejecutar('ord', 'fund', 'w^2', '2').carga['resultado'] == "w*2 + 1"
    assert ejecutar('ord', 'indesc', 'w^w').carga['resultado'] is True
    ruta = tmp_path / 'arbol.json'
    ruta.write_text(json.dumps([[], [1], [1, 1], [2]]), encoding='utf-8')
    assert ejecutar('tree', 'rank', str(ruta)).carga['resultado'] == "3"
    assert ejecutar('tree', 'mt-member', '3', '[3,2]').carga['resultado'] is True
    cadena = tmp_path / 'cadena.json'
    cadena.write_text(json.dumps([[1], [1, 1], [1, 1, 1]]), encoding='utf-8')
    carga = ejecutar('tree', 'embed', '2', str(cadena)).carga
    assert carga['encontrado'] and carga['validado']
    assert ejecutar('tree', 'embed', '4', str(cadena)).carga == {'encontrado': False, 'testigo': None}


def test_familias():
    print("\n=== Test comando family ===")
    carga = ejecutar('family', 'rank', 'A(2)', '5').carga
    assert carga['indice_cb'] == 2 and carga['iota'] == '2'
    assert ejecutar('family', 'rank', 'S(w1)', '3').carga['iota'] == 'w1'
    carga = ejecutar('family', 'gasparis', 'A(3)', 'S(1)', '--depth', '5', '--cap', '20').carga
    assert carga['prefijo'] == [3, 4, 5, 6, 7] and carga['revalidado']
    carga = ejecutar('family', 'gasparis', 'S(1)', 'A(2)', '--depth', '5', '--cap', '30').carga
    assert carga['encontrado'] is False
    carga = ejecutar('family', 'spreading', 'S(2)', '8').carga
    assert carga['hereditaria'] and carga['extendible']


def test_dominacion_e_indices():
    print("\n=== Test comandos dominate e index ===")
    carga = ejecutar('dominate', 'lp(2,2)', '[[1,0],[0,1]]', 'lp(1,2)', '[[1,0],[0,1]]').carga
    assert carga['superior'] == '1' and carga['exacto']
    carga = ejecutar('dominate', '--kbasic', '1', 'lp(inf,2)', '[[1,0],[1,1]]').carga
    assert carga['k_basica'] is False and (carga['m'], carga['n']) == (1, 2)
    carga = ejecutar('index', 'np-probe', '[[1,1,1],[0,0,0],[0,0,0]]', 'lp(1,3)', 'lp(1,3)').carga
    assert carga['indice_finito'] == 2 and carga['validado']
    identidad_8 = json.dumps([[int(i == j) for j in range(8)] for i in range(8)])
    carga = ejecutar('index', 'sm-cert', 'lp(inf,8)', identidad_8).carga
    assert carga['certificado'] is False and carga['conjunto'] == [2, 3]
    # sin vectores se usa la cadena sumante
    carga = ejecutar('index', 'wc-member', '[[1,0,0],[0,1,0],[0,0,1]]', 'lp(inf,3)', 'lp(inf,3)').carga
    assert carga['resultado'] is True
    resultado = ejecutar('index', 'ss-member', '[[1,0],[0,1]]', 'lp(2,2)', 'lp(2,2)', '[[1,0],[0,1]]', '--K', 'none')
    assert resultado.codigo == 'E_USO'


def test_decision_no_certificada():
    print("\n=== Test decisiones no certificadas ===")
    assert _decision(None) == NO_CERTIFICADO == 'no certificado'
    assert _decision(True) is True and _decision(False) is False
    # rotación racional de ℓ₂: antes se reportaba como no miembro
    carga = ejecutar('index', 'ss-member', '[[1,0],[0,1]]', 'lp(2,2)', 'lp(2,2)', '[[3/5,4/5],[-4/5,3/5]]').carga
    assert carga['resultado'] is True
    carga = ejecutar('dominate', '--kbasic', '1', 'lp(2,3)', '[[3/5,4/5,0],[-4/5,3/5,0]]').carga
    assert carga['k_basica'] is True


def test_arboles_y_familias_extra():
    print("\n=== Test tree symbolic-rank, tree operator y family restrict ===")
    assert ejecutar('tree', 'symbolic-rank', 'w').carga['resultado'] == 'w'
    assert ejecutar('tree', 'symbolic-rank', 'w', '--truncate', '4').carga['resultado'] == '4'
    carga = ejecutar('tree', 'operator', '[[1],[1,1],[2]]', '[[1],[1,1]]').carga
    assert carga['dominio'] == 'lp(1,3)' and carga['codominio'].startswith('z(1,2,')
    assert sorted(carga['entradas']) == [['0', '0', '0'], ['0', '1', '0'], ['1', '0', '0']]
    assert 'superior' in carga['norma']
    assert ejecutar('tree', 'operator', '[[1],[2]]', '[[1,1]]').codigo == 'E_ESTRUCTURA'
    carga = ejecutar('family', 'restrict', 'S(1)', '3').carga
    assert carga['n'] == 3 and [2, 3] in carga['miembros'] and [1, 2] not in carga['miembros']
    assert ejecutar('family', 'restrict', 'S(1)', '30').codigo == 'E_PRESUPUESTO'


def test_operadores_extra():
    print("\n=== Test conv-op, op-norm, block y espacios W ===")
    carga = ejecutar('index', 'conv-op', '[[4,0],[0,9]]', 'lp(1,2)', 'lp(1,2)', '--t', '2').carga
    assert carga['exacto'] and carga['inferior']['entradas'] == [['2', '0'], ['0', '3']]
    assert carga['inferior']['dominio'] == 'conv(lp(1,2),2)'
    carga = ejecutar('index', 'op-norm', '[[1,2],[3,4]]', 'lp(1,2)', 'lp(1,2)').carga
    assert carga['superior'] == '6' and carga['exacto']
    carga = ejecutar('index', 'block', '[[1,0],[0,1],[1,1]]', '--block', '1', '2', '[1/2,1/2]').carga
    assert carga['resultado'] == [['1/2', '1/2']]
    resultado = ejecutar('index', 'block', '[[1,0],[0,1]]', '--block', '1', '2', '[1,1]')
    assert resultado.codigo == 'E_PRECONDICION'
    assert ejecutar('index', 'block', '[[1,0]]', '--block', 'a', '1', '[1]').codigo == 'E_USO'
    carga = ejecutar('index', 'w-space', '1', '2').carga
    assert carga['dimension'] == 3 and carga['resultado'].startswith('dsum(lp(2,2);')
    assert ejecutar('index', 'v-space', '1', '2').carga['resultado'] == 'lp(1,3)'
    carga = ejecutar('index', 'a-xi', '1', '2').carga
    assert carga['dominio'] == 'lp(1,3)' and carga['rango'] == 3
    assert ejecutar('index', 'w-space', '1', '0').codigo == 'E_USO'
    assert ejecutar('--max-w-dim', '2', 'index', 'w-space', '1', '2').codigo == 'E_PRESUPUESTO'


def test_verificacion(tmp_path):
    print("\n=== Test comando verify ===")
    ruta = tmp_path / 'verificacion.xlsx'
    resultado = ejecutar('verify', '7', '--excel', str(ruta))
    assert resultado.es_ok, resultado.mensaje
    fila = resultado.carga['tabla'][0]
    assert fila['suite'] == 7 and fila['resultado'] == 'PASS'
    assert ruta.exists()
    assert ComandosService.codigo_salida(ejecutar('verify', '99')) == 1


if __name__ == '__main__':
    import tempfile
    from pathlib import Path

    with tempfile.TemporaryDirectory() as directorio:
        test_codigos_salida(Path(directorio))
        test_presupuestos_por_invocacion()
        test_ordinales_y_arboles(Path(directorio))
        test_familias()
        test_dominacion_e_indices()
        test_decision_no_certificada()
        test_arboles_y_familias_extra()
        test_operadores_extra()
        test_verificacion(Path(directorio))
