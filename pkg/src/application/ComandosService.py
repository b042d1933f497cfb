"""
Servicio de aplicación: ComandosService

Interpreta la línea de comandos, despacha cada subcomando al servicio de
dominio correspondiente y devuelve un ResultadoComando.
"""

import argparse
import time
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from src.domain.Errores import ErrorDominio
from src.domain.entities.ConfiguracionSonda import ConfiguracionSonda
from src.domain.entities.DescriptorNorma import DescriptorNorma
from src.domain.entities.MatrizOperador import MatrizOperador
from src.domain.entities.ResultadoComando import ESTADO_ERROR, ESTADO_OK, ResultadoComando
from src.domain.services.AritmeticaOrdinal import AritmeticaOrdinal
from src.domain.services.CalculadorArboles import CalculadorArboles
from src.domain.services.CalculadorDominacion import CalculadorDominacion
from src.domain.services.CalculadorFamilias import CalculadorFamilias
from src.domain.services.CalculadorNormas import CalculadorNormas
from src.domain.services.CombinadorOperadores import CombinadorOperadores
from src.domain.services.ConfiguracionPresupuestos import ConfiguracionPresupuestos
from src.domain.services.SondaIndices import SondaIndices
from src.infrastructure.Registro import Registro
from src.infrastructure.export.ExcelExporter import ExcelExporter
from src.infrastructure.parsers.LectorArbolJSON import LectorArbolJSON
from src.infrastructure.parsers.ParserDescriptor import ParserDescriptor
from src.infrastructure.parsers.ParserFamilia import ParserFamilia
from src.infrastructure.parsers.ParserOrdinal import ParserOrdinal
from src.application.VerificacionService import VerificacionService


NO_CERTIFICADO = 'no certificado'


class ErrorUso(ErrorDominio):
    """Argumentos de línea de comandos inválidos."""
    codigo = "E_USO"


class ErrorVerificacion(ErrorDominio):
    """Alguna suite de verificación falló; lleva la tabla de resultados."""
    codigo = "E_VERIFICACION"

    def __init__(self, mensaje: str, carga: Dict[str, Any]):
        super().__init__(mensaje)
        self.carga = carga


class AnalizadorArgumentos(argparse.ArgumentParser):
    """ArgumentParser que reporta los errores como ErrorUso en vez de salir."""

    def error(self, message):
        raise ErrorUso(message)


def _racional_o_none(texto: str) -> Optional[Fraction]:
    if texto.strip().lower() in ('none', 'sup'):
        return None
    return ParserDescriptor.parsear_racional(texto)


def _nodo_texto(nodo) -> str:
    return "(" + ", ".join(str(e) for e in nodo) + ")"


def _decision(valor: Optional[bool]):
    """true, false o 'no certificado' cuando las cotas no alcanzan."""
    return NO_CERTIFICADO if valor is None else valor


class ComandosService:
    """
    Front-end por lotes de la línea de comandos.

    Códigos de salida: 0 (ok), 1 (error de dominio), 2 (error de uso).
    """

    CODIGOS_USO = ('E_USO', 'E_SINTAXIS')

    # Bandera -> clave de ConfiguracionPresupuestos
    BANDERAS_PRESUPUESTO = {
        'n_max': 'n_max_restriccion',
        'max_members': 'max_miembros',
        'max_vertices': 'max_vertices',
        'starts': 'arranques_ascenso',
        'seed': 'semilla',
        'width': 'ancho_intervalo',
        'xxi2_window': 'ventana_xxi2',
        'z_nodes': 'nodos_exhaustivo_z',
        'max_nodes': 'max_nodos_busqueda',
        'max_w_dim': 'dimension_max_w',
        'max_functionals': 'max_funcionales',
        'probe_depth': 'profundidad_maxima_sonda',
    }

    def __init__(self):
        self.analizador = self._construir_analizador()

    # Analizador

    def _construir_analizador(self) -> AnalizadorArgumentos:
        analizador = AnalizadorArgumentos(
            prog='main.py',
            description='Índices ordinales de operadores: ordinales, árboles, familias, normas e índices.'
        )
        analizador.add_argument('--json', action='store_true', help='Salida como un único objeto JSON')
        analizador.add_argument('--config', default=None, help='Archivo JSON de presupuestos')
        for bandera in self.BANDERAS_PRESUPUESTO:
            analizador.add_argument('--' + bandera.replace('_', '-'), dest=bandera, default=None,
                                    help=f'Presupuesto {self.BANDERAS_PRESUPUESTO[bandera]}')

        comandos = analizador.add_subparsers(dest='comando', required=True)

        ordinal = comandos.add_parser('ord', help='Aritmética de ordinales')
        ordinal.add_argument('tokens', nargs='+')
        ordinal.set_defaults(manejador=self._ord)

        self._construir_arbol(comandos)
        self._construir_familia(comandos)

        norma = comandos.add_parser('norm', help='Norma de un vector')
        norma.add_argument('descriptor')
        norma.add_argument('vector')
        norma.set_defaults(manejador=self._norm)

        dominar = comandos.add_parser('dominate', help='Constante de dominación')
        dominar.add_argument('argumentos', nargs='+')
        dominar.add_argument('--kbasic', default=None, help='Decide si la sucesión es K-básica')
        dominar.set_defaults(manejador=self._dominate)

        self._construir_indice(comandos)

        verificar = comandos.add_parser('verify', help='Suites de aceptación')
        verificar.add_argument('suite', nargs='?', default='all')
        verificar.add_argument('--excel', default=None, help='Exporta la tabla a un archivo Excel')
        verificar.set_defaults(manejador=self._verify)
        return analizador

    def _construir_arbol(self, comandos) -> None:
        arbol = comandos.add_parser('tree', help='Árboles y rangos')
        acciones = arbol.add_subparsers(dest='accion', required=True)

        rango = acciones.add_parser('rank')
        rango.add_argument('archivo')
        rango.set_defaults(manejador=self._tree_rank)

        miembro = acciones.add_parser('mt-member')
        miembro.add_argument('xi')
        miembro.add_argument('sucesion')
        miembro.set_defaults(manejador=self._tree_mt_member)

        inmersion = acciones.add_parser('embed')
        inmersion.add_argument('xi')
        inmersion.add_argument('archivo')
        inmersion.set_defaults(manejador=self._tree_embed)

        simbolico = acciones.add_parser('symbolic-rank')
        simbolico.add_argument('xi')
        simbolico.add_argument('--truncate', type=int, default=None, help='Trunca T_ξ a etiquetas ≤ N')
        simbolico.set_defaults(manejador=self._tree_symbolic_rank)

        operador = acciones.add_parser('operator')
        operador.add_argument('nodos', help='Nodos del árbol, p. ej. [[1],[1,1],[2]]')
        operador.add_argument('seleccion', help='Subárbol cerrado hacia abajo')
        operador.set_defaults(manejador=self._tree_operator)

    def _construir_familia(self, comandos) -> None:
        familia = comandos.add_parser('family', help='Familias de Schreier y compuestas')
        acciones = familia.add_subparsers(dest='accion', required=True)

        miembro = acciones.add_parser('member')
        miembro.add_argument('expresion')
        miembro.add_argument('conjunto')
        miembro.set_defaults(manejador=self._family_member)

        rango = acciones.add_parser('rank')
        rango.add_argument('expresion')
        rango.add_argument('n', type=int)
        rango.set_defaults(manejador=self._family_rank)

        gasparis = acciones.add_parser('gasparis')
        gasparis.add_argument('f')
        gasparis.add_argument('g')
        gasparis.add_argument('--depth', type=int, required=True)
        gasparis.add_argument('--cap', type=int, required=True)
        gasparis.add_argument('--within', default=None, help='Conjunto N, p. ej. {2,4,6,8}')
        gasparis.set_defaults(manejador=self._family_gasparis)

        extension = acciones.add_parser('spreading')
        extension.add_argument('expresion')
        extension.add_argument('n', type=int)
        extension.set_defaults(manejador=self._family_spreading)

        restriccion = acciones.add_parser('restrict')
        restriccion.add_argument('expresion')
        restriccion.add_argument('n', type=int)
        restriccion.set_defaults(manejador=self._family_restrict)

    def _construir_indice(self, comandos) -> None:
        indice = comandos.add_parser('index', help='Árboles de índices de operadores')
        acciones = indice.add_subparsers(dest='accion', required=True)

        def operador(sub, con_vectores: bool = True, vectores_opcionales: bool = False):
            sub.add_argument('matriz', help='Filas de la matriz, p. ej. [[1,0],[0,1]]')
            sub.add_argument('dominio')
            sub.add_argument('codominio')
            if con_vectores:
                sub.add_argument('vectores', nargs='?' if vectores_opcionales else None)
            sub.add_argument('--K', dest='constante', default='1')

        np_miembro = acciones.add_parser('np-member')
        operador(np_miembro)
        np_miembro.add_argument('--base-p', default='1')
        np_miembro.set_defaults(manejador=self._index_np_member)

        sonda = acciones.add_parser('np-probe')
        operador(sonda, con_vectores=False)
        sonda.add_argument('--base-p', default='1')
        sonda.add_argument('--max-depth', type=int, default=None)
        sonda.add_argument('--closure', action='store_true', help='Agrega bloques p-absolutamente convexos')
        sonda.set_defaults(manejador=self._index_np_sonda)

        ss = acciones.add_parser('ss-member')
        operador(ss)
        ss.set_defaults(manejador=self._index_ss_member)

        wc = acciones.add_parser('wc-member')
        operador(wc, vectores_opcionales=True)
        wc.set_defaults(manejador=self._index_wc_member)

        certificado = acciones.add_parser('sm-cert')
        certificado.add_argument('espacio')
        certificado.add_argument('vectores')
        certificado.add_argument('--p', default='1')
        certificado.add_argument('--xi', default='1')
        certificado.add_argument('--a', default='1')
        certificado.add_argument('--b', default='1')
        certificado.set_defaults(manejador=self._index_sm_cert)

        schreier = acciones.add_parser('schreier-member')
        operador(schreier)
        schreier.add_argument('--base-p', default='1')
        schreier.add_argument('--xi', default='1')
        schreier.set_defaults(manejador=self._index_schreier_member)

        convexificado = acciones.add_parser('conv-op')
        operador(convexificado, con_vectores=False)
        convexificado.add_argument('--t', required=True)
        convexificado.set_defaults(manejador=self._index_conv_op)

        norma = acciones.add_parser('op-norm')
        operador(norma, con_vectores=False)
        norma.set_defaults(manejador=self._index_op_norm)

        bloque = acciones.add_parser('block')
        bloque.add_argument('vectores')
        bloque.add_argument('--p', default='1')
        bloque.add_argument('--block', dest='bloques', nargs=3, action='append', required=True,
                            metavar=('INICIO', 'FIN', 'COEFICIENTES'))
        bloque.set_defaults(manejador=self._index_block)

        for nombre, manejador in (('w-space', self._index_w_space), ('v-space', self._index_v_space),
                                  ('a-xi', self._index_a_xi)):
            espacio = acciones.add_parser(nombre)
            espacio.add_argument('xi')
            espacio.add_argument('sumandos', type=int)
            espacio.set_defaults(manejador=manejador)

    # Ejecución

    def run(self, argv: Sequence[str]) -> ResultadoComando:
        """
        Ejecuta una invocación completa.

        Returns:
            ResultadoComando con la carga de la operación o el error
        """
        argv = list(argv)
        salida_json = '--json' in argv
        silencio_anterior = Registro.silencioso
        Registro.silencioso = silencio_anterior or salida_json
        inicio = time.perf_counter()
        try:
            args = self.analizador.parse_args(argv)
            args.presupuestos = self._leer_presupuestos(args)
            carga = args.manejador(args)
            return ResultadoComando(ESTADO_OK, carga, self._milisegundos(inicio), salida_json=salida_json)
        except ErrorVerificacion as e:
            return ResultadoComando(ESTADO_ERROR, e.carga, self._milisegundos(inicio),
                                    e.codigo, e.mensaje, salida_json=salida_json)
        except ErrorDominio as e:
            Registro.error(e.mensaje)
            return ResultadoComando(ESTADO_ERROR, {}, self._milisegundos(inicio),
                                    e.codigo, e.mensaje, salida_json=salida_json)
        except FileNotFoundError as e:
            Registro.error(str(e))
            return ResultadoComando(ESTADO_ERROR, {}, self._milisegundos(inicio),
                                    'E_ARCHIVO', str(e), salida_json=salida_json)
        finally:
            Registro.silencioso = silencio_anterior

    @classmethod
    def codigo_salida(cls, resultado: ResultadoComando) -> int:
        if resultado.es_ok:
            return 0
        return 2 if resultado.codigo in cls.CODIGOS_USO else 1

    @staticmethod
    def _milisegundos(inicio: float) -> float:
        return (time.perf_counter() - inicio) * 1000

    def _leer_presupuestos(self, args) -> ConfiguracionPresupuestos:
        valores = {}
        for bandera, clave in self.BANDERAS_PRESUPUESTO.items():
            valor = getattr(args, bandera)
            if valor is None:
                continue
            try:
                valores[clave] = ConfiguracionPresupuestos.CLAVES[clave](valor)
            except (ValueError, ZeroDivisionError):
                raise ErrorUso(f"Valor inválido para --{bandera.replace('_', '-')}: '{valor}'")
        return ConfiguracionPresupuestos(valores, ruta_archivo=args.config)

    @staticmethod
    def _aridad(tokens: List[str], cantidad: int, uso: str) -> None:
        if len(tokens) != cantidad:
            raise ErrorUso(f"Uso: {uso}")

    @staticmethod
    def _natural(texto: str) -> int:
        if not texto.isdigit():
            raise ErrorUso(f"Se esperaba un natural: '{texto}'")
        return int(texto)

    # Ordinales

    def _ord(self, args) -> Dict[str, Any]:
        tokens = args.tokens
        cabeza = tokens[0]
        if cabeza == 'fund':
            self._aridad(tokens, 3, "ord fund <expr> <n>")
            a = ParserOrdinal.parsear(tokens[1])
            return {'resultado': str(AritmeticaOrdinal.sucesion_fundamental(a, self._natural(tokens[2])))}
        if cabeza == 'clase':
            self._aridad(tokens, 2, "ord clase <expr>")
            return {'resultado': str(AritmeticaOrdinal.clasificar(ParserOrdinal.parsear(tokens[1])))}
        if cabeza == 'indesc':
            self._aridad(tokens, 2, "ord indesc <expr>")
            a = ParserOrdinal.parsear(tokens[1])
            return {'resultado': AritmeticaOrdinal.es_multiplicativamente_indescomponible(a)}
        if len(tokens) == 3 and tokens[1] in ('+', '*'):
            a, b = ParserOrdinal.parsear(tokens[0]), ParserOrdinal.parsear(tokens[2])
            operacion = AritmeticaOrdinal.sumar if tokens[1] == '+' else AritmeticaOrdinal.multiplicar
            return {'resultado': str(operacion(a, b))}
        return {'resultado': str(ParserOrdinal.parsear(" ".join(tokens)))}

    # Árboles

    def _tree_rank(self, args) -> Dict[str, Any]:
        arbol = LectorArbolJSON(args.archivo).leer()
        return {'resultado': str(CalculadorArboles.rango(arbol))}

    def _tree_mt_member(self, args) -> Dict[str, Any]:
        xi = ParserOrdinal.parsear(args.xi)
        sucesion = ParserDescriptor.parsear_sucesion(args.sucesion)
        return {'resultado': CalculadorArboles.miembro_arbol_minimo(xi, sucesion)}

    def _tree_embed(self, args) -> Dict[str, Any]:
        xi = ParserOrdinal.parsear(args.xi)
        arbol = LectorArbolJSON(args.archivo).leer()
        testigo = CalculadorArboles.busqueda_inmersion_monotona(xi, arbol, presupuestos=args.presupuestos)
        if testigo is None:
            return {'encontrado': False, 'testigo': None}
        return {
            'encontrado': True,
            'testigo': {_nodo_texto(u): str(etiqueta) for u, etiqueta in testigo.items()},
            'validado': CalculadorArboles.validar_inmersion(xi, arbol, testigo, args.presupuestos),
        }

    def _tree_symbolic_rank(self, args) -> Dict[str, Any]:
        xi = ParserOrdinal.parsear(args.xi)
        if args.truncate is None:
            perezoso = CalculadorArboles.arbol_minimo(xi)
        else:
            perezoso = CalculadorArboles.truncamiento(xi, args.truncate)
        return {'resultado': str(CalculadorArboles.rango_simbolico(perezoso, args.presupuestos))}

    def _tree_operator(self, args) -> Dict[str, Any]:
        operador = CombinadorOperadores.operador_arbol(
            ParserDescriptor.parsear_nodos(args.nodos), ParserDescriptor.parsear_nodos(args.seleccion)
        )
        carga = operador.to_dict()
        carga['norma'] = CalculadorDominacion.norma_operador(operador, args.presupuestos).to_dict()
        return carga

    # Familias

    def _family_member(self, args) -> Dict[str, Any]:
        familia = ParserFamilia.parsear(args.expresion)
        conjunto = ParserFamilia.parsear_conjunto(args.conjunto)
        return {'resultado': CalculadorFamilias.miembro(familia, conjunto)}

    def _family_rank(self, args) -> Dict[str, Any]:
        familia = ParserFamilia.parsear(args.expresion)
        restringida = CalculadorFamilias.restringir(familia, args.n, args.presupuestos)
        try:
            iota = str(CalculadorFamilias.iota_simbolico(familia))
        except ArithmeticError:
            iota = 'w1'
        return {
            'familia': str(familia),
            'n': args.n,
            'indice_cb': CalculadorFamilias.indice_cb_restringido(restringida),
            'iota': iota,
            'miembros': len(restringida.miembros),
        }

    def _family_restrict(self, args) -> Dict[str, Any]:
        familia = ParserFamilia.parsear(args.expresion)
        return CalculadorFamilias.restringir(familia, args.n, args.presupuestos).to_dict()

    def _family_gasparis(self, args) -> Dict[str, Any]:
        f = ParserFamilia.parsear(args.f)
        g = ParserFamilia.parsear(args.g)
        dentro_de = ParserFamilia.parsear_conjunto(args.within) if args.within else None
        prefijo = CalculadorFamilias.busqueda_prefijo_gasparis(f, g, args.depth, args.cap, dentro_de,
                                                               presupuestos=args.presupuestos)
        if prefijo is None:
            return {'encontrado': False, 'prefijo': None, 'profundidad': args.depth, 'cota': args.cap}
        return {
            'encontrado': True,
            'prefijo': list(prefijo),
            'revalidado': CalculadorFamilias.validar_prefijo_gasparis(f, g, prefijo, args.presupuestos),
        }

    def _family_spreading(self, args) -> Dict[str, Any]:
        familia = ParserFamilia.parsear(args.expresion)
        restringida = CalculadorFamilias.restringir(familia, args.n, args.presupuestos)
        hereditaria, fallo_h = CalculadorFamilias.es_hereditaria(restringida)
        extendible, fallo_e = CalculadorFamilias.es_extendible(restringida)
        return {
            'hereditaria': hereditaria,
            'contraejemplo_hereditaria': [list(c) for c in fallo_h] if fallo_h else None,
            'extendible': extendible,
            'contraejemplo_extension': [list(c) for c in fallo_e] if fallo_e else None,
        }

    # Normas y dominación

    def _norm(self, args) -> Dict[str, Any]:
        descriptor = ParserDescriptor.parsear(args.descriptor)
        vector = ParserDescriptor.parsear_vector(args.vector)
        return {'resultado': str(CalculadorNormas.norma(descriptor, vector, presupuestos=args.presupuestos))}

    def _dominate(self, args) -> Dict[str, Any]:
        argumentos = args.argumentos
        if args.kbasic is not None:
            self._aridad(argumentos, 2, "dominate --kbasic K <espacio> <vectores>")
            espacio = ParserDescriptor.parsear(argumentos[0])
            xs = ParserDescriptor.parsear_vectores(argumentos[1])
            cota = ParserDescriptor.parsear_racional(args.kbasic)
            basica, fallo = CalculadorDominacion.es_k_basica(xs, cota, espacio, args.presupuestos)
            carga = {'k_basica': _decision(basica), 'constante': str(cota)}
            if fallo:
                carga.update({
                    'm': fallo['m'],
                    'n': fallo['n'],
                    'testigo': [str(a) for a in fallo['testigo']],
                })
            return carga
        self._aridad(argumentos, 4, "dominate <espacio> <vectores> <espacio> <vectores>")
        reporte = CalculadorDominacion.constante_dominacion(
            ParserDescriptor.parsear_vectores(argumentos[1]), ParserDescriptor.parsear(argumentos[0]),
            ParserDescriptor.parsear_vectores(argumentos[3]), ParserDescriptor.parsear(argumentos[2]),
            args.presupuestos,
        )
        return reporte.to_dict()

    # Índices

    @staticmethod
    def _operador(args) -> MatrizOperador:
        dominio = ParserDescriptor.parsear(args.dominio)
        codominio = ParserDescriptor.parsear(args.codominio)
        filas = ParserDescriptor.parsear_vectores(args.matriz)
        return MatrizOperador(tuple(tuple(f) for f in filas), dominio, codominio)

    @staticmethod
    def _configuracion(args, operador: MatrizOperador) -> ConfiguracionSonda:
        presupuestos = args.presupuestos
        profundidad = getattr(args, 'max_depth', None) or presupuestos.profundidad_maxima_sonda
        return ConfiguracionSonda(
            base=DescriptorNorma.lp(args.base_p, operador.dominio.dimension),
            constante=_racional_o_none(args.constante),
            profundidad_maxima=profundidad,
            presupuesto=presupuestos.max_nodos_busqueda,
            cierre_bloques=getattr(args, 'closure', False),
        )

    def _index_np_member(self, args) -> Dict[str, Any]:
        operador = self._operador(args)
        xs = ParserDescriptor.parsear_vectores(args.vectores)
        miembro = SondaIndices.np_miembro(operador, self._configuracion(args, operador), xs, args.presupuestos)
        return {'resultado': _decision(miembro)}

    def _index_np_sonda(self, args) -> Dict[str, Any]:
        operador = self._operador(args)
        config = self._configuracion(args, operador)
        reporte = SondaIndices.sonda_profundidad_np(operador, config, args.presupuestos)
        carga = reporte.to_dict()
        carga['validado'] = SondaIndices.validar_reporte(operador, config, reporte, args.presupuestos)
        return carga

    def _cota(self, args) -> Fraction:
        cota = _racional_o_none(args.constante)
        if cota is None:
            raise ErrorUso("Esta operación requiere una constante --K finita")
        return cota

    def _index_ss_member(self, args) -> Dict[str, Any]:
        operador = self._operador(args)
        xs = ParserDescriptor.parsear_vectores(args.vectores)
        return {'resultado': _decision(SondaIndices.ss_miembro(operador, self._cota(args), xs, args.presupuestos))}

    def _index_wc_member(self, args) -> Dict[str, Any]:
        operador = self._operador(args)
        if args.vectores:
            xs = ParserDescriptor.parsear_vectores(args.vectores)
        else:
            xs = SondaIndices.cadena_sumante(operador.dominio.dimension)
        return {'resultado': _decision(SondaIndices.wc_miembro(operador, self._cota(args), xs, args.presupuestos))}

    def _index_sm_cert(self, args) -> Dict[str, Any]:
        espacio = ParserDescriptor.parsear(args.espacio)
        xs = ParserDescriptor.parsear_vectores(args.vectores)
        valido, fallo = SondaIndices.certificado_modelo_extendido(
            xs, espacio, args.p, ParserOrdinal.parsear(args.xi),
            ParserDescriptor.parsear_racional(args.a), ParserDescriptor.parsear_racional(args.b),
            args.presupuestos,
        )
        if valido is True:
            return {'certificado': True, 'conjunto': None, 'testigo': None}
        conjunto, testigo = fallo
        return {'certificado': _decision(valido), 'conjunto': list(conjunto), 'testigo': [str(a) for a in testigo]}

    def _index_schreier_member(self, args) -> Dict[str, Any]:
        operador = self._operador(args)
        xs = ParserDescriptor.parsear_vectores(args.vectores)
        return {'resultado': _decision(SondaIndices.miembro_indexado_schreier(
            operador, self._configuracion(args, operador), ParserOrdinal.parsear(args.xi), xs, args.presupuestos
        ))}

    def _index_conv_op(self, args) -> Dict[str, Any]:
        operador = self._operador(args)
        t = ParserDescriptor.parsear_racional(args.t)
        convexificado = CombinadorOperadores.operador_convexificado(operador, t, args.presupuestos)
        return {
            'exacto': convexificado.exacto,
            'inferior': convexificado.inferior.to_dict(),
            'superior': convexificado.superior.to_dict(),
        }

    def _index_op_norm(self, args) -> Dict[str, Any]:
        return CalculadorDominacion.norma_operador(self._operador(args), args.presupuestos).to_dict()

    def _index_block(self, args) -> Dict[str, Any]:
        xs = ParserDescriptor.parsear_vectores(args.vectores)
        try:
            bloques = [(int(inicio), int(fin), ParserDescriptor.parsear_vector(coeficientes))
                       for inicio, fin, coeficientes in args.bloques]
        except ValueError:
            raise ErrorUso("Uso: --block <inicio> <fin> <coeficientes>")
        resultado = CalculadorDominacion.bloque_p_absolutamente_convexo(xs, args.p, bloques, args.presupuestos)
        return {'resultado': [[str(a) for a in u] for u in resultado]}

    def _espacio_w(self, args, constructor) -> Any:
        if args.sumandos < 1:
            raise ErrorUso("Se requiere al menos un sumando")
        return constructor(ParserOrdinal.parsear(args.xi), args.sumandos, args.presupuestos)

    def _index_w_space(self, args) -> Dict[str, Any]:
        espacio = self._espacio_w(args, CombinadorOperadores.aproximacion_espacio_w)
        return {'resultado': str(espacio), 'dimension': espacio.dimension, 'nota': espacio.metadatos}

    def _index_v_space(self, args) -> Dict[str, Any]:
        espacio = self._espacio_w(args, CombinadorOperadores.espacio_v)
        return {'resultado': str(espacio), 'dimension': espacio.dimension, 'nota': espacio.metadatos}

    def _index_a_xi(self, args) -> Dict[str, Any]:
        operador = self._espacio_w(args, CombinadorOperadores.operador_a_xi)
        return {
            'dominio': str(operador.dominio),
            'codominio': str(operador.codominio),
            'dimension': operador.columnas,
            'rango': operador.rango,
        }

    # Verificación

    def _verify(self, args) -> Dict[str, Any]:
        resultados = VerificacionService(presupuestos=args.presupuestos).ejecutar(args.suite)
        filas = [r.to_fila() for r in resultados]
        if args.excel:
            ExcelExporter(args.excel).exportar(filas, "Verificación")
            Registro.info(f"Tabla exportada a {args.excel}")
        carga = {'tabla': filas}
        fallidas = [r.numero for r in resultados if not r.aprobado]
        if fallidas:
            raise ErrorVerificacion(f"Suites fallidas: {fallidas}", carga)
        return carga
