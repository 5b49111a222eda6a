"""
Módulo de Verificación de Identidades
Registro de identidades con varios lados calculables de forma independiente
y verificador que los compara coeficiente a coeficiente
"""

import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from multiprocessing import Pool

from . import config
from . import enumerators
from . import series_catalog
from .bijections import obtener_mapa
from .logger import logger
from .oeis import leer_archivo_b


class IdentidadDesconocida(KeyError):
    def __init__(self, identidad, registradas):
        super().__init__(identidad)
        self.identidad = identidad
        self.registradas = registradas

    def __str__(self):
        return f"Identidad desconocida {self.identidad!r}. Registradas: {', '.join(self.registradas)}"


class ErrorCoeficientesNegativos(ArithmeticError):
    """Serie en modo Laurent con coeficientes de exponente negativo tras sumar"""


class ErrorValorNoEntero(ArithmeticError):
    """Un lado escalado produjo un valor no entero"""


class Expectativa(Enum):
    PROBADA = 'PROVEN'
    RECLAMO = 'PAPER_CLAIM'


class Estado(str, Enum):
    PASS = 'PASS'
    FAIL = 'FAIL'
    FLAGGED = 'FLAGGED'


# ========== LADOS ==========

@dataclass(frozen=True)
class Lado:
    """Un lado de una identidad: valores enteros para n = 0..N (o hasta su tope)"""
    etiqueta: str
    expectativa: Expectativa = field(default=Expectativa.PROBADA, kw_only=True)
    tope: int | None = field(default=None, kw_only=True)

    def n_efectivo(self, n_max):
        return n_max if self.tope is None else min(n_max, self.tope)

    def valores(self, n_max):
        raise NotImplementedError

    @property
    def enumerativo(self):
        return False


@dataclass(frozen=True)
class LadoConteo(Lado):
    """Conteo por enumeración de una clase registrada"""
    clase_id: str = ''

    def valores(self, n_max):
        return [
            enumerators.contar_por_id(n, self.clase_id)
            for n in range(self.n_efectivo(n_max) + 1)
        ]

    @property
    def enumerativo(self):
        return True


@dataclass(frozen=True)
class LadoCasiAutoconjugadas(Lado):
    """Casi autoconjugadas de n; en n = 0 cuenta la vacía (símbolo de diagonal 0)"""

    def valores(self, n_max):
        return [
            len(enumerators.casi_autoconjugadas(n)) if n else 1
            for n in range(self.n_efectivo(n_max) + 1)
        ]

    @property
    def enumerativo(self):
        return True


@dataclass(frozen=True)
class LadoSerie(Lado):
    """Coeficientes de una serie del catálogo (suma o producto)"""
    serie_id: str = ''

    def valores(self, n_max):
        n = self.n_efectivo(n_max)
        serie = series_catalog.calcular_serie(self.serie_id, n)
        negativos = serie.coeficientes_negativos()
        if negativos:
            raise ErrorCoeficientesNegativos(
                f"{self.serie_id}: coeficientes con exponente negativo {negativos[:3]}"
            )
        return serie.coeficientes(0, n)


@dataclass(frozen=True)
class LadoEscalado(Lado):
    """factor * lado + constante (la constante solo en n = 0)"""
    base: Lado = None
    factor: Fraction = Fraction(1)
    constante: Fraction = Fraction(0)

    def valores(self, n_max):
        resultado = []
        for n, v in enumerate(self.base.valores(self.n_efectivo(n_max))):
            escalado = Fraction(self.factor) * v + (Fraction(self.constante) if n == 0 else 0)
            if escalado.denominator != 1:
                raise ErrorValorNoEntero(f"{self.etiqueta}: valor {escalado} en n={n}")
            resultado.append(int(escalado))
        return resultado

    @property
    def enumerativo(self):
        return self.base.enumerativo


@dataclass(frozen=True)
class LadoDesplazado(Lado):
    """valores[n] = lado[n + desplazamiento]"""
    base: Lado = None
    desplazamiento: int = 0

    def valores(self, n_max):
        n = self.n_efectivo(n_max)
        return self.base.valores(n + self.desplazamiento)[self.desplazamiento:]

    @property
    def enumerativo(self):
        return self.base.enumerativo


@dataclass(frozen=True)
class LadoPares(Lado):
    """Pares de Stembridge de la variante"""
    variante: str = 'gg1'

    def valores(self, n_max):
        return [
            enumerators.contar_pares_stembridge(n, self.variante)
            for n in range(self.n_efectivo(n_max) + 1)
        ]

    @property
    def enumerativo(self):
        return True


@dataclass(frozen=True)
class LadoArchivoB(Lado):
    """Entradas de un archivo b: valores[n] = a(n + desplazamiento)"""
    archivo: str = ''
    desplazamiento: int = 0

    def valores(self, n_max):
        archivo_b = leer_archivo_b(config.DIR_OEIS / self.archivo)
        resultado = []
        for n in range(self.n_efectivo(n_max) + 1):
            if not archivo_b.contiene(n + self.desplazamiento):
                break
            resultado.append(archivo_b.valor(n + self.desplazamiento))
        return resultado


@dataclass(frozen=True)
class LadoTransporte(Lado):
    """Imágenes distintas del origen bajo un mapa que caen en la clase de destino"""
    mapa_id: str = ''
    origen: str = ''
    destino: str = ''

    def valores(self, n_max):
        mapa = obtener_mapa(self.mapa_id)
        origen = enumerators.obtener_clase(self.origen)
        destino = enumerators.obtener_clase(self.destino)
        resultado = []
        for n in range(self.n_efectivo(n_max) + 1):
            imagenes = {mapa.directa(p) for p in enumerators.generar_particiones(n, origen)}
            resultado.append(sum(
                1 for imagen in imagenes if imagen.peso == n and destino.admite(imagen)
            ))
        return resultado

    @property
    def enumerativo(self):
        return True


# ========== REGISTROS Y REPORTES ==========

@dataclass(frozen=True)
class IdentityRecord:
    identificador: str
    lados: tuple
    cita: str
    notas: str = ''
    n_por_defecto: int | None = None

    def __post_init__(self):
        if len(self.lados) < 2:
            raise ValueError(f"{self.identificador}: una identidad necesita al menos dos lados")
        etiquetas = [lado.etiqueta for lado in self.lados]
        if len(set(etiquetas)) != len(etiquetas):
            raise ValueError(f"{self.identificador}: etiquetas de lado repetidas")

    @property
    def expectativa(self):
        if any(l.expectativa is Expectativa.RECLAMO for l in self.lados):
            return Expectativa.RECLAMO
        return Expectativa.PROBADA

    @property
    def n_defecto(self):
        if self.n_por_defecto is not None:
            return self.n_por_defecto
        if any(lado.enumerativo for lado in self.lados):
            return config.N_ENUMERATIVO
        return config.N_SERIES


@dataclass
class ResultadoLado:
    etiqueta: str
    expectativa: str
    valores: list


@dataclass
class VerificationReport:
    identidad: str
    n_max: int
    estado: str
    lados: list = field(default_factory=list)
    primer_desacuerdo: int | None = None
    duracion_ms: int = 0
    cita: str = ''
    notas: str = ''
    error: str | None = None

    def como_registro(self, deterministico=False):
        """Objeto serializable con los campos del formato de registros"""
        registro = {
            'id': self.identidad,
            'N': self.n_max,
            'status': self.estado,
            'sides': [
                {'label': l.etiqueta, 'expectation': l.expectativa, 'values': list(l.valores)}
                for l in self.lados
            ],
            'first_mismatch': self.primer_desacuerdo,
            'notes': self.notas,
            'error': self.error,
        }
        if not deterministico:
            registro['elapsed_ms'] = self.duracion_ms
        return registro


def comparar_lados(resultados):
    """
    Estado y primer desacuerdo.

    Los lados probados deben coincidir entre sí (FAIL si no); un lado de
    reclamo que difiere del valor probado marca FLAGGED.
    """
    n_total = max((len(r.valores) for r in resultados), default=0)
    primer_fallo = None
    primer_marcado = None
    probada = Expectativa.PROBADA.value

    for n in range(n_total):
        presentes = [r for r in resultados if n < len(r.valores)]
        probados = {r.valores[n] for r in presentes if r.expectativa == probada}
        if len(probados) > 1 and primer_fallo is None:
            primer_fallo = n
        if len(probados) == 1:
            referencia = next(iter(probados))
            reclamos = [r.valores[n] for r in presentes if r.expectativa != probada]
            if primer_marcado is None and any(v != referencia for v in reclamos):
                primer_marcado = n

    if primer_fallo is not None:
        return Estado.FAIL.value, primer_fallo
    if primer_marcado is not None:
        return Estado.FLAGGED.value, primer_marcado
    return Estado.PASS.value, None


# ========== REGISTRO DE IDENTIDADES ==========

NOTA_TRUNCAMIENTO = "Igualdad de productos infinitos verificada hasta q^N"


def _conteo(clase_id, **kwargs):
    return LadoConteo(f"cuenta:{clase_id}", clase_id=clase_id, **kwargs)


def _serie(serie_id, **kwargs):
    return LadoSerie(f"serie:{serie_id}", serie_id=serie_id, **kwargs)


def _pares(variante):
    return LadoPares(f"pares:{variante}", variante=variante, tope=config.N_PARES)


def _transporte(identificador, mapa_id, origen, destino, cita):
    return IdentityRecord(
        f"transporte:{identificador}",
        (
            _conteo(origen),
            _conteo(destino),
            LadoTransporte(
                f"imagen:{mapa_id}", mapa_id=mapa_id, origen=origen, destino=destino,
                tope=config.N_TRANSPORTE
            ),
        ),
        cita,
        notas="Imágenes distintas del origen que caen en la clase de destino",
        n_por_defecto=config.N_TRANSPORTE,
    )


def _identidades_lebesgue():
    registros = []
    for alfa in range(4):
        for beta in series_catalog.BETAS:
            k = 4 * alfa + beta
            if k == 0:
                continue
            lados = [_serie(f"lebesgue-suma:a={alfa},b={beta}")]
            if alfa >= 1:
                lados.append(_serie(f"lebesgue-alterna:a={alfa},b={beta}"))
            lados += [
                _serie(f"lebesgue-producto:b={beta}"),
                _serie(f"lebesgue-casos:b={beta}"),
                _conteo(f"lebesgue:a={alfa},b={beta}", expectativa=Expectativa.RECLAMO),
            ]
            notas = NOTA_TRUNCAMIENTO
            if beta in (-1, 1) and alfa == 0:
                notas += (
                    "; beta=-1 da la primera identidad de little Göllnitz y beta=1 la segunda"
                )
            registros.append(IdentityRecord(
                f"lebesgue:a={alfa},b={beta}", tuple(lados),
                "Lebesgue generalizada, k = 4 alfa + beta", notas
            ))
    return registros


def identidades_incorporadas():
    """Lista completa de identidades registradas"""
    registros = [
        IdentityRecord(
            'euler',
            (_conteo('d'), _conteo('odd'), _serie('euler-producto'),
             _serie('impares-producto'), _serie('d-suma')),
            'Euler: partes distintas y partes impares', NOTA_TRUNCAMIENTO
        ),
    ]

    for k in range(1, 6):
        registros.append(IdentityRecord(
            f"prop-dk:k={k}",
            (_conteo('d'), _conteo(f"dk-over:k={k}"), _serie(f"dk-over-suma:k={k}")),
            'D(n) = D̄_k(n)'
        ))
        registros.append(IdentityRecord(
            f"dk:k={k}",
            (_conteo(f"dk:k={k}"), _serie(f"dk-suma:k={k}")),
            'Función generatriz de partes distintas >= k'
        ))

    registros += [
        IdentityRecord(
            'thmd', (_conteo('d'), _conteo('e-over'), _serie('e-suma')), 'D(n) = Ē(n)'
        ),
        IdentityRecord(
            'frr',
            (_conteo('rr1'), _conteo('rr1-over'), _serie('rr1-over-suma'), _serie('mod5:1,4')),
            'RR1(n) = RR̄1(n)', NOTA_TRUNCAMIENTO
        ),
        IdentityRecord(
            'frr-suma',
            (_serie('rr1-suma'), _serie('rr1-over-suma'), _serie('mod5:1,4')),
            'Primera identidad de Rogers-Ramanujan como series', NOTA_TRUNCAMIENTO
        ),
        IdentityRecord(
            'frr2',
            (_conteo('rr1'), _conteo('rr1star-over'), _serie('rr1star-over-suma'),
             _serie('rr1-separada')),
            'RR1(n) = RR̄1*(n)'
        ),
        IdentityRecord(
            'srr',
            (_conteo('rr2'), _conteo('rr2-over'), _serie('rr2-over-suma'), _serie('mod5:2,3')),
            'RR2(n) = RR̄2(n)', NOTA_TRUNCAMIENTO
        ),
        IdentityRecord(
            'srr-suma',
            (_serie('rr2-suma'), _serie('rr2-over-suma'), _serie('rr2-diferencia'),
             _serie('rr2-impar-suma'), _serie('mod5:2,3')),
            'Segunda identidad de Rogers-Ramanujan como series', NOTA_TRUNCAMIENTO
        ),
        IdentityRecord(
            'a027349',
            (
                _serie('a027349-suma'),
                _serie('a027349-desplazada'),
                LadoDesplazado(
                    'cuenta:distinct-odd-least1(n+1)',
                    base=_conteo('distinct-odd-least1'), desplazamiento=1
                ),
                LadoArchivoB('archivo-b:A027349', archivo='b027349.txt', desplazamiento=1),
            ),
            'Partes impares distintas de n + 1 con menor parte 1 (A027349)',
            'El coeficiente de q^n corresponde a la entrada n + 1 del archivo b'
        ),
        IdentityRecord(
            'impares-menor1',
            (_conteo('distinct-odd-least1'), _serie('impares-menor1-suma'),
             _serie('impares-menor1-alterna')),
            'Partes impares distintas con menor parte 1'
        ),
        IdentityRecord(
            'fgg',
            (_conteo('gg1'), _conteo('gg1-over'), _serie('mod8:1,4,7'), _pares('gg1')),
            'GG1(n) = GḠ1(n)', NOTA_TRUNCAMIENTO
        ),
        IdentityRecord(
            'fgg-suma', (_serie('gg1-suma'), _serie('mod8:1,4,7')),
            'Primera identidad de Göllnitz-Gordon como series', NOTA_TRUNCAMIENTO
        ),
        IdentityRecord(
            'sgg',
            (_conteo('gg2'), _conteo('gg2-over'), _serie('mod8:3,4,5'), _pares('gg2')),
            'GG2(n) = GḠ2(n)', NOTA_TRUNCAMIENTO
        ),
        IdentityRecord(
            'sgg-suma', (_serie('gg2-suma'), _serie('mod8:3,4,5')),
            'Segunda identidad de Göllnitz-Gordon como series', NOTA_TRUNCAMIENTO
        ),
        IdentityRecord(
            'dgg',
            (_conteo('dgg12'), _conteo('dgg12-over'), _serie('dgg12-diferencia'),
             _serie('dgg12-suma')),
            'DGG12(n) = DGḠ12(n)',
            'Menor parte en {1, 2}: con diferencia >= 2 equivale a contener 1 o 2'
        ),
        IdentityRecord(
            'lg',
            (_conteo('lg1'), _conteo('lg1-over'), _serie('lg1-producto'), _pares('lg1')),
            'LG1(n) = LḠ1(n)', NOTA_TRUNCAMIENTO
        ),
        IdentityRecord(
            'lg-suma',
            (_serie('lg1-laurent'), _serie('lg1-suma'), _serie('lg1-producto'),
             _serie('mod8:1,5,6'), _serie('distinct-mod4:0,1,2')),
            'Primera identidad de little Göllnitz como series',
            'La suma con (-q^-1;q^2)_n se calcula en modo Laurent; ' + NOTA_TRUNCAMIENTO
        ),
        IdentityRecord(
            'slg',
            (_conteo('lg2'), _conteo('lg2-over'), _serie('mod8:2,3,7'), _pares('lg2')),
            'LG2(n) = LḠ2(n)', NOTA_TRUNCAMIENTO
        ),
        IdentityRecord(
            'slg-suma',
            (_serie('lg2-suma'), _serie('lg2-producto'), _serie('mod8:2,3,7'),
             _serie('distinct-mod4:0,2,3')),
            'Segunda identidad de little Göllnitz como series', NOTA_TRUNCAMIENTO
        ),
    ]

    registros += _identidades_lebesgue()
    registros.append(IdentityRecord(
        'lebesgue-cero',
        (
            _serie('lebesgue-cero-suma'),
            LadoEscalado(
                'escalado:2*lebesgue-cero-mitad+1', base=_serie('lebesgue-cero-mitad'),
                factor=Fraction(2), constante=Fraction(1)
            ),
            _serie('lebesgue-cero-doble'),
            _serie('lebesgue-casos:b=0'),
        ),
        'Caso k = 0: el doble de una suma desde n = 1',
        'El lado derecho empieza en n = 1 y suma la constante 1 (término n = 0)'
    ))

    registros += [
        IdentityRecord(
            'hgl1', (_serie('hgl1-suma'), _serie('mod8:1,5,6')), 'q-Gauss H(-q, q^2; q^4)'
        ),
        IdentityRecord(
            'hgl2', (_serie('hgl2-suma'), _serie('mod8:2,3,7')), 'q-Gauss H(-q^-1, q^2; q^4)',
            'Suma en modo Laurent'
        ),
        IdentityRecord(
            'hgl3', (_serie('hgl3-suma'), _serie('lebesgue-casos:b=0')), 'q-Gauss H(-1, q^2; q^4)'
        ),
        IdentityRecord(
            'hgl4', (_serie('hgl4-suma'), _serie('lebesgue-casos:b=2')),
            'q-Gauss H(-q^-2, q^2; q^4)', 'Suma en modo Laurent'
        ),
        IdentityRecord(
            'hgl5', (_serie('hgl5-suma'), _serie('hgl5-producto')), 'q-Gauss H(-q^2, q^4; q^4)'
        ),
    ]
    for alfa in range(4):
        registros.append(IdentityRecord(
            f"hgll3:a={alfa}", (_serie('hgl3-suma'), _serie(f"lebesgue-suma:a={alfa},b=0")),
            'q-Gauss contra Lebesgue con beta = 0',
            'El factor finito es (-q^2;q^4)_alfa'
        ))
        registros.append(IdentityRecord(
            f"hgll4:a={alfa}", (_serie('hgl4-suma'), _serie(f"lebesgue-suma:a={alfa},b=2")),
            'q-Gauss contra Lebesgue con beta = 2'
        ))

    registros += [
        IdentityRecord(
            'slater47',
            (_serie('slater47-suma'), _serie('slater47-producto'), _serie('slater47-producto-largo')),
            'Slater (47)', NOTA_TRUNCAMIENTO
        ),
        IdentityRecord(
            'slater121',
            (
                _serie('slater121-suma'),
                LadoEscalado(
                    'escalado:(slater47-suma+1)/2', base=_serie('slater47-suma'),
                    factor=Fraction(1, 2), constante=Fraction(1, 2)
                ),
                _serie('slater121-producto'),
                _serie('slater121-producto-32'),
                _conteo('slater121-over', expectativa=Expectativa.RECLAMO),
            ),
            'Slater (121) e interpretación con sobreparticiones',
            'El término n = 0 de la suma se toma igual a 1'
        ),
        IdentityRecord(
            'casi-autoconjugadas',
            (_conteo('distinct-even'), LadoCasiAutoconjugadas('cuenta:casi-autoconjugadas'),
             _serie('pares-distintas-producto')),
            'Partes pares distintas y particiones casi autoconjugadas'
        ),
    ]

    for variante, serie_id in (('gg1', 'gg1-suma'), ('gg2', 'gg2-suma'),
                               ('lg1', 'lg1-suma'), ('lg2', 'lg2-suma')):
        registros.append(IdentityRecord(
            f"stembridge:{variante}", (_pares(variante), _serie(serie_id)),
            f"Pares de Stembridge {variante.upper()}", n_por_defecto=config.N_PARES
        ))

    for clase_id in ('mod5:1,4', 'mod5:2,3', 'mod8:1,4,7', 'mod8:3,4,5', 'mod8:1,5,6',
                     'mod8:2,3,7', 'distinct-mod4:0,1,2', 'distinct-mod4:0,2,3'):
        registros.append(IdentityRecord(
            f"congruencia:{clase_id}", (_conteo(clase_id), _serie(clase_id)),
            'Clase de congruencia contra su producto'
        ))

    registros += [
        _transporte('thmd', 'f', 'd', 'e-over', 'D(n) = Ē(n) vía f'),
        _transporte('frr', 'h-oe', 'rr1', 'rr1-over', 'RR1(n) = RR̄1(n) vía h'),
        _transporte('frr2', 'h-eo', 'rr1', 'rr1star-over', 'RR1(n) = RR̄1*(n) vía h'),
        _transporte('srr', 'h-eo', 'rr2', 'rr2-over', 'RR2(n) = RR̄2(n) vía h'),
        _transporte('fgg', 'g-gg', 'gg1', 'gg1-over', 'GG1(n) = GḠ1(n) vía g'),
        _transporte('sgg', 'g-gg', 'gg2', 'gg2-over', 'GG2(n) = GḠ2(n) vía g'),
        _transporte('dgg', 'g-gg', 'dgg12', 'dgg12-over', 'DGG12(n) = DGḠ12(n) vía g'),
        _transporte('lg', 'g-lg', 'lg1', 'lg1-over', 'LG1(n) = LḠ1(n) vía g'),
        _transporte('slg', 'g-lg', 'lg2', 'lg2-over', 'LG2(n) = LḠ2(n) vía g'),
    ]
    return registros


# ========== VERIFICADOR ==========

class IdentityHarness:
    """Verifica identidades registradas comparando sus lados para 0 <= n <= N"""

    def __init__(self, identidades=None):
        registros = identidades if identidades is not None else identidades_incorporadas()
        self.registro = {}
        for registro in registros:
            if registro.identificador in self.registro:
                raise ValueError(f"Identificador repetido: {registro.identificador}")
            self.registro[registro.identificador] = registro
        self._cache = {}
        logger.debug(f"{config.MENSAJES['registro_cargado']}: {len(self.registro)} identidades")

    def ids(self):
        return sorted(self.registro)

    def obtener(self, identificador):
        try:
            return self.registro[identificador]
        except KeyError:
            raise IdentidadDesconocida(identificador, self.ids()) from None

    def _valores_lado(self, registro, lado, n_max):
        clave = (lado, lado.n_efectivo(n_max))
        if clave not in self._cache:
            self._cache[clave] = lado.valores(n_max)
            logger.log_lado(registro.identificador, lado.etiqueta, clave[1])
        return list(self._cache[clave])

    def calcular_reporte(self, identificador, n_max=None):
        """Reporte de una identidad sin registrar el resultado en el logger"""
        registro = self.obtener(identificador)
        n_max = registro.n_defecto if n_max is None else n_max
        if n_max < 0:
            raise ValueError(f"N debe ser no negativo: {n_max}")

        inicio = time.perf_counter()
        reporte = VerificationReport(
            identidad=identificador, n_max=n_max, estado=Estado.FAIL.value,
            cita=registro.cita, notas=registro.notas
        )
        try:
            for lado in registro.lados:
                reporte.lados.append(ResultadoLado(
                    lado.etiqueta, lado.expectativa.value,
                    self._valores_lado(registro, lado, n_max)
                ))
            reporte.estado, reporte.primer_desacuerdo = comparar_lados(reporte.lados)
        except Exception as e:
            reporte.estado = Estado.FAIL.value
            reporte.error = f"{type(e).__name__}: {e}"

        if reporte.primer_desacuerdo is not None:
            n = reporte.primer_desacuerdo
            logger.log_desacuerdo(identificador, n, {
                l.etiqueta: l.valores[n] for l in reporte.lados if n < len(l.valores)
            })
        reporte.duracion_ms = int((time.perf_counter() - inicio) * 1000)
        return reporte

    def verificar(self, identificador, n_max=None):
        """
        Verifica una identidad.

        Args:
            identificador: id registrado
            n_max: cota N (por defecto la del registro)

        Returns:
            VerificationReport con estado PASS, FAIL o FLAGGED
        """
        reporte = self.calcular_reporte(identificador, n_max)
        logger.log_resultado(reporte)
        return reporte

    def verificar_todas(self, n_max=None, trabajos=None, identificadores=None):
        """
        Verifica todas las identidades (o las indicadas), ordenadas por id.

        Los lados de transporte quedan acotados por su propio tope.
        """
        identificadores = sorted(identificadores or self.ids())
        for identificador in identificadores:
            self.obtener(identificador)
        trabajos = trabajos or config.TRABAJOS_POR_DEFECTO

        if trabajos > 1 and len(identificadores) > 1:
            with Pool(processes=trabajos) as pool:
                reportes = pool.map(
                    _verificar_en_trabajador, [(i, n_max) for i in identificadores]
                )
        else:
            reportes = [self.calcular_reporte(i, n_max) for i in identificadores]

        for reporte in reportes:
            logger.log_resultado(reporte)
        return sorted(reportes, key=lambda r: r.identidad)


_harness_trabajador = None


def _verificar_en_trabajador(argumentos):
    global _harness_trabajador
    identificador, n_max = argumentos
    if _harness_trabajador is None:
        _harness_trabajador = IdentityHarness()
    return _harness_trabajador.calcular_reporte(identificador, n_max)


def exito_global(reportes):
    """True si ninguna identidad terminó en FAIL"""
    return all(r.estado != Estado.FAIL.value for r in reportes)
