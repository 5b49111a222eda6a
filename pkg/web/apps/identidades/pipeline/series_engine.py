"""
Motor de Series
Aritmética exacta de series de Laurent truncadas con coeficientes enteros

Cada serie se guarda de forma densa hasta el exponente N + GUARDA_LAURENT y
lleva un campo `precision`: el mayor exponente cuyo coeficiente es exacto
(None cuando la serie es un polinomio sin truncar). Los coeficientes hasta N
son siempre exactos; si una operación deja la precisión por debajo de N se
lanza ErrorGuardaLaurent en lugar de devolver coeficientes incorrectos.
"""

import operator
from dataclasses import dataclass

from . import config
from .logger import logger

# Longitud infinita para PochhammerSpec
INFINITO = None


class ErrorOrdenIncompatible(ValueError):
    """Dos series con distinto orden de truncamiento"""


class ErrorGuardaLaurent(ArithmeticError):
    """Offset negativo fuera de la guarda o precisión insuficiente"""


class ErrorFactorNoInvertible(ArithmeticError):
    """Factor con potencia -1 cuyo término constante no es 1"""


class ErrorDivergencia(ArithmeticError):
    """Familia de términos cuyo exponente mínimo deja de crecer"""


class ErrorCoeficienteDesconocido(ValueError):
    """Coeficiente pedido por encima del orden de truncamiento"""


def _min_precision(*valores):
    """Mínimo ignorando None (None representa precisión infinita)"""
    finitos = [v for v in valores if v is not None]
    return min(finitos) if finitos else None


def _sumar_precision(precision, valoracion):
    if precision is None or valoracion is None:
        return None
    return precision + valoracion


class LaurentSeries:
    """Serie formal truncada sum c_i q^(offset+i) con orden N"""

    __slots__ = ('offset', 'coefs', 'orden', 'precision')

    def __init__(self, coefs=(), offset=0, orden=0, precision=None):
        """
        Args:
            coefs: coeficientes enteros; coefs[i] acompaña a q^(offset+i)
            offset: exponente del primer coeficiente
            orden: N, los exponentes mayores que N no se consultan
            precision: mayor exponente exacto (None si no hubo truncamiento)
        """
        if orden < 0:
            raise ValueError(f"Orden de truncamiento negativo: {orden}")

        valores = [operator.index(c) for c in coefs]
        tope = orden + config.GUARDA_LAURENT

        # Recortar por encima del tope de almacenamiento
        largo_maximo = tope - offset + 1
        if len(valores) > max(largo_maximo, 0):
            sobrante = valores[max(largo_maximo, 0):]
            valores = valores[:max(largo_maximo, 0)]
            if any(sobrante):
                precision = _min_precision(precision, tope)

        # Quitar ceros en los extremos
        inicio = 0
        while inicio < len(valores) and valores[inicio] == 0:
            inicio += 1
        fin = len(valores)
        while fin > inicio and valores[fin - 1] == 0:
            fin -= 1

        if inicio == fin:
            valores, offset = [], 0
        else:
            valores, offset = valores[inicio:fin], offset + inicio
            if offset < config.OFFSET_MINIMO:
                raise ErrorGuardaLaurent(
                    f"Offset {offset} por debajo del mínimo {config.OFFSET_MINIMO}"
                )

        if precision is not None and precision < orden:
            raise ErrorGuardaLaurent(
                f"Precisión {precision} menor que el orden {orden}: "
                f"aumente GUARDA_LAURENT"
            )

        self.offset = offset
        self.coefs = tuple(valores)
        self.orden = orden
        self.precision = precision

    # ── Consultas ─────────────────────────────────────────────────────────

    @property
    def tope(self):
        """Mayor exponente almacenado"""
        return self.orden + config.GUARDA_LAURENT

    @property
    def valoracion(self):
        """Menor exponente con coeficiente no nulo (None si no hay)"""
        return self.offset if self.coefs else None

    @property
    def grado(self):
        """Mayor exponente con coeficiente no nulo (None si no hay)"""
        return self.offset + len(self.coefs) - 1 if self.coefs else None

    def _valoracion_efectiva(self):
        # Primer exponente que puede ser no nulo, contando la cola desconocida
        if self.coefs:
            return self.offset
        if self.precision is not None:
            return self.precision + 1
        return None

    def coeficiente(self, n):
        """Coeficiente exacto de q^n (n <= orden)"""
        if n > self.orden:
            raise ErrorCoeficienteDesconocido(
                f"Coeficiente de q^{n} desconocido: la serie está truncada en N={self.orden}"
            )
        indice = n - self.offset
        if 0 <= indice < len(self.coefs):
            return self.coefs[indice]
        return 0

    def coeficientes(self, desde=0, hasta=None):
        """Lista de coeficientes de q^desde a q^hasta (por defecto hasta N)"""
        hasta = self.orden if hasta is None else hasta
        return [self.coeficiente(n) for n in range(desde, hasta + 1)]

    def es_cero(self):
        """True si todos los coeficientes de exponente <= N son cero"""
        return self.valoracion is None or self.valoracion > self.orden

    def coeficientes_negativos(self):
        """Pares (exponente, coeficiente) no nulos con exponente negativo"""
        return [
            (self.offset + i, c)
            for i, c in enumerate(self.coefs)
            if c and self.offset + i < 0
        ]

    def _visibles(self):
        return tuple(
            (self.offset + i, c)
            for i, c in enumerate(self.coefs)
            if c and self.offset + i <= self.orden
        )

    def con_precision(self, precision):
        """Copia con la precisión acotada por `precision`"""
        return LaurentSeries(
            self.coefs, self.offset, self.orden,
            _min_precision(self.precision, precision)
        )

    # ── Operadores ────────────────────────────────────────────────────────

    def __eq__(self, otra):
        if not isinstance(otra, LaurentSeries):
            return NotImplemented
        return self.orden == otra.orden and self._visibles() == otra._visibles()

    def __hash__(self):
        return hash((self.orden, self._visibles()))

    def __add__(self, otra):
        return sumar(self, otra)

    def __sub__(self, otra):
        return restar(self, otra)

    def __neg__(self):
        return escalar(self, -1)

    def __mul__(self, otra):
        if isinstance(otra, LaurentSeries):
            return multiplicar(self, otra)
        return escalar(self, otra)

    __rmul__ = __mul__

    def __repr__(self):
        terminos = ' + '.join(f"{c}q^{e}" for e, c in self._visibles()[:6])
        return f"LaurentSeries({terminos or '0'} ... ; N={self.orden})"


# ========== TIPOS DE PRODUCTOS ==========

@dataclass(frozen=True)
class PochhammerSpec:
    """
    Producto prod_{j<longitud} (1 + signo * q^(desplazamiento + j*paso)).

    (-q^s;q^m)_n corresponde a signo=+1 y (q^s;q^m)_n a signo=-1.
    """
    signo: int
    desplazamiento: int
    paso: int = 1
    longitud: int | None = INFINITO

    def __post_init__(self):
        if self.signo not in (1, -1):
            raise ValueError(f"Signo inválido: {self.signo}")
        if self.paso < 1:
            raise ValueError(f"El paso debe ser positivo: {self.paso}")
        if self.longitud is not None and self.longitud < 0:
            raise ValueError(f"Longitud negativa: {self.longitud}")

    @property
    def es_infinito(self):
        return self.longitud is INFINITO

    def exponentes(self, tope):
        """Exponentes de los factores hasta `tope` y el primero omitido (o None)"""
        exponentes = []
        j = 0
        while self.es_infinito or j < self.longitud:
            e = self.desplazamiento + j * self.paso
            if e > tope:
                return exponentes, e
            exponentes.append(e)
            j += 1
        return exponentes, None


def poch(desplazamiento, paso=1, longitud=INFINITO):
    """(q^s;q^m)_n"""
    return PochhammerSpec(-1, desplazamiento, paso, longitud)


def poch_negativo(desplazamiento, paso=1, longitud=INFINITO):
    """(-q^s;q^m)_n"""
    return PochhammerSpec(1, desplazamiento, paso, longitud)


@dataclass(frozen=True)
class FactorSpec:
    pochhammer: PochhammerSpec
    potencia: int = 1

    def __post_init__(self):
        if self.potencia not in (1, -1):
            raise ValueError(f"Potencia inválida: {self.potencia}")


@dataclass(frozen=True)
class ProductSpec:
    """Producto de factores de Pochhammer elevados a +1 o -1"""
    factores: tuple = ()

    @classmethod
    def de(cls, directos=(), inversos=()):
        return cls(
            tuple(FactorSpec(p, 1) for p in directos)
            + tuple(FactorSpec(p, -1) for p in inversos)
        )

    @classmethod
    def inverso_de_residuos(cls, modulo, residuos):
        """1/(q^r1,q^r2,...;q^m)_inf, partes congruentes con `residuos` módulo m"""
        return cls.de(inversos=[poch(r if r else modulo, modulo) for r in residuos])


# ========== OPERACIONES ==========

def _verificar_orden(a, b):
    if a.orden != b.orden:
        raise ErrorOrdenIncompatible(
            f"Series con órdenes distintos: {a.orden} y {b.orden}"
        )


def serie_nula(orden):
    return LaurentSeries((), 0, orden)


def monomio(c, e, orden):
    """c*q^e truncado en N; si e > N el resultado es la serie nula hasta N"""
    return LaurentSeries([c], e, orden)


def desde_polinomio(terminos, orden):
    """Serie a partir de un dict {exponente: coeficiente}"""
    terminos = {e: c for e, c in terminos.items() if c}
    if not terminos:
        return serie_nula(orden)
    inicio, fin = min(terminos), max(terminos)
    coefs = [terminos.get(e, 0) for e in range(inicio, fin + 1)]
    return LaurentSeries(coefs, inicio, orden)


def sumar(a, b):
    """Suma coeficiente a coeficiente"""
    _verificar_orden(a, b)
    precision = _min_precision(a.precision, b.precision)
    presentes = [s for s in (a, b) if s.coefs]
    if not presentes:
        return LaurentSeries((), 0, a.orden, precision)

    inicio = min(s.offset for s in presentes)
    fin = max(s.grado for s in presentes)
    coefs = [0] * (fin - inicio + 1)
    for s in presentes:
        base = s.offset - inicio
        for i, c in enumerate(s.coefs):
            coefs[base + i] += c
    return LaurentSeries(coefs, inicio, a.orden, precision)


def escalar(a, factor):
    """Multiplica cada coeficiente por un entero"""
    factor = operator.index(factor)
    if factor == 0:
        return serie_nula(a.orden)
    return LaurentSeries([c * factor for c in a.coefs], a.offset, a.orden, a.precision)


def restar(a, b):
    return sumar(a, escalar(b, -1))


def multiplicar(a, b):
    """Producto de Cauchy truncado en N"""
    _verificar_orden(a, b)
    orden = a.orden
    precision = _min_precision(
        _sumar_precision(a.precision, b._valoracion_efectiva()),
        _sumar_precision(b.precision, a._valoracion_efectiva()),
    )
    if not a.coefs or not b.coefs:
        return LaurentSeries((), 0, orden, precision)

    tope = orden + config.GUARDA_LAURENT
    offset = a.offset + b.offset
    largo = tope - offset + 1
    total = len(a.coefs) + len(b.coefs) - 1
    if total > largo:
        precision = _min_precision(precision, tope)
    if largo <= 0:
        return LaurentSeries((), 0, orden, precision)

    coefs = [0] * min(total, largo)
    bc = b.coefs
    for i, x in enumerate(a.coefs):
        if x == 0:
            continue
        limite = min(len(bc), largo - i)
        if limite <= 0:
            break
        for j in range(limite):
            coefs[i + j] += x * bc[j]
    return LaurentSeries(coefs, offset, orden, precision)


def _binomio(signo, exponente, orden):
    """1 + signo*q^e"""
    terminos = {0: 1}
    terminos[exponente] = terminos.get(exponente, 0) + signo
    if not any(terminos.values()):
        return serie_nula(orden)
    inicio, fin = min(terminos), max(terminos)
    coefs = [terminos.get(e, 0) for e in range(inicio, fin + 1)]
    return LaurentSeries(coefs, inicio, orden)


def pochhammer(spec, orden):
    """Expansión de prod_j (1 + signo*q^(s+jm)) truncada en N"""
    resultado = monomio(1, 0, orden)
    exponentes, omitido = spec.exponentes(orden + config.GUARDA_LAURENT)

    for e in exponentes:
        resultado = multiplicar(resultado, _binomio(spec.signo, e, orden))
        if not resultado.coefs and resultado.precision is None:
            return resultado

    # Los factores omitidos solo afectan exponentes >= omitido + valoración
    if omitido is not None:
        valoracion = resultado._valoracion_efectiva()
        if valoracion is not None:
            resultado = resultado.con_precision(omitido + valoracion - 1)
    return resultado


def _dividir_por_pochhammer(serie, spec):
    """serie / prod_j (1 + signo*q^(s+jm)) por recurrencia de la serie geométrica"""
    orden = serie.orden
    tope = orden + config.GUARDA_LAURENT
    exponentes, omitido = spec.exponentes(tope)

    invalidos = [e for e in exponentes if e < 1]
    if invalidos:
        raise ErrorFactorNoInvertible(
            f"El factor (1 {'+' if spec.signo > 0 else '-'} q^{spec.desplazamiento}) "
            f"no tiene término constante 1"
        )
    if not serie.coefs:
        return serie

    precision = serie.precision
    coefs = list(serie.coefs) + [0] * (tope - serie.grado)
    if exponentes:
        precision = _min_precision(precision, tope)

    c = spec.signo
    for e in exponentes:
        for i in range(e, len(coefs)):
            coefs[i] -= c * coefs[i - e]

    if omitido is not None:
        precision = _min_precision(precision, omitido + serie.offset - 1)
    return LaurentSeries(coefs, serie.offset, orden, precision)


def aplicar_factores_inversos(serie, spec):
    """
    Multiplica la serie por cada factor del producto.

    Los factores con potencia -1 se aplican como expansión geométrica
    truncada; su término constante debe ser 1.
    """
    resultado = serie
    for factor in spec.factores:
        if factor.potencia == 1:
            resultado = multiplicar(resultado, pochhammer(factor.pochhammer, serie.orden))
        else:
            resultado = _dividir_por_pochhammer(resultado, factor.pochhammer)
    return resultado


def evaluar_producto(spec, orden):
    """El producto `spec` como serie truncada en N"""
    return aplicar_factores_inversos(monomio(1, 0, orden), spec)


def termino(orden, exponente, numeradores=(), denominadores=(), escala=1):
    """
    escala * q^exponente * prod(numeradores) / prod(denominadores)

    Se construye en ese orden (monomio, numeradores, denominadores) para que
    los factores con exponentes negativos actúen sobre polinomios exactos.
    """
    serie = monomio(escala, exponente, orden)
    for spec in numeradores:
        serie = multiplicar(serie, pochhammer(spec, orden))
    if denominadores:
        serie = aplicar_factores_inversos(serie, ProductSpec.de(inversos=denominadores))
    return serie


def sumar_terminos(familia, orden, inicio=0, limite_estancado=None):
    """
    Suma la familia termino(n) para n = inicio, inicio+1, ...

    Args:
        familia: callable n -> LaurentSeries de orden N; el exponente mínimo
                 debe ser no decreciente y no acotado
        orden: N
        inicio: primer índice de la suma
        limite_estancado: términos seguidos sin crecimiento del exponente
                          mínimo tolerados antes de ErrorDivergencia

    Returns:
        LaurentSeries con la suma de los términos con exponente mínimo <= N
    """
    limite = limite_estancado or config.LIMITE_TERMINOS_ESTANCADOS
    total = serie_nula(orden)
    minimo_previo = None
    estancados = 0
    n = inicio

    while True:
        actual = familia(n)
        _verificar_orden(total, actual)
        if actual.es_cero():
            # Los términos restantes empiezan por encima de este
            valoracion = actual._valoracion_efectiva()
            if valoracion is not None:
                total = total.con_precision(valoracion - 1)
            break

        valoracion = actual.valoracion
        if minimo_previo is None or valoracion > minimo_previo:
            minimo_previo = valoracion
            estancados = 0
        else:
            estancados += 1
            if estancados >= limite:
                raise ErrorDivergencia(
                    f"El exponente mínimo no crece tras {estancados} términos (n={n})"
                )

        total = sumar(total, actual)
        n += 1

    logger.incrementar_stat('series_sumadas')
    return total


def coeficiente(serie, n):
    """Coeficiente exacto de q^n; error si n supera el orden"""
    return serie.coeficiente(n)
