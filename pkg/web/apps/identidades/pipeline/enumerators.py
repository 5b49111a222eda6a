"""
Módulo de Enumeración
Enumeración y conteo exactos de clases de particiones, sobreparticiones y pares de Stembridge
"""

import re
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache

from .logger import logger
from .partition_core import (
    FrobeniusSymbol,
    Overpartition,
    Partition,
    diagonal,
    es_autoconjugada,
    es_casi_autoconjugada,
    frobenius,
    particion_desde_frobenius,
)


class ClaseDesconocida(KeyError):
    """Identificador de clase no registrado"""

    def __init__(self, clase_id, registrados):
        super().__init__(clase_id)
        self.clase_id = clase_id
        self.registrados = registrados

    def __str__(self):
        return f"Clase desconocida {self.clase_id!r}. Registradas: {', '.join(self.registrados)}"


class Paridad(Enum):
    CUALQUIERA = 'ANY'
    TODAS_IMPARES = 'ALL_ODD'
    TODAS_PARES = 'ALL_EVEN'
    ALTERNADA_DESDE_IMPAR = 'ALTERNATING_FROM_ODD_SMALLEST'
    PATRON_SLATER121 = 'SLATER121_PATTERN'


@dataclass(frozen=True)
class PartitionClass:
    """Restricciones declarativas sobre las partes de una partición"""
    distinta: bool = False
    paridad: Paridad = Paridad.CUALQUIERA
    parte_minima: int = 1
    brecha_minima: int = 0
    sin_pares_consecutivos: bool = False
    sin_impares_consecutivos: bool = False
    menor_parte_en: frozenset | None = None
    debe_contener: frozenset | None = None
    residuos: tuple | None = None  # (modulo, frozenset de residuos)
    descripcion: str = ''

    @property
    def brecha(self):
        """Diferencia mínima entre partes adyacentes"""
        return max(self.brecha_minima, 1 if self.distinta else 0)

    def _parte_valida(self, p):
        if p < self.parte_minima:
            return False
        if self.paridad is Paridad.TODAS_IMPARES and p % 2 == 0:
            return False
        if self.paridad is Paridad.TODAS_PARES and p % 2 == 1:
            return False
        if self.residuos is not None:
            modulo, permitidos = self.residuos
            if p % modulo not in permitidos:
                return False
        return True

    def admite(self, particion):
        """
        Verificación independiente de todas las restricciones sobre una
        partición completa (no comparte código con el generador).
        """
        partes = particion.partes
        if not all(self._parte_valida(p) for p in partes):
            return False

        for i in range(len(partes) - 1):
            diferencia = partes[i] - partes[i + 1]
            if diferencia < self.brecha:
                return False
            if self.paridad is Paridad.PATRON_SLATER121 and i % 2 == 0 and diferencia == 0:
                return False

        conjunto = set(partes)
        if self.sin_pares_consecutivos and any(
            p % 2 == 0 and p + 2 in conjunto for p in conjunto
        ):
            return False
        if self.sin_impares_consecutivos and any(
            p % 2 == 1 and p + 2 in conjunto for p in conjunto
        ):
            return False

        if self.paridad is Paridad.ALTERNADA_DESDE_IMPAR:
            if any(p % 2 != j % 2 for j, p in enumerate(particion.creciente, 1)):
                return False

        if self.menor_parte_en is not None:
            if not partes or partes[-1] not in self.menor_parte_en:
                return False
        if self.debe_contener is not None and not self.debe_contener <= conjunto:
            return False
        return True


@dataclass(frozen=True)
class OverlineRule:
    """
    Regla para magnitudes rayadas en [minimo, maximo] (maximo None = abierto).

    La cota es afín en r (número de partes no rayadas): v <= alfa*r + beta.
    """
    minimo: int = 1
    maximo: int | None = None
    residuos: tuple | None = None
    cota: tuple | None = None  # (alfa, beta)

    def aplica(self, valor):
        return valor >= self.minimo and (self.maximo is None or valor <= self.maximo)

    def admite(self, valor, r):
        if self.residuos is not None:
            modulo, permitidos = self.residuos
            if valor % modulo not in permitidos:
                return False
        if self.cota is not None:
            alfa, beta = self.cota
            if valor > alfa * r + beta:
                return False
        return True


@dataclass(frozen=True)
class OverpartitionClass:
    base: PartitionClass
    reglas: tuple = field(default_factory=tuple)
    descripcion: str = ''

    def rayada_admisible(self, valor, r):
        """Admisible si alguna regla aplica y todas las que aplican la aceptan"""
        aplicables = [regla for regla in self.reglas if regla.aplica(valor)]
        return bool(aplicables) and all(regla.admite(valor, r) for regla in aplicables)

    def admite(self, sobreparticion):
        r = len(sobreparticion.no_rayadas)
        return self.base.admite(sobreparticion.no_rayadas) and all(
            self.rayada_admisible(v, r) for v in sobreparticion.rayadas
        )


# ========== GENERADORES ==========

def generar_particiones(n, clase):
    """
    Genera las particiones de n en la clase, en orden lexicográfico
    decreciente sobre la sucesión de partes.
    """
    partes = []
    presentes = set()
    brecha = clase.brecha
    patron = clase.paridad is Paridad.PATRON_SLATER121

    def completa():
        if clase.paridad is Paridad.ALTERNADA_DESDE_IMPAR:
            largo = len(partes)
            # La j-ésima parte desde la menor es la (largo - j + 1)-ésima desde la mayor
            if any(p % 2 != (largo - i) % 2 for i, p in enumerate(partes)):
                return False
        if clase.menor_parte_en is not None:
            if not partes or partes[-1] not in clase.menor_parte_en:
                return False
        if clase.debe_contener is not None and not clase.debe_contener <= presentes:
            return False
        return True

    def recorrer(restante, maximo):
        if restante == 0:
            if completa():
                yield Partition(tuple(partes))
            return
        for p in range(min(maximo, restante), clase.parte_minima - 1, -1):
            if not clase._parte_valida(p):
                continue
            if clase.sin_pares_consecutivos and p % 2 == 0 and p + 2 in presentes:
                continue
            if clase.sin_impares_consecutivos and p % 2 == 1 and p + 2 in presentes:
                continue
            partes.append(p)
            nuevo = p not in presentes
            presentes.add(p)

            siguiente = p - brecha
            if patron and len(partes) % 2 == 1:
                # l_1 > l_2 >= l_3 > l_4 ...
                siguiente = min(siguiente, p - 1)
            yield from recorrer(restante - p, siguiente)

            partes.pop()
            if nuevo:
                presentes.discard(p)

    yield from recorrer(n, n)


def _conjuntos_distintos(total, permitidos):
    """Conjuntos de valores distintos de `permitidos` (decrecientes) que suman total"""
    elegidos = []

    def recorrer(restante, indice):
        if restante == 0:
            yield tuple(elegidos)
            return
        for i in range(indice, len(permitidos)):
            v = permitidos[i]
            if v > restante:
                continue
            elegidos.append(v)
            yield from recorrer(restante - v, i + 1)
            elegidos.pop()

    yield from recorrer(total, 0)


def generar_sobreparticiones(n, clase):
    """Genera las sobreparticiones de n en la clase (sin orden garantizado)"""
    cache = {}
    for rayado in range(n + 1):
        for no_rayadas in generar_particiones(n - rayado, clase.base):
            r = len(no_rayadas)
            clave = (rayado, r)
            if clave not in cache:
                permitidos = [
                    v for v in range(rayado, 0, -1) if clase.rayada_admisible(v, r)
                ]
                cache[clave] = list(_conjuntos_distintos(rayado, permitidos))
            for rayadas in cache[clave]:
                yield Overpartition(no_rayadas, rayadas)


def _clave_orden(sobreparticion):
    return (sobreparticion.no_rayadas.partes, sobreparticion.rayadas)


def enumerar_particiones(n, clase):
    """
    Particiones de n que satisfacen la clase

    Args:
        n: entero no negativo
        clase: PartitionClass

    Returns:
        Lista en orden lexicográfico decreciente de la sucesión de partes
    """
    return list(generar_particiones(n, clase))


def enumerar_sobreparticiones(n, clase):
    """Sobreparticiones de n en la clase, ordenadas por (no rayadas, rayadas) decreciente"""
    return sorted(generar_sobreparticiones(n, clase), key=_clave_orden, reverse=True)


def contar_particiones(n, clase):
    return sum(1 for _ in generar_particiones(n, clase))


def contar_sobreparticiones(n, clase):
    return sum(1 for _ in generar_sobreparticiones(n, clase))


def enumerar(n, clase):
    if isinstance(clase, OverpartitionClass):
        return enumerar_sobreparticiones(n, clase)
    return enumerar_particiones(n, clase)


def contar(n, clase):
    if isinstance(clase, OverpartitionClass):
        return contar_sobreparticiones(n, clase)
    return contar_particiones(n, clase)


# ========== PARTICIONES (CASI) AUTOCONJUGADAS ==========

def _simbolos_frobenius(n, desfase):
    """Símbolos (b + desfase ; b) de peso n con b estrictamente decreciente"""
    inferior = []

    def recorrer(restante, tope):
        if restante == 0:
            yield FrobeniusSymbol(tuple(b + desfase for b in inferior), tuple(inferior))
            return
        for b in range(tope, -1, -1):
            costo = 2 * b + 1 + desfase
            if costo > restante:
                continue
            inferior.append(b)
            yield from recorrer(restante - costo, b - 1)
            inferior.pop()

    yield from recorrer(n, n)


@lru_cache(maxsize=None)
def autoconjugadas(n):
    """Particiones autoconjugadas de n, comprobadas con la conjugada"""
    resultado = []
    for simbolo in _simbolos_frobenius(n, 0):
        particion = particion_desde_frobenius(simbolo)
        if particion.peso != n or not es_autoconjugada(particion):
            raise AssertionError(f"Símbolo {simbolo} no produce una autoconjugada de {n}")
        resultado.append(particion)
    return tuple(sorted(resultado, key=lambda p: p.partes, reverse=True))


@lru_cache(maxsize=None)
def casi_autoconjugadas(n):
    """Particiones casi autoconjugadas de n (ninguna para n = 0)"""
    resultado = []
    for simbolo in _simbolos_frobenius(n, 1):
        if simbolo.d == 0:
            continue
        particion = particion_desde_frobenius(simbolo)
        if particion.peso != n or not es_casi_autoconjugada(particion):
            raise AssertionError(f"Símbolo {simbolo} no produce una casi autoconjugada de {n}")
        resultado.append(particion)
    return tuple(sorted(resultado, key=lambda p: p.partes, reverse=True))


class VarianteStembridge(Enum):
    GG1 = 'gg1'
    GG2 = 'gg2'
    LG1 = 'lg1'
    LG2 = 'lg2'


def _candidatos_tau(m, variante):
    if variante in (VarianteStembridge.GG1, VarianteStembridge.GG2):
        candidatos = autoconjugadas(m)
        if variante is VarianteStembridge.GG2:
            candidatos = tuple(
                t for t in candidatos
                if 0 not in frobenius(t).superior and 0 not in frobenius(t).inferior
            )
        return candidatos
    # La vacía actúa como la casi autoconjugada de diagonal 0
    return (Partition(),) if m == 0 else casi_autoconjugadas(m)


def contar_pares_stembridge(n, variante):
    """
    Pares (sigma, tau) con |sigma| + |tau| = n, sigma autoconjugada y

    GG1: tau autoconjugada, mayor(sigma) <= d(tau)
    GG2: además el símbolo de Frobenius de tau no contiene ceros
    LG2: tau casi autoconjugada, mayor(sigma) <= d(tau)
    LG1: tau casi autoconjugada, mayor(sigma) <= d(tau) + 1
    """
    variante = VarianteStembridge(variante)
    holgura = 1 if variante is VarianteStembridge.LG1 else 0
    total = 0
    for m in range(n + 1):
        taus = _candidatos_tau(m, variante)
        if not taus:
            continue
        sigmas = autoconjugadas(n - m)
        for tau in taus:
            limite = diagonal(tau) + holgura
            total += sum(1 for sigma in sigmas if sigma.mayor <= limite)
    return total


# ========== REGISTRO DE CLASES ==========

def _impares():
    return (2, frozenset({1}))


def _pares():
    return (2, frozenset({0}))


D = PartitionClass(distinta=True, descripcion='partes distintas')
IMPARES = PartitionClass(paridad=Paridad.TODAS_IMPARES, descripcion='partes impares')
TODAS = PartitionClass(descripcion='todas las particiones')
DISTINTAS_PARES = PartitionClass(
    distinta=True, paridad=Paridad.TODAS_PARES, descripcion='partes distintas y pares'
)
DISTINTAS_IMPARES_MENOR_1 = PartitionClass(
    distinta=True, paridad=Paridad.TODAS_IMPARES, menor_parte_en=frozenset({1}),
    descripcion='partes impares distintas, la menor igual a 1'
)

RR1 = PartitionClass(distinta=True, brecha_minima=2, descripcion='diferencia >= 2')
RR2 = replace(RR1, parte_minima=2, descripcion='diferencia >= 2, partes > 1')
GG1 = PartitionClass(
    distinta=True, brecha_minima=2, sin_pares_consecutivos=True,
    descripcion='diferencia >= 2, sin pares consecutivos'
)
GG2 = replace(GG1, parte_minima=3, descripcion='diferencia >= 2, sin pares consecutivos, partes > 2')
DGG12 = replace(
    GG1, menor_parte_en=frozenset({1, 2}),
    descripcion='diferencia >= 2, sin pares consecutivos, menor parte 1 o 2'
)
LG1 = PartitionClass(
    distinta=True, brecha_minima=2, sin_impares_consecutivos=True,
    descripcion='diferencia >= 2, sin impares consecutivos'
)
LG2 = replace(LG1, parte_minima=2, descripcion='diferencia >= 2, sin impares consecutivos, sin 1')

IMPARES_DISTINTAS = PartitionClass(distinta=True, paridad=Paridad.TODAS_IMPARES)
PARES_DISTINTAS = PartitionClass(distinta=True, paridad=Paridad.TODAS_PARES)


def _sobre(base, *reglas, descripcion=''):
    return OverpartitionClass(base, tuple(reglas), descripcion)


SOBREPARTICIONES = _sobre(TODAS, OverlineRule(), descripcion='todas las sobreparticiones')
E_SOBRE = _sobre(
    PartitionClass(distinta=True, paridad=Paridad.ALTERNADA_DESDE_IMPAR),
    OverlineRule(cota=(1, 0)),
    descripcion='no rayadas distintas, menor impar, paridad alternada; rayadas <= r'
)
RR1_SOBRE = _sobre(
    IMPARES_DISTINTAS, OverlineRule(cota=(1, 0)),
    descripcion='no rayadas impares distintas; rayadas <= r'
)
RR1_ESTRELLA_SOBRE = _sobre(
    PARES_DISTINTAS, OverlineRule(cota=(1, 1)),
    descripcion='no rayadas pares distintas; rayadas <= r + 1'
)
RR2_SOBRE = _sobre(
    PARES_DISTINTAS, OverlineRule(cota=(1, 0)),
    descripcion='no rayadas pares distintas; rayadas <= r'
)
GG1_SOBRE = _sobre(
    IMPARES_DISTINTAS, OverlineRule(residuos=_impares(), cota=(2, -1)),
    descripcion='no rayadas impares distintas; rayadas impares <= 2r - 1'
)
GG2_SOBRE = _sobre(
    replace(IMPARES_DISTINTAS, parte_minima=3), OverlineRule(residuos=_impares(), cota=(2, -1)),
    descripcion='no rayadas impares distintas > 1; rayadas impares <= 2r - 1'
)
DGG12_SOBRE = _sobre(
    replace(IMPARES_DISTINTAS, debe_contener=frozenset({1})),
    OverlineRule(residuos=_impares(), cota=(2, -1)),
    descripcion='no rayadas impares distintas con 1; rayadas impares <= 2r - 1'
)
LG1_SOBRE = _sobre(
    PARES_DISTINTAS, OverlineRule(residuos=_impares(), cota=(2, 1)),
    descripcion='no rayadas pares distintas; rayadas impares <= 2r + 1'
)
LG2_SOBRE = _sobre(
    PARES_DISTINTAS, OverlineRule(residuos=_impares(), cota=(2, 0)),
    descripcion='no rayadas pares distintas; rayadas impares <= 2r'
)
SLATER121_SOBRE = _sobre(
    PartitionClass(paridad=Paridad.PATRON_SLATER121),
    OverlineRule(residuos=_pares(), cota=(2, -1)),
    descripcion='no rayadas l1 > l2 >= l3 > l4 >= ...; rayadas pares <= 2r - 1'
)


def clase_dk(k):
    """D_k: partes distintas y mayores o iguales que k"""
    return PartitionClass(distinta=True, parte_minima=k, descripcion=f'partes distintas >= {k}')


def clase_dk_sobre(k):
    """D̄_k: no rayadas distintas >= k; rayadas <= k - 1"""
    return _sobre(
        clase_dk(k), OverlineRule(cota=(0, k - 1)),
        descripcion=f'no rayadas distintas >= {k}; rayadas <= {k - 1}'
    )


def clase_lebesgue(alfa, beta):
    """
    Clase general con k = 4*alfa + beta: no rayadas pares distintas; rayadas
    >= k con la paridad de k y <= 2r + k - 2; rayadas < k congruentes con
    beta + 2 módulo 4.
    """
    k = 4 * alfa + beta
    reglas = [OverlineRule(minimo=k, residuos=(2, frozenset({k % 2})), cota=(2, k - 2))]
    if k > 1:
        reglas.append(OverlineRule(minimo=1, maximo=k - 1, residuos=(4, frozenset({(beta + 2) % 4}))))
    return _sobre(
        PARES_DISTINTAS, *reglas,
        descripcion=f'Lebesgue general alfa={alfa}, beta={beta} (k={k})'
    )


def clase_congruencia(modulo, residuos, distinta=False):
    residuos = frozenset(r % modulo for r in residuos)
    tipo = 'distintas ' if distinta else ''
    return PartitionClass(
        distinta=distinta, residuos=(modulo, residuos),
        descripcion=f'partes {tipo}congruentes con {sorted(residuos)} mod {modulo}'
    )


CLASES = {
    'all': TODAS,
    'over': SOBREPARTICIONES,
    'd': D,
    'odd': IMPARES,
    'distinct-even': DISTINTAS_PARES,
    'distinct-odd-least1': DISTINTAS_IMPARES_MENOR_1,
    'e-over': E_SOBRE,
    'rr1': RR1,
    'rr1-over': RR1_SOBRE,
    'rr1star-over': RR1_ESTRELLA_SOBRE,
    'rr2': RR2,
    'rr2-over': RR2_SOBRE,
    'gg1': GG1,
    'gg1-over': GG1_SOBRE,
    'gg2': GG2,
    'gg2-over': GG2_SOBRE,
    'dgg12': DGG12,
    'dgg12-over': DGG12_SOBRE,
    'lg1': LG1,
    'lg1-over': LG1_SOBRE,
    'lg2': LG2,
    'lg2-over': LG2_SOBRE,
    'slater121-over': SLATER121_SOBRE,
    'mod5:1,4': clase_congruencia(5, (1, 4)),
    'mod5:2,3': clase_congruencia(5, (2, 3)),
    'mod8:1,4,7': clase_congruencia(8, (1, 4, 7)),
    'mod8:3,4,5': clase_congruencia(8, (3, 4, 5)),
    'mod8:1,5,6': clase_congruencia(8, (1, 5, 6)),
    'mod8:2,3,7': clase_congruencia(8, (2, 3, 7)),
    'distinct-mod4:0,1,2': clase_congruencia(4, (0, 1, 2), distinta=True),
    'distinct-mod4:0,2,3': clase_congruencia(4, (0, 2, 3), distinta=True),
}

# Identificadores parametrizados
PATRONES = {
    'dk:k=K': re.compile(r'^dk:k=(\d+)$'),
    'dk-over:k=K': re.compile(r'^dk-over:k=(\d+)$'),
    'lebesgue:a=A,b=B': re.compile(r'^lebesgue:a=(\d+),b=(-?\d+)$'),
    'stembridge:VARIANTE': re.compile(r'^stembridge:(gg1|gg2|lg1|lg2)$'),
}


def ids_registrados():
    return sorted(CLASES) + sorted(PATRONES)


def es_clase_de_pares(clase_id):
    return PATRONES['stembridge:VARIANTE'].match(clase_id) is not None


def obtener_clase(clase_id):
    """
    Resuelve un identificador de clase.

    Returns:
        PartitionClass, OverpartitionClass o VarianteStembridge
    """
    if clase_id in CLASES:
        return CLASES[clase_id]

    coincidencia = PATRONES['dk:k=K'].match(clase_id)
    if coincidencia and int(coincidencia.group(1)) >= 1:
        return clase_dk(int(coincidencia.group(1)))

    coincidencia = PATRONES['dk-over:k=K'].match(clase_id)
    if coincidencia and int(coincidencia.group(1)) >= 1:
        return clase_dk_sobre(int(coincidencia.group(1)))

    coincidencia = PATRONES['lebesgue:a=A,b=B'].match(clase_id)
    if coincidencia:
        alfa, beta = int(coincidencia.group(1)), int(coincidencia.group(2))
        if beta in (-1, 0, 1, 2) and 4 * alfa + beta != 0:
            return clase_lebesgue(alfa, beta)

    coincidencia = PATRONES['stembridge:VARIANTE'].match(clase_id)
    if coincidencia:
        return VarianteStembridge(coincidencia.group(1))

    logger.debug(f"Clase no registrada: {clase_id}")
    raise ClaseDesconocida(clase_id, ids_registrados())


def contar_por_id(n, clase_id):
    """Conteo para cualquier identificador registrado, incluidos los pares"""
    clase = obtener_clase(clase_id)
    if isinstance(clase, VarianteStembridge):
        return contar_pares_stembridge(n, clase)
    return contar(n, clase)
