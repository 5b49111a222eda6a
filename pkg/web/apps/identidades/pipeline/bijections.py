"""
Módulo de Biyecciones
Biyecciones f (tipo Euler), h (tipo Rogers-Ramanujan) y g (tipo Göllnitz-Gordon)
con sus inversas
"""

from dataclasses import dataclass
from enum import Enum

from . import enumerators as clases
from .logger import logger
from .partition_core import (
    Overpartition,
    Partition,
    conjugada,
    suma_puntual,
    t_de_binaria,
)


class ErrorFueraDeClase(ValueError):
    """La entrada no pertenece a la clase de origen o de destino del mapa"""


class ErrorInvarianteBiyeccion(RuntimeError):
    """Una propiedad interna de h o g no se cumplió"""


class MapaDesconocido(KeyError):
    def __init__(self, mapa_id, registrados):
        super().__init__(mapa_id)
        self.mapa_id = mapa_id
        self.registrados = registrados

    def __str__(self):
        return f"Mapa desconocido {self.mapa_id!r}. Registrados: {', '.join(self.registrados)}"


class VarianteH(Enum):
    OE = 'oe'   # salida con no rayadas impares (RR̄1)
    EO = 'eo'   # salida con no rayadas pares (RR̄1*, RR̄2)


class VarianteG(Enum):
    GG = 'gg'   # T(x) = 1 si x es par
    LG = 'lg'   # T(x) = 1 si x es impar


def _exigir(clase, objeto, mensaje):
    if not clase.admite(objeto):
        raise ErrorFueraDeClase(f"{mensaje}: {objeto}")


def _sin_ceros(valores):
    return Partition(tuple(v for v in valores if v))


# ========== f: PARTES DISTINTAS → Ē ==========

def mapa_f(particion):
    """
    f(λ) para λ con partes distintas.

    Si λ ya tiene la forma de las no rayadas de Ē (menor parte impar y
    paridad alternada) se devuelve sin cambios; en ese caso A es nula y la
    ruta general da el mismo resultado.
    """
    _exigir(clases.D, particion, "f requiere partes distintas")
    sin_rayadas = Overpartition(particion)
    if clases.E_SOBRE.admite(sin_rayadas):
        logger.incrementar_stat('biyecciones_aplicadas')
        return sin_rayadas
    return _f_por_binaria(particion)


def _f_por_binaria(particion):
    """
    Ruta general de f sobre la vista creciente: A = (λ - B) mod 2 con
    B = (1,0,1,0,...), no rayadas λ - t(A) y rayadas la conjugada de t(A).
    """
    if not particion.partes:
        return Overpartition()

    creciente = particion.creciente
    bits = [(p - (1 if j % 2 == 0 else 0)) % 2 for j, p in enumerate(creciente)]
    t = t_de_binaria(bits)

    no_rayadas = _sin_ceros(sorted((p - s for p, s in zip(creciente, t)), reverse=True))
    rayadas = conjugada(Partition(tuple(sorted((s for s in t if s), reverse=True))))
    logger.incrementar_stat('biyecciones_aplicadas')
    return Overpartition(no_rayadas, rayadas.partes)


def inversa_f(sobreparticion):
    """f^{-1}(γ) = U + V' con V' completada con ceros en el extremo menor"""
    _exigir(clases.E_SOBRE, sobreparticion, "f^{-1} requiere una sobrepartición de Ē")
    v_conjugada = conjugada(Partition(sobreparticion.rayadas))
    particion = suma_puntual(sobreparticion.no_rayadas.partes, v_conjugada)
    _verificar_preimagen(particion, sobreparticion, mapa_f, clases.D)
    return particion


# ========== h: RR1 → RR̄1 / RR̄1* ==========

def _paridad_incorrecta(valor, variante):
    if variante is VarianteH.OE:
        return valor % 2 == 0
    return valor % 2 == 1


def _es_par_impulsor(mayor, menor, variante):
    # OE: (impar, par); EO: (par, impar), leídos en orden decreciente
    if variante is VarianteH.OE:
        return mayor % 2 == 1 and menor % 2 == 0
    return mayor % 2 == 0 and menor % 2 == 1


def mapa_h(particion, variante):
    """
    h(λ) para λ con diferencia >= 2 entre partes adyacentes.

    ℓ_j cuenta los pares adyacentes (λ_i, λ_{i+1}) con i >= j del tipo de la
    variante; π_j = λ_j - 2ℓ_j - (1 si λ_j tiene la paridad incorrecta).
    Las no rayadas son π sin ceros y las rayadas la conjugada de v* = λ - π.
    """
    variante = VarianteH(variante)
    _exigir(clases.RR1, particion, "h requiere diferencia >= 2 entre partes")
    partes = particion.partes
    k = len(partes)

    ell = [0] * k
    acumulado = 0
    for j in range(k - 1, -1, -1):
        if j < k - 1 and _es_par_impulsor(partes[j], partes[j + 1], variante):
            acumulado += 1
        ell[j] = acumulado

    pi = [
        p - 2 * l - (1 if _paridad_incorrecta(p, variante) else 0)
        for p, l in zip(partes, ell)
    ]
    v_estrella = [p - x for p, x in zip(partes, pi)]

    if any(a < b for a, b in zip(v_estrella, v_estrella[1:])) or min(v_estrella, default=0) < 0:
        raise ErrorInvarianteBiyeccion(f"v* no es débilmente decreciente: {v_estrella}")

    no_rayadas = _sin_ceros(pi)
    rayadas = conjugada(_sin_ceros(v_estrella))
    holgura = 0 if variante is VarianteH.OE else 1
    if not rayadas.es_distinta() or rayadas.mayor > len(no_rayadas) + holgura:
        raise ErrorInvarianteBiyeccion(
            f"Conjugada de v* fuera de cota: {rayadas} con r={len(no_rayadas)}"
        )

    logger.incrementar_stat('biyecciones_aplicadas')
    return Overpartition(no_rayadas, rayadas.partes)


def inversa_h(sobreparticion, variante):
    """
    h^{-1}(π) = U + V'. En la variante EO, si la mayor rayada supera r se
    restituye la parte nula descartada por h.
    """
    variante = VarianteH(variante)
    destino = clases.RR1_SOBRE if variante is VarianteH.OE else clases.RR1_ESTRELLA_SOBRE
    _exigir(destino, sobreparticion, f"h^{{-1}} ({variante.value}) fuera de la clase de destino")

    u = list(sobreparticion.no_rayadas.partes)
    mayor_rayada = sobreparticion.rayadas[0] if sobreparticion.rayadas else 0
    if variante is VarianteH.EO and mayor_rayada > len(u):
        u.append(0)

    particion = suma_puntual(u, conjugada(Partition(sobreparticion.rayadas)))
    _verificar_preimagen(particion, sobreparticion, lambda p: mapa_h(p, variante), clases.RR1)
    return particion


# ========== g: GG1 → GḠ1 / LG1 → LḠ1 ==========

def _t_paridad(valor, variante):
    if variante is VarianteG.GG:
        return 1 if valor % 2 == 0 else 0
    return 1 if valor % 2 == 1 else 0


def _clase_origen_g(variante):
    return clases.GG1 if variante is VarianteG.GG else clases.LG1


def mapa_g(particion, variante):
    """
    g(λ): τ_j = λ_j - T(λ_j) - 2·Σ_{i>j} T(λ_i) y la parte rayada 2j - 1
    para cada j con T(λ_j) = 1.
    """
    variante = VarianteG(variante)
    _exigir(_clase_origen_g(variante), particion, f"g ({variante.value}) fuera de la clase de origen")
    partes = particion.partes

    t = [_t_paridad(p, variante) for p in partes]
    tau = []
    posteriores = 0
    for j in range(len(partes) - 1, -1, -1):
        tau.append(partes[j] - t[j] - 2 * posteriores)
        posteriores += t[j]
    tau.reverse()

    no_rayadas = _sin_ceros(tau)
    paridad = 1 if variante is VarianteG.GG else 0
    if not no_rayadas.es_distinta() or any(p % 2 != paridad for p in no_rayadas):
        raise ErrorInvarianteBiyeccion(f"τ sin paridad uniforme o no estricto: {tau}")

    rayadas = tuple(2 * j - 1 for j in range(len(partes), 0, -1) if t[j - 1])
    logger.incrementar_stat('biyecciones_aplicadas')
    return Overpartition(no_rayadas, rayadas)


def inversa_g(sobreparticion, variante):
    """
    g^{-1}(τ): λ_j = τ_j + v_j + 2·Σ_{i>j} v_i con v_j = 1 si 2j - 1 está
    rayada. En la variante LG, si la mayor rayada es 2r' + 1 se restituye la
    parte nula descartada.
    """
    variante = VarianteG(variante)
    destino = clases.GG1_SOBRE if variante is VarianteG.GG else clases.LG1_SOBRE
    _exigir(destino, sobreparticion, f"g^{{-1}} ({variante.value}) fuera de la clase de destino")

    tau = list(sobreparticion.no_rayadas.partes)
    rayadas = set(sobreparticion.rayadas)
    if variante is VarianteG.LG and 2 * len(tau) + 1 in rayadas:
        tau.append(0)

    if any(v > 2 * len(tau) - 1 for v in rayadas):
        raise ErrorFueraDeClase(f"Parte rayada sin posición correspondiente: {sobreparticion}")

    v = [1 if 2 * j - 1 in rayadas else 0 for j in range(1, len(tau) + 1)]
    valores = []
    posteriores = 0
    for j in range(len(tau) - 1, -1, -1):
        valores.append(tau[j] + v[j] + 2 * posteriores)
        posteriores += v[j]

    particion = Partition.desde_secuencia(valores)
    _verificar_preimagen(
        particion, sobreparticion, lambda p: mapa_g(p, variante), _clase_origen_g(variante)
    )
    return particion


def _verificar_preimagen(particion, sobreparticion, directa, origen):
    """La preimagen calculada debe estar en el origen y volver a la entrada"""
    if not origen.admite(particion) or directa(particion) != sobreparticion:
        raise ErrorFueraDeClase(f"{sobreparticion} no está en la imagen del mapa")
    logger.incrementar_stat('biyecciones_aplicadas')


# ========== REGISTRO DE MAPAS ==========

@dataclass(frozen=True)
class Mapa:
    identificador: str
    directa: object
    inversa: object
    origen: str
    destino: str
    descripcion: str = ''


MAPAS = {
    'f': Mapa('f', mapa_f, inversa_f, 'd', 'e-over', 'partes distintas → Ē'),
    'h-oe': Mapa(
        'h-oe', lambda p: mapa_h(p, VarianteH.OE), lambda s: inversa_h(s, VarianteH.OE),
        'rr1', 'rr1-over', 'RR1 → RR̄1'
    ),
    'h-eo': Mapa(
        'h-eo', lambda p: mapa_h(p, VarianteH.EO), lambda s: inversa_h(s, VarianteH.EO),
        'rr1', 'rr1star-over', 'RR1 → RR̄1*'
    ),
    'g-gg': Mapa(
        'g-gg', lambda p: mapa_g(p, VarianteG.GG), lambda s: inversa_g(s, VarianteG.GG),
        'gg1', 'gg1-over', 'GG1 → GḠ1'
    ),
    'g-lg': Mapa(
        'g-lg', lambda p: mapa_g(p, VarianteG.LG), lambda s: inversa_g(s, VarianteG.LG),
        'lg1', 'lg1-over', 'LG1 → LḠ1'
    ),
}


def obtener_mapa(mapa_id):
    try:
        return MAPAS[mapa_id]
    except KeyError:
        raise MapaDesconocido(mapa_id, sorted(MAPAS)) from None


def aplicar_mapa(mapa_id, objeto, inversa=False):
    """
    Aplica un mapa registrado.

    Args:
        mapa_id: 'f', 'h-oe', 'h-eo', 'g-gg' o 'g-lg'
        objeto: Partition (directa) u Overpartition (inversa)
        inversa: aplicar la inversa
    """
    mapa = obtener_mapa(mapa_id)
    if inversa:
        if not isinstance(objeto, Overpartition):
            objeto = Overpartition(objeto)
        return mapa.inversa(objeto)
    if isinstance(objeto, Overpartition):
        if objeto.rayadas:
            raise ErrorFueraDeClase(f"El mapa {mapa_id} espera una partición sin rayas: {objeto}")
        objeto = objeto.no_rayadas
    return mapa.directa(objeto)
