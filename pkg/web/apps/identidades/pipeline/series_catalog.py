"""
Catálogo de Series
Sumas y productos con nombre usados por las identidades y por los comandos coeff/oeis
"""

import re
from dataclasses import dataclass, field

from .logger import logger
from .series_engine import (
    ProductSpec,
    evaluar_producto,
    escalar,
    monomio,
    poch,
    poch_negativo,
    serie_nula,
    sumar,
    sumar_terminos,
    termino,
)


class SerieDesconocida(KeyError):
    def __init__(self, serie_id, registradas):
        super().__init__(serie_id)
        self.serie_id = serie_id
        self.registradas = registradas

    def __str__(self):
        return f"Serie desconocida {self.serie_id!r}. Registradas: {', '.join(self.registradas)}"


def _ninguno(n):
    return ()


@dataclass(frozen=True)
class FamiliaTerminos:
    """
    constante + escala * sum_{n >= inicio} q^exponente(n) * prod(numeradores(n)) / prod(denominadores(n))
    """
    exponente: object
    numeradores: object = _ninguno
    denominadores: object = _ninguno
    inicio: int = 0
    escala: int = 1
    constante: int = 0

    def serie(self, orden):
        def familia(n):
            return termino(
                orden, self.exponente(n), self.numeradores(n),
                self.denominadores(n), self.escala
            )

        total = sumar_terminos(familia, orden, self.inicio)
        if self.constante:
            total = sumar(total, monomio(self.constante, 0, orden))
        return total


@dataclass(frozen=True)
class CombinacionLineal:
    """sum c_i * S_i con coeficientes enteros"""
    sumandos: tuple = field(default_factory=tuple)  # ((coeficiente, definicion), ...)

    def serie(self, orden):
        total = serie_nula(orden)
        for coeficiente, definicion in self.sumandos:
            total = sumar(total, escalar(evaluar(definicion, orden), coeficiente))
        return total


@dataclass(frozen=True)
class SerieCatalogada:
    identificador: str
    descripcion: str
    definicion: object


def evaluar(definicion, orden):
    """Serie truncada en N para una definición del catálogo"""
    if isinstance(definicion, ProductSpec):
        return evaluar_producto(definicion, orden)
    return definicion.serie(orden)


# ========== DEFINICIONES ==========

def _triangular(n):
    return n * (n + 1) // 2


def suma_dk(k):
    """sum q^{kn + n(n-1)/2} / (q;q)_n"""
    return FamiliaTerminos(
        lambda n: k * n + n * (n - 1) // 2,
        denominadores=lambda n: (poch(1, 1, n),),
    )


def suma_dk_sobre(k):
    """sum q^{kn + n(n-1)/2} (-q;q)_{k-1} / (q;q)_n"""
    return FamiliaTerminos(
        lambda n: k * n + n * (n - 1) // 2,
        numeradores=lambda n: (poch_negativo(1, 1, k - 1),),
        denominadores=lambda n: (poch(1, 1, n),),
    )


def suma_lebesgue(alfa, beta):
    """sum q^{n(n+1)} (-q^k;q^2)_n (-q^{beta+2};q^4)_alfa / (q^2;q^2)_n con k = 4 alfa + beta"""
    k = 4 * alfa + beta
    return FamiliaTerminos(
        lambda n: n * (n + 1),
        numeradores=lambda n: (poch_negativo(k, 2, n), poch_negativo(beta + 2, 4, alfa)),
        denominadores=lambda n: (poch(2, 2, n),),
    )


def suma_lebesgue_alterna(alfa, beta):
    """sum q^{n(n+1)} (-q^{k-2};q^2)_{n+1} (-q^{beta+2};q^4)_{alfa-1} / (q^2;q^2)_n, alfa >= 1"""
    if alfa < 1:
        raise ValueError("La forma alterna requiere alfa >= 1")
    k = 4 * alfa + beta
    return FamiliaTerminos(
        lambda n: n * (n + 1),
        numeradores=lambda n: (poch_negativo(k - 2, 2, n + 1), poch_negativo(beta + 2, 4, alfa - 1)),
        denominadores=lambda n: (poch(2, 2, n),),
    )


def producto_lebesgue(beta):
    """(-q^2;q^2)_inf (-q^{beta+2};q^4)_inf"""
    return ProductSpec.de(directos=[poch_negativo(2, 2), poch_negativo(beta + 2, 4)])


def producto_lebesgue_casos(beta):
    """Lado derecho en forma de producto modular según beta"""
    if beta == -1:
        return ProductSpec.inverso_de_residuos(8, (1, 5, 6))
    if beta == 0:
        return ProductSpec.de(directos=[poch_negativo(2, 4)], inversos=[poch(2, 4)])
    if beta == 1:
        return ProductSpec.inverso_de_residuos(8, (2, 3, 7))
    if beta == 2:
        return ProductSpec.inverso_de_residuos(8, (2, 4, 6))
    raise ValueError(f"beta fuera de {{-1, 0, 1, 2}}: {beta}")


def producto_distintas(modulo, residuos):
    """prod (-q^r;q^m)_inf: partes distintas congruentes con `residuos`"""
    return ProductSpec.de(directos=[poch_negativo(r if r else modulo, modulo) for r in residuos])


# Euler y partes distintas
EULER_PRODUCTO = ProductSpec.de(directos=[poch_negativo(1, 1)])
IMPARES_PRODUCTO = ProductSpec.de(inversos=[poch(1, 2)])
D_SUMA = FamiliaTerminos(_triangular, denominadores=lambda n: (poch(1, 1, n),))
E_SUMA = FamiliaTerminos(
    _triangular,
    numeradores=lambda n: (poch_negativo(1, 1, n),),
    denominadores=lambda n: (poch(2, 2, n),),
)
PARES_DISTINTAS_PRODUCTO = ProductSpec.de(directos=[poch_negativo(2, 2)])

# Rogers-Ramanujan
RR1_SUMA = FamiliaTerminos(lambda n: n * n, denominadores=lambda n: (poch(1, 1, n),))
RR2_SUMA = FamiliaTerminos(lambda n: n * n + n, denominadores=lambda n: (poch(1, 1, n),))
RR1_CON_UNO = FamiliaTerminos(lambda n: n * n + 2 * n + 1, denominadores=lambda n: (poch(1, 1, n),))
RR1_SOBRE_SUMA = FamiliaTerminos(
    lambda n: n * n,
    numeradores=lambda n: (poch_negativo(1, 1, n),),
    denominadores=lambda n: (poch(2, 2, n),),
)
RR1_ESTRELLA_SUMA = FamiliaTerminos(
    lambda n: n * n + n,
    numeradores=lambda n: (poch_negativo(1, 1, n + 1),),
    denominadores=lambda n: (poch(2, 2, n),),
)
RR2_SOBRE_SUMA = FamiliaTerminos(
    lambda n: n * n + n,
    numeradores=lambda n: (poch_negativo(1, 1, n),),
    denominadores=lambda n: (poch(2, 2, n),),
)
RR1_SEPARADA = CombinacionLineal(((1, RR2_SUMA), (1, RR1_CON_UNO)))
RR2_DIFERENCIA = CombinacionLineal(((1, RR1_SUMA), (-1, RR1_CON_UNO)))
RR2_IMPAR_SUMA = FamiliaTerminos(
    lambda n: n * n,
    numeradores=lambda n: (poch_negativo(1, 1, n), poch(1, 2, n + 1)),
    denominadores=lambda n: (poch(1, 1, 2 * n),),
)

# Serie auxiliar tabulada como A027349
A027349_SUMA = FamiliaTerminos(
    lambda n: n * n,
    numeradores=lambda n: (poch(1, 2, n + 1),),
    denominadores=lambda n: (poch(1, 1, 2 * n),),
)
A027349_DESPLAZADA = FamiliaTerminos(
    lambda n: n * n + 2 * n,
    numeradores=lambda n: (poch(1, 2, n),),
    denominadores=lambda n: (poch(1, 1, 2 * n),),
)
IMPARES_MENOR_UNO_SUMA = FamiliaTerminos(
    lambda n: n * n + 2 * n + 1, denominadores=lambda n: (poch(2, 2, n),)
)
IMPARES_MENOR_UNO_ALTERNA = FamiliaTerminos(
    lambda n: n * n + 2 * n + 1,
    numeradores=lambda n: (poch(1, 2, n),),
    denominadores=lambda n: (poch(1, 1, 2 * n),),
)

# Göllnitz-Gordon
GG1_SUMA = FamiliaTerminos(
    lambda n: n * n,
    numeradores=lambda n: (poch_negativo(1, 2, n),),
    denominadores=lambda n: (poch(2, 2, n),),
)
GG2_SUMA = FamiliaTerminos(
    lambda n: n * n + 2 * n,
    numeradores=lambda n: (poch_negativo(1, 2, n),),
    denominadores=lambda n: (poch(2, 2, n),),
)
DGG12_DIFERENCIA = CombinacionLineal(((1, GG1_SUMA), (-1, GG2_SUMA)))
DGG12_SUMA = FamiliaTerminos(
    lambda n: n * n,
    numeradores=lambda n: (poch_negativo(1, 2, n),),
    denominadores=lambda n: (poch(2, 2, n - 1),),
    inicio=1,
)

# Little Göllnitz
LG1_LAURENT = FamiliaTerminos(
    lambda n: n * (n + 1),
    numeradores=lambda n: (poch_negativo(-1, 2, n),),
    denominadores=lambda n: (poch(2, 2, n),),
)
LG1_SUMA = FamiliaTerminos(
    lambda n: n * (n + 1),
    numeradores=lambda n: (poch_negativo(1, 2, n + 1),),
    denominadores=lambda n: (poch(2, 2, n),),
)
LG2_SUMA = FamiliaTerminos(
    lambda n: n * n + n,
    numeradores=lambda n: (poch_negativo(1, 2, n),),
    denominadores=lambda n: (poch(2, 2, n),),
)

# Caso k = 0 de la familia de Lebesgue
LEBESGUE_CERO_SUMA = suma_lebesgue(0, 0)
LEBESGUE_CERO_MITAD = FamiliaTerminos(
    lambda n: n * (n + 1),
    numeradores=lambda n: (poch_negativo(2, 2, n - 1),),
    denominadores=lambda n: (poch(2, 2, n),),
    inicio=1,
)
LEBESGUE_CERO_DOBLE = FamiliaTerminos(
    lambda n: n * (n + 1),
    numeradores=lambda n: (poch_negativo(2, 2, n - 1),),
    denominadores=lambda n: (poch(2, 2, n),),
    inicio=1,
    escala=2,
    constante=1,
)

# q-Gauss
HGL1_SUMA = FamiliaTerminos(
    lambda n: 2 * n * n - n,
    numeradores=lambda n: (poch_negativo(1, 4, n),),
    denominadores=lambda n: (poch(2, 2, 2 * n),),
)
HGL2_SUMA = FamiliaTerminos(
    lambda n: 2 * n * n + n,
    numeradores=lambda n: (poch_negativo(-1, 4, n),),
    denominadores=lambda n: (poch(2, 2, 2 * n),),
)
HGL3_SUMA = FamiliaTerminos(
    lambda n: 2 * n * n,
    numeradores=lambda n: (poch_negativo(0, 4, n),),
    denominadores=lambda n: (poch(2, 2, 2 * n),),
)
HGL4_SUMA = FamiliaTerminos(
    lambda n: 2 * n * n + 2 * n,
    numeradores=lambda n: (poch_negativo(-2, 4, n),),
    denominadores=lambda n: (poch(2, 2, 2 * n),),
)
HGL5_SUMA = FamiliaTerminos(
    lambda n: 2 * n * n,
    numeradores=lambda n: (poch_negativo(2, 4, n),),
    denominadores=lambda n: (poch(4, 4, n), poch(4, 4, n)),
)
HGL5_PRODUCTO = ProductSpec.inverso_de_residuos(8, (2, 6, 0))

# Slater
SLATER47_SUMA = FamiliaTerminos(
    lambda n: n * n,
    numeradores=lambda n: (poch_negativo(0, 2, n),),
    denominadores=lambda n: (poch(1, 1, 2 * n),),
)
SLATER47_PRODUCTO = ProductSpec.de(directos=[poch_negativo(1, 2)], inversos=[poch(1, 2)])
SLATER47_PRODUCTO_LARGO = ProductSpec.de(
    directos=[poch_negativo(1, 2), poch(2, 8), poch(6, 8), poch(4, 4)],
    inversos=[poch(1, 1)],
)
# El término n = 0 se toma igual a 1
SLATER121_SUMA = FamiliaTerminos(
    lambda n: n * n,
    numeradores=lambda n: (poch_negativo(2, 2, n - 1),),
    denominadores=lambda n: (poch(1, 1, 2 * n),),
    inicio=1,
    constante=1,
)
SLATER121_PRODUCTO = ProductSpec.de(
    directos=[poch(2, 16), poch(14, 16), poch(16, 16), poch(12, 32), poch(20, 32)],
    inversos=[poch(1, 1)],
)
SLATER121_PRODUCTO_32 = ProductSpec.de(
    directos=[poch(r, 32) for r in (2, 12, 14, 16, 18, 20, 30, 32)],
    inversos=[poch(1, 1)],
)


CATALOGO = {
    s.identificador: s for s in (
        SerieCatalogada('euler-producto', '(-q;q)_inf', EULER_PRODUCTO),
        SerieCatalogada('impares-producto', '1/(q;q^2)_inf', IMPARES_PRODUCTO),
        SerieCatalogada('d-suma', 'sum q^{n(n+1)/2}/(q;q)_n', D_SUMA),
        SerieCatalogada('e-suma', 'sum q^{n(n+1)/2}(-q;q)_n/(q^2;q^2)_n', E_SUMA),
        SerieCatalogada('pares-distintas-producto', '(-q^2;q^2)_inf', PARES_DISTINTAS_PRODUCTO),
        SerieCatalogada('rr1-suma', 'sum q^{n^2}/(q;q)_n', RR1_SUMA),
        SerieCatalogada('rr1-over-suma', 'sum q^{n^2}(-q;q)_n/(q^2;q^2)_n', RR1_SOBRE_SUMA),
        SerieCatalogada('rr1star-over-suma', 'sum q^{n^2+n}(-q;q)_{n+1}/(q^2;q^2)_n', RR1_ESTRELLA_SUMA),
        SerieCatalogada(
            'rr1-separada', 'sum q^{n^2+n}/(q;q)_n + sum q^{n^2+2n+1}/(q;q)_n', RR1_SEPARADA
        ),
        SerieCatalogada('rr2-suma', 'sum q^{n^2+n}/(q;q)_n', RR2_SUMA),
        SerieCatalogada('rr2-over-suma', 'sum q^{n^2+n}(-q;q)_n/(q^2;q^2)_n', RR2_SOBRE_SUMA),
        SerieCatalogada(
            'rr2-diferencia', 'sum q^{n^2}/(q;q)_n - sum q^{n^2+2n+1}/(q;q)_n', RR2_DIFERENCIA
        ),
        SerieCatalogada(
            'rr2-impar-suma', 'sum q^{n^2}(-q;q)_n(q;q^2)_{n+1}/(q;q)_{2n}', RR2_IMPAR_SUMA
        ),
        SerieCatalogada('mod5:1,4', '1/(q,q^4;q^5)_inf', ProductSpec.inverso_de_residuos(5, (1, 4))),
        SerieCatalogada('mod5:2,3', '1/(q^2,q^3;q^5)_inf', ProductSpec.inverso_de_residuos(5, (2, 3))),
        SerieCatalogada('a027349-suma', 'sum q^{n^2}(q;q^2)_{n+1}/(q;q)_{2n}', A027349_SUMA),
        SerieCatalogada(
            'a027349-desplazada', 'sum q^{n^2+2n}(q;q^2)_n/(q;q)_{2n}', A027349_DESPLAZADA
        ),
        SerieCatalogada(
            'impares-menor1-suma', 'sum q^{n^2+2n+1}/(q^2;q^2)_n', IMPARES_MENOR_UNO_SUMA
        ),
        SerieCatalogada(
            'impares-menor1-alterna', 'sum q^{n^2+2n+1}(q;q^2)_n/(q;q)_{2n}',
            IMPARES_MENOR_UNO_ALTERNA
        ),
        SerieCatalogada('gg1-suma', 'sum q^{n^2}(-q;q^2)_n/(q^2;q^2)_n', GG1_SUMA),
        SerieCatalogada('gg2-suma', 'sum q^{n^2+2n}(-q;q^2)_n/(q^2;q^2)_n', GG2_SUMA),
        SerieCatalogada('dgg12-diferencia', 'gg1-suma - gg2-suma', DGG12_DIFERENCIA),
        SerieCatalogada(
            'dgg12-suma', 'sum_{n>=1} q^{n^2}(-q;q^2)_n/(q^2;q^2)_{n-1}', DGG12_SUMA
        ),
        SerieCatalogada(
            'mod8:1,4,7', '1/(q,q^4,q^7;q^8)_inf', ProductSpec.inverso_de_residuos(8, (1, 4, 7))
        ),
        SerieCatalogada(
            'mod8:3,4,5', '1/(q^3,q^4,q^5;q^8)_inf', ProductSpec.inverso_de_residuos(8, (3, 4, 5))
        ),
        SerieCatalogada(
            'mod8:1,5,6', '1/(q,q^5,q^6;q^8)_inf', ProductSpec.inverso_de_residuos(8, (1, 5, 6))
        ),
        SerieCatalogada(
            'mod8:2,3,7', '1/(q^2,q^3,q^7;q^8)_inf', ProductSpec.inverso_de_residuos(8, (2, 3, 7))
        ),
        SerieCatalogada(
            'lg1-laurent', 'sum q^{n(n+1)}(-q^{-1};q^2)_n/(q^2;q^2)_n', LG1_LAURENT
        ),
        SerieCatalogada('lg1-suma', 'sum q^{n(n+1)}(-q;q^2)_{n+1}/(q^2;q^2)_n', LG1_SUMA),
        SerieCatalogada('lg1-producto', '(-q^2;q^2)_inf(-q;q^4)_inf', producto_lebesgue(-1)),
        SerieCatalogada('lg2-suma', 'sum q^{n^2+n}(-q;q^2)_n/(q^2;q^2)_n', LG2_SUMA),
        SerieCatalogada('lg2-producto', '(-q^2;q^2)_inf(-q^3;q^4)_inf', producto_lebesgue(1)),
        SerieCatalogada(
            'distinct-mod4:0,1,2', '(-q,-q^2,-q^4;q^4)_inf', producto_distintas(4, (1, 2, 0))
        ),
        SerieCatalogada(
            'distinct-mod4:0,2,3', '(-q^2,-q^3,-q^4;q^4)_inf', producto_distintas(4, (2, 3, 0))
        ),
        SerieCatalogada(
            'lebesgue-cero-suma', 'sum q^{n(n+1)}(-1;q^2)_n/(q^2;q^2)_n', LEBESGUE_CERO_SUMA
        ),
        SerieCatalogada(
            'lebesgue-cero-mitad', 'sum_{n>=1} q^{n(n+1)}(-q^2;q^2)_{n-1}/(q^2;q^2)_n',
            LEBESGUE_CERO_MITAD
        ),
        SerieCatalogada(
            'lebesgue-cero-doble', '1 + 2 sum_{n>=1} q^{n(n+1)}(-q^2;q^2)_{n-1}/(q^2;q^2)_n',
            LEBESGUE_CERO_DOBLE
        ),
        SerieCatalogada('hgl1-suma', 'sum q^{2n^2-n}(-q;q^4)_n/(q^2;q^2)_{2n}', HGL1_SUMA),
        SerieCatalogada('hgl2-suma', 'sum q^{2n^2+n}(-q^{-1};q^4)_n/(q^2;q^2)_{2n}', HGL2_SUMA),
        SerieCatalogada('hgl3-suma', 'sum q^{2n^2}(-1;q^4)_n/(q^2;q^2)_{2n}', HGL3_SUMA),
        SerieCatalogada('hgl4-suma', 'sum q^{2n^2+2n}(-q^{-2};q^4)_n/(q^2;q^2)_{2n}', HGL4_SUMA),
        SerieCatalogada('hgl5-suma', 'sum q^{2n^2}(-q^2;q^4)_n/(q^4;q^4)_n^2', HGL5_SUMA),
        SerieCatalogada('hgl5-producto', '1/(q^2,q^6,q^8;q^8)_inf', HGL5_PRODUCTO),
        SerieCatalogada('slater47-suma', 'sum q^{n^2}(-1;q^2)_n/(q;q)_{2n}', SLATER47_SUMA),
        SerieCatalogada('slater47-producto', '(-q;q^2)_inf/(q;q^2)_inf', SLATER47_PRODUCTO),
        SerieCatalogada(
            'slater47-producto-largo', '(-q;q^2)_inf(q^2,q^6;q^8)_inf(q^4;q^4)_inf/(q;q)_inf',
            SLATER47_PRODUCTO_LARGO
        ),
        SerieCatalogada(
            'slater121-suma', '1 + sum_{n>=1} q^{n^2}(-q^2;q^2)_{n-1}/(q;q)_{2n}', SLATER121_SUMA
        ),
        SerieCatalogada(
            'slater121-producto', '(q^2,q^14,q^16;q^16)_inf(q^12,q^20;q^32)_inf/(q;q)_inf',
            SLATER121_PRODUCTO
        ),
        SerieCatalogada(
            'slater121-producto-32', '(q^2,q^12,q^14,q^16,q^18,q^20,q^30,q^32;q^32)_inf/(q;q)_inf',
            SLATER121_PRODUCTO_32
        ),
    )
}

PATRONES = {
    'dk-suma:k=K': re.compile(r'^dk-suma:k=(\d+)$'),
    'dk-over-suma:k=K': re.compile(r'^dk-over-suma:k=(\d+)$'),
    'lebesgue-suma:a=A,b=B': re.compile(r'^lebesgue-suma:a=(\d+),b=(-?\d+)$'),
    'lebesgue-alterna:a=A,b=B': re.compile(r'^lebesgue-alterna:a=(\d+),b=(-?\d+)$'),
    'lebesgue-producto:b=B': re.compile(r'^lebesgue-producto:b=(-?\d+)$'),
    'lebesgue-casos:b=B': re.compile(r'^lebesgue-casos:b=(-?\d+)$'),
}

BETAS = (-1, 0, 1, 2)


def ids_registrados():
    return sorted(CATALOGO) + sorted(PATRONES)


def _parametrizada(serie_id):
    coincidencia = PATRONES['dk-suma:k=K'].match(serie_id)
    if coincidencia and int(coincidencia.group(1)) >= 1:
        k = int(coincidencia.group(1))
        return SerieCatalogada(serie_id, f'sum q^{{{k}n+n(n-1)/2}}/(q;q)_n', suma_dk(k))

    coincidencia = PATRONES['dk-over-suma:k=K'].match(serie_id)
    if coincidencia and int(coincidencia.group(1)) >= 1:
        k = int(coincidencia.group(1))
        return SerieCatalogada(
            serie_id, f'sum q^{{{k}n+n(n-1)/2}}(-q;q)_{{{k - 1}}}/(q;q)_n', suma_dk_sobre(k)
        )

    for patron, constructor, alfa_minimo in (
        ('lebesgue-suma:a=A,b=B', suma_lebesgue, 0),
        ('lebesgue-alterna:a=A,b=B', suma_lebesgue_alterna, 1),
    ):
        coincidencia = PATRONES[patron].match(serie_id)
        if coincidencia:
            alfa, beta = int(coincidencia.group(1)), int(coincidencia.group(2))
            if beta in BETAS and alfa >= alfa_minimo:
                return SerieCatalogada(
                    serie_id, f'Lebesgue alfa={alfa}, beta={beta}', constructor(alfa, beta)
                )

    for patron, constructor in (
        ('lebesgue-producto:b=B', producto_lebesgue),
        ('lebesgue-casos:b=B', producto_lebesgue_casos),
    ):
        coincidencia = PATRONES[patron].match(serie_id)
        if coincidencia and int(coincidencia.group(1)) in BETAS:
            beta = int(coincidencia.group(1))
            return SerieCatalogada(serie_id, f'producto de Lebesgue beta={beta}', constructor(beta))
    return None


def obtener_serie(serie_id):
    """Entrada del catálogo, incluidas las parametrizadas"""
    if serie_id in CATALOGO:
        return CATALOGO[serie_id]
    serie = _parametrizada(serie_id)
    if serie is None:
        logger.debug(f"Serie no registrada: {serie_id}")
        raise SerieDesconocida(serie_id, ids_registrados())
    return serie


def calcular_serie(serie_id, orden):
    """La serie `serie_id` truncada en N"""
    return evaluar(obtener_serie(serie_id).definicion, orden)
