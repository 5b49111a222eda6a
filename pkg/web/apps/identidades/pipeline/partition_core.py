"""
Módulo de Particiones
Particiones, sobreparticiones, conjugadas, símbolos de Frobenius y sintaxis textual
"""

from dataclasses import dataclass

from . import config


class ErrorFormatoParticion(ValueError):
    """Cadena de partición mal formada; `posicion` es la columna (1-based)"""

    def __init__(self, mensaje, posicion):
        super().__init__(f"{mensaje} (posición {posicion})")
        self.posicion = posicion


@dataclass(frozen=True)
class Partition:
    """Sucesión débilmente decreciente de enteros positivos"""
    partes: tuple = ()

    def __post_init__(self):
        partes = tuple(self.partes)
        object.__setattr__(self, 'partes', partes)
        for i, p in enumerate(partes):
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"Parte no positiva en la posición {i}: {p!r}")
            if i and partes[i - 1] < p:
                raise ValueError(f"Partes no decrecientes: {partes}")

    @classmethod
    def desde_secuencia(cls, valores):
        """Forma canónica: ordena de mayor a menor y descarta los ceros"""
        valores = list(valores)
        if any(v < 0 for v in valores):
            raise ValueError(f"Parte negativa en {valores}")
        return cls(tuple(sorted((v for v in valores if v), reverse=True)))

    @property
    def peso(self):
        return sum(self.partes)

    @property
    def mayor(self):
        """Parte más grande (0 para la partición vacía)"""
        return self.partes[0] if self.partes else 0

    @property
    def menor(self):
        return self.partes[-1] if self.partes else 0

    @property
    def creciente(self):
        """Vista de menor a mayor"""
        return tuple(reversed(self.partes))

    def es_distinta(self):
        return all(a > b for a, b in zip(self.partes, self.partes[1:]))

    def __len__(self):
        return len(self.partes)

    def __iter__(self):
        return iter(self.partes)

    def __str__(self):
        return formatear(self)


@dataclass(frozen=True)
class Overpartition:
    """Partición de partes no rayadas más un conjunto de magnitudes rayadas"""
    no_rayadas: Partition = Partition()
    rayadas: tuple = ()

    def __post_init__(self):
        if not isinstance(self.no_rayadas, Partition):
            object.__setattr__(self, 'no_rayadas', Partition(tuple(self.no_rayadas)))
        rayadas = tuple(self.rayadas)
        object.__setattr__(self, 'rayadas', rayadas)
        for i, p in enumerate(rayadas):
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"Parte rayada no positiva: {p!r}")
            if i and rayadas[i - 1] <= p:
                raise ValueError(f"Partes rayadas no estrictamente decrecientes: {rayadas}")

    @classmethod
    def desde_partes(cls, no_rayadas=(), rayadas=()):
        return cls(
            Partition.desde_secuencia(no_rayadas),
            tuple(sorted(set(rayadas), reverse=True)),
        )

    @property
    def peso(self):
        return self.no_rayadas.peso + sum(self.rayadas)

    @property
    def r(self):
        """Número de partes no rayadas"""
        return len(self.no_rayadas)

    def __str__(self):
        return formatear(self)


@dataclass(frozen=True)
class FrobeniusSymbol:
    """Arreglo (a_1 > ... > a_d ; b_1 > ... > b_d) a lo largo de la diagonal"""
    superior: tuple = ()
    inferior: tuple = ()

    def __post_init__(self):
        superior, inferior = tuple(self.superior), tuple(self.inferior)
        object.__setattr__(self, 'superior', superior)
        object.__setattr__(self, 'inferior', inferior)
        if len(superior) != len(inferior):
            raise ValueError("Las filas del símbolo de Frobenius deben tener igual longitud")
        for fila in (superior, inferior):
            if any(v < 0 for v in fila):
                raise ValueError(f"Entrada negativa en {fila}")
            if any(a <= b for a, b in zip(fila, fila[1:])):
                raise ValueError(f"Fila no estrictamente decreciente: {fila}")

    @property
    def d(self):
        return len(self.superior)

    @property
    def peso(self):
        return self.d + sum(self.superior) + sum(self.inferior)


# ========== OPERACIONES ==========

def peso(objeto):
    """Suma de las partes de una partición o sobrepartición"""
    return objeto.peso


def conjugada(particion):
    """Transpuesta del diagrama de Ferrers: l'_i = #{j : l_j >= i}"""
    partes = particion.partes
    return Partition(tuple(
        sum(1 for p in partes if p >= i) for i in range(1, particion.mayor + 1)
    ))


def diagonal(particion):
    """d(l) = número de partes l_j con l_j >= j"""
    return sum(1 for j, p in enumerate(particion.partes, 1) if p >= j)


def frobenius(particion):
    """Símbolo de Frobenius con a_i = l_i - i y b_i = l'_i - i"""
    d = diagonal(particion)
    transpuesta = conjugada(particion).partes
    return FrobeniusSymbol(
        tuple(particion.partes[i] - (i + 1) for i in range(d)),
        tuple(transpuesta[i] - (i + 1) for i in range(d)),
    )


def particion_desde_frobenius(simbolo):
    """Inversa de frobenius()"""
    d = simbolo.d
    filas = [a + i for i, a in enumerate(simbolo.superior, 1)]
    columnas = [b + i for i, b in enumerate(simbolo.inferior, 1)]
    # Filas bajo el cuadrado de Durfee: cuántas de las d columnas alcanzan la fila i
    i = d + 1
    while True:
        largo = sum(1 for c in columnas if c >= i)
        if largo == 0:
            break
        filas.append(largo)
        i += 1
    return Partition(tuple(filas))


def es_autoconjugada(particion):
    return conjugada(particion) == particion


def es_casi_autoconjugada(particion):
    """a_i = b_i + 1 para todo i, con d >= 1 (la vacía no lo es)"""
    simbolo = frobenius(particion)
    return simbolo.d >= 1 and all(
        a == b + 1 for a, b in zip(simbolo.superior, simbolo.inferior)
    )


def t_de_binaria(bits):
    """
    Sucesión t(B): t_1 = b_1 y t_j crece en 1 exactamente cuando b_j != b_(j-1).

    Args:
        bits: sucesión no vacía de ceros y unos

    Returns:
        Tupla débilmente creciente con saltos de 0 o 1
    """
    bits = tuple(bits)
    if not bits:
        raise ValueError("La sucesión binaria no puede ser vacía")
    if any(b not in (0, 1) for b in bits):
        raise ValueError(f"Sucesión no binaria: {bits}")

    t = [bits[0]]
    for anterior, actual in zip(bits, bits[1:]):
        t.append(t[-1] if actual == anterior else t[-1] + 1)
    return tuple(t)


def suma_puntual(u, v):
    """
    Suma U + V' alineando de menor a menor; V se completa con ceros iniciales.

    Args:
        u: sucesión monótona (se admiten ceros)
        v: Partition o sucesión de enteros no negativos

    Returns:
        Partition canónica con peso |U| + |V|
    """
    u_creciente = sorted(u)
    v_creciente = sorted(v.partes if isinstance(v, Partition) else v)
    if len(v_creciente) > len(u_creciente):
        raise ValueError(
            f"V tiene {len(v_creciente)} partes y U solo {len(u_creciente)}"
        )
    relleno = [0] * (len(u_creciente) - len(v_creciente)) + v_creciente
    return Partition.desde_secuencia(a + b for a, b in zip(u_creciente, relleno))


# ========== SINTAXIS TEXTUAL ==========

def formatear(objeto):
    """'15,13,7~,2~': partes no rayadas decrecientes y luego rayadas con '~'"""
    if isinstance(objeto, Overpartition):
        tokens = [str(p) for p in objeto.no_rayadas.partes]
        tokens += [f"{p}{config.MARCA_RAYADA}" for p in objeto.rayadas]
    else:
        tokens = [str(p) for p in objeto.partes]
    return config.SEPARADOR_PARTES.join(tokens)


def _tokens(texto):
    posicion = 1
    for token in texto.split(config.SEPARADOR_PARTES):
        yield posicion, token
        posicion += len(token) + 1


def parsear_sobreparticion(texto):
    """
    Lee una sobrepartición en forma canónica.

    Raises:
        ErrorFormatoParticion: token inválido, orden no canónico o parte
        rayada repetida, con la posición del token
    """
    if texto.strip() == '':
        return Overpartition()

    no_rayadas, rayadas = [], []
    for posicion, token in _tokens(texto):
        limpio = token.strip()
        rayada = limpio.endswith(config.MARCA_RAYADA)
        digitos = limpio[:-1] if rayada else limpio
        if not (digitos.isascii() and digitos.isdigit()) or int(digitos) < 1:
            raise ErrorFormatoParticion(f"Parte inválida {token!r}", posicion)
        valor = int(digitos)

        if rayada:
            if rayadas and rayadas[-1] <= valor:
                raise ErrorFormatoParticion(
                    "Las partes rayadas deben ser estrictamente decrecientes", posicion
                )
            rayadas.append(valor)
        else:
            if rayadas:
                raise ErrorFormatoParticion(
                    "Las partes no rayadas deben preceder a las rayadas", posicion
                )
            if no_rayadas and no_rayadas[-1] < valor:
                raise ErrorFormatoParticion(
                    "Las partes deben ser decrecientes", posicion
                )
            no_rayadas.append(valor)

    return Overpartition(Partition(tuple(no_rayadas)), tuple(rayadas))


def parsear_particion(texto):
    """Lee una partición; una parte rayada es un error de formato"""
    sobreparticion = parsear_sobreparticion(texto)
    if sobreparticion.rayadas:
        posicion = texto.index(config.MARCA_RAYADA) + 1
        raise ErrorFormatoParticion("Se esperaba una partición sin partes rayadas", posicion)
    return sobreparticion.no_rayadas
