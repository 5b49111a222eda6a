"""
Módulo OEIS
Lectura de archivos b, comparación con coeficientes calculados y descarga opcional
"""

from dataclasses import dataclass
from pathlib import Path
from urllib.request import urlopen

from . import config
from .logger import logger


class ErrorArchivoB(ValueError):
    """Línea mal formada en un archivo b; `linea` es 1-based"""

    def __init__(self, mensaje, linea):
        super().__init__(f"{mensaje} (línea {linea})")
        self.linea = linea


@dataclass(frozen=True)
class ArchivoB:
    """Sucesión leída de un archivo b: a(primer_indice + i) = valores[i]"""
    primer_indice: int
    valores: tuple

    def __len__(self):
        return len(self.valores)

    @property
    def ultimo_indice(self):
        return self.primer_indice + len(self.valores) - 1

    def valor(self, indice):
        return self.valores[indice - self.primer_indice]

    def contiene(self, indice):
        return bool(self.valores) and self.primer_indice <= indice <= self.ultimo_indice


@dataclass(frozen=True)
class ComparacionArchivoB:
    coinciden: bool
    comparados: int
    desde: int | None = None
    hasta: int | None = None
    primer_desacuerdo: int | None = None
    calculado: int | None = None
    esperado: int | None = None

    def resumen(self):
        if self.comparados == 0:
            return "Sin índices en común: coincidencia trivial"
        if self.coinciden:
            return f"Coinciden {self.comparados} términos (n = {self.desde}..{self.hasta})"
        return (
            f"Desacuerdo en n={self.primer_desacuerdo}: calculado {self.calculado}, "
            f"archivo b {self.esperado}"
        )


def parsear_archivo_b(texto):
    """
    Lee el contenido de un archivo b: líneas "n a(n)", comentarios con '#'.

    Raises:
        ErrorArchivoB: línea sin dos enteros o índices no contiguos
    """
    primer_indice = None
    valores = []
    for numero_linea, linea in enumerate(texto.splitlines(), 1):
        limpia = linea.strip()
        if not limpia or limpia.startswith('#'):
            continue
        campos = limpia.split()
        if len(campos) != 2:
            raise ErrorArchivoB(f"Se esperaban dos campos, hay {len(campos)}", numero_linea)
        try:
            indice, valor = int(campos[0]), int(campos[1])
        except ValueError:
            raise ErrorArchivoB(f"Entero inválido en {limpia!r}", numero_linea) from None

        if primer_indice is None:
            primer_indice = indice
        elif indice != primer_indice + len(valores):
            raise ErrorArchivoB(
                f"Índice {indice} no contiguo (se esperaba {primer_indice + len(valores)})",
                numero_linea
            )
        valores.append(valor)

    return ArchivoB(primer_indice if primer_indice is not None else 0, tuple(valores))


def leer_archivo_b(ruta):
    ruta = Path(ruta)
    logger.debug(f"Leyendo archivo b: {ruta}")
    return parsear_archivo_b(ruta.read_text(encoding='utf-8'))


def comparar_con_archivo_b(valores, archivo_b, desplazamiento):
    """
    Compara el coeficiente calculado de q^n con la entrada n + desplazamiento.

    Args:
        valores: coeficientes calculados, valores[n] para n = 0, 1, ...
        archivo_b: ArchivoB
        desplazamiento: entero que alinea ambos índices

    Returns:
        ComparacionArchivoB con el primer desacuerdo (si lo hay)
    """
    comparados = 0
    desde = hasta = None
    for n, calculado in enumerate(valores):
        indice = n + desplazamiento
        if not archivo_b.contiene(indice):
            continue
        esperado = archivo_b.valor(indice)
        if calculado != esperado:
            return ComparacionArchivoB(
                False, comparados, desde, hasta, n, calculado, esperado
            )
        comparados += 1
        desde = n if desde is None else desde
        hasta = n
    return ComparacionArchivoB(True, comparados, desde, hasta)


def ruta_cache(numero, directorio=None):
    directorio = Path(directorio or config.DIR_CACHE_OEIS)
    return directorio / f"b{numero:06d}.txt"


def descargar_archivo_b(numero, directorio=None, forzar=False):
    """
    Descarga el archivo b de A<numero> al directorio de caché.

    Returns:
        Ruta del archivo en caché
    """
    destino = ruta_cache(numero, directorio)
    if destino.exists() and not forzar:
        logger.debug(f"Archivo b en caché: {destino}")
        return destino

    url = config.URL_ARCHIVO_B.format(numero=numero)
    logger.info(f"Descargando {url}")
    with urlopen(url, timeout=config.TIEMPO_ESPERA_DESCARGA) as respuesta:
        contenido = respuesta.read().decode('utf-8')

    # Validar antes de guardar
    parsear_archivo_b(contenido)
    destino.parent.mkdir(parents=True, exist_ok=True)
    destino.write_text(contenido, encoding='utf-8')
    logger.info(f"Archivo b guardado en {destino}")
    return destino
