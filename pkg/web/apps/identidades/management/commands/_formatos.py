"""
Utilidades compartidas por los comandos: validación de rangos, salida y
traducción de errores de dominio a CommandError.
"""

import json
import os
from contextlib import contextmanager

import pandas as pd
from django.core.management.base import CommandError

from apps.identidades.pipeline.bijections import ErrorFueraDeClase
from apps.identidades.pipeline.oeis import ErrorArchivoB
from apps.identidades.pipeline.partition_core import ErrorFormatoParticion
from apps.identidades.pipeline.report_generator import ErrorFormatoReporte

ERROR_USO = 2
ERROR_VERIFICACION = 1

ERRORES_DE_USO = (
    KeyError,
    ErrorFormatoParticion,
    ErrorFueraDeClase,
    ErrorArchivoB,
    ErrorFormatoReporte,
)


@contextmanager
def errores_de_uso():
    """Convierte errores de dominio en CommandError con código 2"""
    try:
        yield
    except ERRORES_DE_USO as e:
        raise CommandError(str(e), returncode=ERROR_USO) from e


def no_negativo(valor, nombre):
    if valor is not None and valor < 0:
        raise CommandError(f"{nombre} debe ser no negativo: {valor}", returncode=ERROR_USO)
    return valor


def rango_n(options):
    """(desde, hasta) a partir de --n o de --desde/--hasta"""
    n, desde, hasta = options.get('n'), options.get('desde'), options.get('hasta')
    if n is not None:
        if desde is not None or hasta is not None:
            raise CommandError("Use --n o --desde/--hasta, no ambos", returncode=ERROR_USO)
        no_negativo(n, '--n')
        return n, n
    if hasta is None:
        raise CommandError("Falta --n o --hasta", returncode=ERROR_USO)
    desde = 0 if desde is None else desde
    no_negativo(desde, '--desde')
    no_negativo(hasta, '--hasta')
    if desde > hasta:
        raise CommandError(f"--desde {desde} mayor que --hasta {hasta}", returncode=ERROR_USO)
    return desde, hasta


def tabla_de_valores(filas, columnas, formato):
    """Serializa filas (tuplas) como table, csv o records"""
    marco = pd.DataFrame(filas, columns=columnas, dtype=object)
    if formato == 'csv':
        return marco.to_csv(index=False, lineterminator='\n')
    if formato == 'records':
        return ''.join(
            json.dumps(dict(zip(columnas, fila)), sort_keys=True, ensure_ascii=False) + '\n'
            for fila in filas
        )
    if marco.empty:
        return ''
    return marco.to_string(index=False) + '\n'


def escribir_salida(comando, texto, ruta=None):
    if ruta:
        os.makedirs(os.path.dirname(os.path.abspath(ruta)), exist_ok=True)
        with open(ruta, 'w', encoding='utf-8', newline='') as archivo:
            archivo.write(texto)
        comando.stderr.write(f"Salida escrita en {ruta}")
    else:
        comando.stdout.write(texto, ending='')
