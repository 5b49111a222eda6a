"""
Management command: oeis

Compara los coeficientes de una serie del catálogo con un archivo b de la
OEIS. El coeficiente de q^n se alinea con la entrada n + desplazamiento.

Uso:
  python manage.py oeis
  python manage.py oeis --serie a027349-desplazada --archivo data/oeis/b027349.txt --desplazamiento 1
  python manage.py oeis --fetch --secuencia 27349
"""

from urllib.error import URLError

from django.core.management.base import BaseCommand, CommandError

from apps.identidades.pipeline import config, series_catalog
from apps.identidades.pipeline.oeis import (
    comparar_con_archivo_b,
    descargar_archivo_b,
    leer_archivo_b,
)

from ._formatos import ERROR_USO, ERROR_VERIFICACION, errores_de_uso


class Command(BaseCommand):
    help = 'Compara una serie registrada con un archivo b de la OEIS.'

    def add_arguments(self, parser):
        parser.add_argument('--serie', default='a027349-suma', help='Id de serie del catálogo')
        parser.add_argument('--archivo', default=None,
                            help='Archivo b local (por defecto data/oeis/b027349.txt)')
        parser.add_argument('--desplazamiento', type=int, default=1,
                            help='Índice del archivo b que corresponde a q^0')
        parser.add_argument('--fetch', action='store_true',
                            help='Descarga el archivo b a la caché si no está')
        parser.add_argument('--secuencia', type=int, default=27349,
                            help='Número A de la sucesión para --fetch')

    def handle(self, *args, **options):
        ruta = options['archivo'] or str(config.DIR_OEIS / 'b027349.txt')
        if options['fetch']:
            try:
                ruta = descargar_archivo_b(options['secuencia'])
            except (URLError, OSError) as e:
                raise CommandError(f"No se pudo descargar el archivo b: {e}", returncode=ERROR_USO)

        with errores_de_uso():
            try:
                archivo_b = leer_archivo_b(ruta)
            except FileNotFoundError:
                raise CommandError(f"No se encontró el archivo: {ruta}", returncode=ERROR_USO)
            hasta = max(archivo_b.ultimo_indice - options['desplazamiento'], 0)
            serie = series_catalog.calcular_serie(options['serie'], hasta)

        comparacion = comparar_con_archivo_b(
            serie.coeficientes(0, hasta), archivo_b, options['desplazamiento']
        )
        if not comparacion.coinciden:
            raise CommandError(comparacion.resumen(), returncode=ERROR_VERIFICACION)
        self.stdout.write(self.style.SUCCESS(comparacion.resumen()))
