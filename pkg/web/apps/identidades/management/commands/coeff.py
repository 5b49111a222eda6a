"""
Management command: coeff

Coeficientes exactos de una serie del catálogo.

Uso:
  python manage.py coeff --serie mod5:1,4 --hasta 30
  python manage.py coeff --serie lg1-laurent --n 100
"""

from django.core.management.base import BaseCommand

from apps.identidades.pipeline import series_catalog

from ._formatos import errores_de_uso, escribir_salida, rango_n, tabla_de_valores


class Command(BaseCommand):
    help = 'Imprime coeficientes de q^n de una serie registrada.'

    def add_arguments(self, parser):
        parser.add_argument('--serie', required=True, help='Id de serie del catálogo')
        parser.add_argument('--n', type=int, default=None)
        parser.add_argument('--desde', type=int, default=None)
        parser.add_argument('--hasta', type=int, default=None)
        parser.add_argument(
            '--format', dest='formato', choices=('table', 'csv', 'records'), default='table'
        )
        parser.add_argument('--out', default=None)
        parser.add_argument(
            '--listar', action='store_true', help='Lista los ids de serie registrados y termina'
        )

    def handle(self, *args, **options):
        if options['listar']:
            self.stdout.write('\n'.join(series_catalog.ids_registrados()))
            return

        desde, hasta = rango_n(options)
        with errores_de_uso():
            serie = series_catalog.calcular_serie(options['serie'], hasta)

        filas = list(zip(range(desde, hasta + 1), serie.coeficientes(desde, hasta)))
        escribir_salida(
            self, tabla_de_valores(filas, ['n', 'coeff'], options['formato']), options['out']
        )
