"""
Management command: count

Cuenta los miembros de una clase (o los pares de Stembridge) para un n o un
rango de n.

Uso:
  python manage.py count --class d --n 9
  python manage.py count --class stembridge:gg1 --desde 0 --hasta 20 --format csv
"""

from django.core.management.base import BaseCommand

from apps.identidades.pipeline import enumerators

from ._formatos import errores_de_uso, escribir_salida, rango_n, tabla_de_valores


class Command(BaseCommand):
    help = 'Cuenta los miembros de una clase registrada para n o para un rango de n.'

    def add_arguments(self, parser):
        parser.add_argument('--class', dest='clase', required=True, help='Id de clase registrado')
        parser.add_argument('--n', type=int, default=None)
        parser.add_argument('--desde', type=int, default=None, help='Primer n del rango (0 por defecto)')
        parser.add_argument('--hasta', type=int, default=None, help='Último n del rango')
        parser.add_argument(
            '--format', dest='formato', choices=('table', 'csv', 'records'), default='table'
        )
        parser.add_argument('--out', default=None)

    def handle(self, *args, **options):
        desde, hasta = rango_n(options)
        clase_id = options['clase']

        with errores_de_uso():
            enumerators.obtener_clase(clase_id)
            filas = [(n, enumerators.contar_por_id(n, clase_id)) for n in range(desde, hasta + 1)]

        escribir_salida(self, tabla_de_valores(filas, ['n', 'count'], options['formato']), options['out'])
