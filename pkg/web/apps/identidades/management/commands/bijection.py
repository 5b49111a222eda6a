"""
Management command: bijection

Aplica una biyección registrada (f, h-oe, h-eo, g-gg, g-lg) o su inversa.

Uso:
  python manage.py bijection --map h-oe --input "20,18,15,13,10,7,4,1"
  python manage.py bijection --map h-oe --inverse --input "15,13,11,9,7,5,3,1,7~,6~,5~,4~,2~"
"""

from django.core.management.base import BaseCommand

from apps.identidades.pipeline.bijections import MAPAS, aplicar_mapa, obtener_mapa
from apps.identidades.pipeline.partition_core import (
    formatear,
    parsear_particion,
    parsear_sobreparticion,
)

from ._formatos import errores_de_uso


class Command(BaseCommand):
    help = 'Aplica una biyección de particiones a sobreparticiones, o su inversa.'

    def add_arguments(self, parser):
        parser.add_argument('--map', dest='mapa', required=True, help=f"Uno de: {', '.join(sorted(MAPAS))}")
        parser.add_argument('--input', dest='entrada', required=True, help="Partición, p. ej. '9,4,1'")
        parser.add_argument('--inverse', dest='inversa', action='store_true')

    def handle(self, *args, **options):
        with errores_de_uso():
            obtener_mapa(options['mapa'])
            if options['inversa']:
                objeto = parsear_sobreparticion(options['entrada'])
            else:
                objeto = parsear_particion(options['entrada'])
            resultado = aplicar_mapa(options['mapa'], objeto, inversa=options['inversa'])

        self.stdout.write(formatear(resultado))
