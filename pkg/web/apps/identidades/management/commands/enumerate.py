"""
Management command: enumerate

Lista las particiones o sobreparticiones de n en una clase registrada, una
por línea en la sintaxis textual ('3,1~' para una parte rayada).

Uso:
  python manage.py enumerate --class rr1-over --n 4
  python manage.py enumerate --class gg1 --n 12 --format records
"""

import json

from django.core.management.base import BaseCommand, CommandError

from apps.identidades.pipeline import enumerators
from apps.identidades.pipeline.partition_core import Overpartition, formatear

from ._formatos import ERROR_USO, errores_de_uso, escribir_salida, no_negativo


class Command(BaseCommand):
    help = 'Enumera los miembros de peso n de una clase de particiones o sobreparticiones.'

    def add_arguments(self, parser):
        parser.add_argument('--class', dest='clase', required=True, help='Id de clase registrado')
        parser.add_argument('--n', type=int, required=True, help='Peso n >= 0')
        parser.add_argument(
            '--format', dest='formato', choices=('table', 'records'), default='table',
            help='table: una partición por línea; records: un objeto JSON por línea',
        )
        parser.add_argument('--out', default=None, help='Archivo de salida (por defecto stdout)')

    def handle(self, *args, **options):
        n = no_negativo(options['n'], '--n')
        clase_id = options['clase']

        with errores_de_uso():
            clase = enumerators.obtener_clase(clase_id)
        if enumerators.es_clase_de_pares(clase_id):
            raise CommandError(
                f"{clase_id} es un conteo de pares; use el comando count", returncode=ERROR_USO
            )

        objetos = enumerators.enumerar(n, clase)
        if options['formato'] == 'records':
            texto = ''.join(self._registro(clase_id, n, o) + '\n' for o in objetos)
        else:
            texto = ''.join(formatear(o) + '\n' for o in objetos)
        escribir_salida(self, texto, options['out'])

    @staticmethod
    def _registro(clase_id, n, objeto):
        if isinstance(objeto, Overpartition):
            no_rayadas, rayadas = list(objeto.no_rayadas.partes), list(objeto.rayadas)
        else:
            no_rayadas, rayadas = list(objeto.partes), []
        return json.dumps({
            'class': clase_id,
            'n': n,
            'parts': no_rayadas,
            'overlined': rayadas,
            'text': formatear(objeto),
        }, sort_keys=True)
