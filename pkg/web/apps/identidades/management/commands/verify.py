"""
Management command: verify

Verifica una identidad registrada (o todas) comparando sus lados para
0 <= n <= N.

Códigos de salida: 0 si ninguna identidad probada falla, 1 si alguna falla,
2 en errores de uso.

Uso:
  python manage.py verify --id frr --max-n 40
  python manage.py verify --id all --jobs 4 --format records --no-timing --out data/output/todas.jsonl
  python manage.py verify --id all --format xlsx --out data/output/todas.xlsx --guardar
"""

from django.core.management.base import BaseCommand, CommandError

from apps.identidades.pipeline import config
from apps.identidades.processor import VerificadorIdentidades

from ._formatos import ERROR_USO, ERROR_VERIFICACION, errores_de_uso, no_negativo


class Command(BaseCommand):
    help = 'Verifica identidades de particiones y emite un reporte.'

    def add_arguments(self, parser):
        parser.add_argument('--id', dest='identidad', required=True, help="Id registrado o 'all'")
        parser.add_argument('--max-n', type=int, default=None, help='Cota N (por defecto la del registro)')
        parser.add_argument(
            '--format', dest='formato', choices=config.FORMATOS_SALIDA, default='table'
        )
        parser.add_argument('--out', default=None, help='Archivo de salida (obligatorio para xlsx)')
        parser.add_argument('--jobs', type=int, default=config.TRABAJOS_POR_DEFECTO,
                            help='Procesos para --id all')
        parser.add_argument('--no-timing', action='store_true',
                            help='Omite elapsed_ms: salida reproducible byte a byte')
        parser.add_argument('--guardar', action='store_true',
                            help='Guarda los reportes en la base de datos')
        parser.add_argument('--listar', action='store_true',
                            help='Lista los ids registrados y termina')

    def handle(self, *args, **options):
        verificador = VerificadorIdentidades(deterministico=options['no_timing'] or None)

        if options['listar']:
            self.stdout.write('\n'.join(verificador.harness.ids()))
            return

        n_max = no_negativo(options['max_n'], '--max-n')
        if options['jobs'] < 1:
            raise CommandError(f"--jobs debe ser >= 1: {options['jobs']}", returncode=ERROR_USO)
        if options['formato'] == 'xlsx' and not options['out']:
            raise CommandError("--format xlsx requiere --out", returncode=ERROR_USO)

        with errores_de_uso():
            resultado = verificador.procesar(
                identificador=options['identidad'],
                n_max=n_max,
                trabajos=options['jobs'],
                formato=options['formato'],
                ruta_salida=options['out'],
                guardar=options['guardar'],
            )

        if resultado['salida'] is not None:
            self.stdout.write(resultado['salida'], ending='')
        else:
            self.stderr.write(f"Reporte escrito en {resultado['archivo']}")

        if not resultado['success']:
            fallidas = [r.identidad for r in resultado['reportes'] if r.estado == 'FAIL']
            raise CommandError(
                f"Identidades con FAIL: {', '.join(fallidas)}", returncode=ERROR_VERIFICACION
            )
