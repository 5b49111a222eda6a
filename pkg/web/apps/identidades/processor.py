"""
Verificador de identidades de particiones
Orquesta la verificación por lotes: registro, verificación, reporte y persistencia
"""

from apps.identidades.pipeline import config
from apps.identidades.pipeline.identity_harness import IdentityHarness, exito_global
from apps.identidades.pipeline.logger import logger
from apps.identidades.pipeline.report_generator import ReportGenerator


class VerificadorIdentidades:
    """Ejecuta una corrida de verificación de una o todas las identidades"""

    def __init__(self, harness=None, deterministico=None):
        self.harness = harness or IdentityHarness()
        self.generator = ReportGenerator(deterministico=deterministico)

    def _guardar_en_db(self, reportes):
        """Guarda un registro por identidad. Retorna la cantidad guardada."""
        from apps.identidades.models import EjecucionVerificacion

        objetos = [EjecucionVerificacion.desde_reporte(r) for r in reportes]
        EjecucionVerificacion.objects.bulk_create(objetos)
        logger.info(f"{config.MENSAJES['persistencia_completa']}: {len(objetos)} registros")
        return len(objetos)

    def procesar(self, identificador='all', n_max=None, trabajos=None,
                 formato='table', ruta_salida=None, guardar=False):
        """
        Verifica y serializa.

        Args:
            identificador: id registrado o 'all'
            n_max: cota N (None: la de cada registro)
            trabajos: procesos para 'all'
            formato: table, csv, records o xlsx
            ruta_salida: archivo de salida (obligatorio para xlsx)
            guardar: persistir los reportes en la base de datos

        Returns:
            Dict con: success, reportes, salida, archivo, guardados, stats
        """
        logger.reiniciar_estadisticas()
        logger.log_inicio_proceso(f"{identificador} (N={n_max if n_max is not None else 'por defecto'})")

        try:
            # FASE 1: Verificación
            logger.log_fase("VERIFICACIÓN")
            if identificador == 'all':
                reportes = self.harness.verificar_todas(n_max, trabajos=trabajos)
            else:
                reportes = [self.harness.verificar(identificador, n_max)]
            logger.info(config.MENSAJES['verificacion_completa'])

            # FASE 2: Reporte
            salida = None
            archivo = None
            if ruta_salida:
                archivo = self.generator.escribir(reportes, formato, ruta_salida)
            else:
                salida = self.generator.serializar(reportes, formato)

            # FASE 3: Persistencia
            guardados = self._guardar_en_db(reportes) if guardar else 0

            exito = exito_global(reportes)
            if not exito:
                logger.warning(config.MENSAJES['proceso_con_fallas'])
            logger.log_fin_proceso(exito=exito)

            return {
                'success': exito,
                'reportes': reportes,
                'salida': salida,
                'archivo': archivo,
                'guardados': guardados,
                'stats': logger.obtener_estadisticas(),
            }

        except Exception as e:
            logger.error(f"Error durante la verificación: {str(e)}")
            logger.log_fin_proceso(exito=False)
            raise
