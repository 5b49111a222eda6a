from django.db import models


class EjecucionVerificacion(models.Model):
    """Una identidad verificada en una corrida de `verify --guardar`."""
    identidad = models.CharField(max_length=100, db_index=True)
    n_max = models.IntegerField()
    estado = models.CharField(max_length=10)
    primer_desacuerdo = models.IntegerField(null=True, blank=True)
    duracion_ms = models.IntegerField(default=0)
    registro = models.JSONField(default=dict)
    creado = models.DateTimeField(auto_now_add=True)

    class Meta:
        db_table = 'identidades_ejecucion_verificacion'
        ordering = ['-creado', 'identidad']
        verbose_name = 'Ejecución de verificación'
        verbose_name_plural = 'Ejecuciones de verificación'

    def __str__(self):
        return f"{self.identidad} N={self.n_max} {self.estado}"

    @classmethod
    def desde_reporte(cls, reporte):
        return cls(
            identidad=reporte.identidad,
            n_max=reporte.n_max,
            estado=reporte.estado,
            primer_desacuerdo=reporte.primer_desacuerdo,
            duracion_ms=reporte.duracion_ms,
            # Enteros de magnitud >= 2**53 se guardan como texto
            registro=_registro_serializable(reporte.como_registro(deterministico=True)),
        )


def _registro_serializable(registro):
    for lado in registro['sides']:
        lado['values'] = [v if abs(v) < 2 ** 53 else str(v) for v in lado['values']]
    return registro
