from django.apps import AppConfig


class IdentidadesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'apps.identidades'
    verbose_name = 'Identidades de particiones'
