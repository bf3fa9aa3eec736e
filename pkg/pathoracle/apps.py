from django.apps import AppConfig


class PathoracleConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'pathoracle'
    verbose_name = 'Lattice Path Oracle'
