from django.apps import AppConfig


class GenfunConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'genfun'
    verbose_name = 'Generating Functions'
