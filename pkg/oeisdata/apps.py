from django.apps import AppConfig


class OeisdataConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'oeisdata'
    verbose_name = 'OEIS Data'
