from django.apps import AppConfig


class PolyfamConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'polyfam'
    verbose_name = 'Polynomial Families'
