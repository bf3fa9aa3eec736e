from django.apps import AppConfig


class TrianglesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'triangles'
    verbose_name = 'Triangular Arrays'
