from django.apps import AppConfig


class IdentitiesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'identities'
    verbose_name = 'Identity Catalog'

    def ready(self):
        """Register the identity catalog when the app is ready"""
        import identities.catalog  # noqa: F401
