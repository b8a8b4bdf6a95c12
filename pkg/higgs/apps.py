from django.apps import AppConfig


class HiggsConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'higgs'
    verbose_name = 'U(p,q)-Higgs bundles'
