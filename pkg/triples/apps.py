from django.apps import AppConfig


class TriplesConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'triples'
    verbose_name = 'Holomorphic triples'
