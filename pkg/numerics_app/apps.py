from django.apps import AppConfig


class NumericsAppConfig(AppConfig):
    name = 'numerics_app'
    verbose_name = 'Verified numerics engine'
