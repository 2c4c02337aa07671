from django.apps import AppConfig


class ProverAppConfig(AppConfig):
    name = 'prover_app'
    verbose_name = 'Numerical proofs'
