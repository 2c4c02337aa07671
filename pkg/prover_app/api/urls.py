"""URL configuration for proof API endpoints."""

from django.urls import path
from .views import EvalView, ProofDetailView, ProofListView, ProofVerifyView

urlpatterns = [
    path("proofs/", ProofListView.as_view(), name="proofs"),
    path("proofs/<int:id>/", ProofDetailView.as_view(), name="proof_detail"),
    path("proofs/<int:id>/verify/", ProofVerifyView.as_view(), name="proof_verify"),
    path("eval/", EvalView.as_view(), name="eval"),
]
