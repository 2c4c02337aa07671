"""API views for deciding, listing, verifying and evaluating."""

import logging

from django.shortcuts import get_object_or_404
from rest_framework import status, views, response

from prover_app.models import ProofRun
from .serializers import CreateProofSerializer, EvalSerializer, ProofRunSerializer
from .services import ProofService

logger = logging.getLogger(__name__)


class ProofListView(views.APIView):
    """Handle deciding new propositions and listing stored runs."""

    def get(self, request):
        """Retrieve all stored proof runs, newest first."""
        runs = ProofRun.objects.all()
        return response.Response(ProofRunSerializer(runs, many=True).data, status=status.HTTP_200_OK)

    def post(self, request):
        """Decide a proposition and store the run.

        Validates the request, delegates to the service layer and returns
        the stored run with its certificate.
        """
        serializer = CreateProofSerializer(data=request.data)

        if not serializer.is_valid():
            return response.Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

        try:
            run = ProofService.create_proof_run(serializer.validated_data)
            return response.Response(ProofRunSerializer(run).data, status=status.HTTP_201_CREATED)

        except ValueError as e:
            return response.Response({"detail": str(e)}, status=status.HTTP_400_BAD_REQUEST)
        except Exception as e:
            logger.exception("Proof run failed.")
            return response.Response({"detail": str(e)}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)


class ProofDetailView(views.APIView):
    """Handle retrieval and deletion of individual proof runs."""

    def get(self, request, id):
        """Retrieve a proof run with its certificate."""
        run = get_object_or_404(ProofRun, id=id)
        return response.Response(ProofRunSerializer(run).data, status=status.HTTP_200_OK)

    def delete(self, request, id):
        """Delete a stored proof run."""
        run = get_object_or_404(ProofRun, id=id)
        run.delete()
        return response.Response(status=status.HTTP_204_NO_CONTENT)


class ProofVerifyView(views.APIView):
    """Replay the certificate of a stored run."""

    def post(self, request, id):
        run = get_object_or_404(ProofRun, id=id)
        try:
            return response.Response(ProofService.verify_proof_run(run), status=status.HTTP_200_OK)
        except ValueError as e:
            return response.Response({"detail": str(e)}, status=status.HTTP_400_BAD_REQUEST)


class EvalView(views.APIView):
    """Guaranteed enclosure of a constant expression."""

    def post(self, request):
        serializer = EvalSerializer(data=request.data)

        if not serializer.is_valid():
            return response.Response(serializer.errors, status=status.HTTP_400_BAD_REQUEST)

        try:
            result = ProofService.evaluate_expression(
                serializer.validated_data["expression"],
                serializer.validated_data.get("approx"),
            )
            return response.Response(result, status=status.HTTP_200_OK)

        except ValueError as e:
            return response.Response({"detail": str(e)}, status=status.HTTP_400_BAD_REQUEST)
        except Exception as e:
            logger.exception("Evaluation failed.")
            return response.Response({"detail": str(e)}, status=status.HTTP_500_INTERNAL_SERVER_ERROR)
