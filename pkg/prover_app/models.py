"""Models for stored proof runs."""

from django.db import models


class ProofRun(models.Model):
    """A decided proposition together with its certificate."""

    class Verdict(models.TextChoices):
        PROVED = "proved", "Proved"
        REFUTED = "refuted", "Refuted"
        UNKNOWN = "unknown", "Unknown"

    proposition = models.TextField()
    context = models.JSONField(default=dict)
    verdict = models.CharField(max_length=16, choices=Verdict.choices)
    enclosure_lb = models.TextField(blank=True)
    enclosure_ub = models.TextField(blank=True)
    certificate = models.JSONField()
    elapsed_ms = models.FloatField(default=0)
    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        verbose_name = "Proof run"
        verbose_name_plural = "Proof runs"
        ordering = ['-created_at']

    def __str__(self):
        text = f"{self.proposition[:50]}..." if len(self.proposition) > 50 else self.proposition
        return f"{text} ({self.verdict})"

    @property
    def tile_count(self) -> int:
        return len([tile for tile in self.certificate.get("tiles", []) if tile.get("method") != "probe"])
