from django.contrib import admin
from .models import ProofRun


@admin.register(ProofRun)
class ProofRunAdmin(admin.ModelAdmin):
    """Admin interface for ProofRun model."""

    list_display = ['id', 'proposition_short', 'verdict', 'tile_count', 'elapsed_ms', 'created_at']
    list_filter = ['verdict', 'created_at']
    search_fields = ['proposition']
    readonly_fields = ['certificate', 'created_at', 'updated_at']

    fieldsets = (
        ('Proposition', {
            'fields': ('proposition', 'context')
        }),
        ('Result', {
            'fields': ('verdict', 'enclosure_lb', 'enclosure_ub', 'elapsed_ms')
        }),
        ('Certificate', {
            'fields': ('certificate',),
            'classes': ('collapse',)
        }),
        ('Timestamps', {
            'fields': ('created_at', 'updated_at'),
            'classes': ('collapse',)
        }),
    )

    def proposition_short(self, obj):
        """Display shortened proposition."""
        return obj.proposition[:50] + '...' if len(obj.proposition) > 50 else obj.proposition

    proposition_short.short_description = 'Proposition'
