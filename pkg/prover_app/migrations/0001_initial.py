# Generated by Django 6.0.1 on 2026-10-17 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='ProofRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('proposition', models.TextField()),
                ('context', models.JSONField(default=dict)),
                ('verdict', models.CharField(choices=[('proved', 'Proved'), ('refuted', 'Refuted'), ('unknown', 'Unknown')], max_length=16)),
                ('enclosure_lb', models.TextField(blank=True)),
                ('enclosure_ub', models.TextField(blank=True)),
                ('certificate', models.JSONField()),
                ('elapsed_ms', models.FloatField(default=0)),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
            ],
            options={
                'verbose_name': 'Proof run',
                'verbose_name_plural': 'Proof runs',
                'ordering': ['-created_at'],
            },
        ),
    ]
