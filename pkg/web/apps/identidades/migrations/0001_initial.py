# Generated by Django 4.2.27 on 2026-10-17 09:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='EjecucionVerificacion',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('identidad', models.CharField(db_index=True, max_length=100)),
                ('n_max', models.IntegerField()),
                ('estado', models.CharField(max_length=10)),
                ('primer_desacuerdo', models.IntegerField(blank=True, null=True)),
                ('duracion_ms', models.IntegerField(default=0)),
                ('registro', models.JSONField(default=dict)),
                ('creado', models.DateTimeField(auto_now_add=True)),
            ],
            options={
                'verbose_name': 'Ejecución de verificación',
                'verbose_name_plural': 'Ejecuciones de verificación',
                'db_table': 'identidades_ejecucion_verificacion',
                'ordering': ['-creado', 'identidad'],
            },
        ),
    ]
