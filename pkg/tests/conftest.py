"""
Configuración común de las pruebas: los módulos viven en la raíz del
proyecto, igual que cuando se ejecuta main.py directamente.
"""

import os
import sys

import pytest

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from verificacion import ComparisonPolicy, SamplingPlan  # noqa: E402


@pytest.fixture
def plan_pequeno():
    """Plan reducido para que las pruebas de integración sean rápidas."""
    return SamplingPlan(seed=7, samples_per_identity=2, z_aleatorios=1)


@pytest.fixture
def politica():
    return ComparisonPolicy()


@pytest.fixture
def directorio_trabajo(tmp_path, monkeypatch):
    """Ejecuta en un directorio temporal para que el log no ensucie el proyecto."""
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv("HIPERGEO_SEMILLA", raising=False)
    return tmp_path
