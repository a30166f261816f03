"""
Fixtures compartidas de la batería de pruebas
"""

import sys
from pathlib import Path

import pytest

# La raíz del repositorio contiene los paquetes zsqm y scripts
ROOT = Path(__file__).resolve().parent.parent
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from zsqm.potentials import Family, PotentialSpec  # noqa: E402


@pytest.fixture
def morse5():
    return PotentialSpec(Family.MORSE, 5.0)


@pytest.fixture
def riemann_half():
    return PotentialSpec(Family.RIEMANN_I, 0.5)


@pytest.fixture
def xi_half():
    return PotentialSpec(Family.XI_I, 0.5)


@pytest.fixture
def carpeta_resultados(tmp_path, monkeypatch):
    """Directorio de trabajo aislado para las salidas de la CLI"""
    monkeypatch.chdir(tmp_path)
    return tmp_path
