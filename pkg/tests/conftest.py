import numpy as np
import pytest

from src.forms.hermitian import HermitianForm
from src.forms.lefschetz import Lefschetz


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def flat_lefschetz():
    """Lefschetz operators for the standard metric on C^2."""
    return Lefschetz(HermitianForm.identity(2))
