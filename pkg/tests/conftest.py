import numpy as np
import pytest

from cbsc.params import TOY
from cbsc.sctkem import keygen_receiver_params, keygen_sender_params


@pytest.fixture(scope="session")
def toy_params():
    return TOY


@pytest.fixture(scope="session")
def receiver_keys(toy_params):
    rng = np.random.default_rng(0xC0FFEE)
    return keygen_receiver_params(toy_params, rng)


@pytest.fixture(scope="session")
def sender_keys(toy_params):
    rng = np.random.default_rng(0xBEEF)
    return keygen_sender_params(toy_params, rng)
