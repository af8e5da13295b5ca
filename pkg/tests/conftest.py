import numpy as np
import pytest

from netpoverty import DependenceStructure, WeightVector


def random_structure(rng, d, symmetric=False, sparsity=0.35):
    m = rng.uniform(0.0, 1.0, (d, d))
    m[rng.random((d, d)) < sparsity] = 0.0
    if symmetric:
        m = np.triu(m, 1)
        m = m + m.T
    np.fill_diagonal(m, 1.0)
    return DependenceStructure(m)


def random_weights(rng, d):
    u = rng.uniform(0.2, 1.8, d)
    return WeightVector(u * (d / u.sum()))


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
