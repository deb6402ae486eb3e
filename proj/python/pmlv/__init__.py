"""Partial multiple L-values: oracle sums, exact closed forms and generating functions."""

import json
from fractions import Fraction

from . import _pmlv
from ._pmlv import (
    CapacityError,
    ConsistencyError,
    DomainError,
    RangeError,
    enumerate_partitions,
    gamma_product_check,
    oracle_eval,
    unique_even_mu,
)

__all__ = [
    "CapacityError",
    "ConsistencyError",
    "DomainError",
    "RangeError",
    "bernoulli",
    "bernoulli_S_k_even",
    "closed_form",
    "double_zeta_remark",
    "enumerate_partitions",
    "finite_partial_S2",
    "gamma_product_check",
    "genfun",
    "lemma_decomposition_check",
    "monomial_at_roots",
    "normalize_even_zetas",
    "numeric_eval",
    "oracle_eval",
    "run_cli",
    "unique_even_mu",
    "verify",
    "Z_n_k",
]


def bernoulli(m):
    return Fraction(_pmlv.bernoulli(m))


def monomial_at_roots(parts, n):
    return Fraction(_pmlv.monomial_at_roots(list(parts), n))


def finite_partial_S2(k, p):
    return Fraction(_pmlv.finite_partial_S2(k, p))


# Symbolic values are dicts {"terms": [...], "rendered": "..."}.

def closed_form(n, k):
    return json.loads(_pmlv.closed_form(n, k))


def Z_n_k(n, k):
    return json.loads(_pmlv.Z_n_k(n, k))


def bernoulli_S_k_even(n, k, form="conv"):
    return json.loads(_pmlv.bernoulli_S_k_even(n, k, form))


def double_zeta_remark(k, order="first"):
    return json.loads(_pmlv.double_zeta_remark(k, order))


def normalize_even_zetas(value):
    return json.loads(_pmlv.normalize_even_zetas(json.dumps(value)))


def numeric_eval(value, digits=30):
    """Decimal string of a symbolic value."""
    return _pmlv.numeric_eval(json.dumps(value), digits)


def genfun(series, N=2, M=2, n=1, order=None, mode="exact", digits=30):
    if order is None:
        order = 3 * n
    if mode == "exact":
        return json.loads(_pmlv.genfun_exact(series, N, M, n, order))
    if mode == "numeric":
        return _pmlv.genfun_numeric(series, N, M, n, order, digits)
    raise ValueError("mode must be 'exact' or 'numeric'")


def lemma_decomposition_check(N, M, n, k, T=100000, tolerance=1e-8):
    return json.loads(_pmlv.lemma_decomposition_check(N, M, n, k, T, tolerance))


def verify(suite="all", max_k=3, T=1000000, digits=30, jobs=1):
    return json.loads(_pmlv.verify(suite, max_k, T, digits, jobs))


def run_cli(command, **options):
    """Runs one CLI job in-process; returns (status, stdout, stderr)."""
    return _pmlv.run_cli(command, options)
