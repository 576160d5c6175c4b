"""Exact toolkit for equivariant surface computations.

The heavy lifting lives in the compiled extension; this package re-exports
it and resolves the bundled fixture directory.
"""

import os

from equibir._core import (  # noqa: F401
    __version__,
    cyc_add,
    cyc_conj,
    cyc_inv,
    cyc_mul,
    dp4_obstruction,
    euler_gram,
    group_order,
    h1_check,
    lines,
    linsec_check,
    sl2_basis,
    smith_normal_form,
    verify_fixtures,
    wedge2_decompose,
    EquibirError,
)


def fixtures_path():
    """Directory with the shipped character tables and scenarios."""
    env = os.environ.get("EQUIBIR_FIXTURES")
    if env:
        return env
    bundled = os.path.join(os.path.dirname(__file__), "fixtures")
    if os.path.isdir(bundled):
        return bundled
    return os.path.join(os.getcwd(), "fixtures")
