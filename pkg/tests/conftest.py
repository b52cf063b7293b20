"""Independent oracles shared by the test modules.

None of these reuse package internals beyond reading values out: determinants
by cofactor expansion, linear solves by plain Fraction elimination, and field
elements embedded into the complex numbers.
"""

from __future__ import annotations

import cmath
from fractions import Fraction

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ABELIAN_SMALL = ["C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2xC2", "C2xC4", "C2xC2xC2", "C2xC3"]
SPLIT_SMALL = ["D3", "D4", "Q2"]
SYMBOLIC_LIST = ABELIAN_SMALL + SPLIT_SMALL
RANDOMIZED_LIST = ["D5", "D6", "D7", "D8", "Q3", "Q4", "Q5"]
FULL_LIST = SYMBOLIC_LIST + RANDOMIZED_LIST


def to_complex(z) -> complex:
    """Embed a CycloNumber with zeta_L -> exp(2 pi i / L)."""
    w = cmath.exp(2j * cmath.pi / z.field.L)
    return sum(float(c) * w ** k for k, c in enumerate(z.coeffs))


def laplace_det(M):
    """Cofactor expansion along the first row; fine for n <= 6."""
    n = len(M)
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * laplace_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def solve(M, rhs):
    """Solve M x = rhs over Fractions by Gauss-Jordan elimination."""
    n = len(M)
    A = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(M, rhs)]
    for c in range(n):
        p = next(r for r in range(c, n) if A[r][c] != 0)
        A[c], A[p] = A[p], A[c]
        piv = A[c][c]
        A[c] = [v / piv for v in A[c]]
        for r in range(n):
            if r != c and A[r][c] != 0:
                f = A[r][c]
                A[r] = [a - f * b for a, b in zip(A[r], A[c])]
    return [A[r][n] for r in range(n)]


def group_matrix_values(G, vals):
    """Entry x_{g h^-1} at (g, h) from first principles (tuples, not index tables)."""
    els = G.elements()
    pos = {g: i for i, g in enumerate(els)}
    return [[vals[pos[G.mul(g, G.inv(h))]] for h in els] for g in els]


@pytest.fixture
def oracle():
    class O:
        pass

    o = O()
    o.to_complex = to_complex
    o.laplace_det = laplace_det
    o.solve = solve
    o.group_matrix_values = group_matrix_values
    return o


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
