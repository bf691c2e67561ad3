"""Drazin inverses of exact rational matrices.

The Drazin inverse of A is the unique X with A^(k+1) X = A^k, X A X = X and
A X = X A for some k >= 0; the least such k is the Drazin index.  Two routes
are provided: a general polynomial method driven by the minimal polynomial,
and the direct closed form for windmill adjacency matrices (every nonzero
entry 1/m, placed on the length-(n-1) walk support).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import adjacency_matrix, build_windmill
from .matrices import Polynomial, RationalMatrix, minimal_polynomial
from .walks import windmill_length_n_minus_1_support

# The four-case nonzero pattern of the windmill Drazin inverse coincides with
# the pairs joined by a unique walk of length n-1.
windmill_support_pattern = windmill_length_n_minus_1_support


@dataclass(frozen=True)
class DrazinEquations:
    """Per-equation outcome of the three defining identities."""

    eq1: bool  # A^(k+1) X == A^k
    eq2: bool  # X A X == X
    eq3: bool  # A X == X A

    @property
    def all_pass(self):
        return self.eq1 and self.eq2 and self.eq3

    def to_json(self):
        return {"eq1": self.eq1, "eq2": self.eq2, "eq3": self.eq3}


@dataclass(frozen=True)
class DrazinResult:
    inverse: RationalMatrix
    index: int
    annihilator: Polynomial
    method: str  # "general" or "closed_form"
    checks: DrazinEquations

    def to_json(self):
        return {
            "index": self.index,
            "method": self.method,
            "inverse": self.inverse.to_json(),
            "annihilator": [str(c) for c in self.annihilator.coefficients],
            "verified": self.checks.to_json(),
        }


def verify_drazin(a, x, k):
    """Check the three defining equations exactly; returns per-equation results."""
    if a.shape != x.shape or a.rows != a.cols:
        raise ValueError(
            f"shape mismatch: matrix is {a.rows}x{a.cols}, candidate is {x.rows}x{x.cols}")
    if k < 0:
        raise ValueError(f"index must be non-negative, got {k}")
    ak = a ** k
    eq1 = (ak @ a) @ x == ak
    eq2 = x @ a @ x == x
    eq3 = a @ x == x @ a
    return DrazinEquations(eq1, eq2, eq3)


def drazin_index(a):
    """Smallest k with rank(A^k) = rank(A^(k+1)).

    Cross-checked against the multiplicity of 0 as a root of the minimal
    polynomial; a disagreement would mean a broken invariant, not bad input.
    """
    if a.rows != a.cols:
        raise ValueError(f"Drazin index requires a square matrix, got {a.rows}x{a.cols}")
    k = 0
    power = a ** 0
    r = power.rank()
    while True:
        power = power @ a
        r_next = power.rank()
        if r == r_next:
            break
        r = r_next
        k += 1
    mult = minimal_polynomial(a).zero_root_multiplicity()
    if mult != k:
        raise RuntimeError(
            f"internal consistency failure: rank stabilization gives index {k} "
            f"but the minimal polynomial has zero-root multiplicity {mult}")
    return k


def drazin_general(a):
    """Drazin inverse by the minimal-polynomial method.

    Split psi(x) = x^s h(x) with h(0) != 0.  For s = 0 the matrix is
    invertible and the ordinary inverse is returned.  Otherwise
    X = -(1/h_0)(h_1 I + h_2 A + ... + h_l A^(l-1)) satisfies
    A^s = A^(s+1) X, and the Drazin inverse is A^s X^(s+1) with index s.
    """
    if a.rows != a.cols:
        raise ValueError(f"Drazin inverse requires a square matrix, got {a.rows}x{a.cols}")
    psi = minimal_polynomial(a)
    s = psi.zero_root_multiplicity()
    if s == 0:
        inverse = a.inverse()
    else:
        h = psi.shift_down(s)
        if h.degree == 0:
            # pure nilpotent: X = 0 by the empty-sum convention
            inverse = RationalMatrix.zeros(a.rows)
        else:
            h0 = h.coefficients[0]
            # keep the scalar out of the matrix powers so integer inputs
            # stay integral until the final scaling
            y = RationalMatrix.zeros(a.rows)
            ident = RationalMatrix.identity(a.rows)
            for c in reversed(h.coefficients[1:]):
                y = y @ a + ident.scale(c)
            factor = (Fraction(-1) / Fraction(h0)) ** (s + 1)
            inverse = ((a ** s) @ (y ** (s + 1))).scale(factor)
    checks = verify_drazin(a, inverse, s)
    return DrazinResult(inverse, s, psi, "general", checks)


def drazin_windmill_closed(params):
    """Windmill Drazin inverse built directly from its closed form.

    Requires m >= 2; the m = 1 windmill is invertible (its inverse is the
    transpose of the adjacency matrix), use drazin_general for that case.
    """
    if params.m < 2:
        raise ValueError(
            "closed form requires m >= 2; for m = 1 the adjacency matrix is "
            "invertible (inverse = transpose), use drazin_general")
    m, n = params.m, params.n
    size = params.vertex_count
    value = Fraction(1, m)
    rows = [[0] * size for _ in range(size)]
    for i, j in windmill_support_pattern(params):
        rows[i - 1][j - 1] = value
    inverse = RationalMatrix(rows)
    # annihilator x^(n-1) (x^n - m), the split used by the closed form
    annihilator = Polynomial([0] * (n - 1) + [-m] + [0] * (n - 1) + [1])
    adjacency = adjacency_matrix(build_windmill(params))
    checks = verify_drazin(adjacency, inverse, n - 1)
    return DrazinResult(inverse, n - 1, annihilator, "closed_form", checks)


def verify_power_identities(params):
    """Exact checks of the adjacency-power identities; name -> bool.

    The two negative statements (powers that must differ) hold only for
    m >= 2: a single cycle has M^n = I, so they are skipped for m = 1 and
    the invertibility facts (inverse equals the transpose) checked instead.
    """
    m, n = params.m, params.n
    adjacency = adjacency_matrix(build_windmill(params))
    size = params.vertex_count
    ident = RationalMatrix.identity(size)
    p_n_minus_1 = adjacency ** (n - 1)
    checks = {
        "pow_2n_minus_1_scaled": adjacency ** (2 * n - 1) == p_n_minus_1.scale(m),
        "pow_n_minus_1_nonzero": not p_n_minus_1.is_zero(),
        "pow_n_sq_minus_1_scaled":
            adjacency ** (n * n - 1) == p_n_minus_1.scale(m ** (n - 1)),
    }
    if m >= 2:
        checks["pow_2n_minus_2_not_scaled"] = (
            adjacency ** (2 * n - 2) != (adjacency ** (n - 2)).scale(m))
        checks["pow_n_not_m_identity"] = adjacency ** n != ident.scale(m)
    else:
        checks["invertible"] = adjacency.rank() == size
        checks["inverse_is_transpose"] = adjacency @ adjacency.transpose() == ident
    return checks
