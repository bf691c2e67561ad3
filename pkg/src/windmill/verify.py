"""Grid verification suite: every walk lemma and power identity, per (m, n) cell.

Each check pits an independent route against the claim it verifies: walk
counts come from the traversal oracle, matrix powers from exact repeated
squaring, and the Drazin inverse from both the polynomial method and the
closed form.
"""

from __future__ import annotations

from fractions import Fraction

from .drazin import (
    drazin_general,
    drazin_index,
    drazin_windmill_closed,
    verify_drazin,
    verify_power_identities,
    windmill_support_pattern,
)
from .graphs import WindmillParams, adjacency_matrix, build_windmill
from .walks import count_walks_matrix, enumerate_walks

DEFAULT_M_RANGE = (2, 5)
DEFAULT_N_RANGE = (3, 7)
DEFAULT_P_MAX = 3


def verify_cell(m, n, p_max=DEFAULT_P_MAX):
    """Run every check for one windmill; returns check name -> bool."""
    if p_max < 2:
        raise ValueError(f"p_max must be at least 2, got {p_max}")
    params = WindmillParams(m, n)
    g = build_windmill(params)
    adjacency = adjacency_matrix(g)
    size = params.vertex_count

    checks = dict(verify_power_identities(params))
    checks["rank_formula"] = adjacency.rank() == m * (n - 2) + 2

    if m >= 2:
        checks["drazin_index"] = drazin_index(adjacency) == n - 1
        general = drazin_general(adjacency)
        closed = drazin_windmill_closed(params)
        scaled = (adjacency ** (n - 1)).scale(Fraction(1, m))
        checks["closed_form_agreement"] = (
            general.inverse == closed.inverse == scaled)
        checks["drazin_equations"] = general.checks.all_pass and closed.checks.all_pass
        value = Fraction(1, m)
        support = closed.inverse.support()
        checks["inverse_support"] = (
            support == windmill_support_pattern(params)
            and all(closed.inverse[i - 1, j - 1] == value for i, j in support))
    else:
        checks["drazin_index"] = drazin_index(adjacency) == 0
        checks["drazin_equations"] = drazin_general(adjacency).checks.all_pass

    # walk oracle against matrix powers, every length up to n^2 - 1
    power = adjacency ** 0
    oracle_ok = True
    for length in range(n * n):
        if count_walks_matrix(g, length) != power:
            oracle_ok = False
            break
        power = power @ adjacency
    checks["walk_counts_match_powers"] = oracle_ok

    # length-(n-1) support and uniqueness
    counts = count_walks_matrix(g, n - 1)
    predicted = windmill_support_pattern(params)
    checks["length_n_minus_1_support"] = (
        counts.support() == predicted
        and all(counts[i - 1, j - 1] == 1 for i, j in predicted))
    unique = True
    for i, j in predicted:
        listed = enumerate_walks(g, i, j, n - 1, cap=4)
        if listed.truncated or len(listed.walks) != 1:
            unique = False
            break
    checks["length_n_minus_1_unique"] = unique

    # multiplicity of long walks: length pn-1 counts are m^(p-1) times base
    for p in range(2, p_max + 1):
        checks[f"multiplicity_p{p}"] = (
            count_walks_matrix(g, p * n - 1) == counts.scale(m ** (p - 1)))

    # closed walks of length n: one per non-hub vertex, m at the hub
    length_n = count_walks_matrix(g, n)
    checks["closed_walks_length_n"] = (
        length_n[0, 0] == m
        and all(length_n[i, i] == 1 for i in range(1, size)))

    # unique walk of length n-2 and of length 2n-2 within each cycle
    short_ok = True
    long_ok = True
    length_n_minus_2 = count_walks_matrix(g, n - 2)
    length_2n_minus_2 = count_walks_matrix(g, 2 * n - 2)
    for k in range(1, m + 1):
        start = (k - 1) * (n - 1) + 2
        end = (k - 1) * (n - 1) + n
        if length_n_minus_2[start - 1, end - 1] != 1:
            short_ok = False
        if length_2n_minus_2[start - 1, end - 1] != 1:
            long_ok = False
    checks["unique_walk_n_minus_2"] = short_ok
    checks["unique_walk_2n_minus_2"] = long_ok
    return checks


def verify_grid(m_range=DEFAULT_M_RANGE, n_range=DEFAULT_N_RANGE, p_max=DEFAULT_P_MAX):
    """Run verify_cell over a rectangular grid; returns the report object."""
    m_lo, m_hi = m_range
    n_lo, n_hi = n_range
    if m_lo > m_hi or n_lo > n_hi:
        raise ValueError(f"empty grid: m in {m_range}, n in {n_range}")
    grid = [(m, n) for m in range(m_lo, m_hi + 1) for n in range(n_lo, n_hi + 1)]
    cells = []
    all_pass = True
    for m, n in grid:
        checks = verify_cell(m, n, p_max)
        if not all(checks.values()):
            all_pass = False
        cells.append({
            "m": m,
            "n": n,
            "checks": {name: "pass" if ok else "fail" for name, ok in checks.items()},
        })
    return {"grid": [[m, n] for m, n in grid], "cells": cells, "all_pass": all_pass}


def summarize_report(report):
    """Human-readable one-line-per-cell summary of a grid report."""
    lines = []
    for cell in report["cells"]:
        failed = [name for name, status in cell["checks"].items() if status == "fail"]
        if failed:
            lines.append(f"m={cell['m']} n={cell['n']}: FAIL ({', '.join(failed)})")
        else:
            lines.append(f"m={cell['m']} n={cell['n']}: ok ({len(cell['checks'])} checks)")
    verdict = "all checks passed" if report["all_pass"] else "FAILURES detected"
    lines.append(verdict)
    return "\n".join(lines) + "\n"


def check_drazin_candidate(params, candidate):
    """Verify a candidate Drazin inverse of a windmill adjacency matrix."""
    adjacency = adjacency_matrix(build_windmill(params))
    k = params.n - 1 if params.m >= 2 else 0
    eqs = verify_drazin(adjacency, candidate, k)
    return {"m": params.m, "n": params.n, "index": k,
            "verified": eqs.to_json(), "all_pass": eqs.all_pass}
