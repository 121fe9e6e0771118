"""Exact rational feasibility for systems of strict linear inequalities.

``feasible`` decides whether ``a.x > b`` for every strict constraint (and
``e.x = d`` for every equality) has a solution inside the box
``|x_i| <= bound``. It maximises a common slack ``t`` (capped at 1) with a
two-phase tableau simplex over ``Fraction`` using Bland's rule, so the
answer is exact and pivoting cannot cycle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

try:
    from gmpy2 import mpq as _Q
except ImportError:  # pragma: no cover
    _Q = Fraction

Constraint = tuple[Sequence, object]   # (coefficients, right-hand side)

_ZERO = _Q(0)
_ONE = _Q(1)


def _q(x) -> object:
    if isinstance(x, Fraction):
        return _Q(x.numerator, x.denominator)
    return _Q(x)


class Infeasible(Exception):
    pass


def _pivot(T: list[list[Fraction]], basis: list[int], r: int, c: int) -> None:
    row = T[r]
    p = row[c]
    if p != 1:
        T[r] = row = [x / p if x else x for x in row]
    support = [j for j, y in enumerate(row) if y]
    for k, other in enumerate(T):
        if k != r:
            f = other[c]
            if f:
                for j in support:
                    other[j] -= f * row[j]
    basis[r] = c


def _optimise(T, basis, obj, allowed) -> None:
    """Maximise obj (a row vector over columns) in place. Columns outside
    ``allowed`` never enter the basis."""
    m = len(T)
    while True:
        # reduced costs of nonbasic allowed columns
        entering = -1
        for c in allowed:
            if c in basis:
                continue
            rc = obj[c] - sum(obj[basis[k]] * T[k][c] for k in range(m))
            if rc > 0:
                entering = c
                break
        if entering < 0:
            return
        leave = -1
        best = None
        for k in range(m):
            a = T[k][entering]
            if a > 0:
                ratio = T[k][-1] / a
                if best is None or ratio < best or (ratio == best and basis[k] < basis[leave]):
                    best, leave = ratio, k
        if leave < 0:
            raise ValueError("unbounded objective")
        _pivot(T, basis, leave, entering)


def maximise(A_eq, b_eq, c, slack_of=None):
    """max c.z  s.t. A_eq z = b_eq, z >= 0. Returns (value, z).

    ``slack_of[r]``, when given, names a column that appears only in row r;
    if that column has the sign of b_r it starts in the basis and row r
    needs no artificial variable.
    """
    m = len(A_eq)
    nvar = len(c)
    T = []
    basis = []
    for r, (row, b) in enumerate(zip(A_eq, b_eq)):
        row = [_q(x) for x in row]
        b = _q(b)
        s = slack_of[r] if slack_of else None
        if b < 0 or (b == 0 and s is not None and row[s] < 0):
            row, b = [-x for x in row], -b
        artificial = [_ZERO] * m
        if s is not None and row[s] > 0:
            basis.append(s)
            if row[s] != 1:
                p = row[s]
                row, b = [x / p for x in row], b / p
        else:
            artificial[r] = _ONE
            basis.append(nvar + r)
        T.append(row + artificial + [b])
    width = nvar + m
    phase1 = [_ZERO] * nvar + [_Q(-1)] * m
    _optimise(T, basis, phase1, range(width))
    if any(T[k][-1] != 0 for k in range(m) if basis[k] >= nvar):
        raise Infeasible
    # drive remaining artificials out, dropping redundant rows
    k = 0
    while k < len(T):
        if basis[k] >= nvar:
            col = next((j for j in range(nvar) if T[k][j] != 0), None)
            if col is None:
                del T[k]
                del basis[k]
                continue
            _pivot(T, basis, k, col)
        k += 1
    obj = [_q(x) for x in c] + [_ZERO] * m
    _optimise(T, basis, obj, range(nvar))
    z = [_ZERO] * nvar
    for k, b in enumerate(basis):
        z[b] = T[k][-1]
    value = sum((ci * zi for ci, zi in zip(obj, z)), _ZERO)
    return Fraction(int(value.numerator), int(value.denominator)), [
        Fraction(int(v.numerator), int(v.denominator)) for v in z
    ]


def feasible(
    strict: Sequence[Constraint],
    equalities: Sequence[Constraint] = (),
    bound=10,
    dim: int | None = None,
) -> tuple[Fraction, ...] | None:
    """Return a point strictly satisfying ``strict`` and exactly satisfying
    ``equalities`` within ``|x_i| <= bound``, or None if there is none.

    >>> feasible([((2,), 0), ((-2,), -1)])
    (Fraction(1, 4),)
    >>> feasible([((1,), 0), ((-1,), 0)]) is None
    True
    """
    if dim is None:
        rows = list(strict) + list(equalities)
        if not rows:
            raise ValueError("dimension unknown for an empty system")
        dim = len(rows[0][0])
    M = Fraction(bound)
    # variables: y_i = x_i + M in [0, 2M], slack t in [0, 1], then row slacks
    n_ineq = len(strict) + dim + 1
    nvar = dim + 1 + n_ineq
    A, b, slack_of = [], [], []
    k = dim + 1
    for coeffs, rhs in strict:
        # a.y - t - s = rhs + M * sum(a)
        row = [_q(x) for x in coeffs] + [_Q(-1)] + [_ZERO] * n_ineq
        row[k] = _Q(-1)
        A.append(row)
        b.append(Fraction(rhs) + M * sum(coeffs))
        slack_of.append(k)
        k += 1
    for i in range(dim):
        row = [_ZERO] * nvar
        row[i] = _ONE
        row[k] = _ONE
        A.append(row)
        b.append(2 * M)
        slack_of.append(k)
        k += 1
    row = [_ZERO] * nvar
    row[dim] = _ONE
    row[k] = _ONE
    A.append(row)
    b.append(Fraction(1))
    slack_of.append(k)
    for coeffs, rhs in equalities:
        A.append([_q(x) for x in coeffs] + [_ZERO] * (nvar - dim))
        b.append(Fraction(rhs) + M * sum(coeffs))
        slack_of.append(None)
    c = [_ZERO] * nvar
    c[dim] = _ONE
    try:
        value, z = maximise(A, b, c, slack_of)
    except Infeasible:
        return None
    if value <= 0:
        return None
    return tuple(z[i] - M for i in range(dim))
