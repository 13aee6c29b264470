"""Executable audit of every matrix identity behind the tangency theorem.

The squared-distance determinant of n+2 tangent spheres reduces, through a
pair of congruence transforms, to a closed form in the curvatures:

    U^T W U = D                      (distance determinant from coordinates)
    P^T D P, then Q^T (.) Q          (eliminate r_i^2, pull out 1/r_i)
    -> bordered block [[0, R^T], [R, S]],  S = 2*ones - 4I
    det = -det(S) * R^T S^-1 R = (-1)^n * 2^(2n+1) * residual

Every step is re-checked here as an exact entrywise or determinant equality
on concrete rational instances.  Checks never raise on failure; both sides
of each identity land in the report so a red entry is diagnosable on its
own.  Exact mode only: a float witness would conflate algebra bugs with
roundoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cayley_menger import SquaredDistanceMatrix, build_cm_matrix
from .errors import DimensionError, ModeMismatchError
from .numeric import EXACT, Matrix, as_exact, determinant
from .serialize import format_scalar, value_to_json
from .tangency import (
    Curvatures,
    SignedRadii,
    curvatures_from_radii,
    descartes_residual,
    tangency_squared_distances,
)


@dataclass(frozen=True)
class IdentityCheck:
    """One verified identity: name, dimension, verdict, and both sides."""

    name: str
    n: int
    passed: bool
    lhs: object
    rhs: object

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{status}  {self.name} [n={self.n}]  "
            f"lhs={_render(self.lhs)}  rhs={_render(self.rhs)}"
        )


@dataclass(frozen=True)
class ProofReport:
    entries: tuple[IdentityCheck, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def lines(self) -> list[str]:
        return [e.line() for e in self.entries]

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "identities": [
                {
                    "name": e.name,
                    "n": e.n,
                    "passed": e.passed,
                    "lhs": value_to_json(e.lhs),
                    "rhs": value_to_json(e.rhs),
                }
                for e in self.entries
            ],
        }

    @staticmethod
    def combine(reports: Sequence["ProofReport"]) -> "ProofReport":
        entries: list[IdentityCheck] = []
        for r in reports:
            entries.extend(r.entries)
        return ProofReport(entries=tuple(entries))


def _render(value) -> str:
    if isinstance(value, Matrix):
        rows = value.to_rows()
        return "[" + "; ".join(" ".join(format_scalar(v) for v in row) for row in rows) + "]"
    return format_scalar(value)


def _check(name: str, n: int, lhs, rhs) -> IdentityCheck:
    return IdentityCheck(name=name, n=n, passed=lhs == rhs, lhs=lhs, rhs=rhs)


def _require_exact_points(points: Sequence[Sequence]) -> list[list[Fraction]]:
    m = len(points)
    if m < 2:
        raise DimensionError("need at least two points")
    if any(len(p) != m - 1 for p in points):
        raise DimensionError(f"each of the {m} points must have dimension {m - 1}")
    try:
        return [[as_exact(v) for v in p] for p in points]
    except ModeMismatchError:
        raise ModeMismatchError("proof witness runs in exact mode only") from None


def build_U(points: Sequence[Sequence]) -> Matrix:
    """(m+1)x(m+1): top row (1, |x_1|^2, ..., |x_m|^2), then the ones row,
    then one row per coordinate.  Expanding its first column shows
    det(U) = +-(m-1)! * volume."""
    pts = _require_exact_points(points)
    m = len(pts)
    top = [Fraction(1)] + [sum(c * c for c in p) for p in pts]
    rows = [top, [Fraction(0)] + [Fraction(1)] * m]
    for coord in range(m - 1):
        rows.append([Fraction(0)] + [p[coord] for p in pts])
    return Matrix.from_rows(rows, EXACT)


def build_W(m: int) -> Matrix:
    """Bordered quadratic-form matrix: [[0,1],[1,0]] corner, then -2 diagonal.

    det(W) = (-1) * (-2)^(m-1)."""
    if m < 2:
        raise DimensionError("need at least two points")
    size = m + 1
    rows = [[Fraction(0)] * size for _ in range(size)]
    rows[0][1] = rows[1][0] = Fraction(1)
    for i in range(2, size):
        rows[i][i] = Fraction(-2)
    return Matrix.from_rows(rows, EXACT)


def _distances_from_points(pts: list[list[Fraction]]) -> SquaredDistanceMatrix:
    m = len(pts)
    rows = [
        [sum((pts[i][c] - pts[j][c]) ** 2 for c in range(m - 1)) for j in range(m)]
        for i in range(m)
    ]
    return SquaredDistanceMatrix.from_entries(rows, EXACT)


def check_UWU_congruence(points: Sequence[Sequence]) -> ProofReport:
    """U^T W U = D entrywise, and det(D) = det(U)^2 det(W)."""
    pts = _require_exact_points(points)
    m = len(pts)
    u = build_U(pts)
    w = build_W(m)
    d = build_cm_matrix(_distances_from_points(pts))
    utwu = u.transpose() @ w @ u
    det_d = determinant(d)
    det_u = determinant(u)
    det_w = determinant(w)
    return ProofReport(
        entries=(
            _check("UtWU equals distance matrix", m - 2, utwu, d),
            _check("det(D) = det(U)^2 det(W)", m - 2, det_d, det_u**2 * det_w),
        )
    )


def _require_exact_radii(r: SignedRadii) -> SignedRadii:
    if r.mode != EXACT:
        raise ModeMismatchError("proof witness runs in exact mode only")
    return r


def build_P(r: SignedRadii) -> Matrix:
    """Unit upper-triangular eliminator: row 0 = (1, -r_1^2, ..., -r_{n+2}^2)."""
    _require_exact_radii(r)
    size = len(r.values) + 1
    rows = [[Fraction(0)] * size for _ in range(size)]
    rows[0][0] = Fraction(1)
    for j, rv in enumerate(r.values, start=1):
        rows[0][j] = -(rv * rv)
        rows[j][j] = Fraction(1)
    return Matrix.from_rows(rows, EXACT)


def build_Q(r: SignedRadii) -> Matrix:
    """diag(1, 1/r_1, ..., 1/r_{n+2}); det(Q) = prod(1/r_i)."""
    _require_exact_radii(r)
    return Matrix.diagonal([Fraction(1)] + [Fraction(1) / Fraction(v) for v in r.values])


def build_S(n: int) -> Matrix:
    """(n+2)x(n+2) core form 2*ones - 4I: off-diagonal 2, diagonal -2."""
    if n < 1:
        raise DimensionError("sphere dimension n must be >= 1")
    size = n + 2
    rows = [
        [Fraction(-2) if i == j else Fraction(2) for j in range(size)]
        for i in range(size)
    ]
    return Matrix.from_rows(rows, EXACT)


def s_determinant_formula(n: int) -> Fraction:
    return Fraction((-1) ** (n + 1) * 2 ** (2 * n + 3) * n)


def s_inverse_formula(n: int) -> Matrix:
    """(1/(4n)) * ones - (1/4) I, the closed-form inverse of build_S(n)."""
    size = n + 2
    a = Fraction(1, 4 * n)
    rows = [
        [a - Fraction(1, 4) if i == j else a for j in range(size)]
        for i in range(size)
    ]
    return Matrix.from_rows(rows, EXACT)


def check_S_properties(n: int) -> ProofReport:
    """det(S) and the closed-form inverse, plus the n = 2 shortcuts."""
    s = build_S(n)
    size = n + 2
    entries = [
        _check("det(S) matches closed form", n, determinant(s), s_determinant_formula(n)),
        _check(
            "S times formula inverse is identity",
            n,
            s @ s_inverse_formula(n),
            Matrix.identity(size),
        ),
    ]
    if n == 2:
        entries.append(_check("S^2 = 16I", n, s @ s, Matrix.identity(size).scaled(16)))
        entries.append(_check("det(S) = -256", n, determinant(s), Fraction(-256)))
        entries.append(
            _check("S^-1 = S/16", n, s_inverse_formula(n), s.scaled(Fraction(1, 16)))
        )
    return ProofReport(entries=tuple(entries))


def _expected_eliminated(r: SignedRadii) -> Matrix:
    size = len(r.values) + 1
    rows = [[Fraction(0)] * size for _ in range(size)]
    for j in range(1, size):
        rows[0][j] = rows[j][0] = Fraction(1)
    for i, ri in enumerate(r.values, start=1):
        for j, rj in enumerate(r.values, start=1):
            rows[i][j] = -2 * ri * ri if i == j else 2 * ri * rj
    return Matrix.from_rows(rows, EXACT)


def _expected_block_form(k: Curvatures) -> Matrix:
    size = len(k.values) + 1
    rows = [[Fraction(0)] * size for _ in range(size)]
    for j, kv in enumerate(k.values, start=1):
        rows[0][j] = rows[j][0] = Fraction(kv)
    for i in range(1, size):
        for j in range(1, size):
            rows[i][j] = Fraction(-2) if i == j else Fraction(2)
    return Matrix.from_rows(rows, EXACT)


def check_reduction_chain(r: SignedRadii) -> ProofReport:
    """Replay the whole determinant reduction on one rational configuration.

    Steps: (a) P^T D P eliminates the r_i^2 terms, (b) Q^T . Q rescales to
    the bordered block of curvatures over S, (c) the block-determinant rule
    with the closed-form S^-1, (d) the block value is the scaled tangency
    residual, (e) det(D) recovers it through det(P)^2 det(Q)^2.
    """
    _require_exact_radii(r)
    n = r.n
    k = curvatures_from_radii(r)
    d = build_cm_matrix(tangency_squared_distances(r))
    p = build_P(r)
    q = build_Q(r)

    eliminated = p.transpose() @ d @ p
    block = q.transpose() @ eliminated @ q

    det_block = determinant(block)
    det_s = determinant(build_S(n))
    s_inv = s_inverse_formula(n)
    # R^T S^-1 R with R the curvature column
    kv = list(k.values)
    rts_r = sum(
        kv[i] * s_inv.at(i, j) * kv[j] for i in range(len(kv)) for j in range(len(kv))
    )
    block_rule_value = -det_s * rts_r

    residual = descartes_residual(k)
    scaled_residual = Fraction((-1) ** n * 2 ** (2 * n + 1)) * residual

    det_d = determinant(d)
    prod_r = r.product()

    return ProofReport(
        entries=(
            _check("PtDP matches eliminated form", n, eliminated, _expected_eliminated(r)),
            _check("QtPtDPQ matches bordered block form", n, block, _expected_block_form(k)),
            _check("block determinant rule", n, det_block, block_rule_value),
            _check("block value is scaled residual", n, det_block, scaled_residual),
            _check("det(D) recovers scaled residual", n, det_d, prod_r**2 * scaled_residual),
        )
    )
