"""Finite-dimensional unital associative algebras via structure constants.

An algebra is a basis, a unit vector and a multiplication tensor
``mult[i][j]`` = coefficient vector of e_i · e_j. Elements are coefficient
vectors over ℚ. Everything downstream (Hopf algebras, Yetter-Drinfeld
module algebras, endomorphism algebras) is layered over this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .linalg import (
    Matrix,
    format_rational,
    in_span,
    is_zero_vec,
    kernel_basis,
    mat_det,
    solve_linear,
    vec,
    zero_vec,
)


class CheckReport:
    """Outcome of an axiom check: empty failure list means valid."""

    def __init__(self, title: str):
        self.title = title
        self.failures: list[str] = []
        self.data: dict = {}

    def require(self, cond: bool, message: str) -> bool:
        if not cond:
            self.failures.append(message)
        return cond

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def raise_if_failed(self) -> "CheckReport":
        if self.failures:
            raise AssertionError(f"{self.title}: " + "; ".join(self.failures[:8]))
        return self

    def merge(self, other: "CheckReport") -> None:
        self.failures.extend(f"{other.title}: {f}" for f in other.failures)

    def __repr__(self) -> str:
        state = "ok" if self.ok else f"{len(self.failures)} failures"
        return f"CheckReport({self.title}: {state})"


class StructureAlgebra:
    """Unital associative algebra given by structure constants over ℚ."""

    def __init__(self, basis: Sequence[str], unit: Sequence, mult: Sequence[Sequence[Sequence]], name: str = ""):
        self.dim = len(basis)
        self.basis = [str(b) for b in basis]
        self.unit = vec(unit)
        self.mult = [[vec(mult[i][j]) for j in range(self.dim)] for i in range(self.dim)]
        self.name = name
        if len(self.unit) != self.dim:
            raise ValueError("unit vector has wrong length")
        if len(self.mult) != self.dim or any(len(row) != self.dim for row in self.mult):
            raise ValueError("multiplication tensor has wrong shape")
        for row in self.mult:
            for v in row:
                if len(v) != self.dim:
                    raise ValueError("multiplication tensor entry has wrong length")
        # sparse view of the multiplication tensor, used by every hot loop
        self._sp = [
            [tuple((k, c) for k, c in enumerate(self.mult[i][j]) if c) for j in range(self.dim)]
            for i in range(self.dim)
        ]

    # -- element arithmetic on raw coefficient vectors -------------------

    def mul_vec(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> list[Fraction]:
        out = zero_vec(self.dim)
        for i, xi in enumerate(x):
            if not xi:
                continue
            spi = self._sp[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                coef = xi * yj
                for k, c in spi[j]:
                    out[k] += coef * c
        return out

    def mul_basis(self, i: int, j: int) -> tuple[tuple[int, Fraction], ...]:
        return self._sp[i][j]

    def one(self) -> list[Fraction]:
        return list(self.unit)

    def basis_vec(self, i: int) -> list[Fraction]:
        v = zero_vec(self.dim)
        v[i] = Fraction(1)
        return v

    def element(self, coeffs: Sequence) -> "AlgebraElement":
        return AlgebraElement(self, vec(coeffs))

    def basis_element(self, i: int) -> "AlgebraElement":
        return AlgebraElement(self, self.basis_vec(i))

    def scalar(self, c) -> "AlgebraElement":
        return AlgebraElement(self, [Fraction(c) * u for u in self.unit])

    def left_mult_matrix(self, x: Sequence[Fraction]) -> Matrix:
        return Matrix.from_cols([self.mul_vec(x, self.basis_vec(j)) for j in range(self.dim)])

    def right_mult_matrix(self, x: Sequence[Fraction]) -> Matrix:
        return Matrix.from_cols([self.mul_vec(self.basis_vec(j), x) for j in range(self.dim)])

    def is_invertible(self, x: Sequence[Fraction]) -> bool:
        return mat_det(self.left_mult_matrix(x)) != 0

    def inverse_vec(self, x: Sequence[Fraction]) -> list[Fraction] | None:
        sol = solve_linear(self.left_mult_matrix(x), self.unit)
        if sol.particular is None:
            return None
        # a left inverse in a finite-dimensional unital algebra is two-sided
        return sol.particular

    def scalar_part(self, x: Sequence[Fraction]) -> Fraction | None:
        """If x = c·1, return c, else None."""
        unit = self.unit
        pivot = next((i for i, u in enumerate(unit) if u), None)
        if pivot is None:
            return None
        c = x[pivot] / unit[pivot]
        return c if all(x[i] == c * unit[i] for i in range(self.dim)) else None

    def show(self, x: Sequence[Fraction]) -> str:
        terms = [
            (f"{format_rational(c)}·" if c != 1 else "") + self.basis[i]
            for i, c in enumerate(x)
            if c
        ]
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        label = self.name or "algebra"
        return f"StructureAlgebra({label}, dim={self.dim})"


@dataclass
class AlgebraElement:
    parent: StructureAlgebra
    coeffs: list[Fraction]

    def __post_init__(self):
        if len(self.coeffs) != self.parent.dim:
            raise ValueError("coefficient vector has wrong length")

    def _check_parent(self, other: "AlgebraElement") -> None:
        if self.parent is not other.parent:
            raise ValueError("elements live in different algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_parent(other)
        return AlgebraElement(self.parent, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check_parent(other)
        return AlgebraElement(self.parent, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.parent, [-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check_parent(other)
            return AlgebraElement(self.parent, self.parent.mul_vec(self.coeffs, other.coeffs))
        return AlgebraElement(self.parent, [a * Fraction(other) for a in self.coeffs])

    def __rmul__(self, scalar):
        return AlgebraElement(self.parent, [Fraction(scalar) * a for a in self.coeffs])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.parent is other.parent
            and self.coeffs == other.coeffs
        )

    def is_zero(self) -> bool:
        return is_zero_vec(self.coeffs)

    def __repr__(self) -> str:
        return self.parent.show(self.coeffs)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    return x * y


@dataclass
class Grading:
    """ℤ₂-grading by a homogeneous basis: parity[i] ∈ {0, 1} per basis index."""

    parent: StructureAlgebra
    parity: tuple[int, ...]

    def __post_init__(self):
        if len(self.parity) != self.parent.dim:
            raise ValueError("parity vector has wrong length")
        if any(p not in (0, 1) for p in self.parity):
            raise ValueError("parity entries must be 0 or 1")

    def compatible(self) -> CheckReport:
        """Multiplication must respect parity additively mod 2."""
        rep = CheckReport("grading compatibility")
        a = self.parent
        for i in range(a.dim):
            for j in range(a.dim):
                want = (self.parity[i] + self.parity[j]) % 2
                for k, c in a.mul_basis(i, j):
                    rep.require(
                        self.parity[k] == want,
                        f"product {a.basis[i]}·{a.basis[j]} hits parity-{self.parity[k]} term {a.basis[k]}",
                    )
        return rep


def check_algebra_axioms(a: StructureAlgebra) -> CheckReport:
    """Associativity on all basis triples plus the two-sided unit law."""
    rep = CheckReport(f"algebra axioms ({a.name or 'unnamed'})")
    for i in range(a.dim):
        ei = a.basis_vec(i)
        rep.require(
            a.mul_vec(a.unit, ei) == ei and a.mul_vec(ei, a.unit) == ei,
            f"unit law fails at basis element {a.basis[i]}",
        )
    for i in range(a.dim):
        for j in range(a.dim):
            ij = a.mul_vec(a.basis_vec(i), a.basis_vec(j))
            for l in range(a.dim):
                el = a.basis_vec(l)
                lhs = a.mul_vec(ij, el)
                rhs = a.mul_vec(a.basis_vec(i), a.mul_vec(a.basis_vec(j), el))
                rep.require(lhs == rhs, f"associativity fails at triple ({i},{j},{l})")
    return rep


def opposite_algebra(a: StructureAlgebra) -> StructureAlgebra:
    mult = [[a.mult[j][i] for j in range(a.dim)] for i in range(a.dim)]
    return StructureAlgebra(a.basis, a.unit, mult, name=f"{a.name}^op" if a.name else "op")


def endomorphism_algebra(n: int) -> StructureAlgebra:
    """End(kⁿ) on the matrix-unit basis E_pq (e_q ↦ e_p).

    Flat index of E_pq is q·n + p: the dual index is major, matching the
    identification End(V) ≅ V* ⊗ V used throughout.
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    dim = n * n

    def idx(p: int, q: int) -> int:
        return q * n + p

    basis = [f"E{p + 1}{q + 1}" for q in range(n) for p in range(n)]
    unit = zero_vec(dim)
    for p in range(n):
        unit[idx(p, p)] = Fraction(1)
    mult = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
    for p in range(n):
        for q in range(n):
            for r in range(n):
                for s in range(n):
                    if q == r:
                        mult[idx(p, q)][idx(r, s)][idx(p, s)] = Fraction(1)
    return StructureAlgebra(basis, unit, mult, name=f"End(k^{n})")


def operator_to_vec(m: Matrix) -> list[Fraction]:
    """Expand an operator matrix in the matrix-unit basis of End(kⁿ)."""
    n = m.rows
    out = zero_vec(n * n)
    for p in range(n):
        for q in range(n):
            out[q * n + p] = m.data[p][q]
    return out


def vec_to_operator(v: Sequence[Fraction], n: int) -> Matrix:
    out = [[Fraction(0)] * n for _ in range(n)]
    for q in range(n):
        for p in range(n):
            out[p][q] = v[q * n + p]
    return Matrix(out)


def center(a: StructureAlgebra) -> list[list[Fraction]]:
    """Basis of {z : z·e_i = e_i·z for all i}, by one linear solve."""
    rows = []
    for i in range(a.dim):
        li = a.left_mult_matrix(a.basis_vec(i))
        ri = a.right_mult_matrix(a.basis_vec(i))
        diff = ri - li  # columns: e_j·e_i - e_i·e_j as functions of z-coefficient j
        rows.extend(diff.data)
    return kernel_basis(Matrix(rows))


def super_center(a: StructureAlgebra, grading: Grading) -> list[list[Fraction]]:
    """Basis of the ℤ₂-graded center {z : z·b = (−1)^{|z||b|} b·z}.

    Computed per homogeneous component of z, so the result is a union of
    even and odd solution bases.
    """
    grading.compatible().raise_if_failed()
    out: list[list[Fraction]] = []
    for pz in (0, 1):
        cols = [j for j in range(a.dim) if grading.parity[j] == pz]
        if not cols:
            continue
        rows: list[list[Fraction]] = []
        for i in range(a.dim):
            sign = -1 if (pz and grading.parity[i]) else 1
            ei = a.basis_vec(i)
            block = [
                [
                    x - sign * y
                    for x, y in zip(a.mul_vec(a.basis_vec(j), ei), a.mul_vec(ei, a.basis_vec(j)))
                ]
                for j in cols
            ]
            # block[c][k]: coefficient of unknown z_{cols[c]} in component k
            for k in range(a.dim):
                rows.append([block[c][k] for c in range(len(cols))])
        for kvec in kernel_basis(Matrix(rows)):
            full = zero_vec(a.dim)
            for c, j in enumerate(cols):
                full[j] = kvec[c]
            out.append(full)
    return out


def sandwich_matrix(a: StructureAlgebra) -> Matrix:
    """Matrix of A ⊗ A^op → End(A), x ⊗ y ↦ (c ↦ x·c·y)."""
    d = a.dim
    m = [[Fraction(0)] * (d * d) for _ in range(d * d)]
    for i in range(d):
        for j in range(d):
            col = i * d + j
            for k in range(d):
                w = a.mul_vec(a.mul_vec(a.basis_vec(i), a.basis_vec(k)), a.basis_vec(j))
                for p, c in enumerate(w):
                    if c:
                        m[k * d + p][col] = c
    return Matrix(m)


def is_central_simple(a: StructureAlgebra) -> bool:
    """Azumaya-over-a-field criterion: the sandwich map is bijective."""
    return mat_det(sandwich_matrix(a)) != 0


def subspace_closed_under(basis_vectors: list[list[Fraction]], images: list[list[Fraction]]) -> bool:
    return all(in_span(basis_vectors, im) for im in images)
