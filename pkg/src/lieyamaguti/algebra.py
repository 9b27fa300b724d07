"""Finite-dimensional Lie-Yamaguti algebras given by structure constants.

An algebra of dimension d stores the full binary tensor ``c[i][j]`` (the
d-vector of coordinates of [e_i, e_j]) and the full ternary tensor
``t[i][j][k]`` ({e_i, e_j, e_k}).  Stored tensors are allowed to violate the
defining identities: validity is a predicate (``check_axioms``), not a type
invariant, so negative fixtures and perturbation tests are expressible.
Constructors that build from i<j data derive the antisymmetric mirrors, which
makes LY1/LY2 violations impossible along that path.

Axiom checking runs over basis tuples only; multilinearity over Q makes that
equivalent to the universally quantified identities.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import (
    InvalidAlgebra,
    NotALeibnizAlgebra,
    NotALieAlgebra,
    NotReductive,
    ShapeMismatch,
)
from .linalg import (
    Matrix,
    SubspaceBasis,
    Vector,
    qvec,
    vec_add,
    vec_is_zero,
    vec_scale,
    vec_sub,
    zero_vector,
)

AXIOMS = ("LY1", "LY2", "LY3", "LY4", "LY5", "LY6")


def _zero_binary(d: int):
    z = zero_vector(d)
    return tuple(tuple(z for _ in range(d)) for _ in range(d))


def _zero_ternary(d: int):
    z = zero_vector(d)
    return tuple(tuple(tuple(z for _ in range(d)) for _ in range(d)) for _ in range(d))


@dataclass(frozen=True)
class LYAlgebra:
    """Structure constants of a (candidate) Lie-Yamaguti algebra."""

    dim: int
    binary: tuple  # binary[i][j] is the d-vector of [e_i, e_j]
    ternary: tuple  # ternary[i][j][k] is the d-vector of {e_i, e_j, e_k}
    name: str = ""

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self.binary[i][j]

    def triple_basis(self, i: int, j: int, k: int) -> Vector:
        return self.ternary[i][j][k]

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        """Bilinear extension of the binary bracket to coordinate vectors."""
        out = list(zero_vector(self.dim))
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.binary[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                v = row[j]
                c = xi * yj
                for k, vk in enumerate(v):
                    if vk:
                        out[k] += c * vk
        return tuple(out)

    def triple(self, x, y, z) -> Vector:
        """Trilinear extension of the ternary bracket."""
        out = list(zero_vector(self.dim))
        for i, xi in enumerate(x):
            if not xi:
                continue
            ti = self.ternary[i]
            for j, yj in enumerate(y):
                if not yj:
                    continue
                tij = ti[j]
                c = xi * yj
                for k, zk in enumerate(z):
                    if not zk:
                        continue
                    v = tij[k]
                    czk = c * zk
                    for l, vl in enumerate(v):
                        if vl:
                            out[l] += czk * vl
        return tuple(out)

    def basis_vector(self, i: int) -> Vector:
        return tuple(Fraction(int(j == i)) for j in range(self.dim))

    def with_name(self, name: str) -> "LYAlgebra":
        return LYAlgebra(self.dim, self.binary, self.ternary, name)


@dataclass
class AxiomReport:
    """Violations of LY1..LY6, keyed by axiom name.

    Each violation is a pair (basis index tuple, defect vector).  The report
    is empty exactly when all six identities hold on every basis tuple, which
    by multilinearity means they hold identically.
    """

    violations: dict = field(default_factory=lambda: {ax: [] for ax in AXIOMS})

    @property
    def ok(self) -> bool:
        return all(not v for v in self.violations.values())

    def violated_axioms(self) -> list[str]:
        return [ax for ax in AXIOMS if self.violations[ax]]

    def add(self, axiom: str, tup: tuple, defect: Vector) -> None:
        self.violations[axiom].append((tup, defect))

    def summary(self) -> str:
        if self.ok:
            return "all axioms hold"
        parts = []
        for ax in self.violated_axioms():
            tup, _ = self.violations[ax][0]
            parts.append(f"{ax} fails on {tuple(i + 1 for i in tup)} ({len(self.violations[ax])} tuples)")
        return "; ".join(parts)


def _ly3_defect(a: LYAlgebra, i: int, j: int, k: int) -> Vector:
    acc = zero_vector(a.dim)
    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
        acc = vec_add(acc, a.bracket(a.binary[x][y], a.basis_vector(z)))
        acc = vec_add(acc, a.ternary[x][y][z])
    return acc


def _ly4_defect(a: LYAlgebra, i: int, j: int, k: int, u: int) -> Vector:
    eu = a.basis_vector(u)
    acc = zero_vector(a.dim)
    for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
        acc = vec_add(acc, a.triple(a.binary[x][y], a.basis_vector(z), eu))
    return acc


def _ly5_defect(a: LYAlgebra, i: int, j: int, u: int, v: int) -> Vector:
    lhs = a.triple(a.basis_vector(i), a.basis_vector(j), a.binary[u][v])
    rhs = vec_add(
        a.bracket(a.ternary[i][j][u], a.basis_vector(v)),
        a.bracket(a.basis_vector(u), a.ternary[i][j][v]),
    )
    return vec_sub(lhs, rhs)


def _ly6_defect(a: LYAlgebra, i: int, j: int, u: int, v: int, w: int) -> Vector:
    ei, ej = a.basis_vector(i), a.basis_vector(j)
    eu, ev, ew = a.basis_vector(u), a.basis_vector(v), a.basis_vector(w)
    lhs = a.triple(ei, ej, a.ternary[u][v][w])
    rhs = a.triple(a.ternary[i][j][u], ev, ew)
    rhs = vec_add(rhs, a.triple(eu, a.ternary[i][j][v], ew))
    rhs = vec_add(rhs, a.triple(eu, ev, a.ternary[i][j][w]))
    return vec_sub(lhs, rhs)


def check_axioms(a: LYAlgebra, first_only: bool = False) -> AxiomReport:
    """Evaluate LY1..LY6 on all basis tuples.

    With ``first_only`` the scan stops at the first violation found; the
    report then carries exactly one entry.

    LY1 and LY2 are always scanned in full.  When both hold, the defects of
    LY3..LY6 are alternating in their antisymmetric argument groups, so those
    identities are scanned on representative tuples only (strictly increasing
    where the defect alternates); the remaining tuples vanish identically.
    When LY1 or LY2 fails, everything is scanned in full.
    """
    d = a.dim
    rng = range(d)
    report = AxiomReport()

    def done() -> bool:
        return first_only and not report.ok

    for i in rng:
        for j in rng:
            defect = vec_add(a.binary[i][j], a.binary[j][i])
            if not vec_is_zero(defect):
                report.add("LY1", (i, j), defect)
                if done():
                    return report
    for i, j, k in itertools.product(rng, rng, rng):
        defect = vec_add(a.ternary[i][j][k], a.ternary[j][i][k])
        if not vec_is_zero(defect):
            report.add("LY2", (i, j, k), defect)
            if done():
                return report

    reduced = report.ok
    triples = (
        itertools.combinations(rng, 3) if reduced else itertools.product(rng, rng, rng)
    )
    for i, j, k in triples:
        defect = _ly3_defect(a, i, j, k)
        if not vec_is_zero(defect):
            report.add("LY3", (i, j, k), defect)
            if done():
                return report
    triples = (
        itertools.combinations(rng, 3) if reduced else itertools.product(rng, rng, rng)
    )
    for (i, j, k), u in itertools.product(list(triples), rng):
        defect = _ly4_defect(a, i, j, k, u)
        if not vec_is_zero(defect):
            report.add("LY4", (i, j, k, u), defect)
            if done():
                return report
    pairs = list(itertools.combinations(rng, 2) if reduced else itertools.product(rng, rng))
    for (i, j), (u, v) in itertools.product(pairs, pairs):
        defect = _ly5_defect(a, i, j, u, v)
        if not vec_is_zero(defect):
            report.add("LY5", (i, j, u, v), defect)
            if done():
                return report
    for (i, j), (u, v), w in itertools.product(pairs, pairs, rng):
        defect = _ly6_defect(a, i, j, u, v, w)
        if not vec_is_zero(defect):
            report.add("LY6", (i, j, u, v, w), defect)
            if done():
                return report
    return report


def is_valid(a: LYAlgebra) -> bool:
    return check_axioms(a, first_only=True).ok


def _require_valid(a: LYAlgebra) -> None:
    if not is_valid(a):
        raise InvalidAlgebra(f"algebra {a.name or '<unnamed>'} violates the defining identities")


# ---------------------------------------------------------------------------
# constructors


def zero_algebra(d: int, name: str = "") -> LYAlgebra:
    return LYAlgebra(d, _zero_binary(d), _zero_ternary(d), name or f"abelian{d}")


def from_tensors(binary, ternary, name: str = "") -> LYAlgebra:
    """Wrap raw full tensors (no validation; check_axioms is the arbiter)."""
    d = len(binary)
    b = tuple(tuple(qvec(binary[i][j]) for j in range(d)) for i in range(d))
    t = tuple(
        tuple(tuple(qvec(ternary[i][j][k]) for k in range(d)) for j in range(d))
        for i in range(d)
    )
    return LYAlgebra(d, b, t, name)


def from_sparse(
    d: int,
    binary_entries: dict[tuple[int, int], Sequence] | None = None,
    ternary_entries: dict[tuple[int, int, int], Sequence] | None = None,
    name: str = "",
) -> LYAlgebra:
    """Build from i<j representative entries (0-based), deriving the mirrors.

    Along this path LY1 and LY2 hold by construction.
    """
    b = [[list(zero_vector(d)) for _ in range(d)] for _ in range(d)]
    t = [[[list(zero_vector(d)) for _ in range(d)] for _ in range(d)] for _ in range(d)]
    for (i, j), v in (binary_entries or {}).items():
        if not 0 <= i < j < d:
            raise ShapeMismatch(f"binary entry needs 0 <= i < j < d, got ({i}, {j})")
        vv = qvec(v)
        b[i][j] = list(vv)
        b[j][i] = [-x for x in vv]
    for (i, j, k), v in (ternary_entries or {}).items():
        if not (0 <= i < j < d and 0 <= k < d):
            raise ShapeMismatch(f"ternary entry needs 0 <= i < j < d, got ({i}, {j}, {k})")
        vv = qvec(v)
        t[i][j][k] = list(vv)
        t[j][i][k] = [-x for x in vv]
    return from_tensors(b, t, name)


def from_lie(binary, name: str = "") -> LYAlgebra:
    """Lie algebra -> LY algebra with {a, b, c} = [[a, b], c].

    The input binary tensor must be antisymmetric and satisfy Jacobi.
    """
    d = len(binary)
    lie = from_tensors(binary, _zero_ternary(d), name)
    for i in range(d):
        for j in range(d):
            if not vec_is_zero(vec_add(lie.binary[i][j], lie.binary[j][i])):
                raise NotALieAlgebra("binary tensor is not antisymmetric", triple=(i, j))
    for i, j, k in itertools.product(range(d), repeat=3):
        jac = vec_add(
            vec_add(
                lie.bracket(lie.binary[i][j], lie.basis_vector(k)),
                lie.bracket(lie.binary[j][k], lie.basis_vector(i)),
            ),
            lie.bracket(lie.binary[k][i], lie.basis_vector(j)),
        )
        if not vec_is_zero(jac):
            raise NotALieAlgebra("Jacobi identity fails", triple=(i, j, k))
    t = tuple(
        tuple(
            tuple(lie.bracket(lie.binary[i][j], lie.basis_vector(k)) for k in range(d))
            for j in range(d)
        )
        for i in range(d)
    )
    return LYAlgebra(d, lie.binary, t, name)


def from_leibniz(product, name: str = "") -> LYAlgebra:
    """Leibniz algebra -> LY algebra: [a,b] = a.b - b.a, {a,b,c} = -(a.b).c."""
    d = len(product)
    p = from_tensors(product, _zero_ternary(d), name)  # reuse bracket() for x.y
    for i, j, k in itertools.product(range(d), repeat=3):
        lhs = p.bracket(p.basis_vector(i), p.binary[j][k])
        rhs = vec_add(
            p.bracket(p.binary[i][j], p.basis_vector(k)),
            p.bracket(p.basis_vector(j), p.binary[i][k]),
        )
        if not vec_is_zero(vec_sub(lhs, rhs)):
            raise NotALeibnizAlgebra("Leibniz identity fails", triple=(i, j, k))
    b = tuple(
        tuple(vec_sub(p.binary[i][j], p.binary[j][i]) for j in range(d)) for i in range(d)
    )
    t = tuple(
        tuple(
            tuple(vec_scale(Fraction(-1), p.bracket(p.binary[i][j], p.basis_vector(k))) for k in range(d))
            for j in range(d)
        )
        for i in range(d)
    )
    return LYAlgebra(d, b, t, name)


def from_lie_triple(ternary, name: str = "") -> LYAlgebra:
    """Ternary tensor with zero binary part; validity left to check_axioms."""
    d = len(ternary)
    return from_tensors(_zero_binary(d), ternary, name)


def meson(n: int, name: str = "") -> LYAlgebra:
    """Lie triple system with {G_i, G_j, G_k} = delta_ki G_j - delta_kj G_i."""
    if n < 1:
        raise ShapeMismatch("meson(n) needs n >= 1")
    t = [[[list(zero_vector(n)) for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i, j, k in itertools.product(range(n), repeat=3):
        if k == i:
            t[i][j][k][j] += Fraction(1)
        if k == j:
            t[i][j][k][i] -= Fraction(1)
    return from_tensors(_zero_binary(n), t, name or f"meson{n}")


def example_3dim(name: str = "3dim") -> LYAlgebra:
    """Three-dimensional algebra with [e1,e2] = e3 and {e1,e2,e1} = e3."""
    e3 = (0, 0, 1)
    return from_sparse(3, {(0, 1): e3}, {(0, 1, 0): e3}, name)


def from_reductive_pair(lie: LYAlgebra, h_idx: Sequence[int], m_idx: Sequence[int], name: str = "") -> LYAlgebra:
    """LY algebra on the m-part of a reductive decomposition of a Lie algebra.

    ``lie`` supplies the ambient binary bracket <.,.> (its ternary part is
    ignored).  Requires h_idx and m_idx to partition the basis with
    <h,h> in h and <h,m> in m.
    """
    d = lie.dim
    h_set, m_set = set(h_idx), set(m_idx)
    if h_set & m_set or h_set | m_set != set(range(d)):
        raise NotReductive("h and m index sets must partition the basis")

    def component_outside(vec: Vector, allowed: set[int]) -> bool:
        return any(vec[k] != 0 for k in range(d) if k not in allowed)

    for i in h_idx:
        for j in h_idx:
            if component_outside(lie.binary[i][j], h_set):
                raise NotReductive(f"<h,h> leaves h on basis pair ({i + 1}, {j + 1})")
    for i in h_idx:
        for j in m_idx:
            if component_outside(lie.binary[i][j], m_set):
                raise NotReductive(f"<h,m> leaves m on basis pair ({i + 1}, {j + 1})")

    m_list = list(m_idx)
    dm = len(m_list)
    pos = {g: p for p, g in enumerate(m_list)}

    def proj_m(vec: Vector) -> Vector:
        return tuple(vec[g] for g in m_list)

    def proj_h(vec: Vector) -> Vector:
        return tuple(vec[k] if k in h_set else Fraction(0) for k in range(d))

    b = [[list(zero_vector(dm)) for _ in range(dm)] for _ in range(dm)]
    t = [[[list(zero_vector(dm)) for _ in range(dm)] for _ in range(dm)] for _ in range(dm)]
    for ai, gi in enumerate(m_list):
        for aj, gj in enumerate(m_list):
            full = lie.binary[gi][gj]
            b[ai][aj] = list(proj_m(full))
            hpart = proj_h(full)
            for ak, gk in enumerate(m_list):
                t[ai][aj][ak] = list(proj_m(lie.bracket(hpart, lie.basis_vector(gk))))
    return from_tensors(b, t, name or (lie.name + "/m" if lie.name else "reductive-m"))


# ---------------------------------------------------------------------------
# maps


def is_homomorphism(phi: Matrix, a: LYAlgebra, b: LYAlgebra) -> bool:
    """True iff phi carries both brackets of a to those of b on all basis tuples."""
    if phi.cols != a.dim or phi.rows != b.dim:
        raise ShapeMismatch(f"expected a {b.dim}x{a.dim} matrix, got {phi.rows}x{phi.cols}")
    cols = [phi.col(j) for j in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = phi.matvec(a.binary[i][j])
            rhs = b.bracket(cols[i], cols[j])
            if lhs != rhs:
                return False
    for i, j, k in itertools.product(range(a.dim), repeat=3):
        lhs = phi.matvec(a.ternary[i][j][k])
        rhs = b.triple(cols[i], cols[j], cols[k])
        if lhs != rhs:
            return False
    return True


def is_automorphism(phi: Matrix, a: LYAlgebra) -> bool:
    if phi.rows != phi.cols:
        raise ShapeMismatch("automorphism candidate must be square")
    return phi.is_invertible() and is_homomorphism(phi, a, a)


def is_derivation(m: Matrix, a: LYAlgebra) -> bool:
    """Both derivation identities, checked on all basis tuples."""
    if m.rows != a.dim or m.cols != a.dim:
        raise ShapeMismatch("derivation candidate has wrong shape")
    cols = [m.col(j) for j in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = m.matvec(a.binary[i][j])
            rhs = vec_add(a.bracket(cols[i], a.basis_vector(j)), a.bracket(a.basis_vector(i), cols[j]))
            if lhs != rhs:
                return False
    for i, j, k in itertools.product(range(a.dim), repeat=3):
        lhs = m.matvec(a.ternary[i][j][k])
        rhs = a.triple(cols[i], a.basis_vector(j), a.basis_vector(k))
        rhs = vec_add(rhs, a.triple(a.basis_vector(i), cols[j], a.basis_vector(k)))
        rhs = vec_add(rhs, a.triple(a.basis_vector(i), a.basis_vector(j), cols[k]))
        if lhs != rhs:
            return False
    return True


def derivations(a: LYAlgebra) -> SubspaceBasis:
    """Basis of the derivation algebra, as flattened d x d matrices.

    Solves the joint linear system of the binary and ternary derivation
    identities over the matrix entries; the result is verified to be closed
    under commutator.  Unknown x[r*d + s] is the (r, s) entry.
    """
    _require_valid(a)
    d = a.dim
    rows: list[list[Fraction]] = []
    for i in range(d):
        for j in range(d):
            cij = a.binary[i][j]
            for k in range(d):
                row = [Fraction(0)] * (d * d)
                for s in range(d):
                    if cij[s]:
                        row[k * d + s] += cij[s]
                for r in range(d):
                    if a.binary[r][j][k]:
                        row[r * d + i] -= a.binary[r][j][k]
                    if a.binary[i][r][k]:
                        row[r * d + j] -= a.binary[i][r][k]
                if any(row):
                    rows.append(row)
    for i, j, l in itertools.product(range(d), repeat=3):
        tijl = a.ternary[i][j][l]
        for k in range(d):
            row = [Fraction(0)] * (d * d)
            for s in range(d):
                if tijl[s]:
                    row[k * d + s] += tijl[s]
            for r in range(d):
                if a.ternary[r][j][l][k]:
                    row[r * d + i] -= a.ternary[r][j][l][k]
                if a.ternary[i][r][l][k]:
                    row[r * d + j] -= a.ternary[i][r][l][k]
                if a.ternary[i][j][r][k]:
                    row[r * d + l] -= a.ternary[i][j][r][k]
            if any(row):
                rows.append(row)
    if not rows:
        rows = [[Fraction(0)] * (d * d)]
    basis = Matrix.from_rows(rows).kernel_basis()

    # closure under commutator is a theorem; assert it as a consistency check
    mats = [Matrix(d, d, v) for v in basis.vectors]
    for m1 in mats:
        for m2 in mats:
            comm = m1 @ m2 - m2 @ m1
            if not basis.contains(comm.entries):
                raise InvalidAlgebra("derivation space is not closed under commutator")
    return basis


def inner_derivation(a: LYAlgebra, x: Sequence, y: Sequence) -> Matrix:
    """The map z -> {x, y, z} as a d x d matrix."""
    _require_valid(a)
    x, y = qvec(x), qvec(y)
    cols = [a.triple(x, y, a.basis_vector(k)) for k in range(a.dim)]
    return Matrix(a.dim, a.dim, [cols[k][r] for r in range(a.dim) for k in range(a.dim)])
