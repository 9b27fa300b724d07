"""Representations (rho, D, theta) of Lie-Yamaguti algebras.

A representation on a module of dimension e stores rho as d endomorphisms and
D, theta as d x d families of endomorphisms, all e x e matrices indexed by
basis elements; bilinearity extends them to arbitrary arguments.

The semi-direct product carries the brackets

    [x+u, y+v]      = [x,y] + rho(x)v - rho(y)u
    {x+u, y+v, z+w} = {x,y,z} + D(x,y)w + theta(y,z)u - theta(x,z)v

on g (+) V.  The two theta terms are pinned jointly by LY2 (they must be
antisymmetric partners) and by mixed LY3, which reduces them to RLYB1; among
the completions compatible with RLYB1 this is the one whose twisted version
matches the cohomology operators: a (2,3)-pair twists it into a Lie-Yamaguti
algebra exactly when delta and delta_star both kill the pair, and shifting a
twist by a coboundary is the shear isomorphism (x, u) -> (x, u + h(x)).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import LYAlgebra, from_tensors, is_valid
from .errors import InvalidAlgebra, ShapeMismatch
from .linalg import Matrix, Vector, zero_vector

RLYB_CONDITIONS = ("RLYB1", "RLYB2", "RLYB3", "RLYB4", "RLYB5", "RLYB6")


@dataclass(frozen=True)
class Representation:
    """Basis-indexed data of a representation on an e-dimensional module."""

    e: int
    rho: tuple  # rho[i]: e x e Matrix
    dmap: tuple  # dmap[i][j]: e x e Matrix for D(e_i, e_j)
    theta: tuple  # theta[i][j]: e x e Matrix for theta(e_i, e_j)

    @property
    def d(self) -> int:
        return len(self.rho)

    def rho_vec(self, x: Sequence[Fraction]) -> Matrix:
        out = Matrix.zero(self.e, self.e)
        for i, xi in enumerate(x):
            if xi:
                out = out + self.rho[i].scale(xi)
        return out

    def dmap_vec(self, x, y) -> Matrix:
        out = Matrix.zero(self.e, self.e)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    out = out + self.dmap[i][j].scale(xi * yj)
        return out

    def theta_vec(self, x, y) -> Matrix:
        out = Matrix.zero(self.e, self.e)
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    out = out + self.theta[i][j].scale(xi * yj)
        return out

    def replace_theta(self, i: int, j: int, m: Matrix) -> "Representation":
        theta = [list(row) for row in self.theta]
        theta[i][j] = m
        return Representation(self.e, self.rho, self.dmap, tuple(tuple(r) for r in theta))


@dataclass
class RepReport:
    """Defects of RLYB1..RLYB6 plus the derived RLYB7 (informational)."""

    violations: dict = field(default_factory=lambda: {c: [] for c in RLYB_CONDITIONS})
    rlyb7_violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(not v for v in self.violations.values())

    def violated(self) -> list[str]:
        return [c for c in RLYB_CONDITIONS if self.violations[c]]

    def add(self, cond: str, tup: tuple, defect: Matrix) -> None:
        self.violations[cond].append((tup, defect))


def _check_shapes(a: LYAlgebra, r: Representation) -> None:
    d = a.dim
    if len(r.rho) != d or len(r.dmap) != d or len(r.theta) != d:
        raise ShapeMismatch("representation is indexed by a different basis size")
    for m in r.rho:
        if m.rows != r.e or m.cols != r.e:
            raise ShapeMismatch("rho matrices must be e x e")
    for fam in (r.dmap, r.theta):
        if any(len(row) != d for row in fam):
            raise ShapeMismatch("D/theta must be d x d families")
        for row in fam:
            for m in row:
                if m.rows != r.e or m.cols != r.e:
                    raise ShapeMismatch("D/theta matrices must be e x e")


def check_representation(a: LYAlgebra, r: Representation, first_only: bool = False) -> RepReport:
    """Evaluate RLYB1-RLYB6 on all basis tuples; RLYB7 is reported as info.

    RLYB1 scans pairs, RLYB2/RLYB3/RLYB5 triples, RLYB4/RLYB6 quadruples
    (RLYB5 has only three arguments).
    """
    if not is_valid(a):
        raise InvalidAlgebra("check_representation needs a valid base algebra")
    _check_shapes(a, r)
    d = a.dim
    rng = range(d)
    report = RepReport()

    def done() -> bool:
        return first_only and not report.ok

    for i, j in itertools.product(rng, rng):
        defect = (
            r.dmap[i][j]
            + r.theta[i][j]
            - r.theta[j][i]
            - (r.rho[i] @ r.rho[j] - r.rho[j] @ r.rho[i])
            + r.rho_vec(a.binary[i][j])
        )
        if not defect.is_zero():
            report.add("RLYB1", (i, j), defect)
            if done():
                return report
    for i, j, k in itertools.product(rng, rng, rng):
        defect = (
            r.theta_vec(a.basis_vector(i), a.binary[j][k])
            - r.rho[j] @ r.theta[i][k]
            + r.rho[k] @ r.theta[i][j]
        )
        if not defect.is_zero():
            report.add("RLYB2", (i, j, k), defect)
            if done():
                return report
    for i, j, k in itertools.product(rng, rng, rng):
        defect = (
            r.theta_vec(a.binary[i][j], a.basis_vector(k))
            - r.theta[i][k] @ r.rho[j]
            + r.theta[j][k] @ r.rho[i]
        )
        if not defect.is_zero():
            report.add("RLYB3", (i, j, k), defect)
            if done():
                return report
    for i, j, k, l in itertools.product(rng, rng, rng, rng):
        defect = (
            r.theta[k][l] @ r.theta[i][j]
            - r.theta[j][l] @ r.theta[i][k]
            - r.theta_vec(a.basis_vector(i), a.ternary[j][k][l])
            + r.dmap[j][k] @ r.theta[i][l]
        )
        if not defect.is_zero():
            report.add("RLYB4", (i, j, k, l), defect)
            if done():
                return report
    for i, j, k in itertools.product(rng, rng, rng):
        defect = (
            r.dmap[i][j] @ r.rho[k]
            - r.rho[k] @ r.dmap[i][j]
            - r.rho_vec(a.ternary[i][j][k])
        )
        if not defect.is_zero():
            report.add("RLYB5", (i, j, k), defect)
            if done():
                return report
    for i, j, k, l in itertools.product(rng, rng, rng, rng):
        defect = (
            r.dmap[i][j] @ r.theta[k][l]
            - r.theta[k][l] @ r.dmap[i][j]
            - r.theta_vec(a.ternary[i][j][k], a.basis_vector(l))
            - r.theta_vec(a.basis_vector(k), a.ternary[i][j][l])
        )
        if not defect.is_zero():
            report.add("RLYB6", (i, j, k, l), defect)
            if done():
                return report
    if not first_only:
        for i, j, k in itertools.product(rng, rng, rng):
            defect = (
                r.dmap_vec(a.binary[i][j], a.basis_vector(k))
                + r.dmap_vec(a.binary[j][k], a.basis_vector(i))
                + r.dmap_vec(a.binary[k][i], a.basis_vector(j))
            )
            if not defect.is_zero():
                report.rlyb7_violations.append(((i, j, k), defect))
    return report


def is_representation(a: LYAlgebra, r: Representation) -> bool:
    return check_representation(a, r, first_only=True).ok


def check_rlyb7(a: LYAlgebra, r: Representation) -> bool:
    """Cyclic identity D([a,b],c) + D([b,c],a) + D([c,a],b) = 0 on basis triples."""
    if not is_valid(a):
        raise InvalidAlgebra("check_rlyb7 needs a valid base algebra")
    _check_shapes(a, r)
    for i, j, k in itertools.product(range(a.dim), repeat=3):
        defect = (
            r.dmap_vec(a.binary[i][j], a.basis_vector(k))
            + r.dmap_vec(a.binary[j][k], a.basis_vector(i))
            + r.dmap_vec(a.binary[k][i], a.basis_vector(j))
        )
        if not defect.is_zero():
            return False
    return True


def trivial_rep(a: LYAlgebra, e: int) -> Representation:
    z = Matrix.zero(e, e)
    d = a.dim
    return Representation(
        e,
        tuple(z for _ in range(d)),
        tuple(tuple(z for _ in range(d)) for _ in range(d)),
        tuple(tuple(z for _ in range(d)) for _ in range(d)),
    )


def _matrix_from_columns(cols: list[Vector], e: int) -> Matrix:
    return Matrix(e, len(cols), [cols[j][i] for i in range(e) for j in range(len(cols))])


def adjoint(a: LYAlgebra) -> Representation:
    """rho(a) = [a, .], D(a,b) = {a, b, .}, theta(a,b) = {., a, b}."""
    if not is_valid(a):
        raise InvalidAlgebra("adjoint needs a valid algebra")
    d = a.dim
    rho = tuple(_matrix_from_columns([a.binary[i][j] for j in range(d)], d) for i in range(d))
    dmap = tuple(
        tuple(_matrix_from_columns([a.ternary[i][j][k] for k in range(d)], d) for j in range(d))
        for i in range(d)
    )
    theta = tuple(
        tuple(_matrix_from_columns([a.ternary[k][i][j] for k in range(d)], d) for j in range(d))
        for i in range(d)
    )
    return Representation(d, rho, dmap, theta)


def semidirect(a: LYAlgebra, r: Representation, name: str = "") -> LYAlgebra:
    """Algebra structure on g (+) V induced by (rho, D, theta).

    Valid (passes check_axioms) exactly when r passes check_representation;
    invalid r is accepted so both directions of that equivalence are testable.
    """
    return _product_algebra(a, r, None, name or (a.name + "⋉V" if a.name else "semidirect"))


def twisted_semidirect(a: LYAlgebra, r: Representation, tau, name: str = "") -> LYAlgebra:
    """Semi-direct product twisted by a (2,3)-cochain pair tau = (f, g).

    f adds a module component to the binary bracket of two algebra elements,
    g to the ternary bracket of three algebra elements.  When tau lies in the
    cocycle space the twist preserves validity.
    """
    from .cohomology import CochainPair  # local import to avoid a cycle

    if not isinstance(tau, CochainPair) or tau.p != 1:
        raise ShapeMismatch("twist requires a (2,3)-cochain pair")
    if tau.f.d != a.dim or tau.f.e != r.e:
        raise ShapeMismatch("twist cochain shaped for a different (algebra, module)")
    return _product_algebra(a, r, tau, name or "twisted-semidirect")


def _product_algebra(a: LYAlgebra, r: Representation, tau, name: str) -> LYAlgebra:
    _check_shapes(a, r)
    d, e = a.dim, r.e
    n = d + e
    zn = zero_vector(n)

    def emb_alg(v: Vector) -> list[Fraction]:
        return list(v) + [Fraction(0)] * e

    def emb_mod(v: Vector) -> list[Fraction]:
        return [Fraction(0)] * d + list(v)

    b = [[list(zn) for _ in range(n)] for _ in range(n)]
    t = [[[list(zn) for _ in range(n)] for _ in range(n)] for _ in range(n)]

    for i in range(d):
        for j in range(d):
            vec = emb_alg(a.binary[i][j])
            if tau is not None:
                fv = tau.f.eval_basis((i, j))
                for m in range(e):
                    vec[d + m] += fv[m]
            b[i][j] = vec
    for i in range(d):
        for bb in range(e):
            col = r.rho[i].col(bb)
            b[i][d + bb] = emb_mod(col)
            b[d + bb][i] = emb_mod(tuple(-x for x in col))

    for i in range(d):
        for j in range(d):
            for k in range(d):
                vec = emb_alg(a.ternary[i][j][k])
                if tau is not None:
                    gv = tau.g.eval_basis((i, j, k))
                    for m in range(e):
                        vec[d + m] += gv[m]
                t[i][j][k] = vec
            for cc in range(e):
                # {e_i, e_j, u} = D(e_i, e_j) u
                t[i][j][d + cc] = emb_mod(r.dmap[i][j].col(cc))
        for j in range(d):
            for aa in range(e):
                # {u, e_j, e_k} = theta(e_j, e_k) u ; {e_j, u, e_k} = -theta(e_j, e_k) u
                for k in range(d):
                    t[d + aa][j][k] = emb_mod(r.theta[j][k].col(aa))
                    t[j][d + aa][k] = emb_mod(tuple(-x for x in r.theta[j][k].col(aa)))
    return from_tensors(b, t, name)
