"""Yamaguti cochain spaces, coboundaries and cohomology groups.

Cochains of arity n >= 2 vanish whenever two arguments in slots (2i-1, 2i)
coincide; over Q this is equivalent to antisymmetry in each such consecutive
pair, so coefficients are stored on the pair-index basis: p = floor(n/2)
unordered pairs (i < j), a trailing basis index for odd n, and a module
coordinate.  ``cochain_dim`` counts exactly these coordinates.

The coboundary delta = (delta_I, delta_II) raises a (2p, 2p+1)-pair by one
level; the auxiliary operator delta* maps C^(2,3) to C^(3,4).  The sign
convention of delta*_I's rho-block,

    - rho(x1) f(x2, x3) - rho(x2) f(x3, x1) - rho(x3) f(x1, x2),

is the unique one (given its cyclic f- and g-blocks) for which
delta* o delta vanishes identically on C^0; the test suite pins this with
exact randomized checks.  The same kernels characterize twist-validity: a
(2,3)-pair twists the semi-direct product into a Lie-Yamaguti algebra exactly
when delta and delta* both kill it.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import LYAlgebra
from .errors import (
    CocycleContainmentFailure,
    InvalidAlgebra,
    NotASubspace,
    ShapeMismatch,
    SizeCapExceeded,
)
from .linalg import (
    Matrix,
    SubspaceBasis,
    Vector,
    quotient_dim,
    vec_add,
    vec_scale,
    zero_vector,
)
from .representation import Representation, _check_shapes

DEFAULT_SIZE_CAP = 50_000

Z23_READING = "Z23 = ker(delta) ∩ ker(delta_star) on pairs (f, g)"


def cochain_dim(n: int, d: int, e: int) -> int:
    """Number of coordinates of C^n for a d-dim algebra and e-dim module."""
    if n < 1:
        raise ShapeMismatch("cochain level must be >= 1")
    if n == 1:
        return d * e
    npairs = d * (d - 1) // 2
    p, odd = divmod(n, 2)
    return npairs**p * (d if odd else 1) * e


class Cochain:
    """An element of C^n stored on the pair-index basis."""

    __slots__ = ("n", "d", "e", "coeffs", "_npairs", "_pair_index")

    def __init__(self, n: int, d: int, e: int, coeffs: Sequence | None = None):
        if n < 2:
            raise ShapeMismatch("Cochain models arities >= 2; C^1 is an e x d matrix")
        self.n = n
        self.d = d
        self.e = e
        self._npairs = d * (d - 1) // 2
        self._pair_index = {}
        q = 0
        for i in range(d):
            for j in range(i + 1, d):
                self._pair_index[(i, j)] = q
                q += 1
        size = cochain_dim(n, d, e)
        if coeffs is None:
            self.coeffs = [Fraction(0)] * size
        else:
            self.coeffs = [Fraction(x) for x in coeffs]
            if len(self.coeffs) != size:
                raise ShapeMismatch(f"C^{n} needs {size} coefficients, got {len(self.coeffs)}")

    @property
    def pairs(self) -> int:
        return self.n // 2

    @property
    def has_tail(self) -> bool:
        return self.n % 2 == 1

    def copy(self) -> "Cochain":
        return Cochain(self.n, self.d, self.e, list(self.coeffs))

    def rep_tuples(self):
        """Representative basis tuples: increasing pairs, free trailing slot."""
        pair_list = [(i, j) for i in range(self.d) for j in range(i + 1, self.d)]
        tails = range(self.d) if self.has_tail else (None,)
        for combo in itertools.product(pair_list, repeat=self.pairs):
            flat = tuple(x for pr in combo for x in pr)
            for t in tails:
                yield flat if t is None else flat + (t,)

    def _base_offset(self, tup: tuple) -> tuple[int, int]:
        """(sign, flat offset of the e-block) for a full basis tuple; sign 0 if degenerate."""
        idx = 0
        sign = 1
        for a in range(self.pairs):
            i, j = tup[2 * a], tup[2 * a + 1]
            if i == j:
                return 0, 0
            if i > j:
                i, j = j, i
                sign = -sign
            idx = idx * self._npairs + self._pair_index[(i, j)]
        if self.has_tail:
            idx = idx * self.d + tup[-1]
        return sign, idx * self.e

    def eval_basis(self, tup: tuple) -> Vector:
        """Value (an e-vector) on a tuple of basis indices."""
        if len(tup) != self.n:
            raise ShapeMismatch(f"C^{self.n} evaluated on {len(tup)} arguments")
        sign, base = self._base_offset(tup)
        if sign == 0:
            return zero_vector(self.e)
        block = self.coeffs[base : base + self.e]
        return tuple(block) if sign == 1 else tuple(-x for x in block)

    def eval_weighted(self, tup: tuple, slot: int, weights: Sequence[Fraction]) -> Vector:
        """Value with one slot carrying a coordinate vector instead of a basis index."""
        out = zero_vector(self.e)
        lst = list(tup)
        for l, w in enumerate(weights):
            if w:
                lst[slot] = l
                out = vec_add(out, vec_scale(w, self.eval_basis(tuple(lst))))
        return out

    def eval_vectors(self, args: Sequence[Sequence[Fraction]]) -> Vector:
        """Full multilinear evaluation on arbitrary coordinate vectors."""
        if len(args) != self.n:
            raise ShapeMismatch("wrong number of arguments")
        out = zero_vector(self.e)
        for tup in itertools.product(range(self.d), repeat=self.n):
            c = Fraction(1)
            for s, l in enumerate(tup):
                c *= args[s][l]
                if not c:
                    break
            if c:
                out = vec_add(out, vec_scale(c, self.eval_basis(tup)))
        return out

    def set_block(self, tup: tuple, vec: Sequence[Fraction]) -> None:
        sign, base = self._base_offset(tup)
        if sign == 0:
            raise ShapeMismatch("cannot assign on a degenerate tuple")
        for m, x in enumerate(vec):
            self.coeffs[base + m] = Fraction(x) if sign == 1 else -Fraction(x)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.coeffs)

    def __add__(self, other: "Cochain") -> "Cochain":
        if (self.n, self.d, self.e) != (other.n, other.d, other.e):
            raise ShapeMismatch("cochain shape mismatch")
        return Cochain(self.n, self.d, self.e, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c) -> "Cochain":
        c = Fraction(c)
        return Cochain(self.n, self.d, self.e, [c * a for a in self.coeffs])


@dataclass(frozen=True)
class CochainPair:
    """A (2p, 2p+1)-cochain: f in C^{2p}, g in C^{2p+1}."""

    p: int
    f: Cochain
    g: Cochain

    def __post_init__(self):
        if self.p < 1:
            raise ShapeMismatch("cochain pairs exist for p >= 1")
        if self.f.n != 2 * self.p or self.g.n != 2 * self.p + 1:
            raise ShapeMismatch("component arities do not match the level")
        if (self.f.d, self.f.e) != (self.g.d, self.g.e):
            raise ShapeMismatch("components over different (d, e)")

    @classmethod
    def zero(cls, p: int, d: int, e: int) -> "CochainPair":
        return cls(p, Cochain(2 * p, d, e), Cochain(2 * p + 1, d, e))

    def flat(self) -> list[Fraction]:
        return list(self.f.coeffs) + list(self.g.coeffs)

    @classmethod
    def from_flat(cls, p: int, d: int, e: int, flat: Sequence) -> "CochainPair":
        nf = cochain_dim(2 * p, d, e)
        return cls(p, Cochain(2 * p, d, e, flat[:nf]), Cochain(2 * p + 1, d, e, flat[nf:]))

    def is_zero(self) -> bool:
        return self.f.is_zero() and self.g.is_zero()


def _require_rep(a: LYAlgebra, r: Representation) -> None:
    from .algebra import is_valid

    if not is_valid(a):
        raise InvalidAlgebra("cohomology needs a valid base algebra")
    _check_shapes(a, r)


# ---------------------------------------------------------------------------
# coboundaries


def delta_zero(a: LYAlgebra, r: Representation, f: Matrix) -> CochainPair:
    """Coboundary of the diagonal element (f, f) of C^0; lands in C^(2,3)."""
    _require_rep(a, r)
    if f.rows != r.e or f.cols != a.dim:
        raise ShapeMismatch(f"C^1 element must be {r.e} x {a.dim}")
    d, e = a.dim, r.e
    fcol = [f.col(s) for s in range(d)]
    out_f = Cochain(2, d, e)
    out_g = Cochain(3, d, e)
    for i in range(d):
        for j in range(i + 1, d):
            v = r.rho[i].matvec(fcol[j])
            v = vec_add(v, vec_scale(Fraction(-1), r.rho[j].matvec(fcol[i])))
            v = vec_add(v, vec_scale(Fraction(-1), f.matvec(a.binary[i][j])))
            out_f.set_block((i, j), v)
            for k in range(d):
                w = r.theta[j][k].matvec(fcol[i])
                w = vec_add(w, vec_scale(Fraction(-1), r.theta[i][k].matvec(fcol[j])))
                w = vec_add(w, r.dmap[i][j].matvec(fcol[k]))
                w = vec_add(w, vec_scale(Fraction(-1), f.matvec(a.ternary[i][j][k])))
                out_g.set_block((i, j, k), w)
    return CochainPair(1, out_f, out_g)


def _delta_i_at(a: LYAlgebra, r: Representation, c: CochainPair, xs: tuple) -> Vector:
    p = c.p
    sgn_p = Fraction(-1) ** p
    g, f = c.g, c.f
    head = xs[: 2 * p]
    x_a, x_b = xs[2 * p], xs[2 * p + 1]
    v = r.rho[x_a].matvec(g.eval_basis(head + (x_b,)))
    v = vec_add(v, vec_scale(Fraction(-1), r.rho[x_b].matvec(g.eval_basis(head + (x_a,)))))
    v = vec_add(v, vec_scale(Fraction(-1), g.eval_weighted(head + (0,), 2 * p, a.binary[x_a][x_b])))
    out = vec_scale(sgn_p, v)
    for k in range(1, p + 1):
        i, j = xs[2 * k - 2], xs[2 * k - 1]
        reduced = xs[: 2 * k - 2] + xs[2 * k :]
        term = r.dmap[i][j].matvec(f.eval_basis(reduced))
        out = vec_add(out, vec_scale(Fraction(-1) ** (k + 1), term))
    for k in range(1, p + 2):
        i, j = xs[2 * k - 2], xs[2 * k - 1]
        reduced = xs[: 2 * k - 2] + xs[2 * k :]
        sgn = Fraction(-1) ** k
        for pos_orig in range(2 * k, 2 * p + 2):
            slot = pos_orig - 2
            weights = a.ternary[i][j][xs[pos_orig]]
            term = f.eval_weighted(reduced, slot, weights)
            out = vec_add(out, vec_scale(sgn, term))
    return out


def _delta_ii_at(a: LYAlgebra, r: Representation, c: CochainPair, xs: tuple) -> Vector:
    p = c.p
    sgn_p = Fraction(-1) ** p
    g = c.g
    head = xs[: 2 * p]
    x_a, x_b, x_c = xs[2 * p], xs[2 * p + 1], xs[2 * p + 2]
    v = r.theta[x_b][x_c].matvec(g.eval_basis(head + (x_a,)))
    v = vec_add(v, vec_scale(Fraction(-1), r.theta[x_a][x_c].matvec(g.eval_basis(head + (x_b,)))))
    out = vec_scale(sgn_p, v)
    for k in range(1, p + 2):
        i, j = xs[2 * k - 2], xs[2 * k - 1]
        reduced = xs[: 2 * k - 2] + xs[2 * k :]
        term = r.dmap[i][j].matvec(g.eval_basis(reduced))
        out = vec_add(out, vec_scale(Fraction(-1) ** (k + 1), term))
        sgn = Fraction(-1) ** k
        for pos_orig in range(2 * k, 2 * p + 3):
            slot = pos_orig - 2
            weights = a.ternary[i][j][xs[pos_orig]]
            term = g.eval_weighted(reduced, slot, weights)
            out = vec_add(out, vec_scale(sgn, term))
    return out


def delta(a: LYAlgebra, r: Representation, c: CochainPair) -> CochainPair:
    """Coboundary C^(2p,2p+1) -> C^(2p+2,2p+3)."""
    _require_rep(a, r)
    if (c.f.d, c.f.e) != (a.dim, r.e):
        raise ShapeMismatch("cochain shaped for a different (algebra, module)")
    p = c.p
    d, e = a.dim, r.e
    out_f = Cochain(2 * p + 2, d, e)
    out_g = Cochain(2 * p + 3, d, e)
    for xs in out_f.rep_tuples():
        v = _delta_i_at(a, r, c, xs)
        if any(v):
            out_f.set_block(xs, v)
    for xs in out_g.rep_tuples():
        v = _delta_ii_at(a, r, c, xs)
        if any(v):
            out_g.set_block(xs, v)
    return CochainPair(p + 1, out_f, out_g)


def delta_star(a: LYAlgebra, r: Representation, c: CochainPair) -> tuple[Cochain, Cochain]:
    """The operator C^(2,3) -> C^(3,4); defined for p = 1 only."""
    _require_rep(a, r)
    if c.p != 1:
        raise ShapeMismatch("delta_star is defined on C^(2,3)")
    if (c.f.d, c.f.e) != (a.dim, r.e):
        raise ShapeMismatch("cochain shaped for a different (algebra, module)")
    d, e = a.dim, r.e
    f, g = c.f, c.g
    out3 = Cochain(3, d, e)
    out4 = Cochain(4, d, e)
    for xs in out3.rep_tuples():
        x0, x1, x2 = xs
        v = vec_scale(Fraction(-1), r.rho[x0].matvec(f.eval_basis((x1, x2))))
        v = vec_add(v, vec_scale(Fraction(-1), r.rho[x1].matvec(f.eval_basis((x2, x0)))))
        v = vec_add(v, vec_scale(Fraction(-1), r.rho[x2].matvec(f.eval_basis((x0, x1)))))
        v = vec_add(v, f.eval_weighted((0, x2), 0, a.binary[x0][x1]))
        v = vec_add(v, f.eval_weighted((0, x0), 0, a.binary[x1][x2]))
        v = vec_add(v, f.eval_weighted((0, x1), 0, a.binary[x2][x0]))
        v = vec_add(v, g.eval_basis((x0, x1, x2)))
        v = vec_add(v, g.eval_basis((x1, x2, x0)))
        v = vec_add(v, g.eval_basis((x2, x0, x1)))
        if any(v):
            out3.set_block(xs, v)
    for xs in out4.rep_tuples():
        x0, x1, x2, x3 = xs
        v = r.theta[x0][x3].matvec(f.eval_basis((x1, x2)))
        v = vec_add(v, r.theta[x1][x3].matvec(f.eval_basis((x2, x0))))
        v = vec_add(v, r.theta[x2][x3].matvec(f.eval_basis((x0, x1))))
        v = vec_add(v, g.eval_weighted((0, x2, x3), 0, a.binary[x0][x1]))
        v = vec_add(v, g.eval_weighted((0, x0, x3), 0, a.binary[x1][x2]))
        v = vec_add(v, g.eval_weighted((0, x1, x3), 0, a.binary[x2][x0]))
        if any(v):
            out4.set_block(xs, v)
    return out3, out4


# ---------------------------------------------------------------------------
# operator matrices and cohomology groups


def _matrix_from_columns(cols: list[list[Fraction]], nrows: int) -> Matrix:
    return Matrix(nrows, len(cols), [cols[j][i] for i in range(nrows) for j in range(len(cols))])


def c1_unit(d: int, e: int, flat_index: int) -> Matrix:
    """Unit element of C^1 = Hom(g, V) for flat index s*e + m."""
    s, m = divmod(flat_index, e)
    entries = [Fraction(0)] * (e * d)
    entries[m * d + s] = Fraction(1)
    return Matrix(e, d, entries)


def c1_flatten(f: Matrix) -> list[Fraction]:
    """Flatten an e x d map as coordinates indexed by s*e + m."""
    return [f[m, s] for s in range(f.cols) for m in range(f.rows)]


def delta_zero_matrix(a: LYAlgebra, r: Representation) -> Matrix:
    d, e = a.dim, r.e
    nrows = cochain_dim(2, d, e) + cochain_dim(3, d, e)
    cols = []
    for idx in range(d * e):
        img = delta_zero(a, r, c1_unit(d, e, idx))
        cols.append(img.flat())
    return _matrix_from_columns(cols, nrows)


def delta_matrix(a: LYAlgebra, r: Representation, p: int) -> Matrix:
    d, e = a.dim, r.e
    src = cochain_dim(2 * p, d, e) + cochain_dim(2 * p + 1, d, e)
    dst = cochain_dim(2 * p + 2, d, e) + cochain_dim(2 * p + 3, d, e)
    cols = []
    for idx in range(src):
        flat = [Fraction(0)] * src
        flat[idx] = Fraction(1)
        img = delta(a, r, CochainPair.from_flat(p, d, e, flat))
        cols.append(img.flat())
    return _matrix_from_columns(cols, dst)


def delta_star_matrix(a: LYAlgebra, r: Representation) -> Matrix:
    d, e = a.dim, r.e
    src = cochain_dim(2, d, e) + cochain_dim(3, d, e)
    dst = cochain_dim(3, d, e) + cochain_dim(4, d, e)
    cols = []
    for idx in range(src):
        flat = [Fraction(0)] * src
        flat[idx] = Fraction(1)
        o3, o4 = delta_star(a, r, CochainPair.from_flat(1, d, e, flat))
        cols.append(list(o3.coeffs) + list(o4.coeffs))
    return _matrix_from_columns(cols, dst)


def _stack(m1: Matrix, m2: Matrix) -> Matrix:
    if m1.cols != m2.cols:
        raise ShapeMismatch("stack needs equal column counts")
    return Matrix(m1.rows + m2.rows, m1.cols, list(m1.entries) + list(m2.entries))


def h1(a: LYAlgebra, r: Representation) -> tuple[int, SubspaceBasis]:
    """Joint kernel of delta_zero's two components inside C^1."""
    _require_rep(a, r)
    m = delta_zero_matrix(a, r)
    basis = m.kernel_basis()
    return basis.dim, basis


@dataclass
class H23Result:
    dim: int
    z_basis: SubspaceBasis
    b_basis: SubspaceBasis
    reading: str = Z23_READING

    @property
    def dim_z(self) -> int:
        return self.z_basis.dim

    @property
    def dim_b(self) -> int:
        return self.b_basis.dim


def h23(a: LYAlgebra, r: Representation) -> H23Result:
    """H^(2,3) = Z/B with Z = ker(delta) ∩ ker(delta_star), B = delta(C^0).

    Containment B <= Z is asserted, never assumed: failure raises
    CocycleContainmentFailure, which signals a formula-transcription bug.
    """
    _require_rep(a, r)
    stacked = _stack(delta_matrix(a, r, 1), delta_star_matrix(a, r))
    z = stacked.kernel_basis()
    b_mat = delta_zero_matrix(a, r)
    b = SubspaceBasis(b_mat.rows, [b_mat.col(j) for j in range(b_mat.cols)])
    try:
        dim = quotient_dim(z, b)
    except NotASubspace as exc:
        raise CocycleContainmentFailure(f"B^(2,3) is not contained in Z^(2,3): {exc}") from exc
    return H23Result(dim, z, b)


@dataclass
class HUpperResult:
    p: int
    dim: int
    dim_z: int
    dim_b: int
    delta_squared_zero: bool


def h_upper(a: LYAlgebra, r: Representation, p: int, cap: int = DEFAULT_SIZE_CAP) -> HUpperResult:
    """H^(2p,2p+1) for p >= 2 by exact kernel/image computation."""
    if p < 2:
        raise ShapeMismatch("h_upper is for p >= 2; use h23 for p = 1")
    _require_rep(a, r)
    d, e = a.dim, r.e
    largest = max(cochain_dim(2 * p + 2, d, e), cochain_dim(2 * p + 3, d, e))
    if largest > cap:
        raise SizeCapExceeded(
            f"target cochain space has {largest} coordinates, cap is {cap}"
        )
    z = delta_matrix(a, r, p).kernel_basis()
    prev = delta_matrix(a, r, p - 1)
    b = SubspaceBasis(prev.rows, [prev.col(j) for j in range(prev.cols)])
    try:
        dim = quotient_dim(z, b)
    except NotASubspace as exc:
        raise CocycleContainmentFailure(
            f"B^(2p,2p+1) is not contained in Z^(2p,2p+1) at p={p}: {exc}"
        ) from exc
    return HUpperResult(p, dim, z.dim, b.dim, True)


# ---------------------------------------------------------------------------
# randomized cochains for property tests


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-4, 4), rng.choice((1, 1, 2, 3)))


def random_cochain(n: int, d: int, e: int, rng: random.Random) -> Cochain:
    c = Cochain(n, d, e)
    c.coeffs = [random_fraction(rng) for _ in range(len(c.coeffs))]
    return c


def random_cochain_pair(p: int, d: int, e: int, rng: random.Random) -> CochainPair:
    return CochainPair(p, random_cochain(2 * p, d, e, rng), random_cochain(2 * p + 1, d, e, rng))


def random_c1(d: int, e: int, rng: random.Random) -> Matrix:
    return Matrix(e, d, [random_fraction(rng) for _ in range(e * d)])
