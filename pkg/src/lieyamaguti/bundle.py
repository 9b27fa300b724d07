"""Locally trivial Lie-Yamaguti algebra bundles over a sampled atlas.

A smooth base manifold is replaced by finitely many named charts, each with
rational sample points.  Overlaps are declared explicitly: a transition
family carries its sample points in from-chart coordinates, the k-th sample
of a transition and the k-th sample of its reverse denote the same base
point, and a triple overlap lists each probe point in the coordinates of all
three charts involved.  Every bundle condition in sight (cocycle identity,
fibrewise automorphism, sub-bundle invariance, morphism, fibrewise
cohomology) is pointwise, so sampling verifies exactly what can be verified
at this scale; nothing here claims smoothness.

An undeclared self transition g_ii is the identity.  In chart coordinates
the trivialization is the identity map, so the fibre algebra at any sample
equals the fibre model; ``fiber_algebra_at`` exists to make the clutching
identity executable.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LYAlgebra, derivations, is_automorphism, is_derivation, is_homomorphism, is_valid
from .cohomology import DEFAULT_SIZE_CAP, h1, h23, h_upper
from .errors import (
    CocycleCheckFailed,
    InvalidAlgebra,
    NotASubalgebra,
    ShapeMismatch,
    UnknownIdentifier,
    UnknownSample,
)
from .exprs import Expr, eval_exact, eval_float, variables
from .linalg import Matrix, SubspaceBasis
from .representation import adjoint

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class EvalMode:
    kind: str = "exact"  # "exact" | "float"
    tol: float = 1e-9

    def __post_init__(self):
        if self.kind not in ("exact", "float"):
            raise ShapeMismatch(f"unknown evaluation mode {self.kind!r}")
        if self.tol <= 0:
            raise ShapeMismatch("tolerance must be positive")


EXACT = EvalMode("exact")


@dataclass(frozen=True)
class Chart:
    name: str
    coords: tuple[str, ...]
    samples: tuple[Point, ...]

    def __post_init__(self):
        if not self.samples:
            raise ShapeMismatch(f"chart {self.name!r} needs at least one sample point")
        for pt in self.samples:
            if len(pt) != len(self.coords):
                raise ShapeMismatch(
                    f"chart {self.name!r}: sample arity {len(pt)} != coordinate count {len(self.coords)}"
                )


@dataclass(frozen=True)
class TransitionFamily:
    frm: str
    to: str
    matrix: tuple[tuple[Expr, ...], ...]  # d x d entries over from-chart coordinates
    samples: tuple[Point, ...]  # overlap probes, in from-chart coordinates
    coords: tuple[str, ...] = ()  # from-chart coordinate names (set by BundleSpec)

    def label(self) -> str:
        return f"{self.frm}->{self.to}"


@dataclass(frozen=True)
class TripleOverlap:
    i: str
    j: str
    k: str
    samples: tuple[tuple[Point, Point, Point], ...]  # same point in chart i/j/k coords

    def label(self) -> str:
        return f"({self.i},{self.j},{self.k})"


@dataclass(frozen=True)
class BundleSpec:
    fiber: LYAlgebra
    charts: tuple[Chart, ...]
    transitions: tuple[TransitionFamily, ...]
    triples: tuple[TripleOverlap, ...] = ()

    def __post_init__(self):
        if not is_valid(self.fiber):
            raise InvalidAlgebra("bundle fibre fails the defining identities")
        names = [c.name for c in self.charts]
        if len(set(names)) != len(names):
            raise ShapeMismatch("duplicate chart names")
        by_name = {c.name: c for c in self.charts}
        d = self.fiber.dim
        seen_pairs = set()
        fixed = []
        for tf in self.transitions:
            if (tf.frm, tf.to) in seen_pairs:
                raise ShapeMismatch(f"duplicate transition {tf.label()}")
            seen_pairs.add((tf.frm, tf.to))
            for nm in (tf.frm, tf.to):
                if nm not in by_name:
                    raise ShapeMismatch(f"transition {tf.label()} references unknown chart {nm!r}")
            if len(tf.matrix) != d or any(len(row) != d for row in tf.matrix):
                raise ShapeMismatch(f"transition {tf.label()} matrix must be {d}x{d}")
            chart = by_name[tf.frm]
            allowed = set(chart.coords)
            for row in tf.matrix:
                for entry in row:
                    extra = variables(entry) - allowed
                    if extra:
                        raise UnknownIdentifier(
                            f"transition {tf.label()} uses {sorted(extra)} not in chart {tf.frm!r} coordinates"
                        )
            for pt in tf.samples:
                if len(pt) != len(chart.coords):
                    raise ShapeMismatch(f"transition {tf.label()} sample arity mismatch")
            fixed.append(
                TransitionFamily(tf.frm, tf.to, tf.matrix, tf.samples, chart.coords)
            )
        object.__setattr__(self, "transitions", tuple(fixed))
        for tr in self.triples:
            for nm in (tr.i, tr.j, tr.k):
                if nm not in by_name:
                    raise ShapeMismatch(f"triple overlap {tr.label()} references unknown chart {nm!r}")
            for s in tr.samples:
                for pt, nm in zip(s, (tr.i, tr.j, tr.k)):
                    if len(pt) != len(by_name[nm].coords):
                        raise ShapeMismatch(
                            f"triple overlap {tr.label()} sample arity mismatch in chart {nm!r}"
                        )

    def chart(self, name: str) -> Chart:
        for c in self.charts:
            if c.name == name:
                return c
        raise UnknownSample(f"unknown chart {name!r}")

    def transition(self, frm: str, to: str) -> TransitionFamily | None:
        for tf in self.transitions:
            if tf.frm == frm and tf.to == to:
                return tf
        return None


def eval_transition(tf: TransitionFamily, pt: Point, mode: EvalMode = EXACT):
    """Entrywise evaluation at a point of the from-chart.

    Exact mode returns a rational Matrix, float mode a list of float rows.
    """
    if len(pt) != len(tf.coords):
        raise ShapeMismatch(f"point arity {len(pt)} != chart arity {len(tf.coords)}")
    if mode.kind == "exact":
        env = {c: Fraction(v) for c, v in zip(tf.coords, pt)}
        return Matrix.from_rows([[eval_exact(x, env) for x in row] for row in tf.matrix])
    envf = {c: float(v) for c, v in zip(tf.coords, pt)}
    return [[eval_float(x, envf) for x in row] for row in tf.matrix]


def _identity_value(d: int, mode: EvalMode):
    if mode.kind == "exact":
        return Matrix.identity(d)
    return [[1.0 if i == j else 0.0 for j in range(d)] for i in range(d)]


def _mat_mul(a, b, mode: EvalMode):
    if mode.kind == "exact":
        return a @ b
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def _max_abs_diff(a, b, mode: EvalMode):
    if mode.kind == "exact":
        return max((abs(x - y) for x, y in zip(a.entries, b.entries)), default=Fraction(0))
    return max(
        (abs(x - y) for ra, rb in zip(a, b) for x, y in zip(ra, rb)), default=0.0
    )


def _is_zero_defect(norm, mode: EvalMode) -> bool:
    if mode.kind == "exact":
        return norm == 0
    return norm <= mode.tol


@dataclass
class CocycleFailure:
    kind: str  # identity | triple | inverse | automorphism | structural
    where: str
    point: tuple | None
    defect_norm: object
    detail: str = ""


@dataclass
class CocycleReport:
    mode: EvalMode
    failures: list[CocycleFailure] = field(default_factory=list)
    checks: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, kind: str, where: str, point, norm, detail: str = "") -> None:
        self.failures.append(CocycleFailure(kind, where, point, norm, detail))


def _bracket_defect_exact(phi: Matrix, a: LYAlgebra) -> Fraction:
    """Largest absolute bracket-preservation defect of phi on basis tuples."""
    worst = Fraction(0)
    cols = [phi.col(j) for j in range(a.dim)]
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = phi.matvec(a.binary[i][j])
            rhs = a.bracket(cols[i], cols[j])
            worst = max(worst, max((abs(x - y) for x, y in zip(lhs, rhs)), default=Fraction(0)))
    for i, j, k in itertools.product(range(a.dim), repeat=3):
        lhs = phi.matvec(a.ternary[i][j][k])
        rhs = a.triple(cols[i], cols[j], cols[k])
        worst = max(worst, max((abs(x - y) for x, y in zip(lhs, rhs)), default=Fraction(0)))
    return worst


def _bracket_defect_float(rows: list[list[float]], a: LYAlgebra) -> float:
    d = a.dim
    binf = [[[float(x) for x in a.binary[i][j]] for j in range(d)] for i in range(d)]
    terf = [
        [[[float(x) for x in a.ternary[i][j][k]] for k in range(d)] for j in range(d)]
        for i in range(d)
    ]

    def mv(v):
        return [sum(rows[r][c] * v[c] for c in range(d)) for r in range(d)]

    def br(x, y):
        out = [0.0] * d
        for i in range(d):
            if not x[i]:
                continue
            for j in range(d):
                if y[j]:
                    c = x[i] * y[j]
                    for k in range(d):
                        out[k] += c * binf[i][j][k]
        return out

    def tr(x, y, z):
        out = [0.0] * d
        for i in range(d):
            if not x[i]:
                continue
            for j in range(d):
                if not y[j]:
                    continue
                for k in range(d):
                    if z[k]:
                        c = x[i] * y[j] * z[k]
                        for l in range(d):
                            out[l] += c * terf[i][j][k][l]
        return out

    cols = [[rows[r][c] for r in range(d)] for c in range(d)]
    worst = 0.0
    for i in range(d):
        for j in range(d):
            lhs = mv(binf[i][j])
            rhs = br(cols[i], cols[j])
            worst = max(worst, max(abs(x - y) for x, y in zip(lhs, rhs)))
    for i, j, k in itertools.product(range(d), repeat=3):
        lhs = mv(terf[i][j][k])
        rhs = tr(cols[i], cols[j], cols[k])
        worst = max(worst, max(abs(x - y) for x, y in zip(lhs, rhs)))
    return worst


def _float_det(rows: list[list[float]]) -> float:
    n = len(rows)
    m = [row[:] for row in rows]
    det = 1.0
    for c in range(n):
        piv = max(range(c, n), key=lambda r: abs(m[r][c]))
        if abs(m[piv][c]) == 0.0:
            return 0.0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return det


def _automorphism_defect(value, fiber: LYAlgebra, mode: EvalMode):
    """(is_automorphism, defect_norm, detail) for one evaluated transition."""
    if mode.kind == "exact":
        if is_automorphism(value, fiber):
            return True, Fraction(0), ""
        if not value.is_invertible():
            return False, None, "matrix is singular"
        return False, _bracket_defect_exact(value, fiber), "bracket preservation fails"
    det = _float_det(value)
    if abs(det) <= mode.tol:
        return False, None, "matrix is numerically singular"
    defect = _bracket_defect_float(value, fiber)
    return defect <= mode.tol, defect, "" if defect <= mode.tol else "bracket preservation fails"


def check_cocycle(b: BundleSpec, mode: EvalMode = EXACT) -> CocycleReport:
    """Verify the clutching data of a sampled bundle.

    Checks, in order: declared self transitions evaluate to the identity;
    declared triple overlaps satisfy g_ij(m) g_jk(m) = g_ik(m); reverse pairs
    satisfy g_ji(m) = g_ij(m)^-1 under the positional sample correspondence;
    and every evaluated transition value is a fibrewise automorphism of the
    fibre model.  All failures are reported with their point and the largest
    entrywise defect.
    """
    report = CocycleReport(mode)
    d = b.fiber.dim
    ident = _identity_value(d, mode)

    for tf in b.transitions:
        if tf.frm == tf.to:
            for pt in tf.samples:
                report.checks += 1
                val = eval_transition(tf, pt, mode)
                norm = _max_abs_diff(val, ident, mode)
                if not _is_zero_defect(norm, mode):
                    report.add("identity", tf.label(), pt, norm, "g_ii is not the identity")

    for tr in b.triples:
        for (pi, pj, pk) in tr.samples:
            report.checks += 1
            legs = []
            ok = True
            for (frm, to, pt) in ((tr.i, tr.j, pi), (tr.j, tr.k, pj), (tr.i, tr.k, pi)):
                if frm == to:
                    legs.append(ident)
                    continue
                tf = b.transition(frm, to)
                if tf is None:
                    report.add(
                        "structural",
                        tr.label(),
                        pt,
                        None,
                        f"no declared transition {frm}->{to} for this triple overlap",
                    )
                    ok = False
                    break
                legs.append(eval_transition(tf, pt, mode))
            if not ok:
                continue
            norm = _max_abs_diff(_mat_mul(legs[0], legs[1], mode), legs[2], mode)
            if not _is_zero_defect(norm, mode):
                report.add("triple", tr.label(), (pi, pj, pk), norm, "g_ij g_jk != g_ik")

    seen = set()
    for tf in b.transitions:
        if tf.frm == tf.to or (tf.to, tf.frm) in seen:
            continue
        seen.add((tf.frm, tf.to))
        rev = b.transition(tf.to, tf.frm)
        if rev is None:
            continue
        if len(tf.samples) != len(rev.samples):
            report.add(
                "structural",
                f"{tf.label()} / {rev.label()}",
                None,
                None,
                "paired transitions declare different sample counts",
            )
            continue
        for pt_f, pt_r in zip(tf.samples, rev.samples):
            report.checks += 1
            prod = _mat_mul(
                eval_transition(tf, pt_f, mode), eval_transition(rev, pt_r, mode), mode
            )
            norm = _max_abs_diff(prod, ident, mode)
            if not _is_zero_defect(norm, mode):
                report.add("inverse", f"{tf.label()} / {rev.label()}", (pt_f, pt_r), norm, "g_ji != g_ij^-1")

    for tf in b.transitions:
        for pt in tf.samples:
            report.checks += 1
            val = eval_transition(tf, pt, mode)
            good, norm, detail = _automorphism_defect(val, b.fiber, mode)
            if not good:
                report.add("automorphism", tf.label(), pt, norm, detail or "not a fibrewise automorphism")
    return report


def fiber_algebra_at(b: BundleSpec, chart: str, pt: Point) -> LYAlgebra:
    """Fibre algebra at a declared sample point.

    In chart coordinates the trivialization is the identity, so the fibre
    equals the fibre model; the operation makes the clutching identity
    (transport commutes with brackets at overlap samples) executable.
    """
    c = b.chart(chart)
    pt = tuple(Fraction(v) for v in pt)
    if pt not in c.samples:
        raise UnknownSample(f"{pt} is not a declared sample of chart {chart!r}")
    return b.fiber


@dataclass
class SubbundleReport:
    dim_h: int
    failures: list[CocycleFailure] = field(default_factory=list)
    note: str = (
        "invariance verified only at sampled transition values; this is a "
        "necessary condition for characteristic sub-bundle data, quantified "
        "over the sampled automorphisms rather than the full automorphism group"
    )

    @property
    def ok(self) -> bool:
        return not self.failures


def check_subbundle(b: BundleSpec, h: SubspaceBasis) -> SubbundleReport:
    """Check g_ij(m) h = h for every evaluated transition value (exact mode).

    Requires h to be a subalgebra of the fibre (closure under both brackets).
    """
    fiber = b.fiber
    if h.ambient_dim != fiber.dim:
        raise ShapeMismatch("subspace lives in a different ambient dimension")
    basis = list(h.vectors)
    for u in basis:
        for v in basis:
            if not h.contains(fiber.bracket(u, v)):
                raise NotASubalgebra("not closed under the binary bracket")
            for w in basis:
                if not h.contains(fiber.triple(u, v, w)):
                    raise NotASubalgebra("not closed under the ternary bracket")
    report = SubbundleReport(dim_h=h.dim)
    for tf in b.transitions:
        for pt in tf.samples:
            val = eval_transition(tf, pt, EXACT)
            images = [val.matvec(v) for v in basis]
            outside = any(not h.contains(img) for img in images)
            if outside or SubspaceBasis(h.ambient_dim, images).dim != h.dim:
                report.failures.append(
                    CocycleFailure("invariance", tf.label(), pt, None, "g(m)·h != h")
                )
    return report


@dataclass
class MorphismPoint:
    chart: str
    point: Point
    is_hom: bool
    invertible: bool


@dataclass
class MorphismReport:
    points: list[MorphismPoint] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(p.is_hom for p in self.points)


def check_bundle_morphism(
    ba: BundleSpec, bb: BundleSpec, chart_matrices: dict[str, tuple[tuple[Expr, ...], ...]]
) -> MorphismReport:
    """Fibrewise homomorphism check of a same-atlas bundle morphism.

    ``chart_matrices`` maps chart names to expression matrices over that
    chart's coordinates; every sample point of every chart is checked.
    """
    names_a = {c.name for c in ba.charts}
    names_b = {c.name for c in bb.charts}
    if names_a != names_b:
        raise ShapeMismatch("bundle morphisms are supported over a common atlas only")
    report = MorphismReport()
    for chart in ba.charts:
        if chart.name not in chart_matrices:
            raise ShapeMismatch(f"no morphism matrix for chart {chart.name!r}")
        rowsx = chart_matrices[chart.name]
        if len(rowsx) != bb.fiber.dim or any(len(r) != ba.fiber.dim for r in rowsx):
            raise ShapeMismatch(
                f"morphism matrix on chart {chart.name!r} must be {bb.fiber.dim}x{ba.fiber.dim}"
            )
        for pt in chart.samples:
            env = {c: Fraction(v) for c, v in zip(chart.coords, pt)}
            val = Matrix.from_rows([[eval_exact(x, env) for x in row] for row in rowsx])
            hom = is_homomorphism(val, ba.fiber, bb.fiber)
            inv = val.rows == val.cols and val.is_invertible()
            report.points.append(MorphismPoint(chart.name, pt, hom, inv))
    return report


@dataclass
class FiberCohomologyPoint:
    chart: str
    point: Point
    dims: dict


@dataclass
class BundleCohomologyReport:
    which: str
    p: int | None
    points: list[FiberCohomologyPoint]
    constant: bool
    note: str = ""


def _gate_cocycle(b: BundleSpec, mode: EvalMode) -> None:
    rep = check_cocycle(b, mode)
    if not rep.ok:
        first = rep.failures[0]
        raise CocycleCheckFailed(
            f"cocycle verification failed ({first.kind} at {first.where}); "
            "fibrewise computations need a verified bundle",
            rep,
        )


def bundle_cohomology(
    b: BundleSpec,
    which: str = "h1",
    p: int = 2,
    mode: EvalMode = EXACT,
    cap: int = DEFAULT_SIZE_CAP,
) -> BundleCohomologyReport:
    """Fibrewise cohomology dims with adjoint coefficients, per sample point.

    Requires a passing cocycle check.  Local triviality predicts constant
    dimensions across sample points; the report carries that flag.
    """
    _gate_cocycle(b, mode)
    points = []
    for chart in b.charts:
        for pt in chart.samples:
            fib = fiber_algebra_at(b, chart.name, pt)
            r = adjoint(fib)
            if which == "h1":
                dims = {"dimH1": h1(fib, r)[0]}
            elif which == "h23":
                res = h23(fib, r)
                dims = {"dimZ": res.dim_z, "dimB": res.dim_b, "dimH23": res.dim}
            elif which == "upper":
                res = h_upper(fib, r, p, cap=cap)
                dims = {"dimZ": res.dim_z, "dimB": res.dim_b, f"dimH{2*p}{2*p+1}": res.dim}
            elif which == "der":
                dims = {"dimDer": derivations(fib).dim}
            else:
                raise ShapeMismatch(f"unknown cohomology selector {which!r}")
            points.append(FiberCohomologyPoint(chart.name, pt, dims))
    dims0 = points[0].dims if points else {}
    constant = all(pt.dims == dims0 for pt in points)
    return BundleCohomologyReport(which, p if which == "upper" else None, points, constant)


@dataclass
class DerivationBundleReport:
    dims: list[FiberCohomologyPoint]
    conjugation_failures: list[CocycleFailure]
    constant: bool

    @property
    def ok(self) -> bool:
        return not self.conjugation_failures


def der_bundle_dims(b: BundleSpec, mode: EvalMode = EXACT) -> DerivationBundleReport:
    """Per-point derivation dimensions plus the conjugation-invariance check.

    For every evaluated transition automorphism s and every derivation basis
    element T of the fibre, s T s^-1 must again satisfy both derivation
    identities; that makes the derivation sub-bundle construction concrete.
    """
    _gate_cocycle(b, mode)
    fiber = b.fiber
    der = derivations(fiber)
    dmats = [Matrix(fiber.dim, fiber.dim, v) for v in der.vectors]
    dims = []
    for chart in b.charts:
        for pt in chart.samples:
            fib = fiber_algebra_at(b, chart.name, pt)
            dims.append(FiberCohomologyPoint(chart.name, pt, {"dimDer": derivations(fib).dim}))
    failures = []
    for tf in b.transitions:
        for pt in tf.samples:
            s = eval_transition(tf, pt, EXACT)
            s_inv = s.inverse()
            for idx, t in enumerate(dmats):
                conj = s @ t @ s_inv
                if not is_derivation(conj, fiber):
                    failures.append(
                        CocycleFailure(
                            "conjugation",
                            tf.label(),
                            pt,
                            None,
                            f"s·T·s^-1 fails a derivation identity for basis element {idx}",
                        )
                    )
    dims0 = dims[0].dims if dims else {}
    return DerivationBundleReport(dims, failures, all(x.dims == dims0 for x in dims))
