"""Smith normal form over the supported domains, with certificates.

The decomposition returned by :func:`smith` satisfies U * A = D * V exactly,
with U and V of unit determinant, D diagonal with canonical entries forming
a divisibility chain d1 | d2 | ... | dr.  The inverse of V is tracked during
the reduction (columns beyond the rank are a kernel basis), so linear systems
over the ring are solvable from the same data.

Determinantal invariants (gcds of k x k minors) provide an independent
oracle for the invariant factors on small inputs; larger inputs fall back to
Smith-derived values behind a provenance flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import PreconditionError, ValidationError
from .matrices import RingMatrix
from .rings import (Ring, RingElement, divides, exact_div, factorize,
                    gcd_bezout, normalize)

__all__ = [
    "SmithDecomposition",
    "smith",
    "DeterminantalInvariants",
    "determinantal_invariants",
    "invariant_factors_via_delta",
    "equivalent",
    "kernel_basis",
    "ModuleInvariants",
    "image_cokernel_invariants",
    "LinearSolver",
    "Subquotient",
    "subquotient",
    "MINOR_ORACLE_CAP",
]

MINOR_ORACLE_CAP = 5  # minor enumeration is exponential; cap the oracle


@dataclass(frozen=True)
class SmithDecomposition:
    """U * A = D * V with unit-determinant U, V; D = diag(invariant factors).

    ``v_inv`` is the two-sided inverse of V; the columns of ``v_inv`` with
    index >= rank freely span ker(A).
    """

    U: RingMatrix
    V: RingMatrix
    D: RingMatrix
    rank: int
    invariant_factors: tuple[RingElement, ...]
    v_inv: RingMatrix

    def verify(self, a: RingMatrix) -> bool:
        ring = a.ring
        if self.U @ a != self.D @ self.V:
            return False
        if self.V @ self.v_inv != RingMatrix.identity(ring, a.cols):
            return False
        if not (self.U.is_unit_determinant() and self.V.is_unit_determinant()):
            return False
        chain = self.invariant_factors
        for d in chain:
            if d.is_zero or normalize(d).canonical != d:
                return False
        return all(divides(chain[i], chain[i + 1])
                   for i in range(len(chain) - 1))


def smith(a: RingMatrix) -> SmithDecomposition:
    """Gcd-driven row/column reduction with deterministic pivoting.

    The pivot is the smallest nonzero entry in the canonical total order
    (row-major tie break).  Cross entries are cleared with two-row/two-column
    Bezout blocks of determinant one; whenever the pivot fails to divide some
    entry of the remaining submatrix, that row is merged into the pivot row
    and the pass repeats, which strictly shrinks the pivot and also makes the
    divisibility chain hold by construction.
    """
    ring = a.ring
    m, n = a.rows, a.cols
    B = [list(a.row(i)) for i in range(m)]
    eye = RingMatrix.identity
    U = [list(eye(ring, m).row(i)) for i in range(m)]
    V = [list(eye(ring, n).row(i)) for i in range(n)]
    Vi = [list(eye(ring, n).row(i)) for i in range(n)]

    def row_swap(i, j):
        B[i], B[j] = B[j], B[i]
        U[i], U[j] = U[j], U[i]

    def col_swap(i, j):
        for r in range(m):
            B[r][i], B[r][j] = B[r][j], B[r][i]
        for r in range(n):
            Vi[r][i], Vi[r][j] = Vi[r][j], Vi[r][i]
        V[i], V[j] = V[j], V[i]

    def row_combine(i, j):
        """Left-multiply rows (i, j) by [[x, y], [-b/g, a/g]] for the pivot
        column entries a = B[i][k], b = B[j][k]; afterwards B[j][k] = 0."""
        av, bv = B[i][k], B[j][k]
        cert = gcd_bezout(av, bv)
        s = exact_div(av, cert.g)
        t = exact_div(bv, cert.g)
        x, y = cert.x, cert.y
        for mat in (B, U):
            ri, rj = mat[i], mat[j]
            mat[i] = [x * p + y * q for p, q in zip(ri, rj)]
            mat[j] = [s * q - t * p for p, q in zip(ri, rj)]

    def col_combine(i, j):
        """Right-multiply columns (i, j) by the analogous Bezout block for
        the pivot row entries a = B[k][i], b = B[k][j]."""
        av, bv = B[k][i], B[k][j]
        cert = gcd_bezout(av, bv)
        s = exact_div(av, cert.g)
        t = exact_div(bv, cert.g)
        x, y = cert.x, cert.y
        for mat in (B, Vi):
            for r in range(len(mat)):
                p, q = mat[r][i], mat[r][j]
                mat[r][i] = x * p + y * q
                mat[r][j] = s * q - t * p
        ri, rj = V[i], V[j]
        V[i] = [s * p + t * q for p, q in zip(ri, rj)]
        V[j] = [x * q - y * p for p, q in zip(ri, rj)]

    def row_add_into_pivot(i):
        # row_k += row_i ; same left transform applied to U
        B[k] = [p + q for p, q in zip(B[k], B[i])]
        U[k] = [p + q for p, q in zip(U[k], U[i])]

    k = 0
    while k < min(m, n):
        # deterministic pivot: smallest canonical nonzero entry, row-major
        best = None
        for i in range(k, m):
            for j in range(k, n):
                e = B[i][j]
                if not e.is_zero:
                    key = e.sort_key()
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != k:
            row_swap(k, pi)
        if pj != k:
            col_swap(k, pj)
        while True:
            for i in range(k + 1, m):
                if not B[i][k].is_zero:
                    row_combine(k, i)
            for j in range(k + 1, n):
                if not B[k][j].is_zero:
                    col_combine(k, j)
            if any(not B[i][k].is_zero for i in range(k + 1, m)):
                continue  # column refilled by the column pass
            d = B[k][k]
            offender = None
            for i in range(k + 1, m):
                for j in range(k + 1, n):
                    if not divides(d, B[i][j]):
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_add_into_pivot(offender)
        u = normalize(B[k][k]).unit
        if not u.is_unit or u != ring.one:
            B[k] = [u * e for e in B[k]]
            U[k] = [u * e for e in U[k]]
        k += 1

    rank = k
    factors = tuple(B[i][i] for i in range(rank))
    d_mat = RingMatrix.diagonal(ring, factors, rows=m, cols=n)
    return SmithDecomposition(
        U=RingMatrix.from_rows(ring, U) if m else RingMatrix.zeros(ring, 0, 0),
        V=RingMatrix.from_rows(ring, V) if n else RingMatrix.zeros(ring, 0, 0),
        D=d_mat,
        rank=rank,
        invariant_factors=factors,
        v_inv=RingMatrix.from_rows(ring, Vi) if n else RingMatrix.zeros(ring, 0, 0),
    )


@dataclass(frozen=True)
class DeterminantalInvariants:
    """delta[k] = gcd of all k x k minors (delta[0] = 1), trimmed at the rank.

    ``from_minors`` records whether the values came from actual minor
    enumeration or from a Smith decomposition (inputs beyond the cap).
    """

    delta: tuple[RingElement, ...]
    rank: int
    from_minors: bool


def determinantal_invariants(a: RingMatrix) -> DeterminantalInvariants:
    ring = a.ring
    if max(a.rows, a.cols) > MINOR_ORACLE_CAP:
        dec = smith(a)
        delta = [ring.one]
        for d in dec.invariant_factors:
            delta.append(normalize(delta[-1] * d).canonical)
        return DeterminantalInvariants(tuple(delta), dec.rank, from_minors=False)
    delta: list[RingElement] = [ring.one]
    for k in range(1, min(a.rows, a.cols) + 1):
        g = ring.zero
        for rows in combinations(range(a.rows), k):
            for cols in combinations(range(a.cols), k):
                minor = RingMatrix(ring, k, k,
                                   [a.entry(i, j) for i in rows for j in cols])
                g = gcd_bezout(g, minor.det()).g
                # gcd already a unit: no smaller value possible
                if g.is_unit:
                    break
            if g.is_unit:
                break
        if g.is_zero:
            break
        delta.append(g)
    return DeterminantalInvariants(tuple(delta), len(delta) - 1, from_minors=True)


def invariant_factors_via_delta(a: RingMatrix) -> tuple[RingElement, ...]:
    """d_k = delta_k / delta_{k-1}, canonical; the minor-gcd oracle."""
    inv = determinantal_invariants(a)
    out = []
    for k in range(1, inv.rank + 1):
        out.append(normalize(exact_div(inv.delta[k], inv.delta[k - 1])).canonical)
    return tuple(out)


def equivalent(a: RingMatrix, b: RingMatrix) -> bool:
    """Same rank and invariant factors; dimension mismatch is an error."""
    if a.ring != b.ring:
        raise ValidationError("matrices over different rings")
    if a.shape != b.shape:
        raise ValidationError(f"dimension mismatch: {a.shape} vs {b.shape}")
    da, db = smith(a), smith(b)
    return da.rank == db.rank and da.invariant_factors == db.invariant_factors


def kernel_basis(a: RingMatrix) -> RingMatrix:
    """Columns freely generate ker(a); shape n x (n - rank)."""
    dec = smith(a)
    n = a.cols
    cols = range(dec.rank, n)
    entries = [dec.v_inv.entry(i, j) for i in range(n) for j in cols]
    return RingMatrix(a.ring, n, n - dec.rank, entries)


@dataclass(frozen=True)
class ModuleInvariants:
    """A finitely generated module in invariant-factor form.

    ``cyclic_factors`` lists canonical non-unit factors in a divisibility
    chain, followed by zeros, one per free summand.  The empty tuple is the
    zero module.  ``over`` is a display tag for the base ring context.
    """

    ring: Ring
    cyclic_factors: tuple[RingElement, ...]
    over: str = "R"

    @classmethod
    def build(cls, ring: Ring, factors, over: str = "R") -> "ModuleInvariants":
        tors = []
        free = 0
        for f in factors:
            f = normalize(f).canonical
            if f.is_zero:
                free += 1
            elif not f.is_unit:
                tors.append(f)
        for i in range(len(tors) - 1):
            if not divides(tors[i], tors[i + 1]):
                raise ValidationError("cyclic factors do not form a chain")
        return cls(ring, tuple(tors) + (ring.zero,) * free, over)

    @property
    def is_zero(self) -> bool:
        return not self.cyclic_factors

    @property
    def free_rank(self) -> int:
        return sum(1 for f in self.cyclic_factors if f.is_zero)

    @property
    def torsion_factors(self) -> tuple[RingElement, ...]:
        return tuple(f for f in self.cyclic_factors if not f.is_zero)

    def length(self) -> int:
        """Composition length; only defined for finite-length modules."""
        if self.free_rank:
            raise PreconditionError("module has a free summand")
        total = 0
        for f in self.torsion_factors:
            total += sum(e for _, e in factorize(f).factors)
        return total

    def __str__(self):
        if self.is_zero:
            return "0"
        parts = []
        free = self.free_rank
        for f in self.torsion_factors:
            parts.append(f"{self.over}/<{f.text()}>")
        if free == 1:
            parts.append(self.over)
        elif free > 1:
            parts.append(f"{self.over}^{free}")
        return " + ".join(parts)


def image_cokernel_invariants(a: RingMatrix) -> ModuleInvariants:
    """Invariants of coker(a) = R^rows / column span of a."""
    dec = smith(a)
    factors = list(dec.invariant_factors) + [a.ring.zero] * (a.rows - dec.rank)
    return ModuleInvariants.build(a.ring, factors)


class LinearSolver:
    """Repeated exact solving of A x = b from one Smith decomposition."""

    def __init__(self, a: RingMatrix):
        self.a = a
        self.dec = smith(a)

    def solve_matrix(self, b: RingMatrix) -> RingMatrix | None:
        """X with A @ X = B, or None when no exact solution exists."""
        if b.rows != self.a.rows:
            raise ValidationError("right-hand side has the wrong height")
        dec = self.dec
        ub = dec.U @ b
        n, t = self.a.cols, b.cols
        zero = self.a.ring.zero
        y = [[zero] * t for _ in range(n)]
        for i in range(self.a.rows):
            for j in range(t):
                e = ub.entry(i, j)
                if i < dec.rank:
                    d = dec.invariant_factors[i]
                    if not divides(d, e):
                        return None
                    y[i][j] = exact_div(e, d)
                elif not e.is_zero:
                    return None
        ymat = RingMatrix.from_rows(self.a.ring, y) if n else \
            RingMatrix.zeros(self.a.ring, 0, t)
        return dec.v_inv @ ymat

    def solve_vector(self, b) -> list[RingElement] | None:
        col = RingMatrix(self.a.ring, len(b), 1, list(b))
        x = self.solve_matrix(col)
        return None if x is None else list(x.entries)


@dataclass(frozen=True)
class Subquotient:
    """ker(outer)/im(inner), presented by generators and relations.

    ``generators`` has a kernel basis of ``outer`` for columns; ``relations``
    expresses the columns of ``inner`` in those coordinates.
    """

    generators: RingMatrix
    relations: RingMatrix
    invariants: ModuleInvariants


def subquotient(outer: RingMatrix, inner: RingMatrix) -> Subquotient:
    """Homology-style subquotient; requires outer @ inner = 0."""
    if not (outer @ inner).is_zero():
        raise PreconditionError("image does not lie inside the kernel")
    gens = kernel_basis(outer)
    rel = LinearSolver(gens).solve_matrix(inner)
    if rel is None:  # cannot happen when the precondition holds
        raise ValidationError("image not expressible in the kernel basis")
    dec = smith(rel)
    factors = list(dec.invariant_factors) + \
        [outer.ring.zero] * (gens.cols - dec.rank)
    return Subquotient(gens, rel,
                       ModuleInvariants.build(outer.ring, factors))
