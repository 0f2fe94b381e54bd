"""Self-duality decisions for models on split bundles over the projective line.

A model is self-dual when its dual has the same divisor matrix up to a choice
of character basis and an ordering of the support: concretely, some subset of
the exponent rows, a permutation, and a unimodular change of basis carry mon
onto dv, and some K class reproduces the variety from its own halfspace data.
"""

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .complexq import ComplexQ
from .errors import (
    EmptyInteriorError,
    NotKopasepticError,
    ShapeMismatchError,
    ValidationError,
)
from .lgmodel import bundle_model, canonical_class, dualize, linear_data, sum_models
from .linalg import IntMatrix, right_equivalent
from .toric import from_linear_data

__all__ = [
    "SelfDualityWitness",
    "BundleVerdict",
    "matrix_self_dual",
    "k_reconstruction_class",
    "self_dual_witness",
    "model_self_dual",
    "classify_cy",
    "sweep_line_bundles",
    "sweep_rank_two",
    "product_self_dual",
]


def matrix_self_dual(a, b):
    """Search for (perm, u) with b[perm] @ u == a and u unimodular.

    Permutations are explored in lexicographic order, pruned by the row-gcd
    invariant (unimodular right multiplication preserves each row's gcd).
    Returns None when no pair exists.
    """
    if a.rows != b.rows:
        raise ShapeMismatchError("row counts differ: %d vs %d" % (a.rows, b.rows))
    if a.cols != b.cols:
        raise ShapeMismatchError("column counts differ: %d vs %d" % (a.cols, b.cols))
    ga, gb = a.row_gcds(), b.row_gcds()
    if Counter(ga) != Counter(gb):
        return None
    if a.rank() != b.rank():
        return None
    candidates = [tuple(j for j in range(b.rows) if gb[j] == g) for g in ga]
    used = [False] * b.rows
    sel = []

    def extend(i):
        if i == a.rows:
            return right_equivalent(a, b.take_rows(tuple(sel)))
        for j in candidates[i]:
            if used[j]:
                continue
            used[j] = True
            sel.append(j)
            u = extend(i + 1)
            if u is not None:
                return u
            sel.pop()
            used[j] = False
        return None

    u = extend(0)
    if u is None:
        return None
    perm = tuple(sel)
    assert b.take_rows(perm) @ u == a and u.is_unimodular()
    return perm, u


def k_reconstruction_class(variety):
    """A K class with value +-i per free generator whose halfspace data
    reproduces the variety with the identity reconstruction map, or None."""
    group = variety.chow_group()
    for signs in itertools.product((Fraction(1), Fraction(-1)), repeat=group.free_rank):
        k = canonical_class(group, [ComplexQ(0, s) for s in signs])
        try:
            _, report = from_linear_data(variety.dv, k.im_lift(), labels=variety.divisors)
        except (NotKopasepticError, EmptyInteriorError):
            continue
        if report.is_identity():
            return k
    return None


@dataclass(frozen=True)
class SelfDualityWitness:
    """Data certifying P . mon_S . U = dv together with a working K class."""

    monomial_subset: tuple
    row_permutation: tuple
    basis_change: IntMatrix
    k_class: object = None

    def selected_rows(self):
        """Indices into the full exponent matrix, in output-row order."""
        return tuple(self.monomial_subset[p] for p in self.row_permutation)

    def verify(self, dv, mon, check_k=True):
        sub = mon.take_rows(self.monomial_subset)
        if sub.take_rows(self.row_permutation) @ self.basis_change != dv:
            return False
        if not self.basis_change.is_unimodular():
            return False
        if check_k:
            if self.k_class is None:
                return False
            try:
                _, report = from_linear_data(dv, self.k_class.im_lift())
            except (NotKopasepticError, EmptyInteriorError):
                return False
            if not report.is_identity():
                return False
        return True


@dataclass(frozen=True)
class BundleVerdict:
    """Classification of Tot(O(a_1) + ... + O(a_c)) with its generic sections."""

    degrees: tuple
    canonical_trivial: bool
    polystable: bool
    strong_cy: bool
    self_dual: bool
    witness: object = None
    failure: object = None

    @property
    def sum_degree(self):
        return sum(self.degrees)

    def failure_reason(self):
        """Why selfDual is false: the first failing requirement, else None."""
        return self.failure


def _search_matrix_witness(dv, mon):
    """First subset of mon rows that is right-equivalent to dv after a
    permutation, as (subset, perm, u), or None.  Subsets in lexicographic
    order, so the reported witness is deterministic."""
    if mon.rows < dv.rows or mon.rank() != dv.rank():
        return None
    for subset in itertools.combinations(range(mon.rows), dv.rows):
        res = matrix_self_dual(dv, mon.take_rows(subset))
        if res is not None:
            perm, u = res
            return subset, perm, u
    return None


def self_dual_witness(m):
    """Self-duality search for an arbitrary model.

    Returns (witness, None) on success or (None, reason) where reason is the
    first failing requirement: "not-enough-monomials", "no-matrix-witness",
    or "no-K-reconstruction".
    """
    dv = m.variety.dv
    mon = m.mon()
    if mon.rows < dv.rows:
        return None, "not-enough-monomials"
    found = _search_matrix_witness(dv, mon)
    if found is None:
        return None, "no-matrix-witness"
    k = k_reconstruction_class(m.variety)
    if k is None:
        return None, "no-K-reconstruction"
    subset, perm, u = found
    return SelfDualityWitness(subset, perm, u, k), None


def model_self_dual(degrees):
    """Decide self-duality of the generic model on Tot(+O(a_i))."""
    degrees = tuple(int(a) for a in degrees)
    if not degrees:
        raise ValidationError("degrees must be nonempty")
    witness, failure = self_dual_witness(bundle_model(degrees))
    canonical_trivial = sum(degrees) == -2
    polystable = len(set(degrees)) == 1
    return BundleVerdict(
        degrees=degrees,
        canonical_trivial=canonical_trivial,
        polystable=polystable,
        strong_cy=canonical_trivial and polystable,
        self_dual=witness is not None,
        witness=witness,
        failure=failure,
    )


def classify_cy(max_rank, degree_bound):
    """Verdicts for every nonincreasing degree tuple with sum -2, rank up to
    max_rank, and entries in [-degree_bound, degree_bound]."""
    if max_rank < 1:
        raise ValidationError("max_rank must be at least 1")
    out = []
    values = range(degree_bound, -degree_bound - 1, -1)
    for rank in range(1, max_rank + 1):
        tuples = sorted(
            tup
            for tup in itertools.combinations_with_replacement(values, rank)
            if sum(tup) == -2
        )
        for tup in tuples:
            out.append(model_self_dual(tup))
    return out


def sweep_line_bundles(max_twist):
    """Verdicts for O(-k), k = 0 .. max_twist."""
    return [model_self_dual((-k,)) for k in range(0, max_twist + 1)]


def sweep_rank_two(max_twist):
    """Verdicts for O(k) + O(-k-2), k = -1 .. max_twist."""
    return [model_self_dual((k, -k - 2)) for k in range(-1, max_twist + 1)]


def product_self_dual(m, l=None):
    """Block-swap self-duality witness for the sum of m with its dual.

    The sum's exponent matrix is block diagonal (mon(X) | 0 ; 0 | dv(X)) and
    its divisor matrix is dv(X) (+) dv(X-dual), so exchanging the two blocks
    with the antidiagonal basis change carries one onto the other.  The
    witness is verified by exact replay before returning.
    """
    d = linear_data(m, l)
    dual = dualize(d)
    total = sum_models(m, dual)
    _, facet_report = from_linear_data(d.b, d.l.im_lift())
    kept = facet_report.irredundant

    s1 = len(m.potential.terms)
    r1 = m.variety.dv.rows
    r2 = len(kept)
    n = m.variety.rank
    subset = tuple(kept) + tuple(range(s1, s1 + r1))
    perm = tuple(range(r2, r2 + r1)) + tuple(range(r2))
    swap = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        swap[i][n + i] = 1
        swap[n + i][i] = 1
    u = IntMatrix(2 * n, 2 * n, swap)

    witness = SelfDualityWitness(subset, perm, u, total.k_class)
    assert witness.verify(total.variety.dv, total.mon(), check_k=False)
    return total, witness
