"""Structural invariants: derived subalgebra, centre, central series, stem
decompositions, minimal generator pairs, and the size invariants built from
them."""

from __future__ import annotations

from dataclasses import dataclass

from .build import quotient
from .core import (
    GradedSubspace,
    LieSuperalgebra,
    SuperDim,
    full_rows,
    graded_span,
    subspace_intersect,
    subspace_leq,
    subspace_sum,
    zero_subspace,
)
from .linalg import (
    ZERO,
    EchelonBasis,
    echelon,
    kernel_basis,
    matrix,
    membership,
    sum_spaces,
    unit_vector,
)


class NotNilpotentError(ValueError):
    """Raised when an invariant defined only for nilpotent algebras is
    requested for an algebra whose upper central series stalls below L."""


class StemDecompositionError(RuntimeError):
    """Internal consistency check of a stem decomposition failed."""


def derived_subalgebra(alg: LieSuperalgebra) -> GradedSubspace:
    """The span of all brackets, [L, L]."""
    vectors = []
    for i in range(alg.n):
        for j in range(i, alg.n):
            if alg.basis_bracket(i, j):
                vectors.append(alg.bracket(alg.basis_vector(i), alg.basis_vector(j)))
    return graded_span(alg, vectors)


def _centraliser_part(alg: LieSuperalgebra, indices: range, width: int) -> EchelonBasis:
    # rows of the constraint matrix: one per (j, k) with some c[i][j][k] != 0
    rows = []
    for j in range(alg.n):
        per_k: dict[int, list] = {}
        for col, i in enumerate(indices):
            for k, c in alg.basis_bracket(i, j):
                per_k.setdefault(k, [ZERO] * width)[col] = c
        rows.extend(per_k.values())
    if not rows:
        return echelon([unit_vector(width, i) for i in range(width)], width)
    return kernel_basis(matrix(rows, cols=width))


def center(alg: LieSuperalgebra) -> GradedSubspace:
    """Z(L) = {x : [x, L] = 0}, computed one parity at a time."""
    r, s = alg.sdim.even, alg.sdim.odd
    return GradedSubspace(
        _centraliser_part(alg, range(0, r), r),
        _centraliser_part(alg, range(r, r + s), s),
    )


def upper_central_series(alg: LieSuperalgebra) -> tuple[GradedSubspace, ...]:
    """The strictly increasing chain Z_1(L) < Z_2(L) < ... until it stalls.

    Each step pulls the centre of L / Z_i back along the quotient map.
    """
    chain: list[GradedSubspace] = []
    z_prev = zero_subspace(alg)
    while True:
        q, qmap = quotient(alg, z_prev)
        zq = center(q)
        lifted = [qmap.lift(row) for row in full_rows(q, zq)]
        z_next = subspace_sum(z_prev, graded_span(alg, lifted))
        if z_next.sdim == z_prev.sdim:
            break
        chain.append(z_next)
        z_prev = z_next
        if z_next.sdim == alg.sdim:
            break
    return tuple(chain)


def is_nilpotent(alg: LieSuperalgebra) -> bool:
    if alg.n == 0:
        return True
    series = upper_central_series(alg)
    return bool(series) and series[-1].sdim == alg.sdim


def nilpotency_class(alg: LieSuperalgebra) -> int:
    """Least k with Z_k(L) = L; raises NotNilpotentError if there is none."""
    if alg.n == 0:
        return 0
    series = upper_central_series(alg)
    if not series or series[-1].sdim != alg.sdim:
        raise NotNilpotentError(f"{alg.name} is not nilpotent")
    return len(series)


def is_stem(alg: LieSuperalgebra) -> bool:
    """Whether Z(L) is contained in the derived subalgebra."""
    return subspace_leq(center(alg), derived_subalgebra(alg))


def generator_pair(alg: LieSuperalgebra) -> SuperDim:
    """Minimal (p|q) such that p even and q odd elements generate L.

    For nilpotent L this is sdim L - sdim [L, L], the graded dimension of
    L / [L, L].
    """
    if not is_nilpotent(alg):
        raise NotNilpotentError(f"{alg.name} is not nilpotent")
    return alg.sdim - derived_subalgebra(alg).sdim


def lambda_pair(k: SuperDim, p: int, q: int) -> SuperDim:
    """The bound lambda(K, p, q) = (p k0 + q k1 | q k0 + p k1)."""
    if p < 0 or q < 0:
        raise ValueError("generator counts must be non-negative")
    return SuperDim(p * k.even + q * k.odd, q * k.even + p * k.odd)


def central_quotient(alg: LieSuperalgebra) -> LieSuperalgebra:
    q, _ = quotient(alg, center(alg))
    return q


def st(alg: LieSuperalgebra) -> SuperDim:
    """The defect st(L) = lambda([L,L], p, q) - sdim L/Z(L), componentwise.

    (p|q) is the minimal generator pair of L/Z(L); the subtraction is
    guaranteed non-negative by the converse Schur-type bound.
    """
    if not is_nilpotent(alg):
        raise NotNilpotentError(f"{alg.name} is not nilpotent")
    derived = derived_subalgebra(alg)
    q_alg = central_quotient(alg)
    pq = generator_pair(q_alg)
    lam = lambda_pair(derived.sdim, pq.even, pq.odd)
    return lam - q_alg.sdim


def t_scalar(alg: LieSuperalgebra) -> int:
    """The plain integer defect, the component sum of st(L)."""
    return st(alg).total


@dataclass(frozen=True)
class SchurBoundReport:
    name: str
    sdim_central_quotient: SuperDim
    generator_pair: SuperDim
    lam: SuperDim
    holds: bool


def schur_bound_check(alg: LieSuperalgebra) -> SchurBoundReport:
    """Check sdim L/Z(L) <= lambda([L,L], p, q) componentwise."""
    if not is_nilpotent(alg):
        raise NotNilpotentError(f"{alg.name} is not nilpotent")
    q_alg = central_quotient(alg)
    pq = generator_pair(q_alg)
    lam = lambda_pair(derived_subalgebra(alg).sdim, pq.even, pq.odd)
    return SchurBoundReport(alg.name, q_alg.sdim, pq, lam, q_alg.sdim <= lam)


@dataclass(frozen=True)
class LadderRung:
    derived_at_least: int
    t_at_least: int
    applies: bool
    holds: bool


@dataclass(frozen=True)
class PropositionAuditReport:
    name: str
    derived_total: int
    t: int
    rungs: tuple[LadderRung, ...]

    @property
    def ok(self) -> bool:
        return all(r.holds for r in self.rungs)


_LADDER = ((2, 1), (3, 2), (4, 3))


def proposition_audit(alg: LieSuperalgebra) -> PropositionAuditReport:
    """Audit the ladder: dim [L,L] >= 2, 3, 4 forces t(L) >= 1, 2, 3."""
    derived_total = derived_subalgebra(alg).sdim.total
    t = t_scalar(alg)
    rungs = []
    for threshold, required in _LADDER:
        applies = derived_total >= threshold
        rungs.append(LadderRung(threshold, required, applies, (not applies) or t >= required))
    return PropositionAuditReport(alg.name, derived_total, t, tuple(rungs))


def _complement_rows(inner: EchelonBasis, outer: EchelonBasis) -> list:
    """Rows of `outer` extending `inner` to a basis of span(outer)."""
    ech = inner
    added = []
    for row in outer.rows():
        if not membership(row, ech)[0]:
            added.append(row)
            ech = sum_spaces(ech, echelon([row], outer.width))
    return added


def _extend_by_units(ech: EchelonBasis) -> tuple[list, EchelonBasis]:
    """Standard basis vectors extending span(ech) to the whole space."""
    added = []
    for i in range(ech.width):
        if ech.dim == ech.width:
            break
        u = unit_vector(ech.width, i)
        if not membership(u, ech)[0]:
            added.append(u)
            ech = sum_spaces(ech, echelon([u], ech.width))
    return added, ech


def stem_decomposition(alg: LieSuperalgebra) -> tuple[LieSuperalgebra, SuperDim]:
    """Split L as T + A with A abelian and T stem; returns (T, sdim A).

    A is a graded complement of [L,L] n Z(L) inside Z(L); T is spanned by
    [L,L] together with standard basis vectors chosen away from A.  The
    centre of the rebuilt T is verified to be [L,L] n Z(L) before returning.
    """
    derived = derived_subalgebra(alg)
    cent = center(alg)
    core_part = subspace_intersect(derived, cent)

    a_even = _complement_rows(core_part.even, cent.even)
    a_odd = _complement_rows(core_part.odd, cent.odd)

    r, s = alg.sdim.even, alg.sdim.odd
    avoid_even = echelon(list(derived.even.rows()) + a_even, r)
    avoid_odd = echelon(list(derived.odd.rows()) + a_odd, s)
    t_extra_even, _ = _extend_by_units(avoid_even)
    t_extra_odd, _ = _extend_by_units(avoid_odd)

    t_space = GradedSubspace(
        echelon(list(derived.even.rows()) + t_extra_even, r),
        echelon(list(derived.odd.rows()) + t_extra_odd, s),
    )
    pad = SuperDim(len(a_even), len(a_odd))
    if t_space.sdim + pad != alg.sdim:
        raise StemDecompositionError("parts do not fill the algebra")

    basis = full_rows(alg, t_space)
    p, q = t_space.sdim.even, t_space.sdim.odd
    tensor = []
    for va in basis:
        row = []
        for vb in basis:
            w = alg.bracket(va, vb)
            ok_e, ce = membership(w[:r], t_space.even)
            ok_o, co = membership(w[r:], t_space.odd)
            if not (ok_e and ok_o):
                raise StemDecompositionError("bracket left the stem part")
            row.append(tuple(ce) + tuple(co))
        tensor.append(tuple(row))
    t_alg = LieSuperalgebra(
        f"stem({alg.name})",
        tuple(f"t{i + 1}" for i in range(p)),
        tuple(f"u{i + 1}" for i in range(q)),
        tuple(tensor),
    )

    # centre of T must coincide with [L,L] n Z(L), mapped back into L
    zt = center(t_alg)
    zt_rows_in_l = []
    for row in full_rows(t_alg, zt):
        acc = [ZERO] * alg.n
        for c, bvec in zip(row, basis):
            if c:
                for idx, x in enumerate(bvec):
                    if x:
                        acc[idx] += c * x
        zt_rows_in_l.append(tuple(acc))
    if graded_span(alg, zt_rows_in_l) != core_part:
        raise StemDecompositionError("centre of the stem part is off")
    return t_alg, pad


@dataclass(frozen=True)
class InvariantReport:
    name: str
    sdim: SuperDim
    sdim_derived: SuperDim
    sdim_center: SuperDim
    central_series: tuple[SuperDim, ...]
    nilpotency_class: int | None
    is_stem: bool
    generator_pair: SuperDim | None
    lam: SuperDim | None
    st: SuperDim | None
    t: int | None


def invariant_report(alg: LieSuperalgebra) -> InvariantReport:
    """Every invariant of one algebra in a single pass.

    The generator pair reported is that of L/Z(L), the one the bound uses;
    fields depending on nilpotency are None when the series stalls.
    """
    derived = derived_subalgebra(alg)
    cent = center(alg)
    series = upper_central_series(alg)
    nilpotent = (alg.n == 0) or (bool(series) and series[-1].sdim == alg.sdim)
    if nilpotent:
        klass: int | None = len(series)
        q_alg = central_quotient(alg)
        pq: SuperDim | None = generator_pair(q_alg)
        lam: SuperDim | None = lambda_pair(derived.sdim, pq.even, pq.odd)
        st_val: SuperDim | None = lam - q_alg.sdim
        t_val: int | None = st_val.total
    else:
        klass = pq = lam = st_val = t_val = None
    return InvariantReport(
        name=alg.name,
        sdim=alg.sdim,
        sdim_derived=derived.sdim,
        sdim_center=cent.sdim,
        central_series=tuple(z.sdim for z in series),
        nilpotency_class=klass,
        is_stem=subspace_leq(cent, derived),
        generator_pair=pq,
        lam=lam,
        st=st_val,
        t=t_val,
    )
