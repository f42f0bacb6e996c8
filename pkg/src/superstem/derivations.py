"""Superderivation spaces and their distinguished subspaces.

A degree-alpha map D satisfies D[x, y] = [Dx, y] + (-1)^(alpha |x|) [x, Dy]
on homogeneous x, y.  Matrices follow the column convention: M[i][j] is the
coefficient of basis vector i in D(basis vector j), so only positions with
parity(i) = parity(j) + alpha can be nonzero.  Spaces are stored as echelon
bases in the row-major flattening of the full n x n matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import GradedSubspace, LieSuperalgebra, SuperDim
from .invariants import (
    NotNilpotentError,
    center,
    central_quotient,
    derived_subalgebra,
    generator_pair,
    is_nilpotent,
    lambda_pair,
)
from .linalg import (
    EchelonBasis,
    Matrix,
    ONE,
    ZERO,
    echelon,
    kernel_basis,
    matrix,
    mat_mul,
    membership,
)


@dataclass(frozen=True)
class GradedLinearMap:
    parity: int
    matrix: Matrix

    def apply(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        out = []
        for row in self.matrix.entries:
            acc = ZERO
            for a, b in zip(row, v):
                if a and b:
                    acc += a * b
            out.append(acc)
        return tuple(out)


def flatten_map(m: GradedLinearMap) -> tuple[Fraction, ...]:
    return tuple(x for row in m.matrix.entries for x in row)


def unflatten_map(row: Sequence[Fraction], n: int, parity: int) -> GradedLinearMap:
    ents = tuple(tuple(row[i * n + j] for j in range(n)) for i in range(n))
    return GradedLinearMap(parity, Matrix(n, n, ents))


@dataclass(frozen=True)
class DerivationSpace:
    n: int
    even_part: EchelonBasis
    odd_part: EchelonBasis

    @property
    def sdim(self) -> SuperDim:
        return SuperDim(self.even_part.dim, self.odd_part.dim)

    def part(self, parity: int) -> EchelonBasis:
        return self.even_part if parity == 0 else self.odd_part

    def maps(self, parity: int) -> tuple[GradedLinearMap, ...]:
        basis = self.part(parity)
        return tuple(unflatten_map(row, self.n, parity) for row in basis.rows())

    def contains(self, m: GradedLinearMap) -> bool:
        return membership(flatten_map(m), self.part(m.parity))[0]

    def leq(self, other: "DerivationSpace") -> bool:
        return all(
            membership(row, other.part(par))[0]
            for par in (0, 1)
            for row in self.part(par).rows()
        )


def _allowed_positions(alg: LieSuperalgebra, parity: int) -> list[tuple[int, int]]:
    return [
        (i, j)
        for i in range(alg.n)
        for j in range(alg.n)
        if alg.parity(i) == (alg.parity(j) + parity) % 2
    ]


def _embed_echelon(e: EchelonBasis, positions: list[tuple[int, int]], n: int) -> EchelonBasis:
    # scattering restricted columns into the n^2 flattening preserves RREF
    # because the position list is increasing in row-major order
    full = []
    for row in e.rows():
        vec = [ZERO] * (n * n)
        for (i, j), x in zip(positions, row):
            if x:
                vec[i * n + j] = x
        full.append(tuple(vec))
    pivots = tuple(positions[p][0] * n + positions[p][1] for p in e.pivot_cols)
    return EchelonBasis(Matrix(len(full), n * n, tuple(full)), pivots)


def _law_rows(alg: LieSuperalgebra, parity: int, pos_index: dict) -> list[list[Fraction]]:
    n = alg.n
    width = len(pos_index)
    rows = []
    for a in range(n):
        pa = alg.parity(a)
        sign = -ONE if (parity * pa) % 2 else ONE
        for b in range(a, n):
            target_parity = (pa + alg.parity(b) + parity) % 2
            per_m: dict[int, list] = {}

            def bump(m: int, i: int, j: int, c: Fraction) -> None:
                row = per_m.setdefault(m, [ZERO] * width)
                row[pos_index[i, j]] += c

            for k, c in alg.basis_bracket(a, b):
                for m in range(n):
                    if alg.parity(m) == target_parity:
                        bump(m, m, k, c)
            for i in range(n):
                if alg.parity(i) != (pa + parity) % 2:
                    continue
                for m, c in alg.basis_bracket(i, b):
                    bump(m, i, a, -c)
            for i in range(n):
                if alg.parity(i) != (alg.parity(b) + parity) % 2:
                    continue
                for m, c in alg.basis_bracket(a, i):
                    bump(m, i, b, -sign * c)
            rows.extend(row for row in per_m.values() if any(row))
    return rows


def _part_to_full(alg: LieSuperalgebra, parity_of_part: int, part_index: int) -> int:
    return part_index if parity_of_part == 0 else alg.sdim.even + part_index


def _image_rows(alg: LieSuperalgebra, parity: int, pos_index: dict,
                target: GradedSubspace) -> list[list[Fraction]]:
    """Linear conditions forcing every D(b_j) into the target subspace."""
    width = len(pos_index)
    rows = []
    for j in range(alg.n):
        out_parity = (alg.parity(j) + parity) % 2
        part = target.even if out_parity == 0 else target.odd
        pivots = set(part.pivot_cols)
        for u in range(part.width):
            if u in pivots:
                continue
            row = [ZERO] * width
            fu = _part_to_full(alg, out_parity, u)
            row[pos_index[fu, j]] = ONE
            for t, p in enumerate(part.pivot_cols):
                coeff = part.matrix.entries[t][u]
                if coeff:
                    fp = _part_to_full(alg, out_parity, p)
                    row[pos_index[fp, j]] -= coeff
            rows.append(row)
    return rows


def _kill_rows(alg: LieSuperalgebra, parity: int, pos_index: dict,
               space: GradedSubspace) -> list[list[Fraction]]:
    """Linear conditions forcing D to vanish on the given subspace."""
    width = len(pos_index)
    rows = []
    for part_parity, part in ((0, space.even), (1, space.odd)):
        out_parity = (part_parity + parity) % 2
        for zrow in part.rows():
            support = [(_part_to_full(alg, part_parity, j), x) for j, x in enumerate(zrow) if x]
            for m in range(alg.n):
                if alg.parity(m) != out_parity:
                    continue
                row = [ZERO] * width
                for fj, x in support:
                    row[pos_index[m, fj]] = x
                rows.append(row)
    return rows


def _solve(alg: LieSuperalgebra, parity: int, *, image_in: GradedSubspace | None = None,
           kill: GradedSubspace | None = None) -> EchelonBasis:
    positions = _allowed_positions(alg, parity)
    pos_index = {pos: t for t, pos in enumerate(positions)}
    width = len(positions)
    rows = _law_rows(alg, parity, pos_index)
    if image_in is not None:
        rows.extend(_image_rows(alg, parity, pos_index, image_in))
    if kill is not None:
        rows.extend(_kill_rows(alg, parity, pos_index, kill))
    if not rows:
        sol = echelon([[ONE if t == u else ZERO for u in range(width)] for t in range(width)], width)
    else:
        sol = kernel_basis(matrix(rows, cols=width))
    return _embed_echelon(sol, positions, alg.n)


def derivation_space(alg: LieSuperalgebra) -> DerivationSpace:
    """All superderivations, both parities, as echelonized matrix spaces."""
    return DerivationSpace(alg.n, _solve(alg, 0), _solve(alg, 1))


def inner_derivations(alg: LieSuperalgebra) -> DerivationSpace:
    """ad(L), spanned by the adjoint maps of the basis vectors."""
    n = alg.n
    flats: dict[int, list] = {0: [], 1: []}
    for i in range(n):
        vec = [ZERO] * (n * n)
        for j in range(n):
            for k, c in alg.basis_bracket(i, j):
                vec[k * n + j] = c
        flats[alg.parity(i)].append(vec)
    return DerivationSpace(n, echelon(flats[0], n * n), echelon(flats[1], n * n))


def id_star(alg: LieSuperalgebra) -> tuple[DerivationSpace, DerivationSpace]:
    """The pair (ID(L), ID*(L)).

    ID(L) is the space of superderivations with image inside [L, L]; ID*(L)
    is the subspace of those that also vanish on the centre.  Both are cut
    out by stacking the extra linear conditions next to the derivation law,
    one kernel computation per parity.
    """
    derived = derived_subalgebra(alg)
    cent = center(alg)
    id_space = DerivationSpace(
        alg.n,
        _solve(alg, 0, image_in=derived),
        _solve(alg, 1, image_in=derived),
    )
    idstar_space = DerivationSpace(
        alg.n,
        _solve(alg, 0, image_in=derived, kill=cent),
        _solve(alg, 1, image_in=derived, kill=cent),
    )
    return id_space, idstar_space


def der_bracket(d: GradedLinearMap, e: GradedLinearMap) -> GradedLinearMap:
    """[D, E] = DE - (-1)^(|D||E|) ED."""
    de = mat_mul(d.matrix, e.matrix)
    ed = mat_mul(e.matrix, d.matrix)
    sign = -1 if (d.parity * e.parity) % 2 else 1
    ents = tuple(
        tuple(x - sign * y for x, y in zip(r1, r2))
        for r1, r2 in zip(de.entries, ed.entries)
    )
    return GradedLinearMap((d.parity + e.parity) % 2, Matrix(de.rows, de.cols, ents))


@dataclass(frozen=True)
class IdStarBoundReport:
    name: str
    sdim_id_star: SuperDim
    generator_pair: SuperDim
    lam: SuperDim
    holds: bool


def idstar_bound_check(alg: LieSuperalgebra) -> IdStarBoundReport:
    """Check sdim ID*(L) <= lambda([L,L], p, q) componentwise."""
    if not is_nilpotent(alg):
        raise NotNilpotentError(f"{alg.name} is not nilpotent")
    _, idstar_space = id_star(alg)
    pq = generator_pair(central_quotient(alg))
    lam = lambda_pair(derived_subalgebra(alg).sdim, pq.even, pq.odd)
    return IdStarBoundReport(alg.name, idstar_space.sdim, pq, lam, idstar_space.sdim <= lam)


@dataclass(frozen=True)
class DerivationReport:
    name: str
    sdim_der: SuperDim
    sdim_inner: SuperDim
    sdim_id: SuperDim
    sdim_id_star: SuperDim
    chain_ok: bool
    bound: IdStarBoundReport | None


def derivation_report(alg: LieSuperalgebra) -> DerivationReport:
    """Dimensions of Der, ad, ID, ID* plus the containment chain and bound."""
    der = derivation_space(alg)
    inner = inner_derivations(alg)
    id_space, idstar_space = id_star(alg)
    chain_ok = inner.leq(idstar_space) and idstar_space.leq(id_space) and id_space.leq(der)
    bound = idstar_bound_check(alg) if is_nilpotent(alg) else None
    return DerivationReport(
        alg.name, der.sdim, inner.sdim, id_space.sdim, idstar_space.sdim, chain_ok, bound)
