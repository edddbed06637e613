"""Schubert points and unions of Schubert varieties.

Every flag wB in a Springer fiber determines a Schubert point: the row
inversion numbers of its tableau become string lengths, string q-1 being
the run s_(q-l) ... s_(q-1), and the product of the strings from the top
down is a permutation whose length equals the cell dimension at wB.  For
shapes with at most three rows or at most two columns, the parabolic
Hessenberg variety has the same Poincare polynomial as the union of the
Schubert varieties indexed by these points times the longest element of
W_J; that comparison is packaged as a report here.
"""

from __future__ import annotations

import dataclasses
import functools
from collections.abc import Iterable

from .hessvar import poincare_hessenberg, h_from_parabolic, springer_min_reps
from .nilpotent import Partition, Tableau, _row_inversion_vector, springer_contains, springer_tableau
from .poly import Poly
from .symgroup import (
    ParabolicData,
    Permutation,
    _guard_mask,
    _key_leq,
    _sn_domkeys,
    _sn_index,
    _sn_lengths,
    enumerate_sn,
    is_min_coset_rep,
    longest_element,
    perm_from_word,
)


@dataclasses.dataclass(frozen=True)
class SchubertPoint:
    """The Schubert point attached to a Springer fiber flag.

    string_lengths[q-2] is the number of row inversions of entry q in the
    flag's tableau; the point multiplies the strings s_(q-l)...s_(q-1)
    from q = n down to 2, and its length is the sum of the string lengths,
    which is the Springer cell dimension at the source flag.
    """

    source: Permutation
    tableau: Tableau
    point: Permutation
    string_lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        for q, length in enumerate(self.string_lengths, start=2):
            if not 0 <= length <= q - 1:
                raise ValueError(f"string length {length} out of range for entry {q}")
        if self.point.length() != sum(self.string_lengths):
            raise ValueError("point length does not match the string lengths")

    def word(self) -> tuple[int, ...]:
        """Reduced word of the point, highest string first."""
        out: list[int] = []
        for q in range(len(self.string_lengths) + 1, 1, -1):
            length = self.string_lengths[q - 2]
            out.extend(range(q - length, q))
        return tuple(out)


@functools.lru_cache(maxsize=None)
def schubert_point(w: Permutation, shape: Partition) -> SchubertPoint:
    """Build the Schubert point of a flag in the Springer fiber.

    >>> sp = schubert_point(Permutation((3, 4, 1, 2)), Partition((2, 1, 1)))
    >>> sp.word(), sp.point.images
    ((3, 2), (1, 4, 2, 3))
    """
    if not springer_contains(w, shape):
        raise ValueError("flag is not in the Springer fiber")
    lengths = _row_inversion_vector(w, shape)
    word: list[int] = []
    for q in range(shape.n, 1, -1):
        length = lengths[q - 2]
        word.extend(range(q - length, q))
    point = perm_from_word(word, shape.n)
    return SchubertPoint(
        source=w,
        tableau=springer_tableau(w, shape),
        point=point,
        string_lengths=lengths,
    )


def _maximal_keys(tops: Iterable[Permutation], n: int) -> list[tuple[int, int]]:
    """(length, dominance key) of the Bruhat maximal elements among tops."""
    guard = _guard_mask(n)
    index = _sn_index(n)
    keys = _sn_domkeys(n)
    lengths = _sn_lengths(n)
    seen: set[int] = set()
    ranked = []
    for top in tops:
        if top.n != n:
            raise ValueError("degree mismatch")
        idx = index[top.images]
        if idx not in seen:
            seen.add(idx)
            ranked.append((lengths[idx], keys[idx]))
    ranked.sort(key=lambda pair: -pair[0])
    maximal: list[tuple[int, int]] = []
    for length, key in ranked:
        if not any(_key_leq(key, mk, guard) for _, mk in maximal):
            maximal.append((length, key))
    return maximal


def _ideal_bitmap(tops: Iterable[Permutation], n: int) -> list[bool]:
    guard = _guard_mask(n)
    keys = _sn_domkeys(n)
    lengths = _sn_lengths(n)
    maximal = _maximal_keys(tops, n)
    out = []
    for idx in range(len(keys)):
        key, length = keys[idx], lengths[idx]
        out.append(
            any(length <= ml and _key_leq(key, mk, guard) for ml, mk in maximal)
        )
    return out


def bruhat_lower_ideal(tops: Iterable[Permutation], n: int) -> set[Permutation]:
    """All u in S_n below some element of tops in Bruhat order.

    >>> sorted(u.length() for u in bruhat_lower_ideal([perm_from_word([1, 2], 3)], 3))
    [0, 1, 1, 2]
    """
    bitmap = _ideal_bitmap(tops, n)
    return {w for idx, w in enumerate(enumerate_sn(n)) if bitmap[idx]}


def poincare_schubert_union(tops: Iterable[Permutation], n: int) -> Poly:
    """Poincare polynomial of a union of Schubert varieties, graded by length.

    Coefficient of t^k counts the Bruhat lower ideal elements of length k.

    >>> str(poincare_schubert_union([perm_from_word([1, 2, 3, 1], 4)], 4))
    '1 + 3t + 4t^2 + 3t^3 + t^4'
    """
    bitmap = _ideal_bitmap(tops, n)
    lengths = _sn_lengths(n)
    return Poly.from_exponents(lengths[idx] for idx, hit in enumerate(bitmap) if hit)


def schubert_union_tops(shape: Partition, p: ParabolicData) -> tuple[Permutation, ...]:
    """The permutations v_T w_J over v in springer_min_reps, deduplicated, sorted.

    Each product is length additive because the Schubert point of a
    minimal coset representative is again one.

    >>> [t.one_line() for t in schubert_union_tops(Partition((2, 2)), ParabolicData(4, frozenset({1, 3})))]
    ['2,1,4,3', '3,1,4,2', '4,1,3,2']
    """
    w_j = longest_element(p)
    tops = set()
    for v in springer_min_reps(shape, p):
        point = schubert_point(v, shape).point
        product = point * w_j
        if product.length() != point.length() + w_j.length():
            raise RuntimeError(
                f"product not reduced for v={v.one_line()}: point {point.one_line()}"
            )
        tops.add(product)
    return tuple(sorted(tops))


def union_hypothesis(shape: Partition) -> bool:
    """Whether the Schubert union comparison is in its proved regime:
    at most three rows or at most two columns."""
    return shape.num_rows <= 3 or shape.num_cols <= 2


@dataclasses.dataclass(frozen=True)
class UnionComparison:
    """Comparison of the Hessenberg Poincare polynomial with the Schubert union."""

    shape: Partition
    parabolic: ParabolicData
    hessenberg_poly: Poly
    schubert_union_poly: Poly
    equal: bool
    in_hypothesis: bool
    tops: tuple[Permutation, ...]

    def to_json_dict(self) -> dict:
        return {
            "lambda": list(self.shape.parts),
            "J": list(self.parabolic.sorted_j()),
            "hessenberg_poly": list(self.hessenberg_poly.coeffs),
            "schubert_union_poly": list(self.schubert_union_poly.coeffs),
            "equal": self.equal,
            "in_hypothesis": self.in_hypothesis,
            "tops": [list(t.images) for t in self.tops],
        }


def compare_with_schubert_union(shape: Partition, p: ParabolicData) -> UnionComparison:
    """Compare both Poincare polynomials for one (shape, J) pair.

    Equality is a theorem inside the hypothesis regime; outside it the
    report is informational and nothing is asserted.
    """
    if p.n != shape.n:
        raise ValueError("degree mismatch")
    tops = schubert_union_tops(shape, p)
    hess = poincare_hessenberg(shape, h_from_parabolic(p))
    union = poincare_schubert_union(tops, shape.n)
    return UnionComparison(
        shape=shape,
        parabolic=p,
        hessenberg_poly=hess,
        schubert_union_poly=union,
        equal=hess == union,
        in_hypothesis=union_hypothesis(shape),
        tops=tops,
    )


def schubert_point_respects_cosets(shape: Partition, p: ParabolicData) -> bool:
    """Whether w and its Schubert point agree about minimal coset membership,
    over every flag of the Springer fiber."""
    if p.n != shape.n:
        raise ValueError("degree mismatch")
    for w in enumerate_sn(shape.n):
        if not springer_contains(w, shape):
            continue
        point = schubert_point(w, shape).point
        if is_min_coset_rep(w, p) != is_min_coset_rep(point, p):
            return False
    return True
