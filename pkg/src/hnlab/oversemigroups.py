"""Search for oversemigroups of prescribed multiplicity and symmetric covers.

Given a base semigroup T of multiplicity m, every oversemigroup U of the
same multiplicity is T plus some subset of the gaps of T lying in
[m, F(T)], subject to additive closure.  Candidate sets are carried as
integer bitmasks over [0, F(T)] (everything above F(T) is a member), so
closure checks are a handful of shifts on arbitrary-precision ints.

The search is a depth-first walk adjoining gaps in increasing order.  At
each node the set of *forced* positions (sums of two nonzero members that
are not themselves members) is maintained incrementally; a branch that has
skipped past its smallest forced position can never close up and is
pruned.  Leaves with no forced positions are exactly the oversemigroups of
multiplicity m, visited in lexicographic order of the adjoined gap list.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .errors import DomainError, InvariantViolation, UnsupportedMultiplicity
from .semigroup import NumericalSemigroup, from_generators, is_symmetric

#: The four triples not contained in any symmetric semigroup of equal multiplicity.
DELTA: tuple[tuple[int, int, int], ...] = ((3, 4, 5), (3, 5, 7), (4, 5, 7), (4, 7, 9))


@dataclass(frozen=True)
class CoverQuery:
    """Ask whether ``base`` lies in a symmetric semigroup of multiplicity ``target_mult``."""

    base: NumericalSemigroup
    target_mult: int


@dataclass(frozen=True)
class CoverVerdict:
    covered: bool
    witness: NumericalSemigroup | None
    search_count: int


@dataclass(frozen=True)
class DeltaReport:
    bound: int
    flagged: tuple[tuple[int, int, int], ...]
    expected: tuple[tuple[int, int, int], ...]

    @property
    def matches(self) -> bool:
        return self.flagged == self.expected


def _member_mask(s: NumericalSemigroup, upto: int) -> int:
    mask = 0
    for x in range(upto + 1):
        if s.contains(x):
            mask |= 1 << x
    return mask


def _iter_cover_masks(base: NumericalSemigroup) -> Iterator[int]:
    """Yield membership masks over [0, F(base)] of every oversemigroup of the
    same multiplicity, in lexicographic order of the adjoined gap subsets."""
    frob = base.frobenius
    mult = base.multiplicity
    full = (1 << (frob + 1)) - 1
    base_mask = _member_mask(base, frob)
    window = [x for x in range(mult, frob + 1) if not base.contains(x)]

    def visit(mask: int, missing: int, start: int) -> Iterator[int]:
        if missing == 0:
            yield mask
            limit = None
        else:
            limit = (missing & -missing).bit_length() - 1
        for i in range(start, len(window)):
            x = window[i]
            if limit is not None and x > limit:
                break
            new_mask = mask | (1 << x)
            new_missing = (missing | (new_mask << x)) & full & ~new_mask
            yield from visit(new_mask, new_missing, i + 1)

    # The base itself is closed, so the root starts with no forced positions.
    yield from visit(base_mask, 0, 0)


def _mask_frobenius(mask: int, upto: int) -> int:
    inverted = ~mask & ((1 << (upto + 1)) - 1)
    return inverted.bit_length() - 1 if inverted else -1


def _mask_is_symmetric(mask: int, upto: int) -> bool:
    frob = _mask_frobenius(mask, upto)
    if frob < 0:
        return True
    genus = frob + 1 - (mask & ((1 << (frob + 1)) - 1)).bit_count()
    return 2 * genus == frob + 1


def _semigroup_from_mask(mask: int, upto: int, mult: int) -> NumericalSemigroup:
    gens = [x for x in range(mult, upto + 1) if mask >> x & 1]
    gens.extend(range(upto + 1, upto + mult + 1))
    return from_generators(gens)


def oversemigroups_with_multiplicity(
    s: NumericalSemigroup, m: int
) -> list[NumericalSemigroup]:
    """The complete finite list of semigroups U containing s with
    multiplicity(U) = m, including s itself.

    Only m = multiplicity(s) is supported; anything else raises
    UnsupportedMultiplicity.
    """
    if m != s.multiplicity:
        raise UnsupportedMultiplicity(
            f"requested multiplicity {m}, but {s} has multiplicity {s.multiplicity}"
        )
    if s.frobenius < 0:
        return [s]
    frob = s.frobenius
    return [_semigroup_from_mask(mask, frob, m) for mask in _iter_cover_masks(s)]


def symmetric_cover(q: CoverQuery) -> CoverVerdict:
    """Decide whether some symmetric semigroup of multiplicity ``target_mult``
    contains the base; stops at the first witness found by the ordered search."""
    base = q.base
    if q.target_mult != base.multiplicity:
        raise UnsupportedMultiplicity(
            f"requested multiplicity {q.target_mult}, "
            f"but {base} has multiplicity {base.multiplicity}"
        )
    if base.frobenius < 0:
        return CoverVerdict(True, base, 1)
    frob = base.frobenius
    count = 0
    for mask in _iter_cover_masks(base):
        count += 1
        if _mask_is_symmetric(mask, frob):
            return CoverVerdict(True, _semigroup_from_mask(mask, frob, base.multiplicity), count)
    return CoverVerdict(False, None, count)


def _in_two_generated(n: int, g1: int, g2: int) -> bool:
    return any((n - k * g2) % g1 == 0 for k in range(n // g2 + 1))


def candidate_triples(bound: int) -> list[tuple[int, int, int]]:
    """Triples 3 <= m1 < m2 < m3 <= bound with gcd 1 and embedding dimension
    exactly 3 (m2 not a multiple of m1, m3 outside <m1, m2>)."""
    out = []
    for m1 in range(3, bound - 1):
        for m2 in range(m1 + 1, bound):
            if m2 % m1 == 0:
                continue
            for m3 in range(m2 + 1, bound + 1):
                if gcd(m1, m2, m3) != 1:
                    continue
                if _in_two_generated(m3, m1, m2):
                    continue
                out.append((m1, m2, m3))
    return out


def _triple_is_uncovered(triple: tuple[int, int, int]) -> bool:
    base = from_generators(triple)
    return not symmetric_cover(CoverQuery(base, base.multiplicity)).covered


def verify_delta(bound: int, jobs: int = 1) -> DeltaReport:
    """Flag every embedding-dimension-3 triple within ``bound`` that has no
    symmetric cover, and compare against the known four.

    ``jobs`` > 1 evaluates triples in a process pool; each triple is
    independent and the flagged list is sorted, so results do not depend on
    scheduling.
    """
    if bound < 3:
        raise DomainError(f"bound must be at least 3, got {bound}")
    triples = candidate_triples(bound)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            uncovered = list(pool.map(_triple_is_uncovered, triples, chunksize=16))
        flagged = [t for t, bad in zip(triples, uncovered) if bad]
    else:
        flagged = [t for t in triples if _triple_is_uncovered(t)]
    expected = tuple(t for t in DELTA if t[2] <= bound)
    return DeltaReport(bound, tuple(sorted(flagged)), expected)


def witness_families(m1: int) -> list[NumericalSemigroup]:
    """The four symmetric families covering every uncontained triple of
    multiplicity m1 >= 5, each checked symmetric with its stated Frobenius
    number (2*m1 - 1, 2*m1 + 1, 4*m1 - 3, 2*m1 + 3) before being returned."""
    if m1 < 5:
        raise DomainError(f"witness families are defined for multiplicity >= 5, got {m1}")
    families: list[tuple[list[int], int]] = [
        (list(range(m1, 2 * m1 - 1)), 2 * m1 - 1),
        ([m1, *range(m1 + 2, 2 * m1)], 2 * m1 + 1),
        ([m1, 2 * m1 - 1, *range(2 * m1 + 1, 3 * m1 - 3), 3 * m1 - 2], 4 * m1 - 3),
        ([m1, m1 + 1, *range(m1 + 4, 2 * m1)], 2 * m1 + 3),
    ]
    out = []
    for gens, frob in families:
        s = from_generators(gens)
        if not is_symmetric(s) or s.frobenius != frob:
            raise InvariantViolation(
                f"family {sorted(set(gens))} should be symmetric with "
                f"Frobenius {frob}, got F={s.frobenius}, symmetric={is_symmetric(s)}"
            )
        out.append(s)
    return out
