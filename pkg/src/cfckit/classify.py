"""FC and CFC classification, each by three independently implemented routes.

An element is fully commutative (FC) when its reduced expressions form a
single commutation class; equivalently no reduced expression contains a
braid factor iji, equivalently its one-line image avoids the pattern 321.
It is cyclically fully commutative (CFC) when every cyclic shift of every
reduced expression is again a reduced expression of an FC element; in type A
that happens exactly when no generator repeats in the word, equivalently
when the image avoids both 321 and 3412.

The pattern routes are the fast defaults; the word-level routes are kept as
ground truth and the test suite pins all routes to agree.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass

from . import perms, words
from .errors import ClosureTooLarge, NotReduced, RankTooLarge

Word = tuple[int, ...]

FC_METHODS = ("stembridge_scan", "single_commutation_class", "pattern_321")
CFC_METHODS = ("definition", "pattern_321_3412", "support_once")

ENUM_RANK_CAP = 9


@dataclass(frozen=True)
class FcVerdict:
    is_fc: bool
    method: str
    witness: dict | None = None


@dataclass(frozen=True)
class CfcVerdict:
    is_cfc: bool
    method: str
    witness: dict | None = None


def _braid_factor(word: Word) -> int | None:
    """Index of the first factor iji with |i-j| = 1, or None."""
    for i in range(len(word) - 2):
        a, b, c = word[i], word[i + 1], word[i + 2]
        if a == c and abs(a - b) == 1:
            return i
    return None


def _require_reduced(word, rank: int) -> Word:
    word = words.check_word(word, rank)
    if not words.is_reduced(word, rank):
        raise NotReduced(f"{list(word)} is not reduced")
    return word


def is_fc(word, rank: int, method: str = "pattern_321") -> FcVerdict:
    """
    Decide full commutativity of the element of a reduced word.

    >>> is_fc((2, 1, 3, 2), 3).is_fc
    True
    >>> is_fc((3, 2, 1, 3), 3).is_fc
    False
    """
    word = _require_reduced(word, rank)
    if method == "pattern_321":
        hit = perms.find_321(perms.to_permutation(word, rank))
        if hit is None:
            return FcVerdict(True, method)
        return FcVerdict(False, method, {"kind": "321", "positions": list(hit)})
    if method == "stembridge_scan":
        # walk the Matsumoto closure, stopping at the first braid factor
        cap = words.closure_cap()
        count = 0
        for u in words.iter_reduced_expressions(word, rank):
            count += 1
            if count > cap:
                raise ClosureTooLarge(f"closure exceeds {cap} words")
            i = _braid_factor(u)
            if i is not None:
                return FcVerdict(False, method, {"kind": "braid", "word": list(u), "position": i})
        return FcVerdict(True, method)
    if method == "single_commutation_class":
        # a braid move changes the letter multiset, so any applicable braid
        # move exits the commutation class and forces a second class
        for u in sorted(words.commutation_class(word, rank)):
            i = _braid_factor(u)
            if i is not None:
                b = u[i + 1]
                other = u[:i] + (b, u[i], b) + u[i + 3 :]
                return FcVerdict(False, method, {"kind": "second_class", "word": list(other)})
        return FcVerdict(True, method)
    raise ValueError(f"unknown FC method {method!r}")


def is_cyclically_reduced(word, rank: int) -> bool:
    """
    True iff every cyclic shift of every reduced expression is reduced.

    >>> is_cyclically_reduced((3, 1, 2, 4, 5), 5)
    True
    >>> is_cyclically_reduced((3, 4, 2, 1, 3, 2), 4)
    False
    """
    word = _require_reduced(word, rank)
    for u in words.iter_reduced_expressions(word, rank):
        v = u
        for _ in range(len(u)):
            v = words.cyclic_shift(v)
            if not words.is_reduced(v, rank):
                return False
    return True


def is_cfc(word, rank: int, method: str = "pattern_321_3412") -> CfcVerdict:
    """
    Decide cyclic full commutativity of the element of a reduced word.

    >>> is_cfc((1, 2, 4, 3), 4).is_cfc
    True
    >>> is_cfc((2, 1, 3, 2, 4), 4).is_cfc
    False
    """
    word = _require_reduced(word, rank)
    if method == "pattern_321_3412":
        p = perms.to_permutation(word, rank)
        hit = perms.find_321(p)
        if hit is not None:
            return CfcVerdict(False, method, {"kind": "321", "positions": list(hit)})
        hit = perms.find_3412(p)
        if hit is not None:
            return CfcVerdict(False, method, {"kind": "3412", "positions": list(hit)})
        return CfcVerdict(True, method)
    if method == "support_once":
        first = {}
        for pos, g in enumerate(word):
            if g in first:
                return CfcVerdict(
                    False, method, {"kind": "repeat", "generator": g, "positions": [first[g], pos]}
                )
            first[g] = pos
        return CfcVerdict(True, method)
    if method == "definition":
        for u in words.iter_reduced_expressions(word, rank):
            v = u
            for k in range(1, len(u) + 1):
                v = words.cyclic_shift(v)
                failing = {"kind": "shift", "expression": list(u), "shifts": k, "word": list(v)}
                if not words.is_reduced(v, rank):
                    return CfcVerdict(False, method, failing)
                if not is_fc(v, rank, method="stembridge_scan").is_fc:
                    return CfcVerdict(False, method, failing)
        return CfcVerdict(True, method)
    raise ValueError(f"unknown CFC method {method!r}")


def _check_enum_rank(rank: int, max_rank: int) -> None:
    words.check_rank(rank)
    if rank > max_rank:
        raise RankTooLarge(f"rank {rank} exceeds cap {max_rank}")


def _lex_min_linear_extension(gens: tuple[int, ...], edges) -> Word:
    """Lex-least topological order of gens under precedence edges (a before b)."""
    succ = {g: [] for g in gens}
    indeg = {g: 0 for g in gens}
    for a, b in edges:
        succ[a].append(b)
        indeg[b] += 1
    out = []
    heap = [g for g in gens if indeg[g] == 0]
    heapq.heapify(heap)
    while heap:
        g = heapq.heappop(heap)
        out.append(g)
        for h in succ[g]:
            indeg[h] -= 1
            if indeg[h] == 0:
                heapq.heappush(heap, h)
    return tuple(out)


def _runs(sup: tuple[int, ...]) -> list[tuple[int, int]]:
    """Maximal runs of consecutive generators, as closed intervals."""
    runs = []
    for g in sup:
        if runs and g == runs[-1][1] + 1:
            runs[-1] = (runs[-1][0], g)
        else:
            runs.append((g, g))
    return runs


def _distinct_letter_elements(rank: int, supports) -> frozenset[Word]:
    """Canonical words of all elements with the given supports, one letter each.

    Each element is a choice of precedence orientation along every edge of
    its support's path graph; its canonical word is the lex-least linear
    extension of the resulting order.
    """
    out = set()
    for sup in supports:
        runs = _runs(sup)
        edge_list = [(a, a + 1) for lo, hi in runs for a in range(lo, hi)]
        for bits in itertools.product((True, False), repeat=len(edge_list)):
            edges = [(a, b) if forward else (b, a) for (a, b), forward in zip(edge_list, bits)]
            out.add(_lex_min_linear_extension(sup, edges))
    return frozenset(out)


def enumerate_fc(rank: int, max_rank: int = ENUM_RANK_CAP) -> frozenset[Word]:
    """
    Canonical words of all FC elements: the 321-avoiding permutations of
    degree rank+1, lifted back to words.

    >>> sorted(enumerate_fc(1))
    [(), (1,)]
    """
    _check_enum_rank(rank, max_rank)
    out = set()
    for p in itertools.permutations(range(1, rank + 2)):
        if perms.find_321(p) is None:
            out.add(perms.word_from_permutation(p))
    return frozenset(out)


def enumerate_cfc(rank: int, max_rank: int = ENUM_RANK_CAP) -> frozenset[Word]:
    """
    Canonical words of all CFC elements, built from the characterization
    that every support generator appears exactly once.

    >>> len(enumerate_cfc(3))
    13
    """
    _check_enum_rank(rank, max_rank)
    gens = range(1, rank + 1)
    supports = [
        sup for size in range(rank + 1) for sup in itertools.combinations(gens, size)
    ]
    return _distinct_letter_elements(rank, supports)


def enumerate_coxeter(rank: int, max_rank: int = ENUM_RANK_CAP) -> frozenset[Word]:
    """
    Canonical words of the elements whose reduced expressions use every
    generator exactly once.

    >>> sorted(enumerate_coxeter(2))
    [(1, 2), (2, 1)]
    """
    _check_enum_rank(rank, max_rank)
    return _distinct_letter_elements(rank, [tuple(range(1, rank + 1))])
