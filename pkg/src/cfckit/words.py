"""Words over the generators of the rank-n path Coxeter group.

A word is a tuple of 1-based generator indices; ``()`` is the identity.
Generators i and j satisfy m = 1 (equal), m = 2 (|i-j| > 1, they commute)
or m = 3 (|i-j| = 1, braid relation iji = jij).  Length questions are
answered in the symmetric group of degree rank+1 via :mod:`cfckit.perms`.

Rewriting closures (all reduced expressions of an element) are exponential
in the worst case; they are guarded by a word cap, configurable through the
``CFC_MAX_CLOSURE`` environment variable (default 10**6).
"""

from __future__ import annotations

import os
from collections import deque
from collections.abc import Iterator

from . import perms
from .errors import ClosureTooLarge, InvalidGenerator, NotReduced

Word = tuple[int, ...]

DEFAULT_CLOSURE_CAP = 10**6
CLOSURE_CAP_ENV = "CFC_MAX_CLOSURE"


def closure_cap() -> int:
    raw = os.environ.get(CLOSURE_CAP_ENV)
    return int(raw) if raw else DEFAULT_CLOSURE_CAP


def check_rank(rank: int) -> None:
    if rank < 1:
        raise InvalidGenerator(f"rank must be >= 1, got {rank}")


def check_word(word, rank: int) -> Word:
    """Validate letters against the rank and return the word as a tuple."""
    check_rank(rank)
    word = tuple(word)
    for g in word:
        if not 1 <= g <= rank:
            raise InvalidGenerator(f"generator {g} outside 1..{rank}")
    return word


def m_value(i: int, j: int, rank: int) -> int:
    """
    Bond strength of generators i and j.

    >>> m_value(2, 2, 4), m_value(1, 3, 4), m_value(3, 4, 4)
    (1, 2, 3)
    """
    check_word((i, j), rank)
    if i == j:
        return 1
    return 3 if abs(i - j) == 1 else 2


def cyclic_shift(word: Word) -> Word:
    """
    Move the first letter to the end; conjugation by that letter.

    >>> cyclic_shift((3, 1, 2, 4, 5))
    (1, 2, 4, 5, 3)
    >>> cyclic_shift(())
    ()
    """
    if not word:
        return ()
    return word[1:] + word[:1]


def support(word: Word) -> frozenset[int]:
    """
    >>> sorted(support((1, 2, 4, 5, 2, 6, 5)))
    [1, 2, 4, 5, 6]
    """
    return frozenset(word)


def is_reduced(word, rank: int) -> bool:
    """
    A word is reduced iff its length equals the inversion count of its image.

    >>> is_reduced((1, 4, 5, 6, 5), 6)
    True
    >>> is_reduced((1, 2, 4, 5, 2, 6, 5), 6)
    False
    >>> is_reduced((), 3)
    True
    """
    word = check_word(word, rank)
    return len(word) == perms.inversions(perms.to_permutation(word, rank))


def canonical_word(word, rank: int) -> Word:
    """
    The lexicographically least reduced expression of the element the word
    represents; the canonical identifier used for sets of group elements.

    >>> canonical_word((3, 1, 2, 3, 4), 4)
    (1, 2, 3, 2, 4)
    """
    word = check_word(word, rank)
    return perms.word_from_permutation(perms.to_permutation(word, rank))


def reduce_word(word, rank: int) -> Word:
    """
    Some reduced expression with the same image, obtained by the descent
    algorithm on the image permutation.  The result happens to be the
    canonical (lex-least) one.

    >>> reduce_word((1, 1), 2)
    ()
    >>> reduce_word((1, 2, 1, 2), 3)
    (2, 1)
    """
    return canonical_word(word, rank)


def commutation_moves(word: Word) -> Iterator[Word]:
    """Words reachable by one swap of adjacent commuting letters."""
    for i in range(len(word) - 1):
        a, b = word[i], word[i + 1]
        if abs(a - b) > 1:
            yield word[:i] + (b, a) + word[i + 2 :]


def braid_moves(word: Word) -> Iterator[Word]:
    """Words reachable by one braid move iji -> jij."""
    for i in range(len(word) - 2):
        a, b, c = word[i], word[i + 1], word[i + 2]
        if a == c and abs(a - b) == 1:
            yield word[:i] + (b, a, b) + word[i + 3 :]


def iter_reduced_expressions(word, rank: int) -> Iterator[Word]:
    """
    Lazily walk the closure of a reduced word under single commutation and
    braid moves, in breadth-first order starting from the word itself.
    """
    word = check_word(word, rank)
    if not is_reduced(word, rank):
        raise NotReduced(f"{list(word)} is not reduced")
    seen = {word}
    queue = deque([word])
    while queue:
        u = queue.popleft()
        yield u
        for v in commutation_moves(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
        for v in braid_moves(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)


def reduced_expressions(word, rank: int, max_size: int | None = None) -> frozenset[Word]:
    """
    All reduced expressions of the element, i.e. the full Matsumoto closure.

    >>> sorted(reduced_expressions((1, 2, 3, 4, 2), 4))
    [(1, 2, 3, 2, 4), (1, 2, 3, 4, 2), (1, 3, 2, 3, 4), (3, 1, 2, 3, 4)]
    >>> reduced_expressions((1,), 2)
    frozenset({(1,)})
    """
    cap = closure_cap() if max_size is None else max_size
    out = set()
    for u in iter_reduced_expressions(word, rank):
        out.add(u)
        if len(out) > cap:
            raise ClosureTooLarge(f"closure exceeds {cap} words")
    return frozenset(out)


def commutation_class(word, rank: int, max_size: int | None = None) -> frozenset[Word]:
    """
    The closure of a reduced word under commutation moves only.

    >>> sorted(commutation_class((2, 1, 3, 2), 3))
    [(2, 1, 3, 2), (2, 3, 1, 2)]
    """
    word = check_word(word, rank)
    if not is_reduced(word, rank):
        raise NotReduced(f"{list(word)} is not reduced")
    cap = closure_cap() if max_size is None else max_size
    seen = {word}
    queue = deque([word])
    while queue:
        u = queue.popleft()
        for v in commutation_moves(u):
            if v not in seen:
                if len(seen) >= cap:
                    raise ClosureTooLarge(f"closure exceeds {cap} words")
                seen.add(v)
                queue.append(v)
    return frozenset(seen)


def commutation_classes(word, rank: int, max_size: int | None = None) -> tuple[frozenset[Word], ...]:
    """
    Partition of the reduced expressions into commutation classes, ordered
    by least member.

    >>> [sorted(c) for c in commutation_classes((1, 2, 3, 2, 4), 4)]
    [[(1, 2, 3, 2, 4), (1, 2, 3, 4, 2)], [(1, 3, 2, 3, 4), (3, 1, 2, 3, 4)]]
    """
    remaining = set(reduced_expressions(word, rank, max_size=max_size))
    blocks = []
    while remaining:
        seed = min(remaining)
        block = commutation_class(seed, rank, max_size=max_size)
        blocks.append(block)
        remaining -= block
    return tuple(sorted(blocks, key=min))
