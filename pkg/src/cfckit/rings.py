"""Rings of cylindrical heaps and the conjugacy decision for CFC elements.

A chunk wrapped on the cylinder is a ring, identified by its generator
interval.  Two CFC elements are conjugate exactly when their multisets of
ring sizes agree, and the equivalence is witnessed constructively: both
elements are normalized to the same simple form (diagonal chunks, packed
left, sizes descending) by cyclic shifts, one-column slides and adjacent
chunk swaps, each realized as conjugation by an explicit word.  The
composite conjugator is verified in the symmetric group before a
certificate is returned.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import classify, heaps, perms, words
from .errors import (
    ChunkAtBoundary,
    InvalidGenerator,
    NotCFC,
    OutOfRange,
    PatternMismatch,
    VerificationFailed,
)

Word = tuple[int, ...]


@dataclass(frozen=True)
class Ring:
    start: int
    size: int


@dataclass(frozen=True)
class ConjugacyCertificate:
    source: Word  # canonical word of the first element
    target: Word  # canonical word of the second element
    conjugator: Word  # x with x * source * x^-1 = target; not necessarily reduced
    verified: bool


def _require_cfc(word, rank: int) -> Word:
    word = words.check_word(word, rank)
    verdict = classify.is_cfc(word, rank)
    if not verdict.is_cfc:
        raise NotCFC(f"{list(word)} is not CFC: {verdict.witness}")
    return word


def rings_of(word, rank: int) -> tuple[Ring, ...]:
    """
    One ring per chunk of the heap, ordered by start column.

    >>> rings_of((1, 2, 3, 5, 6), 6)
    (Ring(start=1, size=3), Ring(start=5, size=2))
    >>> rings_of((1,), 2)
    (Ring(start=1, size=1),)
    """
    word = _require_cfc(word, rank)
    return tuple(
        Ring(c.start, len(c.block_ids)) for c in heaps.chunks(heaps.build_heap(word, rank))
    )


def slide_equivalent(w, y, rank: int) -> bool:
    """
    True iff the rings match up in order with equal sizes, i.e. one heap is
    obtained from the other by translating rings along the generator line.

    >>> slide_equivalent((1, 2, 4, 5, 6, 7), (2, 3, 6, 7, 8, 9), 9)
    True
    >>> slide_equivalent((1, 2, 3, 5, 6), (3, 4, 7, 8, 9), 9)
    False
    """
    sizes_w = [r.size for r in rings_of(w, rank)]
    sizes_y = [r.size for r in rings_of(y, rank)]
    return sizes_w == sizes_y


def ring_equivalent(w, y, rank: int) -> bool:
    """
    True iff the multisets of ring sizes coincide.

    >>> ring_equivalent((1, 2, 3, 5, 6), (3, 4, 7, 8, 9), 9)
    True
    >>> ring_equivalent((1, 2), (1, 3), 3)
    False
    """
    sizes_w = sorted(r.size for r in rings_of(w, rank))
    sizes_y = sorted(r.size for r in rings_of(y, rank))
    return sizes_w == sizes_y


def is_conjugate_cfc(w, y, rank: int) -> bool:
    """
    Conjugacy decision for CFC elements: ring equivalence of the cylinders.

    >>> is_conjugate_cfc((3, 4, 5, 6), (4, 5, 6, 7), 7)
    True
    >>> is_conjugate_cfc((1,), (2,), 2)
    True
    """
    return ring_equivalent(w, y, rank)


def slide_conjugator(k: int, k_prime: int, rank: int) -> Word:
    """
    The ascending word k, k+1, ..., k'+1 that conjugates the diagonal chunk
    on columns k..k' one column to the right.

    >>> slide_conjugator(3, 6, 7)
    (3, 4, 5, 6, 7)
    >>> slide_conjugator(1, 1, 2)
    (1, 2)
    """
    words.check_rank(rank)
    if k < 1 or k_prime < k:
        raise OutOfRange(f"need 1 <= k <= k', got k={k}, k'={k_prime}")
    if k_prime > rank:
        raise InvalidGenerator(f"generator {k_prime} outside 1..{rank}")
    if k_prime == rank:
        raise ChunkAtBoundary(f"chunk ending at {k_prime} cannot slide right in rank {rank}")
    return tuple(range(k, k_prime + 2))


def _swap_word(big: int, small: int, offset: int) -> Word:
    """Conjugator permuting adjacent diagonal chunks of sizes (big, small),
    the larger on the left, both packed starting at column ``offset``."""
    out = []
    for r in range(small + 1):
        out.extend(range(offset + small - r, offset + small + big - r + 1))
    return tuple(out)


def swap_conjugator(k: int, m: int, rank: int) -> Word:
    """
    Conjugator exchanging the sizes of the simple two-chunk element with
    chunks 1..k and k+2..k+m+1.  For k < m the inverse construction is
    used; for k = m no conjugation is needed.

    >>> swap_conjugator(3, 2, 6)
    (3, 4, 5, 6, 2, 3, 4, 5, 1, 2, 3, 4)
    >>> swap_conjugator(2, 2, 5)
    ()
    """
    words.check_rank(rank)
    if k < 1 or m < 1:
        raise OutOfRange(f"chunk sizes must be positive, got {k}, {m}")
    if k + m + 1 > rank:
        raise OutOfRange(f"chunks of sizes {k} and {m} do not fit in rank {rank}")
    if k == m:
        return ()
    if k > m:
        return _swap_word(k, m, 1)
    return tuple(reversed(_swap_word(m, k, 1)))


def boomerang_rewrite(word, pos: int) -> Word:
    """
    Rewrite the factor (k)(k+1)...(k')(k'+1)(k')...(k+1)(k) at ``pos`` into
    (k'+1)(k')...(k+1)(k)(k+1)...(k')(k'+1) by braid moves; the image in the
    symmetric group is unchanged.

    >>> boomerang_rewrite((1, 2, 3, 2, 1), 0)
    (3, 2, 1, 2, 3)
    >>> boomerang_rewrite((1, 2, 1), 0)
    (2, 1, 2)
    """
    word = tuple(word)
    if not 0 <= pos < len(word):
        raise PatternMismatch(f"position {pos} outside word of length {len(word)}")
    k = word[pos]
    t = pos
    while t + 1 < len(word) and word[t + 1] == word[t] + 1:
        t += 1
    apex = word[t]
    if apex == k:
        raise PatternMismatch(f"no ascending run at position {pos}")
    length = 2 * (apex - k) + 1
    expected = tuple(range(k, apex + 1)) + tuple(range(apex - 1, k - 1, -1))
    if word[pos : pos + length] != expected:
        raise PatternMismatch(f"no boomerang factor at position {pos}")
    replacement = tuple(range(apex, k - 1, -1)) + tuple(range(k + 1, apex + 1))
    return word[:pos] + replacement + word[pos + length :]


def stst_rewrite(word, pos: int) -> Word:
    """
    Collapse the factor i, j, i, j with |i-j| = 1 at ``pos`` to j, i.

    >>> stst_rewrite((1, 2, 1, 2), 0)
    (2, 1)
    >>> stst_rewrite((5, 4, 5, 4), 0)
    (4, 5)
    """
    word = tuple(word)
    factor = word[pos : pos + 4]
    if len(factor) != 4:
        raise PatternMismatch(f"no 4-letter factor at position {pos}")
    i, j = factor[0], factor[1]
    if abs(i - j) != 1 or factor != (i, j, i, j):
        raise PatternMismatch(f"factor {list(factor)} is not of the form i,j,i,j")
    return word[:pos] + (j, i) + word[pos + 4 :]


def _config_of(word: Word, rank: int) -> list[list]:
    """The chunk configuration of a CFC word: [start, size, bits] per chunk,
    where bits[j] is True when generator start+j precedes start+j+1."""
    pos = {g: i for i, g in enumerate(word)}
    config = []
    for chunk in heaps.chunks(heaps.build_heap(word, rank)):
        a, size = chunk.start, chunk.size
        bits = tuple(pos[g] < pos[g + 1] for g in range(a, a + size - 1))
        config.append([a, size, bits])
    return config


def _diagonalize_steps(start: int, bits: tuple[bool, ...]) -> list[int]:
    """Shortest sequence of cyclic shifts making the chunk diagonal.

    A shift is legal at generator g when its block is maximal within the
    chunk; the orientation graph of a path is connected under these moves,
    so the search always reaches the all-forward state.
    """
    target = (True,) * len(bits)
    if bits == target:
        return []
    parents: dict[tuple[bool, ...], tuple[tuple[bool, ...], int]] = {bits: (bits, 0)}
    queue = deque([bits])
    while queue:
        state = queue.popleft()
        for j in range(len(bits) + 1):
            g = start + j
            # g is maximal iff it precedes both neighbors inside the chunk
            if j > 0 and state[j - 1]:
                continue
            if j < len(bits) and not state[j]:
                continue
            new = list(state)
            if j > 0:
                new[j - 1] = True
            if j < len(bits):
                new[j] = False
            new_state = tuple(new)
            if new_state in parents:
                continue
            parents[new_state] = (state, g)
            if new_state == target:
                path = []
                s = new_state
                while s != bits:
                    s, letter = parents[s]
                    path.append(letter)
                path.reverse()
                return path
            queue.append(new_state)
    raise VerificationFailed("diagonal orientation unreachable")  # pragma: no cover


def _normalize(word: Word, rank: int) -> list[int]:
    """Conjugator X (as a letter list) taking the element of ``word`` to the
    simple element with the same ring sizes sorted descending, packed left."""
    config = _config_of(word, rank)
    conjugator: list[int] = []

    for chunk in config:
        start, _, bits = chunk
        steps = _diagonalize_steps(start, bits)
        for g in steps:
            conjugator.insert(0, g)
        chunk[2] = (True,) * len(bits)

    target = 1
    for chunk in config:
        size = chunk[1]
        while chunk[0] > target:
            a, b = chunk[0], chunk[0] + size - 1
            # inverse of the rightward slide word (a-1, ..., b)
            conjugator[:0] = range(b, a - 2, -1)
            chunk[0] -= 1
        target = chunk[0] + size + 1

    sizes = [chunk[1] for chunk in config]
    changed = True
    while changed:
        changed = False
        offset = 1
        for i in range(len(sizes) - 1):
            small, big = sizes[i], sizes[i + 1]
            if small < big:
                # inverse of the (big, small) -> (small, big) swap at offset
                conjugator[:0] = reversed(_swap_word(big, small, offset))
                sizes[i], sizes[i + 1] = big, small
                changed = True
            offset += sizes[i] + 1
    return conjugator


def simple_word(sizes, rank: int) -> Word:
    """The word of the simple element with the given chunk sizes, laid out
    left to right with one empty column between chunks."""
    out = []
    start = 1
    for size in sizes:
        out.extend(range(start, start + size))
        start += size + 1
    if out and out[-1] > rank:
        raise OutOfRange(f"chunk sizes {list(sizes)} do not fit in rank {rank}")
    return tuple(out)


def conjugacy_witness(w, y, rank: int) -> ConjugacyCertificate | None:
    """
    A verified conjugator for two conjugate CFC elements, or None when they
    are not conjugate.  Both elements are normalized to the same simple
    form; the witness is the composite of the two normalizing conjugators.

    >>> cert = conjugacy_witness((3, 4, 5, 6), (4, 5, 6, 7), 7)
    >>> cert.verified
    True
    >>> conjugacy_witness((1, 2), (1, 3), 3) is None
    True
    """
    w = _require_cfc(w, rank)
    y = _require_cfc(y, rank)
    if not ring_equivalent(w, y, rank):
        return None
    x_w = _normalize(w, rank)
    x_y = _normalize(y, rank)
    conjugator = tuple(reversed(x_y)) + tuple(x_w)
    p_w = perms.to_permutation(w, rank)
    p_y = perms.to_permutation(y, rank)
    p_x = perms.to_permutation(conjugator, rank)
    if perms.conjugate(p_w, p_x) != p_y:
        raise VerificationFailed(
            f"conjugator {list(conjugator)} does not carry {list(w)} to {list(y)}"
        )
    return ConjugacyCertificate(
        source=words.canonical_word(w, rank),
        target=words.canonical_word(y, rank),
        conjugator=conjugator,
        verified=True,
    )
