"""Heaps: the labeled posets behind reduced words, drawn as stacked blocks.

Each letter of a word becomes a block in the column of its generator.  A
block placed by an earlier letter sits above every later block in its own
or an adjacent column; blocks in distant columns are incomparable.  Levels
are assigned greedily as low as possible while scanning the word right to
left, which makes the level of a block the height of the longest chain
below it, an intrinsic quantity of the poset.  Cover edges are recovered
from the lattice embedding: (x, y) covers (x', y') iff the columns are
adjacent, y > y', and neither column holds a block strictly between.

The cylinder view identifies top and bottom: cyclic shifts move a maximal
block to the floor, and the equivalence class of a CFC heap under shifts
is summarized by its lex-least word over all shifts and commutations.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from . import classify, words
from .errors import NotCFC, NotMaximalBlock, NotReduced

Word = tuple[int, ...]


@dataclass(frozen=True)
class Block:
    index: int  # position in the source word
    gen: int  # column
    level: int  # 1-based, bottom row is 1


@dataclass(frozen=True)
class Heap:
    rank: int
    blocks: tuple[Block, ...]
    covers: frozenset[tuple[int, int]]  # (upper, lower) block indices

    def word(self) -> Word:
        return tuple(b.gen for b in self.blocks)

    def structure(self):
        """Canonical form comparing heaps as labeled posets, ignoring the
        source order of blocks."""
        order = sorted(range(len(self.blocks)), key=lambda i: (self.blocks[i].gen, self.blocks[i].level))
        renum = {old: new for new, old in enumerate(order)}
        blocks = tuple((self.blocks[i].gen, self.blocks[i].level) for i in order)
        covers = frozenset((renum[a], renum[b]) for a, b in self.covers)
        return (self.rank, blocks, covers)

    def same_poset(self, other: "Heap") -> bool:
        return self.structure() == other.structure()

    def columns(self) -> dict[int, list[Block]]:
        """Blocks per column, bottom to top."""
        cols: dict[int, list[Block]] = {}
        for b in self.blocks:
            cols.setdefault(b.gen, []).append(b)
        for col in cols.values():
            col.sort(key=lambda b: b.level)
        return cols

    def maximal_blocks(self) -> tuple[Block, ...]:
        out = []
        for b in self.blocks:
            if not any(
                other.level > b.level and abs(other.gen - b.gen) <= 1 for other in self.blocks
            ):
                out.append(b)
        return tuple(sorted(out, key=lambda b: b.gen))


def _assemble(word: Word, rank: int) -> Heap:
    """Build the stacked-block heap of any word, reduced or not."""
    word = words.check_word(word, rank)
    levels = [0] * len(word)
    col_top: dict[int, int] = {}
    for pos in range(len(word) - 1, -1, -1):
        g = word[pos]
        lvl = 1 + max(col_top.get(c, 0) for c in (g - 1, g, g + 1))
        levels[pos] = lvl
        col_top[g] = max(col_top.get(g, 0), lvl)
    blocks = tuple(Block(i, word[i], levels[i]) for i in range(len(word)))
    covers = set()
    for a in blocks:
        for b in blocks:
            if abs(a.gen - b.gen) != 1 or a.level <= b.level:
                continue
            blocked = any(
                c.gen in (a.gen, b.gen) and b.level < c.level < a.level for c in blocks
            )
            if not blocked:
                covers.add((a.index, b.index))
    return Heap(rank, blocks, frozenset(covers))


def build_heap(word, rank: int) -> Heap:
    """
    The heap of a reduced expression.

    >>> h = build_heap((1, 3), 3)
    >>> [(b.gen, b.level) for b in h.blocks], sorted(h.covers)
    ([(1, 1), (3, 1)], [])
    """
    word = words.check_word(word, rank)
    if not words.is_reduced(word, rank):
        raise NotReduced(f"{list(word)} is not reduced")
    return _assemble(word, rank)


def heap_to_word(heap: Heap) -> Word:
    """
    Read the heap top-down, left to right within a level: a linear extension,
    hence a word commutation-equivalent to every source word of the heap.

    >>> heap_to_word(build_heap((2, 3, 5, 4), 5))
    (2, 3, 5, 4)
    """
    ordered = sorted(heap.blocks, key=lambda b: (-b.level, b.gen))
    return tuple(b.gen for b in ordered)


@dataclass(frozen=True)
class Violation:
    kind: str  # "collapse" (no separator) or "braid" (exactly one)
    column: int
    block_ids: tuple[int, ...]


def _gap_violation(column: int, upper: Block, lower: Block, separators: list[Block]) -> Violation | None:
    if len(separators) > 1:
        return None
    kind = "collapse" if not separators else "braid"
    ids = (upper.index, lower.index) + tuple(s.index for s in separators)
    return Violation(kind, column, ids)


def forbidden_pattern_scan(heap: Heap, mode: str = "fc") -> tuple[Violation, ...]:
    """
    Scan for the convex subheaps that witness failure of full commutativity.

    In ``fc`` mode, a violation is a pair of consecutive same-column blocks
    with at most one block of the adjacent columns between them.  In ``cfc``
    mode the column is additionally read around the cylinder, so the gap
    that wraps past the top is scanned as well.

    >>> [v.kind for v in forbidden_pattern_scan(build_heap((3, 2, 1, 3), 3))]
    ['braid']
    >>> forbidden_pattern_scan(build_heap((1, 2, 3, 4), 4), mode="cfc")
    ()
    """
    if mode not in ("fc", "cfc"):
        raise ValueError(f"unknown scan mode {mode!r}")
    cols = heap.columns()
    out = []
    for c in sorted(cols):
        stack = cols[c]
        if len(stack) < 2:
            continue
        neighbors = cols.get(c - 1, []) + cols.get(c + 1, [])
        for lower, upper in zip(stack, stack[1:]):
            seps = [b for b in neighbors if lower.level < b.level < upper.level]
            v = _gap_violation(c, upper, lower, seps)
            if v is not None:
                out.append(v)
        if mode == "cfc":
            top, bottom = stack[-1], stack[0]
            seps = [b for b in neighbors if b.level > top.level or b.level < bottom.level]
            v = _gap_violation(c, top, bottom, seps)
            if v is not None:
                out.append(v)
    return tuple(out)


@dataclass(frozen=True)
class Chunk:
    block_ids: frozenset[int]
    start: int  # least generator
    size: int  # generator span; equals the block count on CFC heaps


def chunks(heap: Heap) -> tuple[Chunk, ...]:
    """
    Maximal connected components of the Hasse diagram, ordered by least
    generator.

    >>> [(c.start, c.size) for c in chunks(build_heap((1, 2, 3, 5, 6), 6))]
    [(1, 3), (5, 2)]
    """
    parent = list(range(len(heap.blocks)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for a in heap.blocks:
        for b in heap.blocks:
            if a.index < b.index and abs(a.gen - b.gen) <= 1:
                parent[find(a.index)] = find(b.index)
    groups: dict[int, list[Block]] = {}
    for b in heap.blocks:
        groups.setdefault(find(b.index), []).append(b)
    out = []
    for members in groups.values():
        gens = [b.gen for b in members]
        out.append(
            Chunk(frozenset(b.index for b in members), min(gens), max(gens) - min(gens) + 1)
        )
    return tuple(sorted(out, key=lambda c: c.start))


def cyclic_shift_heap(heap: Heap, gen: int) -> Heap:
    """
    Remove the maximal block labeled ``gen`` and append it at the bottom.
    The result is the heap of the shifted word and may fail to be reduced.

    >>> cyclic_shift_heap(build_heap((1, 2, 3, 4), 4), 1).word()
    (2, 3, 4, 1)
    """
    candidates = [b for b in heap.maximal_blocks() if b.gen == gen]
    if not candidates:
        raise NotMaximalBlock(f"no maximal block labeled {gen}")
    top = candidates[0]
    rest = sorted((b for b in heap.blocks if b.index != top.index), key=lambda b: (-b.level, b.gen))
    new_word = tuple(b.gen for b in rest) + (gen,)
    return _assemble(new_word, heap.rank)


@dataclass(frozen=True)
class CylindricalHeap:
    canonical_word: Word
    ring_profile: tuple[tuple[int, int], ...]  # (start, size) per ring


def cyclic_orbit(word, rank: int) -> frozenset[Word]:
    """
    All words reachable from a CFC word by commutations and cyclic shifts;
    two CFC elements are cyclically equivalent iff their orbits coincide.
    """
    word = words.check_word(word, rank)
    verdict = classify.is_cfc(word, rank)
    if not verdict.is_cfc:
        raise NotCFC(f"{list(word)} is not CFC: {verdict.witness}")
    seen = {word}
    queue = deque([word])
    while queue:
        u = queue.popleft()
        for v in words.commutation_moves(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
        v = words.cyclic_shift(u)
        if v not in seen:
            seen.add(v)
            queue.append(v)
    return frozenset(seen)


def cylindrical_canonical(word, rank: int) -> CylindricalHeap:
    """
    Canonical form of the cylinder class of a CFC word: the lex-least word
    over all commutation-class members of all cyclic shifts.

    >>> cylindrical_canonical((2, 3, 1), 4).canonical_word
    (1, 2, 3)
    """
    orbit = cyclic_orbit(word, rank)
    canonical = min(orbit)
    profile = tuple((c.start, c.size) for c in chunks(_assemble(canonical, rank)))
    return CylindricalHeap(canonical, profile)


def render(heap: Heap, fmt: str = "ascii") -> str:
    """Deterministic drawing of the stacked blocks; columns are labeled."""
    if fmt == "ascii":
        return _render_ascii(heap)
    if fmt == "svg":
        return _render_svg(heap)
    raise ValueError(f"unknown render format {fmt!r}")


def _render_ascii(heap: Heap) -> str:
    width = len(str(heap.rank)) + 2
    pitch = (width + 1) // 2
    total = (heap.rank - 1) * pitch + width
    top = max((b.level for b in heap.blocks), default=1)
    rows = [[" "] * total for _ in range(top)]
    for b in sorted(heap.blocks, key=lambda blk: (-blk.level, blk.gen)):
        text = "[" + str(b.gen).rjust(width - 2) + "]"
        x = (b.gen - 1) * pitch
        row = rows[top - b.level]
        for k, ch in enumerate(text):
            row[x + k] = ch
    label_row = [" "] * total
    for c in range(1, heap.rank + 1):
        text = str(c)
        x = (c - 1) * pitch + (width - len(text)) // 2
        for k, ch in enumerate(text):
            label_row[x + k] = ch
    lines = ["".join(r).rstrip() for r in rows] + ["".join(label_row).rstrip()]
    return "\n".join(lines) + "\n"


SVG_CELL_W = 60
SVG_CELL_H = 40


def _render_svg(heap: Heap) -> str:
    half = SVG_CELL_W // 2
    top = max((b.level for b in heap.blocks), default=1)
    width = (heap.rank - 1) * half + SVG_CELL_W + 20
    height = top * SVG_CELL_H + 40
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    ]
    for b in heap.blocks:
        x = 10 + (b.gen - 1) * half
        y = 10 + (top - b.level) * SVG_CELL_H
        parts.append(
            f'<rect x="{x}" y="{y}" width="{SVG_CELL_W}" height="{SVG_CELL_H}" '
            f'fill="white" stroke="black"/>'
        )
        parts.append(
            f'<text x="{x + half}" y="{y + SVG_CELL_H // 2 + 5}" '
            f'text-anchor="middle" font-size="16">{b.gen}</text>'
        )
    for c in range(1, heap.rank + 1):
        x = 10 + (c - 1) * half + half
        parts.append(
            f'<text x="{x}" y="{height - 10}" text-anchor="middle" '
            f'font-size="12">s{c}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
