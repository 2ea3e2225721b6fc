"""Explicit facet builders for the positivity results.

Three families:

* descending runs and their concatenation realize any corank word ending
  in an ascent (the 1-not-in-S case);
* a peel search realizes words of shape {1..i, j_1..j_l} with i <= l:
  blocks of size one or two are peeled off the remainder left to right and
  the pair blocks are refined on a schedule, the final i+1 of them right to
  left;
* the hook-shape greedy fills, for each ascent-run-plus-descent, the
  rightmost vacant gaps, and a one-step shift of a descent bar gives the
  second facet whenever the rank set is not an initial segment.

Every builder verifies its output against the descent conditions before
returning; a mismatch raises instead of returning a wrong facet.
"""

from __future__ import annotations

from .bars import BarInsertion, DescentWord, InsertionFacet, descent_word
from .orders import default_order, distinguished
from .shapes import RankSet, as_shape, full_shape, hook_shape

__all__ = [
    "ConstructionError",
    "WordUnsupportedError",
    "build_descending_run",
    "build_word",
    "build_theorem22",
    "build_bprime",
]


class ConstructionError(RuntimeError):
    pass


class WordUnsupportedError(ValueError):
    """The target word ends in a descent; no construction is claimed there."""


def _word_of(word) -> str:
    if isinstance(word, DescentWord):
        return word.letters
    if any(ch not in "AD" for ch in word):
        raise ValueError(f"not a descent word: {word!r}")
    return str(word)


def facet_from_positions(n: int, positions, shape=None, order=None) -> InsertionFacet:
    """Rebuild a facet from bare gap positions.

    Only shapes whose splits are content-determined by position are
    accepted: the one-letter shape, and the hook shape where the letter s
    always stays in the left child.
    """
    shape = as_shape(shape) if shape is not None else full_shape(n)
    order = order or default_order(shape)
    if shape.k > 2 or (shape.k == 2 and shape.parts[1] != 1):
        raise ValueError("positions do not determine contents for this shape")
    row = [(shape.root_content, 0)]
    out = []
    for t, p in enumerate(positions, start=1):
        start = 0
        for idx, (content, created) in enumerate(row):
            width = sum(content)
            if start < p <= start + width - 1:
                break
            start += width
        else:
            raise ConstructionError(f"position {p} is not inside a block")
        q = p - start
        if shape.k == 1:
            left, right = (q,), (width - q,)
        elif content[1]:  # block contains s; s-child goes left
            left, right = (q - 1, 1), (width - q, 0)
        else:
            left, right = (q, 0), (width - q, 0)
        out.append(BarInsertion(p, left, right, created))
        row[idx : idx + 1] = [(left, t), (right, t)]
    return InsertionFacet(shape, order, out)


def _verified(facet: InsertionFacet, word: str, what: str) -> InsertionFacet:
    got = str(descent_word(facet))
    if got != word:
        raise ConstructionError(
            f"{what}: built {list(facet.positions)} with word {got}, wanted {word}"
        )
    return facet


# -- words ending in an ascent -------------------------------------------------


def _parse_runs(word: str):
    """word = A^a0 D^m1 A^a1 ... D^mt A^at with at >= 1."""
    a0 = 0
    i = 0
    while i < len(word) and word[i] == "A":
        a0 += 1
        i += 1
    runs = []
    while i < len(word):
        m = 0
        while i < len(word) and word[i] == "D":
            m += 1
            i += 1
        a = 0
        while i < len(word) and word[i] == "A":
            a += 1
            i += 1
        runs.append((m, a))
    return a0, runs


def _emit_word_positions(word: str) -> list:
    """Bar positions realizing a word that ends in an ascent.

    Each descent run D^m gets the run construction on a window of m+3
    balls: pair blocks split off at even offsets, refined right to left by
    the odd bars, with a closing ascent bar.  A run followed by exactly one
    ascent instead closes with a joining bar two gaps over, whose pair
    block doubles as the first block of the next run.
    """
    n = len(word) + 2
    a0, runs = _parse_runs(word)
    if not runs:
        return list(range(1, n))  # all ascents: split off singletons left to right
    seq = list(range(1, a0 + 1))
    base = a0
    continuing = False
    for g, (m, a) in enumerate(runs):
        s = m + 3
        k = s // 2
        if s % 2 == 0:
            evens = list(range(base + 2, base + 2 * k - 1, 2))
            odds = list(range(base + 2 * k - 3, base, -2))
        else:
            evens = list(range(base + 2, base + 2 * k - 1, 2))
            odds = list(range(base + 2 * k - 1, base, -2))
        if continuing:
            evens = evens[1:]
        seq.extend(evens)
        seq.extend(odds)
        last = g == len(runs) - 1
        if not last and a == 1:
            seq.append(base + s)  # joining bar: next run's first pair block
            base += s - 2
            continuing = True
        else:
            seq.append(base + s - 1)
            extras = (a - 1) if last else (a - 2)
            seq.extend(range(base + s, base + s + extras))
            base += (s - 1) + extras
            continuing = False
    if sorted(seq) != list(range(1, n)):
        raise ConstructionError(f"word {word}: emitted positions {seq} are not a permutation")
    return seq


def build_word(word, n: int = None) -> InsertionFacet:
    """A facet of the one-letter shape achieving the given corank word.

    The word must end in an ascent (equivalently, rank 1 is not selected);
    words ending in a descent raise WordUnsupportedError, which is not a
    claim that no facet exists.
    """
    word = _word_of(word)
    if n is not None and n != len(word) + 2:
        raise ValueError(f"word of length {len(word)} needs n={len(word) + 2}")
    n = len(word) + 2
    if not word:
        raise ValueError("empty word (n=2) has no proper ranks")
    if word.endswith("D"):
        raise WordUnsupportedError(f"word {word} ends in a descent")
    facet = facet_from_positions(n, _emit_word_positions(word))
    return _verified(facet, word, "build_word")


def build_descending_run(n: int) -> InsertionFacet:
    """The facet achieving D^(n-3) A: pair blocks left to right at even
    gaps, then refined right to left, closing with one ascent."""
    if n < 4:
        raise ValueError("descending run needs n >= 4")
    return build_word("D" * (n - 3) + "A")


# -- peel search ------------------------------------------------------------


def _search_peel_facet(word: str) -> list:
    """Positions of a facet achieving ``word`` using only unit and pair
    peels plus pair refinements.

    Letters are forced move-to-move: a peel followed by a smaller-left
    peel, any refinement after a peel, and right-to-left refinements are
    descents; everything else is an ascent except two pair peels in a row,
    which descend exactly when the later block is refined first.  The DFS
    prunes on those rules and on the deferred pair-pair constraints.
    """
    n = len(word) + 2

    seq = []
    # live pair blocks: start ball -> twin partner start (or None)
    found = []

    def letter_ok(rank, value):
        return word[rank - 1] == value

    def rec(t, rem_start, rem, live, prev, pending):
        # prev: ("peel", pos, left_size) | ("refine", pos) | None
        if found:
            return
        if t == n:
            if rem == 0 and not live:
                found.append(list(seq))
            return
        rank = t - 1  # letter decided by the pair (t-1, t)
        moves = []
        if rem >= 2:
            moves.append(("peel", 1))
        if rem >= 4:
            moves.append(("peel", 2))
        for start in sorted(live, reverse=True):
            twin = live[start]
            if twin is not None and twin < start and twin in live:
                continue  # left twin first
            moves.append(("refine", start))
        for kind, arg in moves:
            if kind == "peel":
                pos = rem_start + arg - 1
                if prev is not None and rank >= 1:
                    if prev[0] == "refine":
                        if not letter_ok(rank, "A"):
                            continue
                    else:
                        _, ppos, pleft = prev
                        if pleft > arg:
                            need = "D"
                        elif pleft == 2 and arg == 2:
                            need = None  # deferred to refinement order
                        else:
                            need = "A"
                        if need and not letter_ok(rank, need):
                            continue
                new_pending = pending
                if prev is not None and prev[0] == "peel" and prev[2] == 2 == arg:
                    # blocks [ppos-1, rem_start+? ]: earlier block starts prev pos-1
                    new_pending = pending + (((prev[1] - 1), rem_start, rank),)
                new_live = dict(live)
                new_rem_start, new_rem = rem_start + arg, rem - arg
                if arg == 2:
                    new_live[rem_start] = None
                if new_rem == 2:
                    # remainder becomes an ordinary pair block
                    new_live[new_rem_start] = rem_start if arg == 2 and rem == 4 else None
                    if arg == 2 and rem == 4:
                        new_live[rem_start] = new_rem_start
                    new_rem_start, new_rem = new_rem_start + 2, 0
                elif new_rem == 1 or new_rem < 0:
                    continue  # a lone ball or overdraw can never complete
                seq.append(pos)
                rec(t + 1, new_rem_start, new_rem, new_live, ("peel", pos, arg), new_pending)
                seq.pop()
            else:
                start = arg
                pos = start
                if prev is not None and rank >= 1:
                    if prev[0] == "peel":
                        if pos < prev[1]:
                            need = "D"
                        else:
                            # the converted remainder pair is the peel's own
                            # right child; descent only under a pair left child
                            need = "D" if prev[2] == 2 else "A"
                    else:
                        need = "D" if prev[1] > pos else "A"
                    if not letter_ok(rank, need):
                        continue
                ok = True
                for first_start, second_start, prank in pending:
                    if word[prank - 1] == "D":
                        # later block must be refined before the earlier one
                        if start == first_start and second_start in live:
                            ok = False
                            break
                    else:
                        if start == second_start and first_start in live:
                            ok = False
                            break
                if not ok:
                    continue
                new_live = dict(live)
                del new_live[start]
                seq.append(pos)
                rec(t + 1, rem_start, rem, new_live, ("refine", pos), pending)
                seq.pop()

    rec(1, 1, n, {}, None, ())
    if not found:
        raise ConstructionError(f"no peel facet achieves word {word}")
    return found[0]


def _parse_initial_plus_tail(ranks, n: int):
    """S = {1..i} u {j_1 < ... < j_l} with j_1 > i + 1; returns (i, js)."""
    s = sorted(RankSet.primal(n, ranks).ranks)
    i = 0
    while i < len(s) and s[i] == i + 1:
        i += 1
    js = s[i:]
    if js and i and js[0] == i + 1:  # pragma: no cover - loop above forbids
        raise AssertionError
    return i, tuple(js)


def build_theorem22(ranks, n: int) -> InsertionFacet:
    """A facet whose descent set is the corank image of S = {1..i, j_1..j_l},
    requiring j_1 - i > 1 and i <= l."""
    i, js = _parse_initial_plus_tail(ranks, n)
    l = len(js)
    if i > l:
        raise ValueError(f"needs i <= l, got i={i}, l={l}")
    dual = RankSet.primal(n, set(range(1, i + 1)) | set(js)).as_dual()
    word = str(DescentWord.from_dual_set(n, dual.ranks))
    if i == 0:
        return build_word(word)
    facet = facet_from_positions(n, _search_peel_facet(word))
    return _verified(facet, word, "build_theorem22")


# -- hook shape ------------------------------------------------------------


def _bprime_parse(word: str):
    """Groups (ascent count, descent) plus the trailing ascent count."""
    groups = []
    i = 0
    while i < len(word):
        a = 0
        while i < len(word) and word[i] == "A":
            a += 1
            i += 1
        if i < len(word):
            groups.append(a)
            i += 1
        else:
            return groups, a
    return groups, 0


def _bprime_greedy(n: int, word: str) -> list:
    groups, z = _bprime_parse(word)
    seq = []
    top = n - 1
    for a in groups:
        seq.extend(range(top - a, top + 1))
        top -= a + 1
    seq.extend(range(1, z + 2))
    return seq


def _bprime_alternative(n: int, word: str) -> list:
    """Shift the first descent bar that precedes an ascent one gap left;
    the displaced rightmost gap is taken by the next descent bar, or by
    the final ascent bar when only ascents remain."""
    groups, z = _bprime_parse(word)
    target = None
    for g in range(len(groups)):
        if (g + 1 < len(groups) and groups[g + 1] >= 1) or (
            g + 1 == len(groups) and z >= 1
        ):
            target = g
            break
    if target is None:
        raise ConstructionError("no descent precedes an ascent; rank set is initial")
    seq = []
    top = n - 1
    vacancy = None
    for g, a in enumerate(groups):
        if g == target:
            vacancy = top
            seq.extend(range(top - a - 1, top))
            top -= a + 2
        elif vacancy is not None:
            seq.extend(range(top - a + 1, top + 1))
            seq.append(vacancy)
            vacancy = None
            top -= a
        else:
            seq.extend(range(top - a, top + 1))
            top -= a + 1
    if vacancy is None:
        seq.extend(range(1, z + 2))
    else:
        seq.extend(range(1, z + 1))
        seq.append(vacancy)
    return seq


def build_bprime(ranks, n: int) -> tuple:
    """Facets of the hook-shape quotient achieving the corank image of S.

    Returns one facet when S is an initial segment 1..i (where the
    multiplicity is exactly one) and two distinct verified facets
    otherwise.
    """
    rs = RankSet.primal(n, ranks) if not isinstance(ranks, RankSet) else ranks.as_primal()
    word = str(DescentWord.from_dual_set(n, rs.as_dual().ranks))
    shape = hook_shape(n)
    order = distinguished(shape)
    greedy = _verified(
        facet_from_positions(n, _bprime_greedy(n, word), shape, order),
        word,
        "build_bprime",
    )
    s = sorted(rs.ranks)
    if s == list(range(1, len(s) + 1)):
        return (greedy,)
    alt = _verified(
        facet_from_positions(n, _bprime_alternative(n, word), shape, order),
        word,
        "build_bprime alternative",
    )
    if alt.chain_type() == greedy.chain_type():  # pragma: no cover - distinctness guard
        raise ConstructionError("alternative facet coincides with the greedy one")
    return (greedy, alt)
