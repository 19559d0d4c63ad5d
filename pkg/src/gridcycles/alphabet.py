"""Letter alphabet and circular-word algebra for column codes of 2-factors.

Every vertex of a 2-factor has degree exactly two, so its local shape is a
2-subset of the four edge directions {left, right, up, down}.  The six
possibilities are named ``a`` .. ``f``:

    a = {right, up}     b = {up, down}      c = {right, down}
    d = {left, up}      e = {left, right}   f = {left, down}

A column of the grid is encoded as a *circular* word over this alphabet
(index arithmetic mod m, top to bottom).  Two neighbouring letters in a
column are consistent when the upper letter's down-edge matches the lower
letter's up-edge; two horizontally adjacent letters are consistent when the
left letter's right-edge matches the right letter's left-edge.

The binary "outlet" word of a column records which rows send an edge to the
right; the "inlet" word records which rows receive an edge from the left.
These words drive the reduced transfer digraph in :mod:`gridcycles.transfer`.

All functions here are pure; words are plain ``str`` values (letters over
``abcdef``, binary words over ``01``) and safe to share across threads.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple


class AlphaLetter(NamedTuple):
    """One local vertex configuration: which of the four directions carry an edge."""

    id: str
    left: bool
    right: bool
    up: bool
    down: bool


LETTER_IDS = "abcdef"

LETTERS: dict[str, AlphaLetter] = {
    "a": AlphaLetter("a", left=False, right=True, up=True, down=False),
    "b": AlphaLetter("b", left=False, right=False, up=True, down=True),
    "c": AlphaLetter("c", left=False, right=True, up=False, down=True),
    "d": AlphaLetter("d", left=True, right=False, up=True, down=False),
    "e": AlphaLetter("e", left=True, right=True, up=False, down=False),
    "f": AlphaLetter("f", left=True, right=False, up=False, down=True),
}

# Letter-level involutions: reflect across a horizontal line (swap up/down)
# or a vertical line (swap left/right).
_H_MAP = str.maketrans("abcdef", "cbafed")
_V_MAP = str.maketrans("abcdef", "dbfaec")

_UP = {k: v.up for k, v in LETTERS.items()}
_DOWN = {k: v.down for k, v in LETTERS.items()}
_LEFT = {k: v.left for k, v in LETTERS.items()}
_RIGHT = {k: v.right for k, v in LETTERS.items()}


def ud_arc(x: str, y: str) -> bool:
    """Can letter ``y`` sit directly below letter ``x`` in a column?"""
    return _DOWN[x] == _UP[y]


def lr_arc(x: str, y: str) -> bool:
    """Can letter ``y`` sit directly to the right of letter ``x`` in a row?"""
    return _RIGHT[x] == _LEFT[y]


def rotate(word: str, k: int = 1) -> str:
    """Cyclic left shift by ``k`` positions (works for letter and binary words)."""
    m = len(word)
    if m == 0:
        raise ValueError("empty word")
    k %= m
    return word[k:] + word[:k]


def horizontal_convert(word: str) -> str:
    """Reflect a letter word across a horizontal line: reverse it and swap
    each letter's up/down edges.  An involution."""
    return word.translate(_H_MAP)[::-1]


def vertical_convert(word: str) -> str:
    """Reflect a letter word across a vertical line: swap each letter's
    left/right edges in place.  An involution."""
    return word.translate(_V_MAP)


def reverse_binary(word: str) -> str:
    """Reversal of a binary word (the horizontal conversion of outlet words)."""
    return word[::-1]


def outlet(word: str) -> str:
    """Binary word marking the rows whose letter has a right edge."""
    return "".join("1" if _RIGHT[ch] else "0" for ch in word)


def inlet(word: str) -> str:
    """Binary word marking the rows whose letter has a left edge."""
    return "".join("1" if _LEFT[ch] else "0" for ch in word)


def is_column_word(word: str) -> bool:
    """Does the word satisfy the cyclic up/down consistency of a column?"""
    m = len(word)
    return m > 0 and all(ud_arc(word[j], word[(j + 1) % m]) for j in range(m))


def _column_words(m: int, alphabet: str) -> list[str]:
    """All cyclically up/down-consistent words of length m over ``alphabet``,
    in lexicographic order."""
    if m < 1:
        raise ValueError(f"word length must be >= 1, got {m}")
    out: list[str] = []
    letters = sorted(alphabet)

    def extend(prefix: list[str]) -> None:
        if len(prefix) == m:
            if ud_arc(prefix[-1], prefix[0]):
                out.append("".join(prefix))
            return
        last = prefix[-1]
        for ch in letters:
            if ud_arc(last, ch):
                prefix.append(ch)
                extend(prefix)
                prefix.pop()

    for first in letters:
        extend([first])
    return out


def enumerate_column_words(m: int) -> list[str]:
    """All valid column words of length m, lexicographic.  |result| = 3^m + (-1)^m."""
    return _column_words(m, LETTER_IDS)


def first_column_words(m: int) -> list[str]:
    """Column words usable as a leftmost column (no left edges): over {a,b,c}."""
    return _column_words(m, "abc")


def last_column_words(m: int) -> list[str]:
    """Column words usable as a rightmost column (no right edges): over {b,d,f}."""
    return _column_words(m, "bdf")


# For a position with inlet bit u and outlet bit w, the vertical (up, down)
# bits of the letter are constrained to a 2x2 0/1 transition matrix on the
# chain variable "up bit of this row"; the number of valid column words with
# given inlet/outlet words is the trace of the product of these matrices.
#   (u, w) = (0, 0) -> letter b, up = down = 1
#   (u, w) = (1, 1) -> letter e, up = down = 0
#   otherwise       -> a/c (w=1) or d/f (u=1): up + down = 1, both orders
_POS_MATRIX = {
    (0, 0): ((0, 0), (0, 1)),
    (1, 1): ((1, 0), (0, 0)),
    (0, 1): ((0, 1), (1, 0)),
    (1, 0): ((0, 1), (1, 0)),
}


def count_io_words(u: str, w: str) -> int:
    """Number of column words with inlet ``u`` and outlet ``w``; always 0, 1 or 2."""
    if len(u) != len(w):
        raise ValueError("inlet and outlet words must have equal length")
    p00, p01, p10, p11 = 1, 0, 0, 1
    for ub, wb in zip(u, w):
        (m00, m01), (m10, m11) = _POS_MATRIX[(int(ub), int(wb))]
        p00, p01, p10, p11 = (
            p00 * m00 + p01 * m10,
            p00 * m01 + p01 * m11,
            p10 * m00 + p11 * m10,
            p10 * m01 + p11 * m11,
        )
    return p00 + p11

# Letter choices per (inlet bit, up bit, down bit); outlet bit is implied.
_LETTER_BY_BITS = {
    (0, 1, 1): "b",
    (0, 1, 0): "a",
    (0, 0, 1): "c",
    (1, 0, 0): "e",
    (1, 1, 0): "d",
    (1, 0, 1): "f",
}


def words_with_inlet(u: str) -> Iterator[str]:
    """Yield every column word whose inlet word is ``u``.

    Used to walk reduced-digraph arcs without materialising the whole
    adjacency matrix: each yielded word ``x`` contributes one arc
    ``u -> outlet(x)``.
    """
    m = len(u)
    bits = [int(ch) for ch in u]
    word: list[str] = [""] * m

    # chain variable: the "up" bit of each row; row j fixes (up_j, down_j)
    # with down_j = up_{j+1}, and (inlet, up+down) determines the letter.
    def extend(j: int, up: int, first_up: int) -> Iterator[str]:
        if j == m:
            if up == first_up:
                yield "".join(word)
            return
        ub = bits[j]
        for down in (0, 1):
            letter = _LETTER_BY_BITS.get((ub, up, down))
            if letter is None:
                continue
            word[j] = letter
            yield from extend(j + 1, down, first_up)

    for first in (0, 1):
        yield from extend(0, first, first)
