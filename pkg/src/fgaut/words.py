"""Freely reduced words over a finite ranked basis.

A letter is a nonzero signed integer: ``+i`` is the i-th generator,
``-i`` its inverse.  Words are immutable, carry their ambient rank, and
are freely reduced on construction, so no API ever sees an unreduced
word.  Rendering follows a fixed grammar: tokens separated by single
spaces, generator ``i`` printed ``x<i>``, its inverse ``X<i>``, and the
identity printed as the single token ``1``.

>>> render_word(parse_word("x1 X1 x2", 2))
'x2'
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator

from .errors import RankError, WordLengthError, WordSyntaxError

# Fail-fast guard against runaway products; large enough for any desk-scale
# computation in this package.
MAX_WORD_LETTERS = 10**6

_TOKEN_RE = re.compile(r"^([xX])([1-9][0-9]*)$")


def _reduce(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    push = stack.append
    pop = stack.pop
    for a in letters:
        if stack and stack[-1] == -a:
            pop()
        else:
            push(a)
    return tuple(stack)


class Word:
    """A freely reduced word; the element type of the free group."""

    __slots__ = ("rank", "letters")

    def __init__(self, rank: int, letters: Iterable[int] = ()):
        if rank < 1:
            raise RankError(f"rank must be positive, got {rank}")
        letters = tuple(letters)
        for a in letters:
            if a == 0 or abs(a) > rank:
                raise RankError(f"letter {a} invalid at rank {rank}")
        if len(letters) > MAX_WORD_LETTERS:
            raise WordLengthError(
                f"word of {len(letters)} letters exceeds guard {MAX_WORD_LETTERS}"
            )
        object.__setattr__(self, "rank", rank)
        object.__setattr__(self, "letters", _reduce(letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Word)
            and self.rank == other.rank
            and self.letters == other.letters
        )

    def __hash__(self) -> int:
        return hash((self.rank, self.letters))

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __repr__(self) -> str:
        return f"Word({self.rank}, {render_word(self)!r})"


def identity_word(rank: int) -> Word:
    return Word(rank, ())


def generator_word(rank: int, index: int, sign: int = 1) -> Word:
    """The one-letter word for generator ``index`` (or its inverse)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return Word(rank, (sign * index,))


def parse_word(text: str, rank: int) -> Word:
    """Parse a word string; returns the free reduction of the letters.

    The grammar is strict: single spaces between tokens, ``x<i>`` /
    ``X<i>`` letters with decimal indices and no leading zeros, and
    ``1`` only as the entire text.
    """
    if text == "1":
        return identity_word(rank)
    if text == "" or text != text.strip(" ") or "  " in text:
        raise WordSyntaxError(f"malformed word string: {text!r}")
    letters = []
    for token in text.split(" "):
        m = _TOKEN_RE.match(token)
        if m is None:
            raise WordSyntaxError(f"bad token {token!r} in {text!r}")
        index = int(m.group(2))
        if index > rank:
            raise RankError(f"generator index {index} exceeds rank {rank}")
        letters.append(index if m.group(1) == "x" else -index)
    return Word(rank, letters)


def render_word(w: Word) -> str:
    if not w.letters:
        return "1"
    return " ".join(f"x{a}" if a > 0 else f"X{-a}" for a in w.letters)


def _check_ranks(u: Word, v: Word) -> None:
    if u.rank != v.rank:
        raise RankError(f"rank mismatch: {u.rank} vs {v.rank}")


def multiply(u: Word, v: Word) -> Word:
    """Freely reduced concatenation u*v."""
    _check_ranks(u, v)
    if len(u.letters) + len(v.letters) > MAX_WORD_LETTERS:
        raise WordLengthError("product exceeds the word length guard")
    return Word(u.rank, u.letters + v.letters)


def invert_word(w: Word) -> Word:
    return Word(w.rank, tuple(-a for a in reversed(w.letters)))


def conjugate(w: Word, t: Word) -> Word:
    """t * w * t^-1, freely reduced."""
    _check_ranks(w, t)
    return multiply(multiply(t, w), invert_word(t))


def cyclic_reduce(w: Word) -> tuple[Word, Word]:
    """Split ``w = conjugator * core * conjugator^-1`` with a cyclically
    reduced core (first and last letters not mutually inverse)."""
    letters = w.letters
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == -letters[j - 1]:
        i += 1
        j -= 1
    return Word(w.rank, letters[i:j]), Word(w.rank, letters[:i])


def cyclic_length(w: Word) -> int:
    letters = w.letters
    i, j = 0, len(letters)
    while j - i >= 2 and letters[i] == -letters[j - 1]:
        i += 1
        j -= 1
    return j - i


def random_reduced_word(rank: int, length: int, rng) -> Word:
    """A uniformly random freely reduced word of exactly ``length`` letters
    (shorter only when length is 0).  ``rng`` is a ``random.Random``."""
    letters: list[int] = []
    choices = [s * i for i in range(1, rank + 1) for s in (1, -1)]
    for _ in range(length):
        banned = -letters[-1] if letters else 0
        a = rng.choice(choices)
        while a == banned:
            a = rng.choice(choices)
        letters.append(a)
    return Word(rank, letters)


def iter_reduced_words(rank: int, max_len: int) -> Iterator[Word]:
    """All freely reduced words of length at most ``max_len``, shortest
    first, letters ordered 1, -1, 2, -2, ..."""
    order = [s * i for i in range(1, rank + 1) for s in (1, -1)]
    frontier: list[tuple[int, ...]] = [()]
    yield Word(rank, ())
    for _ in range(max_len):
        nxt: list[tuple[int, ...]] = []
        for tail in frontier:
            banned = -tail[-1] if tail else 0
            for a in order:
                if a != banned:
                    seq = tail + (a,)
                    nxt.append(seq)
                    yield Word(rank, seq)
        frontier = nxt
