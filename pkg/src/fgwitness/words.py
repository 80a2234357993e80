"""Freely reduced words in a free group of finite rank.

A letter is a nonzero int: ``g + 1`` for generator ``g`` and ``-(g + 1)``
for its inverse. Words are immutable; every operation returns a new word.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetMismatch, EmptyArgumentList, LetterOutOfRange, ParseError

LETTER_RANK_LIMIT = 26


def letter(gen: int, sign: int = 1) -> int:
    return (gen + 1) if sign > 0 else -(gen + 1)


def letter_gen(x: int) -> int:
    return abs(x) - 1


def _check_rank(rank):
    if not isinstance(rank, int) or rank < 1:
        raise ValueError(f"rank must be a positive integer, got {rank!r}")


def free_reduce(letters: Iterable[int]) -> tuple:
    """Stack-based free reduction of a raw signed-int sequence."""
    out = []
    for x in letters:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class Word:
    rank: int
    letters: tuple = ()

    def __post_init__(self):
        _check_rank(self.rank)
        prev = 0
        for x in self.letters:
            if x == 0 or abs(x) > self.rank:
                raise LetterOutOfRange(f"letter {x} outside rank {self.rank}")
            if x == -prev:
                raise ValueError(f"letters {self.letters} are not freely reduced")
            prev = x

    @classmethod
    def identity(cls, rank):
        return cls(rank, ())

    @classmethod
    def generator(cls, rank, gen, sign=1):
        return reduce([letter(gen, sign)], rank)

    def __len__(self):
        return len(self.letters)

    def is_identity(self):
        return not self.letters

    def __mul__(self, other):
        return multiply(self, other)

    def __invert__(self):
        return invert(self)

    def __str__(self):
        return render_word(self)

    def __repr__(self):
        return f"Word({render_word(self) or 'ε'!s}, rank={self.rank})"


def _trusted(rank, letters):
    # skips validation; callers guarantee reduced, in-range letters
    w = object.__new__(Word)
    object.__setattr__(w, "rank", rank)
    object.__setattr__(w, "letters", letters)
    return w


def reduce(raw: Iterable[int], rank: int) -> Word:
    """Freely reduce ``raw`` into a :class:`Word` of the given rank.

    Letters may be signed ints or ``(gen, sign)`` pairs.
    """
    _check_rank(rank)
    seq = []
    for x in raw:
        if isinstance(x, tuple):
            gen, sign = x
            if not 0 <= gen < rank:
                raise LetterOutOfRange(f"generator {gen} outside rank {rank}")
            x = letter(gen, sign)
        elif x == 0 or abs(x) > rank:
            raise LetterOutOfRange(f"letter {x} outside rank {rank}")
        seq.append(x)
    return _trusted(rank, free_reduce(seq))


def _same_rank(*words):
    rank = words[0].rank
    for w in words[1:]:
        if w.rank != rank:
            raise AlphabetMismatch(f"rank {w.rank} != {rank}")
    return rank


def multiply(u: Word, v: Word) -> Word:
    rank = _same_rank(u, v)
    a, b = u.letters, v.letters
    k = 0
    n = min(len(a), len(b))
    while k < n and a[len(a) - 1 - k] == -b[k]:
        k += 1
    return _trusted(rank, a[: len(a) - k] + b[k:])


def product_of(words: Sequence[Word], rank: int) -> Word:
    out = Word(rank)
    for w in words:
        out = multiply(out, w)
    return out


def invert(w: Word) -> Word:
    return _trusted(w.rank, tuple(-x for x in reversed(w.letters)))


def conjugate(w: Word, g: Word) -> Word:
    """Return ``g^-1 w g``."""
    return multiply(multiply(invert(g), w), g)


def commutator(u: Word, v: Word) -> Word:
    """Return ``[u, v] = u^-1 v^-1 u v``."""
    _same_rank(u, v)
    return multiply(multiply(invert(u), invert(v)), multiply(u, v))


def left_normed_commutator(args: Sequence[Word]) -> Word:
    """``[x1, ..., xk] = [[x1, ..., x(k-1)], xk]``, with ``[x1] = x1``."""
    args = list(args)
    if not args:
        raise EmptyArgumentList("left-normed commutator needs at least one argument")
    _same_rank(*args)
    c = args[0]
    for x in args[1:]:
        c = commutator(c, x)
    return c


def reduced_words(n_letters: int, max_len: int, min_len: int = 0) -> Iterator[tuple]:
    """Yield every freely reduced signed-int tuple over ``n_letters`` letters.

    Ordered by length, then lexicographically on (1, -1, 2, -2, ...).
    """
    alphabet = [s * (g + 1) for g in range(n_letters) for s in (1, -1)]
    level = [()]
    if min_len <= 0:
        yield ()
    for length in range(1, max_len + 1):
        nxt = []
        for w in level:
            for x in alphabet:
                if w and w[-1] == -x:
                    continue
                nxt.append(w + (x,))
        level = nxt
        if length >= min_len:
            yield from level


def all_words(rank: int, max_len: int, min_len: int = 0) -> Iterator[Word]:
    for t in reduced_words(rank, max_len, min_len):
        yield _trusted(rank, t)


def raw_words(rank: int, length: int) -> Iterator[tuple]:
    """Every (not necessarily reduced) letter sequence of exactly ``length``."""
    alphabet = [s * (g + 1) for g in range(rank) for s in (1, -1)]
    return product(alphabet, repeat=length)


# text syntax -----------------------------------------------------------------

_NUMERIC = re.compile(r"(?:[xX]\d+)+")
_TOKEN = re.compile(r"([xX])(\d+)")


def parse_word(text: str, rank: int) -> Word:
    """Parse ``abA`` style (rank <= 26) or ``x1X2`` style (any rank) words.

    Lowercase is a generator, uppercase its inverse. Numeric indices are
    1-based. The empty string is the identity.
    """
    _check_rank(rank)
    text = text.strip()
    if text in ("", "1", "ε"):
        return Word(rank)
    raw = []
    if any(ch.isdigit() for ch in text):
        if not _NUMERIC.fullmatch(text):
            raise ParseError(f"cannot parse {text!r}: mixed or malformed numeric syntax")
        for case, idx in _TOKEN.findall(text):
            gen = int(idx) - 1
            if not 0 <= gen < rank:
                raise ParseError(f"generator index {idx} out of range for rank {rank}")
            raw.append(letter(gen, 1 if case == "x" else -1))
    else:
        for ch in text:
            if not ("a" <= ch.lower() <= "z") or not ch.isascii():
                raise ParseError(f"unknown character {ch!r} in {text!r}")
            gen = ord(ch.lower()) - ord("a")
            if gen >= rank:
                raise ParseError(f"letter {ch!r} out of range for rank {rank}")
            raw.append(letter(gen, 1 if ch.islower() else -1))
    return _trusted(rank, free_reduce(raw))


def render_letters(letters: Sequence[int], rank: int) -> str:
    if rank <= LETTER_RANK_LIMIT:
        return "".join(
            chr(ord("a") + x - 1) if x > 0 else chr(ord("A") - x - 1) for x in letters
        )
    return "".join(f"x{x}" if x > 0 else f"X{-x}" for x in letters)


def render_word(w: Word) -> str:
    return render_letters(w.letters, w.rank)
