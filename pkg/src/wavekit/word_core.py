"""Cyclic words in the free group F(A, B).

Uppercase letters are generators, lowercase their inverses.  Words are
stored as plain strings; ``CyclicWord`` is a thin immutable wrapper that
carries an optional label.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

ALPHABET = "AaBb"
_INV = str.maketrans("AaBb", "aAbB")
_SWAP = str.maketrans("AaBb", "BbAa")
_FLIP_A = str.maketrans("Aa", "aA")
_FLIP_B = str.maketrans("Bb", "bB")
# order-preserving recoding for the fixed letter order A < a < B < b
_KEY = str.maketrans("AaBb", "0123")
_UNKEY = str.maketrans("0123", "AaBb")


class WordError(ValueError):
    pass


class EmptyWord(WordError):
    def __init__(self):
        super().__init__("empty word")


class IllegalCharacter(WordError):
    def __init__(self, position: int, char: str = ""):
        self.position = position
        super().__init__(f"illegal character {char!r} at position {position}")


@dataclass(frozen=True)
class Letter:
    generator: str  # "A" or "B"
    sign: int  # +1 or -1

    def __str__(self):
        return self.generator if self.sign > 0 else self.generator.lower()

    @classmethod
    def from_char(cls, c: str) -> "Letter":
        return cls(c.upper(), 1 if c.isupper() else -1)


@dataclass(frozen=True)
class CyclicWord:
    text: str
    label: Optional[str] = None

    @property
    def letters(self) -> tuple:
        return tuple(Letter.from_char(c) for c in self.text)

    def __len__(self):
        return len(self.text)

    def __str__(self):
        return self.text

    def __iter__(self):
        return iter(self.text)


@dataclass(frozen=True)
class AbelianImage:
    nA: int
    nB: int

    def __add__(self, other):
        return AbelianImage(self.nA + other.nA, self.nB + other.nB)

    def __neg__(self):
        return AbelianImage(-self.nA, -self.nB)

    def as_tuple(self):
        return (self.nA, self.nB)


@dataclass(frozen=True)
class Symmetries:
    rotation: bool = True
    inversion: bool = False
    generator_swap: bool = False
    generator_inversion: bool = False


ROTATION = Symmetries()
UNORIENTED = Symmetries(inversion=True)
FULL = Symmetries(True, True, True, True)

WordLike = Union[str, CyclicWord]


def text_of(w: WordLike) -> str:
    return w.text if isinstance(w, CyclicWord) else w


# ---- string level helpers (used throughout the package) ----

def inverse(s: str) -> str:
    return s[::-1].translate(_INV)


def free_reduce(s: str) -> str:
    out = []
    for c in s:
        if out and out[-1] == c.swapcase():
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def cyclic_reduce(s: str) -> str:
    s = free_reduce(s)
    i, j = 0, len(s) - 1
    while i < j and s[i] == s[j].swapcase():
        i += 1
        j -= 1
    return s[i:j + 1]


def is_cyclically_reduced(s: str) -> bool:
    if any(s[k] == s[k + 1].swapcase() for k in range(len(s) - 1)):
        return False
    return len(s) < 2 or s[0] != s[-1].swapcase()


def least_rotation(s: str) -> str:
    if not s:
        return s
    k = s.translate(_KEY)
    d = k + k
    n = len(k)
    return min(d[i:i + n] for i in range(n)).translate(_UNKEY)


def swap_generators(s: str) -> str:
    return s.translate(_SWAP)


def canonical(s: str, sym: Symmetries = ROTATION) -> str:
    variants = {s}
    if sym.generator_inversion:
        variants |= {v.translate(_FLIP_A) for v in variants}
        variants |= {v.translate(_FLIP_B) for v in variants}
    if sym.generator_swap:
        variants |= {v.translate(_SWAP) for v in variants}
    if sym.inversion:
        variants |= {inverse(v) for v in variants}
    if sym.rotation:
        variants = {least_rotation(v) for v in variants}
    return min(variants, key=lambda v: v.translate(_KEY))


def sort_key(s: str):
    return (len(s), s.translate(_KEY))


def exponent_sums(s: str) -> tuple:
    return (s.count("A") - s.count("a"), s.count("B") - s.count("b"))


def power_root(s: str):
    n = len(s)
    for d in range(1, n // 2 + 1):
        if n % d == 0 and s[:d] * (n // d) == s:
            return s[:d], n // d
    return None


def is_rotation(s: str, t: str) -> bool:
    return len(s) == len(t) and s in t + t


# ---- public operations ----

def parse_word(text: str, label: Optional[str] = None) -> CyclicWord:
    if not text:
        raise EmptyWord()
    for i, c in enumerate(text):
        if c not in ALPHABET:
            raise IllegalCharacter(i, c)
    return CyclicWord(text, label)


def reduce(w: WordLike) -> CyclicWord:
    label = w.label if isinstance(w, CyclicWord) else None
    return CyclicWord(cyclic_reduce(text_of(w)), label)


def invert(w: WordLike) -> CyclicWord:
    return CyclicWord(inverse(text_of(w)))


def rotate(w: WordLike, k: int) -> CyclicWord:
    s = text_of(w)
    if not s:
        return CyclicWord(s)
    k %= len(s)
    return CyclicWord(s[k:] + s[:k])


def canonical_form(w: WordLike, symmetries: Symmetries = ROTATION) -> CyclicWord:
    return CyclicWord(canonical(text_of(w), symmetries))


def abelianize(w: WordLike) -> AbelianImage:
    return AbelianImage(*exponent_sums(text_of(w)))


def proper_power_root(w: WordLike):
    """(root, k) with k >= 2 if the cyclic word is a proper power, else None."""
    r = power_root(text_of(w))
    if r is None:
        return None
    return CyclicWord(r[0]), r[1]
