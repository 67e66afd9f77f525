"""Finite words over a bounded integer alphabet.

A :class:`SymbolWord` is an immutable prefix of an infinite word
``x_1 x_2 ...`` over ``{0, ..., b-1}``.  Symbols are stored as a ``bytes``
object, so slicing and hashing are cheap even for million-symbol prefixes.

Public positions (:class:`Factor`, :meth:`SymbolWord.symbol`,
:meth:`SymbolWord.factor`) are 1-based.  Python-level ``word[i]`` indexing
stays 0-based, like any other sequence.
"""
from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, overload

DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
_DIGIT_VALUE = {c: i for i, c in enumerate(DIGITS)}
MAX_BASE = len(DIGITS)
LINE_WIDTH = 80


class WordError(ValueError):
    """Base class for malformed words and factors."""


class InvalidSymbol(WordError):
    def __init__(self, position: int, char: object, base: int):
        super().__init__(f"symbol {char!r} at position {position} is not a base-{base} digit")
        self.position = position


class OutOfBounds(WordError, IndexError):
    pass


@dataclass(frozen=True)
class Alphabet:
    size: int

    def __post_init__(self):
        if not isinstance(self.size, int) or not 2 <= self.size <= MAX_BASE:
            raise ValueError(f"alphabet size must be an integer in [2, {MAX_BASE}], got {self.size!r}")

    def __contains__(self, symbol: int) -> bool:
        return 0 <= symbol < self.size


def _as_alphabet(alphabet: Alphabet | int) -> Alphabet:
    return alphabet if isinstance(alphabet, Alphabet) else Alphabet(alphabet)


@dataclass(frozen=True)
class Factor:
    """The factor ``x_start ... x_{start+length-1}`` (1-based)."""

    start: int
    length: int

    def __post_init__(self):
        if self.start < 1 or self.length < 1:
            raise WordError(f"invalid factor {self}")

    @property
    def end(self) -> int:
        return self.start + self.length - 1


class SymbolWord:
    """Immutable word over ``Alphabet(size)``."""

    __slots__ = ("alphabet", "_data", "_hash")

    def __init__(self, symbols: Iterable[int] | bytes, alphabet: Alphabet | int):
        alphabet = _as_alphabet(alphabet)
        data = bytes(symbols)
        if data:
            top = max(data)
            if top >= alphabet.size:
                pos = next(i for i, s in enumerate(data) if s >= alphabet.size)
                raise InvalidSymbol(pos + 1, data[pos], alphabet.size)
        self.alphabet = alphabet
        self._data = data
        self._hash = None

    @classmethod
    def _trusted(cls, data: bytes, alphabet: Alphabet) -> "SymbolWord":
        obj = cls.__new__(cls)
        obj.alphabet = alphabet
        obj._data = data
        obj._hash = None
        return obj

    @property
    def base(self) -> int:
        return self.alphabet.size

    @property
    def symbols(self) -> bytes:
        return self._data

    @property
    def length(self) -> int:
        return len(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __iter__(self) -> Iterator[int]:
        return iter(self._data)

    @overload
    def __getitem__(self, key: int) -> int: ...
    @overload
    def __getitem__(self, key: slice) -> "SymbolWord": ...

    def __getitem__(self, key):
        if isinstance(key, slice):
            return SymbolWord._trusted(self._data[key], self.alphabet)
        return self._data[key]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymbolWord):
            return NotImplemented
        return self.alphabet == other.alphabet and self._data == other._data

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.alphabet.size, self._data))
        return self._hash

    def __add__(self, other: "SymbolWord") -> "SymbolWord":
        if not isinstance(other, SymbolWord):
            return NotImplemented
        if other.alphabet != self.alphabet:
            raise WordError("cannot concatenate words over different alphabets")
        return SymbolWord._trusted(self._data + other._data, self.alphabet)

    def __mul__(self, k: int) -> "SymbolWord":
        return SymbolWord._trusted(self._data * k, self.alphabet)

    def __repr__(self) -> str:
        text = word_to_text(self)
        if len(text) > 40:
            text = text[:37] + "..."
        return f"SymbolWord({text!r}, base={self.base})"

    def symbol(self, i: int) -> int:
        """Return ``x_i`` (1-based)."""
        if not 1 <= i <= len(self._data):
            raise OutOfBounds(f"position {i} outside word of length {len(self._data)}")
        return self._data[i - 1]

    def factor(self, start: int, length: int | None = None) -> "SymbolWord":
        f = start if isinstance(start, Factor) else Factor(start, length)
        _check_inside(self, f)
        return SymbolWord._trusted(self._data[f.start - 1 : f.end], self.alphabet)

    def prefix(self, length: int) -> "SymbolWord":
        return SymbolWord._trusted(self._data[:length], self.alphabet)


class WordBuilder:
    """Single-owner streaming builder; :meth:`freeze` yields the immutable word."""

    def __init__(self, alphabet: Alphabet | int):
        self.alphabet = _as_alphabet(alphabet)
        self._buf = bytearray()

    def __len__(self) -> int:
        return len(self._buf)

    def append(self, symbol: int) -> None:
        if not 0 <= symbol < self.alphabet.size:
            raise InvalidSymbol(len(self._buf) + 1, symbol, self.alphabet.size)
        self._buf.append(symbol)

    def extend(self, symbols: Iterable[int]) -> None:
        for s in symbols:
            self.append(s)

    def freeze(self) -> SymbolWord:
        return SymbolWord._trusted(bytes(self._buf), self.alphabet)


def word_from_text(text: str, alphabet: Alphabet | int) -> SymbolWord:
    alphabet = _as_alphabet(alphabet)
    out = bytearray(len(text))
    for i, ch in enumerate(text):
        v = _DIGIT_VALUE.get(ch, MAX_BASE)
        if v >= alphabet.size:
            raise InvalidSymbol(i + 1, ch, alphabet.size)
        out[i] = v
    return SymbolWord._trusted(bytes(out), alphabet)


def word_to_text(word: SymbolWord) -> str:
    return word.symbols.translate(_TO_TEXT).decode("ascii")


_TO_TEXT = bytes.maketrans(bytes(range(MAX_BASE)), DIGITS.encode("ascii"))


def _check_inside(w: SymbolWord, f: Factor) -> None:
    if f.end > len(w):
        raise OutOfBounds(f"factor {f.start}..{f.end} exceeds word of length {len(w)}")


def factor_equal(w: SymbolWord, f1: Factor, f2: Factor) -> bool:
    _check_inside(w, f1)
    _check_inside(w, f2)
    if f1.length != f2.length:
        raise WordError("factors must have equal length")
    data = w.symbols
    return data[f1.start - 1 : f1.end] == data[f2.start - 1 : f2.end]


def wrap_digits(text: str, width: int = LINE_WIDTH) -> list[str]:
    return [text[i : i + width] for i in range(0, len(text), width)]


def atomic_write_text(path: str | os.PathLike, content: str) -> None:
    """Write via a temp file in the same directory, then rename over ``path``."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="ascii", newline="\n") as fh:
            fh.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def dumps_word(word: SymbolWord) -> str:
    lines = [f"WORD v1 base={word.base} length={len(word)}"]
    lines += wrap_digits(word_to_text(word))
    return "\n".join(lines) + "\n"


def loads_word(content: str) -> SymbolWord:
    lines = content.splitlines()
    if not lines:
        raise WordError("empty word file")
    head = lines[0].split()
    if len(head) != 4 or head[:2] != ["WORD", "v1"]:
        raise WordError(f"bad word header: {lines[0]!r}")
    fields = dict(item.split("=", 1) for item in head[2:])
    base, length = int(fields["base"]), int(fields["length"])
    body = "".join(lines[1:])
    if len(body) != length:
        raise WordError(f"header says length={length}, body has {len(body)} symbols")
    return word_from_text(body, base)


def write_word(path: str | os.PathLike, word: SymbolWord) -> None:
    atomic_write_text(path, dumps_word(word))


def read_word(path: str | os.PathLike) -> SymbolWord:
    return loads_word(Path(path).read_text(encoding="ascii"))
