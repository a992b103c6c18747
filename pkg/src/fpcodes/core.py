"""Core data model: q-ary code matrices, basic transforms, and text I/O.

A code with n codewords of length t over the alphabet {0, ..., q-1} is
stored as a t x n matrix whose columns are the codewords.  Symbol 0 plays
a special role throughout (it marks "silent" slots in the conflict
resolution reading), so transforms that touch the alphabet are explicit
about how they treat it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class ParameterError(ValueError):
    """Raised when arguments violate a documented precondition."""


class CapacityError(RuntimeError):
    """Raised when a requested computation exceeds the safety budget."""


class ConstructionError(RuntimeError):
    """Raised when a randomized construction gives up.

    Carries an optional `log` attribute with the partial progress record.
    """

    def __init__(self, message: str, log=None):
        super().__init__(message)
        self.log = log


class CodeFormatError(ValueError):
    """Raised on malformed serialized codes.  `line` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True, eq=False)
class CodeMatrix:
    """Immutable t x n matrix over {0, ..., q-1}, one codeword per column."""

    q: int
    entries: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.q < 2:
            raise ParameterError(f"alphabet size q={self.q} must be at least 2")
        arr = np.asarray(self.entries)
        if arr.ndim != 2:
            raise ParameterError(f"entries must be 2-dimensional, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= self.q):
            raise ParameterError(f"entries must lie in [0, {self.q - 1}]")
        if self.q > np.iinfo(np.uint16).max + 1:
            raise ParameterError("alphabet size exceeds uint16 storage")
        arr = np.ascontiguousarray(arr, dtype=np.uint16)
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @property
    def t(self) -> int:
        """Code length (number of rows)."""
        return self.entries.shape[0]

    @property
    def n(self) -> int:
        """Number of codewords (columns)."""
        return self.entries.shape[1]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CodeMatrix):
            return NotImplemented
        return self.q == other.q and self.entries.shape == other.entries.shape \
            and bool(np.array_equal(self.entries, other.entries))

    def __repr__(self) -> str:
        return f"CodeMatrix(q={self.q}, t={self.t}, n={self.n})"


@dataclass(frozen=True)
class ColumnWeightProfile:
    """Per-column nonzero counts of a code matrix."""

    weights: tuple[int, ...]

    @property
    def is_constant(self) -> bool:
        return len(set(self.weights)) <= 1

    @property
    def max_weight(self) -> int:
        return max(self.weights) if self.weights else 0


def column_weight(matrix: CodeMatrix, j: int) -> int:
    """Number of nonzero entries in column j.  No negative indexing."""
    if not 0 <= j < matrix.n:
        raise IndexError(f"column index {j} out of range [0, {matrix.n})")
    return int(np.count_nonzero(matrix.entries[:, j]))


def weight_profile(matrix: CodeMatrix) -> ColumnWeightProfile:
    counts = np.count_nonzero(matrix.entries, axis=0)
    return ColumnWeightProfile(tuple(int(c) for c in counts))


def complement(matrix: CodeMatrix) -> CodeMatrix:
    """Map every symbol s to q-1-s."""
    flipped = (matrix.q - 1) - matrix.entries.astype(np.int64)
    return CodeMatrix(matrix.q, flipped)


def stack_rows(top: CodeMatrix, bottom: CodeMatrix) -> CodeMatrix:
    """Vertically concatenate two codes on the same alphabet and n."""
    if top.q != bottom.q:
        raise ParameterError(f"alphabet mismatch: q={top.q} vs q={bottom.q}")
    if top.n != bottom.n:
        raise ParameterError(f"codeword count mismatch: n={top.n} vs n={bottom.n}")
    return CodeMatrix(top.q, np.vstack([top.entries, bottom.entries]))


def binary_expand(matrix: CodeMatrix) -> CodeMatrix:
    """Expand a q-ary code into a binary one of length q*t.

    Each symbol s in {0, ..., q-1} becomes the unit column vector with a 1
    in position s, so every expanded codeword has exactly t nonzero rows
    and row block i of size q encodes row i of the original.
    """
    t, n, q = matrix.t, matrix.n, matrix.q
    out = np.zeros((q * t, n), dtype=np.uint16)
    rows = np.arange(t, dtype=np.int64)[:, None] * q + matrix.entries.astype(np.int64)
    out[rows, np.arange(n)[None, :]] = 1
    return CodeMatrix(2, out)


def write_code(matrix: CodeMatrix) -> bytes:
    """Serialize to the plain text format.

    First line is "q t n"; each of the t following lines holds n
    space-separated symbols; the file ends with a single newline.  The
    output is byte-exact: re-serializing a parsed code reproduces it.
    """
    lines = [f"{matrix.q} {matrix.t} {matrix.n}"]
    for row in matrix.entries:
        lines.append(" ".join(str(int(s)) for s in row))
    return ("\n".join(lines) + "\n").encode("ascii")


def _parse_canonical_int(token: str, what: str, line: int) -> int:
    # canonical base-10: digits only, no sign, no leading zeros (except "0")
    if not token or not token.isascii() or not token.isdigit():
        raise CodeFormatError(f"{what} {token!r} is not a nonnegative integer", line)
    if token != str(int(token)):
        raise CodeFormatError(f"{what} {token!r} has leading zeros", line)
    return int(token)


def read_code(data: bytes) -> CodeMatrix:
    """Parse the text format produced by `write_code`, strictly.

    Any deviation (missing trailing newline, blank lines, extra spaces,
    wrong token counts, non-canonical integers, out-of-range symbols)
    raises CodeFormatError with the offending 1-based line number.
    """
    try:
        text = data.decode("ascii")
    except UnicodeDecodeError as exc:
        raise CodeFormatError(f"not ASCII text: {exc.reason}", 1) from None
    if "\r" in text:
        raise CodeFormatError("carriage returns are not allowed", text[: text.index("\r")].count("\n") + 1)
    if not text.endswith("\n"):
        raise CodeFormatError("missing trailing newline", max(1, text.count("\n") + 1))
    lines = text.split("\n")[:-1]
    if not lines:
        raise CodeFormatError("empty input", 1)

    header = lines[0].split(" ")
    if len(header) != 3 or any(tok == "" for tok in header):
        raise CodeFormatError(f"header must be 'q t n', got {lines[0]!r}", 1)
    q = _parse_canonical_int(header[0], "alphabet size", 1)
    t = _parse_canonical_int(header[1], "length", 1)
    n = _parse_canonical_int(header[2], "codeword count", 1)
    if q < 2:
        raise CodeFormatError(f"alphabet size {q} must be at least 2", 1)

    if len(lines) - 1 < t:
        raise CodeFormatError(f"expected {t} symbol rows, found {len(lines) - 1}", len(lines) + 1)
    entries = np.zeros((t, n), dtype=np.uint16)
    for i, raw in enumerate(lines[1 : t + 1], start=2):
        tokens = raw.split(" ")
        if len(tokens) != n or any(tok == "" for tok in tokens):
            raise CodeFormatError(f"expected {n} symbols, got {raw!r}", i)
        for j, tok in enumerate(tokens):
            s = _parse_canonical_int(tok, "symbol", i)
            if s >= q:
                raise CodeFormatError(f"symbol {s} out of range [0, {q - 1}]", i)
            entries[i - 2, j] = s
    if len(lines) - 1 > t:
        raise CodeFormatError(f"expected {t} symbol rows, found {len(lines) - 1}", t + 2)
    return CodeMatrix(q, entries)
