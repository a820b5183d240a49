"""Flat-file formats and bundled data.

Matrix files: first line ``<rows> <cols> <field>`` with field F2 or Z, then
rows*cols whitespace-separated entries in row-major order (line breaks are
not significant beyond the header).  Codes are stored as their generator
matrix: n rows, k columns.

Tower manifests: first line ``tower <n> <count>``, then one matrix file
path per line, relative to the manifest's directory, ordered from the
largest code down (C_1 .. C_a, or K_0 .. K_a for Construction-D input).
"""

from __future__ import annotations

import os
from functools import lru_cache
from importlib import resources

from .errors import ParseError
from .gf2core import BinaryMatrix, BinaryVector, Code, CodeTower

__all__ = [
    "read_matrix",
    "parse_matrix",
    "write_f2_matrix",
    "write_z_matrix",
    "format_f2_matrix",
    "format_z_matrix",
    "read_tower_manifest",
    "load_code_tower",
    "load_matrix_tower",
    "data_path",
    "golay_code",
    "cor23_matrices",
    "cor25_matrices",
    "nonclosed_tower",
]


def parse_matrix(text: str, source: str = "<string>"):
    """Parse matrix text; returns BinaryMatrix for F2, list of columns for Z.

    Z matrices come back as ``(rows, cols, columns)`` with ``columns`` a
    list of integer tuples (column-major, matching lattice generators).
    """
    tokens = text.split()
    if len(tokens) < 3:
        raise ParseError(f"{source}: missing header")
    try:
        rows = int(tokens[0])
        cols = int(tokens[1])
    except ValueError:
        raise ParseError(f"{source}: header must start with two integers") from None
    field = tokens[2]
    if field not in ("F2", "Z"):
        raise ParseError(f"{source}: field must be F2 or Z, got {field!r}")
    if rows < 0 or cols < 0:
        raise ParseError(f"{source}: negative dimensions")
    body = tokens[3:]
    if len(body) != rows * cols:
        raise ParseError(
            f"{source}: expected {rows * cols} entries, found {len(body)}"
        )
    try:
        entries = [int(t) for t in body]
    except ValueError:
        raise ParseError(f"{source}: non-integer entry") from None
    if field == "F2":
        if any(e not in (0, 1) for e in entries):
            raise ParseError(f"{source}: F2 entries must be 0 or 1")
        matrix_rows = [entries[i * cols : (i + 1) * cols] for i in range(rows)]
        if rows == 0 or cols == 0:
            return BinaryMatrix(rows, (0,) * cols)
        return BinaryMatrix.from_rows(matrix_rows)
    columns = [
        tuple(entries[r * cols + c] for r in range(rows)) for c in range(cols)
    ]
    return rows, cols, columns


def read_matrix(path: str):
    try:
        with open(path, "r", encoding="ascii") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from None
    return parse_matrix(text, source=path)


def format_f2_matrix(M: BinaryMatrix) -> str:
    lines = [f"{M.n} {M.k} F2"]
    for row in M.to_rows():
        lines.append(" ".join(str(e) for e in row))
    return "\n".join(lines) + "\n"


def format_z_matrix(rows: int, columns) -> str:
    cols = len(columns)
    lines = [f"{rows} {cols} Z"]
    for r in range(rows):
        lines.append(" ".join(str(col[r]) for col in columns))
    return "\n".join(lines) + "\n"


def write_f2_matrix(path: str, M: BinaryMatrix) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_f2_matrix(M))


def write_z_matrix(path: str, rows: int, columns) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_z_matrix(rows, columns))


def read_tower_manifest(path: str) -> tuple[int, list[str]]:
    """Returns (block_length, matrix file paths resolved against the manifest)."""
    try:
        with open(path, "r", encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh.readlines()]
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from None
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError(f"{path}: empty manifest")
    head = lines[0].split()
    if len(head) != 3 or head[0] != "tower":
        raise ParseError(f"{path}: manifest header must be 'tower <n> <count>'")
    try:
        n = int(head[1])
        count = int(head[2])
    except ValueError:
        raise ParseError(f"{path}: bad manifest header numbers") from None
    files = lines[1:]
    if len(files) != count:
        raise ParseError(f"{path}: expected {count} level files, found {len(files)}")
    base = os.path.dirname(os.path.abspath(path))
    return n, [os.path.join(base, f) for f in files]


def _load_f2_levels(path: str) -> tuple[int, list[BinaryMatrix]]:
    n, files = read_tower_manifest(path)
    mats = []
    for f in files:
        M = read_matrix(f)
        if not isinstance(M, BinaryMatrix):
            raise ParseError(f"{f}: tower levels must be F2 matrices")
        if M.n != n:
            raise ParseError(f"{f}: {M.n} rows, manifest says {n}")
        mats.append(M)
    return n, mats


def load_code_tower(path: str) -> CodeTower:
    """Manifest of code generators C_1 .. C_a -> validated CodeTower."""
    _, mats = _load_f2_levels(path)
    return CodeTower([Code(M) for M in mats])


def load_matrix_tower(path: str) -> tuple[int, list[BinaryMatrix]]:
    """Manifest of generator blocks (K_0 .. K_a) for Construction-D input."""
    return _load_f2_levels(path)


# ---------------------------------------------------------------------------
# bundled data
# ---------------------------------------------------------------------------

def data_path(name: str) -> str:
    """Filesystem path of a bundled data file."""
    return str(resources.files("codelattice").joinpath("data", name))


def _read_bundled(name: str):
    text = resources.files("codelattice").joinpath("data", name).read_text()
    return parse_matrix(text, source=name)


@lru_cache(maxsize=None)
def golay_code() -> Code:
    """The extended [24,12,8] binary Golay code, revalidated on first load."""
    from .gf2core import code_kissing_number, min_distance

    G = _read_bundled("golay24.txt")
    C = Code(G)
    if C.dimension != 12 or min_distance(C) != 8 or code_kissing_number(C) != 759:
        raise ParseError("bundled Golay generator failed its invariants")
    return C


@lru_cache(maxsize=None)
def cor23_matrices() -> tuple[BinaryMatrix, BinaryMatrix, BinaryVector]:
    """Bundled 16x3 / 3x3 gadget matrices and the all-ones kernel vector."""
    A = _read_bundled("cor23_A.txt")
    B = _read_bundled("cor23_B.txt")
    w = _read_bundled("cor23_w.txt")
    return A, B, w.column(0)


@lru_cache(maxsize=None)
def cor25_matrices() -> tuple[BinaryMatrix, BinaryMatrix, tuple[int, ...]]:
    """Bundled 2x4 / 4x4 gadget matrices and the integer sign vector."""
    A = _read_bundled("cor25_A.txt")
    B = _read_bundled("cor25_B.txt")
    _, _, zcols = _read_bundled("cor25_z.txt")
    return A, B, zcols[0]


@lru_cache(maxsize=None)
def nonclosed_tower() -> CodeTower:
    """Bundled two-level tower that is not Schur-closed."""
    c1 = _read_bundled("tower_nonclosed_c1.txt")
    c2 = _read_bundled("tower_nonclosed_c2.txt")
    return CodeTower([Code(c1), Code(c2)])
