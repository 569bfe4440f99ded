"""Text formats for bases, matrices, graphs and weight files.

Parse errors carry ``path:line`` so the CLI can point at the offending input.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .analysis import WeightFunction
from .builders import GFMatrix, RationalMatrix, from_matrix, graphic
from .errors import ExchangeAxiomViolation, MatroidError, ParseError
from .matroid import Matroid, elements_of, from_bases, to_mask


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _ints(line: str, path, lineno) -> list[int]:
    try:
        return [int(t) for t in line.split()]
    except ValueError:
        raise ParseError(f"expected integers, got {line!r}", path, lineno) from None


def parse_bases(text: str, path=None) -> Matroid:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty bases file", path)
    lineno, header = lines[0]
    head = _ints(header, path, lineno)
    if len(head) != 2:
        raise ParseError("header must be 'n r'", path, lineno)
    n, r = head
    where: dict[int, int] = {}
    bases = []
    for lineno, line in lines[1:]:
        elems = _ints(line, path, lineno)
        if len(elems) != r or len(set(elems)) != r:
            raise ParseError(f"basis must list {r} distinct elements", path, lineno)
        if any(not 0 <= e < n for e in elems):
            raise ParseError(f"element out of range 0..{n - 1}", path, lineno)
        mask = to_mask(elems)
        where.setdefault(mask, lineno)
        bases.append(mask)
    if not bases and r == 0:
        bases = [0]
    try:
        return from_bases(n, bases)
    except ExchangeAxiomViolation as err:
        line = where.get(to_mask(err.b1))
        prefix = f"{path}:{line}: " if path is not None else f"line {line}: "
        err.args = (prefix + str(err),)
        raise
    except MatroidError as err:
        raise ParseError(str(err), path) from None


def format_bases(M: Matroid) -> str:
    out = [f"{M.n} {M.r}"]
    out.extend(" ".join(map(str, elements_of(b))) for b in M.bases)
    return "\n".join(out) + "\n"


def _matrix_body(lines, rows: int, cols: int, path, parse):
    values = []
    for lineno, line in lines:
        for tok in line.split():
            try:
                values.append(parse(tok))
            except (ValueError, ZeroDivisionError):
                raise ParseError(f"bad matrix entry {tok!r}", path, lineno) from None
    if len(values) != rows * cols:
        raise ParseError(f"expected {rows * cols} entries, found {len(values)}", path)
    return [values[i * cols:(i + 1) * cols] for i in range(rows)]


def parse_gf_matrix(text: str, path=None) -> GFMatrix:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty matrix file", path)
    lineno, header = lines[0]
    head = _ints(header, path, lineno)
    if len(head) != 3:
        raise ParseError("header must be 'p rows cols'", path, lineno)
    p, rows, cols = head
    try:
        return GFMatrix(p, _matrix_body(lines[1:], rows, cols, path, int))
    except MatroidError as err:
        if isinstance(err, ParseError):
            raise
        raise ParseError(str(err), path, lineno) from None


def parse_rational_matrix(text: str, path=None) -> RationalMatrix:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty matrix file", path)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "Q":
        raise ParseError("header must be 'Q rows cols'", path, lineno)
    rows, cols = _ints(" ".join(parts[1:]), path, lineno)
    return RationalMatrix(_matrix_body(lines[1:], rows, cols, path, Fraction))


def format_rational_matrix(A: RationalMatrix) -> str:
    out = [f"Q {A.rows} {A.cols}"]
    out.extend(" ".join(str(v) for v in row) for row in A.entries)
    return "\n".join(out) + "\n"


def parse_graph(text: str, path=None) -> tuple[int, list[tuple[int, int]]]:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty graph file", path)
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 3 or parts[0] != "G":
        raise ParseError("header must be 'G num_vertices num_edges'", path, lineno)
    nv, ne = _ints(" ".join(parts[1:]), path, lineno)
    edges = []
    for lineno, line in lines[1:]:
        pair = _ints(line, path, lineno)
        if len(pair) != 2 or any(not 0 <= v < nv for v in pair):
            raise ParseError(f"edge must be 'u v' with vertices in 0..{nv - 1}", path, lineno)
        edges.append((pair[0], pair[1]))
    if len(edges) != ne:
        raise ParseError(f"header declares {ne} edges, found {len(edges)}", path)
    if not edges:
        raise ParseError("graph needs at least one edge", path)
    return nv, edges


def parse_weights(text: str, M: Matroid, path=None) -> WeightFunction:
    """Lines ``e1 e2 ... er : a/b``; every basis of M must appear exactly once."""
    weights = {}
    for lineno, line in _content_lines(text):
        if ":" not in line:
            raise ParseError("expected 'e1 ... er : weight'", path, lineno)
        left, right = line.split(":", 1)
        mask = to_mask(_ints(left, path, lineno))
        try:
            value = Fraction(right.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad weight {right.strip()!r}", path, lineno) from None
        if mask in weights:
            raise ParseError(f"basis {elements_of(mask)} listed twice", path, lineno)
        weights[mask] = value
    return WeightFunction(weights)


def format_weights(w: WeightFunction, M: Matroid) -> str:
    return "".join(
        f"{' '.join(map(str, elements_of(b)))} : {w.weights[b]}\n" for b in M.bases
    )


def load_matroid(descriptor: str) -> Matroid:
    """Resolve an input descriptor such as ``catalog:F7`` or ``bases:path.txt``."""
    from .builders import affine_geometry, projective_geometry, uniform
    from .catalog import catalog

    kind, sep, arg = descriptor.partition(":")
    if not sep:
        raise ParseError(f"descriptor {descriptor!r} must look like kind:argument")

    def pair(text):
        try:
            a, b = (int(x) for x in text.split(","))
        except ValueError:
            raise ParseError(f"expected 'a,b' in descriptor {descriptor!r}") from None
        return a, b

    if kind == "catalog":
        return catalog(arg)
    if kind == "uniform":
        return uniform(*pair(arg))
    if kind == "pg":
        return projective_geometry(*pair(arg))
    if kind == "ag":
        return affine_geometry(*pair(arg))
    if kind in ("graph", "gfmatrix", "qmatrix", "bases"):
        try:
            text = Path(arg).read_text()
        except OSError as err:
            raise ParseError(f"cannot read: {err.strerror}", arg) from None
        if kind == "graph":
            nv, edges = parse_graph(text, arg)
            return graphic(edges, nv)
        if kind == "gfmatrix":
            return from_matrix(parse_gf_matrix(text, arg))
        if kind == "qmatrix":
            return from_matrix(parse_rational_matrix(text, arg))
        return parse_bases(text, arg)
    raise ParseError(f"unknown descriptor kind {kind!r}")
