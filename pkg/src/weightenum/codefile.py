"""The generator-matrix text format shared by the CLI and the shipped examples.

    field gf 4 modulus=[1,1,1]
    3 6
    [1,0] [0,0] [0,0] [1,0] [1,0] [1,0]
    ...

Line 1 names the field (rationals | gf p | gf q modulus=[...]), line 2
gives k and n, then k rows of n whitespace-separated entries.  Prime-field
entries are integers (reduced mod p); rational entries are a/b or
integers; extension entries are coefficient vectors [c0,...,c_{m-1}] over
the prime field (bare integers are accepted and read as constants).
Blank lines and '#' comments are skipped.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .codes import Code
from .errors import DegreeMismatch, MixedFields, ParseError
from .fields import Field, make_field
from .matrices import Matrix

_ENTRY_RE = re.compile(r"\[[^\]]*\]|\S+")


def parse_code_text(text: str, allow_zero_columns: bool = False) -> Code:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped))
    if not lines:
        raise ParseError("empty code file")
    lineno, header = lines[0]
    if not header.startswith("field"):
        raise ParseError("expected a 'field ...' header", line=lineno)
    field = make_field(header[len("field"):].strip())
    if len(lines) < 2:
        raise ParseError("missing 'k n' dimension line", line=lineno)
    lineno, dims = lines[1]
    parts = dims.split()
    if len(parts) != 2 or not all(p.isdigit() for p in parts):
        raise ParseError("dimension line must be two integers 'k n'",
                         line=lineno)
    k, n = int(parts[0]), int(parts[1])
    if len(lines) != 2 + k:
        raise ParseError(f"expected {k} matrix rows, found {len(lines) - 2}",
                         line=lines[-1][0])
    rows = []
    for r in range(k):
        lineno, line = lines[2 + r]
        entries = _ENTRY_RE.findall(line)
        if len(entries) != n:
            raise ParseError(
                f"row has {len(entries)} entries, expected {n}", line=lineno)
        rows.append([_parse_entry(field, e, lineno, c + 1)
                     for c, e in enumerate(entries)])
    return Code(Matrix(field, rows, validate=False),
                allow_zero_columns=allow_zero_columns)


def _parse_entry(field: Field, token: str, lineno: int, column: int):
    try:
        if token.startswith("["):
            if field.kind != "extension":
                raise ParseError(
                    f"bracketed entry {token} in a {field.kind} field",
                    line=lineno, column=column)
            inner = token[1:-1].strip()
            coeffs = [int(c) for c in inner.split(",")] if inner else []
            return field.coerce(coeffs)
        if field.kind == "rationals":
            return field.coerce(Fraction(token))
        return field.coerce(int(token))
    except ParseError:
        raise
    except (ValueError, ZeroDivisionError, MixedFields, DegreeMismatch) as exc:
        raise ParseError(f"bad entry {token!r}: {exc}",
                         line=lineno, column=column) from exc


def format_code_text(code: Code) -> str:
    fmt = code.field.fmt
    lines = [f"field {code.field.spec_string()}", f"{code.k} {code.n}"]
    for row in code.generator.entries:
        lines.append(" ".join(fmt(e) for e in row))
    return "\n".join(lines) + "\n"
