"""Text grid interchange format.

    GEBR n p r
    <n lines of n characters from 0, 1, ?>

Row u is line u + 1 and character j is entry (u, j).  A '?' marks an
erased column and must fill that whole column.  Output uses LF line
endings with no trailing whitespace.
"""

from .code import ArrayCodeword, GebrParams
from .ring import BitPoly


class ArrayFileError(ValueError):
    pass


def parse(text):
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise ArrayFileError("empty file")
    header = lines[0].split()
    if len(header) != 4 or header[0] != "GEBR":
        raise ArrayFileError(f"bad header {lines[0]!r}, expected 'GEBR n p r'")
    try:
        n, p, r = (int(v) for v in header[1:])
        params = GebrParams(n, p, r)
    except ValueError as exc:
        raise ArrayFileError(f"bad header {lines[0]!r}: {exc}") from None
    body = lines[1:]
    if len(body) != n:
        raise ArrayFileError(f"expected {n} rows, found {len(body)}")
    for u, row in enumerate(body):
        if len(row) != n or set(row) - set("01?"):
            raise ArrayFileError(f"row {u} must be {n} characters from '01?': {row!r}")
    erased = set()
    cols = []
    for j in range(n):
        column = [row[j] for row in body]
        if "?" in column:
            if set(column) != {"?"}:
                raise ArrayFileError(f"column {j} is only partly erased")
            erased.add(j)
            cols.append(BitPoly.zero(n))
        else:
            cols.append(BitPoly.from_coeffs(int(ch) for ch in column))
    return ArrayCodeword(params, cols, erased)


def render(a):
    params = a.params
    n = params.n
    out = [f"GEBR {n} {params.p} {params.r}"]
    for u in range(n):
        out.append("".join("?" if j in a.erased else str(a.columns[j][u]) for j in range(n)))
    return "\n".join(out) + "\n"


def read(path):
    with open(path, encoding="ascii", newline="") as fh:
        return parse(fh.read())


def write(path, a):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(render(a))
