"""Sparse exact linear algebra over Gaussian rationals.

Matrices are maps between explicitly enumerated finite bases, stored as
``{(row, col): Scalar}`` with no zero entries.  Rank, kernel bases and
linear solving all run through one fraction-free (Bareiss-style) forward
elimination with exact division; since the scalars form a field, every
division is exact, and the cross-multiplied update keeps intermediate
fractions close to minors of the input on integer-seeded data.

Pivoting is deterministic: columns are scanned left to right and the first
not-yet-used row with a nonzero entry wins.  Kernel vectors are the unique
solutions with one free coordinate set to 1 and the other free coordinates
set to 0, so the output is reproducible across runs and across the
block-diagonal fast path below.

``row_keys``/``col_keys`` enable that fast path: when every nonzero entry
of the matrix couples a row and a column with equal keys (true for all the
operator matrices in this package thanks to the torus weight grading), the
computation splits into independent small blocks.  The result is exactly
the one the unblocked scan would produce.
"""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import ONE, Scalar, scalar_from_json, scalar_to_json


@dataclass(frozen=True)
class WindowLabel:
    """Basis descriptor: space kind, form degree r (None for plain spinor
    windows) and polynomial degree bound."""

    kind: str
    l: int
    r: "int | None"
    degree: int


class OperatorMatrix:
    """Exact sparse matrix between two enumerated bases."""

    __slots__ = ("rows", "cols", "entries", "domain_label", "codomain_label")

    def __init__(self, rows, cols, entries, domain_label=None, codomain_label=None):
        self.rows = rows
        self.cols = cols
        # drop explicit zeros so equality of maps is equality of dicts
        self.entries = {rc: v for rc, v in entries.items() if v}
        self.domain_label = domain_label
        self.codomain_label = codomain_label
        for (r, c) in self.entries:
            if not (0 <= r < rows and 0 <= c < cols):
                raise ValueError(f"entry index {(r, c)} outside {rows}x{cols}")

    @classmethod
    def identity(cls, n):
        return cls(n, n, {(k, k): ONE for k in range(n)})

    @classmethod
    def zero(cls, rows, cols):
        return cls(rows, cols, {})

    def is_zero(self):
        return not self.entries

    def apply(self, vec: dict) -> dict:
        """Matrix-vector product on a sparse {col: Scalar} vector."""
        out: dict = {}
        by_col: dict = {}
        for (r, c), v in self.entries.items():
            by_col.setdefault(c, []).append((r, v))
        for c, x in vec.items():
            if not x:
                continue
            for r, v in by_col.get(c, ()):
                acc = out.get(r)
                out[r] = v * x if acc is None else acc + v * x
        return {r: v for r, v in out.items() if v}

    def column(self, c) -> dict:
        return {r: v for (r, cc), v in self.entries.items() if cc == c}

    def __eq__(self, other):
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"OperatorMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


def _row_major(m: OperatorMatrix):
    rows = [dict() for _ in range(m.rows)]
    for (r, c), v in m.entries.items():
        rows[r][c] = v
    return rows


def _eliminate(rows, ncols, rhs=None):
    """Forward elimination in place.

    Returns (pivots, free_cols) where pivots is a list of (row, col) in
    ascending column order.  ``rhs`` (a dense list) is carried through the
    same row operations when given.  Rows never chosen as pivots end up as
    zero rows (their residual rhs decides consistency).
    """
    nrows = len(rows)
    used = [False] * nrows
    prev = [ONE] * nrows  # last pivot folded into each row (Bareiss bookkeeping)
    pivots = []
    free_cols = []
    for col in range(ncols):
        prow = None
        for r in range(nrows):
            if not used[r] and rows[r].get(col):
                prow = r
                break
        if prow is None:
            free_cols.append(col)
            continue
        used[prow] = True
        pivots.append((prow, col))
        piv = rows[prow][col]
        prow_items = list(rows[prow].items())
        for r in range(nrows):
            if used[r]:
                continue
            fac = rows[r].get(col)
            if not fac:
                continue
            d = prev[r]
            new = {}
            for c, v in rows[r].items():
                if c == col:
                    continue
                new[c] = piv * v / d
            for c, v in prow_items:
                if c == col:
                    continue
                w = new.get(c, None)
                t = fac * v / d
                if w is None:
                    if t:
                        new[c] = -t
                else:
                    w = w - t
                    if w:
                        new[c] = w
                    else:
                        del new[c]
            rows[r] = new
            if rhs is not None:
                rhs[r] = (piv * rhs[r] - fac * rhs[prow]) / d
            prev[r] = piv
    return pivots, free_cols


def rank(m: OperatorMatrix) -> int:
    rows = _row_major(m)
    pivots, _ = _eliminate(rows, m.cols)
    return len(pivots)


def kernel_basis(m: OperatorMatrix, row_keys=None, col_keys=None):
    """Exact basis of ker(m) as sparse {col: Scalar} vectors.

    Each basis vector has value 1 at "its" free column and 0 at every other
    free column; the list is ordered by that free column.  This makes the
    basis unique, independent of elimination details, so the blocked path
    returns bit-identical output.
    """
    if row_keys is not None or col_keys is not None:
        return _blocked(m, row_keys, col_keys, _kernel_block, _merge_kernel)
    return [v for _, v in _kernel_block(m)]


def _kernel_block(m: OperatorMatrix):
    """Kernel basis as (free_col, vector) pairs, ordered by free column."""
    rows = _row_major(m)
    pivots, free_cols = _eliminate(rows, m.cols)
    basis = []
    for f in free_cols:
        v = {f: ONE}
        for prow, pcol in reversed(pivots):
            acc = None
            for c, coef in rows[prow].items():
                if c == pcol:
                    continue
                x = v.get(c)
                if x is None:
                    continue
                t = coef * x
                acc = t if acc is None else acc + t
            if acc is not None and acc:
                v[pcol] = -acc / rows[prow][pcol]
        basis.append((f, v))
    return basis


def solve(m: OperatorMatrix, b, row_keys=None, col_keys=None):
    """A particular x with m@x = b, or None when inconsistent.

    ``b`` is a sparse {row: Scalar} dict (missing = zero).  Free variables
    are fixed to zero, which makes the returned solution deterministic.
    """
    for r in b:
        if not (0 <= r < m.rows):
            raise ValueError(f"rhs index {r} outside {m.rows} rows")
    if row_keys is not None or col_keys is not None:
        return _blocked_solve(m, b, row_keys, col_keys)
    return _solve_block(m, b)


def _solve_block(m: OperatorMatrix, b):
    rows = _row_major(m)
    rhs = [b.get(r, Scalar(0)) for r in range(m.rows)]
    pivots, _ = _eliminate(rows, m.cols, rhs)
    pivot_rows = {pr for pr, _ in pivots}
    for r in range(m.rows):
        if r not in pivot_rows and rhs[r]:
            return None
    x: dict = {}
    for prow, pcol in reversed(pivots):
        acc = rhs[prow]
        for c, coef in rows[prow].items():
            if c == pcol:
                continue
            xv = x.get(c)
            if xv is not None:
                acc = acc - coef * xv
        if acc:
            x[pcol] = acc / rows[prow][pcol]
    return x


def _partition(m: OperatorMatrix, row_keys, col_keys):
    """Group rows/cols by key; every nonzero entry must stay inside a block."""
    if len(row_keys) != m.rows or len(col_keys) != m.cols:
        raise ValueError("key lists must match matrix shape")
    col_groups: dict = {}
    for c, k in enumerate(col_keys):
        col_groups.setdefault(k, []).append(c)
    row_groups: dict = {}
    for r, k in enumerate(row_keys):
        row_groups.setdefault(k, []).append(r)
    for (r, c) in m.entries:
        if row_keys[r] != col_keys[c]:
            raise ValueError("matrix entry couples different blocks")
    return row_groups, col_groups


def _submatrix(m, rows_sel, cols_sel):
    rpos = {r: i for i, r in enumerate(rows_sel)}
    cpos = {c: i for i, c in enumerate(cols_sel)}
    sub = {}
    for (r, c), v in m.entries.items():
        if r in rpos and c in cpos:
            sub[(rpos[r], cpos[c])] = v
    return OperatorMatrix(len(rows_sel), len(cols_sel), sub)


def _blocked(m, row_keys, col_keys, per_block, merge):
    row_groups, col_groups = _partition(m, row_keys, col_keys)
    pieces = []
    for key, cols_sel in col_groups.items():
        rows_sel = row_groups.get(key, [])
        sub = _submatrix(m, rows_sel, cols_sel)
        pieces.append((cols_sel, per_block(sub)))
    return merge(pieces)


def _merge_kernel(pieces):
    tagged = []
    for cols_sel, vecs in pieces:
        for f, v in vecs:
            glob = {cols_sel[c]: x for c, x in v.items()}
            tagged.append((cols_sel[f], glob))
    tagged.sort(key=lambda t: t[0])
    return [g for _, g in tagged]


def _blocked_solve(m, b, row_keys, col_keys):
    row_groups, col_groups = _partition(m, row_keys, col_keys)
    x: dict = {}
    covered_rows = set()
    for key, cols_sel in col_groups.items():
        rows_sel = row_groups.get(key, [])
        covered_rows.update(rows_sel)
        sub_b = {}
        for i, r in enumerate(rows_sel):
            if b.get(r):
                sub_b[i] = b[r]
        if not sub_b and not cols_sel:
            continue
        sub = _submatrix(m, rows_sel, cols_sel)
        sx = _solve_block(sub, sub_b)
        if sx is None:
            return None
        for c, v in sx.items():
            x[cols_sel[c]] = v
    for r, v in b.items():
        if v and r not in covered_rows:
            return None
    return x


def matrix_to_json(m: OperatorMatrix) -> dict:
    entries = [
        [r, c, scalar_to_json(v)] for (r, c), v in sorted(m.entries.items())
    ]
    return {"rows": m.rows, "cols": m.cols, "entries": entries}


def matrix_from_json(obj: dict) -> OperatorMatrix:
    entries = {(r, c): scalar_from_json(s) for r, c, s in obj["entries"]}
    return OperatorMatrix(obj["rows"], obj["cols"], entries)


def vector_to_json(vec: dict, length: int) -> list:
    return [scalar_to_json(vec.get(k, Scalar(0))) for k in range(length)]


def vector_from_json(arr: list) -> dict:
    out = {}
    for k, s in enumerate(arr):
        z = scalar_from_json(s)
        if z:
            out[k] = z
    return out
