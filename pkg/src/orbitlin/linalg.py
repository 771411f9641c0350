"""Sparse exact linear algebra.

Vectors are dicts from sortable coordinate keys to nonzero field elements.
``Echelon`` keeps a reduced row echelon basis, so two equal subspaces always
have identical bases.
"""
from __future__ import annotations


def vec_add(field, u: dict, v: dict, scale=None) -> dict:
    """Return u + scale*v as a fresh dict without zero entries."""
    out = dict(u)
    for k, c in v.items():
        if scale is not None:
            c = field.mul(scale, c)
        s = field.add(out.get(k, field.zero), c)
        if s == field.zero:
            out.pop(k, None)
        else:
            out[k] = s
    return out


def vec_scale(field, c, v: dict) -> dict:
    if c == field.zero:
        return {}
    return {k: field.mul(c, x) for k, x in v.items()}


class Echelon:
    """Incrementally maintained reduced row echelon basis of a subspace.

    With ``track=True`` every row remembers which combination of the inserted
    vectors produced it, so membership answers can be turned into explicit
    linear combinations.
    """

    def __init__(self, field, track: bool = False):
        self.field = field
        self.track = track
        self.rows: dict = {}
        self.combos: dict = {}

    def copy(self) -> "Echelon":
        e = Echelon(self.field, self.track)
        e.rows = {p: dict(r) for p, r in self.rows.items()}
        e.combos = {p: dict(c) for p, c in self.combos.items()}
        return e

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict):
        """Return (remainder, combo) with vec - remainder = sum combo[label]*inserted[label]."""
        f = self.field
        rem = {k: c for k, c in vec.items() if c != f.zero}
        combo: dict = {}
        for p in [k for k in rem if k in self.rows]:
            c = rem.get(p)
            if c is None:
                continue
            rem = vec_add(f, rem, self.rows[p], f.neg(c))
            if self.track:
                combo = vec_add(f, combo, self.combos[p], c)
        return rem, combo

    def __contains__(self, vec: dict) -> bool:
        return not self.reduce(vec)[0]

    def add(self, vec: dict, label=None) -> bool:
        """Insert a vector; return True when the subspace grew."""
        f = self.field
        rem, combo = self.reduce(vec)
        if not rem:
            return False
        if self.track:
            combo = vec_add(f, {label: f.one}, combo, f.neg(f.one))
        p = min(rem)
        inv = f.inv(rem[p])
        rem = vec_scale(f, inv, rem)
        if self.track:
            combo = vec_scale(f, inv, combo)
        for q, row in self.rows.items():
            c = row.get(p)
            if c is not None:
                self.rows[q] = vec_add(f, row, rem, f.neg(c))
                if self.track:
                    self.combos[q] = vec_add(f, self.combos[q], combo, f.neg(c))
        self.rows[p] = rem
        if self.track:
            self.combos[p] = combo
        return True

    def basis(self) -> list:
        return [self.rows[p] for p in sorted(self.rows)]

    def __eq__(self, other):
        if not isinstance(other, Echelon):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows


def rank(field, rows) -> int:
    """Rank of a list of sparse or dense rows."""
    e = Echelon(field)
    for r in rows:
        if not isinstance(r, dict):
            r = {i: c for i, c in enumerate(r) if c != field.zero}
        e.add(r)
    return e.dim


def solve_combination(field, columns: list, target: dict):
    """Coefficients x with sum x[i]*columns[i] == target, or None."""
    e = Echelon(field, track=True)
    for i, col in enumerate(columns):
        e.add(col, label=i)
    rem, combo = e.reduce(target)
    if rem:
        return None
    return combo
