"""Finite magmas given by Cayley tables, and exhaustive axiom checks.

Covers reflection quasigroups (left keyesian, left distributive
quasigroups), point-reflection structures, B-loops, and the isotopy
between reflection quasigroups and B-loops:

    x . y = x^(1/2) * (e * y),    x * y = x^2 . y^-1.

Tables are numpy integer arrays; every law is checked over all tuples by
fancy indexing, so n is capped at :data:`MAX_EXHAUSTIVE_N`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from ..errors import DomainError, StructureError

MAX_EXHAUSTIVE_N = 15


class FiniteMagma:
    """Binary operation on {0, ..., n-1}; ``table[x, y]`` is x times y."""

    __slots__ = ("table", "e")

    def __init__(self, table, e: int | None = None):
        t = np.array(table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] < 1:
            raise StructureError(f"Cayley table must be square and non-empty, got shape {t.shape}")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise StructureError("table entries out of range")
        if e is not None and not 0 <= e < n:
            raise StructureError(f"identity element {e} out of range")
        t.setflags(write=False)
        self.table = t
        self.e = e

    @property
    def n(self) -> int:
        return self.table.shape[0]

    def __call__(self, x, y):
        return self.table[x, y]

    def __eq__(self, other):
        return isinstance(other, FiniteMagma) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def __repr__(self):
        return f"FiniteMagma(n={self.n}, e={self.e})"


# -- text format ---------------------------------------------------------------

def format_table(m: FiniteMagma) -> str:
    width = len(str(m.n - 1))
    rows = [" ".join(f"{v:>{width}d}" for v in row) for row in m.table]
    return "\n".join([f"n= {m.n}", *rows]) + "\n"


def parse_table(text: str, e: int | None = None) -> FiniteMagma:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise StructureError("first line must read 'n= k'")
    try:
        n = int(lines[0][2:])
        rows = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise StructureError(f"malformed table: {exc}") from None
    if n < 1 or len(rows) != n or any(len(r) != n for r in rows):
        raise StructureError(f"expected {n} rows of {n} integers")
    return FiniteMagma(rows, e)


# -- constructions -------------------------------------------------------------

def zn_reflection(n: int) -> FiniteMagma:
    """x * y = 2x - y (mod n) on Z_n, n odd."""
    if n < 3 or n % 2 == 0:
        raise DomainError("zn_reflection needs an odd n >= 3 (2 must be invertible mod n)")
    x = np.arange(n)
    return FiniteMagma((2 * x[:, None] - x[None, :]) % n, e=0)


def zn_addition(n: int) -> FiniteMagma:
    x = np.arange(n)
    return FiniteMagma((x[:, None] + x[None, :]) % n, e=0)


# -- reports -------------------------------------------------------------------

@dataclass
class AxiomResult:
    holds: bool
    counterexample: tuple | None = None


@dataclass
class AxiomReport:
    results: dict[str, AxiomResult] = field(default_factory=dict)

    def __getitem__(self, name: str) -> AxiomResult:
        return self.results[name]

    def holds(self, *names: str) -> bool:
        names = names or tuple(self.results)
        return all(self.results[k].holds for k in names)

    def failed(self) -> list[str]:
        return [k for k, r in self.results.items() if not r.holds]

    def lines(self) -> list[str]:
        out = []
        for k, r in self.results.items():
            tail = "" if r.holds else f"  counterexample {r.counterexample}"
            out.append(f"{k:<24s} {'PASS' if r.holds else 'FAIL'}{tail}")
        return out


def _first(mask: np.ndarray) -> tuple | None:
    bad = np.argwhere(mask)
    return tuple(int(v) for v in bad[0]) if len(bad) else None


def _result(mask: np.ndarray) -> AxiomResult:
    ce = _first(mask)
    return AxiomResult(ce is None, ce)


def _check_size(m: FiniteMagma):
    if m.n > MAX_EXHAUSTIVE_N:
        raise DomainError(f"exhaustive checks are capped at n <= {MAX_EXHAUSTIVE_N}")


def _grids(n: int):
    a = np.arange(n)
    return a[:, None, None], a[None, :, None], a[None, None, :]


def _is_perm_rows(t: np.ndarray) -> np.ndarray:
    """Boolean per row: is the row a permutation?"""
    n = t.shape[0]
    return np.array([len(np.unique(r)) == n for r in t])


def _perm_counterexample(t: np.ndarray) -> tuple | None:
    """(row, value) pair of the first row hit twice, or None."""
    for i, r in enumerate(t):
        vals, counts = np.unique(r, return_counts=True)
        if np.any(counts > 1):
            return (i, int(vals[counts > 1][0]))
    return None


def check_reflection_axioms(m: FiniteMagma) -> AxiomReport:
    """Exhaustive check of the reflection-quasigroup axioms and idempotence."""
    _check_size(m)
    T, n = m.table, m.n
    x, y, z = _grids(n)
    x2, y2 = np.arange(n)[:, None], np.arange(n)[None, :]
    rep = AxiomReport()
    rep.results["left_keyes"] = _result(T[x2, T[x2, y2]] != y2)
    rep.results["left_distributive"] = _result(T[x, T[y, z]] != T[T[x, y], T[x, z]])
    ce = _perm_counterexample(T)
    rep.results["left_quasigroup"] = AxiomResult(ce is None, ce)
    ce = _perm_counterexample(T.T)
    rep.results["right_quasigroup"] = AxiomResult(ce is None, None if ce is None else (ce[1], ce[0]))
    diag = np.arange(n)
    rep.results["idempotent"] = _result(T[diag, diag] != diag)
    return rep


def is_reflection_quasigroup(m: FiniteMagma) -> bool:
    return check_reflection_axioms(m).holds("left_keyes", "left_distributive",
                                            "left_quasigroup", "right_quasigroup")


def check_point_reflection_axioms(m: FiniteMagma) -> AxiomReport:
    """Point-reflection axioms for the maps x~ = (y -> x * y).

    (i)   x~ o x~ = id
    (ii)  x~(y) = y implies y = x
    (iii) for all a, b there is exactly one x with x~(a) = b
    (iv)  for all a, b some c has a~ o b~ o a~ = c~

    ``iv_witness`` records whether c = a * b always serves in (iv).
    """
    _check_size(m)
    T, n = m.table, m.n
    a2, b2 = np.arange(n)[:, None], np.arange(n)[None, :]
    rep = AxiomReport()
    rep.results["symmetries_bijective"] = AxiomResult(bool(_is_perm_rows(T).all()), _perm_counterexample(T))
    rep.results["involutive"] = _result(T[a2, T[a2, b2]] != b2)
    rep.results["unique_fixed_point"] = _result((T[a2, b2] == b2) & (a2 != b2))
    counts = np.zeros((n, n), dtype=np.int64)  # counts[a, b] = #{x : x~(a) = b}
    for xx in range(n):
        counts[np.arange(n), T[xx]] += 1
    rep.results["unique_midpoint"] = _result(counts != 1)
    # conj[a, b] is the table row of a~ o b~ o a~
    conj = T[a2[..., None], T[b2[..., None], T[a2[..., None], np.arange(n)[None, None, :]]]]
    rows = {tuple(r): i for i, r in enumerate(T.tolist())}
    closed = np.array([[tuple(conj[i, j]) in rows for j in range(n)] for i in range(n)])
    rep.results["conjugation_closed"] = _result(~closed)
    witness = np.all(conj == T[T[a2, b2]], axis=-1)
    rep.results["iv_witness"] = _result(~witness)
    return rep


POINT_REFLECTION_AXIOMS = ("symmetries_bijective", "involutive", "unique_fixed_point",
                           "unique_midpoint", "conjugation_closed")


def is_point_reflection_structure(m: FiniteMagma) -> bool:
    return check_point_reflection_axioms(m).holds(*POINT_REFLECTION_AXIOMS)


# -- square roots and the isotopy ------------------------------------------------

def square_roots(m: FiniteMagma, e: int) -> np.ndarray | None:
    """roots[x] = the unique z with z * e = x, or None if some x has 0 or 2+ roots."""
    col = m.table[:, e]
    if len(np.unique(col)) != m.n:
        return None
    roots = np.empty(m.n, dtype=np.int64)
    roots[col] = np.arange(m.n)
    return roots


def quasigroup_to_bloop(m: FiniteMagma, e: int) -> FiniteMagma:
    """The loop x . y = x^(1/2) * (e * y) with identity e."""
    if not 0 <= e < m.n:
        raise StructureError(f"element {e} out of range")
    rep = check_reflection_axioms(m)
    if not is_reflection_quasigroup(m):
        raise StructureError(f"not a reflection quasigroup: fails {', '.join(rep.failed())}")
    roots = square_roots(m, e)
    if roots is None:
        raise StructureError("square roots with respect to e are not unique; "
                             "a left keyesian left distributive left quasigroup has unique roots "
                             "iff it is a right quasigroup")
    T = m.table
    y = np.arange(m.n)
    return FiniteMagma(T[roots[:, None], T[e, y][None, :]], e=e)


def find_identity(m: FiniteMagma) -> int | None:
    T = m.table
    ar = np.arange(m.n)
    for e in range(m.n):
        if np.array_equal(T[e], ar) and np.array_equal(T[:, e], ar):
            return e
    return None


def loop_inverses(m: FiniteMagma, e: int) -> np.ndarray | None:
    """inv[x] with x . inv[x] = e = inv[x] . x, or None if not two-sided."""
    T = m.table
    inv = np.full(m.n, -1, dtype=np.int64)
    for x in range(m.n):
        hits = np.flatnonzero(T[x] == e)
        if len(hits) != 1 or T[hits[0], x] != e:
            return None
        inv[x] = hits[0]
    return inv


def check_bloop_axioms(m: FiniteMagma, e: int | None = None) -> AxiomReport:
    """Exhaustive B-loop check: loop with identity, Bol, AIP, bijective squaring."""
    _check_size(m)
    e = m.e if e is None else e
    T, n = m.table, m.n
    rep = AxiomReport()
    ar = np.arange(n)
    ident_ok = e is not None and np.array_equal(T[e], ar) and np.array_equal(T[:, e], ar)
    rep.results["identity"] = AxiomResult(bool(ident_ok), None if ident_ok else (e,))
    ce_l, ce_r = _perm_counterexample(T), _perm_counterexample(T.T)
    rep.results["latin_square"] = AxiomResult(ce_l is None and ce_r is None, ce_l or ce_r)
    x, y, z = _grids(n)
    rep.results["bol"] = _result(T[x, T[y, T[x, z]]] != T[T[x, T[y, x]], z])
    inv = loop_inverses(m, e) if ident_ok else None
    if inv is None:
        rep.results["two_sided_inverses"] = AxiomResult(False, None)
        rep.results["aip"] = AxiomResult(False, None)
    else:
        rep.results["two_sided_inverses"] = AxiomResult(True)
        x2, y2 = ar[:, None], ar[None, :]
        rep.results["aip"] = _result(inv[T[x2, y2]] != T[inv[x2], inv[y2]])
    sq = T[ar, ar]
    ok = len(np.unique(sq)) == n
    rep.results["bijective_squaring"] = AxiomResult(ok, None if ok else _perm_counterexample(sq[None, :]))
    return rep


def bloop_to_quasigroup(m: FiniteMagma, e: int | None = None) -> FiniteMagma:
    """The reflection quasigroup x * y = x^2 . y^-1 of a B-loop."""
    if e is None:
        e = m.e if m.e is not None else find_identity(m)
    if e is None:
        raise StructureError("not a B-loop: no two-sided identity")
    rep = check_bloop_axioms(m, e)
    if not rep.holds():
        raise StructureError(f"not a B-loop: fails {', '.join(rep.failed())}")
    T = m.table
    ar = np.arange(m.n)
    inv = loop_inverses(m, e)
    sq = T[ar, ar]
    return FiniteMagma(T[sq[:, None], inv[None, :]], e=e)


# -- corpora for exhaustive lemma checks -----------------------------------------

def involutions(n: int) -> list[tuple[int, ...]]:
    """All involutive permutations of {0..n-1} (including the identity)."""
    out = []
    for p in itertools.permutations(range(n)):
        if all(p[p[i]] == i for i in range(n)):
            out.append(p)
    return out


def magmas_with_involutive_rows(n: int) -> Iterator[FiniteMagma]:
    """Every magma on n elements whose left translations are involutions."""
    for rows in itertools.product(involutions(n), repeat=n):
        yield FiniteMagma(rows)


def left_keyes_distributive_corpus(max_n: int = 4) -> Iterator[FiniteMagma]:
    """All left keyesian, left distributive left quasigroups on 1..max_n elements."""
    for n in range(1, max_n + 1):
        for m in magmas_with_involutive_rows(n):
            x, y, z = _grids(n)
            T = m.table
            if np.array_equal(T[x, T[y, z]], T[T[x, y], T[x, z]]):
                yield m


def square_root_lemma_holds(m: FiniteMagma) -> bool:
    """For every e: unique square roots w.r.t. e  <=>  right quasigroup."""
    rq = check_reflection_axioms(m)["right_quasigroup"].holds
    return all((square_roots(m, e) is not None) == rq for e in range(m.n))
