"""Morphisms of the paracyclic category and its subcategories.

A morphism ``f: n -> m`` is a monotone map ``Z -> Z`` with
``f(j + n + 1) = f(j) + m + 1``.  It is stored as the window
``f(0), ..., f(n)``; every other value follows from periodicity.

The duplicial category K is cut out by ``f(0) >= 0`` and the simplicial
category Delta additionally by ``f(n) <= m``.  The cyclic category is the
quotient identifying ``f`` with ``f + (m + 1)``.

Besides the scalar API there are numpy batch routines (``batch_*``) that
apply the same formulas to whole stacks of windows; they exist so that
exhaustive law checks over millions of composable pairs stay fast.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterator

import numpy as np

__all__ = [
    "ParaMorphism",
    "RankMismatch",
    "InvalidMorphism",
    "LiteralError",
    "evaluate",
    "compose",
    "identity",
    "cyclic_dual",
    "in_K",
    "in_Delta",
    "classify",
    "face",
    "degeneracy",
    "cycle",
    "power",
    "enumerate_morphisms",
    "lambda_canonical",
    "parse_literal",
    "format_literal",
    "window_array",
    "batch_compose",
    "batch_dual",
    "contravariance_sweep",
]


class RankMismatch(ValueError):
    pass


class InvalidMorphism(ValueError):
    pass


class LiteralError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class ParaMorphism:
    n: int
    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        problems = self.problems()
        if problems:
            raise InvalidMorphism(f"{format_literal(self)}: " + "; ".join(problems))

    def problems(self) -> list[str]:
        n, m, v = self.n, self.m, self.values
        if n < 0 or m < 0:
            return ["ranks must be natural numbers"]
        if len(v) != n + 1:
            return [f"expected {n + 1} values, got {len(v)}"]
        out = []
        for j in range(n):
            if v[j] > v[j + 1]:
                out.append(f"not monotone at {j}: {v[j]} > {v[j + 1]}")
        if v[n] > v[0] + m + 1:
            out.append(f"f({n}) = {v[n]} exceeds f(0) + m + 1 = {v[0] + m + 1}")
        return out

    def __call__(self, j: int) -> int:
        q, r = divmod(j, self.n + 1)
        return self.values[r] + q * (self.m + 1)

    def __str__(self) -> str:
        return format_literal(self)


def evaluate(f: ParaMorphism, j: int) -> int:
    return f(j)


def identity(n: int) -> ParaMorphism:
    return ParaMorphism(n, n, tuple(range(n + 1)))


def compose(g: ParaMorphism, f: ParaMorphism) -> ParaMorphism:
    """``g o f``: apply ``f`` first."""
    if f.m != g.n:
        raise RankMismatch(f"cannot compose {g} after {f}: {f.m} != {g.n}")
    return ParaMorphism(f.n, g.m, tuple(g(v) for v in f.values))


def cyclic_dual(f: ParaMorphism) -> ParaMorphism:
    """The morphism ``m -> n`` with ``i -> max{j : -f(-j) <= i}``.

    ``-f(-j) <= i`` iff ``f(-j) >= -i``, so the maximum is minus the least
    ``k`` with ``f(k) >= -i``.  Writing ``k = q(n+1) + r`` the least ``k`` in
    each residue class ``r`` has ``q = ceil((-i - f(r)) / (m+1))``; the
    minimum over one period of residues is the global minimum.
    """
    n, m = f.n, f.m
    vals = []
    for i in range(m + 1):
        vals.append(max(((i + f.values[r]) // (m + 1)) * (n + 1) - r for r in range(n + 1)))
    return ParaMorphism(m, n, tuple(vals))


def in_K(f: ParaMorphism) -> bool:
    return f.values[0] >= 0


def in_Delta(f: ParaMorphism) -> bool:
    return f.values[0] >= 0 and f.values[-1] <= f.m


def classify(f: ParaMorphism) -> str:
    """Smallest of Delta, K, ParaCyclic containing ``f``."""
    if in_Delta(f):
        return "Delta"
    if in_K(f):
        return "K"
    return "ParaCyclic"


def face(n: int, i: int) -> ParaMorphism:
    """Monotone injection ``n-1 -> n`` that skips ``i``."""
    if n < 1 or not 0 <= i <= n:
        raise IndexError(f"face({n}, {i}) out of range")
    return ParaMorphism(n - 1, n, tuple(j if j < i else j + 1 for j in range(n)))


def degeneracy(n: int, i: int) -> ParaMorphism:
    """Monotone surjection ``n+1 -> n`` that hits ``i`` twice."""
    if n < 0 or not 0 <= i <= n:
        raise IndexError(f"degeneracy({n}, {i}) out of range")
    return ParaMorphism(n + 1, n, tuple(j if j <= i else j - 1 for j in range(n + 2)))


def cycle(n: int) -> ParaMorphism:
    """The cyclic operator ``j -> j + 1`` on ``n``."""
    return ParaMorphism(n, n, tuple(range(1, n + 2)))


def power(f: ParaMorphism, k: int) -> ParaMorphism:
    if f.n != f.m:
        raise RankMismatch("only endomorphisms have powers")
    out = identity(f.n)
    for _ in range(k):
        out = compose(f, out)
    return out


def _tails(lo: int, hi: int, length: int) -> Iterator[tuple[int, ...]]:
    # nondecreasing tuples in [lo, hi], lexicographic
    for combo in itertools.combinations_with_replacement(range(lo, hi + 1), length):
        yield combo


def enumerate_morphisms(n: int, m: int, window: int = 2) -> list[ParaMorphism]:
    """All morphisms ``n -> m`` with ``|f(0)| <= window * (m + 1)``, sorted by values."""
    bound = window * (m + 1)
    out = []
    for v0 in range(-bound, bound + 1):
        for tail in _tails(v0, v0 + m + 1, n):
            out.append(ParaMorphism(n, m, (v0,) + tail))
    return out


def lambda_canonical(f: ParaMorphism) -> ParaMorphism:
    """Representative of ``f`` in the cyclic quotient, with ``0 <= f(0) <= m``."""
    k = f.values[0] // (f.m + 1)
    if k == 0:
        return f
    shift = k * (f.m + 1)
    return ParaMorphism(f.n, f.m, tuple(v - shift for v in f.values))


_LITERAL = re.compile(r"^\s*(\d+)\s+(\d+)\s*:((?:\s+-?\d+)+)\s*$")


def parse_literal(text: str) -> ParaMorphism:
    """Parse ``"n m : v0 v1 ... vn"``.

    Raises :class:`LiteralError` for malformed text and
    :class:`InvalidMorphism` when the values violate monotonicity or
    periodicity.
    """
    match = _LITERAL.match(text)
    if not match:
        raise LiteralError(f"malformed morphism literal {text!r}")
    n, m = int(match.group(1)), int(match.group(2))
    values = tuple(int(tok) for tok in match.group(3).split())
    if len(values) != n + 1:
        raise LiteralError(f"literal {text!r} needs {n + 1} values")
    return ParaMorphism(n, m, values)


def format_literal(f: ParaMorphism) -> str:
    return f"{f.n} {f.m} : " + " ".join(str(v) for v in f.values)


def as_dict(f: ParaMorphism) -> dict:
    return {"n": f.n, "m": f.m, "values": list(f.values)}


def from_dict(d: dict) -> ParaMorphism:
    if set(d) != {"n", "m", "values"}:
        raise LiteralError(f"morphism object needs exactly n, m, values; got {sorted(d)}")
    return ParaMorphism(int(d["n"]), int(d["m"]), tuple(d["values"]))


# -- batch routines ---------------------------------------------------------


def window_array(n: int, m: int, window: int = 2) -> np.ndarray:
    """Windows of :func:`enumerate_morphisms` as an ``(N, n+1)`` int array, same order."""
    bound = window * (m + 1)
    combos = list(_tails(0, m + 1, n))
    tails = np.array(combos, dtype=np.int64).reshape(len(combos), n)
    starts = np.arange(-bound, bound + 1, dtype=np.int64)
    out = np.empty((len(starts), len(tails), n + 1), dtype=np.int64)
    out[:, :, 0] = starts[:, None]
    out[:, :, 1:] = starts[:, None, None] + tails[None, :, :]
    return out.reshape(-1, n + 1)


def batch_compose(g: np.ndarray, f: np.ndarray, k: int) -> np.ndarray:
    """All composites ``g[a] o f[b]``, shape ``(len(g), len(f), n+1)``.

    ``f`` holds windows of morphisms ``n -> m``, ``g`` of morphisms ``m -> k``.
    """
    m1 = g.shape[1]
    q, r = np.divmod(f, m1)
    return g[:, r] + (q * (k + 1))[None]


def batch_dual(values: np.ndarray, m: int) -> np.ndarray:
    """Cyclic duals of a stack of windows ``(..., n+1)`` of morphisms ``n -> m``."""
    n1 = values.shape[-1]
    r = np.arange(n1, dtype=values.dtype)
    i = np.arange(m + 1, dtype=values.dtype)
    # axes: (..., r, i)
    cand = ((values[..., :, None] + i) // (m + 1)) * n1 - r[:, None]
    return cand.max(axis=-2)


def contravariance_sweep(max_rank: int = 4, window: int = 2, chunk: int = 512) -> dict:
    """Check ``(g o f)° == f° o g°`` for every composable pair of enumerated morphisms.

    Ranks run over ``0..max_rank``.  Returns the number of pairs checked,
    the number of failures and up to 20 failing pairs as ``(f, g)`` literals.
    """
    ranks = range(max_rank + 1)
    windows = {(n, m): window_array(n, m, window) for n in ranks for m in ranks}
    duals = {key: batch_dual(w, key[1]) for key, w in windows.items()}
    pairs = 0
    failure_count = 0
    failures: list[tuple[str, str]] = []
    for (n, m), f in windows.items():
        f_dual = duals[n, m]
        q, r = np.divmod(f, m + 1)
        for k in ranks:
            g_all, gd_all = windows[m, k], duals[m, k]
            for start in range(0, len(g_all), chunk):
                g = g_all[start:start + chunk]
                qd, rd = np.divmod(gd_all[start:start + chunk], m + 1)
                lhs = batch_dual(g[:, r] + (q * (k + 1))[None], k)
                rhs = (f_dual[:, rd] + (qd * (n + 1))[None]).transpose(1, 0, 2)
                bad = np.argwhere((lhs != rhs).any(axis=-1))
                pairs += lhs.shape[0] * lhs.shape[1]
                failure_count += len(bad)
                for a, b in bad[: 20 - len(failures)]:
                    failures.append((
                        format_literal(ParaMorphism(n, m, tuple(f[b]))),
                        format_literal(ParaMorphism(m, k, tuple(g[a]))),
                    ))
    return {"pairs": pairs, "failure_count": failure_count, "failures": failures}
