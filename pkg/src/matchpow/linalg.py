"""Exact rank of sparse matrices over QQ or GF(p).

Rows are dicts ``{column: entry}``. Over QQ the elimination is fraction-free:
rows stay integral and are divided by their content after every step.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable


def _content(row: dict[int, int]) -> int:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def rank_qq(rows: Iterable[dict[int, int]]) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v for c, v in row.items() if v}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                g = _content(row)
                if g != 1:
                    row = {k: v // g for k, v in row.items()}
                pivots[c] = row
                break
            a, b = piv[c], row[c]
            # row <- a*row - b*piv kills column c without leaving ZZ
            new = {k: a * v for k, v in row.items()}
            for k, v in piv.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            g = _content(new) if new else 1
            row = {k: v // g for k, v in new.items()} if g > 1 else new
    return len(pivots)


def rank_mod_p(rows: Iterable[dict[int, int]], p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(row[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in row.items()}
                break
            b = row[c]
            for k, v in piv.items():
                w = (row.get(k, 0) - b * v) % p
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
    return len(pivots)


def rank(rows: Iterable[dict[int, int]], characteristic: int = 0) -> int:
    if characteristic == 0:
        return rank_qq(rows)
    return rank_mod_p(rows, characteristic)
