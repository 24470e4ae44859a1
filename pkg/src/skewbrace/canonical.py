"""Canonical labeling of finite structures given by operation tables.

A structure is a list of n x n tables on the carrier {0, ..., n-1} with 0 as a
distinguished point.  A labeling is an ordering of the carrier starting at 0.
Labelings are grown by choosing a generator among the unlabeled elements of
least signature and closing the labeled set under every table in a fixed
order; the canonical labeling is the one whose relabeled tables are
lexicographically least.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np


def _rank(values: Sequence) -> list[int]:
    order = sorted(set(values))
    index = {v: i for i, v in enumerate(order)}
    return [index[v] for v in values]


def refine_signatures(tables: Sequence[Sequence[Sequence[int]]], base: Sequence, rounds: int = 2) -> list[int]:
    """Refine isomorphism-invariant element signatures by looking at products."""
    n = len(base)
    sig = _rank(base)
    for _ in range(rounds):
        new = []
        for x in range(n):
            around = []
            for t in tables:
                row = t[x]
                around.append(tuple(sorted((sig[y], sig[row[y]], sig[t[y][x]]) for y in range(n))))
            new.append((sig[x], tuple(around)))
        ranked = _rank(new)
        if len(set(ranked)) == len(set(sig)):
            sig = ranked
            break
        sig = ranked
    return sig


def _encode(n: int, arrays: list[np.ndarray]) -> bytes:
    if n < 256:
        head = bytes([n])
        body = b"".join(a.astype(np.uint8).tobytes() for a in arrays)
    else:
        head = n.to_bytes(2, "big")
        body = b"".join(a.astype(">u2").tobytes() for a in arrays)
    return head + body


def canonical_labeling(tables: Sequence[Sequence[Sequence[int]]], signatures: Sequence[int] | None = None) -> tuple[bytes, tuple[int, ...]]:
    """Return ``(key, labeling)`` where ``labeling[i]`` is the old element given new label i."""
    n = len(tables[0])
    if signatures is None:
        signatures = [0] * n
    arrays = [np.asarray(t, dtype=np.int64) for t in tables]
    best_key: bytes | None = None
    best_lab: tuple[int, ...] = ()

    def close(lab: list[int], pos: list[int], start: int) -> None:
        k = start
        while k < len(lab):
            xk = lab[k]
            for j in range(k + 1):
                xj = lab[j]
                for t in tables:
                    for z in (t[xj][xk], t[xk][xj]):
                        if pos[z] < 0:
                            pos[z] = len(lab)
                            lab.append(z)
            k += 1

    def leaf(lab: list[int]) -> None:
        nonlocal best_key, best_lab
        L = np.asarray(lab, dtype=np.int64)
        pos = np.empty(n, dtype=np.int64)
        pos[L] = np.arange(n)
        relabeled = [pos[a[np.ix_(L, L)]] for a in arrays]
        key = _encode(n, relabeled)
        if best_key is None or key < best_key:
            best_key = key
            best_lab = tuple(lab)

    def search(lab: list[int], pos: list[int]) -> None:
        if len(lab) == n:
            leaf(lab)
            return
        free = [x for x in range(n) if pos[x] < 0]
        low = min(signatures[x] for x in free)
        for g in free:
            if signatures[g] != low:
                continue
            lab2 = lab + [g]
            pos2 = pos[:]
            pos2[g] = len(lab)
            close(lab2, pos2, len(lab))
            search(lab2, pos2)

    pos0 = [-1] * n
    pos0[0] = 0
    lab0 = [0]
    close(lab0, pos0, 0)
    search(lab0, pos0)
    assert best_key is not None
    return best_key, best_lab


def isomorphism_from_labelings(lab1: Sequence[int], lab2: Sequence[int]) -> tuple[int, ...]:
    """Compose two canonical labelings into a map from structure 1 to structure 2."""
    phi = [0] * len(lab1)
    for a, b in zip(lab1, lab2):
        phi[a] = b
    return tuple(phi)
