"""Set-theoretic solutions of the Yang-Baxter equation coming from skew braces."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .brace import SkewBrace

HEADER = "# r(a,b) = (lam_a(b), lam_a(b)^-1 o a o b)"


@dataclass(frozen=True)
class SolutionMap:
    """r(a, b) = (left[a][b], right[a][b])."""

    n: int
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]

    def __call__(self, a: int, b: int) -> tuple[int, int]:
        return self.left[a][b], self.right[a][b]

    def with_swapped(self, p: tuple[int, int], q: tuple[int, int]) -> "SolutionMap":
        """Copy with the images of the pairs p and q exchanged."""
        left = [list(r) for r in self.left]
        right = [list(r) for r in self.right]
        (a, b), (c, d) = p, q
        left[a][b], left[c][d] = left[c][d], left[a][b]
        right[a][b], right[c][d] = right[c][d], right[a][b]
        return SolutionMap(self.n, tuple(map(tuple, left)), tuple(map(tuple, right)))


@dataclass
class SolutionReport:
    bijective: bool
    braid: bool
    left_nondegenerate: bool
    right_nondegenerate: bool
    witnesses: dict[str, tuple[int, ...]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.bijective and self.braid and self.left_nondegenerate and self.right_nondegenerate


def solution_from_brace(B: SkewBrace) -> SolutionMap:
    ar = B.arrays
    M, I, L = ar["mul"], ar["minv"], ar["lam"]
    n = B.order
    a = np.arange(n)[:, None]
    b = np.arange(n)[None, :]
    left = L[a, b]
    right = M[I[left], M[a, b]]
    return SolutionMap(n, tuple(map(tuple, left.tolist())), tuple(map(tuple, right.tolist())))


def verify_solution(r: SolutionMap) -> SolutionReport:
    n = r.n
    Lt = np.asarray(r.left, dtype=np.int64).reshape(n, n)
    Rt = np.asarray(r.right, dtype=np.int64).reshape(n, n)
    w: dict[str, tuple[int, ...]] = {}

    codes = (Lt * n + Rt).ravel()
    counts = np.bincount(codes, minlength=n * n)
    bijective = bool((counts == 1).all())
    if not bijective:
        hit = int(np.argmax(counts > 1)) if (counts > 1).any() else int(np.argmin(counts))
        w["bijective"] = divmod(hit, n)

    def rows_are_perms(T: np.ndarray) -> int | None:
        for i, row in enumerate(T.tolist()):
            if len(set(row)) != n:
                return i
        return None

    bad = rows_are_perms(Lt)
    if bad is not None:
        w["left_nondegenerate"] = (bad,)
    # right component: for fixed b, a -> right(a, b)
    bad_r = rows_are_perms(Rt.T)
    if bad_r is not None:
        w["right_nondegenerate"] = (bad_r,)

    x = np.arange(n)[:, None, None]
    y = np.arange(n)[None, :, None]
    z = np.arange(n)[None, None, :]
    x, y, z = np.broadcast_arrays(x, y, z)

    def r12(t):
        a, b, c = t
        return Lt[a, b], Rt[a, b], c

    def r23(t):
        a, b, c = t
        return a, Lt[b, c], Rt[b, c]

    lhs = r12(r23(r12((x, y, z))))
    rhs = r23(r12(r23((x, y, z))))
    same = (lhs[0] == rhs[0]) & (lhs[1] == rhs[1]) & (lhs[2] == rhs[2])
    braid = bool(same.all())
    if not braid:
        w["braid"] = tuple(int(v) for v in np.argwhere(~same)[0])
    return SolutionReport(bijective, braid, "left_nondegenerate" not in w, "right_nondegenerate" not in w, w)


def export_solution(r: SolutionMap, fmt: str = "pairs-text") -> bytes:
    """pairs-text: "a b -> c d" per pair, row-major.  matrix-text: the permutation
    of pair indices a*n+b as n*n lines, line i holding the index of r(pair i)."""
    n = r.n
    lines = [HEADER]
    if fmt == "pairs-text":
        for a in range(n):
            for b in range(n):
                c, d = r(a, b)
                lines.append(f"{a} {b} -> {c} {d}")
    elif fmt == "matrix-text":
        for a in range(n):
            for b in range(n):
                c, d = r(a, b)
                lines.append(str(c * n + d))
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return ("\n".join(lines) + "\n").encode()
