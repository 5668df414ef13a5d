"""Green (quasiseparable) generator representation of lower Green matrices.

An invertible matrix B is a lower Green matrix of order r exactly when it is
the inverse of an invertible lower band matrix of order r (Asplund). Its
lower part admits a compact block representation: with the block splitting

    row sizes    m_0 = 0, m_1 = ... = m_{N-r} = 1, m_{N-r+1} = r
    column sizes n_0 = r, n_1 = ... = n_{N-r} = 1, n_{N-r+1} = 0

(block indices 0 .. N-r+1), the strictly lower block part is

    B'(i, j) = p(i) * a(i-1)*...*a(j+1) * q(j),    0 <= j < i <= N-r+1,

with generators p(i) (1 x r rows; p(N-r+1) is r x r), q(j) (r x 1 columns;
q(0) = I_r by convention) and transition matrices a(k) (r x r). In scalar
indices this covers exactly the entries with j <= i + r - 1: block column 0
holds scalar columns 1..r, block column j >= 1 holds scalar column j + r, and
the bottom block row holds scalar rows N-r+1..N. Note the block-diagonal
positions (scalar (i, i+r)) are *not* encoded by the generators.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import RegionError

__all__ = [
    "BlockScheme",
    "GreenGenerators",
    "block_scheme",
    "transition_product",
    "green_block_entry",
    "green_scalar_entry",
    "reconstruct_lower",
]


@dataclass(frozen=True)
class BlockScheme:
    """Row/column block sizes splitting an N x N matrix into N-r+2 blocks."""

    n: int
    r: int
    row_sizes: np.ndarray  # length n - r + 2, indexed by block 0 .. n - r + 1
    col_sizes: np.ndarray

    def __post_init__(self):
        for name in ("row_sizes", "col_sizes"):
            arr = np.asarray(getattr(self, name), dtype=int)
            arr.flags.writeable = False
            object.__setattr__(self, name, arr)


def block_scheme(n: int, r: int) -> BlockScheme:
    """Block sizes for the Green representation of an order-r, N x N matrix."""
    if not n > r >= 1:
        raise ValueError(f"need N > r >= 1, got N={n}, r={r}")
    rows = np.ones(n - r + 2, dtype=int)
    cols = np.ones(n - r + 2, dtype=int)
    rows[0] = 0
    rows[-1] = r
    cols[0] = r
    cols[-1] = 0
    return BlockScheme(n, r, rows, cols)


@dataclass(frozen=True)
class GreenGenerators:
    """Generator family (p, q, a) of the lower part of a lower Green matrix.

    Shapes: p(i) is (1, r) for i = 1..N-r and (r, r) for i = N-r+1; q(j) is
    (r, n_j) for j = 0..N-r with q(0) = I_r; a(k) is (r, r) for k = 1..N-r.
    """

    scheme: BlockScheme
    p_blocks: tuple[np.ndarray, ...]  # p(1) .. p(N-r+1)
    q_blocks: tuple[np.ndarray, ...]  # q(0) .. q(N-r)
    a_blocks: tuple[np.ndarray, ...]  # a(1) .. a(N-r)

    def __post_init__(self):
        n, r = self.scheme.n, self.scheme.r
        k = n - r

        def freeze(blocks, name, count, shape_of):
            blocks = tuple(np.array(b, dtype=float, copy=True) for b in blocks)
            if len(blocks) != count:
                raise ValueError(f"expected {count} {name} blocks, got {len(blocks)}")
            for idx, b in enumerate(blocks):
                want = shape_of(idx)
                if b.shape != want:
                    raise ValueError(
                        f"{name} block {idx} has shape {b.shape}, expected {want}"
                    )
                b.flags.writeable = False
            return blocks

        p = freeze(self.p_blocks, "p", k + 1, lambda i: (1, r) if i < k else (r, r))
        q = freeze(self.q_blocks, "q", k + 1, lambda j: (r, r) if j == 0 else (r, 1))
        a = freeze(self.a_blocks, "a", k, lambda _: (r, r))
        if not np.array_equal(q[0], np.eye(r)):
            raise ValueError("q(0) must be the r x r identity")
        object.__setattr__(self, "p_blocks", p)
        object.__setattr__(self, "q_blocks", q)
        object.__setattr__(self, "a_blocks", a)

    @property
    def n(self) -> int:
        return self.scheme.n

    @property
    def r(self) -> int:
        return self.scheme.r

    def p(self, i: int) -> np.ndarray:
        """Row generator p(i), i = 1 .. N-r+1 (the last one is r x r)."""
        if not 1 <= i <= self.n - self.r + 1:
            raise IndexError(f"p index {i} outside 1..{self.n - self.r + 1}")
        return self.p_blocks[i - 1]

    def q(self, j: int) -> np.ndarray:
        """Column generator q(j), j = 0 .. N-r; q(0) is the identity."""
        if not 0 <= j <= self.n - self.r:
            raise IndexError(f"q index {j} outside 0..{self.n - self.r}")
        return self.q_blocks[j]

    def a(self, k: int) -> np.ndarray:
        """Transition matrix a(k), k = 1 .. N-r."""
        if not 1 <= k <= self.n - self.r:
            raise IndexError(f"a index {k} outside 1..{self.n - self.r}")
        return self.a_blocks[k - 1]


def transition_product(gens: GreenGenerators, i: int, j: int) -> np.ndarray:
    """Ordered product a(i-1) * a(i-2) * ... * a(j+1); identity when j >= i-1."""
    top = gens.n - gens.r + 1
    if not (0 <= i <= top and 0 <= j <= top):
        raise IndexError(f"block indices ({i}, {j}) outside 0..{top}")
    out = np.eye(gens.r)
    for k in range(j + 1, i):
        out = gens.a(k) @ out
    return out


def green_block_entry(gens: GreenGenerators, i: int, j: int) -> np.ndarray:
    """Block entry p(i) a(i-1)...a(j+1) q(j) for 0 <= j < i <= N-r+1."""
    top = gens.n - gens.r + 1
    if not (0 <= j < i <= top):
        raise RegionError(
            f"block ({i}, {j}) is not in the strictly lower block region"
        )
    return gens.p(i) @ transition_product(gens, i, j) @ gens.q(j)


def _block_row(gens: GreenGenerators, i: int) -> int:
    return i if i <= gens.n - gens.r else gens.n - gens.r + 1


def green_scalar_entry(gens: GreenGenerators, i: int, j: int) -> float:
    """Scalar entry B(i, j) for 1-based indices with j <= i + r - 1.

    This is the exact region the generators encode: block column 0 gives
    scalar columns 1..r, block column j - r gives scalar column j, and the
    bottom block row gives scalar rows N-r+1..N in full. Entries with
    j - i >= r are not represented and raise RegionError.
    """
    n, r = gens.n, gens.r
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexError(f"indices ({i}, {j}) outside 1..{n}")
    if j > i + r - 1:
        raise RegionError(
            f"entry ({i}, {j}) with j - i = {j - i} lies outside the represented "
            f"region j <= i + r - 1 (r = {r})"
        )
    bi = _block_row(gens, i)
    bj = 0 if j <= r else j - r
    block = green_block_entry(gens, bi, bj)
    row = 0 if i <= n - r else i - (n - r + 1)
    col = j - 1 if j <= r else 0
    return float(block[row, col])


def reconstruct_lower(gens: GreenGenerators) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate the represented region into a dense array plus a region mask.

    Returns ``(values, mask)`` where ``mask[i-1, j-1]`` is True exactly on the
    represented region j <= i + r - 1; non-represented entries hold zero
    rather than a (necessarily wrong) extrapolation.

    The evaluation walks each scalar row right to left, reusing the running
    product p(i) a(i-1)...a(j+1), so the whole region costs O(N^2 r^2).
    """
    n, r = gens.n, gens.r
    values = np.zeros((n, n))
    ii = np.arange(1, n + 1)
    mask = np.subtract.outer(ii, ii) >= 1 - r  # i - j >= 1 - r  <=>  j <= i + r - 1
    for i in range(1, n + 1):
        bi = _block_row(gens, i)
        if i <= n - r:
            v = gens.p(i)[0]
        else:
            v = gens.p(n - r + 1)[i - (n - r + 1)]
        for bj in range(bi - 1, 0, -1):
            values[i - 1, bj + r - 1] = v @ gens.q(bj)[:, 0]
            v = v @ gens.a(bj)
        values[i - 1, :r] = v  # block column 0, q(0) = I
    return values, mask
