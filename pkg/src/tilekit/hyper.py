"""Finite windows of explicit aperiodicity witnesses.

The one-dimensional generator assigns to each integer the parity of the
binary digit sum of its absolute value; two-dimensional windows combine
two one-dimensional ones by cellwise parity sum.  The witness check
verifies the combinatorial condition that every window position can be
distinguished from its shift by some offset in a finite test set.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BitWindow:
    dim: int
    lo: tuple  # origin offset, length == dim
    bits: tuple  # flat row-major values, extents given separately
    extents: tuple

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise ValueError("dim must be 1 or 2")
        lo = tuple(int(c) for c in self.lo)
        extents = tuple(int(e) for e in self.extents)
        bits = tuple(int(b) for b in self.bits)
        if len(lo) != self.dim or len(extents) != self.dim:
            raise ValueError("origin/extent arity mismatch")
        size = 1
        for e in extents:
            size *= e
        if size != len(bits) or any(b not in (0, 1) for b in bits):
            raise ValueError("bits must be 0/1 and match the extents")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "extents", extents)
        object.__setattr__(self, "bits", bits)

    def contains(self, pos) -> bool:
        pos = _as_tuple(pos, self.dim)
        return all(self.lo[i] <= pos[i] < self.lo[i] + self.extents[i] for i in range(self.dim))

    def value(self, pos) -> int:
        pos = _as_tuple(pos, self.dim)
        if not self.contains(pos):
            raise KeyError(f"position {pos} outside the window")
        idx = 0
        for i in range(self.dim):
            idx = idx * self.extents[i] + (pos[i] - self.lo[i])
        return self.bits[idx]

    def positions(self):
        if self.dim == 1:
            (a,) = self.lo
            (e,) = self.extents
            return [(a + i,) for i in range(e)]
        (ax, ay) = self.lo
        (ex, ey) = self.extents
        return [(ax + i, ay + j) for i in range(ex) for j in range(ey)]

    def to_jsonable(self):
        return {
            "dim": self.dim,
            "lo": list(self.lo),
            "extents": list(self.extents),
            "bits": list(self.bits),
        }


def _as_tuple(pos, dim):
    if isinstance(pos, int):
        pos = (pos,)
    pos = tuple(int(c) for c in pos)
    if len(pos) != dim:
        raise ValueError("position arity mismatch")
    return pos


def digit_sum_parity(i: int) -> int:
    """Parity of the number of ones in the binary expansion of |i|."""
    return bin(abs(i)).count("1") % 2


def tm_window(a: int, b: int) -> BitWindow:
    """One-dimensional window of the digit-sum-parity word on [a, b]."""
    if a > b:
        raise ValueError("need a <= b")
    bits = tuple(digit_sum_parity(i) for i in range(a, b + 1))
    return BitWindow(1, (a,), bits, (b - a + 1,))


def sum2d_window(x: BitWindow, y: BitWindow) -> BitWindow:
    """Cellwise parity sum on the product rectangle of two 1-D windows."""
    if x.dim != 1 or y.dim != 1:
        raise ValueError("expected one-dimensional windows")
    (ax,), (ex,) = x.lo, x.extents
    (ay,), (ey,) = y.lo, y.extents
    bits = []
    for i in range(ex):
        for j in range(ey):
            bits.append((x.bits[i] + y.bits[j]) % 2)
    return BitWindow(2, (ax, ay), tuple(bits), (ex, ey))


def verify_witness(window: BitWindow, s, T) -> bool:
    """Check the finite witness condition on the window's interior.

    For every position g such that g+t and g+s+t stay inside the window
    for all t in T, some t must distinguish: value(g+t) != value(g+s+t).
    Raises ValueError when no position is testable.
    """
    dim = window.dim
    s = _as_tuple(s, dim)
    T = [_as_tuple(t, dim) for t in T]
    if not T:
        raise ValueError("offset set must be nonempty")

    if dim == 1:
        bits = window.bits
        (lo,) = window.lo
        (ext,) = window.extents
        (sh,) = s
        offs = sorted(t for (t,) in T)
        lo_t, hi_t = offs[0], offs[-1]
        start = max(0, -lo_t, -sh - lo_t)
        stop = min(ext, ext - hi_t, ext - sh - hi_t)
        if start >= stop:
            raise ValueError("window too small for the offset set")
        for i in range(start, stop):
            if all(bits[i + t] == bits[i + sh + t] for t in offs):
                return False
        return True

    def add(a, b):
        return tuple(x + y for x, y in zip(a, b))

    tested = 0
    for g in window.positions():
        if not all(
            window.contains(add(g, t)) and window.contains(add(add(g, s), t)) for t in T
        ):
            continue
        tested += 1
        if not any(window.value(add(g, t)) != window.value(add(add(g, s), t)) for t in T):
            return False
    if tested == 0:
        raise ValueError("window too small for the offset set")
    return True


def standard_offsets(s: int):
    """The derived test set for a one-dimensional shift: all offsets of
    magnitude at most four times the highest power of two in |s|."""
    if s == 0:
        raise ValueError("shift must be nonzero")
    ell = abs(s).bit_length() - 1
    r = 4 * (1 << ell)
    return [(t,) for t in range(-r, r + 1)]
