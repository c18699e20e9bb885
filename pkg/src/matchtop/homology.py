"""Reduced simplicial homology over prime fields.

Betti numbers come from ranks of boundary matrices: beta_k = nullity(d_k) -
rank(d_{k+1}), with d_0 the augmentation map, so beta_-1 is 1 exactly for the
complex {∅}.  Over GF(2) ranks use bit-packed column elimination; over odd
primes a dense modular elimination (numpy).

Large complexes are reduced first by elementary collapses, which preserve
homology exactly: a complex that collapses to a point is acyclic, and a pure
complex whose puncturing (one top facet removed) is acyclic has precisely the
reduced homology of a sphere of its dimension, by the Mayer-Vietoris sequence
for the punctured part and the removed simplex.  Anything that resists both
reductions falls back to plain matrix ranks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import Complex
from .errors import BadDimensionError, InvalidParameterError, VoidComplexError

_DIRECT_FACE_LIMIT = 2048
_CORE_FACE_LIMIT = 4096


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


@dataclass(frozen=True)
class FieldPrime:
    """A prime modulus for homology coefficients."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise InvalidParameterError(f"{self.p} is not prime")
        if self.p >= 1 << 16:
            raise InvalidParameterError("primes must be below 2^16")


def _prime_of(p) -> int:
    if isinstance(p, FieldPrime):
        return p.p
    return FieldPrime(p).p


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers over GF(p).

    ``betti[k]`` is beta_k for k >= 0; ``minus_one`` is beta_-1 (1 only for
    the complex {∅}).
    """

    p: int
    minus_one: int
    betti: tuple

    def b(self, k: int) -> int:
        if k == -1:
            return self.minus_one
        if 0 <= k < len(self.betti):
            return self.betti[k]
        return 0

    def is_sphere(self, d: int) -> bool:
        if self.minus_one != (1 if d == -1 else 0):
            return False
        return all(v == (1 if k == d else 0) for k, v in enumerate(self.betti))

    def is_ball(self) -> bool:
        return self.minus_one == 0 and all(v == 0 for v in self.betti)

    def to_list(self):
        return list(self.betti)


class BoundaryMatrix:
    """The map from k-chains to (k-1)-chains in a fixed face ordering.

    Rows are the (k-1)-faces sorted by bitmask (for k = 0 the single
    augmentation row), columns the k-faces sorted by bitmask; the column of a
    face carries (-1)^i at the subface dropping its i-th smallest vertex.
    """

    def __init__(self, k, p, row_faces, col_faces, columns):
        self.k = k
        self.p = p
        self.row_faces = row_faces
        self.col_faces = col_faces
        self.columns = columns  # tuple of tuples of (row_index, coefficient)

    @property
    def shape(self):
        return (len(self.row_faces), len(self.col_faces))

    def dense(self):
        rows, cols = self.shape
        out = [[0] * cols for _ in range(rows)]
        for j, col in enumerate(self.columns):
            for i, coeff in col:
                out[i][j] = coeff
        return out

    def rank(self) -> int:
        if self.p == 2:
            ints = []
            for col in self.columns:
                v = 0
                for i, coeff in col:
                    if coeff % 2:
                        v |= 1 << i
                ints.append(v)
            return _rank_gf2(ints)
        rows, cols = self.shape
        mat = np.zeros((rows, cols), dtype=np.int64)
        for j, col in enumerate(self.columns):
            for i, coeff in col:
                mat[i, j] = coeff % self.p
        return _rank_modp(mat, self.p)


def _signed_subfaces(mask: int):
    """(subface, sign) pairs for deleting each vertex, smallest first."""
    out = []
    sign = 1
    m = mask
    while m:
        b = m & -m
        out.append((mask ^ b, sign))
        sign = -sign
        m ^= b
    return out


def boundary_matrix(c: Complex, k: int, p) -> BoundaryMatrix:
    pp = _prime_of(p)
    if c.is_void:
        raise VoidComplexError("boundary matrix of the void complex")
    if not 0 <= k <= c.dimension:
        raise BadDimensionError(f"k={k} outside 0..{c.dimension}")
    by_size = c.faces_by_size()
    col_masks = by_size.get(k + 1, [])
    if k == 0:
        row_faces = ((),)
        columns = tuple(((0, 1),) for _ in col_masks)
        return BoundaryMatrix(
            0, pp, row_faces, tuple(c.labels_of(m) for m in col_masks), columns
        )
    row_masks = by_size.get(k, [])
    index = {m: i for i, m in enumerate(row_masks)}
    columns = []
    for cm in col_masks:
        col = []
        for sub, sign in _signed_subfaces(cm):
            col.append((index[sub], sign % pp))
        columns.append(tuple(col))
    return BoundaryMatrix(
        k,
        pp,
        tuple(c.labels_of(m) for m in row_masks),
        tuple(c.labels_of(m) for m in col_masks),
        tuple(columns),
    )


# ---------------------------------------------------------------------------
# ranks


def _rank_gf2(cols) -> int:
    """Rank of a GF(2) matrix given as column bitmasks over row indices."""
    pivots = {}
    rank = 0
    for c in cols:
        while c:
            h = c.bit_length() - 1
            row = pivots.get(h)
            if row is None:
                pivots[h] = c
                rank += 1
                break
            c ^= row
    return rank


def _rank_modp(mat: np.ndarray, p: int) -> int:
    """In-place row echelon rank of an integer matrix mod p."""
    mat = np.mod(mat, p)
    rows, cols = mat.shape
    r = 0
    for col in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(mat[r:, col])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            mat[[r, i], col:] = mat[[i, r], col:]
        inv = pow(int(mat[r, col]), p - 2, p)
        if inv != 1:
            mat[r, col:] = mat[r, col:] * inv % p
        below = np.flatnonzero(mat[r + 1:, col])
        if below.size:
            idx = below + r + 1
            mat[idx, col:] = (
                mat[idx, col:] - np.outer(mat[idx, col], mat[r, col:])
            ) % p
        r += 1
    return r


# ---------------------------------------------------------------------------
# collapse engine


def _all_faces(facet_masks):
    """Every nonempty face under the given facets."""
    seen = set(facet_masks)
    seen.discard(0)
    frontier = list(seen)
    while frontier:
        f = frontier.pop()
        m = f
        while m:
            b = m & -m
            sub = f ^ b
            if sub and sub not in seen:
                seen.add(sub)
                frontier.append(sub)
            m ^= b
    return seen


def _collapse(faces: set, vertex_count: int) -> set:
    """Greedy elementary collapses; returns the remaining face set.

    A face is free when it lies in exactly one face of the next size up;
    removing the pair preserves the homotopy type.  Larger free faces are
    consumed first.
    """
    faces = set(faces)
    if not faces:
        return faces
    cof = {}
    for f in faces:
        if f.bit_count() >= 2:
            m = f
            while m:
                b = m & -m
                sub = f ^ b
                cof[sub] = cof.get(sub, 0) + 1
                m ^= b
    max_size = max(f.bit_count() for f in faces)
    stacks = [[] for _ in range(max_size + 1)]
    for f in faces:
        if cof.get(f, 0) == 1:
            stacks[f.bit_count()].append(f)

    def dec(sub):
        cof[sub] -= 1
        if cof[sub] == 1 and sub in faces:
            stacks[sub.bit_count()].append(sub)

    while True:
        tau = None
        for s in range(max_size, 0, -1):
            stack = stacks[s]
            while stack:
                cand = stack.pop()
                if cand in faces and cof.get(cand, 0) == 1:
                    tau = cand
                    break
            if tau is not None:
                break
        if tau is None:
            return faces
        sigma = None
        for v in range(vertex_count):
            b = 1 << v
            if not tau & b and (tau | b) in faces:
                sigma = tau | b
                break
        faces.discard(tau)
        faces.discard(sigma)
        m = sigma
        while m:
            b = m & -m
            sub = sigma ^ b
            if sub and sub != tau:
                dec(sub)
            m ^= b
        if tau.bit_count() >= 2:
            m = tau
            while m:
                b = m & -m
                sub = tau ^ b
                if sub:
                    dec(sub)
                m ^= b


# ---------------------------------------------------------------------------
# betti numbers


def _betti_from_faces(faces, p: int, pad_dim: int) -> BettiVector:
    """Direct matrix-rank computation from an explicit nonempty face set."""
    by_size = {}
    for f in faces:
        by_size.setdefault(f.bit_count(), []).append(f)
    for lst in by_size.values():
        lst.sort()
    if not by_size:
        return BettiVector(p, 1, (0,) * (pad_dim + 1) if pad_dim >= 0 else ())
    top = max(by_size)
    ranks = [0] * (top + 1)  # ranks[k] = rank of d_k
    ranks[0] = 1 if by_size.get(1) else 0
    for k in range(1, top):
        rows = by_size.get(k, [])
        cols = by_size.get(k + 1, [])
        if not rows or not cols:
            continue
        index = {m: i for i, m in enumerate(rows)}
        if p == 2:
            ints = []
            for cm in cols:
                v = 0
                m = cm
                while m:
                    b = m & -m
                    v |= 1 << index[cm ^ b]
                    m ^= b
                ints.append(v)
            ranks[k] = _rank_gf2(ints)
        else:
            mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
            for j, cm in enumerate(cols):
                for sub, sign in _signed_subfaces(cm):
                    mat[index[sub], j] = sign % p
            ranks[k] = _rank_modp(mat, p)
    ranks.append(0)  # d_{top} maps from nothing above
    betti = []
    for k in range(top):
        f_k = len(by_size.get(k + 1, ()))
        betti.append(f_k - ranks[k] - ranks[k + 1])
    while len(betti) < pad_dim + 1:
        betti.append(0)
    return BettiVector(p, 1 - ranks[0], tuple(betti))


_betti_cache: dict = {}


def betti_for_facets(vertex_count: int, facet_masks, p: int) -> BettiVector:
    """Reduced Betti numbers for the complex with the given maximal faces.

    ``facet_masks`` must be inclusion-maximal and nonempty; (0,) denotes {∅}.
    Results are cached by the facet structure.
    """
    facet_masks = tuple(facet_masks)
    if facet_masks == (0,):
        return BettiVector(p, 1, ())
    key = (facet_masks, p)
    got = _betti_cache.get(key)
    if got is not None:
        return got
    d = max(m.bit_count() for m in facet_masks) - 1
    faces = _all_faces(facet_masks)
    if len(faces) <= _DIRECT_FACE_LIMIT:
        out = _betti_from_faces(faces, p, d)
    else:
        out = _betti_large(faces, facet_masks, vertex_count, p, d)
    _betti_cache[key] = out
    return out


def _sphere_vector(p: int, d: int) -> BettiVector:
    if d == -1:
        return BettiVector(p, 1, ())
    return BettiVector(p, 0, tuple(0 if k != d else 1 for k in range(d + 1)))


def _betti_large(faces, facet_masks, vertex_count, p, d) -> BettiVector:
    core = _collapse(faces, vertex_count)
    if len(core) == 1:
        return BettiVector(p, 0, (0,) * (d + 1))
    if len(core) <= _CORE_FACE_LIMIT:
        return _betti_from_faces(core, p, d)
    sizes = {m.bit_count() for m in facet_masks}
    if len(sizes) == 1:
        # puncture a pure complex: acyclic remainder forces sphere homology
        for pick in (0, len(facet_masks) // 2, len(facet_masks) - 1):
            punctured = set(faces)
            punctured.discard(facet_masks[pick])
            core_p = _collapse(punctured, vertex_count)
            if len(core_p) == 1:
                return _sphere_vector(p, d)
            if len(core_p) <= _CORE_FACE_LIMIT:
                if _betti_from_faces(core_p, p, d).is_ball():
                    return _sphere_vector(p, d)
                break
    return _betti_from_faces(faces, p, d)


def betti_reduced(c: Complex, p) -> BettiVector:
    """Reduced Betti numbers of a nonvoid complex over GF(p)."""
    pp = _prime_of(p)
    if c.is_void:
        raise VoidComplexError("homology of the void complex")
    return betti_for_facets(c.vertex_count, c.facet_masks, pp)


def has_sphere_homology(c: Complex, d: int, p) -> bool:
    """All reduced homology vanishing except one dimension-d class.

    d = -1 means the complex {∅}.  The void complex fails every check.
    """
    if c.is_void:
        return False
    return betti_reduced(c, p).is_sphere(d)


def has_ball_homology(c: Complex, p) -> bool:
    """All reduced homology vanishing."""
    if c.is_void:
        return False
    return betti_reduced(c, p).is_ball()


def clear_caches():
    _betti_cache.clear()
