"""Homology-manifold recognition and classification.

A pure d-complex is checked face by face: the link of every nonempty face
must have the reduced homology of a sphere or ball of complementary
dimension.  Faces with ball links form the boundary, which must itself be a
closed homology manifold one dimension down.  Classification then reads off
Betti fingerprints at two primes together with the number of boundary
components; the surface types that actually occur are separated by that data.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import complexes as cx
from . import graphs as graphs_mod
from .complexes import Complex
from .errors import CrossCheckMismatchError, InvalidParameterError
from .homology import BettiVector, _prime_of, betti_for_facets, betti_reduced

STATUS_NOT_PURE = "NotPure"
STATUS_NOT_MANIFOLD = "NotManifold"
STATUS_CLOSED = "ClosedManifold"
STATUS_WITH_BOUNDARY = "ManifoldWithBoundary"


@dataclass(frozen=True)
class ManifoldVerdict:
    status: str
    dimension: int  # -2 when undefined (void / wildly non-pure input)
    p: int
    witness_face: tuple | None = None  # labels of a face whose link fails
    witness_betti: BettiVector | None = None

    @property
    def is_manifold(self) -> bool:
        return self.status in (STATUS_CLOSED, STATUS_WITH_BOUNDARY)


@dataclass(frozen=True)
class BoundaryComplex:
    complex: Complex
    component_count: int


@dataclass(frozen=True)
class ManifoldClass:
    """A classification label; dimension is carried for spheres and balls."""

    label: str
    dimension: int | None = None

    def __str__(self):
        if self.label in ("Sphere", "Ball") and self.dimension is not None:
            return f"{self.label}({self.dimension})"
        return self.label


NOT_MANIFOLD_CLASS = ManifoldClass("NotManifold")


# ---------------------------------------------------------------------------
# face-by-face link analysis

_INTERIOR = "S"
_BOUNDARY = "B"
_FAIL = "?"

_class_cache: dict = {}


def _link_facets(facet_masks, face_mask):
    """Facet masks of the link of a face in a pure complex."""
    out = [f & ~face_mask for f in facet_masks if f & face_mask == face_mask]
    out.sort()
    return out


def _normalize(masks):
    """Re-index masks onto used vertices; returns (count, sorted tuple)."""
    used = 0
    for m in masks:
        used |= m
    if used == 0:
        return 0, (0,)
    positions = {}
    i = 0
    mm = used
    while mm:
        b = mm & -mm
        positions[b] = 1 << i
        i += 1
        mm ^= b
    out = []
    for m in masks:
        nm = 0
        t = m
        while t:
            b = t & -t
            nm |= positions[b]
            t ^= b
        out.append(nm)
    out.sort()
    return i, tuple(out)


def _classify_link(norm_count, norm_masks, expected_dim, p):
    """('S'|'B'|'?', betti) for a link with the given normalized facets.

    Cached purely on the facet structure: links in a pure complex are pure
    of complementary dimension, so the expected dimension is a function of
    the masks and the cache cannot be asked two different questions about
    one shape.
    """
    key = (norm_masks, p)
    got = _class_cache.get(key)
    if got is None:
        betti = betti_for_facets(norm_count, norm_masks, p)
        if betti.is_sphere(expected_dim):
            cls = _INTERIOR
        elif betti.is_ball():
            cls = _BOUNDARY
        else:
            cls = _FAIL
        got = (cls, betti)
        _class_cache[key] = got
    return got


def _face_classes(c: Complex, p: int):
    """Map each nonempty face mask to 'S'/'B'/'?' by its link homology."""
    d = c.dimension
    facets = c.facet_masks
    classes = {}
    betti_of = {}
    by_size = c.faces_by_size()
    for size in sorted(by_size):
        target = d - size
        for face in by_size[size]:
            lf = _link_facets(facets, face)
            norm_count, norm_masks = _normalize(lf)
            cls, betti = _classify_link(norm_count, norm_masks, target, p)
            classes[face] = cls
            if cls == _FAIL:
                betti_of[face] = betti
    return classes, betti_of


def _face_sort_key(c: Complex, mask: int):
    return (mask.bit_count(), c.labels_of(mask))


def check_manifold(c: Complex, p) -> ManifoldVerdict:
    """Decide closed manifold / manifold with boundary / neither.

    Follows the link-condition definitions: every nonempty face's link must
    have sphere or ball homology of complementary dimension, and the faces
    with ball links (plus ∅) must form a closed homology manifold one
    dimension lower.  Non-pure input short-circuits to NotPure.
    """
    pp = _prime_of(p)
    if c.is_void:
        return ManifoldVerdict(STATUS_NOT_PURE, -2, pp)
    if c.is_empty_only():
        return ManifoldVerdict(STATUS_CLOSED, -1, pp)
    if not cx.is_pure(c):
        return ManifoldVerdict(STATUS_NOT_PURE, c.dimension, pp)
    d = c.dimension
    classes, betti_of = _face_classes(c, pp)
    failures = [f for f, cls in classes.items() if cls == _FAIL]
    if failures:
        worst = min(failures, key=lambda m: _face_sort_key(c, m))
        return ManifoldVerdict(
            STATUS_NOT_MANIFOLD, d, pp,
            witness_face=c.labels_of(worst),
            witness_betti=betti_of[worst],
        )
    boundary = [f for f, cls in classes.items() if cls == _BOUNDARY]
    if not boundary:
        return ManifoldVerdict(STATUS_CLOSED, d, pp)
    # the boundary faces must be closed under taking subfaces
    bset = set(boundary)
    for f in boundary:
        m = f
        while m:
            b = m & -m
            sub = f ^ b
            if sub and sub not in bset:
                return ManifoldVerdict(
                    STATUS_NOT_MANIFOLD, d, pp,
                    witness_face=c.labels_of(sub),
                    witness_betti=betti_reduced(_subcomplex_link(c, sub), pp),
                )
            m ^= b
    bd = _span(c, boundary)
    if bd.dimension != d - 1 and d >= 1:
        worst = min(boundary, key=lambda m: _face_sort_key(c, m))
        return ManifoldVerdict(
            STATUS_NOT_MANIFOLD, d, pp,
            witness_face=c.labels_of(worst),
            witness_betti=betti_reduced(_subcomplex_link(c, worst), pp),
        )
    sub = check_manifold(bd, pp)
    if sub.status != STATUS_CLOSED:
        witness = sub.witness_face
        witness_betti = sub.witness_betti
        if witness is None:
            # the boundary failed structurally (e.g. not pure); point at the
            # least boundary face instead
            worst = min(boundary, key=lambda m: _face_sort_key(c, m))
            witness = c.labels_of(worst)
            witness_betti = betti_reduced(_subcomplex_link(c, worst), pp)
        return ManifoldVerdict(
            STATUS_NOT_MANIFOLD, d, pp,
            witness_face=witness,
            witness_betti=witness_betti,
        )
    return ManifoldVerdict(STATUS_WITH_BOUNDARY, d, pp)


def _subcomplex_link(c: Complex, face_mask: int) -> Complex:
    lf = _link_facets(c.facet_masks, face_mask)
    count, masks = _normalize(lf)
    return Complex(range(count), masks)


def _span(c: Complex, face_masks) -> Complex:
    """Subcomplex generated by the given faces, on its own vertex set."""
    maximal = cx._maximal(face_masks)
    used = 0
    for m in maximal:
        used |= m
    positions = [i for i in range(c.vertex_count) if used >> i & 1]
    remap = {pos: i for i, pos in enumerate(positions)}
    masks = []
    for m in maximal:
        nm = 0
        t = m
        while t:
            b = t & -t
            nm |= 1 << remap[b.bit_length() - 1]
            t ^= b
        masks.append(nm)
    if not masks:
        masks = [0]
    return Complex(tuple(c.labels[i] for i in positions), sorted(masks))


def boundary_complex(c: Complex, p, verdict: ManifoldVerdict | None = None) -> BoundaryComplex:
    """The boundary subcomplex, computed two ways that must agree.

    Route one: faces whose links have ball homology.  Route two: the span of
    the (d-1)-faces lying in exactly one facet.  A mismatch raises
    CrossCheckMismatchError.  For closed manifolds the boundary is {∅} with
    zero components.
    """
    pp = _prime_of(p)
    if verdict is None:
        verdict = check_manifold(c, pp)
    if not verdict.is_manifold:
        raise InvalidParameterError(f"no boundary for status {verdict.status}")
    if verdict.dimension == -1:
        return BoundaryComplex(cx.from_facets((), [()]), 0)
    d = c.dimension
    classes, _ = _face_classes(c, pp)
    ball_faces = {f for f, cls in classes.items() if cls == _BOUNDARY}
    ridge_faces = set()
    by_size = c.faces_by_size()
    for ridge in by_size.get(d, []):
        count = sum(1 for f in c.facet_masks if f & ridge == ridge)
        if count == 1:
            ridge_faces.add(ridge)
    spanned = set()
    for r in ridge_faces:
        stack = [r]
        while stack:
            f = stack.pop()
            if f and f not in spanned:
                spanned.add(f)
                m = f
                while m:
                    b = m & -m
                    stack.append(f ^ b)
                    m ^= b
    if spanned != ball_faces:
        raise CrossCheckMismatchError(
            "link-homology boundary disagrees with facet-count boundary"
        )
    if not ball_faces:
        return BoundaryComplex(cx.from_facets((), [()]), 0)
    bd = _span(c, ball_faces)
    if bd.dimension == 0:
        comps = bd.vertex_count
    else:
        skel = cx.one_skeleton(bd)
        groups, isolated = graphs_mod.connected_components(skel)
        comps = len(groups) + len(isolated)
    return BoundaryComplex(bd, comps)


# ---------------------------------------------------------------------------
# classification


def classify(c: Complex, verdict: ManifoldVerdict | None = None, p_pair=(2, 3)) -> ManifoldClass:
    """Name the manifold type from Betti data at two primes.

    Closed surfaces separate into the sphere and the torus; surfaces with
    boundary into the disk, annulus, Moebius strip and punctured torus by
    (first Betti number, boundary component count).  A Ball label requires
    trivial homology *and* a sphere boundary; anything off the table comes
    back OtherSurface / OtherManifold.
    """
    p1, p2 = (_prime_of(q) for q in p_pair)
    if verdict is None:
        verdict = check_manifold(c, p1)
    if not verdict.is_manifold:
        return NOT_MANIFOLD_CLASS
    d = verdict.dimension
    b1 = betti_reduced(c, p1)
    b2 = betti_reduced(c, p2)
    if verdict.status == STATUS_CLOSED:
        if b1.is_sphere(d) and b2.is_sphere(d):
            return ManifoldClass("Sphere", d)
        if d == 0 and b1.is_ball() and b2.is_ball():
            # a single point: the 0-ball
            return ManifoldClass("Ball", 0)
        if d == 2:
            if b1.b(1) == 2 == b2.b(1) and b1.b(2) == 1 == b2.b(2):
                return ManifoldClass("Torus")
            return ManifoldClass("OtherSurface")
        return ManifoldClass("OtherManifold")
    bd = boundary_complex(c, p1, verdict)
    if b1.is_ball() and b2.is_ball():
        sphere_bd = betti_reduced(bd.complex, p1).is_sphere(d - 1) and \
            betti_reduced(bd.complex, p2).is_sphere(d - 1)
        if sphere_bd:
            return ManifoldClass("Ball", d)
    if d == 2:
        fingerprint = (b1.b(1), b2.b(1), bd.component_count)
        if fingerprint == (1, 1, 1):
            return ManifoldClass("MoebiusStrip")
        if fingerprint == (1, 1, 2):
            return ManifoldClass("Annulus")
        if fingerprint == (2, 2, 1):
            return ManifoldClass("TorusMinusDisk")
        return ManifoldClass("OtherSurface")
    return ManifoldClass("OtherManifold")


def manifold_report(c: Complex, p_pair=(2, 3)) -> dict:
    """One-stop JSON-ready summary for a complex."""
    p1, p2 = (_prime_of(q) for q in p_pair)
    verdict = check_manifold(c, p1)
    out = {
        "status": verdict.status,
        "dimension": verdict.dimension,
        "p": verdict.p,
        "witness_face": list(verdict.witness_face) if verdict.witness_face else None,
        "witness_betti": verdict.witness_betti.to_list() if verdict.witness_betti else None,
    }
    if c.is_void:
        out["class"] = str(NOT_MANIFOLD_CLASS)
        return out
    fv = cx.f_vector(c)
    out["f_vector"] = list(fv.positive)
    out["euler_characteristic"] = fv.euler_characteristic()
    b1 = betti_reduced(c, p1)
    b2 = betti_reduced(c, p2)
    out["betti"] = [
        {"p": p1, "betti": b1.to_list()},
        {"p": p2, "betti": b2.to_list()},
    ]
    if verdict.is_manifold:
        bd = boundary_complex(c, p1, verdict)
        out["boundary_components"] = bd.component_count
        out["acyclic"] = b1.is_ball() and b2.is_ball()
        if verdict.status == STATUS_WITH_BOUNDARY:
            out["boundary_is_sphere"] = (
                betti_reduced(bd.complex, p1).is_sphere(verdict.dimension - 1)
                and betti_reduced(bd.complex, p2).is_sphere(verdict.dimension - 1)
            )
        cross = check_manifold(c, p2)
        out["cross_check_status"] = cross.status
    else:
        out["boundary_components"] = None
    out["class"] = str(classify(c, verdict, (p1, p2)))
    return out


def clear_caches():
    _class_cache.clear()
