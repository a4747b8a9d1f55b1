"""Pants decompositions and the two elementary move flavours.

A pants decomposition is 3g-3 disjoint, pairwise non-parallel essential
curves cutting the surface into pairs of pants.  An elementary move
replaces one curve by another compatible curve; in the pants flavour the
replacement must meet the old curve minimally (once in a one-holed torus
complement, twice in a four-holed sphere).  Move enumeration is bounded by
a twist budget and is deterministic: families are nested as the budget
grows and results are sorted by canonical key.
"""

from __future__ import annotations

import hashlib
import json
from enum import Enum

from pantsdist import _kernel as K
from pantsdist.surface_model import (
    CurveClass,
    NormalMulticurve,
    dehn_twist,
    geometric_intersection,
    multicurve_union,
)


class PantsError(ValueError):
    """Invalid pants decomposition; .reason is one of 'count',
    'intersecting', 'parallel', 'complement'."""

    def __init__(self, reason, message):
        super().__init__(message)
        self.reason = reason


class HandleType(Enum):
    FOUR_HOLED_SPHERE = "four_holed_sphere"
    ONCE_PUNCTURED_TORUS = "once_punctured_torus"


class PantsDecomposition:
    """3g-3 disjoint, pairwise non-parallel curves with pants complement.

    Curves are stored sorted by canonical key, so equal decompositions have
    equal curve tuples.
    """

    __slots__ = ("surface", "curves", "_key")

    def __init__(self, surface, curves, _validated=False):
        if not _validated:
            validated = validate_pants(surface, curves)
            curves = validated.curves
        self.surface = surface
        self.curves = tuple(curves)
        self._key = None

    @property
    def genus(self):
        return self.surface.genus

    def key(self):
        if self._key is None:
            payload = json.dumps(
                {
                    "genus": self.genus,
                    "curves": [list(c.weights) for c in self.curves],
                },
                sort_keys=True,
                separators=(",", ":"),
            )
            self._key = hashlib.sha256(payload.encode("ascii")).hexdigest()
        return self._key

    def __eq__(self, other):
        return (
            isinstance(other, PantsDecomposition)
            and self.surface is other.surface
            and self.curves == other.curves
        )

    def __hash__(self):
        return hash(("PantsDecomposition", self.genus) + tuple(
            c.weights for c in self.curves
        ))

    def __repr__(self):
        return "PantsDecomposition(genus=%d, key=%s)" % (self.genus, self.key()[:12])

    def union(self):
        return multicurve_union(self.surface, self.curves)

    def replace(self, i, new_curve):
        curves = list(self.curves)
        curves[i] = new_curve
        return validate_pants(self.surface, curves)

    def curve_set(self):
        return frozenset(c.weights for c in self.curves)

    def to_json(self):
        return {
            "genus": self.genus,
            "curves": [list(c.weights) for c in self.curves],
        }

    @classmethod
    def from_json(cls, data, surface=None):
        from pantsdist.surface_model import build_surface

        surface = surface or build_surface(int(data["genus"]))
        curves = [CurveClass(surface, w) for w in data["curves"]]
        return validate_pants(surface, curves)


def validate_pants(surface, curves):
    """Check the pants-decomposition invariants, reporting the first
    violation distinctly (count, intersecting, parallel, complement)."""
    curves = list(curves)
    need = 3 * surface.genus - 3
    if len(curves) != need:
        raise PantsError(
            "count", "expected %d curves, got %d" % (need, len(curves))
        )
    for c in curves:
        if not isinstance(c, CurveClass) or c.surface is not surface:
            raise PantsError("count", "curves must be CurveClass on this surface")
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            if curves[i] == curves[j]:
                raise PantsError(
                    "parallel", "curves %d and %d are parallel" % (i, j)
                )
            if geometric_intersection(surface, curves[i], curves[j]) != 0:
                raise PantsError(
                    "intersecting", "curves %d and %d intersect" % (i, j)
                )
    union = multicurve_union(surface, curves)
    regs = surface.traced(union.weights).regions
    pieces = sorted((r["genus"], r["boundary"]) for r in regs["regions"])
    if pieces != [(0, 3)] * (2 * surface.genus - 2):
        raise PantsError(
            "complement", "complement pieces are %s, not all pants" % pieces
        )
    ordered = sorted(curves, key=lambda c: c.weights)
    return PantsDecomposition(surface, ordered, _validated=True)


def canonical_key(L):
    """Stable hex digest; equal exactly for equal curve sets."""
    return L.key()


def _component_index_map(L):
    """Map each decomposition curve to its traced-component index in the
    union multicurve."""
    union = L.union()
    entry = L.surface.traced(union.weights)
    comps, regs = entry.components, entry.regions
    word_to_comp = {}
    for idx, comp in enumerate(comps):
        word_to_comp[K.canon_cyclic(comp["letters"])] = idx
    out = []
    for c in L.curves:
        out.append(word_to_comp[c.component_words[0]])
    return out, comps, regs


def handle_type(L, i):
    """Type of the complement component of L minus its i-th curve that
    contains that curve."""
    if not 0 <= i < len(L.curves):
        raise IndexError("curve index %d out of range" % i)
    cmap, _, regs = _component_index_map(L)
    left, right = regs["component_sides"][cmap[i]]
    if left == right:
        return HandleType.ONCE_PUNCTURED_TORUS
    return HandleType.FOUR_HOLED_SPHERE


def _piece_cuffs(L, i):
    """Indices of the curves adjacent to the complement piece of
    L minus curve i (the cuffs of the four-holed sphere or one-holed
    torus), excluding i itself."""
    cmap, _, regs = _component_index_map(L)
    sides = regs["component_sides"]
    piece_regions = set(sides[cmap[i]])
    cuffs = []
    for j in range(len(L.curves)):
        if j == i:
            continue
        lj, rj = sides[cmap[j]]
        if lj in piece_regions or rj in piece_regions:
            cuffs.append(j)
    return cuffs


def _seed_candidates(L, i):
    """Candidate replacement curves for slot i, found as short cycles in
    the complement fragment graph crossing curve i the minimal number of
    times (once for a one-holed torus piece, twice for a four-holed
    sphere).  Candidates are verified later; this only generates."""
    surface = L.surface
    union = L.union()
    cmap, comps, _ = _component_index_map(L)
    gap_moves, arc_moves = K.fragment_graph(
        surface.genus, list(union.weights), comps, surface.tables
    )

    adj = {}
    for fa, fb, letter in gap_moves:
        adj.setdefault(fa, []).append((fb, letter))
        adj.setdefault(fb, []).append((fa, -letter))
    for f in adj:
        adj[f].sort(key=lambda x: (repr(x[0]), x[1]))

    from collections import deque

    def tree_paths(src):
        prev = {src: None}
        q = deque([src])
        while q:
            f = q.popleft()
            for f2, letter in adj.get(f, []):
                if f2 not in prev:
                    prev[f2] = (f, letter)
                    q.append(f2)
        return prev

    trees = {}

    def tree(src):
        if src not in trees:
            trees[src] = tree_paths(src)
        return trees[src]

    def read_to(prev, f):
        path = []
        while prev[f] is not None:
            f0, letter = prev[f]
            path.append(letter)
            f = f0
        return list(reversed(path))

    def paths_between(src, dst):
        """The shortest path, plus one path through every directed gap
        move (shortest to its tail, the move, shortest from its head);
        this reaches every single-winding route around a cuff."""
        fwd = tree(src)
        if dst not in fwd:
            return
        back = tree(dst)
        yield read_to(fwd, dst)
        for (fa, fb, letter) in gap_moves:
            for (u, v, lt) in ((fa, fb, letter), (fb, fa, -letter)):
                if u in fwd and v in back:
                    from_v = [-x for x in reversed(read_to(back, v))]
                    yield read_to(fwd, u) + [lt] + from_v

    target = cmap[i]
    arcs = arc_moves[target]
    words = []
    # one crossing: from the right side of an arc back to its left side
    for (fl, fr) in arcs:
        for p in paths_between(fr, fl):
            words.append(p)
    # two crossings through a pair of arcs, in opposite directions: walk
    # the right-side region from arc x to arc y, cross, walk the left-side
    # region back; vary the winding on one side at a time
    for x in range(len(arcs)):
        for y in range(len(arcs)):
            if x == y:
                continue
            it1 = list(paths_between(arcs[x][1], arcs[y][1]))
            it2 = list(paths_between(arcs[y][0], arcs[x][0]))
            if not it1 or not it2:
                continue
            for p1 in it1:
                words.append(p1 + it2[0])
            for p2 in it2[1:]:
                words.append(it1[0] + p2)
    out = []
    seen = set()
    for w in words:
        cw = K.canon_cyclic([x for x in w if x != 0])
        if not cw or cw in seen:
            continue
        seen.add(cw)
        out.append(cw)
    out.sort(key=lambda cw: (len(cw), cw))
    return out[:400]


def _replacement_ok(L, i, cand, required=None):
    """Is cand a valid replacement for curve i (optionally with a required
    intersection number with the old curve)?"""
    surface = L.surface
    old = L.curves[i]
    if cand == old:
        return False
    n = geometric_intersection(surface, cand, old)
    if n == 0 or (required is not None and n != required):
        return False
    for j, c in enumerate(L.curves):
        if j == i:
            continue
        if cand == c or geometric_intersection(surface, cand, c) != 0:
            return False
    try:
        L.replace(i, cand)
    except PantsError:
        return False
    return True


_move_cache = {}
_seed_cache = {}


def _verified_seeds(L, i):
    """Verified seed replacements for slot i, cheapest first."""
    cache_key = (L.key(), i)
    hit = _seed_cache.get(cache_key)
    if hit is not None:
        return hit
    surface = L.surface
    old = L.curves[i]
    htype = handle_type(L, i)
    minimal = 1 if htype == HandleType.ONCE_PUNCTURED_TORUS else 2
    seeds = []
    have_minimal = False
    for cw in _seed_candidates(L, i):
        try:
            cand = CurveClass._from_crossing_word(surface, list(cw))
        except ValueError:
            continue
        if not _replacement_ok(L, i, cand):
            continue
        seeds.append(cand)
        if geometric_intersection(surface, cand, old) == minimal:
            have_minimal = True
        if have_minimal and len(seeds) >= 6:
            break
    seeds.sort(
        key=lambda c: (
            geometric_intersection(surface, c, old),
            sum(c.weights),
            c.weights,
        )
    )
    if not have_minimal:
        raise PantsError(
            "complement",
            "no minimal replacement found for slot %d (searched %d seeds)"
            % (i, len(seeds)),
        )
    if len(_seed_cache) > 8192:
        _seed_cache.clear()
    _seed_cache[cache_key] = seeds
    return seeds


def _move_family(L, i, twist_bound):
    """All enumerated replacement curves for slot i within the twist
    budget: the seed replacements, their images under twists along the
    removed curve and along the piece's cuffs with exponent magnitude up
    to the budget, and (for the dual flavour's sake) the twist images of
    the removed curve along the seed directions.  Sorted by weights."""
    if not 0 <= i < len(L.curves):
        raise IndexError("curve index %d out of range" % i)
    cache_key = (L.key(), i, twist_bound)
    hit = _move_cache.get(cache_key)
    if hit is not None:
        return hit
    surface = L.surface
    g = surface.genus
    old = L.curves[i]
    seeds = _verified_seeds(L, i)

    old_word = old.crossing_word
    twist_words = [old_word] + [
        L.curves[j].crossing_word for j in _piece_cuffs(L, i)
    ]
    cand_words = set()
    for seed in seeds:
        dw = seed.crossing_word
        cand_words.add(dw)
        for tw in twist_words:
            for s in range(1, twist_bound + 1):
                for sg in (1, -1):
                    cand_words.add(K.twist_word(g, list(tw), list(dw), sg * s))
    for seed in seeds[:3]:
        dw = seed.crossing_word
        for s in range(1, twist_bound + 1):
            for sg in (1, -1):
                cand_words.add(K.twist_word(g, list(dw), list(old_word), sg * s))

    out = []
    for cw in sorted(cand_words, key=lambda w: (len(w), w)):
        try:
            cand = CurveClass._from_crossing_word(surface, list(cw))
        except ValueError:
            continue
        if _replacement_ok(L, i, cand):
            out.append(cand)
    out.sort(key=lambda c: c.weights)
    _move_cache[cache_key] = out
    if len(_move_cache) > 8192:
        _move_cache.clear()
    return out


def pants_moves(L, i, twist_bound):
    """Pants-flavour replacements of curve i: the new curve meets the old
    minimally (once or twice by handle type).  Sorted by canonical key."""
    htype = handle_type(L, i)
    minimal = 1 if htype == HandleType.ONCE_PUNCTURED_TORUS else 2
    surface = L.surface
    out = []
    for cand in _move_family(L, i, twist_bound):
        if geometric_intersection(surface, cand, L.curves[i]) == minimal:
            out.append(L.replace(i, cand))
    out.sort(key=lambda d: d.key())
    return out


def dual_moves(L, i, twist_bound):
    """Dual-flavour replacements of curve i: any enumerated compatible
    curve, a superset of pants_moves at the same budget."""
    out = [L.replace(i, cand) for cand in _move_family(L, i, twist_bound)]
    out.sort(key=lambda d: d.key())
    return out


def nonseparating_subset(L):
    """g curves of L whose union does not separate the surface, extended
    greedily; certified by the cut having a single piece."""
    surface = L.surface
    chosen = []

    def connected(curves):
        union = multicurve_union(surface, curves)
        regs = surface.traced(union.weights).regions
        return len(regs["regions"]) == 1

    remaining = sorted(L.curves, key=lambda c: c.weights)
    while len(chosen) < surface.genus:
        for c in remaining:
            if connected(chosen + [c]):
                chosen.append(c)
                remaining.remove(c)
                break
        else:
            raise AssertionError("non-separating extension must exist")
    return chosen
