"""Heegaard diagrams of closed orientable 3-manifolds.

A diagram is the surface together with two handlebody markings and one
stored defining pants decomposition per side.  Constructors cover the
standard genus-g splitting of S^3, genus-2 lens space diagrams L(p,1),
the standard diagrams of connected sums of S^1 x S^2, stabilization,
connected sums, and Dehn surgery along designated meridians of the second
handlebody.  Homology invariant factors are computed from the seeds for
validation.
"""

from __future__ import annotations

from pantsdist import _kernel as K
from pantsdist.handlebody import (
    ALPHA,
    BETA,
    HandlebodyMarking,
    bounds_disk,
    defines_handlebody,
    standard_side,
)
from pantsdist.pants import (
    HandleType,
    PantsDecomposition,
    PantsError,
    handle_type,
    validate_pants,
)
from pantsdist.search import DUAL, PANTS, MovePath, verify_between
from pantsdist.snf import invariant_factors
from pantsdist.surface_model import (
    CurveClass,
    build_surface,
    curve_word,
    dehn_twist,
    geometric_intersection,
    multicurve_union,
)


class ManifoldProfile:
    """Caller-asserted manifold data: b is the total boundary genus (always
    0 for this engine), n the number of S^1 x S^2 prime summands, and the
    two flags assert (strong) irreducibility of the *splitting* for the
    conditional lower bounds."""

    __slots__ = ("b", "n", "irreducible", "strongly_irreducible")

    def __init__(self, b=0, n=0, irreducible=False, strongly_irreducible=False):
        if b != 0:
            raise ValueError("only closed manifolds are representable (b = 0)")
        if n < 0:
            raise ValueError("n must be non-negative")
        if strongly_irreducible and not irreducible:
            raise ValueError("strongly irreducible implies irreducible")
        self.b = b
        self.n = n
        self.irreducible = irreducible
        self.strongly_irreducible = strongly_irreducible

    def __eq__(self, other):
        return isinstance(other, ManifoldProfile) and self.to_json() == other.to_json()

    def __repr__(self):
        return "ManifoldProfile(b=%d, n=%d, irreducible=%s, strongly_irreducible=%s)" % (
            self.b,
            self.n,
            self.irreducible,
            self.strongly_irreducible,
        )

    def to_json(self):
        return {
            "b": self.b,
            "n": self.n,
            "irreducible": self.irreducible,
            "strongly_irreducible": self.strongly_irreducible,
        }

    @classmethod
    def from_json(cls, data):
        return cls(
            b=int(data.get("b", 0)),
            n=int(data.get("n", 0)),
            irreducible=bool(data.get("irreducible", False)),
            strongly_irreducible=bool(data.get("strongly_irreducible", False)),
        )


class HeegaardDiagram:
    """Surface, two handlebody markings, and one defining seed per side."""

    def __init__(self, surface, side1, side2, seed1, seed2, profile, provenance):
        if surface.genus < 2:
            raise ValueError("diagram genus must be at least 2")
        if not defines_handlebody(seed1, side1):
            raise ValueError("seed1 does not define side1")
        if not defines_handlebody(seed2, side2):
            raise ValueError("seed2 does not define side2")
        self.surface = surface
        self.side1 = side1
        self.side2 = side2
        self.seed1 = seed1
        self.seed2 = seed2
        self.profile = profile
        self.provenance = dict(provenance)
        # populated by stabilize() for certificate transport
        self.new_handle_boundary = None
        self.new_disk_curves = None

    @property
    def genus(self):
        return self.surface.genus

    def __repr__(self):
        return "HeegaardDiagram(genus=%d, provenance=%r)" % (
            self.genus,
            self.provenance.get("kind"),
        )

    def to_json(self):
        return {
            "genus": self.genus,
            "side1": self.side1.to_json(),
            "side2": self.side2.to_json(),
            "seed1": self.seed1.to_json(),
            "seed2": self.seed2.to_json(),
            "profile": self.profile.to_json(),
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, data):
        surface = build_surface(int(data["genus"]))
        return cls(
            surface,
            HandlebodyMarking.from_json(data["side1"]),
            HandlebodyMarking.from_json(data["side2"]),
            PantsDecomposition.from_json(data["seed1"], surface),
            PantsDecomposition.from_json(data["seed2"], surface),
            ManifoldProfile.from_json(data["profile"]),
            data.get("provenance", {}),
        )


# ---------------------------------------------------------------------------
# standard curve families
# ---------------------------------------------------------------------------


def handle_boundary_curve(surface, i):
    """Boundary of a neighbourhood of the (a_i, b_i) handle."""
    a, b = 2 * i, 2 * i - 1
    return CurveClass._from_crossing_word(surface, [a, b, -a, -b])


_block_cache = {}


def block_boundary_curve(surface, j):
    """Boundary separating handles 1..j from the rest: the iterated band
    sum of the single-handle boundaries, realized by searching short
    conjugators and verifying the separation pattern."""
    g = surface.genus
    if not 1 <= j <= g - 1:
        raise ValueError("block index out of range")
    key = (g, j)
    hit = _block_cache.get(key)
    if hit is not None:
        return hit
    if j == 1:
        out = handle_boundary_curve(surface, 1)
        _block_cache[key] = out
        return out
    prev = block_boundary_curve(surface, j - 1)
    nxt = handle_boundary_curve(surface, j)
    from pantsdist.surface_model import cut_along

    letters = [0] + [s * l for l in range(1, 2 * g + 1) for s in (1, -1)]
    for c1 in letters:
        for c2 in letters:
            gamma = [x for x in (c1, c2) if x]
            word = (
                list(prev.crossing_word)
                + gamma
                + list(nxt.crossing_word)
                + [-x for x in reversed(gamma)]
            )
            try:
                cand = CurveClass._from_crossing_word(surface, word)
            except ValueError:
                continue
            pieces = cut_along(surface, cand)
            if sorted(pieces) == sorted([(j, 1), (g - j, 1)]):
                _block_cache[key] = cand
                return cand
    raise AssertionError("no embedded block boundary found for j=%d" % j)


def standard_pants(surface, which):
    """The standard defining decomposition for the alpha or beta side."""
    g = surface.genus
    key = "a%d" if which == ALPHA else "b%d"
    curves = [surface.marking[key % i] for i in range(1, g + 1)]
    if g == 2:
        curves.append(handle_boundary_curve(surface, 1))
    else:
        curves.extend(handle_boundary_curve(surface, i) for i in range(1, g + 1))
        curves.extend(block_boundary_curve(surface, j) for j in range(2, g - 1))
    return validate_pants(surface, curves)


# ---------------------------------------------------------------------------
# completion of partial curve systems
# ---------------------------------------------------------------------------


def complement_cycles(surface, partial_curves):
    """Fundamental cycles of the complement of a disjoint curve system.

    Returns a list of reduced crossing words, one per non-tree edge of the
    fragment graph, each a loop based at its region's root fragment;
    cycles with equal group labels can be concatenated to produce every
    free-homotopy class supported in the complement."""
    union = multicurve_union(surface, partial_curves)
    comps = surface.traced(union.weights).components
    gap_moves, _ = K.fragment_graph(
        surface.genus, list(union.weights), comps, surface.tables
    )
    adj = {}
    for move_idx, (fa, fb, letter) in enumerate(gap_moves):
        adj.setdefault(fa, []).append((fb, letter, move_idx))
        adj.setdefault(fb, []).append((fa, -letter, move_idx))
    for f in adj:
        adj[f].sort(key=lambda x: (repr(x[0]), x[1], x[2]))

    from collections import deque

    parent = {}
    roots = {}
    used = set()
    for root in sorted(adj, key=repr):
        if root in parent:
            continue
        parent[root] = None
        roots[root] = root
        q = deque([root])
        while q:
            f = q.popleft()
            roots[f] = root
            for f2, letter, move_idx in adj[f]:
                if f2 not in parent:
                    parent[f2] = (f, letter)
                    used.add(move_idx)
                    q.append(f2)

    def to_root(f):
        path = []
        while parent[f] is not None:
            f0, letter = parent[f]
            path.append(-letter)
            f = f0
        return path  # letters read from f to the root

    def from_root(f):
        return [-x for x in reversed(to_root(f))]

    cycles = []
    for idx, (fa, fb, letter) in enumerate(gap_moves):
        if idx in used or roots.get(fa) != roots.get(fb):
            continue
        word = K.reduce_word(
            [x for x in from_root(fa) + [letter] + to_root(fb) if x != 0]
        )
        cycles.append((roots[fa], word))
    return cycles


def completion_candidates(surface, partial_curves):
    """Candidate curves disjoint from a partial system, found as products
    of one or two fundamental cycles of the complement fragment graph.
    Ordered by word length, then word."""
    cycles = complement_cycles(surface, partial_curves)
    words = [w for _, w in cycles]
    for x in range(len(cycles)):
        for y in range(len(cycles)):
            if x == y:
                continue
            rx, wx = cycles[x]
            ry, wy = cycles[y]
            if rx != ry:
                continue
            words.append(wx + wy)
            words.append(wx + K.inverse_word(wy))

    seen = set()
    ordered = []
    for w in words:
        cw = K.canon_cyclic(w)
        if not cw or cw in seen:
            continue
        seen.add(cw)
        ordered.append(cw)
    ordered.sort(key=lambda cw: (len(cw), cw))

    out = []
    for cw in ordered:
        try:
            cand = CurveClass._from_crossing_word(surface, list(cw))
        except ValueError:
            continue
        if any(cand == c for c in partial_curves):
            continue
        if any(
            geometric_intersection(surface, cand, c) != 0 for c in partial_curves
        ):
            continue
        out.append(cand)
    return out


def complete_to_pants(surface, curves, must_bound=()):
    """Extend a disjoint partial system to a full pants decomposition; each
    added curve must bound a disk in every marking of must_bound."""
    need = 3 * surface.genus - 3
    curves = list(curves)

    def extend(cur):
        if len(cur) == need:
            try:
                return validate_pants(surface, cur)
            except PantsError:
                return None
        for cand in completion_candidates(surface, cur):
            if any(not bounds_disk(surface, cand, H) for H in must_bound):
                continue
            result = extend(cur + [cand])
            if result is not None:
                return result
        return None

    result = extend(curves)
    if result is None:
        raise PantsError(
            "complement", "partial curve system could not be completed"
        )
    return result


# ---------------------------------------------------------------------------
# diagram constructors
# ---------------------------------------------------------------------------


def standard_s3(g):
    """The genus-g diagram of the 3-sphere: alpha against beta."""
    if g < 2:
        raise ValueError("genus must be at least 2, got %d" % g)
    surface = build_surface(g)
    side1 = standard_side(surface, ALPHA)
    side2 = standard_side(surface, BETA)
    seed1 = standard_pants(surface, ALPHA)
    seed2 = standard_pants(surface, BETA)
    return HeegaardDiagram(
        surface,
        side1,
        side2,
        seed1,
        seed2,
        ManifoldProfile(b=0, n=0),
        {"kind": "standard_s3", "genus": g},
    )


def lens_diagram(p):
    """Genus-2 diagram of the lens space L(p,1): the first meridian of the
    second side is replaced by a slope meeting it once and winding p times."""
    if p < 2:
        raise ValueError("p must be at least 2, got %d" % p)
    surface = build_surface(2)
    side1 = standard_side(surface, ALPHA)
    a1, b1, b2 = surface.marking["a1"], surface.marking["b1"], surface.marking["b2"]
    slope = dehn_twist(surface, b1, a1, p)
    side2 = HandlebodyMarking(2, _slope_images(surface, standard_side(surface, BETA), b1, a1, slope))
    seed1 = standard_pants(surface, ALPHA)
    seed2 = validate_pants(surface, [slope, b2, handle_boundary_curve(surface, 1)])
    if not defines_handlebody(seed2, side2):
        raise AssertionError("lens seed does not define its side")
    return HeegaardDiagram(
        surface,
        side1,
        side2,
        seed1,
        seed2,
        ManifoldProfile(b=0, n=0),
        {"kind": "lens", "p": p},
    )


def _slope_images(surface, side, meridian, dual, new_curve):
    """Images for the re-marked side after replacing `meridian` (a marking
    curve with side-image 1) by `new_curve` = T_meridian^k(dual): the dual
    generator absorbs the winding so the new curve's word dies."""
    word = curve_word(surface, new_curve)
    m_gen = curve_word(surface, meridian).letters[0]
    d_gen = curve_word(surface, dual).letters[0]
    exps = {}
    for x in word:
        exps[abs(x)] = exps.get(abs(x), 0) + (1 if x > 0 else -1)
    u = exps.get(abs(d_gen), 0)
    v = exps.get(abs(m_gen), 0)
    if abs(u) != 1:
        raise ValueError("replacement is not a once-winding slope")
    e = u * v
    old = side.images[abs(d_gen) - 1]
    if len(old) != 1:
        raise ValueError("surgery handle is not standard on this side")
    y = old[0]
    images = [list(w) for w in side.images]
    images[abs(d_gen) - 1] = [-y] * e if e > 0 else [y] * (-e)
    images[abs(m_gen) - 1] = [y]
    return images


def s1s2_diagram(n_summands, g):
    """Standard genus-g diagram of the connected sum of g copies of
    S^1 x S^2: both sides are the alpha handlebody."""
    if n_summands != g or g < 2:
        raise ValueError("requires 2 <= n_summands = g")
    surface = build_surface(g)
    side = standard_side(surface, ALPHA)
    seed = standard_pants(surface, ALPHA)
    return HeegaardDiagram(
        surface,
        side,
        side,
        seed,
        seed,
        ManifoldProfile(b=0, n=n_summands),
        {"kind": "s1s2", "n": n_summands, "genus": g},
    )


def _extend_marking(side, old_g, kills_new):
    """Extend a rank-g marking to rank g+1; the new handle's a-curve dies
    when kills_new == 'a', else the b-curve."""
    images = [list(w) for w in side.images]
    if kills_new == "a":
        images.append([])
        images.append([old_g + 1])
    else:
        images.append([old_g + 1])
        images.append([])
    return HandlebodyMarking(old_g + 1, images)


def _reembed(big, curve):
    return CurveClass._from_crossing_word(big, list(curve.crossing_word))


def stabilize(d):
    """Stabilization: a trivial handle is added, with its two dual disk
    curves bounding on opposite sides; both seeds are extended so they
    remain defining, and the homology is unchanged."""
    g = d.genus
    big = build_surface(g + 1)
    side1 = _extend_marking(d.side1, g, "a")
    side2 = _extend_marking(d.side2, g, "b")
    handle_bdy = handle_boundary_curve(big, g + 1)
    a_new = big.marking["a%d" % (g + 1)]
    b_new = big.marking["b%d" % (g + 1)]
    seed1 = complete_to_pants(
        big,
        [_reembed(big, c) for c in d.seed1.curves] + [handle_bdy, a_new],
        must_bound=(side1,),
    )
    seed2 = complete_to_pants(
        big,
        [_reembed(big, c) for c in d.seed2.curves] + [handle_bdy, b_new],
        must_bound=(side2,),
    )
    out = HeegaardDiagram(
        big,
        side1,
        side2,
        seed1,
        seed2,
        d.profile,
        {"kind": "stabilize", "of": d.provenance},
    )
    out.new_handle_boundary = handle_bdy
    out.new_disk_curves = (a_new, b_new)
    return out


def _shift_word(word, offset_pairs):
    return [x + offset_pairs * 2 if x > 0 else x - offset_pairs * 2 for x in word]


def connect_sum(d1, d2):
    """Connected sum: block union of the markings, seeds joined across one
    separating curve (plus the two completion curves its pants need)."""
    g1, g2 = d1.genus, d2.genus
    big = build_surface(g1 + g2)

    def join_sides(s1, s2):
        images = [list(w) for w in s1.images]
        for w in s2.images:
            images.append([x + g1 if x > 0 else x - g1 for x in w])
        return HandlebodyMarking(g1 + g2, images)

    side1 = join_sides(d1.side1, d2.side1)
    side2 = join_sides(d1.side2, d2.side2)
    connector = block_boundary_curve(big, g1)

    def join_seeds(seedA, seedB, side):
        curves = [_reembed(big, c) for c in seedA.curves]
        for c in seedB.curves:
            curves.append(
                CurveClass._from_crossing_word(big, _shift_word(c.crossing_word, g1))
            )
        curves.append(connector)
        return complete_to_pants(big, curves, must_bound=(side,))

    seed1 = join_seeds(d1.seed1, d2.seed1, side1)
    seed2 = join_seeds(d1.seed2, d2.seed2, side2)
    return HeegaardDiagram(
        big,
        side1,
        side2,
        seed1,
        seed2,
        ManifoldProfile(b=0, n=d1.profile.n + d2.profile.n),
        {"kind": "connect_sum", "of": [d1.provenance, d2.provenance]},
    )


# ---------------------------------------------------------------------------
# Dehn surgery along meridians of the second handlebody
# ---------------------------------------------------------------------------


class SurgerySpec:
    """Components of a surgery link as meridians of the side-2 seed: each
    entry is (index into the seed decomposition, twist exponent)."""

    __slots__ = ("components",)

    def __init__(self, components):
        components = tuple((int(i), int(k)) for i, k in components)
        if len(set(i for i, _ in components)) != len(components):
            raise ValueError("designated curves must be pairwise distinct")
        self.components = components

    def __repr__(self):
        return "SurgerySpec(%r)" % (list(self.components),)

    def to_json(self):
        return {"components": [[i, k] for i, k in self.components]}

    @classmethod
    def from_json(cls, data):
        return cls([(i, k) for i, k in data["components"]])


def _marking_partner(surface, curve):
    """(meridian marking curve, dual marking curve) when `curve` is a
    marking curve, else None."""
    g = surface.genus
    for i in range(1, g + 1):
        if curve == surface.marking["a%d" % i]:
            return surface.marking["a%d" % i], surface.marking["b%d" % i]
        if curve == surface.marking["b%d" % i]:
            return surface.marking["b%d" % i], surface.marking["a%d" % i]
    return None


def surgery_path(d, spec):
    """Dehn surgery along the designated seed meridians.

    Step j replaces the j-th designated curve l_j by the slope curve
    T_{l_j}^{k_j}(dual), which meets l_j once and is disjoint from all
    other seed curves, so the steps form a move path from the old side-2
    seed to a decomposition defining the surgered side.  Returns the new
    diagram and the certificate path (pants flavour, since every slope
    meets its meridian once).
    """
    surface = d.surface
    seed = d.seed2
    for idx, _k in spec.components:
        if not 0 <= idx < len(seed.curves):
            raise ValueError("designated index %d out of range" % idx)
        if handle_type(seed, idx) != HandleType.ONCE_PUNCTURED_TORUS:
            raise ValueError(
                "designated curve %d does not lie in a once-punctured torus" % idx
            )
    steps = [seed]
    side2 = d.side2
    current = seed
    for idx, k in spec.components:
        meridian = seed.curves[idx]
        pair = _marking_partner(surface, meridian)
        if pair is None:
            raise ValueError(
                "designated curve %d is not a standard meridian handle" % idx
            )
        meridian, dual = pair
        if side2.apply_word(list(curve_word(surface, meridian).letters)):
            raise ValueError("designated curve does not bound on side 2")
        slope = dehn_twist(surface, meridian, dual, k)
        side2 = HandlebodyMarking(
            surface.genus, _slope_images(surface, side2, meridian, dual, slope)
        )
        slot = current.curves.index(seed.curves[idx])
        current = current.replace(slot, slope)
        steps.append(current)
    if not defines_handlebody(current, side2):
        raise AssertionError("surgered seed does not define the new side")
    out = HeegaardDiagram(
        surface,
        d.side1,
        side2,
        d.seed1,
        current,
        ManifoldProfile(b=0, n=0),
        {"kind": "surgery", "of": d.provenance, "spec": spec.to_json()},
    )
    path = MovePath(PANTS if len(spec.components) else DUAL, steps)
    if len(spec.components):
        okv, reason = verify_between(path, d.side2, side2)
        if not okv:
            raise AssertionError("surgery path fails verification: %s" % reason)
    return out, path


def h1_invariants(d):
    """Invariant factors of H_1 of the presented manifold: the rank-g free
    abelian group of side 1 modulo the abelianized side-1 images of the
    side-2 seed curves.  [] is the trivial group; 0 entries are free
    factors."""
    g = d.genus
    rows = []
    for c in d.seed2.curves:
        image = d.side1.apply_word(list(curve_word(d.surface, c).letters))
        row = [0] * g
        for x in image:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return invariant_factors(rows, g)
