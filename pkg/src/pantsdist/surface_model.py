"""Combinatorial model of a closed orientable surface of genus g >= 2.

The surface carries a fixed one-vertex triangulation (the fan of the
standard 4g-gon with identification [a1,b1]...[ag,bg]) and the standard
marking curves.  Multicurves are stored in normal coordinates: a vector of
non-negative edge weights, one per triangulation edge, which is a complete
isotopy invariant relative to the triangulation vertex.  All values here
are immutable and all operations are pure functions.
"""

from __future__ import annotations

from pantsdist import _kernel as K

#: hard cap on any word manipulated by this module; exceeded = loud error
WORD_LENGTH_CAP = 10**6


class CyclicWord:
    """A cyclically reduced word in the marking generators a1,b1,...,ag,bg.

    Letters are nonzero ints: a_i = 2i-1, b_i = 2i, negatives for inverses.
    Values are canonical: the lexicographically least rotation among the
    word and its inverse, under the alphabet order a1 < A1 < b1 < B1 < ...
    """

    __slots__ = ("letters",)

    def __init__(self, letters, _canonical=False):
        letters = list(letters)
        if len(letters) > WORD_LENGTH_CAP:
            raise ValueError("word exceeds the %d letter cap" % WORD_LENGTH_CAP)
        if not _canonical:
            letters = _canon_marking_word(letters)
        self.letters = tuple(letters)

    def __eq__(self, other):
        return isinstance(other, CyclicWord) and self.letters == other.letters

    def __hash__(self):
        return hash(("CyclicWord", self.letters))

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __repr__(self):
        return "CyclicWord(%s)" % (str(self) or "1")

    def __str__(self):
        return " ".join(letter_name(x) for x in self.letters)


def letter_name(x):
    i = (abs(x) + 1) // 2
    name = ("a%d" if abs(x) % 2 == 1 else "b%d") % i
    return name.upper() if x < 0 else name


def _letter_key(x):
    return (abs(x), 0 if x > 0 else 1)


def _canon_marking_word(word):
    w = K.cyclic_reduce(list(word))
    if not w:
        return []
    best = None
    for cand in (w, K.inverse_word(w)):
        n = len(cand)
        doubled = cand + cand
        for s in range(n):
            rot = doubled[s:s + n]
            key = [_letter_key(x) for x in rot]
            if best is None or key < best[0]:
                best = (key, rot)
    return best[1]


class Surface:
    """The canonical triangulated genus-g surface with standard marking.

    Attributes: genus, edge and triangle counts, the marking curves as a
    dict {"a1": CurveClass, ...} and the surface relation word.
    """

    _instances = {}

    def __new__(cls, genus):
        if genus < 2:
            raise ValueError("genus must be at least 2, got %d" % genus)
        if genus in cls._instances:
            return cls._instances[genus]
        self = super().__new__(cls)
        self.genus = genus
        self.num_edges = 6 * genus - 3
        self.num_triangles = 4 * genus - 2
        self.tables = K.triangle_tables(genus)
        self._trace_cache = {}
        self._isect_cache = {}
        self.relation = CyclicWord(K.surface_relator(genus))
        self._peripheral = None
        marking = {}
        for i in range(1, genus + 1):
            marking["a%d" % i] = CurveClass._from_crossing_word(self, [2 * i])
            marking["b%d" % i] = CurveClass._from_crossing_word(self, [2 * i - 1])
        self.marking = marking
        cls._instances[genus] = self
        return self

    def __repr__(self):
        return "Surface(genus=%d)" % self.genus

    def __eq__(self, other):
        return isinstance(other, Surface) and self.genus == other.genus

    def __hash__(self):
        return hash(("Surface", self.genus))

    # -- internal ---------------------------------------------------------

    def peripheral_word(self):
        """Canonical crossing word of the vertex-linking curve."""
        if self._peripheral is None:
            comps = K.trace(self.genus, [2] * self.num_edges, self.tables)
            if len(comps) != 1:
                raise AssertionError("vertex link mistraced")
            self._peripheral = K.canon_cyclic(comps[0]["letters"])
        return self._peripheral

    def traced(self, weights):
        """Cached (components, regions) for a weight vector; the region
        analysis is computed on first use."""
        weights = tuple(weights)
        hit = self._trace_cache.get(weights)
        if hit is None:
            comps = K.trace(self.genus, list(weights), self.tables)
            hit = _TraceEntry(self, weights, comps)
            if len(self._trace_cache) > 40000:
                self._trace_cache.clear()
            self._trace_cache[weights] = hit
        return hit

    def intersection_of_words(self, u, w):
        key = (u, w) if u <= w else (w, u)
        hit = self._isect_cache.get(key)
        if hit is None:
            hit = K.intersection_words(self.genus, list(key[0]), list(key[1]))
            if len(self._isect_cache) > 200000:
                self._isect_cache.clear()
            self._isect_cache[key] = hit
        return hit


class _TraceEntry:
    """Cached trace of a weight vector; regions on demand."""

    __slots__ = ("_surface", "_weights", "components", "_regions")

    def __init__(self, surface, weights, components):
        self._surface = surface
        self._weights = weights
        self.components = components
        self._regions = None

    @property
    def regions(self):
        if self._regions is None:
            self._regions = K.regions(
                self._surface.genus,
                list(self._weights),
                self.components,
                self._surface.tables,
            )
        return self._regions

    def __iter__(self):
        return iter((self.components, self.regions))


def build_surface(genus):
    """The canonical triangulated surface of the given genus (>= 2)."""
    return Surface(genus)


class NormalMulticurve:
    """Isotopy class of a disjoint union of essential simple closed curves,
    as integer edge weights on the fixed triangulation.

    Two values are equal exactly when the multicurves are isotopic (rel the
    triangulation vertex); no component is vertex-linking.
    """

    __slots__ = ("surface", "weights", "component_words")

    def __init__(self, surface, weights):
        weights = tuple(int(w) for w in weights)
        if len(weights) != surface.num_edges:
            raise ValueError(
                "expected %d weights, got %d" % (surface.num_edges, len(weights))
            )
        if any(w < 0 for w in weights):
            raise ValueError("weights must be non-negative")
        comps = surface.traced(weights).components
        words = []
        for comp in comps:
            w = K.canon_cyclic(comp["letters"])
            if not w:
                raise ValueError("multicurve has a trivial component")
            if w == surface.peripheral_word():
                raise ValueError("multicurve has a vertex-linking component")
            words.append(w)
        self.surface = surface
        self.weights = weights
        self.component_words = tuple(sorted(words))

    @classmethod
    def from_crossing_words(cls, surface, words):
        """Build from crossing words; the words must describe disjointly
        embeddable curves (verified by the tracing round trip)."""
        words = [K.canon_cyclic(w) for w in words]
        weights = K.words_to_weights(surface.genus, [list(w) for w in words])
        m = cls(surface, weights)
        if sorted(m.component_words) != sorted(words):
            raise ValueError("crossing words are not a disjoint embedded system")
        return m

    @property
    def genus(self):
        return self.surface.genus

    def __eq__(self, other):
        return (
            isinstance(other, NormalMulticurve)
            and self.surface is other.surface
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash(("NormalMulticurve", self.surface.genus, self.weights))

    def __repr__(self):
        return "NormalMulticurve(genus=%d, weights=%s)" % (
            self.genus,
            list(self.weights),
        )

    def is_empty(self):
        return not self.component_words

    def num_components(self):
        return len(self.component_words)

    def to_json(self):
        return {"genus": self.genus, "weights": list(self.weights)}

    @classmethod
    def from_json(cls, data):
        surface = build_surface(int(data["genus"]))
        return cls(surface, data["weights"])


class CurveClass(NormalMulticurve):
    """A connected essential simple closed curve class."""

    __slots__ = ()

    def __init__(self, surface, weights):
        super().__init__(surface, weights)
        if len(self.component_words) != 1:
            raise ValueError(
                "expected a connected curve, got %d components"
                % len(self.component_words)
            )

    @classmethod
    def _from_crossing_word(cls, surface, word):
        word = K.canon_cyclic(word)
        if K.self_crossings(surface.genus, list(word)) != 0:
            raise ValueError("crossing word is not embeddable")
        weights = K.words_to_weights(surface.genus, [list(word)])
        return cls(surface, weights)

    @property
    def crossing_word(self):
        return self.component_words[0]


def is_admissible(surface, weights):
    """True iff the vector satisfies the normal matching conditions and
    carries no vertex-linking (or trivial) component."""
    weights = list(weights)
    if len(weights) != surface.num_edges:
        raise ValueError(
            "expected %d weights, got %d" % (surface.num_edges, len(weights))
        )
    if any(int(w) != w or w < 0 for w in weights):
        return False
    try:
        NormalMulticurve(surface, weights)
    except ValueError:
        return False
    return True


def trace_components(surface, m):
    """Connected components of a multicurve, as CurveClass values."""
    out = []
    for word in m.component_words:
        out.append(CurveClass._from_crossing_word(surface, list(word)))
    return out


def geometric_intersection(surface, c, d):
    """Minimal number of transverse intersection points between (multi)
    curves c and d; symmetric, and zero iff they admit disjoint
    representatives."""
    if c.surface is not surface or d.surface is not surface:
        raise ValueError("curves live on a different surface")
    total = 0
    for u in c.component_words:
        for w in d.component_words:
            total += surface.intersection_of_words(u, w)
    return total


def dehn_twist(surface, t, target, k):
    """Image of `target` under the k-th power of the Dehn twist along t.

    Positive k is the right-handed twist (the convention is fixed by
    homology_class(dehn_twist(b1, a1, 1)) = a1 + b1); negative k twists the
    other way.
    """
    if not isinstance(t, CurveClass):
        raise ValueError("the twisting curve must be a CurveClass")
    if k == 0 or target.is_empty():
        return target
    words = [
        K.twist_word(surface.genus, list(t.crossing_word), list(w), k)
        for w in target.component_words
    ]
    result = NormalMulticurve.from_crossing_words(surface, words)
    if isinstance(target, CurveClass):
        return CurveClass(surface, result.weights)
    return result


def cut_along(surface, m):
    """(genus, boundary_count) descriptors of the surface cut along m,
    sorted; the empty multicurve yields the surface itself."""
    if m.is_empty():
        return [(surface.genus, 0)]
    regs = surface.traced(m.weights).regions
    return sorted((r["genus"], r["boundary"]) for r in regs["regions"])


def is_separating(surface, c):
    """True iff cutting along the curve disconnects the surface."""
    regs = surface.traced(c.weights).regions
    return len(regs["regions"]) == 2


def curve_word(surface, c):
    """Free-homotopy class of the curve in the marking generators, as a
    canonical CyclicWord (shortest in its class; defined up to rotation,
    inversion and the surface relation)."""
    comps = surface.traced(c.weights).components
    if len(comps) != 1:
        raise ValueError("curve_word requires a connected curve")
    raw = K.component_pi1_word(surface.genus, comps[0], surface.tables)
    if len(raw) > WORD_LENGTH_CAP:
        raise ValueError("word exceeds the %d letter cap" % WORD_LENGTH_CAP)
    return CyclicWord(K.dehn_reduce_cyclic(surface.genus, raw))


def homology_class(surface, c):
    """Exponent-sum vector of curve_word(c) in the basis a1,b1,...,ag,bg."""
    vec = [0] * (2 * surface.genus)
    for x in curve_word(surface, c):
        vec[abs(x) - 1] += 1 if x > 0 else -1
    return tuple(vec)


def multicurve_union(surface, parts):
    """The disjoint union of pairwise-disjoint multicurves (weight sum)."""
    weights = [0] * surface.num_edges
    for p in parts:
        for i, w in enumerate(p.weights):
            weights[i] += w
    return NormalMulticurve(surface, weights)
