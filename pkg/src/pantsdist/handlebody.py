"""Handlebody sides of a Heegaard splitting.

A handlebody glued to the surface is recorded by the induced surjection
from the surface group onto a free group of rank g: a curve bounds a disk
in the handlebody exactly when the image of its word freely reduces to the
empty word.  This makes the defining predicate of the search an exact and
fast computation.
"""

from __future__ import annotations

from pantsdist import _kernel as K
from pantsdist.surface_model import WORD_LENGTH_CAP, CyclicWord, curve_word, letter_name

#: free-group letters for the image side: x_i = i, capital for inverse
ALPHA = "alpha"
BETA = "beta"


def _free_letter_name(x):
    name = "x%d" % abs(x)
    return name.upper() if x < 0 else name


def _parse_free_word(text):
    out = []
    for tok in text.split():
        if not tok or tok[0] not in "xX":
            raise ValueError("bad free-group token %r" % tok)
        idx = int(tok[1:])
        out.append(idx if tok[0] == "x" else -idx)
    return out


class HandlebodyMarking:
    """Surjection from the surface group onto the rank-g free group, given
    by the images of the marking generators a1,b1,...,ag,bg.

    Invariants: the surface relation maps to the identity, and the images
    generate (guaranteed for constructor-produced sides, where half the
    generators map to a free basis).
    """

    __slots__ = ("rank", "images")

    def __init__(self, rank, images):
        if len(images) != 2 * rank:
            raise ValueError("expected %d generator images" % (2 * rank))
        images = tuple(tuple(K.reduce_word(list(w))) for w in images)
        for w in images:
            for x in w:
                if not 1 <= abs(x) <= rank:
                    raise ValueError("image letter %d out of range" % x)
        self.rank = rank
        self.images = images
        rel = K.surface_relator(rank)
        if self.apply_word(rel):
            raise ValueError("surface relation does not map to the identity")

    def apply_word(self, word):
        """Image of a marking word, freely reduced."""
        out = []
        for x in word:
            img = self.images[abs(x) - 1]
            seq = img if x > 0 else [-y for y in reversed(img)]
            for y in seq:
                if out and out[-1] == -y:
                    out.pop()
                else:
                    out.append(y)
            if len(out) > WORD_LENGTH_CAP:
                raise ValueError(
                    "image exceeds the %d letter cap" % WORD_LENGTH_CAP
                )
        return out

    def __eq__(self, other):
        return (
            isinstance(other, HandlebodyMarking)
            and self.rank == other.rank
            and self.images == other.images
        )

    def __hash__(self):
        return hash(("HandlebodyMarking", self.rank, self.images))

    def __repr__(self):
        gens = []
        for i, img in enumerate(self.images):
            gens.append(
                "%s->%s"
                % (letter_name(i + 1), " ".join(_free_letter_name(x) for x in img) or "1")
            )
        return "HandlebodyMarking(rank=%d, %s)" % (self.rank, ", ".join(gens))

    def to_json(self):
        return {
            "rank": self.rank,
            "images": {
                letter_name(i + 1): " ".join(_free_letter_name(x) for x in img)
                for i, img in enumerate(self.images)
            },
        }

    @classmethod
    def from_json(cls, data):
        rank = int(data["rank"])
        images = []
        for i in range(2 * rank):
            images.append(_parse_free_word(data["images"][letter_name(i + 1)]))
        return cls(rank, images)


def standard_side(surface, which):
    """The two handlebodies of the standard diagram: 'alpha' kills the
    a-generators (a_i -> 1, b_i -> x_i), 'beta' kills the b-generators."""
    g = surface.genus
    images = []
    for i in range(1, g + 1):
        if which == ALPHA:
            images.append([])
            images.append([i])
        elif which == BETA:
            images.append([i])
            images.append([])
        else:
            raise ValueError("side must be 'alpha' or 'beta'")
    return HandlebodyMarking(g, images)


def bounds_disk(surface, c, H):
    """True iff the curve bounds a disk in the handlebody: the image of
    its word freely reduces to the empty word."""
    if H.rank != surface.genus:
        raise ValueError("marking rank does not match the surface genus")
    word = curve_word(surface, c)
    return not H.apply_word(list(word.letters))


def defines_handlebody(L, H):
    """True iff every curve of the decomposition bounds a disk in H; for a
    handlebody a maximal disk collection has all 3g-3 boundaries in the
    decomposition."""
    surface = L.surface
    return all(bounds_disk(surface, c, H) for c in L.curves)


#: seeds registered by diagram constructors: (genus, marking) -> decomposition
_seed_registry = {}


def register_seed(surface, H, decomposition):
    if not defines_handlebody(decomposition, H):
        raise ValueError("registered seed does not define its side")
    _seed_registry[(surface.genus, H)] = decomposition


def extend_to_pants(surface, H):
    """A stored pants decomposition defining H.  Diagram constructors
    register one for each side they produce; anything else is an error."""
    try:
        return _seed_registry[(surface.genus, H)]
    except KeyError:
        raise ValueError(
            "no stored defining decomposition for this side; "
            "only diagram-constructor sides carry seeds"
        ) from None
