"""Pure-Python kernel for curve combinatorics on a one-vertex surface model.

A closed orientable surface of genus g >= 2 is modelled as the regular
4g-gon with the side identification a1 b1 A1 B1 a2 b2 A2 B2 ... (capital =
reversed side), triangulated by the fan of diagonals from the first corner.
All corners map to a single vertex v; the triangulation has 6g-3 edges and
4g-2 triangles.

Curves avoiding v are encoded by their *crossing words*: cyclic reduced
words in the free group on 2g letters, one letter per identified side pair.
Letter +(p+1) crosses pair p leaving the polygon through its primary side,
-(p+1) through its secondary side.  Crossing words are in bijection with
normal-coordinate vectors (edge weights) via fan routing and tracing, and
equality of canonical words is equality of isotopy classes rel v.

The geometric primitives all reduce to planarity of the tree of polygon
copies in the universal cover: the circular order of ends is lexicographic
on turn sequences, intersection numbers count linked axis pairs, and Dehn
twists splice rotated copies of the twisting word at the linked positions.
"""

from __future__ import annotations

BACKEND = "python"

# ---------------------------------------------------------------------------
# free-group words
# ---------------------------------------------------------------------------


def reduce_word(word):
    """Freely reduce a letter sequence (letters are nonzero ints)."""
    out = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def cyclic_reduce(word):
    w = reduce_word(word)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def inverse_word(word):
    return [-x for x in reversed(word)]


def canon_cyclic(word):
    """Canonical form of a cyclic unoriented word: the lexicographically
    least rotation among the cyclic reduction and its inverse."""
    w = cyclic_reduce(list(word))
    if not w:
        return ()
    best = None
    for cand in (w, inverse_word(w)):
        n = len(cand)
        doubled = cand + cand
        for s in range(n):
            rot = tuple(doubled[s:s + n])
            if best is None or rot < best:
                best = rot
    return best


def rotate(word, i):
    return list(word[i:]) + list(word[:i])


# ---------------------------------------------------------------------------
# polygon combinatorics
# ---------------------------------------------------------------------------


def pair_of_side(s):
    return 2 * (s // 4) + (s % 4) % 2


def is_primary(s):
    return (s % 4) < 2


def partner(s):
    return s ^ 2


def exit_side(letter):
    p = abs(letter) - 1
    base = 4 * (p // 2) + (p % 2)
    return base if letter > 0 else base + 2


def entry_side(letter):
    return partner(exit_side(letter))


def letter_of_exit(s):
    p = pair_of_side(s)
    return (p + 1) if is_primary(s) else -(p + 1)


def diag_range(x, y, g):
    """Fan diagonals D_m crossed by a chord from a point on side x to a
    point on side y, as edge ids.  D_m exists for 2 <= m <= 4g-2 and has
    edge id 2g + (m-2)."""
    if x == y:
        return []
    lo, hi = (x, y) if x < y else (y, x)
    out = []
    for m in range(max(lo + 1, 2), min(hi, 4 * g - 2) + 1):
        out.append(2 * g + (m - 2))
    return out


def words_to_weights(g, words):
    """Edge-weight vector of the fan-routed realization of crossing words."""
    ne = 6 * g - 3
    w = [0] * ne
    for word in words:
        n = len(word)
        if n == 0:
            continue
        for t in range(n):
            lt = word[t]
            w[abs(lt) - 1] += 1
            nxt = word[(t + 1) % n]
            x = entry_side(lt)
            y = exit_side(nxt)
            for e in diag_range(x, y, g):
                w[e] += 1
    return w


# ---------------------------------------------------------------------------
# triangulation tables
# ---------------------------------------------------------------------------


def triangle_tables(g):
    """Slot and incidence tables for the fan triangulation.

    Returns (tris, edge_inc, slot_side) where
      tris[t]      = ((e0, o0), (e1, o1), (e2, o2)) counterclockwise slots,
      edge_inc[e]  = ((t, slot, +1), (t', slot', -1)),
      slot_side[t][k] = polygon side number for loop-edge slots, else None.
    """
    n4 = 4 * g
    nt = n4 - 2

    def side_slot(s):
        return (pair_of_side(s), 1 if is_primary(s) else -1)

    def diag_id(m):
        return 2 * g + (m - 2)

    tris = []
    slot_side = []
    for t in range(nt):
        if t == 0:
            slots = [side_slot(0), side_slot(1), (diag_id(2), -1)]
            sides = [0, 1, None]
        elif t == nt - 1:
            slots = [(diag_id(n4 - 2), 1), side_slot(n4 - 2), side_slot(n4 - 1)]
            sides = [None, n4 - 2, n4 - 1]
        else:
            slots = [(diag_id(t + 1), 1), side_slot(t + 1), (diag_id(t + 2), -1)]
            sides = [None, t + 1, None]
        tris.append(tuple(slots))
        slot_side.append(tuple(sides))

    inc = {}
    for t in range(nt):
        for k in range(3):
            e, o = tris[t][k]
            inc.setdefault(e, []).append((t, k, o))
    edge_inc = []
    for e in range(6 * g - 3):
        pair = inc[e]
        if len(pair) != 2:
            raise AssertionError("edge %d has %d incidences" % (e, len(pair)))
        if pair[0][2] == 1:
            edge_inc.append((pair[0], pair[1]))
        else:
            edge_inc.append((pair[1], pair[0]))
        if edge_inc[-1][0][2] != 1 or edge_inc[-1][1][2] != -1:
            raise AssertionError("edge %d lacks coherent orientations" % e)
    return tuple(tris), tuple(edge_inc), tuple(slot_side)


# ---------------------------------------------------------------------------
# tracing normal coordinates
# ---------------------------------------------------------------------------


def _corner_counts(tris, weights):
    """Per-triangle corner counts, or None if locally inadmissible."""
    out = []
    for slots in tris:
        w0 = weights[slots[0][0]]
        w1 = weights[slots[1][0]]
        w2 = weights[slots[2][0]]
        if (w0 + w1 + w2) % 2 != 0:
            return None
        ww = (w0, w1, w2)
        ms = []
        for k in range(3):
            m2 = ww[k] + ww[(k + 1) % 3] - ww[(k + 2) % 3]
            if m2 < 0:
                return None
            ms.append(m2 // 2)
        out.append(tuple(ms))
    return out


def trace(g, weights, tables=None):
    """Trace an admissible weight vector into components.

    Returns a list of components, each a dict with:
      'letters'  : crossing-word letters in traversal order,
      'arcs'     : (triangle, corner, depth, from_slot, to_slot) per arc,
      'crossings': (edge, intrinsic position) per crossing, aligned so that
                   crossings[i] precedes arcs[i].
    Raises ValueError when the vector is not admissible.
    """
    tris, edge_inc, slot_side = tables if tables is not None else triangle_tables(g)
    ms = _corner_counts(tris, weights)
    if ms is None:
        raise ValueError("weights fail the triangle matching conditions")

    def ccw(slot_orient, w, pos):
        return pos if slot_orient == 1 else w - 1 - pos

    def arc_at(t, slot, c):
        # arc containing the crossing with ccw index c on slot `slot`
        kp = (slot - 1) % 3
        mprev = ms[t][kp]
        w = weights[tris[t][slot][0]]
        if c < mprev:
            return (kp, c)
        return (slot, w - 1 - c)

    visited = set()
    components = []
    total = sum(weights)
    for e0 in range(len(weights)):
        for p0 in range(weights[e0]):
            for d0 in (0, 1):
                if (e0, p0, d0) in visited:
                    continue
                letters = []
                arcs = []
                crossings = []
                crossing_letters = []
                e, p, d = e0, p0, d0
                while (e, p, d) not in visited:
                    visited.add((e, p, d))
                    # crossing edge e at position p, moving from incidence
                    # (1-d) into incidence d; exit side is on the source side
                    t_from, s_from, o_from = edge_inc[e][1 - d]
                    side = slot_side[t_from][s_from]
                    if side is not None:
                        letters.append(letter_of_exit(side))
                        crossing_letters.append(letter_of_exit(side))
                    else:
                        crossing_letters.append(None)
                    crossings.append((e, p))
                    t, s, o = edge_inc[e][d]
                    w = weights[e]
                    c = ccw(o, w, p)
                    corner, depth = arc_at(t, s, c)
                    # partner endpoint of this arc inside triangle t
                    if corner == s:
                        s2 = (s + 1) % 3
                        c2 = depth
                    else:
                        s2 = corner
                        w2 = weights[tris[t][s2][0]]
                        c2 = w2 - 1 - depth
                    arcs.append((t, corner, depth, s, s2))
                    e2, o2 = tris[t][s2]
                    p2 = ccw(o2, weights[e2], c2)  # ccw -> intrinsic, same map
                    # continue across e2: we are currently at incidence of e2
                    # in triangle t; the far incidence has index:
                    d2 = 0 if edge_inc[e2][0][0:2] != (t, s2) else 1
                    if edge_inc[e2][d2][0:2] == (t, s2):
                        raise AssertionError("incidence lookup failed")
                    e, p, d = e2, p2, d2
                    if len(crossings) > 2 * total + 4:
                        raise AssertionError("tracing runaway")
                components.append(
                    {
                        "letters": letters,
                        "arcs": arcs,
                        "crossings": crossings,
                        "crossing_letters": crossing_letters,
                    }
                )
    # tracing walks each crossing twice (once per direction); keep one
    # traversal per component
    seen = set()
    unique = []
    for comp in components:
        key = frozenset(comp["crossings"])
        if key in seen:
            continue
        seen.add(key)
        unique.append(comp)
    return unique


# ---------------------------------------------------------------------------
# planar universal cover: end addresses, linking, crossings
# ---------------------------------------------------------------------------


def _address(letters_fn, length, n4):
    """Turn-sequence address of a ray.

    letters_fn(t) yields the t-th letter of the ray.  The address is
    (door0, turn1, turn2, ...): door0 the absolute exit side at the base
    copy, turn_t the counterclockwise offset from the entered side.
    Lexicographic order on addresses is the circular boundary order cut
    between sides 4g-1 and 0 of the base copy.
    """
    addr = []
    prev = letters_fn(0)
    d = exit_side(prev)
    addr.append(d)
    for t in range(1, length):
        ent = entry_side(prev)
        cur = letters_fn(t)
        d = exit_side(cur)
        addr.append((d - ent) % n4)
        prev = cur
    return tuple(addr)


def _ray_fn(word, start, sign):
    """Periodic ray letters: sign=+1 follows word from index `start`;
    sign=-1 follows the inverse reading backwards from index `start`-1."""
    n = len(word)
    if sign == 1:
        return lambda t: word[(start + t) % n]
    return lambda t: -word[(start - 1 - t) % n]


def _linked(addrs):
    """Given addresses for (uF, uB, wF, wB), decide linking and sign.

    Returns 0 when not linked (or some ends coincide), else +1/-1 by the
    cyclic pattern of the four ends.
    """
    tagged = sorted(zip(addrs, (0, 1, 2, 3)))
    for i in range(3):
        if tagged[i][0] == tagged[i + 1][0]:
            return 0
    order = [tag for _, tag in tagged]
    pos = {tag: i for i, tag in enumerate(order)}
    # linked iff u-ends {0,1} alternate with w-ends {2,3} around the circle,
    # i.e. the two u-positions have equal parity
    if (pos[0] % 2) != (pos[1] % 2):
        return 0
    # orientation: +1 when the cyclic order is uF, wF, uB, wB
    return 1 if (pos[2] - pos[0]) % 4 == 1 else -1


def _ray_addresses(word, depth, n4, backward):
    """Addresses of all periodic rays of a cyclic word (one per start
    index), forward or backward, computed in one sweep each."""
    n = len(word)
    letters = [None] * n
    for start in range(n):
        if backward:
            seq = [-word[(start - 1 - t) % n] for t in range(depth)]
        else:
            seq = [word[(start + t) % n] for t in range(depth)]
        letters[start] = seq
    out = []
    for seq in letters:
        addr = [0] * depth
        prev = seq[0]
        p = abs(prev) - 1
        d = 4 * (p >> 1) + (p & 1) + (0 if prev > 0 else 2)
        addr[0] = d
        for t in range(1, depth):
            ent = d ^ 2
            cur = seq[t]
            p = abs(cur) - 1
            d = 4 * (p >> 1) + (p & 1) + (0 if cur > 0 else 2)
            addr[t] = (d - ent) % n4
            prev = cur
        out.append(tuple(addr))
    return out


def crossings(g, u, w):
    """Linked lift pairs of cyclic reduced words u, w.

    Returns a list of (i, j, sign): the lift of w whose j-th copy sits on
    the u-axis at period position i, anchored at the start of the shared
    segment.  The list length is the geometric intersection number for
    words of embedded curves (and the self-intersection count when u is w).
    """
    n4 = 4 * g
    nu, nw = len(u), len(w)
    if nu == 0 or nw == 0:
        return []
    # turn sequences are periodic after the first entry, so two distinct
    # rays diverge within a Fine-Wilf window of the two periods
    depth = nu + nw + 6
    uf = _ray_addresses(u, depth, n4, False)
    ub = _ray_addresses(u, depth, n4, True)
    wf = _ray_addresses(w, depth, n4, False)
    wb = _ray_addresses(w, depth, n4, True)
    out = []
    for i in range(nu):
        ui_prev = u[(i - 1) % nu]
        a0, a1 = uf[i], ub[i]
        for j in range(nw):
            if w[(j - 1) % nw] == ui_prev or w[j] == -ui_prev:
                continue
            s = _linked((a0, a1, wf[j], wb[j]))
            if s:
                out.append((i, j, s))
    return out


_isect_cache = {}
_self_cache = {}


def intersection_words(g, u, w):
    """Geometric intersection number of two embedded-curve words."""
    u, w = tuple(u), tuple(w)
    key = (g, u, w) if u <= w else (g, w, u)
    hit = _isect_cache.get(key)
    if hit is None:
        if canon_cyclic(u) == canon_cyclic(w):
            hit = 0
        else:
            hit = len(crossings(g, list(u), list(w)))
        if len(_isect_cache) > 300000:
            _isect_cache.clear()
        _isect_cache[key] = hit
    return hit


def self_crossings(g, u):
    """Self-intersection count of a curve word; 0 iff embeddable."""
    key = (g, tuple(u))
    hit = _self_cache.get(key)
    if hit is None:
        hit = len(crossings(g, list(u), list(u))) // 2
        if len(_self_cache) > 300000:
            _self_cache.clear()
        _self_cache[key] = hit
    return hit


# ---------------------------------------------------------------------------
# Dehn twist by splicing along a drawn overlay
# ---------------------------------------------------------------------------

# Global handedness: chosen so that twist exponent k > 0 is the right-handed
# twist in the convention where the marking pair (a_i, b_i) has algebraic
# intersection +1 and T_{b_i}(a_i) has homology class [a_i] + [b_i].
TWIST_SIGN = 1


def _overlay(g, tu, tw, wu, ww, tables):
    """Drawn crossings between the taut positions of two traced curves.

    The two positions are superimposed by interleaving their crossings
    along each edge (ties broken with the twisting curve first in the
    intrinsic direction).  Returns, for each arc of the second curve, the
    crossings along it in traversal order as (u_arc_index, sign):
    sign +1 when the counterclockwise boundary order around the triangle
    is (w_in, u_in, w_out, u_out).
    """
    tris, edge_inc, slot_side = tables
    ne = len(wu)
    per_edge = [[] for _ in range(ne)]
    for tag, trace_, weights in ((0, tu, wu), (1, tw, ww)):
        for idx, (e, p) in enumerate(trace_["crossings"]):
            # position along the edge in the intrinsic direction: the
            # fraction (2p+1)/(2W) scaled by the other curve's weight (at
            # least 1 so each curve's own order survives); ties broken
            # with the twisting curve first
            other = max(ww[e] if tag == 0 else wu[e], 1)
            per_edge[e].append(((2 * p + 1) * other, tag, idx))
    rank = {}
    total = [0] * ne
    for e in range(ne):
        per_edge[e].sort()
        total[e] = len(per_edge[e])
        for r, (_, tag, idx) in enumerate(per_edge[e]):
            rank[(tag, idx)] = r

    def endpoint(tag, trace_, arc_idx, which):
        """(slot, ccw rank) of an arc endpoint in its triangle."""
        n = len(trace_["crossings"])
        tri, _corner, _depth, s_from, s_to = trace_["arcs"][arc_idx]
        if which == 0:
            cross_idx = arc_idx
            slot = s_from
        else:
            cross_idx = (arc_idx + 1) % n
            slot = s_to
        e, _p = trace_["crossings"][cross_idx]
        o = tris[tri][slot][1]
        r = rank[(tag, cross_idx)]
        c = r if o == 1 else total[e] - 1 - r
        return (slot, c)

    # group arcs by triangle
    by_tri_u = {}
    for idx, arc in enumerate(tu["arcs"]):
        by_tri_u.setdefault(arc[0], []).append(idx)
    out = {}
    for w_idx, arc in enumerate(tw["arcs"]):
        tri = arc[0]
        uids = by_tri_u.get(tri, ())
        if not uids:
            continue
        b_in = endpoint(1, tw, w_idx, 0)
        b_out = endpoint(1, tw, w_idx, 1)
        hits = []
        for u_idx in uids:
            a_in = endpoint(0, tu, u_idx, 0)
            a_out = endpoint(0, tu, u_idx, 1)
            pts = sorted([(b_in, "bi"), (b_out, "bo"), (a_in, "ai"), (a_out, "ao")])
            names = [nm for _, nm in pts]
            k = names.index("bi")
            ring = names[k:] + names[:k]
            if ring[2] not in ("bo",):
                continue  # not interleaved: no crossing
            sign = 1 if ring[1] == "ai" else -1
            hits.append((u_idx, sign, a_in, a_out))
        if not hits:
            continue
        # order the crossings along the w-arc from its entry endpoint:
        # chord A precedes A' when A separates the entry from A'
        ring_pts = sorted(
            {b_in, b_out}
            | {h[2] for h in hits}
            | {h[3] for h in hits}
        )
        pos = {p: i for i, p in enumerate(ring_pts)}
        m = len(ring_pts)

        def inside(x, a, b):
            return (pos[x] - pos[a]) % m < (pos[b] - pos[a]) % m and x not in (a, b)

        def depth(h):
            d = 0
            for h2 in hits:
                if h2 is h:
                    continue
                if inside(b_in, h2[2], h2[3]) != inside(h[2], h2[2], h2[3]):
                    d += 1
            return d

        ordered = sorted(hits, key=lambda h: (depth(h), h[0]))
        out[w_idx] = [(h[0], h[1]) for h in ordered]
    return out


_twist_cache = {}


def twist_word(g, u, w, k, tables=None):
    """Crossing word of the k-th power twist along u applied to w.

    The taut positions of u and w are superimposed and each drawn crossing
    is rerouted |k| times around the drawn twisting curve; the drawn
    overlay need not be in minimal position for the image class to be
    correct, since the twist is a homeomorphism supported near the drawn
    twisting curve.
    """
    if k == 0 or not u or not w:
        return canon_cyclic(w)
    u = list(u)
    w = list(w)
    key = (g, tuple(u), tuple(w), k)
    hit = _twist_cache.get(key)
    if hit is not None:
        return hit
    if canon_cyclic(u) == canon_cyclic(w):
        return canon_cyclic(w)
    if tables is None:
        tables = triangle_tables(g)
    wu = words_to_weights(g, [u])
    ww = words_to_weights(g, [w])
    tu = trace(g, wu, tables)[0]
    tw_ = trace(g, ww, tables)[0]
    hits = _overlay(g, tu, tw_, wu, ww, tables)
    if not hits:
        out = canon_cyclic(w)
        _twist_cache[key] = out
        return out
    nu = len(tu["crossings"])
    nw = len(tw_["crossings"])
    lett_u = tu["crossing_letters"]
    lett_w = tw_["crossing_letters"]
    out = []
    for t in range(nw):
        if lett_w[t] is not None:
            out.append(lett_w[t])
        for (u_idx, sign) in hits.get(t, ()):
            forward = sign * k * TWIST_SIGN > 0
            for rep in range(abs(k)):
                if forward:
                    for s in range(1, nu + 1):
                        lt = lett_u[(u_idx + s) % nu]
                        if lt is not None:
                            out.append(lt)
                else:
                    for s in range(nu):
                        lt = lett_u[(u_idx - s) % nu]
                        if lt is not None:
                            out.append(-lt)
    result = canon_cyclic(out)
    if len(_twist_cache) > 100000:
        _twist_cache.clear()
    _twist_cache[key] = result
    return result


# ---------------------------------------------------------------------------
# complement regions of a traced multicurve
# ---------------------------------------------------------------------------


def _frag_of_gap(ms, weights, tris, t, slot, c):
    """Fragment touching the gap with ccw index c on the given slot."""
    mprev = ms[t][(slot - 1) % 3]
    mnext = ms[t][slot]
    w = weights[tris[t][slot][0]]
    if c < mprev:
        return ("c", t, (slot - 1) % 3, c)
    if c > w - mnext:
        return ("c", t, slot, w - c)
    return ("z", t)


def _arc_side_frags(ms, arc):
    """(left, right) fragments of an arc w.r.t. its traversal direction."""
    t, corner, depth, s_from, _s_to = arc
    inner = ("c", t, corner, depth)
    outer = ("c", t, corner, depth + 1) if depth + 1 < ms[t][corner] else ("z", t)
    if s_from == corner:
        # traversing slot corner -> corner+1 keeps the corner on the right
        return outer, inner
    return inner, outer


def regions(g, weights, components, tables=None):
    """Complement regions of a traced multicurve.

    Returns a dict with:
      'regions': list of {'chi', 'genus', 'boundary', 'has_vertex'},
      'component_sides': per component the (left, right) region indices,
      'frag_region': mapping fragment id -> region index.
    """
    tris, edge_inc, slot_side = tables if tables is not None else triangle_tables(g)
    ms = _corner_counts(tris, weights)
    if ms is None:
        raise ValueError("weights fail the triangle matching conditions")

    parent = {}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    frags = []
    for t in range(len(tris)):
        frags.append(("z", t))
        for k in range(3):
            for j in range(ms[t][k]):
                frags.append(("c", t, k, j))
    for f in frags:
        parent[f] = f

    n_gaps = 0
    for e in range(len(weights)):
        w = weights[e]
        (t1, s1, o1), (t2, s2, o2) = edge_inc[e]
        for q in range(w + 1):
            c1 = q if o1 == 1 else w - q
            c2 = q if o2 == 1 else w - q
            f1 = _frag_of_gap(ms, weights, tris, t1, s1, c1)
            f2 = _frag_of_gap(ms, weights, tris, t2, s2, c2)
            union(f1, f2)
            n_gaps += 1

    roots = sorted({find(f) for f in frags})
    index = {r: i for i, r in enumerate(roots)}
    nfrag = [0] * len(roots)
    for f in frags:
        nfrag[index[find(f)]] += 1
    ngap = [0] * len(roots)
    for e in range(len(weights)):
        w = weights[e]
        (t1, s1, o1), _ = edge_inc[e]
        for q in range(w + 1):
            c1 = q if o1 == 1 else w - q
            f1 = _frag_of_gap(ms, weights, tris, t1, s1, c1)
            ngap[index[find(f1)]] += 1

    # the vertex sits in the region holding every innermost corner fragment
    v_region = None
    for t in range(len(tris)):
        for k in range(3):
            f = ("c", t, k, 0) if ms[t][k] > 0 else ("z", t)
            r = index[find(f)]
            if v_region is None:
                v_region = r
            elif v_region != r:
                raise AssertionError("vertex fragments span several regions")

    component_sides = []
    boundary = [0] * len(roots)
    for comp in components:
        rl = rr = None
        for arc in comp["arcs"]:
            fl, fr = _arc_side_frags(ms, arc)
            l, r = index[find(fl)], index[find(fr)]
            if rl is None:
                rl, rr = l, r
            elif (rl, rr) != (l, r):
                raise AssertionError("inconsistent sides along a component")
        component_sides.append((rl, rr))
        boundary[rl] += 1
        boundary[rr] += 1

    out = []
    for i in range(len(roots)):
        chi = nfrag[i] - ngap[i] + (1 if i == v_region else 0)
        b = boundary[i]
        genus2 = 2 - b - chi
        if genus2 < 0 or genus2 % 2 != 0:
            raise AssertionError("impossible region (chi=%d, b=%d)" % (chi, b))
        out.append(
            {
                "chi": chi,
                "genus": genus2 // 2,
                "boundary": b,
                "has_vertex": i == v_region,
            }
        )
    return {
        "regions": out,
        "component_sides": component_sides,
        "frag_region": {f: index[find(f)] for f in frags},
    }


# ---------------------------------------------------------------------------
# fundamental-group words of traced components
# ---------------------------------------------------------------------------


def _corner_end(tris, t, corner, slot):
    """Edge end (0 = origin, 1 = terminus) that the given corner of
    triangle t touches on the edge in the given slot (slot is corner or
    corner+1 mod 3)."""
    o = tris[t][slot][1]
    if slot == corner:
        return (1 + o) // 2
    return (1 - o) // 2


def prefix_word(g, m):
    """The diagonal D_m as a word in the marking generators: the product of
    the polygon side labels 0..m-1."""
    out = []
    for s in range(m):
        p = pair_of_side(s)
        out.append((p + 1) if is_primary(s) else -(p + 1))
    return out


def component_pi1_word(g, comp, tables=None):
    """Word of a traced component in the marking generators a1,b1,...,
    letters a_i = +(2i-1), b_i = +2i; reduced but not cyclically canonised."""
    tris, edge_inc, slot_side = tables if tables is not None else triangle_tables(g)
    arcs = comp["arcs"]
    crossings = comp["crossings"]
    n = len(arcs)
    word = []
    for i in range(n):
        e, _pos = crossings[i]
        before = arcs[(i - 1) % n]
        after = arcs[i]
        end_before = _corner_end(tris, before[0], before[1], before[4])
        end_after = _corner_end(tris, after[0], after[1], after[3])
        if end_before == end_after:
            continue
        sign = 1 if (end_before, end_after) == (0, 1) else -1
        if e < 2 * g:
            word.append(sign * (e + 1))
        else:
            m = e - 2 * g + 2
            pw = prefix_word(g, m)
            word.extend(pw if sign == 1 else [-x for x in reversed(pw)])
    return reduce_word(word)


def surface_relator(g):
    """The surface relation [a1,b1]...[ag,bg] in marking letters."""
    out = []
    for i in range(g):
        a, b = 2 * i + 1, 2 * i + 2
        out.extend([a, b, -a, -b])
    return out


def dehn_reduce_cyclic(g, word):
    """Shorten a cyclic word with Dehn's algorithm for the one-relator
    surface group: any cyclic subword longer than half the relator is
    replaced by the inverse of the complementary part.  Returns a cyclic
    word of minimal length in its conjugacy class."""
    rel = surface_relator(g)
    n_rel = 4 * g
    half = n_rel // 2
    variants = []
    for r in (rel, inverse_word(rel)):
        for s in range(n_rel):
            variants.append(rotate(r, s))
    w = cyclic_reduce(list(word))
    changed = True
    while changed and w:
        changed = False
        n = len(w)
        doubled = w + w
        best = None
        for length in range(min(n, n_rel), half, -1):
            for start in range(n):
                seg = doubled[start:start + length]
                for var in variants:
                    if var[:length] == seg:
                        repl = inverse_word(var[length:])
                        cand = doubled[start + length:start + n] + repl
                        best = cand
                        break
                if best:
                    break
            if best:
                break
        if best is not None:
            w = cyclic_reduce(best)
            changed = True
    return w


def fragment_graph(g, weights, components, tables=None):
    """Adjacency data of complement fragments, for path searches.

    Returns (gap_moves, arc_moves):
      gap_moves: list of (frag_a, frag_b, letter_ab) across triangulation
                 edges; letter_ab is the crossing letter when moving from
                 frag_a to frag_b (0 across a diagonal); the reverse move
                 carries -letter_ab.
      arc_moves: per component, a list of (left_frag, right_frag) for each
                 of its arcs.
    """
    tris, edge_inc, slot_side = tables if tables is not None else triangle_tables(g)
    ms = _corner_counts(tris, weights)
    if ms is None:
        raise ValueError("weights fail the triangle matching conditions")
    gap_moves = []
    for e in range(len(weights)):
        w = weights[e]
        (t1, s1, o1), (t2, s2, o2) = edge_inc[e]
        side = slot_side[t1][s1]
        letter = letter_of_exit(side) if side is not None else 0
        for q in range(w + 1):
            c1 = q if o1 == 1 else w - q
            c2 = q if o2 == 1 else w - q
            f1 = _frag_of_gap(ms, weights, tris, t1, s1, c1)
            f2 = _frag_of_gap(ms, weights, tris, t2, s2, c2)
            gap_moves.append((f1, f2, letter))
    arc_moves = []
    for comp in components:
        sides = []
        for arc in comp["arcs"]:
            fl, fr = _arc_side_frags(ms, arc)
            sides.append((fl, fr))
        arc_moves.append(sides)
    return gap_moves, arc_moves
