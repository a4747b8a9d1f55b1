# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: typed implementations of the hot word and tracing
routines, behaviourally identical to pantsdist._kernel_py (the pure
fallback, which also documents the conventions).  Cold paths are shared
with the pure module."""

from cpython cimport array
import array

from pantsdist._kernel_py import (
    component_pi1_word,
    dehn_reduce_cyclic,
    diag_range,
    entry_side,
    exit_side,
    fragment_graph,
    is_primary,
    letter_of_exit,
    pair_of_side,
    partner,
    prefix_word,
    regions,
    rotate,
    surface_relator,
    triangle_tables,
    _corner_counts,
    _overlay,
)

BACKEND = "cython"


# ---------------------------------------------------------------------------
# words
# ---------------------------------------------------------------------------


def reduce_word(word):
    cdef list out = []
    cdef int x
    for x in word:
        if out and out[len(out) - 1] == -x:
            out.pop()
        else:
            out.append(x)
    return out


def cyclic_reduce(word):
    cdef list w = reduce_word(word)
    cdef int i = 0, j = len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def inverse_word(word):
    cdef list out = []
    cdef int x
    for x in reversed(word):
        out.append(-x)
    return out


def canon_cyclic(word):
    cdef list w = cyclic_reduce(list(word))
    cdef int n = len(w)
    if n == 0:
        return ()
    cdef list doubled
    cdef tuple best = None
    cdef tuple rot
    cdef int s
    for cand in (w, inverse_word(w)):
        doubled = cand + cand
        for s in range(n):
            rot = tuple(doubled[s:s + n])
            if best is None or rot < best:
                best = rot
    return best


# ---------------------------------------------------------------------------
# weights
# ---------------------------------------------------------------------------


cdef inline int c_exit_side(int letter):
    cdef int a = letter if letter > 0 else -letter
    cdef int p = a - 1
    cdef int base = 4 * (p >> 1) + (p & 1)
    return base if letter > 0 else base + 2


def words_to_weights(int g, words):
    cdef int ne = 6 * g - 3
    cdef list w = [0] * ne
    cdef int n, t, x, y, lo, hi, m, e, lt, nxt
    for word in words:
        n = len(word)
        if n == 0:
            continue
        for t in range(n):
            lt = word[t]
            w[(lt if lt > 0 else -lt) - 1] = w[(lt if lt > 0 else -lt) - 1] + 1
            nxt = word[(t + 1) % n]
            x = c_exit_side(lt) ^ 2
            y = c_exit_side(nxt)
            if x < y:
                lo = x
                hi = y
            else:
                lo = y
                hi = x
            m = lo + 1
            if m < 2:
                m = 2
            e = hi
            if e > 4 * g - 2:
                e = 4 * g - 2
            while m <= e:
                w[2 * g + (m - 2)] = w[2 * g + (m - 2)] + 1
                m += 1
    return w


# ---------------------------------------------------------------------------
# tracing
# ---------------------------------------------------------------------------


def trace(int g, weights, tables=None):
    tris, edge_inc, slot_side = tables if tables is not None else triangle_tables(g)
    ms = _corner_counts(tris, weights)
    if ms is None:
        raise ValueError("weights fail the triangle matching conditions")
    cdef list wts = list(weights)
    cdef int total = 0
    cdef int v
    for v in wts:
        total += v

    cdef set visited = set()
    cdef list components = []
    cdef int e0, p0, d0, e, p, d, t_from, s_from, t, s, o, w_, c, kp, mprev
    cdef int corner, depth, s2, c2, w2, e2, o2, p2, d2
    cdef int ne = len(wts)
    for e0 in range(ne):
        for p0 in range(<int> wts[e0]):
            for d0 in range(2):
                if (e0, p0, d0) in visited:
                    continue
                letters = []
                arcs = []
                crossings_ = []
                crossing_letters = []
                e = e0
                p = p0
                d = d0
                while (e, p, d) not in visited:
                    visited.add((e, p, d))
                    inc = edge_inc[e][1 - d]
                    t_from = inc[0]
                    s_from = inc[1]
                    side = slot_side[t_from][s_from]
                    if side is not None:
                        letters.append(letter_of_exit(side))
                        crossing_letters.append(letters[len(letters) - 1])
                    else:
                        crossing_letters.append(None)
                    crossings_.append((e, p))
                    inc = edge_inc[e][d]
                    t = inc[0]
                    s = inc[1]
                    o = inc[2]
                    w_ = wts[e]
                    c = p if o == 1 else w_ - 1 - p
                    kp = (s - 1) % 3
                    if kp < 0:
                        kp += 3
                    mprev = ms[t][kp]
                    if c < mprev:
                        corner = kp
                        depth = c
                    else:
                        corner = s
                        depth = w_ - 1 - c
                    if corner == s:
                        s2 = (s + 1) % 3
                        c2 = depth
                    else:
                        s2 = corner
                        w2 = wts[tris[t][s2][0]]
                        c2 = w2 - 1 - depth
                    arcs.append((t, corner, depth, s, s2))
                    slot2 = tris[t][s2]
                    e2 = slot2[0]
                    o2 = slot2[1]
                    p2 = c2 if o2 == 1 else <int> wts[e2] - 1 - c2
                    d2 = 0 if edge_inc[e2][0][0:2] != (t, s2) else 1
                    e = e2
                    p = p2
                    d = d2
                    if len(crossings_) > 2 * total + 4:
                        raise AssertionError("tracing runaway")
                components.append(
                    {
                        "letters": letters,
                        "arcs": arcs,
                        "crossings": crossings_,
                        "crossing_letters": crossing_letters,
                    }
                )
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
# linked lift pairs
# ---------------------------------------------------------------------------


cdef void _fill_rays(list word, int n, int depth, int n4, bint backward, int* out):
    cdef int start, t, d, ent, cur, idx, val
    for start in range(n):
        if backward:
            idx = (start - 1) % n
            if idx < 0:
                idx += n
            cur = -<int> word[idx]
        else:
            cur = <int> word[start]
        d = c_exit_side(cur)
        out[start * depth] = d
        for t in range(1, depth):
            ent = d ^ 2
            if backward:
                idx = (start - 1 - t) % n
                if idx < 0:
                    idx += n
                cur = -<int> word[idx]
            else:
                idx = (start + t) % n
                cur = <int> word[idx]
            d = c_exit_side(cur)
            val = (d - ent) % n4
            if val < 0:
                val += n4
            out[start * depth + t] = val


cdef inline int _cmp_rows(int* a, int* b, int depth):
    cdef int t
    for t in range(depth):
        if a[t] != b[t]:
            return -1 if a[t] < b[t] else 1
    return 0


cdef int _linked_c(int* a0, int* a1, int* a2, int* a3, int depth):
    cdef int* rows[4]
    cdef int order[4]
    cdef int pos[4]
    cdef int i, j, tmp
    rows[0] = a0
    rows[1] = a1
    rows[2] = a2
    rows[3] = a3
    for i in range(4):
        order[i] = i
    for i in range(1, 4):
        j = i
        while j > 0 and _cmp_rows(rows[order[j]], rows[order[j - 1]], depth) < 0:
            tmp = order[j]
            order[j] = order[j - 1]
            order[j - 1] = tmp
            j -= 1
    for i in range(3):
        if _cmp_rows(rows[order[i]], rows[order[i + 1]], depth) == 0:
            return 0
    for i in range(4):
        pos[order[i]] = i
    if (pos[0] & 1) != (pos[1] & 1):
        return 0
    return 1 if (pos[2] - pos[0]) % 4 == 1 else -1


def crossings(int g, u_in, w_in):
    cdef list u = list(u_in)
    cdef list w = list(w_in)
    cdef int nu = len(u), nw = len(w)
    if nu == 0 or nw == 0:
        return []
    cdef int n4 = 4 * g
    # turn sequences are periodic after the first entry, so two distinct
    # rays diverge within a Fine-Wilf window of the two periods
    cdef int depth = nu + nw + 6
    cdef int totlen = (2 * nu + 2 * nw) * depth
    cdef array.array buf = array.array("i", [0]) * totlen
    cdef int* base = buf.data.as_ints
    cdef int* uf = base
    cdef int* ub = base + nu * depth
    cdef int* wf = base + 2 * nu * depth
    cdef int* wb = base + (2 * nu + nw) * depth
    _fill_rays(u, nu, depth, n4, False, uf)
    _fill_rays(u, nu, depth, n4, True, ub)
    _fill_rays(w, nw, depth, n4, False, wf)
    _fill_rays(w, nw, depth, n4, True, wb)
    cdef list out = []
    cdef int i, j, ui_prev, s, jm
    for i in range(nu):
        jm = (i - 1) % nu
        if jm < 0:
            jm += nu
        ui_prev = u[jm]
        for j in range(nw):
            jm = (j - 1) % nw
            if jm < 0:
                jm += nw
            if w[jm] == ui_prev or w[j] == -ui_prev:
                continue
            s = _linked_c(
                uf + i * depth, ub + i * depth, wf + j * depth, wb + j * depth, depth
            )
            if s:
                out.append((i, j, s))
    return out


_isect_cache = {}
_self_cache = {}


def intersection_words(int g, u, w):
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


def self_crossings(int g, u):
    key = (g, tuple(u))
    hit = _self_cache.get(key)
    if hit is None:
        hit = len(crossings(g, list(u), list(u))) // 2
        if len(_self_cache) > 300000:
            _self_cache.clear()
        _self_cache[key] = hit
    return hit


# ---------------------------------------------------------------------------
# Dehn twist along a drawn overlay
# ---------------------------------------------------------------------------

TWIST_SIGN = 1

_twist_cache = {}


def twist_word(int g, u_in, w_in, int k, tables=None):
    cdef list u = list(u_in)
    cdef list w = list(w_in)
    if k == 0 or not u or not w:
        return canon_cyclic(w)
    key = (g, tuple(u), tuple(w), k)
    hit = _twist_cache.get(key)
    if hit is not None:
        return hit
    if canon_cyclic(u) == canon_cyclic(w):
        result = canon_cyclic(w)
        _twist_cache[key] = result
        return result
    if tables is None:
        tables = triangle_tables(g)
    wu = words_to_weights(g, [u])
    ww = words_to_weights(g, [w])
    tu = trace(g, wu, tables)[0]
    tw_ = trace(g, ww, tables)[0]
    hits = _overlay(g, tu, tw_, wu, ww, tables)
    cdef list out = []
    cdef int nu = len(tu["crossings"])
    cdef int nw = len(tw_["crossings"])
    lett_u = tu["crossing_letters"]
    lett_w = tw_["crossing_letters"]
    cdef int t, s, u_idx, sign, rep, kabs, idx
    cdef bint forward
    if not hits:
        result = canon_cyclic(w)
        _twist_cache[key] = result
        return result
    kabs = k if k > 0 else -k
    for t in range(nw):
        if lett_w[t] is not None:
            out.append(lett_w[t])
        for (u_idx, sign) in hits.get(t, ()):
            forward = sign * k > 0  # TWIST_SIGN = +1
            for rep in range(kabs):
                if forward:
                    for s in range(1, nu + 1):
                        lt = lett_u[(u_idx + s) % nu]
                        if lt is not None:
                            out.append(lt)
                else:
                    for s in range(nu):
                        idx = u_idx - s
                        idx %= nu
                        if idx < 0:
                            idx += nu
                        lt = lett_u[idx]
                        if lt is not None:
                            out.append(-lt)
    result = canon_cyclic(out)
    if len(_twist_cache) > 100000:
        _twist_cache.clear()
    _twist_cache[key] = result
    return result
