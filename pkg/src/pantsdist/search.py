"""Path certificates and bounded breadth-first search for move distances.

A MovePath is a sequence of pants decompositions in which consecutive
entries differ in exactly one curve; in the pants flavour the replaced and
replacing curves must additionally meet minimally (once in a one-holed
torus complement, twice in a four-holed sphere).  The length of a verified
path whose endpoints define the two handlebodies is an upper bound for the
move distance of the diagram; absence of a path within a search budget is
never evidence about the true distance.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from pantsdist.handlebody import defines_handlebody
from pantsdist.pants import (
    HandleType,
    PantsDecomposition,
    PantsError,
    dual_moves,
    handle_type,
    pants_moves,
    validate_pants,
)
from pantsdist.surface_model import build_surface, dehn_twist, geometric_intersection

DUAL = "dual"
PANTS = "pants"


class ResourceExhausted(RuntimeError):
    """Search hit its node or memory budget; distinct from 'not found'."""


class MovePath:
    """A certificate path: flavor 'dual' or 'pants' plus the vertex list."""

    __slots__ = ("flavor", "steps")

    def __init__(self, flavor, steps):
        if flavor not in (DUAL, PANTS):
            raise ValueError("flavor must be 'dual' or 'pants'")
        steps = tuple(steps)
        if not steps:
            raise ValueError("a path needs at least one decomposition")
        self.flavor = flavor
        self.steps = steps

    def __len__(self):
        return len(self.steps) - 1

    def __eq__(self, other):
        return (
            isinstance(other, MovePath)
            and self.flavor == other.flavor
            and self.steps == other.steps
        )

    def __repr__(self):
        return "MovePath(flavor=%r, length=%d)" % (self.flavor, len(self))

    def to_json(self):
        return {
            "flavor": self.flavor,
            "genus": self.steps[0].genus,
            "steps": [L.to_json() for L in self.steps],
        }

    @classmethod
    def from_json(cls, data):
        surface = build_surface(int(data["genus"]))
        steps = [PantsDecomposition.from_json(s, surface) for s in data["steps"]]
        return cls(data["flavor"], steps)


def path_step_diff(prev, cur):
    """(slot in prev, old curve, new curve) when the decompositions differ
    in exactly one curve, else None."""
    old = [c for c in prev.curves if c not in cur.curves]
    new = [c for c in cur.curves if c not in prev.curves]
    if len(old) != 1 or len(new) != 1:
        return None
    return prev.curves.index(old[0]), old[0], new[0]


def check_path(path):
    """Structural MovePath invariants; returns (ok, reason)."""
    surface = path.steps[0].surface
    for idx, L in enumerate(path.steps):
        try:
            validate_pants(surface, L.curves)
        except PantsError as exc:
            return False, "step %d: invalid decomposition (%s)" % (idx, exc)
    for idx in range(1, len(path.steps)):
        prev, cur = path.steps[idx - 1], path.steps[idx]
        diff = path_step_diff(prev, cur)
        if diff is None:
            ndiff = len(set(c.weights for c in prev.curves)
                        - set(c.weights for c in cur.curves))
            return False, "step %d: differs in %d curves" % (idx, ndiff)
        slot, old, new = diff
        if path.flavor == PANTS:
            htype = handle_type(prev, slot)
            need = 1 if htype == HandleType.ONCE_PUNCTURED_TORUS else 2
            got = geometric_intersection(surface, old, new)
            if got != need:
                return False, (
                    "step %d: pants flavour requires %d intersections with "
                    "the replaced curve (%s complement), got %d"
                    % (idx, need, htype.value, got)
                )
    return True, "ok"


def verify_between(path, side_start, side_end):
    """Full verification against explicit start and end markings."""
    ok, reason = check_path(path)
    if not ok:
        return False, reason
    if not defines_handlebody(path.steps[0], side_start):
        return False, "first decomposition does not define the start side"
    if not defines_handlebody(path.steps[-1], side_end):
        return False, "last decomposition does not define the end side"
    return True, "ok"


def verify_path(path, d, explain=False):
    """True iff the path is a valid certificate for the diagram: all move
    invariants hold, the first decomposition defines side1 and the last
    defines side2."""
    ok, reason = verify_between(path, d.side1, d.side2)
    if explain:
        return ok, reason
    return ok


@dataclass(frozen=True)
class SearchConfig:
    radius: int = 3
    twist_bound: int = 2
    max_nodes: int = 50000
    seed_twists: int = 0

    def __post_init__(self):
        for name in ("radius", "twist_bound", "max_nodes", "seed_twists"):
            if getattr(self, name) < 0:
                raise ValueError("%s must be non-negative" % name)

    def to_json(self):
        return {
            "radius": self.radius,
            "twist_bound": self.twist_bound,
            "max_nodes": self.max_nodes,
            "seed_twists": self.seed_twists,
        }

    @classmethod
    def from_json(cls, data):
        return cls(**{k: int(v) for k, v in data.items()})


def seed_decompositions(d, config):
    """Start vertices: the stored side1 seed plus up to seed_twists twisted
    variants that still define side1 (twists along the goal side's seed
    curves, filtered by the defining predicate)."""
    surface = d.surface
    starts = {d.seed1.key(): d.seed1}
    if config.seed_twists:
        twisters = list(d.seed2.curves)
        frontier = [d.seed1]
        for _ in range(config.seed_twists):
            new_frontier = []
            for L in frontier:
                for t in twisters:
                    for k in (1, -1):
                        try:
                            curves = [
                                dehn_twist(surface, t, c, k) for c in L.curves
                            ]
                            cand = validate_pants(surface, curves)
                        except (ValueError, PantsError):
                            continue
                        if cand.key() in starts:
                            continue
                        if defines_handlebody(cand, d.side1):
                            starts[cand.key()] = cand
                            new_frontier.append(cand)
            frontier = new_frontier
    return [starts[k] for k in sorted(starts)]


def upper_bound_distance(d, flavor, config, threads=1):
    """Minimal-length path found by layer-ordered BFS from the side1 seeds
    to a decomposition defining side2, or None when no path exists within
    the budget.  Raises ResourceExhausted past max_nodes.  Deterministic
    for any thread count."""
    if flavor not in (DUAL, PANTS):
        raise ValueError("flavor must be 'dual' or 'pants'")
    moves = dual_moves if flavor == DUAL else pants_moves
    goal = lambda L: defines_handlebody(L, d.side2)  # noqa: E731

    starts = seed_decompositions(d, config)
    visited = {}
    for L in starts:
        visited.setdefault(L.key(), (None, L))
    for L in starts:
        if goal(L):
            return MovePath(flavor, [L])

    def expand(L):
        out = []
        for i in range(len(L.curves)):
            try:
                neighbors = moves(L, i, config.twist_bound)
            except PantsError:
                continue
            out.extend(neighbors)
        out.sort(key=lambda n: n.key())
        return out

    frontier = sorted(starts, key=lambda L: L.key())
    pool = ThreadPoolExecutor(max_workers=max(1, threads)) if threads > 1 else None
    try:
        for _depth in range(config.radius):
            if not frontier:
                break
            if pool is not None:
                neighbor_lists = list(pool.map(expand, frontier))
            else:
                neighbor_lists = [expand(L) for L in frontier]
            next_frontier = []
            for L, neighbors in zip(frontier, neighbor_lists):
                for nb in neighbors:
                    key = nb.key()
                    if key in visited:
                        continue
                    visited[key] = (L.key(), nb)
                    if len(visited) > config.max_nodes:
                        raise ResourceExhausted(
                            "visited more than %d decompositions" % config.max_nodes
                        )
                    if goal(nb):
                        steps = [nb]
                        parent = L.key()
                        while parent is not None:
                            parent, node = visited[parent][0], visited[parent][1]
                            steps.append(node)
                        steps.reverse()
                        return MovePath(flavor, steps)
                    next_frontier.append(nb)
            frontier = next_frontier
    finally:
        if pool is not None:
            pool.shutdown(wait=False)
    return None


def lower_bound(profile, g):
    """Paper lower bounds for the move distance of a genus-g splitting:
    g - b - n always, 3g-3 for an (asserted) irreducible splitting, 6g-7
    for a strongly irreducible one.  Returns (bound, conditional)."""
    bound = max(0, g - profile.b - profile.n)
    conditional = False
    if profile.irreducible:
        cand = 3 * g - 3
        if cand > bound:
            bound, conditional = cand, True
    if profile.strongly_irreducible:
        cand = 6 * g - 7
        if cand > bound:
            bound, conditional = cand, True
    return bound, conditional


# ---------------------------------------------------------------------------
# stabilization of certificates
# ---------------------------------------------------------------------------


def _find_slot(L, curve):
    for i, c in enumerate(L.curves):
        if c == curve:
            return i
    return None


def stabilize_path(path, d, h, fixed_loop=None):
    """Transform a verified certificate for d into one for the (h-g)-fold
    stabilization of d.

    The construction follows the stabilization pattern: a companion loop
    parallel to one curve of the start decomposition, the boundary of the
    new handle, and the new handle's disk-bounding curve; one extra move
    relocates the companion whenever it obstructs a move, and one final
    move per added handle converts the handle curve to a disk bounder for
    the far side.  Length <= 2*len(path) + (h - g), and <= len(path) +
    (h - g) when fixed_loop is given (that curve must appear in every
    step).
    """
    from pantsdist.heegaard import stabilize

    g = d.surface.genus
    if h <= g:
        raise ValueError("target genus must exceed the diagram genus")
    ok, reason = verify_path(path, d, explain=True)
    if not ok:
        raise ValueError("input path fails verification: %s" % reason)
    fixed_curve = None
    if fixed_loop is not None:
        fixed_curve = path.steps[0].curves[fixed_loop]
        for L in path.steps:
            if _find_slot(L, fixed_curve) is None:
                raise ValueError("fixed_loop is moved along the path")

    cur_path, cur_d = path, d
    for _ in range(h - g):
        cur_path, cur_d = _stabilize_once(cur_path, cur_d, fixed_curve)
        if fixed_curve is not None:
            fixed_curve = _reembed_curve(cur_d.surface, fixed_curve)
    budget = 2 * len(path) + (h - g)
    if fixed_loop is not None:
        budget = len(path) + (h - g)
    if len(cur_path) > budget:
        raise AssertionError(
            "stabilized path length %d exceeds the %d bound"
            % (len(cur_path), budget)
        )
    return cur_path


def _reembed_curve(big_surface, curve):
    from pantsdist.surface_model import CurveClass

    return CurveClass._from_crossing_word(big_surface, list(curve.crossing_word))


def _companion_candidates(big, base_curves, handle_bdy, disk1):
    """Candidate companion curves: embedded products of complement cycles
    of the current decomposition-with-handle, in increasing word length.
    All candidates are disjoint from the base curves by construction."""
    from pantsdist import _kernel as K
    from pantsdist.heegaard import complement_cycles
    from pantsdist.surface_model import CurveClass

    partial = list(base_curves) + [handle_bdy, disk1]
    cycles = complement_cycles(big, partial)
    words = []
    for _, w in cycles:
        words.append(w)
    n = len(cycles)
    for x in range(n):
        rx, wx = cycles[x]
        for y in range(n):
            if x == y:
                continue
            ry, wy = cycles[y]
            if rx != ry:
                continue
            words.append(wx + wy)
            words.append(wx + K.inverse_word(wy))
            for e in range(n):
                if e in (x, y):
                    continue
                re_, we = cycles[e]
                if re_ != rx:
                    continue
                conj = we + wy + K.inverse_word(we)
                words.append(wx + conj)
                words.append(wx + K.inverse_word(conj))
    seen = set()
    ordered = []
    for w in words:
        cw = K.canon_cyclic(w)
        if cw and cw not in seen:
            seen.add(cw)
            ordered.append(cw)
    ordered.sort(key=lambda cw: (len(cw), cw))
    for cw in ordered:
        try:
            yield CurveClass._from_crossing_word(big, list(cw))
        except ValueError:
            continue


def _stabilize_once(path, d, fixed_curve):
    """One stabilization of a certificate.

    A companion loop pairing the new handle boundary with a host curve is
    added to every step; whenever no single companion coexists with two
    consecutive steps, the companion is relocated to a new host with one
    extra move.  A final move swaps the handle's disk curve to the far
    side.
    """
    from pantsdist.heegaard import stabilize

    d2 = stabilize(d)
    big = d2.surface
    handle_bdy = d2.new_handle_boundary
    disk1 = d2.new_disk_curves[0]  # bounds on side1 of the stabilization
    disk2 = d2.new_disk_curves[1]  # bounds on side2

    steps_re = [[_reembed_curve(big, c) for c in L.curves] for L in path.steps]
    n_steps = len(steps_re)

    moved_at = [None] * n_steps  # curve moved when entering step idx
    for idx in range(1, n_steps):
        info = path_step_diff(path.steps[idx - 1], path.steps[idx])
        if info is None:
            raise AssertionError("input path stopped being a move sequence")
        moved_at[idx] = _reembed_curve(big, info[1])

    all_curves = []
    seen = set()
    for curves in steps_re:
        for c in curves:
            if c.weights not in seen:
                seen.add(c.weights)
                all_curves.append(c)

    def try_companion(host, span):
        """A companion attached to host that coexists with the given span
        of steps (a range of step indices)."""
        for cand in _companion_candidates(
            big, steps_re[span[0]], handle_bdy, disk1
        ):
            if any(
                geometric_intersection(big, cand, c) != 0 or cand == c
                for idx in span
                for c in steps_re[idx]
            ):
                continue
            try:
                full = validate_pants(
                    big, steps_re[span[0]] + [handle_bdy, disk1, cand]
                )
            except PantsError:
                continue
            if _pairs_with(full, cand, host, handle_bdy):
                return cand
        return None

    never_moved = [
        c
        for c in steps_re[0]
        if all(any(c == x for x in curves) for curves in steps_re)
    ]
    if fixed_curve is not None:
        fixed_re = _reembed_curve(big, fixed_curve)
        host_order = [fixed_re] + [c for c in never_moved if c != fixed_re]
    else:
        host_order = never_moved + [
            c for c in steps_re[0] if not any(c == x for x in never_moved)
        ]

    # a companion that coexists with every step needs no relocations
    par = host = None
    for cand_host in host_order:
        par = try_companion(cand_host, range(n_steps))
        if par is not None:
            host = cand_host
            break
    if par is None and fixed_curve is not None:
        raise AssertionError(
            "no relocation-free companion exists for the fixed-loop bound"
        )

    new_steps = []
    if par is not None:
        for curves in steps_re:
            new_steps.append(
                validate_pants(big, curves + [handle_bdy, disk1, par])
            )
    else:
        # stepwise with relocations: attach to a host valid for a prefix,
        # relocating (one extra move) when the companion stops coexisting
        idx = 0
        par = None
        while idx < n_steps:
            if par is None or any(
                geometric_intersection(big, par, c) != 0
                for c in steps_re[idx]
            ):
                chosen = None
                for cand_host in _relocation_host_order(
                    steps_re, idx, moved_at, big
                ):
                    cand = try_companion(cand_host, range(idx, idx + 1))
                    if cand is None:
                        continue
                    if par is not None:
                        # the relocation itself must be a legal move from
                        # the previous decomposition
                        prev = new_steps[-1]
                        slot = _find_slot(prev, par)
                        try:
                            reloc = prev.replace(slot, cand)
                        except PantsError:
                            continue
                        new_steps.append(reloc)
                    chosen = cand
                    break
                if chosen is None:
                    raise AssertionError(
                        "no companion relocation found at step %d" % idx
                    )
                par = chosen
            new_steps.append(
                validate_pants(big, steps_re[idx] + [handle_bdy, disk1, par])
            )
            idx += 1

    # final cleanup move: swap the handle's disk curve to the far side
    slot = _find_slot(new_steps[-1], disk1)
    if slot is None:
        raise AssertionError("handle curve lost during stabilization")
    new_steps.append(new_steps[-1].replace(slot, disk2))
    out = MovePath(path.flavor, new_steps)
    okb, reason = verify_path(out, d2, explain=True)
    if not okb:
        raise AssertionError("stabilized path fails verification: %s" % reason)
    return out, d2


def _relocation_host_order(steps_re, idx, moved_at, big):
    """Hosts for a companion needed from step idx on: curves of that step,
    preferring ones not moved at the next step, in canonical order."""
    cur = steps_re[idx]
    next_moved = moved_at[idx + 1] if idx + 1 < len(moved_at) else None
    preferred = [c for c in cur if next_moved is None or c != next_moved]
    rest = [c for c in cur if c not in preferred]
    preferred.sort(key=lambda c: c.weights)
    rest.sort(key=lambda c: c.weights)
    return preferred + rest


def _pairs_with(full, cand, host, handle_bdy):
    """Does cand cut off a pants containing host and the handle boundary?"""
    surface = full.surface
    union = full.union()
    entry = surface.traced(union.weights)
    comps, regs = entry.components, entry.regions
    from pantsdist import _kernel as K

    word_to_comp = {}
    for i, comp in enumerate(comps):
        word_to_comp[K.canon_cyclic(comp["letters"])] = i
    sides = regs["component_sides"]

    def regions_of(curve):
        return set(sides[word_to_comp[curve.component_words[0]]])

    shared = regions_of(cand) & regions_of(host) & regions_of(handle_bdy)
    return bool(shared)
