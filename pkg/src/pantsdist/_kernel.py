"""Kernel backend selection.

The hot combinatorial routines live in a compiled Cython module
(pantsdist._ckernel) with a pure-Python twin (pantsdist._kernel_py).
The compiled kernel is preferred when importable; set PANTSDIST_PURE=1 to
force the pure backend.  Both expose the same functions and are tested
against each other.
"""

import os

if os.environ.get("PANTSDIST_PURE"):
    from pantsdist import _kernel_py as _impl
else:
    try:
        from pantsdist import _ckernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from pantsdist import _kernel_py as _impl

BACKEND = _impl.BACKEND

reduce_word = _impl.reduce_word
cyclic_reduce = _impl.cyclic_reduce
inverse_word = _impl.inverse_word
canon_cyclic = _impl.canon_cyclic
rotate = _impl.rotate
pair_of_side = _impl.pair_of_side
is_primary = _impl.is_primary
partner = _impl.partner
exit_side = _impl.exit_side
entry_side = _impl.entry_side
letter_of_exit = _impl.letter_of_exit
diag_range = _impl.diag_range
words_to_weights = _impl.words_to_weights
triangle_tables = _impl.triangle_tables
trace = _impl.trace
regions = _impl.regions
crossings = _impl.crossings
intersection_words = _impl.intersection_words
self_crossings = _impl.self_crossings
twist_word = _impl.twist_word
component_pi1_word = _impl.component_pi1_word
prefix_word = _impl.prefix_word
surface_relator = _impl.surface_relator
dehn_reduce_cyclic = _impl.dehn_reduce_cyclic
fragment_graph = _impl.fragment_graph
