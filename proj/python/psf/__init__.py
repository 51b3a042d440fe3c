"""Normal pseudomanifolds: face numbers, folds, optimality and decompositions.

Complexes are immutable; every operation returns a new one. Errors raise
PsfError with args (code, message).
"""

from ._psf import *  # noqa: F401,F403
from ._psf import PsfError, __doc__ as _native_doc  # noqa: F401

MODES = ("one-singularity", "two-singularity-suspension", "two-singularity-edge-fold")
