"""Partial group actions, partial cohomology, crossed products and the
associated Picard-semigroup machinery over finite commutative rings."""

from .abelian import FinAbGroup, GroupHom, Subgroup, quotient, smith_normal_form
from .finring import NotAUnit, Ring, RingElem, RingError, idempotents, inverse_in_ideal, parse_ring, unit_group
from .groups import FiniteGroup, build_group
from .paction import (
    PartialAction,
    SubringDescriptor,
    Twisting,
    global_action,
    invariant_subring,
    restrict_global,
    validate_partial,
    validate_twisted,
)

__version__ = "0.1.0"
