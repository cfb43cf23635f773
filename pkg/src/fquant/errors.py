"""Exception hierarchy.

Every error carries a stable machine-readable ``code`` which the CLI
reports on stderr.
"""


class FQError(Exception):
    code = "fq_error"


class InvalidGroup(FQError):
    code = "invalid_group"


class InvalidWeight(FQError):
    code = "invalid_weight"


class NonDominant(FQError):
    code = "non_dominant"


class NotACharacter(FQError):
    code = "not_a_character"


class GroupMismatch(FQError):
    code = "group_mismatch"


class InvalidEmbedding(FQError):
    code = "invalid_embedding"


class RadiusExceedsTrust(FQError):
    code = "radius_exceeds_trust"


class InsufficientRadius(FQError):
    code = "insufficient_radius"


class NegativeCharacter(FQError):
    code = "negative_character"


class EmptyTrust(FQError):
    code = "empty_trust"


class NotProper(FQError):
    code = "not_proper"


class NotFullDimensional(FQError):
    code = "not_full_dimensional"


class InvalidPolytope(FQError):
    code = "invalid_polytope"


class NotAdapted(FQError):
    code = "not_adapted"


class NotInterior(FQError):
    code = "not_interior"


class NoConvergence(FQError):
    code = "no_convergence"


class OriginNotInterior(FQError):
    code = "origin_not_interior"


class InputError(FQError):
    """Malformed user input (bad JSON, bad flag values)."""

    code = "input_error"
