"""Exception hierarchy shared by all balfam modules."""


class BalfamError(ValueError):
    """Base class for every error raised on bad input or unmet preconditions."""


class MalformedInput(BalfamError):
    pass


class ElementOutOfRange(BalfamError):
    pass


class GroundSetTooLarge(BalfamError):
    pass


class GroundSetTooSmall(BalfamError):
    pass


class DuplicateMember(BalfamError):
    pass


class EmptyFamily(BalfamError):
    pass


class EmptyIndexSet(BalfamError):
    pass


class IndexOutOfRange(BalfamError):
    pass


class InvalidUniformity(BalfamError):
    pass


class DimensionMismatch(BalfamError):
    pass


class OneSidedRelation(BalfamError):
    """A kernel vector whose nonzero entries all share one sign."""


class NotUniform(BalfamError):
    pass


class InsufficientFamily(BalfamError):
    """The family is below the size threshold the finder needs."""


class EmptyUniformity(BalfamError):
    pass


class EmptySetMember(BalfamError):
    pass


class FamilyTooLarge(BalfamError):
    pass
