"""Exception types raised by constructors and bounded searches."""


class ModlabError(Exception):
    """Base class for all workbench errors."""


class IllFormedConstants(ModlabError):
    """Structure-constant data is malformed or not well defined modulo the
    component orders."""


class NonAssociative(ModlabError):
    """Multiplication fails associativity on some basis triple."""


class NoIdentity(ModlabError):
    """The declared identity coordinates do not act as a two-sided unit."""


class SizeLimitExceeded(ModlabError):
    """A ring, module, endomorphism ring or search space is larger than the
    configured limit."""


class RingMismatch(ModlabError):
    """Operands live over different base rings."""


class NotSubmodule(ModlabError):
    """A claimed submodule is not an action-closed subgroup of its parent."""


class ParentMismatch(ModlabError):
    """Submodule operands have different parent modules."""


class IdempotentSearchExceeded(ModlabError):
    """Primitive idempotent search ran out of budget."""


class InvalidConfig(ModlabError):
    """Harness configuration references unknown rings, suites or policies."""
