"""Exception types shared across the package."""


class BinGrayError(ValueError):
    pass


class PartitionSyntaxError(BinGrayError):
    """Malformed partition text: bad token, non power-of-two part, bad multiplicity."""


class DomainError(BinGrayError):
    """Well-formed input outside the domain (a part of size 1, stepping back from the empty partition)."""


class StartOfSequence(DomainError):
    pass
