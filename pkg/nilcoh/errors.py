"""
Exception hierarchy shared by all nilcoh components.
"""


class NilcohError(Exception):
    pass


class UnsupportedType(NilcohError):
    pass


class GroupTooLarge(NilcohError):
    pass


class DimensionCap(NilcohError):
    pass


class CapExceeded(NilcohError):
    pass


class UnsupportedPrime(NilcohError):
    pass


class InvalidFiltration(NilcohError):
    pass


class ConfigError(NilcohError):
    pass
