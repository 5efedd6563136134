"""
Exceptions raised by vertex-dwpf. Messages carry the offending values in brackets.
"""


class DWPFError(Exception):
    pass


class CoprimalityError(DWPFError):
    pass


class IndexRangeError(DWPFError):
    pass


class CapacityError(DWPFError):
    """
    Raised when an enumeration or memory cap would be exceeded. Never silently truncated.
    """
    pass


class PreconditionError(DWPFError):
    pass


class PluginFormatError(DWPFError):
    pass


class ConfigError(DWPFError):
    pass
