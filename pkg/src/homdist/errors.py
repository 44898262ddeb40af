"""Exception hierarchy shared by all homdist modules."""


class HomdistError(Exception):
    """Base class for all homdist errors."""


class GraphSpecError(HomdistError):
    """A graph spec string or edge-list file failed to parse."""


class ResourceLimitError(HomdistError):
    """An enumeration or search exceeded its configured budget."""


class SizeLimitError(HomdistError):
    """A graph exceeds the vertex cap for symmetry computations."""


class DomainError(HomdistError):
    """An operation was applied to an argument outside its domain
    (edgeless graph, mismatched weight function, non-optimal map, ...)."""
