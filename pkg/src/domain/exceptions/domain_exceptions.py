"""Custom exceptions for the GENESIS SFC embedding domain."""


class GenesisException(Exception):
    """Base exception for all domain errors."""
    pass


class TopologyError(GenesisException):
    """Raised when the substrate network is invalid or cannot be queried."""
    pass


class InvalidArityError(TopologyError):
    """Raised when a fat-tree is requested with an odd or non-positive arity."""
    pass


class NodeNotFoundError(TopologyError):
    """Raised when a node is not part of the topology."""
    pass


class UnreachableError(TopologyError):
    """Raised when path search exhausts its open set without reaching the destination."""
    pass


class EncodingError(GenesisException):
    """Raised when a feature vector cannot be built for the configured universe."""
    pass


class ShapeError(GenesisException):
    """Raised when a feature vector does not match a predictor's input width."""
    pass


class ContractViolationError(GenesisException):
    """Raised when an operation is called on data that breaks its precondition."""
    pass


class ConfigurationError(GenesisException):
    """Raised when configuration, scenario or algorithm selection is invalid."""
    pass


class ExportError(GenesisException):
    """Raised when persisting results fails."""
    pass
