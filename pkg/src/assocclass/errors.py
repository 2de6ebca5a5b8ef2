class AssocClassError(Exception):
    """Base class for errors raised by this package."""


class CorpusError(AssocClassError):
    pass


class ModelError(AssocClassError):
    pass


class ConfigError(AssocClassError):
    pass
