"""Exception types shared across the package."""


class Rouge2Error(Exception):
    """Base class for package errors."""


class LoadError(Rouge2Error):
    """A resource file could not be read."""


class ParseError(Rouge2Error, ValueError):
    """Input did not follow its documented format.

    ``location`` is a 1-based line number or 0-based token index, depending
    on the format being parsed.
    """

    def __init__(self, message: str, location: int | None = None, source: str | None = None):
        prefix = ""
        if source is not None:
            prefix += f"{source}: "
        if location is not None:
            prefix += f"{location}: "
        super().__init__(prefix + message)
        self.location = location
        self.source = source


class ValidationError(Rouge2Error, ValueError):
    """A structurally valid record violates a semantic rule."""


class ConfigError(Rouge2Error):
    """Fatal evaluation setup problem (bad paths, unparseable file names)."""
