"""Exception hierarchy shared by every stage of the codec."""


class LppieError(Exception):
    """Base class. ``block`` and ``chunk`` locate a failure inside a container."""

    def __init__(self, message, block=None, chunk=None):
        super().__init__(message)
        self.message = message
        self.block = block
        self.chunk = chunk

    def __reduce__(self):
        return (type(self), (self.message, self.block, self.chunk))

    def __str__(self):
        where = []
        if self.block is not None:
            where.append(f"block {self.block}")
        if self.chunk is not None:
            where.append(f"chunk {self.chunk}")
        if where:
            return f"{', '.join(where)}: {self.message}"
        return self.message

    def located(self, block=None, chunk=None):
        """Return a copy of this error tagged with its position."""
        return type(self)(self.message, block=block, chunk=chunk)


class UsageError(LppieError, ValueError):
    pass


class EmptyBlock(UsageError):
    pass


class MalformedDigits(UsageError):
    pass


class InvalidChunkSize(UsageError):
    pass


class InvalidConfig(UsageError):
    pass


class DecodeError(LppieError):
    """Anything that means the container cannot be trusted."""


class CorruptValue(DecodeError):
    pass


class ChunkOverflow(DecodeError):
    pass


class AmbiguousInverse(DecodeError):
    pass


class UnsupportedFormat(DecodeError):
    pass


class CorruptContainer(DecodeError):
    pass


class IntegrityFailure(DecodeError):
    pass


class PrecisionExhausted(LppieError):
    pass


class IoFailure(LppieError):
    pass
