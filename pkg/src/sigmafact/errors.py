"""Exception hierarchy shared by all modules."""


class GroupError(ValueError):
    pass


class DegreeMismatch(GroupError):
    pass


class NotSubgroupError(GroupError):
    pass


class NotNormalError(GroupError):
    pass


class ThresholdExceeded(GroupError):
    def __init__(self, what, size, bound):
        super().__init__(f"{what}: {size} exceeds the configured bound {bound}")
        self.size = size
        self.bound = bound


class PartitionError(ValueError):
    pass


class ParseError(ValueError):
    """Malformed cycle string, partition string or corpus record."""

    def __init__(self, message, text="", line=None, column=None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if column is not None:
            where.append(f"column {column}")
        prefix = f"{', '.join(where)}: " if where else ""
        super().__init__(f"{prefix}{message}" + (f" in {text!r}" if text else ""))
        self.line = line
        self.column = column
