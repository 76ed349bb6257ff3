"""
Exceptions raised by the partition operators
"""


class PartitionError(Exception):
    """Base class for every error raised by app.partitions"""


class PartitionParseError(PartitionError, ValueError):
    """Text does not follow the partition grammar"""


class PreconditionError(PartitionError, ValueError):
    """
    An operator was called outside its domain.

    `condition` names the violated requirement (e.g. "e-regular", "L-partition")
    so callers can report it without parsing the message.
    """

    def __init__(self, condition: str, message: str):
        super().__init__(f"{message} (requires {condition})")
        self.condition = condition


class InvariantError(PartitionError):
    """A property the algorithms guarantee did not hold"""
