"""Exception types shared across the package."""


class BinseqError(Exception):
    """Base class for all errors raised by this package."""


class InvalidCharacter(BinseqError):
    """A word string contained something other than '0' or '1'."""

    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"invalid character {char!r} at position {position}")


class EmptyPattern(BinseqError):
    """An operation that needs a non-empty pattern got the empty word."""

    def __init__(self):
        super().__init__("pattern must be non-empty")


class BudgetExceeded(BinseqError):
    """Requested word length is beyond the configured enumeration cap."""

    def __init__(self, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"enumeration over 2^{n} words exceeds cap n <= {cap}")


class OutOfStatedRange(BinseqError):
    """The closed form for this k is only asserted for larger n."""

    def __init__(self, n: int, k: int):
        self.n = n
        self.k = k
        super().__init__(
            f"closed form for k={k} is not asserted at n={n}; "
            "use the exhaustive spectrum instead"
        )


class PatternTooLong(BinseqError):
    """Word length n is smaller than the pattern length."""

    def __init__(self, n: int, l: int):
        self.n = n
        self.l = l
        super().__init__(f"need n >= {l}, got n={n}")


class NotCovered(BinseqError):
    """Prediction mode requested for a pattern outside the covered family."""

    def __init__(self, pattern: str):
        self.pattern = pattern
        super().__init__(
            f"no internal-zero prediction for {pattern!r}: more than 3 runs"
        )


class PreconditionViolated(BinseqError):
    """An input sequence fails a property the analysis assumes."""

    def __init__(self, which: str, reason: str):
        self.which = which
        self.reason = reason
        super().__init__(f"sequence {which}: {reason}")
