"""Iterated base-10 logarithm of a chunk value and its exact inverse.

Forward: ``X <- log10(X)`` while ``X >= 10``; the loop count ``r`` and the
decimal digits of the final ``d`` in [1, 10) form the record. Inverse:
``X <- 10**X`` ``r`` times, then round to the nearest integer.

All transcendental work goes through :mod:`decimal`, whose ``exp``/``ln``/
``log10`` are correctly rounded, so a record decodes to the same integer on
every platform. The inverse's working precision is a function of the record
alone; the encoder's self-check runs exactly the decoder's computation.
"""
from dataclasses import dataclass
from decimal import MAX_EMAX, MIN_EMIN, ROUND_HALF_EVEN, Context, Decimal

from .errors import AmbiguousInverse, ChunkOverflow, CorruptValue, LppieError, PrecisionExhausted
from .radix import digit_count

# Extra digits of working precision on the inverse side. Fixed, because the
# container does not carry the encoder's policy.
DECODE_GUARD = 8

# Largest loop count a materialisable chunk can produce (r = 3 needs 10**10**10).
MAX_LOOPS = 2

_HALF_WINDOW = Decimal("0.25")


@dataclass(frozen=True)
class PrecisionPolicy:
    initial_guard: int = 8
    growth: int = 16
    max_retries: int = 8

    def __post_init__(self):
        if self.initial_guard < 1 or self.growth < 1 or self.max_retries < 1:
            raise ValueError(f"precision policy fields must all be >= 1: {self}")


DEFAULT_POLICY = PrecisionPolicy()


@dataclass(frozen=True)
class IterLogRecord:
    """One compressed chunk: loop count, mantissa of d (point after first digit), chunk width."""

    r: int
    mantissa: str
    digit_len: int

    def __post_init__(self):
        m = self.mantissa
        if not (0 <= self.r <= MAX_LOOPS):
            raise CorruptValue(f"loop count {self.r} out of range")
        if self.digit_len < 1:
            raise CorruptValue(f"digit length {self.digit_len} out of range")
        if not m or not (m.isascii() and m.isdigit()):
            raise CorruptValue(f"mantissa {m[:16]!r} is not a digit string")
        if self.r == 0 and len(m) != 1:
            raise CorruptValue("a zero-loop record holds exactly one digit")
        if self.r > 0 and m[0] == "0":
            raise CorruptValue("mantissa of a looped record must lie in [1, 10)")

    @property
    def mantissa_len(self):
        return len(self.mantissa)

    def d(self):
        """The stored value as a Decimal."""
        return Decimal(f"{self.mantissa[0]}.{self.mantissa[1:]}")


def classify_r(x0):
    """Loop count the forward chain needs for ``x0``, without any logarithms."""
    if x0 < 0:
        raise ValueError("chunk values are non-negative")
    if x0 <= 9:
        return 0
    if x0 < 10**10:
        return 1
    return 2


def invert_precision(rec):
    """Significant digits used when decoding ``rec``."""
    width = max(rec.digit_len, rec.mantissa_len)
    return width + DECODE_GUARD + len(str(rec.digit_len))


def _context(prec):
    return Context(prec=prec, rounding=ROUND_HALF_EVEN, Emax=MAX_EMAX, Emin=MIN_EMIN)


def iterlog_invert(rec):
    """Exponentiate ``rec.r`` times and round; the inverse of :func:`iterlog_forward`."""
    if rec.r == 0:
        return int(rec.mantissa)
    ctx = _context(invert_precision(rec))
    ln10 = ctx.ln(Decimal(10))
    x = rec.d()
    for _ in range(rec.r):
        # 10**x has int(x) + 1 digits, give or take a rounding carry.
        if x > rec.digit_len:
            raise ChunkOverflow(f"10**{x:.6g} cannot fit in {rec.digit_len} digits")
        x = ctx.exp(ctx.multiply(x, ln10))
    nearest = x.to_integral_value(rounding=ROUND_HALF_EVEN, context=ctx)
    if ctx.copy_abs(ctx.subtract(x, nearest)) > _HALF_WINDOW:
        raise AmbiguousInverse("final value is not within 0.25 of an integer")
    value = int(nearest)
    if digit_count(value) > rec.digit_len:
        raise ChunkOverflow(f"decoded value exceeds {rec.digit_len} digits")
    return value


def _log_digits(x0, r, prec):
    """Digits of the r-fold log10 of x0, truncated to ``prec`` significant digits."""
    ctx = _context(prec + 2 + len(str(prec)))
    x = Decimal(x0)
    for _ in range(r):
        x = ctx.log10(x)
    if x.adjusted() != 0:
        # Rounded up to 10 (or down below 1); more precision separates it.
        return None
    sign, digits, _ = x.as_tuple()
    return "".join(map(str, digits[:prec]))


def _verifies(x0, r, mantissa, digit_len):
    if mantissa[0] == "0":
        return False
    try:
        return iterlog_invert(IterLogRecord(r, mantissa, digit_len)) == x0
    except LppieError:
        return False


def _length_estimate(x0_digits, r):
    # Mantissa digits usually needed to pin x0 to within 0.25 after r exponentiations.
    if r == 1:
        return x0_digits + 2
    return x0_digits + len(str(x0_digits)) + 2


def _shortest_prefix(x0, r, full, digit_len, x0_digits):
    """Shortest verifying prefix of ``full``, or None if even ``full`` fails.

    Starts at the analytic estimate and walks down while shorter prefixes still
    verify, or up until one does.
    """
    n = len(full)
    length = max(1, min(_length_estimate(x0_digits, r), n))
    if _verifies(x0, r, full[:length], digit_len):
        while length > 1 and _verifies(x0, r, full[:length - 1], digit_len):
            length -= 1
        return full[:length]
    for length in range(length + 1, n + 1):
        if _verifies(x0, r, full[:length], digit_len):
            return full[:length]
    return None


def iterlog_forward(x0, digit_len, policy=DEFAULT_POLICY):
    """Reduce ``x0`` by repeated log10 to a self-verified :class:`IterLogRecord`."""
    if x0 < 0:
        raise ValueError("chunk values are non-negative")
    x0_digits = digit_count(x0)
    if x0_digits > digit_len:
        raise ChunkOverflow(f"value has {x0_digits} digits, chunk width is {digit_len}")
    r = classify_r(x0)
    if r == 0:
        return IterLogRecord(0, str(x0), digit_len)
    prec = digit_len + policy.initial_guard
    for _ in range(policy.max_retries + 1):
        full = _log_digits(x0, r, prec)
        if full is not None:
            mantissa = _shortest_prefix(x0, r, full, digit_len, x0_digits)
            if mantissa is not None:
                return IterLogRecord(r, mantissa, digit_len)
        prec += policy.growth
    raise PrecisionExhausted(
        f"no verified mantissa for a {x0_digits}-digit value after "
        f"{policy.max_retries} retries (last precision {prec - policy.growth})"
    )
