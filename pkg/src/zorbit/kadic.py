"""Exact positional base-k digit decomposition of nonnegative integers.

Digits are stored little-endian: ``digits[i]`` is the coefficient of
``base**i``.  Zero is canonically the empty digit vector; ``digit_count``
still reports one digit so a displayed zero has width 1.  Decomposed
values may be arbitrarily large Python ints; bases must fit a machine
word so that every per-digit product downstream stays within 128 bits.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Union

from .errors import DigitDomainError, ParameterDomainError

MAX_BASE = 2**32


def _check_base(base: int) -> None:
    if base < 2:
        raise ParameterDomainError(f"base must be an integer >= 2, got {base}")
    if base > MAX_BASE:
        raise ParameterDomainError(f"base must be <= 2**32, got {base}")


def _check_value(n: int) -> None:
    if n < 0:
        raise ParameterDomainError(f"value must be nonnegative, got {n}")


@dataclass(frozen=True)
class KAdicDigits:
    """Canonical little-endian digit vector of a nonnegative integer.

    Attributes:
        base: the radix, between 2 and 2**32.
        digits: tuple with ``digits[i]`` multiplying ``base**i``.  Trailing
            (most-significant) zeros are trimmed on construction, so zero
            is represented by the empty tuple.
    """

    base: int
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_base(self.base)
        digits = tuple(self.digits)
        for d in digits:
            if not 0 <= d < self.base:
                raise DigitDomainError(f"digit {d} outside [0, {self.base})")
        while digits and digits[-1] == 0:
            digits = digits[:-1]
        object.__setattr__(self, "digits", digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __getitem__(self, index: int) -> int:
        return self.digits[index]


def to_digits(n: int, k: int) -> KAdicDigits:
    """Decompose ``n`` into its canonical base-``k`` digit vector.

    ``n = 0`` yields the empty vector; otherwise the top digit is nonzero
    and recomposition is exact for arbitrarily large ``n``.
    """
    _check_base(k)
    _check_value(n)
    digits = []
    while n:
        n, d = divmod(n, k)
        digits.append(d)
    return KAdicDigits(base=k, digits=tuple(digits))


def from_digits(digits: Union[KAdicDigits, Sequence[int]], base: int | None = None) -> int:
    """Recompose the integer sum(digits[i] * base**i) exactly.

    Accepts either a :class:`KAdicDigits` (whose own base is used) or a raw
    little-endian digit sequence together with ``base``.  Raw sequences may
    carry leading (most-significant) zeros; each digit must lie in
    [0, base).
    """
    if isinstance(digits, KAdicDigits):
        if base is not None and base != digits.base:
            raise ParameterDomainError(
                f"conflicting bases: vector carries {digits.base}, argument says {base}"
            )
        base = digits.base
        seq: Sequence[int] = digits.digits
    else:
        if base is None:
            raise ParameterDomainError("base is required with a raw digit sequence")
        seq = tuple(digits)
    _check_base(base)
    value = 0
    for d in reversed(seq):
        if not 0 <= d < base:
            raise DigitDomainError(f"digit {d} outside [0, {base})")
        value = value * base + d
    return value


def digit_count(n: int, k: int) -> int:
    """Number of base-``k`` digits of ``n``: the m with k**(m-1) <= n < k**m.

    Returns 1 for ``n = 0`` (a displayed zero has one digit).
    """
    _check_base(k)
    _check_value(n)
    if n == 0:
        return 1
    count = 0
    while n:
        n //= k
        count += 1
    return count
