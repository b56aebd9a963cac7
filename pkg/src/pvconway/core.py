"""Exact integer polynomials in z and the small shared types."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

ChordId = int


def check_sign(value: int) -> int:
    if value not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {value!r}")
    return value


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = [int(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial in ``z``; ``coeffs[k]`` is the coefficient of ``z**k``.

    Trailing zeros are stripped on construction, so the zero polynomial has
    ``coeffs == ()`` and equality is plain tuple equality.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    @classmethod
    def from_terms(cls, terms: dict[int, int]) -> "IntPolynomial":
        if not terms:
            return cls()
        out = [0] * (max(terms) + 1)
        for k, c in terms.items():
            if k < 0:
                raise ValueError("negative degree")
            out[k] += c
        return cls(tuple(out))

    @classmethod
    def parse_machine(cls, text: str) -> "IntPolynomial":
        """Inverse of :meth:`machine`: ``"1 0 -1"`` -> 1 - z^2."""
        return cls(tuple(int(tok) for tok in text.split()))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, other)

    def __neg__(self) -> "IntPolynomial":
        return poly_scale_shift(self, -1, 0)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return poly_add(self, -other)

    def machine(self) -> str:
        if not self.coeffs:
            return "0"
        return " ".join(str(c) for c in self.coeffs)

    def __str__(self) -> str:
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = "z" if k == 1 else f"z^{k}"
                body = mono if mag == 1 else f"{mag} {mono}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts) if parts else "0"


def poly_add(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    n = max(len(a.coeffs), len(b.coeffs))
    return IntPolynomial(tuple(a.coeff(k) + b.coeff(k) for k in range(n)))


def poly_scale_shift(a: IntPolynomial, s: int, k: int) -> IntPolynomial:
    """Return ``s * z**k * a``."""
    if k < 0:
        raise ValueError("shift degree must be non-negative")
    if s == 0 or not a.coeffs:
        return IntPolynomial()
    return IntPolynomial((0,) * k + tuple(s * c for c in a.coeffs))


def poly_from_coefficients(coeffs: Sequence[int]) -> IntPolynomial:
    return IntPolynomial(tuple(coeffs))


ZERO = IntPolynomial()
ONE = IntPolynomial((1,))
