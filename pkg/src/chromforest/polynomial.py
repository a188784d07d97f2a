"""Exact integer polynomials in q and in 1/q."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

# integers beyond this are written to JSON as decimal strings
_JSON_SAFE = 2**53


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _json_int(c: int):
    return c if abs(c) < _JSON_SAFE else str(c)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in q with integer coefficients, stored in ascending powers."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @classmethod
    def monomial(cls, power: int, coeff: int = 1) -> "IntPolynomial":
        return cls((0,) * power + (coeff,))

    @classmethod
    def falling_factorial(cls, k: int) -> "IntPolynomial":
        """q (q-1) ... (q-k+1)."""
        p = cls((1,))
        for i in range(k):
            p = p * cls((-i, 1))
        return p

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def coeff(self, power: int) -> int:
        if 0 <= power < len(self.coefficients):
            return self.coefficients[power]
        return 0

    def __call__(self, q):
        total = 0
        for c in reversed(self.coefficients):
            total = total * q + c
        return total

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(self.coeff(i) - other.coeff(i) for i in range(n))

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coefficients)

    def __mul__(self, other: "IntPolynomial | int") -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coefficients)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return IntPolynomial(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by q^k."""
        return IntPolynomial((0,) * k + self.coefficients) if self.coefficients else self

    def has_alternating_signs(self) -> bool:
        """Coefficient of q^(d-k) has sign (-1)^k or is zero."""
        d = self.degree
        return all(
            c == 0 or (c > 0) == ((d - p) % 2 == 0) for p, c in enumerate(self.coefficients)
        )

    # ---------------------------------------------------------------- output
    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "coefficients": [_json_int(c) for c in self.coefficients] or [0],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "IntPolynomial":
        p = cls(int(c) for c in data["coefficients"])
        if data.get("degree", p.degree) != p.degree and p.coefficients:
            raise ValueError("degree field disagrees with coefficients")
        return p

    @classmethod
    def from_json(cls, text: str) -> "IntPolynomial":
        return cls.from_dict(json.loads(text))

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for p in range(self.degree, -1, -1):
            c = self.coefficients[p]
            if c == 0:
                continue
            mag = abs(c)
            if p == 0:
                body = str(mag)
            else:
                var = "q" if p == 1 else f"q^{p}"
                body = var if mag == 1 else f"{mag}{var}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class XiPolynomial:
    """Polynomial in 1/q: ``inv_q_coefficients[k]`` multiplies q^(-k)."""

    inv_q_coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "inv_q_coefficients", _trim(self.inv_q_coefficients))

    @property
    def degree(self) -> int:
        return len(self.inv_q_coefficients) - 1

    def __call__(self, q) -> Fraction:
        q = Fraction(q)
        return sum((Fraction(c) / q**k for k, c in enumerate(self.inv_q_coefficients)), Fraction(0))

    def times_q_power(self, n: int) -> IntPolynomial:
        """q^n times this series, as a polynomial in q (n must cover the degree)."""
        if self.degree > n:
            raise ValueError("q^n * Xi would have negative powers")
        out = [0] * (n + 1)
        for k, c in enumerate(self.inv_q_coefficients):
            out[n - k] = c
        return IntPolynomial(out)

    def to_dict(self) -> dict:
        return {"inv_q_coefficients": [_json_int(c) for c in self.inv_q_coefficients]}

    @classmethod
    def from_dict(cls, data: dict) -> "XiPolynomial":
        return cls(int(c) for c in data["inv_q_coefficients"])

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.inv_q_coefficients):
            if c == 0:
                continue
            mag = abs(c)
            body = str(mag) if k == 0 else (f"{mag}/q" if k == 1 else f"{mag}/q^{k}")
            parts.append(("-" if c < 0 else "+", body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out
