"""Sparse Laurent polynomials with exact rational coefficients.

Supports 1 or 2 variables, which is all the rank-<=2 torus integration in
this package needs.  Terms are a dict from exponent tuples (possibly
negative entries) to Fraction; zero coefficients are never stored.  Haar
expectation of a class function on a torus is just the constant term, so
the only operations required are ring arithmetic and constant_term().
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Scalar = Union[int, Fraction]


class LaurentPoly:
    """Immutable sparse Laurent polynomial in `nvars` variables."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], Scalar] = ()):
        if nvars not in (1, 2):
            raise ValueError("only 1 or 2 variables supported")
        clean: dict[tuple[int, ...], Fraction] = {}
        for exps, c in dict(terms).items():
            if len(exps) != nvars:
                raise ValueError(f"exponent tuple {exps} has wrong arity")
            c = Fraction(c)
            if c != 0:
                clean[tuple(int(e) for e in exps)] = c
        self.nvars = nvars
        self._terms = clean

    # -- construction helpers
    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "LaurentPoly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exps: Iterable[int], c: Scalar = 1) -> "LaurentPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: c})

    # -- inspection
    @property
    def terms(self) -> dict[tuple[int, ...], Fraction]:
        return dict(self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.nvars, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    # -- ring operations
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        return LaurentPoly.constant(self.nvars, other)

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return LaurentPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers not supported")
        result = LaurentPoly.constant(self.nvars, 1)
        acc = self
        while k:
            if k & 1:
                result = result * acc
            acc = acc * acc
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            try:
                other = self._coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __repr__(self) -> str:
        if not self._terms:
            return "LaurentPoly(0)"
        names = "z" if self.nvars == 1 else ("z1", "z2")
        bits = []
        for e in sorted(self._terms):
            c = self._terms[e]
            mono = "*".join(
                f"{names[i]}^{ei}" if ei != 1 else names[i]
                for i, ei in enumerate(e)
                if ei != 0
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "LaurentPoly(" + " + ".join(bits) + ")"

    def eval_angles(self, *thetas) -> float:
        """Evaluate at z_i = exp(i*theta_i); real for conjugation-symmetric
        polynomials (the imaginary part is discarded).

        Accepts scalars or numpy arrays, one per variable.
        """
        import numpy as np

        total = None
        for e, c in self._terms.items():
            phase = sum(ei * th for ei, th in zip(e, thetas))
            term = float(c) * np.cos(phase)
            total = term if total is None else total + term
        if total is None:
            return 0.0 * sum(thetas)
        return total
