"""Shared term-map plumbing for the two polynomial rings.

Both rings store a finite mapping (m, n) -> ExactComplex with zero
coefficients pruned, so representation equality is algebraic equality.
"""

from __future__ import annotations

from .exactnum import ExactComplex, ZERO, as_rational, format_complex


def add_term(dst: dict, key, coeff) -> None:
    """Accumulate coeff onto dst[key], dropping the entry if it cancels."""
    cur = dst.get(key)
    if cur is None:
        if coeff:
            dst[key] = coeff
        return
    cur = cur + coeff
    if cur:
        dst[key] = cur
    else:
        del dst[key]


def _canon_order(key):
    m, n = key
    return (-(m + n), -m)


class TermPoly:
    """Base for polynomials indexed by exponent pairs. Treat instances as immutable."""

    __slots__ = ("_terms",)

    _sym_hi = "x"  # symbol for the m exponent
    _sym_lo = "y"  # symbol for the n exponent

    def __init__(self, terms=None):
        data: dict = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for (m, n), c in items:
                if m < 0 or n < 0:
                    raise ValueError(f"negative exponent in {(m, n)}")
                if not isinstance(c, ExactComplex):
                    c = ExactComplex(c)
                add_term(data, (int(m), int(n)), c)
        self._terms = data

    @classmethod
    def _from_raw(cls, data: dict):
        obj = object.__new__(cls)
        obj._terms = data
        return obj

    @classmethod
    def zero(cls):
        return cls._from_raw({})

    @classmethod
    def one(cls):
        from .exactnum import ONE

        return cls._from_raw({(0, 0): ONE})

    @classmethod
    def monomial(cls, m: int, n: int, coeff=1):
        if not isinstance(coeff, ExactComplex):
            coeff = ExactComplex(coeff)
        if m < 0 or n < 0:
            raise ValueError(f"negative exponent in {(m, n)}")
        return cls._from_raw({(m, n): coeff} if coeff else {})

    def items(self):
        return self._terms.items()

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: _canon_order(kv[0]))

    def coeff(self, m: int, n: int) -> ExactComplex:
        return self._terms.get((m, n), ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((m + n for m, n in self._terms), default=-1)

    def max_exponents(self):
        """(max m, max n) over all terms; (0, 0) for the zero polynomial."""
        mm = max((m for m, _ in self._terms), default=0)
        nn = max((n for _, n in self._terms), default=0)
        return mm, nn

    def scale(self, factor):
        if isinstance(factor, (int, str)) or not isinstance(factor, ExactComplex):
            try:
                factor = ExactComplex(factor)
            except TypeError:
                factor = ExactComplex(as_rational(factor))
        if not factor:
            return type(self)._from_raw({})
        return type(self)._from_raw({k: c * factor for k, c in self._terms.items()})

    def __add__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        data = dict(self._terms)
        for k, c in other._terms.items():
            add_term(data, k, c)
        return type(self)._from_raw(data)

    def __sub__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        data = dict(self._terms)
        for k, c in other._terms.items():
            add_term(data, k, -c)
        return type(self)._from_raw(data)

    def __neg__(self):
        return type(self)._from_raw({k: -c for k, c in self._terms.items()})

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset((k, c.re, c.im) for k, c in self._terms.items()))

    def __str__(self):
        return render_terms(self.sorted_items(), self._sym_hi, self._sym_lo)

    def __repr__(self):
        return f"{type(self).__name__}<{self}>"


def _monomial_text(m: int, n: int, hi: str, lo: str) -> str:
    parts = []
    if m:
        parts.append(hi if m == 1 else f"{hi}^{m}")
    if n:
        parts.append(lo if n == 1 else f"{lo}^{n}")
    return "*".join(parts)


def _coeff_text(c: ExactComplex, bare_ok: bool):
    """Split a coefficient into a leading sign and body for canonical printing."""
    if not c.im:
        sign = "-" if c.re < 0 else "+"
        mag = -c.re if c.re < 0 else c.re
        body = "" if (mag == 1 and bare_ok) else str(mag)
        return sign, body
    if not c.re:
        sign = "-" if c.im < 0 else "+"
        mag = -c.im if c.im < 0 else c.im
        return sign, ("i" if mag == 1 else f"{mag}*i")
    return "+", f"({format_complex(c)})"


def render_terms(sorted_items, hi: str, lo: str) -> str:
    """Deterministic text form: total degree descending, then m descending."""
    if not sorted_items:
        return "0"
    chunks = []
    for (m, n), c in sorted_items:
        mono = _monomial_text(m, n, hi, lo)
        sign, body = _coeff_text(c, bare_ok=bool(mono))
        if body and mono:
            text = f"{body}*{mono}"
        else:
            text = body or mono or "1"
        if not chunks:
            if sign == "-" and not body and "^" in text.split("*", 1)[0]:
                # a leading '-sym^k' would parse as (-sym)^k; force '-1*sym^k'
                text = f"1*{text}"
            chunks.append(text if sign == "+" else f"-{text}")
        else:
            chunks.append(f" {sign} {text}")
    return "".join(chunks)
