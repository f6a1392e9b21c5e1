"""Signatures (highest-weight labels) and integer-multiplicity spectra.

A signature is a weakly decreasing integer tuple kept in canonical form:
trailing zeros are trimmed, and for purely nonpositive labels (duals) the
leading zeros are trimmed instead, so that negation is an involution.  The
rank k lives in operation arguments, never in the label itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import MixedSigns, NotDominant, TooShort


@dataclass(frozen=True, order=True)
class Signature:
    """Canonical weakly decreasing integer tuple."""

    entries: tuple[int, ...] = ()

    def __post_init__(self):
        e = self.entries
        if not isinstance(e, tuple):
            e = tuple(int(x) for x in e)
            object.__setattr__(self, "entries", e)
        for a, b in zip(e, e[1:]):
            if a < b:
                raise NotDominant(f"ascent {a} < {b} in {e}")
        if e and e[0] > 0 and e[-1] < 0:
            raise MixedSigns(f"mixed-sign entries in {e}")
        if e and e[-1] == 0:
            raise NotDominant(f"{e} not canonical: trailing zero")
        if e and e[0] == 0:
            raise NotDominant(f"{e} not canonical: leading zero")

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def degree(self) -> int:
        return sum(self.entries)

    def pad(self, k: int) -> tuple[int, ...]:
        """Entries extended with zeros to length k."""
        if k < len(self.entries):
            raise TooShort(f"cannot pad {self} to length {k}")
        return self.entries + (0,) * (k - len(self.entries))

    def __str__(self):
        return "(" + ",".join(str(x) for x in self.entries) + ")"


def normalize(raw) -> Signature:
    """Canonicalize an integer sequence into a Signature.

    Rejects ascents; trims trailing zeros, then (for nonpositive labels)
    leading zeros.
    """
    t = tuple(int(x) for x in raw)
    for a, b in zip(t, t[1:]):
        if a < b:
            raise NotDominant(f"ascent {a} < {b} in {t}")
    while t and t[-1] == 0:
        t = t[:-1]
    while t and t[0] == 0:
        t = t[1:]
    return Signature(t)


def sig(*entries) -> Signature:
    """Shorthand constructor: sig(7, 1, 0) == normalize((7, 1, 0))."""
    return normalize(entries)


def pad(m: Signature, k: int) -> tuple[int, ...]:
    return m.pad(k)


def interleaves(m: Signature, h: Signature) -> bool:
    """True iff h_i >= m_i >= h_{i+1} for all i, with zero padding."""
    l = max(m.length, h.length)
    me = m.pad(l)
    he = h.pad(l + 1)
    return all(he[i] >= me[i] >= he[i + 1] for i in range(l))


class SignedSpectrum:
    """Finitely supported integer combination of signatures.

    Negative multiplicities are allowed transiently (inside determinant
    expansions); genuine decompositions are nonnegative.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data: dict[Signature, int] = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for s, m in items:
                if not isinstance(s, Signature):
                    s = normalize(s)
                m = int(m)
                if m:
                    new = data.get(s, 0) + m
                    if new:
                        data[s] = new
                    elif s in data:
                        del data[s]
        self._terms = data

    def __getitem__(self, s: Signature) -> int:
        return self._terms.get(s, 0)

    def __contains__(self, s: Signature) -> bool:
        return s in self._terms

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, SignedSpectrum):
            return self._terms == other._terms
        if isinstance(other, dict):
            return self._terms == other
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def items(self):
        return self._terms.items()

    def support(self):
        return set(self._terms)

    def is_nonnegative(self) -> bool:
        return all(m > 0 for m in self._terms.values())

    def total_multiplicity(self) -> int:
        return sum(self._terms.values())

    def sorted_terms(self):
        """Terms sorted lexicographically descending by signature entries."""
        return sorted(self._terms.items(), key=lambda t: t[0].entries, reverse=True)

    def text(self, pad_to: int = 0) -> str:
        if not self._terms:
            return "0"
        parts = []
        for s, m in self.sorted_terms():
            body = "(" + ",".join(str(x) for x in s.pad(max(pad_to, s.length))) + ")"
            if m == 1:
                parts.append(body)
            elif m == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{m}{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"SignedSpectrum({self.text()})"

    def to_json_obj(self):
        return [
            {"signature": list(s.entries), "multiplicity": m}
            for s, m in self.sorted_terms()
        ]

    @classmethod
    def from_json_obj(cls, obj) -> "SignedSpectrum":
        return cls((normalize(t["signature"]), t["multiplicity"]) for t in obj)
