"""Exact monomial arithmetic over a fixed, named set of variables.

Monomials are stored sparsely as sorted ``(variable index, exponent)`` pairs
sharing one immutable :class:`VariableSet`. Signs are never stored: every
ideal in this package is generated by sign-normalized monomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import MonomialParseError, PreconditionError, UsageError

__all__ = [
    "VariableSet",
    "Monomial",
    "gcd",
    "lcm",
    "divide_exact",
    "is_coprime",
    "parse",
    "format_monomial",
    "product",
    "gcd_all",
]


@dataclass(frozen=True)
class VariableSet:
    """Ordered list of distinct variable names."""

    names: tuple[str, ...]
    _index: dict[str, int] = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        index = {}
        for i, name in enumerate(names):
            if not name or re.search(r"[\s*^]", name) or name == "1":
                raise UsageError(f"invalid variable name {name!r}")
            if name in index:
                raise UsageError(f"duplicate variable name {name!r}")
            index[name] = i
        object.__setattr__(self, "_index", index)

    @classmethod
    def standard(cls, n: int, prefix: str = "x") -> VariableSet:
        """``x1, ..., xn``."""
        return cls(tuple(f"{prefix}{i}" for i in range(1, n + 1)))

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UsageError(f"unknown variable {name!r}") from None

    def var(self, name: str, exponent: int = 1) -> Monomial:
        return Monomial(self, ((self.index(name), exponent),)) if exponent else self.unit()

    def unit(self) -> Monomial:
        return Monomial(self, ())

    def monomial(self, exponents: Mapping[str, int]) -> Monomial:
        return Monomial.from_exponents(self, {self.index(k): e for k, e in exponents.items()})

    def parse(self, text: str) -> Monomial:
        return parse(self, text)


@dataclass(frozen=True)
class Monomial:
    variables: VariableSet
    exps: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prev = -1
        for i, e in self.exps:
            if not isinstance(e, int) or e < 1:
                raise UsageError(f"exponents must be positive integers, got {e!r}")
            if i <= prev or i >= len(self.variables):
                raise UsageError("exponent pairs must be sorted by in-range variable index")
            prev = i

    @classmethod
    def from_exponents(cls, variables: VariableSet, exps: Mapping[int, int]) -> Monomial:
        for e in exps.values():
            if e < 0:
                raise UsageError(f"negative exponent {e}")
        return cls(variables, tuple(sorted((i, e) for i, e in exps.items() if e)))

    # --- queries -----------------------------------------------------------

    def as_dict(self) -> dict[int, int]:
        return dict(self.exps)

    def exponent(self, name: str) -> int:
        return self.as_dict().get(self.variables.index(name), 0)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def is_unit(self) -> bool:
        return not self.exps

    def support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.exps)

    def divides(self, other: Monomial) -> bool:
        _check_same(self, other)
        theirs = other.as_dict()
        return all(theirs.get(i, 0) >= e for i, e in self.exps)

    def sort_key(self) -> tuple:
        return self.exps

    # --- arithmetic --------------------------------------------------------

    def __mul__(self, other: Monomial) -> Monomial:
        _check_same(self, other)
        out = self.as_dict()
        for i, e in other.exps:
            out[i] = out.get(i, 0) + e
        return Monomial(self.variables, tuple(sorted(out.items())))

    def __pow__(self, k: int) -> Monomial:
        if k < 0:
            raise UsageError("negative power of a monomial")
        return Monomial(self.variables, tuple((i, e * k) for i, e in self.exps) if k else ())

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r})"

    def to_json(self) -> list[list]:
        return [[self.variables.names[i], e] for i, e in self.exps]

    @classmethod
    def from_json(cls, variables: VariableSet, data: Sequence[Sequence]) -> Monomial:
        out: dict[int, int] = {}
        for name, e in data:
            if not isinstance(e, int) or e < 1:
                raise UsageError(f"bad exponent {e!r} for {name!r}")
            idx = variables.index(name)
            out[idx] = out.get(idx, 0) + e
        return cls(variables, tuple(sorted(out.items())))


def _check_same(a: Monomial, b: Monomial) -> None:
    if a.variables is not b.variables and a.variables != b.variables:
        raise UsageError("monomials live over different variable sets")


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a, b)
    other = b.as_dict()
    return Monomial(a.variables, tuple((i, min(e, other[i])) for i, e in a.exps if i in other))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_same(a, b)
    out = a.as_dict()
    for i, e in b.exps:
        if e > out.get(i, 0):
            out[i] = e
    return Monomial(a.variables, tuple(sorted(out.items())))


def divide_exact(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; raises :class:`PreconditionError` unless ``b`` divides ``a``."""
    _check_same(a, b)
    out = a.as_dict()
    for i, e in b.exps:
        left = out.get(i, 0) - e
        if left < 0:
            raise PreconditionError(f"{format_monomial(b)} does not divide {format_monomial(a)}")
        if left:
            out[i] = left
        else:
            del out[i]
    return Monomial(a.variables, tuple(sorted(out.items())))


def is_coprime(a: Monomial, b: Monomial) -> bool:
    _check_same(a, b)
    return not (a.support() & b.support())


def product(monomials: Iterable[Monomial], variables: VariableSet | None = None) -> Monomial:
    it = iter(monomials)
    try:
        acc = next(it)
    except StopIteration:
        if variables is None:
            raise UsageError("empty product needs an explicit variable set") from None
        return variables.unit()
    for m in it:
        acc = acc * m
    return acc


def gcd_all(monomials: Iterable[Monomial]) -> Monomial:
    it = iter(monomials)
    try:
        acc = next(it)
    except StopIteration:
        raise UsageError("gcd of an empty family") from None
    for m in it:
        acc = gcd(acc, m)
    return acc


_TERM = re.compile(r"\s*([^\s*^]+)\s*(?:\^\s*([^\s*]*))?\s*")


def parse(variables: VariableSet, text: str) -> Monomial:
    """Parse ``name^e*name*...`` or the literal ``1``."""
    if text.strip() == "1":
        return variables.unit()
    out: dict[int, int] = {}
    pos = 0
    while True:
        m = _TERM.match(text, pos)
        if m is None or not m.group(1):
            raise MonomialParseError("expected a variable name", text, pos)
        name, exp_text = m.group(1), m.group(2)
        if name not in variables:
            raise MonomialParseError(f"unknown variable {name!r}", text, m.start(1))
        exp = 1
        if exp_text is not None:
            if not exp_text.isdigit() or int(exp_text) < 1:
                raise MonomialParseError(f"malformed exponent {exp_text!r}", text, m.start(2))
            exp = int(exp_text)
        idx = variables.index(name)
        out[idx] = out.get(idx, 0) + exp
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "*":
            raise MonomialParseError("expected '*'", text, pos)
        pos += 1
    return Monomial(variables, tuple(sorted(out.items())))


def format_monomial(m: Monomial) -> str:
    if not m.exps:
        return "1"
    names = m.variables.names
    return "*".join(names[i] if e == 1 else f"{names[i]}^{e}" for i, e in m.exps)
