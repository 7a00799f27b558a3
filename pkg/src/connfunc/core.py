"""Ground sets, subset masks, explicit set-function tables and counted oracles.

Subsets of a ground set of size ``n`` are plain ``int`` bit masks: bit ``i``
is set iff element ``i`` belongs to the subset.
"""

from __future__ import annotations

import json
import threading
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import _kernels

MAX_GROUND = 63
MAX_TABLE = 20
# full pairwise submodularity is O(4^n); above this size the local check is used
FULL_CHECK_LIMIT = 12


class ConnFuncError(ValueError):
    """Base class for input errors raised by this package."""


class InvalidSubsetError(ConnFuncError):
    pass


class IncompleteTableError(ConnFuncError):
    pass


class DomainError(ConnFuncError):
    pass


class CapacityError(RuntimeError):
    """Instance is larger than a full-table or exhaustive routine supports."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int) -> Iterator[int]:
    """Indices of the set bits of ``x`` in increasing order."""
    i = 0
    while x:
        if x & 1:
            yield i
        x >>= 1
        i += 1


@dataclass(frozen=True)
class GroundSet:
    size: int
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.size < 1:
            raise ConnFuncError(f"ground set must be nonempty, got size {self.size}")
        if self.size > MAX_GROUND:
            raise CapacityError(f"ground set size must be in 1..{MAX_GROUND}, got {self.size}")
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != self.size:
                raise ConnFuncError("label count does not match ground set size")
            if len(set(labels)) != len(labels):
                raise ConnFuncError("ground set labels must be distinct")
            if labels == tuple(f"e{i}" for i in range(self.size)):
                labels = None  # the default names; keeps equality label-agnostic
            object.__setattr__(self, "labels", labels)

    @classmethod
    def of(cls, labels: Sequence[Any]) -> GroundSet:
        return cls(len(labels), tuple(str(s) for s in labels))

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else f"e{i}"

    def names(self) -> tuple[str, ...]:
        return tuple(self.label(i) for i in range(self.size))

    def index(self, label: Any) -> int:
        names = self.names()
        try:
            return names.index(str(label))
        except ValueError:
            raise InvalidSubsetError(f"unknown element {label!r}") from None

    def mask(self, labels: Iterable[Any]) -> int:
        x = 0
        for s in labels:
            x |= 1 << self.index(s)
        return x

    def members(self, x: int) -> list[str]:
        self.check(x)
        return [self.label(i) for i in bits(x)]

    def check(self, x: int) -> int:
        if x < 0 or x >> self.size:
            raise InvalidSubsetError(f"subset {x:#x} has bits outside a ground set of size {self.size}")
        return x

    def complement(self, x: int) -> int:
        return self.full ^ self.check(x)

    def canonical(self, x: int) -> int:
        """Representative of ``{x, E - x}`` used for symmetric bookkeeping."""
        return min(x, self.full ^ x)


def complement(x: int, ground: GroundSet) -> int:
    return ground.complement(x)


@dataclass(frozen=True, eq=False)
class SetFunctionTable:
    """Exact integer values of a set function on every subset of ``ground``."""

    ground: GroundSet
    values: np.ndarray

    def __post_init__(self):
        if self.ground.size > MAX_TABLE:
            raise CapacityError(f"full tables are limited to n <= {MAX_TABLE}")
        vals = np.asarray(self.values)
        if vals.shape != (1 << self.ground.size,):
            raise IncompleteTableError(
                f"expected {1 << self.ground.size} values, got shape {vals.shape}")
        if vals.dtype.kind not in "iu":
            if not np.all(np.equal(np.mod(vals, 1), 0)):
                raise ConnFuncError("set function values must be integers")
        vals = vals.astype(np.int64)
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return self.ground.size

    def __call__(self, x: int) -> int:
        return int(self.values[self.ground.check(x)])

    def __eq__(self, other):
        if not isinstance(other, SetFunctionTable):
            return NotImplemented
        return self.ground == other.ground and np.array_equal(self.values, other.values)

    __hash__ = None

    @classmethod
    def from_function(cls, ground: GroundSet, fn: Callable[[int], int]) -> SetFunctionTable:
        return cls(ground, np.array([int(fn(x)) for x in range(1 << ground.size)], dtype=np.int64))

    @classmethod
    def from_mapping(cls, ground: GroundSet, mapping: Mapping[int, int],
                     default: int | None = None) -> SetFunctionTable:
        size = 1 << ground.size
        vals = np.empty(size, dtype=np.int64)
        for x in range(size):
            if x in mapping:
                vals[x] = mapping[x]
            elif default is not None:
                vals[x] = default
            else:
                raise IncompleteTableError(f"no value for subset {ground.members(x)}")
        return cls(ground, vals)

    # -- JSON --------------------------------------------------------------

    def to_json(self, key: str = "values") -> dict:
        g = self.ground
        return {
            "n": g.size,
            "labels": list(g.names()),
            key: [{"set": g.members(x), "value": int(v)} for x, v in enumerate(self.values)],
        }

    @classmethod
    def from_json(cls, data: Mapping, key: str = "values") -> SetFunctionTable:
        ground, mapping, default = parse_table_json(data, key)
        return cls.from_mapping(ground, mapping, default)


def _parse_int(v: Any, what: str) -> int:
    if isinstance(v, bool) or not isinstance(v, int):
        if isinstance(v, float) and v.is_integer():
            return int(v)
        raise ConnFuncError(f"{what} must be an integer, got {v!r}")
    return v


def parse_subset(spec: Any, ground: GroundSet) -> int:
    """A subset given either as a list of labels or as a hex mask string."""
    if isinstance(spec, str):
        try:
            x = int(spec, 16) if spec.lower().startswith("0x") else int(spec, 0)
        except ValueError:
            raise InvalidSubsetError(f"bad subset mask {spec!r}") from None
        return ground.check(x)
    if isinstance(spec, (list, tuple)):
        return ground.mask(spec)
    raise InvalidSubsetError(f"bad subset {spec!r}")


def parse_table_json(data: Mapping, key: str = "values") -> tuple[GroundSet, dict[int, int], int | None]:
    if not isinstance(data, Mapping) or "n" not in data:
        raise ConnFuncError("table JSON must be an object with an 'n' field")
    n = _parse_int(data["n"], "n")
    labels = data.get("labels")
    ground = GroundSet(n, tuple(labels) if labels is not None else None)
    if n > MAX_TABLE:
        raise CapacityError(f"full tables are limited to n <= {MAX_TABLE}")
    entries = data.get(key)
    if not isinstance(entries, list):
        raise ConnFuncError(f"table JSON needs a '{key}' list")
    mapping: dict[int, int] = {}
    for item in entries:
        if not isinstance(item, Mapping) or "set" not in item or "value" not in item:
            raise ConnFuncError("each entry needs 'set' and 'value'")
        x = parse_subset(item["set"], ground)
        v = _parse_int(item["value"], "value")
        if mapping.get(x, v) != v:
            raise ConnFuncError(f"conflicting values for subset {ground.members(x)}")
        mapping[x] = v
    default = data.get("default")
    if default is not None:
        default = _parse_int(default, "default")
    return ground, mapping, default


def load_json(path) -> Any:
    with open(path) as fh:
        return json.load(fh)


# --------------------------------------------------------------------------
# oracle
# --------------------------------------------------------------------------

class CountedOracle:
    """Value oracle for a symmetric set function that counts distinct queries.

    A subset and its complement are one query: the oracle promise includes
    symmetry, so asking for ``E - X`` after ``X`` costs nothing.
    """

    def __init__(self, source: SetFunctionTable | Callable[[int], int], ground: GroundSet | None = None):
        if isinstance(source, SetFunctionTable):
            self.ground = source.ground
            self._fn = source.__call__
        else:
            if ground is None:
                raise ConnFuncError("a function oracle needs an explicit ground set")
            self.ground = ground
            self._fn = source
        self.source = source
        self._cache: dict[int, int] = {}
        self._lock = threading.Lock()

    @property
    def distinct_count(self) -> int:
        with self._lock:
            return len(self._cache)

    def known(self) -> frozenset[int]:
        with self._lock:
            return frozenset(self._cache)

    def __call__(self, x: int) -> int:
        g = self.ground
        key = g.canonical(g.check(x))
        with self._lock:
            if key in self._cache:
                return self._cache[key]
            value = self._fn(x)
            if value is None:
                raise IncompleteTableError(f"oracle has no value for {g.members(x)}")
            value = _parse_int(value, "oracle value")
            self._cache[key] = value
            return value

    eval = __call__


def oracle_eval(o: CountedOracle, x: int) -> int:
    return o(x)


# --------------------------------------------------------------------------
# connectivity-function axioms
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    axiom: str
    sets: tuple[int, ...]
    detail: str
    count: int = 1

    def to_json(self, ground: GroundSet) -> dict:
        return {
            "axiom": self.axiom,
            "sets": [ground.members(x) for x in self.sets],
            "detail": self.detail,
            "count": self.count,
        }


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def axioms(self) -> set[str]:
        return {v.axiom for v in self.violations}

    def __bool__(self) -> bool:
        return self.valid


def check_submodular(values: np.ndarray, n: int, method: str = "auto") -> Violation | None:
    """Return a submodularity violation (with the total count) or ``None``.

    ``method='full'`` runs the pairwise definition over all ``X, Y``;
    ``'local'`` checks ``f(X+e) + f(X+f) >= f(X+e+f) + f(X)`` for ``e, f``
    outside ``X``.  ``'auto'`` uses the full check up to ``FULL_CHECK_LIMIT``.
    """
    values = np.ascontiguousarray(values, dtype=np.int64)
    if method == "auto":
        method = "full" if n <= FULL_CHECK_LIMIT else "local"
    if method == "full":
        count, x, y = _kernels.submodular_full(values, n)
        if count:
            x, y = int(x), int(y)
            return Violation("submodular", (x, y),
                             f"f(X)+f(Y)={values[x] + values[y]} < "
                             f"f(XuY)+f(XnY)={values[x | y] + values[x & y]}", int(count))
        return None
    if method == "local":
        count, x, e, f = _kernels.submodular_local(values, n)
        if count:
            x, be, bf = int(x), 1 << int(e), 1 << int(f)
            return Violation("submodular", (x | be, x | bf),
                             f"local check fails at X={x:#x}, e={int(e)}, f={int(f)}", int(count))
        return None
    raise ValueError(f"unknown method {method!r}")


def validate_connectivity(t: SetFunctionTable, method: str = "auto") -> ValidationReport:
    vals = t.values
    full = t.ground.full
    out = []
    if vals[0] != 0:
        out.append(Violation("normalised", (0,), f"f(empty)={int(vals[0])}"))
    idx = np.arange(len(vals), dtype=np.int64)
    asym = np.nonzero(vals != vals[full ^ idx])[0]
    if len(asym):
        x = int(asym[0])
        out.append(Violation("symmetric", (x, full ^ x),
                             f"f(X)={int(vals[x])} != f(E-X)={int(vals[full ^ x])}", len(asym) // 2 or 1))
    sub = check_submodular(vals, t.n, method)
    if sub is not None:
        out.append(sub)
    return ValidationReport(tuple(out))
