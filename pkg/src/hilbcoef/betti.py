"""Betti tables of cyclic graded modules R/I and their Gorenstein halves.

A table is stored sparsely as ``(i, j, beta)`` triples: homological degree
``i``, internal shift ``j`` and multiplicity ``beta``.  The per-degree shift
lists ``d_{i1} <= ... <= d_{i b_i}`` are derived on demand by repeating each
shift ``beta`` times.

Two interchange formats are supported (see :func:`parse_betti_table`)::

    {"n": 2, "entries": [{"i": 0, "j": 0, "beta": 1}, {"i": 1, "j": 2, "beta": 1}, ...]}

and the plain format::

    n 2
    # i j beta
    0 0 1
    1 2 1
"""

import json
import warnings
from collections import Counter
from dataclasses import dataclass
from itertools import combinations


class BettiError(ValueError):
    """Base class for malformed or inconsistent Betti data."""


class BettiParseError(BettiError):
    """The input text could not be read as a Betti table."""


class BettiInvariantError(BettiError):
    """The table violates a structural invariant (cyclic, s <= n, beta > 0)."""


class GorensteinSplitError(BettiError):
    """A symmetric table could not be cut into a half resolution."""


class NonMinimalShiftWarning(UserWarning):
    """Some shift ``j`` at homological degree ``i`` has ``j < i``."""


@dataclass(frozen=True)
class BettiTable:
    n: int
    entries: tuple  # sorted ((i, j, beta), ...)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise BettiInvariantError(f"n must be a positive integer, got {self.n!r}")
        seen = set()
        for i, j, beta in self.entries:
            if (i, j) in seen:
                raise BettiInvariantError(f"duplicate entry at (i, j) = ({i}, {j})")
            seen.add((i, j))
            if i < 0 or j < 0:
                raise BettiInvariantError(f"negative degree or shift at ({i}, {j})")
            if beta <= 0:
                raise BettiInvariantError(f"nonpositive beta {beta} at ({i}, {j})")
        degree_zero = [(j, beta) for i, j, beta in self.entries if i == 0]
        if degree_zero != [(0, 1)]:
            raise BettiInvariantError(
                "a cyclic module R/I needs exactly one entry (0, 0, 1) at degree 0"
            )
        s = self.s
        if s < 1:
            raise BettiInvariantError("table has no entries beyond degree 0")
        if s > self.n:
            raise BettiInvariantError(
                f"projective dimension s = {s} exceeds n = {self.n}; pass n >= s"
            )

    @classmethod
    def from_triples(cls, n, triples):
        """Build a table from ``(i, j, beta)`` triples, adding repeated positions."""
        acc = Counter()
        for i, j, beta in triples:
            acc[(int(i), int(j))] += int(beta)
        entries = tuple(sorted((i, j, b) for (i, j), b in acc.items() if b != 0))
        bad = [(i, j, b) for i, j, b in entries if b < 0]
        if bad:
            raise BettiInvariantError(f"nonpositive beta in {bad}")
        return cls(n, entries)

    @property
    def s(self):
        return max(i for i, _, _ in self.entries)

    def betti(self, i, j):
        for i2, j2, b in self.entries:
            if (i2, j2) == (i, j):
                return b
        return 0

    def shifts(self, i):
        """Sorted list of shifts at degree ``i``, repeated by multiplicity."""
        out = []
        for i2, j, b in self.entries:
            if i2 == i:
                out.extend([j] * b)
        return out

    def total_betti(self, i):
        return sum(b for i2, _, b in self.entries if i2 == i)

    @property
    def max_shift(self):
        return max(j for _, j, _ in self.entries)

    @property
    def nonminimal_entries(self):
        """Entries with ``j < i``; a minimal resolution has none."""
        return tuple(e for e in self.entries if e[1] < e[0])

    def as_dict(self):
        return {
            "n": self.n,
            "entries": [{"i": i, "j": j, "beta": b} for i, j, b in self.entries],
        }


@dataclass(frozen=True)
class ShiftProfile:
    m: tuple
    M: tuple

    def __post_init__(self):
        if len(self.m) != len(self.M):
            raise ValueError("m and M must have the same length")
        if any(lo > hi for lo, hi in zip(self.m, self.M)):
            raise ValueError(f"need m_i <= M_i, got m={self.m}, M={self.M}")

    @property
    def s(self):
        return len(self.m)

    @property
    def is_pure(self):
        return self.m == self.M


@dataclass(frozen=True)
class GorensteinSplit:
    """First half of a self-dual resolution.

    ``columns[i-1]`` holds the sorted shifts ``a_{i1} <= ... <= a_{i r_i}``
    for ``i = 1..k``.  For even ``s = 2k`` the last column keeps only the
    representatives ``a <= c - a`` of the middle degree.
    """

    parity: str
    k: int
    c: int
    columns: tuple

    def __post_init__(self):
        if self.parity not in ("odd", "even"):
            raise ValueError(f"parity must be 'odd' or 'even', got {self.parity!r}")
        if self.k < 0 or (self.parity == "even" and self.k < 1):
            raise ValueError(f"invalid k = {self.k} for parity {self.parity}")
        if len(self.columns) != self.k:
            raise ValueError(f"expected {self.k} columns, got {len(self.columns)}")
        if self.c < 1:
            raise ValueError("socle shift c must be positive")
        for col in self.columns:
            if not col or list(col) != sorted(col):
                raise ValueError(f"columns must be nonempty and sorted, got {col}")
        if self.parity == "even" and 2 * self.columns[-1][-1] > self.c:
            raise ValueError("even split must keep middle representatives a <= c - a")

    @property
    def s(self):
        return 2 * self.k + (1 if self.parity == "odd" else 0)

    @property
    def r(self):
        return tuple(len(col) for col in self.columns)


# --------------------------------------------------------------------------
# parsing and serialization


def _parse_json(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BettiParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict) or "entries" not in data:
        raise BettiParseError('expected an object with "n" and "entries"')
    if "n" not in data:
        raise BettiParseError('missing "n"; pass the number of variables n >= s')
    try:
        triples = [(e["i"], e["j"], e["beta"]) for e in data["entries"]]
    except (TypeError, KeyError) as exc:
        raise BettiParseError(f"malformed entry: {exc}") from exc
    for triple in triples:
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in triple):
            raise BettiParseError(f"non-integer entry {triple}")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise BettiParseError(f'"n" must be an integer, got {n!r}')
    return n, triples


def _parse_plain(text):
    n = None
    triples = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "n":
                raise BettiParseError(f"line {lineno}: expected 'n <int>' first")
            try:
                n = int(fields[1])
            except ValueError as exc:
                raise BettiParseError(f"line {lineno}: bad n {fields[1]!r}") from exc
            continue
        if len(fields) != 3:
            raise BettiParseError(f"line {lineno}: expected 'i j beta', got {line!r}")
        try:
            triples.append(tuple(int(x) for x in fields))
        except ValueError as exc:
            raise BettiParseError(f"line {lineno}: non-integer field") from exc
    if n is None:
        raise BettiParseError("missing 'n <int>' header; pass n >= s")
    return n, triples


def parse_betti_table(text, format="json"):
    """Read a table from text in ``"json"`` or ``"plain"`` format.

    Raises :class:`BettiParseError` on syntax problems and
    :class:`BettiInvariantError` when the content is not a valid table.
    Shifts with ``j < i`` are accepted but trigger a
    :class:`NonMinimalShiftWarning`.
    """
    if format == "json":
        n, triples = _parse_json(text)
    elif format == "plain":
        n, triples = _parse_plain(text)
    else:
        raise ValueError(f"unknown format {format!r}")
    positions = Counter((i, j) for i, j, _ in triples)
    dup = [p for p, cnt in positions.items() if cnt > 1]
    if dup:
        raise BettiInvariantError(f"duplicate entries at {sorted(dup)}")
    if any(b <= 0 for _, _, b in triples):
        raise BettiInvariantError("all beta values must be positive")
    table = BettiTable.from_triples(n, triples)
    if table.nonminimal_entries:
        warnings.warn(
            f"shifts below homological degree: {table.nonminimal_entries}",
            NonMinimalShiftWarning,
            stacklevel=2,
        )
    return table


def format_betti_table(table, format="json"):
    """Inverse of :func:`parse_betti_table`."""
    if format == "json":
        return json.dumps(table.as_dict(), indent=2) + "\n"
    if format == "plain":
        lines = [f"n {table.n}"]
        lines += [f"{i} {j} {b}" for i, j, b in table.entries]
        return "\n".join(lines) + "\n"
    raise ValueError(f"unknown format {format!r}")


def load_betti_table(path):
    """Read a table from a file; ``.json`` files are JSON, anything else is sniffed."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    fmt = "json" if text.lstrip().startswith("{") else "plain"
    return parse_betti_table(text, fmt)


# --------------------------------------------------------------------------
# shift data


def shift_profile(table):
    s = table.s
    m, M = [], []
    for i in range(1, s + 1):
        d = table.shifts(i)
        if not d:
            raise BettiInvariantError(f"no shifts at homological degree {i}")
        m.append(d[0])
        M.append(d[-1])
    return ShiftProfile(tuple(m), tuple(M))


def is_quasi_pure(profile):
    """True when every minimal shift is at least the previous maximal shift."""
    return all(profile.m[i] >= profile.M[i - 1] for i in range(1, profile.s))


def socle_shift(table):
    """The socle shift ``c`` if the diagram is Gorenstein-symmetric, else None.

    Symmetric means a single top entry ``(s, c, 1)`` and
    ``beta_{ij} = beta_{s-i, c-j}`` for every entry.
    """
    s = table.s
    top = [(j, b) for i, j, b in table.entries if i == s]
    if len(top) != 1 or top[0][1] != 1:
        return None
    c = top[0][0]
    lookup = {(i, j): b for i, j, b in table.entries}
    for (i, j), b in lookup.items():
        if lookup.get((s - i, c - j), 0) != b:
            return None
    return c


def is_gorenstein_symmetric(table):
    return socle_shift(table) is not None


def gorenstein_split(table):
    """Cut a symmetric table into its first half.

    For even ``s = 2k`` the middle column is paired smallest-with-largest and
    the smaller member of each pair ``(a, c - a)`` is kept.
    """
    c = socle_shift(table)
    if c is None:
        raise GorensteinSplitError("table is not Gorenstein-symmetric")
    s = table.s
    k, odd = divmod(s, 2)
    columns = [tuple(table.shifts(i)) for i in range(1, k + 1)]
    if not odd:
        middle = columns[-1]
        b = len(middle)
        if b % 2:
            raise GorensteinSplitError(
                f"middle column has odd total Betti number {b}; it must be even"
            )
        for lo, hi in zip(middle[: b // 2], reversed(middle[b // 2 :])):
            if lo + hi != c:
                raise GorensteinSplitError(
                    f"middle shifts {lo}, {hi} do not pair to c = {c}"
                )
        columns[-1] = middle[: b // 2]
    return GorensteinSplit("odd" if odd else "even", k, c, tuple(columns))


def dual_complete(half, n):
    """Rebuild the full symmetric table from its first half."""
    s, c = half.s, half.c
    triples = [(0, 0, 1), (s, c, 1)]
    for i, col in enumerate(half.columns, 1):
        for a in col:
            triples.append((i, a, 1))
            triples.append((s - i, c - a, 1))
    return BettiTable.from_triples(n, triples)


def generate_ci(degrees, n):
    """Koszul Betti table of a complete intersection of the given degrees."""
    degrees = tuple(int(d) for d in degrees)
    if not degrees:
        raise ValueError("need at least one generator degree")
    if any(d < 1 for d in degrees):
        raise ValueError(f"degrees must be positive, got {degrees}")
    if len(degrees) > n:
        raise BettiInvariantError(f"{len(degrees)} generators exceed n = {n}")
    counts = Counter()
    for i in range(len(degrees) + 1):
        for subset in combinations(degrees, i):
            counts[(i, sum(subset))] += 1
    return BettiTable.from_triples(n, ((i, j, b) for (i, j), b in counts.items()))
