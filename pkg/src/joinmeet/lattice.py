"""Finite lattices: validated join/meet structure, order-theoretic predicates,
poset-ideal enumeration, and pentagon/diamond sublattice search.

Elements are identified by index; labels are presentation-only.  A fixed
linear extension (topological order of the covers, ties broken by input
order) is computed once and shared with the polynomial ring so variable
ordering is deterministic across runs.
"""

from __future__ import annotations

import heapq
import warnings
from dataclasses import dataclass
from itertools import combinations


class NotALattice(ValueError):
    """The input poset is missing a unique join or meet for some pair."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class CyclicCovers(ValueError):
    """The cover relation contains a cycle."""


class NotPureWarning(UserWarning):
    """Rank was requested on a lattice whose maximal chains differ in length."""


@dataclass(frozen=True)
class PosetIdeal:
    """A downward-closed subset of the lattice, as element indices."""

    members: frozenset

    def __contains__(self, item):
        return item in self.members

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))


@dataclass(frozen=True)
class Sublattice:
    """A subset closed under the ambient join and meet."""

    members: frozenset

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))


class Lattice:
    """Immutable finite lattice with precomputed join/meet tables.

    Construction fails eagerly (NotALattice / CyclicCovers) rather than
    deferring surprises to operation time.
    """

    __slots__ = (
        "labels",
        "covers",
        "bottom",
        "top",
        "linear_extension",
        "_down",
        "_up",
        "_join",
        "_meet",
        "_ranks",
        "_pure",
        "_cache",
    )

    def __init__(self, labels, cover_pairs):
        labels = tuple(str(x) for x in labels)
        if not labels:
            raise NotALattice("a lattice needs at least one element")
        if len(set(labels)) != len(labels):
            raise ValueError("labels must be distinct")
        n = len(labels)
        self.labels = labels

        edges = set()
        for a, b in cover_pairs:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"cover pair ({a}, {b}) out of range")
            if a == b:
                raise CyclicCovers(f"self-loop on {labels[a]!r}")
            edges.add((a, b))

        above = [[] for _ in range(n)]  # a -> elements covering a (per input)
        indeg = [0] * n
        for a, b in edges:
            above[a].append(b)
            indeg[b] += 1

        # topological order, ties broken by input index
        ready = [i for i in range(n) if indeg[i] == 0]
        heapq.heapify(ready)
        topo = []
        indeg_work = list(indeg)
        while ready:
            v = heapq.heappop(ready)
            topo.append(v)
            for w in above[v]:
                indeg_work[w] -= 1
                if indeg_work[w] == 0:
                    heapq.heappush(ready, w)
        if len(topo) != n:
            raise CyclicCovers("cover relation contains a cycle")
        self.linear_extension = tuple(topo)

        # reflexive-transitive closure: down-sets along the topological order
        down = [None] * n
        below = [[] for _ in range(n)]
        for a, b in edges:
            below[b].append(a)
        for v in topo:
            s = {v}
            for u in below[v]:
                s |= down[u]
            down[v] = frozenset(s)
        self._down = tuple(down)
        up = [set() for _ in range(n)]
        for b in range(n):
            for a in down[b]:
                up[a].add(b)
        self._up = tuple(frozenset(s) for s in up)

        # canonical cover relation from the closure (input may hold redundant pairs)
        canon = []
        for b in range(n):
            for a in down[b]:
                if a == b:
                    continue
                if not any(c != a and c != b and a in down[c] and c in down[b] for c in down[b]):
                    canon.append((a, b))
        self.covers = tuple(sorted(canon))

        # join/meet tables; reject pairs lacking a unique bound
        join = [[0] * n for _ in range(n)]
        meet = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                uppers = self._up[a] & self._up[b]
                least = [u for u in uppers if all(u in down[v] for v in uppers)]
                if len(least) != 1:
                    raise NotALattice(
                        f"elements {labels[a]!r}, {labels[b]!r} have no unique join",
                        pair=(labels[a], labels[b]),
                    )
                lowers = down[a] & down[b]
                greatest = [u for u in lowers if all(v in down[u] for v in lowers)]
                if len(greatest) != 1:
                    raise NotALattice(
                        f"elements {labels[a]!r}, {labels[b]!r} have no unique meet",
                        pair=(labels[a], labels[b]),
                    )
                join[a][b] = join[b][a] = least[0]
                meet[a][b] = meet[b][a] = greatest[0]
        self._join = tuple(tuple(row) for row in join)
        self._meet = tuple(tuple(row) for row in meet)

        bottom = 0
        top = 0
        for v in range(n):
            bottom = meet[bottom][v]
            top = join[top][v]
        self.bottom = bottom
        self.top = top

        # longest chain from bottom; purity = every cover climbs exactly one rank
        ranks = [0] * n
        lower = [[] for _ in range(n)]
        for a, b in self.covers:
            lower[b].append(a)
        for v in topo:
            ranks[v] = max((ranks[u] + 1 for u in lower[v]), default=0)
        self._ranks = tuple(ranks)
        self._pure = all(ranks[b] == ranks[a] + 1 for a, b in self.covers)
        self._cache = {}

    # -- construction helpers

    @classmethod
    def from_covers(cls, labels, cover_pairs):
        """Build from labels and (lower, upper) label pairs."""
        labels = [str(x) for x in labels]
        index = {x: i for i, x in enumerate(labels)}
        pairs = []
        for a, b in cover_pairs:
            a, b = str(a), str(b)
            if a not in index or b not in index:
                raise ValueError(f"cover pair ({a!r}, {b!r}) references unknown label")
            pairs.append((index[a], index[b]))
        return cls(labels, pairs)

    # -- basics

    @property
    def n(self):
        return len(self.labels)

    def index(self, label):
        try:
            return self.labels.index(str(label))
        except ValueError:
            raise KeyError(f"unknown label {label!r}") from None

    def label(self, i):
        return self.labels[i]

    def label_set(self, members):
        return {self.labels[i] for i in members}

    def le(self, a, b):
        return a in self._down[b]

    def join(self, a, b):
        return self._join[a][b]

    def meet(self, a, b):
        return self._meet[a][b]

    def incomparable_pairs(self):
        """All unordered pairs with neither a <= b nor b <= a."""
        return [
            (a, b)
            for a, b in combinations(range(self.n), 2)
            if not self.le(a, b) and not self.le(b, a)
        ]

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.labels == other.labels and self.covers == other.covers

    def __hash__(self):
        return hash((self.labels, self.covers))

    def __repr__(self):
        return f"Lattice({list(self.labels)}, covers={len(self.covers)})"

    # -- lattice laws

    def is_modular(self):
        """x <= b implies x v (a ^ b) = (x v a) ^ b, checked over all triples."""
        got = self._cache.get("modular")
        if got is None:
            n = self.n
            join, meet = self._join, self._meet
            got = all(
                join[x][meet[a][b]] == meet[join[x][a]][b]
                for b in range(n)
                for x in range(n)
                if self.le(x, b)
                for a in range(n)
            )
            self._cache["modular"] = got
        return got

    def is_distributive(self):
        """Both distributive laws over all triples."""
        got = self._cache.get("distributive")
        if got is None:
            n = self.n
            join, meet = self._join, self._meet
            got = all(
                meet[a][join[b][c]] == join[meet[a][b]][meet[a][c]]
                and join[a][meet[b][c]] == meet[join[a][b]][join[a][c]]
                for a in range(n)
                for b in range(n)
                for c in range(n)
            )
            self._cache["distributive"] = got
        return got

    # -- forbidden sublattices

    def iter_pentagons(self):
        """All N5 sublattices as (e, y, x, z, f) with e < y < x < f, e < z < f."""
        n = self.n
        for z in range(n):
            for x in range(n):
                if x == z or self.le(x, z) or self.le(z, x):
                    continue
                for y in range(n):
                    if y == x or not self.le(y, x):
                        continue
                    if self.le(y, z) or self.le(z, y):
                        continue
                    f = self.join(x, z)
                    if self.join(y, z) != f:
                        continue
                    e = self.meet(y, z)
                    if self.meet(x, z) != e:
                        continue
                    yield (e, y, x, z, f)

    def find_pentagon(self):
        for e, y, x, z, f in self.iter_pentagons():
            return Sublattice(frozenset((e, y, x, z, f)))
        return None

    def iter_diamonds(self):
        """All M3 sublattices as (e, x, y, z, f) with pairwise-incomparable x, y, z."""
        for x, y, z in combinations(range(self.n), 3):
            if self.le(x, y) or self.le(y, x):
                continue
            if self.le(x, z) or self.le(z, x):
                continue
            if self.le(y, z) or self.le(z, y):
                continue
            f = self.join(x, y)
            if self.join(x, z) != f or self.join(y, z) != f:
                continue
            e = self.meet(x, y)
            if self.meet(x, z) != e or self.meet(y, z) != e:
                continue
            yield (e, x, y, z, f)

    def find_diamond(self):
        for e, x, y, z, f in self.iter_diamonds():
            return Sublattice(frozenset((e, x, y, z, f)))
        return None

    # -- rank and purity

    def is_pure(self):
        return self._pure

    def rank(self, a):
        """Longest chain from the bottom to a (warns when the lattice is not pure)."""
        if not self._pure:
            warnings.warn(
                f"rank({self.labels[a]!r}) on a non-pure lattice: maximal chains "
                "differ in length, value is the longest-chain rank",
                NotPureWarning,
                stacklevel=2,
            )
        return self._ranks[a]

    def find_rank2_diamond(self):
        """A diamond sublattice whose top sits exactly two ranks above its bottom.

        Defined for modular non-distributive lattices; returns None otherwise.
        """
        if not self.is_modular() or self.is_distributive():
            return None
        for e, x, y, z, f in self.iter_diamonds():
            if self._ranks[f] - self._ranks[e] == 2:
                return Sublattice(frozenset((e, x, y, z, f)))
        return None

    # -- poset ideals

    def poset_ideals(self):
        """All downward-closed subsets, including the empty set and the whole lattice."""
        topo = self.linear_extension
        lower = [[] for _ in range(self.n)]
        for a, b in self.covers:
            lower[b].append(a)
        ideals = []

        def extend(i, current):
            if i == len(topo):
                ideals.append(PosetIdeal(frozenset(current)))
                return
            v = topo[i]
            extend(i + 1, current)
            if all(u in current for u in lower[v]):
                current.add(v)
                extend(i + 1, current)
                current.remove(v)

        extend(0, set())
        ideals.sort(key=lambda s: (len(s.members), sorted(s.members)))
        return ideals

    def is_poset_ideal(self, members):
        members = set(members)
        return all(u in members for v in members for u in self._down[v])

    def poset_ideal(self, members):
        members = frozenset(members)
        if not self.is_poset_ideal(members):
            raise ValueError(f"{self.label_set(members)} is not downward closed")
        return PosetIdeal(members)

    def maximal_elements(self, members):
        members = set(members)
        return sorted(a for a in members if not any(b != a and self.le(a, b) for b in members))

    def is_sublattice(self, members):
        members = set(members)
        return all(
            self.join(a, b) in members and self.meet(a, b) in members
            for a in members
            for b in members
        )


# ---------------------------------------------------------------------------
# builders


def chain(n):
    """Totally ordered lattice c0 < c1 < ... < c(n-1)."""
    labels = [f"c{i}" for i in range(n)]
    return Lattice.from_covers(labels, [(labels[i], labels[i + 1]) for i in range(n - 1)])


def boolean(n):
    """Lattice of subsets of an n-set; bottom labelled 'o', atoms 'a', 'b', ..."""
    atoms = "abcdefghijklmnopqrstuvwxyz"[:n]
    subsets = sorted(range(1 << n), key=lambda s: (bin(s).count("1"), s))
    label = lambda s: "".join(atoms[i] for i in range(n) if s >> i & 1) or "o"
    covers = [
        (label(s), label(s | 1 << i))
        for s in subsets
        for i in range(n)
        if not s >> i & 1
    ]
    return Lattice.from_covers([label(s) for s in subsets], covers)


def divisor_lattice(n):
    """Divisors of n ordered by divisibility; join = lcm, meet = gcd."""
    if n < 1:
        raise ValueError("n must be positive")
    divs = [d for d in range(1, n + 1) if n % d == 0]
    covers = [
        (a, b)
        for a in divs
        for b in divs
        if b % a == 0 and a != b and not any(c % a == 0 and b % c == 0 and c not in (a, b) for c in divs)
    ]
    return Lattice.from_covers([str(d) for d in divs], [(str(a), str(b)) for a, b in covers])


def pentagon():
    """The five-element non-modular lattice N5 with e < y < x < f and e < z < f."""
    return Lattice.from_covers(
        ["e", "x", "y", "z", "f"],
        [("e", "y"), ("y", "x"), ("x", "f"), ("e", "z"), ("z", "f")],
    )


def diamond():
    """The five-element modular non-distributive lattice M3."""
    return Lattice.from_covers(
        ["e", "x", "y", "z", "f"],
        [("e", "x"), ("e", "y"), ("e", "z"), ("x", "f"), ("y", "f"), ("z", "f")],
    )
