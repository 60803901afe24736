"""Permutation-group engine: orbits, order, membership, stabilisers,
transitivity, blocks and primitivity.

Group data is computed through a deterministic (non-randomised)
Schreier-Sims stabiliser chain so that any failure reproduces
bit-for-bit across runs.
"""

from __future__ import annotations

import json
import re
import threading
from collections import Counter
from math import lcm

import numpy as np

__all__ = ["Permutation", "PermGroup", "parse_permutation"]


class Permutation:
    """An immutable bijection on {0..n-1}, stored as its image tuple.

    Composition convention, fixed project-wide: ``(p * q)(x) == q(p(x))``,
    i.e. the left factor acts first.  With this convention conjugation reads
    ``p.conjugate(g) == g.inverse() * p * g`` and matches the usual
    right-action notation x^g.
    """

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(int(x) for x in images)
        n = len(images)
        seen = bytearray(n)
        for x in images:
            if not 0 <= x < n or seen[x]:
                raise ValueError("not a permutation of 0..%d: %r" % (n - 1, images))
            seen[x] = 1
        object.__setattr__(self, "images", images)

    @classmethod
    def _unchecked(cls, images: tuple) -> "Permutation":
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._unchecked(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Permutation":
        images = list(range(n))
        for cyc in cycles:
            cyc = [int(x) for x in cyc]
            for x in cyc:
                if not 0 <= x < n:
                    raise ValueError("cycle point %d out of range 0..%d" % (x, n - 1))
            if len(set(cyc)) != len(cyc):
                raise ValueError("repeated point in cycle %r" % (cyc,))
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                images[a] = b
        return cls(images)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (p * q)(x) == q(p(x)): apply self first, then other.
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch: %d vs %d" % (self.degree, other.degree))
        q = other.images
        return Permutation._unchecked(tuple(q[x] for x in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Permutation._unchecked(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g: "Permutation") -> "Permutation":
        """x^g in right-action notation: g.inverse() * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def moved_points(self):
        return [i for i, x in enumerate(self.images) if i != x]

    def cycles(self):
        """Non-trivial cycles, each starting at its smallest point."""
        seen = bytearray(self.degree)
        out = []
        for i in range(self.degree):
            if seen[i] or self.images[i] == i:
                continue
            cyc = [i]
            seen[i] = 1
            j = self.images[i]
            while j != i:
                seen[j] = 1
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return lcm(*(len(c) for c in self.cycles())) if self.cycles() else 1

    def cycle_string(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycs)

    def to_json(self) -> list:
        return list(self.images)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __lt__(self, other):
        # Fixed total order on elements: lexicographic on the image tuple.
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images < other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Permutation(%r)" % (list(self.images),)

    def __str__(self):
        return self.cycle_string()


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, degree: int | None = None) -> Permutation:
    """Parse either cycle notation "(1,2)(3,4)" or a JSON image array "[1,0,3,2]".

    Cycle points may be separated by commas or spaces.  For cycle input the
    degree defaults to 1 + the largest point mentioned.
    """
    text = text.strip()
    if text.startswith("["):
        return Permutation(json.loads(text))
    if text == "()" or text == "":
        return Permutation.identity(degree or 0)
    chunks = _CYCLE_RE.findall(text)
    if not chunks or _CYCLE_RE.sub("", text).strip():
        raise ValueError("cannot parse permutation: %r" % text)
    cycles = []
    for chunk in chunks:
        body = chunk.strip()
        if not body:
            continue
        cycles.append([int(tok) for tok in re.split(r"[,\s]+", body)])
    n = max((max(c) for c in cycles), default=-1) + 1
    if degree is not None:
        if degree < n:
            raise ValueError("degree %d too small for cycles reaching %d" % (degree, n - 1))
        n = degree
    return Permutation.from_cycles(n, cycles)


# ---------------------------------------------------------------------------
# Stabiliser chain (deterministic Schreier-Sims)
# ---------------------------------------------------------------------------

def _compose(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    # apply p first, then q
    return q[p]


def _invert(p: np.ndarray) -> np.ndarray:
    inv = np.empty_like(p)
    inv[p] = np.arange(len(p), dtype=p.dtype)
    return inv


class _Level:
    __slots__ = ("point", "gens", "orbit_list", "trans", "trans_inv", "done")

    def __init__(self, point: int, identity: np.ndarray):
        self.point = point
        self.gens: list[np.ndarray] = []
        self.orbit_list = [point]
        self.trans = {point: identity}
        self.trans_inv = {point: identity}
        self.done: set = set()

    def add_gen(self, g: np.ndarray):
        self.gens.append(g)
        self._extend_orbit()

    def _extend_orbit(self):
        # Extend-only closure: existing transversal entries are never
        # rewritten, which keeps already-processed Schreier pairs valid.
        i = 0
        while i < len(self.orbit_list):
            p = self.orbit_list[i]
            up = self.trans[p]
            for g in self.gens:
                q = int(g[p])
                if q not in self.trans:
                    uq = _compose(up, g)
                    self.trans[q] = uq
                    self.trans_inv[q] = _invert(uq)
                    self.orbit_list.append(q)
            i += 1


class _StabChain:
    def __init__(self, degree: int, gens: list[np.ndarray], base_prefix=()):
        self.degree = degree
        self.identity = np.arange(degree, dtype=np.int32)
        self.levels: list[_Level] = [_Level(b, self.identity) for b in base_prefix]
        for g in gens:
            if not self._is_id(g):
                self._insert_gen(g, 0)
        self._run()

    def _is_id(self, g: np.ndarray) -> bool:
        return bool((g == self.identity).all())

    def _insert_gen(self, g: np.ndarray, lo: int):
        """Add strong generator g to levels lo..j, j the first base point moved."""
        j = None
        for k in range(lo, len(self.levels)):
            if g[self.levels[k].point] != self.levels[k].point:
                j = k
                break
        if j is None:
            moved = int(np.nonzero(g != self.identity)[0][0])
            self.levels.append(_Level(moved, self.identity))
            j = len(self.levels) - 1
        for k in range(lo, j + 1):
            self.levels[k].add_gen(g)
        return j

    def _strip(self, g: np.ndarray, start: int):
        """Sift g through levels start.., returning (residue, stuck_level)."""
        for k in range(start, len(self.levels)):
            lv = self.levels[k]
            beta = int(g[lv.point])
            if beta == lv.point:
                continue
            if beta not in lv.trans_inv:
                return g, k
            g = _compose(g, lv.trans_inv[beta])
        return g, len(self.levels)

    def _run(self):
        i = len(self.levels) - 1
        while i >= 0:
            found = self._process_level(i)
            if found is None:
                i -= 1
                continue
            h, j_stuck = found
            if j_stuck == len(self.levels):
                moved = int(np.nonzero(h != self.identity)[0][0])
                self.levels.append(_Level(moved, self.identity))
            j = self._insert_gen(h, i + 1)
            i = j

    def _process_level(self, i: int):
        lv = self.levels[i]
        oi = 0
        while oi < len(lv.orbit_list):
            p = lv.orbit_list[oi]
            up = lv.trans[p]
            for gi in range(len(lv.gens)):
                if (p, gi) in lv.done:
                    continue
                lv.done.add((p, gi))
                s = lv.gens[gi]
                q = int(s[p])
                sg = _compose(_compose(up, s), lv.trans_inv[q])
                if self._is_id(sg):
                    continue
                residue, j = self._strip(sg, i + 1)
                if not self._is_id(residue):
                    return residue, j
            oi += 1
        return None

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.orbit_list)
        return n

    def contains(self, g: np.ndarray) -> bool:
        residue, _ = self._strip(g, 0)
        return self._is_id(residue)

    def base(self) -> tuple:
        return tuple(lv.point for lv in self.levels)

    def strong_gens_fixing_prefix(self, k: int) -> list[np.ndarray]:
        """Strong generators of the stabiliser of the first k base points."""
        out = []
        seen = set()
        for lv in self.levels[k:]:
            for g in lv.gens:
                key = g.tobytes()
                if key not in seen:
                    seen.add(key)
                    out.append(g)
        return out

    def iter_elements(self):
        """Every group element exactly once (products along the chain)."""

        def rec(k: int):
            if k == len(self.levels):
                yield self.identity
                return
            lv = self.levels[k]
            for h in rec(k + 1):
                for p in lv.orbit_list:
                    yield _compose(h, lv.trans[p])

        return rec(0)


class PermGroup:
    """Group generated by a set of permutations of {0..degree-1}.

    The stabiliser-chain data is built lazily, at most once, behind a lock;
    after that the group is safe to share between threads.
    """

    def __init__(self, generators, degree: int | None = None, base_prefix=()):
        generators = tuple(generators)
        if degree is None:
            if not generators:
                raise ValueError("degree required for an empty generating set")
            degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise ValueError("degree mismatch: %d vs %d" % (g.degree, degree))
        self.degree = degree
        self.generators = generators
        self._base_prefix = tuple(int(b) for b in base_prefix)
        self._chain: _StabChain | None = None
        self._lock = threading.Lock()

    def __repr__(self):
        return "PermGroup(degree=%d, ngens=%d)" % (self.degree, len(self.generators))

    def _gen_arrays(self) -> list[np.ndarray]:
        return [np.array(g.images, dtype=np.int32) for g in self.generators]

    @property
    def chain(self) -> _StabChain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = _StabChain(self.degree, self._gen_arrays(),
                                             self._base_prefix)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def contains(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise ValueError("degree mismatch: %d vs %d" % (p.degree, self.degree))
        return self.chain.contains(np.array(p.images, dtype=np.int32))

    def __contains__(self, p: Permutation) -> bool:
        return self.contains(p)

    def base(self) -> tuple:
        return self.chain.base()

    def orbit(self, x: int) -> set:
        """The orbit of point x, by plain closure over the generators."""
        if not 0 <= x < self.degree:
            raise ValueError("point %d out of range" % x)
        seen = {x}
        queue = [x]
        while queue:
            p = queue.pop()
            for g in self.generators:
                q = g.images[p]
                if q not in seen:
                    seen.add(q)
                    queue.append(q)
        return seen

    def orbits(self) -> list[set]:
        left = set(range(self.degree))
        out = []
        while left:
            x = min(left)
            orb = self.orbit(x)
            out.append(orb)
            left -= orb
        return out

    def is_transitive(self) -> bool:
        return self.degree > 0 and len(self.orbit(0)) == self.degree

    def point_stabiliser(self, x: int) -> "PermGroup":
        """The stabiliser of x, via a chain whose base starts at x."""
        if not 0 <= x < self.degree:
            raise ValueError("point %d out of range" % x)
        chain = _StabChain(self.degree, self._gen_arrays(), base_prefix=(x,))
        gens = [Permutation._unchecked(tuple(int(v) for v in g))
                for g in chain.strong_gens_fixing_prefix(1)]
        stab = PermGroup(gens, degree=self.degree)
        return stab

    def is_primitive(self) -> bool:
        """True iff the (transitive) action admits no nontrivial block system.

        Runs the minimal-block (union-find) search seeded by every pair
        {0, x}; primitive iff each seed generates the trivial one-block system.
        """
        if not self.is_transitive():
            raise ValueError("primitivity is only defined for transitive groups")
        if self.degree <= 2:
            return True
        for x in range(1, self.degree):
            if len(self.min_block_containing(0, x)) < self.degree:
                return False
        return True

    def min_block_containing(self, a: int, b: int) -> frozenset:
        """The smallest block of imprimitivity containing both a and b
        (Atkinson's union-find refinement)."""
        parent = list(range(self.degree))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        def union(u, v):
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[max(ru, rv)] = min(ru, rv)

        union(a, b)
        queue = [(a, b)]
        while queue:
            u, v = queue.pop()
            for g in self.generators:
                x, y = g.images[u], g.images[v]
                rx, ry = find(x), find(y)
                if rx != ry:
                    union(rx, ry)
                    queue.append((rx, ry))
        root = find(a)
        return frozenset(u for u in range(self.degree) if find(u) == root)

    def elements(self, cap: int = 10 ** 6) -> list[Permutation]:
        """All group elements; refuses when the order exceeds cap."""
        n = self.order()
        if n > cap:
            raise ValueError("group too large to enumerate: %d > %d" % (n, cap))
        out = [Permutation._unchecked(tuple(int(v) for v in arr))
               for arr in self.chain.iter_elements()]
        assert len(out) == n
        return out

    def element_order_census(self, cap: int = 10 ** 6) -> dict[int, int]:
        """Exact multiset {element order: count} by full enumeration."""
        n = self.order()
        if n > cap:
            raise ValueError("group too large to enumerate: %d > %d" % (n, cap))
        census: Counter = Counter()
        for arr in self.chain.iter_elements():
            seen = np.zeros(self.degree, dtype=bool)
            order = 1
            for i in range(self.degree):
                if seen[i]:
                    continue
                length = 0
                j = i
                while not seen[j]:
                    seen[j] = True
                    length += 1
                    j = int(arr[j])
                if length > 1:
                    order = lcm(order, length)
            census[order] += 1
        return dict(census)
