"""Pure-Python node store and apply kernels for reduced ordered BDDs.

This module is the reference twin of the compiled kernel
(`synabs.bdd._kernel_cy`); both expose the same class with the same
semantics and are interchangeable at import time.  Nodes are integers:
0 is the false terminal, 1 the true terminal, everything else an index
into the (var, lo, hi) node store.  Variables are levels: smaller level
means closer to the root.  There are no complement edges.
"""

from __future__ import annotations

import sys

sys.setrecursionlimit(100_000)

LEAF_LEVEL = 0x7FFFFFFF


class Kernel:
    """Node store with hash-consing plus memoized apply operations."""

    FALSE = 0
    TRUE = 1

    def __init__(self):
        self._var = [LEAF_LEVEL, LEAF_LEVEL]
        self._lo = [0, 1]
        self._hi = [0, 1]
        self._unique = {}
        self._and_cache = {}
        self._or_cache = {}
        self._not_cache = {}
        self.nvars = 0

    # -- variables and node construction -------------------------------

    def new_var(self) -> int:
        v = self.nvars
        self.nvars += 1
        return v

    def num_nodes(self) -> int:
        return len(self._var)

    def var_of(self, f: int) -> int:
        return self._var[f]

    def lo_of(self, f: int) -> int:
        return self._lo[f]

    def hi_of(self, f: int) -> int:
        return self._hi[f]

    def mk(self, v: int, lo: int, hi: int) -> int:
        if lo == hi:
            return lo
        key = (v, lo, hi)
        n = self._unique.get(key)
        if n is None:
            n = len(self._var)
            self._var.append(v)
            self._lo.append(lo)
            self._hi.append(hi)
            self._unique[key] = n
        return n

    def var_fn(self, v: int) -> int:
        return self.mk(v, 0, 1)

    def nvar_fn(self, v: int) -> int:
        return self.mk(v, 1, 0)

    def cube(self, levels, bits) -> int:
        """Conjunction of literals; `levels` strictly increasing."""
        acc = 1
        for i in range(len(levels) - 1, -1, -1):
            if bits[i]:
                acc = self.mk(levels[i], 0, acc)
            else:
                acc = self.mk(levels[i], acc, 0)
        return acc

    # -- apply kernels --------------------------------------------------

    def not_(self, f: int) -> int:
        if f < 2:
            return 1 - f
        r = self._not_cache.get(f)
        if r is None:
            r = self.mk(self._var[f], self.not_(self._lo[f]), self.not_(self._hi[f]))
            self._not_cache[f] = r
        return r

    def and_(self, f: int, g: int) -> int:
        if f == 0 or g == 0:
            return 0
        if f == 1:
            return g
        if g == 1 or f == g:
            return f
        if f > g:
            f, g = g, f
        key = (f, g)
        r = self._and_cache.get(key)
        if r is not None:
            return r
        vf, vg = self._var[f], self._var[g]
        v = vf if vf < vg else vg
        f0, f1 = (self._lo[f], self._hi[f]) if vf == v else (f, f)
        g0, g1 = (self._lo[g], self._hi[g]) if vg == v else (g, g)
        r = self.mk(v, self.and_(f0, g0), self.and_(f1, g1))
        self._and_cache[key] = r
        return r

    def or_(self, f: int, g: int) -> int:
        if f == 1 or g == 1:
            return 1
        if f == 0:
            return g
        if g == 0 or f == g:
            return f
        if f > g:
            f, g = g, f
        key = (f, g)
        r = self._or_cache.get(key)
        if r is not None:
            return r
        vf, vg = self._var[f], self._var[g]
        v = vf if vf < vg else vg
        f0, f1 = (self._lo[f], self._hi[f]) if vf == v else (f, f)
        g0, g1 = (self._lo[g], self._hi[g]) if vg == v else (g, g)
        r = self.mk(v, self.or_(f0, g0), self.or_(f1, g1))
        self._or_cache[key] = r
        return r

    # -- quantification, restriction, renaming --------------------------

    def exists(self, f: int, levels) -> int:
        if not levels:
            return f
        qset = frozenset(levels)
        qmax = max(qset)
        cache = {}

        def rec(n):
            if n < 2:
                return n
            v = self._var[n]
            if v > qmax:
                return n
            r = cache.get(n)
            if r is not None:
                return r
            lo = rec(self._lo[n])
            hi = rec(self._hi[n])
            if v in qset:
                r = self.or_(lo, hi)
            else:
                r = self.mk(v, lo, hi)
            cache[n] = r
            return r

        return rec(f)

    def and_exists(self, f: int, g: int, levels) -> int:
        """exists(and_(f, g), levels) without building the conjunction."""
        if not levels:
            return self.and_(f, g)
        qset = frozenset(levels)
        qmax = max(qset)
        cache = {}
        ex_cache = {}

        def ex(n):
            if n < 2:
                return n
            v = self._var[n]
            if v > qmax:
                return n
            r = ex_cache.get(n)
            if r is not None:
                return r
            lo = ex(self._lo[n])
            hi = ex(self._hi[n])
            r = self.or_(lo, hi) if v in qset else self.mk(v, lo, hi)
            ex_cache[n] = r
            return r

        def rec(f, g):
            if f == 0 or g == 0:
                return 0
            if f == 1 and g == 1:
                return 1
            if f == 1:
                return ex(g)
            if g == 1 or f == g:
                return ex(f)
            if f > g:
                f, g = g, f
            key = (f, g)
            r = cache.get(key)
            if r is not None:
                return r
            vf, vg = self._var[f], self._var[g]
            v = vf if vf < vg else vg
            f0, f1 = (self._lo[f], self._hi[f]) if vf == v else (f, f)
            g0, g1 = (self._lo[g], self._hi[g]) if vg == v else (g, g)
            if v in qset:
                r = self.or_(rec(f0, g0), rec(f1, g1))
            else:
                r = self.mk(v, rec(f0, g0), rec(f1, g1))
            cache[key] = r
            return r

        return rec(f, g)

    def restrict(self, f: int, assignment: dict) -> int:
        if not assignment:
            return f
        amax = max(assignment)
        cache = {}

        def rec(n):
            if n < 2:
                return n
            v = self._var[n]
            if v > amax:
                return n
            r = cache.get(n)
            if r is not None:
                return r
            b = assignment.get(v)
            if b is None:
                r = self.mk(v, rec(self._lo[n]), rec(self._hi[n]))
            elif b:
                r = rec(self._hi[n])
            else:
                r = rec(self._lo[n])
            cache[n] = r
            return r

        return rec(f)

    def rename(self, f: int, mapping: dict) -> int:
        """Variable substitution; mapping must be order-isomorphic."""
        if not mapping:
            return f
        cache = {}

        def rec(n):
            if n < 2:
                return n
            r = cache.get(n)
            if r is not None:
                return r
            v = self._var[n]
            r = self.mk(mapping.get(v, v), rec(self._lo[n]), rec(self._hi[n]))
            cache[n] = r
            return r

        return rec(f)

    # -- inspection ------------------------------------------------------

    def count_nodes(self, f: int) -> int:
        """Number of distinct nodes reachable from f, terminals included."""
        seen = {0, 1}
        stack = [f]
        while stack:
            n = stack.pop()
            if n in seen:
                continue
            seen.add(n)
            stack.append(self._lo[n])
            stack.append(self._hi[n])
        return len(seen) if f >= 2 else 1

    def support(self, f: int):
        """Sorted list of levels occurring in f."""
        seen = set()
        levels = set()
        stack = [f]
        while stack:
            n = stack.pop()
            if n < 2 or n in seen:
                continue
            seen.add(n)
            levels.add(self._var[n])
            stack.append(self._lo[n])
            stack.append(self._hi[n])
        return sorted(levels)

    def eval(self, f: int, bits) -> bool:
        """Evaluate under a full assignment (level -> bits[level])."""
        n = f
        while n >= 2:
            n = self._hi[n] if bits[self._var[n]] else self._lo[n]
        return n == 1

    # -- garbage collection ---------------------------------------------

    def collect(self, roots):
        """Epoch sweep: keep nodes reachable from roots, drop the rest.

        Node ids are compacted; returns a dict mapping each root id to
        its new id.  All operation caches are invalidated.
        """
        marked = {0, 1}
        stack = [r for r in roots if r >= 2]
        while stack:
            n = stack.pop()
            if n in marked:
                continue
            marked.add(n)
            stack.append(self._lo[n])
            stack.append(self._hi[n])

        remap = {0: 0, 1: 1}
        nvar = [LEAF_LEVEL, LEAF_LEVEL]
        nlo = [0, 1]
        nhi = [0, 1]
        unique = {}
        # old ids are creation-ordered, so children precede parents
        for n in range(2, len(self._var)):
            if n not in marked:
                continue
            v = self._var[n]
            lo = remap[self._lo[n]]
            hi = remap[self._hi[n]]
            nid = len(nvar)
            nvar.append(v)
            nlo.append(lo)
            nhi.append(hi)
            unique[(v, lo, hi)] = nid
            remap[n] = nid
        self._var, self._lo, self._hi = nvar, nlo, nhi
        self._unique = unique
        self._and_cache.clear()
        self._or_cache.clear()
        self._not_cache.clear()
        return {r: remap[r] for r in roots}
