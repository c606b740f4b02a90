"""Per-composition workspace caching every object the checks touch.

Building the Tamari lattice for a composition of 6 takes real work, and a
verification run needs the same lattice for half a dozen checks, so all
constructions are cached behind one context object per composition.
"""

from __future__ import annotations

from functools import cached_property, lru_cache

from . import lattices, noncrossing, symgroup, tamari, triangles
from .posets import FinitePoset
from .symgroup import Composition


class AlphaContext:
    def __init__(self, comp: Composition):
        self.comp = comp

    @cached_property
    def quotient(self) -> list:
        return symgroup.quotient_elements(self.comp)

    @cached_property
    def weak_poset(self) -> FinitePoset:
        return symgroup.weak_order_poset(self.quotient)

    @cached_property
    def tam(self) -> tamari.TamariLattice:
        return tamari.tamari_lattice(self.comp)

    @cached_property
    def psi(self) -> dict:
        return lattices.core_label_sets(self.tam.tables, self.tam.labeling)

    @cached_property
    def clo(self) -> FinitePoset:
        return lattices.core_label_order(self.tam.tables, self.tam.labeling,
                                         self.psi)

    @cached_property
    def nc_elements(self) -> list:
        return noncrossing.enumerate_nc(self.comp)

    @cached_property
    def nc(self) -> FinitePoset:
        return noncrossing.nc_poset(self.comp, self.nc_elements)

    @cached_property
    def nc_index(self) -> dict:
        return {p: i for i, p in enumerate(self.nc.labels)}

    @cached_property
    def phi_of_element(self) -> list:
        """Tamari element index -> noncrossing element index."""
        return [
            self.nc_index[noncrossing.phi(w, self.comp)]
            for w in self.tam.elements
        ]

    @cached_property
    def root(self) -> triangles.RootPoset:
        return triangles.root_poset(self.comp)

    @cached_property
    def nonnesting(self) -> list:
        return triangles.nonnesting_partitions(self.comp, self.root)

    @cached_property
    def h(self):
        return triangles.h_triangle(self.comp, self.root, self.nonnesting)

    @cached_property
    def mbar(self):
        return triangles.mbar_triangle(self.comp, self.nc)

    @cached_property
    def m(self):
        grades = [len(symgroup.descents(w)) for w in self.tam.elements]
        return triangles.mobius_rank_polynomial(self.clo, grades)

    @cached_property
    def f(self) -> triangles.FTriangle:
        return triangles.f_triangle(self.comp, self.h)

    @cached_property
    def hm_identity(self) -> triangles.HMIdentity:
        return triangles.check_hm_identity(self.comp, self.h, self.m)

    @cached_property
    def galois_lattice(self) -> lattices.GaloisGraph:
        return lattices.galois_graph(
            self.tam.tables, self.tam.extremal_ordering, self.tam.labeling
        )

    @cached_property
    def galois_combinatorial(self) -> lattices.GaloisGraph:
        return tamari.galois_graph_combinatorial(self.comp)

    def clo_equals_nc(self) -> bool:
        """Whether the relabelled core label order matches refinement."""
        phi = self.phi_of_element
        clo, nc = self.clo, self.nc
        return all(
            clo.leq(i, j) == nc.leq(phi[i], phi[j])
            for i in range(clo.n)
            for j in range(clo.n)
        )

    def clo_subset_of_nc(self) -> bool:
        phi = self.phi_of_element
        clo, nc = self.clo, self.nc
        return all(
            nc.leq(phi[i], phi[j])
            for i in range(clo.n)
            for j in range(clo.n)
            if clo.leq(i, j)
        )


@lru_cache(maxsize=None)
def get_context(parts: tuple) -> AlphaContext:
    return AlphaContext(Composition(parts))


def all_compositions(n: int) -> list:
    """The ``2^(n-1)`` compositions of ``n`` in lexicographic order."""
    out = []

    def rec(rest, acc):
        if rest == 0:
            out.append(tuple(acc))
            return
        for first in range(1, rest + 1):
            acc.append(first)
            rec(rest - first, acc)
            acc.pop()

    rec(n, [])
    return sorted(out)
