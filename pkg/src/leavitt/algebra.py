"""Exact elements of the Leavitt path algebra of a finite graph, kept in a
canonical reduced form.

A monomial is a real path times a ghost path ("alpha beta-star") with common
range.  The vertex relations, edge absorption, and the ghost-real contraction
are applied eagerly during multiplication; the vertex-resolution relation is
oriented into a rewrite rule using a designated edge per emitting vertex (the
order-maximal outgoing edge): whenever both the real and the ghost part end
in the designated edge, the pair is resolved into the complementary
edge-pair sum.  Monomials free of that configuration form a K-basis, so
equality of elements is literal equality of term maps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional

from . import linalg
from .fields import QQ
from .graph import Graph, GraphError, tree


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class Path:
    """A finite path: start vertex plus a (possibly empty) edge tuple."""

    vertex: str
    edges: tuple[str, ...] = ()

    def __len__(self):
        return len(self.edges)

    def __lt__(self, other):
        # ordered so composite variable keys can pick pivots deterministically
        return (self.vertex, self.edges) < (other.vertex, other.edges)


class Monomial(NamedTuple):
    alpha: Path
    beta: Path

    @property
    def degree(self) -> int:
        return len(self.alpha) + len(self.beta)

    def sort_key(self):
        return (self.degree, self.alpha.edges, self.beta.edges,
                self.alpha.vertex, self.beta.vertex)


class LeavittAlgebra:
    """Context object: the graph, the coefficient field, and the oriented
    rewrite data.  All element operations live here or on Element."""

    def __init__(self, graph: Graph, field=QQ):
        self.graph = graph
        self.field = field
        # Prefer an out-edge lying on a cycle through its source: then the
        # rewrite eliminates the returning pair e.e* and elements of the
        # ideal generated by the downstream vertices keep a form whose
        # monomials visibly leave the cycle.
        self.designated = {}
        for v in graph.vertices:
            outs = graph.out_edges(v)
            if not outs:
                continue
            returning = [e for e in outs if v in tree(graph, graph.rng[e])]
            self.designated[v] = max(returning) if returning else max(outs)

    # -- path utilities ----------------------------------------------------

    def path_range(self, p: Path) -> str:
        return self.graph.rng[p.edges[-1]] if p.edges else p.vertex

    def make_path(self, vertex: str, edges: Iterable[str] = ()) -> Path:
        edges = tuple(edges)
        self.graph.check_vertex(vertex)
        at = vertex
        for e in edges:
            if e not in self.graph.src:
                raise AlgebraError(f"unknown edge {e!r}")
            if self.graph.src[e] != at:
                raise AlgebraError(f"edges do not compose at {e!r}")
            at = self.graph.rng[e]
        return Path(vertex, edges)

    def paths_up_to(self, max_len: int) -> list[Path]:
        """All paths of length at most ``max_len``, shortest first."""
        level = [Path(v) for v in self.graph.vertices]
        out = list(level)
        for _ in range(max_len):
            nxt = []
            for p in level:
                for e in self.graph.out_edges(self.path_range(p)):
                    nxt.append(Path(p.vertex, p.edges + (e,)))
            out.extend(nxt)
            level = nxt
            if not level:
                break
        return out

    def monomials_up_to(self, max_deg: int) -> list[Monomial]:
        """All reduced monomials of degree at most ``max_deg``."""
        by_range: dict[str, list[Path]] = {}
        for p in self.paths_up_to(max_deg):
            by_range.setdefault(self.path_range(p), []).append(p)
        out = []
        for r, plist in by_range.items():
            for a in plist:
                for b in plist:
                    if len(a) + len(b) > max_deg:
                        continue
                    if self._is_redex(a, b):
                        continue
                    out.append(Monomial(a, b))
        out.sort(key=Monomial.sort_key)
        return out

    def _is_redex(self, alpha: Path, beta: Path) -> bool:
        if not (alpha.edges and beta.edges):
            return False
        e = alpha.edges[-1]
        return beta.edges[-1] == e and self.designated[self.graph.src[e]] == e

    # -- element constructors ----------------------------------------------

    def element(self, terms: dict) -> "Element":
        zero = self.field.zero
        return Element(self, {m: c for m, c in terms.items() if c != zero})

    def zero(self) -> "Element":
        return Element(self, {})

    def vertex(self, v: str) -> "Element":
        self.graph.check_vertex(v)
        p = Path(v)
        return Element(self, {Monomial(p, p): self.field.one})

    def edge(self, e: str) -> "Element":
        if e not in self.graph.src:
            raise AlgebraError(f"unknown edge {e!r}")
        a = Path(self.graph.src[e], (e,))
        b = Path(self.graph.rng[e])
        return Element(self, {Monomial(a, b): self.field.one})

    def ghost(self, e: str) -> "Element":
        return self.edge(e).star()

    def path_element(self, p: Path) -> "Element":
        return Element(self, {Monomial(p, Path(self.path_range(p))): self.field.one})

    def monomial_element(self, alpha: Path, beta: Path, coeff=None) -> "Element":
        if self.path_range(alpha) != self.path_range(beta):
            raise AlgebraError("real and ghost part must share their range vertex")
        acc: dict = {}
        self._accumulate(acc, alpha, beta, self.field.one if coeff is None else coeff)
        return self.element(acc)

    def vertex_sum(self, S: Iterable[str]) -> "Element":
        acc: dict = {}
        for v in S:
            self.graph.check_vertex(v)
            p = Path(v)
            acc[Monomial(p, p)] = self.field.one
        return Element(self, acc)

    def one(self) -> "Element":
        return self.vertex_sum(self.graph.vertices)

    def symbol(self, name: str) -> "Element":
        """The generator named by ``name``: a vertex, an edge, or ``e*``."""
        if name.endswith("*"):
            return self.ghost(name[:-1])
        if name in self.graph.src:
            return self.edge(name)
        if name in self.graph.vertices:
            return self.vertex(name)
        raise AlgebraError(f"unknown symbol {name!r}")

    def word_element(self, symbols: list[str], rng=None) -> "Element":
        """Product of generator symbols.  With ``rng``, the product is folded
        in a randomized association order (the result must not depend on it)."""
        factors = [self.symbol(s) for s in symbols]
        if not factors:
            return self.one()
        while len(factors) > 1:
            i = rng.randrange(len(factors) - 1) if rng else 0
            factors[i:i + 2] = [factors[i] * factors[i + 1]]
        return factors[0]

    # -- the rewrite core --------------------------------------------------

    def _accumulate(self, acc: dict, alpha: Path, beta: Path, coeff) -> None:
        """Add ``coeff * alpha beta-star`` to ``acc``, fully reduced."""
        while self._is_redex(alpha, beta):
            e = alpha.edges[-1]
            v = self.graph.src[e]
            alpha = Path(alpha.vertex, alpha.edges[:-1])
            beta = Path(beta.vertex, beta.edges[:-1])
            for e2 in self.graph.out_edges(v):
                if e2 != e:
                    self._accumulate(acc,
                                     Path(alpha.vertex, alpha.edges + (e2,)),
                                     Path(beta.vertex, beta.edges + (e2,)),
                                     -coeff)
        m = Monomial(alpha, beta)
        acc[m] = acc.get(m, self.field.zero) + coeff

    def _mul_monomials(self, acc: dict, m1: Monomial, m2: Monomial, coeff) -> None:
        alpha, beta = m1
        gamma, delta = m2
        if beta.vertex != gamma.vertex:
            return
        nb, ng = len(beta.edges), len(gamma.edges)
        if nb <= ng:
            if beta.edges != gamma.edges[:nb]:
                return
            new_alpha = Path(alpha.vertex, alpha.edges + gamma.edges[nb:])
            self._accumulate(acc, new_alpha, delta, coeff)
        else:
            if gamma.edges != beta.edges[:ng]:
                return
            new_beta = Path(delta.vertex, delta.edges + beta.edges[ng:])
            self._accumulate(acc, alpha, new_beta, coeff)

    # -- corner machinery --------------------------------------------------

    def corner(self, a: "Element", mu: "Element") -> "Element":
        return mu * a * mu

    def corner_restrict(self, a: "Element", sub: "LeavittAlgebra") -> "Element":
        """Re-express an element supported on a hereditary restriction graph
        as an element over that restriction."""
        keep = set(sub.graph.vertices)
        keep_edges = set(sub.graph.edges)
        terms = {}
        for m, c in a.terms.items():
            for p in (m.alpha, m.beta):
                if p.vertex not in keep or any(e not in keep_edges for e in p.edges):
                    raise AlgebraError(
                        f"element not supported on the restriction: {m}")
            terms[m] = c
        return Element(sub, dict(terms))

    def embed(self, a: "Element") -> "Element":
        """Inverse of corner_restrict: view an element of a restriction
        algebra as an element of this one."""
        for v in a.algebra.graph.vertices:
            self.graph.check_vertex(v)
        return Element(self, dict(a.terms))

    # -- bounded membership -------------------------------------------------

    def membership_bounded(self, x: "Element", gens: list["Element"],
                           degree_bound: int) -> Optional[list["Element"]]:
        """Witnesses a_i with sum(a_i * gens_i) = x, each a_i supported on
        reduced monomials of degree <= degree_bound; None if no witness exists
        at this bound (which proves nothing about larger bounds)."""
        if degree_bound < 0:
            raise AlgebraError("degree bound must be >= 0")
        candidates = self.monomials_up_to(degree_bound)
        columns = {}  # var -> product element terms
        for i, g in enumerate(gens):
            if g.is_zero():
                continue
            for m in candidates:
                prod = Element(self, {m: self.field.one}) * g
                if not prod.is_zero():
                    columns[(i, m)] = prod.terms
        equations: dict = {}
        for var, terms in columns.items():
            for mono, c in terms.items():
                equations.setdefault(mono, {})[var] = c
        rows = []
        seen = set(equations)
        for mono in set(x.terms) | seen:
            rows.append((equations.get(mono, {}),
                         x.terms.get(mono, self.field.zero)))
        sol = linalg.solve(self.field, rows)
        if sol is None:
            return None
        witnesses = [self.zero() for _ in gens]
        for (i, m), c in sol.items():
            witnesses[i] = witnesses[i] + self.element({m: c})
        return witnesses

    def __eq__(self, other):
        return (isinstance(other, LeavittAlgebra)
                and other.graph == self.graph and other.field == self.field)

    def __hash__(self):
        return hash((self.graph.vertices, self.graph.edges, self.field))

    def __repr__(self):
        return f"LeavittAlgebra({self.graph!r}, {self.field!r})"


class Element:
    """An exact algebra element: a finite map from reduced monomials to
    nonzero coefficients.  Immutable; all arithmetic returns new values."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: LeavittAlgebra, terms: dict):
        self.algebra = algebra
        self.terms = terms

    def _check(self, other: "Element"):
        if other.algebra != self.algebra:
            raise AlgebraError("elements over different graphs or fields")

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((m.degree for m in self.terms), default=0)

    def __add__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        self._check(other)
        zero = self.algebra.field.zero
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, zero) + c
        return self.algebra.element(acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check(other)
            acc: dict = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    self.algebra._mul_monomials(acc, m1, m2, c1 * c2)
            return self.algebra.element(acc)
        return self.scale(other)

    def __rmul__(self, other):
        # scalars commute with everything
        return self.scale(other)

    def scale(self, k) -> "Element":
        k = self.algebra.field.of(k)
        return self.algebra.element({m: k * c for m, c in self.terms.items()})

    def star(self) -> "Element":
        return Element(self.algebra,
                       {Monomial(m.beta, m.alpha): c for m, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: kv[0].sort_key())

    def support_vertices(self) -> set[str]:
        g = self.algebra.graph
        out = set()
        for m in self.terms:
            for p in (m.alpha, m.beta):
                out.add(p.vertex)
                for e in p.edges:
                    out.add(g.rng[e])
        return out

    def __repr__(self):
        from .grammar import format_element
        return format_element(self)
