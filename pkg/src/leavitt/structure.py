"""Structural toolkit over the path algebra of a graph with a chosen source.

Provides the two-sided decomposition along a source (corner projections, the
ideal generated by the complement, its filtration idempotents), the averaged
cycle powers used to absorb that ideal, graph homomorphisms induced by
out-splitting, and the exact correspondence between the algebra of a cycle
and square Laurent-polynomial matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraError, Element, LeavittAlgebra, Monomial, Path
from .graph import (Cycle, SourceDescriptor, delta_set, rotate_cycle,
                    theta_paths)
from .laurent import LaurentMatrix, LaurentPoly


class StructureError(AlgebraError):
    pass


def nu(alg: LeavittAlgebra, s: SourceDescriptor) -> Element:
    """Sum of the source's vertices."""
    return alg.vertex_sum(s.V)


def omega(alg: LeavittAlgebra, s: SourceDescriptor) -> Element:
    """Sum of the complementary vertices (1 - nu)."""
    return alg.vertex_sum(s.W)


def _split_alpha(alg: LeavittAlgebra, s: SourceDescriptor, p: Path):
    """Split a path starting in V as (cycle run, crossing edge, remainder)."""
    V = set(s.V)
    for i, e in enumerate(p.edges):
        if alg.graph.rng[e] not in V:
            return p.edges[:i], e, Path(alg.graph.rng[e], p.edges[i + 1:])
    raise StructureError(f"path never leaves the source: {p}")


def decompose_nu_x_omega(alg: LeavittAlgebra, s: SourceDescriptor, x: Element):
    """Write ``x`` in nu*R*omega as a sum of (run . crossing-edge) * part.

    Returns a list of ``((start_vertex, run_edges), crossing_edge, part)``
    with ``x = sum(path(run + edge) * part)`` and each part in omega*R*omega.
    """
    V = set(s.V)
    groups: dict = {}
    for m, c in x.terms.items():
        if m.alpha.vertex not in V or m.beta.vertex in V:
            raise StructureError("element is not of the form nu*x*omega")
        run, f, rest = _split_alpha(alg, s, m.alpha)
        key = ((m.alpha.vertex, run), f)
        groups.setdefault(key, {})[Monomial(rest, m.beta)] = c
    return [(eps, f, alg.element(terms)) for (eps, f), terms in sorted(groups.items())]


@dataclass(frozen=True)
class JDecomposition:
    """x = omega_part * omega + sum(parts[(eps, f)] * (f* eps*))."""

    omega_part: Element
    parts: dict  # ((start_vertex, run_edges), crossing_edge) -> Element


def j_decompose(alg: LeavittAlgebra, s: SourceDescriptor, x: Element) -> JDecomposition:
    """Decompose an element of the ideal generated by W along its left
    module splitting.  Raises if ``x`` is not in that ideal."""
    V = set(s.V)
    omega_terms: dict = {}
    parts: dict = {}
    for m, c in x.terms.items():
        if alg.path_range(m.alpha) in V:
            raise StructureError("element is not in the ideal generated by W")
        if m.beta.vertex not in V:
            omega_terms[m] = c
        else:
            run, f, rest = _split_alpha(alg, s, m.beta)
            key = ((m.beta.vertex, run), f)
            parts.setdefault(key, {})[Monomial(m.alpha, rest)] = c
    return JDecomposition(alg.element(omega_terms),
                          {k: alg.element(t) for k, t in sorted(parts.items())})


def j_reconstruct(alg: LeavittAlgebra, s: SourceDescriptor,
                  dec: JDecomposition) -> Element:
    total = dec.omega_part * omega(alg, s)
    for ((v, run), f), part in dec.parts.items():
        ghost = alg.path_element(alg.make_path(v, run + (f,))).star()
        total = total + part * ghost
    return total


def j_contains(alg: LeavittAlgebra, s: SourceDescriptor, x: Element) -> bool:
    V = set(s.V)
    return all(alg.path_range(m.alpha) not in V for m in x.terms)


def e_idempotent(alg: LeavittAlgebra, s: SourceDescriptor, M: int) -> Element:
    """e_M = omega + sum over crossing edges f and runs eps of level M of
    (eps f)(eps f)*; the filtration idempotent of the ideal generated by W."""
    total = omega(alg, s)
    for (v, run) in theta_paths(alg.graph, s, M):
        for f in delta_set(alg.graph, s):
            if alg.graph.src[f] != (alg.graph.rng[run[-1]] if run else v):
                continue
            p = alg.make_path(v, run + (f,))
            total = total + alg.monomial_element(p, p)
    return total


def _cycle_data(alg: LeavittAlgebra, c: Cycle):
    """Vertices in cycle order from the base, with their return paths to it."""
    order = c.vertices_in_order(alg.graph)
    n = len(order)
    alphas = {}
    for i, v in enumerate(order):
        rot = rotate_cycle(alg.graph, c, v)
        alphas[v] = Path(v, rot.edges[:(n - i) % n] if i else ())
    return order, alphas


def d_element(alg: LeavittAlgebra, s: SourceDescriptor, t: int) -> Element:
    """d_t = sum over cycle vertices of alpha_v c^t alpha_v*, where alpha_v
    runs from v back to the cycle base and c is the base rotation."""
    if s.kind != "cycle":
        raise StructureError("d_t needs a cycle source")
    order, alphas = _cycle_data(alg, s.cycle)
    base_edges = s.cycle.edges
    total = alg.zero()
    for v in order:
        a = alphas[v]
        total = total + alg.monomial_element(
            Path(v, a.edges + base_edges * t), a)
    return total


def big_c(alg: LeavittAlgebra, s: SourceDescriptor, N: int) -> Element:
    """C^N: the sum of the N-th powers of all rotations of the source cycle."""
    if s.kind != "cycle":
        raise StructureError("C^N needs a cycle source")
    total = alg.zero()
    for v in s.cycle.vertex_set(alg.graph):
        rot = rotate_cycle(alg.graph, s.cycle, v)
        total = total + alg.monomial_element(Path(v, rot.edges * N), Path(v))
    return total


def psi(alg: LeavittAlgebra, c: Cycle, i: int) -> Element:
    """psi_i = c^i (c*)^i - c^(i+1) (c*)^(i+1) for the base rotation; nonzero
    orthogonal idempotents exactly when the cycle has an exit."""
    lo = alg.monomial_element(Path(c.base, c.edges * i), Path(c.base, c.edges * i))
    hi = alg.monomial_element(Path(c.base, c.edges * (i + 1)),
                              Path(c.base, c.edges * (i + 1)))
    return lo - hi


class GraphHom:
    """An algebra map determined by images of vertices, edges, and ghost
    edges (the ghost image defaults to the star of the edge image)."""

    def __init__(self, source: LeavittAlgebra, target: LeavittAlgebra,
                 vertex_images: dict, edge_images: dict):
        self.source = source
        self.target = target
        self.vertex_images = dict(vertex_images)
        self.edge_images = dict(edge_images)

    def _path_image(self, p: Path) -> Element:
        img = self.vertex_images[p.vertex]
        for e in p.edges:
            img = img * self.edge_images[e]
        return img

    def apply(self, x: Element) -> Element:
        if x.algebra != self.source:
            raise StructureError("element is not over the map's source algebra")
        total = self.target.zero()
        for m, c in x.terms.items():
            total = total + (self._path_image(m.alpha)
                             * self._path_image(m.beta).star()).scale(c)
        return total

    def relation_failures(self) -> list[str]:
        """Check every defining relation on the generator images; returns a
        list of human-readable failures (empty means the map is an algebra
        homomorphism)."""
        g = self.source.graph
        out = []
        V = {v: self.vertex_images[v] for v in g.vertices}
        E = {e: self.edge_images[e] for e in g.edges}
        for v in g.vertices:
            for u in g.vertices:
                expect = V[v] if v == u else self.target.zero()
                if V[v] * V[u] != expect:
                    out.append(f"vertex relation fails at ({v}, {u})")
        for e in g.edges:
            s, r = g.src[e], g.rng[e]
            if V[s] * E[e] != E[e] or E[e] * V[r] != E[e]:
                out.append(f"edge absorption fails at {e}")
            ge = E[e].star()
            if V[r] * ge != ge or ge * V[s] != ge:
                out.append(f"ghost absorption fails at {e}")
            for e2 in g.edges:
                expect = V[g.rng[e]] if e == e2 else self.target.zero()
                if E[e].star() * E[e2] != expect:
                    out.append(f"contraction fails at ({e}, {e2})")
        for v in g.vertices:
            outs = g.out_edges(v)
            if not outs:
                continue
            acc = self.target.zero()
            for e in outs:
                acc = acc + E[e] * E[e].star()
            if acc != V[v]:
                out.append(f"vertex resolution fails at {v}")
        return out


def outsplit_maps(alg_e: LeavittAlgebra, alg_f: LeavittAlgebra, data):
    """The mutually inverse maps between the algebra of a graph and the
    algebra of its out-split at a source vertex.

    ``data`` is the correspondence record returned by ``graph.outsplit``.
    Returns ``(forward, backward)`` as GraphHom values.
    """
    ge, gf = alg_e.graph, alg_f.graph
    v0, vhat, old, new = data.v0, data.vhat, data.old_edge, data.new_edge

    fwd_v = {v: alg_f.vertex(v) for v in ge.vertices}
    fwd_v[v0] = alg_f.vertex(v0) + alg_f.vertex(vhat)
    fwd_e = {e: alg_f.edge(e) for e in ge.edges if e != old}
    fwd_e[old] = alg_f.edge(new)

    kept = [e for e in ge.out_edges(v0) if e != old]
    split_sum = alg_e.zero()
    for e in kept:
        split_sum = split_sum + alg_e.edge(e) * alg_e.ghost(e)
    bwd_v = {v: alg_e.vertex(v) for v in gf.vertices if v != vhat}
    bwd_v[v0] = split_sum
    bwd_v[vhat] = alg_e.edge(old) * alg_e.ghost(old)
    bwd_e = {e: alg_e.edge(e) for e in gf.edges if e != new}
    bwd_e[new] = alg_e.edge(old)

    return (GraphHom(alg_e, alg_f, fwd_v, fwd_e),
            GraphHom(alg_f, alg_e, bwd_v, bwd_e))


class CycleMatrixIso:
    """The correspondence between the algebra of an n-cycle and n x n Laurent
    matrices: matrix unit E_ij x^t maps to alpha_i c^t alpha_j*.

    On a graph whose cycle has exits, ``project_mod_j`` realizes the quotient
    by the ideal generated by the off-cycle vertices.
    """

    def __init__(self, alg: LeavittAlgebra, c: Cycle):
        self.alg = alg
        self.cycle = c
        self.order, self.alphas = _cycle_data(alg, c)
        self.index = {v: i for i, v in enumerate(self.order)}
        self.n = len(self.order)
        self.cycle_edges = set(c.edges)

    def lift(self, P: LaurentMatrix) -> Element:
        if (P.rows, P.cols) != (self.n, self.n):
            raise StructureError(f"matrix must be {self.n} x {self.n}")
        total = self.alg.zero()
        base_edges = self.cycle.edges
        for i, vi in enumerate(self.order):
            ai = self.alphas[vi]
            for j, vj in enumerate(self.order):
                aj = self.alphas[vj]
                for t, coeff in P.entries[i][j].coeffs:
                    if t >= 0:
                        alpha = Path(vi, ai.edges + base_edges * t)
                        beta = aj
                    else:
                        alpha = ai
                        beta = Path(vj, aj.edges + base_edges * (-t))
                    total = total + self.alg.monomial_element(alpha, beta, coeff)
        return total

    def _entry(self, m: Monomial):
        """(i, j, exponent) of a pure-cycle monomial, or None if off-cycle."""
        for p in (m.alpha, m.beta):
            if p.vertex not in self.index:
                return None
            if any(e not in self.cycle_edges for e in p.edges):
                return None
        i = self.index[m.alpha.vertex]
        j = self.index[m.beta.vertex]
        mi = self.index[self.alg.path_range(m.alpha)]
        n = self.n
        # extend both paths to the base vertex (every ee* collapses on the
        # cycle), then count whole-cycle laps relative to the return paths
        s = (len(m.alpha.edges) + ((-mi) % n) - ((-i) % n)) // n
        u = (len(m.beta.edges) + ((-mi) % n) - ((-j) % n)) // n
        return i, j, s - u

    def project(self, x: Element) -> LaurentMatrix:
        """Strict inverse of ``lift``; raises on off-cycle support."""
        return self._project(x, strict=True)

    def project_mod_j(self, x: Element) -> LaurentMatrix:
        """The quotient map killing every monomial that touches a vertex off
        the cycle, followed by the matrix correspondence."""
        return self._project(x, strict=False)

    def _project(self, x: Element, strict: bool) -> LaurentMatrix:
        field = self.alg.field
        acc = [[{} for _ in range(self.n)] for _ in range(self.n)]
        for m, c in x.terms.items():
            ent = self._entry(m)
            if ent is None:
                if strict:
                    raise StructureError(f"monomial off the cycle: {m}")
                continue
            i, j, t = ent
            acc[i][j][t] = acc[i][j].get(t, field.zero) + c
        return LaurentMatrix.make(
            [[LaurentPoly.make(field, cell) for cell in row] for row in acc])
