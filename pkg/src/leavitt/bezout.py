"""Certified principal-generator computation for finitely generated left
ideals of the path algebra of a finite graph.

The driver recurses on the graph: sources are peeled off one at a time
(isolated vertices split the ring, single-edge source vertices reduce to
corner ideals, multi-edge source vertices are out-split first, source cycles
go through the Laurent-matrix quotient), and single-vertex graphs bottom out
in the scalar field, the Laurent polynomial ring, or the multi-loop algebra.

Every result carries a two-directional witness certificate that is
re-verified by exact normal-form arithmetic before being returned; when an
internal splitting has no closed form, the engine substitutes bounded-degree
linear solving and reports failure honestly rather than guessing.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple, Optional

from . import linalg
from .algebra import AlgebraError, Element, LeavittAlgebra, Monomial, Path
from .graph import (Graph, SourceDescriptor, find_sources, outsplit,
                    source_elimination)
from .laurent import (LaurentMatrix, LaurentPoly, exact_divide, l_gcd,
                      left_divide, row_module_generator)
from .structure import (CycleMatrixIso, big_c, d_element, e_idempotent,
                        j_contains, j_decompose, nu, omega, outsplit_maps,
                        decompose_nu_x_omega)


class UnsupportedCase1(Exception):
    """The recursion reached a graph with neither a source vertex nor a
    source cycle; the engine does not cover that case."""

    def __init__(self, graph: Graph, trace: list[str]):
        self.graph = graph
        self.trace = list(trace)
        super().__init__(
            f"graph with no source vertex and no source cycle: {graph!r} "
            f"(vertices {list(graph.vertices)}); trace: {' > '.join(trace) or '-'}")


class BoundExceeded(Exception):
    """A bounded search (membership / syzygy / combination) was exhausted.
    The result is inconclusive; no generator is returned."""

    def __init__(self, detail: str, trace: list[str]):
        self.detail = detail
        self.trace = list(trace)
        super().__init__(f"{detail}; trace: {' > '.join(trace) or '-'}")


class CertificationError(RuntimeError):
    """An internally produced witness failed re-verification (a bug)."""


@dataclass(frozen=True)
class IdealPresentation:
    """A finitely generated left ideal, presented by its generators."""

    algebra: LeavittAlgebra
    gens: tuple

    @staticmethod
    def make(algebra: LeavittAlgebra, gens) -> "IdealPresentation":
        gens = tuple(gens)
        if not gens:
            raise AlgebraError("an ideal presentation needs at least one generator")
        for g in gens:
            if g.algebra != algebra:
                raise AlgebraError("generator over a different graph or field")
        return IdealPresentation(algebra, gens)


@dataclass(frozen=True)
class GeneratorCertificate:
    """A principal generator with re-verifiable witnesses in both directions:
    ``forward[i] * generator == gens[i]`` and
    ``sum(backward[i] * gens[i]) == generator``."""

    generator: Element
    forward: tuple
    backward: tuple
    degree_bound_used: int
    case_trace: tuple


class _Cert(NamedTuple):
    g: Element
    fw: list
    bw: list


def _checked(alg: LeavittAlgebra, gens: list, g: Element,
             fw: list, bw: list, where: str) -> _Cert:
    for i, x in enumerate(gens):
        if fw[i] * g != x:
            raise CertificationError(f"{where}: forward witness {i} fails")
    acc = alg.zero()
    for b, x in zip(bw, gens):
        acc = acc + b * x
    if acc != g:
        raise CertificationError(f"{where}: backward witness fails")
    return _Cert(g, list(fw), list(bw))


def graph_diameter(g: Graph) -> int:
    """Longest finite shortest-path edge distance between vertex pairs."""
    best = 0
    for start in g.vertices:
        dist = {start: 0}
        frontier = [start]
        while frontier:
            nxt = []
            for u in frontier:
                for e in g.out_edges(u):
                    r = g.rng[e]
                    if r not in dist:
                        dist[r] = dist[u] + 1
                        nxt.append(r)
            frontier = nxt
        best = max(best, max(dist.values()))
    return best


def longest_path_length(g: Graph) -> int:
    """Longest directed path (edge count) in an acyclic graph."""
    memo: dict = {}

    def depth(v):
        if v not in memo:
            memo[v] = max((1 + depth(g.rng[e]) for e in g.out_edges(v)), default=0)
        return memo[v]

    return max((depth(v) for v in g.vertices), default=0)


def default_degree_bound(alg: LeavittAlgebra, gens) -> int:
    maxdeg = max((x.degree() for x in gens), default=0)
    return max(4, 2 * maxdeg + graph_diameter(alg.graph))


class BezoutEngine:
    """Stateful driver: field, degree bound, seeded randomness, and a cache
    of sub-graph algebras."""

    def __init__(self, degree_bound: Optional[int] = None, seed: int = 0,
                 attempts: int = 24):
        self.degree_bound = degree_bound
        self.seed = seed
        self.attempts = attempts
        self.rng = random.Random(seed)
        self._algebras: dict = {}

    def algebra_for(self, graph: Graph, field) -> LeavittAlgebra:
        key = (graph, field)
        if key not in self._algebras:
            self._algebras[key] = LeavittAlgebra(graph, field)
        return self._algebras[key]

    def bound_for(self, alg: LeavittAlgebra, gens) -> int:
        if self.degree_bound is not None:
            return self.degree_bound
        return default_degree_bound(alg, gens)

    # -- public driver -----------------------------------------------------

    def principal_generator(self, ideal: IdealPresentation) -> GeneratorCertificate:
        alg = ideal.algebra
        trace: list[str] = []
        cert = self._solve(alg, list(ideal.gens), trace)
        bound = self.bound_for(alg, ideal.gens)
        return GeneratorCertificate(cert.g, tuple(cert.fw), tuple(cert.bw),
                                    bound, tuple(trace))

    # -- recursion ---------------------------------------------------------

    def _solve(self, alg: LeavittAlgebra, gens: list, trace: list) -> _Cert:
        """Certificate for arbitrary gens (zeros allowed)."""
        live = [(i, x) for i, x in enumerate(gens) if not x.is_zero()]
        if not live:
            z = alg.zero()
            return _Cert(z, [z] * len(gens), [z] * len(gens))
        idx = [i for i, _ in live]
        sub = self._solve_nonzero(alg, [x for _, x in live], trace)
        z = alg.zero()
        fw = [z] * len(gens)
        bw = [z] * len(gens)
        for k, i in enumerate(idx):
            fw[i] = sub.fw[k]
            bw[i] = sub.bw[k]
        return _Cert(sub.g, fw, bw)

    def _solve_nonzero(self, alg: LeavittAlgebra, gens: list, trace: list) -> _Cert:
        g = alg.graph
        if not g.edges:
            trace.append("edgeless")
            return self._edgeless(alg, gens)
        if len(g.vertices) == 1:
            if len(g.edges) == 1:
                trace.append("laurent-gcd")
                return self._single_loop(alg, gens)
            trace.append(f"loop-fold({len(g.edges)})")
            return self._rose_fold(alg, gens)
        sources = find_sources(g)
        if not sources:
            raise UnsupportedCase1(g, trace)
        s = min(sources, key=lambda d: self._source_rank(g, d))
        if s.kind == "vertex":
            outdeg = len(g.out_edges(s.vertex))
            if outdeg == 0:
                trace.append(f"isolated-vertex({s.vertex})")
                return self._isolated_vertex(alg, s, gens, trace)
            if outdeg == 1:
                trace.append(f"single-edge-vertex({s.vertex})")
                return self._single_edge_vertex(alg, s, gens, trace)
            trace.append(f"outsplit({s.vertex})")
            return self._outsplit_case(alg, s, gens, trace)
        if s.isolated:
            trace.append(f"isolated-cycle({s.cycle.base})")
            return self._isolated_cycle(alg, s, gens, trace)
        trace.append(f"source-cycle({s.cycle.base})")
        return self._source_cycle(alg, s, gens, trace)

    @staticmethod
    def _source_rank(g: Graph, s: SourceDescriptor):
        if s.kind == "vertex":
            outdeg = len(g.out_edges(s.vertex))
            if outdeg == 0:
                return (0, s.vertex)
            if outdeg == 1:
                return (1, s.vertex)
            return (3, outdeg, s.vertex)
        return ((2, s.cycle.base) if s.isolated else (4, s.cycle.base))

    # -- base cases --------------------------------------------------------

    def _edgeless(self, alg: LeavittAlgebra, gens: list) -> _Cert:
        field = alg.field
        coeffs = [{m.alpha.vertex: c for m, c in x.terms.items()} for x in gens]
        support = sorted({v for row in coeffs for v in row})
        gen = alg.vertex_sum(support)
        fw = list(gens)  # x * gen = x on its own support
        bw = [alg.zero() for _ in gens]
        for v in support:
            i = next(i for i, row in enumerate(coeffs) if v in row)
            bw[i] = bw[i] + alg.vertex(v).scale(field.one / coeffs[i][v])
        return _checked(alg, gens, gen, fw, bw, "edgeless")

    def _loop_to_laurent(self, alg: LeavittAlgebra, x: Element) -> LaurentPoly:
        acc: dict = {}
        zero = alg.field.zero
        for m, c in x.terms.items():
            e = len(m.alpha.edges) - len(m.beta.edges)
            acc[e] = acc.get(e, zero) + c
        return LaurentPoly.make(alg.field, acc)

    def _laurent_to_loop(self, alg: LeavittAlgebra, p: LaurentPoly) -> Element:
        v = alg.graph.vertices[0]
        loop = alg.graph.edges[0]
        total = alg.zero()
        for e, c in p.coeffs:
            if e >= 0:
                total = total + alg.monomial_element(Path(v, (loop,) * e), Path(v), c)
            else:
                total = total + alg.monomial_element(Path(v), Path(v, (loop,) * (-e)), c)
        return total

    def _single_loop(self, alg: LeavittAlgebra, gens: list) -> _Cert:
        polys = [self._loop_to_laurent(alg, x) for x in gens]
        run = polys[0]
        final: dict = {0: LaurentPoly.one(alg.field)}
        for i in range(1, len(polys)):
            run, u, v = l_gcd(run, polys[i])
            final = {j: u * c for j, c in final.items()}
            final[i] = final.get(i, LaurentPoly.zero(alg.field)) + v
        fw = [self._laurent_to_loop(alg, exact_divide(p, run)) for p in polys]
        bw = [self._laurent_to_loop(alg, final.get(i, LaurentPoly.zero(alg.field)))
              for i in range(len(gens))]
        gen = self._laurent_to_loop(alg, run)
        return _checked(alg, gens, gen, fw, bw, "laurent-gcd")

    def _rose_fold(self, alg: LeavittAlgebra, gens: list) -> _Cert:
        """Two distinct loops contract orthogonally (e1* e2 = 0), so the pair
        e1*a + e2*b recovers a and b exactly; fold over the generators."""
        e1, e2 = alg.graph.edges[0], alg.graph.edges[1]
        E1, E2 = alg.edge(e1), alg.edge(e2)
        G1, G2 = alg.ghost(e1), alg.ghost(e2)
        g = gens[0]
        fw = [alg.one()]
        bw = [alg.one()]
        for k in range(1, len(gens)):
            g_new = E1 * g + E2 * gens[k]
            fw = [w * G1 for w in fw] + [G2]
            bw = [E1 * b for b in bw] + [E2]
            g = g_new
        return _checked(alg, gens, g, fw, bw, "loop-fold")

    # -- source vertex cases ----------------------------------------------

    def _isolated_vertex(self, alg: LeavittAlgebra, s: SourceDescriptor,
                         gens: list, trace: list) -> _Cert:
        v = s.vertex
        field = alg.field
        ve = alg.vertex(v)
        vm = Monomial(Path(v), Path(v))
        lams = [x.terms.get(vm, field.zero) for x in gens]
        rest = [x - ve.scale(lam) for x, lam in zip(gens, lams)]
        sub_alg = self.algebra_for(source_elimination(alg.graph, s), field)
        sub_gens = [alg.corner_restrict(r, sub_alg) for r in rest]
        sub = self._solve(sub_alg, sub_gens, trace)
        y = alg.embed(sub.g)
        has_scalar = any(lam != field.zero for lam in lams)
        gen = (ve if has_scalar else alg.zero()) + y
        fw = [ve.scale(lam) + alg.embed(w) for lam, w in zip(lams, sub.fw)]
        bw = [alg.embed(b) for b in sub.bw]
        if has_scalar:
            k = next(i for i, lam in enumerate(lams) if lam != field.zero)
            bw[k] = bw[k] + ve.scale(field.one / lams[k])
        return _checked(alg, gens, gen, fw, bw, "isolated-vertex")

    def _single_edge_vertex(self, alg: LeavittAlgebra, s: SourceDescriptor,
                            gens: list, trace: list) -> _Cert:
        v = s.vertex
        f = alg.graph.out_edges(v)[0]
        F, Fs = alg.edge(f), alg.ghost(f)
        col = [x * F for x in gens]
        if all(c.is_zero() for c in col):
            # every generator already lives in R*omega
            trace.append("corner(R-omega)")
            return self.generator_in_r_omega(alg, s, gens, trace)
        ycert = self.generator_in_r_omega(alg, s, col, trace)
        y = ycert.g
        z = alg.zero()
        for b, x in zip(ycert.bw, gens):
            z = z + b * x
        if z * F != y:
            raise CertificationError("single-edge: z*f != y")
        z_bw = list(ycert.bw)
        us: list[Element] = []
        us_bw: list[list] = []
        us_fw_tag: list = []  # index into gens for u_i, or None for rho*z
        for i, (x, a) in enumerate(zip(gens, ycert.fw)):
            u = x - a * z
            if (u * F != alg.zero()):
                raise CertificationError("single-edge: residue not annihilated by f")
            if not u.is_zero():
                us.append(u)
                us_bw.append(self._sub_bw(alg, [self._unit_bw(alg, gens, i)],
                                          [a], [z_bw])[0])
                us_fw_tag.append(("gen", i, a))
        for rho in self._annihilators(alg, y, gens):
            rz = rho * z
            if not rz.is_zero():
                us.append(rz)
                us_bw.append([rho * b for b in z_bw])
                us_fw_tag.append(("rho", rho))
        if not us:
            return _checked(alg, gens, z, list(ycert.fw), z_bw, "single-edge(z)")
        trace.append("corner(I-cap-R-omega)")
        ocert = self.generator_in_r_omega(alg, s, us, trace)
        xo = ocert.g
        xo_bw = self._compose_bw(alg, len(gens), ocert.bw, us_bw)
        if xo.is_zero():
            return _checked(alg, gens, z, list(ycert.fw), z_bw, "single-edge(z)")
        pair = self._combine(alg, [z, xo], [z_bw, xo_bw], gens, trace)
        fw = []
        for i, (x, a) in enumerate(zip(gens, ycert.fw)):
            u_wit = alg.zero()
            for t, (tag, u) in enumerate(zip(us_fw_tag, us)):
                if tag[0] == "gen" and tag[1] == i:
                    u_wit = u_wit + ocert.fw[t]
            fw.append(a * pair.fw[0] + u_wit * pair.fw[1])
        return _checked(alg, gens, pair.g, fw, pair.bw, "single-edge")

    def _annihilators(self, alg: LeavittAlgebra, y: Element, gens: list) -> list:
        """A spanning family of bounded-degree left annihilators of ``y``."""
        if y.is_zero():
            return []
        if alg.graph.is_acyclic():
            maxdeg = 2 * longest_path_length(alg.graph)
        else:
            maxdeg = self.bound_for(alg, gens)
        monos = alg.monomials_up_to(maxdeg)
        prods = {}
        for m in monos:
            prods[m] = alg.element({m: alg.field.one}) * y
        equations: dict = {}
        for m, p in prods.items():
            for mono, c in p.terms.items():
                equations.setdefault(mono, {})[m] = c
        basis = linalg.nullspace(alg.field, list(equations.values()), monos)
        out = []
        for vec in basis:
            rho = alg.element(dict(vec))
            if not (rho * y).is_zero():
                raise CertificationError("annihilator basis vector fails")
            out.append(rho)
        return out

    def _outsplit_case(self, alg: LeavittAlgebra, s: SourceDescriptor,
                       gens: list, trace: list) -> _Cert:
        graph2, data = outsplit(alg.graph, s.vertex)
        alg2 = self.algebra_for(graph2, alg.field)
        fwd, bwd = outsplit_maps(alg, alg2, data)
        gens2 = [fwd.apply(x) for x in gens]
        sub = self._solve(alg2, gens2, trace)
        gen = bwd.apply(sub.g)
        fw = [bwd.apply(w) for w in sub.fw]
        bw = [bwd.apply(b) for b in sub.bw]
        return _checked(alg, gens, gen, fw, bw, "outsplit")

    # -- cycle source cases ------------------------------------------------

    def _matrix_part(self, alg: LeavittAlgebra, iso: CycleMatrixIso,
                     mats: list):
        """Row-module generator with lifted witnesses: returns (G, lifted
        left-divisors A_i, lifted combination matrices B_i)."""
        n = iso.n
        G, exprs = row_module_generator(mats, n)
        z = LaurentPoly.zero(alg.field)
        Bs = []
        for i in range(len(mats)):
            cells = [[z] * n for _ in range(n)]
            for r in range(n):
                for gi, ri, c in exprs[r]:
                    if gi == i:
                        cells[r][ri] = cells[r][ri] + c
            Bs.append(LaurentMatrix.make(cells))
        As = []
        for P in mats:
            X = left_divide(P, G)
            if X is None:
                raise CertificationError("row module division failed")
            As.append(X)
        return G, As, Bs

    def _isolated_cycle(self, alg: LeavittAlgebra, s: SourceDescriptor,
                        gens: list, trace: list) -> _Cert:
        V = set(s.V)
        iso = CycleMatrixIso(alg, s.cycle)
        v_parts = [alg.element({m: c for m, c in x.terms.items()
                                if m.alpha.vertex in V}) for x in gens]
        w_parts = [x - xv for x, xv in zip(gens, v_parts)]
        mats = [iso.project(xv) for xv in v_parts]
        G, As, Bs = self._matrix_part(alg, iso, mats)
        gv = iso.lift(G)
        fw_v = [iso.lift(A) for A in As]
        bw_v = [iso.lift(B) for B in Bs]
        if s.W:
            sub_alg = self.algebra_for(source_elimination(alg.graph, s), alg.field)
            sub_gens = [alg.corner_restrict(xw, sub_alg) for xw in w_parts]
            sub = self._solve(sub_alg, sub_gens, trace)
            gw = alg.embed(sub.g)
            fw = [a + alg.embed(w) for a, w in zip(fw_v, sub.fw)]
            bw = [b + alg.embed(c) for b, c in zip(bw_v, sub.bw)]
        else:
            gw, fw, bw = alg.zero(), fw_v, bw_v
        return _checked(alg, gens, gv + gw, fw, bw, "isolated-cycle")

    def _source_cycle(self, alg: LeavittAlgebra, s: SourceDescriptor,
                      gens: list, trace: list) -> _Cert:
        iso = CycleMatrixIso(alg, s.cycle)
        mats = [iso.project_mod_j(x) for x in gens]
        if all(m.is_zero() for m in mats):
            trace.append("inside-J")
            return self._combine_in_j(alg, s, gens,
                                      [self._unit_bw(alg, gens, i)
                                       for i in range(len(gens))], gens, trace)
        G, As, Bs = self._matrix_part(alg, iso, mats)
        nu_el = nu(alg, s)
        y = alg.zero()
        for B, x in zip(Bs, gens):
            y = y + iso.lift(B) * x
        ny = nu_el * y
        if iso.project_mod_j(ny) != G:
            raise CertificationError("cycle quotient lift mismatch")
        ny_bw = [nu_el * iso.lift(B) for B in Bs]
        ss = [iso.lift(A) for A in As]
        ts = []
        ts_bw = []
        for i, (x, sj) in enumerate(zip(gens, ss)):
            t = x - sj * ny
            if not j_contains(alg, s, t):
                raise CertificationError("residue not in the W-ideal")
            ts.append(t)
            ts_bw.append(self._sub_bw(alg, [self._unit_bw(alg, gens, i)],
                                      [sj], [ny_bw])[0])
        if all(t.is_zero() for t in ts):
            tcert = _Cert(alg.zero(), [alg.zero()] * len(gens),
                          [alg.zero()] * len(gens))
            N = 1
        else:
            live = [(i, t) for i, t in enumerate(ts) if not t.is_zero()]
            sub = self._combine_in_j(alg, s, [t for _, t in live],
                                     [ts_bw[i] for i, _ in live], gens, trace)
            z = alg.zero()
            fw_t = [z] * len(gens)
            for k, (i, _) in enumerate(live):
                fw_t[i] = sub.fw[k]
            tcert = _Cert(sub.g, fw_t, sub.bw)
            N = max(1, annihilation_power(alg, s, tcert.g,
                                          self.bound_for(alg, gens), trace))
        C = big_c(alg, s, N)
        Cs = C.star()
        gen = C * ny + tcert.g
        if Cs * gen != ny:
            raise CertificationError("C-power recovery of the quotient part fails")
        proj = alg.one() - C * Cs
        fw = [sj * Cs + fw_t_j * proj
              for sj, fw_t_j in zip(ss, tcert.fw)]
        bw = [C * b + tb for b, tb in zip(ny_bw, tcert.bw)]
        return _checked(alg, gens, gen, fw, bw, "source-cycle")

    def _combine_in_j(self, alg: LeavittAlgebra, s: SourceDescriptor,
                      ts: list, ts_bw: list, gens: list, trace: list) -> _Cert:
        """Single generator for a finitely generated left ideal inside the
        two-sided ideal generated by W; witnesses are expressed over ``gens``
        using the supplied combinations ``ts[i] = sum(ts_bw[i][j]*gens[j])``."""
        om = omega(alg, s)
        decs = [j_decompose(alg, s, t) for t in ts]
        keysets = [set(d.parts) for d in decs]
        if all(not ks for ks in keysets):
            trace.append("J:R-omega")
            cert = self.generator_in_r_omega(alg, s, ts, trace)
        elif (all(d.omega_part.is_zero() for d in decs)
              and len(set().union(*keysets)) == 1):
            (v, run), f = next(iter(set().union(*keysets)))
            delta = alg.make_path(v, run + (f,))
            trace.append("J:R-delta-star")
            cert = self.generator_in_r_delta_star(alg, s, delta, ts, trace)
        else:
            trace.append("J:combine")
            cert = self._combine(alg, ts, [self._unit_bw(alg, ts, i)
                                           for i in range(len(ts))], ts, trace)
        bw = self._compose_bw(alg, len(gens), cert.bw, ts_bw)
        return _Cert(cert.g, cert.fw, bw)

    # -- corner procedures -------------------------------------------------

    def generator_in_r_omega(self, alg: LeavittAlgebra, s: SourceDescriptor,
                             gens: list, trace: list) -> _Cert:
        """Generator of a finitely generated left ideal contained in R*omega,
        computed through the corner algebra of the eliminated graph."""
        om = omega(alg, s)
        nu_el = nu(alg, s)
        for x in gens:
            if x * om != x:
                raise AlgebraError("generator not in R*omega")
        sub_alg = self.algebra_for(source_elimination(alg.graph, s), alg.field)
        corner_gens = []   # elements of the corner algebra
        recover = []       # (gen index, left multiplier) per corner gen
        positions = []     # per gen: list of corner-gen indices with multipliers
        for i, x in enumerate(gens):
            pos = []
            nu_part = nu_el * x
            om_part = x - nu_part
            for (v, run), f, part in decompose_nu_x_omega(alg, s, nu_part):
                eps_f = alg.path_element(alg.make_path(v, run + (f,)))
                corner_gens.append(alg.corner_restrict(part, sub_alg))
                recover.append((i, eps_f.star()))
                pos.append((len(corner_gens) - 1, eps_f))
            corner_gens.append(alg.corner_restrict(om_part, sub_alg))
            recover.append((i, om))
            pos.append((len(corner_gens) - 1, alg.one()))
            positions.append(pos)
        sub = self._solve(sub_alg, corner_gens, trace)
        y = alg.embed(sub.g)
        fw = []
        for i, x in enumerate(gens):
            acc = alg.zero()
            for t, left in positions[i]:
                acc = acc + left * alg.embed(sub.fw[t])
            fw.append(acc)
        bw = [alg.zero() for _ in gens]
        for t, b in enumerate(sub.bw):
            i, mult = recover[t]
            bw[i] = bw[i] + alg.embed(b) * mult
        return _checked(alg, gens, y, fw, bw, "R-omega corner")

    def generator_in_r_delta_star(self, alg: LeavittAlgebra, s: SourceDescriptor,
                                  delta: Path, gens: list, trace: list) -> _Cert:
        """Generator for gens contained in R*delta-star, via the isomorphism
        with R*w given by right multiplication by delta."""
        d_el = alg.path_element(delta)
        dd = d_el * d_el.star()
        for x in gens:
            if x * dd != x:
                raise AlgebraError("generator not in R*delta-star")
        col = [x * d_el for x in gens]
        sub = self.generator_in_r_omega(alg, s, col, trace)
        gen = sub.g * d_el.star()
        fw = list(sub.fw)
        bw = list(sub.bw)
        return _checked(alg, gens, gen, fw, bw, "R-delta-star")

    # -- bounded combination ------------------------------------------------

    def _combine(self, alg: LeavittAlgebra, parts: list, parts_bw: list,
                 gens: list, trace: list) -> _Cert:
        """Single generator for sum(R*parts[i]); witnesses over ``gens``
        through ``parts_bw``.  Exact right-identity solving first, then
        seeded random combinations certified by bounded membership."""
        if len(parts) == 1:
            one = alg.one()
            cert = _Cert(parts[0], [one],
                         self._compose_bw(alg, len(gens), [one], parts_bw))
            return cert
        D = self.bound_for(alg, parts)
        if alg.graph.is_acyclic():
            # the full basis: the span search below is then exhaustive
            ident_bound = 2 * longest_path_length(alg.graph)
            D = max(D, ident_bound)
        else:
            ident_bound = min(D, 6)
        ident = self._right_identity(alg, parts, ident_bound)
        if ident is not None:
            e, lam = ident
            fw = list(parts)  # x * e == x certified below
            bw_parts = lam
            bw = self._compose_bw(alg, len(gens), bw_parts, parts_bw)
            return self._finish_combine(alg, parts, parts_bw, gens, e, fw, bw)
        candidates = [[alg.one()] * len(parts)]
        for _ in range(self.attempts):
            candidates.append([self._random_multiplier(alg) for _ in parts])
        for coeffs in candidates:
            cand = alg.zero()
            for c, p in zip(coeffs, parts):
                cand = cand + c * p
            if cand.is_zero():
                continue
            fw = []
            ok = True
            for p in parts:
                wit = alg.membership_bounded(p, [cand], D)
                if wit is None:
                    ok = False
                    break
                fw.append(wit[0])
            if ok:
                bw = self._compose_bw(alg, len(gens), coeffs, parts_bw)
                return self._finish_combine(alg, parts, parts_bw, gens,
                                            cand, fw, bw)
        raise BoundExceeded(
            f"could not combine {len(parts)} part generators at degree {D}", trace)

    def _finish_combine(self, alg, parts, parts_bw, gens, g, fw_parts, bw):
        for p, w in zip(parts, fw_parts):
            if w * g != p:
                raise CertificationError("combine: part recovery fails")
        acc = alg.zero()
        for b, x in zip(bw, gens):
            acc = acc + b * x
        if acc != g:
            raise CertificationError("combine: backward witness fails")
        return _Cert(g, fw_parts, bw)

    def _right_identity(self, alg: LeavittAlgebra, parts: list, D: int):
        """Solve for e in the ideal with x*e = x for every part; exact when
        the span at degree D contains such an idempotent."""
        field = alg.field
        tracker = linalg.SpanTracker(field)
        basis_elems = []  # (element, origin part index, monomial)
        for i, p in enumerate(parts):
            for m in alg.monomials_up_to(D):
                prod = alg.element({m: field.one}) * p
                if prod.is_zero():
                    continue
                if tracker.insert(dict(prod.terms), (i, m)):
                    basis_elems.append((prod, i, m))
        sys = linalg.LinearSystem(field)
        prods = [[p * be for be, _, _ in basis_elems] for p in parts]
        rows: dict = {}
        for j, p in enumerate(parts):
            for t, q in enumerate(prods[j]):
                for mono, c in q.terms.items():
                    rows.setdefault((j, mono), {})[t] = c
            for mono, c in p.terms.items():
                rows.setdefault((j, mono), {})
        ok = True
        for (j, mono), coeffs in rows.items():
            target = parts[j].terms.get(mono, field.zero)
            if not sys.add(coeffs, target):
                ok = False
                break
        if not ok:
            return None
        sol = sys.solution()
        if sol is None:
            return None
        e = alg.zero()
        lam = [alg.zero() for _ in parts]
        for t, c in sol.items():
            be, i, m = basis_elems[t]
            e = e + be.scale(c)
            lam[i] = lam[i] + alg.element({m: c})
        for p in parts:
            if p * e != p:
                return None
        return e, lam

    def _random_multiplier(self, alg: LeavittAlgebra) -> Element:
        monos = alg.monomials_up_to(2)
        terms: dict = {}
        for m in self.rng.sample(monos, min(3, len(monos))):
            c = self.rng.randint(-3, 3)
            if c:
                terms[m] = alg.field.of(c)
        if not terms:
            return alg.one()
        return alg.element(terms)

    # -- witness plumbing ---------------------------------------------------

    def _unit_bw(self, alg: LeavittAlgebra, gens: list, i: int) -> list:
        out = [alg.zero()] * len(gens)
        out[i] = alg.one()
        return out

    def _compose_bw(self, alg: LeavittAlgebra, n: int, outer: list,
                    inner_bws: list) -> list:
        """If g = sum(outer[t] * mid[t]) and mid[t] = sum(inner_bws[t][i] *
        gens[i]), the combination over the ``n`` gens."""
        out = [alg.zero()] * n
        for o, inner in zip(outer, inner_bws):
            for i in range(n):
                out[i] = out[i] + o * inner[i]
        return out

    def _sub_bw(self, alg: LeavittAlgebra, base_bws: list, lefts: list,
                sub_bws: list) -> list:
        """base - left*sub, expressed over gens: one list per entry."""
        out = []
        for base, left, subw in zip(base_bws, lefts, sub_bws):
            out.append([b - left * s for b, s in zip(base, subw)])
        return out


def annihilation_power(alg: LeavittAlgebra, s: SourceDescriptor, x: Element,
                       bound: int, trace: Optional[list] = None) -> int:
    """Smallest N with (c_k*)^N * x = 0 for every rotation of the source
    cycle; exists for every element of the W-ideal."""
    from .graph import rotate_cycle
    if s.kind != "cycle":
        raise AlgebraError("annihilation power needs a cycle source")
    ghosts = []
    for v in s.cycle.vertex_set(alg.graph):
        rot = rotate_cycle(alg.graph, s.cycle, v)
        ghosts.append(alg.path_element(Path(v, rot.edges)).star())
    limit = max(bound, x.degree() + 2)
    for N in range(limit + 1):
        if all((_power(gh, N) * x).is_zero() for gh in ghosts):
            return N
        # fall through and try the next power
    raise BoundExceeded(f"no annihilation power up to {limit}", trace or [])


def _power(a: Element, n: int) -> Element:
    out = a.algebra.one()
    for _ in range(n):
        out = out * a
    return out


def principal_generator(ideal: IdealPresentation,
                        degree_bound: Optional[int] = None,
                        seed: int = 0) -> GeneratorCertificate:
    """Certified single generator of the left ideal presented by ``ideal``."""
    engine = BezoutEngine(degree_bound=degree_bound, seed=seed)
    return engine.principal_generator(ideal)


def two_sided_generator(ideal: IdealPresentation,
                        degree_bound: Optional[int] = None,
                        seed: int = 0) -> Element:
    """x with RxR equal to the two-sided ideal generated by the gens: the
    left-ideal generator works, since I = (sum R gens) R = RxR."""
    return principal_generator(ideal, degree_bound, seed).generator


def oracle_finite_dim(ideal: IdealPresentation) -> GeneratorCertificate:
    """Independent brute-force generator for acyclic graphs: realize the
    ideal as a linear span over the full monomial basis and solve for an
    idempotent right identity, which generates."""
    alg = ideal.algebra
    if not alg.graph.is_acyclic():
        raise AlgebraError("the finite-dimensional oracle needs an acyclic graph")
    field = alg.field
    gens = [x for x in ideal.gens]
    live = [x for x in gens if not x.is_zero()]
    if not live:
        z = alg.zero()
        return GeneratorCertificate(z, tuple(z for _ in gens),
                                    tuple(z for _ in gens), 0, ("oracle",))
    maxdeg = 2 * longest_path_length(alg.graph)
    tracker = linalg.SpanTracker(field)
    basis = []  # (element, gen index, monomial)
    for i, x in enumerate(gens):
        if x.is_zero():
            continue
        for m in alg.monomials_up_to(maxdeg):
            prod = alg.element({m: field.one}) * x
            if prod.is_zero():
                continue
            if tracker.insert(dict(prod.terms), (i, m)):
                basis.append((prod, i, m))
    sys = linalg.LinearSystem(field)
    rows: dict = {}
    prods = {}
    for j, x in enumerate(gens):
        if x.is_zero():
            continue
        for t, (be, _, _) in enumerate(basis):
            q = x * be
            for mono, c in q.terms.items():
                rows.setdefault((j, mono), {})[t] = c
        for mono in x.terms:
            rows.setdefault((j, mono), {})
    for (j, mono), coeffs in rows.items():
        if not sys.add(coeffs, gens[j].terms.get(mono, field.zero)):
            raise CertificationError("oracle: no idempotent generator found")
    sol = sys.solution()
    if sol is None:
        raise CertificationError("oracle: inconsistent idempotent system")
    e = alg.zero()
    bw = [alg.zero() for _ in gens]
    for t, c in sol.items():
        be, i, m = basis[t]
        e = e + be.scale(c)
        bw[i] = bw[i] + alg.element({m: c})
    fw = []
    for x in gens:
        if (x * e) != x:
            raise CertificationError("oracle: right identity fails")
        fw.append(x)
    acc = alg.zero()
    for b, x in zip(bw, gens):
        acc = acc + b * x
    if acc != e:
        raise CertificationError("oracle: backward witness fails")
    return GeneratorCertificate(e, tuple(fw), tuple(bw), maxdeg, ("oracle",))


def ideal_dimension(alg: LeavittAlgebra, gens, maxdeg: Optional[int] = None) -> int:
    """Linear dimension of sum(R*gen) over the monomial basis (acyclic)."""
    if maxdeg is None:
        maxdeg = 2 * longest_path_length(alg.graph)
    tracker = linalg.SpanTracker(alg.field)
    for x in gens:
        if x.is_zero():
            continue
        for m in alg.monomials_up_to(maxdeg):
            prod = alg.element({m: alg.field.one}) * x
            if not prod.is_zero():
                tracker.insert(dict(prod.terms), (id(x), m))
    return tracker.dimension


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    forward_status: tuple   # per generator: True/False
    backward_ok: bool
    notes: tuple

    def __bool__(self):
        return self.ok


def verify_certificate(ideal: IdealPresentation, cert: GeneratorCertificate,
                       degree_bound: Optional[int] = None) -> VerificationReport:
    """Re-verify both witness directions by exact arithmetic."""
    alg = ideal.algebra
    notes = []
    if degree_bound is not None and cert.degree_bound_used > degree_bound:
        return VerificationReport(
            False, tuple(False for _ in ideal.gens), False,
            (f"certificate used degree bound {cert.degree_bound_used} "
             f"> allowed {degree_bound}",))
    fstat = []
    for i, (x, w) in enumerate(zip(ideal.gens, cert.forward)):
        good = (w * cert.generator == x)
        fstat.append(good)
        if not good:
            notes.append(f"forward witness {i} fails")
    acc = alg.zero()
    for b, x in zip(cert.backward, ideal.gens):
        acc = acc + b * x
    back = (acc == cert.generator)
    if not back:
        notes.append("backward witness fails")
    return VerificationReport(all(fstat) and back, tuple(fstat), back,
                              tuple(notes))


def generator_containing_j(engine: BezoutEngine, alg: LeavittAlgebra,
                           s: SourceDescriptor, gens: list,
                           trace: Optional[list] = None) -> _Cert:
    """Generator for an ideal known to contain the W-ideal J: quotient to
    the Laurent matrix ring, lift, and absorb the residues with the
    filtration idempotent e_M; requires certified membership of e_M in the
    ideal (the J-containment check)."""
    trace = trace if trace is not None else []
    if s.kind != "cycle":
        raise AlgebraError("needs a cycle source")
    iso = CycleMatrixIso(alg, s.cycle)
    mats = [iso.project_mod_j(x) for x in gens]
    G, As, Bs = engine._matrix_part(alg, iso, mats)
    y = alg.zero()
    for B, x in zip(Bs, gens):
        y = y + iso.lift(B) * x
    nu_el = nu(alg, s)
    nu0 = d_element(alg, s, 1).star() * d_element(alg, s, 1)
    ss = [iso.lift(A) for A in As]
    hs = []
    for x, sj in zip(gens, ss):
        h = x - sj * (nu0 * y)
        if not j_contains(alg, s, h):
            raise CertificationError("containing-J residue escapes J")
        hs.append(h)
    n = len(s.cycle)
    level = 0
    for h in hs:
        dec = j_decompose(alg, s, h)
        for (v, run), f in dec.parts:
            level = max(level, len(run) // n)
    M = level + 1
    eM = e_idempotent(alg, s, level)
    dM = d_element(alg, s, M)
    for h in hs:
        if h * eM != h:
            raise CertificationError("residue not absorbed by e_M")
    gen = dM * y + eM
    D = engine.bound_for(alg, gens)
    e_wit = alg.membership_bounded(eM, gens, D)
    if e_wit is None:
        raise BoundExceeded(
            f"could not certify J-containment (e_{level} membership) at degree {D}",
            trace)
    dd = dM * dM.star()
    proj = alg.one() - dd
    fw = [sj * dM.star() * dd + h * proj for sj, h in zip(ss, hs)]
    bw = [dM * iso.lift(B) + w for B, w in zip(Bs, e_wit)]
    return _checked(alg, gens, gen, fw, bw, "containing-J")
