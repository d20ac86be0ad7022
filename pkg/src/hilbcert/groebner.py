"""Groebner bases over free modules, with lifts and syzygies.

One Buchberger engine handles both ideals (rank-one free module) and
submodules of shifted free modules.  Every basis element carries a lift
expressing it in the input generators, and every S-pair that reduces to zero
yields a syzygy of the input generators (the reduction transcript composed
with the lifts).  To make the syzygy transcripts a generating set, the input
generators all stay in the working basis and no S-pair is skipped.
"""

from __future__ import annotations

import heapq

from .modules import FreeModule, ModuleVector
from .rings import GradedRing, Polynomial, div_exps, lcm_exps, mul_exps


def poly_to_vector(p: Polynomial, module: FreeModule) -> ModuleVector:
    return ModuleVector(module, {(0, e): c for e, c in p.terms.items()})


def _heap_key(module, comp, exps):
    """Negated module order key: popping the min of these from a heap yields
    terms in decreasing module order."""
    rd = module.ring.degree(exps)
    return (-(rd + module.shifts[comp]), -rd, tuple(reversed(exps)), comp)


def vector_normal_form(v: ModuleVector, basis, leads=None):
    """Fully reduce v modulo basis.

    Returns (remainder, quotients) with v = sum(q_k * basis_k) + remainder
    and no term of the remainder divisible by a basis leading term.
    """
    module = v.module
    ring = module.ring
    f = ring.field
    zero = f.zero
    if leads is None:
        leads = [b.leading_term() for b in basis]
    quotients = [ring.zero] * len(basis)
    remainder = {}
    work = dict(v.terms)
    # lazy max-heap: every reduction step only introduces terms strictly
    # below the one being cancelled, so stale entries can be skipped
    heap = [(_heap_key(module, c, e), (c, e)) for (c, e) in work]
    heapq.heapify(heap)
    while heap:
        _, t = heapq.heappop(heap)
        coeff = work.get(t)
        if coeff is None:
            continue
        comp, exps = t
        hit = None
        for k, (bcomp, bexps) in enumerate(leads):
            if bcomp != comp:
                continue
            q = div_exps(exps, bexps)
            if q is not None:
                hit = (k, q)
                break
        if hit is None:
            remainder[t] = coeff
            del work[t]
            continue
        k, q = hit
        factor = f.div(coeff, basis[k].leading_coefficient())
        quotients[k] = quotients[k] + Polynomial(ring, {q: factor})
        for (bc, be), bcoef in basis[k].terms.items():
            nt = (bc, mul_exps(be, q))
            delta = f.mul(factor, bcoef)
            cur = work.get(nt)
            if cur is None:
                val = f.neg(delta)
                if val != zero:
                    work[nt] = val
                    heapq.heappush(heap, (_heap_key(module, bc, nt[1]), nt))
            else:
                val = f.sub(cur, delta)
                if val == zero:
                    del work[nt]
                else:
                    work[nt] = val
    return ModuleVector(module, remainder), quotients


class ModuleGroebner:
    """Groebner basis of a submodule, with lifts and transcript syzygies.

    Attributes:
      basis      -- working basis (input vectors first, then new elements)
      lifts      -- lifts[k] is a list of polynomials, one per input vector,
                    with basis[k] = sum(lifts[k][j] * input_j)
      syzygies   -- ModuleVectors over the input generators spanning their
                    syzygy module (up to max_degree when capped)
      reduced    -- reduced (monic, interreduced) basis
      reduced_lifts -- lifts of the reduced basis in the input generators
    """

    def __init__(self, module: FreeModule, vectors, max_degree=None, with_syzygies=True):
        self.module = module
        self.ring = module.ring
        self.inputs = list(vectors)
        self.max_degree = max_degree
        self.syzygy_module = FreeModule(self.ring, [v.degree() for v in self.inputs])
        self.syzygies = []
        self.basis = []
        self.lifts = []
        self._with_syzygies = with_syzygies
        self._run()
        self.reduced, self.reduced_lifts = self._interreduce()

    # -- construction -----------------------------------------------------

    def _unit_lift(self, j):
        lift = [self.ring.zero] * len(self.inputs)
        lift[j] = self.ring.one
        return lift

    def _run(self):
        f = self.ring.field
        pairs = []
        counter = 0
        for j, v in enumerate(self.inputs):
            if v.is_zero():
                if self._with_syzygies:
                    self.syzygies.append(self.syzygy_module.basis_vector(j))
                continue
            counter = self._add(v, self._unit_lift(j), pairs, counter)
        while pairs:
            _, _, i, j = heapq.heappop(pairs)
            counter = self._process_pair(i, j, pairs, counter)

    def _add(self, v, lift, pairs, counter):
        k = len(self.basis)
        comp, exps = v.leading_term()
        for i, b in enumerate(self.basis):
            bcomp, bexps = b.leading_term()
            if bcomp != comp:
                continue
            lcm = lcm_exps(exps, bexps)
            d = self.module.term_degree(comp, lcm)
            if self.max_degree is not None and d > self.max_degree:
                continue
            counter += 1
            heapq.heappush(pairs, (d, counter, i, k))
        self.basis.append(v)
        self.lifts.append(lift)
        return counter

    def _process_pair(self, i, j, pairs, counter):
        f = self.ring.field
        bi, bj = self.basis[i], self.basis[j]
        (comp, ei) = bi.leading_term()
        (_, ej) = bj.leading_term()
        lcm = lcm_exps(ei, ej)
        qi = div_exps(lcm, ei)
        qj = div_exps(lcm, ej)
        ci = f.inv(bi.leading_coefficient())
        cj = f.inv(bj.leading_coefficient())
        spair = bi.term_mul(qi, ci) - bj.term_mul(qj, cj)
        remainder, quotients = vector_normal_form(spair, self.basis)
        if remainder.is_zero():
            if self._with_syzygies:
                self._record_syzygy(i, j, qi, ci, qj, cj, quotients)
            return counter
        lift = self._combine_lifts(quotients, extra=[(i, qi, ci), (j, qj, f.neg(cj))])
        return self._add(remainder, lift, pairs, counter)

    def _combine_lifts(self, quotients, extra=()):
        """Lift of (sum of extra terms applied to basis) - (sum q_k basis_k)."""
        ring = self.ring
        lift = [ring.zero] * len(self.inputs)
        for idx, exps, coeff in extra:
            term = Polynomial(ring, {exps: coeff})
            for j, p in enumerate(self.lifts[idx]):
                if p:
                    lift[j] = lift[j] + term * p
        for k, q in enumerate(quotients):
            if q.is_zero():
                continue
            for j, p in enumerate(self.lifts[k]):
                if p:
                    lift[j] = lift[j] - q * p
        return lift

    def _record_syzygy(self, i, j, qi, ci, qj, cj, quotients):
        """spair = u_i b_i - u_j b_j reduced to zero with the given quotients;
        compose the transcript with the lifts to land on the inputs."""
        f = self.ring.field
        ring = self.ring
        coeffs = [ring.zero] * len(self.basis)
        coeffs[i] = coeffs[i] + Polynomial(ring, {qi: ci})
        coeffs[j] = coeffs[j] - Polynomial(ring, {qj: cj})
        for k, q in enumerate(quotients):
            if q:
                coeffs[k] = coeffs[k] - q
        out = [ring.zero] * len(self.inputs)
        for k, c in enumerate(coeffs):
            if c.is_zero():
                continue
            for j0, p in enumerate(self.lifts[k]):
                if p:
                    out[j0] = out[j0] + c * p
        syz = self.syzygy_module.from_polys(out)
        if syz:
            self.syzygies.append(syz)

    # -- reduced basis ----------------------------------------------------

    def _interreduce(self):
        order = sorted(
            range(len(self.basis)),
            key=lambda k: self.module.order_key(*self.basis[k].leading_term()),
        )
        kept = []
        kept_lifts = []
        lead_list = []
        for k in order:
            lt = self.basis[k].leading_term()
            comp, exps = lt
            if any(
                bcomp == comp and div_exps(exps, bexps) is not None
                for bcomp, bexps in lead_list
            ):
                continue
            kept.append(self.basis[k])
            kept_lifts.append(list(self.lifts[k]))
            lead_list.append(lt)
        changed = True
        while changed:
            changed = False
            for k in range(len(kept)):
                others = kept[:k] + kept[k + 1 :]
                other_lifts = kept_lifts[:k] + kept_lifts[k + 1 :]
                remainder, quotients = vector_normal_form(kept[k], others)
                if any(q for q in quotients):
                    changed = True
                    lift = list(kept_lifts[k])
                    for idx, q in enumerate(quotients):
                        if q.is_zero():
                            continue
                        for j, p in enumerate(other_lifts[idx]):
                            if p:
                                lift[j] = lift[j] - q * p
                    kept[k] = remainder
                    kept_lifts[k] = lift
        f = self.ring.field
        for k in range(len(kept)):
            c = kept[k].leading_coefficient()
            if c != f.one:
                inv = f.inv(c)
                kept[k] = kept[k].scale(inv)
                kept_lifts[k] = [p.scale(inv) for p in kept_lifts[k]]
        return kept, kept_lifts

    # -- queries -----------------------------------------------------------

    def normal_form(self, v: ModuleVector):
        """(remainder, lift) with v - remainder = sum(lift_j * input_j)."""
        remainder, quotients = vector_normal_form(v, self.reduced)
        lift = [self.ring.zero] * len(self.inputs)
        for k, q in enumerate(quotients):
            if q.is_zero():
                continue
            for j, p in enumerate(self.reduced_lifts[k]):
                if p:
                    lift[j] = lift[j] + q * p
        return remainder, lift

    def contains(self, v: ModuleVector) -> bool:
        return vector_normal_form(v, self.reduced)[0].is_zero()


class IdealPresentation:
    """An ideal with its reduced Groebner basis, lifts, and first syzygies."""

    def __init__(self, ring: GradedRing, gens, max_degree=None):
        gens = [g for g in gens]
        if not gens:
            raise ValueError("ideal needs at least one generator")
        self.ring = ring
        self.gens = gens
        self.homogeneous = all(g.is_homogeneous() for g in gens)
        self.gen_degrees = [g.degree() for g in gens]
        self.free = FreeModule(ring, (0,))
        self._engine = ModuleGroebner(
            self.free,
            [poly_to_vector(g, self.free) for g in gens],
            max_degree=max_degree,
        )
        self.gb = [b.coordinate(0) for b in self._engine.reduced]
        self.gb_lifts = self._engine.reduced_lifts
        self.syzygies = self._engine.syzygies
        self.syzygy_module = self._engine.syzygy_module

    def normal_form(self, p: Polynomial):
        """(nf, lift) with p - nf = sum(lift_j * gens_j)."""
        remainder, lift = self._engine.normal_form(poly_to_vector(p, self.free))
        return remainder.coordinate(0), lift

    def reduce(self, p: Polynomial) -> Polynomial:
        return vector_normal_form(poly_to_vector(p, self.free), self._engine.reduced)[
            0
        ].coordinate(0)

    def contains(self, p: Polynomial) -> bool:
        return self.reduce(p).is_zero()

    def leading_exponents(self):
        return [g.leading_monomial() for g in self.gb]

    def koszul_vectors(self):
        """g_i e_j - g_j e_i over the generators: the trivial syzygies."""
        out = []
        for i in range(len(self.gens)):
            for j in range(i + 1, len(self.gens)):
                v = self.syzygy_module.basis_vector(j).poly_mul(self.gens[i]) - \
                    self.syzygy_module.basis_vector(i).poly_mul(self.gens[j])
                if v:
                    out.append(v)
        return out

    def trim_syzygies(self):
        """Replace the transcript syzygies with a generating subset.

        The transcripts are heavily redundant; dropping members of the
        module generated by the earlier ones keeps the generating property
        while shrinking every later computation over the syzygy module.
        """
        ordered = sorted(
            (s for s in self.syzygies if s),
            key=lambda s: s.degree(),
        )
        kept = []
        engine = None
        for s in ordered:
            if engine is not None and engine.contains(s):
                continue
            kept.append(s)
            engine = ModuleGroebner(
                self.syzygy_module, kept, with_syzygies=False
            )
        self.syzygies = kept
        return self

    def syzygy_groebner(self, max_degree=None) -> ModuleGroebner:
        """Groebner data of the first-syzygy module; its transcript syzygies
        are the second syzygies."""
        return ModuleGroebner(self.syzygy_module, self.syzygies, max_degree=max_degree)
