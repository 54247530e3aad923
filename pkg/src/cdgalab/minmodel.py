"""Degree-bounded Sullivan minimal models and formality verdicts.

The builder runs the standard staged construction against any slice backend:
in each degree it first adjoins closed generators hitting a complement of
the image of H^k(psi), then generators whose differentials kill the kernel
of H^{k+1}(psi).  All basis choices come from the cohomology module's
deterministic representatives, so the output is reproducible.  The morphism
psi is tracked on generators and extended multiplicatively.

s-formality certificates:

* N-part vanishes through degree s (immediate), or
* the N-part through s is a single odd generator whose differential is a
  nonzero polynomial in closed even generators: multiplication by such an
  element is injective in a free graded-commutative algebra, so the ideal
  contains no nonzero closed element and the exactness condition holds
  vacuously.

Otherwise closed ideal elements are checked degree by degree up to the
construction bound: a closed non-exact element refutes, a clean scan is
INCONCLUSIVE (the tool never extrapolates past its bound).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Tuple

from .algebra import AlgebraSpec, Element, GeneratorDecl, monomial_atoms
from .chains import FreeSlices
from .cohomology import CohomologyRing
from .errors import CapTooLow, NotOneConnected
from .linalg import Echelon, Vec, kernel_image, vec_add
from .massey import NONZERO, MasseyReport, a_massey, triple_massey

CERTIFIED = "CERTIFIED"
REFUTED = "REFUTED"
INCONCLUSIVE = "INCONCLUSIVE"

FORMAL = "FORMAL"
NOT_FORMAL = "NOT_FORMAL"
UNKNOWN = "UNKNOWN"


@dataclass
class MinimalModel:
    model: AlgebraSpec
    bound: int
    psi: Dict[str, Tuple[int, Vec]]          # generator -> (degree, target vec)
    target_ring: CohomologyRing
    generators_by_degree: Dict[int, List[str]]
    cn_split: Dict[int, Tuple[List[str], List[str]]]  # degree -> (C names, N names)
    identity: bool = False

    def model_ring(self, max_degree: Optional[int] = None) -> CohomologyRing:
        top = self.bound + 1 if max_degree is None else max_degree
        top = min(top, self.model.degree_cap - 1)
        return CohomologyRing(FreeSlices(self.model), top)

    def psi_vec(self, elem: Element) -> Vec:
        """Image of a model element in the target slice coordinates."""
        sl = self.target_ring.slices
        out: Vec = {}
        for mono, c in elem.terms.items():
            vec = sl.unit_vec()
            deg = 0
            for g in monomial_atoms(self.model, mono):
                name = self.model.generators[g].name
                gdeg, gvec = self.psi[name]
                vec = sl.mul_vec(deg, vec, gdeg, gvec)
                deg += gdeg
            for idx, v in vec.items():
                s = out.get(idx)
                s = c * v if s is None else s + c * v
                if s.is_zero():
                    out.pop(idx, None)
                else:
                    out[idx] = s
        return out

    def n_generators_through(self, s: int) -> List[str]:
        out = []
        for k in sorted(self.cn_split):
            if k <= s:
                out.extend(self.cn_split[k][1])
        return out


@dataclass
class SFormalityReport:
    status: str
    s: int
    route: str
    witness: Optional[str] = None
    checked_through: Optional[int] = None
    # True when every degree <= s is all-closed or all-non-closed, so the
    # C/N decomposition admits no other choice and a refutation is absolute.
    splitting_unique: bool = False


@dataclass
class FormalityReport:
    verdict: str
    route: str
    certificate: Dict[str, object] = dc_field(default_factory=dict)
    witness: Optional[MasseyReport] = None


def build_minimal_model(target_ring: CohomologyRing, bound: int) -> MinimalModel:
    """Stagewise minimal model of the ring's underlying complex, through `bound`."""
    if bound + 1 > target_ring.max_degree:
        raise CapTooLow("target cohomology must be computed through bound+1",
                        bound=bound, available=target_ring.max_degree)
    slices = target_ring.slices
    if isinstance(slices, FreeSlices) and slices.spec.flags is not None \
            and slices.spec.flags.is_minimal \
            and _differentials_independent(slices):
        spec = slices.spec
        psi = {}
        gens_by_deg: Dict[int, List[str]] = {}
        cn: Dict[int, Tuple[List[str], List[str]]] = {}
        for g in spec.generators:
            psi[g.name] = (g.degree, slices.from_element(spec.gen(g.name)))
            gens_by_deg.setdefault(g.degree, []).append(g.name)
            closed = spec.gen(g.name).d().is_zero()
            c, n = cn.setdefault(g.degree, ([], []))
            (c if closed else n).append(g.name)
        return MinimalModel(model=spec, bound=bound, psi=psi,
                            target_ring=target_ring,
                            generators_by_degree=gens_by_deg, cn_split=cn,
                            identity=True)

    if target_ring.betti[0] != 1:
        raise NotOneConnected("H^0 must be one-dimensional", betti0=target_ring.betti[0])
    if target_ring.betti[1] != 0:
        raise NotOneConnected("H^1 must vanish for the bounded construction",
                              betti1=target_ring.betti[1])

    field = target_ring.field
    cap = bound + 2
    gens: List[GeneratorDecl] = []
    diff: Dict[str, List] = {}
    psi: Dict[str, Tuple[int, Vec]] = {}
    gens_by_deg: Dict[int, List[str]] = {}
    cn: Dict[int, Tuple[List[str], List[str]]] = {}

    def rebuild() -> AlgebraSpec:
        return AlgebraSpec(field, gens, differential=dict(diff),
                           degree_cap=cap).validate()

    model = rebuild()
    mm = MinimalModel(model=model, bound=bound, psi=psi, target_ring=target_ring,
                      generators_by_degree=gens_by_deg, cn_split=cn)

    for k in range(2, bound + 1):
        model_ring = CohomologyRing(FreeSlices(mm.model), k + 1)
        # 1. surjectivity in degree k: adjoin closed generators for a
        #    complement of the image of H^k(psi).
        img_ech = Echelon(field)
        for j in range(model_ring.betti[k]):
            rep = model_ring.slices.to_element(k, model_ring.reps(k)[j])
            cls = target_ring.class_of(mm.psi_vec(rep), k)
            img_ech.add(dict(cls.coords))
        new_closed: List[str] = []
        for j in range(target_ring.betti[k]):
            if img_ech.add({j: field.one}):
                name = f"v{k}_{len(gens_by_deg.get(k, [])) + len(new_closed)}"
                new_closed.append(name)
                gens.append(GeneratorDecl(name, k))
                psi[name] = (k, target_ring.rep_combination(k, {j: field.one}))
        if new_closed:
            mm.model = rebuild()
            model_ring = CohomologyRing(FreeSlices(mm.model), k + 1)
        # 2. injectivity in degree k+1: kill the kernel of H^{k+1}(psi).
        def h_psi(j: int) -> Vec:
            rep = model_ring.slices.to_element(k + 1, model_ring.reps(k + 1)[j])
            return dict(target_ring.class_of(mm.psi_vec(rep), k + 1).coords)

        kernel, _ = kernel_image(field, model_ring.betti[k + 1], h_psi)
        new_n: List[str] = []
        for row in kernel.basis_rows():
            zvec = model_ring.rep_combination(k + 1, row)
            z_elem = model_ring.slices.to_element(k + 1, zvec)
            prim = target_ring.is_exact(mm.psi_vec(z_elem), k + 1)
            if prim is None:
                raise AssertionError("kernel class must map to an exact cocycle")
            base = len(gens_by_deg.get(k, [])) + len(new_closed) + len(new_n)
            name = f"n{k}_{base}"
            new_n.append(name)
            gens.append(GeneratorDecl(name, k))
            diff[name] = [(c, _names(mm.model, mono))
                          for mono, c in z_elem.terms.items()]
            psi[name] = (k, prim)
            mm.model = rebuild()
        gens_by_deg.setdefault(k, []).extend(new_closed + new_n)
        c_list, n_list = cn.setdefault(k, ([], []))
        c_list.extend(new_closed)
        n_list.extend(new_n)
        mm.model = rebuild()

    mm.model = rebuild()
    # chain-map sanity: psi(d g) = d(psi g) on every generator
    for g in mm.model.generators:
        lhs = mm.psi_vec(mm.model.gen(g.name).d())
        deg, gvec = psi[g.name]
        rhs = target_ring.slices.d_vec(deg, gvec)
        if lhs != rhs:
            raise AssertionError(f"psi fails the chain condition on {g.name}")
    return mm


def _differentials_independent(slices: FreeSlices) -> bool:
    """Per degree, the non-closed generators' differentials must be
    independent for the namewise C/N split of an already-minimal spec to be
    legitimate (d injective on the N span)."""
    spec = slices.spec
    for degree in sorted({g.degree for g in spec.generators}):
        ech = Echelon(spec.field)
        for g in spec.generators:
            if g.degree != degree:
                continue
            img = spec.gen(g.name).d()
            if img.is_zero():
                continue
            if not ech.add(slices.from_element(img)):
                return False
    return True


def _names(spec: AlgebraSpec, mono) -> Tuple[str, ...]:
    out: List[str] = []
    for g, e in mono:
        out.extend([spec.generators[g].name] * e)
    return tuple(out)


def s_formality_check(mm: MinimalModel, s: int) -> SFormalityReport:
    """Certify, refute, or abstain on the degreewise formality condition."""
    unique = all(not c_names or not n_names
                 for k, (c_names, n_names) in mm.cn_split.items() if k <= s)
    n_gens = mm.n_generators_through(s)
    if not n_gens:
        return SFormalityReport(status=CERTIFIED, s=s, route="n_part_vanishes",
                                splitting_unique=unique)
    if len(n_gens) == 1:
        name = n_gens[0]
        g = mm.model.index[name]
        deg = mm.model.generators[g].degree
        dn = mm.model.gen(name).d()
        even_only = all(
            mm.model.generators[gi].degree % 2 == 0
            for mono in dn.terms for gi, _ in mono)
        if deg % 2 == 1 and not dn.is_zero() and even_only:
            return SFormalityReport(
                status=CERTIFIED, s=s, route="regular_even_differential",
                splitting_unique=unique)
    # degree-by-degree scan of closed ideal elements up to the bound
    ring = mm.model_ring()
    spec = mm.model
    slices = ring.slices
    n_idx = {spec.index[name] for name in n_gens}
    low_idx = {i for i, g in enumerate(spec.generators) if g.degree <= s}
    for k in range(2, mm.bound + 1):
        basis = spec.basis(k)
        ideal_rows: List[Vec] = []
        for i, mono in enumerate(basis):
            gens_used = {g for g, _ in mono}
            if gens_used & n_idx and gens_used <= low_idx:
                ideal_rows.append({i: ring.field.one})
        if not ideal_rows:
            continue
        def apply(j: int) -> Vec:
            return slices.d_vec(k, ideal_rows[j])
        kernel, _ = kernel_image(ring.field, len(ideal_rows), apply)
        for combo in kernel.basis_rows():
            vec: Vec = {}
            for j, c in combo.items():
                vec = vec_add(vec, ideal_rows[j], c)
            if ring.is_exact(vec, k) is None:
                witness = slices.to_element(k, vec).render()
                return SFormalityReport(status=REFUTED, s=s,
                                        route="closed_non_exact_ideal_element",
                                        witness=witness,
                                        checked_through=k,
                                        splitting_unique=unique)
    return SFormalityReport(status=INCONCLUSIVE, s=s, route="scan_clean_to_bound",
                            checked_through=mm.bound, splitting_unique=unique)


def massey_scan(ring: CohomologyRing, budget: int = 2000) -> Optional[MasseyReport]:
    """First NONZERO triple or a-product found among representative classes.

    Pairs whose cup product is a nonzero class can never participate, so the
    scan first tabulates exact pairs and only evaluates products built from
    them; the budget counts actual Massey evaluations.
    """
    spent = 0
    degs = [k for k in range(1, ring.max_degree + 1) if ring.betti[k]]
    exact_pairs: Dict[Tuple[int, int], List[Tuple[int, int]]] = {}

    def pair_exact(p: int, i: int, q: int, j: int) -> bool:
        if p + q > ring.max_degree:
            return False
        key = (p, q)
        if key not in exact_pairs:
            table = []
            for a in range(ring.betti[p]):
                for b in range(ring.betti[q]):
                    prod = ring.cup(ring.rep_class(p, a), ring.rep_class(q, b))
                    if prod.is_zero():
                        table.append((a, b))
            exact_pairs[key] = table
        return (i, j) in exact_pairs[key]

    # triple products
    for p1 in degs:
        for p2 in degs:
            for p3 in degs:
                if p1 + p2 + p3 - 1 > ring.max_degree:
                    continue
                if ring.betti[p1 + p2 + p3 - 1] == 0:
                    continue
                for j1 in range(ring.betti[p1]):
                    for j2 in range(ring.betti[p2]):
                        if not pair_exact(p1, j1, p2, j2):
                            continue
                        for j3 in range(ring.betti[p3]):
                            if not pair_exact(p2, j2, p3, j3):
                                continue
                            if spent >= budget:
                                return None
                            spent += 1
                            rep = triple_massey(ring,
                                                ring.rep_class(p1, j1),
                                                ring.rep_class(p2, j2),
                                                ring.rep_class(p3, j3))
                            if rep.defined and rep.verdict == NONZERO:
                                return rep
    # a-products of order 3 with same-degree companions
    even = [k for k in degs if k % 2 == 0]
    for pa in even:
        for pb in degs:
            target = 2 * (pa + pb - 1) + pb
            if target > ring.max_degree or ring.betti[target] == 0:
                continue
            for ja in range(ring.betti[pa]):
                companions = [jb for jb in range(ring.betti[pb])
                              if pair_exact(pa, ja, pb, jb)]
                for xi in range(len(companions)):
                    for yi in range(xi, len(companions)):
                        for zi in range(yi, len(companions)):
                            if spent >= budget:
                                return None
                            spent += 1
                            bs = [ring.rep_class(pb, companions[t])
                                  for t in (xi, yi, zi)]
                            rep = a_massey(ring, ring.rep_class(pa, ja), bs)
                            if rep.defined and rep.verdict == NONZERO:
                                return rep
    return None


def formality_verdict(ring: CohomologyRing, *,
                      spec: Optional[AlgebraSpec] = None,
                      poincare_dimension: Optional[int] = None,
                      simply_connected: bool = False,
                      budget: int = 400,
                      minimal_model_bound: Optional[int] = None) -> FormalityReport:
    """Combine obstruction scans, the duality criterion and small-dimension facts."""
    witness = massey_scan(ring, budget=budget)
    if witness is not None:
        return FormalityReport(verdict=NOT_FORMAL, route="massey_obstruction",
                               witness=witness,
                               certificate={"kind": witness.kind,
                                            "degree": witness.degree})
    d_zero = True
    for k in range(ring.max_degree):
        for i in range(ring.slices.dim(k)):
            if ring.slices.d_vec(k, {i: ring.field.one}):
                d_zero = False
                break
        if not d_zero:
            break
    if d_zero:
        return FormalityReport(verdict=FORMAL, route="zero_differential",
                               certificate={"reason": "the algebra equals its "
                                                      "own cohomology"})
    if simply_connected and poincare_dimension is not None and poincare_dimension <= 6:
        return FormalityReport(
            verdict=FORMAL, route="low_dimension",
            certificate={"reason": "simply connected compact of dimension <= 6",
                         "dimension": poincare_dimension})
    if poincare_dimension is not None:
        n_half = (poincare_dimension + 1) // 2
        s = n_half - 1
        bound = minimal_model_bound or max(s + 1, poincare_dimension - 2)
        bound = min(bound, ring.max_degree - 1)
        try:
            mm = build_minimal_model(ring, bound)
        except NotOneConnected:
            return FormalityReport(verdict=UNKNOWN, route="not_one_connected",
                                   certificate={})
        sf = s_formality_check(mm, s)
        if sf.status == CERTIFIED:
            return FormalityReport(
                verdict=FORMAL, route="s_formality_duality",
                certificate={"s": s, "dimension": poincare_dimension,
                             "s_route": sf.route})
        if sf.status == REFUTED:
            if sf.splitting_unique:
                # every degree through s is all-closed or all-non-closed, so
                # no other complement choice exists: the refutation is
                # absolute and formality fails outright
                return FormalityReport(
                    verdict=NOT_FORMAL, route="s_formality_refuted",
                    certificate={"s": s, "witness": sf.witness,
                                 "splitting_unique": True})
            # Otherwise the degreewise condition quantifies over complement
            # choices and this is only evidence against formality.
            return FormalityReport(
                verdict=UNKNOWN, route="s_formality_refuted_canonical_split",
                certificate={"s": s, "witness": sf.witness,
                             "note": "closed non-exact ideal element for the "
                                     "canonical splitting only"})
        return FormalityReport(verdict=UNKNOWN, route="s_formality_inconclusive",
                               certificate={"s": s, "checked_through": sf.checked_through})
    return FormalityReport(verdict=UNKNOWN, route="no_applicable_criterion")
