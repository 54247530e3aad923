"""Finite cyclic group actions by multiplicative chain automorphisms.

The generator of the group acts on algebra generators by homogeneous
elements; the action extends multiplicatively.  Validation checks the chain
condition, the exact order and compatibility with declared conjugation
pairs.  The invariant subcomplex is cut out per degree by the averaging
projector (the group order is invertible over Q(zeta_N)), and its cohomology
is a full :class:`~cdgalab.cohomology.CohomologyRing` over the subcomplex
slices, so cup products, Massey products and Lefschetz tests all apply.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Optional

from .algebra import AlgebraSpec, Element, Monomial, monomial_atoms
from .chains import FreeSlices, SubcomplexSlices
from .cohomology import CohomologyRing
from .errors import (
    CapTooLow,
    ConjugationBroken,
    NoConjugateDeclared,
    NotChainMap,
    OrderMismatch,
    ParseError,
)
from .linalg import Vec, kernel_image

class GroupActionSpec:
    """A Z_m action on an AlgebraSpec, given by generator images."""

    def __init__(self, parent: AlgebraSpec, order: int, images: Dict[str, object]):
        if not parent.validated:
            parent.validate()
        if order < 1:
            raise ParseError("group order must be positive", order=order)
        self.parent = parent
        self.order = order
        self.images: Dict[int, Element] = {}
        for name, raw in images.items():
            if name not in parent.index:
                raise ParseError(f"action image given for unknown generator '{name}'")
            gi = parent.index[name]
            img = parent._element_from_data(raw)
            if img.degree != parent.generators[gi].degree and not img.is_zero():
                raise ParseError("action images must preserve degree",
                                 generator=name, got=img.degree)
            self.images[gi] = img
        for gi in range(len(parent.generators)):
            if gi not in self.images:
                raise ParseError(
                    f"action must specify an image for generator "
                    f"'{parent.generators[gi].name}'")
        self._validated = False

    # -- applying the action -------------------------------------------

    def apply(self, elem: Element, power: int = 1) -> Element:
        """Apply the group generator ``power`` times to an element."""
        out = elem
        for _ in range(power % self.order if self._validated else power):
            out = self._apply_once(out)
        return out

    def _apply_once(self, elem: Element) -> Element:
        spec = self.parent
        acc = spec.zero(elem.degree)
        for mono, c in elem.terms.items():
            piece = spec.one().scale(c)
            for g in monomial_atoms(spec, mono):
                piece = piece * self.images[g]
            acc = acc + piece
        return acc

    # -- validation -----------------------------------------------------

    def validate(self) -> "GroupActionSpec":
        spec = self.parent
        for gi, img in self.images.items():
            g = spec.gen(spec.generators[gi].name)
            lhs = self._apply_once(g.d())
            rhs = img.d()
            if lhs != rhs:
                raise NotChainMap(
                    f"the action does not commute with d on generator "
                    f"'{spec.generators[gi].name}'",
                    generator=spec.generators[gi].name,
                    witness=(lhs - rhs).render())
        period = None
        current = {gi: img for gi, img in self.images.items()}
        for j in range(1, self.order + 1):
            if all(current[gi] == spec.gen(spec.generators[gi].name)
                   for gi in self.images):
                period = j
                break
            current = {gi: self._apply_once(img) for gi, img in current.items()}
        if period != self.order:
            raise OrderMismatch("the action's exact order differs from the declared one",
                                declared=self.order, actual=period)
        for gi, partner in spec._conj_index.items():
            img = self.images[gi]
            want = self.images[partner]
            try:
                got = img.conj()
            except NoConjugateDeclared as exc:
                raise ConjugationBroken(
                    "a conjugate generator's image uses partnerless generators",
                    generator=spec.generators[gi].name) from exc
            if got != want:
                raise ConjugationBroken(
                    "the action does not respect declared conjugation pairs",
                    generator=spec.generators[gi].name)
        self._validated = True
        return self

    @property
    def validated(self) -> bool:
        return self._validated


def action_validate(act: GroupActionSpec) -> GroupActionSpec:
    return act.validate()


def action_matrix(act: GroupActionSpec, slices: FreeSlices, k: int, power: int = 1):
    """Columns of rho*^power on the degree-k slice."""
    cols: List[Vec] = []
    for i in range(slices.dim(k)):
        e = slices.basis_element(k, i)
        cols.append(slices.from_element(act.apply(e, power)))
    return cols


def averaging_projector(act: GroupActionSpec, slices: FreeSlices, k: int) -> List[Vec]:
    """Columns of P = (1/m) sum_j rho*^j on the degree-k slice."""
    m = act.order
    field = slices.field
    inv_m = field.rational(Fraction(1, m))
    cols: List[Vec] = [{} for _ in range(slices.dim(k))]
    for i in range(slices.dim(k)):
        e = slices.basis_element(k, i)
        acc = e
        img = e
        for _ in range(m - 1):
            img = act._apply_once(img)
            acc = acc + img
        cols[i] = {j: inv_m * c for j, c in slices.from_element(acc).items()}
    return cols


def invariant_complex(act: GroupActionSpec, max_degree: Optional[int] = None) -> SubcomplexSlices:
    """The fixed subcomplex, with canonical per-degree bases."""
    if not act.validated:
        act.validate()
    spec = act.parent
    slices = FreeSlices(spec)
    top = spec.degree_cap if max_degree is None else max_degree
    field = spec.field
    bases: Dict[int, List[Vec]] = {}
    for k in range(top + 1):
        proj = averaging_projector(act, slices, k)
        # fixed space = kernel of (P - I)
        def apply(i):
            col = dict(proj[i])
            cur = col.get(i, field.zero) - field.one
            if cur.is_zero():
                col.pop(i, None)
            else:
                col[i] = cur
            return col
        kernel, _ = kernel_image(field, slices.dim(k), apply)
        bases[k] = kernel.basis_rows()
    return SubcomplexSlices(slices, bases)


def invariant_cohomology(act: GroupActionSpec, max_degree: int,
                         volume: Optional[Monomial] = None) -> CohomologyRing:
    """Cohomology of the invariant subcomplex (the orbifold model)."""
    if max_degree + 1 > act.parent.degree_cap:
        raise CapTooLow("invariant cohomology through degree k needs parent "
                        "slices through k+1",
                        requested=max_degree, cap=act.parent.degree_cap)
    sub = invariant_complex(act, max_degree=max_degree + 1)
    return CohomologyRing(sub, max_degree, volume=volume, group_order=act.order)


def fixed_subspace_of_cohomology(act: GroupActionSpec, ring: CohomologyRing, k: int):
    """Basis of the rho*-fixed subspace of H^k(parent), in rep coordinates."""
    field = ring.field
    m = act.order
    inv_m = field.rational(Fraction(1, m))
    cols: List[Vec] = []
    for j in range(ring.betti[k]):
        rep = ring.slices.to_element(k, ring.reps(k)[j])
        acc = rep
        img = rep
        for _ in range(m - 1):
            img = act._apply_once(img)
            acc = acc + img
        avg = acc.scale(inv_m)
        cols.append(ring.class_of(avg).coords)

    # fixed classes = kernel of (P - I) on H^k, with P the averaged action
    def apply(j):
        col = dict(cols[j])
        c = col.get(j, field.zero) - field.one
        if c.is_zero():
            col.pop(j, None)
        else:
            col[j] = c
        return col
    kernel, _ = kernel_image(field, ring.betti[k], apply)
    return kernel.basis_rows()


def burnside_invariant_dimension(act: GroupActionSpec, k: int) -> Fraction:
    """(1/m) sum_j trace(rho*^j) on the degree-k slice; must be a nonneg integer."""
    spec = act.parent
    slices = FreeSlices(spec)
    m = act.order
    total = spec.field.zero
    for j in range(m):
        tr = spec.field.zero
        for i in range(slices.dim(k)):
            e = slices.basis_element(k, i)
            img = slices.from_element(act.apply(e, j))
            c = img.get(i)
            if c is not None:
                tr = tr + c
        total = total + tr
    avg = total * spec.field.rational(Fraction(1, m))
    return avg.rational_value()
