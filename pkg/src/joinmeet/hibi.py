"""Join-meet ideals and the quotient calculus in H[L] = K[L]/I_L.

Residue-class ideals of H[L] are handled through their lifts (I_L, gens) in
K[L]; identity is always the reduced Groebner basis of the lift, never the
generator list, so two presentations of the same ideal compare equal.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from . import linalg
from .groebner import (
    GroebnerBasis,
    Ideal,
    colon_element,
    groebner_basis,
    ideal,
    ideal_equal,
    ideal_member,
    intersect,
)
from .lattice import Lattice
from .poly import MonomialOrder, QQ, Ring


class NotLinear(ValueError):
    """A generator that must be a linear form is not one."""


# ---------------------------------------------------------------------------
# the ring K[L]

_RING_CACHE = {}
_RING_LOCK = threading.Lock()


def lattice_ring(L, field=QQ):
    """K[L]: one variable per element, ordered by the fixed linear extension.

    Default order is degrevlex with the bottom smallest, so the leading term
    of every basic binomial ab - (a∨b)(a∧b) is the incomparable product ab.
    """
    key = (L, field)
    with _RING_LOCK:
        got = _RING_CACHE.get(key)
        if got is None:
            names = tuple(L.labels[i] for i in L.linear_extension)
            order = MonomialOrder("degrevlex", tuple(range(L.n - 1, -1, -1)))
            got = _RING_CACHE[key] = Ring(names, order, field)
    return got


def variable(L, element, field=QQ):
    """The variable of K[L] attached to a lattice element index."""
    return lattice_ring(L, field).var(L.labels[element])


def _element_of(L, poly):
    """Element index of a single-variable monomial, else None."""
    if len(poly.terms) != 1:
        return None
    m, c = poly.terms[0]
    if sum(m) != 1 or c != poly.ring.field.one:
        return None
    name = poly.ring.names[m.index(1)]
    return L.index(name)


# ---------------------------------------------------------------------------
# the join-meet ideal


@dataclass(frozen=True)
class JoinMeetIdeal:
    """I_L, generated by one basic binomial per incomparable pair."""

    lattice: Lattice
    ring: Ring
    generators: tuple

    @property
    def ideal(self):
        return Ideal(self.ring, self.generators)

    def groebner(self):
        return groebner_basis(self.ideal)


def join_meet_ideal(L, field=QQ):
    """Basic binomials ab - (a∨b)(a∧b), one per incomparable pair, in
    deterministic (linear extension) order."""
    ring = lattice_ring(L, field)
    position = {e: i for i, e in enumerate(L.linear_extension)}
    pairs = sorted(
        (tuple(sorted((a, b), key=position.get)) for a, b in L.incomparable_pairs()),
        key=lambda p: (position[p[0]], position[p[1]]),
    )
    gens = []
    for a, b in pairs:
        va = variable(L, a, field)
        vb = variable(L, b, field)
        vj = variable(L, L.join(a, b), field)
        vm = variable(L, L.meet(a, b), field)
        gens.append(va * vb - vj * vm)
    return JoinMeetIdeal(L, ring, tuple(gens))


# ---------------------------------------------------------------------------
# residue-class ideals of H[L]


class ResidueIdeal:
    """An ideal of H[L] given by lifts of linear-form generators."""

    __slots__ = ("lattice", "field", "linear_generators", "_lift", "_gb")

    def __init__(self, lattice, generators, field=QQ):
        self.lattice = lattice
        self.field = field
        ring = lattice_ring(lattice, field)
        gens = []
        for g in generators:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if not g:
                continue
            if not g.is_linear_form():
                raise NotLinear(f"{g} is not a linear form")
            gens.append(g)
        self.linear_generators = tuple(gens)
        self._lift = None
        self._gb = None

    @property
    def ring(self):
        return lattice_ring(self.lattice, self.field)

    @property
    def lift(self):
        """(I_L, generators) in K[L]."""
        if self._lift is None:
            base = join_meet_ideal(self.lattice, self.field)
            self._lift = ideal(self.ring, base.generators + self.linear_generators)
        return self._lift

    def groebner(self):
        if self._gb is None:
            self._gb = groebner_basis(self.lift)
        return self._gb

    def semantic_key(self):
        return self.groebner().basis

    def degree1(self):
        """Canonical basis of the linear part of the lift (row-reduced by the
        monomial order; equals the span of the generators since I_L starts in
        degree 2)."""
        return tuple(g for g in self.groebner().basis if g.total_degree() == 1)

    @property
    def dim(self):
        return len(self.degree1())

    def is_zero(self):
        return self.dim == 0

    def is_maximal(self):
        return self.dim == self.lattice.n

    def variable_set(self):
        """Element indices when the linear part is spanned by variables alone."""
        elems = []
        for g in self.degree1():
            e = _element_of(self.lattice, g)
            if e is None:
                return None
            elems.append(e)
        return frozenset(elems)

    def __eq__(self, other):
        if not isinstance(other, ResidueIdeal):
            return NotImplemented
        return (
            self.lattice == other.lattice
            and self.field == other.field
            and self.semantic_key() == other.semantic_key()
        )

    def __hash__(self):
        return hash((self.lattice, self.semantic_key()))

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.linear_generators)
        return f"({inner})"


def residue_ideal(L, generators, field=QQ):
    return ResidueIdeal(L, generators, field)


def zero_ideal(L, field=QQ):
    return ResidueIdeal(L, (), field)


def maximal_ideal(L, field=QQ):
    """m, the maximal graded ideal: all the variables."""
    return ResidueIdeal(L, list(L.labels), field)


# ---------------------------------------------------------------------------
# colon ideals in H[L]


@dataclass
class ResidueColonReport:
    """Outcome of a colon computation in H[L], with generation verdicts.

    ``lift`` is the colon of the lifted ideals in K[L]; ``degree1`` its linear
    part; ``linear_generated`` says whether the colon equals (I_L, degree1);
    ``variable_generated`` additionally requires the linear part to be spanned
    by variables, recorded in ``variables`` (element indices).
    """

    lattice: Lattice
    field: object
    source: ResidueIdeal
    divisors: tuple
    lift: Ideal
    groebner: GroebnerBasis
    degree1: tuple
    linear_generated: bool
    variable_generated: bool
    variables: object
    whole_ring: bool
    nonlinear_witness: object

    def semantic_key(self):
        return self.groebner.basis

    def as_residue_ideal(self):
        if not self.linear_generated:
            raise NotLinear("colon ideal is not generated by linear forms")
        return ResidueIdeal(self.lattice, self.degree1, self.field)

    def variable_labels(self):
        if self.variables is None:
            return None
        return sorted(self.lattice.labels[e] for e in self.variables)


def _whole_ring_report(L, J, divisors, field):
    ring = lattice_ring(L, field)
    unit = ideal(ring, (ring.one(),))
    return ResidueColonReport(
        lattice=L,
        field=field,
        source=J,
        divisors=divisors,
        lift=unit,
        groebner=groebner_basis(unit),
        degree1=(),
        linear_generated=False,
        variable_generated=False,
        variables=None,
        whole_ring=True,
        nonlinear_witness=None,
    )


def _colon_report(L, J, divisors, lifted, field):
    gb = groebner_basis(lifted)
    if any(g.total_degree() == 0 for g in gb.basis):
        return _whole_ring_report(L, J, divisors, field)
    degree1 = tuple(g for g in gb.basis if g.total_degree() == 1)
    base = join_meet_ideal(L, field)
    linear_lift = ideal(base.ring, base.generators + degree1)
    linear_generated = ideal_equal(lifted, linear_lift)
    all_vars = all(_element_of(L, g) is not None for g in degree1)
    variables = None
    variable_generated = False
    if all_vars:
        variables = frozenset(_element_of(L, g) for g in degree1)
        var_lift = ideal(
            base.ring,
            base.generators + tuple(variable(L, e, field) for e in sorted(variables)),
        )
        variable_generated = ideal_equal(lifted, var_lift)
        if not variable_generated:
            variables = None
    witness = None
    if not linear_generated:
        for g in gb.basis:
            if g.total_degree() >= 2 and not ideal_member(g, linear_lift):
                witness = g
                break
    return ResidueColonReport(
        lattice=L,
        field=field,
        source=J,
        divisors=divisors,
        lift=lifted,
        groebner=gb,
        degree1=degree1,
        linear_generated=linear_generated,
        variable_generated=variable_generated,
        variables=variables,
        whole_ring=False,
        nonlinear_witness=witness,
    )


def colon_in_H(J, f):
    """(J̄) : f̄ in H[L] for a linear form f, via the lifted colon in K[L]."""
    L = J.lattice
    field = J.field
    ring = lattice_ring(L, field)
    if isinstance(f, str):
        f = ring.parse(f)
    if not f:
        raise NotLinear("colon by the zero form")
    if not f.is_linear_form():
        raise NotLinear(f"{f} is not a linear form")
    lifted = colon_element(J.lift, f)
    return _colon_report(L, J, (f,), lifted, field)


def colon_in_H_by_ideal(J, I):
    """(J̄) : (Ī) in H[L]: intersection of element colons over I's generators.

    Generators of I already lying in the lift of J colon to the whole ring
    and drop out of the intersection.
    """
    L = J.lattice
    field = J.field
    if L != I.lattice or field != I.field:
        raise ValueError("colon of ideals over different lattices")
    gens = [g for g in I.linear_generators if not ideal_member(g, J.lift)]
    if not gens:
        return _whole_ring_report(L, J, tuple(I.linear_generators), field)
    acc = None
    for g in gens:
        c = colon_element(J.lift, g)
        acc = c if acc is None else intersect(acc, c)
    return _colon_report(L, J, tuple(gens), acc, field)


# ---------------------------------------------------------------------------
# the degree-1 span identity of lifted colons


def linear_coefficient_rows(L, polys, field):
    ring = lattice_ring(L, field)
    zero = field.zero
    rows = []
    for p in polys:
        row = [zero] * ring.nvars
        for m, c in p.terms:
            row[m.index(1)] = c
        rows.append(row)
    return rows


def degree1_span_claim_check(L, I, e, field=QQ):
    """Whether the linear part of (I_L, J) : e equals span{a : a ≱ e},
    where J = I \\ {e} and e is a maximal element of the poset ideal I."""
    members = I.members if hasattr(I, "members") else frozenset(I)
    I = L.poset_ideal(members)
    if e not in L.maximal_elements(I.members):
        raise ValueError(f"{L.labels[e]!r} is not a maximal element of the ideal")
    J = residue_ideal(L, [L.labels[a] for a in sorted(I.members - {e})], field)
    report = colon_in_H(J, variable(L, e, field))
    blockers = [a for a in range(L.n) if not L.le(e, a)]
    expected = [variable(L, a, field) for a in blockers]
    return linalg.row_space_equal(
        linear_coefficient_rows(L, report.degree1, field),
        linear_coefficient_rows(L, expected, field),
    )
