"""Buchberger-based Groebner engine.

Normal forms, reduced bases, and the ideal calculus (equality, sums,
intersections, colon ideals) that backs every "one can check" equality in the
package.  Ideals here are tiny (tens of generators, ~10 variables), so the
classic algorithm with the coprime and chain criteria is enough; pair
selection follows the normal strategy (smallest lcm degree first).
"""

from __future__ import annotations

import heapq
import threading
from dataclasses import dataclass

from .poly import MonomialOrder, Ring


class ZeroDivisorArgument(ValueError):
    """Colon by zero is undefined."""


class NotHomogeneous(ValueError):
    """The operation requires a homogeneous ideal."""


@dataclass(frozen=True)
class Ideal:
    """A finitely generated ideal; equality of ideals is always semantic."""

    ring: Ring
    generators: tuple

    def __post_init__(self):
        for g in self.generators:
            if g.ring != self.ring:
                raise ValueError("generator from a different ring")


def ideal(ring, gens):
    return Ideal(ring, tuple(g for g in gens if g))


@dataclass(frozen=True)
class GroebnerBasis:
    ring: Ring
    basis: tuple
    reduced: bool = False

    @property
    def order(self):
        return self.ring.order

    def __iter__(self):
        return iter(self.basis)


# ---------------------------------------------------------------------------
# monomial helpers


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# division


def _leads(G):
    return [(g.leading_monomial(), g.leading_coeff(), g) for g in G if g]


def normal_form(f, G):
    """Remainder of f under division by G (full tail reduction).

    No term of the result is divisible by any leading monomial of G, and
    f - result lies in (G).  For a Groebner basis the remainder is canonical.
    """
    if isinstance(G, GroebnerBasis):
        G = G.basis
    leads = _leads(G)
    if not leads or not f:
        return f
    ring = f.ring
    key = ring.key
    work = dict(f.terms)
    remainder = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        for lm, lc, g in leads:
            if _divides(lm, m):
                q = _sub(m, lm)
                qc = c / lc
                for mg, cg in g.terms[1:]:
                    mm = _add(q, mg)
                    v = work.get(mm)
                    v = -qc * cg if v is None else v - qc * cg
                    if v:
                        work[mm] = v
                    else:
                        work.pop(mm, None)
                break
        else:
            remainder[m] = c
    return ring.from_dict(remainder)


def divide_exact(f, g):
    """Quotient f/g when g divides f exactly (members of (g) always do)."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = f.ring
    key = ring.key
    lm, lc = g.leading_term()
    work = dict(f.terms)
    quotient = {}
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        if not _divides(lm, m):
            raise ArithmeticError("inexact polynomial division")
        q = _sub(m, lm)
        qc = c / lc
        quotient[q] = qc
        for mg, cg in g.terms[1:]:
            mm = _add(q, mg)
            v = work.get(mm)
            v = -qc * cg if v is None else v - qc * cg
            if v:
                work[mm] = v
            else:
                work.pop(mm, None)
    return ring.from_dict(quotient)


def s_polynomial(f, g):
    lmf, lcf = f.leading_term()
    lmg, lcg = g.leading_term()
    lcm = _lcm(lmf, lmg)
    one = f.ring.field.one
    return f.shift(_sub(lcm, lmf), one / lcf) - g.shift(_sub(lcm, lmg), one / lcg)


# ---------------------------------------------------------------------------
# Buchberger


def buchberger(gens, strategy="normal", ring=None):
    """Complete gens to a Groebner basis.

    ``strategy`` picks the next S-pair: "normal" takes the smallest lcm
    (degree first), "first" processes pairs in creation order.  Both reach the
    same reduced basis after reduce_basis; the acceptance suite relies on
    that agreement.
    """
    if strategy not in ("normal", "first"):
        raise ValueError(f"unknown strategy {strategy!r}")
    gens = list(gens)
    basis = [g.monic() for g in gens if g]
    if not basis:
        if ring is None and gens:
            ring = gens[0].ring
        if ring is None:
            raise ValueError("an empty generator list needs an explicit ring")
        return GroebnerBasis(ring, ())
    ring = basis[0].ring
    key = ring.key

    pairs = []
    counter = 0

    def push(i, j):
        nonlocal counter
        lcm = _lcm(basis[i].leading_monomial(), basis[j].leading_monomial())
        if strategy == "normal":
            entry = (sum(lcm), key(lcm), counter, i, j)
        else:
            entry = (counter, 0, 0, i, j)
        heapq.heappush(pairs, entry)
        counter += 1

    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            push(i, j)

    done = set()
    while pairs:
        *_, i, j = heapq.heappop(pairs)
        lmi = basis[i].leading_monomial()
        lmj = basis[j].leading_monomial()
        lcm = _lcm(lmi, lmj)
        done.add((i, j))
        if lcm == _add(lmi, lmj):
            continue  # coprime leading monomials: S-polynomial reduces to zero
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if not _divides(basis[k].leading_monomial(), lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done:
                skip = True  # chain criterion, only against treated pairs
                break
        if skip:
            continue
        r = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if r:
            basis.append(r.monic())
            new = len(basis) - 1
            for k in range(new):
                push(k, new)
    return GroebnerBasis(ring, tuple(basis))


def reduce_basis(gb):
    """The unique reduced basis: monic, minimal, pairwise tail-reduced."""
    basis = gb.basis if isinstance(gb, GroebnerBasis) else tuple(gb)
    ring = gb.ring if isinstance(gb, GroebnerBasis) else basis[0].ring
    key = ring.key
    polys = sorted((g.monic() for g in basis if g), key=lambda g: key(g.leading_monomial()))
    kept = []
    for g in polys:
        if not any(_divides(h.leading_monomial(), g.leading_monomial()) for h in kept):
            kept.append(g)
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1 :]
            r = normal_form(kept[i], others)
            if r != kept[i]:
                kept[i] = r.monic()
                changed = True
    kept.sort(key=lambda g: key(g.leading_monomial()))
    return GroebnerBasis(ring, tuple(kept), reduced=True)


_GB_CACHE = {}
_GB_LOCK = threading.Lock()


def _cache_key(I):
    return (I.ring, frozenset(g.terms for g in I.generators))


def groebner_basis(I):
    """Reduced Groebner basis of I, shared through a synchronized cache."""
    key = _cache_key(I)
    with _GB_LOCK:
        got = _GB_CACHE.get(key)
    if got is not None:
        return got
    if not I.generators:
        gb = GroebnerBasis(I.ring, (), reduced=True)
    else:
        gb = reduce_basis(buchberger(I.generators))
    with _GB_LOCK:
        _GB_CACHE.setdefault(key, gb)
    return gb


def _register_gb(I, gb):
    with _GB_LOCK:
        _GB_CACHE.setdefault(_cache_key(I), gb)


def clear_cache():
    with _GB_LOCK:
        _GB_CACHE.clear()


# ---------------------------------------------------------------------------
# ideal calculus


def ideal_member(f, I):
    return not normal_form(f, groebner_basis(I))


def ideal_equal(I, J):
    return groebner_basis(I).basis == groebner_basis(J).basis


def ideal_sum(I, J):
    if I.ring != J.ring:
        raise ValueError("mixed rings")
    return ideal(I.ring, I.generators + J.generators)


def _fresh_aux_name(ring):
    name = "t"
    while name in ring.names:
        name += "_"
    return name


def intersect(I, J):
    """I ∩ J via elimination: compute t·I + (1-t)·J and drop the auxiliary t.

    The auxiliary variable is prepended in a 2-block order (t-block dominant,
    degrevlex within blocks); the t-free part of the reduced basis generates
    the intersection, and for degrevlex base rings it already IS its reduced
    basis, which is registered in the cache.
    """
    if I.ring != J.ring:
        raise ValueError("mixed rings")
    ring = I.ring
    if not I.generators or not J.generators:
        return ideal(ring, ())
    aux = _fresh_aux_name(ring)
    order = MonomialOrder(
        "block", (0,) + tuple(p + 1 for p in ring.order.priority), block=1
    )
    ring_t = Ring((aux,) + ring.names, order, ring.field)
    embed = lambda m: (0,) + m
    t = ring_t.var(aux)
    one_minus_t = ring_t.one() - t
    gens = [t * g.map_exponents(ring_t, embed) for g in I.generators]
    gens += [one_minus_t * h.map_exponents(ring_t, embed) for h in J.generators]
    gb = reduce_basis(buchberger(gens))
    kept = [p for p in gb.basis if all(m[0] == 0 for m, _ in p.terms)]
    projected = tuple(p.map_exponents(ring, lambda m: m[1:]) for p in kept)
    result = ideal(ring, projected)
    if ring.order.kind == "degrevlex":
        _register_gb(result, GroebnerBasis(ring, projected, reduced=True))
    return result


def colon_element(I, f):
    """I : f = { g : g·f ∈ I }, computed as (1/f) · (I ∩ (f))."""
    if not f:
        raise ZeroDivisorArgument("colon by the zero polynomial")
    inter = intersect(I, ideal(I.ring, (f,)))
    return ideal(I.ring, tuple(divide_exact(g, f) for g in inter.generators))


def colon_ideal(I, J):
    """I : J as the intersection of the element colons over J's generators."""
    if I.ring != J.ring:
        raise ValueError("mixed rings")
    if not J.generators:
        return ideal(I.ring, (I.ring.one(),))
    result = None
    for g in J.generators:
        c = colon_element(I, g)
        result = c if result is None else intersect(result, c)
    return result


def degree1_part(I):
    """A basis of the degree-1 component of a homogeneous ideal.

    Read off the reduced basis: its degree-1 elements span the whole linear
    part and are already in reduced row echelon form with respect to the
    variable order.
    """
    for g in I.generators:
        if not g.is_homogeneous():
            raise NotHomogeneous(f"generator {g} is not homogeneous")
    gb = groebner_basis(I)
    if any(g.total_degree() == 0 for g in gb.basis):
        return list(I.ring.gens())  # unit ideal: linear part is everything
    return [g for g in gb.basis if g.total_degree() == 1]


def is_generated_by_linear_forms(I):
    return ideal_equal(I, ideal(I.ring, tuple(degree1_part(I))))
