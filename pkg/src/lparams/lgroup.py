"""The L-group attached to an inner class of real forms.

Only the inner class of the real form enters: a based involutive automorphism
of the group's datum. The L-group is the dual group extended by an order-two
element delta acting through the distinguished involution theta0 of the dual
datum. Two constructors are offered: from tau (the automorphism whose
transpose is theta0) or from gamma (the image of the Cartan involution in the
outer automorphism group), related by tau = -w0 composed with gamma.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from itertools import combinations
from typing import List, Optional

from .errors import InputError, NotInvolution
from .intlinalg import ident, mat_mul, mat_neg
from .rootdata import (
    BasedAut,
    RootDatum,
    based_aut,
    coaction,
    compose_aut,
    dual_datum,
    identity_aut,
    transpose_aut,
)
from .tits import TitsContext, tits_context
from .weyl import neg_w0_aut, weyl_enumerate


@dataclass(frozen=True)
class LGroup:
    dual_datum: RootDatum
    theta0: BasedAut
    g_datum: RootDatum = field(compare=False)


def lgroup_from_tau(d: RootDatum, tau: BasedAut) -> LGroup:
    """L-group with theta0 the transpose of tau; tau must be a based involution of d."""
    if tau.datum != d:
        raise InputError("tau is not an automorphism of the given datum")
    if mat_mul(tau.matrix, tau.matrix) != ident(d.rank):
        raise NotInvolution("tau does not square to the identity")
    theta0 = transpose_aut(tau)
    return LGroup(dual_datum(d), theta0, d)


def build_lgroup(d: RootDatum, inner: Optional[BasedAut] = None, *,
                 tau: Optional[BasedAut] = None) -> LGroup:
    """Constructor taking the inner class gamma, or tau directly (tau = -w0 gamma)."""
    if (inner is None) == (tau is None):
        raise InputError("give exactly one of inner (gamma) or tau")
    if tau is None:
        if inner.datum != d:
            raise InputError("inner is not an automorphism of the given datum")
        if mat_mul(inner.matrix, inner.matrix) != ident(d.rank):
            raise NotInvolution("inner class automorphism is not an involution")
        tau = compose_aut(neg_w0_aut(d), inner)
    return lgroup_from_tau(d, tau)


def lgroup_split(d: RootDatum) -> LGroup:
    return lgroup_from_tau(d, identity_aut(d))


def lgroup_compact(d: RootDatum) -> LGroup:
    """Inner class of the compact form: theta is inner, tau = -w0."""
    return lgroup_from_tau(d, neg_w0_aut(d))


def parse_inner_class(d: RootDatum, text) -> LGroup:
    """Inner-class field of input files: "split", "compact", or an explicit matrix."""
    if isinstance(text, str):
        name = text.strip().lower()
        if name == "split":
            return lgroup_split(d)
        if name == "compact":
            return lgroup_compact(d)
        raise InputError(f"unknown inner class {text!r}")
    try:
        mat = tuple(tuple(int(x) for x in row) for row in text)
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad inner class matrix: {text!r}") from exc
    return build_lgroup(d, based_aut(d, mat))


@cache
def lgroup_tits_context(L: LGroup) -> TitsContext:
    return tits_context(L.dual_datum, L.theta0)


def has_compact_cartan(L: LGroup) -> bool:
    """True iff some w makes w . theta0 act as inversion on the dual torus."""
    n = L.dual_datum.rank
    target = mat_neg(ident(n))
    nmat = coaction(L.theta0)
    return any(mat_mul(w.matrix, nmat) == target for w in weyl_enumerate(L.dual_datum))


@dataclass(frozen=True)
class StandardLevi:
    subset: frozenset

    def sorted_indices(self):
        return tuple(sorted(self.subset))

    def __repr__(self):
        return f"StandardLevi({sorted(self.subset)})"


def standard_levis(L: LGroup) -> List[StandardLevi]:
    """All theta0-stable subsets of simple indices, smallest first."""
    m = L.dual_datum.nsimple
    perm = L.theta0.perm
    out = []
    for size in range(m + 1):
        for combo in combinations(range(1, m + 1), size):
            s = frozenset(combo)
            if all(perm[i - 1] in s for i in s):
                out.append(StandardLevi(s))
    return out
