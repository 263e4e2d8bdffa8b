"""Parameters for the real Weil group in aligned position, and their invariants.

A parameter is stored by the data (lambda, mu, w): the restriction to the
connected part is z -> z^lambda zbar^{theta(lambda)} into the dual torus, and
the extra generator goes to exp(2*pi*i*mu) sigma_w delta. Validity is the
translation of "these formulas define a homomorphism" into three exact
conditions, each raised as its own error. All invariants (infinitesimal and
radical characters, the central-character class, discrete-series and Levi
structure) and the two dualities (composition with the Chevalley involution,
precomposition with j -> j^{-1}) are computed through the Tits group, so
every half-integer correction is tracked exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Q
from random import Random
from typing import List, Sequence, Tuple

from .errors import (
    ContextMismatch,
    InputError,
    NormalizationRequired,
    NotInvolution,
    ValidityC,
    ValidityE,
    ValidityIntegrality,
)
from .gaussian import GaussQ, GVec, as_gauss, format_gauss, gvec, gvec_neg, parse_gauss
from .intlinalg import (
    descend_map,
    ident,
    in_span_z,
    mat_mul,
    mat_vec,
    nullspace,
    saturation_projection,
    solve_congruence,
    transpose,
    vadd,
    vdot,
    vscale,
    vsub,
)
from .lgroup import LGroup, StandardLevi, lgroup_tits_context, parse_inner_class
from .rootdata import (
    RootDatum,
    all_coroots,
    all_roots,
    based_aut,
    build_datum,
    coaction,
    compose_aut,
    expand_in_simples,
    rho_check,
    transpose_aut,
    xcostar_reflections,
)
from .tits import (
    ExtTitsElem,
    TorusPart,
    chevalley,
    sigma,
    tits_inverse,
    tits_mul,
    torus_elem,
    torus_part,
)
from .torus import (
    TorusCharData,
    TorusParam,
    char_equal,
    param_to_char,
    torus_contragredient,
    torus_egroup,
    torus_param,
)
from .weyl import (
    WeylElem,
    apply_aut_to_weyl,
    neg_w0_aut,
    weyl_act,
    weyl_enumerate,
    weyl_from_word,
    weyl_identity,
    weyl_mul,
)


@dataclass(frozen=True)
class LParam:
    L: LGroup
    lam: GVec
    mu: TorusPart
    w: WeylElem
    theta: Tuple[Tuple[int, ...], ...] = field(compare=False)

    def __repr__(self):
        return (f"LParam(lambda={[str(x) for x in self.lam]}, "
                f"mu={[str(x) for x in self.mu.entries]}, w={list(self.w.word)})")


def _theta_of(L: LGroup, w: WeylElem):
    return mat_mul(w.matrix, coaction(L.theta0))


def _pair(alpha, lam: GVec) -> GaussQ:
    return sum((a * x for a, x in zip(alpha, lam)), start=as_gauss(0))


def _coerce_parts(L: LGroup, lam, mu, w):
    d = L.dual_datum
    if isinstance(w, (list, tuple)):
        w = weyl_from_word(d, w)
    if w.datum != d:
        raise ContextMismatch("Weyl part over a different datum")
    lam = gvec(lam)
    if not isinstance(mu, TorusPart):
        mu = torus_part(mu)
    if len(lam) != d.rank or len(mu.entries) != d.rank:
        raise InputError("lambda/mu length does not match the dual rank")
    return lam, mu, w


def validity_rows(L: LGroup, lam, mu, w) -> List[Tuple[str, bool, str, type]]:
    """All validity verdicts: (name, passed, detail, error class to raise)."""
    d = L.dual_datum
    lam, mu, w = _coerce_parts(L, lam, mu, w)
    rows: List[Tuple[str, bool, str, type]] = []

    tw = apply_aut_to_weyl(L.theta0, w)
    c_ok = weyl_mul(w, tw) == weyl_identity(d)
    rows.append(("twisted-involution", c_ok,
                 "w . theta0(w) = e" if c_ok else "w . theta0(w) != e", ValidityC))
    theta = _theta_of(L, w)
    inv_ok = mat_mul(theta, theta) == ident(d.rank)
    rows.append(("theta-involution", inv_ok,
                 "theta^2 = 1" if inv_ok else "theta^2 != 1", NotInvolution))
    if not (c_ok and inv_ok):
        return rows

    dif = tuple(a - b for a, b in zip(lam, mat_vec(theta, lam)))
    int_ok = all(v.is_rational() and v.re.denominator == 1 for v in dif)
    rows.append(("integrality", int_ok,
                 "lambda - theta(lambda) in Z^n" if int_ok
                 else "lambda - theta(lambda) not in Z^n", ValidityIntegrality))
    if not int_ok:
        return rows

    rc = rho_check(d)
    lhs = vadd(vscale(Q(2), vadd(mu.entries, mat_vec(theta, mu.entries))),
               vsub(rc, weyl_act(w, rc)))
    gap = vsub(lhs, tuple(v.re for v in dif))
    e_ok = all((x / 2).denominator == 1 for x in gap)
    rows.append(("parity", e_ok,
                 "2(mu + theta(mu)) + (rho_check - w rho_check) = "
                 "lambda - theta(lambda) mod 2Z^n" if e_ok else
                 "2(mu + theta(mu)) + (rho_check - w rho_check) != "
                 "lambda - theta(lambda) mod 2Z^n", ValidityE))
    return rows


def make_param(L: LGroup, lam, mu, w) -> LParam:
    """Validate (lambda, mu, w) against the homomorphism conditions."""
    lam, mu, w = _coerce_parts(L, lam, mu, w)
    for name, ok, detail, err in validity_rows(L, lam, mu, w):
        if not ok:
            raise err(detail)
    return LParam(L, lam, mu, w, _theta_of(L, w))


def phi_j(p: LParam) -> ExtTitsElem:
    """The image of j in the extended Tits group: exp(2*pi*i*mu) sigma_w delta."""
    return ExtTitsElem(lgroup_tits_context(p.L), p.mu, p.w, 1)


def _from_phi_j(L: LGroup, lam, g: ExtTitsElem) -> LParam:
    assert g.eps == 1
    return make_param(L, lam, g.t, g.w)


def conjugate_param(p: LParam, by) -> LParam:
    """Conjugate by a torus element (TorusPart) or a Weyl element's canonical lift."""
    ctx = lgroup_tits_context(p.L)
    if isinstance(by, TorusPart):
        g = tits_mul(tits_mul(torus_elem(ctx, by), phi_j(p)), torus_elem(ctx, -by))
        return _from_phi_j(p.L, p.lam, g)
    if isinstance(by, WeylElem):
        if by.datum != p.L.dual_datum:
            raise ContextMismatch("conjugator over a different datum")
        s = sigma(ctx, by)
        g = tits_mul(tits_mul(s, phi_j(p)), tits_inverse(s))
        lam = tuple(mat_vec(by.matrix, p.lam))
        return _from_phi_j(p.L, lam, g)
    raise InputError("conjugator must be a TorusPart or a WeylElem")


def params_equivalent(p: LParam, q: LParam) -> bool:
    """Conjugacy under the torus and the normalizer: brute force over W plus a lattice solve."""
    if p.L != q.L:
        raise ContextMismatch("parameters for different L-groups")
    n = p.L.dual_datum.rank
    for u in weyl_enumerate(p.L.dual_datum):
        if tuple(mat_vec(u.matrix, p.lam)) != tuple(q.lam):
            continue
        pc = conjugate_param(p, u)
        if pc.w != q.w:
            continue
        one_minus = tuple(tuple((1 if r == c else 0) - q.theta[r][c] for c in range(n))
                          for r in range(n))
        if solve_congruence(one_minus, vsub(q.mu.entries, pc.mu.entries)) is not None:
            return True
    return False


# ---------------------------------------------------------------------------
# invariants

def _lex_nonneg(val: GaussQ) -> bool:
    return val.re > 0 or (val.re == 0 and val.im >= 0)


def dominant_rep(d: RootDatum, vec: GVec) -> GVec:
    """Dominant representative of the W-orbit, for vectors on the cocharacter side.

    Dominance is taken for the lexicographic order on (real, imaginary) parts
    of each simple pairing; that order linearizes the orbit like a field
    order, so the dominant point is unique and greedy ascent reaches it.
    """
    v = tuple(gvec(vec))
    refls = xcostar_reflections(d)
    guard = len(all_roots(d)) + 1
    for _ in range(guard):
        i = next((k for k in range(d.nsimple)
                  if not _lex_nonneg(_pair(d.simple_roots[k], v))), None)
        if i is None:
            return v
        v = tuple(mat_vec(refls[i], v))
    raise AssertionError("dominance ascent failed to terminate")


def inf_char(p: LParam) -> GVec:
    return dominant_rep(p.L.dual_datum, p.lam)


def rad_param(p: LParam) -> TorusParam:
    """Push the parameter through the surjection onto the radical-torus E-group.

    The radical cocharacter lattice is X_* modulo the saturated coroot
    lattice; theta descends because it permutes coroots up to sign.
    """
    d = p.L.dual_datum
    proj, uinv, rank = saturation_projection(d.simple_coroots, d.rank)
    th_rad = descend_map(proj, uinv, rank, p.theta)
    eg = torus_egroup(th_rad, (Q(0),) * len(proj))
    lam_q = tuple(mat_vec(proj, p.lam))
    mu_q = torus_part(mat_vec(proj, p.mu.entries))
    return torus_param(eg, lam_q, mu_q)


def rad_char(p: LParam) -> TorusCharData:
    return param_to_char(rad_param(p))


def _imaginary_group_roots(p: LParam) -> List[Tuple[Q, ...]]:
    """Roots of the group itself (coroots of the dual datum) negated by theta."""
    return [c for c in sorted(all_coroots(p.L.dual_datum))
            if tuple(mat_vec(p.theta, c)) == tuple(-x for x in c)]


def _rho_imaginary(p: LParam, base: int) -> Tuple[Q, ...]:
    """Half-sum of the imaginary roots made positive by a functional (1, t, t^2, ...)."""
    imag = _imaginary_group_roots(p)
    n = p.L.dual_datum.rank
    t = base
    while True:
        f = tuple(Q(t) ** k for k in range(n))
        vals = [vdot(f, r) for r in imag]
        if all(v != 0 for v in vals):
            half = (Q(0),) * n
            for r, v in zip(imag, vals):
                if v > 0:
                    half = vadd(half, r)
            return vscale(Q(1, 2), half)
        t += 1


def central_char(p: LParam, functional_base: int = 2) -> Tuple[Q, ...]:
    """Representative of the central-character class.

    tau = (1/2)(1-theta)lambda - (1+theta)mu + rho_i, where rho_i is the
    half-sum of a positive system of theta-negated roots. The class lives
    modulo root lattice + (1-theta)Z^n + (1+theta)Z^n; the last summand
    absorbs the Z^n-ambiguity of mu, and any two positive systems differ by a
    root-lattice element, so the class is representative-independent.
    """
    dif = tuple(a - b for a, b in zip(p.lam, mat_vec(p.theta, p.lam)))
    half = tuple((as_gauss(x) * Q(1, 2)).re for x in dif)
    mu_plus = vadd(p.mu.entries, mat_vec(p.theta, p.mu.entries))
    return vadd(vsub(half, mu_plus), _rho_imaginary(p, functional_base))


def central_modulus_gens(p: LParam) -> List[Tuple[int, ...]]:
    d = p.L.dual_datum
    n = d.rank
    gens = [tuple(c) for c in d.simple_coroots]
    for sign in (-1, 1):
        mat = tuple(tuple((1 if r == c else 0) + sign * p.theta[r][c] for c in range(n))
                    for r in range(n))
        gens.extend(tuple(mat[r][c] for r in range(n)) for c in range(n))
    return gens


def central_chars_agree(p: LParam, t1: Sequence[Q], t2: Sequence[Q]) -> bool:
    diff = vsub(tuple(t1), tuple(t2))
    if any(x.denominator != 1 for x in diff):
        return False
    return in_span_z(diff, central_modulus_gens(p))


def is_discrete_series(p: LParam) -> bool:
    """lambda regular, and theta acts as inversion on the derived part."""
    d = p.L.dual_datum
    for alpha in all_roots(d):
        if _pair(alpha, p.lam).is_zero():
            return False
    for c in d.simple_coroots:
        if tuple(mat_vec(p.theta, c)) != tuple(-x for x in c):
            return False
    return True


# ---------------------------------------------------------------------------
# Levi reduction

def _s_hat_roots(p: LParam) -> List[Tuple[int, ...]]:
    """Dual-group roots pairing to zero against both lambda and theta(lambda)."""
    th_lam = tuple(mat_vec(p.theta, p.lam))
    return [alpha for alpha in sorted(all_roots(p.L.dual_datum))
            if _pair(alpha, p.lam).is_zero() and _pair(alpha, th_lam).is_zero()]


def _levi_subsystem(d: RootDatum, subset: frozenset) -> frozenset:
    """Roots supported on the given simple indices."""
    keep = set()
    for alpha in all_roots(d):
        coeffs = expand_in_simples(d, alpha)
        if all(c == 0 or (i + 1) in subset for i, c in enumerate(coeffs)):
            keep.add(alpha)
    return frozenset(keep)


def levi_of(p: LParam) -> Tuple[StandardLevi, LParam]:
    """Standardize the Levi the parameter factors through, staying in the normalizer.

    A centralizer root negated by theta means the centralizer torus is bigger
    than the theta-fixed part of the dual torus; moving it to standard
    position would take a Cayley transform outside the normalizer, which is
    not modeled, so NormalizationRequired is raised with the root as witness.
    """
    d = p.L.dual_datum
    th_star = transpose(p.theta)
    for alpha in _s_hat_roots(p):
        if tuple(mat_vec(th_star, alpha)) == tuple(-x for x in alpha):
            raise NormalizationRequired(
                "centralizer root is negated by theta; a Cayley move would be needed",
                witness=alpha)
    n = d.rank
    minus = tuple(tuple(p.theta[r][c] - (1 if r == c else 0) for c in range(n))
                  for r in range(n))
    fixed_basis = nullspace(minus)
    mset = frozenset(alpha for alpha in all_roots(d)
                     if all(vdot(alpha, v) == 0 for v in fixed_basis))
    perm = p.L.theta0.perm
    for u in weyl_enumerate(d):
        image = frozenset(tuple(weyl_act(u, alpha, side="X^*")) for alpha in mset)
        subset = frozenset(i + 1 for i in range(d.nsimple) if d.simple_roots[i] in image)
        if any(perm[i - 1] not in subset for i in subset):
            continue
        if _levi_subsystem(d, subset) == image:
            return StandardLevi(subset), conjugate_param(p, u)
    raise InputError("no Weyl element standardizes the Levi")


# ---------------------------------------------------------------------------
# dualities

def contragredient_param(p: LParam) -> LParam:
    """Compose with the Chevalley involution: lambda -> -lambda, phi(j) -> C(phi(j))."""
    g = chevalley(phi_j(p))
    assert g.w == p.w and g.eps == 1
    return _from_phi_j(p.L, gvec_neg(p.lam), g)


def tau_twist_param(p: LParam) -> LParam:
    """Precompose with z -> z^{-1}, j -> j^{-1}: lambda -> -lambda, phi(j) -> phi(j)^{-1}."""
    g = tits_inverse(phi_j(p))
    assert g.w == p.w and g.eps == 1
    return _from_phi_j(p.L, gvec_neg(p.lam), g)


# ---------------------------------------------------------------------------
# descriptors and the theorem report

@dataclass(frozen=True)
class PacketDescriptor:
    levi: StandardLevi
    inf: GVec
    rad: TorusCharData


def packet_descriptor(p: LParam) -> PacketDescriptor:
    levi, reduced = levi_of(p)
    return PacketDescriptor(levi, inf_char(reduced), rad_char(reduced))


def verify_contragredient(p: LParam) -> List[Tuple[str, bool, str]]:
    """The four contragredient checks; each row is (name, passed, detail)."""
    d = p.L.dual_datum
    cp = contragredient_param(p)
    rows = []

    want = dominant_rep(d, gvec_neg(inf_char(p)))
    got = inf_char(cp)
    rows.append(("inf_char negation", got == want,
                 f"inf(C)={_fmt_vec(got)} dominant(-inf)={_fmt_vec(want)}"))

    rc_c = rad_char(cp)
    rc_dual = param_to_char(torus_contragredient(rad_param(p)))
    rows.append(("rad_char dual", char_equal(rc_c, rc_dual),
                 f"kappa(C)={[str(x) for x in rc_c.kappa]} "
                 f"kappa(dual)={[str(x) for x in rc_dual.kappa]}"))

    tp = tau_twist_param(p)
    rows.append(("C-twist vs tau-twist conjugacy", params_equivalent(cp, tp),
                 f"C: mu={[str(x) for x in cp.mu.entries]} "
                 f"tau: mu={[str(x) for x in tp.mu.entries]}"))

    tau_p = central_char(p)
    tau_c = central_char(cp)
    flip = central_chars_agree(p, tau_c, tuple(-x for x in tau_p))
    rows.append(("central_char flip", flip,
                 f"tau(C)={[str(x) for x in tau_c]} -tau(p)={[str(-x) for x in tau_p]}"))
    return rows


def _fmt_vec(v: GVec) -> str:
    return "(" + ", ".join(format_gauss(x) for x in v) + ")"


# ---------------------------------------------------------------------------
# sampling and serialization

def twisted_involutions(L: LGroup) -> List[WeylElem]:
    """All w with w . theta0(w) = e, in enumeration order."""
    d = L.dual_datum
    return [w for w in weyl_enumerate(d)
            if weyl_mul(w, apply_aut_to_weyl(L.theta0, w)) == weyl_identity(d)]


def random_param(L: LGroup, rng: Random, denominator: int = 4) -> LParam:
    """Seeded valid parameter: pick a twisted involution, then solve for lambda.

    Integrality and the parity congruence combine into one congruence for the
    real part of lambda, handed to the Smith solver; a mu that makes the
    right-hand side non-integral is redrawn. The free directions (even
    vectors and theta-fixed vectors) are randomized for coverage.
    """
    d = L.dual_datum
    n = d.rank
    rc = rho_check(d)
    words = twisted_involutions(L)
    for _ in range(400):
        w = rng.choice(words)
        theta = _theta_of(L, w)
        den = rng.choice([1, 2, 2, denominator])
        mu = torus_part([Q(rng.randrange(-2 * den, 2 * den + 1), den) for _ in range(n)])
        t0 = vadd(vscale(Q(2), vadd(mu.entries, mat_vec(theta, mu.entries))),
                  vsub(rc, weyl_act(w, rc)))
        if any(x.denominator != 1 for x in t0):
            continue
        half = tuple(tuple(Q((1 if r == c else 0) - theta[r][c], 2) for c in range(n))
                     for r in range(n))
        sol = solve_congruence(half, vscale(Q(1, 2), t0))
        if sol is None:
            continue
        lam_re = vadd(sol, [2 * rng.randrange(-2, 3) for _ in range(n)])
        fix = [Q(rng.randrange(-6, 7), rng.choice([1, 2, 3])) for _ in range(n)]
        lam_re = vadd(lam_re, vscale(Q(1, 2), vadd(fix, mat_vec(theta, fix))))
        im_seed = [Q(rng.randrange(-6, 7), rng.choice([1, 2, 3])) for _ in range(n)]
        lam_im = vscale(Q(1, 2), vadd(im_seed, mat_vec(theta, im_seed)))
        lam = tuple(GaussQ(r, i) for r, i in zip(lam_re, lam_im))
        return make_param(L, lam, mu, w)
    raise InputError("could not sample a valid parameter")


def param_to_dict(p: LParam) -> dict:
    g = p.L.g_datum
    theta0 = p.L.theta0
    if theta0.matrix == ident(g.rank):
        inner = "split"
    elif theta0 == transpose_aut(neg_w0_aut(g)):
        inner = "compact"
    else:
        gamma = compose_aut(neg_w0_aut(g), _tau_of(p.L))
        inner = [list(r) for r in gamma.matrix]
    return {
        "group": g.label,
        "inner_class": inner,
        "lambda": [format_gauss(z) for z in p.lam],
        "mu": [str(x) for x in p.mu.entries],
        "w": list(p.w.word),
    }


def _tau_of(L: LGroup):
    return based_aut(L.g_datum, transpose(L.theta0.matrix))


def param_from_dict(data: dict) -> LParam:
    try:
        group = data["group"]
        inner = data["inner_class"]
        lam = [parse_gauss(str(z)) for z in data["lambda"]]
        mu = torus_part([Q(x) for x in data["mu"]])
        word = [int(i) for i in data["w"]]
    except (KeyError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise InputError(f"bad parameter data: {data!r}") from exc
    d = build_datum(group)
    L = parse_inner_class(d, inner)
    return make_param(L, lam, mu, word)
