"""Named checkers, one per claim, returning pass / fail / skipped with a witness.

Most checkers are written as a list of (label, lhs, rhs) claims built from a
variable list.  Symbolic mode compares the claims as polynomials; randomized
mode rebuilds them from constant polynomials at exact random integer points.
"""

from __future__ import annotations

import functools
import random
from dataclasses import asdict, dataclass
from typing import Callable, Sequence

from ..cyclotomic import CycloNumber
from ..detlab import (
    SYMBOLIC_LIMIT,
    circulant_factors,
    frobenius_factors,
    group_matrix,
    inverse_element,
    inverse_factors,
    numeric_det_at,
    point_vars,
    symbolic_det,
    theta_e_factors,
)
from ..group_algebra import (
    AlgebraElement,
    A_values,
    alpha,
    alpha_generic,
    beta,
    beta_x,
    build_A_intro,
    commutator,
    convolve,
    product,
)
from ..groups import FiniteGroup, GroupKind
from ..polyring import Poly, poly_ring
from ..reps import (
    chi_prime,
    fourier_transform,
    irreducible_set,
    is_homomorphism,
    literal_quaternion_reps,
    rep_factor_det,
    rotation_characters,
)
from . import formulas as fm

ABELIAN = frozenset({GroupKind.ABELIAN})
SPLIT = frozenset({GroupKind.DIHEDRAL, GroupKind.QUATERNION})
ANY = ABELIAN | SPLIT
QUATERNION = frozenset({GroupKind.QUATERNION})

Claim = tuple  # (label, lhs, rhs) with Poly or AlgebraElement sides


class UnknownCheckError(KeyError):
    pass


class InapplicableCheckError(ValueError):
    pass


@dataclass
class CheckResult:
    check_id: str
    group: str
    mode: str
    status: str
    trials: int | None = None
    seed: int | None = None
    witness: dict | None = None
    reason: str | None = None
    details: dict | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def to_json(self) -> dict:
        doc = {"id": self.check_id}
        doc.update((k, v) for k, v in asdict(self).items() if k != "check_id" and v is not None)
        return doc


@dataclass(frozen=True)
class RunConfig:
    mode: str  # "symbolic" | "randomized"
    trials: int
    seed: int
    bound: int
    limit: int


@dataclass(frozen=True)
class Checker:
    id: str
    title: str
    families: frozenset
    needs_four: bool = False
    uses_theta: bool = False
    nonsingular: bool = False
    claims: Callable | None = None
    custom: Callable | None = None


# -- randomness -------------------------------------------------------------------


def random_assignment(G: FiniteGroup, seed: int, bound: int) -> dict[int, CycloNumber]:
    """Deterministic integer point in [-bound, bound]^|G| drawn from ``seed``."""
    return next(assignment_stream(G, seed, bound))


def assignment_stream(G: FiniteGroup, seed: int, bound: int):
    if bound < 1:
        raise ValueError("bound must be >= 1")
    F = poly_ring(G).field
    rng = random.Random(seed)
    while True:
        yield {i: F.scalar(rng.randint(-bound, bound)) for i in range(G.order)}


def default_bound(G: FiniteGroup) -> int:
    return 10 * G.order


def _assignment_json(G: FiniteGroup, assign) -> dict[str, str]:
    return {G.name(G.element(i)): str(assign[i]) for i in range(G.order)}


# -- evaluation context -----------------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _symbolic_theta(G: FiniteGroup) -> Poly:
    return symbolic_det(group_matrix(G), limit=G.order)


class Ctx:
    """Variables for one evaluation: symbolic (assign is None) or a point."""

    def __init__(self, G: FiniteGroup, assign=None):
        self.G = G
        self.assign = assign
        self.symbolic = assign is None
        self.x = poly_ring(G).variables() if assign is None else point_vars(G, assign)
        self.ring = self.x[0].ring

    @functools.cached_property
    def theta(self) -> Poly:
        if self.symbolic:
            return _symbolic_theta(self.G)
        return self.ring.const(numeric_det_at(group_matrix(self.G), self.assign))

    @functools.cached_property
    def sums(self) -> fm.Sums:
        return fm.Sums(self.G, self.x)

    @functools.cached_property
    def A(self) -> list[Poly]:
        return A_values(self.G, self.x)

    def alpha(self, n: int) -> AlgebraElement:
        return alpha(self.G, n, self.x)

    def e(self, coeff: Poly | None = None) -> AlgebraElement:
        return AlgebraElement.basis(self.G, self.G.identity, coeff, ring=self.ring)

    def psum(self, polys) -> Poly:
        total = self.ring.zero()
        for p in polys:
            total = total + p
        return total


def _mismatch(G: FiniteGroup, label: str, lhs, rhs) -> dict | None:
    if isinstance(lhs, AlgebraElement):
        for i, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)):
            if a != b:
                return {"claim": label, "element": G.name(G.element(i)), "lhs": str(a), "rhs": str(b)}
        return None
    if lhs != rhs:
        return {"claim": label, "lhs": str(lhs), "rhs": str(rhs)}
    return None


def _claims_at(chk: Checker, ctx: Ctx) -> dict | None:
    for label, lhs, rhs in chk.claims(ctx):
        w = _mismatch(ctx.G, label, lhs, rhs)
        if w is not None:
            return w
    return None


def _run_claims(chk: Checker, G: FiniteGroup, cfg: RunConfig) -> CheckResult:
    res = CheckResult(chk.id, str(G.spec), cfg.mode, "pass")
    if cfg.mode == "symbolic":
        w = _claims_at(chk, Ctx(G))
        if w is not None:
            res.status, res.witness = "fail", w
        return res
    res.trials, res.seed = cfg.trials, cfg.seed
    stream = assignment_stream(G, cfg.seed, cfg.bound)
    done = rejected = 0
    while done < cfg.trials:
        assign = next(stream)
        ctx = Ctx(G, assign)
        if chk.nonsingular and not ctx.theta:
            rejected += 1
            if rejected > 10 * cfg.trials:
                res.status, res.reason = "skipped", "could not draw nonsingular assignments"
                return res
            continue
        w = _claims_at(chk, ctx)
        if w is not None:
            w["assignment"] = _assignment_json(G, assign)
            res.status, res.witness = "fail", w
            return res
        done += 1
    if rejected:
        res.details = {"rejected_singular": rejected}
    return res


# -- claim builders -----------------------------------------------------------------------


def _frobenius(ctx: Ctx) -> list[Claim]:
    total = ctx.ring.one()
    for _, mult, f in frobenius_factors(ctx.G, ctx.x):
        total = total * f ** mult
    return [("Theta(G) = prod det(sum phi(g) x_g)^deg", ctx.theta, total)]


def _abelian_theta_e(ctx: Ctx) -> list[Claim]:
    prod = product(theta_e_factors(ctx.G, ctx.x))
    return [("Theta(G) e = prod_chi sum chi(g) x_g g", prod, ctx.e(ctx.theta))]


def _inverse_claims(ctx: Ctx) -> list[Claim]:
    G = ctx.G
    a1 = alpha_generic(G, ctx.x) if G.kind is GroupKind.ABELIAN else ctx.alpha(1)
    if ctx.symbolic:
        P = product(inverse_factors(G, ctx.x))
        target = ctx.e(ctx.theta)
        return [
            ("alpha_1 * P = Theta(G) e", convolve(a1, P), target),
            ("P * alpha_1 = Theta(G) e", convolve(P, a1), target),
        ]
    inv = inverse_element(G, ctx.assign)
    e = ctx.e()
    return [
        ("inverse * alpha_1 = e", convolve(inv, a1), e),
        ("alpha_1 * inverse = e", convolve(a1, inv), e),
    ]


def _A_vanishing_and_symmetry(ctx: Ctx) -> list[Claim]:
    G, A = ctx.G, ctx.A
    zero = ctx.ring.zero()
    claims = [(f"A_{{{G.name(G.element(h))}}} = 0", A[h], zero) for h in range(G.rotation_order, G.order)]
    claims += [
        (f"A_{{{G.name(G.element(h))}}} = A_{{h^-1}}", A[h], A[G.inv_index(h)]) for h in range(G.order)
    ]
    return claims


def _linear_sum(ctx: Ctx, name: str) -> Poly:
    chi = irreducible_set(ctx.G).character(name)
    return ctx.psum(ctx.x[i].scale(chi.at(i)) for i in range(ctx.G.order))


def _chi_prime_A(ctx: Ctx, chi) -> Poly:
    return ctx.psum(ctx.A[g].scale(chi.at(g)) for g in range(ctx.G.rotation_order))


def _paired_linear_products(ctx: Ctx) -> list[Claim]:
    G = ctx.G
    r = G.rotation_order
    claims = [
        ("(sum chi1 x)(sum chi2 x) = sum_<a> A_h", _linear_sum(ctx, "chi1") * _linear_sum(ctx, "chi2"),
         ctx.psum(ctx.A[h] for h in range(r))),
    ]
    if irreducible_set(G).has_four_linear():
        claims.append(
            ("(sum chi3 x)(sum chi4 x) = sum chi'_{r/2}(h) A_h",
             _linear_sum(ctx, "chi3") * _linear_sum(ctx, "chi4"), _chi_prime_A(ctx, chi_prime(G, r // 2)))
        )
    return claims


def _two_dim_det_as_A_sum(ctx: Ctx) -> list[Claim]:
    G = ctx.G
    claims = []
    for rep in irreducible_set(G).degree_two:
        l = int(rep.name[3:])
        claims.append(
            (f"det(sum {rep.name}(g) x_g) = sum chi'_{l}(h) A_h", rep_factor_det(G, rep, ctx.x),
             _chi_prime_A(ctx, chi_prime(G, l)))
        )
    return claims


def _A_sum_conjugation(ctx: Ctx) -> list[Claim]:
    claims = []
    for chi in rotation_characters(ctx.G):
        conj = ctx.psum(ctx.A[g].scale(chi.at(g).conjugate()) for g in range(ctx.G.rotation_order))
        claims.append((f"sum {chi.name}(g) A_g = sum conj({chi.name}(g)) A_g", _chi_prime_A(ctx, chi), conj))
    return claims


def _circulant_theta(ctx: Ctx) -> list[Claim]:
    total = ctx.ring.one()
    for f in circulant_factors(ctx.G, ctx.x):
        total = total * f
    return [("Theta(G) = prod_chi' sum chi'(g) A_g", ctx.theta, total)]


def _alpha12_product(ctx: Ctx) -> list[Claim]:
    return [("alpha_1 alpha_2 = sum_<a> A_h h", convolve(ctx.alpha(1), ctx.alpha(2)),
             beta(ctx.G, chi_prime(ctx.G, 0), A=ctx.A))]


def _alpha34_product(ctx: Ctx) -> list[Claim]:
    r = ctx.G.rotation_order
    return [("alpha_3 alpha_4 = sum chi'_{r/2}(h) A_h h", convolve(ctx.alpha(3), ctx.alpha(4)),
             beta(ctx.G, chi_prime(ctx.G, r // 2), A=ctx.A))]


def _beta_product(ctx: Ctx) -> list[Claim]:
    G = ctx.G
    betas = theta_e_factors(G, ctx.x)
    target = ctx.e(ctx.theta)
    return [
        ("Theta(G) e = prod_chi' sum chi'(g) A_g g", product(betas), target),
        ("Theta(G) e = alpha_1 alpha_2 prod_{chi' != chi'_0} sum chi'(g) A_g g",
         product([ctx.alpha(1), ctx.alpha(2)] + betas[1:]), target),
    ]


def _subst_chi2(ctx: Ctx) -> list[Poly]:
    G, x = ctx.G, ctx.x
    chi2 = irreducible_set(G).character("chi2")
    r = G.rotation_order
    return [x[G.inv_index(i) if i < r else i].scale(chi2.at(i)) for i in range(G.order)]


def _subst_chi3(ctx: Ctx) -> list[Poly]:
    chi3 = irreducible_set(ctx.G).character("chi3")
    return [ctx.x[i].scale(chi3.at(i)) for i in range(ctx.G.order)]


def _chi2_change_of_variable(ctx: Ctx) -> list[Claim]:
    G = ctx.G
    y = _subst_chi2(ctx)
    claims = [
        ("alpha_1 -> alpha_2", alpha(G, 1, y), ctx.alpha(2)),
        ("alpha_2 -> alpha_1", alpha(G, 2, y), ctx.alpha(1)),
    ]
    if irreducible_set(G).has_four_linear():
        claims += [
            ("alpha_3 -> alpha_4", alpha(G, 3, y), ctx.alpha(4)),
            ("alpha_4 -> alpha_3", alpha(G, 4, y), ctx.alpha(3)),
        ]
    return claims


def _signed_cosets(ctx: Ctx, inverted: bool, off_sign: int) -> AlgebraElement:
    # sum_<a> x_g g (or x_{g^-1}) plus off_sign * sum_{G \ <a>} x_g g
    G, x = ctx.G, ctx.x
    r = G.rotation_order
    coeffs = []
    for i in range(G.order):
        if i < r:
            coeffs.append(x[G.inv_index(i)] if inverted else x[i])
        else:
            coeffs.append(x[i] if off_sign > 0 else -x[i])
    return AlgebraElement(G, ctx.ring, coeffs)


def _chi3_change_of_variable(ctx: Ctx) -> list[Claim]:
    G = ctx.G
    y = _subst_chi3(ctx)
    a3y, a4y = alpha(G, 3, y), alpha(G, 4, y)
    if ctx.sums.i_valued():
        a3_target = _signed_cosets(ctx, inverted=False, off_sign=-1)
        a4_target = _signed_cosets(ctx, inverted=True, off_sign=+1)
    else:
        a3_target, a4_target = ctx.alpha(1), ctx.alpha(2)
    return [
        ("alpha_1 -> alpha_3", alpha(G, 1, y), ctx.alpha(3)),
        ("alpha_2 -> alpha_4", alpha(G, 2, y), ctx.alpha(4)),
        ("alpha_3 -> stated image", a3y, a3_target),
        ("alpha_4 -> stated image", a4y, a4_target),
        ("alpha_3 + alpha_4 -> alpha_1 + alpha_2", a3y + a4y, ctx.alpha(1) + ctx.alpha(2)),
    ]


def _conj_pair_sums(ctx: Ctx) -> list[Claim]:
    S = ctx.sums
    G = ctx.G
    return [(f"h = {G.name(G.element(h))}", fm.conj_pair_lhs(S, h), fm.conj_pair_rhs(S, h)) for h in S.rot]


def _coset_swap_sums(ctx: Ctx) -> list[Claim]:
    S = ctx.sums
    G = ctx.G
    return [(f"h = {G.name(G.element(h))}", fm.coset_swap_lhs(S, h), fm.coset_swap_rhs(S, h)) for h in S.off]


def _zero(ctx: Ctx) -> AlgebraElement:
    return AlgebraElement.zero(ctx.G, ctx.ring)


def _alpha12_commute(ctx: Ctx) -> list[Claim]:
    return [("[alpha_1, alpha_2] = 0", commutator(ctx.alpha(1), ctx.alpha(2)), _zero(ctx))]


def _alpha34_commute(ctx: Ctx) -> list[Claim]:
    return [("[alpha_3, alpha_4] = 0", commutator(ctx.alpha(3), ctx.alpha(4)), _zero(ctx))]


def _coeff_claims(ctx: Ctx, comm: AlgebraElement, formula, elements: Sequence[int], what: str) -> list[Claim]:
    G = ctx.G
    return [(f"{what} at {G.name(G.element(h))}", comm.coeffs[h], formula(h)) for h in elements]


def _comm13_expansion(ctx: Ctx) -> list[Claim]:
    S = ctx.sums
    comm = commutator(ctx.alpha(1), ctx.alpha(3))
    return _coeff_claims(ctx, comm, lambda h: fm.comm13_expansion(S, h), S.all, "[alpha_1, alpha_3]")


def _odd_rotation_sums(ctx: Ctx) -> list[Claim]:
    S = ctx.sums
    G = ctx.G
    zero = ctx.ring.zero()
    return [(f"h = {G.name(G.element(k))}", fm.odd_rotation_sum(S, k), zero) for k in S.rot if k % 2]


def _comm13_rotation(ctx: Ctx) -> list[Claim]:
    S = ctx.sums
    comm = commutator(ctx.alpha(1), ctx.alpha(3))
    return _coeff_claims(ctx, comm, lambda h: fm.comm13_rotation_coeff(S, h), S.rot, "[alpha_1, alpha_3]")


def _comm13_coset(ctx: Ctx) -> list[Claim]:
    S = ctx.sums
    G = ctx.G
    comm = commutator(ctx.alpha(1), ctx.alpha(3))
    return [
        (f"[alpha_1, alpha_3] at {G.name(G.a_pow_b(k))}", comm.coeffs[S.mul(k, S.b)], fm.comm13_coset_coeff(S, k))
        for k in S.rot
    ]


def _comm14_expansion(ctx: Ctx) -> list[Claim]:
    S = ctx.sums
    comm = commutator(ctx.alpha(1), ctx.alpha(4))
    return _coeff_claims(ctx, comm, lambda h: fm.comm14_expansion(S, h), S.all, "[alpha_1, alpha_4]")


def _comm14_rotation(ctx: Ctx) -> list[Claim]:
    S = ctx.sums
    comm = commutator(ctx.alpha(1), ctx.alpha(4))
    return _coeff_claims(ctx, comm, lambda h: fm.comm14_rotation_coeff(S, h), S.rot, "[alpha_1, alpha_4]")


def _comm14_coset(ctx: Ctx) -> list[Claim]:
    S = ctx.sums
    G = ctx.G
    comm = commutator(ctx.alpha(1), ctx.alpha(4))
    return [
        (f"[alpha_1, alpha_4] at {G.name(G.a_pow_b(k))}", comm.coeffs[S.mul(k, S.b)], fm.comm14_coset_coeff(S, k))
        for k in S.rot
    ]


def _sum_pairs_commute(ctx: Ctx) -> list[Claim]:
    a1, a2, a3, a4 = (ctx.alpha(n) for n in (1, 2, 3, 4))
    zero = _zero(ctx)
    return [
        ("[alpha_1, alpha_3 + alpha_4] = 0", commutator(a1, a3 + a4), zero),
        ("[alpha_2, alpha_3 + alpha_4] = 0", commutator(a2, a3 + a4), zero),
        ("[alpha_3, alpha_1 + alpha_2] = 0", commutator(a3, a1 + a2), zero),
        ("[alpha_4, alpha_1 + alpha_2] = 0", commutator(a4, a1 + a2), zero),
    ]


def _coefficient_cancellation(ctx: Ctx) -> list[Claim]:
    # the a^k and a^k b parts of [alpha_1, alpha_3 + alpha_4] from the closed forms alone
    S = ctx.sums
    G = ctx.G
    zero = ctx.ring.zero()
    claims = [
        (f"closed forms cancel at {G.name(G.element(k))}",
         fm.comm13_rotation_coeff(S, k) + fm.comm14_rotation_coeff(S, k), zero) for k in S.rot
    ]
    claims += [
        (f"closed forms cancel at {G.name(G.a_pow_b(k))}",
         fm.comm13_coset_coeff(S, k) + fm.comm14_coset_coeff(S, k), zero) for k in S.rot
    ]
    return claims


def _pairing_claims(ctx: Ctx) -> list[Claim]:
    claims = _alpha12_commute(ctx)
    if irreducible_set(ctx.G).has_four_linear():
        claims += _alpha34_commute(ctx) + _sum_pairs_commute(ctx)
    return claims


# -- custom checkers ------------------------------------------------------------------------


def _check_reps(G: FiniteGroup, cfg: RunConfig) -> CheckResult:
    reps = irreducible_set(G)
    res = CheckResult("REPS", str(G.spec), cfg.mode, "pass")
    total = sum(d * d for d in reps.degrees())
    if total != G.order:
        res.status, res.witness = "fail", {"sum_of_squared_degrees": total, "order": G.order}
        return res
    if G.kind is not GroupKind.ABELIAN:
        m = G.spec.m
        if G.kind is GroupKind.DIHEDRAL:
            expected = 2 + (m - 1) // 2 if m % 2 else 4 + m // 2 - 1
        else:
            expected = 4 + (m - 1)
        if len(reps.all) != expected:
            res.status, res.witness = "fail", {"count": len(reps.all), "expected": expected}
            return res
    for rep in reps.all:
        if not is_homomorphism(rep):
            res.status, res.witness = "fail", {"representation": rep.name}
            return res
    for chi in rotation_characters(G) if G.kind is not GroupKind.ABELIAN else []:
        if not is_homomorphism(chi):
            res.status, res.witness = "fail", {"representation": chi.name}
            return res
    res.details = {"degrees": reps.degrees()}
    return res


def _fourier_mismatch(G, reps, f, h) -> dict | None:
    lhs = fourier_transform(convolve(f, h), reps)
    rhs = fourier_transform(f, reps) * fourier_transform(h, reps)
    for rep, a, b in zip(reps.all, lhs.blocks, rhs.blocks):
        if a != b:
            return {"representation": rep.name, "lhs": str(a), "rhs": str(b)}
    return None


def _check_fourier(G: FiniteGroup, cfg: RunConfig) -> CheckResult:
    reps = irreducible_set(G)
    ring = poly_ring(G)
    res = CheckResult("T3.1.2", str(G.spec), cfg.mode, "pass")
    if cfg.mode == "symbolic":
        # bilinearity reduces the ring property to basis pairs
        basis = [AlgebraElement.basis(G, g, ring=ring) for g in G.elements()]
        for i, f in enumerate(basis):
            for j, h in enumerate(basis):
                w = _fourier_mismatch(G, reps, f, h)
                if w is not None:
                    w["pair"] = [G.name(G.element(i)), G.name(G.element(j))]
                    res.status, res.witness = "fail", w
                    return res
        res.details = {"basis_pairs": G.order ** 2}
        return res
    res.trials, res.seed = cfg.trials, cfg.seed
    rng = random.Random(cfg.seed)
    for _ in range(cfg.trials):
        f = AlgebraElement(G, ring, [ring.const(rng.randint(-cfg.bound, cfg.bound)) for _ in range(G.order)])
        h = AlgebraElement(G, ring, [ring.const(rng.randint(-cfg.bound, cfg.bound)) for _ in range(G.order)])
        w = _fourier_mismatch(G, reps, f, h)
        if w is not None:
            w["f"] = [str(c) for c in f.coeffs]
            w["h"] = [str(c) for c in h.coeffs]
            res.status, res.witness = "fail", w
            return res
    return res


def _nonzero_witness(G: FiniteGroup, comm: AlgebraElement, cfg: RunConfig, salt: int) -> dict | None:
    stream = assignment_stream(G, cfg.seed * 7919 + salt, cfg.bound)
    for _ in range(100):
        assign = next(stream)
        for i, c in enumerate(comm.coeffs):
            if not c:
                continue
            v = c.evaluate(assign)
            if v:
                return {"element": G.name(G.element(i)), "value": str(v), "assignment": _assignment_json(G, assign)}
    return None


def _check_nonvanish(G: FiniteGroup, cfg: RunConfig) -> CheckResult:
    res = CheckResult("NONVANISH", str(G.spec), cfg.mode, "pass", seed=cfg.seed)
    a1, a2, a3, a4 = (alpha(G, n) for n in (1, 2, 3, 4))
    pairs = {"[alpha_1, alpha_3]": (a1, a3), "[alpha_1, alpha_4]": (a1, a4), "[alpha_2, alpha_4]": (a2, a4)}
    witness = {}
    for salt, (label, (u, v)) in enumerate(pairs.items()):
        w = _nonzero_witness(G, commutator(u, v), cfg, salt)
        if w is None:
            res.status = "fail"
            witness[label] = {"note": "no nonzero evaluation found"}
        else:
            witness[label] = w
    res.witness = witness
    return res


def _check_pairing(G: FiniteGroup, cfg: RunConfig) -> CheckResult:
    chk = Checker("PAIRING", "", SPLIT, claims=_pairing_claims)
    res = _run_claims(chk, G, cfg)
    if res.status != "pass":
        return res
    four = irreducible_set(G).has_four_linear()
    details = {"degree_one_count": 4 if four else 2}
    if four:
        a1, a3, a4 = alpha(G, 1), alpha(G, 3), alpha(G, 4)
        cross = {"[alpha_1, alpha_3]": commutator(a1, a3), "[alpha_1, alpha_4]": commutator(a1, a4)}
        nonzero = {k: not v.is_zero() for k, v in cross.items()}
        details["cross_pairs_noncommuting"] = nonzero
        if not all(nonzero.values()):
            res.status = "fail"
            res.witness = {"claim": "cross pairs fail to commute", "found_commuting": [k for k, v in nonzero.items() if not v]}
    res.details = details
    return res


def _refute(G: FiniteGroup, cfg: RunConfig, build_lhs, build_rhs, salt: int, attempts: int = 50) -> dict | None:
    """Search for a point where lhs != rhs; returns the counterexample or None."""
    stream = assignment_stream(G, cfg.seed * 104729 + salt, cfg.bound)
    for _ in range(attempts):
        assign = next(stream)
        ctx = Ctx(G, assign)
        lhs, rhs = build_lhs(ctx), build_rhs(ctx)
        if lhs is None:
            continue
        w = _mismatch(G, "", lhs, rhs)
        if w is not None:
            w.pop("claim")
            w["assignment"] = _assignment_json(G, assign)
            return w
    return None


def _check_typo_523(G: FiniteGroup, cfg: RunConfig) -> CheckResult:
    res = CheckResult("TYPO-5.2.3", str(G.spec), cfg.mode, "pass")
    a_reading = _run_claims(CHECKS["T5.2.3"], G, cfg)

    def x_reading(ctx):
        return product([beta_x(G, chi, ctx.x) for chi in rotation_characters(G)])

    counter = _refute(G, cfg, x_reading, lambda ctx: ctx.e(ctx.theta), salt=1)
    res.details = {
        "A_reading": {"status": a_reading.status, "mode": a_reading.mode},
        "x_reading": {"status": "fail" if counter else "not refuted", "counterexample": counter},
    }
    if a_reading.status != "pass" or counter is None:
        res.status = "fail"
        res.witness = {"A_reading": a_reading.status, "x_reading_refuted": counter is not None}
    return res


def _check_typo_524(G: FiniteGroup, cfg: RunConfig) -> CheckResult:
    res = CheckResult("TYPO-5.2.4", str(G.spec), cfg.mode, "pass")
    implemented = _run_claims(CHECKS["C5.2.4"], G, cfg)
    four = irreducible_set(G).has_four_linear()
    chis = rotation_characters(G)

    def alternative(ctx, coeff_kind):
        if not ctx.theta:
            return None
        prefix = [ctx.alpha(2)] + ([ctx.alpha(3), ctx.alpha(4)] if four else [])
        if coeff_kind == "x":
            rest = [beta_x(G, chi, ctx.x) for chi in chis[1:]]
        else:
            rest = [beta(G, chi, A=ctx.A) for chi in chis[1:]]
        inv = product(prefix + rest).scale(ctx.theta.constant_value().inverse())
        return convolve(inv, ctx.alpha(1))

    readings = {"x_coefficients": _refute(G, cfg, lambda c: alternative(c, "x"), lambda c: c.e(), salt=2)}
    if four:
        readings["A_coefficients_excluding_only_chi'_0"] = _refute(
            G, cfg, lambda c: alternative(c, "A"), lambda c: c.e(), salt=3
        )
    res.details = {
        "implemented_reading": implemented.status,
        "alternative_readings": {k: ("fail" if v else "not refuted") for k, v in readings.items()},
        "counterexamples": readings,
    }
    if implemented.status != "pass" or readings["x_coefficients"] is None:
        res.status = "fail"
        res.witness = {"implemented": implemented.status, "x_reading_refuted": readings["x_coefficients"] is not None}
    return res


def _check_typo_intro_A(G: FiniteGroup, cfg: RunConfig) -> CheckResult:
    res = CheckResult("TYPO-A-INTRO", str(G.spec), cfg.mode, "pass")
    two_term = _run_claims(CHECKS["T5.1.5"], G, cfg)

    def single_sum(ctx):
        A = [build_A_intro(G, G.element(h), ctx.x) for h in range(G.rotation_order)]
        total = ctx.ring.one()
        for chi in rotation_characters(G):
            total = total * ctx.psum(A[g].scale(chi.at(g)) for g in range(G.rotation_order))
        return total

    counter = _refute(G, cfg, single_sum, lambda ctx: ctx.theta, salt=4)
    res.details = {
        "two_term_A": two_term.status,
        "single_sum_A": "fail" if counter else "not refuted",
        "counterexample": counter,
    }
    if two_term.status != "pass" or counter is None:
        res.status = "fail"
        res.witness = {"two_term_A": two_term.status, "single_sum_refuted": counter is not None}
    return res


def _check_typo_qtable(G: FiniteGroup, cfg: RunConfig) -> CheckResult:
    res = CheckResult("TYPO-Q-TABLE", str(G.spec), cfg.mode, "pass")
    literal = literal_quaternion_reps(G)
    corrected = irreducible_set(G).degree_two
    x = poly_ring(G).variables()
    A = A_values(G, x)
    r = G.rotation_order

    def lemma(rep):
        l = int(rep.name[3:])
        chi = chi_prime(G, l)
        rhs = poly_ring(G).zero()
        for g in range(r):
            rhs = rhs + A[g].scale(chi.at(g))
        return rep_factor_det(G, rep, x) == rhs

    lit = {rep.name: {"homomorphism": is_homomorphism(rep), "det_identity": lemma(rep)} for rep in literal}
    cor = {rep.name: {"homomorphism": is_homomorphism(rep), "det_identity": lemma(rep)} for rep in corrected}
    res.details = {"literal_table": lit, "corrected_table": cor}
    if not all(v["homomorphism"] and v["det_identity"] for v in cor.values()):
        res.status = "fail"
        res.witness = {"corrected_table": cor}
    return res


# -- registry -----------------------------------------------------------------------------

_CHECKERS = [
    Checker("REPS", "representation tables are homomorphisms and complete", ANY, custom=_check_reps),
    Checker("T2.1.1", "Frobenius factorization of the group determinant", ANY, uses_theta=True, claims=_frobenius),
    Checker("T3.1.2", "Fourier transform is a ring homomorphism", ANY, custom=_check_fourier),
    Checker("T3.2.1", "abelian group-algebra factorization of Theta(G) e", ABELIAN, uses_theta=True,
            claims=_abelian_theta_e),
    Checker("C3.2.2", "abelian inverse formula", ABELIAN, uses_theta=True, nonsingular=True, claims=_inverse_claims),
    Checker("L5.1.1", "A_h vanishes off <a> and A_h = A_{h^-1}", SPLIT, claims=_A_vanishing_and_symmetry),
    Checker("L5.1.2", "products of paired degree-one factors", SPLIT, claims=_paired_linear_products),
    Checker("L5.1.3", "2x2 determinant factors as character sums of A_h", SPLIT, claims=_two_dim_det_as_A_sum),
    Checker("L5.1.4", "character sums of A_h are conjugation invariant", SPLIT, claims=_A_sum_conjugation),
    Checker("T5.1.5", "Theta(G) as a circulant determinant of A_h", SPLIT, uses_theta=True, claims=_circulant_theta),
    Checker("L5.2.1", "alpha_1 alpha_2 = sum A_h h", SPLIT, claims=_alpha12_product),
    Checker("L5.2.2", "alpha_3 alpha_4 = sum chi'_{r/2}(h) A_h h", SPLIT, needs_four=True, claims=_alpha34_product),
    Checker("T5.2.3", "Theta(G) e as a product over characters of <a>", SPLIT, uses_theta=True, claims=_beta_product),
    Checker("C5.2.4", "inverse of alpha_1 for D_m and Q_m", SPLIT, uses_theta=True, nonsingular=True,
            claims=_inverse_claims),
    Checker("L6.1.1", "chi2 change of variable swaps alpha_1/alpha_2 and alpha_3/alpha_4", SPLIT, claims=_chi2_change_of_variable),
    Checker("L6.1.2", "chi3 change of variable", SPLIT, needs_four=True, claims=_chi3_change_of_variable),
    Checker("L6.2.1", "x_{gb} x_{b^-1 g^-1 h} sum identity on <a>", SPLIT, claims=_conj_pair_sums),
    Checker("L6.2.2", "coset sum identity off <a>", SPLIT, claims=_coset_swap_sums),
    Checker("T6.2.3", "[alpha_1, alpha_2] = 0", SPLIT, claims=_alpha12_commute),
    Checker("T6.2.4", "[alpha_3, alpha_4] = 0", SPLIT, needs_four=True, claims=_alpha34_commute),
    Checker("L6.2.5", "[alpha_1, alpha_3] double-sum expansion", SPLIT, needs_four=True, claims=_comm13_expansion),
    Checker("L6.2.6", "odd-power rotation sum vanishes", SPLIT, needs_four=True, claims=_odd_rotation_sums),
    Checker("L6.2.7", "[alpha_1, alpha_3] coefficient at a^k", SPLIT, needs_four=True, claims=_comm13_rotation),
    Checker("L6.2.8", "[alpha_1, alpha_3] coefficient at a^k b", SPLIT, needs_four=True, claims=_comm13_coset),
    Checker("L6.2.9", "[alpha_1, alpha_4] four-sum expansion", SPLIT, needs_four=True, claims=_comm14_expansion),
    Checker("L6.2.10", "[alpha_1, alpha_4] coefficient at a^k", SPLIT, needs_four=True, claims=_comm14_rotation),
    Checker("L6.2.11", "[alpha_1, alpha_4] coefficient at a^k b", SPLIT, needs_four=True, claims=_comm14_coset),
    Checker("CANCEL", "closed-form coefficients of [alpha_1, alpha_3 + alpha_4] cancel", SPLIT, needs_four=True,
            claims=_coefficient_cancellation),
    Checker("T6.2.13", "alpha_3 + alpha_4 commutes with alpha_1, alpha_2 and vice versa", SPLIT, needs_four=True,
            claims=_sum_pairs_commute),
    Checker("NONVANISH", "[alpha_1, alpha_3], [alpha_1, alpha_4], [alpha_2, alpha_4] are nonzero", SPLIT,
            needs_four=True, custom=_check_nonvanish),
    Checker("PAIRING", "degree-one factors pair as (chi1, chi2), (chi3, chi4)", SPLIT, custom=_check_pairing),
    Checker("TYPO-5.2.3", "A_g reading of the D/Q group-algebra product holds, x_g reading fails", SPLIT,
            uses_theta=True, custom=_check_typo_523),
    Checker("TYPO-5.2.4", "implemented inverse formula holds, bare x_g reading fails", SPLIT,
            uses_theta=True, custom=_check_typo_524),
    Checker("TYPO-A-INTRO", "two-term A_h gives Theta(G), single-sum variant does not", SPLIT, uses_theta=True,
            custom=_check_typo_intro_A),
    Checker("TYPO-Q-TABLE", "corrected Q_m degree-two table vs the literal one", QUATERNION, custom=_check_typo_qtable),
]

CHECKS: dict[str, Checker] = {c.id: c for c in _CHECKERS}

ALPHA34_SKIP = "alpha_3 undefined: m odd"


def applicability(check_id: str, G: FiniteGroup) -> tuple[str, str | None]:
    """('applicable', None), ('skip', reason) or ('inapplicable', reason)."""
    chk = _get(check_id)
    if G.kind not in chk.families:
        return "inapplicable", f"{check_id} does not apply to the {G.kind.value} family"
    if chk.needs_four and not irreducible_set(G).has_four_linear():
        return "skip", ALPHA34_SKIP
    return "applicable", None


def list_checks(G: FiniteGroup) -> list[tuple[str, str, str | None]]:
    return [(cid, *applicability(cid, G)) for cid in CHECKS]


def _get(check_id: str) -> Checker:
    try:
        return CHECKS[check_id]
    except KeyError:
        raise UnknownCheckError(f"unknown check id {check_id!r}") from None


def resolve_mode(G: FiniteGroup, mode: str, limit: int = SYMBOLIC_LIMIT) -> str:
    if mode == "auto":
        return "symbolic" if G.order <= limit else "randomized"
    if mode not in ("symbolic", "randomized"):
        raise ValueError(f"mode must be symbolic, randomized or auto, got {mode!r}")
    return mode


def run_check(check_id: str, G: FiniteGroup, mode: str = "auto", trials: int = 20, seed: int = 0,
              bound: int | None = None, limit: int = SYMBOLIC_LIMIT) -> CheckResult:
    chk = _get(check_id)
    status, reason = applicability(check_id, G)
    if status == "inapplicable":
        raise InapplicableCheckError(reason)
    mode = resolve_mode(G, mode, limit)
    if status == "skip":
        return CheckResult(check_id, str(G.spec), mode, "skipped", reason=reason)
    if mode == "symbolic" and chk.uses_theta and G.order > limit:
        return CheckResult(check_id, str(G.spec), mode, "skipped",
                           reason=f"order {G.order} exceeds symbolic limit {limit}; use randomized mode")
    cfg = RunConfig(mode, trials, seed, default_bound(G) if bound is None else bound, limit)
    if chk.custom is not None:
        return chk.custom(G, cfg)
    return _run_claims(chk, G, cfg)


def run_all(G: FiniteGroup, mode: str = "auto", trials: int = 20, seed: int = 0,
            bound: int | None = None, limit: int = SYMBOLIC_LIMIT) -> list[CheckResult]:
    """Every applicable or skippable checker for G; never stops at a failure."""
    return [
        run_check(cid, G, mode, trials, seed, bound, limit)
        for cid, status, _ in list_checks(G)
        if status != "inapplicable"
    ]
