"""Certified decision procedure for taking the kappa-th root of the moment
sequence of a finitely atomic measure.

Given mu with support x_1 < ... < x_M, the only possible atoms of a root
measure nu are the candidates t_j = x_j**(1/kappa) (the root measure of a
compactly supported sequence is unique, and its support is contained in
the kappa-th roots of supp mu).  Writing the candidate weights as
w_j = w_1 * rho_j with rho_1 = 1 makes every quantity in the decision
rational even though the w_j themselves are usually irrational: products
of kappa candidate atoms are compared through their kappa-th powers, and
masses factor through w_1**kappa = mu({x_1}).

Peeling runs in ascending candidate order.  At step j the key
K_j = x_1**(kappa-1) * x_j is the smallest product a multiset containing
t_j can reach, and the only size-kappa multiset with that product whose
largest member is t_j is {t_j, t_1, ..., t_1}: any multiset with a member
above t_j already has a strictly larger product, so every other multiset
hitting K_j uses indices below j.  This forces

    rho_j = (target/mu({x_1}) - S_j) / kappa,

with target the mu-mass at the point y with y**kappa = K_j (zero if there
is no such support point) and S_j the already-known contribution of
earlier candidates.  A negative rho_j refutes existence outright; zero
means the candidate is absent.  A full verification pass then recomputes
the entire pushforward from the positive candidates and compares it
against mu exactly, so a CertifiedYes is self-checking rather than a
consequence of trusting the peeling argument.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .exact import (
    BigFloat,
    GuardExceeded,
    Radical,
    UsageError,
    perfect_nth_root,
)
from .measures import AtomicMeasure, MAX_MULTISETS

__all__ = [
    "Verdict",
    "CertificateKind",
    "Certificate",
    "NuEntry",
    "NuRepresentation",
    "RootDecision",
    "decide_root",
    "verify_representation",
    "approx_root_moments",
]


class Verdict(enum.Enum):
    CERTIFIED_YES = "certified_yes"
    CERTIFIED_NO = "certified_no"


class CertificateKind(enum.Enum):
    NEGATIVE_RHO = "negative_rho"
    MASS_MISMATCH = "mass_mismatch"
    COVERAGE_VIOLATION = "coverage_violation"


@dataclass(frozen=True)
class Certificate:
    """Why no root measure exists.

    location is the mu-support point whose peeled weight went negative
    (NEGATIVE_RHO), the support point whose mass is not reproduced
    (MASS_MISMATCH), or the stray product key, i.e. the kappa-th power of
    the offending product of candidate atoms (COVERAGE_VIOLATION).
    """

    kind: CertificateKind
    location: Fraction


@dataclass(frozen=True)
class NuEntry:
    power: Fraction  # the atom t = power**(1/kappa), stored by its power
    rho: Fraction    # weight of t relative to the smallest atom's weight


@dataclass(frozen=True)
class NuRepresentation:
    """nu = base_mass**(1/kappa) * sum_j rho_j * delta(power_j**(1/kappa)).

    base_mass is mu({min supp mu}); the entry at the minimal power always
    has rho = 1, and zero-rho entries are kept to record that a candidate
    was considered and found absent.
    """

    base_mass: Fraction
    entries: tuple[NuEntry, ...]
    kappa: int

    def positive_entries(self) -> tuple[NuEntry, ...]:
        return tuple(e for e in self.entries if e.rho > 0)

    def positive_powers(self) -> tuple[Fraction, ...]:
        return tuple(e.power for e in self.entries if e.rho > 0)

    def support_size(self) -> int:
        return sum(1 for e in self.entries if e.rho > 0)

    def atom_radicals(self) -> tuple[Radical, ...]:
        return tuple(Radical.root(e.power, self.kappa) for e in self.positive_entries())

    def to_atomic_measure(self) -> Optional[AtomicMeasure]:
        """Exact rational form of nu, when it has one."""
        w1 = perfect_nth_root(self.base_mass, self.kappa)
        if w1 is None:
            return None
        pairs = []
        for e in self.positive_entries():
            atom = perfect_nth_root(e.power, self.kappa)
            if atom is None:
                return None
            pairs.append((atom, w1 * e.rho))
        return AtomicMeasure.from_pairs(pairs)


@dataclass(frozen=True)
class RootDecision:
    verdict: Verdict
    kappa: int
    nu: Optional[NuRepresentation] = None
    certificate: Optional[Certificate] = None

    def __post_init__(self):
        if (self.verdict is Verdict.CERTIFIED_YES) != (self.nu is not None):
            raise UsageError("a yes-decision carries exactly a representation")
        if (self.verdict is Verdict.CERTIFIED_NO) != (self.certificate is not None):
            raise UsageError("a no-decision carries exactly a certificate")

    @property
    def is_yes(self) -> bool:
        return self.verdict is Verdict.CERTIFIED_YES


def _key_contribution(positives, kappa: int, key: Fraction) -> Fraction:
    """sum of multinomial(counts) * prod(rho**count) over size-kappa
    multisets of the given (power, rho) candidates whose power-product
    equals key.  Depth-first over counts with monotonicity pruning."""
    n = len(positives)
    fact = math.factorial
    total = Fraction(0)
    kappa_fact = fact(kappa)

    def rec(i: int, slots: int, prod: Fraction, coeff: Fraction):
        nonlocal total
        if slots == 0:
            if prod == key:
                total += coeff
            return
        if i == n:
            return
        # remaining powers are >= positives[i][0] and <= positives[-1][0]
        if prod * positives[i][0] ** slots > key:
            return
        if prod * positives[-1][0] ** slots < key:
            return
        x, rho = positives[i]
        c = 0
        p = prod
        co = coeff
        while c <= slots:
            rec(i + 1, slots - c, p, co)
            c += 1
            p *= x
            co = co * rho / c
        return

    rec(0, kappa, Fraction(1), Fraction(kappa_fact))
    return total


def _pushforward_map(positives, kappa: int) -> dict[Fraction, Fraction]:
    """key -> sum multinomial * prod(rho) over all size-kappa multisets."""
    n = len(positives)
    fact = math.factorial
    out: dict[Fraction, Fraction] = {}

    def rec(i: int, slots: int, prod: Fraction, coeff: Fraction):
        if slots == 0:
            out[prod] = out.get(prod, Fraction(0)) + coeff
            return
        if i == n - 1:
            x, rho = positives[i]
            out_key = prod * x ** slots
            out[out_key] = out.get(out_key, Fraction(0)) + coeff * rho ** slots / fact(slots)
            return
        x, rho = positives[i]
        c = 0
        p = prod
        co = coeff
        while c <= slots:
            rec(i + 1, slots - c, p, co)
            c += 1
            p *= x
            co = co * rho / c

    rec(0, kappa, Fraction(1), Fraction(fact(kappa)))
    return out


def decide_root(mu: AtomicMeasure, kappa: int) -> RootDecision:
    """Decide whether the kappa-th root of mu's moment sequence is again a
    Stieltjes moment sequence, with an exact certificate either way.
    """
    if kappa < 2 or kappa > 16:
        raise UsageError(f"kappa must be in [2, 16], got {kappa}")
    m_count = len(mu.atoms)
    if math.comb(m_count + kappa - 1, kappa) > MAX_MULTISETS:
        raise GuardExceeded(
            f"decide_root guard: C({m_count}+{kappa}-1,{kappa}) exceeds {MAX_MULTISETS}"
        )
    xs = mu.support
    masses = dict(mu.atoms)
    base_mass = masses[xs[0]]
    power_to_point = {x ** kappa: x for x in xs}

    # ascending peeling; only positive candidates can contribute to later keys
    rhos: list[Fraction] = [Fraction(1)]
    positives: list[tuple[Fraction, Fraction]] = [(xs[0], Fraction(1))]
    x1_pow = xs[0] ** (kappa - 1)
    for j in range(1, m_count):
        key = x1_pow * xs[j]
        earlier = _key_contribution(positives, kappa, key)
        point = power_to_point.get(key)
        target = masses[point] if point is not None else Fraction(0)
        rho = (target / base_mass - earlier) / kappa
        if rho < 0:
            return RootDecision(
                Verdict.CERTIFIED_NO,
                kappa,
                certificate=Certificate(CertificateKind.NEGATIVE_RHO, xs[j]),
            )
        rhos.append(rho)
        if rho > 0:
            positives.append((xs[j], rho))

    # full verification: rebuild the pushforward from the positive candidates
    produced = _pushforward_map(positives, kappa)
    for key, value in sorted(produced.items()):
        point = power_to_point.get(key)
        if point is None:
            if value != 0:
                return RootDecision(
                    Verdict.CERTIFIED_NO,
                    kappa,
                    certificate=Certificate(CertificateKind.COVERAGE_VIOLATION, key),
                )
            continue
        if base_mass * value != masses[point]:
            return RootDecision(
                Verdict.CERTIFIED_NO,
                kappa,
                certificate=Certificate(CertificateKind.MASS_MISMATCH, point),
            )
    for x in xs:
        if x ** kappa not in produced and masses[x] != 0:
            return RootDecision(
                Verdict.CERTIFIED_NO,
                kappa,
                certificate=Certificate(CertificateKind.MASS_MISMATCH, x),
            )

    nu = NuRepresentation(
        base_mass=base_mass,
        entries=tuple(NuEntry(x, r) for x, r in zip(xs, rhos)),
        kappa=kappa,
    )
    return RootDecision(Verdict.CERTIFIED_YES, kappa, nu=nu)


def verify_representation(mu: AtomicMeasure, nu: NuRepresentation) -> bool:
    """Independent check that nu's kappa-fold pushforward reproduces mu."""
    positives = [(e.power, e.rho) for e in nu.positive_entries()]
    if not positives:
        return False
    produced = _pushforward_map(positives, nu.kappa)
    expected = {x ** nu.kappa: w for x, w in mu.atoms}
    scaled = {k: nu.base_mass * v for k, v in produced.items() if v != 0}
    return scaled == expected


def approx_root_moments(
    decision: RootDecision, n: int, precision: int = 256
) -> BigFloat:
    """Dyadic approximation of the n-th root moment b_n = a_n**(1/kappa).

    b_n = sum_j rho_j * (base_mass * power_j**n)**(1/kappa); each term is
    approximated to precision plus guard bits and the exact dyadic sum is
    rounded once at the end, so the result is within one ulp (and exact
    whenever every term is rational and representable).
    """
    if not decision.is_yes:
        raise UsageError("approx_root_moments needs a CertifiedYes decision")
    if n < 0:
        raise UsageError("moment order must be >= 0")
    nu = decision.nu
    terms = nu.positive_entries()
    guard = max(len(terms).bit_length() + 2, 4)
    total = Fraction(0)
    for e in terms:
        term = Radical(e.rho, nu.base_mass * e.power ** n, nu.kappa)
        total += term.approx(precision + guard).to_fraction()
    return BigFloat.from_fraction(total, precision)
