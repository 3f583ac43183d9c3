"""Parameter families of symmetric imprimitive designs and arithmetic gates."""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction
from math import isqrt

from .fields import prime_power
from .numtheory import is_perfect_square


@dataclass(frozen=True)
class DesignParameters:
    family: str
    lam: int
    v: int
    k: int
    c: int
    d: int
    k0: int

    @property
    def b(self) -> int:
        return self.v

    @property
    def r(self) -> int:
        return self.k

    def satisfies_symmetric_identity(self) -> bool:
        return self.lam * (self.v - 1) == self.k * (self.k - 1)

    def as_dict(self) -> dict:
        out = asdict(self)
        out.update(b=self.b, r=self.r)
        return out


def _checked(p: DesignParameters) -> DesignParameters:
    assert p.satisfies_symmetric_identity(), p
    assert p.v == p.c * p.d, p
    return p


def type1_params(lam: int) -> DesignParameters:
    """``2-(lam^2 (lam+2), lam (lam+1), lam)`` with ``lam + 2`` classes of size ``lam^2``."""
    if lam < 3:
        raise ValueError(f"lambda must be >= 3, got {lam}")
    return _checked(DesignParameters("VI1", lam, lam * lam * (lam + 2), lam * (lam + 1),
                                     lam * lam, lam + 2, lam))


def type2_params(lam: int) -> DesignParameters:
    """``2-((lam+6)(lam^2+4lam-1)/4, lam (lam+5)/2, lam)``, ``lam = 1, 3 (mod 6)``."""
    if lam < 3:
        raise ValueError(f"lambda must be >= 3, got {lam}")
    if lam % 6 not in (1, 3):
        raise ValueError(f"lambda = {lam} is not 1 or 3 mod 6")
    d, rem = divmod(lam * lam + 4 * lam - 1, 4)
    assert rem == 0 and lam * (lam + 5) % 2 == 0
    return _checked(DesignParameters("VI2", lam, (lam + 6) * d, lam * (lam + 5) // 2,
                                     lam + 6, d, 3))


def v2_condition(lam: int) -> bool:
    """``lam = 0 (mod 4)``, or ``lam = 2u^2`` with ``u`` odd, ``u >= 3`` and ``2(u^2-1)`` a square."""
    if lam % 4 == 0:
        return True
    if lam % 2:
        return False
    u = isqrt(lam // 2)
    return (2 * u * u == lam and u % 2 == 1 and u >= 3
            and is_perfect_square(2 * (u * u - 1)))


def k0eq2_params(lam: int, variant: str) -> DesignParameters:
    if lam < 2:
        raise ValueError(f"lambda must be >= 2, got {lam}")
    if variant == "V1":
        return _checked(DesignParameters("V1", lam, lam * lam * (lam + 2), lam * (lam + 1),
                                         lam + 2, lam * lam, 2))
    if variant == "V2":
        if not v2_condition(lam):
            raise ValueError(f"lambda = {lam} fails the V2 side conditions")
        c = (lam + 2) // 2
        d = (lam * lam - 2 * lam + 2) // 2
        return _checked(DesignParameters("V2", lam, c * d, lam * lam // 2, c, d, 2))
    raise ValueError(f"unknown variant {variant!r}")


def family_rows(family: str, lam_max: int) -> list[DesignParameters]:
    """Every admissible row with ``lambda <= lam_max``."""
    rows = []
    for lam in range(2, lam_max + 1):
        try:
            if family == "type1":
                rows.append(type1_params(lam))
            elif family == "type2":
                rows.append(type2_params(lam))
            elif family == "k0eq2":
                rows.append(k0eq2_params(lam, "V1"))
                if v2_condition(lam):
                    rows.append(k0eq2_params(lam, "V2"))
            else:
                raise KeyError(family)
        except ValueError:
            continue
    return rows


def type2_theta_filter(lam: int) -> bool:
    """``lam^2 <= r = lam (lam+5)/2``; with the congruence this leaves ``lam = 3``."""
    if lam < 3:
        raise ValueError("lambda must be >= 3")
    return 2 * lam * lam <= lam * (lam + 5)


@dataclass(frozen=True)
class GateResult:
    passed: bool
    detail: str


def hypothesis_gate(v: int, k: int, lam: int, k0: int | None = None) -> dict[str, GateResult]:
    """The two arithmetic hypotheses of the classification, with their working shown."""
    bound = Fraction(lam * (lam - 3), 2)
    gates = {
        "k_gt_bound": GateResult(k > bound, f"k = {k} > lambda(lambda-3)/2 = {bound}"),
    }
    if k0 is not None:
        gates["k0_ge_3"] = GateResult(k0 >= 3, f"k0 = {k0} >= 3")
    if lam == 2:
        gates["k0_ge_3"] = GateResult(
            False, "lambda = 2 forces k0 = 2; outside the k0 >= 3 scope")
    gates["lambda_ge_3"] = GateResult(lam >= 3, f"lambda = {lam} >= 3")
    return gates


@dataclass(frozen=True)
class AppendixConstraints:
    h: int
    q: int
    v: int
    q_even: bool
    v_mod3_ok: bool
    v_mod6_ok: bool
    q1_divides_h6: bool
    collinear_lambda: int
    collinear_lambda_divides_v6: bool
    noncollinear_lambda: int
    noncollinear_lambda_divides_v6: bool

    @property
    def collinear_family_ok(self) -> bool:
        return (self.q_even and self.v_mod3_ok and self.q1_divides_h6
                and self.collinear_lambda_divides_v6)


def appendix_family_constraints(h: int, q: int) -> AppendixConstraints:
    if h < 2:
        raise ValueError("need h >= 2")
    if prime_power(q) is None:
        raise ValueError(f"{q} is not a prime power")
    v = (q ** h - 1) // (q - 1)
    lam_c = q - 1
    lam_n = q * q * (q ** (h - 2) - 1) // (q - 1)
    return AppendixConstraints(
        h=h, q=q, v=v,
        q_even=q % 2 == 0,
        v_mod3_ok=v % 3 in (0, 1),
        v_mod6_ok=v % 6 in (1, 3),
        q1_divides_h6=(h - 6) % (q - 1) == 0,
        collinear_lambda=lam_c,
        collinear_lambda_divides_v6=(v - 6) % lam_c == 0,
        noncollinear_lambda=lam_n,
        noncollinear_lambda_divides_v6=lam_n != 0 and (v - 6) % lam_n == 0,
    )


@dataclass(frozen=True)
class PPRatio:
    applicable: bool
    r: int
    ratio: Fraction
    holds: bool


def lemma_pp_ratio(v: int, k: int, lam: int) -> PPRatio:
    """Replication over lambda against ``(v-1)/2``; an identity when ``k = 3``."""
    if lam * (v - 1) % (k - 1):
        raise ValueError(f"r = {lam}({v}-1)/({k}-1) is not an integer")
    r = lam * (v - 1) // (k - 1)
    ratio = Fraction(r, lam)
    return PPRatio(k == 3, r, ratio, ratio == Fraction(v - 1, 2))
