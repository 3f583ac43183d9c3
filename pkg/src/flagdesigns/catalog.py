"""Known flag-transitive induced designs, as parameter patterns with predicates.

Two tables: induced ``2-(lam^2, lam, lam/theta)`` designs (case labels
``M1a`` ... ``M2c.v``) and induced ``2-(lam+6, 3, lam/theta)`` designs (case
labels ``H1a`` ... ``H3``). Group clauses are descriptive text only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .fields import prime_power


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    table: str
    pattern: str
    groups: str
    # predicate(c, k0, lam, theta) -> bool; the table's own shape is checked separately
    predicate: Callable[[int, int, int, int], bool]

    def describe(self) -> str:
        return f"{self.label}: {self.pattern}; {self.groups}"


def _log(n: int, base: int) -> int | None:
    """``m`` with ``base**m == n``, else ``None``."""
    if n < 1:
        return None
    m = 0
    while n % base == 0:
        n //= base
        m += 1
    return m if n == 1 else None


def _exact(c, k0, lam_i, theta):
    return lambda C, K, L, T: (C, K, L // T, T) == (c, k0, lam_i, theta)


def _translation_plane(C, K, L, T):
    return prime_power(L) is not None and T == L and K == L and C == L * L


def _luneburg(C, K, L, T):
    m = _log(L, 2)
    return _translation_plane(C, K, L, T) and m is not None and m % 4 == 2 and m >= 6


def _subspace_family(C, K, L, T):
    pe = prime_power(L)
    if pe is None or C != L * L or K != L:
        return False
    p, m = pe
    t = _log(T, p)
    return t is not None and 0 <= t <= m


def _mo2_i(C, K, L, T):
    m = _log(C, 2)
    return (m is not None and m % 4 == 0 and m > 0
            and (K, L // T, T) == (2 ** (m // 2), 2 ** (m // 4), 2 ** (m // 4)))


def _mo2_ii(C, K, L, T):
    m = _log(C, 2)
    return (m is not None and m % 4 == 2 and T in (1, 2) and K == 2 ** (m // 2)
            and L // T == 2 ** (m // 2) // T)


def _mo2_iii(C, K, L, T):
    # recorded as printed: 2-(2^m, 2^(m/3), 2^(m/3)), theta = 1
    m = _log(C, 2)
    return (m is not None and m % 3 == 0 and m > 0 and T == 1
            and K == 2 ** (m // 3) and L == 2 ** (m // 3))


def _pg_triples(C, K, L, T):
    q = L // T + 1
    pe = prime_power(q)
    if pe is None or q % 2:
        return False
    h = next((h for h in range(2, 64) if (q ** h - 1) // (q - 1) == C), None)
    if h is None:
        return False
    return (C % 3 in (0, 1) and (h - 6) % (q - 1) == 0
            and T * (q - 1) ** 2 == q ** h - 6 * q + 5)


def _pg_triples_a7(C, K, L, T):
    return _pg_triples(C, K, L, T) and (C, L // T) == (15, 1)


def _affine_3(C, K, L, T):
    h = _log(C, 3)
    return h is not None and h >= 2 and L == T == 3 ** h - 6


MONTY = [
    CatalogEntry("M1a", "lam2", "2-(6^2,6,2), theta=3", "PSL2(8) <= G <= PGammaL2(8)",
                 _exact(36, 6, 2, 3)),
    CatalogEntry("M1b", "lam2", "2-(6^2,6,6), theta=1 (three designs)", "G = PGammaL2(8)",
                 _exact(36, 6, 6, 1)),
    CatalogEntry("M1c", "lam2", "2-(12^2,12,3), theta=4", "G = PSL3(3)",
                 _exact(144, 12, 3, 4)),
    CatalogEntry("M1d", "lam2", "2-(12^2,12,6), theta=2", "G = PSL3(3):Z2",
                 _exact(144, 12, 6, 2)),
    CatalogEntry("M2a.i", "lam2", "AG2(p^m), theta=p^m", "affine, G0 from the known lists",
                 _translation_plane),
    CatalogEntry("M2a.ii", "lam2", "Lueneburg plane of order 2^m, m = 2 mod 4, m >= 6",
                 "Sz(2^(m/2)) <= G0", _luneburg),
    CatalogEntry("M2a.iii", "lam2", "Hall plane of order 3^2", "affine",
                 lambda C, K, L, T: _translation_plane(C, K, L, T) and L == 9),
    CatalogEntry("M2a.iv", "lam2", "Hering plane of order 3^3", "G0 = SL2(13)",
                 lambda C, K, L, T: _translation_plane(C, K, L, T) and L == 27),
    CatalogEntry("M2b", "lam2", "2-(p^2m,p^m,p^(m-t)), theta=p^t, 0 <= t <= m",
                 "blocks are subspaces of AG_2m(p), G0 <= GammaL1(p^2m)", _subspace_family),
    CatalogEntry("M2c.i", "lam2", "2-(2^m,2^(m/2),2^(m/4)), m = 0 mod 4, theta=2^(m/4)",
                 "SL2(2^(m/2)) <= G0 <= GammaL2(2^(m/2))", _mo2_i),
    CatalogEntry("M2c.ii", "lam2", "2-(2^m,2^(m/2),2^(m/2)/theta), m = 2 mod 4, theta in {1,2}",
                 "Sz(2^(m/2)) <= G0", _mo2_ii),
    CatalogEntry("M2c.iii", "lam2", "2-(2^m,2^(m/3),2^(m/3)), m = 0 mod 3, theta=1",
                 "G2(2^(m/3)) <= G0", _mo2_iii),
    CatalogEntry("M2c.iv", "lam2", "2-(2^4,2^2,2^2), theta=1", "A6 <= G0 <= S6",
                 _exact(16, 4, 4, 1)),
    CatalogEntry("M2c.v", "lam2", "2-(3^4,3^2,3), theta=3", "SL2(5) <= G0",
                 _exact(81, 9, 3, 3)),
]

HELP = [
    CatalogEntry("H1a", "lam6", "2-((q^h-1)/(q-1),3,q-1), q even, q-1 | h-6, "
                 "theta=(q^h-6q+5)/(q-1)^2", "PSL_h(q) <= G <= PGammaL_h(q)", _pg_triples),
    CatalogEntry("H1b", "lam6", "2-(15,3,1), (h,q)=(4,2)", "G = A7", _pg_triples_a7),
    CatalogEntry("H2", "lam6", "2-(31,3,25), theta=1", "PSL3(5) <= G <= PGL3(5)",
                 _exact(31, 3, 25, 1)),
    CatalogEntry("H3", "lam6", "AG_h(3), h >= 2, lambda=theta=3^h-6", "affine", _affine_3),
]

CATALOG = MONTY + HELP


def _shape_ok(entry: CatalogEntry, c: int, k0: int, lam: int) -> bool:
    if entry.table == "lam2":
        return c == lam * lam and k0 == lam
    return c == lam + 6 and k0 == 3 and lam >= 3 and lam % 6 in (1, 3)


def match_catalog(c: int, k0: int, lam: int, theta: int) -> list[CatalogEntry]:
    """Every case whose parameter pattern admits ``(c, k0, lam, theta)``."""
    if theta < 1 or lam % theta:
        raise ValueError(f"theta = {theta} does not divide lambda = {lam}")
    return [e for e in CATALOG if _shape_ok(e, c, k0, lam) and e.predicate(c, k0, lam, theta)]
