"""The eight finite subgroups of PGL2(Q) with the data of their families.

Everything here is static: generators, base point ``a``, the congruence
tables and the Selmer function lists exactly as published for each case.
Derived quantities (orbits, lambda, omega, curves) are computed by the
other modules and cross-checked against these tables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping

from .moebius import FiniteSubgroup, Homography, ProjPoint, generate_group, normalize

CASE_IDS = ("C2", "C3", "C4", "C6", "D2", "D3", "D4", "D6")


@dataclass(frozen=True)
class ConditionTable:
    """Raw congruence table of one case.

    ``n_coprime_to``: n must be coprime to this integer (1 = no constraint).
    ``y_residues``: maps ``n % n_modulus`` to the required residue of y mod
    ``modulus``; the key ``None`` means the residue does not depend on n.
    ``power_residue``: when set, the condition is ``y**n = power_residue``
    mod ``modulus`` instead of an explicit y residue.
    """

    n_coprime_to: int
    modulus: int
    coprime_primes: tuple[int, ...]
    y_residues: Mapping[int | None, int] = field(default_factory=dict)
    n_modulus: int = 1
    power_residue: int | None = None
    # condition numbering as printed: (n constraint, y residue, coprimality)
    labels: tuple[str | None, str, str] = ("(i)", "(ii)", "(iii)")


@dataclass(frozen=True)
class GroupCase:
    case_id: str
    group_name: str
    generators: tuple[Homography, ...]
    a: ProjPoint
    conditions: ConditionTable
    # entries are ("lin", alpha, beta, eps) or ("special",)
    selmer_list: tuple[tuple, ...]
    # order of the generator f of the cyclic part (None for C2 and D2)
    r: int | None = None
    # zeta + zeta^-1 for a primitive r-th root of unity
    trace: int | None = None
    # point c such that the functions divide by (x - c); None: no division
    pole: int | None = None
    # scalar in the last function (x - c)^2 / scale
    unit_scale: int | None = None
    totally_real: bool = True
    # y^n above this makes the signature claim effective
    signature_threshold: int = 0
    claimed_rank_bound: int = 0
    b: ProjPoint = ProjPoint(0, 1)

    @cached_property
    def group(self) -> FiniteSubgroup:
        return generate_group(self.generators)

    @property
    def order(self) -> int:
        return len(self.group)

    @property
    def is_dihedral(self) -> bool:
        return self.case_id.startswith("D")

    @property
    def omega(self) -> int:
        from .moebius import stabilizer_order

        return stabilizer_order(self.group, self.b)

    @property
    def lam(self):
        from .cover import compute_lambda

        return compute_lambda(self.group, self.a)

    @property
    def s(self) -> int:
        """Rank of the n-torsion subgroup of the Picard group."""
        from .moebius import orbit

        return len(orbit(self.group, self.a)) + len(orbit(self.group, self.b)) - 2


def _h(*entries) -> Homography:
    return normalize(*entries)


INVOLUTION = _h(0, 1, 1, 0)  # z -> 1/z
F3 = _h(0, -1, 1, 1)  # z -> -1/(z+1)
F4 = _h(1, -1, 1, 1)  # z -> (z-1)/(z+1)
F6 = _h(2, -1, 1, 1)  # z -> (2z-1)/(z+1)

L = "lin"
SPECIAL = ("special",)

CATALOG: dict[str, GroupCase] = {
    "C2": GroupCase(
        "C2", "Z/2Z", (INVOLUTION,), ProjPoint.of(2),
        ConditionTable(1, 2, (3,), {None: 1}, labels=(None, "(i)", "(i)")),
        ((L, 1, 0, 0), (L, 1, 2, 0)),
        totally_real=True, signature_threshold=9, claimed_rank_bound=1,
    ),
    "C3": GroupCase(
        "C3", "Z/3Z", (F3,), ProjPoint.of(1),
        ConditionTable(1, 2, (3,), {None: 1}, labels=(None, "(i)", "(i)")),
        ((L, 1, 0, 0), (L, 1, -1, 0), (L, 1, 1, 0), (L, 1, -2, 0)),
        r=3, trace=-1, totally_real=True, claimed_rank_bound=2,
    ),
    "C4": GroupCase(
        "C4", "Z/4Z", (F4,), ProjPoint.of(2),
        ConditionTable(2, 12, (5,), {None: 5}),
        ((L, 1, 0, 0), (L, 1, 1, 1), (L, 1, -3, 1), (L, 1, 2, 0), (L, 2, -1, 0), SPECIAL),
        r=4, trace=0, pole=-1, unit_scale=2, totally_real=True, claimed_rank_bound=3,
    ),
    "C6": GroupCase(
        "C6", "Z/6Z", (F6,), ProjPoint.of(3),
        ConditionTable(6, 1080, (7,), {1: 397, 5: 37, 7: 613, 11: 253}, n_modulus=12),
        ((L, 1, 0, 0), (L, 1, 1, 0), (L, 2, 1, 1), (L, 1, 2, 1), (L, 1, 3, 0),
         (L, 1, -4, 1), (L, 2, -1, 0), (L, 3, 2, 0), (L, 4, 5, 1), SPECIAL),
        r=6, trace=1, pole=-1, unit_scale=3, totally_real=True, claimed_rank_bound=5,
    ),
    "D2": GroupCase(
        "D2", "(Z/2Z)^2", (_h(1, 1, 1, -1), _h(0, -1, 1, 0)), ProjPoint.of(2),
        ConditionTable(1, 12, (5, 7), {None: 1}, labels=(None, "(i)", "(ii)")),
        ((L, 1, 0, 0), (L, 1, -1, 1), (L, 1, 2, 0), (L, 2, -1, 0), (L, 1, 3, 1), SPECIAL),
        pole=1, unit_scale=2, totally_real=True, signature_threshold=50, claimed_rank_bound=3,
    ),
    "D3": GroupCase(
        "D3", "S3", (F3, INVOLUTION), ProjPoint.of(2),
        ConditionTable(2, 36, (5, 7), {None: 19}),
        ((L, 1, 0, 0), (L, 1, -1, 0), (L, 1, 2, 0), (L, 1, -3, 0), (L, 2, 1, 0),
         (L, 2, -3, 0), (L, 3, -1, 0)),
        r=3, trace=-1, totally_real=False, signature_threshold=100, claimed_rank_bound=5,
    ),
    "D4": GroupCase(
        "D4", "D4", (F4, INVOLUTION), ProjPoint.of(2),
        ConditionTable(6, 144, (5, 7), {1: 49, 2: 97}, n_modulus=3),
        ((L, 1, 0, 0), (L, 1, 1, 1), (L, 1, 2, 0), (L, 1, -2, 0), (L, 1, 3, 1),
         (L, 1, -3, 1), (L, 2, 1, 0), (L, 2, -1, 0), (L, 3, 1, 1), SPECIAL),
        r=4, trace=0, pole=-1, unit_scale=2, totally_real=False, signature_threshold=49,
        claimed_rank_bound=7,
    ),
    "D6": GroupCase(
        "D6", "D6", (F6, INVOLUTION), ProjPoint.of(-2),
        ConditionTable(6, 388800, (7, 11, 13), power_residue=117649),
        ((L, 1, 0, 0), (L, 1, 1, 0), (L, 2, 1, 1), (L, 1, 2, 1), (L, 1, -2, 0),
         (L, 1, 5, 1), (L, 2, 3, 0), (L, 5, 4, 1), (L, 3, 1, 0), (L, 4, -1, 1),
         (L, 2, -1, 0), (L, 5, 1, 1), (L, 3, 2, 0), (L, 4, 5, 1), (L, 1, 3, 0), SPECIAL),
        r=6, trace=1, pole=-1, unit_scale=3, totally_real=False, signature_threshold=20449,
        claimed_rank_bound=11,
    ),
}


def get_case(case_id: str, catalog: Mapping[str, GroupCase] | None = None) -> GroupCase:
    catalog = CATALOG if catalog is None else catalog
    try:
        return catalog[case_id]
    except KeyError:
        raise KeyError(f"unknown case {case_id!r}; expected one of {', '.join(CASE_IDS)}") from None
