"""Sato-Tate groups for genus 1 and 2: exact Haar moments and samplers.

Each implemented group is stored with its torus eigenvalue pattern (Laurent
monomials in 1 or 2 variables) and its Weyl integration density, an exact
Laurent polynomial whose constant term is 1.  The Haar expectation of
a1^d1 * a2^d2 is then the constant term of character^powers * density,
computed in exact rational arithmetic.

Conventions: a1 and a2 are the first and second elementary symmetric
functions of the normalized Frobenius eigenvalues.  Every implemented group
contains -1, so a1 and -a1 are equidistributed and the sign convention
(trace versus linear L-coefficient) never changes a tracked statistic.

The genus-2 catalog also carries the component-group metadata for the full
classification: 52 finite-extension rows across the six connected parts,
34 of them realizable over Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb, pi
from typing import Optional

import numpy as np

from .laurent import LaurentPoly

__all__ = [
    "STGroupEntry",
    "ComponentRow",
    "AxiomReport",
    "catalog",
    "get_entry",
    "weyl_density",
    "coeff_character",
    "exact_moment",
    "component_moment",
    "theoretical_density",
    "closed_form_moment",
    "sample_classes",
    "sample_class",
    "trace_stats",
    "st_axiom_check",
]


@dataclass(frozen=True)
class ComponentRow:
    """One row of the genus-2 component-group table.

    label is the abstract component group (C1, C2, ..., S4xC2); name is the
    standard name of that particular extension of the identity component
    (several rows can share a label: distinct extensions); q_realizable
    marks whether this group occurs for an abelian surface over Q.
    """

    label: str
    name: str
    q_realizable: bool


@dataclass(frozen=True)
class STGroupEntry:
    id: str
    genus: int
    torus_rank: int
    eigenvalue_pattern: tuple[tuple[int, ...], ...]
    weyl_density: LaurentPoly
    q_realizable: bool
    end_algebra: str = ""  # End(A) tensor R for the generic member, genus 2
    n_components: int = 1
    component_rows: tuple[ComponentRow, ...] = field(default=())
    point_masses: tuple[tuple[str, Fraction, Fraction], ...] = field(default=())
    closed_form: Optional[str] = None

    @property
    def components(self) -> list[tuple[str, int]]:
        """(label, multiplicity) pairs, aggregated in table order."""
        out: list[tuple[str, int]] = []
        for row in self.component_rows:
            if out and out[-1][0] == row.label:
                out[-1] = (row.label, out[-1][1] + 1)
            else:
                out.append((row.label, 1))
        return out

    def point_mass(self, statistic: str, value) -> Fraction:
        v = Fraction(value)
        for stat, val, mass in self.point_masses:
            if stat == statistic and val == v:
                return mass
        return Fraction(0)


def _su2_density(nvars: int, var: int) -> LaurentPoly:
    """Weyl density of SU(2) in variable `var`: 1 - z^2/2 - z^-2/2."""
    up = [0] * nvars
    dn = [0] * nvars
    up[var], dn[var] = 2, -2
    return (
        LaurentPoly.constant(nvars, 1)
        - LaurentPoly.monomial(up, Fraction(1, 2))
        - LaurentPoly.monomial(dn, Fraction(1, 2))
    )


def _usp4_density() -> LaurentPoly:
    """Weyl density of USp(4): (1/8) prod over the 8 roots of (1 - z^alpha).

    Root system C2: alpha in {(+-2,0), (0,+-2), (+-1,+-1)}.  The constant
    term must come out to exactly 1 (the Weyl group has order 8); this is
    asserted here and cross-checked against a matrix Monte Carlo oracle in
    the test suite.
    """
    roots = [(2, 0), (-2, 0), (0, 2), (0, -2), (1, 1), (-1, -1), (1, -1), (-1, 1)]
    prod = LaurentPoly.constant(2, 1)
    for alpha in roots:
        prod = prod * (LaurentPoly.constant(2, 1) - LaurentPoly.monomial(alpha))
    dens = prod * Fraction(1, 8)
    assert dens.constant_term() == 1, "USp(4) Weyl density misnormalized"
    return dens


_PAIR_1 = ((1,), (-1,))
_DIAG_2 = ((1,), (1,), (-1,), (-1,))
_SPLIT_2 = ((1, 0), (-1, 0), (0, 1), (0, -1))

# the 52 component-group rows, in table order per connected part; the name
# column identifies the extension (standard classification names) and the
# flag marks realizability over Q (34 rows in total are marked)
_U1_2_ROWS = (
    ("C1", "C_1", False),
    ("C2", "C_2", False),
    ("C2", "J(C_1)", True),
    ("C2", "C_{2,1}", False),
    ("C3", "C_3", False),
    ("C4", "C_4", False),
    ("C4", "C_{4,1}", False),
    ("C6", "C_6", False),
    ("C6", "J(C_3)", True),
    ("C6", "C_{6,1}", False),
    ("D2", "D_2", False),
    ("D2", "J(C_2)", True),
    ("D2", "D_{2,1}", True),
    ("D3", "D_3", False),
    ("D3", "D_{3,2}", True),
    ("D4", "D_4", False),
    ("D4", "D_{4,1}", True),
    ("D4", "D_{4,2}", True),
    ("D6", "D_6", False),
    ("D6", "J(D_3)", True),
    ("D6", "D_{6,1}", True),
    ("D6", "D_{6,2}", True),
    ("A4", "T", False),
    ("S4", "O", False),
    ("S4", "O_1", False),
    ("C4xC2", "J(C_4)", True),
    ("C6xC2", "J(C_6)", True),
    ("D2xC2", "J(D_2)", True),
    ("D4xC2", "J(D_4)", True),
    ("D6xC2", "J(D_6)", True),
    ("A4xC2", "J(T)", True),
    ("S4xC2", "J(O)", True),
)
_SU2_2_ROWS = (
    ("C1", "E_1", True),
    ("C2", "E_2", True),
    ("C2", "J(E_1)", True),
    ("C3", "E_3", True),
    ("C4", "E_4", True),
    ("C6", "E_6", True),
    ("D2", "J(E_2)", True),
    ("D3", "J(E_3)", True),
    ("D4", "J(E_4)", True),
    ("D6", "J(E_6)", True),
)
_U1XU1_ROWS = (
    ("C1", "F", False),
    ("C2", "F_a", False),
    ("C2", "F_ab", True),
    ("C4", "F_ac", True),
    ("D2", "F_{a,b}", True),
)
_U1XSU2_ROWS = (
    ("C1", "G_{1,3}", False),
    ("C2", "N(G_{1,3})", True),
)
_SU2XSU2_ROWS = (
    ("C1", "G_{3,3}", True),
    ("C2", "N(G_{3,3})", True),
)
_USP4_ROWS = (("C1", "USp(4)", True),)


def _rows(raw) -> tuple[ComponentRow, ...]:
    return tuple(ComponentRow(*r) for r in raw)


@lru_cache(maxsize=1)
def catalog() -> tuple[STGroupEntry, ...]:
    """All implemented group entries, genus 1 first, in fixed order."""
    one1 = LaurentPoly.constant(1, 1)
    su2_1 = _su2_density(1, 0)
    entries = [
        STGroupEntry(
            id="U(1)",
            genus=1,
            torus_rank=1,
            eigenvalue_pattern=_PAIR_1,
            weyl_density=one1,
            q_realizable=True,
            n_components=1,
            component_rows=_rows((("C1", "U(1)", True),)),
            closed_form="central_binomial",
        ),
        STGroupEntry(
            id="SU(2)",
            genus=1,
            torus_rank=1,
            eigenvalue_pattern=_PAIR_1,
            weyl_density=su2_1,
            q_realizable=True,
            n_components=1,
            component_rows=_rows((("C1", "SU(2)", True),)),
            closed_form="catalan",
        ),
        STGroupEntry(
            id="N(U(1))",
            genus=1,
            torus_rank=1,
            eigenvalue_pattern=_PAIR_1,
            weyl_density=one1,  # identity component only
            q_realizable=True,
            n_components=2,
            component_rows=_rows((("C2", "N(U(1))", True),)),
            point_masses=(("a1", Fraction(0), Fraction(1, 2)),),
            closed_form="half_central_binomial",
        ),
        STGroupEntry(
            id="U(1)_2",
            genus=2,
            torus_rank=1,
            eigenvalue_pattern=_DIAG_2,
            weyl_density=one1,
            q_realizable=True,
            end_algebra="M2(C)",
            n_components=1,
            component_rows=_rows(_U1_2_ROWS),
        ),
        STGroupEntry(
            id="SU(2)_2",
            genus=2,
            torus_rank=1,
            eigenvalue_pattern=_DIAG_2,
            weyl_density=su2_1,
            q_realizable=True,
            end_algebra="M2(R)",
            n_components=1,
            component_rows=_rows(_SU2_2_ROWS),
        ),
        STGroupEntry(
            id="U(1)xU(1)",
            genus=2,
            torus_rank=2,
            eigenvalue_pattern=_SPLIT_2,
            weyl_density=LaurentPoly.constant(2, 1),
            q_realizable=True,
            end_algebra="CxC",
            n_components=1,
            component_rows=_rows(_U1XU1_ROWS),
        ),
        STGroupEntry(
            id="U(1)xSU(2)",
            genus=2,
            torus_rank=2,
            eigenvalue_pattern=_SPLIT_2,
            weyl_density=_su2_density(2, 1),
            q_realizable=True,
            end_algebra="RxC",
            n_components=1,
            component_rows=_rows(_U1XSU2_ROWS),
        ),
        STGroupEntry(
            id="SU(2)xSU(2)",
            genus=2,
            torus_rank=2,
            eigenvalue_pattern=_SPLIT_2,
            weyl_density=_su2_density(2, 0) * _su2_density(2, 1),
            q_realizable=True,
            end_algebra="RxR",
            n_components=1,
            component_rows=_rows(_SU2XSU2_ROWS),
        ),
        STGroupEntry(
            id="USp(4)",
            genus=2,
            torus_rank=2,
            eigenvalue_pattern=_SPLIT_2,
            weyl_density=_usp4_density(),
            q_realizable=True,
            end_algebra="R",
            n_components=1,
            component_rows=_rows(_USP4_ROWS),
        ),
    ]
    return tuple(entries)


def get_entry(group_id: str) -> STGroupEntry:
    for e in catalog():
        if e.id == group_id:
            return e
    raise KeyError(f"unknown group id {group_id!r}")


def weyl_density(group_id: str) -> LaurentPoly:
    return get_entry(group_id).weyl_density


def _elementary(pattern, nvars: int, k: int) -> LaurentPoly:
    total = LaurentPoly.zero(nvars)
    for subset in combinations(pattern, k):
        exps = tuple(sum(col) for col in zip(*subset)) if subset else (0,) * nvars
        total = total + LaurentPoly.monomial(exps)
    return total


def coeff_character(group_id: str, k: int) -> LaurentPoly:
    """k-th elementary symmetric function of the eigenvalue pattern."""
    entry = get_entry(group_id)
    if not 0 <= k <= len(entry.eigenvalue_pattern):
        raise ValueError(f"k must be 0..{len(entry.eigenvalue_pattern)}")
    return _elementary(entry.eigenvalue_pattern, entry.torus_rank, k)


def _entry_moment(entry: STGroupEntry, d1: int, d2: int) -> Fraction:
    if d1 < 0 or d2 < 0:
        raise ValueError("moment orders must be nonnegative")
    if entry.genus == 1 and d2 != 0:
        raise ValueError(f"{entry.id} is genus 1; a2 moments undefined")
    if entry.id == "N(U(1))":
        # average over the two components; a1 vanishes identically on the
        # reflection component
        torus = _entry_moment(get_entry("U(1)"), d1, 0)
        refl = Fraction(1) if d1 == 0 else Fraction(0)
        return (torus + refl) / 2
    rank = entry.torus_rank
    integrand = _elementary(entry.eigenvalue_pattern, rank, 1) ** d1
    if d2:
        integrand = integrand * _elementary(entry.eigenvalue_pattern, rank, 2) ** d2
    return (integrand * entry.weyl_density).constant_term()


@lru_cache(maxsize=4096)
def exact_moment(group_id: str, d1: int, d2: int = 0) -> Fraction:
    """Haar expectation of a1^d1 * a2^d2, exact.

    For the two-component group N(U(1)) this is the average over components:
    the identity component integrates against the torus, the reflection
    component has a1 identically 0.
    """
    return _entry_moment(get_entry(group_id), d1, d2)


def component_moment(group_id: str, d: int) -> Fraction:
    """a1 moment averaged over components (equals exact_moment when the
    group is connected)."""
    return exact_moment(group_id, d, 0)


def theoretical_density(group_id: str, statistic: str, value) -> Fraction:
    """Exact point mass of the named statistic at the given value.

    Connected groups have continuous spectra: mass 0 everywhere.  N(U(1))
    carries mass 1/2 at a1 = 0 from its reflection component.
    """
    if statistic not in ("a1", "a2"):
        raise ValueError("statistic must be 'a1' or 'a2'")
    return get_entry(group_id).point_mass(statistic, value)


def closed_form_moment(kind: str, d: int) -> Fraction:
    """Reference closed forms for the genus-1 groups' even moments M_{2d}."""
    if kind == "catalan":
        return Fraction(comb(2 * d, d), d + 1)
    if kind == "central_binomial":
        return Fraction(comb(2 * d, d))
    if kind == "half_central_binomial":
        return Fraction(1) if d == 0 else Fraction(comb(2 * d, d), 2)
    raise ValueError(f"unknown closed form {kind!r}")


# ---------------------------------------------------------------------------
# samplers: rejection against a uniform envelope on the eigenangle box,
# with the density evaluated trigonometrically

_TWO_PI = 2 * pi


def _fold(u: np.ndarray) -> np.ndarray:
    # uniform on [0, 2pi) to the class angle in [0, pi]
    return np.minimum(u, _TWO_PI - u)


def _draw_u1(rng: np.random.Generator, n: int) -> np.ndarray:
    return _fold(rng.uniform(0.0, _TWO_PI, n))


def _draw_su2(rng: np.random.Generator, n: int) -> np.ndarray:
    """Density (2/pi) sin^2(theta) on [0, pi]; envelope accept prob sin^2."""
    out = np.empty(n)
    have = 0
    while have < n:
        m = max(2 * (n - have), 64)
        theta = rng.uniform(0.0, pi, m)
        u = rng.uniform(0.0, 1.0, m)
        acc = theta[u < np.sin(theta) ** 2]
        take = min(len(acc), n - have)
        out[have : have + take] = acc[:take]
        have += take
    return out


_USP4_SUP = 16.0 / 27.0  # max of sin^2 t1 sin^2 t2 (cos t1 - cos t2)^2


def _draw_usp4(rng: np.random.Generator, n: int) -> np.ndarray:
    """Joint density (8/pi^2) sin^2 t1 sin^2 t2 (cos t1 - cos t2)^2 on
    [0, pi]^2; uniform proposals, exact sup 16/27 as the envelope."""
    out = np.empty((n, 2))
    have = 0
    while have < n:
        m = max(6 * (n - have), 128)
        t1 = rng.uniform(0.0, pi, m)
        t2 = rng.uniform(0.0, pi, m)
        u = rng.uniform(0.0, 1.0, m)
        f = (np.sin(t1) * np.sin(t2) * (np.cos(t1) - np.cos(t2))) ** 2
        keep = u * _USP4_SUP < f
        acc1, acc2 = t1[keep], t2[keep]
        take = min(len(acc1), n - have)
        out[have : have + take, 0] = acc1[:take]
        out[have : have + take, 1] = acc2[:take]
        have += take
    out.sort(axis=1)  # canonical order inside each conjugacy class
    return out


def sample_classes(group_id: str, n: int, seed: int) -> np.ndarray:
    """n conjugacy classes as eigenangle rows, deterministic in seed.

    Shape (n, genus).  Rank-1 genus-2 groups return duplicated columns
    because their eigenvalues come in the doubled pattern (u, u, 1/u, 1/u).
    """
    entry = get_entry(group_id)
    rng = np.random.default_rng(seed)
    gid = entry.id
    if gid in ("U(1)", "SU(2)", "N(U(1))"):
        if gid == "U(1)":
            theta = _draw_u1(rng, n)
        elif gid == "SU(2)":
            theta = _draw_su2(rng, n)
        else:
            # fair coin between the torus and the reflection component;
            # reflection classes all have eigenangle pi/2
            refl = rng.integers(0, 2, n).astype(bool)
            theta = np.full(n, pi / 2)
            k = int((~refl).sum())
            theta[~refl] = _draw_u1(rng, k)
        return theta[:, None]
    if gid in ("U(1)_2", "SU(2)_2"):
        theta = _draw_u1(rng, n) if gid == "U(1)_2" else _draw_su2(rng, n)
        return np.repeat(theta[:, None], 2, axis=1)
    if gid == "U(1)xU(1)":
        return np.column_stack([_draw_u1(rng, n), _draw_u1(rng, n)])
    if gid == "U(1)xSU(2)":
        return np.column_stack([_draw_u1(rng, n), _draw_su2(rng, n)])
    if gid == "SU(2)xSU(2)":
        return np.column_stack([_draw_su2(rng, n), _draw_su2(rng, n)])
    if gid == "USp(4)":
        return _draw_usp4(rng, n)
    raise KeyError(f"no sampler for {group_id!r}")


def sample_class(group_id: str, seed: int) -> tuple[float, ...]:
    """One class; per-call seeds make index-split parallel draws exact."""
    return tuple(sample_classes(group_id, 1, seed)[0])


def trace_stats(genus: int, angles: np.ndarray):
    """(a1, a2) arrays from eigenangle rows; a2 is None for genus 1."""
    if genus == 1:
        return 2.0 * np.cos(angles[:, 0]), None
    c1, c2 = np.cos(angles[:, 0]), np.cos(angles[:, 1])
    return 2.0 * (c1 + c2), 2.0 + 4.0 * c1 * c2


# ---------------------------------------------------------------------------
# axiom checks

@dataclass(frozen=True)
class AxiomReport:
    group_id: str
    ok: bool
    failures: tuple[str, ...]
    unverified: tuple[str, ...]


def st_axiom_check(entry: STGroupEntry, max_weight: int = 12) -> AxiomReport:
    """Verify the checkable Sato-Tate axioms on a catalog entry.

    ST1 (structural): the eigenvalue pattern is closed under inversion and
    the density is a genuine probability (constant term 1, symmetric), so
    the entry describes a closed subgroup of the right unitary symplectic
    group.  ST2: some one-parameter torus substitution realizes the doubled
    eigenvalue pattern (u, u, 1/u, 1/u) (or (u, 1/u) in genus 1); whether
    it avoids factoring through a smaller pattern cannot be decided from
    this metadata and is reported as unverified.  ST3: all moments of
    weight d1 + 2*d2 <= max_weight are nonnegative integers.
    """
    failures: list[str] = []
    pattern = entry.eigenvalue_pattern
    neg = sorted(tuple(-x for x in e) for e in pattern)
    if neg != sorted(pattern):
        failures.append("ST1: eigenvalue pattern not closed under inversion")
    dens_terms = entry.weyl_density.terms
    sym = {tuple(-x for x in e): c for e, c in dens_terms.items()}
    if sym != dens_terms:
        failures.append("ST1: density not symmetric under inversion")
    if entry.weyl_density.constant_term() != 1:
        failures.append("ST1: density constant term is not 1")

    want = sorted([1] * entry.genus + [-1] * entry.genus)
    rank = entry.torus_rank
    found = False
    for m in _nonzero_vectors(rank, 4):
        image = sorted(sum(ei * mi for ei, mi in zip(e, m)) for e in pattern)
        if image == want:
            found = True
            break
    if not found:
        failures.append(
            f"ST2: no one-parameter substitution gives the pattern {want}"
        )

    for d1 in range(max_weight + 1):
        top = 0 if entry.genus == 1 else (max_weight - d1) // 2
        for d2 in range(top + 1):
            m = _entry_moment(entry, d1, d2)
            if m.denominator != 1 or m < 0:
                failures.append(
                    f"ST3: moment ({d1},{d2}) = {m} is not a nonnegative integer"
                )
    return AxiomReport(
        group_id=entry.id,
        ok=not failures,
        failures=tuple(failures),
        unverified=("ST2: non-factoring of the one-parameter subgroup",),
    )


def _nonzero_vectors(rank: int, bound: int):
    rng = range(-bound, bound + 1)
    if rank == 1:
        for a in rng:
            if a:
                yield (a,)
    else:
        for a in rng:
            for b in rng:
                if a or b:
                    yield (a, b)
