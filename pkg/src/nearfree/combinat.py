"""Admissible weak combinatorics (d, k; n2, t, n3) of conic-line arrangements.

Everything here is integer or ``Fraction`` arithmetic. Rows are always
reported sorted by (k, n2, t, n3).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb

from .jacobian import near_free_lhs

DEGREE_SEARCH_LIMIT = 200


@dataclass
class Candidate:
    d: int
    k: int
    n2: int
    t: int
    n3: int
    exponents: tuple[int, int] | None = None
    checks: dict = field(default_factory=dict)

    @property
    def m(self) -> int:
        return 2 * self.k + self.d

    @property
    def tau(self) -> int:
        return self.n2 + 3 * self.t + 4 * self.n3

    @property
    def row(self) -> tuple[int, int, int]:
        return (self.n2, self.t, self.n3)

    def sort_key(self):
        return (self.k, self.n2, self.t, self.n3, self.exponents or (0, 0))

    def to_json(self) -> dict:
        out = {"d": self.d, "k": self.k, "n2": self.n2, "t": self.t, "n3": self.n3,
               "m": self.m, "tau": self.tau}
        if self.exponents is not None:
            out["exponents"] = list(self.exponents)
        out["checks"] = dict(self.checks)
        return out


# -- bounds --------------------------------------------------------------------------

def mdr_lower_bound(m: int) -> int:
    """ceil(2m/3 - 2)."""
    return math.ceil(Fraction(2 * m, 3) - 2)


def exponent_range(m: int) -> range:
    """Admissible d1 = mdr for a nearly free arrangement of degree m.

    A smooth conic component rules out cones, so d1 >= 1 as well.
    """
    return range(max(1, mdr_lower_bound(m)), m // 2 + 1)


def degree_upper_bound() -> int:
    """Largest m with ceil(2m/3 - 2) <= floor(m/2)."""
    feasible = [m for m in range(3, DEGREE_SEARCH_LIMIT) if mdr_lower_bound(m) <= m // 2]
    best = max(feasible)
    # past the search window 2m/3 - 2 > m/2 whenever m > 12, so nothing is missed
    assert all(Fraction(2 * m, 3) - 2 > Fraction(m, 2) for m in range(13, DEGREE_SEARCH_LIMIT))
    return best


def degree_infeasibility_witness(m: int) -> tuple[int, int] | None:
    """(ceil(2m/3 - 2), floor(m/2)) when the first exceeds the second, else None."""
    lo, hi = mdr_lower_bound(m), m // 2
    return (lo, hi) if lo > hi else None


# -- constraints -----------------------------------------------------------------------

def count_holds(d: int, k: int, n2: int, t: int, n3: int) -> bool:
    m = 2 * k + d
    return comb(m, 2) - k == n2 + 2 * t + 3 * n3


def hirzebruch_margin(c: Candidate) -> Fraction:
    """8k + n2 + 3/4 n3 - (d + 5/2 t)."""
    return 8 * c.k + c.n2 + Fraction(3, 4) * c.n3 - c.d - Fraction(5, 2) * c.t


def hirzebruch_holds(c: Candidate) -> bool | None:
    """The inequality for m >= 6; None (not applicable) below that."""
    if c.m < 6:
        return None
    return hirzebruch_margin(c) >= 0


def _max_llc(secant_pairs: int, d: int) -> int:
    """Most line-line-conic triple points obtainable from the given secant line-conic pairs.

    Two lines meet once, so a conic cut by s secant lines carries at most
    binom(s, 2) such points; the sum is largest when secants are concentrated.
    """
    if d < 2:
        return 0
    q, rem = divmod(secant_pairs, d)
    return q * comb(d, 2) + comb(rem, 2)


@lru_cache(maxsize=None)
def pair_incidence_feasible(d: int, k: int, n2: int, t: int, n3: int) -> bool:
    """Necessary condition: the singular points can be distributed over component pairs.

    Each line-line pair meets once transversally; each line-conic pair is
    either tangent (one tacnode) or secant (two transversal points); each
    conic-conic pair has total intersection multiplicity 4. Tacnodes come
    from line-conic or conic-conic contacts, triple points are of type
    LLL, LLC, LCC or CCC and only use transversal pair incidences.
    """
    if not count_holds(d, k, n2, t, n3):
        return False
    ll, lc, cc = comb(d, 2), d * k, 4 * comb(k, 2)
    for t_lc in range(0, min(t, lc) + 1):
        t_cc = t - t_lc
        if 2 * t_cc > cc:
            continue
        secant = lc - t_lc
        for b_llc in range(0, min(n3, ll, secant, _max_llc(secant, d)) + 1) if d >= 2 else (0,):
            lc_left = secant - b_llc  # secant pairs carry 2 transversal points each
            for b_lcc in range(0, min(n3 - b_llc, lc_left) + 1) if k >= 2 else (0,):
                if b_llc + b_lcc > n3:
                    break
                cc_left = cc - 2 * t_cc - b_lcc
                if cc_left < 0:
                    break
                rest = n3 - b_llc - b_lcc
                lll_cap = (ll - b_llc) // 3 if d >= 3 else 0
                ccc_cap = cc_left // 3 if k >= 3 else 0
                if rest <= lll_cap + ccc_cap:
                    return True
    return False


# -- enumeration -------------------------------------------------------------------------

def _raw_rows(m: int):
    for k in range(1, (m - 1) // 2 + 1):
        d = m - 2 * k
        total = comb(m, 2) - k
        for n3 in range(0, total // 3 + 1):
            for t in range(0, (total - 3 * n3) // 2 + 1):
                n2 = total - 2 * t - 3 * n3
                yield d, k, n2, t, n3


def count_admissible(m: int, refine: bool = True) -> list[Candidate]:
    """All (d, k; n2, t, n3) with d, k >= 1 and 2k + d = m satisfying the count.

    With ``refine`` the pair-incidence feasibility filter is applied too.
    """
    if m < 3:
        raise ValueError("degree must be at least 3")
    out = []
    for d, k, n2, t, n3 in _raw_rows(m):
        assert count_holds(d, k, n2, t, n3)
        checks = {"count": True}
        if refine:
            ok = pair_incidence_feasible(d, k, n2, t, n3)
            checks["pair_incidence"] = ok
            if not ok:
                continue
        out.append(Candidate(d, k, n2, t, n3, checks=checks))
    out.sort(key=Candidate.sort_key)
    return out


def tau_from_exponents(d1: int, d2: int) -> int:
    return d1 * d1 + d2 * d2 + d1 * d2 - d1 - 2 * d2


def tacnode_triple_sum_doubled(d1: int, d2: int, k: int) -> int:
    """2(t + n3) = d1^2 + d2^2 - d1 - 3 d2 + 2k."""
    return d1 * d1 + d2 * d2 - d1 - 3 * d2 + 2 * k


def _nearly_free_branch(rows, d1: int, d2: int, apply_hirzebruch: bool = True):
    tau = tau_from_exponents(d1, d2)
    assert near_free_lhs(d1 + d2, d1) == tau + 1
    out = []
    for c in rows:
        if c.tau != tau:
            continue
        if 2 * (c.t + c.n3) != tacnode_triple_sum_doubled(d1, d2, c.k):
            raise AssertionError(f"derived tacnode/triple identity fails for {c}")
        cand = Candidate(c.d, c.k, c.n2, c.t, c.n3, (d1, d2), dict(c.checks))
        cand.checks["tjurina_exponents"] = True
        cand.checks["tacnode_triple_identity"] = True
        h = hirzebruch_holds(cand)
        cand.checks["hirzebruch"] = h
        if apply_hirzebruch and h is False:
            continue
        out.append(cand)
    return out


def nearly_free_candidates(m: int, refine: bool = True) -> list[Candidate]:
    """Weak combinatorics compatible with near-freeness, one entry per (row, exponents)."""
    rows = count_admissible(m, refine=refine)
    out = []
    for d1 in exponent_range(m):
        out.extend(_nearly_free_branch(rows, d1, m - d1))
    admissible = {(r.d, r.k, r.n2, r.t, r.n3) for r in rows}
    assert all((c.d, c.k, c.n2, c.t, c.n3) in admissible for c in out)
    out.sort(key=Candidate.sort_key)
    return out


OPEN_DEGREES = frozenset({8, 9})


def existence_status(m: int) -> str:
    """OPEN for the undecided degrees, otherwise EMPTY or CANDIDATES."""
    if m in OPEN_DEGREES:
        return "OPEN"
    return "EMPTY" if not nearly_free_candidates(m) else "CANDIDATES"


def nonexistence_certificate(m: int) -> dict:
    """Machine-checkable record of which constraint removes every branch.

    Uses only the count, the exponent/Tjurina relation, the mdr lower bound
    and the Hirzebruch-type inequality (no pair-incidence refinement).
    """
    lo, hi = mdr_lower_bound(m), m // 2
    cert = {
        "degree": m,
        "mdr_lower_bound": lo,
        "mdr_upper_bound": hi,
        "exponent_range_empty": lo > hi,
        "branches": [],
    }
    if lo > hi:
        cert["eliminated_by"] = "mdr_bound"
        cert["witness"] = f"d1 range empty: {lo} > {hi}"
        cert["empty"] = True
        return cert
    rows = count_admissible(m, refine=False)
    empty = True
    for d1 in exponent_range(m):
        d2 = m - d1
        tau = tau_from_exponents(d1, d2)
        for k in range(1, (m - 1) // 2 + 1):
            d = m - 2 * k
            branch_rows = [r for r in rows if r.k == k]
            twice_e = tacnode_triple_sum_doubled(d1, d2, k)
            entry = {
                "exponents": [d1, d2],
                "tau": tau,
                "k": k,
                "d": d,
                "tacnode_plus_triple": Fraction(twice_e, 2),
                "node_plus_triple": comb(m, 2) - k - twice_e,
            }
            survivors = _nearly_free_branch(branch_rows, d1, d2, apply_hirzebruch=False)
            entry["rows_before_hirzebruch"] = [
                {"n2": c.n2, "t": c.t, "n3": c.n3, "hirzebruch_margin": hirzebruch_margin(c)}
                for c in survivors
            ]
            if m >= 6 and d >= 0:
                bound = Fraction(2, 5) * (8 * k + entry["node_plus_triple"] - d)
                entry["tacnode_upper_bound"] = math.floor(bound) if bound >= 0 else -1
            passing = [c for c in survivors if c.checks["hirzebruch"] is not False]
            if not survivors:
                entry["eliminated_by"] = "tjurina_exponents"
            elif not passing:
                entry["eliminated_by"] = "hirzebruch"
            else:
                entry["eliminated_by"] = None
                empty = False
            cert["branches"].append(entry)
    cert["empty"] = empty
    return cert


def verify_certificate(cert: dict) -> bool:
    """Independently re-check a certificate produced by :func:`nonexistence_certificate`."""
    m = cert["degree"]
    if cert["exponent_range_empty"]:
        return math.ceil(Fraction(2 * m, 3) - 2) > m // 2
    for b in cert["branches"]:
        d1, d2 = b["exponents"]
        k, d = b["k"], b["d"]
        if d1 + d2 != m or 2 * k + d != m:
            return False
        total = comb(m, 2) - k
        tau = tau_from_exponents(d1, d2)
        # brute force over all (n2, t, n3) with the right count and Tjurina number
        expected = []
        for n3 in range(total // 3 + 1):
            for t in range((total - 3 * n3) // 2 + 1):
                n2 = total - 2 * t - 3 * n3
                if n2 + 3 * t + 4 * n3 == tau:
                    expected.append((n2, t, n3))
        listed = [(r["n2"], r["t"], r["n3"]) for r in b["rows_before_hirzebruch"]]
        if sorted(expected) != sorted(listed):
            return False
        for r in b["rows_before_hirzebruch"]:
            margin = 8 * k + r["n2"] + Fraction(3, 4) * r["n3"] - d - Fraction(5, 2) * r["t"]
            if margin != r["hirzebruch_margin"]:
                return False
            if cert["empty"] and margin >= 0:
                return False
    return True
