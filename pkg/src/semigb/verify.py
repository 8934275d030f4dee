"""Executable checks of the Hilbert-function recursion, leading-monomial
coincidence, degree-D structure and degree bounds for affine sequences whose
top parts are cryptographic semi-regular.

Each ``verify_*`` function returns a :class:`Fragment`; a failed fragment
always carries a concrete counterexample.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from importlib import resources

import numpy as np

from .buchberger import buchberger, dehomogenize_gb, h_seeded_buchberger
from .errors import (
    CapExceeded, GenerationFailed, InvalidDegree, NotArtinianWithinCap,
    PreconditionUnverified,
)
from .f5 import f5_gb
from .koszul import MAX_GENS, MAX_VARS, check_crypto_semiregular, degree_cap
from .macaulay import macaulay_gb
from .polyring import (
    PolyRing, PolySequence, as_sequence, mono_divides, monomials_of_degree, top_part,
)
from .series import (
    degree_of_regularity, hf_from_staircase, macaulay_bound, series_coefficients,
)

RETRY_BUDGET = 50

CHECKS = ("hf_recursion", "lm_coincidence", "degD_structure", "bounds", "engines")


@dataclass(frozen=True)
class InstanceSpec:
    p: int
    n: int
    m: int
    degrees: tuple
    seed: int = 0
    require_semiregular: bool = True

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(int(d) for d in self.degrees))
        if self.m < 1:
            raise ValueError("m must be >= 1")
        if len(self.degrees) != self.m:
            raise ValueError(f"{len(self.degrees)} degrees given for m = {self.m}")
        if any(d < 1 for d in self.degrees):
            raise InvalidDegree("degrees must be positive")
        if self.n > MAX_VARS:
            raise CapExceeded(f"n = {self.n} exceeds the cap {MAX_VARS}", "n")
        if self.m > MAX_GENS:
            raise CapExceeded(f"m = {self.m} exceeds the cap {MAX_GENS}", "m")
        if max(self.degrees) > degree_cap():
            raise CapExceeded(f"degree {max(self.degrees)} exceeds the cap", "degree")

    def to_dict(self):
        d = asdict(self)
        d["degrees"] = list(self.degrees)
        return d


def _dense(ring, d, rng, p):
    terms = {}
    for k in range(d + 1):
        for mono in ring.monomials(k):
            terms[mono] = int(rng.integers(0, p))
    top = ring.monomials(d)
    while not any(terms[m] for m in top):
        terms[top[int(rng.integers(0, len(top)))]] = int(rng.integers(1, p))
    return ring.poly(terms)


def random_affine_sequence(spec: InstanceSpec) -> PolySequence:
    """Dense random polynomials with uniform coefficients, seeded.

    With ``require_semiregular`` the draw is repeated (at most 50 times)
    until the top parts form a cryptographic semi-regular sequence.
    """
    rng = np.random.default_rng(spec.seed)
    ring = PolyRing(spec.p, spec.n)
    for _ in range(RETRY_BUDGET):
        F = PolySequence(tuple(_dense(ring, d, rng, spec.p) for d in spec.degrees))
        if not spec.require_semiregular:
            return F
        try:
            ok, _ = check_crypto_semiregular(F.top())
        except NotArtinianWithinCap as exc:
            if spec.m < spec.n:
                raise GenerationFailed(
                    f"m = {spec.m} < n = {spec.n}: top parts can never be Artinian") from exc
            continue
        if ok:
            return F
    raise GenerationFailed(f"no semi-regular draw in {RETRY_BUDGET} attempts")


def standard_suite():
    """The seeded instance list used by the property tests (42 instances)."""
    shapes = [
        (2, (2, 2)), (2, (2, 2, 2)), (2, (3, 2)), (2, (3, 3, 2)),
        (3, (2, 2, 2)), (3, (2, 2, 2, 2)), (3, (2, 2, 2, 2, 2)), (3, (3, 2, 2, 2)),
        (3, (3, 3, 2, 2)), (3, (3, 3, 3)),
        (4, (2,) * 4), (4, (2,) * 5), (4, (2,) * 6), (4, (2,) * 7),
    ]
    out = []
    seed = 0
    for p in (73, 65521):
        for n, degs in shapes:
            reps = 2 if p == 73 else 1
            for _ in range(reps):
                out.append(InstanceSpec(p, n, len(degs), degs, seed))
                seed += 1
    return out


# ---------------------------------------------------------------------------


@dataclass
class Fragment:
    name: str
    passed: bool
    details: dict = field(default_factory=dict)
    counterexample: dict | None = None

    def to_dict(self):
        return {"name": self.name, "passed": self.passed, "details": self.details,
                "counterexample": self.counterexample}


@dataclass
class VerifyReport:
    spec: dict | None
    fragments: list

    @property
    def passed(self):
        return all(f.passed for f in self.fragments)

    def to_dict(self):
        return {"spec": self.spec, "passed": self.passed,
                "checks": {f.name: f.to_dict() for f in self.fragments}}


@dataclass(frozen=True)
class _Pipeline:
    F: PolySequence
    D: int
    G_top: object
    G_hom: object
    G: object


@lru_cache(maxsize=64)
def _pipeline(F: PolySequence) -> _Pipeline:
    try:
        ok, D = check_crypto_semiregular(F.top())
    except NotArtinianWithinCap as exc:
        raise PreconditionUnverified(f"top parts are not Artinian: {exc}") from exc
    if not ok:
        raise PreconditionUnverified("top parts are not cryptographic semi-regular")
    G_top = buchberger(F.top())
    G_hom = buchberger(F.homogenize())
    G = buchberger(F)
    return _Pipeline(F, D, G_top, G_hom, G)


def _lms_by_degree(G, d, lift=False):
    out = set()
    for g in G.elements:
        if g.degree == d:
            out.add(tuple(g.LM) + ((0,) if lift else ()))
    return out


def _mono_list(s):
    return sorted(list(m) for m in s)


def verify_hf_recursion(F) -> Fragment:
    """HF_hom(d) = HF_top(d) + HF_hom(d - 1) for d < D, the cumulative form,
    and HS_hom = prod(1 - z^d_i)/(1 - z)^(n+1) mod z^D."""
    F = as_sequence(F)
    P = _pipeline(F)
    n = F.ring.n
    lt, lh = P.G_top.lms(), P.G_hom.lms()
    series = series_coefficients(n, F.degrees, P.D - 1, extra_denominator=1)
    rows, bad = [], None
    run = 0
    for d in range(P.D):
        top = hf_from_staircase(lt, n, d)
        hom = hf_from_staircase(lh, n + 1, d)
        prev = hf_from_staircase(lh, n + 1, d - 1) if d else 0
        run += top
        row = {"d": d, "hf_hom": hom, "hf_top": top, "hf_hom_prev": prev,
               "cumulative_top": run, "series": series[d]}
        rows.append(row)
        if bad is None and not (hom == top + prev == run == series[d]):
            bad = row
    return Fragment("hf_recursion", bad is None, {"D": P.D, "rows": rows}, bad)


def verify_lm_coincidence(F) -> Fragment:
    """LM(G_hom)_d = LM(G_top)_d for d < D; y | LM(g) forces deg g >= D."""
    F = as_sequence(F)
    P = _pipeline(F)
    rows, bad = [], None
    for d in range(P.D):
        hom = _lms_by_degree(P.G_hom, d)
        top = _lms_by_degree(P.G_top, d, lift=True)
        rows.append({"d": d, "lm_hom": _mono_list(hom), "lm_top": _mono_list(top)})
        if bad is None and hom != top:
            bad = {"d": d, "only_hom": _mono_list(hom - top), "only_top": _mono_list(top - hom)}
    for g in P.G_hom.elements:
        if bad is None and g.LM[-1] > 0 and g.degree < P.D:
            bad = {"y_divisible_low_degree": str(g), "degree": g.degree}
    return Fragment("lm_coincidence", bad is None, {"D": P.D, "rows": rows}, bad)


def verify_degD_structure(F) -> Fragment:
    """Every degree-D monomial in x is divisible by some LM of (G_hom)_{<=D},
    and every g in (G_hom)_D with g^top != 0 has a single-term top part."""
    F = as_sequence(F)
    P = _pipeline(F)
    n, D = F.ring.n, P.D
    low = [g.LM for g in P.G_hom.elements if g.degree <= D]
    bad = None
    count = 0
    for t in monomials_of_degree(n, D):
        lifted = tuple(t) + (0,)
        count += 1
        if not any(mono_divides(lm, lifted) for lm in low):
            bad = {"uncovered_monomial": list(t)}
            break
    tops = []
    for g in P.G_hom.elements:
        if g.degree != D:
            continue
        tp = top_part(g)
        if tp.is_zero():
            continue
        tops.append({"g": str(g), "top": str(tp)})
        if bad is None and len(tp) != 1:
            bad = {"multi_term_top": str(g), "top": str(tp)}
    return Fragment("degD_structure", bad is None,
                    {"D": D, "monomials_checked": count, "degree_D_tops": tops}, bad)


def verify_bounds(F) -> Fragment:
    """max.GB.deg(F) <= D, sd_hsd <= 2D - 2, max.GB.deg(F^h) <= Macaulay bound,
    and max.GB.deg(F) <= sd_mac(F) = sd_mac(F^h)."""
    F = as_sequence(F)
    P = _pipeline(F)
    D, n = P.D, F.ring.n
    lazard = macaulay_bound(n, F.degrees)
    hsd = h_seeded_buchberger(F, P.G_hom, D)
    _, sd_aff = macaulay_gb(F)
    _, sd_hom = macaulay_gb(F.homogenize())
    measured = {
        "D": D, "two_D_minus_2": 2 * D - 2, "macaulay_bound": lazard,
        "max_gb_deg": P.G.max_degree(), "max_gb_deg_hom": P.G_hom.max_degree(),
        "sd_hsd": hsd.log.max_spoly_degree, "sd_mac": sd_aff, "sd_mac_hom": sd_hom,
        # plain Buchberger on F is outside the 2D - 2 statement; reported only
        "sd_plain_info": P.G.log.highest_step_degree,
    }
    verdicts = {
        "max_gb_deg<=D": measured["max_gb_deg"] <= D,
        "sd_hsd<=2D-2": measured["sd_hsd"] <= 2 * D - 2,
        "max_gb_deg_hom<=macaulay_bound": measured["max_gb_deg_hom"] <= lazard,
        "max_gb_deg<=sd_mac": measured["max_gb_deg"] <= sd_aff,
        "sd_mac==sd_mac_hom": sd_aff == sd_hom,
        "h_seeded_gb_matches": hsd.elements == P.G.elements,
    }
    failed = [k for k, v in verdicts.items() if not v]
    return Fragment("bounds", not failed, {"measured": measured, "verdicts": verdicts},
                    {"failed": failed, "measured": measured} if failed else None)


def verify_engines(F) -> Fragment:
    """Reduced bases from the three engines coincide on F, F^top and F^h, and
    the signature engine meets no zero reduction below D on F^top and F^h."""
    F = as_sequence(F)
    P = _pipeline(F)
    bad = None
    zero = {}
    for label, seq, ref in (("affine", F, P.G), ("top", F.top(), P.G_top),
                            ("hom", F.homogenize(), P.G_hom)):
        sig = f5_gb(seq)
        mac, _ = macaulay_gb(seq)
        if bad is None and not (sig.elements == ref.elements == mac.elements):
            bad = {"input": label, "buchberger": [str(g) for g in ref],
                   "f5": [str(g) for g in sig], "macaulay": [str(g) for g in mac]}
        if label != "affine":
            zero[label] = sig.log.zero_reductions_below(P.D)
    if bad is None and any(zero.values()):
        bad = {"zero_reductions_below_D": zero}
    return Fragment("engines", bad is None, {"D": P.D, "zero_reductions_below_D": zero}, bad)


_CHECK_FUNCS = {
    "hf_recursion": verify_hf_recursion,
    "lm_coincidence": verify_lm_coincidence,
    "degD_structure": verify_degD_structure,
    "bounds": verify_bounds,
    "engines": verify_engines,
}


def verify_all(F, checks=CHECKS, spec: InstanceSpec | None = None) -> VerifyReport:
    frags = [_CHECK_FUNCS[c](F) for c in checks]
    return VerifyReport(spec.to_dict() if spec else None, frags)


def verify_quadratic_dreg_table(n_range=range(2, 11)):
    """D of m = n + 1 quadrics against floor((n+1)/2) + 1, and 2D - 2 against
    n + 1 (n odd) or n (n even)."""
    rows = []
    for n in n_range:
        if n < 2:
            raise ValueError("n must be >= 2")
        D = degree_of_regularity(n, (2,) * (n + 1))
        closed = (n + 1) // 2 + 1
        parity = n + 1 if n % 2 else n
        rows.append({"n": n, "D": D, "closed_form": closed, "two_D_minus_2": 2 * D - 2,
                     "parity_form": parity, "passed": D == closed and 2 * D - 2 == parity})
    return rows


# ---------------------------------------------------------------------------
# golden example


def load_golden(name="worked_example"):
    text = resources.files("semigb").joinpath("data").joinpath(f"{name}.json").read_text()
    return json.loads(text)


def golden_sequence(golden=None) -> PolySequence:
    golden = golden or load_golden()
    ring = PolyRing(golden["p"], golden["n"])
    return PolySequence(tuple(
        ring.poly({tuple(m): c for m, c in terms}) for terms in golden["instance"]))


def verify_golden(golden=None) -> VerifyReport:
    """All checks on the stored example, plus bit-for-bit comparison with the
    recorded bases, series prefixes and Hilbert function values."""
    golden = golden or load_golden()
    F = golden_sequence(golden)
    report = verify_all(F)
    P = _pipeline(F)
    ring, hring = F.ring, F.ring.homogenized()
    n = ring.n
    lh = P.G_hom.lms()
    exp = golden["expected"]
    got = {
        "D": P.D,
        "hs_top": [hf_from_staircase(P.G_top.lms(), n, d) for d in range(len(exp["hs_top"]))],
        "hs_hom_prefix": [hf_from_staircase(lh, n + 1, d) for d in range(P.D)],
        "hf_hom": {k: hf_from_staircase(lh, n + 1, int(k)) for k in exp["hf_hom"]},
        "G_top": set(P.G_top.elements) == {ring.parse(s) for s in exp["G_top"]},
        "G_hom": set(P.G_hom.elements) == {hring.parse(s) for s in exp["G_hom"]},
        "G": set(P.G.elements) == {ring.parse(s) for s in exp["G"]},
        "dehomogenized": set(dehomogenize_gb(P.G_hom).elements)
        == {ring.parse(s) for s in exp["G"]},
    }
    want = {"D": exp["D"], "hs_top": exp["hs_top"], "hs_hom_prefix": exp["hs_hom_prefix"],
            "hf_hom": exp["hf_hom"], "G_top": True, "G_hom": True, "G": True,
            "dehomogenized": True}
    diff = {k: {"expected": want[k], "got": got[k]} for k in want if got[k] != want[k]}
    report.fragments.append(Fragment("golden", not diff, {"compared": sorted(want)},
                                     diff or None))
    report.spec = {"golden": golden.get("name", "worked-example")}
    return report
