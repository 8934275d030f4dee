"""Buchberger's algorithm with the normal strategy.

Pairs are processed in ascending order of (LCM degree, LCM, indices); every
maximal run of pairs sharing an LCM degree is one *step*.  The coprime
criterion and the Gebauer-Moeller chain criteria prune pairs, and a known
Hilbert function can stop a step early (Hilbert-driven mode).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .errors import NotHomogeneous, OracleViolation, TimeoutDegree, ZeroInput
from .polyring import (
    Polynomial, PolySequence, _nf_dict, as_sequence, dehomogenize, drl_key,
    mono_coprime, mono_degree, mono_divides, mono_lcm, reduce, s_polynomial,
)


@dataclass
class EngineOptions:
    """Knobs shared by the engines.

    ``max_degree`` aborts with ``TimeoutDegree`` once a step beyond it would
    start; ``truncate_degree`` instead stops quietly, which for homogeneous
    input yields a d-Groebner basis.
    """

    criteria: bool = True
    hilbert_driven: bool = False
    max_degree: int | None = None
    truncate_degree: int | None = None


@dataclass
class StepRecord:
    degree: int
    pairs: int = 0
    coprime: int = 0
    chain: int = 0
    hilbert_skipped: int = 0
    syzygy: int = 0
    duplicate: int = 0
    singular: int = 0
    zero_reductions: int = 0
    new_elements: int = 0
    new_lms: list = field(default_factory=list)

    def to_dict(self):
        return {k: (list(map(list, v)) if k == "new_lms" else v)
                for k, v in self.__dict__.items()}


@dataclass
class StepLog:
    records: dict = field(default_factory=dict)
    steps: list = field(default_factory=list)
    highest_step_degree: int = 0
    max_spoly_degree: int = 0

    def record(self, d) -> StepRecord:
        if d not in self.records:
            self.records[d] = StepRecord(d)
        return self.records[d]

    def zero_reductions_below(self, D):
        return sum(r.zero_reductions for d, r in self.records.items() if d < D)

    def to_dict(self):
        return {
            "highest_step_degree": self.highest_step_degree,
            "max_spoly_degree": self.max_spoly_degree,
            "steps": list(self.steps),
            "records": [self.records[d].to_dict() for d in sorted(self.records)],
        }


@dataclass
class GroebnerBasis:
    elements: list
    ring: object
    reduced: bool = True
    log: StepLog = field(default_factory=StepLog)
    truncated_at: int | None = None

    @property
    def ordering(self):
        return self.ring.ordering

    def lms(self):
        return [g.LM for g in self.elements]

    def max_degree(self):
        return max((g.degree for g in self.elements), default=0)

    def is_unit(self):
        return len(self.elements) == 1 and self.elements[0].degree == 0

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other):
        if isinstance(other, GroebnerBasis):
            return self.ring == other.ring and self.elements == other.elements
        return NotImplemented

    def to_dict(self, signed=True):
        from .polyring import format_polynomial
        return {
            "ring": {"p": self.ring.p, "n": self.ring.n, "hom_var": self.ring.hom_var},
            "reduced": self.reduced,
            "elements": [format_polynomial(g, signed=signed) for g in self.elements],
            "leading_monomials": [list(g.LM) for g in self.elements],
            "max_degree": self.max_degree(),
            "truncated_at": self.truncated_at,
            "log": self.log.to_dict(),
        }


# ---------------------------------------------------------------------------
# reduced bases


def minimalize(G):
    """Keep one element per minimal leading monomial (first occurrence wins)."""
    G = [g for g in G if not g.is_zero()]
    order = sorted(range(len(G)), key=lambda i: (drl_key(G[i].LM), i))
    out = []
    for i in order:
        g = G[i]
        if not any(mono_divides(h.LM, g.LM) for h in out):
            out.append(g)
    return out


def interreduce(G):
    """Reduced Groebner basis from any Groebner basis G, sorted by ascending LM."""
    G = minimalize(G)
    if any(g.degree == 0 for g in G):
        return [G[0].ring.one()]
    out = []
    for i, g in enumerate(G):
        others = G[:i] + G[i + 1:]
        out.append(reduce(g, others).monic())
    out.sort(key=lambda g: drl_key(g.LM))
    return out


# ---------------------------------------------------------------------------
# pair bookkeeping


class _PairQueue:
    def __init__(self, log, criteria=True):
        self.heap = []
        self.live = {}
        self.log = log
        self.criteria = criteria

    def push(self, i, j, L):
        key = (mono_degree(L), drl_key(L), i, j)
        self.live[(i, j)] = L
        heapq.heappush(self.heap, (key, i, j))

    def drop(self, pair, kind):
        L = self.live.pop(pair)
        rec = self.log.record(mono_degree(L))
        setattr(rec, kind, getattr(rec, kind) + 1)

    def pop(self):
        while self.heap:
            key, i, j = heapq.heappop(self.heap)
            if (i, j) in self.live:
                L = self.live.pop((i, j))
                return i, j, L
        return None

    def peek_degree(self):
        while self.heap:
            key, i, j = self.heap[0]
            if (i, j) in self.live:
                return key[0]
            heapq.heappop(self.heap)
        return None

    def update(self, lms, h_index):
        """Gebauer-Moeller update when basis element ``h_index`` is added."""
        lm_h = lms[h_index]
        if not self.criteria:
            for i in range(h_index):
                self.push(i, h_index, mono_lcm(lms[i], lm_h))
            return
        # criterion B on old pairs
        for (i, j), L in list(self.live.items()):
            if (mono_divides(lm_h, L) and mono_lcm(lms[i], lm_h) != L
                    and mono_lcm(lms[j], lm_h) != L):
                self.drop((i, j), "chain")
        groups = {}
        for i in range(h_index):
            groups.setdefault(mono_lcm(lms[i], lm_h), []).append(i)
        kept = []
        for L in sorted(groups, key=drl_key):
            idx = groups[L]
            rec = self.log.record(mono_degree(L))
            if any(mono_divides(K, L) for K in kept):
                rec.chain += len(idx)
                continue
            kept.append(L)
            if any(mono_coprime(lms[i], lm_h) for i in idx):
                rec.coprime += 1
                rec.chain += len(idx) - 1
                continue
            rec.chain += len(idx) - 1
            self.push(min(idx), h_index, L)


def _standard_count(ring, lms, d, cache):
    key = (d, len(lms))
    if key not in cache:
        cache[key] = sum(1 for t in ring.monomials(d)
                         if not any(mono_divides(g, t) for g in lms))
    return cache[key]


def _solving_degree(log, final_lms, fallback):
    """Highest step degree (and largest S-polynomial degree) processed until the
    intermediate basis first contains a Groebner basis; ``fallback`` when the
    input already does."""
    snapshots = log.__dict__.pop("_snapshots", [])
    initial_len, basis_lms = log.__dict__.pop("_basis", (None, final_lms))

    def complete(k):
        have = basis_lms[:k]
        return all(any(mono_divides(a, t) for a in have) for t in final_lms)

    if initial_len is None or complete(initial_len):
        return fallback, 0
    highest = spoly = 0
    for d, k, sp in snapshots:
        highest, spoly = max(highest, d), max(spoly, sp)
        if complete(k):
            break
    return highest, spoly


def _buchberger_core(F, opts, hf=None):
    F = as_sequence(F)
    ring = F.ring
    log = StepLog()
    queue = _PairQueue(log, criteria=opts.criteria)
    G, lms = [], []
    p = ring.p

    def add(h):
        G.append(h)
        lms.append(h.LM)
        queue.update(lms, len(G) - 1)

    unit = None
    for f in F:
        if f.degree == 0:
            unit = ring.one()
            break
        add(f.monic())
    if unit is not None:
        return [unit], log, None

    initial_len = len(G)
    snapshots = []
    cache = {}
    current = None
    spoly_max = 0
    truncated_at = None
    while True:
        d = queue.peek_degree()
        if d is None:
            break
        if opts.truncate_degree is not None and d > opts.truncate_degree:
            truncated_at = opts.truncate_degree
            break
        if opts.max_degree is not None and d > opts.max_degree:
            raise TimeoutDegree(f"step degree {d} exceeds cap {opts.max_degree}")
        if current != d:
            if current is not None:
                snapshots.append((current, len(G), spoly_max))
            current = d
            log.steps.append(d)
        i, j, L = queue.pop()
        rec = log.record(d)
        if hf is not None:
            target = hf(d)
            if target is not None:
                have = _standard_count(ring, lms, d, cache)
                if have < target:
                    raise OracleViolation(
                        f"degree {d}: {have} standard monomials but oracle claims {target}")
                if have == target:
                    rec.hilbert_skipped += 1
                    continue
        rec.pairs += 1
        S = s_polynomial(G[i], G[j])
        if S.is_zero():
            rec.zero_reductions += 1
            continue
        spoly_max = max(spoly_max, S.degree)
        h = Polynomial._from_clean(ring, _nf_dict(dict(S._dict), G, p))
        if h.is_zero():
            rec.zero_reductions += 1
            continue
        if h.degree == 0:
            return [ring.one()], log, None
        h = h.monic()
        rec.new_elements += 1
        rec.new_lms.append(h.LM)
        add(h)
    if current is not None:
        snapshots.append((current, len(G), spoly_max))
    log._snapshots = snapshots
    log._basis = (initial_len, list(lms))
    return G, log, truncated_at


def _finish(F, G, log, truncated_at):
    F = as_sequence(F)
    out = interreduce(G)
    log.highest_step_degree, log.max_spoly_degree = _solving_degree(
        log, [g.LM for g in out], max(F.degrees))
    return GroebnerBasis(out, F.ring, log=log, truncated_at=truncated_at)


def buchberger(F, opts: EngineOptions | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of <F> under the ring's DRL ordering."""
    opts = opts or EngineOptions()
    G, log, truncated_at = _buchberger_core(F, opts)
    return _finish(F, G, log, truncated_at)


def buchberger_hilbert_driven(F, hf, opts: EngineOptions | None = None) -> GroebnerBasis:
    """Buchberger with a Hilbert-function oracle.

    ``hf(d)`` must return HF_{R/<F>}(d), or ``None`` where it is not known (the
    engine then processes that degree with the plain criteria).  A step is cut
    short as soon as the current leading monomials leave exactly ``hf(d)``
    standard monomials of degree d.
    """
    F = as_sequence(F)
    if not F.is_homogeneous():
        raise NotHomogeneous("Hilbert-driven Buchberger needs homogeneous input")
    if not callable(hf):
        seq = list(hf)
        hf = lambda d, seq=seq: seq[d] if d < len(seq) else None  # noqa: E731
    opts = opts or EngineOptions()
    G, log, truncated_at = _buchberger_core(F, opts, hf=hf)
    return _finish(F, G, log, truncated_at)


def dehomogenize_gb(G_hom) -> GroebnerBasis:
    """Dehomogenize a Groebner basis of <F^h> and inter-reduce it to the reduced
    Groebner basis of <F>."""
    elems = G_hom.elements if isinstance(G_hom, GroebnerBasis) else list(G_hom)
    if not elems:
        raise ZeroInput("empty basis")
    ring = elems[0].ring
    if not ring.hom_var:
        return GroebnerBasis(interreduce(elems), ring)
    deh = [dehomogenize(g) for g in elems]
    log = G_hom.log if isinstance(G_hom, GroebnerBasis) else StepLog()
    return GroebnerBasis(interreduce(deh), ring.base(), log=log)


def is_d_groebner(G, d) -> bool:
    """True iff every S-pair of G with LCM degree <= d reduces to zero mod G."""
    G = [g for g in G if not g.is_zero()]
    if not all(g.is_homogeneous() for g in G):
        raise NotHomogeneous("d-Groebner test needs homogeneous polynomials")
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            L = mono_lcm(G[a].LM, G[b].LM)
            if mono_degree(L) > d or mono_coprime(G[a].LM, G[b].LM):
                continue
            if not reduce(s_polynomial(G[a], G[b]), G).is_zero():
                return False
    return True


def is_groebner(G) -> bool:
    """Buchberger's criterion over all pairs (inhomogeneous input allowed)."""
    G = [g for g in G if not g.is_zero()]
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            if mono_coprime(G[a].LM, G[b].LM):
                continue
            if not reduce(s_polynomial(G[a], G[b]), G).is_zero():
                return False
    return True


def is_groebner_basis_of(G, F) -> bool:
    """G is a Groebner basis of <F>, given G is contained in <F>."""
    return is_groebner(G) and all(reduce(f, G).is_zero() for f in F)


def h_seeded_buchberger(F, G_hom: GroebnerBasis, D: int, opts: EngineOptions | None = None):
    """Affine Groebner basis computation continued from H = {g|_{y=1} : g in
    (G_hom)_{<=D}}.

    Returns the reduced basis of <F>; its log's ``max_spoly_degree`` is the
    largest degree of an S-polynomial formed during the latter process, and
    ``highest_step_degree`` the largest LCM step degree.
    """
    F = as_sequence(F)
    H = [dehomogenize(g) for g in G_hom.elements if g.degree <= D]
    seq = PolySequence(tuple(H) + tuple(F.polys))
    opts = opts or EngineOptions()
    G, log, _ = _buchberger_core(seq, opts)
    out = interreduce(G)
    log.highest_step_degree, log.max_spoly_degree = _solving_degree(
        log, [g.LM for g in out], 0)
    return GroebnerBasis(out, F.ring, log=log)
