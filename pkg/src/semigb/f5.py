"""Signature-based Groebner bases (F5-style) under the Schreyer module ordering.

Signatures t*e_i are compared by LM(t*f_i) first; on ties the larger
generator index is the smaller signature.  S-pairs are processed in ascending
signature order, which for homogeneous input is degree by degree.  Pairs are
discarded when

* another pair with the same signature was already processed, or
* their signature is divisible by the leading term of a known syzygy.  The
  known syzygies are the trivial ones LM(f_j)*e_i (i < j), the principal
  syzygies between basis elements, and every signature that reduced to zero.

No rewritten criterion beyond these.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .buchberger import EngineOptions, GroebnerBasis, StepLog, _solving_degree, interreduce
from .errors import TimeoutDegree
from .polyring import (
    Polynomial, as_sequence, dehomogenize, drl_key, mono_div, mono_divides,
    mono_lcm, mono_mul, _heap_key,
)


@dataclass(frozen=True)
class Signature:
    """t * e_i; ``index`` is 0-based here and printed 1-based."""

    mono: tuple
    index: int

    def __str__(self):
        return f"{self.mono}*e{self.index + 1}"


@dataclass
class LabeledPoly:
    poly: Polynomial
    sig: Signature


class _Schreyer:
    def __init__(self, lmf):
        self.lmf = lmf

    def key(self, mono, i):
        return (drl_key(mono_mul(mono, self.lmf[i])), -i)

    def degree(self, sig):
        return sum(sig.mono) + sum(self.lmf[sig.index])


def _sig_divides(syz, sig):
    return any(mono_divides(t, sig.mono) for t in syz[sig.index])


def _sigma_reduce(h, sig, skey, basis, order, p):
    """Regular (signature-safe) reduction of the dict ``h``.

    Returns (remainder dict, singular) where ``singular`` flags a leading
    monomial that is only reducible by a multiple of the same signature.
    """
    heap = [(_heap_key(m), m) for m in h]
    heapq.heapify(heap)
    out = {}
    singular = False
    leading = True
    while heap:
        _, m = heapq.heappop(heap)
        c = h.pop(m, 0)
        if not c:
            continue
        reducer = None
        same_sig = False
        for lp in basis:
            g = lp.poly
            if not mono_divides(g.LM, m):
                continue
            u = mono_div(m, g.LM)
            k = order.key(mono_mul(u, lp.sig.mono), lp.sig.index)
            if k < skey:
                reducer = (g, u)
                break
            if k == skey:
                same_sig = True
        if reducer is None:
            if leading and same_sig:
                singular = True
            leading = False
            out[m] = c
            continue
        g, u = reducer
        for gm, gc in g.terms[1:]:
            mm = mono_mul(gm, u)
            old = h.get(mm)
            if old is None:
                h[mm] = (-c * gc) % p
                heapq.heappush(heap, (_heap_key(mm), mm))
            else:
                v = (old - c * gc) % p
                if v:
                    h[mm] = v
                else:
                    del h[mm]
    return out, singular


def signature_basis(F, opts: EngineOptions | None = None):
    """Run the signature engine on homogeneous F.

    Returns (labeled basis, syzygy signatures per index, StepLog).
    """
    F = as_sequence(F)
    opts = opts or EngineOptions()
    ring, p = F.ring, F.ring.p
    m = len(F)
    lmf = [f.LM for f in F]
    order = _Schreyer(lmf)
    log = StepLog()

    syz = [[] for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            syz[i].append(lmf[j])

    basis = []
    heap = []
    counter = 0
    one = ring.one_mono
    for i in range(m):
        heapq.heappush(heap, (order.key(one, i), counter, Signature(one, i), None))
        counter += 1

    processed = set()
    snapshots = []
    current = None
    truncated_at = None
    while heap:
        skey, _, sig, pair = heapq.heappop(heap)
        d = order.degree(sig)
        if opts.truncate_degree is not None and d > opts.truncate_degree:
            truncated_at = opts.truncate_degree
            break
        if opts.max_degree is not None and d > opts.max_degree:
            raise TimeoutDegree(f"step degree {d} exceeds cap {opts.max_degree}")
        if current != d:
            if current is not None:
                snapshots.append((current, len(basis), 0))
            current = d
            log.steps.append(d)
        rec = log.record(d)
        if _sig_divides(syz, sig):
            rec.syzygy += 1
            continue
        if sig in processed:
            rec.duplicate += 1
            continue
        processed.add(sig)
        rec.pairs += 1
        if pair is None:
            h = dict(F[sig.index]._dict)
        else:
            a, ua, b, ub = pair
            h = dict(basis[a].poly.mul_term(ua)._dict)
            for mm, c in basis[b].poly.mul_term(ub).terms:
                v = (h.get(mm, 0) - c) % p
                if v:
                    h[mm] = v
                else:
                    h.pop(mm, None)
        rem, singular = _sigma_reduce(h, sig, skey, basis, order, p)
        if not rem:
            rec.zero_reductions += 1
            syz[sig.index].append(sig.mono)
            continue
        if singular:
            rec.singular += 1
            continue
        g = Polynomial._from_clean(ring, rem).monic()
        new = LabeledPoly(g, sig)
        k = len(basis)
        for idx, old in enumerate(basis):
            # principal syzygy g*v_old - old*v_g has leading term max of these two
            s1 = Signature(mono_mul(g.LM, old.sig.mono), old.sig.index)
            s2 = Signature(mono_mul(old.poly.LM, sig.mono), sig.index)
            k1, k2 = order.key(s1.mono, s1.index), order.key(s2.mono, s2.index)
            if k1 != k2:
                top = s1 if k1 > k2 else s2
                syz[top.index].append(top.mono)
            L = mono_lcm(g.LM, old.poly.LM)
            u_new, u_old = mono_div(L, g.LM), mono_div(L, old.poly.LM)
            t1 = Signature(mono_mul(u_new, sig.mono), sig.index)
            t2 = Signature(mono_mul(u_old, old.sig.mono), old.sig.index)
            q1, q2 = order.key(t1.mono, t1.index), order.key(t2.mono, t2.index)
            if q1 == q2:
                log.record(sum(L)).singular += 1
                continue
            if q1 > q2:
                item = (q1, counter, t1, (k, u_new, idx, u_old))
            else:
                item = (q2, counter, t2, (idx, u_old, k, u_new))
            counter += 1
            heapq.heappush(heap, item)
        basis.append(new)
        rec.new_elements += 1
        rec.new_lms.append(g.LM)
    if current is not None:
        snapshots.append((current, len(basis), 0))
    log._snapshots = snapshots
    log._basis = (0, [lp.poly.LM for lp in basis])
    log.truncated_at = truncated_at
    return basis, syz, log


def f5_gb(F, opts: EngineOptions | None = None) -> GroebnerBasis:
    """Groebner basis via the signature engine, inter-reduced to the reduced basis.

    Inhomogeneous input is homogenized first and dehomogenized afterwards.
    """
    F = as_sequence(F)
    if not F.is_homogeneous():
        Gh = f5_gb(F.homogenize(), opts)
        out = interreduce([dehomogenize(g) for g in Gh.elements])
        return GroebnerBasis(out, F.ring, log=Gh.log)
    basis, _, log = signature_basis(F, opts)
    out = interreduce([lp.poly for lp in basis])
    truncated_at = log.__dict__.pop("truncated_at", None)
    log.highest_step_degree, _ = _solving_degree(log, [g.LM for g in out], max(F.degrees))
    return GroebnerBasis(out, F.ring, log=log, truncated_at=truncated_at)
