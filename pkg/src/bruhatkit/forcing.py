"""The factor-forcing decision procedure, bounded and constructive.

A permutation ``w`` *forces a factor* when every interval isomorphic to
its principal order ideal connects its endpoints through a factor
deletion: some reduced word of the bottom arises from a reduced word of
the top by deleting one consecutive block.  The quantifier ranges over
intervals in arbitrarily large symmetric groups, so the verdict here is
explicitly bounded: scan every interval isomorphic to the ideal in S_m
for m up to a configurable bound, and report either a counterexample
interval (with the exhausted search as proof) or "no counterexample up
to the bound" - never an unconditional "forces".
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from . import bruhat, perms, posets, structure, words
from .limits import DEFAULT_LIMITS, CapExceeded, Limits
from .perms import Perm
from .tables import MAX_TABLE_N, group_table, iter_bits
from .words import Word


@dataclass(frozen=True)
class FactorCertificate:
    """A witness that deleting one factor connects x to y: removing
    ``length`` letters of ``j`` (a reduced word of y) at ``start`` leaves
    ``i``, a reduced word of x."""

    j: Word
    start: int
    length: int
    i: Word

    def factor(self) -> Word:
        return self.j[self.start:self.start + self.length]

    def to_json(self) -> dict:
        return {
            "j": words.format_word(self.j),
            "start": self.start,
            "len": self.length,
            "i": words.format_word(self.i),
        }


def factor_deletion(
    x: Perm, y: Perm, limits: Limits = DEFAULT_LIMITS
) -> FactorCertificate | None:
    """The first factor deletion connecting x and y, or None.

    Scans reduced words of y in lexicographic order and deletion starts
    ascending; the factor length is forced to length(y) - length(x).
    Prefix and suffix products of each word are shared across starts, so
    each candidate deletion costs one composition.
    """
    if not bruhat.bruhat_leq(x, y):
        raise ValueError(
            f"{perms.format_perm(x)} is not below {perms.format_perm(y)}"
        )
    n = len(x)
    gap = perms.length(y) - perms.length(x)
    ident = perms.identity(n, limits)
    for j in words.iter_reduced_words(y, limits):
        prefixes = [ident]
        for a in j:
            prefixes.append(perms.apply_right(prefixes[-1], a))
        suffixes = [ident] * (len(j) + 1)
        for t in range(len(j) - 1, -1, -1):
            suffixes[t] = perms.compose(
                perms.simple_reflection(j[t], n), suffixes[t + 1]
            )
        for start in range(len(j) - gap + 1):
            if perms.compose(prefixes[start], suffixes[start + gap]) == x:
                return FactorCertificate(
                    j=j,
                    start=start,
                    length=gap,
                    i=j[:start] + j[start + gap:],
                )
    return None


def _ideal_fingerprint(w: Perm):
    """(span, size, rank profile, certificate) of the ideal of w."""
    shape = posets.poset_from_interval(bruhat.ideal(w))
    return (
        max(shape.ranks),
        shape.size,
        shape.rank_profile(),
        posets._certificate(shape.ranks, shape.covers),
    )


def _table_candidates(
    w: Perm, m: int, x_lo: int, x_hi: int
) -> Iterator[tuple[Perm, Perm]]:
    """Matching intervals with the bottom element's id in [x_lo, x_hi)."""
    d, size, profile, cert = _ideal_fingerprint(w)
    gt = group_table(m)
    for xid in range(x_lo, x_hi):
        rx = gt.ranks[xid]
        if rx + d > gt.max_rank:
            continue
        above = gt.above[xid]
        for yid in iter_bits(above & gt.rank_masks[rx + d]):
            mask = above & gt.below[yid]
            if mask.bit_count() != size:
                continue
            if any(
                gt.rank_count(mask, rx + i) != profile[i]
                for i in range(d + 1)
            ):
                continue
            struct = posets._interval_structure(gt, mask, rx)
            if posets._certificate(*struct) == cert:
                yield gt.elements[xid], gt.elements[yid]


def _generic_candidates(
    w: Perm, m: int, limits: Limits
) -> Iterator[tuple[Perm, Perm]]:
    """Cover-by-cover fallback for groups beyond the table range."""
    d, size, profile, cert = _ideal_fingerprint(w)
    for x in perms.all_perms(m, limits):
        level = {x}
        for _ in range(d):
            level = {z for v in level for z in bruhat.covers_above(v)}
        for y in sorted(level):
            iv = bruhat.interval(x, y)
            if len(iv.elements) != size or iv.rank_profile() != profile:
                continue
            shape = posets.poset_from_interval(iv)
            if posets._certificate(shape.ranks, shape.covers) == cert:
                yield x, y


def intervals_isomorphic_to(
    w: Perm, m: int, limits: Limits = DEFAULT_LIMITS
) -> Iterator[tuple[Perm, Perm]]:
    """Every interval [x, y] in S_m isomorphic to the ideal of w, each
    exactly once, ordered by (x, y) in one-line order.

    Candidates are pruned by length difference, then element count, then
    rank profile, before the certificate comparison.
    """
    perms.check_group_size(m, limits)
    if m <= MAX_TABLE_N:
        size = len(group_table(m).elements)
        yield from _table_candidates(w, m, 0, size)
    else:
        yield from _generic_candidates(w, m, limits)


@dataclass(frozen=True)
class Counterexample:
    x: Perm
    y: Perm
    m: int

    def to_json(self) -> dict:
        return {
            "x": perms.format_perm(self.x),
            "y": perms.format_perm(self.y),
            "m": self.m,
        }


@dataclass(frozen=True)
class ForcingVerdict:
    """The bounded answer, with a witness either way.

    ``counterexample`` carries an interval isomorphic to the ideal of
    ``w`` with no factor deletion (plus the exhausted-scan statistics in
    ``no_factor_proof``); otherwise ``sample_certificate`` holds the
    deletion certificate of the last interval examined.
    """

    w: Perm
    m_max: int
    outcome: str  # "counterexample" | "no-counterexample-up-to-bound"
    counterexample: Counterexample | None
    no_factor_proof: dict | None
    sample_certificate: FactorCertificate | None
    intervals_examined: int
    seconds: float
    limits: Limits

    def to_json(self, timing: bool = False) -> dict:
        out: dict = {
            "w": perms.format_perm(self.w),
            "m_max": self.m_max,
            "outcome": self.outcome,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample.to_json()
            out["no_factor_proof"] = dict(self.no_factor_proof or {})
        if self.sample_certificate is not None:
            out["certificate"] = self.sample_certificate.to_json()
        out["stats"] = {
            "intervals_examined": self.intervals_examined,
            "seconds": round(self.seconds, 3) if timing else 0.0,
            **self.limits.as_stats(),
        }
        return out


def _pair_orbit_min(x: Perm, y: Perm) -> tuple[Perm, Perm]:
    xi, yi = perms.inverse(x), perms.inverse(y)
    xc, yc = perms.conjugate_by_longest(x), perms.conjugate_by_longest(y)
    xic, yic = perms.conjugate_by_longest(xi), perms.conjugate_by_longest(yi)
    return min((x, y), (xi, yi), (xc, yc), (xic, yic))


def _forces_chunk(args):
    """Worker: scan one id range of bottom elements in S_m and run the
    deletion search on every matching interval, preserving order."""
    w, m, x_lo, x_hi, use_symmetry, limits = args
    records = []
    for x, y in _table_candidates(w, m, x_lo, x_hi):
        if use_symmetry and (x, y) != _pair_orbit_min(x, y):
            continue
        records.append((x, y, factor_deletion(x, y, limits)))
    return records


def _no_factor_proof(y: Perm, gap: int, limits: Limits) -> dict:
    total = len(words.reduced_words(y, limits))
    per_word = perms.length(y) - gap + 1
    return {
        "words_scanned": total,
        "deletions_tried": total * per_word,
    }


def forces_factor(
    w: Perm,
    m_max: int | None = None,
    *,
    jobs: int | None = None,
    use_symmetry: bool = False,
    limits: Limits = DEFAULT_LIMITS,
) -> ForcingVerdict:
    """Scan S_m for w.n <= m <= m_max for a counterexample interval.

    The first interval (smallest m, then least (x, y) in one-line order)
    admitting no factor deletion is returned as the counterexample.  With
    ``use_symmetry`` the scan skips intervals that are order-automorphism
    images of earlier ones; that cannot change the outcome, but it may
    change which counterexample is reported, so it is off by default.
    ``jobs`` fans the scan out over processes; the verdict equals the
    sequential one.
    """
    n = len(w)
    if m_max is None:
        m_max = n + 2
    if m_max < n:
        raise ValueError(f"m_max={m_max} is below the group size {n}")
    perms.check_group_size(m_max, limits)
    started = time.perf_counter()
    examined = 0
    last_cert: FactorCertificate | None = None
    gap = perms.length(w)

    def finish_counterexample(x: Perm, y: Perm, m: int) -> ForcingVerdict:
        return ForcingVerdict(
            w=w,
            m_max=m_max,
            outcome="counterexample",
            counterexample=Counterexample(x=x, y=y, m=m),
            no_factor_proof=_no_factor_proof(y, gap, limits),
            sample_certificate=None,
            intervals_examined=examined,
            seconds=time.perf_counter() - started,
            limits=limits,
        )

    try:
        for m in range(n, m_max + 1):
            if jobs and jobs > 1 and m <= MAX_TABLE_N:
                size = len(group_table(m).elements)
                step = -(-size // jobs)
                chunks = [
                    (w, m, lo, min(lo + step, size), use_symmetry, limits)
                    for lo in range(0, size, step)
                ]
                with ProcessPoolExecutor(max_workers=jobs) as pool:
                    for records in pool.map(_forces_chunk, chunks):
                        for x, y, cert in records:
                            examined += 1
                            if cert is None:
                                return finish_counterexample(x, y, m)
                            last_cert = cert
            else:
                stream = intervals_isomorphic_to(w, m, limits)
                for x, y in stream:
                    if use_symmetry and (x, y) != _pair_orbit_min(x, y):
                        continue
                    examined += 1
                    cert = factor_deletion(x, y, limits)
                    if cert is None:
                        return finish_counterexample(x, y, m)
                    last_cert = cert
    except CapExceeded as exc:
        exc.stats.update(
            intervals_examined=examined,
            seconds=time.perf_counter() - started,
        )
        raise
    return ForcingVerdict(
        w=w,
        m_max=m_max,
        outcome="no-counterexample-up-to-bound",
        counterexample=None,
        no_factor_proof=None,
        sample_certificate=last_cert,
        intervals_examined=examined,
        seconds=time.perf_counter() - started,
        limits=limits,
    )


def certificate_is_shifted_longest(
    x: Perm,
    y: Perm,
    cert: FactorCertificate,
    k: int,
    limits: Limits = DEFAULT_LIMITS,
) -> bool:
    """For an interval [x, y] shaped like the full S_k: does the deleted
    factor shift to a reduced word of the reversal of size k?

    Returns False (rather than raising) on certificates whose factor has
    the wrong size, so corrupted certificates are simply rejected.
    """
    if cert.length != perms.length(y) - perms.length(x):
        return False
    return structure.is_shifted_longest_word(cert.factor(), k, limits)
