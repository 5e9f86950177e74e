"""Wick-ordering rewrite engine, identity verification, ideal membership.

The single rewrite rule replaces an adjacent pair ``a_i† a_j`` by
``δ_ij·1 + Σ_{k,l} T_{ij}^{kl} a_l a_k†``.  The rewriting system is confluent
(diamond property), so the normal form is independent of the substitution
order; the default strategy rewrites the leftmost such pair and memoizes
normal forms per word.
"""

from __future__ import annotations

import random
from typing import Iterable, Optional

from .algebra import CoeffTensor, Polynomial, Word
from .scalars import ONE, Scalar

__all__ = [
    "TermBudgetExceeded",
    "is_normal",
    "wick_order",
    "verify_identity",
    "ideal_membership",
    "Rewriter",
    "DEFAULT_TERM_CAP",
]

DEFAULT_TERM_CAP = 10**6


class TermBudgetExceeded(RuntimeError):
    """Raised when an intermediate rewrite exceeds the monomial budget."""


def is_normal(w: Word) -> bool:
    """True iff no Dag letter occurs to the left of any Gen letter."""
    seen_dag = False
    for c in w:
        if c < 0:
            seen_dag = True
        elif seen_dag:
            return False
    return True


def _first_redex(w: Word) -> int:
    """Index p of the leftmost adjacent (Dag, Gen) pair, or -1."""
    for p in range(len(w) - 1):
        if w[p] < 0 and w[p + 1] > 0:
            return p
    return -1


def _redex_positions(w: Word) -> list:
    return [p for p in range(len(w) - 1) if w[p] < 0 and w[p + 1] > 0]


def _check_indices(p: Polynomial, d: int) -> None:
    for w in p.terms:
        for c in w:
            if abs(c) > d:
                raise ValueError(f"generator index {abs(c)} out of range 1..{d}")


class Rewriter:
    """Leftmost-strategy Wick normalizer with a per-tensor memo cache."""

    def __init__(self, T: CoeffTensor, cap: int = DEFAULT_TERM_CAP):
        self.T = T
        self.cap = cap
        self._cache: dict = {}
        self._work = 0

    def normal_form_word(self, w: Word) -> dict:
        """Normal form of a single word as a dict Word -> Scalar."""
        cached = self._cache.get(w)
        if cached is not None:
            return cached
        p = _first_redex(w)
        if p < 0:
            out = {w: ONE}
            self._cache[w] = out
            return out
        i, j = -w[p], w[p + 1]
        head, tail = w[:p], w[p + 2:]
        out: dict = {}
        branches = []
        if i == j:
            branches.append((ONE, head + tail))
        for (k, l, c) in self.T.row(i, j):
            branches.append((c, head + (l, -k) + tail))
        for coeff, bw in branches:
            sub = self.normal_form_word(bw)
            self._work += len(sub)
            if self._work > self.cap:
                raise TermBudgetExceeded(
                    f"intermediate term count exceeded cap={self.cap}"
                )
            for sw, sc in sub.items():
                v = coeff * sc
                s = out.get(sw)
                s = v if s is None else s + v
                if s:
                    out[sw] = s
                elif sw in out:
                    del out[sw]
        self._cache[w] = out
        return out

    def wick_order(self, p: Polynomial) -> Polynomial:
        _check_indices(p, self.T.d)
        self._work = 0
        acc: dict = {}
        for w, c in p.terms.items():
            for sw, sc in self.normal_form_word(w).items():
                v = c * sc
                s = acc.get(sw)
                s = v if s is None else s + v
                if s:
                    acc[sw] = s
                elif sw in acc:
                    del acc[sw]
        res = Polynomial.__new__(Polynomial)
        res.terms = acc
        return res


def _rewriter_for(T: CoeffTensor, cap: int) -> Rewriter:
    rw = T._rewriter
    if rw is None or rw.cap != cap:
        rw = Rewriter(T, cap)
        T._rewriter = rw
    return rw


def _wick_order_strategy(
    p: Polynomial, T: CoeffTensor, strategy: str, rng, cap: int
) -> Polynomial:
    """One-step-at-a-time rewriting with a configurable redex choice.

    Used by the confluence property tests; not memoized.
    """
    _check_indices(p, T.d)
    pending = dict(p.terms)
    done: dict = {}
    steps = 0
    while pending:
        if strategy == "random":
            w = rng.choice(list(pending))
        else:
            w = next(iter(pending))
        c = pending.pop(w)
        positions = _redex_positions(w)
        if not positions:
            s = done.get(w)
            s = c if s is None else s + c
            if s:
                done[w] = s
            elif w in done:
                del done[w]
            continue
        if strategy == "leftmost":
            pos = positions[0]
        elif strategy == "rightmost":
            pos = positions[-1]
        elif strategy == "random":
            pos = rng.choice(positions)
        else:
            raise ValueError(f"unknown strategy {strategy!r}")
        i, j = -w[pos], w[pos + 1]
        head, tail = w[:pos], w[pos + 2:]
        branches = []
        if i == j:
            branches.append((ONE, head + tail))
        for (k, l, tc) in T.row(i, j):
            branches.append((tc, head + (l, -k) + tail))
        for coeff, bw in branches:
            v = c * coeff
            s = pending.get(bw)
            s = v if s is None else s + v
            if s:
                pending[bw] = s
            elif bw in pending:
                del pending[bw]
        steps += 1
        if len(pending) + len(done) > cap or steps > cap:
            raise TermBudgetExceeded(f"term count exceeded cap={cap}")
    res = Polynomial.__new__(Polynomial)
    res.terms = done
    return res


def wick_order(
    p: Polynomial,
    T: CoeffTensor,
    strategy: str = "leftmost",
    rng: Optional[random.Random] = None,
    cap: int = DEFAULT_TERM_CAP,
) -> Polynomial:
    """Normalize ``p`` modulo the Wick relations of ``T``.

    The result contains only normal words and is independent of ``strategy``
    (confluence); strategies other than the default bypass the memo cache.
    """
    if strategy == "leftmost" and rng is None:
        return _rewriter_for(T, cap).wick_order(p)
    if rng is None:
        rng = random.Random(0)
    return _wick_order_strategy(p, T, strategy, rng, cap)


def verify_identity(p: Polynomial, q: Polynomial, T: CoeffTensor, cap: int = DEFAULT_TERM_CAP) -> bool:
    """True iff p = q in the Wick algebra of T (normal form of p−q is 0)."""
    return wick_order(p - q, T, cap=cap).is_zero


# ---------------------------------------------------------------------------
# Ideal membership in the generator-only subalgebra
# ---------------------------------------------------------------------------


def _gen_words(d: int, length: int):
    if length == 0:
        yield ()
        return
    for w in _gen_words(d, length - 1):
        for i in range(1, d + 1):
            yield w + (i,)


def ideal_membership(
    p: Polynomial,
    gens: Iterable[Polynomial],
    max_deg: int,
    d: Optional[int] = None,
) -> bool:
    """Degree-truncated membership of ``p`` in the two-sided ideal of the
    generator-only subalgebra generated by ``gens``.

    Decides whether p lies in the linear span of {u·g·v} with u, v words in
    the Gen letters and total length ≤ max_deg, by exact linear algebra per
    homogeneous word length.
    """
    gens = list(gens)
    if not p.is_generator_only() or any(not g.is_generator_only() for g in gens):
        raise ValueError("ideal_membership requires generator-only polynomials")
    if p.is_zero:
        return True
    if p.max_word_len() > max_deg:
        raise ValueError("p has monomials longer than max_deg")
    if d is None:
        d = max([p.max_index()] + [g.max_index() for g in gens])

    # Split p into homogeneous length components when possible; inhomogeneous
    # generators force a single combined solve.
    all_homog = all(g.is_homogeneous() for g in gens)

    def span_vectors(lengths: set) -> list:
        vecs = []
        for g in gens:
            if g.is_zero:
                continue
            glen_min = min(len(w) for w in g.terms)
            glen_max = max(len(w) for w in g.terms)
            for total in sorted(lengths):
                for a in range(0, total - glen_min + 1):
                    b = total - glen_max - a
                    if all_homog:
                        if b < 0:
                            continue
                        bs = [b]
                    else:
                        bs = [bb for bb in range(0, total - glen_min - a + 1)]
                    for b_ in bs:
                        for u in _gen_words(d, a):
                            pu = Polynomial.monomial(u)
                            for v in _gen_words(d, b_):
                                q = pu * g * Polynomial.monomial(v)
                                if q and q.max_word_len() <= max_deg:
                                    vecs.append(q)
        # Deduplicate identical polynomials.
        seen = set()
        out = []
        for q in vecs:
            key = frozenset(q.terms.items())
            if key not in seen:
                seen.add(key)
                out.append(q)
        return out

    if all_homog:
        by_len: dict = {}
        for w, c in p.terms.items():
            by_len.setdefault(len(w), {})[w] = c
        for length, comp in by_len.items():
            vecs = span_vectors({length})
            if not _component_in_span(comp, vecs):
                return False
        return True
    lengths = set(range(0, max_deg + 1))
    return _component_in_span(dict(p.terms), span_vectors(lengths))


def _component_in_span(target_terms: dict, vecs: list) -> bool:
    from .linalg import Matrix

    if not target_terms:
        return True
    if not vecs:
        return False
    basis = sorted({w for q in vecs for w in q.terms} | set(target_terms),
                   key=lambda w: (len(w), w))
    index = {w: r for r, w in enumerate(basis)}
    rows = len(basis)
    cols = len(vecs)
    data = [[Scalar(0)] * cols for _ in range(rows)]
    for cidx, q in enumerate(vecs):
        for w, c in q.terms.items():
            data[index[w]][cidx] = c
    rhs = [Scalar(0)] * rows
    for w, c in target_terms.items():
        rhs[index[w]] = c
    return Matrix(data).solve_consistent(rhs)
