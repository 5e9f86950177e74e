"""Gauge-KMS functionals: the rank series of the level Gram operators and
the inductive per-bidegree evaluator.

A normal word of bidegree (n, m) is a_{i₁}…a_{i_n} a_{j₁}†…a_{j_m}†.  The
KMS exchange moves the n generator letters past the trace, giving
κ_λ(X) = λⁿ·κ_λ(X̃) with X̃ the exchanged word; Wick ordering X̃ and
splitting off lower bidegrees yields one exact linear system per bidegree.
"""

from __future__ import annotations

from .algebra import CoeffTensor, Polynomial
from .linalg import Matrix, identity
from .rewrite import wick_order
from .scalars import ONE, ZERO, Scalar
from .tensorops import DEFAULT_DIM_CAP, p_n

__all__ = ["KmsNonUniquenessError", "kms_series", "KmsEvaluator", "kms_evaluate"]


class KmsNonUniquenessError(ValueError):
    """The per-bidegree linear system is singular at this λ: the functional
    value is not uniquely determined."""


def kms_series(T: CoeffTensor, lam, n_max: int, cap: int = DEFAULT_DIM_CAP) -> dict:
    """Exact ranks of the level Gram operators and partial sums Σ λⁿ·rank.

    Returns {"ranks": [rank P_0, …, rank P_{n_max}],
             "partial_sums": [Scalar, …]} (both lists of length n_max+1).
    """
    from .algebra import hermiticity_check

    lam = Scalar.coerce(lam)
    if lam.im or lam.re < 0:
        raise ValueError("lambda must be a nonnegative real rational")
    if not hermiticity_check(T):
        raise ValueError("kms_series requires a hermitian tensor")
    ranks = [1]
    for n in range(1, n_max + 1):
        ranks.append(p_n(T, n, cap).rank())
    partial_sums = []
    acc = ZERO
    lam_pow = ONE
    for n, r in enumerate(ranks):
        acc = acc + lam_pow * Scalar(r)
        partial_sums.append(acc)
        lam_pow = lam_pow * lam
    return {"ranks": ranks, "partial_sums": partial_sums}


def _bidegree(w) -> tuple:
    n = sum(1 for c in w if c > 0)
    return n, len(w) - n


class KmsEvaluator:
    """Evaluates the gauge-KMS functional κ_λ on Wick-ordered polynomials,
    solving each bidegree block once and caching the values."""

    def __init__(self, T: CoeffTensor, lam):
        self.T = T
        self.lam = Scalar.coerce(lam)
        if self.lam.im:
            raise ValueError("lambda must be real")
        self.known: dict = {(): ONE}
        self._solved = {(0, 0)}

    # -- internals -------------------------------------------------------------
    def _bidegree_words(self, n: int, m: int) -> list:
        d = self.T.d
        words = [()]
        for _ in range(n):
            words = [w + (i,) for w in words for i in range(1, d + 1)]
        for _ in range(m):
            words = [w + (-j,) for w in words for j in range(1, d + 1)]
        return words

    def _ensure(self, n: int, m: int) -> None:
        if (n, m) in self._solved:
            return
        if n > 0 and m > 0:
            self._ensure(n - 1, m - 1)
        words = self._bidegree_words(n, m)
        idx = {w: a for a, w in enumerate(words)}
        N = len(words)
        lam_n = ONE
        for _ in range(n):
            lam_n = lam_n * self.lam
        A = [[ZERO] * N for _ in range(N)]
        b = [ZERO] * N
        for a, w in enumerate(words):
            exchanged = w[n:] + w[:n]  # dag group first, then the gen group
            nf = wick_order(Polynomial.monomial(exchanged), self.T)
            for v, c in nf.terms.items():
                if _bidegree(v) == (n, m):
                    A[a][idx[v]] = A[a][idx[v]] + c
                else:
                    b[a] = b[a] + c * self.known[v]
        S = identity(N) - Matrix(A).scale(lam_n)
        rhs = [lam_n * x for x in b]
        try:
            sol = S.solve(rhs)
        except ValueError as exc:
            raise KmsNonUniquenessError(
                f"bidegree ({n},{m}) system is singular at lambda={self.lam!r}"
            ) from exc
        for a, w in enumerate(words):
            self.known[w] = sol[a]
        self._solved.add((n, m))

    # -- public ------------------------------------------------------------------
    def value_of_word(self, w) -> Scalar:
        n, m = _bidegree(w)
        if n != m and self.lam != ONE:
            return ZERO  # gauge grading kills unbalanced words away from λ=1
        self._ensure(n, m)
        return self.known[w]

    def evaluate(self, X: Polynomial, max_bidegree: int = 8) -> Scalar:
        Xn = wick_order(X, self.T)
        for w in Xn.terms:
            if len(w) > max_bidegree:
                raise ValueError(
                    f"monomial bidegree total {len(w)} exceeds cap {max_bidegree}"
                )
        total = ZERO
        for w, c in Xn.terms.items():
            total = total + c * self.value_of_word(w)
        return total


def kms_evaluate(X: Polynomial, lam, T: CoeffTensor, max_bidegree: int = 8) -> Scalar:
    """κ_λ(X) with κ_λ(1)=1, computed by induction on the bidegree."""
    return KmsEvaluator(T, lam).evaluate(X, max_bidegree)
