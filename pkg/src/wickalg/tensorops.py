"""Matrix realizations on tensor powers: T, T̃, slot embeddings, the Fock
Gram operators P_n, spectra, and positivity predicates.

Basis convention on H^{⊗n} (H = C^d): the word (i₁,…,i_n) with 1-based
letters sits at flat index Σ_k (i_k−1)·d^{n−k} (big-endian).
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .algebra import CoeffTensor
from .eigen import eigvalsh
from .linalg import Matrix, identity, kron, zeros
from .reports import Report, rational_str
from .scalars import ONE, Scalar

__all__ = [
    "DimensionCapExceeded",
    "MatrixOp",
    "SpectralSummary",
    "DEFAULT_DIM_CAP",
    "PSD_TOL",
    "word_to_index",
    "index_to_word",
    "t_matrix",
    "ttilde_matrix",
    "embed",
    "p_n",
    "spectral_summary",
    "positivity_report",
    "cuntz_stability_predicate",
]

DEFAULT_DIM_CAP = 4096
PSD_TOL = 1e-9


class DimensionCapExceeded(ValueError):
    """Raised when a requested tensor power exceeds the dense-size cap."""


class MatrixOp(Matrix):
    """An exact matrix on H^{⊗n} carrying its tensor-power metadata."""

    __slots__ = ("d", "n")

    def __init__(self, data, d: int, n: int):
        super().__init__(data)
        if self.rows != d**n or self.cols != d**n:
            raise ValueError(f"expected a {d**n}x{d**n} matrix for d={d}, n={n}")
        self.d = d
        self.n = n

    @staticmethod
    def wrap(m: Matrix, d: int, n: int) -> "MatrixOp":
        op = MatrixOp.__new__(MatrixOp)
        op.rows, op.cols, op.data = m.rows, m.cols, m.data
        if op.rows != d**n or op.cols != d**n:
            raise ValueError(f"expected a {d**n}x{d**n} matrix for d={d}, n={n}")
        op.d, op.n = d, n
        return op


def word_to_index(w, d: int) -> int:
    idx = 0
    for i in w:
        idx = idx * d + (i - 1)
    return idx


def index_to_word(idx: int, d: int, n: int) -> tuple:
    out = []
    for _ in range(n):
        out.append(idx % d + 1)
        idx //= d
    return tuple(reversed(out))


def _check_cap(d: int, n: int, cap: int) -> None:
    if d**n > cap:
        raise DimensionCapExceeded(
            f"d^n = {d**n} exceeds the dense cap {cap}; raise the cap explicitly"
        )


def t_matrix(T: CoeffTensor) -> MatrixOp:
    """The operator on H⊗H with ⟨ij| · |kl⟩ = T_{ik}^{lj}."""
    d = T.d
    m = zeros(d * d, d * d)
    for (i, k, l, j), c in T.entries.items():
        m.data[(i - 1) * d + (j - 1)][(k - 1) * d + (l - 1)] = c
    return MatrixOp.wrap(m, d, 2)


def ttilde_matrix(T: CoeffTensor) -> MatrixOp:
    """The exchange operator on H⊗H: column (i,j) ↦ Σ_{kl} T_{ij}^{kl} row (l,k)."""
    d = T.d
    m = zeros(d * d, d * d)
    for (i, j, k, l), c in T.entries.items():
        m.data[(l - 1) * d + (k - 1)][(i - 1) * d + (j - 1)] = c
    return MatrixOp.wrap(m, d, 2)


def embed(X: MatrixOp, slot: int, n: int, cap: int = DEFAULT_DIM_CAP) -> MatrixOp:
    """X acting on adjacent tensor slots (slot, slot+1) of H^{⊗n}."""
    d = X.d
    if X.n != 2:
        raise ValueError("embed expects a two-slot operator")
    if not (1 <= slot <= n - 1):
        raise ValueError(f"slot {slot} out of range 1..{n - 1}")
    _check_cap(d, n, cap)
    m: Matrix = X
    if slot > 1:
        m = kron(identity(d ** (slot - 1)), m)
    if slot + 1 < n:
        m = kron(m, identity(d ** (n - slot - 1)))
    return MatrixOp.wrap(m, d, n)


def p_n(T: CoeffTensor, n: int, cap: int = DEFAULT_DIM_CAP) -> MatrixOp:
    """The level-n Fock Gram operator, by the recursion
    P_{m+1} = (I ⊗ P_m)(I + T₁ + T₁T₂ + … + T₁⋯T_m), P_1 = I."""
    if n < 1:
        raise ValueError("n must be >= 1")
    d = T.d
    _check_cap(d, n, cap)
    tm = t_matrix(T)
    p = MatrixOp.wrap(identity(d), d, 1)
    for m in range(1, n):
        dim = d ** (m + 1)
        acc = identity(dim)
        prefix = None
        for i in range(1, m + 1):
            ti = embed(tm, i, m + 1, cap)
            prefix = ti if prefix is None else prefix * ti
            acc = acc + prefix
        p = MatrixOp.wrap(kron(identity(d), p) * acc, d, m + 1)
    return p


@dataclass
class SpectralSummary:
    norm: float
    t_plus: float
    t_minus: float
    eig_min: float
    rank: int
    is_psd: bool
    eigenvalues: list


def spectral_summary(X: Matrix) -> SpectralSummary:
    """Spectrum (float, in-project Jacobi) and exact rank of a self-adjoint X."""
    if not X.is_hermitian():
        raise ValueError("spectral_summary requires an exactly self-adjoint matrix")
    rank = X.rank()
    ev = eigvalsh(X)
    if ev.size == 0:
        return SpectralSummary(0.0, 0.0, 0.0, 0.0, 0, True, [])
    t_plus = float(ev[-1])
    t_minus = float(ev[0])
    norm = max(abs(t_plus), abs(t_minus))
    is_psd = t_minus >= -PSD_TOL * max(1.0, norm)
    return SpectralSummary(norm, t_plus, t_minus, t_minus, rank, is_psd, [float(x) for x in ev])


def positivity_report(
    T: CoeffTensor, n_max: int, cap: int = DEFAULT_DIM_CAP
) -> Report:
    """Which sufficient positivity criteria apply, operator bounds, and the
    direct PSD/rank status of P_n up to n_max."""
    from .algebra import hermiticity_check
    from .braid import braid_check  # deferred: braid imports this module

    if not hermiticity_check(T):
        raise ValueError("positivity_report requires a hermitian tensor")
    t0 = time.perf_counter()
    report = Report(tool="positivity")
    tm = t_matrix(T)
    ts = spectral_summary(tm)
    braided = braid_check(T)
    report.add_check(
        "t_spectrum",
        norm=ts.norm,
        t_plus=ts.t_plus,
        t_minus=ts.t_minus,
        rank=ts.rank,
        is_psd=ts.is_psd,
    )
    criteria = {
        "norm_le_half": ts.norm <= 0.5 + PSD_TOL,
        "t_positive": ts.is_psd,
        "braid_and_norm_le_one": bool(braided and ts.norm <= 1.0 + PSD_TOL),
    }
    report.add_check("sufficient_criteria", **criteria,
                     any_fires=any(criteria.values()))
    bounds = {}
    if ts.norm < 1.0:
        bounds["operator_bound"] = 1.0 / (1.0 - ts.norm)
    if ts.t_plus < 1.0:
        bounds["collective_bound"] = 1.0 / (1.0 - ts.t_plus)
    report.add_check("bounds", **bounds)

    p3_psd = True
    for n in range(2, n_max + 1):
        pn = p_n(T, n, cap)
        s = spectral_summary(pn)
        report.add_check(f"p_{n}", n=n, is_psd=s.is_psd, rank=s.rank,
                         eig_min=s.eig_min, dim=pn.rows)
        if n == 3:
            p3_psd = s.is_psd

    if n_max >= 3 and not p3_psd:
        _add_diagonal_witness(report, T, tm, cap)

    report.timing["seconds"] = time.perf_counter() - t0
    return report


def _add_diagonal_witness(report: Report, T: CoeffTensor, tm: MatrixOp, cap: int) -> None:
    """When P_3 fails PSD, report the most negative diagonal entry of
    (I+T₂)⁻¹ + T₁ on H^{⊗3}, an exact certificate against the monotone
    chain P_3 ≥ 1⊗P_2."""
    d = T.d
    if d**3 > cap:
        return
    t1 = embed(tm, 1, 3, cap)
    t2 = embed(tm, 2, 3, cap)
    eye = identity(d**3)
    try:
        inv = (eye + t2).inverse()
    except ValueError:
        return
    witness_op = inv + t1
    diag = witness_op.diagonal()
    best_idx, best = None, None
    for idx, c in enumerate(diag):
        if not c.is_real:
            continue
        if best is None or c.re < best:
            best, best_idx = c.re, idx
    if best is None:
        return
    word = index_to_word(best_idx, d, 3)
    report.add_check(
        "p3_diagonal_witness",
        value=rational_str(best),
        value_float=float(best),
        basis_word=list(word),
        negative=best < 0,
    )


def cuntz_stability_predicate(T: CoeffTensor, tol: float = PSD_TOL) -> bool:
    """True iff max{|t₊|,|t₋|}² < 1 − t₊ + t₋ on the spectrum of the
    two-slot operator (float evaluation with tolerance ``tol``)."""
    from .algebra import hermiticity_check

    if not hermiticity_check(T):
        raise ValueError("cuntz_stability_predicate requires a hermitian tensor")
    s = spectral_summary(t_matrix(T))
    lhs = max(abs(s.t_plus), abs(s.t_minus)) ** 2
    rhs = 1.0 - s.t_plus + s.t_minus
    return lhs < rhs - tol
