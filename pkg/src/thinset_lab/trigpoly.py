"""Trigonometric polynomials on the circle with sparse integer spectra.

A polynomial is a finite sum f(t) = sum_g c_g exp(i g t) with nonzero complex
coefficients keyed by signed 64-bit frequencies.  The module provides the
coefficient-side norms (l_q, Lorentz), grid evaluation (direct and FFT paths),
a certified sup-norm estimator, L^q function norms by quadrature,
coefficient-convolution multiplication, and the dyadic level-set
decomposition with its index-selection rule.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "TrigPolynomial",
    "LevelSetDecomposition",
    "fq_norm",
    "lorentz_norms",
    "evaluate_grid",
    "sup_norm",
    "sup_norm_rows",
    "lq_function_norm",
    "multiply",
    "level_sets",
    "default_grid_size",
]

_FREQ_LIMIT = 2**62  # headroom below int64 so sums of a few frequencies stay exact


class TrigPolynomial:
    """Immutable sparse trigonometric polynomial.

    Construct from a dict {frequency: coefficient}, an iterable of
    (frequency, coefficient) pairs, or another TrigPolynomial.  Zero
    coefficients are dropped; duplicate frequencies are rejected.
    """

    __slots__ = ("_freqs", "_coeffs")

    def __init__(self, terms=()):
        if isinstance(terms, TrigPolynomial):
            self._freqs = terms._freqs
            self._coeffs = terms._coeffs
            return
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = list(terms)
        freqs = []
        coeffs = []
        for g, c in items:
            gi = int(g)
            if abs(gi) >= _FREQ_LIMIT:
                raise DomainError(f"frequency {gi} outside signed 64-bit working range")
            c = complex(c)
            if c != 0:
                freqs.append(gi)
                coeffs.append(c)
        f = np.asarray(freqs, dtype=np.int64)
        c = np.asarray(coeffs, dtype=np.complex128)
        order = np.argsort(f, kind="stable")
        f = f[order]
        c = c[order]
        if f.size > 1 and np.any(f[1:] == f[:-1]):
            raise DomainError("duplicate frequencies in term list")
        f.setflags(write=False)
        c.setflags(write=False)
        self._freqs = f
        self._coeffs = c

    @classmethod
    def indicator(cls, frequencies) -> "TrigPolynomial":
        """0-1 polynomial: all coefficients 1 on the given frequency set."""
        return cls((int(g), 1.0) for g in frequencies)

    @property
    def freqs(self) -> np.ndarray:
        """Sorted frequency array (read-only view)."""
        return self._freqs

    @property
    def coeffs(self) -> np.ndarray:
        """Coefficients aligned with ``freqs`` (read-only view)."""
        return self._coeffs

    @property
    def degree(self) -> int:
        """max |frequency| over the spectrum; 0 for the empty polynomial."""
        if self._freqs.size == 0:
            return 0
        return int(max(-self._freqs[0], self._freqs[-1]))

    def coeff(self, g: int) -> complex:
        i = int(np.searchsorted(self._freqs, int(g)))
        if i < self._freqs.size and self._freqs[i] == int(g):
            return complex(self._coeffs[i])
        return 0j

    def terms(self) -> dict:
        return {int(g): complex(c) for g, c in zip(self._freqs, self._coeffs)}

    def __len__(self) -> int:
        return int(self._freqs.size)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TrigPolynomial):
            return NotImplemented
        return np.array_equal(self._freqs, other._freqs) and np.array_equal(
            self._coeffs, other._coeffs
        )

    def __hash__(self):
        return hash((self._freqs.tobytes(), self._coeffs.tobytes()))

    def __mul__(self, other):
        if isinstance(other, TrigPolynomial):
            return multiply(self, other)
        return NotImplemented

    def __repr__(self) -> str:
        return f"TrigPolynomial({self.terms()!r})"

    def to_json_obj(self) -> list:
        """Serialized form: list of [frequency, re, im] triples."""
        return [[int(g), float(c.real), float(c.imag)] for g, c in zip(self._freqs, self._coeffs)]

    @classmethod
    def from_json_obj(cls, obj) -> "TrigPolynomial":
        if not isinstance(obj, list):
            raise DomainError("polynomial JSON must be a list of [frequency, re, im]")
        pairs = []
        for row in obj:
            if not (isinstance(row, (list, tuple)) and len(row) == 3):
                raise DomainError(f"bad polynomial term {row!r}; want [frequency, re, im]")
            g, re, im = row
            pairs.append((int(g), complex(float(re), float(im))))
        return cls(pairs)


@dataclass(frozen=True)
class LevelSetDecomposition:
    """Dyadic coefficient level sets and the ratio-driven index selection.

    levels: (j, frequencies) for every nonempty level, increasing j, where
    level j holds gamma with 2^{-j+1} >= |c_gamma|/max|c| > 2^{-j}.
    selected_indices: j_1 < ... < j_L with j_1 the first level and j_{l+1}
    the least j > j_l whose level is more than ``ratio`` times bigger.
    sizes: the selected levels' cardinalities.
    """

    levels: tuple
    selected_indices: tuple
    ratio: float
    sizes: tuple


def default_grid_size(degree: int) -> int:
    """Smallest power of two >= max(1024, 16*(degree+1))."""
    need = max(1024, 16 * (degree + 1))
    return 1 << (need - 1).bit_length()


def fq_norm(f: TrigPolynomial, q: float) -> float:
    """Coefficient l_q norm (sum |c|^q)^(1/q); q = inf gives max |c|."""
    if not (q == math.inf or q >= 1.0):
        raise DomainError(f"need q >= 1, got q={q}")
    if len(f) == 0:
        return 0.0
    a = np.abs(f.coeffs)
    if q == math.inf:
        return float(a.max())
    if q == 1.0:
        return float(a.sum())
    if q == 2.0:
        return float(np.sqrt((a * a).sum()))
    return float((a**q).sum() ** (1.0 / q))


def lorentz_norms(f: TrigPolynomial, q: float) -> tuple:
    """Lorentz sequence norms (l_{q,1}, l_{q,inf}) of the coefficients.

    With (a_n*) the decreasing rearrangement of |c_gamma|, returns
    (sum_n a_n*/n^{1/q'}, max_n n^{1/q} a_n*).  Empty input gives (0, 0).
    """
    if not (1.0 < q < 2.0):
        raise DomainError(f"need q in (1,2), got q={q}")
    if len(f) == 0:
        return (0.0, 0.0)
    a = np.sort(np.abs(f.coeffs))[::-1]
    n = np.arange(1, a.size + 1, dtype=np.float64)
    q_conj = q / (q - 1.0)
    l_q1 = float((a / n ** (1.0 / q_conj)).sum())
    l_qinf = float((n ** (1.0 / q) * a).max())
    return (l_q1, l_qinf)


def evaluate_grid(f: TrigPolynomial, M: int, method: str = "auto") -> np.ndarray:
    """Values f(t_k) at t_k = 2 pi k / M, k = 0..M-1.

    method "fft" requires all frequencies in [-M/2, M/2); "direct" sums
    termwise; "auto" picks the FFT path whenever it applies.  Both paths
    agree to 1e-9 absolute.
    """
    M = int(M)
    if M < 1:
        raise DomainError(f"need M >= 1, got {M}")
    if len(f) == 0:
        return np.zeros(M, dtype=np.complex128)
    freqs = f.freqs
    fits = bool(freqs[0] >= -(M // 2) and freqs[-1] < (M + 1) // 2)
    if method == "auto":
        method = "fft" if fits else "direct"
    if method == "fft":
        if not fits:
            raise DomainError("frequencies do not fit in [-M/2, M/2) for the FFT path")
        spread = np.zeros((1, M), dtype=np.complex128)
        _scatter_rows(spread, freqs, f.coeffs[None, :], M)
        return (np.fft.ifft(spread[0]) * M).astype(np.complex128)
    if method != "direct":
        raise DomainError(f"unknown evaluation method {method!r}")
    t = 2.0 * np.pi * np.arange(M) / M
    out = np.empty(M, dtype=np.complex128)
    chunk = max(1, (1 << 21) // max(1, len(f)))
    for lo in range(0, M, chunk):
        hi = min(M, lo + chunk)
        out[lo:hi] = np.exp(1j * np.outer(t[lo:hi], freqs)) @ f.coeffs
    return out


def _scatter_rows(buf: np.ndarray, freqs: np.ndarray, rows: np.ndarray, M: int) -> None:
    # distinct frequencies in [-M/2, M/2) have distinct residues mod M
    buf[:, np.mod(freqs, M)] = rows


def _point_values_sq(freqs: np.ndarray, rows: np.ndarray, row_idx: np.ndarray, t: np.ndarray) -> np.ndarray:
    """|f_row(t)|^2 for paired (row_idx, t), chunked to bound memory."""
    out = np.empty(t.size, dtype=np.float64)
    chunk = max(1, (1 << 21) // max(1, freqs.size))
    for lo in range(0, t.size, chunk):
        hi = min(t.size, lo + chunk)
        phases = np.exp(1j * t[lo:hi, None] * freqs[None, :])
        vals = np.einsum("kn,kn->k", phases, rows[row_idx[lo:hi]])
        out[lo:hi] = vals.real**2 + vals.imag**2
    return out


def sup_norm_rows(freqs: np.ndarray, rows: np.ndarray, rel_tol: float) -> np.ndarray:
    """Sup norms of many polynomials sharing one spectrum.

    Parameters
    ----------
    freqs : int64 array, shape (n,)
        Common sorted spectrum.
    rows : complex array, shape (B, n)
        One coefficient row per polynomial.
    rel_tol : float
        Certified relative tolerance: each returned S satisfies
        true sup in [S, S*(1+rel_tol)].

    The estimator takes a dense FFT grid of default_grid_size(degree)
    points, then repeatedly bisects the sample spacing around every sample
    whose squared modulus is within the current curvature bound of the row
    maximum.  The bound (deg*h)^2/2 on the relative deficit of the nearest
    sample comes from the second-derivative inequality for squared moduli
    of degree-deg polynomials, so the surviving samples always cover the
    true argmax.
    """
    rows = np.atleast_2d(np.asarray(rows, dtype=np.complex128))
    B, n = rows.shape
    if n == 0:
        return np.zeros(B)
    if n == 1:
        return np.abs(rows[:, 0])
    deg = int(max(-freqs[0], freqs[-1]))
    if deg == 0:
        return np.abs(rows[:, 0])
    M = default_grid_size(deg)
    h0 = 2.0 * np.pi / M

    best = np.zeros(B)
    kept_row: list = []
    kept_t: list = []
    kept_g: list = []
    gap0 = min(0.49, 1.02 * (deg * h0) ** 2 / 2.0)
    chunk = max(1, (1 << 23) // M)
    for lo in range(0, B, chunk):
        hi = min(B, lo + chunk)
        spread = np.zeros((hi - lo, M), dtype=np.complex128)
        _scatter_rows(spread, freqs, rows[lo:hi], M)
        vals = np.fft.ifft(spread, axis=1)
        g = (vals.real**2 + vals.imag**2) * (M * M)
        bmax = g.max(axis=1)
        best[lo:hi] = bmax
        keep = g >= bmax[:, None] * (1.0 - gap0)
        r, k = np.nonzero(keep)
        kept_row.append(r + lo)
        kept_t.append(k * h0)
        kept_g.append(g[r, k])
    row_idx = np.concatenate(kept_row)
    t = np.concatenate(kept_t)
    g = np.concatenate(kept_g)

    h = h0
    gap = gap0
    while gap > rel_tol:
        mid_t = np.concatenate([t - h / 2.0, t + h / 2.0])
        mid_rows = np.concatenate([row_idx, row_idx])
        mid_g = _point_values_sq(freqs, rows, mid_rows, mid_t)
        row_idx = np.concatenate([row_idx, mid_rows])
        t = np.concatenate([t, mid_t])
        g = np.concatenate([g, mid_g])
        np.maximum.at(best, row_idx, g)
        h /= 2.0
        gap = 1.02 * (deg * h) ** 2 / 2.0
        keep = g >= best[row_idx] * (1.0 - gap)
        row_idx, t, g = row_idx[keep], t[keep], g[keep]
    return np.sqrt(best)


def sup_norm(f: TrigPolynomial, rel_tol: float = 1e-9) -> float:
    """Certified sup-norm estimate S with true norm in [S, S*(1+rel_tol)]."""
    if not (0.0 < rel_tol <= 0.1):
        raise DomainError(f"need rel_tol in (0, 0.1], got {rel_tol}")
    if len(f) == 0:
        return 0.0
    return float(sup_norm_rows(f.freqs, f.coeffs[None, :], rel_tol)[0])


def lq_function_norm(f: TrigPolynomial, q: float, M: int | None = None) -> float:
    """(grid mean of |f|^q)^(1/q) on M equispaced points.

    Exact for even integer q <= 16 at the default grid (then M > q*degree);
    otherwise a quadrature approximation.
    """
    if not q >= 1.0:
        raise DomainError(f"need q >= 1, got q={q}")
    if len(f) == 0:
        return 0.0
    deg = f.degree
    if M is None:
        M = default_grid_size(deg)
        if float(q).is_integer() and int(q) % 2 == 0:
            while M <= int(q) * deg:
                M *= 2
    else:
        M = int(M)
        if M < 4 * (deg + 1):
            raise DomainError(f"need M >= 4*(degree+1) = {4 * (deg + 1)}, got {M}")
    a = np.abs(evaluate_grid(f, M))
    return float(np.mean(a**q) ** (1.0 / q))


def multiply(f: TrigPolynomial, g: TrigPolynomial) -> TrigPolynomial:
    """Coefficient convolution; spectrum lands in the sumset."""
    if len(f) == 0 or len(g) == 0:
        return TrigPolynomial()
    sums = (f.freqs[:, None] + g.freqs[None, :]).ravel()
    prods = (f.coeffs[:, None] * g.coeffs[None, :]).ravel()
    out_f, inv = np.unique(sums, return_inverse=True)
    out_c = np.zeros(out_f.size, dtype=np.complex128)
    np.add.at(out_c, inv, prods)
    return TrigPolynomial(zip(out_f.tolist(), out_c.tolist()))


def level_sets(f: TrigPolynomial, ratio: float) -> LevelSetDecomposition:
    """Dyadic level sets of |c|/max|c| plus the ratio-driven selection.

    Level j collects gamma with 2^{-j+1} >= |c_gamma|/max|c| > 2^{-j};
    normalization happens on a copy.  Selection starts at the first level
    and jumps to the least later level more than ``ratio`` times bigger.
    """
    if len(f) == 0:
        raise DomainError("level_sets needs a nonempty polynomial")
    if not ratio > 1.0:
        raise DomainError(f"need ratio > 1, got {ratio}")
    a = np.abs(f.coeffs)
    a = a / a.max()
    js = np.floor(-np.log2(a)).astype(np.int64) + 1
    by_level: dict = {}
    for g, j in zip(f.freqs.tolist(), js.tolist()):
        by_level.setdefault(int(j), []).append(int(g))
    levels = tuple((j, tuple(sorted(by_level[j]))) for j in sorted(by_level))
    selected = [levels[0][0]]
    cur_size = len(levels[0][1])
    for j, members in levels[1:]:
        if len(members) > ratio * cur_size:
            selected.append(j)
            cur_size = len(members)
    sizes = tuple(len(by_level[j]) for j in selected)
    return LevelSetDecomposition(
        levels=levels, selected_indices=tuple(selected), ratio=float(ratio), sizes=sizes
    )
