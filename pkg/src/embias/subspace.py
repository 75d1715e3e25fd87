"""Multi-dimensional information-weighted gender subspace and direct bias.

The subspace is built from pairwise difference vectors between female
and male anchor words (names), summarized by their leading principal
components.  Each basis vector carries the proportion of variance it
explains, which acts as the information weight in the bias measure and
in the soft-projection debiasing scheme.
"""

from __future__ import annotations

import logging
import warnings
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .store import FLOAT_FMT, Embedding, WordList

logger = logging.getLogger(__name__)

ORTHO_TOL = 1e-8


class DegenerateDirectionError(ValueError):
    """The requested gender direction has (near-)zero length.

    Happens in debiased spaces where the female and male anchor vectors
    coincide; direction-based measures are undefined there and should be
    reported as NA rather than a spurious number.
    """


@dataclass(frozen=True)
class GenderSubspace:
    """Orthonormal basis with per-vector information weights.

    ``basis`` is ``(d, d_emb)``; ``weights`` are the variance
    proportions of the d retained components, non-increasing with
    ``sum(weights) <= 1``.  ``total_variance`` keeps the full-spectrum
    variance for audit.
    """

    basis: np.ndarray
    weights: np.ndarray
    total_variance: float

    def __post_init__(self) -> None:
        basis = np.ascontiguousarray(self.basis, dtype=np.float64)
        weights = np.ascontiguousarray(self.weights, dtype=np.float64)
        if basis.ndim != 2 or weights.ndim != 1 or basis.shape[0] != weights.size:
            raise ValueError("basis must be (d, d_emb) with d matching weights")
        gram = basis @ basis.T
        if not np.allclose(gram, np.eye(basis.shape[0]), atol=ORTHO_TOL):
            raise ValueError("basis vectors are not orthonormal")
        if np.any(np.diff(weights) > 1e-12) or np.any(weights < 0):
            raise ValueError("weights must be non-increasing and non-negative")
        if weights.sum() > 1 + 1e-8:
            raise ValueError("weights sum exceeds 1")
        basis.flags.writeable = False
        weights.flags.writeable = False
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "weights", weights)

    @property
    def d(self) -> int:
        return self.basis.shape[0]

    @property
    def d_emb(self) -> int:
        return self.basis.shape[1]


def pairwise_differences(
    f_names: WordList, m_names: WordList, emb: Embedding
) -> np.ndarray:
    """All pairwise anchor differences ``f_j - m_k``.

    Rows are in row-major order (j outer, k inner), one per (female,
    male) pair of names found in the embedding; missing names are
    dropped with a warning.
    """
    f_found, f_vecs = emb.rows(f_names, warn_label="female anchor words")
    m_found, m_vecs = emb.rows(m_names, warn_label="male anchor words")
    if not f_found or not m_found:
        raise ValueError("an anchor list is empty after embedding lookup")
    logger.debug("difference matrix from %d x %d anchors", len(f_found), len(m_found))
    diffs = f_vecs[:, None, :] - m_vecs[None, :, :]
    return diffs.reshape(len(f_found) * len(m_found), emb.d_emb)


def principal_subspace(diffs: np.ndarray, d: int, center: bool = True) -> GenderSubspace:
    """Top-``d`` principal directions of the difference matrix.

    Weights are variance proportions lambda_i / sum(lambda) with lambda
    the squared singular values over (rows - 1); the denominator runs
    over ALL components so the retained weights never sum past 1.  Each
    basis vector's sign is fixed so its inner product with the mean
    difference vector is >= 0 (ties keep the SVD sign), making results
    reproducible across linear-algebra backends.
    """
    diffs = np.asarray(diffs, dtype=np.float64)
    if diffs.ndim != 2 or diffs.shape[0] < 2:
        raise ValueError("difference matrix must be 2-D with at least 2 rows")
    if not 1 <= d <= min(diffs.shape):
        raise ValueError(f"d={d} outside valid range 1..{min(diffs.shape)}")
    mean_diff = diffs.mean(axis=0)
    x = diffs - mean_diff if center else diffs
    _, sigma, vt = np.linalg.svd(x, full_matrices=False)
    if sigma[0] <= 0:
        raise ValueError("difference matrix is zero" + (" after centering" if center else ""))
    if sigma[d - 1] < 1e-10 * sigma[0]:
        raise ValueError(f"d={d} exceeds numerical rank of the difference matrix")
    lam = sigma**2 / (diffs.shape[0] - 1)
    total = float(lam.sum())
    basis = vt[:d].copy()
    signs = basis @ mean_diff
    basis[signs < 0] *= -1
    return GenderSubspace(basis, lam[:d] / total, total)


def subspace_from_names(
    emb: Embedding,
    f_names: WordList,
    m_names: WordList,
    d: int = 4,
    center: bool = True,
) -> GenderSubspace:
    """Convenience wrapper: difference matrix then principal subspace."""
    return principal_subspace(pairwise_differences(f_names, m_names, emb), d, center)


def gender_direction(emb: Embedding, fem: str, masc: str) -> np.ndarray:
    """Unit vector from the masculine anchor toward the feminine one."""
    diff = emb.lookup(fem) - emb.lookup(masc)
    norm = np.linalg.norm(diff)
    if norm <= 1e-10:
        raise DegenerateDirectionError(
            f"{fem!r} and {masc!r} (nearly) coincide; direction undefined"
        )
    return diff / norm


def midb_word(w: np.ndarray, sub: GenderSubspace) -> float:
    """Information-weighted signed projection of one word vector.

    Sum over basis vectors of weight_i * <g_i, w>; no absolute value is
    taken, so vocabulary averages can be negative.
    """
    w = np.asarray(w, dtype=np.float64)
    if w.shape != (sub.d_emb,):
        raise ValueError(f"vector shape {w.shape} does not match subspace dim {sub.d_emb}")
    return float(sub.weights @ (sub.basis @ w))


def midb_average(emb: Embedding, vocab: WordList, sub: GenderSubspace) -> float:
    """Mean information-weighted projection over a target vocabulary."""
    found, vecs = emb.rows(vocab, warn_label="target-vocabulary words")
    if not found:
        raise ValueError("target vocabulary has no overlap with the embedding")
    logger.info("midb_average coverage: %d/%d words", len(found), len(vocab))
    return float(np.mean((vecs @ sub.basis.T) @ sub.weights))


def direct_bias(emb: Embedding, vocab: WordList, g: np.ndarray) -> float:
    """Mean absolute cosine between vocabulary words and a direction.

    Words are normalized individually (cosine, so the measure is scale
    invariant); zero-norm words are skipped with a warning.
    """
    g = np.asarray(g, dtype=np.float64)
    found, vecs = emb.rows(vocab, warn_label="target-vocabulary words")
    if not found:
        raise ValueError("target vocabulary has no overlap with the embedding")
    norms = np.linalg.norm(vecs, axis=1)
    nonzero = norms > 0
    if not np.all(nonzero):
        warnings.warn(f"skipped {int((~nonzero).sum())} zero-norm words")
    if not np.any(nonzero):
        raise ValueError("all covered words have zero norm")
    logger.info("direct_bias coverage: %d/%d words", int(nonzero.sum()), len(vocab))
    cosines = (vecs[nonzero] @ g) / norms[nonzero]
    return float(np.mean(np.abs(cosines)))


def save_subspace(sub: GenderSubspace, path: str | Path) -> None:
    """Serialize: header (d, d_emb, total variance), weights, basis rows."""
    path = Path(path)
    with path.open("w", encoding="utf-8") as fh:
        fh.write(f"{sub.d} {sub.d_emb} " + "%.12g" % sub.total_variance + "\n")
        fh.write(" ".join("%.12g" % a for a in sub.weights) + "\n")
        for i, row in enumerate(sub.basis, start=1):
            fh.write(f"g{i} " + " ".join(FLOAT_FMT % x for x in row) + "\n")


def load_subspace(path: str | Path) -> GenderSubspace:
    path = Path(path)
    lines = path.read_text(encoding="utf-8").splitlines()
    if len(lines) < 3:
        raise ValueError(f"{path}: truncated subspace file")
    d, d_emb, total = lines[0].split()
    d, d_emb = int(d), int(d_emb)
    weights = np.array([float(x) for x in lines[1].split()])
    basis = np.array(
        [[float(x) for x in line.split()[1:]] for line in lines[2 : 2 + d]]
    )
    if weights.size != d or basis.shape != (d, d_emb):
        raise ValueError(f"{path}: header counts do not match payload")
    return GenderSubspace(basis, weights, float(total))
