"""Floating-point models of quaternionic hyperbolic space.

Quaternions are rows [w, x, y, z] of a numpy array; vectors in H^{m,1}
have shape (m+1, 4) and matrices (m+1, m+1, 4).  The module covers the
signature-(m,1) Hermitian pairing, the distance and metric formulas on
negative lines, membership tests for the isometry group and its Lie
algebra, an explicit ordered basis of that algebra with brackets and
Killing values, and the Lie-triple classification of tangent subspaces
(totally real / complex / quaternionic).

Everything here is numerical; exact arithmetic lives in the other
modules.  Tolerances are module constants and can be overridden per
call.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np
import scipy.linalg

#: membership in the isometry group / Lie algebra
GROUP_TOLERANCE = 1e-9
#: invariance properties checked on random data
INVARIANCE_TOLERANCE = 1e-8
#: linear independence and closure of subspace spans
SPAN_TOLERANCE = 1e-8
#: how far below 1 the distance argument may fall before it is an error
CLAMP_TOLERANCE = 1e-12
ZERO_BAND = 64.0 * np.finfo(float).eps

TOTALLY_REAL = "totally-real"
TOTALLY_COMPLEX = "totally-complex"
TOTALLY_QUATERNIONIC = "totally-quaternionic"
NOT_LIE_TRIPLE = "not-lie-triple"


# ---------------------------------------------------------------------------
# quaternion arithmetic on trailing axes


def quat(w=0.0, x=0.0, y=0.0, z=0.0) -> np.ndarray:
    return np.array([w, x, y, z], dtype=float)


QUAT_ONE = quat(1.0)
QUAT_I = quat(0.0, 1.0)
QUAT_J = quat(0.0, 0.0, 1.0)
QUAT_K = quat(0.0, 0.0, 0.0, 1.0)
QUAT_UNITS = (QUAT_ONE, QUAT_I, QUAT_J, QUAT_K)


def quat_conj(q: np.ndarray) -> np.ndarray:
    out = np.array(q, dtype=float)
    out[..., 1:] = -out[..., 1:]
    return out


def quat_mul(p, q) -> np.ndarray:
    """Quaternion product, broadcasting over leading axes."""
    p = np.asarray(p, dtype=float)
    q = np.asarray(q, dtype=float)
    w1, x1, y1, z1 = np.moveaxis(p, -1, 0)
    w2, x2, y2, z2 = np.moveaxis(q, -1, 0)
    return np.stack(
        [
            w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
            w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
            w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
            w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
        ],
        axis=-1,
    )


def quat_norm_sq(q) -> float:
    q = np.asarray(q, dtype=float)
    return float((q * q).sum(axis=-1)) if q.ndim == 1 else (q * q).sum(axis=-1)


def mat_mul(A, B) -> np.ndarray:
    """Product of quaternion matrices via real component matmuls."""
    Aw, Ax, Ay, Az = np.moveaxis(np.asarray(A, float), -1, 0)
    Bw, Bx, By, Bz = np.moveaxis(np.asarray(B, float), -1, 0)
    return np.stack(
        [
            Aw @ Bw - Ax @ Bx - Ay @ By - Az @ Bz,
            Aw @ Bx + Ax @ Bw + Ay @ Bz - Az @ By,
            Aw @ By - Ax @ Bz + Ay @ Bw + Az @ Bx,
            Aw @ Bz + Ax @ By - Ay @ Bx + Az @ Bw,
        ],
        axis=-1,
    )


def mat_vec(A, v) -> np.ndarray:
    Aw, Ax, Ay, Az = np.moveaxis(np.asarray(A, float), -1, 0)
    vw, vx, vy, vz = np.moveaxis(np.asarray(v, float), -1, 0)
    return np.stack(
        [
            Aw @ vw - Ax @ vx - Ay @ vy - Az @ vz,
            Aw @ vx + Ax @ vw + Ay @ vz - Az @ vy,
            Aw @ vy - Ax @ vz + Ay @ vw + Az @ vx,
            Aw @ vz + Ax @ vy - Ay @ vx + Az @ vw,
        ],
        axis=-1,
    )


def mat_conj_transpose(A) -> np.ndarray:
    return np.swapaxes(quat_conj(np.asarray(A, float)), 0, 1)


@lru_cache(maxsize=None)
def _form_matrix(n: int) -> np.ndarray:
    H = np.zeros((n, n, 4))
    for i in range(n):
        H[i, i, 0] = 1.0 if i < n - 1 else -1.0
    H.setflags(write=False)
    return H


def form_matrix(m: int) -> np.ndarray:
    """diag(1, ..., 1, -1) as an (m+1)-square quaternion matrix."""
    return np.array(_form_matrix(m + 1))


# ---------------------------------------------------------------------------
# the Hermitian pairing, distance, metric


def form_h(v, w) -> np.ndarray:
    """h(v, w) = sum_i conj(v_i) w_i - conj(v_last) w_last."""
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    if v.shape != w.shape or v.ndim != 2 or v.shape[-1] != 4:
        raise ValueError("vectors must share shape (m+1, 4)")
    terms = quat_mul(quat_conj(v), w)
    return terms[:-1].sum(axis=0) - terms[-1]


def is_negative(v) -> bool:
    """Whether v spans a negative line: h(v, v) < 0."""
    return float(form_h(v, v)[0]) < 0.0


def distance(v1, v2, clamp_tolerance: float = CLAMP_TOLERANCE) -> float:
    """Hyperbolic distance between the negative lines of v1 and v2:
    2 arccosh sqrt(h(v1,v2) h(v2,v1) / (h(v1,v1) h(v2,v2))).

    The argument of the square root is >= 1 in exact arithmetic; round-off
    within ``clamp_tolerance`` below 1 is clamped, anything farther is an
    error.  The ratio is formed by cancelling two products of nearly equal
    magnitude, so values within a few ulps above 1 are round-off as well and
    collapse to 1: lines closer than roughly 1e-7 read as distance 0 instead
    of as the square root of noise.
    """
    h11 = float(form_h(v1, v1)[0])
    h22 = float(form_h(v2, v2)[0])
    if h11 >= 0.0 or h22 >= 0.0:
        raise ValueError("distance is defined only between negative vectors")
    h12 = form_h(v1, v2)
    arg = float((h12 * h12).sum()) / (h11 * h22)
    if arg < 1.0 - clamp_tolerance:
        raise ValueError(f"distance argument {arg} below 1 beyond tolerance")
    if arg <= 1.0 + ZERO_BAND:
        return 0.0
    return 2.0 * math.acosh(math.sqrt(arg))


def metric_at(v, w1, w2) -> np.ndarray:
    """The Hermitian metric value -4 (h(v,v) h(w1,w2) - h(w1,v) h(v,w2))
    / h(v,v)^2 at the line of v; its real part is the Riemannian metric."""
    hvv = float(form_h(v, v)[0])
    if hvv >= 0.0:
        raise ValueError("metric is defined only at negative vectors")
    value = hvv * form_h(w1, w2) - quat_mul(form_h(w1, v), form_h(v, w2))
    return -4.0 * value / (hvv * hvv)


def project_to_line(v, w) -> np.ndarray:
    """Component of w along the line of v: v . h(v,w) / h(v,v)."""
    hvv = float(form_h(v, v)[0])
    return quat_mul(np.asarray(v, float), form_h(v, w)) / hvv


def base_point(m: int) -> np.ndarray:
    v = np.zeros((m + 1, 4))
    v[-1, 0] = 1.0
    return v


def ball_norm_sq(v) -> float:
    """Sum of squared quaternion norms of all but the last entry."""
    v = np.asarray(v, dtype=float)
    return float((v[:-1] ** 2).sum())


def ball_line_convert(v) -> np.ndarray:
    """Normalize the last coordinate to 1 by right multiplication,
    identifying the line of v with a point of the unit ball model
    (negative lines land strictly inside: ball_norm_sq < 1)."""
    v = np.asarray(v, dtype=float)
    last = v[-1]
    n2 = float((last * last).sum())
    if n2 <= 1e-30:
        raise ValueError("last coordinate is zero: the line lies at infinity")
    return quat_mul(v, quat_conj(last) / n2)


def ball_point_to_line(entries) -> np.ndarray:
    """Inverse direction: append a final coordinate 1 to a ball point."""
    entries = np.atleast_2d(np.asarray(entries, dtype=float))
    return np.vstack([entries, quat(1.0)])


# ---------------------------------------------------------------------------
# group and Lie algebra membership


def sp_dev(A) -> float:
    """Max-entry deviation of conj(A)^T H A from H."""
    n = A.shape[0]
    H = form_matrix(n - 1)
    lhs = mat_mul(mat_conj_transpose(A), mat_mul(H, A))
    return float(np.abs(lhs - H).max())


def sp_check(A, tolerance: float = GROUP_TOLERANCE) -> bool:
    """Membership of the isometry group of h: conj(A)^T H A = H."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 3 or A.shape[0] != A.shape[1] or A.shape[2] != 4:
        raise ValueError("expected a square quaternion matrix")
    return sp_dev(A) <= tolerance


def lie_algebra_dev(A) -> float:
    n = A.shape[0]
    H = form_matrix(n - 1)
    lhs = mat_mul(H, mat_mul(mat_conj_transpose(A), H)) + A
    return float(np.abs(lhs).max())


def lie_algebra_check(A, tolerance: float = GROUP_TOLERANCE) -> bool:
    """Membership of the Lie algebra: H conj(A)^T H + A = 0."""
    return lie_algebra_dev(np.asarray(A, dtype=float)) <= tolerance


def to_complex_matrix(A) -> np.ndarray:
    """Standard 2x2-complex-block image of a quaternion matrix."""
    A = np.asarray(A, dtype=float)
    n = A.shape[0]
    a = A[..., 0] + 1j * A[..., 1]
    b = A[..., 2] + 1j * A[..., 3]
    out = np.empty((2 * n, 2 * n), dtype=complex)
    out[0::2, 0::2] = a
    out[0::2, 1::2] = b
    out[1::2, 0::2] = -b.conj()
    out[1::2, 1::2] = a.conj()
    return out


def from_complex_matrix(M) -> np.ndarray:
    n = M.shape[0] // 2
    a = M[0::2, 0::2]
    b = M[0::2, 1::2]
    out = np.empty((n, n, 4))
    out[..., 0] = a.real
    out[..., 1] = a.imag
    out[..., 2] = b.real
    out[..., 3] = b.imag
    return out


def matrix_exp(A) -> np.ndarray:
    """exp of a quaternion matrix through its complex representation."""
    return from_complex_matrix(scipy.linalg.expm(to_complex_matrix(A)))


def random_sp_element(m: int, seed: int) -> np.ndarray:
    """A reproducible pseudo-random isometry: exp of the anti-self-adjoint
    (with respect to h) projection of a Gaussian quaternion matrix."""
    if m < 1:
        raise ValueError("m must be at least 1")
    rng = np.random.default_rng(seed)
    B = 0.4 * rng.standard_normal((m + 1, m + 1, 4))
    H = form_matrix(m)
    X = 0.5 * (B - mat_mul(H, mat_mul(mat_conj_transpose(B), H)))
    return matrix_exp(X)


# ---------------------------------------------------------------------------
# the ordered Lie algebra basis


def X_element(m: int, ell: int, alpha) -> np.ndarray:
    """Off-corner generator: alpha in row ell of the last column, its
    conjugate mirrored.  These span the tangent directions at the base
    point; there are 4m of them."""
    if not 1 <= ell <= m:
        raise ValueError(f"ell must lie in 1..{m}")
    A = np.zeros((m + 1, m + 1, 4))
    A[ell - 1, m] = alpha
    A[m, ell - 1] = quat_conj(np.asarray(alpha, float))
    return A


def Y_element(m: int, l1: int, l2: int, alpha) -> np.ndarray:
    """Rotation generator in the positive block: alpha at (l1, l2),
    minus its conjugate at (l2, l1); requires l1 < l2 <= m."""
    if not 1 <= l1 < l2 <= m:
        raise ValueError(f"need 1 <= l1 < l2 <= {m}")
    A = np.zeros((m + 1, m + 1, 4))
    A[l1 - 1, l2 - 1] = alpha
    A[l2 - 1, l1 - 1] = -quat_conj(np.asarray(alpha, float))
    return A


def H_element(m: int, ell: int, alpha) -> np.ndarray:
    """Diagonal generator: a pure-imaginary alpha at position ell
    (1..m+1) of the diagonal."""
    if not 1 <= ell <= m + 1:
        raise ValueError(f"ell must lie in 1..{m + 1}")
    alpha = np.asarray(alpha, dtype=float)
    if abs(alpha[0]) > 1e-15:
        raise ValueError("diagonal generators take pure-imaginary entries")
    A = np.zeros((m + 1, m + 1, 4))
    A[ell - 1, ell - 1] = alpha
    return A


@lru_cache(maxsize=None)
def _cached_basis(m: int) -> tuple[np.ndarray, ...]:
    out: list[np.ndarray] = []
    for ell in range(1, m + 1):
        for unit in QUAT_UNITS:
            out.append(X_element(m, ell, unit))
    for l1 in range(1, m + 1):
        for l2 in range(l1 + 1, m + 1):
            for unit in QUAT_UNITS:
                out.append(Y_element(m, l1, l2, unit))
    for ell in range(1, m + 2):
        for unit in QUAT_UNITS[1:]:
            out.append(H_element(m, ell, unit))
    for A in out:
        A.setflags(write=False)
    return tuple(out)


def lie_basis(m: int) -> list[np.ndarray]:
    """Ordered basis of the isometry Lie algebra: the 4m off-corner
    X-generators (ell ascending, components 1,i,j,k), then the
    2m(m-1) rotation Y-generators (index pairs lexicographic), then
    the 3(m+1) diagonal H-generators.  Total 2m^2 + 5m + 3."""
    if m < 1:
        raise ValueError("m must be at least 1")
    return [np.array(A) for A in _cached_basis(m)]


def lie_dim(m: int) -> int:
    return 2 * m * m + 5 * m + 3


def bracket(A, B) -> np.ndarray:
    A = np.asarray(A, dtype=float)
    B = np.asarray(B, dtype=float)
    if A.shape != B.shape:
        raise ValueError("bracket requires matrices of equal size")
    return mat_mul(A, B) - mat_mul(B, A)


@lru_cache(maxsize=None)
def _basis_pinv(m: int) -> np.ndarray:
    stacked = np.stack([A.ravel() for A in _cached_basis(m)], axis=1)
    P = np.linalg.pinv(stacked)
    P.setflags(write=False)
    return P


def coordinates(A, m: int) -> np.ndarray:
    """Coefficients of A in lie_basis(m) (least squares; exact for
    algebra members)."""
    return _basis_pinv(m) @ np.asarray(A, dtype=float).ravel()


def ad_matrix(A, m: int) -> np.ndarray:
    """The adjoint action bracket(A, -) as a real matrix in basis
    coordinates."""
    cols = [coordinates(bracket(A, E), m) for E in _cached_basis(m)]
    return np.stack(cols, axis=1)


@lru_cache(maxsize=None)
def _killing_gram(m: int) -> np.ndarray:
    ads = [ad_matrix(E, m) for E in _cached_basis(m)]
    N = len(ads)
    K = np.empty((N, N))
    for i in range(N):
        for j in range(i, N):
            K[i, j] = K[j, i] = np.trace(ads[i] @ ads[j])
    K.setflags(write=False)
    return K


def killing_value(A, B, m: int) -> float:
    """Trace of ad(A) ad(B) on the 2m^2+5m+3-dimensional algebra."""
    ca = coordinates(A, m)
    cb = coordinates(B, m)
    return float(ca @ _killing_gram(m) @ cb)


def tangent_of_corner(X, m: int) -> np.ndarray:
    """The tangent vector at the base point matching an off-corner
    generator: its last column with the final entry dropped to 0."""
    w = np.zeros((m + 1, 4))
    w[:m] = np.asarray(X, dtype=float)[:m, m]
    return w


def killing_metric_ratios(m: int, samples: int, seed: int) -> np.ndarray:
    """Killing-to-metric ratios kappa(X,X)/g(w,w) for random horizontal
    directions at the base point."""
    if m < 2:
        raise ValueError("the ratio needs m >= 2")
    rng = np.random.default_rng(seed)
    base = base_point(m)
    out = np.empty(samples)
    for s in range(samples):
        alphas = rng.standard_normal((m, 4))
        X = np.zeros((m + 1, m + 1, 4))
        for ell in range(1, m + 1):
            X += X_element(m, ell, alphas[ell - 1])
        w = tangent_of_corner(X, m)
        g = float(metric_at(base, w, w)[0])
        out[s] = killing_value(X, X, m) / g
    return out


def metric_scaling_check(
    m: int, samples: int = 100, seed: int = 0, reference: float | None = None
) -> float:
    """Max deviation of kappa/g from the reference constant over random
    horizontal tangent vectors; the default reference is 2(m-1)."""
    if reference is None:
        reference = 2.0 * (m - 1)
    ratios = killing_metric_ratios(m, samples, seed)
    return float(np.abs(ratios - reference).max())


# ---------------------------------------------------------------------------
# Lie triple subspaces of the tangent space


def h0(v, w) -> np.ndarray:
    """The definite pairing sum conj(v_i) w_i on tangent vectors in H^m."""
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    if v.shape != w.shape or v.ndim != 2:
        raise ValueError("tangent vectors must share shape (m, 4)")
    return quat_mul(quat_conj(v), w).sum(axis=0)


def triple_product(v, w, u) -> np.ndarray:
    """The double-bracket tangent value
    v h0(w,u) - w h0(v,u) - u (h0(v,w) - h0(w,v))
    (entrywise right multiplication)."""
    v = np.asarray(v, dtype=float)
    w = np.asarray(w, dtype=float)
    u = np.asarray(u, dtype=float)
    return (
        quat_mul(v, h0(w, u))
        - quat_mul(w, h0(v, u))
        - quat_mul(u, h0(v, w) - h0(w, v))
    )


@dataclass(frozen=True, eq=False)
class SubspaceSpan:
    """A real-linear subspace of the tangent space H^m, given by
    spanning vectors of shape (k, m, 4), linearly independent over R."""

    vectors: np.ndarray
    tolerance: float = SPAN_TOLERANCE

    def __post_init__(self):
        arr = np.asarray(self.vectors, dtype=float)
        if arr.ndim != 3 or arr.shape[-1] != 4 or arr.shape[0] == 0:
            raise ValueError("expected spanning vectors of shape (k, m, 4)")
        object.__setattr__(self, "vectors", arr)
        flat = arr.reshape(arr.shape[0], -1)
        s = np.linalg.svd(flat, compute_uv=False)
        if s[-1] <= self.tolerance * max(1.0, s[0]):
            raise ValueError("spanning vectors are not independent over R")

    @property
    def count(self) -> int:
        return self.vectors.shape[0]

    def orthonormal_flat(self) -> np.ndarray:
        flat = self.vectors.reshape(self.count, -1)
        Q, _ = np.linalg.qr(flat.T)
        return Q[:, : self.count]


def lie_triple_closure(W: SubspaceSpan) -> bool:
    """Whether the span is closed under the double-bracket triple
    product: every triple value stays inside within tolerance."""
    Q = W.orthonormal_flat()
    vecs = W.vectors
    for i, j, l in product(range(W.count), repeat=3):
        t = triple_product(vecs[i], vecs[j], vecs[l]).ravel()
        resid = t - Q @ (Q.T @ t)
        if np.linalg.norm(resid) > W.tolerance * max(1.0, np.linalg.norm(t)):
            return False
    return True


def _pairwise_h0(W: SubspaceSpan) -> np.ndarray:
    vals = [
        h0(W.vectors[i], W.vectors[j])
        for i in range(W.count)
        for j in range(W.count)
    ]
    return np.stack(vals)


def fit_pure_direction(values: np.ndarray) -> np.ndarray | None:
    """Dominant pure-imaginary direction of a batch of quaternion
    values, by SVD of their imaginary parts; None when they are all
    (numerically) real.  Sign fixed by the first nonzero component."""
    pures = np.asarray(values, dtype=float)[..., 1:].reshape(-1, 3)
    if np.abs(pures).max(initial=0.0) < 1e-14:
        return None
    _, _, vt = np.linalg.svd(pures)
    direction = vt[0]
    for comp in direction:
        if abs(comp) > 1e-14:
            if comp < 0:
                direction = -direction
            break
    return direction


def classify_subspace(W: SubspaceSpan) -> str:
    """Classify a tangent subspace by its pairing values, gated by
    triple-product closure.

    All pairwise h0 values real: totally real.  Pure parts confined to
    one common imaginary direction: totally complex.  Pure parts of
    rank >= 2: totally quaternionic.  Not closed: not a Lie triple.
    """
    if not lie_triple_closure(W):
        return NOT_LIE_TRIPLE
    vals = _pairwise_h0(W)
    scale = max(1.0, float(np.abs(vals).max()))
    pures = vals[:, 1:]
    if float(np.abs(pures).max()) <= W.tolerance * scale:
        return TOTALLY_REAL
    s = np.linalg.svd(pures, compute_uv=False)
    if s[1] <= W.tolerance * s[0]:
        return TOTALLY_COMPLEX
    return TOTALLY_QUATERNIONIC


def standard_span(m: int, kind: str, dim: int = 2) -> SubspaceSpan:
    """Canonical spans of each class: the real span of the first ``dim``
    coordinate axes (totally-real), the complex line through e_1
    (totally-complex), or the quaternionic plane through e_1, e_2
    (totally-quaternionic)."""
    def axis(i: int, unit: np.ndarray) -> np.ndarray:
        v = np.zeros((m, 4))
        v[i] = unit
        return v

    if kind == TOTALLY_REAL:
        if dim > m:
            raise ValueError("not enough axes")
        vecs = [axis(i, QUAT_ONE) for i in range(dim)]
    elif kind == TOTALLY_COMPLEX:
        vecs = [axis(0, QUAT_ONE), axis(0, QUAT_I)]
    elif kind == TOTALLY_QUATERNIONIC:
        if m < 2:
            raise ValueError("needs m >= 2")
        vecs = [axis(i, u) for i in range(2) for u in QUAT_UNITS]
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return SubspaceSpan(np.stack(vecs))


# ---------------------------------------------------------------------------
# bracket identity families and the consolidated report


def bracket_identity_dev(m: int) -> float:
    """Largest entry deviation across the four structural bracket
    families, over every applicable index pattern and all 16 unit
    component pairs:

    1. [X_l1(a), X_l2(b)] = Y_l1l2(a conj(b))        (l1 < l2 <= m)
    2. [X_l1(a), Y_l1l2(b)] = X_l2(conj(b) a)        (l1 < l2 <= m)
    3. [X_l1(a), H_l2(b)] = 0                        (l2 <= m, l2 != l1)
    4. [H_l1(a), Y_l2l3(b)] = 0                      (l2 < l3 <= m, l1 not in {l2, l3})
    """
    dev = 0.0
    units = QUAT_UNITS
    pure_units = QUAT_UNITS[1:]
    for l1, l2 in product(range(1, m + 1), repeat=2):
        if l1 < l2:
            for a, b in product(units, repeat=2):
                lhs = bracket(X_element(m, l1, a), X_element(m, l2, b))
                rhs = Y_element(m, l1, l2, quat_mul(a, quat_conj(b)))
                dev = max(dev, float(np.abs(lhs - rhs).max()))
                lhs = bracket(X_element(m, l1, a), Y_element(m, l1, l2, b))
                rhs = X_element(m, l2, quat_mul(quat_conj(b), a))
                dev = max(dev, float(np.abs(lhs - rhs).max()))
        if l1 != l2:
            for a, b in product(units, pure_units):
                lhs = bracket(X_element(m, l1, a), H_element(m, l2, b))
                dev = max(dev, float(np.abs(lhs).max()))
    for l2 in range(1, m + 1):
        for l3 in range(l2 + 1, m + 1):
            for l1 in range(1, m + 2):
                if l1 in (l2, l3):
                    continue
                for a, b in product(pure_units, units):
                    lhs = bracket(H_element(m, l1, a), Y_element(m, l2, l3, b))
                    dev = max(dev, float(np.abs(lhs).max()))
    return dev


def _report_check(name, value, reference, passed, detail):
    return {
        "name": name,
        "value": value,
        "reference": reference,
        "passed": bool(passed),
        "detail": detail,
    }


def geometry_report(m: int, samples: int = 25, seed: int = 7) -> dict:
    """Run every numeric check at a given m and collect the results.

    Each entry records the computed value, the reference it is held
    against, and a pass flag; the two Killing-normalization checks
    report honestly against their stated reference constants.
    """
    if m < 2:
        raise ValueError("the report needs m >= 2")
    rng = np.random.default_rng(seed)
    checks = []

    basis = lie_basis(m)
    checks.append(
        _report_check(
            "basis-count", len(basis), lie_dim(m), len(basis) == lie_dim(m),
            f"{len(basis)} basis elements, expected 2m^2+5m+3 = {lie_dim(m)}",
        )
    )

    member_dev = max(lie_algebra_dev(A) for A in basis)
    checks.append(
        _report_check(
            "basis-membership", member_dev, 0.0, member_dev <= GROUP_TOLERANCE,
            f"max defining-identity deviation {member_dev:.2e}",
        )
    )

    br_dev = bracket_identity_dev(m)
    checks.append(
        _report_check(
            "bracket-identities", br_dev, 0.0, br_dev == 0.0,
            f"four structural families, max deviation {br_dev:.2e}",
        )
    )

    w = tangent_of_corner(X_element(m, 1, QUAT_ONE), m)
    g_base = float(metric_at(base_point(m), w, w)[0])
    checks.append(
        _report_check(
            "base-metric", g_base, 4.0, abs(g_base - 4.0) <= 1e-12,
            f"g(w,w) = {g_base:.12g} for the unit corner direction",
        )
    )

    kappa = killing_value(X_element(m, 1, QUAT_ONE), X_element(m, 1, QUAT_ONE), m)
    ref_kappa = 8.0 * (m - 1)
    checks.append(
        _report_check(
            "killing-x1", kappa, ref_kappa, abs(kappa - ref_kappa) <= 1e-9,
            f"kappa(X1(1), X1(1)) = {kappa:.12g}, reference 8(m-1) = {ref_kappa:g}",
        )
    )

    ratios = killing_metric_ratios(m, samples, seed)
    ref_ratio = 2.0 * (m - 1)
    ratio_dev = float(np.abs(ratios - ref_ratio).max())
    checks.append(
        _report_check(
            "killing-metric-ratio", ratio_dev, 0.0, ratio_dev <= 1e-9,
            f"kappa/g in [{ratios.min():.12g}, {ratios.max():.12g}], "
            f"reference 2(m-1) = {ref_ratio:g}",
        )
    )

    inv_dev = 0.0
    proj_dev = 0.0
    for trial in range(10):
        pts = []
        for _ in range(2):
            b = rng.standard_normal((m, 4))
            b *= rng.uniform(0.1, 0.9) / math.sqrt(float((b * b).sum()))
            pts.append(ball_point_to_line(b))
        A = random_sp_element(m, seed + 1000 + trial)
        inv_dev = max(
            inv_dev,
            abs(distance(mat_vec(A, pts[0]), mat_vec(A, pts[1])) - distance(*pts)),
        )
        alpha = rng.standard_normal(4)
        proj_dev = max(proj_dev, distance(pts[0], quat_mul(pts[0], alpha)))
    checks.append(
        _report_check(
            "distance-invariance", inv_dev, 0.0, inv_dev <= INVARIANCE_TOLERANCE,
            f"max change under random isometries {inv_dev:.2e}",
        )
    )
    checks.append(
        _report_check(
            "distance-projective", proj_dev, 0.0, proj_dev <= 1e-10,
            f"max distance between a line and its rescaling {proj_dev:.2e}",
        )
    )

    group_dev = max(
        sp_dev(random_sp_element(m, seed + 2000 + t)) for t in range(10)
    )
    checks.append(
        _report_check(
            "group-membership", group_dev, 0.0, group_dev <= GROUP_TOLERANCE,
            f"max form deviation of sampled isometries {group_dev:.2e}",
        )
    )

    expected = {
        TOTALLY_REAL: classify_subspace(standard_span(m, TOTALLY_REAL)),
        TOTALLY_COMPLEX: classify_subspace(standard_span(m, TOTALLY_COMPLEX)),
        TOTALLY_QUATERNIONIC: classify_subspace(
            standard_span(m, TOTALLY_QUATERNIONIC)
        ),
    }
    perturbed = np.zeros((2, m, 4))
    perturbed[0, 0] = QUAT_ONE
    perturbed[1, 1] = QUAT_J
    perturbed[1, 0] = 0.3 * QUAT_I
    classify_ok = all(k == v for k, v in expected.items()) and (
        classify_subspace(SubspaceSpan(perturbed)) == NOT_LIE_TRIPLE
    )
    checks.append(
        _report_check(
            "triple-classification", classify_ok, True, classify_ok,
            "canonical spans of each class and a perturbed non-example",
        )
    )

    return {
        "m": m,
        "seed": seed,
        "samples": samples,
        "checks": checks,
        "all_passed": all(c["passed"] for c in checks),
    }
