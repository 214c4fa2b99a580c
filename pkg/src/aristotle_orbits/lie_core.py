"""Structure-constant machinery for finite-dimensional real Lie algebras.

Every algebra in this package is represented by a rank-3 array of structure
constants C^c_{ab} over a fixed, documented basis order.  The planar
conventions used throughout the package are fixed here, once:

* rotations are counterclockwise, R(theta) = [[cos, -sin], [sin, cos]];
* the rotation generator acts on each translation pair (V1, V2) as
  [J, V1] = V2 and [J, V2] = -V1, so ad_J restricted to a pair is the
  counterclockwise generator EPS0 = [[0, -1], [1, 0]];
* the antisymmetric pairing of 2-vectors is cross2(a, b) = a1*b2 - a2*b1,
  and eps_vec(u) = (u2, -u1) = -EPS0 @ u is the vector it induces when a
  rotation parameter is contracted against a translation;
* the lower-index symbol has eps_{12} = +1.

These four statements are one consistent package: changing any of them in
isolation breaks the cross checks between the group laws, the adjoint and
coadjoint actions, and the Kirillov matrices that the test suite enforces.

All values are double precision.  Types are immutable after construction
and all operations are pure functions, so everything here is safe to share
across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class DimensionMismatchError(ValueError):
    """Input vector length does not match the algebra dimension."""


class SeriesConvergenceError(ArithmeticError):
    """A truncated power series failed to converge within its term cap."""


#: Counterclockwise rotation generator, d/dtheta R(theta) at theta = 0.
EPS0 = np.array([[0.0, -1.0], [1.0, 0.0]])


def rotation(theta: float) -> np.ndarray:
    """Counterclockwise rotation matrix R(theta)."""
    c, s = np.cos(theta), np.sin(theta)
    return np.array([[c, -s], [s, c]])


def cross2(a, b) -> float:
    """Planar cross product a1*b2 - a2*b1."""
    return float(a[0] * b[1] - a[1] * b[0])


def eps_vec(u) -> np.ndarray:
    """The vector (u2, -u1) contracted from a rotation parameter.

    Satisfies eps_vec(u) = -EPS0 @ u and cross2(u, eps_vec(u)) = -|u|^2.
    """
    return np.array([u[1], -u[0]], dtype=float)


def eps_map(u) -> np.ndarray:
    """The matrix [[0, u2], [-u1, 0]] carrying the rotation-translation mix.

    Its nonzero entries are the components of eps_vec(u); contracting the
    rows against (1, 1) recovers eps_vec(u) itself.
    """
    return np.array([[0.0, u[1]], [-u[0], 0.0]])


@dataclass(frozen=True)
class ModelParams:
    """Physical scales shared by all models.

    m is a mass, omega a frequency and r a length.  The derived velocity is
    c = omega * r and the derived reference action is l_sub = m * omega * r**2,
    so with the default m = omega = r = 1 all structure constants and matrix
    entries reduce to small integers.
    """

    m: float = 1.0
    omega: float = 1.0
    r: float = 1.0

    def __post_init__(self):
        if not (self.m > 0 and self.omega > 0 and self.r > 0):
            raise ValueError("ModelParams requires m > 0, omega > 0, r > 0")

    @property
    def c(self) -> float:
        return self.omega * self.r

    @property
    def l_sub(self) -> float:
        """Reference action m * omega * r**2 (the action-scale substitution)."""
        return self.m * self.omega * self.r**2

    @property
    def m_omega(self) -> float:
        return self.m * self.omega


@dataclass(frozen=True)
class StructureTensor:
    """Structure constants C^c_{ab} of a Lie algebra over a labeled basis.

    The array is indexed c[a, b, out] and is antisymmetric in (a, b) bit
    exactly by construction.
    """

    labels: tuple[str, ...]
    c: np.ndarray = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    @staticmethod
    def from_brackets(labels: tuple[str, ...], table: dict) -> "StructureTensor":
        """Build a tensor from a map {(a, b): {out: coeff}} of nonzero brackets.

        Only one orientation of each pair needs to be given; the opposite
        orientation is filled with the exact negation.
        """
        n = len(labels)
        c = np.zeros((n, n, n))
        idx = {lab: k for k, lab in enumerate(labels)}
        for (a, b), outs in table.items():
            ia, ib = idx[a], idx[b]
            for out, coeff in outs.items():
                c[ia, ib, idx[out]] = coeff
                c[ib, ia, idx[out]] = -coeff
        return StructureTensor(labels=tuple(labels), c=c)


def _check_dim(t: StructureTensor, v: np.ndarray, name: str) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (t.dim,):
        raise DimensionMismatchError(
            f"{name} has shape {v.shape}, expected ({t.dim},)"
        )
    return v


def bracket(t: StructureTensor, x, y) -> np.ndarray:
    """Lie bracket [x, y]^c = sum_ab C^c_{ab} x^a y^b."""
    x = _check_dim(t, x, "x")
    y = _check_dim(t, y, "y")
    return np.einsum("abc,a,b->c", t.c, x, y)

def jacobi_defect(t: StructureTensor) -> float:
    """Max-norm of the cyclic sum [[e_a,e_b],e_c] + [[e_b,e_c],e_a] + [[e_c,e_a],e_b].

    Zero (to rounding) exactly when the tensor defines a Lie algebra.
    """
    # nested[a, b, c, d] = [[e_a, e_b], e_c]^d
    nested = np.einsum("abe,ecd->abcd", t.c, t.c)
    cyc = nested + nested.transpose(1, 2, 0, 3) + nested.transpose(2, 0, 1, 3)
    return float(np.max(np.abs(cyc)))


def ad_matrix(t: StructureTensor, x) -> np.ndarray:
    """Matrix of ad_x, with (ad_x)^c_b = sum_a C^c_{ab} x^a.

    Satisfies ad_matrix(t, x) @ y == bracket(t, x, y) for all y.
    """
    x = _check_dim(t, x, "x")
    return np.einsum("abc,a->cb", t.c, x)


def coad_matrix(t: StructureTensor, x) -> np.ndarray:
    """Matrix of the infinitesimal coadjoint action, -ad_matrix(t, x).T.

    Acting on dual coordinate vectors it satisfies the pairing identity
    <coad(x) xi, y> + <xi, ad(x) y> = 0.
    """
    return -ad_matrix(t, x).T


def kirillov_matrix(t: StructureTensor, xi) -> np.ndarray:
    """Antisymmetric form K_{ab} = sum_c C^c_{ab} xi_c at the dual point xi."""
    xi = _check_dim(t, xi, "xi")
    return np.einsum("abc,c->ab", t.c, xi)


def pairing(xi, y) -> float:
    """Duality pairing <xi, y> of a dual vector with an algebra vector."""
    return float(np.dot(np.asarray(xi, dtype=float), np.asarray(y, dtype=float)))


def exp_coadjoint(t: StructureTensor, x, xi, tol: float = 1e-12,
                  max_terms: int = 200) -> np.ndarray:
    """exp(coad_matrix(t, x)) @ xi by truncated power series.

    Reference oracle for the closed-form group coadjoint actions.  Terms are
    accumulated until the next term's max-norm drops below tol * (1 + |xi|);
    the coadjoint matrices of the built-in models are rotation-plus-nilpotent,
    so the series terminates quickly.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    xi = _check_dim(t, xi, "xi")
    m = coad_matrix(t, x)
    acc = xi.copy()
    term = xi.copy()
    scale = tol * (1.0 + float(np.max(np.abs(xi))))
    for n in range(1, max_terms + 1):
        term = (m @ term) / n
        acc = acc + term
        if np.max(np.abs(term)) < scale:
            return acc
    raise SeriesConvergenceError(
        f"coadjoint exponential series did not converge within {max_terms} "
        f"terms (last term norm {np.max(np.abs(term)):.3e})"
    )
