"""The five planar models: bracket tables, group laws, adjoint and coadjoint actions.

Models
------
base        rotations, space translations and time translations of the plane,
            parameters (theta, x, t), with no extension.
central1    one central generator S; translations stop commuting,
            [P1, P2] = S / r**2, via the two-cocycle c(g, g') below.
central2    a second central generator N on top of central1.  The consistent
            bracket set is [P1, P2] = N / r**2 together with [S, H] = omega N:
            the variant that keeps [P1, P2] = S / r**2 while adding
            [S, H] = omega N fails the Jacobi identity (its defect is
            omega / r**2), and the matching group law fails associativity.
            The repaired structure reproduces the same invariants, Kirillov
            form and equations of motion, with the action coordinate l
            evolving as dl/dt = h * omega.
central2-defective
            the inconsistent variant above, kept for diagnostics only.
noncentral  non-commuting generators F1, F2 with [P_i, H] = F_i and
            [J, F_i] rotating like translations; their duals are forces.
double      central extension of noncentral by K with [P_i, F_j] = K delta_ij;
            the K dual is a Hooke constant and momenta stop commuting.

Basis orders are (J, P1, P2, H) with extension generators appended:
(..., S), (..., S, N), (..., F1, F2, S), (..., F1, F2, S, K).  Dual
coordinates follow the same order with labels
(j, p1, p2, E) then (l), (l, h), (f1, f2, h), (f1, f2, h, k).

The coadjoint action is the dual of conjugation by the inverse element,
Ad*_g = (Ad_{g^{-1}})^T on coordinates, so Ad*_{g g'} = Ad*_g Ad*_{g'} and
Ad*_{exp(sX)} = exp(s * coad_matrix(X)).  The closed forms below were
derived from the multiplication laws and are cross-checked against that
exponential series by the test suite.  Where a differently-signed variant
of a term is in circulation, the verify report lists it as a convention
note; the series oracle is authoritative here.

Everything is a pure function over immutable values.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .lie_core import (
    ModelParams,
    StructureTensor,
    cross2,
    eps_vec,
    rotation,
)


class ModelMismatchError(ValueError):
    """A group element does not carry the fields of the requested model."""


class ModelId(enum.Enum):
    BASE = "base"
    CENTRAL1 = "central1"
    CENTRAL2 = "central2"
    NONCENTRAL = "noncentral"
    DOUBLE = "double"

    @staticmethod
    def from_name(name: str) -> "ModelId":
        try:
            return ModelId(name.lower())
        except ValueError:
            raise ModelMismatchError(f"unknown model name {name!r}") from None


ALGEBRA_LABELS: dict[ModelId, tuple[str, ...]] = {
    ModelId.BASE: ("J", "P1", "P2", "H"),
    ModelId.CENTRAL1: ("J", "P1", "P2", "H", "S"),
    ModelId.CENTRAL2: ("J", "P1", "P2", "H", "S", "N"),
    ModelId.NONCENTRAL: ("J", "P1", "P2", "H", "F1", "F2", "S"),
    ModelId.DOUBLE: ("J", "P1", "P2", "H", "F1", "F2", "S", "K"),
}

DUAL_LABELS: dict[ModelId, tuple[str, ...]] = {
    ModelId.BASE: ("j", "p1", "p2", "E"),
    ModelId.CENTRAL1: ("j", "p1", "p2", "E", "l"),
    ModelId.CENTRAL2: ("j", "p1", "p2", "E", "l", "h"),
    ModelId.NONCENTRAL: ("j", "p1", "p2", "E", "f1", "f2", "h"),
    ModelId.DOUBLE: ("j", "p1", "p2", "E", "f1", "f2", "h", "k"),
}

#: Group parameter fields carried by each model.
MODEL_FIELDS: dict[ModelId, tuple[str, ...]] = {
    ModelId.BASE: ("theta", "x", "t"),
    ModelId.CENTRAL1: ("theta", "x", "t", "phi"),
    ModelId.CENTRAL2: ("theta", "x", "t", "phi", "psi"),
    ModelId.NONCENTRAL: ("theta", "x", "t", "phi", "eta"),
    ModelId.DOUBLE: ("theta", "x", "t", "phi", "eta", "gamma"),
}

DEFAULT_PARAMS = ModelParams()


def dim(model: ModelId) -> int:
    return len(ALGEBRA_LABELS[model])


def bracket_table(model: ModelId, params: ModelParams = DEFAULT_PARAMS) -> dict:
    """Nonzero Lie brackets {(a, b): {out: coeff}} of the model.

    The rotation generator acts as [J, V1] = V2, [J, V2] = -V1 on each
    translation pair, and [P1, P2] carries the 1/r**2 extension charge.
    """
    inv_r2 = 1.0 / params.r**2
    rot_pairs = {("J", "P1"): {"P2": 1.0}, ("J", "P2"): {"P1": -1.0}}
    if model is ModelId.BASE:
        return dict(rot_pairs)
    if model is ModelId.CENTRAL1:
        return {**rot_pairs, ("P1", "P2"): {"S": inv_r2}}
    if model is ModelId.CENTRAL2:
        return {
            **rot_pairs,
            ("P1", "P2"): {"N": inv_r2},
            ("S", "H"): {"N": params.omega},
        }
    force_pairs = {
        **rot_pairs,
        ("J", "F1"): {"F2": 1.0},
        ("J", "F2"): {"F1": -1.0},
        ("P1", "P2"): {"S": inv_r2},
        ("P1", "H"): {"F1": 1.0},
        ("P2", "H"): {"F2": 1.0},
    }
    if model is ModelId.NONCENTRAL:
        return force_pairs
    if model is ModelId.DOUBLE:
        return {
            **force_pairs,
            ("P1", "F1"): {"K": 1.0},
            ("P2", "F2"): {"K": 1.0},
        }
    raise ModelMismatchError(f"unknown model {model}")


def structure_tensor(model: ModelId,
                     params: ModelParams = DEFAULT_PARAMS) -> StructureTensor:
    """Structure constants of the model in its documented basis order."""
    return StructureTensor.from_brackets(ALGEBRA_LABELS[model],
                                         bracket_table(model, params))


def defective_central2_tensor(params: ModelParams = DEFAULT_PARAMS) -> StructureTensor:
    """The inconsistent central2 variant with [P1, P2] = S / r**2 kept.

    Not a Lie algebra: the (P1, P2, H) cyclic sum leaves omega / r**2 on N.
    Exposed for the diagnostic checks of the verify command.
    """
    table = bracket_table(ModelId.CENTRAL2, params)
    table[("P1", "P2")] = {"S": 1.0 / params.r**2}
    return StructureTensor.from_brackets(ALGEBRA_LABELS[ModelId.CENTRAL2], table)


@dataclass(frozen=True)
class GroupParam:
    """Group element parameters; only the fields of one model are set.

    theta is the rotation angle, x the space translation, t the time
    translation; phi, psi, eta, gamma are the extension parameters.
    """

    theta: float = 0.0
    x: tuple[float, float] = (0.0, 0.0)
    t: float = 0.0
    phi: float | None = None
    psi: float | None = None
    eta: tuple[float, float] | None = None
    gamma: float | None = None

    def xvec(self) -> np.ndarray:
        return np.asarray(self.x, dtype=float)

    def etavec(self) -> np.ndarray:
        return np.asarray(self.eta, dtype=float)


def identity_element(model: ModelId) -> GroupParam:
    """The neutral element: every parameter of the model is zero."""
    fields = MODEL_FIELDS[model]
    kw = {}
    if "phi" in fields:
        kw["phi"] = 0.0
    if "psi" in fields:
        kw["psi"] = 0.0
    if "eta" in fields:
        kw["eta"] = (0.0, 0.0)
    if "gamma" in fields:
        kw["gamma"] = 0.0
    return GroupParam(**kw)


def _require(model: ModelId, g: GroupParam) -> None:
    fields = MODEL_FIELDS[model]
    for name in ("phi", "psi", "eta", "gamma"):
        have = getattr(g, name) is not None
        if have != (name in fields):
            raise ModelMismatchError(
                f"element field {name!r} {'set' if have else 'missing'} "
                f"for model {model.value}"
            )


def cocycle(g: GroupParam, g2: GroupParam,
            params: ModelParams = DEFAULT_PARAMS) -> float:
    """Two-cocycle c(g, g') = cross2(R(-theta) x, x') / (2 r**2) on base elements.

    Twists the phi component of every extended multiplication law and
    satisfies c(g, g') + c(g g', g'') = c(g', g'') + c(g, g' g'').
    """
    u = rotation(-g.theta) @ g.xvec()
    return cross2(u, g2.xvec()) / (2.0 * params.r**2)


def multiply(model: ModelId, g: GroupParam, g2: GroupParam,
             params: ModelParams = DEFAULT_PARAMS) -> GroupParam:
    """Composition g * g2 by the model's closed-form multiplication law."""
    _require(model, g)
    _require(model, g2)
    R = rotation(g.theta)
    theta = g.theta + g2.theta
    x = R @ g2.xvec() + g.xvec()
    t = g.t + g2.t
    if model is ModelId.BASE:
        return GroupParam(theta=theta, x=tuple(x), t=t)
    coc = cocycle(g, g2, params)
    if model is ModelId.CENTRAL1:
        return GroupParam(theta=theta, x=tuple(x), t=t, phi=g.phi + g2.phi + coc)
    if model is ModelId.CENTRAL2:
        # The cross-product cocycle feeds the new center N (psi); the S
        # coordinate phi composes additively and pairs with H through N.
        psi = g.psi + g2.psi + coc - params.omega * g.t * g2.phi
        return GroupParam(theta=theta, x=tuple(x), t=t,
                          phi=g.phi + g2.phi, psi=psi)
    if model is ModelId.NONCENTRAL:
        eta = R @ g2.etavec() - R @ g2.xvec() * g.t + g.etavec()
        return GroupParam(theta=theta, x=tuple(x), t=t,
                          phi=g.phi + g2.phi + coc, eta=tuple(eta))
    if model is ModelId.DOUBLE:
        eta = R @ g2.etavec() + g.etavec() + g.xvec() * g2.t
        gamma = (g.gamma + g2.gamma
                 + 0.5 * g.xvec() @ (R @ g2.etavec())
                 - 0.5 * (g.etavec() + g.xvec() * g2.t) @ (R @ g2.xvec()))
        return GroupParam(theta=theta, x=tuple(x), t=t,
                          phi=g.phi + g2.phi + coc, eta=tuple(eta), gamma=gamma)
    raise ModelMismatchError(f"unknown model {model}")


def inverse(model: ModelId, g: GroupParam,
            params: ModelParams = DEFAULT_PARAMS) -> GroupParam:
    """Group inverse, solving multiply(model, g, inverse(g)) = identity."""
    _require(model, g)
    Rm = rotation(-g.theta)
    theta = -g.theta
    x = -(Rm @ g.xvec())
    t = -g.t
    if model is ModelId.BASE:
        return GroupParam(theta=theta, x=tuple(x), t=t)
    if model is ModelId.CENTRAL1:
        return GroupParam(theta=theta, x=tuple(x), t=t, phi=-g.phi)
    if model is ModelId.CENTRAL2:
        return GroupParam(theta=theta, x=tuple(x), t=t, phi=-g.phi,
                          psi=-g.psi - params.omega * g.t * g.phi)
    if model is ModelId.NONCENTRAL:
        eta = -(Rm @ (g.etavec() + g.xvec() * g.t))
        return GroupParam(theta=theta, x=tuple(x), t=t, phi=-g.phi,
                          eta=tuple(eta))
    if model is ModelId.DOUBLE:
        eta = -(Rm @ (g.etavec() - g.xvec() * g.t))
        return GroupParam(theta=theta, x=tuple(x), t=t, phi=-g.phi,
                          eta=tuple(eta), gamma=-g.gamma)
    raise ModelMismatchError(f"unknown model {model}")


def adjoint(model: ModelId, g: GroupParam, dx,
            params: ModelParams = DEFAULT_PARAMS) -> np.ndarray:
    """Closed-form adjoint action of g on an algebra vector.

    The vector is ordered like ALGEBRA_LABELS[model]; rotation parameters
    contract to translations through eps_vec, and the cocycle contributes
    cross2(R(-theta) x, dx_trans) / r**2 - |x|^2 dtheta / (2 r**2) on the
    extension slot it feeds.
    """
    _require(model, g)
    dx = np.asarray(dx, dtype=float)
    n = dim(model)
    if dx.shape != (n,):
        raise ModelMismatchError(f"algebra vector has shape {dx.shape}, "
                                 f"expected ({n},)")
    R = rotation(g.theta)
    xv = g.xvec()
    r2 = params.r**2
    dth, dtr, dt = dx[0], dx[1:3], dx[3]
    out = np.empty(n)
    out[0] = dth
    out[1:3] = R @ dtr + eps_vec(xv) * dth
    out[3] = dt
    coc_term = cross2(rotation(-g.theta) @ xv, dtr) / r2 - (xv @ xv) / (2 * r2) * dth
    if model is ModelId.BASE:
        return out
    if model is ModelId.CENTRAL1:
        out[4] = dx[4] + coc_term
        return out
    if model is ModelId.CENTRAL2:
        out[4] = dx[4]
        out[5] = (dx[5] + coc_term
                  - params.omega * g.t * dx[4] + params.omega * g.phi * dt)
        return out
    ev = g.etavec()
    deta = dx[4:6]
    if model is ModelId.NONCENTRAL:
        out[4:6] = R @ deta - g.t * (R @ dtr) + eps_vec(ev) * dth + xv * dt
        out[6] = dx[6] + coc_term
        return out
    if model is ModelId.DOUBLE:
        out[4:6] = (R @ deta - g.t * (R @ dtr)
                    + eps_vec(ev - xv * g.t) * dth + xv * dt)
        out[6] = dx[6] + coc_term
        out[7] = (dx[7] + xv @ (R @ deta) - ev @ (R @ dtr)
                  + cross2(xv, ev) * dth + 0.5 * (xv @ xv) * dt)
        return out
    raise ModelMismatchError(f"unknown model {model}")


def coadjoint(model: ModelId, g: GroupParam, xi,
              params: ModelParams = DEFAULT_PARAMS) -> np.ndarray:
    """Closed-form coadjoint action Ad*_g xi = (Ad_{g^{-1}})^T xi.

    Dual coordinates are ordered like DUAL_LABELS[model].  The extension
    charges (l for central1, h elsewhere) scale every translation coupling,
    and the angular momentum picks up -charge |x|^2 / (2 r**2).
    """
    _require(model, g)
    xi = np.asarray(xi, dtype=float)
    n = dim(model)
    if xi.shape != (n,):
        raise ModelMismatchError(f"dual vector has shape {xi.shape}, "
                                 f"expected ({n},)")
    R = rotation(g.theta)
    xv = g.xvec()
    r2 = params.r**2
    j, p, E = xi[0], xi[1:3], xi[3]
    Rp = R @ p
    out = np.empty(n)
    if model is ModelId.BASE:
        out[0] = j + cross2(xv, Rp)
        out[1:3] = Rp
        out[3] = E
        return out
    if model is ModelId.CENTRAL1:
        l = xi[4]
        out[0] = j + cross2(xv, Rp) - l * (xv @ xv) / (2 * r2)
        out[1:3] = Rp + (l / r2) * eps_vec(xv)
        out[3] = E
        out[4] = l
        return out
    if model is ModelId.CENTRAL2:
        l, h = xi[4], xi[5]
        out[0] = j + cross2(xv, Rp) - h * (xv @ xv) / (2 * r2)
        out[1:3] = Rp + (h / r2) * eps_vec(xv)
        out[3] = E - h * params.omega * g.phi
        out[4] = l + h * params.omega * g.t
        out[5] = h
        return out
    f = xi[4:6]
    h = xi[6]
    Rf = R @ f
    ev = g.etavec()
    if model is ModelId.NONCENTRAL:
        out[0] = (j + cross2(xv, Rp) + cross2(ev + xv * g.t, Rf)
                  - h * (xv @ xv) / (2 * r2))
        out[1:3] = Rp + g.t * Rf + (h / r2) * eps_vec(xv)
        out[3] = E - xv @ Rf
        out[4:6] = Rf
        out[6] = h
        return out
    if model is ModelId.DOUBLE:
        k = xi[7]
        out[0] = (j + cross2(xv, Rp) + cross2(ev, Rf) + k * cross2(xv, ev)
                  - h * (xv @ xv) / (2 * r2))
        out[1:3] = Rp + g.t * Rf + k * (ev - xv * g.t) + (h / r2) * eps_vec(xv)
        out[3] = E - xv @ Rf + 0.5 * k * (xv @ xv)
        out[4:6] = Rf - k * xv
        out[6] = h
        out[7] = k
        return out
    raise ModelMismatchError(f"unknown model {model}")


def one_param_element(model: ModelId, label: str, s: float) -> GroupParam:
    """exp(s * e_label) as a group element, for a single basis generator."""
    if label not in ALGEBRA_LABELS[model]:
        raise ModelMismatchError(f"{label!r} is not a generator of {model.value}")
    e = identity_element(model)
    kw = {"phi": e.phi, "psi": e.psi, "eta": e.eta, "gamma": e.gamma}
    if label == "J":
        return GroupParam(theta=s, **kw)
    if label == "P1":
        return GroupParam(x=(s, 0.0), **kw)
    if label == "P2":
        return GroupParam(x=(0.0, s), **kw)
    if label == "H":
        return GroupParam(t=s, **kw)
    if label == "S":
        kw["phi"] = s
        return GroupParam(**kw)
    if label == "N":
        kw["psi"] = s
        return GroupParam(**kw)
    if label == "F1":
        kw["eta"] = (s, 0.0)
        return GroupParam(**kw)
    if label == "F2":
        kw["eta"] = (0.0, s)
        return GroupParam(**kw)
    if label == "K":
        kw["gamma"] = s
        return GroupParam(**kw)
    raise ModelMismatchError(f"unknown generator {label!r}")


def element_from_algebra(model: ModelId, y, s: float = 1.0) -> GroupParam:
    """Group element with parameter slots s * y; agrees with exp(s y) to O(s^2).

    Good enough for centered finite differences of the adjoint action at
    the identity, where the quadratic mismatch cancels.
    """
    y = np.asarray(y, dtype=float) * s
    fields = MODEL_FIELDS[model]
    labels = ALGEBRA_LABELS[model]
    kw: dict = {"theta": y[0], "x": (y[1], y[2]), "t": y[3]}
    if "eta" in fields:
        i = labels.index("F1")
        kw["eta"] = (y[i], y[i + 1])
    if "phi" in fields:
        kw["phi"] = y[labels.index("S")]
    if "psi" in fields:
        kw["psi"] = y[labels.index("N")]
    if "gamma" in fields:
        kw["gamma"] = y[labels.index("K")]
    return GroupParam(**kw)


def sample_element(model: ModelId, rng: np.random.Generator) -> GroupParam:
    """Random element: angle uniform in [-pi, pi], other parameters in [-1, 1]."""
    u = lambda: float(rng.uniform(-1.0, 1.0))
    fields = MODEL_FIELDS[model]
    kw: dict = {
        "theta": float(rng.uniform(-np.pi, np.pi)),
        "x": (u(), u()),
        "t": u(),
    }
    if "phi" in fields:
        kw["phi"] = u()
    if "psi" in fields:
        kw["psi"] = u()
    if "eta" in fields:
        kw["eta"] = (u(), u())
    if "gamma" in fields:
        kw["gamma"] = u()
    return GroupParam(**kw)


def sample_dual(model: ModelId, rng: np.random.Generator,
                nondegenerate: bool = False) -> np.ndarray:
    """Random dual vector with coordinates in [-1, 1].

    With nondegenerate=True the extension charges (l, h, k) are pushed away
    from zero and the force magnitude is kept positive, so chart maps and
    Casimir denominators are well conditioned.
    """
    xi = rng.uniform(-1.0, 1.0, size=dim(model))
    if nondegenerate:
        labels = DUAL_LABELS[model]
        for name in ("l", "h", "k"):
            if name in labels:
                i = labels.index(name)
                xi[i] = np.sign(xi[i]) * (0.5 + 0.5 * abs(xi[i]))
                if xi[i] == 0.0:
                    xi[i] = 1.0
        if "f1" in labels:
            i = labels.index("f1")
            f = xi[i:i + 2]
            norm = np.hypot(f[0], f[1])
            if norm < 0.3:
                xi[i:i + 2] = (0.6, 0.45)
    return xi


def dual_vector(model: ModelId, **components) -> np.ndarray:
    """Dual vector from named components, zero elsewhere (e.g. j=1, p1=0.5)."""
    labels = DUAL_LABELS[model]
    xi = np.zeros(len(labels))
    for name, value in components.items():
        if name not in labels:
            raise ModelMismatchError(f"{name!r} is not a dual label of "
                                     f"{model.value}")
        xi[labels.index(name)] = value
    return xi


def algebra_vector(model: ModelId, **components) -> np.ndarray:
    """Algebra vector from named generator components (e.g. J=0.3, P1=1)."""
    labels = ALGEBRA_LABELS[model]
    y = np.zeros(len(labels))
    for name, value in components.items():
        if name not in labels:
            raise ModelMismatchError(f"{name!r} is not a generator of "
                                     f"{model.value}")
        y[labels.index(name)] = value
    return y
