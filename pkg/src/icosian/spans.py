"""Exact linear spans and generated matrix algebras over the golden field.

A 2x2 quaternion matrix flattens to 16 golden-field coordinates; spans and
product-closures are computed by exact elimination.  The reports certify the
small generated algebras (the commutative rank-3 one, its rank-6 extension
with a complex corner and a quaternion corner, and the full 16-dimensional
algebra generated by the reflections).
"""
from __future__ import annotations

from .goldnum import Gold
from .linalg import Echelon
from .qmat2 import IDENTITY, QMat2
from .quat import PHI, Quat, THETA, ZERO as Q_ZERO
from .reflgroup import build_o1, generators, reflection_matrices

THIRD = Gold(1, 0, 3)


def flatten(m: QMat2) -> list[Gold]:
    """16 coordinates: entries in reading order, each as (w, x, y, z)."""
    out = []
    for q in (m.m11, m.m12, m.m21, m.m22):
        out += [q.w, q.x, q.y, q.z]
    return out


def unflatten(coords: list[Gold]) -> QMat2:
    qs = [Quat(*coords[i:i + 4]) for i in range(0, 16, 4)]
    return QMat2(*qs)


def span_dim(mats: list[QMat2]) -> int:
    ech = Echelon(16)
    for m in mats:
        ech.add(flatten(m))
    return ech.dim


def algebra_closure(mats: list[QMat2]) -> tuple[int, list[QMat2]]:
    """Smallest product-closed subspace containing mats.

    Returns its dimension and a matrix basis; each pass multiplies every
    basis pair and keeps products that enlarge the span.
    """
    ech = Echelon(16)
    basis: list[QMat2] = []
    for m in mats:
        if ech.add(flatten(m)):
            basis.append(m)
    while True:
        grew = False
        for a in list(basis):
            for b in list(basis):
                p = a * b
                if ech.add(flatten(p)):
                    basis.append(p)
                    grew = True
        if not grew:
            return ech.dim, basis


def algebra_closure_dim(mats: list[QMat2]) -> int:
    return algebra_closure(mats)[0]


def is_galois_stable(mats: list[QMat2]) -> bool:
    """Whether the span is preserved by the sqrt5 -> -sqrt5 automorphism."""
    ech = Echelon(16)
    for m in mats:
        ech.add(flatten(m))
    return all(ech.contains(flatten(m.galois())) for m in mats)


def _check(name: str, ok: bool, expected, actual) -> dict:
    return {"name": name, "expected": str(expected), "actual": str(actual),
            "pass": bool(ok)}


def _eq_check(name: str, got: QMat2, want: QMat2) -> dict:
    return _check(name, got == want, want.key(), got.key())


def neutrino_basis() -> tuple[QMat2, QMat2, QMat2, QMat2, QMat2, QMat2]:
    """(e1, e2, t, y, a, b): the six displayed combinations of 1, g, h."""
    _, g, h = generators()
    one = IDENTITY
    g2 = g * g
    e1 = (one + g + g2).scale(THIRD)          # diag(0, 1)
    e2 = (one + one - g - g2).scale(THIRD)    # diag(1, 0)
    t = g - g2                                # diag(theta, 0)
    y = h * e1                                # diag(0, phi)
    a = h * e2                                # diag(phi, 0)
    b = h * t                                 # diag(phi*theta, 0)
    return e1, e2, t, y, a, b


def neutrino_algebra_report() -> list[dict]:
    """Certify the rank-3 commutative algebra and its rank-6 extension.

    The six displayed diagonal forms are checked exactly, along with the
    idempotent laws and the corner multiplication tables (a complex corner
    on e1, a quaternion corner on e2).
    """
    _, g, h = generators()
    e1, e2, t, y, a, b = neutrino_basis()
    zero = QMat2.diag(Q_ZERO, Q_ZERO)
    checks = [
        _eq_check("(1+g+g^2)/3 = diag(0,1)", e1, QMat2.diag(Q_ZERO, Quat.of(1))),
        _eq_check("(2-g-g^2)/3 = diag(1,0)", e2, QMat2.diag(Quat.of(1), Q_ZERO)),
        _eq_check("g-g^2 = diag(theta,0)", t, QMat2.diag(THETA, Q_ZERO)),
        _eq_check("h(1+g+g^2)/3 = diag(0,phi)", y, QMat2.diag(Q_ZERO, PHI)),
        _eq_check("h(2-g-g^2)/3 = diag(phi,0)", a, QMat2.diag(PHI, Q_ZERO)),
        _eq_check("h(g-g^2) = diag(phi*theta,0)", b, QMat2.diag(PHI * THETA, Q_ZERO)),
        _eq_check("e1 idempotent", e1 * e1, e1),
        _eq_check("e2 idempotent", e2 * e2, e2),
        _eq_check("e1*e2 = 0", e1 * e2, zero),
        _eq_check("e2*e1 = 0", e2 * e1, zero),
        _eq_check("e1+e2 = identity", e1 + e2, IDENTITY),
        # quaternion corner on e2: basis 1, phi, theta, phi*theta
        _eq_check("corner phi^2 = -1", a * a, -e2),
        _eq_check("corner theta^2 = -3", t * t, -e2 - e2 - e2),
        _eq_check("corner phi*theta anticommutes", a * t, -(t * a)),
        _eq_check("corner (phi)(theta) = phi*theta", a * t, b),
        # complex corner on e1: basis 1, phi
        _eq_check("corner y^2 = -e1", y * y, -e1),
        _eq_check("corners commute: y*a = 0", y * a, zero),
        _check("dim of algebra <1,g,g^2>", algebra_closure_dim(
            [IDENTITY, g, g * g]) == 3, 3, algebra_closure_dim([IDENTITY, g, g * g])),
        _check("dim with h adjoined", algebra_closure_dim(
            [IDENTITY, g, g * g, h]) == 6, 6,
            algebra_closure_dim([IDENTITY, g, g * g, h])),
        # the rank-6 span is not galois-stable (phi's corner spans only
        # {1, phi}); its golden dimension still equals the real dimension
        # because golden scalars embed in the reals, so stability is not
        # asserted here
        _check("galois-stable rank-3 span", is_galois_stable(
            [IDENTITY, g, g * g]), True, is_galois_stable([IDENTITY, g, g * g])),
    ]
    return checks


def _commutator(a: QMat2, b: QMat2) -> QMat2:
    return a * b - b * a


def su2_u1_split_report() -> list[dict]:
    """Certify the corner split of the rank-6 algebra into su(2)-like and
    u(1)-like parts.

    The three first-corner generators close under commutation with Gold
    coefficients; the second-corner generator commutes with all of them.
    """
    e1, e2, t, y, a, b = neutrino_basis()
    zero = QMat2.diag(Q_ZERO, Q_ZERO)
    checks = [
        _eq_check("a acts in first corner only", e2 * a * e2, a),
        _eq_check("t acts in first corner only", e2 * t * e2, t),
        _eq_check("b acts in first corner only", e2 * b * e2, b),
        _eq_check("y acts in second corner only", e1 * y * e1, y),
        _eq_check("[a,t] = 2b", _commutator(a, t), b + b),
        _eq_check("[a,b] = -2t", _commutator(a, b), -(t + t)),
        _eq_check("[t,b] = 6a", _commutator(t, b),
                  (a + a + a).scale(Gold(2))),
        _eq_check("a anticommutes with t", a * t, -(t * a)),
        _eq_check("a anticommutes with b", a * b, -(b * a)),
        _eq_check("t anticommutes with b", t * b, -(b * t)),
        _eq_check("a^2 = -e2 corner identity", a * a, -e2),
        _eq_check("[y,a] = 0", _commutator(y, a), zero),
        _eq_check("[y,t] = 0", _commutator(y, t), zero),
        _eq_check("[y,b] = 0", _commutator(y, b), zero),
    ]
    return checks


def reflection_algebra_report() -> list[dict]:
    """The 20 reflections generate the full 16-dimensional matrix algebra;
    the 120 group elements span no more."""
    dim_refl = algebra_closure_dim(list(reflection_matrices()))
    dim_group = span_dim(list(build_o1().elements))
    stable = is_galois_stable(list(reflection_matrices()))
    return [
        _check("algebra generated by 20 reflections", dim_refl == 16, 16, dim_refl),
        _check("span of all 120 group elements", dim_group == 16, 16, dim_group),
        _check("galois-stable reflection span", stable, True, stable),
    ]
