"""Polynomial model of symplectic spinors.

A spinor is a complex polynomial in l variables, stored as a finitely
supported map from exponent tuples to Gaussian-rational coefficients.
Vectors of the symplectic space act by the symplectic Clifford
multiplication: the first l basis vectors by i * (coordinate
multiplication), the last l by partial differentiation.  That action
satisfies v.w.s - w.v.s = -i omega(v, w) s exactly.

The model is the dense polynomial subspace of the full (Schwartz-type)
spinor space.  One consequence matters downstream: multiplication by a
vector lying entirely in the second Lagrangian (a pure derivative) has a
nonzero kernel here, so injectivity arguments are only used for vectors
with a nonzero component in the first Lagrangian.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb

from .linalg import OperatorMatrix, WindowLabel, kernel_basis
from .scalars import I, Scalar, scalar_from_json, scalar_to_json


class Spinor:
    """Finitely supported map exponent-tuple -> Scalar; no zero values."""

    __slots__ = ("l", "terms")

    def __init__(self, l, terms=None):
        self.l = l
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    def is_zero(self):
        return not self.terms

    def degree(self):
        """Max total exponent; -inf for the zero spinor."""
        if not self.terms:
            return float("-inf")
        return max(sum(e) for e in self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, Spinor)
            and self.l == other.l
            and self.terms == other.terms
        )

    def __add__(self, other):
        if self.l != other.l:
            raise ValueError("mixing spinors in different variable counts")
        out = dict(self.terms)
        for e, c in other.terms.items():
            acc = out.get(e)
            s = c if acc is None else acc + c
            if s:
                out[e] = s
            elif acc is not None:
                del out[e]
        return Spinor(self.l, out)

    def __neg__(self):
        return Spinor(self.l, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, z: Scalar):
        if not z:
            return Spinor(self.l)
        return Spinor(self.l, {e: z * c for e, c in self.terms.items()})

    def __repr__(self):
        return f"Spinor(l={self.l}, {len(self.terms)} terms)"


def monomial(l, exp, coef=Scalar(1)) -> Spinor:
    return Spinor(l, {tuple(exp): coef})


def monomial_key(exp):
    # basis order: total degree first, then lexicographic exponents
    return (sum(exp), exp)


def monomials_upto(l, D):
    """All exponent tuples of total degree <= D, in basis order."""
    out = []
    for d in range(D + 1):
        batch = set()
        for picks in combinations_with_replacement(range(l), d):
            e = [0] * l
            for p in picks:
                e[p] += 1
            batch.add(tuple(e))
        out.extend(sorted(batch))
    return out


class SpinorWindow:
    """Degree-truncated spinor space with an enumerated monomial basis."""

    __slots__ = ("l", "D", "basis", "index", "label")

    def __init__(self, l, D):
        if l < 1 or D < 0:
            raise ValueError("need l >= 1 and D >= 0")
        self.l = l
        self.D = D
        self.basis = tuple(monomials_upto(l, D))
        self.index = {e: k for k, e in enumerate(self.basis)}
        self.label = WindowLabel("spinor", l, None, D)
        assert len(self.basis) == comb(l + D, l)

    @property
    def dim(self):
        return len(self.basis)


def clifford_apply(sp, v, s: Spinor) -> Spinor:
    """Action of the vector v (2l Scalar components) on the spinor s."""
    l = sp.l
    out: dict = {}

    def put(e, c):
        acc = out.get(e)
        t = c if acc is None else acc + c
        if t:
            out[e] = t
        elif acc is not None:
            del out[e]

    for e, c in s.terms.items():
        for k in range(l):
            vk = v[k]
            if vk:
                # e_k . s = i x^k s
                e2 = list(e)
                e2[k] += 1
                put(tuple(e2), I * vk * c)
            vkl = v[k + l]
            if vkl and e[k]:
                # e_{k+l} . s = ds/dx^k
                e2 = list(e)
                e2[k] -= 1
                put(tuple(e2), vkl * c * e[k])
    return Spinor(l, out)


def commutator_defect(sp, v, w, s: Spinor) -> Spinor:
    """v.(w.s) - w.(v.s) + i omega(v, w) s; identically zero by the
    commutation relation of the Clifford action."""
    from .symplectic import omega_value

    vw = clifford_apply(sp, v, clifford_apply(sp, w, s))
    wv = clifford_apply(sp, w, clifford_apply(sp, v, s))
    corr = s.scale(I * omega_value(sp, v, w))
    return vw - wv + corr


def clifford_matrix(sp, v, win: SpinorWindow, cowin: SpinorWindow) -> OperatorMatrix:
    entries = {}
    for col, e in enumerate(win.basis):
        img = clifford_apply(sp, v, monomial(win.l, e))
        for e2, c in img.terms.items():
            row = cowin.index.get(e2)
            if row is None:
                raise ValueError("codomain window too small for image degree")
            entries[(row, col)] = c
    return OperatorMatrix(cowin.dim, win.dim, entries, win.label, cowin.label)


def clifford_kernel(sp, v, win: SpinorWindow):
    """Exact kernel basis of s -> v.s on the window (target one degree up)."""
    if not any(v):
        raise ValueError("Clifford multiplication kernel needs v != 0")
    cowin = SpinorWindow(win.l, win.D + 1)
    mat = clifford_matrix(sp, v, win, cowin)
    vecs = kernel_basis(mat)
    out = []
    for vec in vecs:
        out.append(Spinor(win.l, {win.basis[k]: c for k, c in vec.items()}))
    return out


def parity_split(s: Spinor):
    """(even-total-degree part, odd part); the two reassemble s."""
    even = {e: c for e, c in s.terms.items() if sum(e) % 2 == 0}
    odd = {e: c for e, c in s.terms.items() if sum(e) % 2 == 1}
    return Spinor(s.l, even), Spinor(s.l, odd)


def spinor_to_json(s: Spinor) -> dict:
    terms = [
        {"exp": list(e), "coef": scalar_to_json(c)}
        for e, c in sorted(s.terms.items(), key=lambda t: monomial_key(t[0]))
    ]
    return {"l": s.l, "terms": terms}


def spinor_from_json(obj: dict) -> Spinor:
    terms = {}
    for t in obj["terms"]:
        terms[tuple(t["exp"])] = scalar_from_json(t["coef"])
    return Spinor(obj["l"], terms)
