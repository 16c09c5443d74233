"""Spinor-valued exterior forms: the tensor space Lambda V* (x) S.

Terms are keyed by (form index tuple, monomial exponent tuple) with the
form tuple kept strictly increasing; wedge and contraction compute the
permutation sign on insertion/removal, so every value has one canonical
representation and equality is dict equality.  A single SpinorForm is
homogeneous in form degree; non-homogeneous data is handled as sequences
of homogeneous pieces.

The torus weight defined at the bottom grades every construction in this
package: the five operator-algebra maps preserve it and wedging with a
basis covector shifts it uniformly.  That turns the big kernel/solve
problems into many independent small blocks (see linalg).
"""

from __future__ import annotations

from bisect import bisect_left
from itertools import combinations
from math import comb

from .linalg import OperatorMatrix, WindowLabel
from .scalars import Scalar, scalar_from_json, scalar_to_json
from .spinors import Spinor, clifford_apply, monomial_key
from .symplectic import Covector, SymplecticSpace


class SpinorForm:
    """Finitely supported map (index tuple, exponent tuple) -> Scalar."""

    __slots__ = ("l", "terms")

    def __init__(self, l, terms=None):
        self.l = l
        clean = {}
        degree = None
        for (idx, e), c in (terms or {}).items():
            if not c:
                continue
            if degree is None:
                degree = len(idx)
            elif len(idx) != degree:
                raise ValueError("SpinorForm terms must share one form degree")
            clean[(idx, e)] = c
        self.terms = clean

    def is_zero(self):
        return not self.terms

    def form_degree(self):
        """Common length of the index tuples; None for the zero value."""
        for (idx, _e) in self.terms:
            return len(idx)
        return None

    def spinor_degree(self):
        if not self.terms:
            return float("-inf")
        return max(sum(e) for (_idx, e) in self.terms)

    def __eq__(self, other):
        return (
            isinstance(other, SpinorForm)
            and self.l == other.l
            and self.terms == other.terms
        )

    def __add__(self, other):
        if self.l != other.l:
            raise ValueError("mixing forms over different spaces")
        out = dict(self.terms)
        for k, c in other.terms.items():
            acc = out.get(k)
            s = c if acc is None else acc + c
            if s:
                out[k] = s
            elif acc is not None:
                del out[k]
        return SpinorForm(self.l, out)

    def __neg__(self):
        return SpinorForm(self.l, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, z: Scalar):
        if not z:
            return SpinorForm(self.l)
        return SpinorForm(self.l, {k: z * c for k, c in self.terms.items()})

    def __repr__(self):
        return f"SpinorForm(l={self.l}, r={self.form_degree()}, {len(self.terms)} terms)"


def basis_form(l, idx, exp, coef=Scalar(1)) -> SpinorForm:
    return SpinorForm(l, {(tuple(idx), tuple(exp)): coef})


def from_spinor(s: Spinor) -> SpinorForm:
    """Embed a spinor as a 0-form."""
    return SpinorForm(s.l, {((), e): c for e, c in s.terms.items()})


def _insert(idx: tuple, k: int):
    """Sorted insertion with sign; None when k already present."""
    pos = bisect_left(idx, k)
    if pos < len(idx) and idx[pos] == k:
        return None, 0
    return idx[:pos] + (k,) + idx[pos:], -1 if pos % 2 else 1


def _remove(idx: tuple, k: int):
    pos = bisect_left(idx, k)
    if pos >= len(idx) or idx[pos] != k:
        return None, 0
    return idx[:pos] + idx[pos + 1 :], -1 if pos % 2 else 1


def wedge(xi: Covector, psi: SpinorForm) -> SpinorForm:
    """Left exterior multiplication by the covector xi."""
    out: dict = {}
    for (idx, e), c in psi.terms.items():
        for k, xk in enumerate(xi.components):
            if not xk:
                continue
            nidx, sign = _insert(idx, k)
            if nidx is None:
                continue
            key = (nidx, e)
            t = xk * c if sign == 1 else -(xk * c)
            acc = out.get(key)
            s = t if acc is None else acc + t
            if s:
                out[key] = s
            elif acc is not None:
                del out[key]
    return SpinorForm(psi.l, out)


def contract(sp: SymplecticSpace, v, psi: SpinorForm) -> SpinorForm:
    """Interior product by the vector v (graded derivation of degree -1)."""
    out: dict = {}
    for (idx, e), c in psi.terms.items():
        for k, vk in enumerate(v):
            if not vk:
                continue
            nidx, sign = _remove(idx, k)
            if nidx is None:
                continue
            key = (nidx, e)
            t = vk * c if sign == 1 else -(vk * c)
            acc = out.get(key)
            s = t if acc is None else acc + t
            if s:
                out[key] = s
            elif acc is not None:
                del out[key]
    return SpinorForm(psi.l, out)


def clifford_on_form(sp: SymplecticSpace, v, psi: SpinorForm) -> SpinorForm:
    """Clifford multiplication through the spinor factor; form part fixed."""
    out: dict = {}
    for (idx, e), c in psi.terms.items():
        img = clifford_apply(sp, v, Spinor(psi.l, {e: c}))
        for e2, c2 in img.terms.items():
            key = (idx, e2)
            acc = out.get(key)
            s = c2 if acc is None else acc + c2
            if s:
                out[key] = s
            elif acc is not None:
                del out[key]
    return SpinorForm(psi.l, out)


class FormWindow:
    """Both-ways enumerated basis of (r-forms) x (monomials of degree <= D).

    Order: form tuples lexicographically major, then monomials by
    (total degree, lexicographic exponents); stable across runs.
    """

    __slots__ = ("l", "r", "D", "basis", "index", "label")

    def __init__(self, l, r, D):
        if not (0 <= r <= 2 * l):
            raise ValueError(f"form degree {r} out of range 0..{2 * l}")
        if D < 0:
            raise ValueError("degree bound must be >= 0")
        self.l = l
        self.r = r
        self.D = D
        from .spinors import monomials_upto

        monos = monomials_upto(l, D)
        self.basis = tuple(
            (idx, e) for idx in combinations(range(2 * l), r) for e in monos
        )
        self.index = {b: k for k, b in enumerate(self.basis)}
        self.label = WindowLabel("form", l, r, D)
        assert len(self.basis) == comb(2 * l, r) * comb(l + D, l)

    @property
    def dim(self):
        return len(self.basis)

    def element(self, k) -> SpinorForm:
        idx, e = self.basis[k]
        return basis_form(self.l, idx, e)


def enumerate_basis(win: FormWindow):
    """Ordered basis descriptors (form tuple, exponent tuple)."""
    return win.basis


def form_to_coords(psi: SpinorForm, win: FormWindow) -> dict:
    coords = {}
    for key, c in psi.terms.items():
        k = win.index.get(key)
        if k is None:
            raise ValueError("form does not fit in the window")
        coords[k] = c
    return coords


def coords_to_form(coords: dict, win: FormWindow) -> SpinorForm:
    terms = {win.basis[k]: c for k, c in coords.items()}
    return SpinorForm(win.l, terms)


def operator_matrix(fn, domain: FormWindow, codomain: FormWindow) -> OperatorMatrix:
    """Matrix of a linear map, built column by column on the domain basis.

    Raises when an image sticks out of the codomain window: nothing is
    truncated silently, callers must state a window that holds the image.
    """
    entries = {}
    for col in range(domain.dim):
        img = fn(domain.element(col))
        for key, c in img.terms.items():
            row = codomain.index.get(key)
            if row is None:
                raise ValueError(
                    f"image term {key} not contained in codomain window "
                    f"{codomain.label}"
                )
            entries[(row, col)] = c
    return OperatorMatrix(
        codomain.dim, domain.dim, entries, domain.label, codomain.label
    )


def weight(l, idx, exp) -> tuple:
    """Torus weight of a basis element (index tuple, exponent tuple).

    Covectors dual to the first Lagrangian count -1, those dual to the
    second +1, and monomial exponents add on top.  All five operator maps
    preserve this weight; wedge/contraction/Clifford by a basis (co)vector
    shift it by a fixed amount.
    """
    w = list(exp)
    for k in idx:
        if k < l:
            w[k] -= 1
        else:
            w[k - l] += 1
    return tuple(w)


def window_weights(win: FormWindow):
    return [weight(win.l, idx, e) for (idx, e) in win.basis]


def shifted_weights(win: FormWindow, shift) -> list:
    out = []
    for (idx, e) in win.basis:
        w = weight(win.l, idx, e)
        out.append(tuple(a + b for a, b in zip(w, shift)))
    return out


def covector_weight_shift(l, k) -> tuple:
    """Weight shift of wedging with the basis covector number k (0-based)."""
    w = [0] * l
    if k < l:
        w[k] -= 1
    else:
        w[k - l] += 1
    return tuple(w)


def form_to_json(psi: SpinorForm) -> dict:
    def key(t):
        (idx, e), _c = t
        return (idx, monomial_key(e))

    terms = [
        {
            "form": [i + 1 for i in idx],  # 1-based in external encodings
            "exp": list(e),
            "coef": scalar_to_json(c),
        }
        for (idx, e), c in sorted(psi.terms.items(), key=key)
    ]
    return {"l": psi.l, "terms": terms}


def form_from_json(obj: dict) -> SpinorForm:
    terms = {}
    for t in obj["terms"]:
        idx = tuple(i - 1 for i in t["form"])
        terms[(idx, tuple(t["exp"]))] = scalar_from_json(t["coef"])
    return SpinorForm(obj["l"], terms)
