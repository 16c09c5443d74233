"""Symplectic curvature decomposition.

Rank-4 curvature tensors are stored fully lowered.  Construction enforces
exactly two invariants: antisymmetry in the last index pair (the two
vector-field slots) and the first Bianchi identity over the last three
slots.  Further symmetries a connection-derived tensor would satisfy are
checked empirically by the callers, never assumed.

The trace convention is pinned here once: the Ricci contraction raises the
FIRST lowered slot,

    sigma_{ij} = omega^{km} R_{m i k j},

matching the index-raising convention of the symplectic base module
(conventions vary in the literature, so this is stated prominently).  The
Ricci-type part is rebuilt from sigma by

    2(l+1) st_{ijkl} = om_{il} s_{jk} - om_{ik} s_{jl} + om_{jl} s_{ik}
                       - om_{jk} s_{il} + 2 s_{ij} om_{kl}

and the Weyl part is the difference.  Contracting the rebuilt tensor
returns sigma with normalization factor exactly 1; the factor is pinned by
a brute-force oracle in the test suite rather than trusted.
"""

from __future__ import annotations

import random

from .scalars import Scalar, scalar_from_json, scalar_to_json
from .symplectic import SymplecticSpace


class InvalidCurvatureError(ValueError):
    """Input fails a curvature invariant or is not a symplectic curvature
    tensor (asymmetric Ricci contraction)."""


class RicciTensor:
    __slots__ = ("l", "entries")

    def __init__(self, l, entries):
        n = 2 * l
        self.l = l
        self.entries = tuple(tuple(entries[i][j] for j in range(n)) for i in range(n))
        for i in range(n):
            for j in range(i + 1, n):
                if self.entries[i][j] != self.entries[j][i]:
                    raise InvalidCurvatureError(
                        f"Ricci tensor must be symmetric, differs at ({i + 1},{j + 1})"
                    )

    def is_zero(self):
        return not any(any(row) for row in self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, RicciTensor)
            and self.l == other.l
            and self.entries == other.entries
        )


class CurvatureTensor:
    __slots__ = ("l", "entries")

    def __init__(self, l, entries):
        n = 2 * l
        self.l = l
        self.entries = tuple(
            tuple(
                tuple(tuple(entries[i][j][k][m] for m in range(n)) for k in range(n))
                for j in range(n)
            )
            for i in range(n)
        )
        e = self.entries
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for m in range(k, n):
                        if e[i][j][k][m] != -e[i][j][m][k]:
                            raise InvalidCurvatureError(
                                "curvature must be antisymmetric in the last "
                                f"index pair, fails at ({i + 1},{j + 1},{k + 1},{m + 1})"
                            )
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    for m in range(n):
                        b = e[i][j][k][m] + e[i][k][m][j] + e[i][m][j][k]
                        if b:
                            raise InvalidCurvatureError(
                                "first Bianchi identity fails at "
                                f"({i + 1},{j + 1},{k + 1},{m + 1})"
                            )

    def is_zero(self):
        return not any(
            any(any(any(row3) for row3 in row2) for row2 in row1)
            for row1 in self.entries
        )

    def __eq__(self, other):
        return (
            isinstance(other, CurvatureTensor)
            and self.l == other.l
            and self.entries == other.entries
        )


def zero_curvature(sp: SymplecticSpace) -> CurvatureTensor:
    n = sp.dim
    z = Scalar(0)
    return CurvatureTensor(sp.l, [[[[z] * n for _ in range(n)] for _ in range(n)] for _ in range(n)])


def ricci_contract(sp: SymplecticSpace, R: CurvatureTensor) -> RicciTensor:
    """sigma_{ij} = omega^{km} R_{m i k j}; asymmetric results are rejected
    as not coming from a symplectic curvature tensor."""
    n = sp.dim
    om = sp.omega_upper
    sigma = [[Scalar(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            acc = Scalar(0)
            for k in range(n):
                for m in range(n):
                    w = om[k][m]
                    if w and R.entries[m][i][k][j]:
                        acc = acc + w * R.entries[m][i][k][j]
            sigma[i][j] = acc
    for i in range(n):
        for j in range(i + 1, n):
            if sigma[i][j] != sigma[j][i]:
                raise InvalidCurvatureError(
                    "Ricci contraction is asymmetric: input is not a "
                    "symplectic curvature tensor"
                )
    return RicciTensor(sp.l, sigma)


def sigma_tilde(sp: SymplecticSpace, sigma: RicciTensor) -> CurvatureTensor:
    """The Ricci-type curvature tensor built linearly from sigma."""
    n = sp.dim
    om = sp.omega_lower
    s = sigma.entries
    denom = Scalar(2 * (sp.l + 1))
    out = [[[[None] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for m in range(n):
                    acc = (
                        om[i][m] * s[j][k]
                        - om[i][k] * s[j][m]
                        + om[j][m] * s[i][k]
                        - om[j][k] * s[i][m]
                        + Scalar(2) * s[i][j] * om[k][m]
                    )
                    out[i][j][k][m] = acc / denom
    return CurvatureTensor(sp.l, out)


def weyl_part(sp: SymplecticSpace, R: CurvatureTensor) -> CurvatureTensor:
    """R minus the Ricci-type part rebuilt from its contraction.

    The reconstruction factor of ricci_contract(sigma_tilde(.)) is exactly
    1 (pinned by the brute-force oracle in the tests), so no rescaling
    happens here.
    """
    st = sigma_tilde(sp, ricci_contract(sp, R))
    n = sp.dim
    diff = [
        [
            [
                [R.entries[i][j][k][m] - st.entries[i][j][k][m] for m in range(n)]
                for k in range(n)
            ]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return CurvatureTensor(sp.l, diff)


def is_ricci_type(sp: SymplecticSpace, R: CurvatureTensor) -> bool:
    return weyl_part(sp, R).is_zero()


def random_symmetric_ricci(sp: SymplecticSpace, seed: int) -> RicciTensor:
    """Deterministic pseudorandom symmetric tensor with small integer
    entries; same seed, same tensor, on every platform."""
    rng = random.Random(seed)
    n = sp.dim
    s = [[Scalar(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            v = Scalar(rng.randint(-3, 3))
            s[i][j] = v
            s[j][i] = v
    return RicciTensor(sp.l, s)


def random_ricci_type(sp: SymplecticSpace, seed: int) -> CurvatureTensor:
    """sigma_tilde of a seeded random symmetric tensor: a deterministic
    generator of nontrivial Ricci-type curvature tensors."""
    return sigma_tilde(sp, random_symmetric_ricci(sp, seed))


def scalar_curvature_contraction(sp: SymplecticSpace, sigma: RicciTensor) -> Scalar:
    """sigma^{ij} omega_{ij} after raising both indices; identically zero
    for symmetric sigma (no symplectic scalar curvature exists)."""
    n = sp.dim
    omu = sp.omega_upper
    oml = sp.omega_lower
    acc = Scalar(0)
    for i in range(n):
        for j in range(n):
            up = Scalar(0)
            for k in range(n):
                for m in range(n):
                    if omu[i][k] and omu[j][m] and sigma.entries[k][m]:
                        up = up + omu[i][k] * omu[j][m] * sigma.entries[k][m]
            if up and oml[i][j]:
                acc = acc + up * oml[i][j]
    return acc


def curvature_to_json(R: CurvatureTensor) -> dict:
    n = 2 * R.l
    return {
        "l": R.l,
        "entries": [
            [
                [[scalar_to_json(R.entries[i][j][k][m]) for m in range(n)] for k in range(n)]
                for j in range(n)
            ]
            for i in range(n)
        ],
    }


def curvature_from_json(obj: dict) -> CurvatureTensor:
    l = obj["l"]
    n = 2 * l
    entries = [
        [
            [[scalar_from_json(obj["entries"][i][j][k][m]) for m in range(n)] for k in range(n)]
            for j in range(n)
        ]
        for i in range(n)
    ]
    return CurvatureTensor(l, entries)


def ricci_to_json(s: RicciTensor) -> dict:
    n = 2 * s.l
    return {
        "l": s.l,
        "entries": [[scalar_to_json(s.entries[i][j]) for j in range(n)] for i in range(n)],
    }


def ricci_from_json(obj: dict) -> RicciTensor:
    l = obj["l"]
    n = 2 * l
    entries = [[scalar_from_json(obj["entries"][i][j]) for j in range(n)] for i in range(n)]
    return RicciTensor(l, entries)
