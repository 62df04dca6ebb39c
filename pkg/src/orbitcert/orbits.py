"""Nilpotent-orbit dimensions from sl2 characteristics and from partitions.

A characteristic is the semisimple member h of an sl2-triple, handed around
as a Weight (an element of the Cartan via the invariant form).  The grading
it induces on g gives dim z_g(e) = dim g(0) + dim g(1) and
dim O = dim g - dim z_g(e).  Classical orbits are encoded by partitions;
their centralizer dimensions come from the transpose-square-sum formulas
and are cross-checked elsewhere against an exact matrix oracle.

Also embedded here: the reference tables of rigid elements in exceptional
algebras (34 rows) and of non-minimal special rigid elements with their
Spaltenstein duals (8 rows).
"""
from __future__ import annotations

import csv
import io
import json
import warnings
from dataclasses import dataclass, asdict
from .rootsys import RootSystemModel, Weight, rho


def graded_dims(model: RootSystemModel, h: Weight) -> dict[int, int]:
    """dim g(i) for the grading by ad-h eigenvalues; h must be integral."""
    dims: dict[int, int] = {0: model.rank}
    for beta in model.positive_roots:
        ev = beta.dot(h)
        if ev.denominator != 1:
            raise ValueError(f"h is not integral on root {beta}: <a,h> = {ev}")
        k = int(ev)
        dims[k] = dims.get(k, 0) + 1
        dims[-k] = dims.get(-k, 0) + 1
    return {k: v for k, v in sorted(dims.items()) if v}


def centralizer_dim_from_h(model: RootSystemModel, h: Weight) -> int:
    """dim z_g(e) = dim g(0) + dim g(1) for a characteristic h of e."""
    dims = graded_dims(model, h)
    return dims.get(0, 0) + dims.get(1, 0)


def orbit_dim_from_h(model: RootSystemModel, h: Weight) -> int:
    dim_orb = model.dim - centralizer_dim_from_h(model, h)
    assert dim_orb % 2 == 0, "orbit dimension must be even"
    return dim_orb


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts with a gl/so/sp context."""

    parts: tuple[int, ...]
    kind: str = "gl"

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts if p))
        if any(p < 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")
        if self.kind not in ("gl", "so", "sp"):
            raise ValueError(f"unknown type context {self.kind!r}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)


def parity_valid(p: Partition) -> bool:
    """so: even parts have even multiplicity; sp: odd parts do; gl: anything."""
    if p.kind == "so":
        return all(p.multiplicity(q) % 2 == 0 for q in set(p.parts) if q % 2 == 0)
    if p.kind == "sp":
        return all(p.multiplicity(q) % 2 == 0 for q in set(p.parts) if q % 2 == 1)
    return True


def transpose(p: Partition) -> Partition:
    """Young-diagram transpose (an involution on the parts)."""
    if not p.parts:
        return p
    cols = [sum(1 for q in p.parts if q >= i) for i in range(1, p.parts[0] + 1)]
    return Partition(tuple(cols), p.kind)


def dim_z_partition(p: Partition) -> int:
    """dim of the centralizer of a nilpotent with Jordan type p.

    gl: sum m_i^2 over the transpose m; so: (sum m_i^2 - #odd parts)/2;
    sp: (sum m_i^2 + #odd parts)/2.  Must agree with the matrix-kernel
    oracle on every tested instance.
    """
    if not parity_valid(p):
        raise ValueError(f"{p.parts} is not a valid {p.kind} partition")
    sq = sum(m * m for m in transpose(p).parts)
    odd = sum(1 for q in p.parts if q % 2 == 1)
    if p.kind == "gl":
        return sq
    if p.kind == "so":
        return (sq - odd) // 2
    return (sq + odd) // 2


@dataclass(frozen=True)
class OrbitRecord:
    algebra: str
    bala_carter: str
    q_type: str
    dim_z: int


@dataclass(frozen=True)
class DualityRecord:
    algebra: str
    e_label: str
    e_dual_label: str


# Rigid elements in exceptional algebras: (algebra, Bala-Carter label of e,
# type of q = reductive part of the centralizer, dim z_g(e)).  The tilde of
# short-root labels is rendered as "~".
RIGID_TABLE: tuple[OrbitRecord, ...] = tuple(OrbitRecord(*row) for row in [
    ("G2", "A1", "A1", 8),
    ("G2", "~A1", "A1", 6),
    ("F4", "A1", "C3", 36),
    ("F4", "~A1", "A3", 30),
    ("F4", "A1+~A1", "A1+A1", 24),
    ("F4", "A2+~A1", "A1", 18),
    ("F4", "~A2+A1", "A1", 16),
    ("E6", "A1", "A5", 56),
    ("E6", "3A1", "A2+A1", 38),
    ("E6", "2A2+A1", "A1", 24),
    ("E7", "A1", "D6", 99),
    ("E7", "2A1", "B4+A1", 81),
    ("E7", "(3A1)'", "C3+A1", 69),
    ("E7", "4A1", "C3", 63),
    ("E7", "A2+2A1", "3A1", 51),
    ("E7", "2A2+A1", "2A1", 43),
    ("E7", "(A3+A1)'", "3A1", 41),
    ("E8", "A1", "E7", 190),
    ("E8", "2A1", "B6", 156),
    ("E8", "3A1", "F4+A1", 136),
    ("E8", "4A1", "C4", 120),
    ("E8", "A2+A1", "A5", 112),
    ("E8", "A2+2A1", "B3+A1", 102),
    ("E8", "A2+3A1", "G2+A1", 94),
    ("E8", "2A2+A1", "G2+A1", 86),
    ("E8", "A3+A1", "B3+A1", 84),
    ("E8", "2A2+2A1", "B2", 80),
    ("E8", "A3+2A1", "B2+A1", 76),
    ("E8", "D4(a1)+A1", "3A1", 72),
    ("E8", "A3+A2+A1", "2A1", 66),
    ("E8", "2A3", "B2", 60),
    ("E8", "A4+A3", "A1", 48),
    ("E8", "A5+A1", "2A1", 46),
    ("E8", "D5(a1)+A2", "A1", 46),
])

# Non-minimal special rigid elements with their Spaltenstein duals.
DUALITY_TABLE: tuple[DualityRecord, ...] = tuple(DualityRecord(*row) for row in [
    ("F4", "~A1", "F4(a1)"),
    ("F4", "A1+~A1", "F4(a2)"),
    ("E7", "2A1", "E7(a2)"),
    ("E7", "A2+2A1", "E7(a4)"),
    ("E8", "2A1", "E8(a2)"),
    ("E8", "A2+A1", "E8(a4)"),
    ("E8", "A2+2A1", "E8(b4)"),
    ("E8", "D4(a1)+A1", "E8(a6)"),
])


def rigid_table(algebra: str, bala_carter: str) -> OrbitRecord | None:
    """Exact embedded row lookup; None signals absence, not failure."""
    for rec in RIGID_TABLE:
        if rec.algebra == algebra and rec.bala_carter == bala_carter:
            return rec
    return None


def duality_table(algebra: str, e_label: str) -> DualityRecord | None:
    for rec in DUALITY_TABLE:
        if rec.algebra == algebra and rec.e_label == e_label:
            return rec
    return None


def rigid_table_json() -> str:
    return json.dumps([asdict(rec) for rec in RIGID_TABLE], sort_keys=True)


def duality_table_json() -> str:
    return json.dumps([asdict(rec) for rec in DUALITY_TABLE], sort_keys=True)


def rigid_table_csv() -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["algebra", "label", "q_type", "dim_z"])
    for rec in RIGID_TABLE:
        writer.writerow([rec.algebra, rec.bala_carter, rec.q_type, rec.dim_z])
    return out.getvalue()


def duality_table_csv() -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["algebra", "label", "dual"])
    for rec in DUALITY_TABLE:
        writer.writerow([rec.algebra, rec.e_label, rec.e_dual_label])
    return out.getvalue()


def bv_candidate(model: RootSystemModel, h_dual: Weight) -> Weight:
    """Candidate highest weight h_dual - rho for the certificate pipeline.

    h_dual is the dominant characteristic of a dual-side sl2-triple; the
    associated variety of the primitive ideal at h_dual - rho is the closure
    of the dual orbit.  Emits a warning when h_dual is not even, since dual
    characteristics of rigid elements are always even.
    """
    for alpha in model.simple_roots:
        if alpha.dot(h_dual) < 0:
            raise ValueError(f"h_dual is not dominant: <{alpha}, h_dual> < 0")
    if any(beta.dot(h_dual) % 2 != 0 for beta in model.positive_roots):
        warnings.warn("h_dual is not even; dual characteristics of rigid "
                      "elements are even", stacklevel=2)
    return h_dual - rho(model)
