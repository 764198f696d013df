"""Framing ledger: how relative invariants react to a change of
Seifert-surface class, modeled on abstract homological data.

A model carries the free rank of second homology, the evaluation of
the Euler class on its generators, and a tightness flag under which
the effective evaluation vector is zero and every ambiguity vanishes.
Torsion is dropped: evaluation against integers kills it, so only the
free rank matters for any quantity computed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BaseMismatch, InconsistentProfile, LengthMismatch, UnequalDegrees

__all__ = [
    "ContactHomologyModel",
    "RelativeSurfaceClass",
    "IntersectionProfile",
    "new_model",
    "tb_diff",
    "twist_transfer",
    "rot_diff",
    "sl_diff",
    "ambiguity",
    "trivialization_invariance_check",
]


@dataclass(frozen=True)
class ContactHomologyModel:
    rank: int
    euler: tuple[int, ...]
    tight: bool

    @property
    def effective_euler(self) -> tuple[int, ...]:
        return (0,) * self.rank if self.tight else self.euler


@dataclass(frozen=True)
class RelativeSurfaceClass:
    """A surface class: an opaque base label plus the closed-class
    offset added to it.  Two classes compare only over equal bases."""

    base: str
    offset: tuple[int, ...]


@dataclass(frozen=True)
class IntersectionProfile:
    """Algebraic intersections of the two knots with a closed class."""

    k_dot_A: int
    j_dot_A: int


def new_model(rank, euler, tight) -> ContactHomologyModel:
    if rank < 0:
        raise LengthMismatch(f"rank must be non-negative, got {rank}")
    euler = tuple(euler)
    if len(euler) != rank:
        raise LengthMismatch(f"euler vector has length {len(euler)}, expected rank {rank}")
    return ContactHomologyModel(rank=rank, euler=euler, tight=bool(tight))


def _offset_delta(m, s1, s2):
    if s1.base != s2.base:
        raise BaseMismatch(f"classes over different bases: {s1.base!r} vs {s2.base!r}")
    for s in (s1, s2):
        if len(s.offset) != m.rank:
            raise LengthMismatch(
                f"offset has length {len(s.offset)}, expected rank {m.rank}"
            )
    return tuple(a - b for a, b in zip(s1.offset, s2.offset))


def tb_diff(m: ContactHomologyModel, s1: RelativeSurfaceClass, s2: RelativeSurfaceClass) -> int:
    """Always zero: the framing changes on the two boundary knots are
    equal, so they cancel in the relative tb."""
    _offset_delta(m, s1, s2)
    return 0


def twist_transfer(m, s1, s2, p: IntersectionProfile):
    """Per-boundary framing change when passing between the two
    classes: the common intersection number, once on each knot."""
    _offset_delta(m, s1, s2)
    if p.k_dot_A != p.j_dot_A:
        raise InconsistentProfile(
            f"homologous knots meet a closed class equally, got {p.k_dot_A} vs {p.j_dot_A}"
        )
    return (p.k_dot_A, p.k_dot_A)


def rot_diff(m: ContactHomologyModel, s1, s2) -> int:
    """Evaluation of the effective Euler vector on the class difference."""
    delta = _offset_delta(m, s1, s2)
    return sum(e * d for e, d in zip(m.effective_euler, delta))


def sl_diff(m: ContactHomologyModel, s1, s2) -> int:
    """Same evaluation as :func:`rot_diff`; the self-linking side sees
    the identical closed-class pairing."""
    return rot_diff(m, s1, s2)


def ambiguity(m: ContactHomologyModel) -> int:
    """The invariant is well-defined modulo this value; 0 means fully
    well-defined.  Equals the gcd of the effective Euler entries, so
    the set of reachable differences is exactly its multiples."""
    return math.gcd(*m.effective_euler) if m.effective_euler else 0


def trivialization_invariance_check(degree_K: int, degree_J: int) -> int:
    """Change of the relative rotation number under a trivialization
    change restricting with the given degrees; the degrees are forced
    equal and the changes cancel."""
    if degree_K != degree_J:
        raise UnequalDegrees(
            f"a trivialization change restricts with equal degree, got {degree_K} vs {degree_J}"
        )
    return -degree_K + degree_J
