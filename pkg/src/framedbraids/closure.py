"""
Invariants of the standard closure of a framed braid.

Closing a braid joins each bottom position to the matching top position, so
the link components are the cycles of the braid permutation. Scanning the
braid part once, every unit crossing contributes its sign either to the
self-writhe of the component owning both strands or to the running signed
crossing count of the component pair; linking numbers are half those
counts. All closure strands are coherently oriented downward, so the
crossing sign is the letter sign directly.

A component's framing is the sum of its ribbons' twists plus, under the
default blackboard convention, its self-writhe. The integer convention
keeps the twist sum alone; that is the invariant preserved by the
integer-framed move set, where a new crossing does not count against the
framing of the strand it sits on.

The resulting LinkSignature is a necessary invariant family, not a complete
one: matching signatures never prove isotopy, and all theorem-facing checks
here use them only in that sound direction.
"""

from __future__ import annotations

from dataclasses import dataclass

from ._canon import canonical_order
from .framed import FramedBraid, spell
from .words import SIGMA, exponent_sum, permutation_of

BLACKBOARD = "blackboard"
INTEGER = "integer"


@dataclass(frozen=True)
class LinkComponent:
    strands: tuple[int, ...]
    framing: int


@dataclass(frozen=True)
class LinkSignature:
    component_count: int
    components: tuple[LinkComponent, ...]
    linking: tuple[tuple[int, ...], ...]
    canonical_key: tuple

    def framings(self) -> tuple[int, ...]:
        return tuple(c.framing for c in self.components)


def closure_signature(a: FramedBraid, convention: str = BLACKBOARD) -> LinkSignature:
    """Component partition, per-component framing and linking matrix."""
    if convention not in (BLACKBOARD, INTEGER):
        raise ValueError(f"unknown framing convention {convention!r}")
    cycles = permutation_of(a.beta).cycles()
    comp_of = {s: c for c, cycle in enumerate(cycles) for s in cycle}
    k = len(cycles)
    self_writhe = [0] * k
    cross = [[0] * k for _ in range(k)]
    pos2strand = list(range(a.n + 1))
    for letter in a.beta.letters:
        if letter.kind != SIGMA:
            continue
        i, s = letter.index, letter.sign
        for _ in range(abs(letter.exponent)):
            cu = comp_of[pos2strand[i]]
            cv = comp_of[pos2strand[i + 1]]
            if cu == cv:
                self_writhe[cu] += s
            else:
                cross[cu][cv] += s
                cross[cv][cu] += s
            pos2strand[i], pos2strand[i + 1] = pos2strand[i + 1], pos2strand[i]
    linking = [[0] * k for _ in range(k)]
    for cu in range(k):
        for cv in range(cu + 1, k):
            if cross[cu][cv] % 2 != 0:
                raise RuntimeError(
                    "odd inter-component crossing sum; closure scan is buggy"
                )
            linking[cu][cv] = linking[cv][cu] = cross[cu][cv] // 2
    framings = [sum(a.framings[s - 1] for s in cycle) for cycle in cycles]
    if convention == BLACKBOARD:
        framings = [f + w for f, w in zip(framings, self_writhe)]
    order, key = canonical_order(framings, linking)
    components = tuple(
        LinkComponent(tuple(sorted(cycles[c])), framings[c]) for c in order
    )
    matrix = tuple(tuple(linking[a_][b_] for b_ in order) for a_ in order)
    return LinkSignature(k, components, matrix, (convention,) + key)


def knot_framing(a: FramedBraid) -> int:
    """Framing of a one-component closure: the spelled exponent sum.

    For a knot every crossing is a self-crossing, so the exponent sum of
    the spelled word equals twist total plus writhe; the cross-check below
    guards the bookkeeping.
    """
    sig = closure_signature(a)
    if sig.component_count != 1:
        raise ValueError(
            f"closure has {sig.component_count} components, not a knot"
        )
    total = exponent_sum(spell(a))
    assert total == sig.components[0].framing
    return total


def signatures_match(x: LinkSignature, y: LinkSignature) -> bool:
    """True when some component bijection matches framings and linking."""
    return x.canonical_key == y.canonical_key


def with_adjusted_framing(sig: LinkSignature, strand: int, delta: int) -> LinkSignature:
    """Copy of sig with the framing of the component owning strand shifted.

    Used by the negative-control checks: an uncompensated stabilization
    should match the original signature after exactly this adjustment.
    """
    target = None
    for idx, component in enumerate(sig.components):
        if strand in component.strands:
            target = idx
            break
    if target is None:
        raise ValueError(f"no component contains strand {strand}")
    framings = [c.framing for c in sig.components]
    framings[target] += delta
    convention = sig.canonical_key[0]
    order, key = canonical_order(framings, sig.linking)
    components = tuple(
        LinkComponent(sig.components[c].strands, framings[c]) for c in order
    )
    matrix = tuple(tuple(sig.linking[a_][b_] for b_ in order) for a_ in order)
    return LinkSignature(sig.component_count, components, matrix, (convention,) + key)
