"""Isomorph-free generation of predecorations.

Children are produced by the ten boundary extensions and kept only when
the applied extension inverts the canonical reduction of the child: the
smallest applicable reduction number, applied at the site orbit whose
canonically relabeled dart tuple is minimal.  Together with one child per
isomorphism class per (parent, extension) batch this visits every
predecoration exactly once up to isomorphism.

Rate-bound pruning follows the two bounds: a branch is dropped once its
lower bound exceeds the target, and completion is skipped (but extension
continues) while the upper bound is below the target.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .maps import PlaneGraph, build_from_rotations, canonical_data, dart_sequence
from .predecorations import (Predecoration, rate_bounds_of,
                             validate_predecoration)
from .extensions import apply_reduction, extension_sites, scan_reductions


def base_k2() -> Predecoration:
    return Predecoration(build_from_rotations({1: [2], 2: [1]}).with_outer(0))


def base_c4() -> Predecoration:
    g = build_from_rotations({1: [2, 4], 2: [3, 1], 3: [4, 2], 4: [1, 3]})
    # either face may serve as the outer one; they are equivalent
    return Predecoration(g.with_outer(0))


@dataclass
class GenerationTask:
    rate_min: int
    rate_max: int
    k: int = 1

    def __post_init__(self) -> None:
        if not 1 <= self.rate_min <= self.rate_max:
            raise ValueError("need 1 <= rate_min <= rate_max")
        if self.k not in (1, 2, 3):
            raise ValueError("k must be 1, 2 or 3")


@dataclass
class GenerationStats:
    visited: int = 0


def _site_keys(g: PlaneGraph, sites: list[tuple[int, ...]],
               labelings: list[tuple[int, bool]]
               ) -> list[tuple[int, ...]]:
    index_maps = []
    for d0, mirror in labelings:
        seq = dart_sequence(g, d0, mirror)
        idx = [0] * len(seq)
        for pos, d in enumerate(seq):
            idx[d] = pos
        index_maps.append(idx)
    return [min(tuple(sorted(idx[d] for d in site)) for idx in index_maps)
            for site in sites]


def is_canonical_child(child: PlaneGraph, ext_num: int,
                       inv_site: tuple[int, ...]
                       ) -> Optional[tuple[int, ...]]:
    """Canonical-construction-path acceptance test.

    Returns the child's canonical code when the applied extension is the
    inverse of the child's canonical reduction, else None.
    """
    reductions = scan_reductions(child)
    if not reductions or min(reductions) != ext_num:
        return None
    code, labelings = canonical_data(child, "full")
    sites = [site for site, _ in reductions[ext_num]]
    keys = _site_keys(child, sites, labelings)
    applied = _site_keys(child, [inv_site], labelings)[0]
    return code if applied == min(keys) else None


def canonical_parent(p: Predecoration
                     ) -> tuple[Predecoration, int, tuple[int, ...]]:
    """The canonical parent, reduction number, and canonical site key."""
    reductions = scan_reductions(p.g)
    if not reductions:
        raise ValueError("base predecoration has no parent")
    num = min(reductions)
    _, labelings = canonical_data(p.g, "full")
    entries = reductions[num]
    keys = _site_keys(p.g, [site for site, _ in entries], labelings)
    best = min(range(len(keys)), key=keys.__getitem__)
    parent = apply_reduction(p.g, num, entries[best][1])
    return Predecoration(parent), num, keys[best]


def generate(task: GenerationTask,
             visitor: Optional[Callable[[Predecoration], None]] = None,
             prune_rate: bool = True,
             prune_ext10: bool = True) -> GenerationStats:
    """Visits every predecoration relevant to the task exactly once.

    The visitor sees each predecoration whose rate bounds overlap the
    window.  For k >= 2 extension 10 is refused on an outer face of size
    4, and for k = 3 also on one of size 6 (set prune_ext10=False to
    compare against post-hoc filtering).
    """
    stats = GenerationStats()

    def explore(p: Predecoration) -> None:
        stats.visited += 1
        if p.hi >= task.rate_min and p.lo <= task.rate_max and visitor:
            visitor(p)
        walk = p.walk
        batches: dict[int, set] = {}
        for num, apply_ext in extension_sites(p.g, walk):
            if prune_ext10 and num == 10:
                if task.k >= 2 and len(walk) == 4:
                    continue
                if task.k == 3 and len(walk) == 6:
                    continue
            result = apply_ext()
            if result is None:
                continue
            child_g, inv_site = result
            if validate_predecoration(child_g):
                continue
            if prune_rate and rate_bounds_of(child_g)[0] > task.rate_max:
                continue
            code = is_canonical_child(child_g, num, inv_site)
            if code is None:
                continue
            seen = batches.setdefault(num, set())
            if code in seen:
                continue
            seen.add(code)
            explore(Predecoration(child_g))

    for base in (base_k2(), base_c4()):
        if not (prune_rate and base.lo > task.rate_max):
            explore(base)
    return stats
