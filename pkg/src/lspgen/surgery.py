"""Local rewrites of rotation systems.

A Surgeon holds a mutable copy of a graph's rotation table, addressed by
dart *tokens*.  Existing darts keep their ids as tokens; fresh tokens are
allocated in aligned pairs so that the reverse of any token is ``t ^ 1``.
After editing, ``freeze`` renumbers everything densely and returns the new
graph together with the token -> new dart translation.
"""

from __future__ import annotations

from typing import Optional

from .maps import MapError, PlaneGraph


class Surgeon:
    def __init__(self, g: Optional[PlaneGraph] = None):
        if g is None:
            self.rot: list[list[int]] = []
            self._fresh = 0
        else:
            self.rot = [list(g.darts_at(v)) for v in range(g.n)]
            self._fresh = 2 * g.ne

    def fresh_pair(self) -> tuple[int, int]:
        t = self._fresh
        self._fresh += 2
        return t, t + 1

    def new_vertex(self, tokens: list[int]) -> int:
        self.rot.append(list(tokens))
        return len(self.rot) - 1

    def insert_after(self, v: int, anchor: int, tokens: list[int]) -> None:
        i = self.rot[v].index(anchor)
        self.rot[v][i + 1:i + 1] = tokens

    def insert_before(self, v: int, anchor: int, tokens: list[int]) -> None:
        i = self.rot[v].index(anchor)
        self.rot[v][i:i] = tokens

    def remove_tokens(self, v: int, tokens: list[int]) -> None:
        self.rot[v] = [t for t in self.rot[v] if t not in set(tokens)]

    def delete_vertices(self, vs: list[int]) -> list[int]:
        """Drops vertices entirely; returns old_of_new index table."""
        drop = set(vs)
        keep = [v for v in range(len(self.rot)) if v not in drop]
        self.rot = [self.rot[v] for v in keep]
        return keep

    def freeze(self, outer_token: Optional[int]
               ) -> tuple[PlaneGraph, dict[int, int]]:
        trans: dict[int, int] = {}
        k = 0
        for row in self.rot:
            for t in row:
                if t not in trans:
                    trans[t] = 2 * k
                    trans[t ^ 1] = 2 * k + 1
                    k += 1
        nd = 2 * k
        org = [0] * nd
        nxt = [0] * nd
        used = 0
        for v, row in enumerate(self.rot):
            if not row:
                raise MapError("empty rotation after surgery")
            used += len(row)
            for i, t in enumerate(row):
                d = trans[t]
                org[d] = v
                nxt[d] = trans[row[(i + 1) % len(row)]]
        if used != nd:
            raise MapError("unpaired dart token after surgery")
        g = PlaneGraph(org, nxt,
                       None if outer_token is None else trans[outer_token])
        return g, trans
