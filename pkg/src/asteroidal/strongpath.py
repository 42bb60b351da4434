"""Strong links between non-adjacent vertex pairs.

Two non-adjacent vertices u and v are strong-linked if they have a common
neighbor, or if there are two vertex-disjoint chordless u-v paths
u-x_1-...-x_r-v and u-y_1-...-y_s-v (r, s >= 2) such that every 4-clique
{x_i, x_{i+1}, y_j, y_{j+1}} formed by consecutive interior vertices of the
two paths carries an attachment from the outside pool
Z = V minus (X union Y union {u, v}).

With the clique labeled {l1, l2} = {x_i, y_j}, {r1, r2} = {x_{i+1}, y_{j+1}}
(all four assignments are admissible), an attachment is one of:

* type 1: non-adjacent z, z' in Z where z sees l1, l2, r1 but not r2 and
  z' sees r1, r2, l1 but not l2;
* type 2: 4t+3 vertices z_1..z_{2t+1}, z'_1..z'_{2t+2} in Z where
  Q = {l1, l2, r1, r2, z_1..z_{2t+1}} is a clique, each z_i sees exactly
  {l1, l2, r1, r2} within X union Y union {u, v}, the z'_k form a stable
  set, and each z'_k sees exactly {z_(k-1), z_k} within Q union X union Y
  union {u, v}, with z_0 = l1 and z_(2t+2) = r1.

No polynomial algorithm is known for this predicate, so the finder is an
exhaustive search under a Budget; it reports a verified witness, a definite
absence, or UNKNOWN when a bound tripped first.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Optional

from .budgets import UNKNOWN, Budget
from .graphs import Graph, GraphError, _bit_indices

__all__ = [
    "AttachmentRecord",
    "StrongPathWitness",
    "find_strong_path",
    "verify_strong_path_witness",
]


@dataclass(frozen=True)
class AttachmentRecord:
    """One attachment covering one crossing 4-clique.

    k4 is the clique in its chosen labeling order (l1, l2, r1, r2). Exactly
    one of the two shapes is populated: z/z_prime for kind "type1", or
    t/clique_chain/stable_chain for kind "type2" (clique_chain holds
    z_1..z_{2t+1}, stable_chain holds z'_1..z'_{2t+2}).
    """

    k4: tuple[int, int, int, int]
    kind: str
    z: Optional[int] = None
    z_prime: Optional[int] = None
    t: Optional[int] = None
    clique_chain: tuple[int, ...] = ()
    stable_chain: tuple[int, ...] = ()


@dataclass(frozen=True)
class StrongPathWitness:
    """Evidence that u and v are strong-linked.

    Either common_neighbor is set and the path fields are empty, or
    x_interior/y_interior hold the interior sequences x_1..x_r and
    y_1..y_s of the two chordless paths and attachments covers every
    crossing 4-clique. verify_strong_path_witness re-checks everything.
    """

    u: int
    v: int
    common_neighbor: Optional[int] = None
    x_interior: Optional[tuple[int, ...]] = None
    y_interior: Optional[tuple[int, ...]] = None
    attachments: tuple[AttachmentRecord, ...] = ()


def _is_clique(masks: list[int], vs: tuple[int, ...]) -> bool:
    for i in range(len(vs)):
        for j in range(i + 1, len(vs)):
            if not masks[vs[i]] >> vs[j] & 1:
                return False
    return True


def _is_chordless_path(masks: list[int], seq: tuple[int, ...]) -> bool:
    # consecutive vertices adjacent, all other pairs non-adjacent
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            adjacent = masks[seq[a]] >> seq[b] & 1
            if adjacent != (1 if b == a + 1 else 0):
                return False
    return True


def _induced_interiors(
    masks: list[int], u: int, v: int, budget: Budget
) -> tuple[list[tuple[tuple[int, ...], int]], bool]:
    """Interiors of all chordless u-v paths with >= 2 interior vertices.

    Returns (pairs of (interior tuple, interior mask), clipped) in
    lexicographic DFS order; clipped is True when the path cap or the
    deadline cut the enumeration short.
    """
    out: list[tuple[tuple[int, ...], int]] = []
    clipped = False
    limit = budget.path_limit
    vbit = 1 << v

    # banned = path vertices plus neighbors of every path vertex but the
    # last; the next step must be adjacent to the last vertex only
    def walk(last: int, interior: tuple[int, ...], imask: int, banned: int) -> None:
        nonlocal clipped
        if clipped:
            return
        if budget.expired():
            clipped = True
            return
        cand = masks[last] & ~banned
        if len(interior) >= 2 and cand & vbit:
            out.append((interior, imask))
            if len(out) >= limit:
                clipped = True
                return
        cand &= ~vbit
        while cand:
            wbit = cand & -cand
            cand ^= wbit
            w = wbit.bit_length() - 1
            walk(w, interior + (w,), imask | wbit, banned | wbit | masks[last])
            if clipped:
                return

    walk(u, (), 0, 1 << u)
    return out, clipped


def _type1_attachment(
    masks: list[int], l1: int, l2: int, r1: int, r2: int, zmask: int
) -> Optional[AttachmentRecord]:
    need_z = 1 << l1 | 1 << l2 | 1 << r1
    need_zp = 1 << r1 | 1 << r2 | 1 << l1
    zs = []
    zps = []
    for w in _bit_indices(zmask):
        aw = masks[w]
        if aw & (need_z | 1 << r2) == need_z:
            zs.append(w)
        if aw & (need_zp | 1 << l2) == need_zp:
            zps.append(w)
    for z in zs:
        for zp in zps:
            if not masks[z] >> zp & 1:
                return AttachmentRecord(k4=(l1, l2, r1, r2), kind="type1", z=z, z_prime=zp)
    return None


def _pick_stable_chain(
    masks: list[int], cands: list[list[int]], idx: int, chosen: list[int]
) -> Optional[tuple[int, ...]]:
    # candidate pools for distinct chain positions never overlap, so only
    # pairwise non-adjacency needs checking
    if idx == len(cands):
        return tuple(chosen)
    for w in cands[idx]:
        if all(not (masks[w] >> p & 1) for p in chosen):
            chosen.append(w)
            got = _pick_stable_chain(masks, cands, idx + 1, chosen)
            if got is not None:
                return got
            chosen.pop()
    return None


def _type2_at_t(
    masks: list[int],
    t: int,
    l1: int,
    l2: int,
    r1: int,
    r2: int,
    k4mask: int,
    xyuv: int,
    zmask: int,
    inner: list[int],
    budget: Budget,
):
    size = 2 * t + 1
    if len(inner) < size:
        return None
    for zs in permutations(inner, size):
        if budget.expired():
            return UNKNOWN
        if not _is_clique(masks, zs):
            continue
        qmask = k4mask
        for z in zs:
            qmask |= 1 << z
        scope = qmask | xyuv
        chain = (l1,) + zs + (r1,)
        cands: list[list[int]] = []
        feasible = True
        for k in range(1, 2 * t + 3):
            want = 1 << chain[k - 1] | 1 << chain[k]
            ck = [w for w in _bit_indices(zmask & ~qmask) if masks[w] & scope == want]
            if not ck:
                feasible = False
                break
            cands.append(ck)
        if not feasible:
            continue
        picked = _pick_stable_chain(masks, cands, 0, [])
        if picked is not None:
            return AttachmentRecord(
                k4=(l1, l2, r1, r2),
                kind="type2",
                t=t,
                clique_chain=zs,
                stable_chain=picked,
            )
    return None


def _type2_attachment(
    masks: list[int],
    l1: int,
    l2: int,
    r1: int,
    r2: int,
    xyuv: int,
    zmask: int,
    budget: Budget,
):
    k4mask = 1 << l1 | 1 << l2 | 1 << r1 | 1 << r2
    inner = [w for w in _bit_indices(zmask) if masks[w] & xyuv == k4mask]
    # 4t+3 distinct pool vertices are needed, which bounds t exactly; the
    # config cap guards pathological inputs beyond that
    t_reachable = (zmask.bit_count() - 3) // 4
    t_cap = min(budget.max_t, t_reachable)
    for t in range(t_cap + 1):
        rec = _type2_at_t(masks, t, l1, l2, r1, r2, k4mask, xyuv, zmask, inner, budget)
        if rec is not None:
            return rec
    return UNKNOWN if t_reachable > budget.max_t else None


def _is_crossing_clique(masks: list[int], xa: int, xb: int, ya: int, yb: int) -> bool:
    return bool(
        masks[xa] >> ya & 1
        and masks[xa] >> yb & 1
        and masks[xb] >> ya & 1
        and masks[xb] >> yb & 1
    )


def _attach(
    masks: list[int],
    xa: int,
    xb: int,
    ya: int,
    yb: int,
    xyuv: int,
    zmask: int,
    budget: Budget,
):
    """Attachment for one crossing 4-clique, over all four labelings.

    Returns a record, None when every labeling is exhausted without one,
    or UNKNOWN when some labeling's search tripped a budget."""
    undecided = False
    for l1, l2 in ((xa, ya), (ya, xa)):
        for r1, r2 in ((xb, yb), (yb, xb)):
            rec = _type1_attachment(masks, l1, l2, r1, r2, zmask)
            if rec is not None:
                return rec
            rec = _type2_attachment(masks, l1, l2, r1, r2, xyuv, zmask, budget)
            if rec is UNKNOWN:
                undecided = True
            elif rec is not None:
                return rec
    return UNKNOWN if undecided else None


def _cover_crossing_cliques(
    masks: list[int],
    n: int,
    u: int,
    v: int,
    xint: tuple[int, ...],
    yint: tuple[int, ...],
    pair_mask: int,
    budget: Budget,
):
    """Records covering every crossing 4-clique of one path pair.

    None means some clique is definitely uncoverable (the pair fails no
    matter what); UNKNOWN means no clique failed outright but at least one
    was left undecided by a budget."""
    xyuv = pair_mask | 1 << u | 1 << v
    zmask = ((1 << n) - 1) & ~xyuv
    records = []
    undecided = False
    for i in range(len(xint) - 1):
        xa, xb = xint[i], xint[i + 1]
        for j in range(len(yint) - 1):
            ya, yb = yint[j], yint[j + 1]
            if not _is_crossing_clique(masks, xa, xb, ya, yb):
                continue
            rec = _attach(masks, xa, xb, ya, yb, xyuv, zmask, budget)
            if rec is None:
                return None
            if rec is UNKNOWN:
                undecided = True
            else:
                records.append(rec)
    return UNKNOWN if undecided else records


def find_strong_path(g: Graph, u: int, v: int, budget: Optional[Budget] = None):
    """Search for a strong link between non-adjacent u and v.

    Returns a verified StrongPathWitness, None when the whole search space
    was exhausted without one, or UNKNOWN when a budget tripped first. The
    common-neighbor clause is checked before any path enumeration. Path
    pairs are tried unordered: swapping the two paths permutes each
    crossing clique's labelings among themselves, so coverability is
    symmetric.
    """
    n = g.n
    masks = g.adjacency_masks
    if not (0 <= u < n and 0 <= v < n) or u == v:
        raise GraphError(f"need two distinct vertices, got {u} and {v}")
    if masks[u] >> v & 1:
        raise GraphError(
            f"vertices {u} and {v} are adjacent; only non-adjacent pairs can be strong-linked"
        )
    common = masks[u] & masks[v]
    if common:
        witness = StrongPathWitness(u=u, v=v, common_neighbor=(common & -common).bit_length() - 1)
        assert verify_strong_path_witness(g, witness)
        return witness
    b = (budget if budget is not None else Budget()).started()
    paths, tripped = _induced_interiors(masks, u, v, b)
    for i, (xint, xmask) in enumerate(paths):
        for yint, ymask in paths[i + 1 :]:
            if xmask & ymask:
                continue
            if b.expired():
                return UNKNOWN
            got = _cover_crossing_cliques(masks, n, u, v, xint, yint, xmask | ymask, b)
            if got is UNKNOWN:
                tripped = True
                continue
            if got is not None:
                witness = StrongPathWitness(
                    u=u,
                    v=v,
                    x_interior=xint,
                    y_interior=yint,
                    attachments=tuple(got),
                )
                assert verify_strong_path_witness(g, witness)
                return witness
    return UNKNOWN if tripped else None


def _attachment_record_valid(
    masks: list[int], n: int, rec: AttachmentRecord, xyuv: int, zmask: int
) -> bool:
    if len(rec.k4) != 4 or len(set(rec.k4)) != 4:
        return False
    if not all(0 <= w < n for w in rec.k4):
        return False
    l1, l2, r1, r2 = rec.k4
    if not _is_clique(masks, rec.k4):
        return False
    if rec.kind == "type1":
        z, zp = rec.z, rec.z_prime
        if z is None or zp is None:
            return False
        if rec.t is not None or rec.clique_chain or rec.stable_chain:
            return False
        if not (0 <= z < n and 0 <= zp < n):
            return False
        if not (zmask >> z & 1 and zmask >> zp & 1):
            return False
        if z == zp or masks[z] >> zp & 1:
            return False
        need_z = 1 << l1 | 1 << l2 | 1 << r1
        need_zp = 1 << r1 | 1 << r2 | 1 << l1
        return (
            masks[z] & (need_z | 1 << r2) == need_z
            and masks[zp] & (need_zp | 1 << l2) == need_zp
        )
    if rec.kind == "type2":
        t, zs, zps = rec.t, rec.clique_chain, rec.stable_chain
        if t is None or t < 0 or rec.z is not None or rec.z_prime is not None:
            return False
        if len(zs) != 2 * t + 1 or len(zps) != 2 * t + 2:
            return False
        members = list(zs) + list(zps)
        if len(set(members)) != len(members):
            return False
        if not all(0 <= w < n and zmask >> w & 1 for w in members):
            return False
        if not _is_clique(masks, rec.k4 + tuple(zs)):
            return False
        k4mask = 1 << l1 | 1 << l2 | 1 << r1 | 1 << r2
        for z in zs:
            if masks[z] & xyuv != k4mask:
                return False
        for a in range(len(zps)):
            for b in range(a + 1, len(zps)):
                if masks[zps[a]] >> zps[b] & 1:
                    return False
        qmask = k4mask
        for z in zs:
            qmask |= 1 << z
        scope = qmask | xyuv
        chain = (l1,) + tuple(zs) + (r1,)
        for k in range(1, 2 * t + 3):
            want = 1 << chain[k - 1] | 1 << chain[k]
            if masks[zps[k - 1]] & scope != want:
                return False
        return True
    return False


def verify_strong_path_witness(g: Graph, witness: StrongPathWitness) -> bool:
    """Re-check every invariant of a StrongPathWitness from scratch.

    Independent of the finder; rejects malformed or tampered witnesses.
    Every finder output must pass this check.
    """
    masks = g.adjacency_masks
    n = g.n
    u, v = witness.u, witness.v
    if not (0 <= u < n and 0 <= v < n) or u == v:
        return False
    if masks[u] >> v & 1:
        return False
    if witness.common_neighbor is not None:
        if witness.x_interior is not None or witness.y_interior is not None:
            return False
        if witness.attachments:
            return False
        w = witness.common_neighbor
        return 0 <= w < n and bool(masks[u] >> w & 1) and bool(masks[v] >> w & 1)
    xint, yint = witness.x_interior, witness.y_interior
    if xint is None or yint is None or len(xint) < 2 or len(yint) < 2:
        return False
    everything = list(xint) + list(yint) + [u, v]
    if len(set(everything)) != len(everything):
        return False
    if not all(0 <= w < n for w in everything):
        return False
    if not _is_chordless_path(masks, (u,) + tuple(xint) + (v,)):
        return False
    if not _is_chordless_path(masks, (u,) + tuple(yint) + (v,)):
        return False
    xyuv = 0
    for w in everything:
        xyuv |= 1 << w
    zmask = ((1 << n) - 1) & ~xyuv
    used = [False] * len(witness.attachments)
    for i in range(len(xint) - 1):
        for j in range(len(yint) - 1):
            xa, xb = xint[i], xint[i + 1]
            ya, yb = yint[j], yint[j + 1]
            if not _is_crossing_clique(masks, xa, xb, ya, yb):
                continue
            covered = False
            for idx, rec in enumerate(witness.attachments):
                # the labeling must keep {l1,l2} on the left pair and
                # {r1,r2} on the right pair of this clique
                if {rec.k4[0], rec.k4[1]} != {xa, ya}:
                    continue
                if {rec.k4[2], rec.k4[3]} != {xb, yb}:
                    continue
                if _attachment_record_valid(masks, n, rec, xyuv, zmask):
                    used[idx] = True
                    covered = True
            if not covered:
                return False
    # records matching no crossing clique make the witness malformed
    return all(used)
