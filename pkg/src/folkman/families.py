"""The graph families L(n;p;s), their variants, and the reductions
connecting them.

L(n; p) holds the n-vertex graphs G with omega(G) < 4 whose join K_p + G
edge-arrows (3, 3); s constrains the independence number (exactly or as an
upper bound), and the variants restrict to maximal-K4-free or (+K3)
members.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Tuple

from .arrow import member_L
from .graphs import Graph, bits
from .invariants import (
    alpha_at_most,
    chromatic_number,
    has_clique,
    independence_number,
    is_maximal_k4_free,
    is_plus_k3,
)
from .store import GraphStore


VARIANTS = ("plain", "max", "plusK3")


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyParams:
    n: int
    p: int
    s: int
    s_exact: bool = False  # True: alpha = s; False: alpha <= s
    variant: str = "plain"

    def __post_init__(self):
        if self.n < 1 or self.p < 0 or not 2 <= self.s <= self.n:
            raise FamilyError(f"invalid family parameters {self}")
        if self.variant not in VARIANTS:
            raise FamilyError(f"unknown variant {self.variant!r}")

    def label(self) -> str:
        fam = {"plain": "L", "max": "Lmax", "plusK3": "L+K3"}[self.variant]
        rel = "" if self.s_exact else "<="
        return f"{fam}({self.n};{self.p};{rel}{self.s})"

    def to_dict(self) -> Dict:
        return {
            "n": self.n,
            "p": self.p,
            "s": self.s,
            "s_exact": self.s_exact,
            "variant": self.variant,
        }

    @classmethod
    def from_dict(cls, d: Dict) -> "FamilyParams":
        return cls(d["n"], d["p"], d["s"], d["s_exact"], d["variant"])


@dataclass(frozen=True)
class Classification:
    member: bool  # in L(n; p)
    alpha: int
    maximal_k4_free: bool
    plus_k3: bool

    def in_family(self, params: FamilyParams) -> bool:
        if not self.member:
            return False
        if self.s_ok(params) is False:
            return False
        if params.variant == "max":
            return self.maximal_k4_free
        if params.variant == "plusK3":
            return self.plus_k3
        return True

    def s_ok(self, params: FamilyParams) -> bool:
        return self.alpha == params.s if params.s_exact else self.alpha <= params.s


def classify(g: Graph, p: int, engine: str = "sat") -> Classification:
    maximal = is_maximal_k4_free(g)
    plus = is_plus_k3(g) if not maximal else True  # max implies +K3
    return Classification(
        member=member_L(g, p, engine=engine),
        alpha=independence_number(g),
        maximal_k4_free=maximal,
        plus_k3=plus,
    )


def filter_family(
    src: Iterable[Graph],
    params: FamilyParams,
    engine: str = "sat",
    external_solver: Optional[str] = None,
) -> Tuple[GraphStore, Dict[str, int]]:
    """Members of the family among ``src``, plus per-reason rejection
    tallies.  Cheap structural filters run before the arrowing call; the
    chromatic filter is the Eq.-style necessary condition chi >= 6 - p and
    never rejects a true member."""
    store = GraphStore()
    tallies = {
        "input": 0,
        "wrong_order": 0,
        "omega": 0,
        "alpha": 0,
        "variant": 0,
        "chi": 0,
        "arrowing": 0,
        "kept": 0,
    }
    p = params.p
    for g in src:
        tallies["input"] += 1
        if g.n != params.n:
            tallies["wrong_order"] += 1
            continue
        if has_clique(g, 4):
            tallies["omega"] += 1
            continue
        alpha = independence_number(g)
        if (alpha != params.s) if params.s_exact else (alpha > params.s):
            tallies["alpha"] += 1
            continue
        if params.variant == "max" and not is_maximal_k4_free(g):
            tallies["variant"] += 1
            continue
        if params.variant == "plusK3" and not is_plus_k3(g):
            tallies["variant"] += 1
            continue
        if p < 6 and chromatic_number(g) < 6 - p:
            tallies["chi"] += 1
            continue
        if not member_L(
            g, p, engine=engine, use_chi_filter=False, external_solver=external_solver
        ):
            tallies["arrowing"] += 1
            continue
        store.insert(g)
        tallies["kept"] += 1
    return store, tallies


def reduce_by_independent_set(g: Graph, a: int, p: int) -> Graph:
    """Drop an independent set A: if G is in L(n; p), the result is in
    L(n - |A|; p + 1); and if G is maximal with |A| = alpha(G), the result
    is additionally a (+K3)-graph."""
    for v in bits(a):
        if g.adj[v] & a:
            raise FamilyError("set is not independent")
    return g.delete_vertices(a)


RAMSEY_NUMBERS = {
    (3, 3): 6,
    (3, 4): 9,
    (4, 4): 18,
    (4, 5): 25,
}


def ramsey_constants() -> Dict[Tuple[int, int], int]:
    """Classical two-color Ramsey numbers used by feasibility pre-checks."""
    return dict(RAMSEY_NUMBERS)


def family_possibly_nonempty(params: FamilyParams) -> bool:
    """Necessary conditions from Ramsey numbers: an n-vertex graph with
    omega <= 3 and alpha <= s exists only when n < R(4, s + 1)."""
    pair = tuple(sorted((4, params.s + 1)))
    r = RAMSEY_NUMBERS.get(pair)
    if r is not None and params.n >= r:
        return False
    return True
