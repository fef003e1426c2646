"""Verification campaigns over enumerated trees and cubic graphs.

Each campaign expands its parameters into an ordered list of instances,
evaluates them (optionally across worker processes), and folds the records
back in instance order, so reports do not depend on the worker count.
"""
from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable

from .enumeration import all_cubic_graphs, all_trees, canonical_form
from .exceptions import DomainError
from .formulas import PathQuery, attach_path, c_k_path, cp_k_path, path_coloring_unique
from .graphcore import Coloring, Graph, complete_graph, has_path, path_graph, relabel, to_graph6
from .solver import (
    count_optimal_partitions,
    enumerate_valid_colorings,
    exact_c_k,
    exact_cp_k,
    is_boring,
    is_valid_coloring,
    make_boring,
)
from .thwarting import (
    min_thwarting_avoiding_leaf_edge,
    min_thwarting_containing_leaf_edge,
    theta_bruteforce,
    theta_tree_dp,
)
from .zoo import (
    double_star,
    double_star_cp4,
    is_corona,
    is_double_broom,
    is_multicorona_subgraph,
    is_octopus,
    octopus,
    octopus_values,
)

SCHEMA_VERSION = 1
JOBS_ENV = "RAINBOW_JOBS"


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass
class Counterexample:
    graph6: str
    claim: str
    expected: Any
    observed: Any
    k: int | None = None
    proper: bool | None = None


@dataclass
class OrderRow:
    order: int
    instances: int = 0
    min_value: int | None = None
    max_value: int | None = None
    extremal: list[str] = field(default_factory=list)
    counterexamples: list[Counterexample] = field(default_factory=list)
    notes: dict = field(default_factory=dict)


@dataclass
class CampaignReport:
    campaign: str
    params: dict
    rows: list[OrderRow]
    wall_time: float = 0.0
    conjecture: bool = False

    @property
    def counterexamples(self) -> list[Counterexample]:
        return [c for r in self.rows for c in r.counterexamples]

    @property
    def verdict(self) -> str:
        if self.counterexamples:
            return "counterexample"
        return "consistent" if self.conjecture else "confirmed"

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "campaign": self.campaign,
            "params": self.params,
            "verdict": self.verdict,
            "rows": [asdict(r) for r in self.rows],
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def summary(self) -> str:
        n_inst = sum(r.instances for r in self.rows)
        return f"{self.campaign}: {self.verdict} ({n_inst} instances, {len(self.counterexamples)} counterexamples, {self.wall_time:.1f}s)"


# --------------------------------------------------------------------------
# deterministic sharded map


def _run_shard(args):
    func, items = args
    return [(i, func(x)) for i, x in items]


def sharded_map(func: Callable, items: Iterable, jobs: int = 1) -> list:
    """``[func(x) for x in items]`` over round-robin shards, merged by index."""
    indexed = list(enumerate(items))
    if jobs <= 1 or len(indexed) < 2:
        return [func(x) for _, x in indexed]
    shards = [(func, indexed[s::jobs]) for s in range(jobs)]
    out: list = [None] * len(indexed)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_run_shard, shards):
            for i, r in part:
                out[i] = r
    return out


def _report(name: str, params: dict, rows: list[OrderRow], start: float, conjecture: bool = False) -> CampaignReport:
    return CampaignReport(name, params, rows, time.perf_counter() - start, conjecture)


# --------------------------------------------------------------------------
# minimum c_4 / cp_4


def _eval_min_c4(t: Graph) -> dict:
    return {
        "g6": to_graph6(t),
        "canon": canonical_form(t),
        "c4": exact_c_k(t, 4).value,
        "cp4": exact_cp_k(t, 4).value,
        "corona": is_corona(t).ok,
    }


def _set_claim(row: OrderRow, recs: list[dict], key: str, target: set[str], claim: str, proper: bool):
    best = min(r[key] for r in recs)
    got = {r["canon"] for r in recs if r[key] == best}
    for r in recs:
        if (r["canon"] in got) != (r["canon"] in target):
            row.counterexamples.append(
                Counterexample(
                    r["g6"],
                    claim,
                    expected="minimizer" if r["canon"] in target else f"{key} > {best}",
                    observed=f"{key} = {r[key]}",
                    k=4,
                    proper=proper,
                )
            )


def run_min_c4(n_range: Iterable[int] = range(2, 13), jobs: int = 1) -> CampaignReport:
    """Minimum c_4 and cp_4 over trees, and who attains it."""
    start = time.perf_counter()
    n_range = list(n_range)
    rows = []
    for n in n_range:
        trees = list(all_trees(n))
        recs = sharded_map(_eval_min_c4, trees, jobs)
        row = OrderRow(n, len(recs))
        bound = _ceil_div(n, 2) + 1
        lo_c = min(r["c4"] for r in recs)
        lo_p = min(r["cp4"] for r in recs)
        row.min_value = min(lo_c, lo_p)
        row.max_value = max(r["c4"] for r in recs)
        for key, lo in (("c4", lo_c), ("cp4", lo_p)):
            if lo != bound:
                row.counterexamples.append(
                    Counterexample(
                        next(r["g6"] for r in recs if r[key] == lo),
                        f"min {key} over trees = ceil(n/2)+1",
                        bound,
                        lo,
                        4,
                        key == "cp4",
                    )
                )
        coronas = {r["canon"] for r in recs if r["corona"]}
        cp_min = [r["canon"] for r in recs if r["cp4"] == lo_p]
        row.extremal = sorted({r["canon"] for r in recs if r["c4"] == lo_c})
        row.notes = {
            "coronas": len(coronas),
            "c4_minimizers": sum(r["c4"] == lo_c for r in recs),
            "cp4_minimizers": len(cp_min),
            "cp4_minimizers_forms": sorted(cp_min),
        }
        if n % 2 == 0:
            _set_claim(row, recs, "c4", coronas, "even n: c_4 minimizers are exactly the coronas", False)
            _set_claim(row, recs, "cp4", coronas, "even n: cp_4 minimizers are exactly the coronas", True)
        else:
            for r in recs:
                if 2 * r["c4"] <= n + 2:
                    row.counterexamples.append(Counterexample(r["g6"], "odd n: c_4 > n/2+1", f"> {(n + 2) / 2}", r["c4"], 4, False))
        rows.append(row)
    return _report("min-c4", {"n": n_range}, rows, start)


# --------------------------------------------------------------------------
# minimum c_5 / cp_5


def _eval_min_c5(t: Graph) -> dict:
    return {
        "g6": to_graph6(t),
        "canon": canonical_form(t),
        "c5": exact_c_k(t, 5).value,
        "cp5": exact_cp_k(t, 5).value,
        "octopus": is_octopus(t)[0],
    }


def run_min_c5(n_range: Iterable[int] = range(3, 12), jobs: int = 1) -> CampaignReport:
    """Minimum c_5 and cp_5 over trees; octopus uniqueness at odd orders."""
    start = time.perf_counter()
    n_range = list(n_range)
    rows = []
    for n in n_range:
        recs = sharded_map(_eval_min_c5, list(all_trees(n)), jobs)
        row = OrderRow(n, len(recs))
        bound = _ceil_div(n + 3, 2)
        lo = {key: min(r[key] for r in recs) for key in ("c5", "cp5")}
        row.min_value = min(lo.values())
        row.max_value = max(r["c5"] for r in recs)
        row.extremal = sorted({r["canon"] for r in recs if r["cp5"] == lo["cp5"]})
        row.notes = {f"{key}_minimizers": sum(r[key] == lo[key] for r in recs) for key in lo}
        for key in ("c5", "cp5"):
            if lo[key] != bound:
                row.counterexamples.append(
                    Counterexample(next(r["g6"] for r in recs if r[key] == lo[key]), f"min {key} over trees = ceil((n+3)/2)", bound, lo[key], 5, key == "cp5")
                )
            if n % 2 == 1 and n >= 5:
                for r in recs:
                    if (r[key] == lo[key]) != r["octopus"]:
                        row.counterexamples.append(
                            Counterexample(
                                r["g6"],
                                f"odd n: the octopus is the unique {key} minimizer",
                                "minimizer" if r["octopus"] else f"{key} > {lo[key]}",
                                f"{key} = {r[key]}",
                                5,
                                key == "cp5",
                            )
                        )
        rows.append(row)
    return _report("min-c5", {"n": n_range}, rows, start)


# --------------------------------------------------------------------------
# paths


def _eval_path(args) -> dict:
    n, k, proper = args
    g = path_graph(n)
    res = exact_cp_k(g, k) if proper else exact_c_k(g, k)
    return {"n": n, "k": k, "proper": proper, "value": res.value}


def _path_items(n_max: int, k_set: Iterable[int], n_min: Callable[[int], int]) -> list:
    items = []
    for k in sorted(k_set):
        for n in range(n_min(k), n_max + 1):
            items.append((n, k, False))
            if k >= 3 and n >= 2:
                items.append((n, k, True))
    return items


def run_path_formula_check(n_max: int = 13, k_set: Iterable[int] = (4, 5, 6), jobs: int = 1) -> CampaignReport:
    """Exact optimum on P_n against the closed forms, both variants, k <= n <= n_max."""
    start = time.perf_counter()
    recs = sharded_map(_eval_path, _path_items(n_max, k_set, lambda k: k), jobs)
    rows: dict[int, OrderRow] = {}
    for r in recs:
        row = rows.setdefault(r["n"], OrderRow(r["n"]))
        row.instances += 1
        want = cp_k_path(r["n"], r["k"]) if r["proper"] else c_k_path(r["n"], r["k"])
        if r["value"] != want:
            row.counterexamples.append(
                Counterexample(to_graph6(path_graph(r["n"])), "path formula", want, r["value"], r["k"], r["proper"])
            )
        row.min_value = r["value"] if row.min_value is None else min(row.min_value, r["value"])
        row.max_value = r["value"] if row.max_value is None else max(row.max_value, r["value"])
    return _report("path-formula", {"n_max": n_max, "k": sorted(k_set)}, [rows[n] for n in sorted(rows)], start)


def _eval_unique(args) -> dict:
    n, k, proper = args
    return {"n": n, "k": k, "proper": proper, "count": count_optimal_partitions(path_graph(n), k, proper)}


def run_uniqueness_check(n_max: int = 12, k_set: Iterable[int] = (4, 5), jobs: int = 1) -> CampaignReport:
    """Number of optimal partitions of P_n is 1 exactly on the divisibility pattern."""
    start = time.perf_counter()
    recs = sharded_map(_eval_unique, _path_items(n_max, k_set, lambda k: k), jobs)
    rows: dict[int, OrderRow] = {}
    for r in recs:
        row = rows.setdefault(r["n"], OrderRow(r["n"]))
        row.instances += 1
        predicted = path_coloring_unique(PathQuery(r["n"], r["k"], r["proper"]))
        tag = f"k={r['k']}{' proper' if r['proper'] else ''}"
        row.notes[tag] = r["count"]
        if (r["count"] == 1) != predicted:
            row.counterexamples.append(
                Counterexample(
                    to_graph6(path_graph(r["n"])),
                    "optimal path coloring unique iff divisibility",
                    "unique" if predicted else "not unique",
                    f"{r['count']} optimal partitions",
                    r["k"],
                    r["proper"],
                )
            )
    return _report("uniqueness", {"n_max": n_max, "k": sorted(k_set)}, [rows[n] for n in sorted(rows)], start)


# --------------------------------------------------------------------------
# attachment lemmas


def _eval_attach(t: Graph) -> list[dict]:
    n = t.n
    out = []
    for k in (2, 3, 4, 5):
        base = exact_c_k(t, k).value
        for w in range(n):
            got = exact_c_k(attach_path(t, w, k - 1), k).value
            if got != base + k - 2:
                out.append({"claim": f"c_k(G + P_(k-1) at w={w}) = c_k(G) + k - 2", "g6": to_graph6(t), "k": k, "proper": False, "expected": base + k - 2, "observed": got})
    if n >= 2:
        for k in (3, 4, 5):
            base = exact_cp_k(t, k).value
            for w in range(n):
                if t.degree(w) != 1:
                    continue
                got = exact_cp_k(attach_path(t, w, k - 2), k).value
                if got != base + k - 3:
                    out.append({"claim": f"cp_k(G + P_(k-2) at end-vertex w={w}) = cp_k(G) + k - 3", "g6": to_graph6(t), "k": k, "proper": True, "expected": base + k - 3, "observed": got})
        base = exact_cp_k(t, 4).value
        for w in range(n):
            got = exact_cp_k(attach_path(t, w, 2), 4).value
            if got != base + 1:
                out.append({"claim": f"cp_4(T + P_2 at w={w}) = cp_4(T) + 1", "g6": to_graph6(t), "k": 4, "proper": True, "expected": base + 1, "observed": got})
    return out


def run_attach_lemmas(n_max: int = 8, jobs: int = 1) -> CampaignReport:
    """Attachment recurrences on every tree up to `n_max` and every valid vertex."""
    start = time.perf_counter()
    rows = []
    for n in range(1, n_max + 1):
        trees = list(all_trees(n))
        recs = sharded_map(_eval_attach, trees, jobs)
        row = OrderRow(n, len(trees))
        for bad in recs:
            for b in bad:
                row.counterexamples.append(Counterexample(b["g6"], b["claim"], b["expected"], b["observed"], b["k"], b["proper"]))
        rows.append(row)
    k3 = complete_graph(3)
    before = exact_cp_k(k3, 4).value
    after = [exact_cp_k(attach_path(k3, w, 2), 4).value for w in range(3)]
    rows[-1].notes["K3_non_example"] = {"cp4_K3": before, "cp4_K3_plus_P2": after}
    if before != 3 or any(a != 3 for a in after):
        rows[-1].counterexamples.append(Counterexample(to_graph6(k3), "K_3 non-example: cp_4 stays 3 after attaching P_2", 3, after, 4, True))
    return _report("attach-lemmas", {"n_max": n_max}, rows, start)


# --------------------------------------------------------------------------
# leaf-edge lemmas


def _eval_thwart(t: Graph) -> list[dict]:
    out = []
    corona = t.n >= 4 and is_corona(t).ok
    for leaf in range(t.n):
        if t.degree(leaf) != 1:
            continue
        if min_thwarting_avoiding_leaf_edge(t, leaf, 4) is None:
            out.append({"claim": f"a minimum thwarting set avoids leaf edge at {leaf}", "g6": to_graph6(t)})
        if corona and min_thwarting_containing_leaf_edge(t, leaf, 4) is None:
            out.append({"claim": f"corona: a minimum thwarting set contains leaf edge at {leaf}", "g6": to_graph6(t)})
    return out


def run_thwart_lemmas(n_max: int = 10, jobs: int = 1) -> CampaignReport:
    """Leaf-edge lemmas for minimum P_4-thwarting sets (coronas with a core of >= 2 vertices)."""
    start = time.perf_counter()
    rows = []
    for n in range(2, n_max + 1):
        trees = list(all_trees(n))
        recs = sharded_map(_eval_thwart, trees, jobs)
        row = OrderRow(n, len(trees))
        row.notes["coronas"] = sum(1 for t in trees if t.n >= 4 and is_corona(t).ok)
        for bad in recs:
            for b in bad:
                row.counterexamples.append(Counterexample(b["g6"], b["claim"], "exists", "none", 4, False))
        rows.append(row)
    return _report("thwart-lemmas", {"n_max": n_max}, rows, start)


# --------------------------------------------------------------------------
# duality and the value n-1 characterizations


def _eval_duality(t: Graph) -> list[dict]:
    out = []
    for k in (3, 4, 5, 6):
        dp = theta_tree_dp(t, k).value
        bf = theta_bruteforce(t, k).value
        c = exact_c_k(t, k).value
        if dp != bf:
            out.append({"claim": "theta DP = brute force", "g6": to_graph6(t), "k": k, "expected": bf, "observed": dp})
        if c != t.n - dp:
            out.append({"claim": "c_k(T) = n - theta(T)", "g6": to_graph6(t), "k": k, "expected": t.n - dp, "observed": c})
    return out


def run_duality(n_max: int = 10, jobs: int = 1) -> CampaignReport:
    start = time.perf_counter()
    rows = []
    for n in range(1, n_max + 1):
        trees = list(all_trees(n))
        row = OrderRow(n, len(trees))
        for bad in sharded_map(_eval_duality, trees, jobs):
            for b in bad:
                row.counterexamples.append(Counterexample(b["g6"], b["claim"], b["expected"], b["observed"], b["k"], False))
        rows.append(row)
    return _report("duality", {"n_max": n_max, "k": [3, 4, 5, 6]}, rows, start)


def _eval_top(t: Graph) -> dict | None:
    if not has_path(t, 4):
        return None
    n = t.n
    return {
        "g6": to_graph6(t),
        "c4": exact_c_k(t, 4).value,
        "cp4": exact_cp_k(t, 4).value,
        "mc_p4": is_multicorona_subgraph(t, "P4"),
        "mc_p3": is_multicorona_subgraph(t, "P3-mid-deg-2"),
        "broom": is_double_broom(t),
        "n": n,
    }


def run_value_n_minus_1(n_max: int = 10, jobs: int = 1) -> CampaignReport:
    """c_4 = n-1 and cp_4 = n-1 against the multi-corona subgraph tests."""
    start = time.perf_counter()
    rows = []
    for n in range(4, n_max + 1):
        recs = [r for r in sharded_map(_eval_top, list(all_trees(n)), jobs) if r is not None]
        row = OrderRow(n, len(recs))
        row.notes = {
            "c4_n_minus_1": sum(r["c4"] == n - 1 for r in recs),
            "cp4_n_minus_1": sum(r["cp4"] == n - 1 for r in recs),
            # the corrected c_4 class: non-leaves form a spine with degree-2 interior
            "c4_double_broom_mismatches": sum((r["c4"] == n - 1) != r["broom"] for r in recs),
        }
        for r in recs:
            if (r["c4"] == n - 1) != r["mc_p4"]:
                row.counterexamples.append(
                    Counterexample(r["g6"], "c_4 = n-1 iff subgraph of a multi-corona of P_4", f"c4 {'=' if r['mc_p4'] else '!='} {n - 1}", r["c4"], 4, False)
                )
            if (r["cp4"] == n - 1) != r["mc_p3"]:
                row.counterexamples.append(
                    Counterexample(r["g6"], "cp_4 = n-1 iff subgraph of a multi-corona of P_3 with middle degree 2", f"cp4 {'=' if r['mc_p3'] else '!='} {n - 1}", r["cp4"], 4, True)
                )
        rows.append(row)
    return _report("value-n-minus-1", {"n_max": n_max}, rows, start)


def run_family_values(b_max: int = 6, jobs: int = 1) -> CampaignReport:
    start = time.perf_counter()
    rows = []
    for b in range(1, b_max + 1):
        row = OrderRow(b, 0)
        ds = double_star(b)
        got = exact_cp_k(ds, 4).value
        row.instances += 1
        row.notes["cp4_double_star"] = got
        if got != double_star_cp4(b):
            row.counterexamples.append(Counterexample(to_graph6(ds), "cp_4(D_b) = b+2", b + 2, got, 4, True))
        if b >= 2:
            o = octopus(b)
            c5, cp5 = exact_c_k(o, 5).value, exact_cp_k(o, 5).value
            row.instances += 1
            row.notes["c5_octopus"] = c5
            row.notes["cp5_octopus"] = cp5
            for name, val, proper in (("c_5", c5, False), ("cp_5", cp5, True)):
                if val != octopus_values(b):
                    row.counterexamples.append(Counterexample(to_graph6(o), f"{name}(O_b) = b+2", b + 2, val, 5, proper))
        rows.append(row)
    return _report("family-values", {"b_max": b_max}, rows, start)


# --------------------------------------------------------------------------
# boring recoloring


def boring_samples(count: int = 200, n_max: int = 10, seed: int = 0) -> list[tuple[Graph, tuple[int, ...]]]:
    """Random (tree, optimal proper rainbow-P_4-free coloring) pairs."""
    rng = random.Random(seed)
    trees = [t for n in range(2, n_max + 1) for t in all_trees(n)]
    out = []
    while len(out) < count:
        t = rng.choice(trees)
        value = exact_cp_k(t, 4).value
        optima = list(enumerate_valid_colorings(t, 4, True, value))
        c = rng.choice(optima)
        labels = list(range(value))
        rng.shuffle(labels)
        perm = list(range(t.n))
        rng.shuffle(perm)
        # relabel vertices too so the smallest-id rule meets varied layouts
        t2 = relabel(t, perm)
        col = [0] * t.n
        for v in range(t.n):
            col[perm[v]] = labels[c[v]]
        out.append((t2, tuple(col)))
    return out


def _eval_boring(item) -> dict | None:
    t, col = item
    c = Coloring(col)
    b = make_boring(t, c)
    ok = (
        b.color_count == c.color_count
        and is_valid_coloring(t, b, 4, proper=True)
        and all(is_boring(t, b, v) for v in range(t.n))
    )
    return None if ok else {"g6": to_graph6(t), "coloring": list(col), "result": list(b.colors)}


def run_boring(count: int = 200, n_max: int = 10, seed: int = 0, jobs: int = 1) -> CampaignReport:
    start = time.perf_counter()
    items = boring_samples(count, n_max, seed)
    recs = sharded_map(_eval_boring, items, jobs)
    rows: dict[int, OrderRow] = {}
    for (t, col), r in zip(items, recs):
        row = rows.setdefault(t.n, OrderRow(t.n))
        row.instances += 1
        if r is not None:
            row.counterexamples.append(Counterexample(r["g6"], "make_boring keeps count, validity, all-boring", r["coloring"], r["result"], 4, True))
    return _report("boring", {"count": count, "n_max": n_max, "seed": seed}, [rows[n] for n in sorted(rows)], start)


# --------------------------------------------------------------------------
# cubic graphs


def _eval_cubic(g: Graph) -> dict:
    return {"g6": to_graph6(g), "cp4": exact_cp_k(g, 4).value}


def run_cubic_conjecture(n_set: Iterable[int] = (4, 6, 8, 10), jobs: int = 1, source: str | None = None) -> CampaignReport:
    """cp_4 <= n/2 + 1 on connected cubic graphs; reports consistency, never proof."""
    start = time.perf_counter()
    n_set = sorted(n_set)
    rows = []
    for n in n_set:
        graphs = list(all_cubic_graphs(n, source=source))
        recs = sharded_map(_eval_cubic, graphs, jobs)
        row = OrderRow(n, len(recs))
        vals = [r["cp4"] for r in recs if r["cp4"] is not None]
        row.min_value = min(vals) if vals else None
        row.max_value = max(vals) if vals else None
        row.notes = {"undefined": sum(r["cp4"] is None for r in recs), "values": {r["g6"]: r["cp4"] for r in recs}}
        row.extremal = sorted(r["g6"] for r in recs if vals and r["cp4"] == row.max_value)
        for r in recs:
            if r["cp4"] is not None and 2 * r["cp4"] > n + 2:
                row.counterexamples.append(Counterexample(r["g6"], "cp_4(G) <= n/2 + 1 for connected cubic G", f"<= {n // 2 + 1}", r["cp4"], 4, True))
        rows.append(row)
    return _report("cubic", {"n": n_set}, rows, start, conjecture=True)


# --------------------------------------------------------------------------
# census of minimum cp_4 trees


def cp4_census(n: int, jobs: int = 1) -> dict:
    """Trees of order n with cp_4 = ceil(n/2)+1, flagged by the families known to attain it.

    ``families_contained`` checks that every corona, path and double star of
    order n is among the minimizers; nothing else about the set is claimed.
    """
    trees = list(all_trees(n))
    recs = sharded_map(_eval_min_c4, trees, jobs)
    bound = _ceil_div(n, 2) + 1
    out = []
    missing = []
    for t, r in zip(trees, recs):
        inner = [v for v in range(t.n) if t.degree(v) >= 2]
        flags = {
            "corona": r["corona"],
            "path": t.n <= 2 or max(t.degree(v) for v in range(t.n)) <= 2,
            "double_star": len(inner) == 2 and t.degree(inner[0]) == t.degree(inner[1]),
        }
        if r["cp4"] != bound:
            if any(flags.values()):
                missing.append(r["g6"])
            continue
        out.append({"canonical": r["canon"], "graph6": r["g6"], **flags})
    return {
        "order": n,
        "bound": bound,
        "trees": len(trees),
        "minimizers": len(out),
        "families_contained": not missing,
        "missing": missing,
        "instances": out,
    }


# --------------------------------------------------------------------------
# registry


CAMPAIGNS: dict[str, dict] = {
    "min-c4": {"run": lambda n_max, jobs, **kw: run_min_c4(range(2, n_max + 1), jobs), "n_max": 12},
    "min-c5": {"run": lambda n_max, jobs, **kw: run_min_c5(range(3, n_max + 1), jobs), "n_max": 11},
    "path-formula": {"run": lambda n_max, jobs, k=None, **kw: run_path_formula_check(n_max, k or (4, 5, 6), jobs), "n_max": 13},
    "uniqueness": {"run": lambda n_max, jobs, k=None, **kw: run_uniqueness_check(n_max, k or (4, 5), jobs), "n_max": 12},
    "attach-lemmas": {"run": lambda n_max, jobs, **kw: run_attach_lemmas(n_max, jobs), "n_max": 8},
    "thwart-lemmas": {"run": lambda n_max, jobs, **kw: run_thwart_lemmas(n_max, jobs), "n_max": 10},
    "duality": {"run": lambda n_max, jobs, **kw: run_duality(n_max, jobs), "n_max": 10},
    "value-n-minus-1": {"run": lambda n_max, jobs, **kw: run_value_n_minus_1(n_max, jobs), "n_max": 10},
    "family-values": {"run": lambda n_max, jobs, **kw: run_family_values(n_max, jobs), "n_max": 6},
    "boring": {"run": lambda n_max, jobs, **kw: run_boring(200, n_max, 0, jobs), "n_max": 10},
    "cubic": {"run": lambda n_max, jobs, source=None, **kw: run_cubic_conjecture([n for n in (4, 6, 8, 10, 12, 14) if n <= n_max], jobs, source), "n_max": 10},
}


def run_campaign(name: str, n_max: int | None = None, jobs: int | None = None, **kw) -> CampaignReport:
    if name not in CAMPAIGNS:
        raise DomainError(f"unknown campaign {name!r}; choose from {sorted(CAMPAIGNS)}")
    entry = CAMPAIGNS[name]
    return entry["run"](n_max if n_max is not None else entry["n_max"], jobs if jobs is not None else default_jobs(), **kw)


def run_all(n_max: int | None = None, jobs: int | None = None) -> list[CampaignReport]:
    """Every registered campaign at its default scale (or capped at `n_max`)."""
    out = []
    for name, entry in CAMPAIGNS.items():
        cap = entry["n_max"] if n_max is None else min(n_max, entry["n_max"])
        out.append(run_campaign(name, cap, jobs))
    return out
