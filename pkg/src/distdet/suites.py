"""Seeded verification suites: brute-force determinants against the closed forms.

Each suite is a pair of functions. ``tasks`` draws every instance's parameters
up front from a single seeded generator; ``evaluate`` turns one parameter dict
into ``(oracle, formula, graph)``. Keeping generation out of ``evaluate`` makes
reports independent of how instances are spread over workers.
"""

from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from .formulas import bicyclic_det, tree_det, unicyclic_det
from .graph import (
    Graph,
    classify_bicyclic,
    distance_matrix,
    generate_cycle,
    generate_gpqn,
    generate_infinity,
    plant_random_trees,
    random_connected,
    random_tree,
)
from .linalg import build_H, check_lemma_a0, det_bareiss, det_H_closed, lemma_a0_closed
from .report import Record, VerificationReport
from .transforms import JoinSpec, attach_pendant, edge_join, identify_plus_pendant

SEED_BITS = 63


def graph_det(g: Graph) -> int:
    return det_bareiss(distance_matrix(g))


def _seed(rng: random.Random) -> int:
    return rng.getrandbits(SEED_BITS)


# lemma-a0 ---------------------------------------------------------------

def lemma_a0_tasks(rng, count, max_order):
    return [{"k": k} for k in range(1, count + 1)]


def lemma_a0_eval(params):
    k = params["k"]
    det_c, quad = check_lemma_a0(k)
    closed_c, closed_quad = lemma_a0_closed(k)
    oracle = f"{det_c} {quad} {det_bareiss(build_H(k))}"
    formula = f"{closed_c} {closed_quad} {det_H_closed(k)}"
    return oracle, formula, None


# lemma-a1 ---------------------------------------------------------------

def lemma_a1_tasks(rng, count, max_order):
    tasks = []
    for gi in range(count):
        order = rng.randint(1, max(1, min(max_order, 12)))
        extra = rng.randint(0, order)
        seed = _seed(rng)
        tasks += [{"graph": gi, "order": order, "extra": extra, "seed": seed, "vertex": v}
                  for v in range(order)]
    return tasks


def lemma_a1_eval(params):
    g = random_connected(params["order"], params["extra"], params["seed"])
    moved = attach_pendant(g, params["vertex"])
    return graph_det(moved), graph_det(attach_pendant(g, 0)), moved


# lemma-a3 ---------------------------------------------------------------

def lemma_a3_tasks(rng, count, max_order):
    cap = max(1, min(8, max_order // 2))
    tasks = []
    for _ in range(count):
        left, right = rng.randint(1, cap), rng.randint(1, cap)
        tasks.append({
            "left_order": left, "left_extra": rng.randint(0, left), "left_seed": _seed(rng),
            "left_vertex": rng.randrange(left),
            "right_order": right, "right_extra": rng.randint(0, right), "right_seed": _seed(rng),
            "right_vertex": rng.randrange(right),
        })
    return tasks


def join_spec(params) -> JoinSpec:
    return JoinSpec(
        random_connected(params["left_order"], params["left_extra"], params["left_seed"]),
        params["left_vertex"],
        random_connected(params["right_order"], params["right_extra"], params["right_seed"]),
        params["right_vertex"],
    )


def lemma_a3_eval(params):
    spec = join_spec(params)
    joined = edge_join(spec)
    return graph_det(joined), graph_det(identify_plus_pendant(spec)), joined


# recurrence --------------------------------------------------------------

def _odd_pairs(max_core: int) -> list[tuple[int, int]]:
    odd = range(3, max_core + 1, 2)
    return [(p, q) for p in odd for q in odd if p <= q and p + q - 1 <= max_core]


def recurrence_tasks(rng, count, max_order):
    pairs = _odd_pairs(max_order - 2)
    if not pairs:
        raise ValueError("recurrence suite needs max-order >= 7")
    tasks = []
    for _ in range(count):
        p, q = rng.choice(pairs)
        tasks.append({"p": p, "q": q, "n": rng.randint(2, max_order - (p + q - 1))})
    return tasks


def recurrence_eval(params):
    p, q, n = params["p"], params["q"], params["n"]
    g = generate_gpqn(p, q, n)
    prev2, prev1 = graph_det(generate_gpqn(p, q, n - 2)), graph_det(generate_gpqn(p, q, n - 1))
    return graph_det(g), -4 * prev1 - 4 * prev2, g


# trees / unicyclic / bicyclic ------------------------------------------

def trees_tasks(rng, count, max_order):
    return [{"order": rng.randint(2, max(2, max_order)), "seed": _seed(rng)} for _ in range(count)]


def trees_eval(params):
    g = random_tree(params["order"], params["seed"])
    return graph_det(g), tree_det(g.order), g


def unicyclic_tasks(rng, count, max_order):
    if max_order < 3:
        raise ValueError("unicyclic suite needs max-order >= 3")
    tasks = []
    for _ in range(count):
        p = rng.randint(3, max_order)
        tasks.append({"p": p, "n": rng.randint(0, max_order - p), "seed": _seed(rng)})
    return tasks


def unicyclic_eval(params):
    g = plant_random_trees(generate_cycle(params["p"]), params["n"], params["seed"])
    return graph_det(g), unicyclic_det(params["p"], params["n"]), g


def random_bicyclic_params(rng: random.Random, max_order: int, parity: str = "any") -> dict:
    """Draw ``(p, k, q, extra, seed)`` with ``p+q+k-2+extra <= max_order``.

    ``parity`` is ``"any"``, ``"odd"`` (both cycles odd) or ``"even"`` (at
    least one cycle even).
    """
    if max_order < 5:
        raise ValueError("bicyclic instances need max-order >= 5")
    while True:
        p = rng.randint(3, max_order - 2)
        q = rng.randint(3, max_order - p + 1)
        k = rng.randint(1, max_order - p - q + 2)
        odd = p % 2 == 1 and q % 2 == 1
        if parity == "odd" and not odd or parity == "even" and odd:
            continue
        extra = rng.randint(0, max_order - (p + q + k - 2))
        return {"p": p, "k": k, "q": q, "extra": extra, "seed": _seed(rng)}


def build_random_bicyclic(params) -> Graph:
    base = generate_infinity(params["p"], params["k"], params["q"])
    return plant_random_trees(base, params["extra"], params["seed"])


def bicyclic_tasks(rng, count, max_order):
    return [random_bicyclic_params(rng, max_order) for _ in range(count)]


def bicyclic_eval(params):
    g = build_random_bicyclic(params)
    shape = classify_bicyclic(g)
    return graph_det(g), bicyclic_det(shape.p, shape.q, shape.n), g


SUITES: dict[str, tuple[Callable, Callable]] = {
    "lemma-a0": (lemma_a0_tasks, lemma_a0_eval),
    "lemma-a1": (lemma_a1_tasks, lemma_a1_eval),
    "lemma-a3": (lemma_a3_tasks, lemma_a3_eval),
    "recurrence": (recurrence_tasks, recurrence_eval),
    "trees": (trees_tasks, trees_eval),
    "unicyclic": (unicyclic_tasks, unicyclic_eval),
    "bicyclic": (bicyclic_tasks, bicyclic_eval),
}
SUITE_NAMES = [*SUITES, "all"]


def _timed(job):
    name, params = job
    t0 = time.perf_counter_ns()
    oracle, formula, g = SUITES[name][1](params)
    micros = (time.perf_counter_ns() - t0) // 1000
    return str(oracle), str(formula), (g.to_edge_list(header=True) if g is not None else None), micros


def run_suite(name: str, seed: int = 0, count: int = 100, max_order: int = 20,
              jobs: int = 1) -> VerificationReport:
    """Run one suite (or ``"all"``) and collect a report ordered by instance index."""
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    names = list(SUITES) if name == "all" else [name]
    jobs_list = []
    for n in names:
        rng = random.Random(f"{n}:{seed}")
        jobs_list += [(n, p) for p in SUITES[n][0](rng, count, max_order)]

    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_timed, jobs_list, chunksize=8))
    else:
        results = [_timed(j) for j in jobs_list]

    report = VerificationReport(name, seed)
    for i, ((suite, params), (oracle, formula, edges, micros)) in enumerate(zip(jobs_list, results)):
        match = oracle == formula
        report.records.append(Record(
            suite=suite, index=i, params=params, oracle=oracle, formula=formula,
            match=match, micros=micros, edge_list=None if match else edges,
        ))
    return report
