"""Reproduction harness: instances, expected values, verification records.

Each suite expands into independent tasks (module-level function + args), so
tasks can run on a process pool. Records are sorted by ``graph_id`` before
being returned, which makes reports stable across worker counts.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import enum
import json
from pathlib import Path
import random
import time
from typing import Callable, Iterable, Optional

from . import families as fam
from . import fixtures as fx
from .families import FamilySpec, ProductSpec
from .forcing import is_connected_dom_forcing
from .graph import Graph, VertexSet
from .io import to_graph6
from .predictions import (
    TAGS,
    ConstructionFailedVerification,
    Prediction,
    expected_witness_size,
    grid_case,
    grid_witness_coords,
    predict,
    splitting_gamma_c,
    tree_formula,
)
from .sampling import random_connected_graph, random_tree
from .solvers import (
    BudgetExceeded,
    InvariantKind,
    SolveBudget,
    SolveResult,
    max_leaf_spanning_tree,
    solve,
)

K = InvariantKind


class Status(str, enum.Enum):
    MATCH = "MATCH"
    IN_INTERVAL = "IN_INTERVAL"
    MISMATCH = "MISMATCH"
    BOUND_VIOLATION = "BOUND_VIOLATION"
    SKIPPED_BUDGET = "SKIPPED_BUDGET"
    WITNESS_VERIFIED = "WITNESS_VERIFIED"


FAILING = (Status.MISMATCH, Status.BOUND_VIOLATION)


@dataclass(frozen=True)
class VerificationRecord:
    graph_id: str
    invariant: InvariantKind
    predicted: Prediction
    computed: Optional[SolveResult]
    status: Status
    elapsed: float
    suite: str = ""
    note: str = ""

    def __post_init__(self):
        if self.status in FAILING and self.computed is None:
            raise ValueError("a failing record needs a computed value")

    @property
    def key(self) -> tuple[str, str]:
        return self.graph_id, self.invariant.value

    def to_json(self, timing: bool = True) -> dict:
        comp = None
        if self.computed is not None:
            comp = self.computed.to_dict()
            if not timing:
                comp.pop("elapsed_ms")
        return {
            "graph_id": self.graph_id,
            "invariant": self.invariant.value,
            "predicted": self.predicted.to_dict(),
            "computed": comp,
            "status": self.status.value,
            "elapsed_ms": round(self.elapsed * 1000, 3) if timing else 0,
            "theorem_tag": self.predicted.theorem_tag,
            "suite": self.suite,
            "note": self.note,
        }


SUITES = ("families", "products", "grids", "splitting", "trees", "bounds", "nonmonotonicity")

DEFAULT_MAX_N = {
    "families": 16,
    "products": 20,
    "grids": 30,
    "splitting": 20,
    "trees": 10,
    "bounds": 9,
    "nonmonotonicity": 20,
}


@dataclass(frozen=True)
class SuiteConfig:
    suites: tuple[str, ...] = SUITES
    max_n: dict = field(default_factory=lambda: dict(DEFAULT_MAX_N))
    seed: int = 0
    workers: int = 1
    budget: SolveBudget = SolveBudget(max_candidates=5_000_000)
    timing: bool = True
    bounds_graphs: int = 500
    join_pairs: int = 50
    random_trees: int = 500
    split_gc_graphs: int = 50
    spanning_tree_max_n: int = 8
    witness_max: int = 30

    def __post_init__(self):
        for s in self.suites:
            if s not in SUITES:
                raise ValueError(f"unknown suite {s!r}")

    def cap(self, suite: str) -> int:
        return self.max_n.get(suite, DEFAULT_MAX_N[suite])


# -- record builders ---------------------------------------------------------


def classify(pred: Prediction, value: int, fail: Status = Status.MISMATCH) -> Status:
    if pred.contains(value):
        return Status.MATCH if pred.is_exact else Status.IN_INTERVAL
    return fail


def check_value(
    suite: str,
    graph_id: str,
    g: Graph,
    pred: Prediction,
    budget: SolveBudget,
    max_n: int,
    note: str = "",
) -> VerificationRecord:
    """Solve ``pred.invariant`` on g and compare with the prediction."""
    t0 = time.perf_counter()
    if g.n > max_n:
        return VerificationRecord(graph_id, pred.invariant, pred, None, Status.SKIPPED_BUDGET, 0.0, suite,
                                  _join(note, f"n={g.n} above exact-search cap {max_n}; prediction only"))
    try:
        res = solve(g, pred.invariant, budget)
    except BudgetExceeded as exc:
        return VerificationRecord(graph_id, pred.invariant, pred, None, Status.SKIPPED_BUDGET,
                                  time.perf_counter() - t0, suite, _join(note, str(exc)))
    return VerificationRecord(graph_id, pred.invariant, pred, res, classify(pred, res.value),
                              time.perf_counter() - t0, suite, note)


def check_witness(
    suite: str,
    graph_id: str,
    g: Graph,
    witness: VertexSet,
    expected_size: int,
    tag: str,
    note: str = "",
) -> VerificationRecord:
    t0 = time.perf_counter()
    ok = is_connected_dom_forcing(g, witness) and len(witness) == expected_size
    res = SolveResult(K.Fcd, len(witness), witness, 1, time.perf_counter() - t0, "construction")
    pred = Prediction.exact(K.Fcd, expected_size, tag)
    status = Status.WITNESS_VERIFIED if ok else Status.MISMATCH
    if not ok:
        note = _join(note, "set is not a connected dom-forcing set" if len(witness) == expected_size
                     else f"size {len(witness)} != {expected_size}")
    return VerificationRecord(graph_id, K.Fcd, pred, res, status, res.elapsed, suite, note)


def _join(a: str, b: str) -> str:
    return f"{a}; {b}" if a else b


def _rng(seed: int, *parts) -> random.Random:
    return random.Random(":".join(map(str, (seed,) + parts)))


# -- tasks (module level so they pickle) -------------------------------------


def task_spec(suite, spec, inv, budget, max_n, note=""):
    pred = predict(spec, inv)
    if not pred.covered:
        return []
    return [check_value(suite, spec.graph_id, fam.build(spec), pred, budget, max_n, note)]


def task_graph(suite, graph_id, g, pred, budget, max_n, note=""):
    return [check_value(suite, graph_id, g, pred, budget, max_n, note)]


def task_witness(suite, graph_id, g, witness, expected, tag, note=""):
    return [check_witness(suite, graph_id, g, witness, expected, tag, note)]


def task_grid_witness(p, q, special_p4=False):
    g = fam.grid(p, q)
    coords = grid_witness_coords(p, q, special_p4=special_p4)
    s = VertexSet.of(fam.grid_index(p, q, i, j) for i, j in coords)
    case = grid_case(p, q)
    tag = TAGS["grid_bound"] if case in (1, 2) else (TAGS["grid_11"] if case == 3 else TAGS["grid_2"])
    suffix = "#witness-special-p4" if special_p4 else "#witness"
    return [check_witness("grids", f"grid({p},{q}){suffix}", g, s, expected_witness_size(p, q), tag,
                          f"case {case}")]


def task_join(seed, idx, budget, max_n):
    rng = _rng(seed, "join", idx)
    a = random_connected_graph(rng.randint(1, 5), rng)
    b = random_connected_graph(rng.randint(1, 5), rng)
    spec = ProductSpec("join", (a, b), label=f"join#{idx:03d}[{to_graph6(a)},{to_graph6(b)}]")
    return [r for inv in (K.Fcd, K.Fd, K.Z) for r in task_spec("products", spec, inv, budget, max_n)]


def task_split_gc(seed, idx, budget, max_n):
    rng = _rng(seed, "split-gc", idx)
    g = random_connected_graph(rng.randint(2, 7), rng)
    pred = Prediction.exact(K.GammaC, splitting_gamma_c(g), TAGS["split_gc"], "G connected")
    return task_graph("splitting", f"splitting#{idx:03d}[{to_graph6(g)}]", fam.splitting(g), pred, budget, max_n)


def task_tree(seed, idx, budget, max_n):
    rng = _rng(seed, "tree", idx)
    t = random_tree(3 + idx % 8, rng)
    pred = Prediction.exact(K.Fcd, tree_formula(t), TAGS["tree"], "tree, n >= 3")
    return task_graph("trees", f"tree#{idx:03d}[{to_graph6(t)}]", t, pred, budget, max_n)


def task_bounds(seed, idx, budget, max_n, st_max_n):
    rng = _rng(seed, "bounds", idx)
    n = 3 + idx % 7
    g = random_connected_graph(n, rng)
    gid = f"bounds#{idx:03d}[{to_graph6(g)}]"
    if g.n > max_n:
        return []
    t0 = time.perf_counter()
    r = {k: solve(g, k, budget) for k in (K.Z, K.Zc, K.Gamma, K.GammaC, K.Fd, K.Fcd)}
    v = {k: res.value for k, res in r.items()}
    el = time.perf_counter() - t0
    BV = Status.BOUND_VIOLATION
    rows = [
        (r[K.Zc], Prediction.interval(K.Zc, v[K.Z], None, "Z(G) <= Z_c(G)")),
        (r[K.GammaC], Prediction.interval(K.GammaC, v[K.Gamma], None, "gamma(G) <= gamma_c(G)")),
        (r[K.Fcd], Prediction.interval(K.Fcd, v[K.Zc], v[K.Zc] + v[K.GammaC], TAGS["bound_zc"])),
        (r[K.Fcd], Prediction.interval(K.Fcd, v[K.GammaC], v[K.Zc] + v[K.GammaC], TAGS["bound_gc"])),
        (r[K.Fcd], Prediction.interval(K.Fcd, v[K.Fd], None, TAGS["bound_fd"])),
        (r[K.Fcd], Prediction.interval(K.Fcd, 2, None, TAGS["bound_2"])),
    ]
    out = [VerificationRecord(gid, res.kind, p, res, classify(p, res.value, BV), el, "bounds") for res, p in rows]
    if g.n <= st_max_n:
        t1 = time.perf_counter()
        leaves, leaf_set = max_leaf_spanning_tree(g)
        res = SolveResult(K.MaxLeaf, leaves, leaf_set, 0, time.perf_counter() - t1, "spanning-tree-enumeration")
        p = Prediction.exact(K.MaxLeaf, g.n - v[K.GammaC], TAGS["maxleaf"], "n > 2")
        out.append(VerificationRecord(gid, K.MaxLeaf, p, res, classify(p, leaves, BV), res.elapsed, "bounds"))
    return out


# -- suite expansion ---------------------------------------------------------

Task = tuple  # (callable, args)


def _families(cfg: SuiteConfig) -> list[Task]:
    b, cap = cfg.budget, cfg.cap("families")
    specs: list[tuple[FamilySpec, InvariantKind]] = []
    for n in range(4, 13):
        specs += [(FamilySpec("path", (n,)), K.Fcd), (FamilySpec("cycle", (n,)), K.Fcd)]
        specs += [(FamilySpec("path", (n,)), K.GammaC), (FamilySpec("cycle", (n,)), K.GammaC)]
    for n in range(2, 9):
        specs += [(FamilySpec("complete", (n,)), K.Fcd), (FamilySpec("complete", (n,)), K.Fd)]
        specs += [(FamilySpec("star", (n,)), K.Fcd), (FamilySpec("star", (n,)), K.Fd)]
    for m in range(2, 6):
        for n in range(m, 6):
            specs += [(FamilySpec("complete_bipartite", (m, n)), k) for k in (K.Fcd, K.Fd)]
    specs += [(FamilySpec("petersen"), K.Fcd), (FamilySpec("petersen"), K.Fd)]
    for k in range(2, 6):
        specs += [(FamilySpec("hypercube", (k,)), K.Fcd), (FamilySpec("hypercube", (k,)), K.Fd)]
    specs += [(FamilySpec("helm", (m,)), K.Fcd) for m in range(4, 8)]
    specs += [(FamilySpec("coconut", (m, n)), K.Fcd) for m in range(3, 6) for n in range(2, 5)]
    for n in range(4, 11):
        specs += [(FamilySpec("wheel", (n,)), K.Fcd), (FamilySpec("wheel", (n,)), K.Fd)]
    tasks: list[Task] = [(task_spec, ("families", s, k, b, cap)) for s, k in specs]
    tasks.append((task_graph, ("families", "C5", fx.C5,
                               Prediction.exact(K.Fcd, 3, "F_cd(C_5)=3"), b, cap)))
    tasks.append((task_witness, ("families", "C5#witness", fx.C5, fx.C5_WITNESS, 3, "F_cd(C_5)=3")))
    return tasks


def _products(cfg: SuiteConfig) -> list[Task]:
    b, cap = cfg.budget, cfg.cap("products")
    P, C, Kn = (lambda n: FamilySpec("path", (n,))), (lambda n: FamilySpec("cycle", (n,))), (lambda n: FamilySpec("complete", (n,)))
    specs: list[tuple[ProductSpec, InvariantKind]] = []
    for g in (P(3), C(4), Kn(3)):
        for h in (P(2), P(3), C(3)):
            specs.append((ProductSpec("corona", (g, h)), K.Fcd))
    for n in range(1, 7):
        specs.append((ProductSpec("corona", (P(n), Kn(1))), K.Fcd))
    for n in range(3, 7):
        specs.append((ProductSpec("corona", (C(n), Kn(1))), K.Fcd))
        specs.append((ProductSpec("corona", (Kn(n), Kn(1))), K.Fcd))
    for ops in ((P(3), P(2), P(3), C(3)), (C(4), P(2), Kn(3), P(3), P(2))):
        for inv in (K.Fcd, K.Zc):
            specs.append((ProductSpec("generalized_corona", ops), inv))
    specs.append((ProductSpec("iterated_corona", (P(2), P(2)), k=2), K.Fcd))
    for g, k in ((P(2), 2), (P(2), 3), (P(3), 2), (C(3), 2)):
        specs.append((ProductSpec("iterated_corona", (g, Kn(1)), k=k), K.Fcd))
    for g, h, root in ((P(3), P(4), 1), (P(2), C(4), 0), (C(3), P(3), 1), (C(4), P(3), 1),
                       (P(3), C(5), 0), (P(2), FamilySpec("star", (3,)), 0)):
        specs.append((ProductSpec("rooted_product", (g, h), root=root), K.Fcd))
    for n in range(3, 8):
        specs.append((ProductSpec("cartesian", (C(n), P(2))), K.Fcd))
    tasks: list[Task] = [(task_spec, ("products", s, k, b, cap)) for s, k in specs]
    tasks.append((task_graph, ("products", "prism(3)", fam.prism(3),
                               Prediction.exact(K.Fcd, 3, TAGS["prism"], "n = 3, outside the formula's range"), b, cap,
                               "solved separately: gamma_c >= n fails at n = 3")))
    for n in range(3, 8):
        tasks.append((task_spec, ("products", FamilySpec("prism", (n,)), K.GammaC, b, cap)))
    tasks += [(task_join, (cfg.seed, i, b, cap)) for i in range(cfg.join_pairs)]
    return tasks


def _grids(cfg: SuiteConfig) -> list[Task]:
    b, cap = cfg.budget, cfg.cap("grids")
    tasks: list[Task] = []
    for n in range(2, 8):
        for inv in (K.Fcd, K.GammaC):
            tasks.append((task_spec, ("grids", FamilySpec("ladder", (n,)), inv, b, cap)))
    for p in range(3, 6):
        for inv in (K.Fcd, K.GammaC):
            tasks.append((task_spec, ("grids", FamilySpec("grid", (3, p)), inv, b, cap)))
    exact = [(4, 4), (4, 5), (5, 5), (4, 6), (5, 6)]
    only_predicted = [(6, 6), (7, 7), (8, 8), (11, 11)]
    for p, q in exact + only_predicted:
        tasks.append((task_spec, ("grids", FamilySpec("grid", (p, q)), K.Fcd, b, cap)))
    for p, q in exact:
        tasks.append((task_spec, ("grids", FamilySpec("grid", (p, q)), K.GammaC, b, cap)))
    top = cfg.witness_max
    for p in range(4, top + 1):
        for q in range(p, top + 1):
            tasks.append((task_grid_witness, (p, q)))
            if p == 4 and q % 3 == 1:
                tasks.append((task_grid_witness, (p, q, True)))
    return tasks


def _splitting(cfg: SuiteConfig) -> list[Task]:
    b, cap = cfg.budget, cfg.cap("splitting")
    S = lambda base: ProductSpec("splitting", (base,))  # noqa: E731
    specs = []
    for n in range(2, 9):
        specs += [(S(FamilySpec("path", (n,))), K.Fcd), (S(FamilySpec("path", (n,))), K.Z)]
        specs.append((S(FamilySpec("path", (n,))), K.GammaC))
    for n in range(3, 9):
        specs += [(S(FamilySpec("cycle", (n,))), K.Fcd), (S(FamilySpec("cycle", (n,))), K.GammaC)]
    specs += [(S(FamilySpec("star", (n,))), K.Fcd) for n in range(2, 5)]
    specs += [(S(FamilySpec("ladder", (n,))), K.Fcd) for n in range(2, 5)]
    tasks: list[Task] = [(task_spec, ("splitting", s, k, b, cap)) for s, k in specs]
    for n in range(5, 9):
        g = fam.splitting(fam.path(n))
        tag = TAGS["split_path"]
        tasks.append((task_witness, ("splitting", f"splitting[path({n})]#ref-witness", g,
                                     fx.splitting_path_witness(n), n - 1, tag)))
    for n in range(7, 9):
        g = fam.splitting(fam.cycle(n))
        tasks.append((task_witness, ("splitting", f"splitting[cycle({n})]#ref-witness", g,
                                     fx.splitting_cycle_witness(n), n - 1, TAGS["split_cycle_7"])))
    for n in range(2, 5):
        g = fam.splitting(fam.star(n))
        tasks.append((task_witness, ("splitting", f"splitting[star({n})]#ref-witness", g,
                                     fx.splitting_star_witness(n), 2 * n - 1, TAGS["split_star"])))
    tasks += [(task_split_gc, (cfg.seed, i, b, cap)) for i in range(cfg.split_gc_graphs)]
    return tasks


def _trees(cfg: SuiteConfig) -> list[Task]:
    b, cap = cfg.budget, cfg.cap("trees")
    tasks: list[Task] = [(task_graph, ("trees", "tree14", fx.TREE14,
                                       Prediction.exact(K.Fcd, 10, "F_cd(T)=14-4=10"), b, max(cap, 14)))]
    tasks.append((task_graph, ("trees", "tree14#formula", fx.TREE14,
                               Prediction.exact(K.Fcd, tree_formula(fx.TREE14), TAGS["tree"]), b, max(cap, 14))))
    tasks += [(task_tree, (cfg.seed, i, b, cap)) for i in range(cfg.random_trees)]
    return tasks


def _bounds(cfg: SuiteConfig) -> list[Task]:
    return [(task_bounds, (cfg.seed, i, cfg.budget, cfg.cap("bounds"), cfg.spanning_tree_max_n))
            for i in range(cfg.bounds_graphs)]


def _nonmono(cfg: SuiteConfig) -> list[Task]:
    b, cap = cfg.budget, cfg.cap("nonmonotonicity")
    suite = "nonmonotonicity"
    items = [
        ("wheel17", fx.WHEEL17, fx.WHEEL17_WITNESS, 3, "F_cd(wheel, 17 vertices)=3"),
        ("C16", fx.CYCLE16, fx.CYCLE16_WITNESS, 14, "F_cd(C_16)=14"),
        ("tree7", fx.TREE7, fx.TREE7_WITNESS, 5, "F_cd(T_7)=5"),
        ("subtree5", fx.SUBTREE5, fx.SUBTREE5_WITNESS, 3, "F_cd(T_7 minus a leaf and its twin)=3"),
    ]
    tasks: list[Task] = []
    for gid, g, w, val, tag in items:
        tasks.append((task_graph, (suite, gid, g, Prediction.exact(K.Fcd, val, tag), b, cap)))
        tasks.append((task_witness, (suite, gid + "#witness", g, w, val, tag)))
    return tasks


_EXPANDERS: dict[str, Callable[[SuiteConfig], list[Task]]] = {
    "families": _families,
    "products": _products,
    "grids": _grids,
    "splitting": _splitting,
    "trees": _trees,
    "bounds": _bounds,
    "nonmonotonicity": _nonmono,
}


def _run_task(task: Task) -> list[VerificationRecord]:
    fn, args = task
    return fn(*args)


def run_suite(cfg: SuiteConfig) -> list[VerificationRecord]:
    tasks = [t for s in cfg.suites for t in _EXPANDERS[s](cfg)]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            chunks = list(pool.map(_run_task, tasks, chunksize=8))
    else:
        chunks = [_run_task(t) for t in tasks]
    records = [r for chunk in chunks for r in chunk]
    records.sort(key=lambda r: (r.graph_id, r.invariant.value, r.predicted.theorem_tag))
    return records


# -- allowlist and reporting ---------------------------------------------------

DEFAULT_ALLOWLIST = Path(__file__).with_name("known_discrepancies.txt")


def load_allowlist(path: Optional[Path] = None) -> set[tuple[str, str]]:
    """Read ``graph_id invariant`` pairs, one per line; lines starting with ``#`` are comments.

    Graph ids may themselves contain ``#``, so only whole-line comments exist.
    """
    path = DEFAULT_ALLOWLIST if path is None else Path(path)
    out = set()
    for raw in path.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"bad allowlist line: {raw!r}")
        out.add((parts[0], InvariantKind.parse(parts[1]).value))
    return out


def unexpected_failures(records: Iterable[VerificationRecord], allow: set[tuple[str, str]]) -> list[VerificationRecord]:
    return [r for r in records if r.status in FAILING and r.key not in allow]


def write_jsonl(records: Iterable[VerificationRecord], path, timing: bool = True) -> None:
    with open(path, "w") as fh:
        for r in records:
            fh.write(json.dumps(r.to_json(timing), sort_keys=True) + "\n")


def to_jsonl(records: Iterable[VerificationRecord], timing: bool = True) -> str:
    return "".join(json.dumps(r.to_json(timing), sort_keys=True) + "\n" for r in records)


def format_table(records: list[VerificationRecord], allow: set[tuple[str, str]], verbose: bool = False) -> str:
    counts: dict[tuple[str, str], int] = {}
    for r in records:
        counts[(r.suite, r.status.value)] = counts.get((r.suite, r.status.value), 0) + 1
    lines = [f"{'suite':<16} {'status':<18} {'count':>6}"]
    for (suite, status), c in sorted(counts.items()):
        lines.append(f"{suite:<16} {status:<18} {c:>6}")
    shown = records if verbose else [
        r for r in records if r.status not in (Status.MATCH, Status.IN_INTERVAL, Status.WITNESS_VERIFIED)
    ]
    if shown:
        lines.append("")
        lines.append(f"{'graph_id':<44} {'inv':<8} {'predicted':<10} {'computed':<9} {'status':<18} note")
        for r in shown:
            comp = "-" if r.computed is None else str(r.computed.value)
            flag = " (allowlisted)" if r.status in FAILING and r.key in allow else ""
            lines.append(
                f"{r.graph_id:<44} {r.invariant.value:<8} {r.predicted.describe():<10} {comp:<9} "
                f"{r.status.value + flag:<18} {r.note}"
            )
    return "\n".join(lines)
