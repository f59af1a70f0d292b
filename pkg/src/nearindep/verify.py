"""Exhaustive checkers for the sharp bounds on Q = sigma1/sigma0.

Each checker scans a whole isomorphism-free universe (connected graphs,
all graphs, graphs of fixed maximum degree, trees, forests), compares
exact rationals, and returns a ``VerificationReport``: how many classes
were checked, every violation found (never thrown), the graphs
attaining the bound, and the extremal witnesses.  Witnesses travel as
graph6 strings so any report line can be re-verified from scratch.

The catalogue of named checks (the ``--theorem`` ids of the CLI):

* 3.1  Q >= 0 over all graphs, zero exactly for the edgeless graph.
* 3.2  connected graphs: Q >= (n-1)/(2^(n-1)+1), equality only for
       the star.
* 3.3  the same lower bound over trees.
* 3.4  maximum degree 1: Q >= 1/3, equality only for one edge plus
       isolated vertices.
* 3.5  all graphs, n >= 4: the star bound holds for every graph except
       the edgeless one (second-smallest Q).
* 3.6  maximum degree D: Q >= min(1/3, Q(star on D+1 vertices)); for
       D = 2 the stated bound is not attained (the class minimum is
       2/5), which is reported rather than failed.
* 4.1  forests: Q <= (n-1)/3, tight for orders 1 and 2.
* 4.2  leaf ratio: sigma0(T-N[v]) / sigma0(T-v) <= 1 - 1/(2^(n-2)+1).
* 4.3  leaf upper bound on Q(T) from the deletion quotients.
* 4.4  leaf identities: sigma0(T) = 2 sigma0(T-N[v]) + sigma0(T-N[u])
       and the matching exact decomposition of Q(T).
* 4.5  forests: Q <= n/4 - 1/6, tight at order 2.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .generate import ClassSpec, gen_class, gen_graphs, gen_trees
from .graph6 import emit_graph6
from .graphs import (
    Graph,
    bits,
    closed_neighborhood,
    induced_subgraph,
    max_degree,
)
from .limits import check_cap, effective_limits
from .sigma import q_ratio, sigma01, star_q

ONE_THIRD = Fraction(1, 3)


@dataclass(frozen=True)
class Violation:
    graph6: str
    lhs: Fraction
    rhs: Fraction
    context: str = ""


@dataclass
class VerificationReport:
    theorem_id: str
    spec: ClassSpec
    checked: int
    violations: list[Violation] = field(default_factory=list)
    equality_witnesses: list[str] = field(default_factory=list)
    min_witness: tuple[str, Fraction] | None = None
    max_witness: tuple[str, Fraction] | None = None
    notes: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        def frac(q: Fraction) -> dict:
            return {"num": str(q.numerator), "den": str(q.denominator)}

        def witness(w: tuple[str, Fraction] | None) -> dict | None:
            if w is None:
                return None
            return {"graph6": w[0], "q_num": str(w[1].numerator), "q_den": str(w[1].denominator)}

        def jsonable(x):
            if isinstance(x, Fraction):
                return frac(x)
            if isinstance(x, (list, tuple)):
                return [jsonable(v) for v in x]
            if isinstance(x, dict):
                return {k: jsonable(v) for k, v in x.items()}
            return x

        return {
            "theorem": self.theorem_id,
            "family": self.spec.family,
            "n": self.spec.n,
            "delta": self.spec.delta,
            "checked": self.checked,
            "passed": self.passed,
            "violations": [
                {
                    "graph6": v.graph6,
                    "lhs_num": str(v.lhs.numerator),
                    "lhs_den": str(v.lhs.denominator),
                    "rhs_num": str(v.rhs.numerator),
                    "rhs_den": str(v.rhs.denominator),
                    "context": v.context,
                }
                for v in self.violations
            ],
            "equality_witnesses": list(self.equality_witnesses),
            "min_witness": witness(self.min_witness),
            "max_witness": witness(self.max_witness),
            "notes": jsonable(self.notes),
        }


def _q_list(graphs: list[Graph], jobs: int = 1) -> list[Fraction]:
    """Q of every graph, optionally over worker processes (order kept)."""
    if jobs > 1 and len(graphs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            chunk = max(1, len(graphs) // (4 * jobs))
            return list(ex.map(q_ratio, graphs, chunksize=chunk))
    return [q_ratio(g) for g in graphs]


def _extremes(
    pairs: list[tuple[str, Fraction]]
) -> tuple[tuple[str, Fraction] | None, tuple[str, Fraction] | None]:
    if not pairs:
        return None, None
    lo = min(pairs, key=lambda p: p[1])
    hi = max(pairs, key=lambda p: p[1])
    return lo, hi


def is_star_graph(g: Graph) -> bool:
    """True for the star on g.n vertices (orders 0 and 1 included)."""
    return g.n <= 1 or (g.edge_count() == g.n - 1 and max_degree(g) == g.n - 1)


def strip_isolated(g: Graph) -> Graph:
    keep = 0
    for v in range(g.n):
        if g.adj[v]:
            keep |= 1 << v
    return induced_subgraph(g, keep)


def is_star_plus_isolated(g: Graph, star_order: int) -> bool:
    core = strip_isolated(g)
    return core.n == star_order and is_star_graph(core)


def verify_connected_lower(n: int, jobs: int = 1) -> VerificationReport:
    """Connected graphs on n vertices: Q >= Q(star), equality only at the star."""
    if n < 1:
        raise ValueError("n >= 1")
    check_cap(n, effective_limits().graphs_max_n, "verify_connected_lower")
    spec = ClassSpec("connected_graphs", n)
    graphs = list(gen_class(spec))
    qs = _q_list(graphs, jobs)
    bound = star_q(n)
    report = VerificationReport("thm-3.2", spec, len(graphs))
    labelled = [(emit_graph6(g), q) for g, q in zip(graphs, qs)]
    for (g6, q), g in zip(labelled, graphs):
        if q < bound:
            report.violations.append(Violation(g6, q, bound))
        elif q == bound:
            report.equality_witnesses.append(g6)
            if not is_star_graph(g):
                report.violations.append(
                    Violation(g6, q, bound, "bound attained by a non-star graph")
                )
    if not any(is_star_graph(g) and q == bound for g, q in zip(graphs, qs)):
        star_pos = next(i for i, g in enumerate(graphs) if is_star_graph(g))
        report.violations.append(
            Violation(labelled[star_pos][0], qs[star_pos], bound, "star does not attain the bound")
        )
    report.min_witness, report.max_witness = _extremes(labelled)
    report.notes["bound"] = bound
    return report


def verify_general_lower(n: int, jobs: int = 1) -> VerificationReport:
    """All graphs on n vertices: Q = 0 exactly for the edgeless graph, and
    (for n >= 4) Q >= Q(star) for every other graph.  Also records the
    second-smallest Q and its witnesses."""
    if n < 1:
        raise ValueError("n >= 1")
    check_cap(n, effective_limits().graphs_max_n, "verify_general_lower")
    spec = ClassSpec("all_graphs", n)
    graphs = list(gen_class(spec))
    qs = _q_list(graphs, jobs)
    with_second = n >= 4
    theorem_id = "thm-3.1+3.5" if with_second else "thm-3.1"
    report = VerificationReport(theorem_id, spec, len(graphs))
    bound = star_q(n) if with_second else None
    labelled = [(emit_graph6(g), q) for g, q in zip(graphs, qs)]
    nonzero: list[tuple[str, Fraction]] = []
    for (g6, q), g in zip(labelled, graphs):
        empty = g.edge_count() == 0
        if q < 0:
            report.violations.append(Violation(g6, q, Fraction(0), "negative ratio"))
        if empty and q != 0:
            report.violations.append(Violation(g6, q, Fraction(0), "edgeless graph with nonzero ratio"))
        if not empty:
            nonzero.append((g6, q))
            if q == 0:
                report.violations.append(Violation(g6, q, Fraction(0), "zero ratio off the edgeless graph"))
            if bound is not None and q < bound:
                report.violations.append(Violation(g6, q, bound))
            if bound is not None and q == bound:
                report.equality_witnesses.append(g6)
    report.min_witness, report.max_witness = _extremes(labelled)
    if nonzero:
        second = min(q for _, q in nonzero)
        report.notes["second_smallest"] = second
        report.notes["second_smallest_witnesses"] = [g6 for g6, q in nonzero if q == second]
    if bound is not None:
        report.notes["bound"] = bound
    return report


def verify_max_degree_lower(n: int, delta: int, jobs: int = 1) -> VerificationReport:
    """Graphs on n vertices with maximum degree exactly delta:
    Q >= min(1/3, Q(star on delta+1 vertices)).

    For delta != 2 the set of graphs attaining the bound must be exactly
    the star on delta+1 vertices padded with isolated vertices.  For
    delta = 2 the bound is not attainable (the class minimum is Q of the
    3-vertex path plus isolated vertices); the observed minimum is
    reported instead of being treated as a failure.
    """
    if not 1 <= delta <= n - 1:
        raise ValueError(f"need 1 <= delta <= n-1, got delta={delta}, n={n}")
    if n > 7:
        raise ValueError("verify_max_degree_lower is specified for n <= 7")
    spec = ClassSpec("bounded_degree_graphs", n, delta)
    graphs = list(gen_class(spec))
    qs = _q_list(graphs, jobs)
    bound = min(ONE_THIRD, star_q(delta + 1))
    theorem_id = "prop-3.4" if delta == 1 else "thm-3.6"
    report = VerificationReport(theorem_id, spec, len(graphs))
    labelled = [(emit_graph6(g), q) for g, q in zip(graphs, qs)]
    for (g6, q), g in zip(labelled, graphs):
        if q < bound:
            report.violations.append(Violation(g6, q, bound))
        elif q == bound:
            report.equality_witnesses.append(g6)
            if delta != 2 and not is_star_plus_isolated(g, delta + 1):
                report.violations.append(
                    Violation(g6, q, bound, "bound attained off the star-plus-isolated graph")
                )
    report.min_witness, report.max_witness = _extremes(labelled)
    report.notes["bound"] = bound
    report.notes["bound_attained"] = bool(report.equality_witnesses)
    if delta != 2:
        expected = next(
            (i for i, g in enumerate(graphs) if is_star_plus_isolated(g, delta + 1)), None
        )
        if expected is None or qs[expected] != bound:
            g6, q = labelled[expected] if expected is not None else ("", Fraction(0))
            report.violations.append(
                Violation(g6, q, bound, "star-plus-isolated graph misses the bound")
            )
    elif not report.equality_witnesses:
        report.notes["anomaly"] = (
            "stated bound 1/3 is strictly below the class minimum for maximum degree 2"
        )
    return report


def verify_tree_lower(n: int, jobs: int = 1) -> VerificationReport:
    """Trees on n vertices: Q >= Q(star), equality only at the star."""
    if n < 1:
        raise ValueError("n >= 1")
    check_cap(n, 16, "verify_tree_lower")
    spec = ClassSpec("trees", n)
    graphs = list(gen_class(spec))
    qs = _q_list(graphs, jobs)
    bound = star_q(n)
    report = VerificationReport("cor-3.3", spec, len(graphs))
    labelled = [(emit_graph6(g), q) for g, q in zip(graphs, qs)]
    saw_star = False
    for (g6, q), g in zip(labelled, graphs):
        if q < bound:
            report.violations.append(Violation(g6, q, bound))
        elif q == bound:
            report.equality_witnesses.append(g6)
            if is_star_graph(g):
                saw_star = True
            else:
                report.violations.append(
                    Violation(g6, q, bound, "bound attained by a non-star tree")
                )
    if not saw_star:
        star_pos = next(i for i, g in enumerate(graphs) if is_star_graph(g))
        report.violations.append(
            Violation(labelled[star_pos][0], qs[star_pos], bound, "star does not attain the bound")
        )
    report.min_witness, report.max_witness = _extremes(labelled)
    report.notes["bound"] = bound
    return report


FOREST_BOUNDS = {
    "thm41": ("thm-4.1", lambda n: Fraction(n - 1, 3)),
    "thm45": ("thm-4.5", lambda n: Fraction(n, 4) - Fraction(1, 6)),
}


def verify_forest_upper(
    n: int, which: str, universe: str = "forests", jobs: int = 1
) -> VerificationReport:
    """Forests (or just trees) on n vertices against one of the two upper
    bounds: Q <= (n-1)/3 or Q <= n/4 - 1/6.  Equality witnesses and the
    class maximum are recorded; neither bound claims uniqueness."""
    if which not in FOREST_BOUNDS:
        raise ValueError(f"which must be one of {sorted(FOREST_BOUNDS)}")
    if universe not in ("forests", "trees"):
        raise ValueError("universe must be 'forests' or 'trees'")
    if n < 1:
        raise ValueError("n >= 1")
    check_cap(n, 16 if universe == "trees" else effective_limits().forests_max_n, "verify_forest_upper")
    theorem_id, bound_fn = FOREST_BOUNDS[which]
    bound = bound_fn(n)
    spec = ClassSpec(universe, n)
    graphs = list(gen_class(spec))
    qs = _q_list(graphs, jobs)
    report = VerificationReport(theorem_id, spec, len(graphs))
    labelled = [(emit_graph6(g), q) for g, q in zip(graphs, qs)]
    for g6, q in labelled:
        if q > bound:
            report.violations.append(Violation(g6, q, bound))
        elif q == bound:
            report.equality_witnesses.append(g6)
    report.min_witness, report.max_witness = _extremes(labelled)
    report.notes["bound"] = bound
    report.notes["bound_attained"] = bool(report.equality_witnesses)
    return report


def verify_leaf_lemmas(n: int) -> VerificationReport:
    """Per-leaf checks over every tree of order n: the sigma0 deletion
    ratio bound, the leaf upper bound on Q, and both exact identities
    relating a tree to its leaf deletions.

    For a leaf v with support vertex u (its unique neighbour):

    * sigma0(T-N[v]) / sigma0(T-v) <= 1 - 1/(2^(n-2)+1)
    * Q(T) <= (r Q(T-v) + 1 + Q(T-N[v])) / (1 + r)
      with r = sigma0(T-v) / sigma0(T-N[v])
    * sigma0(T) = 2 sigma0(T-N[v]) + sigma0(T-N[u])
    * Q(T) = (2 sigma0(T-N[v]) / sigma0(T)) (Q(T-v) + Q(T-N[v])) / 2
             + (sigma0(T-N[u]) / sigma0(T)) (1 + Q(T-v))
    """
    if n < 2:
        raise ValueError("leaf lemmas need n >= 2")
    check_cap(n, 12, "verify_leaf_lemmas")
    spec = ClassSpec("trees", n)
    report = VerificationReport("lem-4.2/4.3/4.4", spec, 0)
    ratio_cap = 1 - Fraction(1, (1 << (n - 2)) + 1)
    for tree in gen_class(spec):
        g6 = emit_graph6(tree)
        full = tree.full_mask
        pair_t = sigma01(tree)
        q_t = pair_t.q
        for v in range(n):
            if tree.degree(v) != 1:
                continue
            u = tree.adj[v].bit_length() - 1
            minus_v = induced_subgraph(tree, full & ~(1 << v))
            minus_nv = induced_subgraph(tree, full & ~closed_neighborhood(tree, v))
            minus_nu = induced_subgraph(tree, full & ~closed_neighborhood(tree, u))
            p_v, p_nv, p_nu = sigma01(minus_v), sigma01(minus_nv), sigma01(minus_nu)
            report.checked += 1
            ctx = f"leaf {v}"

            ratio = Fraction(p_nv.sigma0, p_v.sigma0)
            if ratio > ratio_cap:
                report.violations.append(Violation(g6, ratio, ratio_cap, f"lemma-4.2 {ctx}"))

            r = Fraction(p_v.sigma0, p_nv.sigma0)
            leaf_bound = (r * p_v.q + 1 + p_nv.q) / (1 + r)
            if q_t > leaf_bound:
                report.violations.append(Violation(g6, q_t, leaf_bound, f"lemma-4.3 {ctx}"))

            lhs44 = Fraction(pair_t.sigma0)
            rhs44 = Fraction(2 * p_nv.sigma0 + p_nu.sigma0)
            if lhs44 != rhs44:
                report.violations.append(Violation(g6, lhs44, rhs44, f"lemma-4.4 sigma0 {ctx}"))

            decomposed = (
                Fraction(2 * p_nv.sigma0, pair_t.sigma0) * (p_v.q + p_nv.q) / 2
                + Fraction(p_nu.sigma0, pair_t.sigma0) * (1 + p_v.q)
            )
            if q_t != decomposed:
                report.violations.append(Violation(g6, q_t, decomposed, f"lemma-4.4 ratio {ctx}"))
    return report


def extremal_scan(
    spec: ClassSpec,
    bound: tuple[str, Fraction] | None = None,
    jobs: int = 1,
) -> VerificationReport:
    """Generic extremal search over one universe.

    ``bound`` is an optional pair (comparison, value) with comparison
    one of ">=" or "<="; members breaking the comparison are recorded
    as violations and members attaining the value as equality witnesses.
    """
    graphs = list(gen_class(spec))
    qs = _q_list(graphs, jobs)
    report = VerificationReport("scan", spec, len(graphs))
    labelled = [(emit_graph6(g), q) for g, q in zip(graphs, qs)]
    if bound is not None:
        op, ref = bound
        if op not in (">=", "<="):
            raise ValueError("comparison must be '>=' or '<='")
        for g6, q in labelled:
            if (op == ">=" and q < ref) or (op == "<=" and q > ref):
                report.violations.append(Violation(g6, q, ref))
            elif q == ref:
                report.equality_witnesses.append(g6)
        report.notes["bound"] = ref
        report.notes["comparison"] = op
    report.min_witness, report.max_witness = _extremes(labelled)
    return report


# ---------------------------------------------------------------------------
# catalogue used by the CLI and the scripts
# ---------------------------------------------------------------------------

THEOREMS = ("3.1", "3.2", "3.3", "3.4", "3.5", "3.6", "4.1", "4.2", "4.3", "4.4", "4.5")


def run_theorem(theorem: str, n_max: int, jobs: int = 1) -> list[VerificationReport]:
    """Run one named check for every order up to n_max (clamped to the
    documented cap of its universe); '--theorem all' concatenates all."""
    lim = effective_limits()
    gcap = lim.graphs_max_n

    def orders(lo: int, hi: int) -> range:
        return range(lo, min(n_max, hi) + 1)

    reports: list[VerificationReport] = []
    if theorem == "3.1":
        reports += [verify_general_lower(n, jobs) for n in orders(1, gcap)]
    elif theorem == "3.2":
        reports += [verify_connected_lower(n, jobs) for n in orders(1, gcap)]
    elif theorem == "3.3":
        reports += [verify_tree_lower(n, jobs) for n in orders(1, min(16, lim.trees_max_n))]
    elif theorem == "3.4":
        reports += [verify_max_degree_lower(n, 1, jobs) for n in orders(2, min(7, gcap))]
    elif theorem == "3.5":
        reports += [verify_general_lower(n, jobs) for n in orders(4, min(7, gcap))]
    elif theorem == "3.6":
        for n in orders(2, min(7, gcap)):
            reports += [verify_max_degree_lower(n, d, jobs) for d in range(1, n)]
    elif theorem in ("4.1", "4.5"):
        which = "thm41" if theorem == "4.1" else "thm45"
        reports += [
            verify_forest_upper(n, which, "forests", jobs)
            for n in orders(1, lim.forests_max_n)
        ]
        reports += [
            verify_forest_upper(n, which, "trees", jobs)
            for n in orders(1, min(16, lim.trees_max_n))
        ]
    elif theorem in ("4.2", "4.3", "4.4"):
        reports += [verify_leaf_lemmas(n) for n in orders(2, 12)]
    elif theorem == "all":
        for t in THEOREMS:
            reports += run_theorem(t, n_max, jobs)
    else:
        raise ValueError(f"unknown theorem id {theorem!r}")
    return reports
