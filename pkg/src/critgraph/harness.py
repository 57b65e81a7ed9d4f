"""Verification campaigns over graph streams.

Each scanned graph ``g`` is looked at as a pair: ``g`` itself on the
diameter side, and ``H = complement(g)`` on the total-domination side.
Checks about 3-γt-edge-critical graphs run on ``H``, so scanning every graph
on ``n`` vertices covers every 3-γt-edge-critical graph on ``n`` vertices.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing
from collections import Counter
from dataclasses import dataclass, field
from typing import IO, Callable, Iterable, Iterator

from .canon import CANON_MAX_ORDER
from .criticality import (
    CaseKind,
    TrichotomyError,
    classify_complement,
    complement_memberships,
    is_3gt_critical_raw,
    is_diameter2_critical_raw,
    is_two_nontrivial_cliques_raw,
    is_k_supercritical_raw,
    arrow_witnesses,
    missing_edge_case,
    quasi_edges,
)
from .domination import (
    DominationKind,
    adjacent_dominating_pair_raw,
    duality_check,
    minimum_dominating_set_raw,
    total_domination_number_raw,
)
from .enumeration import canonical_form, generate_all, read_graph6_stream
from .graph import Graph, bits_of, complement, component_masks
from .graph6 import graph6_encode
from .metrics import diameter_raw
from .partition import (
    HypothesisFailure,
    InjectivityViolation,
    Partition,
    all_partitions,
    build_association,
    equality_precondition,
    floor_quarter_square,
    lemma_bound_check,
)
from .structure import (
    ClaimViolation,
    asseration_check,
    conn3_claims,
    has_independent_cut,
    independent_cuts,
    minimum_vertex_cuts,
    strong_weak,
    vertex_connectivity_raw,
)

PASS, FAIL, NA = "pass", "fail", "n/a"

CHECKS = (
    "conjecture",
    "duality",
    "supercritical",
    "trichotomy",
    "diameter_bound",
    "dichotomy",
    "lemma",
    "theorems",
    "claims",
)
LEMMA_MAX_ORDER = 7
THEOREM_CLASSES = ("conn1", "conn2", "conn3", "indcut")
CLAIM_CLASSES = ("asseration", "strong_weak", "conn3_claims")


class ConfigError(ValueError):
    """Invalid campaign configuration (exit code 2)."""


# -- verdicts ----------------------------------------------------------------


def is_balanced_complete_bipartite(g: Graph) -> bool:
    """Is ``g`` isomorphic to ``K_{floor(n/2), ceil(n/2)}``?"""
    n = g.n
    if n < 2:
        return False
    h = complement(g)
    comps = component_masks(h.rows, h.full)
    if len(comps) != 2:
        return False
    sizes = sorted(c.bit_count() for c in comps)
    if sizes != [n // 2, n - n // 2]:
        return False
    return g.num_edges == sizes[0] * sizes[1]


@dataclass
class GraphVerdict:
    graph6: str
    n: int
    m_complement: int
    cls: str
    diam: int | str | None
    gamma_t: int | str | None
    connectivity: int | None
    bound_ok: bool | None
    equality: bool | None
    extremal_balanced_bipartite: bool | None
    claim_flags: dict[str, str] = field(default_factory=dict)
    violations: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m_complement": self.m_complement,
            "class": self.cls,
            "diam": self.diam,
            "gamma_t": self.gamma_t,
            "connectivity": self.connectivity,
            "bound_ok": self.bound_ok,
            "equality": self.equality,
            "extremal_balanced_bipartite": self.extremal_balanced_bipartite,
            "claim_flags": dict(self.claim_flags),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), ensure_ascii=False, separators=(",", ":"))


def _ext(v: int | None) -> int | str:
    return "inf" if v is None else v


def verify_conjecture(g: Graph) -> GraphVerdict:
    """Edge bound and equality case for ``g``; not-applicable fields are ``None``.

    ``gamma_t`` and ``connectivity`` describe ``complement(g)`` and are filled
    in when ``g`` is diameter-2 edge-critical.
    """
    n = g.n
    code = graph6_encode(g).decode("ascii")
    if n < 2:
        return GraphVerdict(code, n, g.num_missing_edges, "NotDiameter2Critical", None, None, None, None, None, None)
    cls = classify_complement(g)
    d = diameter_raw(g.rows, n)
    v = GraphVerdict(
        graph6=code,
        n=n,
        m_complement=g.num_missing_edges,
        cls=str(cls),
        diam=_ext(d),
        gamma_t=None,
        connectivity=None,
        bound_ok=None,
        equality=None,
        extremal_balanced_bipartite=None,
    )
    if cls.positive:
        h = complement(g)
        v.gamma_t = _ext(total_domination_number_raw(h.rows, n))
        v.connectivity = vertex_connectivity_raw(h.rows, n)
        cap = floor_quarter_square(n)
        v.bound_ok = g.num_edges <= cap
        v.equality = g.num_edges == cap
        if v.equality:
            v.extremal_balanced_bipartite = is_balanced_complete_bipartite(g)
    return v


# -- per-graph checks --------------------------------------------------------


@dataclass
class _Context:
    """Lazily computed facts about ``g`` and ``H = complement(g)``."""

    g: Graph
    verdict: GraphVerdict
    h: Graph = field(init=False)
    h_critical: bool = field(init=False)
    _cache: dict = field(default_factory=dict)

    def __post_init__(self):
        self.h = complement(self.g)
        self.h_critical = self.verdict.cls.startswith("ThreeGtCritical") or (
            self.g.n >= 2 and is_3gt_critical_raw(self.h.rows, self.h.n)
        )

    def memo(self, key: str, fn: Callable):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def h_diam(self) -> int | None:
        return self.memo("h_diam", lambda: diameter_raw(self.h.rows, self.h.n))

    @property
    def h_kappa(self) -> int:
        return self.memo("h_kappa", lambda: vertex_connectivity_raw(self.h.rows, self.h.n))

    @property
    def h_indcut(self) -> bool:
        return self.memo(
            "h_indcut", lambda: self.h.min_degree() >= 3 and has_independent_cut(self.h, 3)
        )


@dataclass
class CheckResult:
    status: str
    violations: list[str] = field(default_factory=list)
    hypothesis: list[str] = field(default_factory=list)  # hypothesis classes this graph falls in
    extra: dict = field(default_factory=dict)


def _check_conjecture(ctx: _Context) -> CheckResult:
    v = ctx.verdict
    if v.bound_ok is None:
        return CheckResult(NA)
    bad = []
    if not v.bound_ok:
        bad.append(f"{v.n} vertices, {ctx.g.num_edges} edges exceeds floor(n^2/4) = {floor_quarter_square(v.n)}")
    if v.equality and not v.extremal_balanced_bipartite:
        bad.append("equality without being the balanced complete bipartite graph")
    return CheckResult(FAIL if bad else PASS, bad)


def _check_duality(ctx: _Context) -> CheckResult:
    if ctx.g.n < 2:
        return CheckResult(NA)
    ok = duality_check(ctx.g)
    return CheckResult(PASS if ok else FAIL, [] if ok else ["adjacent dominating pair does not match diam(G^c) > 2"])


def _check_supercritical(ctx: _Context) -> CheckResult:
    g = ctx.g
    if g.n < 2:
        return CheckResult(NA)
    sup = is_k_supercritical_raw(g.rows, g.n, 4)
    two = is_two_nontrivial_cliques_raw(g.rows, g.n)
    if sup == two:
        return CheckResult(PASS)
    return CheckResult(FAIL, [f"4-supercritical={sup} but two-clique union={two}"])


def _check_trichotomy(ctx: _Context) -> CheckResult:
    g = ctx.g
    if g.n < 2:
        return CheckResult(NA)
    d2c = is_diameter2_critical_raw(g.rows, g.n)
    flags = complement_memberships(g)
    hits = sum(flags.values())
    bad = []
    if d2c and hits != 1:
        bad.append(f"diameter-2 edge-critical but complement memberships {flags}")
    if not d2c and hits:
        bad.append(f"not diameter-2 edge-critical but complement memberships {flags}")
    if d2c != (ctx.verdict.cls != "NotDiameter2Critical"):
        bad.append(f"classification {ctx.verdict.cls} disagrees with criticality {d2c}")
    return CheckResult(FAIL if bad else PASS, bad)


def _check_diameter_bound(ctx: _Context) -> CheckResult:
    if not ctx.h_critical:
        return CheckResult(NA)
    d = ctx.h_diam
    if d in (2, 3):
        return CheckResult(PASS)
    return CheckResult(FAIL, [f"3-γt-critical complement has diameter {_ext(d)}"])


def _check_dichotomy(ctx: _Context) -> CheckResult:
    if not ctx.h_critical:
        return CheckResult(NA)
    h = ctx.h
    bad = []
    for e in h.missing_edges():
        case = missing_edge_case(h, e)
        if case.kind is CaseKind.VIOLATION:
            bad.append(f"missing edge {e} neither dominates nor has an arrow witness")
        for q in quasi_edges(h, e):
            if not h.has_edge(q.u, q.v) or q.ends() == e.ends() or not ({q.u, q.v} & {e.u, e.v}):
                bad.append(f"quasi-edge {q} of {e} is not an edge through an end of {e}")
    return CheckResult(FAIL if bad else PASS, bad)


def _check_lemma(ctx: _Context) -> CheckResult:
    if not ctx.h_critical:
        return CheckResult(NA)
    h = ctx.h
    if h.n > LEMMA_MAX_ORDER:
        return CheckResult(NA, extra={"skipped_order": True})
    bad = []
    met = equal = 0
    for p in all_partitions(h):
        try:
            build_association(h, p)
        except HypothesisFailure:
            continue
        except InjectivityViolation as exc:
            bad.append(f"{p}: {exc}")
            continue
        met += 1
        if not lemma_bound_check(h, p):
            bad.append(f"{p}: |E(G^c)| = {h.num_missing_edges} > |A||B|")
        if equality_precondition(h, p):
            equal += 1
    return CheckResult(FAIL if bad else PASS, bad, extra={"partitions_met": met, "equality_instances": equal})


def _check_theorems(ctx: _Context) -> CheckResult:
    if not ctx.h_critical:
        return CheckResult(NA)
    h = ctx.h
    classes = []
    if ctx.h_kappa in (1, 2, 3):
        classes.append(f"conn{ctx.h_kappa}")
    if ctx.h_indcut:
        classes.append("indcut")
    if not classes:
        return CheckResult(NA)
    cap = floor_quarter_square(h.n)
    if h.num_missing_edges < cap:
        return CheckResult(PASS, hypothesis=classes)
    return CheckResult(
        FAIL,
        [f"{'/'.join(classes)}: |E(G^c)| = {h.num_missing_edges} is not below {cap}"],
        hypothesis=classes,
    )


def _check_claims(ctx: _Context) -> CheckResult:
    if not ctx.h_critical:
        return CheckResult(NA)
    h = ctx.h
    classes = []
    bad = []
    s_star: list[int] = []
    if ctx.h_indcut:
        classes.append("asseration")
        if asseration_check(h, verify_hypotheses=False) is None:
            bad.append("asseration: no independent cut with a dominating component")
    if ctx.h_diam == 2 and ctx.h_kappa == 2:
        classes.append("strong_weak")
        for cut in minimum_vertex_cuts(h):
            x, y = cut
            try:
                strong_weak(h, x, y, verify_hypotheses=False)
            except ClaimViolation as exc:
                bad.append(f"strong_weak {{{x},{y}}}: {exc}")
    if ctx.h_diam == 2 and ctx.h_kappa == 3:
        classes.append("conn3_claims")
        for cut in minimum_vertex_cuts(h):
            rep = conn3_claims(h, *cut, verify_hypotheses=False)
            if rep.s_star_size is not None:
                s_star.append(rep.s_star_size)
            bad.extend(f"conn3_claims {list(cut)}: {m}" for m in rep.violations)
    if not classes:
        return CheckResult(NA)
    return CheckResult(FAIL if bad else PASS, bad, hypothesis=classes, extra={"s_star_sizes": s_star})


_CHECK_FUNCS: dict[str, Callable[[_Context], CheckResult]] = {
    "conjecture": _check_conjecture,
    "duality": _check_duality,
    "supercritical": _check_supercritical,
    "trichotomy": _check_trichotomy,
    "diameter_bound": _check_diameter_bound,
    "dichotomy": _check_dichotomy,
    "lemma": _check_lemma,
    "theorems": _check_theorems,
    "claims": _check_claims,
}


# -- filters -----------------------------------------------------------------


CLASS_ALIASES = {
    "3gt": "ThreeGtCritical",
    "3gt2": "ThreeGtCritical(diam=2)",
    "3gt3": "ThreeGtCritical(diam=3)",
    "4sc": "FourSupercritical",
    "star": "StarComplement",
    "none": "NotDiameter2Critical",
    "d2c": "positive",
}


def parse_filters(spec: str | None) -> dict[str, str]:
    """``"class=3gt,kappa=2"`` into a dict; unknown keys raise :class:`ConfigError`."""
    out: dict[str, str] = {}
    if not spec:
        return out
    for item in spec.split(","):
        item = item.strip()
        if not item:
            continue
        if "=" not in item:
            raise ConfigError(f"filter {item!r} is not key=value")
        key, value = (s.strip() for s in item.split("=", 1))
        if key not in ("class", "kappa", "delta", "indcut"):
            raise ConfigError(f"unknown filter key {key!r}")
        if key in ("kappa", "delta"):
            try:
                int(value)
            except ValueError:
                raise ConfigError(f"filter {key} needs an integer, got {value!r}") from None
        if key == "indcut" and value not in ("0", "1", "true", "false"):
            raise ConfigError(f"filter indcut needs true/false, got {value!r}")
        out[key] = value
    return out


def _passes_filters(ctx: _Context, filters: dict[str, str]) -> bool:
    if "class" in filters:
        want = CLASS_ALIASES.get(filters["class"], filters["class"])
        cls = ctx.verdict.cls
        if want == "positive":
            if cls == "NotDiameter2Critical":
                return False
        elif not (cls == want or cls.startswith(want + "(")):
            return False
    if "kappa" in filters and ctx.h_kappa != int(filters["kappa"]):
        return False
    if "delta" in filters and (ctx.h.n == 0 or ctx.h.min_degree() < int(filters["delta"])):
        return False
    if "indcut" in filters and ctx.h_indcut != (filters["indcut"] in ("1", "true")):
        return False
    return True


# -- campaigns ---------------------------------------------------------------


@dataclass
class CampaignConfig:
    checks: tuple[str, ...]
    n_values: tuple[int, ...] = ()
    input_path: str | None = None
    filters: dict[str, str] = field(default_factory=dict)
    jobs: int = 1
    output: str | None = None
    fmt: str = "jsonl"
    dedupe: bool = True

    def validate(self) -> None:
        if not self.checks:
            raise ConfigError("select at least one check")
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ConfigError(f"unknown checks: {', '.join(unknown)}")
        if bool(self.n_values) == (self.input_path is not None):
            raise ConfigError("give exactly one of n values or an input stream")
        for n in self.n_values:
            if not 1 <= n <= 10:
                raise ConfigError(f"n must be between 1 and 10, got {n}")
        if self.jobs < 1:
            raise ConfigError("jobs must be positive")
        if self.fmt not in ("jsonl", "csv"):
            raise ConfigError(f"unknown format {self.fmt!r}")


@dataclass
class CampaignSummary:
    scanned: int = 0
    selected: int = 0
    skipped_uncanonical: int = 0
    per_n: Counter = field(default_factory=Counter)
    per_class: Counter = field(default_factory=Counter)
    per_parity: dict[str, Counter] = field(default_factory=lambda: {"even": Counter(), "odd": Counter()})
    check_counts: dict[str, Counter] = field(default_factory=dict)
    hypothesis_counts: Counter = field(default_factory=Counter)
    lemma_partitions: int = 0
    lemma_equality_instances: int = 0
    s_star_sizes: Counter = field(default_factory=Counter)
    violations: list[dict] = field(default_factory=list)
    checks: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def vacuity(self) -> dict[str, str]:
        """Per hypothesis class: ``pass``, ``fail`` or ``vacuous`` (no instance scanned)."""
        out = {}
        failed = {h for v in self.violations if v.get("hypothesis") for h in v["hypothesis"].split("/")}
        wanted = []
        if "theorems" in self.checks:
            wanted += THEOREM_CLASSES
        if "claims" in self.checks:
            wanted += CLAIM_CLASSES
        for name in wanted:
            if self.hypothesis_counts[name] == 0:
                out[name] = "vacuous"
            else:
                out[name] = FAIL if name in failed else PASS
        if "lemma" in self.checks:
            out["lemma_equality_case"] = "vacuous" if self.lemma_equality_instances == 0 else "present"
        return out

    def to_dict(self) -> dict:
        return {
            "scanned": self.scanned,
            "selected": self.selected,
            "skipped_uncanonical": self.skipped_uncanonical,
            "per_n": {str(k): self.per_n[k] for k in sorted(self.per_n)},
            "per_class": {k: self.per_class[k] for k in sorted(self.per_class)},
            "per_parity": {p: {k: c[k] for k in sorted(c)} for p, c in self.per_parity.items()},
            "checks": {
                name: {s: self.check_counts.get(name, Counter())[s] for s in (PASS, FAIL, NA)}
                for name in self.checks
            },
            "hypothesis_counts": {k: self.hypothesis_counts[k] for k in sorted(self.hypothesis_counts)},
            "vacuity": self.vacuity(),
            "lemma_partitions": self.lemma_partitions,
            "lemma_equality_instances": self.lemma_equality_instances,
            "s_star_sizes": {str(k): self.s_star_sizes[k] for k in sorted(self.s_star_sizes)},
            "violations": list(self.violations),
            "exit_code": self.exit_code,
        }

    def csv_rows(self) -> list[list[str]]:
        rows = [["section", "key", "value"]]
        d = self.to_dict()
        for key in ("scanned", "selected", "skipped_uncanonical", "lemma_partitions", "lemma_equality_instances", "exit_code"):
            rows.append(["total", key, str(d[key])])
        for section in ("per_n", "per_class", "hypothesis_counts", "vacuity", "s_star_sizes"):
            for k, v in d[section].items():
                rows.append([section, k, str(v)])
        for parity, counts in d["per_parity"].items():
            for k, v in counts.items():
                rows.append([f"parity_{parity}", k, str(v)])
        for name, counts in d["checks"].items():
            for status, v in counts.items():
                rows.append([f"check_{name}", status, str(v)])
        rows.append(["total", "violations", str(len(self.violations))])
        return rows


@dataclass
class _Outcome:
    verdict: GraphVerdict
    selected: bool
    results: dict[str, CheckResult]


def evaluate(g: Graph, checks: Iterable[str], filters: dict[str, str] | None = None) -> _Outcome:
    """Verdict plus the selected checks for one graph."""
    verdict = verify_conjecture(g)
    ctx = _Context(g, verdict)
    if filters and not _passes_filters(ctx, filters):
        return _Outcome(verdict, False, {})
    results = {}
    for name in checks:
        r = _CHECK_FUNCS[name](ctx)
        results[name] = r
        verdict.claim_flags[name] = r.status
        verdict.violations.extend(f"{name}: {m}" for m in r.violations)
    return _Outcome(verdict, True, results)


def _evaluate_job(args: tuple[bytes, tuple[str, ...], dict[str, str]]) -> _Outcome:
    from .graph6 import graph6_decode

    code, checks, filters = args
    return evaluate(graph6_decode(code), checks, filters)


def _graph_source(cfg: CampaignConfig, counter: Counter) -> Iterator[Graph]:
    if cfg.n_values:
        for n in cfg.n_values:
            yield from generate_all(n)
        return
    stream = read_graph6_stream(cfg.input_path)
    if not cfg.dedupe:
        yield from stream
        return
    def gate() -> Iterator[Graph]:
        for g in stream:
            if g.n > CANON_MAX_ORDER:
                counter["skipped_uncanonical"] += 1
                yield g  # passes through without isomorphism rejection
            else:
                yield from deduplicate_one(g)

    seen: set[bytes] = set()

    def deduplicate_one(g: Graph) -> Iterator[Graph]:
        key = canonical_form(g)
        if key not in seen:
            seen.add(key)
            yield g

    yield from gate()


def _outcomes(cfg: CampaignConfig, counter: Counter) -> Iterator[_Outcome]:
    graphs = _graph_source(cfg, counter)
    if cfg.jobs == 1:
        for g in graphs:
            yield evaluate(g, cfg.checks, cfg.filters)
        return
    jobs = ((graph6_encode(g), cfg.checks, cfg.filters) for g in graphs)
    with multiprocessing.Pool(cfg.jobs) as pool:
        # imap keeps input order, so output is identical for any job count
        yield from pool.imap(_evaluate_job, jobs, chunksize=64)


def run_campaign(cfg: CampaignConfig, sink: IO[str] | None = None) -> CampaignSummary:
    """Stream graphs, apply filters, run checks, write one JSON line per selected graph.

    Lines go to ``sink`` if given, else to ``cfg.output`` if set.  With
    ``fmt="csv"`` the summary is written as CSV after the verdict lines are
    skipped.
    """
    cfg.validate()
    summary = CampaignSummary(checks=tuple(cfg.checks))
    counter: Counter = Counter()
    own = None
    if sink is None and cfg.output:
        own = sink = open(cfg.output, "w", encoding="utf-8", newline="")
    try:
        for out in _outcomes(cfg, counter):
            summary.scanned += 1
            if not out.selected:
                continue
            v = out.verdict
            summary.selected += 1
            summary.per_n[v.n] += 1
            summary.per_class[v.cls] += 1
            summary.per_parity["even" if v.n % 2 == 0 else "odd"][v.cls] += 1
            for name, r in out.results.items():
                summary.check_counts.setdefault(name, Counter())[r.status] += 1
                for h in r.hypothesis:
                    summary.hypothesis_counts[h] += 1
                if name == "lemma":
                    summary.lemma_partitions += r.extra.get("partitions_met", 0)
                    summary.lemma_equality_instances += r.extra.get("equality_instances", 0)
                for s in r.extra.get("s_star_sizes", ()):
                    summary.s_star_sizes[s] += 1
                for m in r.violations:
                    summary.violations.append(
                        {
                            "graph6": v.graph6,
                            "check": name,
                            "hypothesis": "/".join(r.hypothesis) if name == "theorems" else _claim_class(m),
                            "detail": m,
                        }
                    )
            if sink is not None and cfg.fmt == "jsonl":
                sink.write(v.to_json() + "\n")
        summary.skipped_uncanonical = counter["skipped_uncanonical"]
        if sink is not None and cfg.fmt == "csv":
            csv.writer(sink, lineterminator="\n").writerows(summary.csv_rows())
    finally:
        if own is not None:
            own.close()
    return summary


def _claim_class(message: str) -> str | None:
    for name in CLAIM_CLASSES:
        if message.startswith(name):
            return name
    return None


def summary_csv(summary: CampaignSummary) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(summary.csv_rows())
    return buf.getvalue()


# -- explain -----------------------------------------------------------------


EXPLAIN_CHECKS = ("conjecture", "classify", "quasi-edges", "duality", "domination", "cuts", "claims")


def _fmt_set(m: int) -> str:
    return "{" + ", ".join(str(v) for v in bits_of(m)) + "}"


def explain(g: Graph, check: str) -> str:
    """Readable step-by-step evidence for one check on one graph."""
    if check not in EXPLAIN_CHECKS:
        raise ValueError(f"unknown check {check!r}; choose from {', '.join(EXPLAIN_CHECKS)}")
    lines = [f"graph {graph6_encode(g).decode('ascii')}: n={g.n}, m={g.num_edges}, missing={g.num_missing_edges}"]
    n = g.n
    if check == "conjecture":
        d = diameter_raw(g.rows, n) if n else None
        if n < 3 or not is_diameter2_critical_raw(g.rows, n):
            lines.append(f"not diameter-2 edge-critical (diameter {_ext(d)})")
            return "\n".join(lines)
        cap = floor_quarter_square(n)
        lines.append("diameter-2 edge-critical")
        lines.append(f"edges {g.num_edges} <= floor(n^2/4) = {cap}: {g.num_edges <= cap}")
        if g.num_edges == cap:
            lines.append(f"equality; balanced complete bipartite: {is_balanced_complete_bipartite(g)}")
        return "\n".join(lines)
    if check == "classify":
        h = complement(g)
        try:
            cls = classify_complement(g)
        except TrichotomyError as exc:
            lines.append(f"trichotomy failure: {exc.memberships}")
            return "\n".join(lines)
        lines.append(f"class of complement: {cls}")
        gt = total_domination_number_raw(h.rows, n)
        lines.append(f"γt(complement) = {_ext(gt)}")
        for e in h.missing_edges():
            hp = h.add_edge(e.u, e.v)
            lines.append(f"  add {e}: γt = {_ext(total_domination_number_raw(hp.rows, n))}")
        return "\n".join(lines)
    if check == "quasi-edges":
        for e in g.missing_edges():
            ws = arrow_witnesses(g, e)
            case = missing_edge_case(g, e)
            qs = ", ".join(str(w) for w in ws) or "-"
            lines.append(f"{e}: {case}; quasi-edges [{qs}]")
        if len(lines) == 1:
            lines.append("no missing edges")
        return "\n".join(lines)
    if check == "duality":
        pair = adjacent_dominating_pair_raw(g.rows, n)
        d = diameter_raw(complement(g).rows, n)
        lines.append(f"adjacent dominating pair: {pair if pair else 'none'}")
        lines.append(f"diameter of complement: {_ext(d)}")
        lines.append(f"duality holds: {duality_check(g)}")
        return "\n".join(lines)
    if check == "domination":
        s = minimum_dominating_set_raw(g.rows, n, DominationKind.CLOSED)
        t = minimum_dominating_set_raw(g.rows, n, DominationKind.TOTAL)
        lines.append(f"minimum dominating set: {_fmt_set(s)} (γ = {s.bit_count()})")
        lines.append("minimum total dominating set: " + ("none (isolated vertex)" if t is None else f"{_fmt_set(t)} (γt = {t.bit_count()})"))
        return "\n".join(lines)
    if check == "cuts":
        lines.append(f"connectivity {vertex_connectivity_raw(g.rows, n)}")
        for c in minimum_vertex_cuts(g):
            lines.append(f"  minimum cut {_fmt_set(c.bits)}")
        for info in independent_cuts(g, 1):
            comps = " | ".join(_fmt_set(c.bits) for c in info.components_after)
            lines.append(f"  independent cut {_fmt_set(info.cut.bits)} -> {comps}")
        return "\n".join(lines)
    # claims: g is the 3-γt-critical side, so scan its complement
    co = complement(g)
    r = _check_claims(_Context(co, verify_conjecture(co)))
    lines.append(f"claims: {r.status}; hypothesis classes {r.hypothesis or '-'}")
    lines.extend(f"  {m}" for m in r.violations)
    return "\n".join(lines)


def partition_from_spec(g: Graph, spec: str) -> Partition:
    """Parse ``"0,1,2"`` (the A side) or ``"0,1,2|3,4"`` into a partition of ``g``."""
    left = spec.split("|", 1)[0]
    try:
        a = [int(s) for s in left.replace(" ", "").split(",") if s]
    except ValueError:
        raise ConfigError(f"bad partition {spec!r}") from None
    return Partition.of(g, a)
