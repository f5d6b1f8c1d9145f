"""Exhaustive property suites behind the command-line ``check`` verbs.

Every check runs a finite family of instances determined only by the
configuration bounds, reports the instance count, and on failure carries a
machine-readable counterexample (the lexicographically first one, regardless
of worker count).  Each check also produces a digest of its canonical output
so field independence can compare runs at different characteristics.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from ._gf import check_prime
from .embeddings import (
    Embedding,
    direct_sum,
    empty_embedding,
    gap_indices,
    hom_dim_embeddings,
    increase_move_witness,
    is_exact,
    lr_tableau_of,
    picket,
    pole,
    pole_height_sequence,
    pole_pair,
    ses_top_boundary,
    ses_top_gap,
    ses_top_run,
)
from .nilpotent import hom_dim_quotient, quotient_type, shape_from_partition
from .orders import (
    box_leq_syt,
    box_leq_syt_same_shape,
    box_moves_lr,
    box_moves_syt,
    dom_leq_lr,
    dom_leq_syt,
    embed_in_square,
    lr_to_syt,
    reachability_table,
    relation_table,
    relations_equal,
    syt_to_lr,
)
from .partitions import partitions_up_to_weight, rook_strip_inners, transpose, weight
from .tableaux import enumerate_T_r, enumerate_lr_rook, syt_validate, tableau_union

CHECK_NAMES = (
    "box-eq-dom",
    "f-map",
    "phi-orders",
    "pole-tableau",
    "dmn-tableau",
    "ses-exactness",
    "ext-witness",
    "hom-formula",
    "field-independence",
)


@dataclass(frozen=True)
class RunConfig:
    field_primes: tuple[int, ...] = (2, 3, 5)
    max_weight_r: int = 6
    max_beta_weight: int = 10
    max_height: int = 8
    workers: int = 1
    output_format: str = "text"

    def __post_init__(self):
        for p in self.field_primes:
            check_prime(p)
        if min(self.max_weight_r, self.max_beta_weight, self.max_height) < 1:
            raise ValueError("bounds must be positive")
        if self.workers < 1:
            raise ValueError("worker count must be positive")
        if self.output_format not in ("text", "json", "dot"):
            raise ValueError(f"unknown output format {self.output_format!r}")


def workers_from_env(default: int = 1) -> int:
    raw = os.environ.get("TABLEAU_ORDERS_WORKERS", "")
    return int(raw) if raw.strip() else default


@dataclass
class CheckReport:
    name: str
    instances: int
    passed: bool
    counterexample: dict | None
    seconds: float
    digest: str = ""

    def to_dict(self) -> dict:
        return {
            "check": self.name,
            "instances": self.instances,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "seconds": round(self.seconds, 3),
        }

    def text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{self.name}: {status} ({self.instances} instances, {self.seconds:.2f}s)"
        if self.counterexample is not None:
            line += "\ncounterexample: " + json.dumps(self.counterexample, sort_keys=True)
        return line


def _digest(rows) -> str:
    h = hashlib.sha256()
    for row in rows:
        h.update(json.dumps(row, sort_keys=True).encode())
        h.update(b"\n")
    return h.hexdigest()


def parallel_map(fn, items, workers: int):
    """Order-preserving map; results are merged independently of workers."""
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    from concurrent.futures import ProcessPoolExecutor

    chunk = max(1, len(items) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(fn, items, chunksize=chunk))


def _merge(name: str, results, started: float) -> CheckReport:
    instances = 0
    counterexample = None
    rows = []
    for res in results:
        instances += res["instances"]
        rows.extend(res.get("rows", ()))
        if counterexample is None and res.get("counterexample") is not None:
            counterexample = res["counterexample"]
    return CheckReport(
        name,
        instances,
        counterexample is None,
        counterexample,
        time.time() - started,
        _digest(rows),
    )


def increasing_sequences(max_value: int, min_len: int, max_len: int):
    """Strictly increasing tuples in 0..max_value, shortest and low first."""
    out = []
    for k in range(min_len, max_len + 1):
        out.extend(combinations(range(max_value + 1), k))
    return out


# ---------------------------------------------------------------------------
# box-eq-dom


def check_box_eq_dom(cfg: RunConfig) -> CheckReport:
    started = time.time()
    results = []
    for r in range(1, cfg.max_weight_r + 1):
        elements = enumerate_T_r(r)
        dom = relation_table(elements, dom_leq_syt)
        box = reachability_table(elements, box_moves_syt)
        equal, ce = relations_equal(box, dom)
        result = {"instances": len(elements) ** 2, "rows": [[r, len(elements)]]}
        if not equal:
            result["counterexample"] = {"r": r, **{k: str(v) for k, v in ce.items()}}
        results.append(result)
    return _merge("box-eq-dom", results, started)


# ---------------------------------------------------------------------------
# f-map


def check_f_map(cfg: RunConfig) -> CheckReport:
    started = time.time()
    results = []
    for r in range(1, min(5, cfg.max_weight_r) + 1):
        elements = enumerate_T_r(r)
        images = [embed_in_square(t) for t in elements]
        instances = 0
        ce = None
        for t, ft in zip(elements, images):
            instances += 1
            ok, why = syt_validate(ft)
            if not ok or ft.shape != (r,) * r:
                ce = {"r": r, "tableau": t.to_json(), "reason": why or "wrong shape"}
                break
        if ce is None:
            for a, fa in zip(elements, images):
                for b, fb in zip(elements, images):
                    instances += 1
                    if dom_leq_syt(a, b) != dom_leq_syt(fa, fb):
                        ce = {"r": r, "pair": [a.to_json(), b.to_json()]}
                        break
                if ce:
                    break
        if ce is None and r <= 4:
            # reflection of the box order through the square embedding
            for a, fa in zip(elements, images):
                for b, fb in zip(elements, images):
                    instances += 1
                    if box_leq_syt_same_shape(fa, fb) and not box_leq_syt(a, b):
                        ce = {"r": r, "pair": [a.to_json(), b.to_json()], "reason": "box"}
                        break
                if ce:
                    break
        results.append(
            {"instances": instances, "rows": [[r, len(elements)]], "counterexample": ce}
        )
    return _merge("f-map", results, started)


# ---------------------------------------------------------------------------
# phi-orders


def rook_families(max_beta_weight: int, max_r: int = 5, min_r: int = 1):
    out = []
    for beta in partitions_up_to_weight(max_beta_weight):
        for gamma in rook_strip_inners(beta):
            r = weight(beta) - weight(gamma)
            if min_r <= r <= max_r:
                out.append((beta, gamma))
    return out


def _phi_family_worker(args):
    beta, gamma = args
    r = weight(beta) - weight(gamma)
    elements = enumerate_lr_rook(beta, gamma)
    standard = enumerate_T_r(r)
    result = {"instances": 0, "rows": [[list(beta), list(gamma), len(elements)]]}

    def fail(ce):
        result["counterexample"] = {"beta": list(beta), "gamma": list(gamma), **ce}
        return result

    if len(elements) != len(standard):
        return fail({"reason": f"family has {len(elements)} elements, not {len(standard)}"})
    images = [lr_to_syt(t) for t in elements]
    result["instances"] += len(elements) + len(standard)
    for t, image in zip(elements, images):
        if syt_to_lr(image, beta, gamma) != t:
            return fail({"reason": "inverse round trip", "tableau": t.to_json()})
    for s in standard:
        back = syt_to_lr(s, beta, gamma)
        if lr_to_syt(back) != s:
            return fail({"reason": "forward round trip", "tableau": s.to_json()})
    box_lr = reachability_table(elements, box_moves_lr)
    box_syt = reachability_table(standard, box_moves_syt)
    lr_pos = [box_lr.elements.index(t) for t in elements]
    syt_pos = [box_syt.elements.index(image) for image in images]
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            result["instances"] += 2
            if dom_leq_lr(a, b) != dom_leq_syt(images[i], images[j]):
                return fail({"reason": "dominance", "pair": [a.to_json(), b.to_json()]})
            if box_lr.leq[lr_pos[i]][lr_pos[j]] != box_syt.leq[syt_pos[i]][syt_pos[j]]:
                return fail({"reason": "box", "pair": [a.to_json(), b.to_json()]})
    return result


def check_phi_orders(cfg: RunConfig) -> CheckReport:
    started = time.time()
    families = rook_families(cfg.max_beta_weight)
    results = parallel_map(_phi_family_worker, families, cfg.workers)
    return _merge("phi-orders", results, started)


# ---------------------------------------------------------------------------
# pole-tableau


def _pole_worker(args):
    m, p = args
    result = {"instances": 1, "rows": []}
    x = pole(m, p)
    tab = lr_tableau_of(x)
    result["rows"].append([list(m), [list(q) for q in tab.chain]])

    def fail(reason):
        result["counterexample"] = {"m": list(m), "p": p, "reason": reason}
        return result

    if pole_height_sequence(x) != tuple(m):
        return fail(f"height sequence is {pole_height_sequence(x)}")
    cells = tab.cells()
    if sorted(cells.values()) != list(range(1, len(m) + 1)):
        return fail("entries do not occur exactly once")
    for (row, _), e in cells.items():
        if row != m[e - 1] + 1:
            return fail(f"entry {e} in row {row}, expected {m[e - 1] + 1}")
    return result


def check_pole_tableau(cfg: RunConfig, p: int | None = None) -> CheckReport:
    started = time.time()
    p = p or cfg.field_primes[0]
    ms = increasing_sequences(cfg.max_height, 1, cfg.max_height + 1)
    results = parallel_map(_pole_worker, [(m, p) for m in ms], cfg.workers)
    return _merge("pole-tableau", results, started)


# ---------------------------------------------------------------------------
# dmn-tableau


def paired_sequences(max_top: int, include_empty: bool = True):
    """All (m, n) with m longer, strictly increasing, top of m at least one
    above the top of n, and top of m bounded."""
    out = []
    for m in increasing_sequences(max_top, 2, max_top + 1):
        if include_empty:
            out.append((m, ()))
        for n in increasing_sequences(m[-1] - 1, 1, len(m) - 1):
            out.append((m, n))
    return out


@lru_cache(maxsize=65536)
def _pole_tableau_cached(m, p):
    return lr_tableau_of(pole(m, p))


def _dmn_worker(args):
    m, n, p = args
    result = {"instances": 1, "rows": []}
    lhs = lr_tableau_of(pole_pair(m, n, p))
    # tableau of the pole sum, assembled by the separately verified row-wise
    # union compatibility of direct sums
    rhs = _pole_tableau_cached(m, p)
    if n:
        rhs = tableau_union(rhs, _pole_tableau_cached(n, p))
    result["rows"].append([list(m), list(n), [list(q) for q in lhs.chain]])
    if lhs != rhs:
        result["counterexample"] = {
            "m": list(m),
            "n": list(n),
            "p": p,
            "pair_tableau": lhs.to_json(),
            "sum_tableau": rhs.to_json(),
        }
    return result


def check_dmn_tableau(cfg: RunConfig, p: int | None = None) -> CheckReport:
    started = time.time()
    p = p or cfg.field_primes[0]
    pairs = paired_sequences(cfg.max_height)
    results = parallel_map(_dmn_worker, [(m, n, p) for m, n in pairs], cfg.workers)
    return _merge("dmn-tableau", results, started)


# ---------------------------------------------------------------------------
# ses-exactness


def split_instances(max_top: int):
    """(case, m, n) triples satisfying each constructor's precondition."""
    out = []
    for m in increasing_sequences(max_top, 2, max_top + 1):
        r = len(m) - 1
        mi = gap_indices(m)
        gap_below = len(mi) >= 2 and mi[1] == r - 1
        case = "gap" if gap_below else "run"
        ns = [()]
        if m[-1] >= 2:
            ns += increasing_sequences(m[-1] - 2, 1, r)
        for n in ns:
            out.append((case, m, n))
        if gap_below:
            heads = [()]
            if m[-1] >= 2:
                heads += increasing_sequences(m[-1] - 2, 1, r - 1)
            for head in heads:
                out.append(("boundary", m, head + (m[-1] - 1,)))
    return out


_SES_BUILDERS = {"gap": ses_top_gap, "run": ses_top_run, "boundary": ses_top_boundary}


def _ses_worker(args):
    case, m, n, p = args
    result = {"instances": 1, "rows": []}
    try:
        seq = _SES_BUILDERS[case](m, n, p)
        ok, why = is_exact(seq)
        result["rows"].append(
            [case, list(m), list(n)]
            + [
                [list(x.ambient.parts), x.submodule.dim]
                for x in (seq.left, seq.middle, seq.right)
            ]
        )
        if not ok:
            raise AssertionError(why)
    except (AssertionError, ValueError) as exc:
        result["counterexample"] = {"case": case, "m": list(m), "n": list(n), "p": p, "reason": str(exc)}
    return result


def check_ses_exactness(cfg: RunConfig, p: int | None = None) -> CheckReport:
    started = time.time()
    p = p or cfg.field_primes[0]
    instances = split_instances(min(cfg.max_height, 7))
    results = parallel_map(_ses_worker, [(c, m, n, p) for c, m, n in instances], cfg.workers)
    return _merge("ses-exactness", results, started)


# ---------------------------------------------------------------------------
# ext-witness (and the hom/dominance mechanism on each witness)


def _witness_family_worker(args):
    beta, gamma, p, with_hom = args
    result = {"instances": 0, "rows": []}
    elements = enumerate_lr_rook(beta, gamma)
    for t in elements:
        for t2, move in box_moves_lr(t):
            if move.kind != "lr_increase":
                continue
            result["instances"] += 1
            try:
                witness = increase_move_witness(t, move, p)
            except AssertionError as exc:
                result["counterexample"] = {
                    "beta": list(beta),
                    "gamma": list(gamma),
                    "tableau": t.to_json(),
                    "move": list(move.data),
                    "p": p,
                    "reason": str(exc),
                }
                return result
            row = [
                list(beta),
                list(gamma),
                list(move.data),
                [list(q) for q in witness.smaller.chain],
            ]
            if with_hom:
                seq = witness.sequence
                ends = direct_sum(seq.left, seq.right)
                family = [
                    picket(i, ell, p)
                    for ell in range(1, beta[0] + 1)
                    for i in range(0, beta[0] + 1)
                ]
                dims = [
                    (hom_dim_embeddings(seq.middle, z), hom_dim_embeddings(ends, z))
                    for z in family
                ]
                row.append(dims)
                bad = next((d for d in dims if d[0] > d[1]), None)
                if bad is not None or not dom_leq_lr(witness.smaller, t):
                    result["counterexample"] = {
                        "beta": list(beta),
                        "gamma": list(gamma),
                        "tableau": t.to_json(),
                        "move": list(move.data),
                        "p": p,
                        "reason": "hom comparison" if bad else "dominance",
                    }
                    return result
            result["rows"].append(row)
    return result


def check_ext_witness(cfg: RunConfig, p: int | None = None, with_hom: bool = True) -> CheckReport:
    started = time.time()
    p = p or cfg.field_primes[0]
    families = rook_families(min(9, cfg.max_beta_weight))
    args = [(beta, gamma, p, with_hom) for beta, gamma in families]
    results = parallel_map(_witness_family_worker, args, cfg.workers)
    return _merge("ext-witness", results, started)


# ---------------------------------------------------------------------------
# hom-formula


def hom_fixture_embeddings(p: int, max_entry: int = 5):
    """Deterministic fixture list: poles, empties, linked pairs, direct sums."""
    fixtures: list[Embedding] = []
    poles = [pole(m, p) for m in increasing_sequences(max_entry, 1, max_entry + 1)]
    fixtures.extend(poles)
    empties = [empty_embedding(b, p) for b in partitions_up_to_weight(4)]
    fixtures.extend(empties)
    for m, n in paired_sequences(4):
        fixtures.append(pole_pair(m, n, p))
    for i in range(0, len(poles) - 7, 7):
        fixtures.append(direct_sum(poles[i], poles[i + 7]))
    for i in range(0, len(poles) - 3, 11):
        fixtures.append(direct_sum(poles[i], empties[(i * 5) % len(empties)]))
    return fixtures


def _hom_fixture_worker(args):
    index, x, p, bound = args
    result = {"instances": 0, "rows": []}
    shape = x.ambient
    sub = x.submodule
    for i in range(0, bound + 1):
        gamma_i = quotient_type(shape, sub, i)
        prefix = transpose(gamma_i)
        for ell in range(1, bound + 1):
            result["instances"] += 1
            lhs = sum(prefix[:ell])
            mid = hom_dim_quotient(shape, sub, i, shape_from_partition((ell,), p))
            rhs = hom_dim_embeddings(x, picket(i, ell, p))
            result["rows"].append([index, list(shape.parts), i, ell, lhs, mid, rhs])
            if not lhs == mid == rhs:
                result["counterexample"] = {
                    "embedding": x.to_json(),
                    "i": i,
                    "ell": ell,
                    "prefix_sum": lhs,
                    "quotient_hom": mid,
                    "picket_hom": rhs,
                }
                return result
    return result


def check_hom_formula(cfg: RunConfig, p: int | None = None) -> CheckReport:
    started = time.time()
    p = p or cfg.field_primes[0]
    bound = min(8, cfg.max_height)
    fixtures = hom_fixture_embeddings(p)
    results = parallel_map(
        _hom_fixture_worker,
        [(k, x, p, bound) for k, x in enumerate(fixtures)],
        cfg.workers,
    )
    report = _merge("hom-formula", results, started)
    if report.passed and len(fixtures) < 200:
        report.passed = False
        report.counterexample = {"reason": f"only {len(fixtures)} fixtures, need 200"}
    return report


# ---------------------------------------------------------------------------
# field independence


_FIELD_DEPENDENT_CHECKS = (
    ("pole-tableau", check_pole_tableau),
    ("dmn-tableau", check_dmn_tableau),
    ("ses-exactness", check_ses_exactness),
    ("ext-witness", check_ext_witness),
    ("hom-formula", check_hom_formula),
)


def check_field_independence(cfg: RunConfig) -> CheckReport:
    started = time.time()
    results = []
    for name, fn in _FIELD_DEPENDENT_CHECKS:
        reports = [fn(cfg, p) for p in cfg.field_primes]
        instances = sum(r.instances for r in reports)
        outcomes = {(r.passed, r.digest) for r in reports}
        result = {"instances": instances, "rows": [[name, reports[0].digest]]}
        if len(outcomes) != 1:
            result["counterexample"] = {
                "check": name,
                "primes": list(cfg.field_primes),
                "digests": [r.digest for r in reports],
                "passed": [r.passed for r in reports],
            }
        elif not reports[0].passed:
            result["counterexample"] = {"check": name, "reason": "underlying check failed"}
        results.append(result)
    return _merge("field-independence", results, started)


def run_check(name: str, cfg: RunConfig) -> CheckReport:
    table = {
        "box-eq-dom": check_box_eq_dom,
        "f-map": check_f_map,
        "phi-orders": check_phi_orders,
        "pole-tableau": check_pole_tableau,
        "dmn-tableau": check_dmn_tableau,
        "ses-exactness": check_ses_exactness,
        "ext-witness": check_ext_witness,
        "hom-formula": check_hom_formula,
        "field-independence": check_field_independence,
    }
    if name not in table:
        raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
    return table[name](cfg)
