"""
Exhaustive theorem sweeps over S_n (or over all labelled graphs).

Each sweep checks one statement on every subject up to a size bound and
collects counterexamples.  Work is split into chunks that can run in a
process pool; results are merged and sorted, so a report does not depend
on the number of jobs.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import islice
from typing import Callable, Iterable, Iterator

from .arrangement import inversion_graph, recurrence_step, region_polynomial_w
from .bruhat import interval_rank_counts, poincare_polynomial
from .graph import (SimpleGraph, all_graphs, chromatic_polynomial, exponents_of_ordering,
                    find_nice_peo, find_peo)
from .perm import (Permutation, all_permutations, avoids_hlss_patterns, exponents_by_records,
                   is_smooth, simple_peo_order)
from .poly import QPolynomial, is_palindromic, q_number, q_number_product

__all__ = [
    "VerificationReport", "THEOREMS", "GRAPH_THEOREMS", "DEFAULT_MAX_N", "LARGE_MAX_N",
    "GRAPH_MAX_N", "ResourceLimitError", "check_permutation", "check_graph", "verify",
]

DEFAULT_MAX_N = 7
LARGE_MAX_N = 8
GRAPH_MAX_N = 6

# one-line result of a single check: (checked, ok, expected, actual, tags)
Outcome = tuple[bool, bool, str, str, tuple[str, ...]]


class ResourceLimitError(ValueError):
    pass


@dataclass
class VerificationReport:
    theorem_id: str
    n_range: list[int]
    checked: int = 0
    passed: int = 0
    counterexamples: list[tuple[str, str, str]] = field(default_factory=list)
    wall_time: float = 0.0
    details: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2)

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        data = json.loads(text)
        data["counterexamples"] = [tuple(c) for c in data["counterexamples"]]
        return cls(**data)

    def summary(self) -> str:
        ns = ",".join(map(str, self.n_range))
        status = "PASS" if self.ok else "FAIL"
        lines = [f"{self.theorem_id}: {status}  n in {{{ns}}}  checked={self.checked} "
                 f"passed={self.passed}  ({self.wall_time:.1f}s)"]
        for key in sorted(self.details):
            lines.append(f"  {key}: {self.details[key]}")
        for subject, expected, actual in self.counterexamples[:20]:
            lines.append(f"  counterexample {subject}: expected {expected}; got {actual}")
        if len(self.counterexamples) > 20:
            lines.append(f"  ... {len(self.counterexamples) - 20} more")
        return "\n".join(lines)


def _skip() -> Outcome:
    return False, True, "", "", ()


def _p_eq_r(w: Permutation) -> Outcome:
    smooth = is_smooth(w)
    P = poincare_polynomial(w)
    R = region_polynomial_w(w)
    ok = (P == R) == smooth
    expected = "P_w == R_w" if smooth else "P_w != R_w"
    return True, ok, expected, f"P_w = {P}; R_w = {R}", ("smooth",) if smooth else ()


def _hlss(w: Permutation) -> Outcome:
    B = sum(interval_rank_counts(w))
    R = region_polynomial_w(w)(1)
    avoids = avoids_hlss_patterns(w)
    ok = R <= B and (R == B) == avoids
    expected = "R_w == B_w" if avoids else "R_w < B_w"
    tags = tuple(t for t, on in (("equal", R == B), ("avoider", avoids)) if on)
    return True, ok, expected, f"R_w = {R}, B_w = {B}", tags


def _formula(w: Permutation) -> Outcome:
    if not is_smooth(w):
        return _skip()
    exps = exponents_by_records(w)
    prod = q_number_product(e + 1 for e in exps)
    R = region_polynomial_w(w)
    P = poincare_polynomial(w)
    ok = P == R == prod
    return True, ok, f"prod [e_i+1]_q with e = {exps}: {prod}", f"P_w = {P}; R_w = {R}", ()


def _palindromic_r(w: Permutation) -> Outcome:
    R = region_polynomial_w(w)
    return True, is_palindromic(R), "palindromic R_w", str(R), ()


def _simple_peo(w: Permutation) -> Outcome:
    if not is_smooth(w):
        return _skip()
    order = simple_peo_order(w)
    result = exponents_of_ordering(inversion_graph(w).graph, order)
    return True, result.is_peo, f"{order} is a PEO of G_w", "not a PEO", ()


def _chordal_smooth(w: Permutation) -> Outcome:
    if not is_smooth(w):
        return _skip()
    G = inversion_graph(w).graph
    peo = find_peo(G)
    nice = find_nice_peo(G)
    ok = peo is not None and nice is not None
    actual = f"chordal={peo is not None}, nice PEO={nice is not None}"
    return True, ok, "G_w chordal with a nice PEO", actual, ()


def _recurrence(w: Permutation) -> Outcome:
    if w.n < 2 or not is_smooth(w):
        return _skip()
    step = recurrence_step(w)
    factor = q_number(step.m + 1)
    P, R = poincare_polynomial(w), region_polynomial_w(w)
    Pp, Rp = poincare_polynomial(step.w_prime), region_polynomial_w(step.w_prime)
    ok = P == factor * Pp and R == factor * Rp
    expected = f"case {step.case}: [{step.m + 1}]_q times the values at {step.w_prime}"
    return True, ok, expected, f"P_w = {P}; R_w = {R}", (f"case{step.case}",)


def _chromatic_roots(G) -> Outcome:
    peo = find_peo(G)
    if peo is None:
        return _skip()
    t = QPolynomial((0, 1))
    prod = QPolynomial.one()
    for e in peo.exponents:
        prod = prod * (t - e)
    chi = chromatic_polynomial(G)
    ok = chi == prod
    nice = find_nice_peo(G)
    if nice is not None:
        ok = ok and sorted(nice.exponents) == sorted(peo.exponents)
    expected = f"prod (t - e_i), e = {sorted(peo.exponents)}"
    return True, ok, expected, f"chi = {chi.to_text('t')}", ()


THEOREMS: dict[str, Callable[[Permutation], Outcome]] = {
    "p-eq-r": _p_eq_r,
    "hlss": _hlss,
    "formula": _formula,
    "palindromic-r": _palindromic_r,
    "simple-peo": _simple_peo,
    "chordal-smooth": _chordal_smooth,
    "recurrence": _recurrence,
}

GRAPH_THEOREMS = {
    "chromatic-roots": _chromatic_roots,
}


def check_permutation(theorem_id: str, w: Permutation) -> Outcome:
    return THEOREMS[theorem_id](w)


def check_graph(theorem_id: str, G) -> Outcome:
    return GRAPH_THEOREMS[theorem_id](G)


def _run_chunk(args) -> tuple[int, int, list[tuple[str, str, str]], Counter]:
    theorem_id, kind, n, items = args
    checked = passed = 0
    bad = []
    tags: Counter = Counter()
    for item in items:
        if kind == "perm":
            subject = Permutation._trusted(item)
            out = check_permutation(theorem_id, subject)
        else:
            subject = SimpleGraph(n, frozenset(item))
            out = check_graph(theorem_id, subject)
        did, ok, expected, actual, t = out
        if not did:
            continue
        checked += 1
        tags.update(t)
        if ok:
            passed += 1
        else:
            label = str(subject) if kind == "perm" else subject.to_text()
            bad.append((label, expected, actual))
    return checked, passed, bad, tags


def _chunks(it: Iterable, size: int) -> Iterator[list]:
    it = iter(it)
    while chunk := list(islice(it, size)):
        yield chunk


def verify(theorem_id: str, max_n: int, jobs: int = 1, allow_large: bool = False,
           min_n: int = 1, chunk_size: int = 240) -> VerificationReport:
    """Sweep one statement over sizes min_n..max_n."""
    if theorem_id in THEOREMS:
        kind, ceiling = "perm", (LARGE_MAX_N if allow_large else DEFAULT_MAX_N)
    elif theorem_id in GRAPH_THEOREMS:
        kind, ceiling = "graph", (GRAPH_MAX_N + 1 if allow_large else GRAPH_MAX_N)
    else:
        raise KeyError(f"unknown theorem id {theorem_id!r}")
    if max_n > ceiling:
        raise ResourceLimitError(f"max n {max_n} exceeds the ceiling {ceiling} for {theorem_id}")

    start = time.perf_counter()
    ns = list(range(min_n, max_n + 1))
    tasks = []
    for n in ns:
        if kind == "perm":
            source = (w.values for w in all_permutations(n))
        else:
            source = (tuple(G.edges) for G in all_graphs(n))
        tasks += [(theorem_id, kind, n, chunk) for chunk in _chunks(source, chunk_size)]

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_chunk, tasks))
    else:
        results = [_run_chunk(t) for t in tasks]

    report = VerificationReport(theorem_id, ns)
    tags: Counter = Counter()
    for checked, passed, bad, t in results:
        report.checked += checked
        report.passed += passed
        report.counterexamples.extend(bad)
        tags.update(t)
    report.counterexamples.sort(key=lambda c: (len(c[0]), c))
    report.details = dict(sorted(tags.items()))
    report.wall_time = time.perf_counter() - start
    return report
