"""Identity battery for single diagrams and the randomized move suite."""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations

from vknots.alexander import (
    alexander_suite,
    arc_labeling,
    build_matrix,
    determinant,
    symmetry_relations,
)
from vknots.bounds import w_prime
from vknots.configurations import (
    brute_force_det,
    brute_force_max_size,
    contribution,
    delta0_via_configurations,
    f_polynomials,
    grouped_expansion,
    oracle_max_chords,
)
from vknots.errors import MoveError, NotDivisibleError
from vknots.gauss import GaussDiagram, format_gauss_code, random_diagram, writhe
from vknots.laurent import (
    ALEXANDER_FACTOR,
    ONE_MINUS_UV,
    T,
    UV_INV,
    divide_exact,
)
from vknots.moves import (
    apply_forbidden,
    apply_r3,
    classify_forbidden,
    forbidden_v_delta,
    forbidden_w_delta,
    insert_r1,
    insert_r2,
    insert_r3_pattern,
)
from vknots.smoothing import Configuration, is_alternating
from vknots.writhe import bridge_check, v_polynomial, writhe_invariants

logger = logging.getLogger("vknots.checks")

# (t - 1)(t^-1 - 1)
_W_FACTOR = (T - 1) * (T**-1 - 1)


def _divides(q, p) -> bool:
    try:
        divide_exact(p, q)
    except NotDivisibleError:
        return False
    return True


@dataclass
class CheckResult:
    checks: dict[str, bool] = field(default_factory=dict)
    skipped: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def failures(self) -> list[str]:
        return [name for name, passed in self.checks.items() if not passed]


def run_checks(d: GaussDiagram, with_oracle: bool = True) -> CheckResult:
    """Every per-diagram identity the invariants must satisfy."""
    result = CheckResult()
    checks = result.checks
    suite = alexander_suite(d)
    inv = writhe_invariants(d)
    v = v_polynomial(d)
    w = inv.w

    bridge = bridge_check(d)
    checks["bridge_w"] = bridge.w_ok
    checks["bridge_v"] = bridge.v_ok
    checks["alexander_factor"] = _divides(ALEXANDER_FACTOR, suite.delta0_raw)
    checks["w_factor"] = _divides(_W_FACTOR, w)
    checks["w_at_one"] = w.eval(1) == 0
    checks["w_at_minus_one"] = w.eval(-1) == -2 * inv.odd_writhe
    checks["odd_writhe"] = inv.odd_writhe == 2 * suite.delta0_bar.eval(-1, -1)
    checks["v_at_one"] = v.v_rep.eval(1) == 0
    checks["degree_support"] = all(abs(n) <= d.n for n in inv.wn)
    wr = writhe(d)
    checks["chord_identity"] = all(
        rec.lu + rec.ru + d.chord(cid).sign == wr
        for cid, rec in d.index_table.items()
    )
    checks["symmetry"] = all(
        k is not None for k in symmetry_relations(d).values()
    )

    if not with_oracle:
        result.skipped.append("oracle")
        return result
    if d.size > brute_force_max_size() or d.n > oracle_max_chords():
        result.skipped.append("oracle")
        logger.debug("oracle skipped for %d chords", d.n)
        return result

    raw = suite.delta0_raw
    if d.n:
        matrix = build_matrix(arc_labeling(d), d)
        checks["oracle_brute_force"] = brute_force_det(matrix) == determinant(matrix)
    checks["oracle_configurations"] = delta0_via_configurations(d) == raw
    f0, f1, f2 = f_polynomials(d)
    remainder = raw - (f0 + ONE_MINUS_UV * f1 + ONE_MINUS_UV**2 * f2)
    checks["f_expansion"] = d.n == 0 or _divides(ONE_MINUS_UV**3, remainder)
    if d.n:
        checks["grouped_expansion"] = _grouped_matches(d)
    return result


def _grouped_matches(d: GaussDiagram) -> bool:
    groups = grouped_expansion(d)
    f0 = f_polynomials(d)[0]
    if groups.get(frozenset(), 0) != f0:
        return False
    for m in range(1, d.n + 1):
        for subset in combinations(d.ids, m):
            config = Configuration.of(d, subset)
            group = groups.get(frozenset(subset), 0)
            if is_alternating(d, config):
                if group != contribution(d, config):
                    return False
            elif group != 0:
                return False
    return True


def move_checks(d: GaussDiagram, rng: random.Random) -> CheckResult:
    """Apply one move of each kind at random anchors and compare invariants."""
    result = CheckResult()
    checks = result.checks
    raw = alexander_suite(d).delta0_raw
    w = writhe_invariants(d).w
    v = v_polynomial(d).v_rep

    def same(other: GaussDiagram) -> bool:
        return (
            alexander_suite(other).delta0_raw == raw
            and writhe_invariants(other).w == w
            and v_polynomial(other).v_rep == v
        )

    checks["move_Ia"] = same(insert_r1(d, rng.randint(0, d.size), "Ia"))

    kinked = insert_r1(d, rng.randint(0, d.size), "Ib")
    checks["move_Ib"] = (
        alexander_suite(kinked).delta0_raw == raw * UV_INV
        and writhe_invariants(kinked).w == w
        and v_polynomial(kinked).v_rep == v - w
    )

    checks["move_IIa"] = same(
        insert_r2(d, rng.randint(0, d.size), rng.randint(0, d.size))
    )

    base, triple = insert_r3_pattern(
        d, rng.randint(0, d.size), rng.randint(0, d.size), rng.randint(0, d.size)
    )
    moved = apply_r3(base, triple)
    base_raw = alexander_suite(base).delta0_raw
    c1, c2, c3 = triple
    checks["move_IIIa"] = (
        alexander_suite(moved).delta0_raw == base_raw
        and writhe_invariants(moved).w == writhe_invariants(base).w
        and v_polynomial(moved).v_rep == v_polynomial(base).v_rep
        and all(
            moved.index_table[c].ind == base.index_table[c].ind for c in triple
        )
        and base.index_table[c1].ind + base.index_table[c2].ind
        == base.index_table[c3].ind
    )

    if d.n >= 2:
        checks["move_forbidden"] = _forbidden_matches(d, rng)
    else:
        result.skipped.append("move_forbidden")
    return result


def _forbidden_matches(d: GaussDiagram, rng: random.Random) -> bool:
    candidates = []
    for pos in range(d.size):
        try:
            classify_forbidden(d, pos)
        except MoveError:
            continue
        candidates.append(pos)
    if not candidates:
        return True
    pos = rng.choice(candidates)
    after = apply_forbidden(d, pos)
    w_before = writhe_invariants(d).w
    w_after = writhe_invariants(after).w
    moved = {d.endpoints[pos].chord, d.endpoints[(pos + 1) % d.size].chord}
    untouched = all(
        after.index_table[c] == d.index_table[c] for c in d.ids if c not in moved
    )
    l1_before = w_prime(w_before).shape().coeff_abs_sum
    l1_after = w_prime(w_after).shape().coeff_abs_sum
    return (
        untouched
        and w_after - w_before == forbidden_w_delta(d, pos)
        and v_polynomial(after).v_rep - v_polynomial(d).v_rep
        == forbidden_v_delta(d, pos)
        and abs(l1_after - l1_before) <= 2
    )


@dataclass
class SelftestReport:
    trials: int = 0
    failures: dict[str, int] = field(default_factory=dict)
    examples: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def selftest(max_chords: int, trials: int, seed: int) -> SelftestReport:
    """Run the battery and the move suite over seeded random diagrams."""
    rng = random.Random(seed)
    report = SelftestReport()
    for trial in range(trials):
        d = random_diagram(rng.randint(0, max_chords), rng.randrange(2**32))
        for outcome in (run_checks(d), move_checks(d, rng)):
            for name in outcome.failures:
                report.failures[name] = report.failures.get(name, 0) + 1
                report.examples.setdefault(name, format_gauss_code(d) or "-")
        report.trials += 1
    logger.info(
        "selftest trials=%d failures=%s", report.trials, report.failures or "none"
    )
    return report

