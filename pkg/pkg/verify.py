"""
dpwheel - Verification suites

Runs named suites of checks over a range of n and collects a Report.
Each check compares a constructive or closed-form computation against a
brute-force oracle and records a witness for the first disagreement.

Suites (definitions in config/verify-suites.yaml):
- distances: closed-form wheel distance against BFS
- characterization: maximal-arc membership test, small-n collapse, units,
  DP of paths, cycles and complete graphs, Psi as an isomorphism
- split: hub placement in DPW_n
- generation: closures of the named generating sets
- green: D-classes against the structure theorems, both Green algorithms
- factorization: constructive words evaluate back to their element
- rank: upper and lower bounds, exact search for DPW_4 and DPW_5^-
"""

import logging
import random
import time
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from pkg.config import DPWConfig, SuiteDefinitions
from pkg.errors import CapExceededError, ConfigError, DPWError, InvalidParameterError
from pkg.factor import N4_E0, FullFactorizer, Word, evaluate
from pkg.gens import E0, build, genset_full, genset_minus
from pkg.graphs import complete, cycle, distance_bfs, path, wheel, wheel_distance
from pkg.green import check_theorem, green
from pkg.isometry import (
    dihedral,
    di_elements,
    enumerate_dp,
    is_line_isometry,
    is_partial_isometry,
    partial_injections,
    sample_partial_injection,
)
from pkg.monoids import WheelMonoids
from pkg.ptrans import PartialInjection, compose, omega, omega0
from pkg.rank import rank_exact, rank_lower_full, rank_lower_minus, rank_upper
from pkg.report import CheckResult, Report, ReportEnvelope
from pkg.wheel import char_member_minus, embed, psi, split_lemma_check

logger = logging.getLogger(__name__)

N_MIN = 4
# DPW_n rank bounds are checked up to this n
RANK_FULL_MAX_N = 7

CheckFn = Callable[[int], List[CheckResult]]


class Verifier:
    """Runs checks for one n at a time, sharing enumerations between checks"""

    def __init__(self, config: Optional[DPWConfig] = None, workers: Optional[int] = None):
        self.config = config or DPWConfig()
        self.workers = workers if workers is not None else self.config.workers
        self.suites = SuiteDefinitions()
        self._monoids: Dict[int, WheelMonoids] = {}
        self.timings: Dict[str, float] = {}
        self.checks: Dict[str, CheckFn] = {
            "wheel-distance": self.check_wheel_distance,
            "char-minus": self.check_char_minus,
            "small-n-collapse": self.check_small_n_collapse,
            "units": self.check_units,
            "dp-path": self.check_dp_path,
            "dp-cycle": self.check_dp_cycle,
            "dp-complete": self.check_dp_complete,
            "psi-isomorphism": self.check_psi_isomorphism,
            "split-lemma": self.check_split_lemma,
            "gen-minus": lambda n: self.check_generation(n, "minus"),
            "gen-plus": lambda n: self.check_generation(n, "plus"),
            "gen-union": lambda n: self.check_generation(n, "union"),
            "gen-full": lambda n: self.check_generation(n, "full"),
            "modes-agree": self.check_modes_agree,
            "theorem-J-minus": lambda n: self.check_green(n, "theorem-J-minus", "minus"),
            "theorem-J-plus": lambda n: self.check_green(n, "theorem-J-plus", "plus"),
            "theorem-J-union": lambda n: self.check_green(n, "theorem-J-union", "union"),
            "theorem-J": lambda n: self.check_green(n, "theorem-J", "full"),
            "factor-full": self.check_factor_full,
            "e0-identity": self.check_e0_identity,
            "rank-minus": self.check_rank_minus,
            "rank-full": self.check_rank_full,
            "rank-exact": self.check_rank_exact,
        }

    def monoids(self, n: int) -> WheelMonoids:
        if n not in self._monoids:
            self._monoids[n] = WheelMonoids(
                n,
                vertex_cap=self.config.vertex_cap,
                element_cap=self.config.element_cap,
                workers=self.workers,
            )
        return self._monoids[n]

    def _rng(self, n: int, check: str) -> random.Random:
        return random.Random(f"{self.config.seed}:{check}:{n}")

    def suite_checks(self, suite: str) -> List[str]:
        if suite == "all":
            names: List[str] = []
            for name in self.suites.names():
                names.extend(c for c in self.suites.checks(name) if c not in names)
            return names
        return self.suites.checks(suite)

    def default_range(self, suite: str) -> Tuple[int, int]:
        if suite == "all":
            spans = [self.default_range(name) for name in self.suites.names()]
            return min(a for a, _ in spans), max(b for _, b in spans)
        data = self.suites.get_suite(suite)
        return int(data.get("n_min", N_MIN)), int(data.get("n_max", N_MIN))

    def run(self, suite: str, n_min: Optional[int] = None, n_max: Optional[int] = None) -> Report:
        default_min, default_max = self.default_range(suite)
        n_min = default_min if n_min is None else n_min
        n_max = default_max if n_max is None else n_max
        if not N_MIN <= n_min <= n_max:
            raise InvalidParameterError(f"need {N_MIN} <= n_min <= n_max, got {n_min}..{n_max}")
        if n_max > self.config.n_cap:
            raise CapExceededError(f"n_max = {n_max}", self.config.n_cap)
        names = self.suite_checks(suite)
        unknown = [c for c in names if c not in self.checks]
        if unknown:
            raise ConfigError(f"suite {suite!r} names unknown checks: {', '.join(unknown)}")

        results: List[CheckResult] = []
        for n in range(n_min, n_max + 1):
            for name in names:
                logger.debug("running %s for n = %d", name, n)
                start = time.perf_counter()
                try:
                    results.extend(self.checks[name](n))
                except CapExceededError as e:
                    results.append(CheckResult.inconclusive(name, n, str(e)))
                except DPWError as e:
                    results.append(CheckResult.of(name, n, False, detail=f"{type(e).__name__}: {e}"))
                self.timings[f"{name}/n={n}"] = round(time.perf_counter() - start, 6)
        report = Report.build(suite, n_min, n_max, results)
        logger.info("suite %s: %s over %d checks", suite, report.status.value, len(results))
        return report

    def envelope(self, report: Report) -> ReportEnvelope:
        return ReportEnvelope(report=report, timings=dict(sorted(self.timings.items())))

    # distances

    def check_wheel_distance(self, n: int) -> List[CheckResult]:
        G = wheel(n)
        bad = None
        pairs = 0
        for u in G.vertices:
            for v in G.vertices:
                pairs += 1
                if bad is None and wheel_distance(n, u, v) != distance_bfs(G, u, v):
                    bad = {"u": u, "v": v, "closed_form": wheel_distance(n, u, v), "bfs": distance_bfs(G, u, v)}
        return [CheckResult.of("wheel-distance", n, bad is None, pairs, witness=bad)]

    # characterization

    def _rim_maps(self, n: int, check: str) -> Tuple[Iterable[PartialInjection], str]:
        if n <= self.config.verify_setting("char_exhaustive_max_n"):
            return partial_injections(omega(n)), "exhaustive"
        size = self.config.verify_setting("char_sample_size")
        rng = self._rng(n, check)
        return (sample_partial_injection(omega(n), rng) for _ in range(size)), f"{size} samples"

    def check_char_minus(self, n: int) -> List[CheckResult]:
        G = wheel(n)
        maps, how = self._rim_maps(n, "char-minus")
        count = 0
        bad = None
        for alpha in maps:
            count += 1
            if char_member_minus(n, alpha) != is_partial_isometry(G, embed(alpha)):
                bad = alpha
                break
        return [CheckResult.of("char-minus", n, bad is None, count, detail=how, witness=bad)]

    def check_small_n_collapse(self, n: int) -> List[CheckResult]:
        m = self.monoids(n)
        minus, di = m.minus, m.di
        if n <= 5:
            extra = next(iter(sorted(minus ^ di, key=lambda x: x.sort_key())), None)
            return [CheckResult.of("small-n-collapse", n, minus == di, len(minus), "DPW_n^- = DI_n", extra)]
        return [
            CheckResult.of(
                "small-n-collapse",
                n,
                di < minus,
                len(minus) - len(di),
                "DI_n is a proper submonoid of DPW_n^-",
            )
        ]

    def check_units(self, n: int) -> List[CheckResult]:
        m = self.monoids(n)
        group = frozenset(dihedral(n).elements)
        rim_units = frozenset(x for x in m.minus if x.rank == n)
        units = [x for x in m.full if x.rank == n + 1]
        off = next((x for x in units if x.mapping[0] != 0), None)
        ok = rim_units == group and off is None and frozenset(psi(x) for x in units) == group
        return [
            CheckResult.of("units", n, ok, len(units), f"{len(units)} units, {len(rim_units)} rim units", off),
        ]

    def _dp_check(
        self,
        name: str,
        n: int,
        found: Iterable[PartialInjection],
        expected: Iterable[PartialInjection],
    ) -> List[CheckResult]:
        found_set, expected_set = frozenset(found), frozenset(expected)
        diff = sorted(found_set ^ expected_set, key=lambda x: x.sort_key())
        return [CheckResult.of(name, n, not diff, len(found_set), witness=diff[0] if diff else None)]

    def check_dp_path(self, n: int) -> List[CheckResult]:
        found = enumerate_dp(path(n), cap=self.config.vertex_cap, workers=self.workers)
        expected = (x for x in partial_injections(omega(n)) if is_line_isometry(x))
        return self._dp_check("dp-path", n, found, expected)

    def check_dp_cycle(self, n: int) -> List[CheckResult]:
        found = enumerate_dp(cycle(n), cap=self.config.vertex_cap, workers=self.workers)
        return self._dp_check("dp-cycle", n, found, di_elements(n))

    def check_dp_complete(self, n: int) -> List[CheckResult]:
        found = enumerate_dp(complete(n), cap=self.config.vertex_cap, workers=self.workers)
        return self._dp_check("dp-complete", n, found, partial_injections(omega(n)))

    def check_psi_isomorphism(self, n: int) -> List[CheckResult]:
        m = self.monoids(n)
        plus = sorted(m.plus, key=lambda x: x.sort_key())
        images = {psi(x) for x in plus}
        bijective = len(images) == len(plus) and images == m.minus
        if n <= self.config.verify_setting("psi_exhaustive_max_n"):
            pairs: Iterable[Tuple[PartialInjection, PartialInjection]] = ((a, b) for a in plus for b in plus)
            how = "exhaustive"
        else:
            size = self.config.verify_setting("factor_sample_size")
            rng = self._rng(n, "psi-isomorphism")
            pairs = ((rng.choice(plus), rng.choice(plus)) for _ in range(size))
            how = f"{size} sampled pairs"
        bad = None
        count = 0
        for a, b in pairs:
            count += 1
            if psi(compose(a, b)) != compose(psi(a), psi(b)):
                bad = {"left": a, "right": b}
                break
        return [
            CheckResult.of("psi-bijection", n, bijective, len(plus)),
            CheckResult.of("psi-homomorphism", n, bad is None, count, detail=how, witness=bad),
        ]

    # split

    def check_split_lemma(self, n: int) -> List[CheckResult]:
        m = self.monoids(n)
        bad = None
        violated: List[str] = []
        for alpha in m.dpw:
            violated = split_lemma_check(n, alpha)
            if violated:
                bad = alpha
                break
        tall = next((x for x in m.outside if x.rank > 4), None)
        return [
            CheckResult.of("split-lemma", n, bad is None, len(m.dpw), ", ".join(violated), bad),
            CheckResult.of("outside-rank", n, tall is None, len(m.outside), "Outside elements have rank <= 4", tall),
        ]

    # generation

    def check_generation(self, n: int, name: str) -> List[CheckResult]:
        m = self.monoids(n)
        closure = m.closure(name)
        target = m.target(name)
        diff = sorted(closure.element_set ^ target, key=lambda x: x.sort_key())
        return [
            CheckResult.of(
                f"gen-{name}",
                n,
                not diff,
                len(closure),
                f"{len(closure)} generated, {len(target)} enumerated",
                diff[0] if diff else None,
            )
        ]

    # green

    def check_modes_agree(self, n: int) -> List[CheckResult]:
        closure = self.monoids(n).closure("full")
        a = green(closure, "by-dom-im").partitions()
        b = green(closure, "by-ideals").partitions()
        return [
            CheckResult.of(f"modes-agree-{rel}", n, a[rel] == b[rel], len(a[rel]), f"{rel}-classes")
            for rel in ("L", "R", "H", "D")
        ]

    def check_green(self, n: int, theorem: str, monoid: str) -> List[CheckResult]:
        if theorem == "theorem-J" and n < 5:
            return []
        closure = self.monoids(n).closure(monoid)
        return check_theorem(theorem, n, closure, green(closure))

    # factorization

    def check_factor_full(self, n: int) -> List[CheckResult]:
        m = self.monoids(n)
        factorizer = FullFactorizer(n)
        elements = m.dpw
        how = "exhaustive"
        if n > self.config.verify_setting("factor_exhaustive_max_n"):
            size = min(self.config.verify_setting("factor_sample_size"), len(elements))
            elements = self._rng(n, "factor-full").sample(elements, size)
            how = f"{size} samples"
        bad = None
        longest = 0
        for alpha in elements:
            word = factorizer.factor(alpha)
            longest = max(longest, len(word))
            if evaluate(word) != alpha:
                bad = {"element": alpha, "word": word.to_list()}
                break
        return [CheckResult.of("factor-full", n, bad is None, len(elements), f"{how}, longest word {longest}", bad)]

    def check_e0_identity(self, n: int) -> List[CheckResult]:
        if n != 4:
            return []
        e0 = build(4, E0)
        word = FullFactorizer(4).factor(e0)
        ok = word.labels == N4_E0 and evaluate(Word(4, True, N4_E0)) == e0
        return [CheckResult.of("e0-identity", n, ok, len(word), str(word), None if ok else {"word": word.to_list()})]

    # rank

    def check_rank_minus(self, n: int) -> List[CheckResult]:
        m = self.monoids(n)
        gens = genset_minus(n)
        upper = rank_upper(omega(n), gens, m.minus, cap=self.config.element_cap)
        closure = m.closure("minus")
        results = [CheckResult.of("rank-minus-upper", n, upper.ok, len(gens), witness=upper.witness)]
        if not upper.ok:
            return results
        lower = rank_lower_minus(n, closure, m.minus)
        expected = n // 2 + 1
        results.extend(lower.claims)
        results.append(
            CheckResult.of(
                "rank-minus",
                n,
                lower.holds and lower.value == len(gens) == expected,
                lower.value,
                f"lower {lower.value}, upper {len(gens)}, expected {expected}",
            )
        )
        return results

    def check_rank_full(self, n: int) -> List[CheckResult]:
        if n == 4 or n > RANK_FULL_MAX_N:
            return []
        m = self.monoids(n)
        gens = genset_full(n)
        upper = rank_upper(omega0(n), gens, m.full, cap=self.config.element_cap)
        results = [CheckResult.of("rank-full-upper", n, upper.ok, len(gens), witness=upper.witness)]
        if not upper.ok:
            return results
        lower = rank_lower_full(n, m.closure("full"), m.full)
        expected = n // 2 + 3
        results.extend(lower.claims)
        results.append(
            CheckResult.of(
                "rank-full",
                n,
                lower.holds and lower.value == len(gens) == expected,
                lower.value,
                f"lower {lower.value}, upper {len(gens)}, expected {expected}",
            )
        )
        return results

    def check_rank_exact(self, n: int) -> List[CheckResult]:
        if n == 4:
            name, monoid, expected = "rank-exact-full", "full", 4
        elif n == 5:
            name, monoid, expected = "rank-exact-minus", "minus", 3
        else:
            return []
        search = rank_exact(self.monoids(n).closure(monoid), self.config.search_budget)
        if search.inconclusive:
            return [CheckResult.inconclusive(name, n, f"search budget exhausted after {search.closures_tried} closures")]
        return [
            CheckResult.of(
                name,
                n,
                search.value == expected,
                search.closures_tried,
                f"rank {search.value}, expected {expected}",
                None if search.value == expected else {"rank": search.value},
            )
        ]


def cmd_verify(
    suite: str,
    n_min: Optional[int] = None,
    n_max: Optional[int] = None,
    config: Optional[DPWConfig] = None,
    workers: Optional[int] = None,
) -> ReportEnvelope:
    verifier = Verifier(config, workers=workers)
    if suite != "all" and suite not in verifier.suites.names():
        raise InvalidParameterError(f"unknown suite {suite!r}; choose from all, {', '.join(verifier.suites.names())}")
    report = verifier.run(suite, n_min, n_max)
    return verifier.envelope(report)
