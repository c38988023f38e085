"""Consistency suites comparing independent derivations of the same torsions.

Suites run concurrently on worker threads. Every comparison is an exact
equality of canonical exponents.
"""

import logging
import random
import tempfile
from math import gcd
from pathlib import Path
from typing import Callable, Dict, Iterator, List, Optional, Tuple

import anyio
from anyio import CapacityLimiter, create_task_group, to_thread
from pydantic import BaseModel, Field

from l2alex.cache.store import CacheEntry, TorsionCache
from l2alex.config.settings import CheckConfig, settings
from l2alex.dsl.parser import parse_link
from l2alex.dsl.printer import cache_key, print_link
from l2alex.errors import L2AlexError
from l2alex.fk.determinants import keychain_two_complex, product_with_circle, torsion_two_complex
from l2alex.geometry.norm import dual_ball, evaluate, seminorm_report, sign_enumeration_vertices
from l2alex.links.builder import build_link
from l2alex.models.exponent import ExponentExpr, unit_vector
from l2alex.models.link import (
    Cable,
    ConnectedSum,
    Delete,
    Keychain,
    LinkSpec,
    ParallelInSolidTorus,
    TorusInSolidTorus,
    TorusInThickenedTorus,
    TorusLink,
)
from l2alex.models.torsion import TorsionClass
from l2alex.torsion import compose, formulas, routes
from l2alex.torsion.engine import derive, torsion
from l2alex.torsion.replay import verify

logger = logging.getLogger(__name__)


class SuiteResult(BaseModel):
    """Outcome of one consistency suite."""

    name: str
    cases: int = 0
    failures: List[str] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def expect(self, condition: bool, message: str) -> None:
        self.cases += 1
        if not condition:
            self.failures.append(message)


class CheckReport(BaseModel):
    """Outcome of all suites."""

    suites: List[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    @property
    def cases(self) -> int:
        return sum(s.cases for s in self.suites)

    @property
    def failures(self) -> int:
        return sum(len(s.failures) for s in self.suites)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "cases": self.cases,
            "failures": self.failures,
            "suites": [
                {"name": s.name, "cases": s.cases, "passed": s.passed, "failures": s.failures}
                for s in self.suites
            ],
        }


def coprime_pairs(radius: int) -> Iterator[Tuple[int, int]]:
    for p in range(-radius, radius + 1):
        for q in range(-radius, radius + 1):
            if gcd(p, q) == 1:
                yield p, q


def grid_specs(radius: int) -> List[LinkSpec]:
    """Representative constructor trees over the parameter grid."""
    specs: List[LinkSpec] = []
    for p, q in coprime_pairs(radius):
        for e in (1, 2, 3):
            if e == 1 or p * q != 0:
                specs.append(TorusLink(e=e, p=p, q=q))
            if p != 0:
                specs.append(TorusInSolidTorus(e=e, p=p, q=q))
            specs.append(TorusInThickenedTorus(e=e, p=p, q=q))
    for e in range(1, 5):
        specs.append(Keychain(e=e))
        for k in range(-radius, radius + 1):
            specs.append(ParallelInSolidTorus(e=e, k=k))
    trefoil = TorusLink(e=1, p=2, q=3)
    specs.extend(
        [
            ConnectedSum(left=trefoil, left_comp=1, right=trefoil, right_comp=1),
            ConnectedSum(left=TorusLink(e=2, p=1, q=1), left_comp=2, right=trefoil, right_comp=1),
            ConnectedSum(left=Keychain(e=2), left_comp=3, right=TorusLink(e=3, p=1, q=2), right_comp=1),
            Cable(base=trefoil, comp=1, e=1, p=2, q=3),
            Cable(base=Cable(base=trefoil, comp=1, e=1, p=2, q=3), comp=1, e=2, p=1, q=2),
            Cable(base=TorusInSolidTorus(e=2, p=1, q=1), comp=3, e=2, p=3, q=1),
            Cable(base=Keychain(e=2), comp=1, e=2, p=2, q=1),
            Delete(base=TorusInThickenedTorus(e=2, p=2, q=3), comp=4),
            Delete(base=Delete(base=TorusInThickenedTorus(e=2, p=2, q=3), comp=4), comp=3),
            Delete(base=Keychain(e=2), comp=3),
            Delete(base=Cable(base=Keychain(e=2), comp=1, e=2, p=2, q=1), comp=4),
            Delete(base=ConnectedSum(left=Keychain(e=2), left_comp=3, right=trefoil, right_comp=1), comp=1),
        ]
    )
    return specs


def random_spec(rng: random.Random, depth: int = 2) -> LinkSpec:
    """A random valid constructor tree."""
    while True:
        spec = _random_node(rng, depth)
        try:
            build_link(spec)
        except L2AlexError:
            continue
        return spec


def _random_node(rng: random.Random, depth: int) -> LinkSpec:
    p, q = rng.choice(list(coprime_pairs(3)))
    e = rng.randint(1, 3)
    leaves: List[LinkSpec] = [
        TorusLink(e=e, p=p, q=q),
        TorusInSolidTorus(e=e, p=p, q=q),
        TorusInThickenedTorus(e=e, p=p, q=q),
        Keychain(e=e),
        ParallelInSolidTorus(e=e, k=rng.randint(-3, 3)),
    ]
    if depth <= 0 or rng.random() < 0.4:
        return rng.choice(leaves)
    kind = rng.choice(["sum", "cable", "delete"])
    base = _random_node(rng, depth - 1)
    c = build_link(base).num_components if _valid(base) else 1
    if kind == "sum":
        right = _random_node(rng, depth - 1)
        c_right = build_link(right).num_components if _valid(right) else 1
        return ConnectedSum(left=base, left_comp=rng.randint(1, c), right=right, right_comp=rng.randint(1, c_right))
    if kind == "cable":
        p = rng.choice([-2, -1, 1, 2, 3])
        q = rng.choice([x for x in range(-3, 4) if gcd(p, x) == 1])
        return Cable(base=base, comp=rng.randint(1, c), e=rng.randint(1, 2), p=p, q=q)
    return Delete(base=base, comp=rng.randint(1, c))


def _valid(spec: LinkSpec) -> bool:
    try:
        build_link(spec)
    except L2AlexError:
        return False
    return True


def _nonzero_exponents(radius: int) -> Iterator[Tuple[LinkSpec, ExponentExpr]]:
    for spec in grid_specs(radius):
        result = derive(spec).result
        if result is not None:
            yield spec, result


def check_torus_knots(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="torus_knots")
    for p in range(2, 10):
        for q in range(p + 1, 10):
            if gcd(p, q) != 1:
                continue
            exponent = formulas.torsion_torus_link(1, p, q)
            suite.expect(exponent.evaluate([1]) == p * q - p - q, f"T({p},{q}) exponent at n=1")
            invariant = compose.knot_invariant_exponent(TorsionClass.nonzero(exponent))
            suite.expect(invariant == (p - 1) * (q - 1), f"T({p},{q}) knot invariant {invariant}")
    return suite


def check_torres_grid(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="torres_grid")
    for e in range(1, 5):
        for p, q in coprime_pairs(config.grid_radius):
            if p == 0 or (e >= 2 and q == 0):
                continue
            solid = TorsionClass.nonzero(formulas.torsion_torus_in_solid(e, p, q))
            deleted = compose.torres_delete(solid, [p] * e)
            direct = formulas.torsion_torus_link(e, p, q)
            suite.expect(deleted.exponent == direct, f"H_v deletion from T({e * p},{e * q}) with H_v")
            thick = TorsionClass.nonzero(formulas.torsion_torus_in_thickened(e, p, q))
            deleted_h = compose.torres_delete(thick, [q] * e + [1])
            suite.expect(
                deleted_h.exponent == solid.exponent,
                f"H_h deletion from T({e * p},{e * q}) with H_v and H_h",
            )
    return suite


def check_sub_torus_links(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="sub_torus_links")
    for e in range(3, 6):
        for p, q in coprime_pairs(config.grid_radius):
            if p * q == 0:
                continue
            full = TorsionClass.nonzero(formulas.torsion_torus_link(e, p, q))
            for comp in (1, e):
                deleted = compose.torres_delete(full, [p * q] * (e - 1), comp)
                smaller = formulas.torsion_torus_link(e - 1, p, q)
                suite.expect(deleted.exponent == smaller, f"component {comp} of T({e * p},{e * q})")
            obj = build_link(Delete(base=TorusLink(e=e, p=p, q=q), comp=e))
            suite.expect(
                torsion(obj).symbolic.exponent == formulas.torsion_torus_link(e - 1, p, q),
                f"dispatcher deletion from T({e * p},{e * q})",
            )
    return suite


def check_cabling(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="cabling")
    knot = TorsionClass.nonzero(formulas.torsion_torus_link(1, 1, 0))
    for e in range(1, 5):
        for p, q in coprime_pairs(config.grid_radius):
            if p == 0 or (e >= 2 and q == 0):
                continue
            cabled = compose.cabling_torsion(knot, e, p, q, [])
            suite.expect(
                cabled.exponent == formulas.torsion_torus_link(e, p, q),
                f"({e},{p},{q}) cable of the unknot",
            )
    trefoil = TorsionClass.nonzero(formulas.torsion_torus_link(1, 2, 3))
    cable = compose.cabling_torsion(trefoil, 1, 2, 3, [])
    suite.expect(cable.exponent == ExponentExpr.abs_form([1], 5), "(2,3) cable of the trefoil is 5|n|")
    iterated: List[LinkSpec] = [
        Cable(base=TorusLink(e=1, p=2, q=3), comp=1, e=1, p=2, q=3),
        Cable(base=Cable(base=TorusLink(e=1, p=2, q=3), comp=1, e=1, p=2, q=3), comp=1, e=2, p=1, q=2),
        Cable(base=Cable(base=TorusLink(e=1, p=3, q=2), comp=1, e=2, p=2, q=-1), comp=2, e=1, p=3, q=2),
        Cable(base=TorusInThickenedTorus(e=1, p=2, q=3), comp=2, e=3, p=1, q=1),
    ]
    for spec in iterated:
        direct = derive(spec).result
        glued = routes.route(spec).result
        suite.expect(direct == glued, f"gluing route for {print_link(spec)}")
    return suite


def check_sums(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="connected_sums")
    trefoil = TorusLink(e=1, p=2, q=3)
    granny = derive(ConnectedSum(left=trefoil, left_comp=1, right=trefoil, right_comp=1)).result
    suite.expect(granny == ExponentExpr.abs_form([1], 3), "trefoil # trefoil is 3|n|")
    neutral = TorsionClass.nonzero(formulas.torsion_torus_link(1, 1, 0))
    for spec, exponent in _nonzero_exponents(config.grid_radius):
        if exponent.nvars > 4:
            continue
        summed = compose.connected_sum_torsion(TorsionClass.nonzero(exponent), neutral)
        suite.expect(summed.exponent == exponent, f"{print_link(spec)} # unknot")
    knots = [(p, q) for p in range(2, 6) for q in range(p + 1, 8) if gcd(p, q) == 1]
    for p1, q1 in knots:
        for p2, q2 in knots:
            spec = ConnectedSum(
                left=TorusLink(e=1, p=p1, q=q1), left_comp=1, right=TorusLink(e=1, p=p2, q=q2), right_comp=1
            )
            total = compose.knot_invariant_exponent(derive(spec).torsion)
            expected = (p1 - 1) * (q1 - 1) + (p2 - 1) * (q2 - 1)
            suite.expect(total == expected, f"knot invariant of T({p1},{q1}) # T({p2},{q2})")
    return suite


def check_keychain(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="keychain_products")
    for e in range(1, 9):
        closed = formulas.torsion_keychain(e)
        product = product_with_circle([1, e], tuple(unit_vector(e, e + 1)))
        complex_ = torsion_two_complex(keychain_two_complex(e, tuple(unit_vector(e, e + 1))))
        suite.expect(closed == product, f"keychain {e} against the punctured disc product")
        suite.expect(closed == complex_, f"keychain {e} against its two-complex")
    return suite


def check_normalization(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="t1_normalization")
    rng = random.Random(config.seed)
    for spec, exponent in _nonzero_exponents(config.grid_radius):
        n = [rng.randint(-5, 5) for _ in range(exponent.nvars)]
        value = TorsionClass.nonzero(exponent).representative(1, n)
        suite.expect(value == 1, f"{print_link(spec)} at t=1")
    return suite


def check_surgery(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="surgery")
    rng = random.Random(config.seed)
    for _ in range(50):
        a, b = rng.randint(-50, 50), rng.randint(-50, 50)
        value = compose.surgery_correction(1, 0, 0, 1, a, b)
        suite.expect(value == ExponentExpr.const(abs(b)), f"filling correction ({a},{b})")
    for n in range(-10, 11):
        value = compose.surgery_correction(1, n, 0, 1, rng.randint(-9, 9), 0)
        suite.expect(value == ExponentExpr.const(0), f"twist surgery n={n}")
    return suite


def check_norm_geometry(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="norm_geometry")
    rng = random.Random(config.seed)
    ball = dual_ball(formulas.torsion_torus_link(2, 2, 1))
    suite.expect(ball.vertices == [(1, 1), (-1, -1)], "dual ball of T(4,2)")
    for spec, exponent in _nonzero_exponents(config.grid_radius):
        if exponent.nvars > settings.geometry.max_dimension:
            continue
        if not seminorm_report(exponent).is_seminorm:
            continue
        zonotope = dual_ball(exponent)
        hull = set(sign_enumeration_vertices(zonotope.generators, exponent.nvars))
        suite.expect(set(zonotope.vertices) <= hull, f"{print_link(spec)} vertices are sign sums")
        negated = {tuple(-x for x in v) for v in zonotope.vertices}
        suite.expect(negated == set(zonotope.vertices), f"{print_link(spec)} central symmetry")
        samples = [tuple(rng.randint(-7, 7) for _ in range(exponent.nvars)) for _ in range(200)]
        bad = [n for n in samples if evaluate(exponent, n) != zonotope.support(n)]
        suite.expect(not bad, f"{print_link(spec)} support function at {bad[:1]}")
    return suite


def check_routes(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="derivation_routes")
    suite.expect(routes.unknot_route().result == formulas.torsion_torus_link(1, 1, 0), "unknot as a solid torus")
    suite.expect(
        routes.unknot_two_complex_route().result == formulas.torsion_torus_link(1, 1, 0),
        "unknot from its two-complex",
    )
    suite.expect(routes.hopf_route().result == formulas.torsion_torus_link(2, 1, 1), "Hopf link as T^2 x I")
    for spec in grid_specs(config.grid_radius):
        direct = derive(spec)
        alternative = routes.route(spec)
        suite.expect(direct.result == alternative.result, f"route for {print_link(spec)}")
        suite.expect(verify(direct) and verify(alternative), f"replay for {print_link(spec)}")
    return suite


def check_canonicalization(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="canonicalization")
    rng = random.Random(config.seed)
    for _ in range(config.random_cases):
        nvars = rng.randint(1, 4)
        raw = [
            (rng.randint(-4, 4), [rng.randint(-3, 3) for _ in range(nvars)])
            for _ in range(rng.randint(0, 5))
        ]
        exponent = ExponentExpr(nvars=nvars, terms=raw)
        again = ExponentExpr(nvars=nvars, terms=exponent.terms)
        shuffled = list(raw)
        rng.shuffle(shuffled)
        negated = [(c, [-x for x in f]) for c, f in shuffled]
        suite.expect(
            again == exponent == ExponentExpr(nvars=nvars, terms=negated),
            f"canonical form of {raw}",
        )
    return suite


def check_substitution(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="substitution_evaluation")
    rng = random.Random(config.seed + 1)
    for _ in range(config.random_cases):
        old, new = rng.randint(1, 4), rng.randint(1, 4)
        exponent = ExponentExpr(
            nvars=old,
            terms=[(rng.randint(-3, 3), [rng.randint(-3, 3) for _ in range(old)]) for _ in range(3)],
            constant=rng.randint(-2, 2),
        )
        matrix = [[rng.randint(-2, 2) for _ in range(new)] for _ in range(old)]
        n = [rng.randint(-5, 5) for _ in range(new)]
        image = [sum(row[j] * n[j] for j in range(new)) for row in matrix]
        suite.expect(
            exponent.substitute(matrix, new).evaluate(n) == exponent.evaluate(image),
            f"substitution of {matrix} into {exponent}",
        )
    return suite


def check_sign_symmetry(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="sign_symmetry")
    rng = random.Random(config.seed + 2)
    # Zero classes carry no exponent; draw until enough nonzero ones are checked
    while suite.cases < config.random_cases:
        spec = random_spec(rng)
        result = derive(spec).result
        if result is None:
            continue
        n = [rng.randint(-6, 6) for _ in range(result.nvars)]
        suite.expect(
            result.evaluate(n) == result.evaluate([-x for x in n]),
            f"{print_link(spec)} at {n}",
        )
    return suite


def check_parser_round_trip(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="parser_round_trip")
    rng = random.Random(config.seed + 3)
    for _ in range(config.random_cases):
        spec = random_spec(rng)
        text = print_link(spec)
        reparsed = parse_link(text)
        suite.expect(reparsed == spec and print_link(reparsed) == text, f"round trip of {text}")
    return suite


def check_cache_coherence(config: CheckConfig) -> SuiteResult:
    suite = SuiteResult(name="cache_coherence")
    rng = random.Random(config.seed + 4)
    with tempfile.TemporaryDirectory() as tmp:
        cache = TorsionCache(Path(tmp) / "torsions.jsonl")
        specs = grid_specs(config.grid_radius)
        specs += [random_spec(rng) for _ in range(max(0, config.random_cases - len(specs)))]
        for spec in specs:
            step = derive(spec)
            cache.store(CacheEntry.for_spec(spec, step.torsion, step.digest()))
        for spec in specs:
            entry = cache.lookup(cache_key(spec))
            fresh = derive(spec).torsion
            suite.expect(entry is not None and entry.torsion == fresh, f"cached {print_link(spec)}")
    return suite


SUITES: Dict[str, Callable[[CheckConfig], SuiteResult]] = {
    "torus_knots": check_torus_knots,
    "torres_grid": check_torres_grid,
    "sub_torus_links": check_sub_torus_links,
    "cabling": check_cabling,
    "connected_sums": check_sums,
    "keychain_products": check_keychain,
    "t1_normalization": check_normalization,
    "surgery": check_surgery,
    "norm_geometry": check_norm_geometry,
    "derivation_routes": check_routes,
    "canonicalization": check_canonicalization,
    "substitution_evaluation": check_substitution,
    "sign_symmetry": check_sign_symmetry,
    "parser_round_trip": check_parser_round_trip,
    "cache_coherence": check_cache_coherence,
}


def _guarded(name: str, fn: Callable[[CheckConfig], SuiteResult], config: CheckConfig) -> SuiteResult:
    try:
        return fn(config)
    except Exception as exc:
        logger.exception("Suite %s raised", name)
        return SuiteResult(name=name, cases=1, failures=[f"raised {type(exc).__name__}: {exc}"])


async def _run_suites(config: CheckConfig, names: List[str]) -> List[SuiteResult]:
    limiter = CapacityLimiter(config.workers)
    results: Dict[str, SuiteResult] = {}

    async def run_one(name: str) -> None:
        results[name] = await to_thread.run_sync(
            _guarded, name, SUITES[name], config, limiter=limiter
        )
        logger.info("Suite %s: %d cases, %d failures", name, results[name].cases, len(results[name].failures))

    async with create_task_group() as tg:
        for name in names:
            tg.start_soon(run_one, name)
    return [results[name] for name in names]


def run_checks(config: Optional[CheckConfig] = None, names: Optional[List[str]] = None) -> CheckReport:
    """Run the consistency suites concurrently.

    Args:
        config: Check configuration, defaults to the global settings
        names: Subset of suites to run, all when omitted

    Returns:
        Report with per-suite case and failure counts

    Raises:
        ValueError: A requested suite does not exist
    """
    config = config or settings.checks
    selected = names or list(SUITES)
    unknown = [name for name in selected if name not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {', '.join(unknown)}")
    return CheckReport(suites=anyio.run(_run_suites, config, selected))
