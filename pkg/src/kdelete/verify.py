"""Invariant suite tying every guarantee to an independent check.

Three nested size tiers: "tiny" finishes within a minute, "small" covers the
full structured corpora, "desk" adds the large clique-free instances and
exhaustive sweeps.  Each check either returns a detail string or raises;
failures are collected, never swallowed, and the CLI exits nonzero if any
check fails.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from time import perf_counter
from typing import Callable

from . import corpus
from .bounds import E_LOWER
from .cliquefree import (
    partition_clique_free,
    partition_triangle_free,
    partition_wheel_free,
)
from .constructions import (
    blow_up,
    complete,
    complete_bipartite,
    cycle,
    mixing_check,
    petersen,
    second_eigenvalue,
    spectral_lower_bound,
)
from .cover import exact_u, select_cover
from .graphs import odd_girth
from .maxcut import (
    d_l_complete,
    coarsen_cut,
    local_search_cut,
    max_k_cut_exact,
    maxcut_dense_driver,
    maxcut_odd_cycle_free,
)
from .oddgirth import (
    partition_odd_cycle_free,
    partition_odd_girth,
    scrub_short_odd_cycles,
)
from .oracle import exact_h, mantel_worst_uncovered, min_uncovered_single

TIERS = ("tiny", "small", "desk")


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float

    def to_json(self):
        return {
            "name": self.name,
            "ok": self.ok,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


class CheckFailure(AssertionError):
    pass


def _need(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailure(message)


def _check_cover_bound(graphs, ks) -> str:
    count = 0
    for name, G in graphs:
        n = G.n
        for k in ks:
            sel = select_cover(G, k, strategy="best")
            _need(
                Fraction(sel.uncovered_edges) * E_LOWER * k <= n * n,
                f"{name}: k={k} left {sel.uncovered_edges} uncovered > n^2/(e k)",
            )
            count += 1
    return f"{count} cover selections under n^2/(e k)"


def _check_cover_vs_exact() -> str:
    samples = [
        ("c5", cycle(5)),
        ("k4", complete(4)),
        ("k33", complete_bipartite(3, 3)),
        ("petersen", petersen()),
    ]
    count = 0
    for name, G in samples:
        for k in (1, 2):
            best = exact_u(G, k)
            sel = select_cover(G, k, strategy="best")
            _need(
                G.m - sel.uncovered_edges <= best,
                f"{name}: selection covers more than the exact optimum",
            )
            _need(
                Fraction(G.m - best) * E_LOWER * k <= G.n * G.n,
                f"{name}: even exact coverage misses n^2/(e k) at k={k}",
            )
            count += 1
    return f"{count} selections sandwiched by exact_u"


def _check_duality(graphs, ks) -> str:
    count = 0
    for name, G in graphs:
        for k in ks:
            h = exact_h(G, k)
            cut = max_k_cut_exact(G, k)
            _need(
                h == G.m - cut.crossing,
                f"{name}: h={h} but m - maxcut = {G.m - cut.crossing} at k={k}",
            )
            ls = local_search_cut(G, k, seed=5)
            _need(ls.crossing <= cut.crossing, f"{name}: local search beat exact")
            count += 1
    return f"{count} exact h = m - maxcut identities"


def _check_heuristics_above_h(graphs, ks) -> str:
    count = 0
    for name, G in graphs:
        for k in ks:
            h = exact_h(G, k)
            rep = partition_triangle_free(G, k)
            _need(
                rep.deleted >= h,
                f"{name}: heuristic deleted {rep.deleted} < exact {h} at k={k}",
            )
            count += 1
    return f"{count} heuristic runs at or above exact h"


def _check_triangle_free(graphs, ks, verify_structure=False) -> str:
    count = 0
    for name, G in graphs:
        for k in ks:
            rep = partition_triangle_free(G, k, verify=verify_structure)
            rep.require()
            count += 1
    return f"{count} triangle-free runs under n^2/(e k^2)"


def _check_odd_girth(graphs, ks, r) -> str:
    count = 0
    for name, G in graphs:
        for k in ks:
            rep = partition_odd_girth(G, k, r, verify=True).require()
            leftover = rep.meta.get("leftover_bound")
            if leftover is not None:
                _need(
                    Fraction(rep.meta["added"]) <= leftover,
                    f"{name}: completion exceeded leftover/k at k={k}",
                )
            count += 1
    return f"{count} odd-girth runs under 4(12r)^r n^2/k^(r+1)"


def _check_scrubber(graphs, r) -> str:
    count = 0
    for name, G in graphs:
        rep = scrub_short_odd_cycles(G, r)
        _need(rep.holds(G.n), f"{name}: scrub removed more than 100 r^4 n^(3/2)")
        _need(
            odd_girth(rep.graph) > 2 * r + 1,
            f"{name}: scrubbed graph still has a short odd cycle",
        )
        full = partition_odd_cycle_free(G, 4, r, verify=True).require()
        _need(
            full.partition.internal_count(G) <= full.deleted,
            f"{name}: deletion accounting missed internal edges",
        )
        count += 1
    return f"{count} scrub runs clean"


def _check_blowup_identity(graphs, ks, t=2) -> str:
    count = 0
    for name, G in graphs:
        H = blow_up(G, t)
        for k in ks:
            base = exact_h(G, k)
            big = exact_h(H, k)
            _need(
                big == t * t * base,
                f"{name}: h(G[{t}],{k})={big} != {t * t}*{base}",
            )
            count += 1
    return f"{count} blow-up identities h(G[t],k) = t^2 h(G,k)"


def _check_dl_closed_form(max_k=7) -> str:
    count = 0
    for k in range(2, max_k + 1):
        for l in range(2, k):
            cut = max_k_cut_exact(complete(k), l)
            _need(
                Fraction(cut.crossing, comb(k, 2)) == d_l_complete(l, k),
                f"d_{l}(K_{k}) closed form disagrees with brute force",
            )
            count += 1
    return f"{count} d_l(K_k) closed-form values match brute force"


def _check_coarsening(graphs, pairs) -> str:
    count = 0
    for name, G in graphs:
        for k, l in pairs:
            fine = local_search_cut(G, k, seed=3)
            coarse = coarsen_cut(G, fine.partition, l)
            _need(
                coarse.crossing * comb(k, 2)
                >= (comb(k, 2) - sum(comb(s, 2) for s in _sizes(k, l)))
                * fine.crossing,
                f"{name}: coarsening lost more than d_l(K_k) at (k,l)=({k},{l})",
            )
            count += 1
    return f"{count} coarsenings kept the d_l(K_k) share"


def _sizes(k: int, l: int) -> tuple[int, ...]:
    q, rem = divmod(k, l)
    return tuple([q + 1] * rem + [q] * (l - rem))


def _check_dl_coarsen_product(graphs, pairs) -> str:
    """d_l(G) >= d_l(K_k) * d_k(G), realized through coarsen_cut."""
    count = 0
    for name, G in graphs:
        if G.m == 0:
            continue
        for k, l in pairs:
            fine = max_k_cut_exact(G, k)
            coarse = coarsen_cut(G, fine.partition, l)
            exact_l = max_k_cut_exact(G, l)
            _need(
                exact_l.crossing >= coarse.crossing,
                f"{name}: exact l-cut below a realized l-cut?!",
            )
            lhs = Fraction(exact_l.crossing, G.m)
            rhs = d_l_complete(l, k) * Fraction(fine.crossing, G.m)
            _need(
                lhs >= rhs,
                f"{name}: d_{l} < d_{l}(K_{k}) d_{k} at ({k},{l})",
            )
            count += 1
    return f"{count} cut-density products d_l >= d_l(K_k) d_k"


def _check_spectral() -> str:
    P = petersen()
    prof = second_eigenvalue(P)
    _need(abs(prof.lam - 2.0) <= 1e-6, f"Petersen lambda {prof.lam} != 2")
    _need(prof.residual <= 1e-6, "Petersen eigen-iteration did not converge")
    cert = spectral_lower_bound(P, 2, prof)
    _need(cert.value <= exact_h(P, 2), "spectral bound exceeded exact h")
    mix = mixing_check(cycle(5))
    _need(mix.min_slack >= -1e-6, f"C5 mixing slack {mix.min_slack}")
    for name, G in corpus.regular_suite():
        prof = second_eigenvalue(G)
        _need(prof.d is not None, f"{name}: regular graph not detected")
        _need(prof.residual <= 1e-6, f"{name}: residual {prof.residual}")
        for k in (2, 3):
            cert = spectral_lower_bound(G, k, prof)
            if G.n <= 10:
                _need(
                    cert.value <= exact_h(G, k),
                    f"{name}: spectral bound above exact h at k={k}",
                )
    return "spectral certificates sound on the regular suite"


def _check_driver_bipartite() -> str:
    G = complete_bipartite(89, 89)
    cut = maxcut_dense_driver(G, 1)
    _need(
        4 * (cut.meta["k"] - 1) * cut.crossing
        >= G.m * (2 * cut.meta["k"] - 1),
        "driver missed the dense-regime floor on K_{89,89}",
    )
    _need(2 * cut.crossing >= G.m, "driver fell below m/2")
    return f"K_89,89 driver crossing {cut.crossing}/{G.m} with k={cut.meta['k']}"


def _check_split_driver(graphs, r) -> str:
    count = 0
    for name, G in graphs:
        cut = maxcut_odd_cycle_free(G, r)
        _need(2 * cut.crossing >= G.m, f"{name}: split driver below m/2")
        count += 1
    return f"{count} split-driver runs at or above m/2"


def _check_clique_free(graphs, ks, r) -> str:
    count = 0
    for name, G in graphs:
        for k in ks:
            partition_clique_free(G, k, r).require()
            count += 1
    return f"{count} clique-free runs under (5/3) 4^(r-3) n^2 / k^((r-1)/(r-2))"


def _check_wheel_free(graphs, ks, r) -> str:
    count = 0
    for name, G in graphs:
        for k in ks:
            partition_wheel_free(G, k, r).require()
            count += 1
    return f"{count} wheel-free runs under the composed ceiling"


def _check_single_cover_worst(ns) -> str:
    details = []
    for n in ns:
        worst, witness = mantel_worst_uncovered(n)
        _need(
            worst == (n * n) // 4,
            f"worst single-center uncovered on n={n} is {worst}, not floor(n^2/4)",
        )
        B = corpus.bipartite_equality_witness(n)
        _need(
            min_uncovered_single(B) == (n * n) // 4,
            f"balanced bipartite on n={n} does not meet floor(n^2/4)",
        )
        details.append(f"n={n}:{worst}")
    return "worst one-center coverage " + ", ".join(details)


def build_checks(tier: str, seed: int = 0) -> list[tuple[str, Callable[[], str]]]:
    if tier not in TIERS:
        raise ValueError(f"tier must be one of {TIERS}")
    tiny = tier in TIERS
    small = tier in ("small", "desk")
    desk = tier == "desk"

    n8 = corpus.random_n8_suite(seed)
    checks: list[tuple[str, Callable[[], str]]] = []
    if tiny:
        cover_sample = corpus.cover_suite(seed)[:40]
        checks += [
            ("cover-bound", lambda: _check_cover_bound(cover_sample, (1, 2, 4))),
            ("cover-vs-exact", _check_cover_vs_exact),
            ("duality-exact", lambda: _check_duality(n8[:10], (2, 3))),
            ("heuristic-above-h", lambda: _check_heuristics_above_h(n8[:10], (2, 3))),
            (
                "triangle-free-small",
                lambda: _check_triangle_free(
                    corpus.triangle_free_suite(seed)[:6], (2, 3), True
                ),
            ),
            (
                "odd-girth-small",
                lambda: _check_odd_girth(corpus.odd_girth7_suite(seed)[:4], (2, 4), 2),
            ),
            (
                "scrubber-small",
                lambda: _check_scrubber(corpus.c5_free_scrub_suite()[:4], 2),
            ),
            (
                "blowup-identity-small",
                lambda: _check_blowup_identity(corpus.blowup_suite()[:8], (2,)),
            ),
            ("dl-closed-form", lambda: _check_dl_closed_form(6)),
            (
                "coarsen-share",
                lambda: _check_coarsening(n8[:6], ((4, 2), (6, 3))),
            ),
            ("spectral", _check_spectral),
            ("driver-bipartite", _check_driver_bipartite),
            (
                "wheel-free-small",
                lambda: _check_wheel_free([("c5[4]", blow_up(cycle(5), 4))], (6,), 1),
            ),
        ]
    if small:
        checks += [
            (
                "cover-bound-full",
                lambda: _check_cover_bound(corpus.cover_suite(seed), (1, 2, 4, 8)),
            ),
            (
                "triangle-free-full",
                lambda: _check_triangle_free(
                    corpus.triangle_free_suite(seed), (2, 3, 4, 6)
                ),
            ),
            (
                "odd-girth-full",
                lambda: _check_odd_girth(corpus.odd_girth7_suite(seed), (2, 4, 8), 2),
            ),
            (
                "scrubber-full",
                lambda: _check_scrubber(corpus.c5_free_scrub_suite(), 2),
            ),
            (
                "blowup-identity-full",
                lambda: _check_blowup_identity(corpus.blowup_suite(), (2, 3)),
            ),
            ("duality-full", lambda: _check_duality(n8[:40], (2, 3))),
            (
                "dl-product",
                lambda: _check_dl_coarsen_product(
                    n8[:30], ((3, 2), (4, 2), (4, 3))
                ),
            ),
            ("dl-closed-form-full", lambda: _check_dl_closed_form(7)),
            (
                "split-driver",
                lambda: _check_split_driver(corpus.odd_girth7_suite(seed), 2),
            ),
            ("single-cover-worst-small", lambda: _check_single_cover_worst((4, 5, 6))),
        ]
    if desk:
        checks += [
            (
                "clique-free-theorem",
                lambda: _check_clique_free(
                    corpus.k4_free_suite(), (66, 128, 256), 4
                ),
            ),
            ("single-cover-worst", lambda: _check_single_cover_worst((4, 5, 6, 7))),
            (
                "dl-product-full",
                lambda: _check_dl_coarsen_product(n8, ((3, 2), (4, 2), (4, 3))),
            ),
            (
                "wheel-free-full",
                lambda: _check_wheel_free(
                    [
                        ("c5[20]", blow_up(cycle(5), 20)),
                        ("k200-200", complete_bipartite(100, 100)),
                    ],
                    (16, 40),
                    1,
                ),
            ),
        ]
    return checks


def run_checks(tier: str = "tiny", seed: int = 0) -> list[CheckResult]:
    results = []
    for name, fn in build_checks(tier, seed):
        t0 = perf_counter()
        try:
            detail = fn()
            ok = True
        except Exception as exc:
            detail = f"{type(exc).__name__}: {exc}"
            ok = False
        results.append(CheckResult(name, ok, detail, perf_counter() - t0))
    return results
