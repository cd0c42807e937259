"""Upper bounds on global defensive k-alliance numbers of graph products.

Each ``*_bound`` function evaluates a bound from the factors, builds the
explicit vertex set that realises it in the product, and checks that set
with :func:`alliances.alliance.is_gdka`. A witness that fails the check is a
hard error (:class:`WitnessError`), never a silent flag.

Theorem ids: ``hier``, ``cartesian_min``, ``lex_shift``, ``lex_pcode``,
``corona``, ``corona_eq``, ``edge_corona``.

Alliance numbers of a graph P are only defined for ``-δ(P) <= k <= δ(P)``;
a bound on the product is reported as not applicable outside that window.
Parameters applied to the factors (``k + 2``, ``k + n(H)Δ(G)``, ...) are
taken literally, so they may yield infinity.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Any, Callable

from .alliance import (
    SolveResult,
    dka_number,
    domination_number,
    find_1_perfect_code,
    gdka_number,
    is_gdka,
    minimum_gdkas,
)
from .graph import Graph, VertexSet, induced_subgraph
from .products import (
    Base,
    ECopy,
    Pair,
    ProductGraph,
    VCopy,
    cartesian,
    corona,
    edge_corona,
    hierarchical,
    lexicographic,
    lift,
    pairs,
)
from .values import INF, AllianceValue, ext, ext_min

THEOREMS = ("hier", "cartesian_min", "lex_shift", "lex_pcode", "corona", "corona_eq", "edge_corona")

DEFAULT_MAX_N = 24
NOT_CHECKED = "not-checked"
NOT_COMPUTED = "not-computed"
SKIPPED = "skipped"


class WitnessError(AssertionError):
    """A constructed witness is not a global defensive alliance at the claimed k."""


@dataclass(frozen=True)
class BoundReport:
    theorem: str
    k: int
    target_k: int
    bound: AllianceValue
    witness: VertexSet | None
    witness_valid: bool | None
    applicable: bool = True
    reason: str | None = None
    exact: AllianceValue | None = None
    exact_skipped: bool = False
    terms: dict[str, Any] = field(default_factory=dict)
    product: ProductGraph | None = field(default=None, repr=False, compare=False)

    @property
    def gap(self) -> int | str | None:
        """``bound - exact``; negative means the bound failed, "inf" means an infinite bound."""
        if self.exact is None or self.exact.is_infinite:
            return None
        if self.bound.is_infinite:
            return "inf"
        return int(self.bound) - int(self.exact)

    @property
    def bound_holds(self) -> bool | None:
        if self.bound.is_infinite:
            return True
        if self.exact is None:
            return None
        return self.exact <= self.bound

    @property
    def sharp(self) -> bool | None:
        if self.exact is None:
            return None
        return self.exact == self.bound

    def to_dict(self) -> dict[str, Any]:
        if self.exact is not None:
            exact: Any = self.exact.to_json()
        else:
            exact = SKIPPED if self.exact_skipped else NOT_COMPUTED
        return {
            "theorem": self.theorem,
            "k": self.k,
            "target_k": self.target_k,
            "applicable": self.applicable,
            "reason": self.reason,
            "bound": self.bound.to_json(),
            "witness": None if self.witness is None else self.witness.sorted(),
            "witness_valid": NOT_CHECKED if self.witness_valid is None else self.witness_valid,
            "exact": exact,
            "gap": self.gap,
            "bound_holds": self.bound_holds,
            "sharp": self.sharp,
            "terms": {key: _jsonable(v) for key, v in self.terms.items()},
        }


def _jsonable(value: Any) -> Any:
    if isinstance(value, AllianceValue):
        return value.to_json()
    if isinstance(value, VertexSet):
        return value.sorted()
    return value


@lru_cache(maxsize=8192)
def _gd(graph: Graph, k: int) -> SolveResult:
    return gdka_number(graph, k)


@lru_cache(maxsize=8192)
def _d(graph: Graph, k: int) -> SolveResult:
    return dka_number(graph, k)


def _not_applicable(theorem: str, k: int, reason: str, target_k: int | None = None,
                    product: ProductGraph | None = None) -> BoundReport:
    return BoundReport(theorem, k, k if target_k is None else target_k, INF, None, None,
                       applicable=False, reason=reason, product=product)


def _out_of_range(product: ProductGraph, k: int) -> str | None:
    delta = product.graph.min_degree
    if -delta <= k <= delta:
        return None
    return f"k = {k} outside [-{delta}, {delta}], the alliance range of the product"


def _checked(theorem: str, product: ProductGraph, witness: VertexSet, k: int, term: str = "") -> bool:
    if not witness.members or not is_gdka(product.graph, witness, k):
        where = f" ({term})" if term else ""
        raise WitnessError(f"{theorem}{where}: witness {witness.sorted()} is not a global defensive {k}-alliance")
    return True


def _pick(terms: list[tuple[str, AllianceValue, VertexSet | None]]) -> tuple[str | None, AllianceValue, VertexSet | None]:
    """Smallest term; ties go to the earliest listed."""
    best = ext_min(*(t[1] for t in terms))
    if best.is_infinite:
        return None, INF, None
    for name, value, witness in terms:
        if value == best:
            return name, value, witness
    raise AssertionError("unreachable")


# -- hierarchical and Cartesian -----------------------------------------------


def hierarchical_bound(g: Graph, u: VertexSet | Any, h: Graph, k: int) -> BoundReport:
    """``γ^d_k(G(U) ⊓ H) <= γ^d_k(G) n(H)``, witness ``S_G × V(H)``."""
    product = hierarchical(g, u, h)
    reason = _out_of_range(product, k)
    if reason:
        return _not_applicable("hier", k, reason, product=product)
    sg = _gd(g, k)
    bound = sg.value * h.n
    terms = {"gdk_G": sg.value, "n_H": h.n}
    if sg.witness is None:
        return BoundReport("hier", k, k, bound, None, None, terms=terms, product=product)
    witness = lift(product, pairs(sg.witness, range(h.n)))
    valid = _checked("hier", product, witness, k)
    return BoundReport("hier", k, k, bound, witness, valid, terms=terms, product=product)


def cartesian_min_bound(g: Graph, h: Graph, k: int) -> BoundReport:
    """``γ^d_k(G □ H) <= min{γ^d_k(H) n(G), γ^d_k(G) n(H)}``."""
    product = cartesian(g, h)
    reason = _out_of_range(product, k)
    if reason:
        return _not_applicable("cartesian_min", k, reason, product=product)
    sg, sh = _gd(g, k), _gd(h, k)
    candidates: list[tuple[str, AllianceValue, VertexSet | None]] = []
    for name, res, build in (
        ("g_side", sg, lambda w: pairs(w, range(h.n))),
        ("h_side", sh, lambda w: pairs(range(g.n), w)),
    ):
        factor = h.n if name == "g_side" else g.n
        witness = None
        if res.witness is not None:
            witness = lift(product, build(res.witness))
            _checked("cartesian_min", product, witness, k, name)
        candidates.append((name, res.value * factor, witness))
    name, bound, witness = _pick(candidates)
    terms = {"g_side": candidates[0][1], "h_side": candidates[1][1], "achieved_by": name}
    return BoundReport("cartesian_min", k, k, bound, witness, True if witness else None,
                       terms=terms, product=product)


# -- lexicographic ------------------------------------------------------------


def lex_shift_bound(g: Graph, h: Graph, k: int) -> BoundReport:
    """``γ^d_{k n(H) + δ_H}(G[H]) <= n(H) γ^d_k(G)`` for ``k >= 0``, witness ``S_G × V(H)``."""
    product = lexicographic(g, h)
    shifted = k * h.n + h.min_degree
    if k < 0:
        return _not_applicable("lex_shift", k, "requires k ≥ 0", shifted, product)
    reason = _out_of_range(product, shifted)
    if reason:
        return _not_applicable("lex_shift", k, reason, shifted, product)
    sg = _gd(g, k)
    bound = sg.value * h.n
    terms = {"gdk_G": sg.value, "shifted_k": shifted}
    if sg.witness is None:
        return BoundReport("lex_shift", k, shifted, bound, None, None, terms=terms, product=product)
    witness = lift(product, pairs(sg.witness, range(h.n)))
    valid = _checked("lex_shift", product, witness, shifted)
    return BoundReport("lex_shift", k, shifted, bound, witness, valid, terms=terms, product=product)


def lex_pcode_bound(g: Graph, h: Graph, k: int) -> BoundReport:
    """Perfect-code bound ``γ^d_k(G[H]) <= n(H)(γ^d_k(G) - γ(G<S>)) + γ(G<S>)`` for ``k >= 2``.

    S ranges over the minimum global defensive k-alliances of G in
    lexicographic order; the first whose induced subgraph has a 1-perfect
    code D is used. The witness keeps full H-layers over S \\ D and a single
    minimum-degree vertex of H over each vertex of D.
    """
    product = lexicographic(g, h)
    if k < 2:
        return _not_applicable("lex_pcode", k, "bound requires k ≥ 2", product=product)
    if h.n < 2:
        return _not_applicable("lex_pcode", k, "H must have more than one vertex", product=product)
    reason = _out_of_range(product, k)
    if reason:
        return _not_applicable("lex_pcode", k, reason, product=product)
    sg = _gd(g, k)
    if sg.value.is_infinite:
        return _not_applicable("lex_pcode", k, "G has no global defensive k-alliance", product=product)

    chosen = code = None
    for s in minimum_gdkas(g, k):
        sub, relabel = induced_subgraph(g, s)
        d = find_1_perfect_code(sub)
        if d is not None:
            back = {new: old for old, new in relabel.items()}
            chosen, code = s, VertexSet.of((back[x] for x in d), g.n)
            gamma_sub = domination_number(sub).value
            if gamma_sub != len(d):
                raise AssertionError(f"1-perfect code of size {len(d)} but γ(G<S>) = {gamma_sub}")
            break
    if chosen is None or code is None:
        return _not_applicable("lex_pcode", k, "no 1-perfect code", product=product)

    gamma_s = len(code)
    bound = ext(h.n * (int(sg.value) - gamma_s) + gamma_s)
    v = min(h.vertices(), key=lambda x: (h.degree(x), x))
    labels = pairs(sorted(chosen.members - code.members), range(h.n)) + [Pair(d, v) for d in code]
    witness = lift(product, labels)
    valid = _checked("lex_pcode", product, witness, k)
    terms = {"gdk_G": sg.value, "alliance_S": chosen, "perfect_code": code,
             "gamma_induced": gamma_s, "min_degree_vertex_H": v}
    return BoundReport("lex_pcode", k, k, bound, witness, valid, terms=terms, product=product)


# -- corona -------------------------------------------------------------------


def _copies(make: Callable[[int, int], Any], count: int, s: VertexSet) -> list:
    return [make(i, x) for i in range(count) for x in s]


def corona_bound(g: Graph, h: Graph, k: int) -> BoundReport:
    """``γ^d_k(G ∘ H) <= min{n(G)(1 + γ^d_{k-1}(H)), n(G) γ^d_{k+1}(H)}``.

    Also evaluates the variant of the first term built from a plain
    defensive (k-1)-alliance of H, ``n(G)(1 + γ_{k-1}(H))``. That variant is
    reported in ``terms`` with its own witness check but never feeds the
    headline bound: its witness can fail at the base vertices.
    """
    product = corona(g, h)
    reason = _out_of_range(product, k)
    if reason:
        return _not_applicable("corona", k, reason, product=product)
    ng = g.n
    base = [Base(a) for a in range(ng)]

    def with_base(res: SolveResult) -> tuple[AllianceValue, VertexSet | None]:
        value = ng * (1 + res.value)
        if res.witness is None:
            return value, None
        return value, lift(product, base + _copies(VCopy, ng, res.witness))

    stated = _gd(h, k - 1)
    proof = _d(h, k - 1)
    upper = _gd(h, k + 1)
    t1, w1 = with_base(stated)
    tp, wp = with_base(proof)
    t2 = upper.value * ng
    w2 = None if upper.witness is None else lift(product, _copies(VCopy, ng, upper.witness))

    if w1 is not None:
        _checked("corona", product, w1, k, "term1")
    if w2 is not None:
        _checked("corona", product, w2, k, "term2")
    proof_valid = None if wp is None else is_gdka(product.graph, wp, k)

    name, bound, witness = _pick([("term1", t1, w1), ("term2", t2, w2)])
    terms = {
        "term1": t1,
        "term2": t2,
        "proof_term1": tp,
        "proof_term1_witness_valid": proof_valid,
        "proof_variant_differs": tp != t1,
        "achieved_by": name,
    }
    return BoundReport("corona", k, k, bound, witness, True if witness else None,
                       terms=terms, product=product)


def corona_equality(g: Graph, h: Graph, k: int, max_n: int | None = None) -> BoundReport:
    """If ``δ_G - n(H) >= k`` then ``γ^d_k(G ∘ H) = n(G)``, realised by the base copy of G."""
    product = corona(g, h)
    if g.min_degree - h.n < k:
        return _not_applicable("corona_eq", k, f"δ_G - n(H) = {g.min_degree - h.n} < k", product=product)
    reason = _out_of_range(product, k)
    if reason:
        return _not_applicable("corona_eq", k, reason, product=product)
    witness = lift(product, lambda lab: isinstance(lab, Base))
    valid = _checked("corona_eq", product, witness, k)
    terms: dict[str, Any] = {}
    if product.n <= _cap(max_n):
        gamma = domination_number(product.graph).value
        if gamma != g.n:
            raise AssertionError(f"γ(G∘H) = {gamma}, expected n(G) = {g.n}")
        terms["domination_number"] = gamma
    return BoundReport("corona_eq", k, k, ext(g.n), witness, valid, terms=terms, product=product)


# -- edge corona --------------------------------------------------------------


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def indicator(k: int, nh: int) -> AllianceValue:
    """1 when ``k > -(n(H) + 1)``, infinity otherwise."""
    return ext(1) if k > -(nh + 1) else INF


def edge_corona_bound(g: Graph, h: Graph, k: int) -> BoundReport:
    """Three-term bound on ``γ^d_k(G ◇ H)``.

    term1 = m(G) γ^d_{k+2}(H)
    term2 = γ^d_{k+n(H)Δ_G}(G) + γ^d_{k+2}(H) |E(G<V - S_G>)|
    term3 = (γ^d_{⌈k/(n(H)+1)⌉}(G) + n(H)|E(G<S'>)| + γ^d_{k+2}(H)|E(G<V - S'>)|) I(k)

    S_G and S' are the solver witnesses for the shifted parameters. Products
    use the convention inf * 0 = 0.
    """
    product = edge_corona(g, h)
    if g.m < 1:
        return _not_applicable("edge_corona", k, "G has no edges", product=product)
    reason = _out_of_range(product, k)
    if reason:
        return _not_applicable("edge_corona", k, reason, product=product)
    nh = h.n
    sh = _gd(h, k + 2)

    def h_copies(edge_ids: list[int]) -> list[ECopy]:
        if sh.witness is None:
            return []
        return [ECopy(i, x) for i in edge_ids for x in sh.witness]

    def split_edges(s: VertexSet) -> tuple[list[int], list[int]]:
        inside = [i for i, (a, b) in enumerate(g.edges) if a in s and b in s]
        outside = [i for i, (a, b) in enumerate(g.edges) if a not in s and b not in s]
        return inside, outside

    candidates: list[tuple[str, AllianceValue, VertexSet | None]] = []
    terms: dict[str, Any] = {"gdk2_H": sh.value}

    t1 = g.m * sh.value
    w1 = None if sh.witness is None else lift(product, h_copies(list(range(g.m))))
    candidates.append(("term1", t1, w1))

    k2 = k + nh * g.max_degree
    sg = _gd(g, k2)
    terms["k_term2"] = k2
    if sg.witness is None:
        candidates.append(("term2", INF, None))
    else:
        _, outside = split_edges(sg.witness)
        t2 = sg.value + sh.value * len(outside)
        w2 = None
        if t2.is_finite:
            w2 = lift(product, [Base(a) for a in sg.witness] + h_copies(outside))
        candidates.append(("term2", t2, w2))
        terms["edges_outside_S_G"] = len(outside)

    k3 = _ceil_div(k, nh + 1)
    ind = indicator(k, nh)
    sp = _gd(g, k3)
    terms["k_term3"] = k3
    terms["I_k"] = ind
    if sp.witness is None:
        candidates.append(("term3", INF, None))
    else:
        inside, outside = split_edges(sp.witness)
        t3 = (sp.value + nh * len(inside) + sh.value * len(outside)) * ind
        w3 = None
        if t3.is_finite:
            labels = [Base(a) for a in sp.witness]
            labels += [ECopy(i, x) for i in inside for x in range(nh)]
            labels += h_copies(outside)
            w3 = lift(product, labels)
        candidates.append(("term3", t3, w3))
        terms["edges_inside_S_prime"] = len(inside)
        terms["edges_outside_S_prime"] = len(outside)

    for name, value, witness in candidates:
        terms[name] = value
        if witness is not None:
            if len(witness) != value:
                raise AssertionError(f"edge_corona {name}: witness size {len(witness)} != term {value}")
            _checked("edge_corona", product, witness, k, name)
    name, bound, witness = _pick(candidates)
    terms["achieved_by"] = name
    return BoundReport("edge_corona", k, k, bound, witness, True if witness else None,
                       terms=terms, product=product)


# -- dispatch and verification ------------------------------------------------


def evaluate(theorem: str, g: Graph, h: Graph, k: int, u: Any = None) -> BoundReport:
    if theorem == "hier":
        if u is None:
            raise ValueError("the hierarchical bound needs a vertex set U")
        return hierarchical_bound(g, u, h, k)
    table: dict[str, Callable[[Graph, Graph, int], BoundReport]] = {
        "cartesian_min": cartesian_min_bound,
        "lex_shift": lex_shift_bound,
        "lex_pcode": lex_pcode_bound,
        "corona": corona_bound,
        "corona_eq": corona_equality,
        "edge_corona": edge_corona_bound,
    }
    if theorem not in table:
        raise ValueError(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    return table[theorem](g, h, k)


def _cap(max_n: int | None) -> int:
    if max_n is not None:
        return max_n
    return int(os.environ.get("ALLIANCE_MAX_N", DEFAULT_MAX_N))


@dataclass(frozen=True)
class Verdict:
    bound_holds: bool | None
    witness_valid: bool | None
    sharp: bool | None
    exact: AllianceValue | None
    skipped: bool


def verify_bound(report: BoundReport, product: ProductGraph | None = None,
                 max_n: int | None = None) -> Verdict:
    """Compare a bound with the exact alliance number of the product.

    The exact search runs only when the product has at most ``max_n``
    vertices (default ``$ALLIANCE_MAX_N`` or 24); the witness is always
    re-checked.
    """
    product = product or report.product
    if product is None:
        raise ValueError("verify_bound needs the product graph")
    if not report.applicable:
        return Verdict(None, None, None, None, False)
    valid = None
    if report.witness is not None:
        valid = bool(report.witness.members) and is_gdka(product.graph, report.witness, report.target_k)
    if product.n > _cap(max_n):
        holds = True if report.bound.is_infinite else None
        return Verdict(holds, valid, None, None, True)
    exact = _gd(product.graph, report.target_k).value
    return Verdict(exact <= report.bound, valid, exact == report.bound, exact, False)


def with_verdict(report: BoundReport, verdict: Verdict) -> BoundReport:
    return replace(
        report,
        exact=verdict.exact,
        exact_skipped=verdict.skipped,
        witness_valid=report.witness_valid if verdict.witness_valid is None else verdict.witness_valid,
    )


def verified(report: BoundReport, max_n: int | None = None) -> BoundReport:
    return with_verdict(report, verify_bound(report, max_n=max_n))
