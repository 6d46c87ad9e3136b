"""Executable claim catalog and corpus harness.

Each claim checker takes an :class:`Instance` (a graph, a pair of product
factors, or a parameter set) and returns one or more :class:`ClaimResult`.
Expected values are recomputed from distance tables on every call; nothing
is cached between claims except the immutable distance table itself.

Verdicts:

* ``pass``: the statement holds on the instance;
* ``fail``: one of the package's own invariants broke (a bug here);
* ``discrepancy-with-paper``: the computation is self-consistent but the
  printed statement does not hold on the instance.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional

from .classify import (
    eqdb_lambda,
    format_ratio,
    nqdb_params,
    nqedb_params,
    qdb_lambda,
    sqedb_lambda,
)
from .constructions import cartesian_product, lexicographic_product, square_replacement, subdivision
from .errors import CapExceeded, InvalidClaimParams, UnknownClaim
from .graph import (
    FamilySpec,
    Graph,
    all_pairs_distances,
    bipartition,
    build_graph,
    complete_bipartite,
    diameter,
    generate,
    is_complete_bipartite,
)
from .metrics import (
    distance_partition,
    edge_balances,
    edge_count_matrix,
    edge_szeged_index,
    vertex_count_matrix,
)

DEFAULT_MAX_VERTICES = 64
DEFAULT_MAX_EDGES = 256


class ClaimId(str, enum.Enum):
    T1_1 = "T1.1"
    T1_2_IDENTITY = "T1.2-identity"
    T1_2_CLOSED_FORM = "T1.2-closed-form"
    T1_3 = "T1.3"
    T1_4 = "T1.4"
    C2_1 = "C2.1"
    EQ3_2 = "EQ3.2"
    EQ3_3 = "EQ3.3"
    EQ3_4 = "EQ3.4"
    EQ3_5 = "EQ3.5"
    LEX_M_IDENTITY = "LEX-m-identity"
    P4_2 = "P4.2"
    C4_3 = "C4.3"
    P4_5 = "P4.5"
    L5_1 = "L5.1"
    L5_2 = "L5.2"
    L5_3 = "L5.3"
    E5_4 = "E5.4"
    L5_6 = "L5.6"

    @classmethod
    def parse(cls, text: str) -> "ClaimId":
        try:
            return cls(text)
        except ValueError:
            raise UnknownClaim(f"unknown claim {text!r}") from None


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    DISCREPANCY = "discrepancy-with-paper"


GRAPH_CLAIMS = frozenset({ClaimId.T1_1, ClaimId.T1_2_IDENTITY, ClaimId.T1_2_CLOSED_FORM,
                          ClaimId.L5_1, ClaimId.L5_2, ClaimId.L5_6})
CARTESIAN_CLAIMS = frozenset({ClaimId.T1_3, ClaimId.EQ3_2, ClaimId.EQ3_3, ClaimId.EQ3_4,
                              ClaimId.EQ3_5, ClaimId.L5_3})
LEX_CLAIMS = frozenset({ClaimId.T1_4, ClaimId.LEX_M_IDENTITY})
PARAM_CLAIMS = frozenset({ClaimId.C2_1, ClaimId.P4_2, ClaimId.C4_3, ClaimId.P4_5, ClaimId.E5_4})


# ------------------------------------------------------------------ data


def graph_json(g: Graph) -> dict:
    return {"vertices": g.vertex_count, "edges": [list(e) for e in g.edges]}


def graph_from_json(obj: dict) -> Graph:
    return build_graph(obj["vertices"], obj["edges"])


def to_jsonable(value):
    """Fractions become ``"p/q"`` strings; tuples become lists."""
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, Fraction):
        return format_ratio(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise TypeError(f"cannot serialize {type(value).__name__}")


@dataclass(frozen=True)
class Instance:
    """What a claim is checked on.

    Exactly one of ``graph``, the factor pair, or ``params`` is meaningful,
    depending on the claim's kind.
    """

    label: str
    graph: Optional[Graph] = None
    left: Optional[Graph] = None
    right: Optional[Graph] = None
    product: Optional[str] = None
    params: tuple[tuple[str, object], ...] = ()

    @classmethod
    def of_graph(cls, label: str, g: Graph) -> "Instance":
        return cls(label, graph=g)

    @classmethod
    def of_product(cls, kind: str, left: tuple[str, Graph], right: tuple[str, Graph]) -> "Instance":
        if kind not in ("cartesian", "lexicographic"):
            raise InvalidClaimParams(f"unknown product {kind!r}")
        build = cartesian_product if kind == "cartesian" else lexicographic_product
        label = f"{kind}({left[0]},{right[0]})"
        return cls(label, graph=build(left[1], right[1]), left=left[1], right=right[1], product=kind)

    @classmethod
    def of_params(cls, **params) -> "Instance":
        items = tuple(sorted(params.items()))
        label = ",".join(f"{k}={to_jsonable(v)}" for k, v in items)
        return cls(label, params=items)

    def param(self, name: str):
        for k, v in self.params:
            if k == name:
                return v
        raise InvalidClaimParams(f"missing parameter {name!r}")

    def to_json(self) -> dict:
        out: dict = {"label": self.label}
        if self.product is not None:
            out["product"] = self.product
            out["left"] = graph_json(self.left)
            out["right"] = graph_json(self.right)
        elif self.graph is not None:
            out["graph"] = graph_json(self.graph)
        if self.params:
            out["params"] = to_jsonable(dict(self.params))
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "Instance":
        label = obj["label"]
        if "product" in obj:
            inst = cls.of_product(obj["product"], ("", graph_from_json(obj["left"])),
                                  ("", graph_from_json(obj["right"])))
            return cls(label, graph=inst.graph, left=inst.left, right=inst.right, product=inst.product)
        if "graph" in obj:
            return cls(label, graph=graph_from_json(obj["graph"]))
        params = {}
        for k, v in obj.get("params", {}).items():
            params[k] = Fraction(v) if isinstance(v, str) else v
        return cls(label, params=tuple(sorted(params.items())))


@dataclass(frozen=True)
class ClaimResult:
    claim: ClaimId
    instance: str
    verdict: Verdict
    computed: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    witness: Optional[dict] = None
    note: str = ""
    vacuous: bool = False

    def to_json(self) -> dict:
        return {
            "claim": self.claim.value,
            "instance": self.instance,
            "verdict": self.verdict.value,
            "vacuous": self.vacuous,
            "computed": to_jsonable(self.computed),
            "expected": to_jsonable(self.expected),
            "witness": to_jsonable(self.witness),
            "note": self.note,
        }


def _result(claim, inst: Instance, ok: bool, computed, expected, *, bad=Verdict.DISCREPANCY,
            detail=None, note="", suffix="") -> ClaimResult:
    verdict = Verdict.PASS if ok else bad
    witness = None
    if not ok:
        witness = {"instance": inst.to_json()}
        if detail:
            witness.update(detail)
    label = inst.label + (f" [{suffix}]" if suffix else "")
    return ClaimResult(claim, label, verdict, computed, expected, witness, note)


def _vacuous(claim, inst: Instance, why: str) -> ClaimResult:
    return ClaimResult(claim, inst.label, Verdict.PASS, note=f"hypothesis not met: {why}", vacuous=True)


def _sum_identity_broken(g: Graph) -> Optional[dict]:
    """First edge whose three counts do not add to ``|E| - 1``."""
    total = g.edge_count - 1
    for b in edge_balances(all_pairs_distances(g)):
        if b.m_g + b.m_h + b.m_0 != total:
            return {"edge": [b.g, b.h], "counts": [b.m_g, b.m_h, b.m_0], "expected_sum": total}
    return None


# ------------------------------------------------------------ graph claims


def check_t1_1(inst: Instance) -> list[ClaimResult]:
    g = inst.graph
    lam = eqdb_lambda(g)
    if lam is None:
        return [_vacuous(ClaimId.T1_1, inst, "not edge quasi-lambda-balanced")]
    bip = bipartition(g) is not None
    sides = is_complete_bipartite(g)
    strong = sides is not None and sides[0] != sides[1]
    computed = {"eqdb_lambda": lam, "bipartite": bip, "complete_bipartite_sides": sides}
    weak = _result(ClaimId.T1_1, inst, bip, computed, {"bipartite": True}, bad=Verdict.FAIL,
                   suffix="bipartite", note="weak form: every EQDB graph is bipartite")
    strong_r = _result(ClaimId.T1_1, inst, strong, computed, {"complete_bipartite_unequal_sides": True},
                       suffix="K_{m,n}, m!=n",
                       note="printed conclusion: the graph is K_{m,n} with m != n")
    return [weak, strong_r]


def check_t1_2_identity(inst: Instance) -> list[ClaimResult]:
    g = inst.graph
    lam = eqdb_lambda(g)
    if lam is None:
        return [_vacuous(ClaimId.T1_2_IDENTITY, inst, "not edge quasi-lambda-balanced")]
    broken = _sum_identity_broken(g)
    if broken:
        return [_result(ClaimId.T1_2_IDENTITY, inst, False, {}, {}, bad=Verdict.FAIL, detail=broken,
                        note="m_g + m_h + m_0 != |E| - 1")]
    e = g.edge_count
    zeros = set()
    for b in edge_balances(all_pairs_distances(g)):
        predicted = lam * (Fraction(e - b.m_0 - 1) / (lam + 1)) ** 2
        zeros.add(b.m_0)
        if b.m_g * b.m_h != predicted:
            return [_result(ClaimId.T1_2_IDENTITY, inst, False,
                            {"product": b.m_g * b.m_h}, {"product": predicted},
                            detail={"edge": [b.g, b.h]}, note="per-edge identity")]
    direct = edge_szeged_index(g)
    computed = {"edge_szeged": direct, "lambda": lam}
    if len(zeros) != 1:
        return [_result(ClaimId.T1_2_IDENTITY, inst, True, computed, {},
                        note="per-edge identity holds; m_0 varies so the summed form does not apply")]
    m_0 = zeros.pop()
    summed = lam * e * (Fraction(e - m_0 - 1) / (lam + 1)) ** 2
    return [_result(ClaimId.T1_2_IDENTITY, inst, direct == summed, computed,
                    {"edge_szeged": summed, "m_0": m_0}, note="per-edge and summed identity")]


def closed_form_edge_szeged(lam: Fraction, n: int) -> Fraction:
    """The printed closed form ``lam * (lam n + lam + 1)^2 * lam n^2 / (lam + 1)^2``."""
    return lam * (lam * n + lam + 1) ** 2 * lam * n ** 2 / (lam + 1) ** 2


def check_t1_2_closed_form(inst: Instance) -> list[ClaimResult]:
    g = inst.graph
    params = nqedb_params(g)
    if params is None or bipartition(g) is None:
        return [_vacuous(ClaimId.T1_2_CLOSED_FORM, inst, "needs a bipartite graph with constant smaller edge count")]
    lam, gamma = params
    direct = edge_szeged_index(g)
    printed = closed_form_edge_szeged(lam, gamma)
    return [_result(ClaimId.T1_2_CLOSED_FORM, inst, direct == printed,
                    {"edge_szeged": direct},
                    {"closed_form": printed, "lambda": lam, "n": gamma},
                    detail={"edge_szeged_direct": direct, "closed_form_value": printed},
                    note="closed form evaluated with n := smaller constant edge count")]


def check_l5_1(inst: Instance) -> list[ClaimResult]:
    g = inst.graph
    params = nqedb_params(g)
    if params is None:
        return [_vacuous(ClaimId.L5_1, inst, "not nicely edge quasi-balanced")]
    broken = _sum_identity_broken(g)
    if broken:
        return [_result(ClaimId.L5_1, inst, False, {}, {}, bad=Verdict.FAIL, detail=broken)]
    lam, gamma = params
    expected = g.edge_count - (lam + 1) * gamma - 1
    for b in edge_balances(all_pairs_distances(g)):
        if b.m_0 != expected:
            return [_result(ClaimId.L5_1, inst, False, {"m_0": b.m_0}, {"m_0": expected},
                            detail={"edge": [b.g, b.h]})]
    return [_result(ClaimId.L5_1, inst, True, {"m_0": expected}, {"m_0": expected})]


def check_l5_2(inst: Instance) -> list[ClaimResult]:
    g = inst.graph
    params = nqedb_params(g)
    if params is None:
        return [_vacuous(ClaimId.L5_2, inst, "not nicely edge quasi-balanced")]
    lam, gamma = params
    d = diameter(all_pairs_distances(g))
    bound = lam * gamma
    return [_result(ClaimId.L5_2, inst, d - 1 <= bound,
                    {"diameter_minus_1": d - 1}, {"upper_bound": bound})]


def check_l5_6(inst: Instance) -> list[ClaimResult]:
    g = inst.graph
    lam_s = sqedb_lambda(g)
    if lam_s is None or diameter(all_pairs_distances(g)) != 2:
        return [_vacuous(ClaimId.L5_6, inst, "not shell quasi-balanced with diameter 2")]
    lam_e = eqdb_lambda(g)
    computed = {"sqedb_lambda": lam_s, "eqdb_lambda": lam_e}
    implied = _result(ClaimId.L5_6, inst, lam_e is not None, computed, {"eqdb": "present"},
                      suffix="implication", note="diameter-2 shell class implies the edge quasi class")
    same = _result(ClaimId.L5_6, inst, lam_e == lam_s, computed, {"eqdb_lambda": lam_s},
                   suffix="same lambda",
                   note="lambda-mismatch" if lam_e is not None and lam_e != lam_s else "")
    return [implied, same]


# -------------------------------------------------------- product claims


def _factor_counts(g: Graph):
    o = all_pairs_distances(g)
    return edge_count_matrix(o).tolist(), vertex_count_matrix(o).tolist()


def _check_cartesian_formula(claim: ClaimId, inst: Instance) -> list[ClaimResult]:
    a, b = inst.left, inst.right
    along_a = claim in (ClaimId.EQ3_2, ClaimId.EQ3_3)
    first = claim in (ClaimId.EQ3_2, ClaimId.EQ3_4)
    base, other = (a, b) if along_a else (b, a)
    if base.edge_count == 0:
        return [_vacuous(claim, inst, "no edges in that direction")]
    m_base, n_base = _factor_counts(base)
    prod = inst.graph
    counts = edge_count_matrix(all_pairs_distances(prod)).tolist()
    nb = b.vertex_count
    side = 0 if first else 1
    checked = 0
    for k, (x, y) in enumerate(base.edges):
        expected = m_base[k][side] * other.vertex_count + n_base[k][side] * other.edge_count
        for z in range(other.vertex_count):
            if along_a:
                e = (x * nb + z, y * nb + z)
            else:
                e = (z * nb + x, z * nb + y)
            got = counts[prod.edge_index(*e)][side]
            checked += 1
            if got != expected:
                return [_result(claim, inst, False, {"m": got}, {"m": expected},
                                detail={"edge": list(e), "endpoint": e[side]})]
    return [_result(claim, inst, True, {"edges_checked": checked}, {},
                    note=f"{'A' if along_a else 'B'}-direction edges, {'first' if first else 'second'} endpoint")]


def check_t1_3(inst: Instance) -> list[ClaimResult]:
    a, b = inst.left, inst.right
    lam_p = eqdb_lambda(inst.graph)
    ea, qa, eb, qb = eqdb_lambda(a), qdb_lambda(a), eqdb_lambda(b), qdb_lambda(b)
    factors = [ea, qa, eb, qb]
    independent = all(x is not None for x in factors)
    shared = independent and len(set(factors)) == 1
    left = lam_p is not None
    shared_ok = left == shared and (not left or lam_p == ea)
    indep_ok = left == independent
    computed = {"product_eqdb": lam_p, "left_eqdb": ea, "left_qdb": qa, "right_eqdb": eb, "right_qdb": qb,
                "shared_lambda_reading_holds": shared_ok, "independent_lambda_reading_holds": indep_ok}
    direction = "forward" if independent else "converse"
    return [_result(ClaimId.T1_3, inst, shared_ok and indep_ok, computed,
                    {"shared_lambda_reading_holds": True, "independent_lambda_reading_holds": True},
                    note=f"{direction} direction sample")]


def check_l5_3(inst: Instance) -> list[ClaimResult]:
    a, b = inst.left, inst.right
    p = nqedb_params(inst.graph)
    pa_e, pa_v, pb_e, pb_v = nqedb_params(a), nqdb_params(a), nqedb_params(b), nqdb_params(b)
    present = all(x is not None for x in (pa_e, pa_v, pb_e, pb_v))
    balance = None
    if present:
        lhs = b.vertex_count * pa_e[1] + b.edge_count * pa_v[1]
        rhs = a.vertex_count * pb_e[1] + a.edge_count * pb_v[1]
        balance = lhs == rhs
    cond = present and bool(balance)
    lams = {x[0] for x in (pa_e, pa_v, pb_e, pb_v)} if present else set()
    cond_shared = cond and len(lams) == 1
    left = p is not None
    presence_ok = left == cond
    shared_ok = left == cond_shared and (not left or p[0] in lams)
    computed = {"product_nqedb": p, "left_nqedb": pa_e, "left_nqdb": pa_v, "right_nqedb": pb_e,
                "right_nqdb": pb_v, "gamma_balance_holds": balance,
                "presence_reading_holds": presence_ok, "shared_lambda_reading_holds": shared_ok}
    return [_result(ClaimId.L5_3, inst, presence_ok and shared_ok, computed,
                    {"presence_reading_holds": True, "shared_lambda_reading_holds": True})]


def check_t1_4(inst: Instance) -> list[ClaimResult]:
    a, b = inst.left, inst.right
    lam_p = eqdb_lambda(inst.graph)
    lam_a = eqdb_lambda(a)
    cond = lam_a is not None and b.edge_count == 0
    left = lam_p is not None
    presence_ok = left == cond
    same_ok = presence_ok and (not left or lam_p == lam_a)
    computed = {"product_eqdb": lam_p, "base_eqdb": lam_a, "second_factor_edges": b.edge_count,
                "product_bipartite": bipartition(inst.graph) is not None,
                "presence_reading_holds": presence_ok, "same_lambda_reading_holds": same_ok}
    return [_result(ClaimId.T1_4, inst, presence_ok and same_ok, computed,
                    {"presence_reading_holds": True, "same_lambda_reading_holds": True})]


def check_lex_identity(inst: Instance) -> list[ClaimResult]:
    a, b = inst.left, inst.right
    if b.edge_count:
        return [_vacuous(ClaimId.LEX_M_IDENTITY, inst, "second factor has edges")]
    m_a, _ = _factor_counts(a)
    counts = edge_count_matrix(all_pairs_distances(inst.graph)).tolist()
    nb = b.vertex_count
    prod = inst.graph
    for k, (x, y) in enumerate(a.edges):
        for z1 in range(nb):
            for z2 in range(nb):
                e = (x * nb + z1, y * nb + z2)
                got = counts[prod.edge_index(*e)]
                want = [nb * m_a[k][0], nb * m_a[k][1]]
                if got[:2] != want:
                    return [_result(ClaimId.LEX_M_IDENTITY, inst, False,
                                    {"m_first": got[0], "m_second": got[1]},
                                    {"m_first": want[0], "m_second": want[1]},
                                    detail={"edge": list(e), "base_edge": [x, y]})]
    return [_result(ClaimId.LEX_M_IDENTITY, inst, True, {}, {})]


# ------------------------------------------------------ parametric claims


def _int_param(inst: Instance, name: str, low: int) -> int:
    v = inst.param(name)
    if isinstance(v, Fraction) and v.denominator == 1:
        v = v.numerator
    if not isinstance(v, int) or v < low:
        raise InvalidClaimParams(f"{name} must be an integer >= {low}")
    return v


def _uniform_counts(g: Graph, expect: tuple[int, int, int]):
    for b in edge_balances(all_pairs_distances(g)):
        if (b.m_g, b.m_h, b.m_0) != expect:
            return b
    return None


def check_c2_1(inst: Instance) -> list[ClaimResult]:
    m = _int_param(inst, "m", 2)
    n = _int_param(inst, "n", 2)
    if not m < n:
        raise InvalidClaimParams("C2.1 needs m < n")
    g = complete_bipartite(m, n)
    lam = eqdb_lambda(g)
    expected = Fraction(n - 1, m - 1)
    off = _uniform_counts(g, (n - 1, m - 1, (m - 1) * (n - 1)))
    computed = {"eqdb_lambda": lam, "counts_uniform": off is None}
    detail = {"graph": graph_json(g)}
    if off is not None:
        detail["edge"] = [off.g, off.h]
    return [_result(ClaimId.C2_1, inst, lam == expected and off is None, computed,
                    {"eqdb_lambda": expected, "m_g": n - 1, "m_h": m - 1}, detail=detail)]


def check_p4_2(inst: Instance) -> list[ClaimResult]:
    m = _int_param(inst, "m", 1)
    s = subdivision(complete_bipartite(m, m))
    lam = eqdb_lambda(s)
    detail = {"graph": graph_json(s)}
    if m < 3:
        return [_result(ClaimId.P4_2, inst, lam is None, {"eqdb_lambda": lam}, {"eqdb_lambda": None},
                        detail=detail, note="m < 3: path or even cycle, not edge quasi-balanced")]
    expected = Fraction(m * m - 1, 2 * m - 1)
    off = _uniform_counts(s, (m * m - 1, 2 * m - 1, (m - 1) ** 2))
    if off is not None:
        detail["edge"] = [off.g, off.h]
    return [_result(ClaimId.P4_2, inst, lam == expected and off is None,
                    {"eqdb_lambda": lam, "counts_uniform": off is None},
                    {"eqdb_lambda": expected, "m_g": m * m - 1, "m_h": 2 * m - 1}, detail=detail)]


def check_c4_3(inst: Instance) -> list[ClaimResult]:
    m = _int_param(inst, "m", 1)
    s = subdivision(complete_bipartite(m, m))
    expected = (m - 1) ** 2
    e = s.edge_count
    balances = edge_balances(all_pairs_distances(s))
    off = next((b for b in balances if b.m_0 != expected), None)
    b = off or balances[0]
    stated = _result(ClaimId.C4_3, inst, off is None, {"m_0": b.m_0}, {"m_0": expected},
                     detail={"graph": graph_json(s), "edge": [b.g, b.h]}, suffix="stated result")
    # the printed proof line reads |E(S(A))| - (m_g + m_h - 1)
    off = next((b for b in balances if e - (b.m_g + b.m_h - 1) != b.m_0), None)
    b = off or balances[0]
    proof = _result(ClaimId.C4_3, inst, off is None, {"m_0": b.m_0},
                    {"proof_line_value": e - (b.m_g + b.m_h - 1)},
                    detail={"graph": graph_json(s), "edge": [b.g, b.h], "m_g": b.m_g, "m_h": b.m_h, "edges": e},
                    suffix="proof line", note="printed proof line |E| - (m_g + m_h - 1) compared with m_0")
    return [stated, proof]


def check_p4_5(inst: Instance) -> list[ClaimResult]:
    m = _int_param(inst, "m", 3)
    o = square_replacement(complete_bipartite(m, m))
    lam = eqdb_lambda(o)
    expected = Fraction(2 * m * m - 1, 4 * m - 3)
    m_0 = 2 * m * m - 4 * m + 3
    off = _uniform_counts(o, (2 * m * m - 1, 4 * m - 3, m_0))
    detail = {"graph": graph_json(o)}
    if off is not None:
        detail["edge"] = [off.g, off.h]
    return [_result(ClaimId.P4_5, inst, lam == expected and off is None,
                    {"eqdb_lambda": lam, "counts_uniform": off is None},
                    {"eqdb_lambda": expected, "m_0": m_0}, detail=detail)]


def check_e5_4(inst: Instance) -> list[ClaimResult]:
    n = _int_param(inst, "n", 1)
    lam = Fraction(inst.param("lambda"))
    if lam <= 1 or (lam * n).denominator != 1:
        raise InvalidClaimParams("lambda must exceed 1 and lambda*n must be an integer")
    big = int(lam * n)
    g = complete_bipartite(n, big)
    got = sqedb_lambda(g)
    edge = (0, n)
    cells = distance_partition(all_pairs_distances(g), edge)
    heavy, light = cells.shell(1)
    main = _result(ClaimId.E5_4, inst, got == lam,
                   {"sqedb_lambda": got, "shell_heavy": heavy, "shell_light": light},
                   {"sqedb_lambda": lam}, detail={"graph": graph_json(g), "edge": list(edge)})
    printed_heavy, printed_light = lam * (n - 1), n - 1
    printed = _result(ClaimId.E5_4, inst, (heavy, light) == (printed_heavy, printed_light),
                      {"shell_heavy": heavy, "shell_light": light},
                      {"shell_heavy": printed_heavy, "shell_light": printed_light},
                      detail={"graph": graph_json(g), "edge": list(edge),
                              "printed_relation_holds": shell_ok(printed_heavy, printed_light, lam)},
                      suffix="printed cells",
                      note="printed cell sizes lambda(n-1) and n-1 for the level-1 shell")
    return [main, printed]


def shell_ok(heavy, light, lam: Fraction) -> bool:
    return heavy == lam * light + (lam - 1)


# ---------------------------------------------------------------- dispatch

CHECKERS: dict[ClaimId, Callable[[Instance], list[ClaimResult]]] = {
    ClaimId.T1_1: check_t1_1,
    ClaimId.T1_2_IDENTITY: check_t1_2_identity,
    ClaimId.T1_2_CLOSED_FORM: check_t1_2_closed_form,
    ClaimId.T1_3: check_t1_3,
    ClaimId.T1_4: check_t1_4,
    ClaimId.C2_1: check_c2_1,
    ClaimId.EQ3_2: lambda i: _check_cartesian_formula(ClaimId.EQ3_2, i),
    ClaimId.EQ3_3: lambda i: _check_cartesian_formula(ClaimId.EQ3_3, i),
    ClaimId.EQ3_4: lambda i: _check_cartesian_formula(ClaimId.EQ3_4, i),
    ClaimId.EQ3_5: lambda i: _check_cartesian_formula(ClaimId.EQ3_5, i),
    ClaimId.LEX_M_IDENTITY: check_lex_identity,
    ClaimId.P4_2: check_p4_2,
    ClaimId.C4_3: check_c4_3,
    ClaimId.P4_5: check_p4_5,
    ClaimId.L5_1: check_l5_1,
    ClaimId.L5_2: check_l5_2,
    ClaimId.L5_3: check_l5_3,
    ClaimId.E5_4: check_e5_4,
    ClaimId.L5_6: check_l5_6,
}


def verify_claim(claim: ClaimId | str, instance: Instance) -> list[ClaimResult]:
    """Check one claim on one instance; raises :class:`InvalidClaimParams` on a kind mismatch."""
    claim = claim if isinstance(claim, ClaimId) else ClaimId.parse(claim)
    if claim in PARAM_CLAIMS:
        if not instance.params:
            raise InvalidClaimParams(f"{claim.value} needs parameters")
    elif claim in CARTESIAN_CLAIMS or claim in LEX_CLAIMS:
        wanted = "cartesian" if claim in CARTESIAN_CLAIMS else "lexicographic"
        if instance.product != wanted:
            raise InvalidClaimParams(f"{claim.value} needs a {wanted} product instance")
    elif instance.graph is None:
        raise InvalidClaimParams(f"{claim.value} needs a graph instance")
    elif not instance.graph.connected or instance.graph.edge_count == 0:
        raise InvalidClaimParams(f"{claim.value} needs a connected graph with an edge")
    return CHECKERS[claim](instance)


def recheck(result: ClaimResult) -> bool:
    """Re-derive a witnessed result from its witness alone and compare."""
    if result.witness is None:
        return True
    inst = Instance.from_json(result.witness["instance"])
    again = verify_claim(result.claim, inst)
    return any(r.to_json() == result.to_json() for r in again)


# ------------------------------------------------------------------ corpus


@dataclass(frozen=True)
class CorpusSpec:
    """Recipe list and size caps for the default claim corpus."""

    family_max_vertices: int = 40
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_edges: int = DEFAULT_MAX_EDGES
    transforms: tuple[str, ...] = ("subdivision", "square_replacement")
    products: tuple[str, ...] = ("cartesian", "lexicographic")
    empty_orders: tuple[int, ...] = (1, 2, 3)
    product_factor_max_vertices: int = 32
    bipartite_param_max: int = 8
    subdivision_orders: tuple[int, ...] = (1, 2, 3, 4, 5, 6)
    square_orders: tuple[int, ...] = (3, 4, 5, 6)
    shell_params: tuple[tuple[int, int], ...] = ((1, 2), (2, 2), (3, 2), (2, 3), (3, 3), (2, 4))


@dataclass(frozen=True)
class CorpusEntry:
    kind: str  # family | transform | cartesian | lexicographic
    instance: Instance


def _within(spec: CorpusSpec, vertices: int, edges: int) -> bool:
    return vertices <= spec.max_vertices and edges <= spec.max_edges


def family_graphs(spec: CorpusSpec) -> list[tuple[str, Graph]]:
    """Connected family members with at least one edge, within the caps."""
    cap = min(spec.family_max_vertices, spec.max_vertices)
    out = []

    def add(family, *params):
        fs = FamilySpec(family, params)
        g = generate(fs)
        if g.vertex_count <= cap and g.edge_count <= spec.max_edges:
            out.append((fs.label, g))

    for k in range(2, cap + 1):
        add("path", k)
    for k in range(3, cap + 1):
        add("cycle", k)
    # K_2 and K_3 already appear as path(2) and cycle(3)
    for k in range(4, cap + 1):
        add("complete", k)
    for m in range(1, cap + 1):
        for n in range(m, cap + 1 - m):
            if (m, n) in ((1, 1), (1, 2), (2, 2)):
                continue
            add("complete_bipartite", m, n)
    return out


def enumerate_corpus(spec: CorpusSpec) -> list[CorpusEntry]:
    """Deterministic list of graph and product instances."""
    entries: list[CorpusEntry] = []
    families = family_graphs(spec)
    for label, g in families:
        entries.append(CorpusEntry("family", Instance.of_graph(label, g)))
    builders = {"subdivision": (subdivision, 1), "square_replacement": (square_replacement, 2)}
    for name in spec.transforms:
        build, per_edge = builders[name]
        for label, g in families:
            if _within(spec, g.vertex_count + per_edge * g.edge_count, 2 * per_edge * g.edge_count):
                entries.append(CorpusEntry("transform", Instance.of_graph(f"{name}({label})", build(g))))
    factors = [(lbl, g) for lbl, g in families if g.vertex_count <= spec.product_factor_max_vertices]
    if "cartesian" in spec.products:
        for i, (la, a) in enumerate(factors):
            for lb, b in factors[i:]:
                nv = a.vertex_count * b.vertex_count
                ne = a.edge_count * b.vertex_count + a.vertex_count * b.edge_count
                if _within(spec, nv, ne):
                    entries.append(CorpusEntry("cartesian", Instance.of_product("cartesian", (la, a), (lb, b))))
    if "lexicographic" in spec.products:
        seconds = [(f"empty({k})", generate(FamilySpec("empty", (k,)))) for k in spec.empty_orders] + factors
        for la, a in factors:
            for lb, b in seconds:
                nv = a.vertex_count * b.vertex_count
                ne = a.edge_count * b.vertex_count ** 2 + a.vertex_count * b.edge_count
                if _within(spec, nv, ne):
                    entries.append(CorpusEntry("lexicographic", Instance.of_product("lexicographic", (la, a), (lb, b))))
    return entries


def parameter_instances(spec: CorpusSpec, claim: ClaimId) -> list[Instance]:
    """Parameter sets for the parametric claims, filtered by the caps."""
    out = []
    if claim is ClaimId.C2_1:
        top = spec.bipartite_param_max
        for m in range(2, top + 1):
            for n in range(m + 1, top + 1):
                if _within(spec, m + n, m * n):
                    out.append(Instance.of_params(m=m, n=n))
    elif claim in (ClaimId.P4_2, ClaimId.C4_3):
        for m in spec.subdivision_orders:
            if _within(spec, 2 * m + m * m, 2 * m * m):
                out.append(Instance.of_params(m=m))
    elif claim is ClaimId.P4_5:
        for m in spec.square_orders:
            if _within(spec, 2 * m + 2 * m * m, 4 * m * m):
                out.append(Instance.of_params(m=m))
    elif claim is ClaimId.E5_4:
        for n, lam in spec.shell_params:
            if _within(spec, n + lam * n, lam * n * n):
                out.append(Instance.of_params(n=n, **{"lambda": Fraction(lam)}))
    return out


def _claims_for(kind: str, claims: Iterable[ClaimId]) -> list[ClaimId]:
    pool = {"family": GRAPH_CLAIMS, "transform": GRAPH_CLAIMS,
            "cartesian": GRAPH_CLAIMS | CARTESIAN_CLAIMS,
            "lexicographic": GRAPH_CLAIMS | LEX_CLAIMS}[kind]
    return [c for c in claims if c in pool]


def check_caps(spec: CorpusSpec) -> None:
    if spec.max_vertices > DEFAULT_MAX_VERTICES or spec.max_edges > DEFAULT_MAX_EDGES:
        raise CapExceeded(
            f"caps {spec.max_vertices} vertices / {spec.max_edges} edges exceed "
            f"{DEFAULT_MAX_VERTICES} / {DEFAULT_MAX_EDGES}"
        )


def iter_results(spec: CorpusSpec, claims: Iterable[ClaimId], entries=None) -> Iterator[tuple[int, int, ClaimResult]]:
    """Yield ``(claim position, entry position, result)`` instance by instance."""
    order = list(ClaimId)
    claims = sorted(set(claims), key=order.index)
    if entries is None:
        entries = enumerate_corpus(spec)
    for pos, entry in enumerate(entries):
        g = entry.instance.graph
        if entry.kind == "lexicographic" and not g.connected:
            continue
        for c in _claims_for(entry.kind, claims):
            if c in GRAPH_CLAIMS:
                inst = Instance.of_graph(entry.instance.label, g)
            else:
                inst = entry.instance
            for r in verify_claim(c, inst):
                if not r.vacuous:
                    yield order.index(c), pos, r
    base = len(entries)
    for c in claims:
        if c in PARAM_CLAIMS:
            for k, inst in enumerate(parameter_instances(spec, c)):
                for r in verify_claim(c, inst):
                    yield order.index(c), base + k, r


def run_corpus(spec: CorpusSpec = CorpusSpec(), claims: Iterable[ClaimId] = tuple(ClaimId)) -> list[ClaimResult]:
    """All non-vacuous results, ordered by claim then by enumeration position."""
    check_caps(spec)
    rows = list(iter_results(spec, claims))
    rows.sort(key=lambda t: (t[0], t[1]))
    return [r for _, _, r in rows]


def summarize(results: Iterable[ClaimResult]) -> dict[str, int]:
    counts = {v.value: 0 for v in Verdict}
    for r in results:
        counts[r.verdict.value] += 1
    return counts
