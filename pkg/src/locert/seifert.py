"""Seifert pieces, splice trees and left-orderable-slope certificates.

The certificate machinery decides, for a splice forest of knot exteriors
glued along boundary tori, whether the resulting integer homology sphere
has left-orderable fundamental group, by exhibiting on some edge a slope
pair (alpha, f(alpha)) that is left-orderable on both sides.  Knowledge
about individual fillings is encoded as an ordered rule table with
evidence strings, because the facts come from disparate sources:

* B1Rule:            a 0-filling has positive first Betti number, hence a
                     surjection onto Z; with primeness this certifies
                     left-orderability (Boyer-Rolfsen-Wiest).  Primeness
                     of the 0-filling of a Seifert fibred exterior is
                     Heil's theorem; for user pieces it is a caller flag.
* ZHSClassification: a Seifert fibred integer homology sphere has
                     non-left-orderable fundamental group iff it is S^3 or
                     the Poincare sphere (Boyer-Rolfsen-Wiest).
* LSpaceInterval:    p/q surgery on a positive torus knot T(r, s) is an
                     L-space iff p/q >= rs - r - s, and a Seifert fibred
                     L-space is exactly a Seifert fibred space with
                     non-left-orderable fundamental group
                     (Boyer-Gordon-Watson).  Mirrors by slope negation.
* UserAsserted:      caller-supplied verdicts, recorded verbatim.

Surgeries on torus knots are classified by Moser's theorem: p/q surgery
on T(r, s) is reducible iff p = qrs, a lens space iff |p - qrs| = 1, and
otherwise Seifert fibred with exceptional fibres of orders r, s and
|p - qrs|.

Pieces carry at most one boundary torus (torus-knot and user-asserted
exteriors) or none (closed Brieskorn spheres), which is all the splice
certificates here need; general multi-boundary Seifert calculus is out of
scope.  Connected components of a forest are prime summands and are
certified independently: a free product is left-orderable iff each
nontrivial factor is.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import gcd

from .slopes import (
    GluingMatrix,
    Slope,
    apply_gluing,
    intersection_number,
    invert_gluing,
    make_slope,
    slope_str,
    union_homology_order,
)

__all__ = [
    "LOStatus",
    "LORule",
    "LOSlopeVerdict",
    "NotCoprime",
    "RuleInapplicable",
    "InvalidParams",
    "InvalidSpliceTree",
    "BrieskornZHS",
    "TorusKnotPiece",
    "UserPiece",
    "SpliceEdge",
    "SpliceTree",
    "ExceptionalKind",
    "MoserKind",
    "MoserResult",
    "HFParams",
    "Certificate",
    "EdgeCertificate",
    "ComponentReport",
    "SearchOutcome",
    "recognize_exceptional",
    "zhs_lo_status",
    "moser_surgery",
    "torus_knot_lspace_verdict",
    "slope_lo_verdict",
    "certificate_search",
    "verify_certificate",
    "hf_surgery_rank",
    "enumerate_slopes",
]


class NotCoprime(ValueError):
    """Brieskorn multiplicities must be pairwise coprime."""


class RuleInapplicable(ValueError):
    """The L-space interval rule does not cover reducible fillings."""


class InvalidParams(ValueError):
    """Surgery-rank parameters out of range."""


class InvalidSpliceTree(ValueError):
    """Structural defect in a splice tree."""


class LOStatus(Enum):
    LO = "lo"
    NOT_LO = "not_lo"
    UNKNOWN = "unknown"


class LORule(Enum):
    B1_RULE = "B1Rule"
    ZHS_CLASSIFICATION = "ZHSClassification"
    LSPACE_INTERVAL = "LSpaceInterval"
    USER_ASSERTED = "UserAsserted"


@dataclass(frozen=True)
class LOSlopeVerdict:
    status: LOStatus
    rule: LORule | None
    evidence: str

    def __post_init__(self) -> None:
        if self.status is not LOStatus.UNKNOWN and self.rule is None:
            raise ValueError("a definite verdict must carry a rule tag")

    def to_json(self) -> dict:
        return {
            "status": self.status.value,
            "rule": self.rule.value if self.rule else None,
            "evidence": self.evidence,
        }


# --- pieces -------------------------------------------------------------------


@dataclass(frozen=True)
class BrieskornZHS:
    """Closed Brieskorn integer homology sphere with pairwise coprime
    multiplicities; entries equal to 1 are normalization padding."""

    multiplicities: tuple[int, ...]
    name: str = ""

    def __post_init__(self) -> None:
        ms = self.multiplicities
        if not ms or any(m < 1 for m in ms):
            raise NotCoprime("multiplicities must be integers >= 1")
        nontrivial = [m for m in ms if m > 1]
        for i in range(len(nontrivial)):
            for j in range(i + 1, len(nontrivial)):
                if gcd(nontrivial[i], nontrivial[j]) != 1:
                    raise NotCoprime(
                        f"multiplicities {nontrivial[i]} and {nontrivial[j]} "
                        "share a factor"
                    )

    def boundary_count(self) -> int:
        return 0

    def describe(self) -> str:
        inner = ",".join(str(m) for m in self.multiplicities)
        return f"Sigma({inner})"


@dataclass(frozen=True)
class TorusKnotPiece:
    """Exterior of the (r, s) torus knot in S^3; chirality +1 is the
    positive (right-handed) torus knot and -1 its mirror."""

    r: int
    s: int
    chirality: int = 1
    name: str = ""

    def __post_init__(self) -> None:
        if self.r < 2 or self.s < 2 or gcd(self.r, self.s) != 1:
            raise ValueError("torus knot needs coprime r, s >= 2")
        if self.chirality not in (1, -1):
            raise ValueError("chirality must be +1 or -1")

    def boundary_count(self) -> int:
        return 1

    def describe(self) -> str:
        sign = "+" if self.chirality > 0 else "-"
        return f"T({self.r},{self.s}) chirality {sign}1"


@dataclass(frozen=True)
class UserPiece:
    """Knot exterior with caller-supplied slope verdicts.

    ``asserted`` maps normalized slopes to statuses; the meridian entry
    (1, 0), when LO, asserts that the ambient homology sphere has
    left-orderable fundamental group.  ``prime_zero_filling`` supplies the
    primeness hypothesis the B1 rule needs.
    """

    name: str = ""
    description: str = ""
    asserted: tuple[tuple[Slope, LOStatus], ...] = ()
    prime_zero_filling: bool = False

    def boundary_count(self) -> int:
        return 1

    def lookup(self, alpha: Slope) -> LOStatus | None:
        for s, status in self.asserted:
            if s == alpha:
                return status
        return None

    def describe(self) -> str:
        return self.description or self.name or "user piece"


Piece = BrieskornZHS | TorusKnotPiece | UserPiece


@dataclass(frozen=True)
class SpliceEdge:
    """Gluing of node a's boundary to node b's, as a unimodular matrix in
    the two (meridian, longitude) framings, acting a-side -> b-side."""

    a: int
    b: int
    matrix: GluingMatrix


@dataclass(frozen=True)
class SpliceTree:
    nodes: tuple[Piece, ...]
    edges: tuple[SpliceEdge, ...]

    def validate(self, zhs_mode: bool = True) -> None:
        degree = [0] * len(self.nodes)
        for e in self.edges:
            for end in (e.a, e.b):
                if not 0 <= end < len(self.nodes):
                    raise InvalidSpliceTree(f"edge endpoint {end} out of range")
                degree[end] += 1
            if e.a == e.b:
                raise InvalidSpliceTree("self-gluings are not supported")
            if abs(e.matrix.det()) != 1:
                raise InvalidSpliceTree("gluing matrix must be unimodular")
            if zhs_mode and union_homology_order(
                e.matrix, Slope(0, 1), Slope(0, 1)
            ) != 1:
                raise InvalidSpliceTree(
                    "edge does not glue to an integer homology sphere "
                    "(Delta(f(lambda), lambda) != 1)"
                )
        for i, piece in enumerate(self.nodes):
            if degree[i] > piece.boundary_count():
                raise InvalidSpliceTree(
                    f"node {i} ({piece.describe()}) has {degree[i]} edges but "
                    f"{piece.boundary_count()} boundary tori"
                )
        # With at most one boundary per piece the edge set is automatically
        # acyclic; components are single nodes or exterior pairs.

    def components(self) -> list[tuple[list[int], list[int]]]:
        """Connected components as (node indices, edge indices), in
        deterministic order."""
        adj: dict[int, list[int]] = {i: [] for i in range(len(self.nodes))}
        for ei, e in enumerate(self.edges):
            adj[e.a].append(ei)
            adj[e.b].append(ei)
        seen: set[int] = set()
        out = []
        for start in range(len(self.nodes)):
            if start in seen:
                continue
            nodes = [start]
            seen.add(start)
            edge_ids = []
            stack = [start]
            while stack:
                v = stack.pop()
                for ei in adj[v]:
                    e = self.edges[ei]
                    w = e.b if e.a == v else e.a
                    if ei not in edge_ids:
                        edge_ids.append(ei)
                    if w not in seen:
                        seen.add(w)
                        nodes.append(w)
                        stack.append(w)
            out.append((sorted(nodes), sorted(edge_ids)))
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "SpliceTree":
        nodes: list[Piece] = []
        for nd in obj["nodes"]:
            kind = nd["kind"]
            if kind == "torus_knot":
                nodes.append(
                    TorusKnotPiece(
                        nd["r"], nd["s"], nd.get("chirality", 1), nd.get("name", "")
                    )
                )
            elif kind == "brieskorn":
                nodes.append(
                    BrieskornZHS(tuple(nd["multiplicities"]), nd.get("name", ""))
                )
            elif kind == "user":
                asserted = tuple(
                    (make_slope(*map(int, s.split("/"))), LOStatus(v))
                    for s, v in nd.get("asserted", {}).items()
                )
                nodes.append(
                    UserPiece(
                        nd.get("name", ""),
                        nd.get("description", ""),
                        asserted,
                        nd.get("prime_zero_filling", False),
                    )
                )
            else:
                raise InvalidSpliceTree(f"unknown node kind {kind!r}")
        edges = tuple(
            SpliceEdge(e["a"], e["b"], GluingMatrix(*e["matrix"]))
            for e in obj.get("edges", [])
        )
        return cls(tuple(nodes), edges)

    def to_json(self) -> dict:
        nodes = []
        for piece in self.nodes:
            if isinstance(piece, TorusKnotPiece):
                nodes.append(
                    {
                        "kind": "torus_knot",
                        "r": piece.r,
                        "s": piece.s,
                        "chirality": piece.chirality,
                        "name": piece.name,
                    }
                )
            elif isinstance(piece, BrieskornZHS):
                nodes.append(
                    {
                        "kind": "brieskorn",
                        "multiplicities": list(piece.multiplicities),
                        "name": piece.name,
                    }
                )
            else:
                nodes.append(
                    {
                        "kind": "user",
                        "name": piece.name,
                        "description": piece.description,
                        "asserted": {
                            slope_str(s): st.value for s, st in piece.asserted
                        },
                        "prime_zero_filling": piece.prime_zero_filling,
                    }
                )
        return {
            "version": 1,
            "nodes": nodes,
            "edges": [
                {"a": e.a, "b": e.b, "matrix": list(e.matrix)} for e in self.edges
            ],
        }


# --- classification rules -----------------------------------------------------


class ExceptionalKind(Enum):
    S3 = "S3"
    POINCARE = "Poincare"
    OTHER = "Other"


def recognize_exceptional(z: BrieskornZHS) -> ExceptionalKind:
    """S^3 has fewer than three nontrivial multiplicities; {2, 3, 5} is the
    Poincare sphere; everything else is a different Brieskorn sphere."""
    nontrivial = sorted(m for m in z.multiplicities if m > 1)
    if len(nontrivial) < 3:
        return ExceptionalKind.S3
    if nontrivial == [2, 3, 5]:
        return ExceptionalKind.POINCARE
    return ExceptionalKind.OTHER


def zhs_lo_status(z: BrieskornZHS) -> LOSlopeVerdict:
    """Boyer-Rolfsen-Wiest: among Seifert fibred integer homology spheres
    exactly S^3 (trivial group, not left-orderable by convention) and the
    Poincare sphere fail to be left-orderable."""
    kind = recognize_exceptional(z)
    if kind is ExceptionalKind.S3:
        return LOSlopeVerdict(
            LOStatus.NOT_LO,
            LORule.ZHS_CLASSIFICATION,
            f"{z.describe()} is S^3; the trivial group is not left-orderable",
        )
    if kind is ExceptionalKind.POINCARE:
        return LOSlopeVerdict(
            LOStatus.NOT_LO,
            LORule.ZHS_CLASSIFICATION,
            f"{z.describe()} is the Poincare sphere; finite fundamental group",
        )
    return LOSlopeVerdict(
        LOStatus.LO,
        LORule.ZHS_CLASSIFICATION,
        f"{z.describe()} is a Seifert fibred integer homology sphere other "
        "than S^3 and the Poincare sphere (Boyer-Rolfsen-Wiest)",
    )


class MoserKind(Enum):
    SFS = "sfs"
    LENS = "lens"
    REDUCIBLE = "reducible"


@dataclass(frozen=True)
class MoserResult:
    kind: MoserKind
    multiplicities: tuple[int, ...] | None
    h1_order: int  # 0 means infinite


def _effective_slope(k: TorusKnotPiece, alpha: Slope) -> Slope:
    """Mirror symmetry: the (p, q) filling of the mirror exterior is the
    (-p, q) filling of the positive one."""
    if k.chirality > 0:
        return alpha
    return make_slope(-alpha.p, alpha.q)


def moser_surgery(k: TorusKnotPiece, alpha: Slope) -> MoserResult:
    """Moser's classification of p/q surgery on the torus knot T(r, s)."""
    eff = _effective_slope(k, alpha)
    rs = k.r * k.s
    d = eff.p - eff.q * rs
    if d == 0:
        return MoserResult(MoserKind.REDUCIBLE, None, abs(eff.p))
    if abs(d) == 1:
        return MoserResult(MoserKind.LENS, None, abs(eff.p))
    return MoserResult(MoserKind.SFS, (k.r, k.s, abs(d)), abs(eff.p))


def torus_knot_lspace_verdict(k: TorusKnotPiece, alpha: Slope) -> LOSlopeVerdict:
    """L-space interval rule: for the positive T(r, s), the p/q filling is
    an L-space iff p/q >= rs - r - s; by Boyer-Gordon-Watson this is
    exactly non-left-orderability among these Seifert fibred fillings."""
    result = moser_surgery(k, alpha)
    if result.kind is MoserKind.REDUCIBLE:
        raise RuleInapplicable(
            f"{slope_str(alpha)} filling of {k.describe()} is reducible"
        )
    eff = _effective_slope(k, alpha)
    threshold = k.r * k.s - k.r - k.s
    # p/q >= threshold with q >= 0, as the exact integer inequality.
    not_lo = eff.p >= threshold * eff.q
    where = f"{eff.p}/{eff.q} on the positive T({k.r},{k.s})"
    if not_lo:
        return LOSlopeVerdict(
            LOStatus.NOT_LO,
            LORule.LSPACE_INTERVAL,
            f"{where} satisfies p/q >= rs - r - s = {threshold}: an L-space "
            "filling, hence not left-orderable (Boyer-Gordon-Watson)",
        )
    return LOSlopeVerdict(
        LOStatus.LO,
        LORule.LSPACE_INTERVAL,
        f"{where} satisfies p/q < rs - r - s = {threshold}: not an L-space, "
        "and the filling is Seifert fibred, hence left-orderable "
        "(Boyer-Gordon-Watson)",
    )


def slope_lo_verdict(piece: Piece, alpha: Slope) -> LOSlopeVerdict:
    """Dispatch over the rule table; first applicable rule wins, in the
    order B1Rule, ZHSClassification, LSpaceInterval, UserAsserted."""
    if isinstance(piece, BrieskornZHS):
        raise ValueError("closed pieces have no slopes to fill")
    alpha = make_slope(alpha.p, alpha.q)

    if alpha.p == 0:
        if isinstance(piece, TorusKnotPiece):
            return LOSlopeVerdict(
                LOStatus.LO,
                LORule.B1_RULE,
                "0-filling has infinite first homology (surjection onto Z) "
                "and is prime and Seifert fibred (Heil)",
            )
        if isinstance(piece, UserPiece) and piece.prime_zero_filling:
            return LOSlopeVerdict(
                LOStatus.LO,
                LORule.B1_RULE,
                "0-filling has infinite first homology (surjection onto Z); "
                "primeness supplied by caller flag",
            )

    if isinstance(piece, TorusKnotPiece):
        result = moser_surgery(piece, alpha)
        if abs(alpha.p) == 1 and result.kind is not MoserKind.REDUCIBLE:
            if result.kind is MoserKind.LENS:
                closed = BrieskornZHS((1,))
            else:
                closed = BrieskornZHS(result.multiplicities)
            verdict = zhs_lo_status(closed)
            return LOSlopeVerdict(
                verdict.status,
                LORule.ZHS_CLASSIFICATION,
                f"{slope_str(alpha)} filling of {piece.describe()} closes to "
                f"{closed.describe()}: " + verdict.evidence,
            )
        if result.kind is not MoserKind.REDUCIBLE:
            return torus_knot_lspace_verdict(piece, alpha)
        return LOSlopeVerdict(
            LOStatus.UNKNOWN,
            None,
            f"{slope_str(alpha)} filling of {piece.describe()} is reducible; "
            "no rule applies",
        )

    status = piece.lookup(alpha)
    if status is not None:
        return LOSlopeVerdict(
            status,
            LORule.USER_ASSERTED,
            f"asserted by caller on {piece.describe()} at {slope_str(alpha)}",
        )
    return LOSlopeVerdict(
        LOStatus.UNKNOWN, None, f"no rule applies at {slope_str(alpha)}"
    )


# --- Heegaard Floer surgery rank calculator ------------------------------------


@dataclass(frozen=True)
class HFParams:
    """Inputs to the rational surgery rank formula: surgery coefficient
    p/q with q > 0, the nonnegative knot invariant nu, and the ranks of
    the large-surgery homology groups (all >= 1)."""

    p: int
    q: int
    nu: int
    as_ranks: tuple[int, ...]


def hf_surgery_rank(params: HFParams) -> int:
    """Total Heegaard Floer rank of the p/q surgery.

    For nu > 0 the formula reads
        p + 2 max(0, (2 nu - 1) q - p) + q * sum(rank - 1),
    and for nu = 0 it collapses to |p| + q * sum(rank - 1).  The value is
    always >= |p|, with equality characterizing L-space surgeries.
    """
    if params.q <= 0:
        raise InvalidParams("q must be positive")
    if params.nu < 0:
        raise InvalidParams("nu must be nonnegative")
    if any(r < 1 for r in params.as_ranks):
        raise InvalidParams("all ranks must be >= 1")
    extra = params.q * sum(r - 1 for r in params.as_ranks)
    if params.nu == 0:
        return abs(params.p) + extra
    return params.p + 2 * max(0, (2 * params.nu - 1) * params.q - params.p) + extra


# --- certificates ---------------------------------------------------------------


@dataclass(frozen=True)
class EdgeCertificate:
    edge_index: int
    alpha: Slope  # slope on the a-side of the edge
    image: Slope  # f(alpha) on the b-side
    verdict_a: LOSlopeVerdict
    verdict_b: LOSlopeVerdict

    def to_json(self) -> dict:
        return {
            "edge": self.edge_index,
            "alpha": slope_str(self.alpha),
            "image": slope_str(self.image),
            "verdict_a": self.verdict_a.to_json(),
            "verdict_b": self.verdict_b.to_json(),
        }


@dataclass(frozen=True)
class ComponentReport:
    nodes: tuple[int, ...]
    status: LOStatus
    pieces: tuple[str, ...]
    edge_certificate: EdgeCertificate | None
    leaf_verdict: LOSlopeVerdict | None
    note: str = ""

    def to_json(self) -> dict:
        return {
            "nodes": list(self.nodes),
            "status": self.status.value,
            "pieces": list(self.pieces),
            "edge_certificate": (
                self.edge_certificate.to_json() if self.edge_certificate else None
            ),
            "leaf_verdict": self.leaf_verdict.to_json() if self.leaf_verdict else None,
            "note": self.note,
        }


@dataclass(frozen=True)
class Certificate:
    components: tuple[ComponentReport, ...]
    hypotheses: tuple[str, ...]
    search_bound: int

    def to_json(self) -> dict:
        return {
            "version": 1,
            "search_bound": self.search_bound,
            "components": [c.to_json() for c in self.components],
            "hypotheses": list(self.hypotheses),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "Certificate":
        comps = []
        for c in obj["components"]:
            edge = None
            if c.get("edge_certificate"):
                ec = c["edge_certificate"]
                edge = EdgeCertificate(
                    ec["edge"],
                    make_slope(*map(int, ec["alpha"].split("/"))),
                    make_slope(*map(int, ec["image"].split("/"))),
                    _verdict_from_json(ec["verdict_a"]),
                    _verdict_from_json(ec["verdict_b"]),
                )
            leaf = (
                _verdict_from_json(c["leaf_verdict"]) if c.get("leaf_verdict") else None
            )
            comps.append(
                ComponentReport(
                    tuple(c["nodes"]),
                    LOStatus(c["status"]),
                    tuple(c.get("pieces", ())),
                    edge,
                    leaf,
                    c.get("note", ""),
                )
            )
        return cls(
            tuple(comps), tuple(obj.get("hypotheses", ())), obj.get("search_bound", 0)
        )


def _verdict_from_json(obj: dict) -> LOSlopeVerdict:
    return LOSlopeVerdict(
        LOStatus(obj["status"]),
        LORule(obj["rule"]) if obj.get("rule") else None,
        obj.get("evidence", ""),
    )


@dataclass(frozen=True)
class SearchOutcome:
    certificate: Certificate | None
    components: tuple[ComponentReport, ...]

    @property
    def status(self) -> LOStatus:
        if self.certificate is not None:
            return LOStatus.LO
        if any(c.status is LOStatus.NOT_LO for c in self.components):
            return LOStatus.NOT_LO
        return LOStatus.UNKNOWN


def enumerate_slopes(bound: int) -> list[Slope]:
    """All normalized primitive slopes with |p| <= bound and 0 <= q <=
    bound, in the deterministic order (max(|p|, q), q, p) that the search
    commits to."""
    out = []
    for q in range(0, bound + 1):
        for p in range(-bound, bound + 1):
            if q == 0 and p != 1:
                continue
            if gcd(p, q) != 1:
                continue
            out.append(Slope(p, q))
    out.sort(key=lambda s: (max(abs(s.p), s.q), s.q, s.p))
    return out


def _closed_leaf_verdict(piece: Piece) -> LOSlopeVerdict:
    """Status of a component consisting of a single node."""
    if isinstance(piece, BrieskornZHS):
        return zhs_lo_status(piece)
    # An exterior with its single boundary unfilled cannot be a closed
    # summand; treated as malformed input upstream.
    raise InvalidSpliceTree(
        f"{piece.describe()} is an exterior but has no gluing edge"
    )


def _certify_edge(
    tree: SpliceTree, edge_index: int, bound: int, hypotheses: list[str]
) -> EdgeCertificate | None:
    edge = tree.edges[edge_index]
    piece_a = tree.nodes[edge.a]
    piece_b = tree.nodes[edge.b]
    f = edge.matrix
    f_inv = invert_gluing(f)
    lam = Slope(0, 1)

    def record(v: LOSlopeVerdict, side: str) -> None:
        if v.rule is LORule.B1_RULE:
            hypotheses.append(f"edge {edge_index} side {side}: {v.evidence}")

    # Splice shortcut: if one side's edge-preferred meridian mu = f^-1 of
    # the other longitude is a left-orderable slope (its filling is the
    # ambient homology sphere), pair it with that longitude, which is
    # left-orderable by the B1 rule.
    mu_a = apply_gluing(f_inv, lam)
    verdict_a = slope_lo_verdict(piece_a, mu_a)
    if verdict_a.status is LOStatus.LO:
        verdict_b = slope_lo_verdict(piece_b, lam)
        if verdict_b.status is LOStatus.LO:
            record(verdict_a, "a")
            record(verdict_b, "b")
            return EdgeCertificate(edge_index, mu_a, lam, verdict_a, verdict_b)
    mu_b = apply_gluing(f, lam)
    verdict_b = slope_lo_verdict(piece_b, mu_b)
    if verdict_b.status is LOStatus.LO:
        verdict_a = slope_lo_verdict(piece_a, lam)
        if verdict_a.status is LOStatus.LO:
            record(verdict_a, "a")
            record(verdict_b, "b")
            return EdgeCertificate(edge_index, lam, mu_b, verdict_a, verdict_b)

    # General search over bounded slopes, first verified pair in the
    # deterministic order wins.
    for alpha in enumerate_slopes(bound):
        va = slope_lo_verdict(piece_a, alpha)
        if va.status is not LOStatus.LO:
            continue
        image = apply_gluing(f, alpha)
        vb = slope_lo_verdict(piece_b, image)
        if vb.status is not LOStatus.LO:
            continue
        record(va, "a")
        record(vb, "b")
        return EdgeCertificate(edge_index, alpha, image, va, vb)
    return None


def certificate_search(
    tree: SpliceTree, edge: int | None = None, search_bound: int = 3
) -> SearchOutcome:
    """Search for a left-orderability certificate on the splice forest.

    Components (prime summands) are certified independently.  For a
    two-piece component the chosen edge is certified by exhibiting a slope
    pair left-orderable on both sides; single closed nodes are classified
    directly.  Unknown is a first-class result: the rule table is partial
    and the slope search is bounded.
    """
    tree.validate(zhs_mode=True)
    if edge is not None and not 0 <= edge < len(tree.edges):
        raise InvalidSpliceTree(f"edge index {edge} out of range")
    hypotheses: list[str] = []
    reports: list[ComponentReport] = []
    all_lo = True
    for node_ids, edge_ids in tree.components():
        pieces = tuple(tree.nodes[i].describe() for i in node_ids)
        if not edge_ids:
            verdict = _closed_leaf_verdict(tree.nodes[node_ids[0]])
            reports.append(
                ComponentReport(
                    tuple(node_ids), verdict.status, pieces, None, verdict
                )
            )
            if verdict.status is not LOStatus.LO:
                all_lo = False
            continue
        chosen = edge if edge in edge_ids else edge_ids[0]
        cert = _certify_edge(tree, chosen, search_bound, hypotheses)
        if cert is None:
            reports.append(
                ComponentReport(
                    tuple(node_ids),
                    LOStatus.UNKNOWN,
                    pieces,
                    None,
                    None,
                    f"no slope pair with |p|, q <= {search_bound} verified "
                    "left-orderable on both sides",
                )
            )
            all_lo = False
        else:
            reports.append(
                ComponentReport(tuple(node_ids), LOStatus.LO, pieces, cert, None)
            )
    certificate = None
    if all_lo:
        certificate = Certificate(
            tuple(reports), tuple(dict.fromkeys(hypotheses)), search_bound
        )
    return SearchOutcome(certificate, tuple(reports))


def verify_certificate(
    tree: SpliceTree, cert: Certificate
) -> tuple[bool, list[str]]:
    """Re-derive every verdict and homology condition in a certificate.

    Checks that the certificate covers all components of the tree, that
    every cited edge pair re-verifies as left-orderable on both sides with
    the image slope recomputed from the gluing matrix, and that every edge
    has unit union homology.
    """
    report: list[str] = []
    ok = True

    def fail(msg: str) -> None:
        nonlocal ok
        ok = False
        report.append("FAIL " + msg)

    try:
        tree.validate(zhs_mode=True)
        report.append("tree valid: all edges glue to integer homology spheres")
    except InvalidSpliceTree as exc:
        fail(f"tree invalid: {exc}")
        return False, report

    actual = {tuple(nodes): edges for nodes, edges in tree.components()}
    claimed = {tuple(sorted(c.nodes)): c for c in cert.components}
    if set(actual) != set(claimed):
        fail("certificate components do not match the tree's components")
        return False, report

    for nodes, edge_ids in actual.items():
        comp = claimed[nodes]
        if comp.status is not LOStatus.LO:
            fail(f"component {list(nodes)} not certified left-orderable")
            continue
        if not edge_ids:
            piece = tree.nodes[nodes[0]]
            verdict = _closed_leaf_verdict(piece)
            if comp.leaf_verdict is None or verdict.status is not LOStatus.LO:
                fail(f"closed component {list(nodes)} re-derives as "
                     f"{verdict.status.value}")
            else:
                report.append(
                    f"component {list(nodes)}: closed piece re-verified "
                    f"({verdict.evidence})"
                )
            continue
        ec = comp.edge_certificate
        if ec is None:
            fail(f"component {list(nodes)} lacks an edge certificate")
            continue
        if ec.edge_index not in edge_ids:
            fail(f"edge {ec.edge_index} does not belong to component "
                 f"{list(nodes)}")
            continue
        edge = tree.edges[ec.edge_index]
        image = apply_gluing(edge.matrix, ec.alpha)
        if image != make_slope(ec.image.p, ec.image.q):
            fail(
                f"edge {ec.edge_index}: recorded image {slope_str(ec.image)} "
                f"differs from f(alpha) = {slope_str(image)}"
            )
            continue
        va = slope_lo_verdict(tree.nodes[edge.a], ec.alpha)
        vb = slope_lo_verdict(tree.nodes[edge.b], image)
        if va.status is not LOStatus.LO:
            fail(
                f"edge {ec.edge_index}: slope {slope_str(ec.alpha)} "
                f"re-derives as {va.status.value} on side a ({va.evidence})"
            )
        elif vb.status is not LOStatus.LO:
            fail(
                f"edge {ec.edge_index}: slope {slope_str(image)} re-derives "
                f"as {vb.status.value} on side b ({vb.evidence})"
            )
        else:
            report.append(
                f"edge {ec.edge_index}: pair ({slope_str(ec.alpha)}, "
                f"{slope_str(image)}) re-verified left-orderable on both sides"
            )
    return ok, report
