"""Aggregate all invariants of one knot, cross-checking independent routes."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .errors import InvariantViolation
from .goeritz import goeritz_matrix, signature_oracle
from .linalg import determinant as matrix_determinant
from .plumbing import is_negative_definite, plumbing_graph, plumbing_triple, seifert_presentation
from .pretzel import CanonicalForm, PretzelParams, canonicalize, determinant, is_ribbon, is_two_bridge
from .qm import QmResult, canonical_profile, qm
from .rasmussen import s_invariant
from .regions import family_member
from .signature import signature
from .squeeze import SqueezeVerdict, classify


@dataclass
class InvariantReport:
    input: tuple[int, int, int]
    canonical: tuple[int, int, int]
    mirrored: bool
    permutation: tuple[int, int, int]
    det: int
    sigma: int
    sigma_oracle: int
    s: int
    qm: QmResult
    verdict: SqueezeVerdict
    g4_lower_bound: int
    profile: dict | None = None
    seifert: dict | None = None
    plumbing: dict | None = None
    flags: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["input"] = list(self.input)
        d["canonical"] = list(self.canonical)
        d["permutation"] = list(self.permutation)
        d["qm"] = self.qm.to_dict()
        d["verdict"] = self.verdict.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "InvariantReport":
        d = dict(d)
        d["input"] = tuple(d["input"])
        d["canonical"] = tuple(d["canonical"])
        d["permutation"] = tuple(d["permutation"])
        d["qm"] = QmResult.from_dict(d["qm"])
        d["verdict"] = SqueezeVerdict.from_dict(d["verdict"])
        return cls(**d)

    def flag_names(self) -> list[str]:
        return [f["name"] for f in self.flags]

    def flat(self) -> dict:
        """One flat row for tabular output."""
        prof = self.profile or {}
        w = self.verdict.witness
        return {
            "p": self.canonical[0],
            "q": self.canonical[1],
            "r": self.canonical[2],
            "input": " ".join(str(x) for x in self.input),
            "mirrored": self.mirrored,
            "det": self.det,
            "sigma": self.sigma,
            "sigma_oracle": self.sigma_oracle,
            "s": self.s,
            "qm_kind": self.qm.kind,
            "qm_value": self.qm.value,
            "qm_lo": self.qm.lo,
            "qm_hi": self.qm.hi,
            "qm_rule": self.qm.rule,
            "status": self.verdict.status,
            "squeeze_rule": self.verdict.rule,
            "witness_qm": None if w is None else w[0],
            "witness_s_half": None if w is None else w[1],
            "g4_lower_bound": self.g4_lower_bound,
            "tau_L": prof.get("L"),
            "tau_increment": prof.get("increment"),
            "tau_min": prof.get("min"),
            "tau_first_violation": prof.get("first_violation"),
            "tau_nondecreasing": prof.get("nondecreasing"),
            "flags": ";".join(self.flag_names()),
        }


def p0_printed_value(params: PretzelParams) -> int | None:
    """The alternative closed form for P(0, q, r): |q+r-2|/2 if qr > 0, |q-r|/2 if qr < 0.

    Evaluated on the input's own chirality; None unless an entry is 0.
    """
    t = params.as_tuple()
    if 0 not in t:
        return None
    rest = list(t)
    rest.remove(0)
    q, r = rest
    if q * r > 0:
        return abs(q + r - 2) // 2
    return abs(q - r) // 2


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise InvariantViolation(msg)


def build_report(params: PretzelParams) -> InvariantReport:
    cf: CanonicalForm = canonicalize(params)
    det = determinant(params)
    sigma = signature(params)
    oracle = signature_oracle(params)
    _check(sigma == oracle, f"{params}: signature {sigma} != Goeritz oracle {oracle}")
    g_det = abs(matrix_determinant(goeritz_matrix(params)))
    _check(g_det == det, f"{params}: |det G| = {g_det} != {det}")

    s = s_invariant(params)
    q = qm(params)
    if q.exact:
        _check(abs(2 * q.value + sigma) <= 2, f"{params}: q_M = {q.value} too far from -sigma/2 = {-sigma / 2}")
    verdict = classify(params)

    flags = []
    if is_ribbon(params):
        flags.append({"name": "ribbon"})
    if is_two_bridge(params):
        flags.append({"name": "two_bridge"})
    fam = family_member(params)
    if fam is not None:
        flags.append({"name": "family_member", "a": fam[0], "b": fam[1]})
    if (q.exact and 2 * q.value != -sigma) or s != -sigma:
        flags.append({"name": "not_quasi_alternating"})
    printed = p0_printed_value(params)
    if printed is not None and q.exact and printed != q.value:
        flags.append({
            "name": "p0_formula_discrepancy",
            "as_printed": printed,
            "antisymmetry_consistent": q.value,
        })

    profile = seifert = graph = None
    region = plumbing_triple(params)
    if region is not None:
        si = seifert_presentation(region)
        g = plumbing_graph(si)
        _check(is_negative_definite(g), f"{params}: plumbing graph is not negative definite")
        m_det = abs(matrix_determinant(g.intersection_matrix()))
        _check(m_det == det, f"{params}: |det plumbing| = {m_det} != {det}")
        profile = canonical_profile(region).to_dict()
        seifert = si.to_dict()
        graph = g.to_dict()
        if si.mirror:
            flags.append({"name": "mirror_presentation"})
        if q.rule == 5 and "beyond" in q.citation:
            flags.append({"name": "beyond_closed_form_tables"})

    return InvariantReport(
        input=params.as_tuple(),
        canonical=cf.params.as_tuple(),
        mirrored=cf.mirrored,
        permutation=cf.permutation,
        det=det,
        sigma=sigma,
        sigma_oracle=oracle,
        s=s,
        qm=q,
        verdict=verdict,
        g4_lower_bound=max(abs(s) // 2, abs(q.value) if q.exact else 0),
        profile=profile,
        seifert=seifert,
        plumbing=graph,
        flags=flags,
    )


def render_text(rep: InvariantReport) -> str:
    q = rep.qm
    qm_text = f"{q.value} (Exact, rule {q.rule} {q.rule_name})" if q.exact else f"[{q.lo}, {q.hi}] (Interval)"
    lines = [
        f"knot          P{rep.input}",
        f"canonical     P{rep.canonical}{'  (mirrored)' if rep.mirrored else ''}",
        f"det           {rep.det}",
        f"sigma         {rep.sigma}  (Goeritz oracle {rep.sigma_oracle})",
        f"s             {rep.s}  (s/2 = {rep.s // 2})",
        f"q_M           {qm_text}",
        f"              {q.citation}",
        f"squeezed      {rep.verdict.status} ({rep.verdict.rule}: {rep.verdict.citation})",
    ]
    if rep.verdict.witness is not None:
        lines.append(f"witness       q_M = {rep.verdict.witness[0]}, s/2 = {rep.verdict.witness[1]}")
    lines.append(f"g4 >=         {rep.g4_lower_bound}")
    if rep.profile is not None:
        pr = rep.profile
        state = "nondecreasing" if pr["nondecreasing"] else f"first violation at n={pr['first_violation']}"
        lines.append(f"tau           {state}, L={pr['L']}, increment={pr['increment']}, min={pr['min']}")
        lines.append(f"seifert       e0={rep.seifert['e0']} legs={rep.seifert['legs']}")
    for f in rep.flags:
        extra = {k: v for k, v in f.items() if k != "name"}
        lines.append(f"flag          {f['name']}" + (f" {extra}" if extra else ""))
    return "\n".join(lines)
