"""Localised Brauer classes: toral-terminal tests and canonical order presentations."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field as dc_field
from math import gcd
from typing import Any

from .algebra import left_span
from .fields import GF, FieldError, field
from .hj import IntersectionData, determinant_of_R, nu_sequence, singularity_type
from .orders import (
    AssumptionReport,
    build_delta_d,
    expected_dimension,
    hj_setup,
    no_secondary_setup,
    uniformiser_and_checks,
    verify_assumption,
    with_secondary_setup,
)
from .symbols import (
    CyclicExtension,
    Monomial,
    SymbolPresentation,
    build_cover,
    build_hj_symbol,
    build_symbol,
    parse_monomial,
    tame_ramification,
)

VARIANTS = ("regular_no_secondary", "regular_with_secondary", "singular_hj")
NO_SECONDARY = "toral-terminal-no-secondary"
WITH_SECONDARY = "toral-terminal-with-secondary"
SINGULAR = "toral-terminal-singular"
NEGATIVE = "not-toral-terminal"

DELTA_D_BUDGET = 20000


class MalformedInput(ValueError):
    pass


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class Marking:
    prime: str
    value: int


@dataclass(frozen=True)
class LocalisedBrauerClass:
    variant: str
    q: int
    n: int | None
    n_lambda: int
    g: Marking
    a: int | None = None
    b: int | None = None
    zeta_exp: int = 1
    m_list: tuple[int, ...] = ()
    alpha: int | None = None

    @property
    def F(self) -> GF:
        return field(self.q)

    @classmethod
    def from_json(cls, obj: dict[str, Any]) -> "LocalisedBrauerClass":
        if not isinstance(obj, dict):
            raise MalformedInput("class input must be a JSON object")
        variant = obj.get("variant")
        if variant not in VARIANTS:
            raise MalformedInput(f"variant must be one of {VARIANTS}")
        try:
            q = int(obj["q"])
            F = field(q)
        except KeyError:
            raise MalformedInput("missing field 'q'") from None
        except (FieldError, TypeError, ValueError) as exc:
            raise MalformedInput(str(exc)) from None
        g_obj = obj.get("g", {"prime": "none", "value": 1})
        try:
            g = Marking(str(g_obj.get("prime", "none")), int(g_obj.get("value", 1)))
        except (AttributeError, TypeError, ValueError):
            raise MalformedInput("g must be {\"prime\": str, \"value\": int}") from None
        if g.value < 1:
            raise MalformedInput("g value must be a positive integer")
        n_lambda = int(obj.get("n_lambda", 1))
        if n_lambda < 1:
            raise MalformedInput("n_lambda must be positive")

        def unit(key):
            if key not in obj:
                raise MalformedInput(f"missing field {key!r}")
            try:
                mon = parse_monomial(F, str(obj[key]), ())
            except (ValueError, FieldError) as exc:
                raise MalformedInput(f"{key}: {exc}") from None
            if mon.scalar == 0:
                raise MalformedInput(f"{key} must be a unit")
            return mon.scalar

        n = obj.get("n")
        n = None if n is None else int(n)
        if variant == "singular_hj":
            try:
                m_list = tuple(int(x) for x in obj["m_list"])
                IntersectionData(list(m_list))
            except KeyError:
                raise MalformedInput("missing field 'm_list'") from None
            except (TypeError, ValueError) as exc:
                raise MalformedInput(f"m_list: {exc}") from None
            alpha = unit("alpha") if "alpha" in obj else None
            return cls(variant, q, n, n_lambda, g, m_list=m_list, alpha=alpha)
        if n is None or n < 1:
            raise MalformedInput("n must be a positive integer")
        zeta_exp = int(obj.get("zeta_exp", 1))
        b = unit("b") if variant == "regular_with_secondary" else None
        return cls(variant, q, n, n_lambda, g, a=unit("a"), b=b, zeta_exp=zeta_exp)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"variant": self.variant, "q": self.q, "n_lambda": self.n_lambda,
                               "g": {"prime": self.g.prime, "value": self.g.value}}
        if self.n is not None:
            out["n"] = self.n
        if self.variant == "singular_hj":
            out["m_list"] = list(self.m_list)
            if self.alpha is not None:
                out["alpha"] = self.alpha
        else:
            out["a"] = self.a
            out["zeta_exp"] = self.zeta_exp
            if self.b is not None:
                out["b"] = self.b
        return out


@dataclass
class Verdict:
    verdict: str
    reasons: list[str]
    terminal_certified: bool
    order: int
    details: dict[str, Any] = dc_field(default_factory=dict)

    @property
    def positive(self) -> bool:
        return self.verdict != NEGATIVE

    def label(self) -> str:
        return self.verdict if self.positive else f"{NEGATIVE}({'; '.join(self.reasons)})"


def _require_roots(F: GF, n: int) -> None:
    if (F.q - 1) % n:
        raise FieldError(f"no primitive root of unity of order {n} in GF({F.q})")


def _marked_end(c: LocalisedBrauerClass) -> tuple[str | None, str | None]:
    """(end, reason) for a singular class; end is 'left', 'right' or None."""
    r = len(c.m_list)
    if c.g.value == 1:
        return None, None
    label = c.g.prime
    if label in ("end_left", "left"):
        return "left", None
    if label in ("end_right", "right"):
        return "right", None
    if label.startswith("E_") and label[2:].isdigit():
        i = int(label[2:])
        if not 1 <= i <= r:
            raise MalformedInput(f"{label} is not a curve of the string")
        if i == 1:
            return "left", None
        if i == r:
            return "right", None
        return None, f"marked curve {label} is interior"
    if label in ("none", ""):
        return None, "g ≠ 1 but no curve is marked"
    raise MalformedInput(f"unknown marked prime {label!r}")


def classify(c: LocalisedBrauerClass) -> Verdict:
    F = c.F
    reasons: list[str] = []
    details: dict[str, Any] = {}
    if c.variant == "singular_hj":
        data = IntersectionData(list(c.m_list))
        det = determinant_of_R(data)
        t = singularity_type(data)
        order = c.n if c.n is not None else det
        details.update(det=det, type={"m": t.m, "k": t.k})
        _require_roots(F, det)
        if order != det:
            reasons.append(f"order {order} differs from the determinant {det}")
        alpha = c.alpha if c.alpha is not None else CyclicExtension.default(F, det).g
        details["alpha"] = alpha
        if order == det and F.kummer_order(alpha, det) != det:
            reasons.append(f"alpha={alpha} gives a residue extension of degree {F.kummer_order(alpha, det)} < {det}")
        end, why = _marked_end(c)
        if why:
            reasons.append(why)
        details["marked_end"] = end
        verdict = SINGULAR
    else:
        order = c.n
        _require_roots(F, order)
        if gcd(c.zeta_exp, order) != 1:
            raise MalformedInput(f"zeta_exp={c.zeta_exp} does not give a primitive {order}-th root")
        if c.g.value != 1 and c.g.prime != "v":
            if c.g.prime in ("u", "none", ""):
                reasons.append(f"g ≠ 1 is only allowed along (v), got {c.g.prime!r}")
            else:
                raise MalformedInput(f"unknown prime {c.g.prime!r}; expected 'v'")
        pres = _presentation(c, 2)
        ram_u, ram_v = tame_ramification(pres, "u"), tame_ramification(pres, "v")
        details["ramification"] = {"u": asdict(ram_u), "v": asdict(ram_v)}
        if c.variant == "regular_no_secondary":
            if ram_u.degree != order:
                reasons.append(f"ramification along (u) has degree {ram_u.degree} < {order}: a is not of full Kummer order")
            if not ram_v.is_trivial:
                reasons.append("unexpected ramification along (v)")
            verdict = NO_SECONDARY
        else:
            for lab, ram in (("u", ram_u), ("v", ram_v)):
                if ram.degree != order or ram.exponent == 0:
                    reasons.append(f"ramification along ({lab}) is not totally ramified of degree {order}")
            # residues at the origin: the valuation parts cancel
            cancels = (ram_u.exponent + ram_v.exponent) % order == 0
            details["secondary_cancellation"] = cancels
            if not cancels:
                reasons.append("secondary ramification does not cancel")
            verdict = WITH_SECONDARY
    certified = _is_prime(order) and order > 2
    if reasons:
        return Verdict(NEGATIVE, reasons, False, order, details)
    return Verdict(verdict, [], certified, order, details)


def _presentation(c: LocalisedBrauerClass, N: int) -> SymbolPresentation:
    F = c.F
    if c.variant == "regular_no_secondary":
        return SymbolPresentation(F, c.n, c.zeta_exp, parse_monomial(F, "u"), Monomial(c.a), N)
    return SymbolPresentation(F, c.n, c.zeta_exp, Monomial(c.a, (("u", 1),)), Monomial(c.b, (("v", 1),)), N)


def _hj_data(c: LocalisedBrauerClass, end: str | None) -> IntersectionData:
    data = IntersectionData(list(c.m_list))
    return data.reversed() if end == "right" else data


def _build(c: LocalisedBrauerClass, verdict: Verdict, N: int):
    """(Δ, setup, symbol label, z label, symbol degree)."""
    F = c.F
    if c.variant == "singular_hj":
        data = _hj_data(c, verdict.details["marked_end"])
        S = build_cover(data, F, N)
        E = CyclicExtension(F, S.m, verdict.details["alpha"])
        D = build_hj_symbol(S, E)
        label = f"(S,α) over type ({S.m},{S.k}) string {list(data.m_list)}, α={E.g}"
        return D, hj_setup(D), label, "f1", S.m
    pres = _presentation(c, N)
    D = build_symbol(pres)
    if c.variant == "regular_no_secondary":
        return D, no_secondary_setup(D), f"(u,{c.a})_ζ, n={c.n}, ζ=ω^{c.zeta_exp}", "v", c.n
    return D, with_secondary_setup(D), f"({c.a}u,{c.b}v)_ζ, n={c.n}, ζ=ω^{c.zeta_exp}", "y", c.n


@dataclass
class OrderPresentation:
    n: int
    d: int
    symbol: str
    z: str
    degree: int
    truncation: int
    seed: int
    assumption: AssumptionReport
    assumption_next: AssumptionReport
    delta_d_checks: dict[str, Any]
    certificate: list[str]

    @property
    def stable(self) -> bool:
        return self.assumption.passed and self.assumption_next.passed

    def formula(self) -> str:
        inner = "Δ" if self.d == 1 else f"Δ_{self.d}({self.z})"
        return f"M_{self.n}({inner})"


class ConstructionError(RuntimeError):
    pass


def construct(c: LocalisedBrauerClass, N: int = 6, seed: int = 0, budget: int = DELTA_D_BUDGET) -> OrderPresentation:
    """Build Λ ≅ M_n(Δ_d(z)) and verify the assumption at truncations N and N+1."""
    verdict = classify(c)
    if not verdict.positive:
        raise ConstructionError(f"class is {verdict.label()}")
    d = c.g.value
    reports = []
    for level in (N, N + 1):
        D, setup, label, zlab, sym_deg = _build(c, verdict, level)
        reports.append(verify_assumption(setup, seed))
        if level == N:
            base = (D, setup, label, zlab, sym_deg)
    D, setup, label, zlab, sym_deg = base
    cert = [
        f"verdict: {verdict.verdict} (order {verdict.order}, terminal certified: {verdict.terminal_certified})",
        f"Δ = {label}, flattened dimension {D.dim} at truncation N={N}",
    ]
    for name, rep in zip((f"N={N}", f"N={N + 1}"), reports):
        for item in ("support", "radical", "hereditary"):
            res = getattr(rep, item)
            cert.append(f"[{'ok' if res.passed else 'FAIL'}] {item} ({name}): {res.detail}")
    zD_dim = left_span(D, [setup.z]).dim
    dim_T = expected_dimension(D.dim, zD_dim, d)
    checks: dict[str, Any] = {"dimension": dim_T}
    if dim_T <= budget:
        T = build_delta_d(D, setup.z, d)
        rep = uniformiser_and_checks(T, seed)
        checks.update(passed=rep.passed, t_power_is_z=rep.t_power_is_z, normal=rep.normal,
                      quotient_dim=rep.quotient_dim, expected_quotient_dim=rep.expected_quotient_dim)
        cert.append(f"[{'ok' if rep.passed else 'FAIL'}] Δ_{d}: t^{d} = z, tΔ_d = Δ_d t, "
                    f"dim Δ_d/tΔ_d = {rep.quotient_dim} = {d}·dim Δ/zΔ")
    else:
        checks["skipped"] = f"dimension {dim_T} exceeds the budget {budget}"
        cert.append(f"[skip] Δ_{d} checks: dimension {dim_T} exceeds the budget {budget}")
    pres = OrderPresentation(c.n_lambda, d, label, zlab, c.n_lambda * d * sym_deg, N, seed,
                             reports[0], reports[1], checks, cert)
    if not pres.stable:
        raise ConstructionError("assumption check failed:\n" + "\n".join(cert))
    if checks.get("passed") is False:
        raise ConstructionError("Δ_d structure check failed:\n" + "\n".join(cert))
    cert.append(f"Λ ≅ {pres.formula()}, deg Λ = {pres.degree}")
    return pres


@dataclass
class ProfileEntry:
    index: int
    nu: tuple[int, int]
    exponent: int
    class_label: int
    order: int


def ramification_profile(c: LocalisedBrauerClass) -> list[ProfileEntry]:
    """z(ν_i) = α^{first coordinate of ν_i} for i = 0..r+1, as Kummer classes."""
    if c.variant != "singular_hj":
        raise MalformedInput("ramification profiles are defined for singular classes")
    F = c.F
    data = IntersectionData(list(c.m_list))
    m = determinant_of_R(data)
    _require_roots(F, m)
    alpha = c.alpha if c.alpha is not None else CyclicExtension.default(F, m).g
    out = []
    for i, nu in enumerate(nu_sequence(data)):
        e = nu[0] % m
        val = F.pow(alpha, e)
        out.append(ProfileEntry(i, tuple(nu), e, F.kummer_representative(val, m), F.kummer_order(val, m)))
    return out


def report_json(c: LocalisedBrauerClass, N: int = 6, seed: int = 0) -> tuple[dict[str, Any], int]:
    """Full classify + construct report and the exit status it implies."""
    v = classify(c)
    out: dict[str, Any] = {
        "input": c.to_json(), "truncation": N, "seed": seed,
        "verdict": v.verdict, "reasons": v.reasons, "terminal_certified": v.terminal_certified,
        "order": v.order, "details": v.details,
    }
    if c.variant == "singular_hj":
        out["ramification_profile"] = [asdict(e) for e in ramification_profile(c)]
    if not v.positive:
        return out, 1
    pres = construct(c, N, seed)
    out["presentation"] = {
        "n": pres.n, "d": pres.d, "symbol": pres.symbol, "z": pres.z, "degree": pres.degree,
        "formula": pres.formula(), "stable": pres.stable, "delta_d_checks": pres.delta_d_checks,
        "assumption": {
            f"N={lvl}": {k: asdict(getattr(r, k)) for k in ("support", "radical", "hereditary")} | {"samples": r.samples}
            for lvl, r in ((N, pres.assumption), (N + 1, pres.assumption_next))
        },
    }
    out["certificate"] = pres.certificate
    return out, 0


def certificate_text(report: dict[str, Any]) -> str:
    lines = [f"class: {json.dumps(report['input'], sort_keys=True)}", f"truncation N={report['truncation']}, seed={report['seed']}",
             f"verdict: {report['verdict']}"]
    lines += [f"  reason: {r}" for r in report["reasons"]]
    lines.append(f"terminal certified: {report['terminal_certified']}")
    if "ramification_profile" in report:
        prof = ", ".join(f"z(ν_{e['index']})=α^{e['exponent']}" for e in report["ramification_profile"])
        lines.append(f"ramification profile: {prof}")
    lines += report.get("certificate", [])
    return "\n".join(lines)
