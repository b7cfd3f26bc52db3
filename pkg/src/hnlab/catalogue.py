"""Case taxonomy for minimal primary decompositions, and the example catalogue.

The ambient multiplicity e splits across the minimal primes p of the ideal
as e = sum over components of sigma_p * l_p, where sigma_p is the
multiplicity factor of the component and l_p its local length; each
component contributes a quotient of multiplicity m1 * sigma_p.  A
:class:`CaseRecord` is one multiset of (sigma, length) pairs with that sum.

The worked examples live in a versioned line-oriented data file shipped
with the package (``data/decomposition_catalogue.txt``).  Each entry fixes
a polynomial f (as a list of weight-checkable factors over the variables
X, Y, Z, W), the tuple of integers whose gcd must be 1, the predicted
decomposition shape, and any field-theoretic caveat.  Verification checks
exactly the numeric side: every constrained factor and all three ideal
generators must be homogeneous under the factor's weight assignment, and
the gcd tuple must be coprime.  Field hypotheses are surfaced as free
text, never evaluated.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from math import gcd

from .errors import (
    DimensionMismatch,
    DomainError,
    InconsistentRecord,
    InvalidGenerator,
    InvariantViolation,
    NotInCatalogue,
)
from .hn import Binomial, Triple, _monomial, build, solve_exponents

_DATA_FILE = "decomposition_catalogue.txt"
_VARIABLES = ("X", "Y", "Z", "W")
_GENERATOR_NAMES = ("v1", "v2", "D")


@dataclass(frozen=True)
class CaseRecord:
    """A decomposition shape: multiset of (sigma, length) pairs for one e."""

    e: int
    components: tuple[tuple[int, int], ...]
    label: str

    def __post_init__(self) -> None:
        canon = tuple(sorted((tuple(c) for c in self.components), reverse=True))
        object.__setattr__(self, "components", canon)

    @property
    def n_components(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class ConsistencyReport:
    """Outcome of the multiplicity bookkeeping for one case record."""

    e: int
    m1: int
    component_multiplicities: tuple[int, ...]
    total: int
    ok: bool


_PAPER_CASES: dict[int, tuple[tuple[str, tuple[tuple[int, int], ...]], ...]] = {
    1: (("(a)", ((1, 1),)),),
    2: (
        ("(b.1)", ((2, 1),)),
        ("(b.2)", ((1, 2),)),
        ("(b.3)", ((1, 1), (1, 1))),
    ),
    3: (
        ("(c.1)", ((3, 1),)),
        ("(c.2)", ((1, 3),)),
        ("(c.3)", ((1, 2), (1, 1))),
        ("(c.4)", ((2, 1), (1, 1))),
        ("(c.5)", ((1, 1), (1, 1), (1, 1))),
    ),
}


def _component_multisets(e: int) -> list[tuple[tuple[int, int], ...]]:
    """All multisets of (sigma, length) pairs with sum sigma*length = e,
    each returned as a non-increasing tuple of pairs."""
    pairs = sorted(
        ((s, l) for s in range(1, e + 1) for l in range(1, e + 1) if s * l <= e),
        reverse=True,
    )
    out: list[tuple[tuple[int, int], ...]] = []

    def extend(remaining: int, start: int, acc: list[tuple[int, int]]) -> None:
        if remaining == 0:
            out.append(tuple(acc))
            return
        for i in range(start, len(pairs)):
            s, l = pairs[i]
            if s * l <= remaining:
                acc.append((s, l))
                extend(remaining - s * l, i, acc)
                acc.pop()

    extend(e, 0, [])
    return out


def enumerate_cases(e: int) -> list[CaseRecord]:
    """All decomposition shapes for ambient multiplicity e, labeled.

    For e <= 3 the labels and order are the classical (a), (b.1)-(b.3),
    (c.1)-(c.5).  For e in [4, 6] the enumeration is mechanical and the
    labels are systematic, "(e=4, #1)" and so on.
    """
    if not 1 <= e <= 6:
        raise DomainError(f"case enumeration covers e in [1, 6], got {e}")
    generated = set(_component_multisets(e))
    if e in _PAPER_CASES:
        table = _PAPER_CASES[e]
        if generated != {comps for _, comps in table}:
            raise InvariantViolation(f"case generator disagrees with the e={e} table")
        return [CaseRecord(e, comps, label) for label, comps in table]
    ordered = sorted(generated, key=lambda ms: (len(ms), ms))
    return [
        CaseRecord(e, comps, f"(e={e}, #{i})") for i, comps in enumerate(ordered, 1)
    ]


def check_consistency(r: CaseRecord, m1: int) -> ConsistencyReport:
    """Enforce sum(sigma*length) = e, then verify that the per-component
    multiplicities m1*sigma add up, weighted by length, to m1*e."""
    if m1 < 3:
        raise DomainError(f"multiplier m1 must be at least 3, got {m1}")
    total_sl = sum(s * l for s, l in r.components)
    if total_sl != r.e:
        raise InconsistentRecord(
            f"components of {r.label} sum to {total_sl}, expected e={r.e}"
        )
    comp_mults = tuple(m1 * s for s, _ in r.components)
    total = sum(cm * l for cm, (_, l) in zip(comp_mults, r.components))
    return ConsistencyReport(r.e, m1, comp_mults, total, total == m1 * r.e)


@dataclass(frozen=True)
class WeightAssignment:
    """Positive integer weights, one per variable in the fixed order."""

    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        if any(not isinstance(w, int) or w < 1 for w in self.weights):
            raise DomainError(f"weights must be positive integers, got {self.weights}")


def binomial_weight_vanishes(w: WeightAssignment, b: Binomial) -> bool:
    """True iff both monomials of b have the same weighted degree under w,
    i.e. b lies in the kernel of the corresponding monomial map."""
    if len(w.weights) != len(b.plus):
        raise DimensionMismatch(
            f"{len(w.weights)} weights against {len(b.plus)} exponents"
        )
    return sum(x * e for x, e in zip(w.weights, b.plus)) == sum(
        x * e for x, e in zip(w.weights, b.minus)
    )


@dataclass(frozen=True)
class Factor:
    """One factor of f, as the monomials that must share a weighted degree.

    ``weights`` is None for a pure power of W, which constrains nothing and
    is recorded only as a primary component of the stated length.
    """

    monomials: tuple[tuple[int, int, int, int], ...]
    weights: WeightAssignment | None
    note: str = ""

    def render(self) -> str:
        # Signs are not tracked, so show the equal-weight monomial support.
        body = " ~ ".join(_monomial(mono, _VARIABLES) for mono in self.monomials)
        return self.note if self.note else body


@dataclass(frozen=True)
class ExampleSpec:
    """One catalogued example: the data needed to re-check its numeric side."""

    id: str
    n: int
    m: Triple
    factors: tuple[Factor, ...]
    gcd_tuple: tuple[int, ...]
    predicted: CaseRecord
    caveat: str = ""


@dataclass(frozen=True)
class WeightCheck:
    subject: str
    weights: tuple[int, ...] | None
    passed: bool | None  # None when the subject is weight-unconstrained
    detail: str


@dataclass(frozen=True)
class ExampleReport:
    spec: ExampleSpec
    weight_checks: tuple[WeightCheck, ...]
    gcd_ok: bool
    verdict: bool


def _parse_factor(token: str) -> Factor:
    note = ""
    if "!" in token:
        token, note = token.split("!", 1)
    kind, _, payload = token.partition(":")
    if kind == "wpow":
        k = int(payload)
        return Factor(((0, 0, 0, k),), None, note or f"primary component of length {k}")
    monos_s, _, weights_s = payload.partition("@")
    monomials = tuple(
        tuple(int(x) for x in mono.split(".")) for mono in monos_s.split("+")
    )
    weights = WeightAssignment(tuple(int(x) for x in weights_s.split(",")))
    if kind not in ("bin", "form") or len(monomials) < 2:
        raise InvalidGenerator(f"malformed factor token {token!r}")
    return Factor(monomials, weights, note)  # type: ignore[arg-type]


def _parse_predicted(token: str, e: int) -> CaseRecord:
    label, _, comps_s = token.partition(":")
    components = tuple(
        (int(s), int(l))
        for s, l in (part.split("x") for part in comps_s.split("+"))
    )
    return CaseRecord(e, components, label)


@lru_cache(maxsize=1)
def load_catalogue() -> dict[tuple[str, int, Triple], ExampleSpec]:
    """Parse the shipped catalogue file; keys are (id, n, m)."""
    text = resources.files("hnlab").joinpath(f"data/{_DATA_FILE}").read_text("utf-8")
    lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    entries: dict[tuple[str, int, Triple], ExampleSpec] = {}
    for line in lines:
        id_, n_s, m_s, factors_s, gcd_s, predicted_s, caveat = line.split("|")
        n = int(n_s)
        m = tuple(int(x) for x in m_s.split(","))
        spec = ExampleSpec(
            id=id_,
            n=n,
            m=m,  # type: ignore[arg-type]
            factors=tuple(_parse_factor(tok) for tok in factors_s.split(";")),
            gcd_tuple=tuple(int(x) for x in gcd_s.split(",")),
            predicted=_parse_predicted(predicted_s, n),
            caveat="" if caveat == "-" else caveat,
        )
        key = (id_, n, m)
        if key in entries:
            raise InvariantViolation(f"duplicate catalogue entry {key}")
        entries[key] = spec  # type: ignore[index]
    return entries


def catalogue_entries() -> list[ExampleSpec]:
    """All catalogued examples, in file order."""
    return list(load_catalogue().values())


def example_spec(id: str, n: int, m: Triple) -> ExampleSpec:
    """Look up one example; unknown combinations raise NotInCatalogue."""
    try:
        return load_catalogue()[(id, n, tuple(m))]  # type: ignore[index]
    except KeyError:
        raise NotInCatalogue(
            f"no catalogued example with id={id!r}, n={n}, m={tuple(m)}"
        ) from None


def _ideal_generators_for(m: Triple) -> tuple[Binomial, ...]:
    solutions = solve_exponents(m)
    if not solutions:
        raise InvariantViolation(f"catalogued m={m} has no exponent solution")
    ideal = build(solutions[0])
    return tuple(Binomial(g.plus + (0,), g.minus + (0,)) for g in ideal.generators)


def verify_example(spec: ExampleSpec) -> ExampleReport:
    """Run every numeric check the example admits.

    For each weight-constrained factor: the factor's monomials must share a
    weighted degree, and the three ideal generators must vanish under the
    same assignment.  Pure W-powers are recorded and skipped.  Failures are
    reported, never raised.
    """
    generators = _ideal_generators_for(spec.m)
    checks: list[WeightCheck] = []
    for i, factor in enumerate(spec.factors, 1):
        name = f"factor {i}: {factor.render()}"
        if factor.weights is None:
            checks.append(WeightCheck(name, None, None, "skipped: no weight constraint"))
            continue
        w = factor.weights
        degrees = [
            sum(x * e for x, e in zip(w.weights, mono)) for mono in factor.monomials
        ]
        checks.append(
            WeightCheck(
                name,
                w.weights,
                len(set(degrees)) == 1,
                f"monomial weights {degrees}",
            )
        )
        for gen_name, g in zip(_GENERATOR_NAMES, generators):
            checks.append(
                WeightCheck(
                    f"factor {i} generator {gen_name}: {g.render(_VARIABLES)}",
                    w.weights,
                    binomial_weight_vanishes(w, g),
                    "generator homogeneity",
                )
            )
    gcd_ok = gcd(*spec.gcd_tuple) == 1
    verdict = gcd_ok and all(c.passed for c in checks if c.passed is not None)
    return ExampleReport(spec, tuple(checks), gcd_ok, verdict)
