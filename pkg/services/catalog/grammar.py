"""
Function-spec grammar.

Parses text such as ``sum(1*fund(), 2*radpow(s=0.5, center=1,0,0,0))`` or
``cur(coef=fund(), ddc=fund()^(m-1))`` into catalog objects, and renders
catalog objects back to canonical text. Parsing happens in two passes:
pyparsing builds small syntax nodes, then a builder resolves them against
the active Setting so semantic errors never surface from parse actions.

Grammar (whitespace-insensitive)::

    spec     := func | current
    func     := radpow(s=REAL[, center=point]) | radlog([center=point])
              | quad() | fund([center=point])
              | affine(c0=REAL, c1=REAL[, center=point])
              | cyl(s=REAL, k=INT[, center=point])
              | sum(term {, term})
    term     := REAL * func
    current  := cur(coef=(func | 1), ddc=ddclist[, beta=INT])
    ddclist  := func ^ (expo) {* func ^ (expo)}
    expo     := INT | m-1 | m+p-n
    point    := REAL {, REAL}     (interleaved re/im, 2n reals)
"""

import logging
from dataclasses import dataclass
from functools import lru_cache

import pyparsing as pp

from services.hermitian import Setting

from .currents import SimpleCurrent
from .exceptions import CatalogError, SpecSemanticError, SpecSyntaxError
from .functions import (
    CylindricalFunction,
    ModelFunction,
    Profile,
    ProfileKind,
    RadialFunction,
    ScaledSum,
    cylindrical,
    fundamental_solution,
    point_from_reals,
    radial,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _Center:
    values: tuple[float, ...]


@dataclass(frozen=True)
class _Unit:
    pass


@dataclass(frozen=True)
class _Beta:
    value: int


@dataclass(frozen=True)
class FunctionNode:
    """Syntax node for a function call."""

    kind: str
    numbers: tuple[float | int, ...]
    center: _Center | None
    terms: tuple["TermNode", ...]
    loc: int


@dataclass(frozen=True)
class TermNode:
    coefficient: float
    function: FunctionNode


@dataclass(frozen=True)
class FactorNode:
    function: FunctionNode
    exponent: int | str


@dataclass(frozen=True)
class CurrentNode:
    coefficient: FunctionNode | None
    factors: tuple[FactorNode, ...]
    beta: int


def _function_action(kind: str):
    def action(s, loc, toks):
        numbers = tuple(tok for tok in toks if isinstance(tok, int | float))
        centers = [tok for tok in toks if isinstance(tok, _Center)]
        terms = tuple(tok for tok in toks if isinstance(tok, TermNode))
        return FunctionNode(
            kind=kind,
            numbers=numbers,
            center=centers[0] if centers else None,
            terms=terms,
            loc=loc,
        )

    return action


def _current_action(toks):
    coefficient = toks[0] if isinstance(toks[0], FunctionNode) else None
    factors = tuple(tok for tok in toks if isinstance(tok, FactorNode))
    betas = [tok.value for tok in toks if isinstance(tok, _Beta)]
    return CurrentNode(coefficient=coefficient, factors=factors, beta=betas[0] if betas else 0)


@lru_cache(maxsize=1)
def _grammar() -> pp.ParserElement:
    lpar, rpar, comma, eq, star, caret = map(pp.Suppress, "(),=*^")

    def keyword(name: str) -> pp.ParserElement:
        return pp.Suppress(pp.Keyword(name)) + eq

    real = (
        pp.Regex(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
        .set_name("REAL")
        .set_parse_action(lambda t: float(t[0]))
    )
    integer = pp.Regex(r"\d+").set_name("INT").set_parse_action(lambda t: int(t[0]))
    center = (keyword("center") + real + pp.ZeroOrMore(comma + real)).set_parse_action(
        lambda t: _Center(values=tuple(t))
    )
    optional_center = pp.Optional(comma + center)

    func = pp.Forward().set_name("func")
    radpow = (
        pp.Suppress(pp.Keyword("radpow")) + lpar + keyword("s") + real + optional_center + rpar
    ).set_parse_action(_function_action("radpow"))
    radlog = (
        pp.Suppress(pp.Keyword("radlog")) + lpar + pp.Optional(center) + rpar
    ).set_parse_action(_function_action("radlog"))
    quad = (pp.Suppress(pp.Keyword("quad")) + lpar + rpar).set_parse_action(
        _function_action("quad")
    )
    fund = (
        pp.Suppress(pp.Keyword("fund")) + lpar + pp.Optional(center) + rpar
    ).set_parse_action(_function_action("fund"))
    affine = (
        pp.Suppress(pp.Keyword("affine"))
        + lpar
        + keyword("c0")
        + real
        + comma
        + keyword("c1")
        + real
        + optional_center
        + rpar
    ).set_parse_action(_function_action("affine"))
    cyl = (
        pp.Suppress(pp.Keyword("cyl"))
        + lpar
        + keyword("s")
        + real
        + comma
        + keyword("k")
        + integer
        + optional_center
        + rpar
    ).set_parse_action(_function_action("cyl"))
    term = (real + star + func).set_parse_action(
        lambda t: TermNode(coefficient=t[0], function=t[1])
    )
    scaled_sum = (
        pp.Suppress(pp.Keyword("sum")) + lpar + term + pp.ZeroOrMore(comma + term) + rpar
    ).set_parse_action(_function_action("sum"))
    func <<= radpow | radlog | quad | fund | affine | cyl | scaled_sum

    expo = (
        (pp.Literal("m") + "+" + "p" + "-" + "n").set_parse_action(lambda: "m+p-n")
        | (pp.Literal("m") + "-" + "1").set_parse_action(lambda: "m-1")
        | integer
    ).set_name("expo")
    factor = (func + caret + lpar + expo + rpar).set_parse_action(
        lambda t: FactorNode(function=t[0], exponent=t[1])
    )
    ddclist = factor + pp.ZeroOrMore(star + factor)
    unit = pp.Literal("1").set_parse_action(lambda: _Unit())
    beta = (comma + keyword("beta") + integer).set_parse_action(lambda t: _Beta(value=t[0]))
    current = (
        pp.Suppress(pp.Keyword("cur"))
        + lpar
        + keyword("coef")
        + (func | unit)
        + comma
        + keyword("ddc")
        + ddclist
        + pp.Optional(beta)
        + rpar
    ).set_parse_action(_current_action)

    return current | func


def _build_center(node: FunctionNode, n: int):
    if node.center is None:
        return None
    if len(node.center.values) != 2 * n:
        raise SpecSemanticError(
            f"center at char {node.loc} has {len(node.center.values)} reals, expected {2 * n}"
        )
    return point_from_reals(node.center.values)


def _build_function(node: FunctionNode, setting: Setting) -> ModelFunction:
    n = setting.n
    center = _build_center(node, n)
    try:
        if node.kind == "radpow":
            return radial(Profile.power(node.numbers[0]), n, center)
        if node.kind == "radlog":
            return radial(Profile.log(), n, center)
        if node.kind == "quad":
            return radial(Profile.affine(0.0, 1.0), n)
        if node.kind == "fund":
            return fundamental_solution(setting, center)
        if node.kind == "affine":
            c0, c1 = node.numbers
            return radial(Profile.affine(c0, c1), n, center)
        if node.kind == "cyl":
            s, k = node.numbers
            if not isinstance(k, int):
                raise SpecSemanticError(f"cyl k must be an integer at char {node.loc}")
            return cylindrical(Profile.power(s), n, k, center)
        if node.kind == "sum":
            for term in node.terms:
                if term.coefficient < 0:
                    raise SpecSemanticError(
                        f"sum coefficients must be >= 0, got {term.coefficient} at char {node.loc}"
                    )
            return ScaledSum(
                terms=tuple(
                    (term.coefficient, _build_function(term.function, setting))
                    for term in node.terms
                )
            )
    except SpecSemanticError:
        raise
    except CatalogError as exc:
        raise SpecSemanticError(f"{exc.message} (at char {node.loc})")
    raise SpecSemanticError(f"Unknown function '{node.kind}'")


def _build_current(node: CurrentNode, setting: Setting) -> SimpleCurrent:
    coefficient = None if node.coefficient is None else _build_function(node.coefficient, setting)
    fixed = 0
    open_slots = 0
    for factor in node.factors:
        if factor.exponent == "m+p-n":
            open_slots += 1
        elif factor.exponent == "m-1":
            fixed += setting.m - 1
        else:
            fixed += int(factor.exponent)

    # m + p - n with p = n - q - j gives e (1 + slots) = m - fixed - j.
    open_exponent = 0
    if open_slots:
        numerator = setting.m - fixed - node.beta
        if numerator < 0 or numerator % (1 + open_slots):
            raise SpecSemanticError(
                f"Exponent m+p-n has no nonnegative integer solution (m={setting.m}, "
                f"fixed degree {fixed}, beta={node.beta})"
            )
        open_exponent = numerator // (1 + open_slots)

    factors = []
    for factor in node.factors:
        if factor.exponent == "m+p-n":
            exponent = open_exponent
        elif factor.exponent == "m-1":
            exponent = setting.m - 1
        else:
            exponent = int(factor.exponent)
        factors.append((_build_function(factor.function, setting), exponent))

    try:
        return SimpleCurrent(
            setting=setting,
            coefficient=coefficient,
            factors=tuple(factors),
            beta_power=node.beta,
        )
    except CatalogError as exc:
        raise SpecSemanticError(exc.message)


def parse_function_spec(text: str, setting: Setting) -> ModelFunction | SimpleCurrent:
    """
    Parse a function or current spec.

    Args:
        text: Spec text.
        setting: Active (n, m), used for dimensions and symbolic exponents.

    Returns:
        ModelFunction or SimpleCurrent.

    Raises:
        SpecSyntaxError: With the failing position and expected tokens.
        SpecSemanticError: For well-formed but invalid specs.

    Example:
        >>> f = parse_function_spec("radpow(s=1)", Setting(n=2, m=1))
        >>> f.profile.s
        1.0
    """
    try:
        node = _grammar().parse_string(text, parse_all=True)[0]
    except pp.ParseException as exc:
        raise SpecSyntaxError(
            f"Cannot parse function spec: {exc.msg}",
            position=exc.loc,
            expected=exc.msg,
        )
    logger.debug(f"Parsed spec {text!r} into {type(node).__name__}")
    if isinstance(node, CurrentNode):
        return _build_current(node, setting)
    return _build_function(node, setting)


def _number(value: float) -> str:
    return repr(float(value))


def _center_text(center: tuple[complex, ...]) -> str:
    if all(c == 0 for c in center):
        return ""
    reals = []
    for c in center:
        reals.extend([_number(c.real), _number(c.imag)])
    return "center=" + ",".join(reals)


def render(obj: ModelFunction | SimpleCurrent) -> str:
    """
    Canonical spec text; parse_function_spec(render(x)) == x.

    Raises:
        SpecSemanticError: For objects outside the grammar.

    Example:
        >>> render(radial(Profile.affine(0.0, 1.0), 2))
        'quad()'
    """
    if isinstance(obj, SimpleCurrent):
        if not obj.factors:
            raise SpecSemanticError("A current needs at least one dd^c factor to render")
        coefficient = "1" if obj.coefficient is None else render(obj.coefficient)
        ddc = "*".join(f"{render(function)}^({k})" for function, k in obj.factors)
        beta = f", beta={obj.beta_power}" if obj.beta_power else ""
        return f"cur(coef={coefficient}, ddc={ddc}{beta})"

    if isinstance(obj, ScaledSum):
        terms = ", ".join(f"{_number(c)}*{render(f)}" for c, f in obj.terms)
        return f"sum({terms})"

    if isinstance(obj, RadialFunction | CylindricalFunction):
        center = _center_text(obj.center)
        profile = obj.profile
        if isinstance(obj, CylindricalFunction):
            if profile.kind is not ProfileKind.POWER:
                raise SpecSemanticError("Only power cylinders have a spec form")
            tail = f", {center}" if center else ""
            return f"cyl(s={_number(profile.s)}, k={obj.k}{tail})"
        if profile.kind is ProfileKind.POWER:
            tail = f", {center}" if center else ""
            return f"radpow(s={_number(profile.s)}{tail})"
        if profile.kind is ProfileKind.LOG:
            return f"radlog({center})"
        if not center and profile.c0 == 0.0 and profile.c1 == 1.0:
            return "quad()"
        tail = f", {center}" if center else ""
        return f"affine(c0={_number(profile.c0)}, c1={_number(profile.c1)}{tail})"

    raise SpecSemanticError(f"Cannot render {type(obj).__name__}")


def spec_equal(
    first: ModelFunction | SimpleCurrent, second: ModelFunction | SimpleCurrent
) -> bool:
    """Structural equality, tolerant to -0.0 versus 0.0 in centers."""
    return bool(first == second) or render(first) == render(second)


__all__ = ["parse_function_spec", "render", "spec_equal"]
