"""A bounded formula language over the integers with the golden-ratio floor map.

Terms combine integer literals, variables, +, -, unary minus, and the unary
function symbols f (golden floor), fbar (x + f(x)), F (even-index Fibonacci
floor) and G (its odd-index companion).  Atoms compare terms numerically,
compare fractional parts of phi*t, assert the definitional star order, or
assert a congruence.  The only quantifier is a bounded 'exists': the parser
demands at least one lower and one upper bound for the quantified variable
among the top-level conjuncts of its body, because only the bounded fragment
is decided here; an unbounded 'exists' is a parse error.

Grammar (ASCII)::

    formula := disj
    disj    := conj ('||' conj)*
    conj    := unit ('&&' unit)*
    unit    := '!' unit | '(' formula ')' | 'exists' IDENT '(' formula ')' | atom
    atom    := term ('<' | '<=' | '=' | '!=' | '<*') term
             | 'frac(' term ')' '<' 'frac(' term ')'
             | term '=' INT 'mod' INT
    term    := INT | IDENT | term '+' term | term '-' term | '-' term
             | '(' term ')' | 'f(' term ')' | 'fbar(' term ')'
             | 'F(' term ')' | 'G(' term ')'

Integer literals may use '_' separators and a leading '-'.  'a <= b' and
'a != b' are sugar for '!(b < a)' and '!(a = b)'.  '<*' is the star order
and 'frac(s) < frac(t)' the fractional-part order; the two relations
coincide, and both are kept so that the equivalence remains a testable fact
rather than a parser identity.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Union

from . import extrema
from .errors import (
    BoxShapeError,
    DomainError,
    EnumerationBudgetError,
    FormulaSyntaxError,
    UnboundVariableError,
)
from .fib import fibfloor, g_func
from .kernel import Ordering, beatty_f, fbar, frac_compare, star_less

__all__ = [
    "Var",
    "Const",
    "Add",
    "Sub",
    "Neg",
    "Apply",
    "Term",
    "Less",
    "Equal",
    "StarLess",
    "FracLess",
    "Congruent",
    "Not",
    "And",
    "Or",
    "ExistsBounded",
    "Formula",
    "ENUMERATION_BUDGET",
    "MAX_QUANTIFIER_DEPTH",
    "parse",
    "render",
    "evaluate",
    "decide",
    "decide_box",
    "free_variables",
    "term_free_vars",
]


# ---------------------------------------------------------------------------
# abstract syntax


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: int


@dataclass(frozen=True)
class Add:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Sub:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Neg:
    arg: "Term"


@dataclass(frozen=True)
class Apply:
    func: str  # one of "f", "fbar", "F", "G"
    arg: "Term"


Term = Union[Var, Const, Add, Sub, Neg, Apply]


@dataclass(frozen=True)
class Less:
    left: Term
    right: Term


@dataclass(frozen=True)
class Equal:
    left: Term
    right: Term


@dataclass(frozen=True)
class StarLess:
    left: Term
    right: Term


@dataclass(frozen=True)
class FracLess:
    left: Term
    right: Term


@dataclass(frozen=True)
class Congruent:
    term: Term
    residue: int
    modulus: int  # literal >= 2


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class ExistsBounded:
    """exists var: the body, enumerable over the interior of (lower, upper).

    lower and upper are extracted from the body's top-level conjuncts at
    parse time and never mention the bound variable; the body keeps the
    bound atoms, so enumeration re-checks them and the extraction choice
    cannot change the truth value.
    """

    var: str
    lower: Term
    upper: Term
    body: "Formula"


Formula = Union[Less, Equal, StarLess, FracLess, Congruent, Not, And, Or, ExistsBounded]

_FUNCS = ("f", "fbar", "F", "G")
_RESERVED = {"exists", "frac", "mod", *_FUNCS}

ENUMERATION_BUDGET = 10**6
MAX_QUANTIFIER_DEPTH = 16


# ---------------------------------------------------------------------------
# tokenizer


class _Token(NamedTuple):
    kind: str  # "int" | "ident" | "op" | "eof"
    text: str
    pos: int


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)"
    r"|(?P<int>\d[\d_]*)"
    r"|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>\|\||&&|<=|!=|<\*|[<=!()+\-])"
)


def _tokenize(text: str) -> list[_Token]:
    toks = []
    i = 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            raise FormulaSyntaxError(f"unexpected character {text[i]!r}", text, i)
        if m.lastgroup != "ws":
            toks.append(_Token(m.lastgroup, m.group(), i))
        i = m.end()
    toks.append(_Token("eof", "", len(text)))
    return toks


# ---------------------------------------------------------------------------
# parser


class _Parser:
    def __init__(self, text: str, max_depth: int):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.depth = 0
        self.max_depth = max_depth

    def _fail(self, message: str, tok: _Token | None = None) -> None:
        tok = tok or self.toks[self.i]
        raise FormulaSyntaxError(message, self.text, tok.pos)

    def _peek(self, ahead: int = 0) -> _Token:
        j = min(self.i + ahead, len(self.toks) - 1)
        return self.toks[j]

    def _next(self) -> _Token:
        tok = self.toks[self.i]
        if tok.kind != "eof":
            self.i += 1
        return tok

    def _expect_op(self, text: str) -> _Token:
        tok = self._peek()
        if tok.kind != "op" or tok.text != text:
            self._fail(f"expected {text!r}")
        return self._next()

    def _int_value(self, tok: _Token) -> int:
        try:
            return int(tok.text)
        except ValueError:
            self._fail("malformed integer literal", tok)

    # ---- formula levels

    def parse_formula(self) -> Formula:
        node = self.parse_conj()
        while self._peek().kind == "op" and self._peek().text == "||":
            self._next()
            node = Or(node, self.parse_conj())
        return node

    def parse_conj(self) -> Formula:
        node = self.parse_unit()
        while self._peek().kind == "op" and self._peek().text == "&&":
            self._next()
            node = And(node, self.parse_unit())
        return node

    def parse_unit(self) -> Formula:
        tok = self._peek()
        if tok.kind == "op" and tok.text == "!":
            self._next()
            return Not(self.parse_unit())
        if tok.kind == "ident" and tok.text == "exists":
            return self.parse_exists()
        if tok.kind == "op" and tok.text == "(" and not self._paren_opens_term():
            self._next()
            node = self.parse_formula()
            self._expect_op(")")
            return node
        return self.parse_atom()

    def _paren_opens_term(self) -> bool:
        # '(' at unit position is a parenthesized term exactly when the token
        # after its matching ')' continues a term or starts a comparison
        depth = 0
        j = self.i
        while j < len(self.toks):
            t = self.toks[j]
            if t.kind == "op" and t.text == "(":
                depth += 1
            elif t.kind == "op" and t.text == ")":
                depth -= 1
                if depth == 0:
                    nxt = self.toks[j + 1] if j + 1 < len(self.toks) else None
                    return nxt is not None and (
                        (nxt.kind == "op" and nxt.text in ("<", "<=", "=", "!=", "<*", "+", "-"))
                        or (nxt.kind == "ident" and nxt.text == "mod")
                    )
            j += 1
        return False  # unbalanced; let the formula path report it

    def parse_exists(self) -> ExistsBounded:
        kw = self._next()  # 'exists'
        name_tok = self._peek()
        if name_tok.kind != "ident":
            self._fail("expected a variable name after 'exists'")
        if name_tok.text in _RESERVED:
            self._fail(f"{name_tok.text!r} is reserved and cannot be a variable")
        self._next()
        self._expect_op("(")
        self.depth += 1
        if self.depth > self.max_depth:
            self._fail(f"quantifier nesting exceeds {self.max_depth}", kw)
        body = self.parse_formula()
        self.depth -= 1
        self._expect_op(")")
        lowers, uppers = _bound_candidates(name_tok.text, body)
        if not lowers or not uppers:
            raise FormulaSyntaxError(
                f"quantifier over {name_tok.text!r} is unbounded: the body needs "
                "conjuncts bounding it below and above",
                self.text,
                kw.pos,
            )
        return ExistsBounded(name_tok.text, lowers[0], uppers[0], body)

    def parse_atom(self) -> Formula:
        tok = self._peek()
        if tok.kind == "ident" and tok.text == "frac":
            self._next()
            self._expect_op("(")
            left = self.parse_term()
            self._expect_op(")")
            self._expect_op("<")
            ftok = self._peek()
            if not (ftok.kind == "ident" and ftok.text == "frac"):
                self._fail("expected 'frac' on the right of a fractional comparison")
            self._next()
            self._expect_op("(")
            right = self.parse_term()
            self._expect_op(")")
            return FracLess(left, right)
        left = self.parse_term()
        op = self._peek()
        if op.kind != "op" or op.text not in ("<", "<=", "=", "!=", "<*"):
            self._fail("expected a comparison operator")
        self._next()
        right = self.parse_term()
        if op.text == "=":
            mod_tok = self._peek()
            if mod_tok.kind == "ident" and mod_tok.text == "mod":
                if not isinstance(right, Const):
                    self._fail("congruence residue must be an integer literal", mod_tok)
                self._next()
                modulus = self._parse_literal_int()
                if modulus < 2:
                    self._fail("modulus must be a literal >= 2", mod_tok)
                return Congruent(left, right.value, modulus)
            return Equal(left, right)
        if op.text == "<":
            return Less(left, right)
        if op.text == "<=":
            return Not(Less(right, left))
        if op.text == "!=":
            return Not(Equal(left, right))
        return StarLess(left, right)

    def _parse_literal_int(self) -> int:
        sign = 1
        tok = self._peek()
        if tok.kind == "op" and tok.text == "-":
            sign = -1
            self._next()
            tok = self._peek()
        if tok.kind != "int":
            self._fail("expected an integer literal")
        self._next()
        return sign * self._int_value(tok)

    # ---- term levels

    def parse_term(self) -> Term:
        node = self.parse_unary()
        while True:
            tok = self._peek()
            if tok.kind == "op" and tok.text == "+":
                self._next()
                node = Add(node, self.parse_unary())
            elif tok.kind == "op" and tok.text == "-":
                self._next()
                node = Sub(node, self.parse_unary())
            else:
                return node

    def parse_unary(self) -> Term:
        tok = self._peek()
        if tok.kind == "op" and tok.text == "-":
            if self._peek(1).kind == "int":
                self._next()
                val_tok = self._next()
                return Const(-self._int_value(val_tok))
            self._next()
            return Neg(self.parse_unary())
        return self.parse_primary()

    def parse_primary(self) -> Term:
        tok = self._peek()
        if tok.kind == "int":
            self._next()
            return Const(self._int_value(tok))
        if tok.kind == "op" and tok.text == "(":
            self._next()
            node = self.parse_term()
            self._expect_op(")")
            return node
        if tok.kind == "ident":
            if tok.text in _FUNCS:
                self._next()
                self._expect_op("(")
                arg = self.parse_term()
                self._expect_op(")")
                return Apply(tok.text, arg)
            if tok.text in _RESERVED:
                self._fail(f"{tok.text!r} is reserved here")
            self._next()
            return Var(tok.text)
        self._fail("expected a term")


def _conjuncts(phi: Formula) -> Iterator[Formula]:
    if isinstance(phi, And):
        yield from _conjuncts(phi.left)
        yield from _conjuncts(phi.right)
    else:
        yield phi


def _bound_candidates(var: str, body: Formula) -> tuple[list[Term], list[Term]]:
    """Lower/upper open-bound terms for var among the body's conjuncts.

    Recognized shapes (t never mentioning var):  t < var,  var < t,
    !(var < t) meaning t <= var, and !(t < var) meaning var <= t.
    """
    lowers: list[Term] = []
    uppers: list[Term] = []
    v = Var(var)
    for c in _conjuncts(body):
        negated = False
        if isinstance(c, Not) and isinstance(c.body, Less):
            c = c.body
            negated = True
        if not isinstance(c, Less):
            continue
        if c.right == v and var not in term_free_vars(c.left):
            if negated:  # !(t < var): var <= t
                uppers.append(Add(c.left, Const(1)))
            else:
                lowers.append(c.left)
        elif c.left == v and var not in term_free_vars(c.right):
            if negated:  # !(var < t): t <= var
                lowers.append(Sub(c.right, Const(1)))
            else:
                uppers.append(c.right)
    return lowers, uppers


def parse(
    text: str,
    *,
    require_sentence: bool = False,
    max_depth: int = MAX_QUANTIFIER_DEPTH,
) -> Formula:
    """Parse a formula; syntax errors carry offset, line and column.

    With require_sentence=True, any free variable is rejected (the error
    names the first offender); this is what the decision entry points use.
    """
    parser = _Parser(text, max_depth)
    node = parser.parse_formula()
    tok = parser._peek()
    if tok.kind != "eof":
        parser._fail("unexpected trailing input")
    if require_sentence:
        fv = free_variables(node)
        if fv:
            raise UnboundVariableError(
                f"unbound variable {min(fv)!r} in a formula that must be a sentence"
            )
    return node


# ---------------------------------------------------------------------------
# free variables and rendering


def term_free_vars(term: Term) -> frozenset[str]:
    if isinstance(term, Var):
        return frozenset((term.name,))
    if isinstance(term, Const):
        return frozenset()
    if isinstance(term, (Add, Sub)):
        return term_free_vars(term.left) | term_free_vars(term.right)
    if isinstance(term, Neg):
        return term_free_vars(term.arg)
    return term_free_vars(term.arg)  # Apply


def free_variables(phi: Formula) -> frozenset[str]:
    if isinstance(phi, (Less, Equal, StarLess, FracLess)):
        return term_free_vars(phi.left) | term_free_vars(phi.right)
    if isinstance(phi, Congruent):
        return term_free_vars(phi.term)
    if isinstance(phi, Not):
        return free_variables(phi.body)
    if isinstance(phi, (And, Or)):
        return free_variables(phi.left) | free_variables(phi.right)
    return (
        term_free_vars(phi.lower)
        | term_free_vars(phi.upper)
        | (free_variables(phi.body) - {phi.var})
    )


def _render_term(term: Term) -> str:
    if isinstance(term, Var):
        return term.name
    if isinstance(term, Const):
        return str(term.value)
    if isinstance(term, Add):
        return f"{_render_term(term.left)} + {_render_operand(term.right)}"
    if isinstance(term, Sub):
        return f"{_render_term(term.left)} - {_render_operand(term.right)}"
    if isinstance(term, Neg):
        # parenthesize literals so "-(5)" stays Neg(Const(5)), distinct from -5
        if isinstance(term.arg, (Const, Add, Sub)):
            return f"-({_render_term(term.arg)})"
        return f"-{_render_term(term.arg)}"
    return f"{term.func}({_render_term(term.arg)})"


def _render_operand(term: Term) -> str:
    if isinstance(term, (Add, Sub)):
        return f"({_render_term(term)})"
    return _render_term(term)


def render(phi: Formula) -> str:
    """Canonical text for a formula; parse(render(phi)) == phi."""
    if isinstance(phi, Less):
        return f"{_render_term(phi.left)} < {_render_term(phi.right)}"
    if isinstance(phi, Equal):
        return f"{_render_term(phi.left)} = {_render_term(phi.right)}"
    if isinstance(phi, StarLess):
        return f"{_render_term(phi.left)} <* {_render_term(phi.right)}"
    if isinstance(phi, FracLess):
        return f"frac({_render_term(phi.left)}) < frac({_render_term(phi.right)})"
    if isinstance(phi, Congruent):
        return f"{_render_term(phi.term)} = {phi.residue} mod {phi.modulus}"
    if isinstance(phi, Not):
        if isinstance(phi.body, (And, Or)):
            return f"!({render(phi.body)})"
        return f"!{render(phi.body)}"
    if isinstance(phi, And):
        left = f"({render(phi.left)})" if isinstance(phi.left, Or) else render(phi.left)
        right = (
            f"({render(phi.right)})"
            if isinstance(phi.right, (Or, And))
            else render(phi.right)
        )
        return f"{left} && {right}"
    if isinstance(phi, Or):
        right = f"({render(phi.right)})" if isinstance(phi.right, Or) else render(phi.right)
        return f"{render(phi.left)} || {right}"
    return f"exists {phi.var} ({render(phi.body)})"


# ---------------------------------------------------------------------------
# evaluation


def eval_term(term: Term, env: dict[str, int]) -> int:
    if isinstance(term, Var):
        try:
            return env[term.name]
        except KeyError:
            raise UnboundVariableError(f"variable {term.name!r} has no binding") from None
    if isinstance(term, Const):
        return term.value
    if isinstance(term, Add):
        return eval_term(term.left, env) + eval_term(term.right, env)
    if isinstance(term, Sub):
        return eval_term(term.left, env) - eval_term(term.right, env)
    if isinstance(term, Neg):
        return -eval_term(term.arg, env)
    arg = eval_term(term.arg, env)
    if term.func == "f":
        return beatty_f(arg)
    if term.func == "fbar":
        return fbar(arg)
    if arg < 1:
        raise DomainError(f"{term.func}({arg}) is undefined: argument must be >= 1")
    return fibfloor(arg) if term.func == "F" else g_func(arg)


def evaluate(
    phi: Formula,
    env: dict[str, int] | None = None,
    *,
    use_fast_path: bool = True,
    budget: int = ENUMERATION_BUDGET,
) -> bool:
    """Truth value of phi under env (which must bind every free variable).

    Bounded quantifiers enumerate the interior of their bounds unless
    use_fast_path is set and the body has the interval-plus-fractional-band
    shape, in which case the extrema machinery answers without enumeration.
    The fast path may evaluate a constant subterm that short-circuited
    enumeration would have skipped, so it can surface a domain error where
    enumeration returns False; it never returns a different truth value.
    """
    if env is None:
        env = {}
    if isinstance(phi, Less):
        return eval_term(phi.left, env) < eval_term(phi.right, env)
    if isinstance(phi, Equal):
        return eval_term(phi.left, env) == eval_term(phi.right, env)
    if isinstance(phi, StarLess):
        return star_less(eval_term(phi.left, env), eval_term(phi.right, env))
    if isinstance(phi, FracLess):
        return (
            frac_compare(eval_term(phi.left, env), eval_term(phi.right, env))
            is Ordering.LT
        )
    if isinstance(phi, Congruent):
        return (eval_term(phi.term, env) - phi.residue) % phi.modulus == 0
    if isinstance(phi, Not):
        return not evaluate(phi.body, env, use_fast_path=use_fast_path, budget=budget)
    if isinstance(phi, And):
        return evaluate(
            phi.left, env, use_fast_path=use_fast_path, budget=budget
        ) and evaluate(phi.right, env, use_fast_path=use_fast_path, budget=budget)
    if isinstance(phi, Or):
        return evaluate(
            phi.left, env, use_fast_path=use_fast_path, budget=budget
        ) or evaluate(phi.right, env, use_fast_path=use_fast_path, budget=budget)
    return _eval_exists(phi, env, use_fast_path, budget)


def _eval_exists(
    node: ExistsBounded, env: dict[str, int], use_fast_path: bool, budget: int
) -> bool:
    if use_fast_path:
        plan = _match_box(node, env)
        if plan is not None:
            return _decide_box_plan(plan, env, use_fast_path, budget)
    lo = eval_term(node.lower, env)
    hi = eval_term(node.upper, env)
    if hi - lo - 1 > budget:
        raise EnumerationBudgetError(
            f"interval ({lo}, {hi}) has {hi - lo - 1} points, over the budget of {budget}"
        )
    var = node.var
    missing = object()
    saved = env.get(var, missing)
    try:
        for t in range(lo + 1, hi):
            env[var] = t
            if evaluate(node.body, env, use_fast_path=use_fast_path, budget=budget):
                return True
        return False
    finally:
        if saved is missing:
            env.pop(var, None)
        else:
            env[var] = saved


class _BoxPlan(NamedTuple):
    lowers: tuple[Term, ...]
    uppers: tuple[Term, ...]
    frac_low: Term | None  # frac(frac_low) < frac(var)
    frac_high: Term | None  # frac(var) < frac(frac_high)
    residuals: tuple[Formula, ...]


def _match_box(node: ExistsBounded, env: dict[str, int]) -> _BoxPlan | None:
    """Recognize 'a < x < b together with a fractional band on x'.

    Every other conjunct must avoid the bound variable (it is then evaluated
    once).  At most one fractional bound on each side is accepted.
    """
    var = node.var
    v = Var(var)
    known = set(env) - {var}
    lowers, uppers = _bound_candidates(var, node.body)
    lowers = [node.lower, *lowers]
    uppers = [node.upper, *uppers]
    bound_atoms = set()
    for c in _conjuncts(node.body):
        inner = c.body if isinstance(c, Not) and isinstance(c.body, Less) else c
        if isinstance(inner, Less) and (
            (inner.right == v and var not in term_free_vars(inner.left))
            or (inner.left == v and var not in term_free_vars(inner.right))
        ):
            bound_atoms.add(c)
    frac_low: Term | None = None
    frac_high: Term | None = None
    residuals: list[Formula] = []
    for c in _conjuncts(node.body):
        if c in bound_atoms:
            continue
        if isinstance(c, FracLess) and c.right == v and var not in term_free_vars(c.left):
            if frac_low is not None or not term_free_vars(c.left) <= known:
                return None
            frac_low = c.left
            continue
        if isinstance(c, FracLess) and c.left == v and var not in term_free_vars(c.right):
            if frac_high is not None or not term_free_vars(c.right) <= known:
                return None
            frac_high = c.right
            continue
        if var in free_variables(c) or not free_variables(c) <= known:
            return None
        residuals.append(c)
    for t in (*lowers, *uppers):
        if not term_free_vars(t) <= known:
            return None
    return _BoxPlan(tuple(lowers), tuple(uppers), frac_low, frac_high, tuple(residuals))


def _decide_box_plan(
    plan: _BoxPlan, env: dict[str, int], use_fast_path: bool, budget: int
) -> bool:
    lo = max(eval_term(t, env) for t in plan.lowers)
    hi = min(eval_term(t, env) for t in plan.uppers)
    if hi - lo < 2:
        return False
    for residual in plan.residuals:
        if not evaluate(residual, env, use_fast_path=use_fast_path, budget=budget):
            return False
    iv = extrema.Interval(lo, hi)
    if plan.frac_low is not None:
        c = eval_term(plan.frac_low, env)
        if plan.frac_high is not None:
            d = eval_term(plan.frac_high, env)
            return extrema.exists_in_box(iv, c, d)
        return extrema.constrained_min(iv, c) is not None
    if plan.frac_high is not None:
        d = eval_term(plan.frac_high, env)
        return extrema.constrained_max(iv, d) is not None
    return True


def decide_box(phi: Formula) -> bool:
    """Decide a box-shaped sentence through the extrema machinery.

    Raises BoxShapeError when phi is not a box-shaped bounded 'exists'; that
    signals the caller to fall back to enumeration, nothing more.
    """
    if not isinstance(phi, ExistsBounded):
        raise BoxShapeError("not a bounded 'exists'")
    fv = free_variables(phi)
    if fv:
        raise UnboundVariableError(f"unbound variable {min(fv)!r} in a sentence")
    plan = _match_box(phi, {})
    if plan is None:
        raise BoxShapeError(
            "body is not an interval plus at most one fractional bound per side"
        )
    return _decide_box_plan(plan, {}, True, ENUMERATION_BUDGET)


def decide(phi: Formula, *, budget: int = ENUMERATION_BUDGET) -> bool:
    """Decide a sentence: box shapes go to the extrema fast path, everything
    else to bounded enumeration."""
    fv = free_variables(phi)
    if fv:
        raise UnboundVariableError(f"unbound variable {min(fv)!r} in a sentence")
    return evaluate(phi, {}, use_fast_path=True, budget=budget)
