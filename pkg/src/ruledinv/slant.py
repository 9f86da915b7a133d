"""Slant-product algebra: parsing, normal forms, abelian evaluation.

The algebra is generated by slant products of Chern classes c_1..c_r of
the universal bundle against homology classes of the curve: the point
class pt, the curve class S, and the odd classes g_1..g_{2g} in a
symplectic basis.  Normal monomials use

    u_i = <c_i|pt>        even, degree 2i
    v_i = <c_i|S>         even, degree 2i-2, kept for i >= 2
    G[i,j] = <c_i|g_j>    odd, degree 2i-1

v_1 is eliminated eagerly: <c_1|S> reduces to a context scalar (minus
the kernel degree, by default).  Products of cup classes split
left-to-right; splitting over pt is multiplicative, over an odd class
it Leibniz-expands with the sign of the right factor's degree, and over
S it picks up the intersection-form double sum.  Degree-2 classes
pulled back from the curve slant to a context number over S and to zero
over pt and the odd classes.

Everything in scope has even cup degree, so the printed signs collapse
to +1; the code keeps them literal anyway.

Accepted syntax (whitespace-insensitive):

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := primary ('^' integer)*
    primary:= integer | slant | 'u' index | 'v' index
            | 'G' '[' index ',' index ']' | '(' expr ')'
    slant  := '<' cup '|' base '>'
    cup    := atom ('.' atom)*
    atom   := 'c' index | 'k0' '[' ident ']'
    base   := 'pt' | 'S' | 'g' index

The u/v/G forms and the optional leading sign are what print_normal
emits, so printing parses back.
"""

import re
from dataclasses import dataclass, field

from .exterior import Multivector, SurfaceTopology, theta_divided_power, top_pairing, wedge

__all__ = [
    "AlgebraContext",
    "SlantSyntaxError",
    "parse_expr",
    "NormalForm",
    "normalize",
    "print_normal",
    "evaluate_abelian",
]


@dataclass(frozen=True, eq=True)
class AlgebraContext:
    """Rank, genus, and reduction data for the algebra.

    scalar_degree feeds the <c1|S> reduction: the value used is
    c1_sigma_sign * scalar_degree, and the sign field exists so the
    convention itself can be exercised from tests.  k0_eval sends names
    of degree-2 classes pulled back from the curve to their integrals.
    """

    r: int
    genus: int
    scalar_degree: int = 0
    k0_eval: dict = field(default_factory=dict)
    c1_sigma_sign: int = -1

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("rank must be >= 1")
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")
        if self.c1_sigma_sign not in (1, -1):
            raise ValueError("c1_sigma_sign must be +1 or -1")


# AST nodes are tagged tuples:
#   ("int", n)
#   ("add", ((sign, node), ...))
#   ("mul", (node, ...))
#   ("pow", node, k)
#   ("slant", cup, base)    cup: (("c", i) | ("k0", name), ...)
#                           base: ("pt",) | ("sigma",) | ("gamma", j)


class SlantSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<word>[A-Za-z_][A-Za-z0-9_]*)|(?P<sym>[<>|().,+\-*^\[\]]))"
)
_WORD_SPLIT = re.compile(r"^([A-Za-z]+?)(\d+)$")


def _scan(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = len(text) - len(stripped)
            raise SlantSyntaxError(f"unexpected character {stripped[0]!r}", at)
        if m.group("int") is not None:
            tokens.append(("int", int(m.group("int")), m.start("int")))
        elif m.group("word") is not None:
            tokens.append(("word", m.group("word"), m.start("word")))
        else:
            tokens.append((m.group("sym"), m.group("sym"), m.start("sym")))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: AlgebraContext):
        self.text = text
        self.ctx = ctx
        self.tokens = _scan(text)
        self.pos = 0

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return ("eof", None, len(self.text))

    def take(self, kind):
        tok = self.peek()
        if tok[0] != kind:
            raise SlantSyntaxError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        self.pos += 1
        return tok

    def at(self, kind):
        return self.peek()[0] == kind

    def check_index(self, what, value, hi, position):
        if not 1 <= value <= hi:
            raise SlantSyntaxError(f"{what} index {value} out of range 1..{hi}", position)

    def split_word(self, tok):
        m = _WORD_SPLIT.match(tok[1])
        if m:
            return m.group(1), int(m.group(2)), tok[2]
        return tok[1], None, tok[2]

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            raise SlantSyntaxError(f"trailing input {tok[1]!r}", tok[2])
        return node

    def expr(self):
        terms = []
        sign = 1
        if self.at("+") or self.at("-"):
            sign = -1 if self.take(self.peek()[0])[0] == "-" else 1
        terms.append((sign, self.term()))
        while self.at("+") or self.at("-"):
            sign = -1 if self.take(self.peek()[0])[0] == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return ("add", tuple(terms))

    def term(self):
        factors = [self.factor()]
        while self.at("*"):
            self.take("*")
            factors.append(self.factor())
        if len(factors) == 1:
            return factors[0]
        return ("mul", tuple(factors))

    def factor(self):
        node = self.primary()
        while self.at("^"):
            self.take("^")
            node = ("pow", node, self.take("int")[1])
        return node

    def primary(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take("int")
            return ("int", tok[1])
        if tok[0] == "(":
            self.take("(")
            node = self.expr()
            self.take(")")
            return node
        if tok[0] == "<":
            return self.slant()
        if tok[0] == "word":
            letters, num, at = self.split_word(tok)
            if letters == "u" and num is not None:
                self.take("word")
                self.check_index("chern", num, self.ctx.r, at)
                return ("slant", (("c", num),), ("pt",))
            if letters == "v" and num is not None:
                self.take("word")
                self.check_index("chern", num, self.ctx.r, at)
                return ("slant", (("c", num),), ("sigma",))
            if tok[1] == "G":
                self.take("word")
                self.take("[")
                i_tok = self.take("int")
                self.check_index("chern", i_tok[1], self.ctx.r, i_tok[2])
                self.take(",")
                j_tok = self.take("int")
                self.check_index("odd", j_tok[1], 2 * self.ctx.genus, j_tok[2])
                self.take("]")
                return ("slant", (("c", i_tok[1]),), ("gamma", j_tok[1]))
        raise SlantSyntaxError(f"expected a factor, found {tok[1]!r}", tok[2])

    def slant(self):
        self.take("<")
        cup = [self.atom()]
        while self.at("."):
            self.take(".")
            cup.append(self.atom())
        self.take("|")
        base = self.base()
        self.take(">")
        return ("slant", tuple(cup), base)

    def atom(self):
        tok = self.peek()
        if tok[0] != "word":
            raise SlantSyntaxError(f"expected a cup atom, found {tok[1]!r}", tok[2])
        if tok[1] == "k0":
            self.take("word")
            self.take("[")
            name = self.take("word")[1]
            self.take("]")
            return ("k0", name)
        letters, num, at = self.split_word(tok)
        if letters == "c" and num is not None:
            self.take("word")
            self.check_index("chern", num, self.ctx.r, at)
            return ("c", num)
        raise SlantSyntaxError(f"unknown cup atom {tok[1]!r}", tok[2])

    def base(self):
        tok = self.peek()
        if tok[0] != "word":
            raise SlantSyntaxError(f"expected a base class, found {tok[1]!r}", tok[2])
        if tok[1] == "pt":
            self.take("word")
            return ("pt",)
        if tok[1] == "S":
            self.take("word")
            return ("sigma",)
        letters, num, at = self.split_word(tok)
        if letters == "g" and num is not None:
            self.take("word")
            self.check_index("odd", num, 2 * self.ctx.genus, at)
            return ("gamma", num)
        raise SlantSyntaxError(f"unknown base class {tok[1]!r}", tok[2])


def parse_expr(text: str, ctx: AlgebraContext):
    """Parse text into an AST; indices are validated against ctx."""
    return _Parser(text, ctx).parse()


# -- normal forms ------------------------------------------------------------


def _merge_odd(x, y):
    """Merge sorted G-tuples with the anticommutation sign; None on repeats."""
    if not x:
        return y, 1
    if not y:
        return x, 1
    merged = []
    parity = 0
    i = j = 0
    nx, ny = len(x), len(y)
    while i < nx and j < ny:
        if x[i] == y[j]:
            return None
        if x[i] < y[j]:
            merged.append(x[i])
            i += 1
        else:
            merged.append(y[j])
            j += 1
            parity ^= (nx - i) & 1
    merged.extend(x[i:])
    merged.extend(y[j:])
    return tuple(merged), (-1 if parity else 1)


class NormalForm:
    """Integer combination of normal monomials over a fixed context shape.

    Keys are (u_exponents, v_exponents, odd_generators): u covers
    u_1..u_r, v covers v_2..v_r, odd is a sorted tuple of (i, j) pairs
    for G[i,j].  Only r and genus are carried; the reduction scalars
    live in the context and are consumed during normalize.
    """

    __slots__ = ("r", "genus", "terms")

    def __init__(self, r: int, genus: int, terms=None):
        self.r = r
        self.genus = genus
        clean = {}
        for key, coeff in (terms or {}).items():
            if coeff:
                clean[key] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, ctx: AlgebraContext) -> "NormalForm":
        return cls(ctx.r, ctx.genus)

    @classmethod
    def scalar(cls, ctx: AlgebraContext, n: int) -> "NormalForm":
        return cls(ctx.r, ctx.genus, {cls.unit_key(ctx): n})

    @staticmethod
    def unit_key(ctx: AlgebraContext):
        return ((0,) * ctx.r, (0,) * (ctx.r - 1), ())

    @classmethod
    def u_gen(cls, ctx: AlgebraContext, i: int) -> "NormalForm":
        u = tuple(1 if k == i - 1 else 0 for k in range(ctx.r))
        return cls(ctx.r, ctx.genus, {(u, (0,) * (ctx.r - 1), ()): 1})

    @classmethod
    def v_gen(cls, ctx: AlgebraContext, i: int) -> "NormalForm":
        if i < 2:
            raise ValueError("v_1 is not a normal generator; it reduces to a scalar")
        v = tuple(1 if k == i - 2 else 0 for k in range(ctx.r - 1))
        return cls(ctx.r, ctx.genus, {((0,) * ctx.r, v, ()): 1})

    @classmethod
    def odd_gen(cls, ctx: AlgebraContext, i: int, j: int) -> "NormalForm":
        return cls(ctx.r, ctx.genus, {((0,) * ctx.r, (0,) * (ctx.r - 1), ((i, j),)): 1})

    def _match(self, other: "NormalForm"):
        if (self.r, self.genus) != (other.r, other.genus):
            raise ValueError("normal forms built over different contexts")

    def __add__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        self._match(other)
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return NormalForm(self.r, self.genus, terms)

    def __neg__(self):
        return NormalForm(self.r, self.genus, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return NormalForm(self.r, self.genus, {k: c * other for k, c in self.terms.items()})
        if not isinstance(other, NormalForm):
            return NotImplemented
        self._match(other)
        terms = {}
        for (u1, v1, o1), c1 in self.terms.items():
            for (u2, v2, o2), c2 in other.terms.items():
                hit = _merge_odd(o1, o2)
                if hit is None:
                    continue
                odd, sign = hit
                key = (
                    tuple(a + b for a, b in zip(u1, u2)),
                    tuple(a + b for a, b in zip(v1, v2)),
                    odd,
                )
                terms[key] = terms.get(key, 0) + sign * c1 * c2
        return NormalForm(self.r, self.genus, terms)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def monomial_degree(self, key) -> int:
        u, v, odd = key
        deg = sum(e * 2 * (i + 1) for i, e in enumerate(u))
        deg += sum(e * (2 * (i + 2) - 2) for i, e in enumerate(v))
        deg += sum(2 * i - 1 for i, _ in odd)
        return deg

    def degrees(self):
        return {self.monomial_degree(k) for k in self.terms}

    def homogeneous_part(self, degree: int) -> "NormalForm":
        return NormalForm(
            self.r,
            self.genus,
            {k: c for k, c in self.terms.items() if self.monomial_degree(k) == degree},
        )

    def items(self):
        return sorted(self.terms.items(), key=lambda t: (self.monomial_degree(t[0]), t[0]))

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return (self.r, self.genus, self.terms) == (other.r, other.genus, other.terms)

    def __hash__(self):
        return hash((self.r, self.genus, frozenset(self.terms.items())))

    def __repr__(self):
        return f"NormalForm(r={self.r}, genus={self.genus}, {print_normal(self)!r})"


def _atom_degree(atom) -> int:
    if atom[0] == "c":
        return 2 * atom[1]
    return 2  # pulled-back curve classes are declared degree 2


def _cup_degree(cup) -> int:
    return sum(_atom_degree(a) for a in cup)


def _reduce_slant(cup, base, ctx: AlgebraContext) -> NormalForm:
    # pulled-back degree-2 classes peel off first: they cap the base
    for pos, atom in enumerate(cup):
        if atom[0] == "k0":
            name = atom[1]
            if name not in ctx.k0_eval:
                raise ValueError(f"unknown base-class name {name!r} in context")
            if base[0] != "sigma":
                return NormalForm.zero(ctx)
            rest = cup[:pos] + cup[pos + 1 :]
            return ctx.k0_eval[name] * _reduce_slant(rest, ("pt",), ctx)
    if not cup:
        # the empty cup is the unit class; it only sees the point
        if base[0] == "pt":
            return NormalForm.scalar(ctx, 1)
        return NormalForm.zero(ctx)
    if len(cup) == 1:
        i = cup[0][1]
        if base[0] == "pt":
            return NormalForm.u_gen(ctx, i)
        if base[0] == "gamma":
            return NormalForm.odd_gen(ctx, i, base[1])
        if i == 1:
            return NormalForm.scalar(ctx, ctx.c1_sigma_sign * ctx.scalar_degree)
        return NormalForm.v_gen(ctx, i)
    head, tail = cup[:1], cup[1:]
    if base[0] == "pt":
        return _reduce_slant(head, base, ctx) * _reduce_slant(tail, base, ctx)
    sign = -1 if _cup_degree(tail) % 2 else 1
    if base[0] == "gamma":
        out = sign * (_reduce_slant(head, base, ctx) * _reduce_slant(tail, ("pt",), ctx))
        return out + _reduce_slant(head, ("pt",), ctx) * _reduce_slant(tail, base, ctx)
    out = _reduce_slant(head, base, ctx) * _reduce_slant(tail, ("pt",), ctx)
    out = out + _reduce_slant(head, ("pt",), ctx) * _reduce_slant(tail, base, ctx)
    corr = NormalForm.zero(ctx)
    for h in range(1, ctx.genus + 1):
        odd1, odd2 = ("gamma", 2 * h - 1), ("gamma", 2 * h)
        corr = corr + _reduce_slant(head, odd1, ctx) * _reduce_slant(tail, odd2, ctx)
        corr = corr - _reduce_slant(head, odd2, ctx) * _reduce_slant(tail, odd1, ctx)
    return out - sign * corr


def normalize(expr, ctx: AlgebraContext) -> NormalForm:
    """Rewrite an AST into its normal form over ctx."""
    tag = expr[0]
    if tag == "int":
        return NormalForm.scalar(ctx, expr[1])
    if tag == "add":
        # accumulate in one dict; repeated + copies once per term
        terms = {}
        for sign, node in expr[1]:
            for key, coeff in normalize(node, ctx).terms.items():
                terms[key] = terms.get(key, 0) + sign * coeff
        return NormalForm(ctx.r, ctx.genus, terms)
    if tag == "mul":
        out = NormalForm.scalar(ctx, 1)
        for node in expr[1]:
            out = out * normalize(node, ctx)
        return out
    if tag == "pow":
        if expr[2] < 0:
            raise ValueError(f"negative power {expr[2]}")
        base = normalize(expr[1], ctx)
        out = NormalForm.scalar(ctx, 1)
        for _ in range(expr[2]):
            out = out * base
        return out
    if tag == "slant":
        return _reduce_slant(tuple(expr[1]), tuple(expr[2]), ctx)
    raise ValueError(f"unknown node tag {tag!r}")


def print_normal(nf: NormalForm) -> str:
    """Canonical text form; parse_expr of the output normalizes back to nf."""
    if nf.is_zero():
        return "0"
    chunks = []
    for (u, v, odd), coeff in nf.items():
        parts = []
        for i, e in enumerate(u):
            if e:
                parts.append(f"u{i + 1}" + (f"^{e}" if e > 1 else ""))
        for i, e in enumerate(v):
            if e:
                parts.append(f"v{i + 2}" + (f"^{e}" if e > 1 else ""))
        for i, j in odd:
            parts.append(f"G[{i},{j}]")
        if not parts:
            term = str(coeff)
        elif coeff == 1:
            term = "*".join(parts)
        elif coeff == -1:
            term = "-" + "*".join(parts)
        else:
            term = "*".join([str(coeff)] + parts)
        if not chunks:
            chunks.append(term)
        elif term.startswith("-"):
            chunks.append(f"- {term[1:]}")
        else:
            chunks.append(f"+ {term}")
    return " ".join(chunks)


def evaluate_abelian(nf: NormalForm, genus: int, r0: int, v: int) -> int:
    """Pair a rank-1 normal form against the abelian moduli fundamental class.

    The monomial u1^a times a product of G[1,j] maps to the pairing of
    (r0*Theta)^(a+g-v)/(a+g-v)! wedged with the matching odd blade;
    indices outside 0..g contribute nothing.
    """
    if nf.r != 1:
        raise NotImplementedError("evaluation is only defined for the rank-1 algebra")
    if nf.genus != genus:
        raise ValueError(f"normal form genus {nf.genus} does not match {genus}")
    if genus < 0:
        raise ValueError("genus must be nonnegative")
    if r0 < 1:
        raise ValueError("target rank must be >= 1")
    topo = SurfaceTopology(genus)
    total = 0
    for (u, _v, odd), coeff in nf.terms.items():
        a = u[0]
        idx = a + genus - v
        if not 0 <= idx <= genus:
            continue
        blade = Multivector.blade([j - 1 for _, j in odd])
        block = r0**idx * theta_divided_power(topo, idx)
        total += coeff * top_pairing(wedge(block, blade, topo), topo)
    return total
