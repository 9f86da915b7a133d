"""Seeded random slant-expression generator shared by the fuzz tests.

Emits text in the accepted grammar only: unsigned integer literals,
slant generators, u/v/G atoms, products, powers, parenthesized sums,
and an occasional leading minus.  Depth and arity are capped so normal
forms stay small enough to churn through thousands of cases.
"""

import random

from ruledinv.slant import AlgebraContext


def random_context(rng: random.Random) -> AlgebraContext:
    k0 = {"h": rng.randint(-3, 3)} if rng.random() < 0.4 else {}
    return AlgebraContext(
        r=rng.randint(1, 3),
        genus=rng.randint(0, 3),
        scalar_degree=rng.randint(-3, 3),
        k0_eval=k0,
    )


def _atom(rng, ctx):
    if ctx.k0_eval and rng.random() < 0.25:
        return f"k0[{rng.choice(sorted(ctx.k0_eval))}]"
    return f"c{rng.randint(1, ctx.r)}"


def _base(rng, ctx):
    choices = ["pt", "S"]
    if ctx.genus > 0:
        choices.append(f"g{rng.randint(1, 2 * ctx.genus)}")
    return rng.choice(choices)


def _slant(rng, ctx):
    cup = ".".join(_atom(rng, ctx) for _ in range(rng.randint(1, 3)))
    return f"<{cup}|{_base(rng, ctx)}>"


def _leaf(rng, ctx):
    roll = rng.random()
    if roll < 0.20:
        return str(rng.randint(0, 9))
    if roll < 0.60:
        return _slant(rng, ctx)
    if roll < 0.75:
        return f"u{rng.randint(1, ctx.r)}"
    if roll < 0.85:
        return f"v{rng.randint(1, ctx.r)}"
    if ctx.genus > 0:
        return f"G[{rng.randint(1, ctx.r)},{rng.randint(1, 2 * ctx.genus)}]"
    return _slant(rng, ctx)


def _factor(rng, ctx, depth):
    if depth >= 2 or rng.random() < 0.6:
        text = _leaf(rng, ctx)
        # powers stay on leaves; squared sums of squares blow up normal forms
        if rng.random() < 0.2:
            text = f"{text}^{rng.randint(0, 2)}"
        return text
    return f"({random_expr(rng, ctx, depth + 1)})"


def _term(rng, ctx, depth):
    sep = rng.choice(["*", " * ", "*"])
    return sep.join(_factor(rng, ctx, depth) for _ in range(rng.randint(1, 3)))


def random_expr(rng: random.Random, ctx: AlgebraContext, depth: int = 0) -> str:
    parts = [_term(rng, ctx, depth)]
    for _ in range(rng.randint(0, 2)):
        parts.append(rng.choice([" + ", " - ", "+", "-"]) + _term(rng, ctx, depth))
    lead = "-" if depth == 0 and rng.random() < 0.15 else ""
    return lead + "".join(parts)
