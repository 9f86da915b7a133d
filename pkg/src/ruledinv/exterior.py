"""Exterior algebra of the first homology of a closed genus-g surface.

Multivectors are finite integer combinations of blades in the symplectic
basis a1, b1, ..., ag, bg.  All arithmetic is exact: coefficients are
Python ints, exponentials truncate by nilpotency, and the top pairing
reads off the coefficient of the orientation blade a1^b1^...^ag^bg,
normalized so that blade itself pairs to +1.

Generators carry flat indices 0..2g-1 with a_k at 2(k-1) and b_k at
2(k-1)+1; a blade is a strictly increasing tuple of such indices.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

__all__ = [
    "SurfaceTopology",
    "Multivector",
    "wedge",
    "combine",
    "theta_class",
    "theta_divided_power",
    "exp_even",
    "top_pairing",
    "grade_part",
    "parse_multivector",
    "format_multivector",
]

Blade = tuple


@dataclass(frozen=True)
class SurfaceTopology:
    """Genus bookkeeping for the surface whose H_1 we work over."""

    genus: int

    def __post_init__(self):
        if self.genus < 0:
            raise ValueError("genus must be nonnegative")

    @property
    def rank(self) -> int:
        # rank of H_1
        return 2 * self.genus

    def a(self, k: int) -> int:
        """Flat index of a_k, 1-based k."""
        self._check_handle(k)
        return 2 * (k - 1)

    def b(self, k: int) -> int:
        """Flat index of b_k, 1-based k."""
        self._check_handle(k)
        return 2 * (k - 1) + 1

    def _check_handle(self, k: int):
        if not 1 <= k <= self.genus:
            raise ValueError(f"handle index {k} out of range for genus {self.genus}")

    def generator_name(self, index: int) -> str:
        k, parity = divmod(index, 2)
        return f"{'ab'[parity]}{k + 1}"

    def top_blade(self) -> Blade:
        return tuple(range(self.rank))


def _wedge_blades(x: Blade, y: Blade):
    """Merge two strictly increasing blades; None if they share a generator.

    The sign is the parity of the shuffle moving y's entries into place.
    """
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
            # y[j] jumps over the nx - i remaining entries of x
            merged.append(y[j])
            j += 1
            parity ^= (nx - i) & 1
    merged.extend(x[i:])
    merged.extend(y[j:])
    return tuple(merged), (-1 if parity else 1)


class Multivector:
    """Sparse integer element of the exterior algebra.

    Immutable by convention: no method mutates, operators return fresh
    instances.  Supports +, -, and scaling by int; wedge products go
    through :func:`wedge` which also validates generator ranges.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for blade, coeff in (terms or {}).items():
            if not isinstance(coeff, int):
                raise TypeError(f"coefficient {coeff!r} is not an int")
            blade = tuple(blade)
            if any(blade[i] >= blade[i + 1] for i in range(len(blade) - 1)):
                raise ValueError(f"blade {blade} is not strictly increasing")
            if blade and blade[0] < 0:
                raise ValueError(f"blade {blade} has a negative generator index")
            if coeff:
                clean[blade] = coeff
        self._terms = clean

    @classmethod
    def zero(cls) -> "Multivector":
        return cls()

    @classmethod
    def scalar(cls, n: int) -> "Multivector":
        return cls({(): n})

    @classmethod
    def generator(cls, index: int) -> "Multivector":
        return cls({(index,): 1})

    @classmethod
    def blade(cls, indices, coeff: int = 1) -> "Multivector":
        """Blade from possibly unsorted indices; zero on a repeated index."""
        indices = list(indices)
        sign = 1
        # insertion sort, counting transpositions
        for i in range(1, len(indices)):
            j = i
            while j > 0 and indices[j - 1] > indices[j]:
                indices[j - 1], indices[j] = indices[j], indices[j - 1]
                sign = -sign
                j -= 1
        if any(indices[i] == indices[i + 1] for i in range(len(indices) - 1)):
            return cls.zero()
        return cls({tuple(indices): sign * coeff})

    def coefficient(self, blade) -> int:
        return self._terms.get(tuple(blade), 0)

    def items(self):
        """Terms as (blade, coefficient), sorted by grade then blade."""
        return sorted(self._terms.items(), key=lambda t: (len(t[0]), t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self):
        return {len(blade) for blade in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def max_index(self) -> int:
        """Largest generator index used, -1 for scalars and zero."""
        return max((blade[-1] for blade in self._terms if blade), default=-1)

    def __add__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        terms = dict(self._terms)
        for blade, coeff in other._terms.items():
            terms[blade] = terms.get(blade, 0) + coeff
        return Multivector(terms)

    def __neg__(self):
        return Multivector({b: -c for b, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Multivector({b: c * other for b, c in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"Multivector({dict(self.items())!r})"


def _check_range(x: Multivector, topo: SurfaceTopology, who: str):
    if x.max_index() >= topo.rank:
        raise ValueError(
            f"{who}: generator index {x.max_index()} out of range for genus {topo.genus}"
        )


def wedge(x: Multivector, y: Multivector, topo: SurfaceTopology) -> Multivector:
    """Exterior product of x and y over topo's generator set."""
    _check_range(x, topo, "wedge")
    _check_range(y, topo, "wedge")
    terms = {}
    for bx, cx in x._terms.items():
        for by, cy in y._terms.items():
            hit = _wedge_blades(bx, by)
            if hit is None:
                continue
            blade, sign = hit
            terms[blade] = terms.get(blade, 0) + sign * cx * cy
    return Multivector(terms)


def combine(c1: int, x: Multivector, c2: int, y: Multivector) -> Multivector:
    """Integer linear combination c1*x + c2*y."""
    return c1 * x + c2 * y


def theta_class(topo: SurfaceTopology) -> Multivector:
    """Sum of a_k^b_k over the handles; zero in genus 0."""
    terms = {(topo.a(k), topo.b(k)): 1 for k in range(1, topo.genus + 1)}
    return Multivector(terms)


@lru_cache(maxsize=None)
def theta_divided_power(topo: SurfaceTopology, k: int) -> Multivector:
    """Theta^k/k!: the sum of all k-handle orientation blades.

    Agrees with grade_part(exp_even(theta_class(topo)), 2k); distinct
    a_i^b_i blocks commute, so each k-subset of handles contributes one
    blade with coefficient +1.  Cached: results are immutable and the
    cross-validation grids ask for the same powers constantly.
    """
    if k < 0:
        raise ValueError("power must be nonnegative")
    if k > topo.genus:
        return Multivector.zero()
    terms = {}
    for subset in combinations(range(1, topo.genus + 1), k):
        blade = []
        for h in subset:
            blade.append(topo.a(h))
            blade.append(topo.b(h))
        terms[tuple(blade)] = 1
    return Multivector(terms)


def exp_even(x: Multivector, topo: SurfaceTopology) -> Multivector:
    """Exponential sum of x^k/k!, truncated by nilpotency at grade 2g.

    x must be zero or homogeneous of even degree >= 2.  Each division by
    k must come out exact; blade sums with integer coefficients always
    satisfy this (a k-fold product of distinct blades shows up k! times).
    """
    _check_range(x, topo, "exp_even")
    if x.is_zero():
        return Multivector.scalar(1)
    degs = x.degrees()
    if len(degs) != 1:
        raise ValueError("exp_even: input is not homogeneous")
    (deg,) = degs
    if deg % 2 or deg < 2:
        raise ValueError(f"exp_even: degree {deg} is not even and >= 2")
    result = Multivector.scalar(1)
    power = Multivector.scalar(1)
    k = 0
    while True:
        k += 1
        raw = wedge(power, x, topo)
        if raw.is_zero():
            break
        terms = {}
        for blade, coeff in raw._terms.items():
            q, r = divmod(coeff, k)
            if r:
                raise ArithmeticError(
                    f"exp_even: coefficient {coeff} on {blade} not divisible by {k}"
                )
            terms[blade] = q
        power = Multivector(terms)
        result = result + power
    return result


def top_pairing(x: Multivector, topo: SurfaceTopology) -> int:
    """Coefficient of the orientation blade a1^b1^...^ag^bg."""
    _check_range(x, topo, "top_pairing")
    return x.coefficient(topo.top_blade())


def grade_part(x: Multivector, k: int) -> Multivector:
    """Grade-k component of x."""
    if k < 0:
        raise ValueError("grade_part: grade must be nonnegative")
    return Multivector({b: c for b, c in x._terms.items() if len(b) == k})


# -- text form ---------------------------------------------------------------
#
#   form  := ['+'|'-'] term (('+'|'-') term)*
#   term  := integer ['*' blade] | blade
#   blade := gen ('^' gen)*
#   gen   := ('a'|'b') index          with 1 <= index <= genus

_GEN_TOKEN = "gen"
_INT_TOKEN = "int"


def _scan_form(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*^":
            tokens.append((ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append((_INT_TOKEN, int(text[i:j]), i))
            i = j
            continue
        if ch in "ab":
            j = i + 1
            while j < n and text[j].isdigit():
                j += 1
            if j == i + 1:
                raise ValueError(f"multivector syntax error at position {i}: bare '{ch}'")
            tokens.append((_GEN_TOKEN, (ch, int(text[i + 1 : j])), i))
            i = j
            continue
        raise ValueError(f"multivector syntax error at position {i}: unexpected {ch!r}")
    return tokens


def parse_multivector(text: str, topo: SurfaceTopology) -> Multivector:
    """Parse text like '2*a1^b1 - a2^b2 + 3' into a multivector."""
    tokens = _scan_form(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None, len(text))

    def gen_index(letter, k, at):
        if not 1 <= k <= topo.genus:
            raise ValueError(
                f"multivector index out of range at position {at}: "
                f"{letter}{k} needs genus >= {k}, have {topo.genus}"
            )
        return topo.a(k) if letter == "a" else topo.b(k)

    def parse_blade():
        nonlocal pos
        kind, val, at = peek()
        if kind != _GEN_TOKEN:
            raise ValueError(f"multivector syntax error at position {at}: expected generator")
        pos += 1
        indices = [gen_index(*val, at)]
        while peek()[0] == "^":
            pos += 1
            kind, val, at = peek()
            if kind != _GEN_TOKEN:
                raise ValueError(
                    f"multivector syntax error at position {at}: expected generator after '^'"
                )
            pos += 1
            indices.append(gen_index(*val, at))
        return indices

    def parse_term():
        nonlocal pos
        kind, val, at = peek()
        if kind == _INT_TOKEN:
            pos += 1
            if peek()[0] == "*":
                pos += 1
                return Multivector.blade(parse_blade(), val)
            return Multivector.scalar(val)
        if kind == _GEN_TOKEN:
            return Multivector.blade(parse_blade())
        raise ValueError(f"multivector syntax error at position {at}: expected term")

    result = Multivector.zero()
    sign = 1
    kind, _, _ = peek()
    if kind in ("+", "-"):
        sign = -1 if kind == "-" else 1
        pos += 1
    result = result + sign * parse_term()
    while pos < len(tokens):
        kind, _, at = peek()
        if kind not in ("+", "-"):
            raise ValueError(f"multivector syntax error at position {at}: expected '+' or '-'")
        pos += 1
        sign = -1 if kind == "-" else 1
        result = result + sign * parse_term()
    return result


def format_multivector(x: Multivector, topo: SurfaceTopology) -> str:
    """Canonical text form, parseable by parse_multivector."""
    _check_range(x, topo, "format_multivector")
    if x.is_zero():
        return "0"
    chunks = []
    for blade, coeff in x.items():
        if blade:
            body = "^".join(topo.generator_name(i) for i in blade)
            if coeff == 1:
                term = body
            elif coeff == -1:
                term = f"-{body}"
            else:
                term = f"{coeff}*{body}"
        else:
            term = str(coeff)
        if not chunks:
            chunks.append(term)
        elif term.startswith("-"):
            chunks.append(f"- {term[1:]}")
        else:
            chunks.append(f"+ {term}")
    return " ".join(chunks)
