"""Shifted power sums and the even/odd comultiplication.

The direct-sum map on the even/odd splitting pulls a power sum back to an
even part and an odd part; relabeling each part onto the full variable set
exhibits the power sums as primitive elements.  The coproduct on formal
power-sum polynomials extends this multiplicatively.
"""

from __future__ import annotations

import re
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import DomainError
from .polyring import (
    FAMILY_USEQ,
    FAMILY_X,
    ONE,
    SYMBOLIC,
    ZERO,
    Poly,
    YSpec,
    useq,
    var_code,
    var_family,
    var_index,
    x,
    y,
)


def shifted_power_sum(k: int, n: int, yspec: YSpec = SYMBOLIC) -> Poly:
    """Sum of (x_i + y_{-i})^k - y_{-i}^k over i = 1..n, then specialized."""
    if k < 1:
        raise DomainError(f"power sum index must be >= 1, got {k}")
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    total = ZERO
    for i in range(1, n + 1):
        total = total + ((x(i) + y(-i)) ** k - y(-i) ** k)
    return total.specialize_y(yspec)


def power_sum_torus(k: int, l: int) -> Poly:
    """Sum of x_i^k - u_{-i}^k over i = 1..l (the torus-weight coordinates)."""
    if k < 1:
        raise DomainError(f"power sum index must be >= 1, got {k}")
    if l < 1:
        raise DomainError(f"need l >= 1, got {l}")
    total = ZERO
    for i in range(1, l + 1):
        total = total + (x(i) ** k - useq(-i) ** k)
    return total


def rho_pullback_power_sum(k: int, l: int) -> tuple[Poly, Poly]:
    """The even and odd parts of the pullback of the k-th power sum at rank l.

    even part: p_k over x_2, x_4, ..., x_{2*floor(l/2)} with weights u_{-2i};
    odd part:  p_k over x_1, x_3, ..., x_{2*floor((l-1)/2)+1} with weights
    u_{-2i+1}.  Their sum is the full power sum with the index set split by
    parity.
    """
    if k < 1:
        raise DomainError(f"power sum index must be >= 1, got {k}")
    if l < 2:
        raise DomainError(f"need l >= 2, got {l}")
    even = ZERO
    for i in range(1, l // 2 + 1):
        even = even + (x(2 * i) ** k - useq(-2 * i) ** k)
    odd = ZERO
    for i in range(1, (l - 1) // 2 + 2):
        odd = odd + (x(2 * i - 1) ** k - useq(-2 * i + 1) ** k)
    return even, odd


def _relabel(p: Poly, parity: int) -> Poly:
    """Apply the parity relabeling: x_{2k} -> x_k, u_{2k} -> u_k for even;
    x_{2k+1} -> x_{k+1}, u_{2k+1} -> u_k for odd."""

    def fn(code: int) -> int:
        fam = var_family(code)
        idx = var_index(code)
        if fam not in (FAMILY_X, FAMILY_USEQ):
            raise DomainError(
                f"relabeling admits only x and torus-weight variables, found family {fam}"
            )
        if idx % 2 != parity % 2:
            raise DomainError(
                f"variable of index {idx} violates the parity {parity} requirement"
            )
        if fam == FAMILY_X:
            new = idx // 2 if parity == 0 else (idx - 1) // 2 + 1
        else:
            new = idx // 2 if parity == 0 else (idx - 1) // 2
        return var_code(fam, new)

    return p.map_variables(fn)


def relabel_even_odd(even: Poly, odd: Poly) -> "TensorElement":
    """Relabel the parity-split parts onto the full index set and form
    (even relabeled) (x) 1 + 1 (x) (odd relabeled)."""
    return TensorElement(
        [(_relabel(even, 0), ONE), (ONE, _relabel(odd, 1))]
    )


class TensorElement:
    """A finite sum of weighted left (x) right pairs over a commutative ring.

    Works for any element type exposing .terms (monomial -> coefficient),
    *, + and a string form; both Poly and PowerPolynomial qualify.
    Equality is true bilinear equality, decided on the fully expanded
    coefficient table, not on how the summands happen to be grouped.
    """

    def __init__(self, summands: Iterable = ()):
        table: dict = {}
        for entry in summands:
            if len(entry) == 3:
                left, right, weight = entry
            else:
                left, right = entry
                weight = 1
            if not left or not right or not weight:
                continue
            key = (left, right)
            w = table.get(key, 0) + weight
            if w:
                table[key] = w
            else:
                table.pop(key, None)
        self._table = table

    @property
    def summands(self) -> list:
        return sorted(
            [(left, right, w) for (left, right), w in self._table.items()],
            key=lambda s: (str(s[0]), str(s[1])),
        )

    def _expanded(self) -> dict:
        out: dict = {}
        for (left, right), w in self._table.items():
            for ml, cl in left.terms.items():
                for mr, cr in right.terms.items():
                    key = (ml, mr)
                    c = out.get(key, 0) + w * cl * cr
                    if c:
                        out[key] = c
                    else:
                        out.pop(key, None)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self._expanded() == other._expanded()

    def __add__(self, other: "TensorElement") -> "TensorElement":
        merged = [(l, r, w) for (l, r), w in self._table.items()]
        merged.extend((l, r, w) for (l, r), w in other._table.items())
        return TensorElement(merged)

    def __mul__(self, other) -> "TensorElement":
        if isinstance(other, (int, Fraction)):
            return TensorElement(
                [(l, r, w * other) for (l, r), w in self._table.items()]
            )
        out = []
        for (l1, r1), w1 in self._table.items():
            for (l2, r2), w2 in other._table.items():
                out.append((l1 * l2, r1 * r2, w1 * w2))
        return TensorElement(out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self._expanded()

    def __str__(self) -> str:
        if not self._table:
            return "0"
        chunks = []
        for left, right, w in self.summands:
            body = f"({left}) (x) ({right})"
            if w != 1:
                body = f"{w}*{body}"
            chunks.append(body)
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"TensorElement({self})"


_GEN_RE = re.compile(r"^p(\d+)(?:\^(\d+))?$")


class PowerPolynomial:
    """A formal polynomial with rational coefficients in generators p_1, p_2, ...

    Monomials are flat tuples (k1, e1, k2, e2, ...) with generator indices
    strictly increasing.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = int(c)
                if c:
                    clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def generator(cls, k: int) -> "PowerPolynomial":
        if k < 1:
            raise DomainError(f"generator index must be >= 1, got {k}")
        return cls({(k, 1): 1})

    @classmethod
    def constant(cls, c) -> "PowerPolynomial":
        return cls({(): c})

    @classmethod
    def parse(cls, text: str) -> "PowerPolynomial":
        """Parse expressions like "p1^2*p3 - 1/2*p2 + 3"."""
        text = text.replace(" ", "")
        if not text:
            raise DomainError("empty power-sum expression")
        total = cls()
        pos = 0
        sign = 1
        if text[0] in "+-":
            sign = -1 if text[0] == "-" else 1
            pos = 1
        while pos <= len(text):
            nxt_plus = text.find("+", pos)
            nxt_minus = text.find("-", pos)
            ends = [e for e in (nxt_plus, nxt_minus) if e != -1]
            end = min(ends) if ends else len(text)
            chunk = text[pos:end]
            if not chunk:
                raise DomainError(f"malformed power-sum expression {text!r}")
            coeff = Fraction(sign)
            mono: dict[int, int] = {}
            for factor in chunk.split("*"):
                m = _GEN_RE.match(factor)
                if m:
                    k = int(m.group(1))
                    e = int(m.group(2) or 1)
                    if k < 1 or e < 1:
                        raise DomainError(f"bad generator factor {factor!r}")
                    mono[k] = mono.get(k, 0) + e
                else:
                    try:
                        coeff *= Fraction(factor)
                    except ValueError:
                        raise DomainError(
                            f"bad factor {factor!r} in power-sum expression"
                        ) from None
            flat = []
            for k in sorted(mono):
                flat.append(k)
                flat.append(mono[k])
            total = total + cls({tuple(flat): coeff})
            if end == len(text):
                break
            sign = -1 if text[end] == "-" else 1
            pos = end + 1
        return total

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def constant_term(self):
        return self.terms.get((), 0)

    def __eq__(self, other) -> bool:
        if isinstance(other, PowerPolynomial):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __add__(self, other) -> "PowerPolynomial":
        if isinstance(other, (int, Fraction)):
            other = PowerPolynomial.constant(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                del out[m]
        return PowerPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> "PowerPolynomial":
        return PowerPolynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "PowerPolynomial":
        if isinstance(other, (int, Fraction)):
            other = PowerPolynomial.constant(other)
        return self + (-other)

    def __mul__(self, other) -> "PowerPolynomial":
        if isinstance(other, (int, Fraction)):
            return PowerPolynomial({m: c * other for m, c in self.terms.items()})
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _merge_flat(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return PowerPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "PowerPolynomial":
        if e < 0:
            raise DomainError("negative power")
        result = PowerPolynomial.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        def mono_key(m):
            return (sum(m[1::2]), tuple((m[i], -m[i + 1]) for i in range(0, len(m), 2)))
        chunks = []
        for m in sorted(self.terms, key=mono_key):
            c = self.terms[m]
            neg = c < 0
            mag = -c if neg else c
            factors = [
                f"p{m[i]}" + (f"^{m[i+1]}" if m[i + 1] > 1 else "")
                for i in range(0, len(m), 2)
            ]
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not chunks:
                chunks.append(f"-{body}" if neg else body)
            else:
                chunks.append(f" - {body}" if neg else f" + {body}")
        return "".join(chunks)

    def __repr__(self) -> str:
        return f"PowerPolynomial({self})"


def _merge_flat(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    while i < len(m1) and j < len(m2):
        if m1[i] == m2[j]:
            out.extend((m1[i], m1[i + 1] + m2[j + 1]))
            i += 2
            j += 2
        elif m1[i] < m2[j]:
            out.extend((m1[i], m1[i + 1]))
            i += 2
        else:
            out.extend((m2[j], m2[j + 1]))
            j += 2
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


_PP_ONE = PowerPolynomial.constant(1)


def coproduct_power_polynomial(expr) -> TensorElement:
    """Apply the coproduct p_k -> p_k (x) 1 + 1 (x) p_k multiplicatively."""
    if isinstance(expr, str):
        expr = PowerPolynomial.parse(expr)
    total = TensorElement()
    for m, c in expr.terms.items():
        term = TensorElement([(_PP_ONE, _PP_ONE, c)])
        for i in range(0, len(m), 2):
            k, e = m[i], m[i + 1]
            pk = PowerPolynomial.generator(k)
            primitive = TensorElement([(pk, _PP_ONE), (_PP_ONE, pk)])
            for _ in range(e):
                term = term * primitive
        total = total + term
    return total


@dataclass(frozen=True)
class PrimitivityReport:
    k: int
    l: int
    passed: bool
    lhs: str
    rhs: str
    even_rank: int
    odd_rank: int
    seconds: float


def verify_primitivity(k: int, l: int) -> PrimitivityReport:
    """Check that the relabeled pullback of the k-th power sum equals
    p_k (x) 1 + 1 (x) p_k at the matching truncations."""
    start = time.perf_counter()
    even, odd = rho_pullback_power_sum(k, l)
    lhs = relabel_even_odd(even, odd)
    even_rank = l // 2
    odd_rank = (l - 1) // 2 + 1
    rhs = TensorElement(
        [
            (power_sum_torus(k, even_rank), ONE),
            (ONE, power_sum_torus(k, odd_rank)),
        ]
    )
    passed = lhs == rhs
    elapsed = time.perf_counter() - start
    return PrimitivityReport(
        k=k,
        l=l,
        passed=passed,
        lhs=str(lhs),
        rhs=str(rhs),
        even_rank=even_rank,
        odd_rank=odd_rank,
        seconds=elapsed,
    )
