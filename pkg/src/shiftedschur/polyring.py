"""Exact sparse multivariate polynomial arithmetic.

The variable universe consists of four families:

  * x_i for i >= 1                 (spelled  x1, x2, ...)
  * y_j for j in Z                 (spelled  y[-1], y[0], y[3], ...)
  * torus weights u_j for j in Z   (spelled  u[-2], u[5], ...)
  * a single parameter u           (spelled  u)

Coefficients are exact rationals (Python int where possible, Fraction
otherwise).  A monomial is a flat tuple (code, exp, code, exp, ...) with
variable codes strictly increasing and exponents positive; codes encode
(family, index) so that ascending integer order is the canonical variable
order u < u_j < y_j < x_i (indices ascending within a family).  Terms are
stored as a dict from monomial to nonzero coefficient.

The doubly infinite y sequence is never materialized: a YSpec describes a
substitution rule finitely and is asked only for the indices a polynomial
actually contains.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .errors import (
    DomainError,
    InexactDivisionError,
    UnresolvableIndexError,
)

FAMILY_U = 0
FAMILY_USEQ = 1
FAMILY_Y = 2
FAMILY_X = 3

_FAMILY_SHIFT = 44
_INDEX_BIAS = 1 << 43
_INDEX_MASK = (1 << _FAMILY_SHIFT) - 1

_FAMILY_NAMES = {FAMILY_U: "u", FAMILY_USEQ: "u", FAMILY_Y: "y", FAMILY_X: "x"}


def var_code(family: int, index: int) -> int:
    """Pack (family, index) into a single int preserving canonical order."""
    return (family << _FAMILY_SHIFT) | (index + _INDEX_BIAS)


def var_family(code: int) -> int:
    return code >> _FAMILY_SHIFT

def var_index(code: int) -> int:
    return (code & _INDEX_MASK) - _INDEX_BIAS


_U_CODE = var_code(FAMILY_U, 0)
# All x codes are larger than every u/u_j/y code, so the x-part of a
# monomial is always a suffix of its flat tuple.
_X_BAND_START = FAMILY_X << _FAMILY_SHIFT


def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1 = len(m1)
    n2 = len(m2)
    while i < n1 and j < n2:
        c1 = m1[i]
        c2 = m2[j]
        if c1 == c2:
            out.append(c1)
            out.append(m1[i + 1] + m2[j + 1])
            i += 2
            j += 2
        elif c1 < c2:
            out.append(c1)
            out.append(m1[i + 1])
            i += 2
        else:
            out.append(c2)
            out.append(m2[j + 1])
            j += 2
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def _mono_degree(m: tuple) -> int:
    return sum(m[1::2])


def _mono_x_degree(m: tuple) -> int:
    d = 0
    for i in range(len(m) - 2, -1, -2):
        if m[i] < _X_BAND_START:
            break
        d += m[i + 1]
    return d


def _mono_split_x(m: tuple) -> tuple[tuple, tuple]:
    """Split a monomial into (non-x part, x part)."""
    cut = len(m)
    while cut >= 2 and m[cut - 2] >= _X_BAND_START:
        cut -= 2
    return m[:cut], m[cut:]


def _mono_sort_key(m: tuple):
    # Ascending in this key == descending graded-lexicographic order.
    lex = []
    for i in range(0, len(m), 2):
        lex.append(m[i])
        lex.append(-m[i + 1])
    return (-_mono_degree(m), tuple(lex))


def _coeff_str(c) -> str:
    return str(c)


def _parse_coeff(text: str):
    f = Fraction(text)
    return int(f) if f.denominator == 1 else f


class Poly:
    """An immutable exact polynomial.

    Supports +, -, *, ** with other polynomials and with ints/Fractions.
    Construction goes through the module factories (x, y, useq, u, const)
    or classmethods; the term dict is never mutated after construction.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        if terms:
            clean = {}
            for m, c in terms.items():
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = int(c)
                if c:
                    clean[tuple(m)] = c
            self._terms = clean
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        # Internal fast path: `terms` is already canonical and owned by us.
        p = object.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    # -- basic queries ----------------------------------------------------

    @property
    def terms(self) -> dict:
        """The monomial -> coefficient map.  Treat as read-only."""
        return self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(_mono_degree(m) for m in self._terms)

    def x_degree(self) -> int:
        """Total degree in the x variables only; -1 for zero."""
        if not self._terms:
            return -1
        return max(_mono_x_degree(m) for m in self._terms)

    def constant_value(self):
        """The value of a constant polynomial as int/Fraction."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and () in self._terms:
            return self._terms[()]
        raise DomainError(f"polynomial is not constant: {self}")

    def variables(self) -> set[int]:
        codes = set()
        for m in self._terms:
            codes.update(m[0::2])
        return codes

    def y_indices(self) -> set[int]:
        return {var_index(c) for c in self.variables() if var_family(c) == FAMILY_Y}

    # -- equality and hashing ----------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = const(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a:
            return other
        if not b:
            return self
        out = dict(a)
        for m, c in b.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = const(other)
        elif not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            if other == 1:
                return self
            return Poly._raw({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return ZERO
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        mono_mul = _mono_mul
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = mono_mul(m1, m2)
                c = out.get(m)
                if c is None:
                    out[m] = c1 * c2
                else:
                    c = c + c1 * c2
                    if c:
                        out[m] = c
                    else:
                        del out[m]
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise DomainError(f"polynomial power must be a nonnegative integer, got {e}")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base_needed = e >> 1
            if base_needed:
                base = base * base
            e = base_needed
        return result

    # -- structural operations ----------------------------------------------

    def map_variables(self, fn: Callable[[int], int]) -> "Poly":
        """Relabel variable codes; fn must be injective and order-preserving."""
        out = {}
        for m, c in self._terms.items():
            new = list(m)
            for i in range(0, len(m), 2):
                new[i] = fn(m[i])
            out[tuple(new)] = c
        return Poly._raw(out)

    def shift_y(self, k: int) -> "Poly":
        """Replace every y_j by y_{j-k}; other families untouched."""
        if k == 0 or not self._terms:
            return self
        y_lo = FAMILY_Y << _FAMILY_SHIFT
        y_hi = _X_BAND_START

        def fn(code: int) -> int:
            if y_lo <= code < y_hi:
                return code - k
            return code

        return self.map_variables(fn)

    def substitute(self, assignment: Mapping["Poly", object]) -> "Poly":
        """Simultaneous substitution; keys are single-variable polynomials."""
        table: dict[int, Poly] = {}
        for key, value in assignment.items():
            code = _single_variable_code(key)
            if code in table:
                raise DomainError("duplicate variable in substitution")
            table[code] = value if isinstance(value, Poly) else const(value)
        if not table:
            return self
        if all(len(v._terms) <= 1 for v in table.values()):
            return self._substitute_monomials(table)
        power_cache: dict[tuple[int, int], Poly] = {}
        acc: dict = {}
        for m, c in self._terms.items():
            residual = []
            factors = []
            for i in range(0, len(m), 2):
                code = m[i]
                exp = m[i + 1]
                val = table.get(code)
                if val is None:
                    residual.append(code)
                    residual.append(exp)
                else:
                    pw = power_cache.get((code, exp))
                    if pw is None:
                        pw = val ** exp
                        power_cache[(code, exp)] = pw
                    factors.append(pw)
            term = Poly._raw({tuple(residual): c})
            for f in factors:
                term = term * f
            for mm, cc in term._terms.items():
                s = acc.get(mm)
                if s is None:
                    acc[mm] = cc
                else:
                    s = s + cc
                    if s:
                        acc[mm] = s
                    else:
                        del acc[mm]
        return Poly._raw(acc)

    def _substitute_monomials(self, table: dict[int, "Poly"]) -> "Poly":
        # Every substituted value is a single term (or zero), so each input
        # term maps to at most one output term; no intermediate polynomials.
        values: dict[int, tuple] = {}
        for code, v in table.items():
            if v._terms:
                ((vm, vc),) = v._terms.items()
                values[code] = (vm, vc)
            else:
                values[code] = ((), 0)
        acc: dict = {}
        for m, c in self._terms.items():
            mono: tuple | None = ()
            residual = []
            for i in range(0, len(m), 2):
                code = m[i]
                exp = m[i + 1]
                hit = values.get(code)
                if hit is None:
                    residual.append(code)
                    residual.append(exp)
                    continue
                vm, vc = hit
                if not vc:
                    mono = None
                    break
                if vc != 1:
                    c = c * vc**exp
                if vm:
                    scaled = vm if exp == 1 else tuple(
                        e * exp if k % 2 else e for k, e in enumerate(vm)
                    )
                    mono = _mono_mul(mono, scaled)
            if mono is None:
                continue
            mono = _mono_mul(mono, tuple(residual))
            s = acc.get(mono)
            if s is None:
                acc[mono] = c
            else:
                s = s + c
                if s:
                    acc[mono] = s
                else:
                    del acc[mono]
        return Poly._raw(acc)

    def specialize_y(self, spec: "YSpec") -> "Poly":
        """Apply a y-specialization rule to every y_j occurrence."""
        if spec.kind == "symbolic" or not self._terms:
            return self
        values: dict[int, Poly] = {}
        assignment: dict[Poly, Poly] = {}
        for j in self.y_indices():
            values[j] = spec.value(j)
            assignment[y(j)] = values[j]
        if not assignment:
            return self
        return self.substitute(assignment)

    def x_homogeneous_split(self) -> dict[int, "Poly"]:
        """Group terms by their total x-degree."""
        buckets: dict[int, dict] = {}
        for m, c in self._terms.items():
            buckets.setdefault(_mono_x_degree(m), {})[m] = c
        return {d: Poly._raw(t) for d, t in buckets.items()}

    # -- rendering ------------------------------------------------------------

    def sorted_terms(self) -> list[tuple[tuple, object]]:
        return sorted(self._terms.items(), key=lambda kv: _mono_sort_key(kv[0]))

    def __str__(self) -> str:
        return canonical_string(self)

    def __repr__(self) -> str:
        return f"Poly({canonical_string(self)})"

    def latex(self) -> str:
        return _latex_string(self)

    def to_json_obj(self) -> list:
        out = []
        for m, c in self.sorted_terms():
            mono = []
            for i in range(0, len(m), 2):
                fam = var_family(m[i])
                idx = None if fam == FAMILY_U else var_index(m[i])
                mono.append([_FAMILY_NAMES[fam], idx, m[i + 1]])
            out.append({"coeff": _coeff_str(c), "monomial": mono})
        return out

    @classmethod
    def from_json_obj(cls, obj: list) -> "Poly":
        terms = {}
        for entry in obj:
            mono = []
            for fam_name, idx, exp in entry["monomial"]:
                if fam_name == "x":
                    fam = FAMILY_X
                elif fam_name == "y":
                    fam = FAMILY_Y
                elif fam_name == "u":
                    fam = FAMILY_U if idx is None else FAMILY_USEQ
                else:
                    raise DomainError(f"unknown variable family {fam_name!r}")
                mono.append(var_code(fam, 0 if idx is None else idx))
                mono.append(exp)
            terms[tuple(mono)] = _parse_coeff(entry["coeff"])
        return cls(terms)

    def __reduce__(self):
        return (_unpickle_poly, (self._terms,))


def _unpickle_poly(terms: dict) -> Poly:
    return Poly._raw(terms)


def _single_variable_code(p: Poly) -> int:
    t = p._terms
    if len(t) == 1:
        (m, c), = t.items()
        if c == 1 and len(m) == 2 and m[1] == 1:
            return m[0]
    raise DomainError(f"substitution key is not a bare variable: {p}")


# -- factories -----------------------------------------------------------------


def const(value) -> Poly:
    if isinstance(value, Fraction) and value.denominator == 1:
        value = int(value)
    return Poly._raw({(): value}) if value else ZERO


def x(i: int) -> Poly:
    if i < 1:
        raise DomainError(f"x index must be >= 1, got {i}")
    return Poly._raw({(var_code(FAMILY_X, i), 1): 1})


def y(j: int) -> Poly:
    return Poly._raw({(var_code(FAMILY_Y, j), 1): 1})


def useq(j: int) -> Poly:
    return Poly._raw({(var_code(FAMILY_USEQ, j), 1): 1})


ZERO = Poly._raw({})
ONE = Poly._raw({(): 1})
u = Poly._raw({(_U_CODE, 1): 1})


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def shift_y(p: Poly, k: int) -> Poly:
    return p.shift_y(k)


def substitute(p: Poly, assignment: Mapping[Poly, object]) -> Poly:
    return p.substitute(assignment)


def specialize_y(p: Poly, spec: "YSpec") -> Poly:
    return p.specialize_y(spec)


# -- canonical rendering ---------------------------------------------------------


def _var_str(code: int, exp: int) -> str:
    fam = var_family(code)
    if fam == FAMILY_U:
        base = "u"
    elif fam == FAMILY_USEQ:
        base = f"u[{var_index(code)}]"
    elif fam == FAMILY_Y:
        base = f"y[{var_index(code)}]"
    else:
        base = f"x{var_index(code)}"
    return base if exp == 1 else f"{base}^{exp}"


def canonical_string(p: Poly) -> str:
    """Deterministic text form; equal strings iff structurally equal polynomials."""
    if not p._terms:
        return "0"
    chunks = []
    for m, c in p.sorted_terms():
        neg = c < 0
        mag = -c if neg else c
        factors = [_var_str(m[i], m[i + 1]) for i in range(0, len(m), 2)]
        if not factors:
            body = _coeff_str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([_coeff_str(mag)] + factors)
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f" - {body}" if neg else f" + {body}")
    return "".join(chunks)


def _latex_var(code: int, exp: int) -> str:
    fam = var_family(code)
    if fam == FAMILY_U:
        base = "u"
    elif fam == FAMILY_USEQ:
        base = f"u_{{{var_index(code)}}}"
    elif fam == FAMILY_Y:
        base = f"y_{{{var_index(code)}}}"
    else:
        base = f"x_{{{var_index(code)}}}"
    return base if exp == 1 else f"{base}^{{{exp}}}"


def _latex_coeff(c) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        sign = "-" if c < 0 else ""
        return f"{sign}\\tfrac{{{abs(c.numerator)}}}{{{c.denominator}}}"
    return str(c)


def _latex_string(p: Poly) -> str:
    if not p._terms:
        return "0"
    chunks = []
    for m, c in p.sorted_terms():
        neg = c < 0
        mag = -c if neg else c
        factors = [_latex_var(m[i], m[i + 1]) for i in range(0, len(m), 2)]
        if not factors:
            body = _latex_coeff(mag)
        elif mag == 1:
            body = " ".join(factors)
        else:
            body = " ".join([_latex_coeff(mag)] + factors)
        if not chunks:
            chunks.append(f"-{body}" if neg else body)
        else:
            chunks.append(f" - {body}" if neg else f" + {body}")
    return "".join(chunks)


# -- leading terms and division ---------------------------------------------------


def leading_term(p: Poly) -> tuple[tuple, object]:
    """The graded-lex maximal term (monomial, coefficient)."""
    if not p._terms:
        raise DomainError("zero polynomial has no leading term")
    m = min(p._terms, key=_mono_sort_key)
    return m, p._terms[m]


def _mono_divides(d: tuple, m: tuple) -> bool:
    i = 0
    nd = len(d)
    j = 0
    nm = len(m)
    while i < nd:
        code = d[i]
        while j < nm and m[j] < code:
            j += 2
        if j >= nm or m[j] != code or m[j + 1] < d[i + 1]:
            return False
        j += 2
        i += 2
    return True


def _mono_div(m: tuple, d: tuple) -> tuple:
    out = []
    j = 0
    for i in range(0, len(d), 2):
        code = d[i]
        while m[j] != code:
            out.append(m[j])
            out.append(m[j + 1])
            j += 2
        e = m[j + 1] - d[i + 1]
        if e:
            out.append(code)
            out.append(e)
        j += 2
    out.extend(m[j:])
    return tuple(out)


def divide_exact(p: Poly, q: Poly) -> Poly:
    """Exact division p / q; raises InexactDivisionError if q does not divide p."""
    if not q:
        raise DomainError("division by the zero polynomial")
    if not p:
        return ZERO
    qm, qc = leading_term(q)
    if not qm:
        inv = Fraction(1, 1) / qc
        return p * inv
    quotient: dict = {}
    rem = p
    while rem:
        m, c = leading_term(rem)
        if not _mono_divides(qm, m):
            raise InexactDivisionError(
                f"leading monomial not divisible; remainder {canonical_string(rem)}"
            )
        fac_m = _mono_div(m, qm)
        fac_c = c / qc if isinstance(c, Fraction) or isinstance(qc, Fraction) else Fraction(c, qc)
        if fac_c.denominator == 1:
            fac_c = int(fac_c)
        quotient[fac_m] = fac_c
        rem = rem - Poly._raw({fac_m: fac_c}) * q
    return Poly._raw(quotient)


def divide_linear(p: Poly, xi: int, xj: int) -> Poly:
    """Exact division of p by (x_xi - x_xj) via synthetic division in x_xi."""
    code_i = var_code(FAMILY_X, xi)
    xjp = x(xj)
    # Coefficients of p as a univariate polynomial in x_xi.
    by_power: dict[int, dict] = {}
    for m, c in p._terms.items():
        e = 0
        rest = m
        for k in range(0, len(m), 2):
            if m[k] == code_i:
                e = m[k + 1]
                rest = m[:k] + m[k + 2:]
                break
        by_power.setdefault(e, {})[rest] = c
    deg = max(by_power) if by_power else 0
    if deg == 0:
        if p:
            raise InexactDivisionError("nonzero remainder in linear division")
        return ZERO
    carry = ZERO
    quotient: dict = {}
    for k in range(deg, 0, -1):
        carry = carry + Poly._raw(by_power.get(k, {}))
        for m, c in carry._terms.items():
            mm = _mono_mul(m, (code_i, k - 1)) if k > 1 else m
            s = quotient.get(mm)
            if s is None:
                quotient[mm] = c
            else:
                s = s + c
                if s:
                    quotient[mm] = s
                else:
                    del quotient[mm]
        carry = carry * xjp
    remainder = carry + Poly._raw(by_power.get(0, {}))
    if remainder:
        raise InexactDivisionError("nonzero remainder in linear division")
    return Poly._raw(quotient)


def poly_det(rows: list[list[Poly]]) -> Poly:
    """Determinant of a square matrix of polynomials.

    Cofactor expansion with memoization over column subsets; rows are
    processed sparsest-first so structurally triangular blocks prune early.
    The memo lives and dies inside this call.
    """
    n = len(rows)
    if n == 0:
        return ONE
    for r in rows:
        if len(r) != n:
            raise DomainError("determinant of a non-square matrix")
    order = sorted(range(n), key=lambda r: (sum(1 for e in rows[r] if e), r))
    inversions = sum(
        1 for a in range(n) for b in range(a + 1, n) if order[a] > order[b]
    )
    sign = -1 if inversions % 2 else 1
    memo: dict[tuple, Poly] = {}

    def minor(cols: tuple) -> Poly:
        if not cols:
            return ONE
        val = memo.get(cols)
        if val is not None:
            return val
        row = rows[order[n - len(cols)]]
        acc = ZERO
        for pos, cidx in enumerate(cols):
            entry = row[cidx]
            if not entry:
                continue
            sub = minor(cols[:pos] + cols[pos + 1:])
            if not sub:
                continue
            term = entry * sub
            acc = acc - term if pos % 2 else acc + term
        memo[cols] = acc
        return acc

    result = minor(tuple(range(n)))
    return result if sign == 1 else -result


# -- y-specializations ---------------------------------------------------------


@dataclass(frozen=True)
class IntSeqWindow:
    """A doubly infinite integer sequence described by a finite window plus
    an affine tail rule applied outside it."""

    lo: int
    values: tuple[int, ...]
    tail: tuple[int, int] | None = None  # (a, b): k -> a*k + b

    def __post_init__(self):
        if not self.values and self.tail is None:
            raise DomainError("window must be nonempty or have a tail rule")

    @property
    def hi(self) -> int:
        return self.lo + len(self.values) - 1

    def lookup(self, k: int) -> int:
        if self.values and self.lo <= k <= self.hi:
            return self.values[k - self.lo]
        if self.tail is None:
            raise UnresolvableIndexError(
                f"sequence index {k} outside window [{self.lo}, {self.hi}] and no tail rule"
            )
        a, b = self.tail
        return a * k + b

    def to_json_obj(self) -> dict:
        obj: dict = {"lo": self.lo, "values": list(self.values)}
        if self.tail is not None:
            obj["tail"] = list(self.tail)
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "IntSeqWindow":
        tail = tuple(obj["tail"]) if obj.get("tail") is not None else None
        return cls(lo=obj["lo"], values=tuple(obj["values"]), tail=tail)


@dataclass(frozen=True)
class YSpec:
    """A finitely described substitution rule for the y sequence.

    kinds: symbolic (identity), zero (y_j -> 0), affine (y_j -> a*j + b),
    standard (y_j -> (j+d)*u), circle (y_j -> n_{j+d}*u for a window
    sequence n), torus (y_j -> u_{j+shift}).
    """

    kind: str
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)
    d: int = 0
    window: IntSeqWindow | None = None
    shift: int = 0

    @classmethod
    def symbolic(cls) -> "YSpec":
        return cls(kind="symbolic")

    @classmethod
    def zero(cls) -> "YSpec":
        return cls(kind="zero")

    @classmethod
    def affine(cls, a, b) -> "YSpec":
        return cls(kind="affine", a=Fraction(a), b=Fraction(b))

    @classmethod
    def standard(cls, d: int) -> "YSpec":
        return cls(kind="standard", d=d)

    @classmethod
    def circle(cls, window: IntSeqWindow, d: int) -> "YSpec":
        return cls(kind="circle", d=d, window=window)

    @classmethod
    def torus(cls, shift: int) -> "YSpec":
        return cls(kind="torus", shift=shift)

    def value(self, j: int) -> Poly:
        """The polynomial substituted for y_j."""
        if self.kind == "symbolic":
            return y(j)
        if self.kind == "zero":
            return ZERO
        if self.kind == "affine":
            return const(self.a * j + self.b)
        if self.kind == "standard":
            return u * (j + self.d)
        if self.kind == "circle":
            return u * self.window.lookup(j + self.d)
        if self.kind == "torus":
            return useq(j + self.shift)
        raise DomainError(f"unknown yspec kind {self.kind!r}")

    def shifted(self, s: int) -> "YSpec":
        """The rule for the sequence tau^s y: new value at j is value(j - s).

        Not defined for the symbolic rule (callers shift the polynomial
        instead, via shift_y).
        """
        if self.kind == "zero":
            return self
        if self.kind == "affine":
            return YSpec.affine(self.a, self.b - self.a * s)
        if self.kind == "standard":
            return YSpec.standard(self.d - s)
        if self.kind == "circle":
            return YSpec.circle(self.window, self.d - s)
        if self.kind == "torus":
            return YSpec.torus(self.shift - s)
        raise DomainError(f"cannot shift yspec kind {self.kind!r}")

    def to_json_obj(self) -> dict:
        obj: dict = {"kind": self.kind}
        if self.kind == "affine":
            obj["a"] = str(self.a)
            obj["b"] = str(self.b)
        elif self.kind == "standard":
            obj["d"] = self.d
        elif self.kind == "circle":
            obj["d"] = self.d
            obj["window"] = self.window.to_json_obj()
        elif self.kind == "torus":
            obj["shift"] = self.shift
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "YSpec":
        kind = obj["kind"]
        if kind == "symbolic":
            return cls.symbolic()
        if kind == "zero":
            return cls.zero()
        if kind == "affine":
            return cls.affine(Fraction(obj["a"]), Fraction(obj["b"]))
        if kind == "standard":
            return cls.standard(obj["d"])
        if kind == "circle":
            return cls.circle(IntSeqWindow.from_json_obj(obj["window"]), obj["d"])
        if kind == "torus":
            return cls.torus(obj["shift"])
        raise DomainError(f"unknown yspec kind {kind!r}")

    def describe(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)


SYMBOLIC = YSpec.symbolic()
