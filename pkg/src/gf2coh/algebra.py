"""The graded algebra A_n = F2[y_1..y_n] (x) E(x_1, x_1', ..., x_n, x_n') over GF(2).

Degrees: |y_i| = 2, |x_i| = |x_i'| = 1.

Monomials are packed into a single int.  Variable ``j`` owns an 18-bit block
``[a_j (16 bits) | eps_1j | eps_2j]`` and the block of ``y_1/x_1/x_1'`` is the
most significant, so comparing codes as integers is exactly the lexicographic
order on ``(a_1, eps_11, eps_21, a_2, eps_12, eps_22, ...)``.  With that layout
the product of two monomials with disjoint exterior parts is the integer sum
of their codes.  Exponents must stay below 2**16.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

EXP_BITS = 16
BLOCK = EXP_BITS + 2
_EXP_MASK = (1 << EXP_BITS) - 1


def _offset(n: int, j: int) -> int:
    # j is 0-based
    return (n - 1 - j) * BLOCK


@lru_cache(maxsize=None)
def eps_mask(n: int) -> int:
    m = 0
    for j in range(n):
        m |= 0b11 << _offset(n, j)
    return m


class Monomial(NamedTuple):
    """``y^y_exp * x^x_mask * x'^xp_mask``; bit ``i`` of a mask is generator ``i+1``."""

    n: int
    y_exp: tuple[int, ...]
    x_mask: int = 0
    xp_mask: int = 0

    @property
    def degree(self) -> int:
        return 2 * sum(self.y_exp) + self.x_mask.bit_count() + self.xp_mask.bit_count()

    def encode(self) -> int:
        if len(self.y_exp) != self.n:
            raise ValueError("exponent vector length differs from n")
        if (self.x_mask | self.xp_mask) >> self.n:
            raise ValueError("exterior mask has bits beyond n")
        code = 0
        for j in range(self.n):
            a = self.y_exp[j]
            if not 0 <= a <= _EXP_MASK:
                raise ValueError(f"exponent {a} out of range")
            block = (a << 2) | (((self.x_mask >> j) & 1) << 1) | ((self.xp_mask >> j) & 1)
            code |= block << _offset(self.n, j)
        return code

    @classmethod
    def decode(cls, n: int, code: int) -> "Monomial":
        y = []
        xm = xpm = 0
        for j in range(n):
            block = code >> _offset(n, j)
            y.append((block >> 2) & _EXP_MASK)
            xm |= ((block >> 1) & 1) << j
            xpm |= (block & 1) << j
        return cls(n, tuple(y), xm, xpm)

    def sequence(self) -> tuple[int, ...]:
        """``(a_1, eps_11, eps_21, ..., a_n, eps_1n, eps_2n)``."""
        out: list[int] = []
        for j in range(self.n):
            out += [self.y_exp[j], (self.x_mask >> j) & 1, (self.xp_mask >> j) & 1]
        return tuple(out)

    def permuted(self, perm: Sequence[int]) -> "Monomial":
        """Image under ``y_i -> y_perm[i]`` (0-based), likewise for x and x'."""
        y = [0] * self.n
        xm = xpm = 0
        for i, t in enumerate(perm):
            y[t] = self.y_exp[i]
            xm |= ((self.x_mask >> i) & 1) << t
            xpm |= ((self.xp_mask >> i) & 1) << t
        return Monomial(self.n, tuple(y), xm, xpm)

    def __str__(self) -> str:
        parts = []
        for j, a in enumerate(self.y_exp):
            if a == 1:
                parts.append(f"y{j + 1}")
            elif a > 1:
                parts.append(f"y{j + 1}^{a}")
        parts += [f"x{j + 1}" for j in range(self.n) if (self.x_mask >> j) & 1]
        parts += [f"xp{j + 1}" for j in range(self.n) if (self.xp_mask >> j) & 1]
        return "*".join(parts) if parts else "1"


@lru_cache(maxsize=1 << 16)
def code_degree(n: int, code: int) -> int:
    d = (code & eps_mask(n)).bit_count()
    for j in range(n):
        d += 2 * ((code >> (_offset(n, j) + 2)) & _EXP_MASK)
    return d


def mul_codes(n: int, a: int, b: int) -> int | None:
    """Product of two monomial codes, or ``None`` if an exterior generator repeats."""
    if a & b & eps_mask(n):
        return None
    return a + b


@dataclass(frozen=True)
class Element:
    """A sum of distinct monomials of A_n (coefficients in GF(2))."""

    n: int
    terms: frozenset[int] = frozenset()

    # construction

    @classmethod
    def from_monomials(cls, n: int, monos: Iterable[Monomial]) -> "Element":
        acc: set[int] = set()
        for m in monos:
            if m.n != n:
                raise ValueError("generator count mismatch")
            acc ^= {m.encode()}
        return cls(n, frozenset(acc))

    @classmethod
    def from_codes(cls, n: int, codes: Iterable[int]) -> "Element":
        acc: set[int] = set()
        for c in codes:
            if c in acc:
                acc.remove(c)
            else:
                acc.add(c)
        return cls(n, frozenset(acc))

    @classmethod
    def zero(cls, n: int) -> "Element":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "Element":
        return cls(n, frozenset({0}))

    @classmethod
    def y(cls, n: int, i: int, power: int = 1) -> "Element":
        _check_index(n, i)
        exp = [0] * n
        exp[i - 1] = power
        return cls(n, frozenset({Monomial(n, tuple(exp)).encode()}))

    @classmethod
    def x(cls, n: int, i: int) -> "Element":
        _check_index(n, i)
        return cls(n, frozenset({Monomial(n, (0,) * n, 1 << (i - 1), 0).encode()}))

    @classmethod
    def xp(cls, n: int, i: int) -> "Element":
        _check_index(n, i)
        return cls(n, frozenset({Monomial(n, (0,) * n, 0, 1 << (i - 1)).encode()}))

    # arithmetic

    def _same_n(self, other: "Element") -> None:
        if self.n != other.n:
            raise ValueError(f"generator count mismatch: {self.n} != {other.n}")

    def __add__(self, other: "Element") -> "Element":
        self._same_n(other)
        return Element(self.n, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __pow__(self, k: int) -> "Element":
        out = Element.one(self.n)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    # inspection

    def codes(self) -> list[int]:
        """Monomial codes in decreasing canonical order."""
        return sorted(self.terms, reverse=True)

    def monomials(self) -> list[Monomial]:
        return [Monomial.decode(self.n, c) for c in self.codes()]

    def degrees(self) -> set[int]:
        return {code_degree(self.n, c) for c in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Degree of a non-zero homogeneous element."""
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("degree of a zero or inhomogeneous element")
        return next(iter(ds))

    def homogeneous_parts(self) -> dict[int, "Element"]:
        parts: dict[int, set[int]] = {}
        for c in self.terms:
            parts.setdefault(code_degree(self.n, c), set()).add(c)
        return {d: Element(self.n, frozenset(s)) for d, s in sorted(parts.items())}

    def permuted(self, perm: Sequence[int]) -> "Element":
        return Element.from_codes(
            self.n, (_permute_code(self.n, c, tuple(perm)) for c in self.terms)
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "+".join(str(m) for m in self.monomials())

    def __repr__(self) -> str:
        return f"Element(n={self.n}, {self})"


def _check_index(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise ValueError(f"generator index {i} outside 1..{n}")


def multiply(a: Element, b: Element) -> Element:
    a._same_n(b)
    n = a.n
    em = eps_mask(n)
    acc: set[int] = set()
    for s in a.terms:
        for t in b.terms:
            if s & t & em:
                continue
            c = s + t
            if c in acc:
                acc.remove(c)
            else:
                acc.add(c)
    return Element(n, frozenset(acc))


@lru_cache(maxsize=1 << 16)
def _permute_code(n: int, code: int, perm: tuple[int, ...]) -> int:
    return Monomial.decode(n, code).permuted(perm).encode()


@lru_cache(maxsize=1 << 14)
def _orbit(n: int, code: int) -> frozenset[int]:
    return frozenset(_permute_code(n, code, p) for p in itertools.permutations(range(n)))


def symmetrize(e: Element) -> Element:
    """Sum of the S_n-orbit of every monomial of ``e``.

    Each orbit is summed once, so a monomial with a non-trivial stabilizer
    (``y1*y2*x3`` under S_3) gives its three distinct images rather than
    cancelling to zero as a sum over all group elements would.
    """
    acc: set[int] = set()
    for c in e.terms:
        acc ^= _orbit(e.n, c)
    return Element(e.n, frozenset(acc))


def group_sum(e: Element) -> Element:
    """Sum over all of S_n; included to contrast with :func:`symmetrize`."""
    out = Element.zero(e.n)
    for p in itertools.permutations(range(e.n)):
        out = out + e.permuted(p)
    return out


@dataclass(frozen=True)
class AlgebraMap:
    """Algebra homomorphism A_source -> A_target fixed by images of generators."""

    source: int
    target: int
    y_images: tuple[Element, ...]
    x_images: tuple[Element, ...]
    xp_images: tuple[Element, ...]

    def __post_init__(self) -> None:
        for imgs, deg in ((self.y_images, 2), (self.x_images, 1), (self.xp_images, 1)):
            if len(imgs) != self.source:
                raise ValueError("need one image per source generator")
            for e in imgs:
                if e.n != self.target:
                    raise ValueError("image lives in the wrong algebra")
                if e and e.degrees() != {deg}:
                    raise ValueError(f"generator image must be homogeneous of degree {deg}")

    @classmethod
    def identity(cls, n: int) -> "AlgebraMap":
        return cls(
            n,
            n,
            tuple(Element.y(n, i) for i in range(1, n + 1)),
            tuple(Element.x(n, i) for i in range(1, n + 1)),
            tuple(Element.xp(n, i) for i in range(1, n + 1)),
        )

    def __call__(self, e: Element) -> Element:
        return apply_map(self, e)


def apply_map(f: AlgebraMap, e: Element) -> Element:
    if e.n != f.source:
        raise ValueError("element is not in the source algebra")
    powers: dict[tuple[int, int], Element] = {}

    def ypow(i: int, k: int) -> Element:
        key = (i, k)
        if key not in powers:
            powers[key] = f.y_images[i] ** k
        return powers[key]

    acc: set[int] = set()
    for c in e.terms:
        m = Monomial.decode(f.source, c)
        img = Element.one(f.target)
        for i, k in enumerate(m.y_exp):
            if k:
                img = img * ypow(i, k)
        for i in range(f.source):
            if (m.x_mask >> i) & 1:
                img = img * f.x_images[i]
            if (m.xp_mask >> i) & 1:
                img = img * f.xp_images[i]
            if not img:
                break
        acc ^= img.terms
    return Element(f.target, frozenset(acc))


# degreewise bases


@lru_cache(maxsize=None)
def basis_codes(n: int, d: int, exterior: bool = True) -> tuple[int, ...]:
    """Codes of all degree-``d`` monomials, largest first.

    With ``exterior=False`` only the polynomial part F2[y_1..y_n] is used.
    """
    if d < 0:
        raise ValueError("negative degree")
    out = []
    masks = range(1 << n) if exterior else (0,)
    for xm in masks:
        for xpm in masks:
            k = xm.bit_count() + xpm.bit_count()
            if k > d or (d - k) % 2:
                continue
            for y in _compositions((d - k) // 2, n):
                out.append(Monomial(n, y, xm, xpm).encode())
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def basis_index(n: int, d: int, exterior: bool = True) -> dict[int, int]:
    return {c: i for i, c in enumerate(basis_codes(n, d, exterior))}


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)]
    return [(k,) + rest for k in range(total + 1) for rest in _compositions(total - k, parts - 1)]


def basis_in_degree(n: int, d: int) -> list[Monomial]:
    return [Monomial.decode(n, c) for c in basis_codes(n, d)]


def to_vector(e: Element, d: int, exterior: bool = True) -> int:
    """Coordinates of ``e`` on :func:`basis_codes` as a bit-vector."""
    index = basis_index(e.n, d, exterior)
    v = 0
    for c in e.terms:
        i = index.get(c)
        if i is None:
            raise ValueError(f"monomial {Monomial.decode(e.n, c)} is not in degree {d}")
        v |= 1 << i
    return v


def from_vector(n: int, d: int, v: int, exterior: bool = True) -> Element:
    codes = basis_codes(n, d, exterior)
    if v >> len(codes):
        raise ValueError("vector longer than the degree-d basis")
    out = []
    while v:
        i = (v & -v).bit_length() - 1
        out.append(codes[i])
        v &= v - 1
    return Element(n, frozenset(out))
