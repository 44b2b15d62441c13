from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterator, Tuple

from sympy import factorint, isprime

from irredcount.core.splitting import SPLITTING_BY_SYMBOL, Splitting

MAX_CLASS_NUMBER_DISCRIMINANT = 10**7

Coordinates = Tuple[int, int]


def kronecker(D: int, n: int) -> int:
    """Kronecker symbol (D/n) for n >= 1, via quadratic reciprocity."""
    if n < 1:
        raise ValueError(f"Kronecker symbol needs n >= 1, got {n}")

    result = 1

    # (D/2) = 0 for even D, +1 for D = +-1 mod 8, -1 for D = +-3 mod 8
    while n % 2 == 0:
        n //= 2
        if D % 2 == 0:
            return 0
        if D % 8 in (3, 5):
            result = -result

    a = D % n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n

    return result if n == 1 else 0


@dataclass(frozen=True)
class ImaginaryQuadraticField:
    """Q(sqrt d) with its maximal order Z[omega].

    omega = (1 + sqrt d)/2 when d = 1 mod 4 (half-integral coordinates), else sqrt d.
    """

    d: int
    discriminant: int
    half_integral: bool
    w: int
    h: int

    @property
    def label(self) -> str:
        return f"Q(sqrt({self.d}))"

    # ------------------------
    # Ring arithmetic on (a, b) = a + b*omega
    # ------------------------

    def norm(self, a: int, b: int) -> int:
        if self.half_integral:
            return a * a + a * b + ((1 - self.d) // 4) * b * b
        return a * a - self.d * b * b

    def multiply(self, x: Coordinates, y: Coordinates) -> Coordinates:
        a, b = x
        c, e = y
        if self.half_integral:
            # omega^2 = omega + (d - 1)/4
            return a * c + b * e * ((self.d - 1) // 4), a * e + b * c + b * e
        return a * c + b * e * self.d, a * e + b * c

    def conjugate(self, x: Coordinates) -> Coordinates:
        a, b = x
        if self.half_integral:
            return a + b, -b
        return a, -b

    def divides(self, divisor: Coordinates, x: Coordinates) -> bool:
        n = self.norm(*divisor)
        if n == 0:
            return False
        a, b = self.multiply(x, self.conjugate(divisor))
        return a % n == 0 and b % n == 0

    def units(self) -> Tuple[Coordinates, ...]:
        if self.d == -1:
            return ((1, 0), (0, 1), (-1, 0), (0, -1))
        if self.d == -3:
            # omega is a primitive 6th root of unity
            return ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))
        return ((1, 0), (-1, 0))

    def associate_key(self, x: Coordinates) -> Coordinates:
        return min(self.multiply(u, x) for u in self.units())

    def elements_with_norm_at_most(self, bound: int) -> Iterator[Tuple[int, int, int]]:
        """All (a, b, N(a + b omega)) with 0 < N <= bound."""
        m = -self.d
        if self.half_integral:
            # 4N = (2a + b)^2 + |d| b^2
            b_max = isqrt(4 * bound // m)
            for b in range(-b_max, b_max + 1):
                u_max = isqrt(4 * bound - m * b * b)
                for u in range(-u_max, u_max + 1):
                    if (u - b) % 2:
                        continue
                    a = (u - b) // 2
                    n = self.norm(a, b)
                    if 0 < n <= bound:
                        yield a, b, n
        else:
            b_max = isqrt(bound // m)
            for b in range(-b_max, b_max + 1):
                a_max = isqrt(bound - m * b * b)
                for a in range(-a_max, a_max + 1):
                    n = self.norm(a, b)
                    if 0 < n <= bound:
                        yield a, b, n

    def principal_form_represents(self, n: int) -> bool:
        """Whether some element has norm exactly n."""
        m = -self.d
        if self.half_integral:
            for b in range(isqrt(4 * n // m) + 1):
                rest = 4 * n - m * b * b
                u = isqrt(rest)
                if u * u == rest and (u - b) % 2 == 0:
                    return True
            return False
        for b in range(isqrt(n // m) + 1):
            rest = n - m * b * b
            a = isqrt(rest)
            if a * a == rest:
                return True
        return False


def _is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(abs(n)).values())


def field_discriminant(d: int) -> int:
    return d if d % 4 == 1 else 4 * d


@lru_cache(maxsize=None)
def count_reduced_forms(discriminant: int) -> int:
    """Reduced primitive forms (a, b, c) with b^2 - 4ac = discriminant < 0."""
    if discriminant >= 0 or discriminant % 4 not in (0, 1):
        raise ValueError(f"Not a negative discriminant: {discriminant}")
    if -discriminant > MAX_CLASS_NUMBER_DISCRIMINANT:
        raise ValueError(
            f"|discriminant| {-discriminant} exceeds the form-enumeration cap "
            f"{MAX_CLASS_NUMBER_DISCRIMINANT}"
        )

    count = 0
    a = 1
    while 3 * a * a <= -discriminant:
        for b in range(-a + 1, a + 1):
            if (b - discriminant) % 2:
                continue
            num = b * b - discriminant
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if b < 0 and a == c:
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            count += 1
        a += 1
    return count


def make_field(d: int) -> ImaginaryQuadraticField:
    if d >= 0:
        raise ValueError(f"Imaginary quadratic fields need d < 0, got {d}")
    if not _is_squarefree(d):
        raise ValueError(f"d must be squarefree, got {d}")

    disc = field_discriminant(d)
    w = {-1: 4, -3: 6}.get(d, 2)
    return ImaginaryQuadraticField(
        d=d,
        discriminant=disc,
        half_integral=d % 4 == 1,
        w=w,
        h=count_reduced_forms(disc),
    )


def class_number(field: ImaginaryQuadraticField) -> int:
    return count_reduced_forms(field.discriminant)


def splitting(field: ImaginaryQuadraticField, p: int) -> Splitting:
    if not isprime(p):
        raise ValueError(f"Splitting is defined for rational primes, got {p}")
    return SPLITTING_BY_SYMBOL[kronecker(field.discriminant, p)]
