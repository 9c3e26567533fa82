"""Power series in x truncated at a fixed order, with polynomial coefficients.

All arithmetic is exact modulo x^(N+1).  Coefficients are MultiPoly values
over a shared variable tuple (possibly empty, for plain integer series).
"""

from catpark.polynomials import MultiPoly


class TruncatedSeries:
    """Coefficients of x^0 .. x^N over a fixed coefficient ring."""

    __slots__ = ("order", "variables", "coeffs")

    def __init__(self, variables, coeffs, order=None):
        self.variables = tuple(variables)
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        zero = MultiPoly.zero(self.variables)
        coeffs = coeffs[: order + 1]
        coeffs += [zero] * (order + 1 - len(coeffs))
        fixed = []
        for c in coeffs:
            if isinstance(c, int):
                c = MultiPoly.const(self.variables, c)
            if c.variables != self.variables:
                raise ValueError(
                    f"coefficient variables {c.variables} != series variables "
                    f"{self.variables}"
                )
            fixed.append(c)
        self.order = order
        self.coeffs = tuple(fixed)

    # -- constructors ----------------------------------------------------

    @classmethod
    def one(cls, variables, order):
        return cls(variables, [1], order)

    @classmethod
    def from_function(cls, variables, order, fn):
        """Coefficient of x^j taken from fn(j) (int or MultiPoly)."""
        return cls(variables, [fn(j) for j in range(order + 1)], order)

    # -- inspection ------------------------------------------------------

    def coefficient(self, j):
        if not 0 <= j <= self.order:
            raise ValueError(f"index {j} outside 0..{self.order}")
        return self.coeffs[j]

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.variables == other.variables
                and self.order == other.order
                and self.coeffs == other.coeffs)

    def __repr__(self):
        inner = ", ".join(c.render() for c in self.coeffs[:4])
        tail = ", ..." if self.order > 3 else ""
        return f"TruncatedSeries(order={self.order}, [{inner}{tail}])"

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, (int, MultiPoly)):
            if isinstance(other, int):
                other = MultiPoly.const(self.variables, other)
            return TruncatedSeries(self.variables, [other], self.order)
        if isinstance(other, TruncatedSeries):
            if other.variables != self.variables:
                raise ValueError(
                    f"variable mismatch: {self.variables} vs {other.variables}"
                )
            if other.order != self.order:
                raise ValueError(
                    f"order mismatch: {self.order} vs {other.order}"
                )
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return TruncatedSeries(
            self.variables,
            [a + b for a, b in zip(self.coeffs, other.coeffs)],
            self.order,
        )

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.variables, [-c for c in self.coeffs],
                               self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        zero = MultiPoly.zero(self.variables)
        out = [zero] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(self.variables, out, self.order)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent}")
        result = TruncatedSeries.one(self.variables, self.order)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def reciprocal(self):
        """1/self; the constant term must be 1."""
        one = MultiPoly.const(self.variables, 1)
        if self.coeffs[0] != one:
            raise ValueError(
                f"reciprocal requires constant term 1, got {self.coeffs[0].render()}"
            )
        inv = [one]
        for j in range(1, self.order + 1):
            acc = MultiPoly.zero(self.variables)
            for k in range(1, j + 1):
                acc = acc + self.coeffs[k] * inv[j - k]
            inv.append(-acc)
        return TruncatedSeries(self.variables, inv, self.order)

    def shifted(self, k=1):
        """Multiply by x^k (coefficients above the order fall off)."""
        if k < 0:
            raise ValueError(f"shift must be >= 0, got {k}")
        zero = MultiPoly.zero(self.variables)
        return TruncatedSeries(
            self.variables,
            [zero] * k + list(self.coeffs[: self.order + 1 - k]),
            self.order,
        )

    def scale_arg(self, factor):
        """Substitute x -> factor * x for a coefficient-ring monomial factor;
        the coefficient of x^j picks up factor^j."""
        if isinstance(factor, int):
            factor = MultiPoly.const(self.variables, factor)
        if factor.variables != self.variables:
            raise ValueError(
                f"factor variables {factor.variables} != {self.variables}"
            )
        if len(factor) > 1:
            raise ValueError(f"argument factor must be a monomial, got "
                             f"{factor.render()}")
        out = []
        power = MultiPoly.const(self.variables, 1)
        for c in self.coeffs:
            out.append(c * power)
            power = power * factor
        return TruncatedSeries(self.variables, out, self.order)

    def truncated(self, order):
        """Copy at a lower (or equal) order."""
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.variables, self.coeffs[: order + 1], order)

    def embed(self, variables):
        """Re-express every coefficient over a wider variable tuple."""
        return TruncatedSeries(
            variables, [c.rename(tuple(variables)) for c in self.coeffs],
            self.order,
        )
