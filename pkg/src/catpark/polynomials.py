"""Sparse exact multivariate polynomials.

Coefficients are Python integers (never floats); exponent vectors are tuples
aligned with an ordered variable list.  Terms iterate in descending
graded-lexicographic order, which fixes rendering and serialization so that
equal polynomials produce byte-identical output.

Values are immutable: every operation returns a fresh polynomial and the
term map is never exposed for mutation.
"""


def _grlex_key(exps):
    return (sum(exps), exps)


class MultiPoly:
    """A polynomial over named variables with integer coefficients."""

    __slots__ = ("variables", "_terms")

    def __init__(self, variables, terms=None):
        self.variables = tuple(variables)
        width = len(self.variables)
        clean = {}
        for exps, coeff in (terms or {}).items():
            if len(exps) != width:
                raise ValueError(
                    f"exponent vector {exps} does not match variables {self.variables}"
                )
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            if coeff:
                clean[tuple(exps)] = coeff
        self._terms = clean

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, variables):
        return cls(variables)

    @classmethod
    def const(cls, variables, value):
        variables = tuple(variables)
        if not value:
            return cls(variables)
        return cls(variables, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables, name):
        variables = tuple(variables)
        exps = [0] * len(variables)
        exps[variables.index(name)] = 1
        return cls(variables, {tuple(exps): 1})

    @classmethod
    def monomial(cls, variables, powers, coeff=1):
        """powers maps variable name -> exponent; omitted names get 0."""
        variables = tuple(variables)
        exps = [0] * len(variables)
        for name, e in powers.items():
            exps[variables.index(name)] = e
        return cls(variables, {tuple(exps): coeff})

    # -- inspection ------------------------------------------------------

    def items(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda kv: _grlex_key(kv[0]),
                      reverse=True)

    def coefficient(self, exps):
        return self._terms.get(tuple(exps), 0)

    def total_degree(self):
        return max((sum(e) for e in self._terms), default=0)

    def is_zero(self):
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MultiPoly.const(self.variables, other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.variables == other.variables and self._terms == other._terms

    def __hash__(self):
        return hash((self.variables, frozenset(self._terms.items())))

    # -- ring operations -------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, int):
            return MultiPoly.const(self.variables, other)
        if isinstance(other, MultiPoly):
            if other.variables != self.variables:
                raise ValueError(
                    f"variable mismatch: {self.variables} vs {other.variables}"
                )
            return other
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            new = terms.get(exps, 0) + coeff
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        return MultiPoly(self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.variables,
                         {e: -c for e, c in self._terms.items()})

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
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(exps, 0) + c1 * c2
                if new:
                    terms[exps] = new
                else:
                    terms.pop(exps, None)
        return MultiPoly(self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {exponent}")
        result = MultiPoly.const(self.variables, 1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- evaluation and substitution --------------------------------------

    def eval(self, assignment):
        """Substitute integers for all variables; returns an integer."""
        missing = [v for v in self.variables if v not in assignment]
        if missing:
            raise ValueError(f"no value for variables {missing}")
        total = 0
        values = [assignment[v] for v in self.variables]
        for exps, coeff in self._terms.items():
            term = coeff
            for val, e in zip(values, exps):
                if e:
                    term *= val**e
            total += term
        return total

    def substitute(self, assignment):
        """Substitute integers for a subset of variables; the result lives
        over the remaining variables (in their original order)."""
        keep = [i for i, v in enumerate(self.variables) if v not in assignment]
        values = {i: assignment[v] for i, v in enumerate(self.variables)
                  if v in assignment}
        new_vars = tuple(self.variables[i] for i in keep)
        terms = {}
        for exps, coeff in self._terms.items():
            for i, val in values.items():
                if exps[i]:
                    coeff *= val ** exps[i]
            if not coeff:
                continue
            key = tuple(exps[i] for i in keep)
            new = terms.get(key, 0) + coeff
            if new:
                terms[key] = new
            else:
                terms.pop(key, None)
        return MultiPoly(new_vars, terms)

    def rename(self, mapping_or_vars):
        """Rename variables (dict old->new) or re-embed into a wider
        variable tuple that contains every current variable."""
        if isinstance(mapping_or_vars, dict):
            new_vars = tuple(mapping_or_vars.get(v, v) for v in self.variables)
            if len(set(new_vars)) != len(new_vars):
                raise ValueError(f"renaming collapses variables: {new_vars}")
            return MultiPoly(new_vars, dict(self._terms))
        new_vars = tuple(mapping_or_vars)
        positions = [new_vars.index(v) for v in self.variables]
        terms = {}
        for exps, coeff in self._terms.items():
            key = [0] * len(new_vars)
            for pos, e in zip(positions, exps):
                key[pos] = e
            terms[tuple(key)] = coeff
        return MultiPoly(new_vars, terms)

    def divide_by_monomial(self, powers):
        """Exact division by a monomial given as name -> exponent; raises if
        some term lacks the required exponents."""
        variables = self.variables
        drop = [0] * len(variables)
        for name, e in powers.items():
            drop[variables.index(name)] = e
        terms = {}
        for exps, coeff in self._terms.items():
            if any(e < d for e, d in zip(exps, drop)):
                raise ValueError(
                    f"term {exps} is not divisible by {powers}"
                )
            terms[tuple(e - d for e, d in zip(exps, drop))] = coeff
        return MultiPoly(variables, terms)

    # -- rendering and serialization --------------------------------------

    def render(self):
        """Canonical text form: descending graded-lex, explicit * and ^."""
        if not self._terms:
            return "0"
        chunks = []
        for exps, coeff in self.items():
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            chunks.append(("-" if coeff < 0 else "+", body))
        sign, body = chunks[0]
        text = body if sign == "+" else f"-{body}"
        for sign, body in chunks[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MultiPoly({self.variables!r}, {self.render()!r})"

    def to_dict(self):
        """Stable structured form: variables plus graded-lex term list."""
        return {
            "variables": list(self.variables),
            "terms": [[list(e), c] for e, c in self.items()],
        }

    @classmethod
    def from_dict(cls, data):
        return cls(tuple(data["variables"]),
                   {tuple(e): c for e, c in data["terms"]})


def complete_homogeneous(variables, degree):
    """h_d: the sum of all degree-d monomials in the given variables."""
    variables = tuple(variables)
    if degree < 0:
        raise ValueError(f"degree must be >= 0, got {degree}")
    width = len(variables)
    if width == 0:
        return MultiPoly.const(variables, 1 if degree == 0 else 0)
    terms = {}

    def spread(i, remaining, prefix):
        if i == width - 1:
            terms[prefix + (remaining,)] = 1
            return
        for e in range(remaining + 1):
            spread(i + 1, remaining - e, prefix + (e,))

    spread(0, degree, ())
    return MultiPoly(variables, terms)
