#! /usr/bin/env python
# -*- coding: utf-8 -*-

"""
Module that contains exact sparse multivariate polynomials over the rationals
"""

from __future__ import print_function, division, absolute_import

import re
import logging
from fractions import Fraction

from newtonforms.core import consts, exceptions

logger = logging.getLogger('newtonforms')


def grlex_key(exponent):
    """
    Returns the graded lexicographic sort key of an exponent (greater key means greater monomial)
    :param exponent: tuple(int)
    :return: tuple
    """

    return sum(exponent), tuple(exponent)


def dot(v, exponent):
    return sum(a * b for a, b in zip(v, exponent))


class Poly(object):
    """
    Immutable sparse polynomial. Terms map exponent tuples to nonzero Fraction coefficients
    """

    __slots__ = ('_terms', '_nvars', '_hash')

    def __init__(self, terms, nvars):
        if nvars < 1:
            raise exceptions.VariableCountError('Polynomials need at least one variable, got {}'.format(nvars))
        clean = dict()
        for exponent, coeff in dict(terms).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != nvars:
                raise exceptions.VariableCountError(
                    'Exponent {} does not have {} entries'.format(exponent, nvars))
            if any(e < 0 for e in exponent):
                raise exceptions.PreconditionError('Exponent {} has a negative entry'.format(exponent))
            coeff = Fraction(coeff)
            if coeff:
                clean[exponent] = clean.get(exponent, Fraction(0)) + coeff
                if not clean[exponent]:
                    clean.pop(exponent)
        self._terms = clean
        self._nvars = nvars
        self._hash = None

    # ================================================================================================
    # ======================== CONSTRUCTORS
    # ================================================================================================

    @classmethod
    def zero(cls, nvars):
        return cls(dict(), nvars)

    @classmethod
    def constant(cls, value, nvars):
        return cls({(0,) * nvars: value}, nvars)

    @classmethod
    def monomial(cls, exponent, coeff=1):
        exponent = tuple(exponent)
        if any(e < 0 for e in exponent):
            raise exceptions.PreconditionError('Negative exponent {} in polynomial monomial'.format(exponent))
        return cls({exponent: coeff}, len(exponent))

    @classmethod
    def variable(cls, index, nvars):
        """
        Returns the variable x_index (1-based, as in the text syntax)
        """

        if not 1 <= index <= nvars:
            raise exceptions.VariableCountError('Variable index {} out of range 1..{}'.format(index, nvars))
        exponent = [0] * nvars
        exponent[index - 1] = 1
        return cls({tuple(exponent): 1}, nvars)

    # ================================================================================================
    # ======================== PROPERTIES
    # ================================================================================================

    @property
    def nvars(self):
        return self._nvars

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def support(self):
        """
        Returns the exponents of the polynomial sorted lexicographically
        :return: list(tuple(int))
        """

        return sorted(self._terms)

    def items(self):
        """
        Returns (exponent, coefficient) pairs in decreasing graded lexicographic order
        """

        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]), reverse=True)

    def coeff(self, exponent):
        return self._terms.get(tuple(exponent), Fraction(0))

    def leading_term(self):
        if not self._terms:
            raise exceptions.ZeroPolynomialError('Zero polynomial has no leading term')
        exponent = max(self._terms, key=grlex_key)
        return exponent, self._terms[exponent]

    def is_monomial(self):
        return len(self._terms) == 1

    # ================================================================================================
    # ======================== ARITHMETIC
    # ================================================================================================

    def _check(self, other):
        if self._nvars != other.nvars:
            raise exceptions.VariableCountError(
                'Variable count mismatch: {} vs {}'.format(self._nvars, other.nvars))

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.constant(Fraction(other), self._nvars)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self._terms)
        for exponent, coeff in other._terms.items():
            terms[exponent] = terms.get(exponent, Fraction(0)) + coeff
        return Poly(terms, self._nvars)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self._terms.items()}, self._nvars)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        terms = dict()
        for exp_a, coeff_a in self._terms.items():
            for exp_b, coeff_b in other._terms.items():
                exponent = tuple(x + y for x, y in zip(exp_a, exp_b))
                terms[exponent] = terms.get(exponent, Fraction(0)) + coeff_a * coeff_b
        return Poly(terms, self._nvars)

    __rmul__ = __mul__

    def __pow__(self, power):
        if power < 0:
            raise exceptions.PreconditionError('Negative powers are not polynomials')
        result = Poly.constant(1, self._nvars)
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def scale(self, value):
        value = Fraction(value)
        return Poly({e: c * value for e, c in self._terms.items()}, self._nvars)

    def shift(self, exponent):
        """
        Multiplies by the monomial x^exponent. Negative entries give transient Laurent terms and are only
        accepted when the result has nonnegative exponents
        """

        exponent = tuple(exponent)
        terms = dict()
        for exp, coeff in self._terms.items():
            new_exp = tuple(a + b for a, b in zip(exp, exponent))
            if any(e < 0 for e in new_exp):
                raise exceptions.PreconditionError(
                    'Monomial quotient by {} leaves a Laurent term {}'.format(exponent, new_exp))
            terms[new_exp] = coeff
        return Poly(terms, self._nvars)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self._nvars == other.nvars and self._terms == other._terms

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    def __repr__(self):
        return 'Poly({!r}, nvars={})'.format(to_text(self), self._nvars)

    def __str__(self):
        return to_text(self)

    # ================================================================================================
    # ======================== EVALUATION
    # ================================================================================================

    def evaluate(self, point):
        """
        Evaluates the polynomial exactly at a rational point
        :param point: list(Fraction or int)
        :return: Fraction
        """

        total = Fraction(0)
        for exponent, coeff in self._terms.items():
            term = coeff
            for e, value in zip(exponent, point):
                if e:
                    term *= Fraction(value) ** e
            total += term
        return total

    def set_variable_to_zero(self, index):
        """
        Returns the polynomial in one variable less obtained by setting x_index (1-based) to zero
        """

        if self._nvars < 2:
            raise exceptions.VariableCountError('Cannot remove the only variable of a polynomial')
        position = index - 1
        terms = dict()
        for exponent, coeff in self._terms.items():
            if exponent[position] == 0:
                terms[exponent[:position] + exponent[position + 1:]] = coeff
        return Poly(terms, self._nvars - 1)

    def embed(self, nvars):
        """
        Returns the same polynomial seen in more variables (new variables appended last)
        """

        if nvars < self._nvars:
            raise exceptions.VariableCountError('Cannot embed into fewer variables')
        pad = (0,) * (nvars - self._nvars)
        return Poly({e + pad: c for e, c in self._terms.items()}, nvars)


class PolyModP(object):
    """
    Polynomial with coefficients in the prime field F_p
    """

    def __init__(self, terms, nvars, prime):
        self._prime = prime
        self._nvars = nvars
        self._terms = {tuple(e): int(c) % prime for e, c in terms.items() if int(c) % prime}

    @property
    def prime(self):
        return self._prime

    @property
    def nvars(self):
        return self._nvars

    @property
    def terms(self):
        return dict(self._terms)

    def is_zero(self):
        return not self._terms

    def evaluate(self, point):
        """
        Evaluates the polynomial at a point of F_p^n
        :param point: list(int)
        :return: int
        """

        p = self._prime
        total = 0
        for exponent, coeff in self._terms.items():
            term = coeff
            for e, value in zip(exponent, point):
                if e:
                    term = term * pow(value, e, p) % p
            total = (total + term) % p
        return total

    def __eq__(self, other):
        if not isinstance(other, PolyModP):
            return NotImplemented
        return (self._prime, self._nvars, self._terms) == (other.prime, other.nvars, other._terms)

    def __repr__(self):
        return 'PolyModP({}, p={})'.format(sorted(self._terms.items()), self._prime)


# =================================================================================================
# PARSING
# =================================================================================================

_TOKEN_REGEX = re.compile(r'\s*(?:(?P<number>\d+)|(?P<var>x(?P<index>\d+))|(?P<op>[-+*/^()]))')


def _tokenize(text):
    tokens = list()
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN_REGEX.match(stripped, position)
        if not match:
            raise exceptions.PolynomialSyntaxError(
                'Unexpected character {!r}'.format(stripped[position:].lstrip()[:1]), position)
        start = match.start(match.lastgroup) if match.lastgroup != 'index' else match.start('var')
        if match.group('number') is not None:
            tokens.append(('number', int(match.group('number')), start))
        elif match.group('var') is not None:
            tokens.append(('var', int(match.group('index')), start))
        else:
            tokens.append(('op', match.group('op'), start))
        position = match.end()
    tokens.append(('end', None, len(stripped)))
    return tokens


class _PolyParser(object):
    """
    Recursive descent parser: expr := term (+|- term)*, term := unary (* unary | / integer)*,
    unary := - unary | power, power := atom (^ integer)?, atom := number | x<i> | ( expr )
    """

    def __init__(self, text, nvars):
        self._tokens = _tokenize(text)
        self._index = 0
        self._nvars = nvars

    def _peek(self):
        return self._tokens[self._index]

    def _next(self):
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _expect_integer(self):
        negative = False
        kind, value, position = self._next()
        if kind == 'op' and value == '-':
            negative = True
            kind, value, position = self._next()
        if kind != 'number':
            raise exceptions.PolynomialSyntaxError('Expected an integer', position)
        return -value if negative else value, position

    def parse(self):
        result = self._expr()
        kind, value, position = self._peek()
        if kind != 'end':
            raise exceptions.PolynomialSyntaxError('Unexpected token {!r}'.format(value), position)
        return result

    def _expr(self):
        result = self._term()
        while True:
            kind, value, _ = self._peek()
            if kind == 'op' and value in '+-':
                self._next()
                rhs = self._term()
                result = result + rhs if value == '+' else result - rhs
            else:
                return result

    def _term(self):
        result = self._unary()
        while True:
            kind, value, _ = self._peek()
            if kind == 'op' and value == '*':
                self._next()
                result = result * self._unary()
            elif kind == 'op' and value == '/':
                self._next()
                denominator, position = self._expect_integer()
                if denominator == 0:
                    raise exceptions.PolynomialSyntaxError('Division by zero', position)
                result = result.scale(Fraction(1, denominator))
            else:
                return result

    def _unary(self):
        kind, value, _ = self._peek()
        if kind == 'op' and value == '-':
            self._next()
            return -self._unary()
        if kind == 'op' and value == '+':
            self._next()
            return self._unary()
        return self._power()

    def _power(self):
        base = self._atom()
        kind, value, _ = self._peek()
        if kind == 'op' and value == '^':
            self._next()
            exponent, position = self._expect_integer()
            if exponent < 0:
                raise exceptions.PolynomialSyntaxError('Negative exponent {}'.format(exponent), position)
            return base ** exponent
        return base

    def _atom(self):
        kind, value, position = self._next()
        if kind == 'number':
            return Poly.constant(value, self._nvars)
        if kind == 'var':
            if not 1 <= value <= self._nvars:
                raise exceptions.PolynomialSyntaxError(
                    'Variable x{} exceeds nvars={}'.format(value, self._nvars), position)
            return Poly.variable(value, self._nvars)
        if kind == 'op' and value == '(':
            result = self._expr()
            kind, value, position = self._next()
            if kind != 'op' or value != ')':
                raise exceptions.PolynomialSyntaxError('Expected ")"', position)
            return result
        raise exceptions.PolynomialSyntaxError(
            'Unexpected {}'.format('end of input' if kind == 'end' else repr(value)), position)


def parse_poly(text, nvars):
    """
    Parses a polynomial written as a sum of terms c*x1^a1*...*xn^an (parentheses and powers of
    sub-expressions are accepted as well)
    :param text: str
    :param nvars: int
    :return: Poly
    """

    if nvars < 1:
        raise exceptions.VariableCountError('nvars must be positive, got {}'.format(nvars))
    if not text or not text.strip():
        raise exceptions.PolynomialSyntaxError('Empty polynomial text', 0)

    return _PolyParser(text, nvars).parse()


def infer_nvars(text):
    """
    Returns the highest variable index used in the given polynomial text (at least 1)
    """

    indices = [int(index) for index in re.findall(r'x(\d+)', text)]
    return max(indices) if indices else 1


# =================================================================================================
# OPERATIONS
# =================================================================================================

def poly_arith(op, p, q):
    """
    Exact polynomial arithmetic
    :param op: str, one of consts.ArithOps
    :param p: Poly
    :param q: Poly or rational (for scale)
    :return: Poly
    """

    if op == consts.ArithOps.Scale:
        return p.scale(q)
    if not isinstance(q, Poly):
        raise exceptions.PreconditionError('Operation "{}" expects two polynomials'.format(op))
    if p.nvars != q.nvars:
        raise exceptions.VariableCountError('Variable count mismatch: {} vs {}'.format(p.nvars, q.nvars))
    if op == consts.ArithOps.Add:
        return p + q
    elif op == consts.ArithOps.Sub:
        return p - q
    elif op == consts.ArithOps.Mul:
        return p * q
    raise exceptions.PreconditionError('Unknown polynomial operation "{}"'.format(op))


def face_part(p, v, c):
    """
    Returns the terms of p whose exponent b satisfies <v, b> = c
    :param p: Poly
    :param v: list(int), nonnegative and nonzero
    :param c: int
    :return: Poly
    """

    return Poly({e: coeff for e, coeff in p.terms.items() if dot(v, e) == c}, p.nvars)


def min_weight(p, v):
    """
    Returns min of <v, b> over the support of p
    """

    if p.is_zero():
        raise exceptions.ZeroPolynomialError('Zero polynomial has no minimal weight')
    return min(dot(v, e) for e in p.terms)


def initial_form(p, v):
    """
    Returns the face truncation p_v of p on the face where <v, .> is minimal
    """

    return face_part(p, v, min_weight(p, v))


def log_derivative(p, i):
    """
    Returns x_i * dp/dx_i (1-based index). Exponents are unchanged
    :param p: Poly
    :param i: int
    :return: Poly
    """

    if not 1 <= i <= p.nvars:
        raise exceptions.VariableCountError('Variable index {} out of range 1..{}'.format(i, p.nvars))
    return Poly({e: c * e[i - 1] for e, c in p.terms.items()}, p.nvars)


def axis_condition(p):
    """
    Returns whether p restricted to each coordinate axis is nonzero, i.e. the support contains a point
    k * e_i for every i (a nonzero constant term satisfies every axis)
    :param p: Poly
    :return: bool
    """

    support = p.terms
    for i in range(p.nvars):
        if not any(all(e[j] == 0 for j in range(p.nvars) if j != i) for e in support):
            return False
    return True


def mod_p_reduce(p, prime):
    """
    Reduces the coefficients of p modulo a prime
    :param p: Poly
    :param prime: int
    :return: PolyModP
    """

    terms = dict()
    for exponent, coeff in p.terms.items():
        if coeff.denominator % prime == 0:
            raise exceptions.ModularReductionError(
                'Coefficient {} has a denominator divisible by {}'.format(coeff, prime))
        terms[exponent] = coeff.numerator * pow(coeff.denominator, prime - 2, prime) % prime
    return PolyModP(terms, p.nvars, prime)


def divides_monomial(divisor, exponent):
    return all(a <= b for a, b in zip(divisor, exponent))


def divide(p, f):
    """
    Graded lexicographic division of p by the single divisor f
    :param p: Poly
    :param f: Poly
    :return: tuple(Poly, Poly), quotient and remainder with p = q * f + r
    """

    if f.is_zero():
        raise exceptions.ZeroPolynomialError('Division by the zero polynomial')
    if p.nvars != f.nvars:
        raise exceptions.VariableCountError('Variable count mismatch: {} vs {}'.format(p.nvars, f.nvars))

    lead_exp, lead_coeff = f.leading_term()
    quotient = dict()
    remainder = dict()
    current = p
    while not current.is_zero():
        exponent, coeff = current.leading_term()
        if divides_monomial(lead_exp, exponent):
            factor_exp = tuple(a - b for a, b in zip(exponent, lead_exp))
            factor_coeff = coeff / lead_coeff
            quotient[factor_exp] = quotient.get(factor_exp, Fraction(0)) + factor_coeff
            current = current - Poly.monomial(factor_exp, factor_coeff) * f
        else:
            remainder[exponent] = coeff
            current = current - Poly.monomial(exponent, coeff)

    return Poly(quotient, p.nvars), Poly(remainder, p.nvars)


# =================================================================================================
# SERIALIZATION
# =================================================================================================

def _coeff_text(coeff):
    if coeff.denominator == 1:
        return str(coeff.numerator)
    return '{}/{}'.format(coeff.numerator, coeff.denominator)


def to_text(p):
    """
    Returns p in the text syntax accepted by parse_poly, terms in decreasing graded lexicographic order
    """

    if p.is_zero():
        return '0'
    pieces = list()
    for exponent, coeff in p.items():
        factors = ['x{}{}'.format(i + 1, '^{}'.format(e) if e > 1 else '') for i, e in enumerate(exponent) if e]
        magnitude = abs(coeff)
        if not factors:
            body = _coeff_text(magnitude)
        elif magnitude == 1:
            body = '*'.join(factors)
        else:
            body = '*'.join([_coeff_text(magnitude)] + factors)
        sign = '-' if coeff < 0 else '+'
        pieces.append((sign, body))
    first_sign, first_body = pieces[0]
    text = ('-' if first_sign == '-' else '') + first_body
    for sign, body in pieces[1:]:
        text += ' {} {}'.format(sign, body)
    return text


def to_json(p):
    return {
        'nvars': p.nvars,
        'terms': [{'coeff': _coeff_text(c), 'exp': list(e)} for e, c in sorted(p.terms.items())]
    }


def from_json(data):
    try:
        nvars = int(data['nvars'])
        terms = dict()
        for term in data['terms']:
            exponent = tuple(int(e) for e in term['exp'])
            if any(e < 0 for e in exponent):
                raise exceptions.PreconditionError('Negative exponent {} in polynomial JSON'.format(exponent))
            terms[exponent] = terms.get(exponent, Fraction(0)) + Fraction(str(term['coeff']))
    except (KeyError, TypeError, ValueError) as exc:
        raise exceptions.PolynomialSyntaxError('Malformed polynomial JSON: {}'.format(exc))
    return Poly(terms, nvars)
