"""
Utility functions for working with vertex labels and costs.
"""

import re
import math
import numbers
from decimal import Decimal
from fractions import Fraction

from .errors import CostError, GraphError


#: Maximum number of fractional digits accepted in a decimal cost.
COST_DIGITS = 6

cost_regex = re.compile(r"^([+-]?)(\d+)(?:\.(\d+))?$")
label_regex = re.compile(r"^\S+$")


def is_label(label):
    """determine if `label` can name a vertex (non-empty, no whitespace)"""
    return isinstance(label, str) and label_regex.fullmatch(label) is not None


def check_labels(labels):
    """Raise :class:`GraphError` for the first invalid label in `labels`."""
    for label in labels:
        if not is_label(label):
            raise GraphError('invalid vertex label {0!r}; labels are non-empty '
                             'strings without whitespace'.format(label))


def parse_cost(text, digits=COST_DIGITS):
    """Interprets a decimal string as an exact, strictly positive cost.

    Parameters
    ----------
    text : str
        Decimal number, e.g. ``'2'`` or ``'2.5'``
    digits : int, default=6
        Maximum number of digits allowed after the decimal point

    Returns
    -------
    fractions.Fraction

    Examples
    --------
    >>> parse_cost('2.5')
    Fraction(5, 2)
    >>> parse_cost('4')
    Fraction(4, 1)
    >>> parse_cost('0')
    Traceback (most recent call last):
    ...
    adjcut.errors.CostError: cost must be strictly positive, got '0'

    See Also
    --------
    format_cost
    """
    m = cost_regex.match(text.strip())
    if m is None:
        raise CostError('malformed cost {0!r}; expected a decimal number'.format(text))
    sign, whole, frac = m.groups()
    if frac is not None and len(frac) > digits:
        raise CostError('cost {0!r} has more than {1} fractional digits'.format(text, digits))
    value = Fraction(whole + '.' + (frac or '0'))
    if sign == '-':
        value = -value
    if value <= 0:
        raise CostError('cost must be strictly positive, got {0!r}'.format(text))
    return value


def as_cost(value, digits=COST_DIGITS):
    """convert an int, Fraction, Decimal, float or decimal string to a positive Fraction"""
    if isinstance(value, bool):
        raise CostError('cost must be a number, got {0!r}'.format(value))
    if isinstance(value, str):
        return parse_cost(value, digits=digits)
    if isinstance(value, float):
        # the shortest repr round-trips, so 0.1 becomes 1/10 rather than a binary fraction
        return parse_cost(repr(value), digits=digits)
    if isinstance(value, (numbers.Rational, Decimal)):
        value = Fraction(value)
        if value <= 0:
            raise CostError('cost must be strictly positive, got {0}'.format(value))
        return value
    raise CostError('cost must be a number, got {0!r}'.format(value))


def format_cost(value):
    """Render an exact cost as a short string.

    Costs with a finite decimal expansion are written as decimals, anything
    else as ``p/q``.

    Examples
    --------
    >>> format_cost(Fraction(3))
    '3'
    >>> format_cost(Fraction(5, 2))
    '2.5'
    >>> format_cost(Fraction(1, 3))
    '1/3'
    """
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    d = value.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    if d != 1:
        return '{0}/{1}'.format(value.numerator, value.denominator)
    s = format(Decimal(value.numerator) / Decimal(value.denominator), 'f')
    return s.rstrip('0').rstrip('.') if '.' in s else s


def format_set(labels):
    """format a set of labels in sorted order, e.g. ``{K, X}``"""
    return '{' + ', '.join(sorted(labels)) + '}'


def parse_set(text):
    """convert a comma-separated list of labels e.g. 'X,T,R' to a frozenset

    Whitespace around labels is ignored and an empty string gives the empty set.

    >>> sorted(parse_set('X, T,R'))
    ['R', 'T', 'X']
    """
    labels = [t.strip() for t in text.split(',')]
    labels = [t for t in labels if t]
    check_labels(labels)
    return frozenset(labels)


def cost_scale(costs):
    """least common denominator of a collection of Fraction costs (1 if empty)"""
    return math.lcm(1, *(Fraction(c).denominator for c in costs))


def scale_costs(costs, scale=None):
    """Scale a mapping of Fraction costs to integers.

    Parameters
    ----------
    costs : dict
        Mapping label -> Fraction
    scale : int, optional
        Common multiplier; defaults to :func:`cost_scale` of the values

    Returns
    -------
    tuple
        ``(scaled, scale)`` where ``scaled`` maps each label to an int

    Examples
    --------
    >>> scale_costs({'B': Fraction(1, 2), 'Q': Fraction(3)})
    ({'B': 1, 'Q': 6}, 2)
    """
    if scale is None:
        scale = cost_scale(costs.values())
    scaled = {}
    for label, c in costs.items():
        c = Fraction(c) * scale
        assert c.denominator == 1, 'scale {0} does not clear cost of {1}'.format(scale, label)
        scaled[label] = c.numerator
    return scaled, scale
