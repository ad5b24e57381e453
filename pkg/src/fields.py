"""
Exact scalar fields used for band parameters, differential entries and the
linear algebra of the oracle. There is no floating point anywhere.

Classes:
    Field        - abstract base class
    PrimeField   - the prime field GF(p), elements stored as ints in [0, p)
    RationalField - the rationals, elements stored as sympy.Rational
    FieldElement - an immutable element of one of the above

Functions:
    field_from_spec() - build a field from "gfp:<p>" or "rational"
    active_field()    - the field used when none is given explicitly
    set_field()       - change the active field

The default field is GF(32003). If a module called `settings` is on the path
and defines FIELD, that specification is used instead.

$Id$
"""

import logging
import sympy
from pyGentle.common import FieldTooSmallError, InvalidParametersError

try:
    from settings import FIELD as DEFAULT_FIELD
except ImportError:
    DEFAULT_FIELD = "gfp:32003"

logger = logging.getLogger("pyGentle")


class Field(object):
    """Base class for exact fields."""

    name = None

    def __call__(self, value):
        """Coerce an int, a string such as "3" or "1/2", or a FieldElement."""
        if isinstance(value, FieldElement):
            if value.field == self:
                return value
            raise InvalidParametersError("cannot move %s from %s to %s" % (value, value.field, self))
        if isinstance(value, str):
            return self.parse(value)
        return FieldElement(self, self._coerce(value))

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def parse(self, text):
        text = text.strip()
        if "/" in text:
            num, den = text.split("/", 1)
            return self(int(num)) / self(int(den))
        try:
            return self(int(text))
        except ValueError:
            raise InvalidParametersError("'%s' is not a field element" % text)

    def spec(self):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, Field) and self.spec() == other.spec()

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash(self.spec())

    def __str__(self):
        return self.name


class PrimeField(Field):
    """The field with p elements."""

    def __init__(self, p=32003):
        if not sympy.isprime(p):
            raise InvalidParametersError("%s is not prime" % p)
        self.p = int(p)
        self.name = "GF(%d)" % self.p

    characteristic = property(lambda self: self.p)

    def _coerce(self, value):
        return int(value) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise FieldTooSmallError("0 has no inverse in %s" % self.name)
        return pow(a, self.p - 2, self.p)

    def is_zero(self, a):
        return a == 0

    def to_str(self, a):
        # symmetric representative, so that -1 prints as -1
        if a > self.p // 2:
            return str(a - self.p)
        return str(a)

    def spec(self):
        return "gfp:%d" % self.p


class RationalField(Field):
    """The field of rational numbers, with sympy.Rational values."""

    name = "QQ"
    characteristic = 0

    def _coerce(self, value):
        return sympy.Rational(value)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in QQ")
        return 1 / a

    def is_zero(self, a):
        return a == 0

    def to_str(self, a):
        return str(a)

    def spec(self):
        return "rational"


class FieldElement(object):
    """An immutable element of a Field."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise InvalidParametersError("mixing elements of %s and %s" % (self.field, other.field))
            return other.value
        return self.field._coerce(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))
    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))
    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(self._other(other))))

    def __rtruediv__(self, other):
        return FieldElement(self.field, self.field.mul(self._other(other), self.field.inv(self.value)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return not self.field.is_zero(self.value)

    def is_one(self):
        return self.field.is_zero(self.field.sub(self.value, self.field._coerce(1)))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, sympy.Rational)):
            return self.value == self.field._coerce(other)
        return NotImplemented

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.field.spec(), self.value))

    def __int__(self):
        return int(self.value)

    def __str__(self):
        return self.field.to_str(self.value)

    def __repr__(self):
        return "%s(%s)" % (self.field.name, self)


def field_from_spec(spec):
    """
    Return the field described by `spec`, one of "gfp:<p>", "gfp" (p = 32003)
    or "rational". A Field instance is returned unchanged.
    """
    if isinstance(spec, Field):
        return spec
    spec = spec.strip().lower()
    if spec in ("rational", "qq", "q"):
        return RationalField()
    if spec.startswith("gfp"):
        if ":" in spec:
            try:
                p = int(spec.split(":", 1)[1])
            except ValueError:
                raise InvalidParametersError("bad field specification '%s'" % spec)
            return PrimeField(p)
        return PrimeField()
    raise InvalidParametersError("unknown field specification '%s' (use gfp:<p> or rational)" % spec)


_active = field_from_spec(DEFAULT_FIELD)

def active_field():
    return _active

def set_field(spec):
    """Make the field described by `spec` the active field and return it."""
    global _active
    _active = field_from_spec(spec)
    logger.debug("active field set to %s" % _active)
    return _active
