class BottSamelsonError(Exception):
    """Base class for every error raised by bottsamelson"""

    pass


class DivisionByZero(BottSamelsonError, ZeroDivisionError):
    """Inversion of the zero scalar"""

    pass


class FieldMismatch(BottSamelsonError, ValueError):
    """Operands live over different fields or variable counts"""

    pass


class NotDivisible(BottSamelsonError, ArithmeticError):
    """Exact division by a linear form left a nonzero remainder"""

    pass


class NotHomogeneous(BottSamelsonError, ValueError):
    pass


class ZeroPolynomial(BottSamelsonError, ValueError):
    pass


class UnsupportedType(BottSamelsonError, ValueError):
    """Unknown Cartan type or a rank the type does not exist in"""

    pass


class ZeroLabel(BottSamelsonError):
    """An edge label vanishes after reduction to the field"""

    pass


class IncompleteInterval(BottSamelsonError):
    """A vertex set is not closed downwards in the Bruhat order"""

    pass


class NotReduced(BottSamelsonError, ValueError):
    pass


class NonGKMInput(BottSamelsonError):
    """The moment graph fails the GKM property over the chosen field"""

    pass


class InternalInvariant(BottSamelsonError):
    """A structural guarantee of the algorithm did not hold; indicates a bug"""

    pass


class NotApplicable(BottSamelsonError, ValueError):
    """A closed-form shortcut was asked for outside the cases it covers"""

    pass


class CacheError(BottSamelsonError):
    """Reading or writing the result cache failed"""

    pass
