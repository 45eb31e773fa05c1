"""Exception hierarchy for paradim.

Every error raised on purpose by the library derives from ParadimError so
callers (and the CLI) can distinguish "bad input / missing data" from
genuine bugs.
"""


class ParadimError(Exception):
    """Base class for all paradim errors."""


class DSquare(ParadimError):
    """split_symbol called with a perfect-square d (the field would be Q)."""


class NotSquarefree(ParadimError):
    """class_number called with a non-squarefree radicand."""


class UnsupportedPrime(ParadimError):
    """An arithmetic ingredient is undefined at this prime (e.g. p=2, 3)."""


class BadIndex(ParadimError):
    """Character index outside 1..17."""


class IrrationalResidue(ParadimError):
    """The sqrt(m) component of a character value failed to cancel."""


class BadYoung(ParadimError):
    """Young parameters must satisfy f1 >= f2 >= 0 and f1 == f2 (mod 2)."""


class OddWeight(ParadimError):
    """Elliptic newform dimensions require even weight."""


class ParityFailure(ParadimError):
    """Total and trace (or total and difference) have different parity."""


class NonIntegral(ParadimError):
    """An assembled rational that must be an integer is not."""


class UnsupportedJ(ParadimError):
    """No level-1 Siegel series for this j and no registered table."""


class MissingData(ParadimError):
    """A registered table or embedded data file lacks the requested entry."""


class MissingJacobiData(ParadimError):
    """Weight-2 paramodular dimension requested beyond the embedded range."""


class NegativeDim(ParadimError):
    """A dimension assembly produced a negative value."""


class NonPolynomial(ParadimError):
    """fit_numerator: the series times the denominator does not terminate."""


class BiasViolation(ParadimError):
    """A negative bias value was found inside the verified rectangle."""

    def __init__(self, p, k, value):
        super().__init__(f"bias({p}, {k}) = {value} < 0")
        self.p = p
        self.k = k
        self.value = value


class NotSimilitude(ParadimError):
    """Matrix does not satisfy g g* = n(g) 1 with n(g) a positive rational."""


class FamilySizeMismatch(ParadimError):
    """An enumerated element family has the wrong cardinality."""
