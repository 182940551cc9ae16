"""Exception types shared across the package.

Every error raised on a violated precondition derives from PerfcatError so the
command-line driver can map "bad input / broken precondition" to a single exit
code while genuine bugs still surface as ordinary tracebacks.
"""


class PerfcatError(Exception):
    """Base class for all precondition and validation failures."""


class FieldMismatch(PerfcatError):
    """Operands live over different coefficient fields."""


class UnsupportedField(PerfcatError):
    """No algorithm is configured for this coefficient field.

    Never raised for the rationals or a prime field; kept for API completeness.
    """


class ShapeMismatch(PerfcatError):
    """Matrix dimensions are incompatible with the requested operation."""


class NotAssociative(PerfcatError):
    """Structure constants fail the associativity law on some basis triple."""


class UnitFails(PerfcatError):
    """The designated unit vector is not a two-sided identity."""


class MalformedRelation(PerfcatError):
    """A quiver relation mixes sources/targets or names an unknown arrow."""


class InfiniteDimensional(PerfcatError):
    """Path closure did not terminate below the configured length bound."""


class NotIdempotent(PerfcatError):
    """The supplied element does not square to itself."""


class NotSemisimple(PerfcatError):
    """Operation requires a semisimple algebra but the radical is nonzero."""


class IdempotentLiftingFailed(PerfcatError):
    """The semisimple quotient could not be split into primitive idempotents."""


class AlgebraMismatch(PerfcatError):
    """Modules or maps over different algebras were combined."""


class ZeroModule(PerfcatError):
    """Operation requires a nonzero module."""


class NotChainMap(PerfcatError):
    """Squares of a would-be chain map fail to commute with differentials."""


class NotFormalInDegreeZero(PerfcatError):
    """Hom-complex cohomology is not concentrated in degree zero."""


class InvalidCertificateStep(PerfcatError):
    """A generation-certificate edge does not check out."""


class BimoduleMismatch(PerfcatError):
    """Bimodule actions do not commute, are non-unital, or fields disagree."""


class CornerMismatch(PerfcatError):
    """The supplied corner idempotent is not idempotent."""


class CornerNotSemiorthogonal(PerfcatError):
    """split_gluing needs e·c·(1-e) = 0; the corner pair is not one-sided."""


class NotStrong(PerfcatError):
    """The collection has nonzero Homs in some nonzero degree."""


class DegenerateParameters(PerfcatError):
    """Family parameters land outside the admissible locus."""


class ZeroFunctional(PerfcatError):
    """Slice contraction requires a nonzero functional."""


class NotSurjective(PerfcatError):
    """A map required to be onto is not."""


class ParseError(PerfcatError):
    """An input document does not match the published schema."""
