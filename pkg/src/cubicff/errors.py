"""Exception taxonomy shared by every module.

Two broad families: parse failures (CLI exit code 2) and violated
mathematical preconditions (CLI exit code 3).  Each precondition error
carries a short `hypothesis` string naming the assumption that failed,
so JSON error objects are self-describing.
"""


class CubicFFError(Exception):
    """Base class for all library errors."""


class ParseError(CubicFFError):
    """Malformed field/polynomial/rational/place input."""


class PreconditionError(CubicFFError):
    """A mathematical hypothesis of the requested operation is violated."""

    hypothesis = "precondition"

    def __init__(self, message=""):
        super().__init__(message or self.hypothesis)


def _precondition(name, hypothesis_text):
    return type(name, (PreconditionError,), {"hypothesis": hypothesis_text})


# gfq
NotPrime = _precondition("NotPrime", "characteristic must be prime")
ReducibleModulus = _precondition("ReducibleModulus", "field modulus must be irreducible")
DegreeMismatch = _precondition("DegreeMismatch", "modulus degree must equal the extension degree")
WrongCharacteristic = _precondition("WrongCharacteristic", "operation requires a different field characteristic")
WrongResidue = _precondition("WrongResidue", "operation requires a different residue of q mod 3")
ZeroInput = _precondition("ZeroInput", "input must be nonzero")
MixedFields = _precondition("MixedFields", "operands must share one field specification")

# polyrat
ZeroPolynomial = _precondition("ZeroPolynomial", "polynomial must be nonzero")
NegativeValuation = _precondition("NegativeValuation", "residue requires nonnegative valuation at the place")

# normalform
ReducibleInput = _precondition("ReducibleInput", "generator polynomial must be irreducible")
ZeroConstantTerm = _precondition("ZeroConstantTerm", "irreducible cubic must have nonzero constant term")
DegenerateArtinSchreier = _precondition(
    "DegenerateArtinSchreier", "parameter lies in the image of w^3 - w, so the extension is trivial"
)
CubeInput = _precondition("CubeInput", "parameter must not be a cube")

# galoiskit
InseparableInput = _precondition("InseparableInput", "operation requires a separable extension")
NotCoprime = _precondition("NotCoprime", "polynomials must be coprime")
NotGaloisShape = _precondition("NotGaloisShape", "parameter does not carry the Galois norm-form shape")

# action
NotGalois = _precondition("NotGalois", "operation requires a Galois extension")
DegenerateA = _precondition("DegenerateA", "parameter must satisfy a != 0 and a^2 != 4")
NotOnConic = _precondition("NotOnConic", "point must satisfy chi^2 + a*phi*chi + phi^2 = 1")

# placegeom
ConstantExtension = _precondition("ConstantExtension", "operation requires a geometric (non-constant) extension")
HypothesisFailed = _precondition("HypothesisFailed", "genus formula needs a place of positive valuation")
BasisUnavailable = _precondition("BasisUnavailable", "no integral basis is available for this input")

# intbasis
NotStandardForm = _precondition("NotStandardForm", "parameter must be in standard form")
NoNormWitness = _precondition("NoNormWitness", "no coprime norm-form witness exists for the denominator")
