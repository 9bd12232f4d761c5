"""Exception hierarchy.

Every error carries a short machine-readable ``code`` and the process exit
status the command-line front end should use for it.
"""


class MRKError(Exception):
    code = "error"
    exit_status = 1


class InputError(MRKError, ValueError):
    """Malformed input: bad JSON, wrong shapes, unparseable arguments."""

    code = "malformed-input"
    exit_status = 1


class DimensionError(InputError):
    """Vectors from different lattices, or coordinate length mismatch."""

    code = "dimension-mismatch"


class NonIntegralReductionError(MRKError, ValueError):
    """Halving a lattice vector with an odd coordinate."""

    code = "non-integral-reduction"
    exit_status = 2


class LiftMismatchError(NonIntegralReductionError):
    code = "lift-mismatch"


class CongruenceError(MRKError, ValueError):
    """A quantity that must be integral came out fractional."""

    code = "congruence"
    exit_status = 2


class AdmissibilityError(CongruenceError):
    code = "admissibility-parity"


class SetupError(MRKError, ValueError):
    """Gauge or manifold data outside the range where a formula applies."""

    code = "setup"
    exit_status = 2


class DegreeError(SetupError):
    code = "degree-mismatch"


class NotSimpleTypeError(SetupError):
    code = "not-simple-type"


class ValidationFailed(MRKError):
    code = "validation-failed"
    exit_status = 2

    def __init__(self, report, path):
        self.report = report
        self.path = path
        codes = ", ".join(f.code for f in report.blocking(path))
        super().__init__(f"validation errors block '{path}': {codes}")


class UnsupportedLevelError(MRKError):
    """A reducible sits below the top Uhlenbeck level.

    No closed formula is known for pairings with links of such reducibles;
    the reduction formula is only conjectural there.
    """

    code = "unsupported-level"
    exit_status = 3

    def __init__(self, levels):
        self.levels = sorted(set(levels))
        super().__init__(
            "lower-level reducibles present (levels "
            + ", ".join(str(v) for v in self.levels)
            + "): pairings with links of U(1) monopoles below the top "
            "Uhlenbeck level have no closed formula (conjectural PU(2) "
            "reduction formula, not evaluated)"
        )


class ConsistencyError(MRKError, ArithmeticError):
    """An identity that must hold exactly failed on the given data."""

    code = "consistency"
    exit_status = 2
