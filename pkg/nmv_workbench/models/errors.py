"""Exception hierarchy"""

from typing import Optional, Sequence, Tuple, TYPE_CHECKING

if TYPE_CHECKING:
    from .schemas import CheckReport


class WorkbenchError(Exception):
    """Base class for every error raised by the workbench"""


class OrderError(WorkbenchError):
    """A relation matrix is not a partial order"""

    axiom = "partial order"

    def __init__(self, witness: Tuple[int, ...]):
        self.witness = tuple(witness)
        super().__init__(f"relation is not {self.axiom}: witness {self.witness}")


class NotReflexive(OrderError):
    axiom = "reflexive"


class NotAntisymmetric(OrderError):
    axiom = "antisymmetric"


class NotTransitive(OrderError):
    axiom = "transitive"


class NotDirected(OrderError):
    axiom = "directed"


class LawViolation(WorkbenchError):
    """A validating constructor was given tables that break its laws"""

    def __init__(self, report: "CheckReport"):
        self.report = report
        failed = ", ".join(r.law_id for r in report.failures())
        super().__init__(f"{report.subject}: laws violated: {failed}")


class HypothesisError(WorkbenchError):
    """A hypothesis of a conversion or lemma check does not hold"""

    def __init__(self, hypotheses: Sequence[str], witness: Optional[Tuple[int, ...]] = None):
        self.hypotheses = list(hypotheses)
        self.witness = witness
        message = f"hypothesis not satisfied: {', '.join(self.hypotheses)}"
        if witness is not None:
            message += f" (witness {witness})"
        super().__init__(message)

    @property
    def hypothesis(self) -> str:
        return self.hypotheses[0]


class ConsistencyError(WorkbenchError):
    """An invariant that should follow from validated input was broken"""


class OutsideSection(WorkbenchError, KeyError):
    """Section involution looked up outside its section [a, 1]"""

    def __init__(self, a: int, x: int):
        self.a = a
        self.x = x
        super().__init__(f"element {x} is not in the section of {a}")


class UnsupportedSize(WorkbenchError):
    """Enumeration size outside the supported range"""


class UnknownPredicate(WorkbenchError):
    """Counterexample predicate name is not registered"""


class AlgebraFileError(WorkbenchError):
    """Algebra file could not be turned into a valid document"""

    def __init__(self, message: str, location: str = "", line: Optional[int] = None,
                 column: Optional[int] = None):
        self.message = message
        self.location = location
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self) -> str:
        where = self.location or "document"
        if self.line is not None:
            where += f" (line {self.line}, column {self.column})"
        return f"{where}: {self.message}"


class MalformedDocument(AlgebraFileError):
    pass


class DuplicateLabel(AlgebraFileError):
    pass


class UnknownLabel(AlgebraFileError):
    pass


class RaggedTable(AlgebraFileError):
    pass


class MissingTable(AlgebraFileError):
    pass


class UnexpectedTable(AlgebraFileError):
    pass


class UsageError(WorkbenchError):
    """Command line arguments that parse but make no sense together"""
