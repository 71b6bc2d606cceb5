"""Exception taxonomy for the whole stack.

Errors are grouped by where they arise (config/schema, parsing, policy
runtime, skill APIs, execution, harness/synthesis).  The evaluation
harness maps a subset of these onto failure categories; see
``policysim.harness``.
"""

from __future__ import annotations


class PolicySimError(Exception):
    """Base class for all errors raised by this package."""


# --- scene configuration -------------------------------------------------

class SchemaError(PolicySimError):
    """Scene or suite config does not match the documented schema."""


class DanglingReference(SchemaError):
    """A config field references an id that does not exist."""


# --- policy language: parsing --------------------------------------------

class ParseError(PolicySimError):
    """Source text rejected by the policy-language parser.

    Carries the 1-based line/column of the offending token.
    """

    def __init__(self, message: str, line: int = 0, col: int = 0, token: str = ""):
        self.line = line
        self.col = col
        self.token = token
        super().__init__(f"{line}:{col}: {message}")


class EmptyProgram(ParseError):
    """Source contained no main() body."""


# --- policy language: runtime --------------------------------------------

class PolicyRuntimeError(PolicySimError):
    """Base for errors raised while interpreting a policy program."""

    call_index: int | None = None


class UnknownFunction(PolicyRuntimeError):
    """Call to a name not bound in the active API registry."""


class ArityError(PolicyRuntimeError):
    """Call with the wrong number of arguments or an unknown keyword."""


class ArgTypeError(PolicyRuntimeError):
    """Call argument of the wrong runtime type for the signature."""


class StepLimitExceeded(PolicyRuntimeError):
    pass


class LoopLimitExceeded(PolicyRuntimeError):
    pass


class ApiCallLimitExceeded(PolicyRuntimeError):
    pass


class IndexOutOfRange(PolicyRuntimeError):
    def __init__(self, message: str, from_empty_perception: bool = False):
        super().__init__(message)
        self.from_empty_perception = from_empty_perception


class DivisionByZero(PolicyRuntimeError):
    pass


# --- skill APIs -----------------------------------------------------------

class SkillError(PolicyRuntimeError):
    """Base for errors raised by skill API implementations."""


class NotGraspable(SkillError):
    pass


class ObjectGone(SkillError):
    pass


class NoJoint(SkillError):
    pass


class NotAtJoint(SkillError):
    pass


class BothOrNeitherArgs(SkillError):
    """Exactly one of a mutually-exclusive parameter pair must be given."""


class TargetNotFound(SkillError):
    pass


class NoToolHeld(SkillError):
    pass


class RegionNotFound(SkillError):
    pass


class NotHoldingNamed(SkillError):
    pass


class NotPressable(SkillError):
    pass


class OutOfWorkspace(SkillError):
    pass


class ZeroDirection(SkillError):
    pass


class EmptyPath(SkillError):
    pass


class AngleTooLarge(SkillError):
    pass


class BehindCamera(SkillError):
    pass


class OutOfRange(SkillError):
    """Joint value outside its declared range."""


# --- execution -------------------------------------------------------------

class WorkspaceViolation(SkillError):
    """A waypoint left the workspace box while being applied."""


# --- harness / synthesis ----------------------------------------------------

class UnknownVariant(PolicySimError):
    pass


class PolicyMissing(PolicySimError):
    """A file policy source has no program for a requested task."""


class EmptyTrace(PolicySimError):
    """Plan extraction received a trace with no calls."""


class UnknownVerb(PolicySimError):
    """Template code generation met a plan step it cannot compile."""


class ExternalUnavailable(PolicySimError):
    pass


class ExternalTimeout(ExternalUnavailable):
    pass


class ExternalMalformed(PolicySimError):
    pass


FUNCTIONAL_ERRORS = (UnknownFunction, ArityError, ArgTypeError)
