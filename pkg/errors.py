"""Exception hierarchy with machine-readable codes and CLI exit codes."""

from typing import Optional


class FumError(Exception):
    """Base error. `code` is what the CLI writes into the JSON `error` field."""

    code = "error"
    exit_code = 3

    def __init__(self, message: str = "", details: Optional[dict] = None):
        super().__init__(message or self.code)
        self.details = details or {}

    def to_dict(self) -> dict:
        out = {"code": self.code, "message": str(self)}
        if self.details:
            out["details"] = self.details
        return out


# --- Input errors (exit 2) ---


class InputError(FumError):
    code = "input_error"
    exit_code = 2


class AsymmetricAdjacency(InputError):
    code = "asymmetric_adjacency"


class SelfLoop(InputError):
    code = "self_loop"


class DuplicateNeighbor(InputError):
    code = "duplicate_neighbor"


class EulerViolation(InputError):
    code = "euler_violation"


class InvalidOuterDart(InputError):
    code = "invalid_outer_dart"


class MissingOuterDart(InputError):
    code = "missing_outer_dart"


class NotAnEdge(InputError):
    code = "not_an_edge"


class PartialColoring(InputError):
    code = "partial_coloring"


class PathNotOnOuterFace(InputError):
    code = "path_not_on_outer_face"


class NotApplicable(InputError):
    code = "not_applicable"


class PreconditionViolated(InputError):
    code = "precondition_violated"


class FaceNotQuadrilateral(InputError):
    code = "face_not_quadrilateral"


class OuterBoundaryNotC4(InputError):
    code = "outer_boundary_not_c4"


class OddGirth(InputError):
    code = "odd_girth"


class InvalidParameter(InputError):
    code = "invalid_parameter"


class ConfigError(InputError):
    code = "config_error"


class BadHeader(InputError):
    code = "bad_header"


class TruncatedRecord(InputError):
    code = "truncated_record"


class NeighborOutOfRange(InputError):
    code = "neighbor_out_of_range"


class EmbeddingInvalid(InputError):
    code = "embedding_invalid"

    def __init__(self, message: str, index: int):
        super().__init__(message, {"record": index})
        self.index = index


# --- Solver budget (exit 1, same as Exceeded) ---


class SolverTimeout(FumError):
    code = "timeout"
    exit_code = 1


# --- Internal tripwires (exit 3) ---


class InternalError(FumError):
    code = "internal_error"
    exit_code = 3


class InternalExhaustion(InternalError):
    code = "internal_exhaustion"


class FallbackExhausted(InternalError):
    code = "fallback_exhausted"


class MergeConflict(InternalError):
    code = "merge_conflict"
