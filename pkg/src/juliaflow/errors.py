"""Exception types shared across the package."""


class JuliaflowError(Exception):
    """Base class for all package errors."""


class ConnectedJuliaSetError(JuliaflowError):
    """No critical point escapes, so the Julia set is connected and there is no tree."""


class RootFindingError(JuliaflowError):
    """Simultaneous root iteration failed to converge within its budget."""


class IndeterminateOrbitError(JuliaflowError):
    """Iteration budget exhausted without a bounded/escaped verdict."""


class DegenerateGradientError(JuliaflowError):
    """Potential gradient requested at a critical point of the potential."""


class ResolutionInsufficientError(JuliaflowError):
    """Grid labeling is inconsistent with the cover accounting after maximal refinement."""


class PartitionInconsistencyError(JuliaflowError):
    """Nesting or image resolution produced zero or multiple candidates."""


class RefinementRequestError(JuliaflowError):
    """A geometric decision was too close to a grid cell to trust; caller should refine."""


class StructuralError(JuliaflowError):
    """Tree bookkeeping is broken (missing image, bad level, ...)."""


class FrontierError(JuliaflowError):
    """Operation needs children of a vertex at the deepest constructed level."""


class InsufficientDepthError(JuliaflowError):
    """End prefixes too shallow to decide divergence."""


class NonSmoothRayError(JuliaflowError):
    """Ray tracing stalled near a critical point of the potential."""


class TracingQualityError(JuliaflowError):
    """Too many sampled rays aborted as non-smooth."""


class MalformedDocumentError(JuliaflowError):
    """Tree document failed to parse or violates the schema."""
