"""legrid: classical and relative Legendrian/transverse knot
invariants on grid diagrams, with grid moves, a Seifert-surface
framing ledger and a crossing-event simulator."""

from .errors import (
    BadCell,
    BaseMismatch,
    InconsistentProfile,
    InterleavingSpans,
    LegridError,
    LengthMismatch,
    MultipleSingularClasps,
    NotAPermutation,
    OracleMismatch,
    ParseError,
    SameComponent,
    ScriptStepError,
    SharedCell,
    SizeMismatch,
    UnequalDegrees,
    UnknownComponent,
)
from .grid import (
    Component,
    Convention,
    Crossing,
    CuspCounts,
    FrontData,
    GridDiagram,
    components,
    grid_to_json,
    grid_to_text,
    linking_number,
    new_grid,
    parse_grid,
    reverse_component,
    to_front,
    writhe,
)
from .invariants import (
    ClassicalInvariants,
    OrientationFlag,
    RelativeInvariants,
    classical,
    relative_invariants,
    rot,
    tb_front,
    tb_grid_oracle,
)
from .ledger import (
    ContactHomologyModel,
    IntersectionProfile,
    RelativeSurfaceClass,
    ambiguity,
    new_model,
    rot_diff,
    sl_diff,
    tb_diff,
    trivialization_invariance_check,
    twist_transfer,
)
from .moves import (
    Commute,
    Destabilize,
    GridMove,
    LegendrianStab,
    MoveScript,
    ScriptResult,
    Stabilize,
    TraceStep,
    Translate,
    apply_move,
    apply_script,
    column_map,
    commute,
    destabilize_grid,
    legendrian_stabilize,
    move_to_text,
    parse_move_script,
    stabilize_grid,
    translate,
)
from .simulator import (
    CrossingEvent,
    FramedPairState,
    IntersectionPattern,
    cross,
    init_state,
    parse_event_script,
    resolve_pattern,
    run_trace,
)

__version__ = "0.1.0"
