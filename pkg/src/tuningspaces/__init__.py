"""Exact tuning systems and note-class group verification.

Builds tuning spaces (n-TET, n-EDO, and custom step sets) over exact
arithmetic, exposes octave-equivalence notes with their harmonic
addition, parses and renders 12-class note names, and machine-checks by
brute force that the note classes of any space form the cyclic group of
order n.  Everything is immutable and pure, hence safe to share across
threads.
"""

from .errors import (
    ClosureViolation,
    DefinitionError,
    ExactnessError,
    MonotonicityViolation,
    ParseError,
    TuningError,
)
from .exact import Exact, as_exact
from .formats import (
    FrequencyTable,
    TableRow,
    TuningDefinition,
    build_table,
    emit_table,
    export_scl,
    import_scl,
    load_tuning,
    parse_definition,
)
from .harmony import (
    HarmonyGroup,
    IsomorphismReport,
    harmonic_add,
    harmonic_add_index,
    harmonic_inverse,
    harmonic_inverse_index,
    harmony_group,
    note_from_steps,
    step_on_note,
    verify_group,
    verify_pcit,
)
from .notation import (
    A_ROOTED,
    C_ROOTED,
    NamingConvention,
    NoteName,
    enharmonic_spellings,
    parse_note_name,
    render_note_name,
)
from .notes import (
    Note,
    NoteSet,
    concert_a,
    members_of,
    middle_c,
    note_of,
    note_set,
    octave_equivalent,
    octave_equivalent_by_frequency,
)
from .pitch import OctaveInterval, as_pitch, locate_octave, octave_of
from .tuning import (
    PitchCoordinate,
    Ratio,
    RootOffset,
    Step,
    StepSet,
    TuningSpace,
    describe,
    make_custom,
    make_nedo,
    make_ntet,
)

__version__ = "0.1.0"

__all__ = [
    "A_ROOTED",
    "C_ROOTED",
    "ClosureViolation",
    "DefinitionError",
    "Exact",
    "ExactnessError",
    "FrequencyTable",
    "HarmonyGroup",
    "IsomorphismReport",
    "MonotonicityViolation",
    "NamingConvention",
    "Note",
    "NoteName",
    "NoteSet",
    "OctaveInterval",
    "ParseError",
    "PitchCoordinate",
    "Ratio",
    "RootOffset",
    "Step",
    "StepSet",
    "TableRow",
    "TuningDefinition",
    "TuningError",
    "TuningSpace",
    "as_exact",
    "as_pitch",
    "build_table",
    "concert_a",
    "describe",
    "emit_table",
    "enharmonic_spellings",
    "export_scl",
    "harmonic_add",
    "harmonic_add_index",
    "harmonic_inverse",
    "harmonic_inverse_index",
    "harmony_group",
    "import_scl",
    "load_tuning",
    "locate_octave",
    "make_custom",
    "make_nedo",
    "make_ntet",
    "members_of",
    "middle_c",
    "note_from_steps",
    "note_of",
    "note_set",
    "octave_equivalent",
    "octave_equivalent_by_frequency",
    "octave_of",
    "parse_definition",
    "parse_note_name",
    "render_note_name",
    "step_on_note",
    "verify_group",
    "verify_pcit",
]
