"""Conflict detection for shall-style natural-language requirements.

Pipeline: load dependency-parsed sentences (CoNLL-U), extract one semantic
tuple per requirement, then detect inconsistency, inclusion and interlock
conflicts between the tuples.
"""

from .conllu import (
    ConlluError,
    DependencyArc,
    ParsedSentence,
    Token,
    dump_conllu,
    find_arcs,
    load_conllu,
    loads_conllu,
)
from .detect import (
    Conflict,
    ConflictKind,
    DetectionResult,
    Edge,
    EdgeKind,
    InterlockGraph,
    check_pair_cross_group,
    check_pair_io,
    check_pair_same_group,
    detect,
    find_interlocks,
    preprocess,
    run_detection,
    simple_cycles,
)
from .evaluate import (
    EvaluationError,
    EvaluationResult,
    GoldEntry,
    GoldLabelSet,
    TupleScore,
    evaluate,
    score_tuples,
)
from .extract import (
    ExtractionError,
    ExtractionTrace,
    PrecheckFlag,
    extract,
    identify_agent,
    identify_event,
    identify_input_output,
    identify_operation,
    identify_restriction,
    parse_entity,
    precheck,
)
from .model import (
    Condition,
    Connective,
    Entity,
    EventKind,
    EventSpec,
    OperationMode,
    OperationSpec,
    Requirement,
    parse_requirement,
    serialize_requirement,
    validate_requirement_set,
)
from .semantics import (
    OpRelation,
    SynonymLexicon,
    entity_eq,
    entity_includes,
    entityset_eq,
    entityset_includes,
    event_eq,
    event_includes,
    event_self_contradicts,
    op_relation,
    restriction_contradicts,
    restriction_eq,
    restriction_includes,
    string_eq,
)

__version__ = "0.1.0"
