from .LabError import (
    LabError,
    DegenerateParameters,
    SingularLine,
    NoOval,
    LogDomain,
    DivisionByZero,
    DegenerateMap,
    ImpossibleDistribution,
    QuadratureFailure,
    LostBracket,
    StepFailure,
    EscapedAnnulus,
    SingularLineHit,
    NoSignChange,
)

__all__ = [
    'LabError',
    'DegenerateParameters',
    'SingularLine',
    'NoOval',
    'LogDomain',
    'DivisionByZero',
    'DegenerateMap',
    'ImpossibleDistribution',
    'QuadratureFailure',
    'LostBracket',
    'StepFailure',
    'EscapedAnnulus',
    'SingularLineHit',
    'NoSignChange',
]
