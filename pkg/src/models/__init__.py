# Data Models
from src.models.scaled import ScaledComplex
from src.models.params import MeixnerParams, PrecisionConfig, TurningPoints, CutSpec, Side, HalfPlane
from src.models.results import RegionKind, RegionTag, Formula, AuxValues, AsymptoticResult, OracleValue
from src.models.matrix import Matrix2C
from src.models.sweep import GridSpec, SweepSpec, CompareRow, RegionRow, OutputFormat
