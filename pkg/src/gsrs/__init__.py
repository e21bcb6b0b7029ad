"""Guruswami-Sudan list decoding of frequency-domain Reed-Solomon codes,
with re-encoding / periodicity-projection compression of the
interpolation system."""

from .code import RSParams, add_errors, encode, is_codeword, mds_interpolate, message_of
from .errors import CompressionError, NoSolutionError, OffsetNotCodewordWarning, ParameterError
from .factor import Candidate, brute_force_list, candidates, substitute_check, y_roots
from .field import FieldCtx, FieldError, build_field, field_spec, parse_field_spec
from .interp import (
    BivariatePoly,
    CompressionPlan,
    GsaParams,
    InterpolationSystem,
    build_compressed_system,
    build_system,
    decompress,
    gsa_params,
    hasse_eval,
    interpolate,
    locator_poly,
    periodic_locator_poly,
    solve_nullspace,
)
from .modify import (
    ModifiedVector,
    periodicity_projection,
    projection_operator,
    reencode,
    template_time_vector,
)
from .pipeline import MODES, PLAIN, BenchCase, DecodeConfig, DecodeReport, bench, decode
from .spectral import cyclic_convolution, dft, idft

__version__ = "0.1.0"

__all__ = [
    "BenchCase", "BivariatePoly", "Candidate", "CompressionError", "CompressionPlan",
    "DecodeConfig", "DecodeReport", "FieldCtx", "FieldError", "GsaParams",
    "InterpolationSystem", "MODES", "ModifiedVector", "NoSolutionError",
    "OffsetNotCodewordWarning", "PLAIN", "ParameterError", "RSParams",
    "add_errors", "bench", "brute_force_list", "build_compressed_system",
    "build_field", "build_system", "candidates", "cyclic_convolution", "decode",
    "decompress", "dft", "encode", "field_spec", "gsa_params", "hasse_eval", "idft",
    "interpolate", "is_codeword", "locator_poly", "mds_interpolate", "message_of",
    "periodic_locator_poly", "periodicity_projection", "projection_operator",
    "reencode", "solve_nullspace", "substitute_check", "template_time_vector", "y_roots",
]
