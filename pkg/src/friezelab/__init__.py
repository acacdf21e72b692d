"""friezelab: exact strip-isometry algebra, the seven frieze types,
pattern synthesis, raster symmetry detection and cylinder wrapping."""

from .cylinder import CylinderReport, format_cylinder_report, wrap_report, wrap_texture
from .detect import (
    SymmetryReport,
    classify_image,
    find_period,
    format_report,
    probe_symmetry,
    transform_image,
)
from .errors import (
    FriezeError,
    InconsistentFlags,
    MalformedMotif,
    MalformedPgm,
    NoPeriod,
    NonIntegralRaster,
    NotAFrieze,
    OddPeriodGlide,
    OutOfCell,
    PeriodMismatch,
)
from .group import (
    FriezeGroup,
    SymmetryFlags,
    TypeTag,
    contains,
    elements_in_window,
    format_group,
    from_generators,
    parse_group,
    parse_tag,
    standard_generators,
    standard_group,
    tag_from_flags,
)
from .image import Image, read_pgm, write_pgm
from .isometry import (
    IDENTITY,
    CanonicalForm,
    Kind,
    R,
    S,
    StripIsometry,
    T,
    V,
    apply,
    canonical,
    compose,
    format_isometry,
    from_canonical,
    inverse,
    parse_isometry,
)
from .motif import Motif, Primitive, asymmetric_flag_motif, parse_motif, sinusoid_motif
from .synthesis import Scene, generate, rasterize, render_svg
from .verify import render_table1, render_table2, verify_table

__version__ = "0.1.0"
