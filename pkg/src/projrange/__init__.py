"""Numerical range of the product of two orthogonal projections."""
from .ellipse import (EllipseHull, SupportProfile, alpha_lambda, boundary_point, ellipse_support,
                      full_region_support, hull_contains, hull_support, lambda_alpha, support_point)
from .errors import *  # noqa: F401,F403
from .linalg import OrthonormalBasis, ProjectionPair, five_part_decomposition, hermitian_eig
from .numrange import (HalmosBlockForm, RangeBoundary, halmos_blocks, mc_oracle, numerical_radius,
                       predicted_closure, rectangle_check, sector_angle, support_operator,
                       trace_boundary)
from .pairs import random_pair, random_pair_family, two_lines
from .recovery import (RadiiReport, full_recovery, radii_report, real_part_radius,
                       recover_upper_spectrum, recovery_profile)
from .spectral import (SpectrumSet, complement_map, construct_pair, friedrichs_cosine,
                       product_spectrum)
from .alternating import AlternatingRun, DichotomyReport, alternating_iterate, dichotomy_report
from .fourier import AnnihilationReport, annihilation_check, dft_matrix

__version__ = "0.1.0"
