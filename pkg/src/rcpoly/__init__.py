"""Exact Rademacher-Carlitz polynomials, Dedekind-type sums and integer-point transforms."""
from .exact import (Rational, bernoulli2_periodized, bracket_mod, ceil, floor, frac, mod_inverse,
                    parse_rational, sawtooth)
from .laurent import LaurentPoly2, poly_arith
from .ratgen import (GFTerm, RationalGF, canonicalize_factor, combine_over_common_denominator,
                     gf_add, gf_as_polynomial, gf_equal, gf_eval)
from .carlitz import (LinearMapQ, dedekind_carlitz, inverse_map, rc, segment_lattice_point,
                      verify_carlitz_reciprocity, verify_thm1)
from .dedekind import (dedekind_rademacher, dedekind_sum, normalize_rademacher, rademacher_xy,
                       verify_dedekind_reciprocity, verify_lemma4a, verify_lemma4b,
                       verify_rademacher_reciprocity, verify_thm3)
from .geometry import ConvexRationalPolygon, RationalPoint, brute_force_points, segment_ipt
from .cones import (HalfOpenCone, brion_ipt, cone_ipt, parallelogram_points,
                    verify_conic_decomposition, vertex_cones)
from .triangles import (RightTriangleParams, box_decomposition_ipt, polygon_ipt,
                        triangle_ipt_thm2)
from .report import VerificationReport

__version__ = "0.1.0"
