"""Numerical toolkit for anti-de Sitter geometry and its conformal boundary.

The ambient model is R^{2,n} with the signature-(2,n) form; on top of it the
package provides coordinate models and conversions, causal classification,
invisible domains of sampled achronal limit sets, a certified lower-bound
estimator of cosmological time, the geodesic flow with its limit maps and
loxodromic spectral analysis, and numeric certificates that Fuchsian
representations expand boundary metrics at the exact exp(2t) rate.
"""

from .config import (ALGEBRAIC_TOL, BISECTION_TOL, BOUNDARY_BAND,
                     DERIVED_TOL, default_tol)
from .quadratic import (GeometryError, Isometry, NotAnIsometry,
                        NotIdentityComponent, RayPoint, certify_isometry,
                        chordal_distance, classify, form_matrix, inner,
                        q_eval, ray, LIGHTLIKE, SPACELIKE, TIMELIKE, ZERO)
from .models import (ConformalAdsPoint, EinPoint, UniversalPoint, TWO_PI,
                     ads_point, ads_to_conformal, affine_chart, antipode,
                     conformal_to_ads, deck, ein_to_null_ray, geodesic_point,
                     hemisphere_embed, lift, normalize_tangent,
                     normalizer_to_origin, null_ray_to_einstein, wrap_angle)
from .causality import (CausalRelation, ClassReport, GraphCheck,
                        graph_is_achronal, klein_relation, set_causal_class,
                        spherical_distance, universal_relation, ACAUSAL,
                        ACHRONAL_NOT_ACAUSAL, FIRST_FUTURE, FIRST_PAST,
                        LIGHTLIKE_RELATED, NOT_ACHRONAL, NOT_APPLICABLE,
                        TIMELIKE_RELATED, UNRELATED)
from .invisible import (AchronalSample, BOUNDARY, INSIDE, OUTSIDE,
                        boundary_directions, conformal_probe, contains,
                        convexity_probe, envelope, envelope_grid,
                        is_pure_lightlike, klein_membership)
from .cosmotime import (CtEstimate, cosmological_time_estimate,
                        future_unit_timelike, past_direction_grid,
                        probe_exit_lengths, tangent_frame,
                        timelike_exit_length)
from .flows import (DecayReport, LoxodromicData, NotLoxodromic,
                    UnitSpacelikeTangent, embed_fixing_v_axis,
                    endpoint_rays, flip, flow, from_endpoints,
                    hyperbolic_distance, limit_endpoints,
                    loxodromic_analysis, power_iterate,
                    power_iteration_distances, project_to_cone,
                    stable_contraction_check, synchronizing_shift,
                    unit_spacelike_tangent)
from .fuchsian import (CertificateReport, FixedPointCertificate,
                       FuchsianRep, attractive_fixed_point_ein,
                       cone_tangent_at, conjugate_rep, default_v_axis,
                       expansion_ratio, fuchsian_embed, fuchsian_limit_set,
                       fuchsian_rep, g_metric, orthogonal_null_frame,
                       quasi_fuchsian_certificate, sample_consistency_gap,
                       section_pushforward, validate_rep)
from .sampling import hemisphere_grid, sphere_grid
from .figures import render_domain_svg

__version__ = "0.1.0"
