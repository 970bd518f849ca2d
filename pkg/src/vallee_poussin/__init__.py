"""de la Vallee Poussin sums of Fourier series and bounds on their deviation."""

from .bounds import (
    BoundReport, BestApproxResult, CONVEX_C_FACTOR, GENERAL_C_FACTOR, THEOREM1_WEIGHTS,
    VP_HALF_NORM, best_approx_oracle, classical_vp_bound, convex_c_bound, efimov_A,
    general_c_bound, holder_two_sided, korneichuk_concave, korneichuk_general,
    lebesgue_analog_bound, theorem1_bound, theorem1_deltas,
)
from .deviation import (
    DeviationSample, class_members, deviation_direct, deviation_integral, empirical_class_sup, sup_deviation,
)
from .errors import (
    ArgumentError, ClassMembershipError, ConfigError, ConvergenceError, EvaluationError,
    OrderExceededError, RootNotFoundError, ValleePoussinError,
)
from .modulus import (
    FAMILIES, ModulusProfile, TestFunctionSpec, estimate_modulus, is_concave_profile,
    make_test_function, modulus_profile,
)
from .quadrature import QuadratureConfig
from .specfun import ZeroBracket, find_tau, g_alt, g_closed, g_direct, si
from .trigsum import (
    PeriodicFunction, TrigCoefficients, fejer_sum, fourier_coefficients, lebesgue_constant,
    partial_sum, vp_kernel, vp_kernel_sum, vp_operator_norm, vp_sum, vp_weights,
)

__version__ = "0.1.0"
