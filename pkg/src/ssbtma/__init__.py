"""Single-sideband time-modulated multibeam phased arrays driven by periodic Nyquist pulses."""

from .array import PatternSample, directivity, harmonic_factor, pattern, pattern_db, time_factor
from .design import (
    DesignError,
    DesignSpec,
    calibrate_amplitude,
    make_design,
    solve_rho_for_L,
    solve_xi,
    validate_placement,
)
from .efficiency import EfficiencyReport, power_harmonic, report
from .geometry import ArrayGeometry
from .modulation import (
    ExcitationMatrix,
    SteeringPlan,
    build_excitations,
    coeff_P,
    coeff_V,
    make_plan,
    steering_delays,
    synth_time,
)
from .pulse import PulseParams, eval_freq, eval_time, t_one_percent

__version__ = "0.1.0"
