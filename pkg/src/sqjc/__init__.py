"""Jaynes-Cummings cavity with squeezed-photon exchange: truncated
Fock-space builders, closed-form phase-transition results and an exact
diagonalization oracle."""
from .analytic import (
    BogoliubovResult,
    CriticalPoint,
    DegenerateInput,
    QuadraticCoeffs,
    SuperradiantParams,
    UnphysicalRegime,
    abc_coefficients,
    bogoliubov,
    critical_coupling,
    jcm_gap,
    normal_phase_coeffs,
    normal_phase_gap,
    rabi_critical_lambda,
    rabi_gap,
    superradiant_gap_generic,
    superradiant_gap_jcm,
    superradiant_gap_rabi,
    superradiant_setup,
    v_roots_caseA,
    v_roots_caseB,
    v_standard,
)
from .ed import (
    converged_spectrum,
    gap_scan,
    ground_observables,
    locate_gap_minimum,
    parity_resolved_gap,
    spectrum_ed,
)
from .fock import FockSpace, annihilation, herm_eigen, pauli_ops, tensor, unitary_exp
from .models import (
    ModelParams,
    RabiParams,
    build_displaced,
    build_generic_rabi,
    build_jcm,
    build_mjc,
    build_quadratic,
    build_rabi,
    squeeze_operator,
    squeezed_annihilation,
)
from .sweep import CSV_HEADER, ConfigError, Grid, SweepConfig, SweepRow, load_config, read_csv, run_sweep, write_csv

__version__ = "0.1.0"
