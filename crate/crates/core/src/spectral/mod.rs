//! The two spectral estimators: phases from the Magnetic Laplacian and
//! levels from the Trophic Laplacian.

mod magnetic;
mod trophic;

pub use magnetic::{
    build_magnetic_laplacian, frustration, magnetic_algorithm, quadratic_form, smallest_eigenpair,
    wrap_angle, Eigenpair, MagneticLaplacian, PhaseAssignment, SpectralWarning, DEGENERACY_GAP,
    ZERO_MODULUS,
};
pub use trophic::{
    build_trophic_system, trophic_algorithm, trophic_incoherence, TrophicAssignment, TrophicSystem,
    RESIDUAL_TOL,
};
