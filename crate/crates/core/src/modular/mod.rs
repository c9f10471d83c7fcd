//! Theta functions, the level-2 modular forms and the `P₁`/`P₂` machinery.

pub mod decompose;
pub mod forms;
pub mod pseries;
pub mod theta;

pub use decompose::{
    b_basis_coefficients, basis_element, basis_expansion_check, check_reconstruction, decompose, reconstruct_p1, Basis,
    BasisCheck, Decomposition,
};
pub use forms::{modular_form, CongruenceGroup, FormName, ModularForm};
pub use pseries::{build_p1, build_p2, build_with, Case, PSeries, RatioKind, ThetaRatio};
pub use theta::{jacobi_identity_check, theta_null, theta_prime_null, Prefactor, ThetaIndex, ThetaValue};
