//! Characteristic forms built from even root factors.

pub mod bridge;
pub mod forms;
pub mod theta_bundle;

pub use bridge::{Combination, EvenSeries, PowerSumBridge};
pub use forms::{
    a_hat, a_hat_form, ch_tangent, ch_tensor_square, classical_l, l_hat, l_hat_form,
    LineBundleTerms,
};
pub use theta_bundle::{theta_element_ch, Level, ThetaElement};
