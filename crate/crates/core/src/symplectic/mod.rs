//! The L/R blob algebra `b^x_m` and its affine-symmetric periodic realisation
//! `b^φ_{2m}`.

pub mod bprime;
pub mod fold;
pub mod localise;
pub mod presentation;
pub mod rect;
pub mod sample;
pub mod strip;
pub mod turn;
pub mod xdiagram;

pub use bprime::{bprime_mul, compose_bprime, fold_blob_mu, is_symmetric, symmetric_tl_diagrams, BPrimeElement};
pub use fold::{compose_x, fold_nu, unfold_mux, unfold_raw, x_e, x_f, x_product, XElement};
pub use localise::{
    e_u2_u4, find_localisation_example, globalise_insert, in_idempotent_subalgebra, is_in_bprime_n, localisation_commutes,
    localise, localise_strip, phi_mul, rho1,
    rho1_commutes, LocalisationExample, PhiElement, Side,
};
pub use presentation::{verify_affine_c, Target};
pub use sample::{Sample, Sampler};
pub use rect::{big_compose, rect_compose, rect_reduce, rect_reduce_big, rect_reduce_first};
pub use strip::{compose_phi, enumerate_bphi, strip_e, strip_f, strip_u, End, FeatureCount, Strip, StripJson};
pub use turn::{Turn, TurnString};
pub use xdiagram::{enumerate_bx, enumerate_bx_prime, has_features, non_injectivity_witness};
