//! The Hopf algebra of signed permutations: products, coproduct, the
//! special vectors, `Phi`, the derivation, and the checks tying them
//! together.

mod vector;

pub mod derivation;
pub mod products;
pub mod special;
pub mod verify;

pub use derivation::{descent_linear, partial, partial_i, partial_matrix, SignRule};
pub use products::{convolution, coproduct, iota, shuffle, ShuffleSelector, TensorTerm};
pub use special::{i_vector, j_vector, p_vector, phi, phi_tilde, q_vector};
pub use vector::{DescentVector, PermVector};
