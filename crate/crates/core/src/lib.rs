//! Exact computer algebra for the Jordanian quantum algebra U_h(sl(2)).
//!
//! The crate constructs finite dimensional representation matrices of the
//! generators H, X, Y (and T = e^{hX}), coupled bases of tensor products,
//! and Clebsch-Gordan coefficient tables, all as exact polynomials in the
//! deformation parameter h. Every algebraic identity the construction rests
//! on can be machine-verified, exactly, through the `verify_*` entry points.
//!
//! Module map:
//!
//! - [`exact`] — the arithmetic kernel: arbitrary-precision rationals,
//!   ℚ-linear combinations of square roots ([`exact::Radical`]), polynomials
//!   in h ([`exact::HPoly`]) and dense matrices over them
//!   ([`exact::PolyMatrix`]).
//! - [`sl2`] — classical sl(2) representation theory: e-basis and v-basis
//!   matrices, α-factors, and su(2) Clebsch-Gordan coefficients with an
//!   independent lowering-operator oracle.
//! - [`rep`] — irreducible representations of U_h(sl(2)): closed-form X and
//!   Y matrices, terminating series of nilpotent matrices, the nonlinear map
//!   back to classical sl(2), and verifiers for the defining relations.
//! - [`tensor`] — tensor products: coproduct matrices, the a/b coupling
//!   coefficients, the w-basis and its skew-transpose inverse, and the
//!   two-variable Pochhammer sum identity behind it.
//! - [`cgc`] — Clebsch-Gordan coefficients of U_h(sl(2)): the coupled-basis
//!   table, structure checks, skew-orthogonality, and the block
//!   diagonalization certificate of the tensor product decomposition.
//! - [`report`] — structured pass/fail reports produced by the verifiers.
//!
//! All values are immutable after construction and all operations are pure
//! functions; everything is `Send + Sync`.

pub mod cgc;
pub mod exact;
pub mod rep;
pub mod report;
pub mod sl2;
pub mod tensor;
