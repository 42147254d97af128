//! Exact computation in free commutative Rota-Baxter algebras (mixable
//! shuffle product), λ-Hurwitz series algebras, and the mixed distributive
//! law `β : Ш(A^ℕ) → Ш(A)^ℕ` relating them.
//!
//! Every algebra is described by an [`algebra::AlgebraHandle`] such as
//! `sha(poly(x,y))` or `hur(poly(x),4)`; elements carry no type of their own
//! and are interpreted through the handle they are used with.

pub mod algebra;
pub mod cli;
pub mod coeffs;
pub mod distlaw;
pub mod free_rb;
pub mod hurwitz;
pub mod laws;
pub mod text;
