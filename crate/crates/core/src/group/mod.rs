//! Finite split metabelian groups `H ⋊ C_m` in normal form.
//!
//! Every element is written uniquely as `y^t · x_0^{e_0} ⋯ x_{d-1}^{e_{d-1}}`
//! with `y` the top generator and the `x_i` generating the cyclic factors of
//! the abelian group `H`. Subgroups are explicit element sets, so anything
//! that enumerates is bounded by the group's enumeration cap.

mod action;
mod orders;
mod series;
mod split;
mod subgroup;

pub use action::ActionMatrix;
pub use orders::{is_prime, log_exact, prime_power, CyclicOrders, ExponentVector};
pub use split::{make_group, Construction, GroupElement, SplitGroup, DEFAULT_ENUMERATION_CAP};
pub use subgroup::Subgroup;
