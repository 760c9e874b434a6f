//! Singularity invariants of monomial pairs at the origin: mld, lct, the jet
//! functions `s_m` and `z_m`, md of the lct, heights and bound translations.

pub mod bounds;
pub mod contact;
pub mod enumerate;
pub mod height;
pub mod lct;
pub mod mld;
pub mod result;
pub mod scan;

pub use bounds::{bound_divisor_to_jet, bound_jet_to_divisor, bound_lct_translation};
pub use contact::{contact_codim, s_m, z_m, ContactCodim};
pub use height::height_monomial;
pub use lct::{lct_attaining_order, lct_via_jets, md_lct_toric, toric_lct_divisors, z_sweep, MdOutcome};
pub use mld::{default_box_bound, mld_toric, mld_toric_with_box, mld_via_jets, mld_via_jets_uncertified};
pub use result::{Certificate, InvariantResult, InvariantValue, JetOrderVector, Route, Witness};
pub use scan::{scan_md_bound, ScanMode, ScanReport};
