//! Quadratic normalisation tables: rewriting, verification and the
//! conditions on breadth and units.

mod conditions;
mod rewrite;
mod table;
mod verify;

pub use conditions::{Bound, Breadth, DEFAULT_BREADTH_CAP, UNIT_CHECK_LEN};
pub use rewrite::{Normalizer, DEFAULT_NODE_BUDGET};
pub(crate) use table::strip_comment;
pub use table::NormTable;
pub use verify::{AxiomFailure, ConfluenceFailure, NormalisationReport, MAX_WITNESSES};
