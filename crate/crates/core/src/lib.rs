//! Exact enumeration, bijections and generating functions for Beck-type
//! partition identities.

pub mod bijections;
pub mod decorated;
pub mod diagram;
pub mod error;
pub mod families;
pub mod membership;
pub mod parallel;
pub mod partition;
pub mod qseries;
pub mod stats;
pub mod verify;
pub mod xi;

pub use decorated::{DecoratedPartition, Decoration, RectanglePair};
pub use error::{Error, Result};
pub use families::{FamilyTag, PairSetTag};
pub use membership::PlainFamily;
pub use parallel::Strategy;
pub use partition::{parse_partition, Composition, Notation, Partition};
pub use qseries::{GfName, TruncatedSeries};
pub use verify::{Grid, Identity, VerificationReport};
pub use xi::{xi, xi_forward, xi_inverse, XiTrace};
