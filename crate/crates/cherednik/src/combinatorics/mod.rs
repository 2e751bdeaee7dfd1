//! Partitions, multipartitions, boxes, standard Young tableaux,
//! removable/addable boxes, Littlewood–Richardson coefficients and Young
//! chains. Everything here is a pure function over immutable values.

mod chains;
mod lr;
mod multipartition;
mod partition;
mod tableau;

pub use chains::{ChainTableau, SetPartition, YoungChain};
pub use lr::{lr_coefficient, multi_lr_coefficient};
pub use multipartition::{BoxPos, Multipartition};
pub use partition::Partition;
pub use tableau::{enumerate_syt, StandardTableau};
