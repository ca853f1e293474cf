//! Threaded Buchberger algorithm with lineage tracking.
//!
//! Worker threads share two structures: the lineage table, mapping each
//! basis element's lineage to its value, and a task queue of S-pairs still
//! to be reduced. Each worker takes a task, reduces the S-polynomial of its
//! captured parents against a snapshot of the table and, when the remainder
//! is nonzero, stores it under the pair of parent lineages and queues a task
//! for it against every element already present. A constant remainder
//! stops task creation.

mod engine;
mod lineage;
mod table;

pub use engine::{tgb, tgb_with_trace, Outcome, RunStatus, Task, TgbOptions, TgbRun};
pub use lineage::{task_key, Lineage};
pub use table::LineageTable;
