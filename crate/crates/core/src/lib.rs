//! Gröbner bases over the rationals with a threaded Buchberger algorithm
//! that records the lineage of every basis element.
//!
//! ```
//! use tgb::cli::parse_input;
//! use tgb::threaded::{tgb, TgbOptions};
//!
//! let problem = parse_input("ring: Q[x,y,z]\norder: grevlex\ngens:\nx^2 - y\nx^3 - z\n").unwrap();
//! let options = TgbOptions { deterministic: true, ..TgbOptions::default() };
//! let run = tgb(&problem.generators, &problem.ring, &options).unwrap();
//! assert_eq!(run.table.pair_keys().count(), 2);
//! ```

pub mod buchberger;
pub mod cli;
pub mod error;
pub mod poly;
pub mod reduction;
pub mod threaded;

pub use error::{Error, ParseError, Result};
