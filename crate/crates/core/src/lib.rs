//! Exact Kauffman bracket and Jones polynomial for link diagrams in the solid
//! torus, with crossing classification, diagram rewrites and batch checks of
//! the span bounds that tie the bracket to the crossing number.
//!
//! A diagram lives in an annulus: a plane diagram with a marked puncture face
//! (the core of the torus) and a marked outer face. State circles winding
//! around the puncture pick up a factor `t`.
//!
//! ```
//! use solidtorus::{diagram::parse_diagram, skein::bracket};
//!
//! let curl = parse_diagram("X 0: 1 1 2 2\nouter: 0.1\n").unwrap();
//! assert_eq!(bracket(&curl).unwrap().to_string(), "-1*A^3");
//! ```

pub mod corpus;
pub mod crossing;
pub mod diagram;
pub mod error;
pub mod generate;
pub mod moves;
pub mod poly;
pub mod skein;
pub mod verify;

pub use diagram::{parse_diagram, AnnularDiagram};
pub use error::{Error, ParseError, Result};
pub use poly::{BigSkeinPolynomial, SkeinPolynomial};
