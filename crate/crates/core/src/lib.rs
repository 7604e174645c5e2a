pub mod budget;
pub mod cli;
pub mod error;
pub mod gcm;
pub mod growth;
pub mod hyperbolic;
pub mod poly;
pub mod roots;
pub mod verdict;
pub mod weyl;

pub use budget::Budget;
pub use error::{Error, Result};
