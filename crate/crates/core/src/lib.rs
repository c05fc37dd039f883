pub mod coxeter;
pub mod laurent;
pub mod numeric;
pub mod tableaux;
pub mod kl;
pub mod wgraph;
pub mod jones;
pub mod quotient;
pub mod cli;
