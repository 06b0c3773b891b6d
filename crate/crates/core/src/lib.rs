pub mod decimal;
pub mod entropy;
pub mod error;
pub mod maps;
pub mod symbolic;
pub mod oracle;
pub mod bench;
pub mod sweep;
pub mod cli;
