use thiserror::Error;

#[derive(Error, Debug)]
pub enum Error {
    #[error("qubit count mismatch: {0} vs {1}")]
    QubitMismatch(u32, u32),
    #[error("index {index} out of range for {n_qubits} qubits (must be < 4^N = {max})")]
    IndexOutOfRange { index: u64, n_qubits: u32, max: u64 },
    #[error("resource cap exceeded: {what} = {requested} > cap {cap}")]
    CapExceeded { what: &'static str, requested: u64, cap: u64 },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("search exhausted after exploring {explored} elements (max depth {max_depth})")]
    SearchExhausted { explored: usize, max_depth: usize },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Error {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
