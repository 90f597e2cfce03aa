use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::Error::InvalidArgument(::alloc::format!($($arg)*))
    };
}

macro_rules! limit {
    ($($arg:tt)*) => {
        $crate::Error::ResourceLimit(::alloc::format!($($arg)*))
    };
}

pub(crate) use invalid;
pub(crate) use limit;
