use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pattern period must be a positive 32-bit integer, got {0}")]
    InvalidPeriod(i64),
    #[error("tower strength t and required signal r must satisfy 1 <= t <= {max_t} and r >= 1, got t={t}, r={r}")]
    InvalidSpec { t: u32, r: u32, max_t: u32 },
    #[error("window bounds are inverted: x in [{x_min}, {x_max}], y in [{y_min}, {y_max}]")]
    InvalidWindow {
        x_min: i64,
        x_max: i64,
        y_min: i64,
        y_max: i64,
    },
    #[error("coordinate arithmetic overflowed")]
    Overflow,
    #[error("no closed-form density is known for (t={t}, r={r})")]
    OutOfDomain { t: u32, r: u32 },
    #[error("viewport must be at least 1x1, got {width}x{height}")]
    EmptyViewport { width: u64, height: u64 },
    #[error("viewport of {cells} cells exceeds the limit of {limit}")]
    ViewportTooLarge { cells: u128, limit: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
