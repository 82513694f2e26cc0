//! Exact symbolic engine for local Hecke algebras of Siegel modular forms,
//! their Satake images, Rankin convolution series and the L-function data
//! attached to them.

pub mod algebra;
pub mod error;
pub mod hecke;
pub mod lifts;
pub mod motives;
pub mod rankin;

pub use error::{Error, Result};

/// Caps the global rayon pool at `HECKELAB_THREADS` when set. Returns the
/// cap, or `None` when the variable is absent.
pub fn configure_threads() -> Result<Option<usize>> {
    let Ok(v) = std::env::var("HECKELAB_THREADS") else {
        return Ok(None);
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::InvalidInput(format!("HECKELAB_THREADS={v:?} is not a positive integer")))?;
    // a pool that already exists keeps its size
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(Some(n))
}
