//! Bench-only crate; see the `eval` and `simulate` targets.
