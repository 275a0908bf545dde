#[rustfmt::skip]
pub mod golden;
