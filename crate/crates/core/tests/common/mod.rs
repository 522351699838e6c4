pub mod bareiss;
pub mod naive;
