//! Exact scalars, matrices and structure-constant tensors.

pub mod matrix;
pub mod rational;
pub mod tensor;
pub mod vector;

pub use matrix::Matrix;
pub use rational::Rational;
pub use tensor::StructureTensor;
pub use vector::SparseVec;
