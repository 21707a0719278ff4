use num_bigint::BigInt;
pub type IntVector = Vec<BigInt>;
#[derive(Clone)]
pub struct IntMatrix;
#[derive(Clone)]
pub struct RatMatrix;
