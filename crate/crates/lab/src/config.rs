use fricke_core::interval::pow2;
use fricke_core::variety::NumericConfig;
use num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Machine,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub precision_bits: u32,
    pub prime_bound: u64,
    pub seed: u64,
    pub output: OutputMode,
    /// Print raw interval endpoints instead of midpoint ± radius.
    pub raw: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            precision_bits: 128,
            prime_bound: 500,
            seed: DEFAULT_SEED,
            output: OutputMode::Text,
            raw: false,
        }
    }
}

pub const DEFAULT_SEED: u64 = 42;

impl RunConfig {
    pub fn machine(&self) -> bool {
        self.output == OutputMode::Machine
    }

    /// Width target `2^-precision_bits`.
    pub fn precision(&self) -> BigRational {
        pow2(-i64::from(self.precision_bits))
    }

    pub fn numeric(&self) -> NumericConfig {
        NumericConfig {
            bits: self.precision_bits,
            ..NumericConfig::default()
        }
    }
}
