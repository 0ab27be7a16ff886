use std::fmt;

/// Invariant-factor presentation `C_{d_1} × … × C_{d_k}` with `d_1 | d_2 | … | d_k`,
/// each `d_i > 1`, together with one generator per factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianStructure<T> {
    pub invariant_factors: Vec<u64>,
    pub generators: Vec<T>,
}

impl<T> AbelianStructure<T> {
    pub fn trivial() -> Self {
        AbelianStructure {
            invariant_factors: Vec::new(),
            generators: Vec::new(),
        }
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors.len()
    }

    pub fn is_divisibility_chain(&self) -> bool {
        self.invariant_factors.iter().all(|&d| d > 1)
            && self.invariant_factors.windows(2).all(|w| w[1] % w[0] == 0)
    }

    pub fn map<U>(self, f: impl FnMut(T) -> U) -> AbelianStructure<U> {
        AbelianStructure {
            invariant_factors: self.invariant_factors,
            generators: self.generators.into_iter().map(f).collect(),
        }
    }

    /// e.g. `"C2 x C4"`, or `"1"` for the trivial group.
    pub fn describe(&self) -> String {
        if self.is_trivial() {
            return "1".to_string();
        }
        self.invariant_factors
            .iter()
            .map(|d| format!("C{d}"))
            .collect::<Vec<_>>()
            .join(" x ")
    }
}

impl<T> fmt::Display for AbelianStructure<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}
