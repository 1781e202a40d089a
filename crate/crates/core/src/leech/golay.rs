use serde::{Deserialize, Serialize};

/// Symbols of 𝔽₃ are stored as `0, 1, 2`.
pub type Word = [u8; 12];

/// Redundancy part of the standard `[I₆ | A]` generator of the extended
/// ternary Golay code; `A` is the bordered Paley matrix of order 6.
const PALEY_BORDER: [[u8; 6]; 6] = [
    [0, 1, 1, 1, 1, 1],
    [1, 0, 1, 2, 2, 1],
    [1, 1, 0, 1, 2, 2],
    [1, 2, 1, 0, 1, 2],
    [1, 2, 2, 1, 0, 1],
    [1, 1, 2, 2, 1, 0],
];

/// The extended ternary Golay code `[12, 6, 6]` over 𝔽₃, given by six
/// generator rows.
///
/// The code produced by [`GolayTernary::standard`] contains the all-ones
/// word; the Leech construction depends on that.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GolayTernary {
    pub rows: [Word; 6],
}

/// The generator rows fail one of the code checks.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GolayError {
    #[error("generator entry {0} is not in F3")]
    BadSymbol(u8),
    #[error("code has {0} distinct words, expected 729")]
    WrongSize(usize),
    #[error("codeword of weight {0} found; weights must lie in {{0, 6, 9, 12}}")]
    BadWeight(usize),
    #[error("code is not self-orthogonal")]
    NotSelfDual,
    #[error("code does not contain the all-ones word")]
    MissingAllOnes,
}

pub fn weight(w: &Word) -> usize {
    w.iter().filter(|&&x| x != 0).count()
}

fn dot(x: &Word, y: &Word) -> u8 {
    (x.iter().zip(y).map(|(&a, &b)| a as u32 * b as u32).sum::<u32>() % 3) as u8
}

impl GolayTernary {
    /// `[I₆ | A]` after a monomial sign change that puts `𝟏` in the code.
    pub fn standard() -> Self {
        let mut rows = [[0u8; 12]; 6];
        for (k, row) in rows.iter_mut().enumerate() {
            row[k] = 1;
            row[6..].copy_from_slice(&PALEY_BORDER[k]);
        }
        let raw = GolayTernary { rows };
        if raw.contains(&[1; 12]) {
            return raw;
        }
        // Any weight-12 word becomes 𝟏 after multiplying coordinate i by
        // its i-th entry (a sign, since 2 = -1). Sign changes keep the form,
        // hence self-duality and the weight enumerator.
        let flip = raw
            .codewords()
            .into_iter()
            .filter(|w| weight(w) == 12)
            .min()
            .expect("Golay code has words of full weight");
        let mut rows = raw.rows;
        for row in rows.iter_mut() {
            for (x, s) in row.iter_mut().zip(flip) {
                *x = (*x * s) % 3;
            }
        }
        GolayTernary { rows }
    }

    /// All `3⁶` codewords, ordered by their message digits.
    pub fn codewords(&self) -> Vec<Word> {
        let mut out = Vec::with_capacity(729);
        for msg in 0..729u32 {
            let mut w = [0u8; 12];
            let mut rest = msg;
            for row in &self.rows {
                let c = (rest % 3) as u8;
                rest /= 3;
                for (x, r) in w.iter_mut().zip(row) {
                    *x = (*x + c * r) % 3;
                }
            }
            out.push(w);
        }
        out
    }

    /// Membership via orthogonality to the six rows, valid once the code is
    /// known to be self-dual.
    pub fn contains(&self, w: &Word) -> bool {
        self.rows.iter().all(|r| dot(r, w) == 0)
    }

    /// Size 729, weights in `{0, 6, 9, 12}`, self-duality and `𝟏 ∈ C`.
    pub fn verify(&self) -> Result<(), GolayError> {
        for row in &self.rows {
            if let Some(&s) = row.iter().find(|&&x| x > 2) {
                return Err(GolayError::BadSymbol(s));
            }
        }
        let words = self.codewords();
        let mut distinct = words.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != 729 {
            return Err(GolayError::WrongSize(distinct.len()));
        }
        if let Some(w) = words.iter().find(|w| ![0, 6, 9, 12].contains(&weight(w))) {
            return Err(GolayError::BadWeight(weight(w)));
        }
        for a in &self.rows {
            for b in &self.rows {
                if dot(a, b) != 0 {
                    return Err(GolayError::NotSelfDual);
                }
            }
        }
        if !self.contains(&[1; 12]) {
            return Err(GolayError::MissingAllOnes);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_code_verifies() {
        GolayTernary::standard().verify().unwrap();
    }

    #[test]
    fn weight_enumerator() {
        let mut counts = [0usize; 13];
        for w in GolayTernary::standard().codewords() {
            counts[weight(&w)] += 1;
        }
        assert_eq!(counts[0], 1);
        assert_eq!(counts[6], 264);
        assert_eq!(counts[9], 440);
        assert_eq!(counts[12], 24);
        assert_eq!(counts.iter().sum::<usize>(), 729);
    }

    #[test]
    fn every_word_sums_to_zero() {
        for w in GolayTernary::standard().codewords() {
            assert_eq!(w.iter().map(|&x| x as u32).sum::<u32>() % 3, 0);
        }
    }
}
