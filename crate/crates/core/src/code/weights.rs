use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

/// Exact weight distribution A_0..A_n of an [n, k] code over GF(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDistribution {
    pub n: usize,
    pub k: usize,
    pub q: u64,
    counts: Vec<u128>,
}

impl WeightDistribution {
    pub fn from_counts(n: usize, k: usize, q: u64, counts: Vec<u128>) -> Self {
        let mut counts = counts;
        counts.resize(n + 1, 0);
        WeightDistribution { n, k, q, counts }
    }

    /// From (weight, count) pairs; unlisted weights are zero.
    pub fn from_pairs(n: usize, k: usize, q: u64, pairs: &[(usize, u128)]) -> Self {
        let mut counts = vec![0u128; n + 1];
        for &(w, c) in pairs {
            counts[w] += c;
        }
        WeightDistribution { n, k, q, counts }
    }

    pub fn zero_code(n: usize, q: u64) -> Self {
        Self::from_pairs(n, 0, q, &[(0, 1)])
    }

    pub fn get(&self, w: usize) -> u128 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u128] {
        &self.counts
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().sum()
    }

    /// q^k, or None on overflow.
    pub fn expected_total(&self) -> Option<u128> {
        (self.q as u128).checked_pow(self.k as u32)
    }

    /// Nonzero weights with A_w > 0, ascending.
    pub fn support_weights(&self) -> Vec<usize> {
        (1..=self.n).filter(|&w| self.counts[w] > 0).collect()
    }

    pub fn min_distance(&self) -> Option<usize> {
        self.support_weights().first().copied()
    }

    /// Sorted (w, A_w) pairs with A_w > 0.
    pub fn pairs(&self) -> Vec<(usize, u128)> {
        (0..=self.n)
            .filter(|&w| self.counts[w] > 0)
            .map(|w| (w, self.counts[w]))
            .collect()
    }

    /// Sum of A_w is q^k, A_0 = 1, and q-1 divides each A_w for w >= 1.
    pub fn is_consistent(&self) -> bool {
        self.get(0) == 1
            && self.expected_total() == Some(self.total())
            && (1..=self.n).all(|w| self.counts[w].is_multiple_of(self.q as u128 - 1))
    }

    /// `1 + 60z^6 + 20z^9`.
    pub fn enumerator_text(&self) -> String {
        self.pairs()
            .iter()
            .map(|&(w, c)| {
                if w == 0 {
                    c.to_string()
                } else {
                    format!("{c}z^{w}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Serializes as `[[w, "count"], ...]`, sorted by weight, zero counts omitted.
impl Serialize for WeightDistribution {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let pairs = self.pairs();
        let mut seq = serializer.serialize_seq(Some(pairs.len()))?;
        for (w, c) in pairs {
            seq.serialize_element(&(w, c.to_string()))?;
        }
        seq.end()
    }
}
