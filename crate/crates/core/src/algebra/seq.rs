//! Integer sequences indexed by degree, with the difference and summation
//! operators used for Hilbert functions.

use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};

/// What is known about a sequence below its stored window.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LeftTail {
    Zero,
    Unknown,
}

/// Values on the window `start .. start + values.len()`. Entries past the
/// window are unknown; entries before it follow `left`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntSeq {
    start: i64,
    values: Vec<i64>,
    left: LeftTail,
}

impl IntSeq {
    /// Sequence vanishing below `start`.
    pub fn from_values(start: i64, values: Vec<i64>) -> Self {
        Self { start, values, left: LeftTail::Zero }
    }

    /// Sequence with nothing known below `start`.
    pub fn window(start: i64, values: Vec<i64>) -> Self {
        Self { start, values, left: LeftTail::Unknown }
    }

    /// `δ_k`, the indicator of degree `k`, on `k ..= end`.
    pub fn delta_at(k: i64, end: i64) -> Self {
        let len = (end - k + 1).max(0) as usize;
        let mut values = vec![0; len];
        if len > 0 {
            values[0] = 1;
        }
        Self::from_values(k, values)
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    /// One past the last known index.
    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64
    }

    pub fn left_tail(&self) -> LeftTail {
        self.left
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, i: i64) -> Option<i64> {
        if i < self.start {
            match self.left {
                LeftTail::Zero => Some(0),
                LeftTail::Unknown => None,
            }
        } else {
            self.values.get((i - self.start) as usize).copied()
        }
    }

    /// Values on `0 ..= last`, where known.
    pub fn range(&self, first: i64, last: i64) -> Option<Vec<i64>> {
        (first..=last).map(|i| self.get(i)).collect()
    }

    /// Restricts the window to indices below `end`.
    pub fn truncate(&self, end: i64) -> Self {
        let keep = (end - self.start).clamp(0, self.values.len() as i64) as usize;
        Self { start: self.start, values: self.values[..keep].to_vec(), left: self.left }
    }

    /// `Δh(m) = h(m) − h(m−1)`. With an unknown left tail the first window
    /// entry is dropped.
    pub fn delta(&self) -> Self {
        let mut out = Vec::with_capacity(self.values.len());
        let mut start = self.start;
        match self.left {
            LeftTail::Zero => {
                let mut prev = 0;
                for &v in &self.values {
                    out.push(v - prev);
                    prev = v;
                }
            }
            LeftTail::Unknown => {
                out.extend(self.values.windows(2).map(|w| w[1] - w[0]));
                start += 1;
            }
        }
        Self { start, values: out, left: self.left }
    }

    /// `Δ⁺h(m) = max(0, Δh(m))`.
    pub fn delta_plus(&self) -> Self {
        let mut d = self.delta();
        for v in &mut d.values {
            *v = (*v).max(0);
        }
        d
    }

    /// `Γh(m) = Σ_{i ≤ m} h(i)`.
    pub fn gamma(&self) -> Result<Self> {
        if self.left == LeftTail::Unknown {
            return Err(LabError::UnboundedSupport);
        }
        let mut acc = 0;
        let values = self
            .values
            .iter()
            .map(|v| {
                acc += v;
                acc
            })
            .collect();
        Ok(Self { start: self.start, values, left: LeftTail::Zero })
    }

    pub fn delta_iter(&self, k: usize) -> Self {
        (0..k).fold(self.clone(), |s, _| s.delta())
    }

    pub fn gamma_iter(&self, k: usize) -> Result<Self> {
        (0..k).try_fold(self.clone(), |s, _| s.gamma())
    }

    /// Index of the last nonzero entry of the window.
    pub fn last_nonzero(&self) -> Option<i64> {
        self.values.iter().rposition(|&v| v != 0).map(|i| self.start + i as i64)
    }

    /// Sum of the window entries.
    pub fn total(&self) -> i64 {
        self.values.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let v = self.trimmed();
        v.iter().eq(v.iter().rev())
    }

    /// Window entries from index 0 up to the last nonzero one.
    pub fn trimmed(&self) -> Vec<i64> {
        let end = self.last_nonzero().map_or(0, |i| i + 1);
        (0.min(self.start)..end).map(|i| self.get(i).unwrap_or(0)).collect()
    }

    /// Weakly increasing then weakly decreasing.
    pub fn is_unimodal(&self) -> bool {
        let v = &self.values;
        let mut i = 1;
        while i < v.len() && v[i] >= v[i - 1] {
            i += 1;
        }
        while i < v.len() && v[i] <= v[i - 1] {
            i += 1;
        }
        i >= v.len()
    }

    /// Pointwise sum, on the common window.
    pub fn add(&self, other: &Self) -> Self {
        let start = self.start.min(other.start);
        let end = self.end().min(other.end());
        let left = if self.left == LeftTail::Zero && other.left == LeftTail::Zero {
            LeftTail::Zero
        } else {
            LeftTail::Unknown
        };
        let values: Vec<i64> = (start..end)
            .map_while(|i| Some(self.get(i)? + other.get(i)?))
            .collect();
        Self { start, values, left }
    }

    /// `m ↦ h(m − k)`.
    pub fn shift(&self, k: i64) -> Self {
        Self { start: self.start + k, values: self.values.clone(), left: self.left }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_plus_truncates_negative_differences() {
        let h = IntSeq::from_values(0, vec![1, 4, 10, 4, 1, 0, 0]);
        assert_eq!(h.delta_plus().values(), &[1, 3, 6, 0, 0, 0, 0]);
        assert_eq!(h.delta().values(), &[1, 3, 6, -6, -3, -1, 0]);
    }

    #[test]
    fn gamma_twice_on_indicator_counts_two_variable_monomials() {
        let d0 = IntSeq::delta_at(0, 9);
        let g2 = d0.gamma_iter(2).unwrap();
        let oracle: Vec<i64> = (0..10).map(|m| m + 1).collect();
        assert_eq!(g2.values(), oracle.as_slice());
    }

    #[test]
    fn delta_inverts_gamma() {
        let h = IntSeq::from_values(0, vec![1, 4, 10, 20, 34, 52, 74, 100, 130]);
        assert_eq!(h.gamma().unwrap().delta(), h);
        assert_eq!(h.gamma_iter(3).unwrap().delta_iter(3), h);
    }

    #[test]
    fn unknown_left_tail() {
        let w = IntSeq::window(2, vec![5, 7, 8]);
        assert!(matches!(w.gamma(), Err(LabError::UnboundedSupport)));
        let d = w.delta();
        assert_eq!(d.start(), 3);
        assert_eq!(d.values(), &[2, 1]);
        assert_eq!(d.get(2), None);
        assert_eq!(IntSeq::from_values(2, vec![5]).get(1), Some(0));
    }

    #[test]
    fn shape_predicates() {
        let h = IntSeq::from_values(0, vec![1, 3, 3, 1, 0, 0]);
        assert!(h.is_symmetric());
        assert!(h.is_unimodal());
        assert_eq!(h.last_nonzero(), Some(3));
        assert_eq!(h.total(), 8);
        assert!(!IntSeq::from_values(0, vec![1, 3, 2, 3]).is_unimodal());
        assert!(!IntSeq::from_values(0, vec![1, 2, 1, 1]).is_symmetric());
    }

    #[test]
    fn add_and_shift() {
        let a = IntSeq::from_values(0, vec![1, 2, 3]);
        let b = a.shift(1);
        assert_eq!(a.add(&b).values(), &[1, 3, 5]);
    }
}
