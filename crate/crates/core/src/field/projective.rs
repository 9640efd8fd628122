use super::{ExtField, FFElem};

/// `|P^n(F_Q)| = (Q^{n+1} - 1) / (Q - 1)`.
pub fn projective_size(n: usize, field_size: u64) -> u128 {
    (0..=n as u32).map(|i| (field_size as u128).pow(i)).sum()
}

/// Streams normalized representatives of `P^n(F)`: the first nonzero
/// coordinate is 1. Points with the leading 1 in an earlier position come
/// first; trailing coordinates run through field indices lexicographically.
pub fn enumerate_projective(n: usize, field: &ExtField) -> ProjectivePoints<'_> {
    ProjectivePoints {
        field,
        n,
        lead: 0,
        tail: vec![0; n],
        done: false,
    }
}

pub struct ProjectivePoints<'a> {
    field: &'a ExtField,
    n: usize,
    lead: usize,
    /// Indices of the coordinates after `lead`; only `tail[..n - lead]` is live.
    tail: Vec<u64>,
    done: bool,
}

impl Iterator for ProjectivePoints<'_> {
    type Item = Vec<FFElem>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let width = self.n - self.lead;
        let mut point = Vec::with_capacity(self.n + 1);
        point.extend((0..self.lead).map(|_| self.field.zero()));
        point.push(self.field.one());
        point.extend(self.tail[..width].iter().map(|&i| self.field.from_index(i)));

        // advance: last coordinate varies fastest
        let q = self.field.size();
        let mut i = width;
        loop {
            if i == 0 {
                self.lead += 1;
                if self.lead > self.n {
                    self.done = true;
                }
                self.tail.iter_mut().for_each(|t| *t = 0);
                break;
            }
            i -= 1;
            self.tail[i] += 1;
            if self.tail[i] < q {
                break;
            }
            self.tail[i] = 0;
        }
        Some(point)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn point_counts() {
        let f2 = ExtField::new(2, 1).unwrap();
        assert_eq!(enumerate_projective(2, &f2).count(), 7);
        let f4 = ExtField::new(2, 2).unwrap();
        assert_eq!(enumerate_projective(1, &f4).count(), 5);
        let f3 = ExtField::new(3, 1).unwrap();
        assert_eq!(enumerate_projective(3, &f3).count(), 40);
        assert_eq!(enumerate_projective(0, &f3).count(), 1);
    }

    #[test]
    fn normalized_and_pairwise_non_proportional() {
        for &(p, e) in &[(2u64, 1usize), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)] {
            let f = ExtField::new(p, e).unwrap();
            for n in 0..=3usize {
                let pts: Vec<_> = enumerate_projective(n, &f).collect();
                assert_eq!(pts.len() as u128, projective_size(n, f.size()));
                let mut seen = HashSet::new();
                for pt in &pts {
                    let lead = pt.iter().position(|c| !c.is_zero()).unwrap();
                    assert_eq!(pt[lead], f.one());
                    // every scalar multiple normalizes back to the same point
                    for s in f.elements().filter(|s| !s.is_zero()) {
                        let scaled: Vec<_> = pt.iter().map(|c| f.mul(c, &s).unwrap()).collect();
                        let inv = f.inv(&scaled[lead]).unwrap();
                        let back: Vec<_> =
                            scaled.iter().map(|c| f.mul(c, &inv).unwrap()).collect();
                        assert_eq!(&back, pt);
                    }
                    assert!(seen.insert(pt.clone()));
                }
            }
        }
    }
}
