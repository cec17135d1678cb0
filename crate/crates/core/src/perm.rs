//! Permutations in image-array form and explicit finite permutation groups.

use std::collections::HashMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("cannot parse permutation: {0}")]
    Malformed(String),
    #[error("point {point} is outside 1..={degree}")]
    OutOfRange { point: usize, degree: usize },
    #[error("point {0} appears twice")]
    Repeated(usize),
    #[error("not a bijection on 0..{0}")]
    NotBijection(usize),
    #[error("element set is not a group: {0}")]
    NotAGroup(String),
}

/// Bijection of `0..n`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(PermError::NotBijection(n));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    /// Parses 1-based cycle notation such as `(1 6)(2 5)(3 4)`; commas are
    /// accepted as separators. Empty input or `()` is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body_end = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')'))
                .ok_or_else(|| PermError::Malformed(text.to_string()))?;
            let body = &rest[1..=body_end];
            rest = rest[body_end + 2..].trim_start();
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                let point: usize = tok.parse().map_err(|_| PermError::Malformed(text.to_string()))?;
                if point == 0 || point > degree {
                    return Err(PermError::OutOfRange { point, degree });
                }
                if used[point - 1] {
                    return Err(PermError::Repeated(point));
                }
                used[point - 1] = true;
                cycle.push(point - 1);
            }
            for (k, &c) in cycle.iter().enumerate() {
                images[c] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` followed by `other`: `i ↦ other(self(i))`.
    pub fn then(&self, other: &Self) -> Self {
        Self { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    /// Disjoint cycles of length at least two, 0-based, each starting at its
    /// smallest point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// 1-based cycle notation; the identity prints as `()`.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| format!("({})", c.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")))
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

/// A finite permutation group held as a sorted list of all its elements.
#[derive(Clone, Debug)]
pub struct PermSet {
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Vec<usize>, usize>,
}

impl PermSet {
    /// Sorts and deduplicates `elements`, then checks that they form a group:
    /// the identity is present and the set is exactly the closure of a
    /// generating subset chosen from it.
    pub fn new(degree: usize, mut elements: Vec<Permutation>) -> Result<Self, PermError> {
        elements.sort();
        elements.dedup();
        if elements.iter().any(|p| p.degree() != degree) {
            return Err(PermError::NotAGroup("mixed degrees".into()));
        }
        let set = Self::trusted(degree, elements);
        set.check_group()?;
        Ok(set)
    }

    /// Builds the set without the group check; the caller guarantees it.
    pub(crate) fn trusted(degree: usize, elements: Vec<Permutation>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let index = elements.iter().enumerate().map(|(i, p)| (p.images.clone(), i)).collect();
        Self { degree, elements, index }
    }

    /// The group generated by `gens`, enumerated by breadth-first closure.
    pub fn generated_by(degree: usize, gens: &[Permutation]) -> Self {
        let id = Permutation::identity(degree);
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::from([(id.images.clone(), ())]);
        let mut queue = vec![id];
        let mut all = Vec::new();
        while let Some(p) = queue.pop() {
            for g in gens {
                let q = p.then(g);
                if seen.insert(q.images.clone(), ()).is_none() {
                    queue.push(q);
                }
            }
            all.push(p);
        }
        all.sort();
        Self::trusted(degree, all)
    }

    fn check_group(&self) -> Result<(), PermError> {
        let n = self.elements.len();
        if !self.contains(&Permutation::identity(self.degree)) {
            return Err(PermError::NotAGroup("identity missing".into()));
        }
        let mut reached = vec![false; n];
        let mut count = 0;
        let mut gens: Vec<usize> = Vec::new();
        for candidate in 0..n {
            if reached[candidate] {
                continue;
            }
            gens.push(candidate);
            // Recompute the closure of the identity under all generators.
            reached.iter_mut().for_each(|r| *r = false);
            let start = self.position(&Permutation::identity(self.degree)).expect("checked");
            reached[start] = true;
            count = 1;
            let mut queue = vec![start];
            while let Some(i) = queue.pop() {
                for &g in &gens {
                    let q = self.elements[i].then(&self.elements[g]);
                    let j = self.position(&q).ok_or_else(|| {
                        PermError::NotAGroup(format!("{} * {} is missing", self.elements[i], self.elements[g]))
                    })?;
                    if !reached[j] {
                        reached[j] = true;
                        count += 1;
                        queue.push(j);
                    }
                }
            }
        }
        debug_assert_eq!(count, n);
        Ok(())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.index.get(&p.images).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(&p.images)
    }

    pub fn is_subgroup_of(&self, other: &PermSet) -> bool {
        self.degree == other.degree && self.elements.iter().all(|p| other.contains(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_round_trip() {
        let p = Permutation::parse_cycles("(3 12)(5 9 7 10 6 8)", 14).unwrap();
        assert_eq!(p.apply(2), 11);
        assert_eq!(p.apply(4), 8);
        assert_eq!(p.to_cycle_string(), "(3 12)(5 9 7 10 6 8)");
        assert_eq!(Permutation::parse_cycles("()", 3).unwrap(), Permutation::identity(3));
        assert_eq!(Permutation::parse_cycles("(1,2)", 3).unwrap().images(), &[1, 0, 2]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Permutation::parse_cycles("(1 9)", 8), Err(PermError::OutOfRange { .. })));
        assert!(matches!(Permutation::parse_cycles("(1 2)(2 3)", 8), Err(PermError::Repeated(2))));
        assert!(matches!(Permutation::parse_cycles("(1 x)", 8), Err(PermError::Malformed(_))));
        assert!(matches!(Permutation::parse_cycles("1 2", 8), Err(PermError::Malformed(_))));
    }

    #[test]
    fn composition_order() {
        let a = Permutation::parse_cycles("(1 2)", 3).unwrap();
        let b = Permutation::parse_cycles("(2 3)", 3).unwrap();
        // 1 -> 2 under a, then 2 -> 3 under b.
        assert_eq!(a.then(&b).apply(0), 2);
        assert!(a.then(&a.inverse()).is_identity());
    }

    #[test]
    fn group_checks() {
        let gens = [
            Permutation::parse_cycles("(1 3)(5 7)", 7).unwrap(),
            Permutation::parse_cycles("(1 4 2)(3 5 6)", 7).unwrap(),
        ];
        let g = PermSet::generated_by(7, &gens);
        assert_eq!(g.order(), 168);
        assert!(PermSet::new(7, g.elements().to_vec()).is_ok());
        let broken = vec![Permutation::identity(3), Permutation::parse_cycles("(1 2 3)", 3).unwrap()];
        assert!(PermSet::new(3, broken).is_err());
    }
}
